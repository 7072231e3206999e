use nalgebra::{DMatrix, Complex};
use num::{BigRational, FromPrimitive, ToPrimitive};

fn main() {
    // Hermitian eigensolve with complex entries
    let m = DMatrix::<Complex<f64>>::from_row_slice(2, 2, &[
        Complex::new(0.5, 0.0), Complex::new(0.25, 0.1),
        Complex::new(0.25, -0.1), Complex::new(0.5, 0.0),
    ]);
    let eig = m.clone().symmetric_eigen();
    println!("eigs: {:?}", eig.eigenvalues.as_slice());
    let recon = &eig.eigenvectors
        * DMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex::new(x, 0.0)))
        * eig.eigenvectors.adjoint();
    println!("recon err: {}", (recon - m).norm());

    // exact rational from f64
    let r = BigRational::from_f64(0.1).unwrap();
    println!("0.1 = {}/{}", r.numer(), r.denom());
    println!("back: {}", r.to_f64().unwrap());
    let q = BigRational::from_float(2.0_f64.sqrt()).unwrap();
    println!("sqrt2 exact roundtrip: {}", q.to_f64().unwrap() == 2.0_f64.sqrt());
}

//! Roots of a univariate polynomial over F_p, and a small linear system.

use curvelink::algebra::{uni_roots, Matrix, PrimeField, UniPoly};

fn main() -> curvelink::Result<()> {
    let f = PrimeField::new(10007)?;
    let poly = UniPoly::from_roots(f, &[3, 17, 17, 5000]).mul(&UniPoly::new(f, vec![1, 0, 1]));
    println!("f = {poly:?}");
    println!("roots in F_p: {:?}", uni_roots(&poly)?);

    let m = Matrix::from_rows(f, 3, vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
    println!("kernel basis: {:?}", m.kernel_basis());
    Ok(())
}

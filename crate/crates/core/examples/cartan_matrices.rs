// Building Cartan matrices: Bourbaki finite types, text files, and roots.

use nilhecke::cartan::{CartanMatrix, Family, FiniteType};
use nilhecke::error::Result;

pub fn run_example() -> Result<()> {
    let g2 = CartanMatrix::finite(Family::G, 2)?;
    println!("G2:\n{}", g2.to_text());
    let roots = g2.positive_roots()?;
    println!("G2 positive roots: {}", roots.iter().map(|r| r.root.to_string()).collect::<Vec<_>>().join(", "));
    assert_eq!(roots.len(), 6);

    let ty: FiniteType = "E8".parse()?;
    assert_eq!(CartanMatrix::finite(ty.family, ty.rank)?.positive_roots()?.len(), ty.positive_root_count());

    // The affine A1 matrix has no finite root system.
    let affine = CartanMatrix::from_text("2\n# affine A1\n2 -2\n-2 2\n")?;
    assert!(!affine.is_finite_type());
    println!("affine A1 real roots of height <= 5: {}", affine.real_roots_up_to_height(5).len());

    // chi_1 - w0 chi_1 in B3 is twice a root.
    let b3 = CartanMatrix::finite(Family::B, 3)?;
    let twice = b3.weight_of_root(&b3.positive_roots()?.last().expect("nonempty").root.scale(2));
    let (k, beta) = b3.root_multiple_of_weight(&twice)?.expect("a multiple of a root");
    println!("B3: {twice} = {k} * ({beta})");

    let bad = CartanMatrix::from_text("2\n2 -1\n0 2\n");
    println!("rejected: {}", bad.expect_err("asymmetric zero pattern"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

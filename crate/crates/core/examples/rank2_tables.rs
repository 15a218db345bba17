// Singular loci of all Schubert varieties in rank 2.

use std::sync::Arc;

use nilhecke::cartan::{CartanMatrix, Family};
use nilhecke::error::Result;
use nilhecke::hecke::NilHecke;
use nilhecke::smoothness::{closed_form_check, rank2_table};
use nilhecke::weyl::WeylGroup;

pub fn run_example() -> Result<()> {
    for family in [Family::A, Family::C, Family::G] {
        let h = NilHecke::new(Arc::new(WeylGroup::new(CartanMatrix::finite(family, 2)?)));
        println!("{family:?}2");
        for row in rank2_table(&h)?.iter().filter(|r| !r.is_smooth_variety) {
            println!("  {}", row.line());
        }
        let closed = closed_form_check(&h)?;
        assert!(closed.iter().all(|c| c.holds));
        println!("  {} closed-form products checked", closed.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

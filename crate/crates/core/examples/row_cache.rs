// Persisting expanded rows in an on-disk cache.

use std::sync::Arc;

use nilhecke::cartan::{CartanMatrix, Family};
use nilhecke::error::Result;
use nilhecke::hecke::NilHecke;
use nilhecke::weyl::WeylGroup;

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir().join(format!("nilhecke-example-cache-{}", std::process::id()));
    let group = Arc::new(WeylGroup::new(CartanMatrix::finite(Family::B, 3)?));
    let w = group.longest_element()?;

    let cold = NilHecke::new(group.clone()).with_cache_dir(&dir);
    let first = cold.expand_x(&w)?;
    let files = std::fs::read_dir(&dir)?.count();
    println!("{files} cached rows in {}", dir.display());

    // A fresh instance reads the rows back instead of recomputing them.
    let warm = NilHecke::new(group).with_cache_dir(&dir);
    assert_eq!(*warm.expand_x(&w)?, *first);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

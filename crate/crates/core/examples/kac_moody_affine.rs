// A non-finite Cartan matrix: the affine A1 Weyl group.

use std::sync::Arc;

use nilhecke::cartan::CartanMatrix;
use nilhecke::error::Result;
use nilhecke::hecke::NilHecke;
use nilhecke::smoothness::{point_verdict, RsMode};
use nilhecke::weyl::WeylGroup;

pub fn run_example() -> Result<()> {
    let cartan = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]])?;
    let h = NilHecke::new(Arc::new(WeylGroup::new(cartan)));
    let g = h.group().clone();
    assert!(!g.is_finite());
    assert!(g.longest_element().is_err());

    let w = g.parse_word("12121")?;
    let x = h.expand_x(&w)?;
    assert_eq!(x.len(), g.interval_below(&w).len());
    for v in g.interval_below(&w) {
        println!("{}", point_verdict(&h, &w, &v, RsMode::Count)?);
    }

    // S(w, v) from the interval agrees with direct root filtering up to a height.
    let v = g.parse_word("2")?;
    assert_eq!(g.s_set(&w, &v)?, g.s_set_bounded(&w, &v, 12)?);
    println!("S({}, {}) = {}", w.label(), v.label(), g.s_set(&w, &v)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

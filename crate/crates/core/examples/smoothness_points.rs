// Smoothness and rational smoothness of T-fixed points.

use std::sync::Arc;

use nilhecke::cartan::{CartanMatrix, Family};
use nilhecke::error::Result;
use nilhecke::hecke::NilHecke;
use nilhecke::smoothness::{point_verdict, singular_locus, RsMode};
use nilhecke::weyl::WeylGroup;

pub fn run_example() -> Result<()> {
    let h = NilHecke::new(Arc::new(WeylGroup::new(CartanMatrix::finite(Family::C, 2)?)));
    let g = h.group().clone();
    let w = g.parse_word("121")?;

    for v in g.interval_below(&w) {
        let count = point_verdict(&h, &w, &v, RsMode::Count)?;
        let via_c = point_verdict(&h, &w, &v, RsMode::ViaC)?;
        assert_eq!(count.rationally_smooth, via_c.rationally_smooth);
        println!("{count}");
    }
    let report = singular_locus(&h, &w)?;
    println!("{}", report.line());

    // A point off the variety has no verdict.
    let off = g.parse_word("2121")?;
    assert!(point_verdict(&h, &w, &off, RsMode::Count).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

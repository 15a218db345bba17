// Codimension-one Schubert varieties X_{w0 r_i}.

use std::sync::Arc;

use nilhecke::cartan::{CartanMatrix, Family};
use nilhecke::error::Result;
use nilhecke::hecke::NilHecke;
use nilhecke::smoothness::{
    codim1_classification, codim1_coefficient_identity_check, codim1_element, codim1_rs_by_weight,
    is_rationally_smooth_point, shape_value, RsMode,
};
use nilhecke::weyl::WeylGroup;

pub fn run_example() -> Result<()> {
    for (family, rank) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2)] {
        let h = NilHecke::new(Arc::new(WeylGroup::new(CartanMatrix::finite(family, rank)?)));
        for c in codim1_classification(&h)? {
            println!("{family:?}{rank} X_{}: {}", c.i + 1, c.label());
        }
    }

    // B3, i = 2: the shape condition holds at e, but rational smoothness fails
    // higher up the interval.
    let h = NilHecke::new(Arc::new(WeylGroup::new(CartanMatrix::finite(Family::B, 3)?)));
    let g = h.group().clone();
    let w = codim1_element(&g, 1)?;
    let e = g.identity();
    println!("q(e) = {}", shape_value(&h, &w, &e)?);
    let (rs, witness) = is_rationally_smooth_point(&h, &w, &e, RsMode::ViaC)?;
    assert!(!rs);
    println!("fails at theta = {}", witness.expect("witness").label());
    assert!(!codim1_rs_by_weight(&g, 1, &e)?.0);

    let (count, failures) = codim1_coefficient_identity_check(&h, 0)?;
    assert!(failures.is_empty());
    println!("coefficient identity holds at all {count} points of X_1");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

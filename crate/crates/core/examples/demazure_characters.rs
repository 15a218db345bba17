// Demazure operators on characters.

use std::sync::Arc;

use nilhecke::cartan::{CartanMatrix, Family, RootVector};
use nilhecke::error::Result;
use nilhecke::hecke::NilHecke;
use nilhecke::ratfun::{CharFraction, LaurentElement};
use nilhecke::weyl::WeylGroup;

pub fn run_example() -> Result<()> {
    let h = NilHecke::new(Arc::new(WeylGroup::new(CartanMatrix::finite(Family::A, 2)?)));
    let g = h.group().clone();

    // Root coordinates: alpha_1 + alpha_2 is the highest root of A2.
    let lambda = RootVector(vec![1, 1]);
    let w0 = g.longest_element()?;
    let ch = h.demazure_apply(&w0, &LaurentElement::exp(&lambda))?;
    println!("D_w0 e^(a1+a2) = {ch}");

    // The same character from the row of y_w0.
    let mut sum = CharFraction::zero(2);
    for (v, b) in h.expand_y(&w0)?.iter() {
        let term = CharFraction::from_laurent(LaurentElement::exp(&g.apply_root(v, &lambda)));
        sum = &sum + &(b * &term);
    }
    assert_eq!(sum, CharFraction::from_laurent(ch.clone()));

    // Each operator is idempotent.
    let once = h.demazure_step(0, &ch)?;
    assert_eq!(h.demazure_step(0, &once)?, once);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

// Expanding x_w and y_w in the delta basis.

use std::sync::Arc;

use nilhecke::cartan::{CartanMatrix, Family};
use nilhecke::error::Result;
use nilhecke::hecke::NilHecke;
use nilhecke::weyl::WeylGroup;

pub fn run_example() -> Result<()> {
    let h = NilHecke::new(Arc::new(WeylGroup::new(CartanMatrix::finite(Family::C, 2)?)));
    let g = h.group().clone();
    let w = g.parse_word("121")?;

    let x = h.expand_x(&w)?;
    println!("x_{} =", w.label());
    for (v, c) in x.iter() {
        println!("  [{}] {c}", v.label());
    }
    let y = h.expand_y(&w)?;
    println!("y_{} =", w.label());
    for (v, b) in y.iter() {
        println!("  [{}] {b}", v.label());
    }

    // The recursion agrees with the sum over subwords of a reduced word.
    assert_eq!(*x, h.subword_x_row(w.word())?);
    assert_eq!(*y, h.subword_y_row(w.word())?);

    // c(w, v) and b(w, v) read rows of inverses; *b has lowest term c.
    let (u, v) = (g.parse_word("12")?, g.parse_word("2")?);
    let c = h.c(&u, &v)?;
    let b = h.b(&u, &v)?;
    println!("c({}, {}) = {c}; b = {b}", u.label(), v.label());
    assert_eq!(b.star().lowest_term(), Some(c));

    // x_i x_i = 0 and y_i y_i = y_i.
    assert!(h.x_word(&[0, 0])?.is_zero());
    assert_eq!(h.y_word(&[0, 0])?, h.y_word(&[0])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

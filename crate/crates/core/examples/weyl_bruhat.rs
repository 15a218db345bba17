// Weyl group elements, reduced words and Bruhat intervals.

use std::sync::Arc;

use nilhecke::cartan::{CartanMatrix, Family};
use nilhecke::error::Result;
use nilhecke::weyl::WeylGroup;

pub fn run_example() -> Result<()> {
    let g = Arc::new(WeylGroup::new(CartanMatrix::finite(Family::A, 3)?));

    // Words are normalized to a canonical reduced word.
    let w = g.parse_word("2,1,3,2")?;
    let same = g.parse_word("2312")?;
    assert_eq!(w, same);
    println!("w = {} (length {})", w.label(), w.length());
    println!("reduced words: {:?}", g.reduced_words(&w));

    let v = g.parse_word("2")?;
    let interval = g.interval(&v, &w)?;
    println!("[{}, {}] has {} elements", v.label(), w.label(), interval.len());
    assert!(interval.iter().all(|u| g.bruhat_leq(&v, u).unwrap() && g.bruhat_leq(u, &w).unwrap()));

    println!("S(w, v) = {}", g.s_set(&w, &v)?);
    println!("inversions of w: {}", g.inversion_set(&w));

    let w0 = g.longest_element()?;
    assert_eq!(w0.length(), 6);
    assert_eq!(g.elements()?.len(), 24);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

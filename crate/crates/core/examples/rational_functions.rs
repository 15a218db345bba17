// Exact rational functions over roots and characters.

use nilhecke::cartan::RootVector;
use nilhecke::ratfun::{CharFraction, FactoredRational, LaurentElement, MultiPoly};

pub fn run_example() {
    let a1 = RootVector(vec![1, 0]);
    let a2 = RootVector(vec![0, 1]);
    let a12 = a1.add(&a2);

    // 1/a1 - 1/(a1+a2) = a2 / (a1 (a1+a2)), kept in lowest terms.
    let f = &FactoredRational::inv_root(&a1) - &FactoredRational::inv_root(&a12);
    println!("1/a1 - 1/(a1+a2) = {f}");
    assert_eq!(f.degree(), Some(-1));
    let g = &f * &FactoredRational::root(&a12);
    assert_eq!(g, FactoredRational::new(MultiPoly::linear(&a2), [(a1.clone(), 1)]));

    // *(1 / (1 - e^(-a1))) = -e^(-a1) / (1 - e^(-a1)), whose lowest term is -1/a1.
    let b = CharFraction::inv_one_minus(&a1);
    println!("b = {b}, *b = {}", b.star());
    assert_eq!(b.star().lowest_term(), Some(-&FactoredRational::inv_root(&a1)));
    assert_eq!(b.pole_order(), Some(1));

    let f = &LaurentElement::exp(&a1) - &LaurentElement::exp(&a1.neg());
    let q = f.exact_divide_one_minus(&a1).expect("divisible");
    println!("(e^(a1) - e^(-a1)) / (1 - e^(-a1)) = {q}");
}

#[allow(dead_code)]
fn main() {
    run_example()
}

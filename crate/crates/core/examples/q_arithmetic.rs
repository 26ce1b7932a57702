//! q-integers, q-factorials and q-binomials as exact polynomials, and
//! their values at q = 1 and q = -1.
use qcomb::polyring::{q_binomial, q_factorial, q_integer, q_rising, BigInt};

fn main() {
    println!("[5]_q        = {}", q_integer(5));
    println!("[4]_q!       = {}", q_factorial(4));
    println!("C(5,2)_q     = {}", q_binomial(5, 2));
    println!("[2]_q^(3)    = {}", q_rising(2, 3));

    // Gaussian binomials count subsets; at q = -1 they give C(⌊n/2⌋, ⌊k/2⌋)
    // unless n is even and k odd.
    let g = q_binomial(6, 3);
    println!("C(6,3)_q at q=1  -> {}", g.coeff_sum());
    println!("C(6,3)_q at q=-1 -> {}", g.eval(&BigInt::from(-1)));

    let p = &q_integer(3) * &q_integer(4);
    let back = p.div_exact(&q_integer(4)).expect("exact");
    assert_eq!(back, q_integer(3));
    println!("[3]_q [4]_q / [4]_q = {back}");
}

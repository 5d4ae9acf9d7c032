//! The exact power-series layer underneath the genus: the Todd-style
//! factor x/(1 - e^{-x}) by exact division, and the single-root
//! coefficients q_k(y) it produces.
//!
//! Run with: cargo run --example exact_series

use chern::genus::q_coefficients;
use chern::series::TruncatedSeries;
use chern::ypoly::YPoly;

fn main() {
    let order = 10;
    let one = TruncatedSeries::one(order);
    let exp = TruncatedSeries::exp_neg_x(order);

    // x / (1 - e^{-x}); the shared factor x cancels during division
    let todd = TruncatedSeries::x(order).divide(&(&one - &exp)).unwrap();
    println!("x/(1 - e^(-x)) up to x^{}:", todd.order());
    for k in 0..=todd.order() {
        println!("  [x^{k}] = {}", todd.coeff(k));
    }

    // the quotient times the denominator reproduces the numerator
    let back = &todd * &(&one - &exp);
    println!(
        "\nquotient * denominator == x (up to truncation): {}",
        back == TruncatedSeries::x(todd.order())
    );

    // geometric series 1/(1 + 4x)
    let geom = TruncatedSeries::one(4)
        .divide(&TruncatedSeries::new(
            4,
            vec![YPoly::one(), YPoly::constant(chern::rational::rat(4))],
        ))
        .unwrap();
    println!("\n1/(1 + 4x) up to x^4:");
    for k in 0..=4 {
        println!("  [x^{k}] = {}", geom.coeff(k));
    }

    println!("\nsingle-root factor q_k(y) of the genus integrand (dim 6):");
    for (k, q) in q_coefficients(6).iter().enumerate() {
        println!("  q_{k} = {q}");
    }
}

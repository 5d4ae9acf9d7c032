//! The Taylor coefficients K_j of chi_y at y = -1: closed forms, the
//! dependence of odd coefficients on even ones, and the support pattern.
//!
//! Run with: cargo run --example taylor_coefficients

use chern::genus::{k_support, k_support_bound, k_table, odd_k_dependence, verify_k_closed_forms};
use chern::rational::format_rational;

fn main() {
    let n = 6;
    let table = k_table(n);
    println!("K table for dim {n} (chi_y = sum_j K_j (y+1)^j):");
    for (j, entry) in table.entries().iter().enumerate() {
        println!("  K_{j} = {entry}");
    }

    println!("\nclosed-form comparison for K_0..K_4:");
    for dim in [2, 4, 6, 10] {
        let report = verify_k_closed_forms(dim);
        let status = if report.all_match() { "all match" } else { "MISMATCH" };
        println!("  dim {dim}: {status}");
    }

    println!("\nodd coefficients in the span of the even ones (dim {n}):");
    for relation in odd_k_dependence(n).unwrap() {
        let combo: Vec<String> = relation
            .coefficients
            .iter()
            .enumerate()
            .map(|(j, c)| format!("({})*K_{}", format_rational(c), 2 * j))
            .collect();
        println!("  K_{} = {}", relation.odd_index, combo.join(" + "));
    }

    println!("\nsupport of the even coefficients (dim {n}):");
    for i in 0..=n / 2 {
        let j = 2 * i;
        let support: Vec<String> = k_support(n, j)
            .unwrap()
            .into_iter()
            .map(|v| format!("c_{v}"))
            .collect();
        let bound: Vec<String> = k_support_bound(n, j)
            .into_iter()
            .map(|v| format!("c_{v}"))
            .collect();
        println!(
            "  K_{j} uses {{{}}}, allowed {{{}}}",
            support.join(", "),
            bound.join(", ")
        );
    }
}

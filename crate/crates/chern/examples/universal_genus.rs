//! Universal genus polynomials: chi^p in Chern classes for a few
//! dimensions, the duality relation, and evaluation on projective space.
//!
//! Run with: cargo run --example universal_genus

use chern::catalog::ManifoldChernData;
use chern::genus::{chi_y_universal, evaluate_genus};

fn main() {
    for n in 1..=4 {
        let genus = chi_y_universal(n);
        println!("dim {n}:");
        for (p, poly) in genus.chi().iter().enumerate() {
            println!("  chi^{p} = {poly}");
        }
        println!(
            "  duality chi^p = (-1)^{n} chi^({n}-p): {}",
            genus.satisfies_duality()
        );
        println!("  chi_y at y=-1 collapses to: {}", genus.euler_polynomial());
        println!();
    }

    println!("evaluated on projective space:");
    for n in 1..=6 {
        let cp = ManifoldChernData::projective_space(n);
        let genus = evaluate_genus(&cp).unwrap();
        println!("  chi_y(CP^{n}) = {genus}");
    }
}

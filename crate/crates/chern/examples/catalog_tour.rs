//! The manifold catalog: reference Chern data, descriptor documents, and
//! the two independent genus routes (Hodge numbers vs Chern numbers).
//!
//! Run with: cargo run --example catalog_tour

use chern::audit::specializations;
use chern::catalog::{HodgeGrid, ManifoldChernData};
use chern::genus::evaluate_genus;

fn show(m: &ManifoldChernData) {
    let genus = evaluate_genus(m).unwrap();
    let s = specializations(&genus);
    println!(
        "{} (dim {}): chi_y = {}, euler = {}, todd = {}, signature = {}",
        m.name(),
        m.dim(),
        genus,
        s.euler,
        s.todd,
        s.signature
    );
    if let Some(grid) = m.hodge() {
        let agree = grid.chi_y() == genus;
        println!("  hodge route agrees with chern route: {agree}");
    }
}

fn main() {
    show(&ManifoldChernData::projective_space(2));
    show(&ManifoldChernData::projective_space(3));
    show(&ManifoldChernData::complex_torus(2));
    show(&ManifoldChernData::hypersurface(2, 1)); // a plane, i.e. CP^2
    show(&ManifoldChernData::hypersurface(1, 3)); // elliptic cubic curve
    show(&ManifoldChernData::hypersurface(3, 5)); // quintic threefold

    // K3 surface with its Hodge diamond attached (cross-validated)
    let k3 = ManifoldChernData::hypersurface(2, 4)
        .with_hodge(HodgeGrid::new(2, vec![vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]]).unwrap())
        .unwrap();
    show(&k3);

    let cp1 = ManifoldChernData::projective_space(1);
    let cp2 = ManifoldChernData::projective_space(2);
    show(&ManifoldChernData::product(&cp1, &cp1).unwrap());
    show(&ManifoldChernData::product(&cp1, &cp2).unwrap());

    println!("\ndescriptor document for CP^2:");
    print!("{}", ManifoldChernData::projective_space(2).to_descriptor_json());

    println!("\nparsing a sparse descriptor:");
    let sparse = ManifoldChernData::from_descriptor_str(
        r#"{"name": "mystery", "dim": 2, "chern_numbers": {"2": "3"}}"#,
    )
    .unwrap();
    for warning in sparse.warnings() {
        println!("  warning: {warning}");
    }
    show(&sparse);
}

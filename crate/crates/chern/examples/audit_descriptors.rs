//! Auditing user-supplied Chern data: every inequality family on a few
//! descriptors, with the structured JSON report for one of them.
//!
//! Run with: cargo run --example audit_descriptors

use chern::audit::{hyperbolic_audit, nonelliptic_audit, yau_audit, AuditReport};
use chern::catalog::ManifoldChernData;
use chern::rational::format_rational;

fn summarize(report: &AuditReport) {
    let verdicts: Vec<String> = report
        .checks
        .iter()
        .map(|c| {
            format!(
                "[{}] {} vs {}: {}",
                c.index,
                format_rational(&c.left),
                format_rational(&c.right),
                c.verdict.as_str()
            )
        })
        .collect();
    println!(
        "  {}: {}{}",
        report.mode.as_str(),
        verdicts.join(", "),
        if report.any_violated() { "  <- VIOLATED" } else { "" }
    );
}

fn audit_all(m: &ManifoldChernData) {
    println!("{} (dim {}):", m.name(), m.dim());
    summarize(&hyperbolic_audit(m).unwrap());
    summarize(&nonelliptic_audit(m).unwrap());
    if m.dim() >= 2 {
        summarize(&yau_audit(m).unwrap());
    }
    println!();
}

fn main() {
    audit_all(&ManifoldChernData::ball_quotient(2));
    audit_all(&ManifoldChernData::complex_torus(2));
    audit_all(&ManifoldChernData::hypersurface(3, 5));

    // hand-written descriptor with a negative signed top Chern number:
    // the non-elliptic audit catches it at index 0
    let fake = ManifoldChernData::from_descriptor_str(
        r#"{"name": "impostor", "dim": 2, "chern_numbers": {"2": "-1", "1,1": "0"}}"#,
    )
    .unwrap();
    audit_all(&fake);

    println!("structured report for the ball quotient:");
    print!("{}", hyperbolic_audit(&ManifoldChernData::ball_quotient(2)).unwrap().to_json());
}

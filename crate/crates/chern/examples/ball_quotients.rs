//! Ball quotients through the proportionality principle, and how they
//! attain every equality case of the hyperbolic Chern number bounds.
//!
//! Run with: cargo run --example ball_quotients

use chern::audit::{hyperbolic_audit, yau_audit};
use chern::catalog::ManifoldChernData;
use chern::genus::k_table;
use chern::rational::format_rational;

fn main() {
    for n in 2..=4 {
        let ball = ManifoldChernData::ball_quotient(n);
        let cp = ManifoldChernData::projective_space(n);
        println!("{} (Chern numbers of CP^{n} scaled by (-1)^{n}):", ball.name());
        for (lambda, value) in ball.chern_numbers() {
            println!("  c_{{{lambda}}} = {}", format_rational(value));
        }

        // K_j(ball) = (-1)^n K_j(CP^n), coefficient by coefficient
        let table = k_table(n);
        let flip = n % 2 == 1;
        let related = table.entries().iter().all(|k| {
            let a = k.evaluate(&ball).unwrap();
            let b = k.evaluate(&cp).unwrap();
            if flip {
                a == -b
            } else {
                a == b
            }
        });
        println!("  K_j values are (-1)^{n} times those of CP^{n}: {related}");

        let report = hyperbolic_audit(&ball).unwrap();
        for check in &report.checks {
            println!(
                "  bound {}: {} >= {} -> {}",
                check.index,
                format_rational(&check.left),
                format_rational(&check.right),
                check.verdict.as_str()
            );
        }
        println!(
            "  chi^p pattern from p = {:?}, full CP^n-shaped genus: {:?}",
            report.chi_p_pattern_from, report.full_cpn_pattern
        );

        let yau = yau_audit(&ball).unwrap();
        println!(
            "  yau bound: {} >= {} -> {}\n",
            format_rational(&yau.checks[0].left),
            format_rational(&yau.checks[0].right),
            yau.checks[0].verdict.as_str()
        );
    }
}

//! Exact Hirzebruch χ_y-genus machinery and Chern number inequality
//! audits.
//!
//! Everything is computed in exact rational arithmetic:
//!
//! - universal genus polynomials in Chern classes for any dimension,
//!   through symmetric-function basis conversion ([`genus`], [`symmetric`]);
//! - the Taylor coefficients `K_j` of the genus at `y = -1`, their closed
//!   forms, parity dependence and support pattern ([`genus`]);
//! - Chern data for reference manifolds and a JSON descriptor format
//!   ([`catalog`]);
//! - decidable audits of the Chern number inequalities satisfied by
//!   Kähler hyperbolic and Kähler non-elliptic manifolds, with equality
//!   characterizations ([`audit`]).
//!
//! The `chern` binary exposes the same functionality as subcommands; the
//! crate examples walk through each capability.

pub mod audit;
pub mod catalog;
pub mod chern_poly;
pub mod cli;
pub mod error;
pub mod genus;
mod linalg;
pub mod partition;
pub mod rational;
pub mod series;
pub mod symmetric;
pub mod ypoly;

pub use audit::{
    hyperbolic_audit, nonelliptic_audit, serre_check, specializations, yau_audit, AuditMode,
    AuditReport, Verdict,
};
pub use catalog::{HodgeGrid, ManifoldChernData};
pub use chern_poly::ChernPolynomial;
pub use error::Error;
pub use genus::{
    chi_p, chi_y_universal, evaluate_genus, k_closed_form, k_support, k_support_bound, k_table,
    odd_k_dependence, q_coefficients, verify_k_closed_forms, EvaluatedGenus, KTable,
    UniversalGenus,
};
pub use linalg::Matrix;
pub use partition::{partitions, Partition};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use symmetric::{
    elementary_to_monomial_matrix, monomial_to_elementary, monomial_to_elementary_matrix,
};
pub use ypoly::YPoly;

//! Chern-number inequality audits.
//!
//! Three families of decidable checks on manifold Chern data, all by exact
//! rational comparison with zero tolerance:
//!
//! - **hyperbolic**: `(-1)^n K_{2i}[M] >= K_{2i}[CP^n] = C(n+1, 2i+1)` for
//!   `0 <= i <= n/2`, together with the equality characterizations
//!   (`χ^p = (-1)^{n-p}` from some `p` on, and the full `CP^n`-shaped
//!   genus `χ_y = (-1)^n χ_y(CP^n)`).
//! - **nonelliptic**: `(-1)^n K_{2i}[M] >= 0`. Writing
//!   `A_i = (-1)^n K_{2i}`, the bound audited is `A_i >= 0`; the underlying
//!   count `Σ_{p=j} C(p,j) h^{p,n-p} >= 0` fixes this normalization, and a
//!   variant with an extra `(-1)^n` in front of `A_i` would differ for odd
//!   `n` and is not what is checked here.
//! - **yau**: `c_2 (-c_1)^{n-2} [M] >= n/(2(n+1)) · (-c_1)^n [M]` for
//!   `n >= 2`.
//!
//! An audit decides necessary conditions only: a manifold passing every
//! check is not thereby certified Kähler hyperbolic or non-elliptic.
//!
//! The hyperbolic and non-elliptic audits also reconstruct the candidate
//! mid-degree values `h^{p,n-p}_{(2)} = (-1)^{n-p} χ^p[M]` (all other
//! bidegrees vanish under the respective curvature assumptions) and flag
//! their integrality and positivity.

use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::catalog::{HodgeGrid, ManifoldChernData};
use crate::error::Error;
use crate::genus::{evaluate_genus, k_table, EvaluatedGenus};
use crate::rational::{binomial, format_rational, frac, rat, Rational};
use crate::ypoly::YPoly;

pub const NECESSARY_CONDITION_NOTE: &str =
    "necessary conditions only: passing does not certify the manifold Kähler hyperbolic or non-elliptic";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Strict,
    Equality,
    Violated,
}

impl Verdict {
    fn compare(left: &Rational, right: &Rational) -> Verdict {
        match left.cmp(right) {
            std::cmp::Ordering::Greater => Verdict::Strict,
            std::cmp::Ordering::Equal => Verdict::Equality,
            std::cmp::Ordering::Less => Verdict::Violated,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Strict => "strict",
            Verdict::Equality => "equality",
            Verdict::Violated => "violated",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AuditMode {
    Hyperbolic,
    Nonelliptic,
    Yau,
}

impl AuditMode {
    pub fn as_str(self) -> &'static str {
        match self {
            AuditMode::Hyperbolic => "hyperbolic",
            AuditMode::Nonelliptic => "nonelliptic",
            AuditMode::Yau => "yau",
        }
    }
}

/// One exact inequality check: `left >= right`.
#[derive(Clone, Debug)]
pub struct InequalityCheck {
    pub index: usize,
    pub description: String,
    pub left: Rational,
    pub right: Rational,
    pub verdict: Verdict,
    /// Extra meaning attached to the verdict, when there is one.
    pub annotation: Option<String>,
}

/// The same bound rescaled to the integer-normalized display form
/// `A_i = factor · (-1)^n K_{2i}` (factors 1, 12, 5760 clear the
/// denominators of `K_0`, `K_2`, `K_4`).
#[derive(Clone, Debug)]
pub struct DisplayedValue {
    pub index: usize,
    pub label: String,
    pub factor: Rational,
    pub left: Rational,
    pub right: Rational,
}

/// Candidate `h^{p,n-p}_{(2)}` value reconstructed from the genus.
#[derive(Clone, Debug)]
pub struct L2Entry {
    pub p: usize,
    pub value: Rational,
    pub integral: bool,
    pub positive: bool,
    pub nonnegative: bool,
}

#[derive(Clone, Debug)]
pub struct L2Reconstruction {
    pub entries: Vec<L2Entry>,
}

impl L2Reconstruction {
    /// `value(p) = (-1)^{n-p} χ^p[M]`.
    pub fn from_genus(genus: &EvaluatedGenus) -> Self {
        let n = genus.dim();
        let entries = (0..=n)
            .map(|p| {
                let sign = if (n - p) % 2 == 0 { rat(1) } else { rat(-1) };
                let value = sign * genus.chi(p);
                L2Entry {
                    p,
                    integral: value.is_integer(),
                    positive: value.is_positive(),
                    nonnegative: !value.is_negative(),
                    value,
                }
            })
            .collect();
        L2Reconstruction { entries }
    }

    /// All entries are positive integers (the hyperbolic requirement).
    pub fn all_positive_integers(&self) -> bool {
        self.entries.iter().all(|e| e.integral && e.positive)
    }

    /// `Σ_p value(p) (-y)^p` as a polynomial in `y`; equals
    /// `(-1)^n χ_y[M]` by construction.
    pub fn to_ypoly(&self) -> YPoly {
        YPoly::from_coeffs(
            self.entries
                .iter()
                .map(|e| {
                    if e.p % 2 == 0 {
                        e.value.clone()
                    } else {
                        -&e.value
                    }
                })
                .collect(),
        )
    }
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub manifold: String,
    pub mode: AuditMode,
    pub dim: usize,
    pub note: String,
    pub checks: Vec<InequalityCheck>,
    pub displayed: Vec<DisplayedValue>,
    /// Smallest `p` from which `χ^p = (-1)^{n-p}` holds through `p = n`;
    /// `None` when it already fails at `p = n`.
    pub chi_p_pattern_from: Option<usize>,
    /// Whether `χ_y[M] = (-1)^n χ_y(CP^n)`.
    pub full_cpn_pattern: Option<bool>,
    pub l2_reconstruction: Option<L2Reconstruction>,
    pub warnings: Vec<String>,
}

impl AuditReport {
    pub fn any_violated(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Violated)
    }

    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("audit report serialization");
        text.push('\n');
        text
    }
}

fn require_full_data(m: &ManifoldChernData) -> Result<(), Error> {
    if m.has_full_data() {
        Ok(())
    } else {
        Err(Error::MissingChernData(format!(
            "{} has no Chern numbers for {} partitions of weight {}",
            m.name(),
            m.missing_partitions().len(),
            m.dim()
        )))
    }
}

fn genus_warnings(m: &ManifoldChernData, genus: &EvaluatedGenus) -> Vec<String> {
    let mut warnings = m.warnings().to_vec();
    if !genus.is_integral() {
        warnings.push(
            "non-integer chi^p values: the input is not the Chern data of any compact complex manifold"
                .to_string(),
        );
    }
    warnings
}

/// Smallest `p0` with `χ^p = (-1)^{n-p}` for all `p0 <= p <= n`.
fn chi_pattern_from(genus: &EvaluatedGenus) -> Option<usize> {
    let n = genus.dim();
    let mut from = None;
    for p in (0..=n).rev() {
        let expected = if (n - p) % 2 == 0 { rat(1) } else { rat(-1) };
        if genus.chi(p) == &expected {
            from = Some(p);
        } else {
            break;
        }
    }
    from
}

fn sign_of_dim(n: usize) -> Rational {
    if n % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Audits the hyperbolic bounds `(-1)^n K_{2i}[M] >= C(n+1, 2i+1)` and the
/// equality characterizations, and attaches the reconstructed
/// `h^{p,n-p}_{(2)}` values with positivity and integrality flags.
pub fn hyperbolic_audit(m: &ManifoldChernData) -> Result<AuditReport, Error> {
    require_full_data(m)?;
    let n = m.dim();
    let sign = sign_of_dim(n);
    let genus = evaluate_genus(m)?;
    let table = k_table(n);
    let k_values: Vec<Rational> = table
        .entries()
        .iter()
        .map(|k| k.evaluate(m))
        .collect::<Result<_, _>>()?;

    let mut checks = Vec::new();
    for i in 0..=(n / 2) {
        let left = &sign * &k_values[2 * i];
        let right = binomial(n + 1, 2 * i + 1);
        checks.push(InequalityCheck {
            index: i,
            description: format!("(-1)^{n}*K_{}[M] >= K_{}[CP^{n}]", 2 * i, 2 * i),
            verdict: Verdict::compare(&left, &right),
            left,
            right,
            annotation: None,
        });
    }

    let display_factors = [rat(1), rat(12), rat(5760)];
    let displayed = display_factors
        .iter()
        .enumerate()
        .filter(|(i, _)| 2 * i <= n)
        .map(|(i, factor)| DisplayedValue {
            index: i,
            label: format!("A_{i}"),
            factor: factor.clone(),
            left: factor * &sign * &k_values[2 * i],
            right: factor * binomial(n + 1, 2 * i + 1),
        })
        .collect();

    let pattern_from = chi_pattern_from(&genus);
    Ok(AuditReport {
        manifold: m.name().to_string(),
        mode: AuditMode::Hyperbolic,
        dim: n,
        note: NECESSARY_CONDITION_NOTE.to_string(),
        checks,
        displayed,
        chi_p_pattern_from: pattern_from,
        full_cpn_pattern: Some(pattern_from == Some(0)),
        l2_reconstruction: Some(L2Reconstruction::from_genus(&genus)),
        warnings: genus_warnings(m, &genus),
    })
}

/// Audits the non-elliptic bounds `(-1)^n K_{2i}[M] >= 0` and attaches the
/// reconstructed `h^{p,n-p}_{(2)}` values with nonnegativity and
/// integrality flags.
pub fn nonelliptic_audit(m: &ManifoldChernData) -> Result<AuditReport, Error> {
    require_full_data(m)?;
    let n = m.dim();
    let sign = sign_of_dim(n);
    let genus = evaluate_genus(m)?;
    let table = k_table(n);

    let mut checks = Vec::new();
    for i in 0..=(n / 2) {
        let left = &sign * table.entries()[2 * i].evaluate(m)?;
        let right = Rational::zero();
        checks.push(InequalityCheck {
            index: i,
            description: format!("(-1)^{n}*K_{}[M] >= 0", 2 * i),
            verdict: Verdict::compare(&left, &right),
            left,
            right,
            annotation: None,
        });
    }

    Ok(AuditReport {
        manifold: m.name().to_string(),
        mode: AuditMode::Nonelliptic,
        dim: n,
        note: NECESSARY_CONDITION_NOTE.to_string(),
        checks,
        displayed: Vec::new(),
        chi_p_pattern_from: None,
        full_cpn_pattern: None,
        l2_reconstruction: Some(L2Reconstruction::from_genus(&genus)),
        warnings: genus_warnings(m, &genus),
    })
}

/// Audits `(-1)^{n-2} c_2 c_1^{n-2} [M] >= n/(2(n+1)) (-1)^n c_1^n [M]`.
/// Needs `n >= 2` and the two involved Chern numbers present.
pub fn yau_audit(m: &ManifoldChernData) -> Result<AuditReport, Error> {
    let n = m.dim();
    if n < 2 {
        return Err(Error::YauUndefined(n));
    }
    let mut c2_part = vec![2u32];
    c2_part.extend(std::iter::repeat_n(1, n - 2));
    let c2_mono = crate::partition::Partition::new(c2_part).unwrap();
    let c1_mono = crate::partition::Partition::new(vec![1u32; n]).unwrap();
    for lambda in [&c2_mono, &c1_mono] {
        if !m.chern_numbers().contains_key(lambda) {
            return Err(Error::MissingChernData(format!(
                "{} has no Chern number for c_{{{lambda}}}",
                m.name()
            )));
        }
    }
    let sign = sign_of_dim(n); // (-1)^{n-2} = (-1)^n
    let factor = frac(n as i64, 2 * (n as i64 + 1));
    let left = &sign * m.chern_number(&c2_mono);
    let right = &factor * &sign * m.chern_number(&c1_mono);
    let verdict = Verdict::compare(&left, &right);
    let annotation = (verdict == Verdict::Equality).then(|| {
        "for manifolds satisfying the audit hypotheses, equality holds exactly when the universal cover is the unit ball"
            .to_string()
    });
    Ok(AuditReport {
        manifold: m.name().to_string(),
        mode: AuditMode::Yau,
        dim: n,
        note: NECESSARY_CONDITION_NOTE.to_string(),
        checks: vec![InequalityCheck {
            index: 0,
            description: format!(
                "(-1)^{}*c_2{}[M] >= {}*(-1)^{n}*c_1^{n}[M]",
                n - 2,
                match n - 2 {
                    0 => String::new(),
                    1 => "*c_1".to_string(),
                    e => format!("*c_1^{e}"),
                },
                format_rational(&factor),
            ),
            left,
            right,
            verdict,
            annotation,
        }],
        displayed: Vec::new(),
        chi_p_pattern_from: None,
        full_cpn_pattern: None,
        l2_reconstruction: None,
        warnings: m.warnings().to_vec(),
    })
}

/// Outcome of the Hodge-grid symmetry check.
#[derive(Clone, Debug, Serialize)]
pub struct SerreReport {
    /// `h^{p,q} = h^{n-p,n-q}` everywhere.
    pub symmetric: bool,
    /// Grid positions violating the symmetry.
    pub failures: Vec<(usize, usize)>,
    /// The induced `χ^p` satisfy `χ^p = (-1)^n χ^{n-p}`.
    pub chi_duality: bool,
}

impl SerreReport {
    pub fn passes(&self) -> bool {
        self.symmetric && self.chi_duality
    }
}

/// Verifies `h^{p,q} = h^{n-p,n-q}` and the induced genus duality.
pub fn serre_check(grid: &HodgeGrid) -> SerreReport {
    let n = grid.dim();
    let mut failures = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            if grid.get(p, q) != grid.get(n - p, n - q) {
                failures.push((p, q));
            }
        }
    }
    let genus = grid.chi_y();
    let sign = sign_of_dim(n);
    let chi_duality = (0..=n).all(|p| genus.chi(p) == &(&sign * genus.chi(n - p)));
    SerreReport {
        symmetric: failures.is_empty(),
        failures,
        chi_duality,
    }
}

/// The three classical specializations of an evaluated genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specializations {
    pub euler: Rational,
    pub todd: Rational,
    pub signature: Rational,
}

/// `euler = χ_y(-1)`, `todd = χ_y(0)`, `signature = χ_y(1)`.
pub fn specializations(genus: &EvaluatedGenus) -> Specializations {
    Specializations {
        euler: genus.at(&rat(-1)),
        todd: genus.at(&rat(0)),
        signature: genus.at(&rat(1)),
    }
}

// ---- structured serialization ----
//
// Field names and verdict strings below are a stable contract; see the
// README for the schema.

impl Serialize for InequalityCheck {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("index", &self.index)?;
        map.serialize_entry("description", &self.description)?;
        map.serialize_entry("left", &format_rational(&self.left))?;
        map.serialize_entry("right", &format_rational(&self.right))?;
        map.serialize_entry("verdict", &self.verdict)?;
        if let Some(annotation) = &self.annotation {
            map.serialize_entry("annotation", annotation)?;
        }
        map.end()
    }
}

impl Serialize for DisplayedValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("index", &self.index)?;
        map.serialize_entry("label", &self.label)?;
        map.serialize_entry("factor", &format_rational(&self.factor))?;
        map.serialize_entry("left", &format_rational(&self.left))?;
        map.serialize_entry("right", &format_rational(&self.right))?;
        map.end()
    }
}

impl Serialize for L2Entry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("p", &self.p)?;
        map.serialize_entry("value", &format_rational(&self.value))?;
        map.serialize_entry("integral", &self.integral)?;
        map.serialize_entry("positive", &self.positive)?;
        map.serialize_entry("nonnegative", &self.nonnegative)?;
        map.end()
    }
}

impl Serialize for L2Reconstruction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl Serialize for AuditReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("manifold", &self.manifold)?;
        map.serialize_entry("mode", &self.mode)?;
        map.serialize_entry("dim", &self.dim)?;
        map.serialize_entry("note", &self.note)?;
        map.serialize_entry("checks", &self.checks)?;
        map.serialize_entry("displayed", &self.displayed)?;
        map.serialize_entry("chi_p_pattern_from", &self.chi_p_pattern_from)?;
        map.serialize_entry("full_cpn_pattern", &self.full_cpn_pattern)?;
        map.serialize_entry("l2_reconstruction", &self.l2_reconstruction)?;
        map.serialize_entry("warnings", &self.warnings)?;
        map.end()
    }
}

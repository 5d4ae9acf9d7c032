//! Reference manifolds and descriptor ingestion.
//!
//! Chern data for the stock examples: projective spaces, complex tori,
//! hypersurfaces, products, and compact quotients built through the
//! proportionality principle (Chern numbers of a compact dual scaled by
//! the quotient's Todd genus). User data enters through JSON descriptors.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::genus::{evaluate_genus, EvaluatedGenus};
use crate::partition::{partitions, Partition};
use crate::rational::{binomial, format_rational, parse_rational, rat, Rational};
use crate::series::TruncatedSeries;
use crate::ypoly::YPoly;

/// Hodge numbers `h^{p,q}` for `0 <= p, q <= n`, row `p`, column `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HodgeGrid {
    rows: Vec<Vec<u64>>,
}

impl HodgeGrid {
    pub fn new(dim: usize, rows: Vec<Vec<u64>>) -> Result<Self, Error> {
        let side = dim + 1;
        if rows.len() != side || rows.iter().any(|r| r.len() != side) {
            return Err(Error::BadDescriptor(format!(
                "hodge grid must be {side}x{side} for dimension {dim}"
            )));
        }
        Ok(HodgeGrid { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.rows[p][q]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// The genus computed from Hodge numbers: `χ^p = Σ_q (-1)^q h^{p,q}`.
    pub fn chi_y(&self) -> EvaluatedGenus {
        let n = self.dim();
        let chi = (0..=n)
            .map(|p| {
                let mut acc = Rational::zero();
                for q in 0..=n {
                    let term = rat(self.rows[p][q] as i64);
                    if q % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            })
            .collect();
        EvaluatedGenus::from_chi(n, chi)
    }

    /// Hodge numbers of a product via the Künneth rule
    /// `h^{p,q} = Σ h^{a,b}(M) h^{p-a,q-b}(N)`.
    pub fn kunneth(a: &HodgeGrid, b: &HodgeGrid) -> HodgeGrid {
        let (m, n) = (a.dim(), b.dim());
        let dim = m + n;
        let mut rows = vec![vec![0u64; dim + 1]; dim + 1];
        for p in 0..=dim {
            for q in 0..=dim {
                let mut acc = 0u64;
                for i in 0..=p.min(m) {
                    for j in 0..=q.min(m) {
                        if p - i <= n && q - j <= n {
                            acc += a.get(i, j) * b.get(p - i, q - j);
                        }
                    }
                }
                rows[p][q] = acc;
            }
        }
        HodgeGrid { rows }
    }
}

/// Chern data of a manifold: dimension, Chern numbers indexed by weight-`n`
/// partitions, and an optional Hodge grid.
///
/// Chern numbers of genuine manifolds are integers; non-integer rationals
/// are accepted for exploratory inputs and flagged in `warnings`.
#[derive(Clone, Debug)]
pub struct ManifoldChernData {
    name: String,
    dim: usize,
    chern_numbers: BTreeMap<Partition, Rational>,
    hodge: Option<HodgeGrid>,
    warnings: Vec<String>,
}

impl ManifoldChernData {
    /// Validates all partition weights against `dim`. The map may be
    /// sparse; see [`ManifoldChernData::missing_partitions`].
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        chern_numbers: BTreeMap<Partition, Rational>,
    ) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::BadDescriptor("dimension must be at least 1".into()));
        }
        for lambda in chern_numbers.keys() {
            if lambda.weight() != dim {
                return Err(Error::WeightMismatch {
                    weight: lambda.weight(),
                    dim,
                });
            }
        }
        let mut data = ManifoldChernData {
            name: name.into(),
            dim,
            chern_numbers,
            hodge: None,
            warnings: Vec::new(),
        };
        if !data.is_integral() {
            data.warnings.push(
                "non-integer Chern numbers: not the data of a genuine manifold (exploratory input)"
                    .to_string(),
            );
        }
        Ok(data)
    }

    /// Attaches a Hodge grid after cross-validating that the genus it
    /// induces agrees with the one computed from the Chern numbers.
    pub fn with_hodge(mut self, hodge: HodgeGrid) -> Result<Self, Error> {
        if hodge.dim() != self.dim {
            return Err(Error::BadDescriptor(format!(
                "hodge grid is for dimension {}, manifold has dimension {}",
                hodge.dim(),
                self.dim
            )));
        }
        let from_hodge = hodge.chi_y();
        let from_chern = evaluate_genus(&self)?;
        if from_hodge != from_chern {
            return Err(Error::HodgeChernMismatch {
                from_hodge: from_hodge.to_string(),
                from_chern: from_chern.to_string(),
            });
        }
        self.hodge = Some(hodge);
        Ok(self)
    }

    fn set_hodge_unchecked(mut self, hodge: HodgeGrid) -> Self {
        self.hodge = Some(hodge);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The Chern number for `λ`; absent partitions read as zero.
    pub fn chern_number(&self, lambda: &Partition) -> Rational {
        self.chern_numbers
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn chern_numbers(&self) -> &BTreeMap<Partition, Rational> {
        &self.chern_numbers
    }

    pub fn hodge(&self) -> Option<&HodgeGrid> {
        self.hodge.as_ref()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Weight-`dim` partitions with no stored Chern number.
    pub fn missing_partitions(&self) -> Vec<Partition> {
        partitions(self.dim)
            .into_iter()
            .filter(|p| !self.chern_numbers.contains_key(p))
            .collect()
    }

    pub fn has_full_data(&self) -> bool {
        self.missing_partitions().is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.chern_numbers.values().all(Rational::is_integer)
    }

    /// `CP^n` with total Chern class `(1+h)^{n+1}`: the Chern number for
    /// `λ` is `Π_j C(n+1, λ_j)`, and the Hodge diamond is the diagonal.
    pub fn projective_space(n: usize) -> Self {
        assert!(n >= 1);
        let numbers = partitions(n)
            .into_iter()
            .map(|lambda| {
                let value = lambda
                    .parts()
                    .iter()
                    .fold(Rational::one(), |acc, &part| {
                        acc * binomial(n + 1, part as usize)
                    });
                (lambda, value)
            })
            .collect();
        let rows = (0..=n)
            .map(|p| (0..=n).map(|q| u64::from(p == q)).collect())
            .collect();
        ManifoldChernData::new(format!("CP^{n}"), n, numbers)
            .expect("projective space data is valid")
            .set_hodge_unchecked(HodgeGrid { rows })
    }

    /// Complex torus: every Chern number vanishes;
    /// `h^{p,q} = C(n,p) C(n,q)`.
    pub fn complex_torus(n: usize) -> Self {
        assert!(n >= 1);
        let numbers = partitions(n)
            .into_iter()
            .map(|lambda| (lambda, Rational::zero()))
            .collect();
        let binom = |a: usize, b: usize| -> u64 {
            num_integer::binomial(a as u64, b as u64)
        };
        let rows = (0..=n)
            .map(|p| (0..=n).map(|q| binom(n, p) * binom(n, q)).collect())
            .collect();
        ManifoldChernData::new(format!("T^{n}"), n, numbers)
            .expect("torus data is valid")
            .set_hodge_unchecked(HodgeGrid { rows })
    }

    /// Smooth degree-`d` hypersurface `X^n ⊂ CP^{n+1}`, by adjunction:
    /// `c(X) = (1+h)^{n+2} (1+dh)^{-1}` truncated at weight `n`, and a
    /// weight-`n` monomial evaluates to its `h^n` coefficient times `d`.
    pub fn hypersurface(n: usize, d: u32) -> Self {
        assert!(n >= 1 && d >= 1);
        let degree = rat(d as i64);
        // exact series division (1+h)^{n+2} / (1 + dh) at truncation n
        let ambient = TruncatedSeries::new(
            n,
            (0..=n).map(|k| YPoly::constant(binomial(n + 2, k))).collect(),
        );
        let section = TruncatedSeries::new(
            n,
            vec![YPoly::one(), YPoly::constant(degree.clone())],
        );
        let total_class = ambient
            .divide(&section)
            .expect("1 + dh has unit constant term");
        // class coefficients a_k with c_k(X) = a_k h^k
        let classes: Vec<Rational> = (0..=n).map(|k| total_class.coeff(k).coeff(0)).collect();
        let numbers = partitions(n)
            .into_iter()
            .map(|lambda| {
                let coeff = lambda
                    .parts()
                    .iter()
                    .fold(Rational::one(), |acc, &part| acc * &classes[part as usize]);
                (lambda, coeff * &degree)
            })
            .collect();
        ManifoldChernData::new(format!("hypersurface({n},{d})"), n, numbers)
            .expect("hypersurface data is valid")
    }

    /// Scales every Chern number by a nonzero Todd factor. Any Hodge grid
    /// is dropped: the scaled data does not determine one.
    pub fn proportionality(&self, todd: &Rational) -> Result<Self, Error> {
        if todd.is_zero() {
            return Err(Error::ZeroToddFactor);
        }
        let numbers = self
            .chern_numbers
            .iter()
            .map(|(lambda, value)| (lambda.clone(), value * todd))
            .collect();
        ManifoldChernData::new(
            format!("proportionality({}, {})", self.name, format_rational(todd)),
            self.dim,
            numbers,
        )
    }

    /// Chern data of a compact ball quotient with Todd genus `(-1)^n`:
    /// the proportionality principle applied to the compact dual `CP^n`.
    pub fn ball_quotient(n: usize) -> Self {
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        let mut data = ManifoldChernData::projective_space(n)
            .proportionality(&sign)
            .expect("sign is nonzero");
        data.name = format!("B^{n}/Gamma");
        data
    }

    /// Product manifold: Chern numbers via the Whitney formula
    /// `c_k(M×N) = Σ_{i+j=k} c_i(M) c_j(N)`, Hodge numbers via Künneth
    /// (when both grids are present). Requires full Chern data.
    pub fn product(a: &ManifoldChernData, b: &ManifoldChernData) -> Result<Self, Error> {
        for m in [a, b] {
            if !m.has_full_data() {
                return Err(Error::MissingChernData(format!(
                    "{} lacks Chern numbers for {}",
                    m.name,
                    join_partitions(&m.missing_partitions())
                )));
            }
        }
        let (ma, nb) = (a.dim, b.dim);
        let dim = ma + nb;
        let mut numbers = BTreeMap::new();
        for lambda in partitions(dim) {
            let mut acc = Rational::zero();
            split_parts(
                lambda.parts(),
                0,
                ma,
                &mut Vec::new(),
                &mut Vec::new(),
                &mut |left, right| {
                    let la = Partition::from_unsorted(left.to_vec());
                    let lb = Partition::from_unsorted(right.to_vec());
                    acc += a.chern_number(&la) * b.chern_number(&lb);
                },
            );
            numbers.insert(lambda, acc);
        }
        let data = ManifoldChernData::new(format!("{} x {}", a.name, b.name), dim, numbers)?;
        Ok(match (&a.hodge, &b.hodge) {
            (Some(ha), Some(hb)) => data.set_hodge_unchecked(HodgeGrid::kunneth(ha, hb)),
            _ => data,
        })
    }

    /// Parses and validates a JSON descriptor document (see the descriptor
    /// grammar in the crate README). Missing partitions default to zero
    /// with a warning per key.
    pub fn from_descriptor_str(text: &str) -> Result<Self, Error> {
        let raw: RawDescriptor = serde_json::from_str(text)?;
        if raw.dim == 0 {
            return Err(Error::BadDescriptor("dim must be at least 1".into()));
        }
        let mut numbers = BTreeMap::new();
        for (key, value) in &raw.chern_numbers {
            let lambda = Partition::parse(key)?;
            if lambda.weight() != raw.dim {
                return Err(Error::WeightMismatch {
                    weight: lambda.weight(),
                    dim: raw.dim,
                });
            }
            numbers.insert(lambda, parse_rational(value)?);
        }
        let name = raw.name.unwrap_or_else(|| "M".to_string());
        let mut data = ManifoldChernData::new(name, raw.dim, numbers)?;
        for lambda in data.missing_partitions() {
            data.warnings
                .push(format!("missing Chern number for c_{{{lambda}}}; defaulting to 0"));
        }
        match raw.hodge {
            Some(rows) => data.with_hodge(HodgeGrid::new(raw.dim, rows)?),
            None => Ok(data),
        }
    }

    /// Canonical descriptor document: keys in canonical partition order,
    /// rationals rendered `"p"` or `"p/q"`. Parsing this back and
    /// re-serializing is byte-stable.
    pub fn to_descriptor_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("descriptor serialization");
        text.push('\n');
        text
    }
}

fn join_partitions(parts: &[Partition]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        let _ = write!(out, "{p}");
    }
    out
}

/// Enumerates the ways to split each part `λ_t = i_t + j_t` so that the
/// left exponents sum to `left_budget` (the dimension of the first factor).
fn split_parts(
    parts: &[u32],
    idx: usize,
    left_budget: usize,
    left: &mut Vec<u32>,
    right: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32], &[u32]),
) {
    if idx == parts.len() {
        if left_budget == 0 {
            visit(left, right);
        }
        return;
    }
    let part = parts[idx];
    for i in 0..=part.min(left_budget as u32) {
        left.push(i);
        right.push(part - i);
        split_parts(
            parts,
            idx + 1,
            left_budget - i as usize,
            left,
            right,
            visit,
        );
        left.pop();
        right.pop();
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    #[serde(default)]
    name: Option<String>,
    dim: usize,
    chern_numbers: BTreeMap<String, String>,
    #[serde(default)]
    hodge: Option<Vec<Vec<u64>>>,
}

impl Serialize for ManifoldChernData {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct ChernMap<'a>(&'a BTreeMap<Partition, Rational>);
        impl Serialize for ChernMap<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (lambda, value) in self.0 {
                    map.serialize_entry(&lambda.to_string(), &format_rational(value))?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("name", &self.name)?;
        map.serialize_entry("dim", &self.dim)?;
        map.serialize_entry("chern_numbers", &ChernMap(&self.chern_numbers))?;
        if let Some(hodge) = &self.hodge {
            map.serialize_entry("hodge", hodge)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn projective_spaces() {
        let cp2 = ManifoldChernData::projective_space(2);
        assert_eq!(cp2.chern_number(&p(&[2])), rat(3));
        assert_eq!(cp2.chern_number(&p(&[1, 1])), rat(9));
        let cp1 = ManifoldChernData::projective_space(1);
        assert_eq!(cp1.chern_number(&p(&[1])), rat(2));
        let cp3 = ManifoldChernData::projective_space(3);
        assert_eq!(cp3.chern_number(&p(&[3])), rat(4));
        assert_eq!(cp3.chern_number(&p(&[2, 1])), rat(24));
        assert_eq!(cp3.chern_number(&p(&[1, 1, 1])), rat(64));
    }

    #[test]
    fn torus_vanishes() {
        let t1 = ManifoldChernData::complex_torus(1);
        assert_eq!(t1.chern_number(&p(&[1])), rat(0));
        let grid = t1.hodge().unwrap();
        assert_eq!(
            (grid.get(0, 0), grid.get(1, 0), grid.get(0, 1), grid.get(1, 1)),
            (1, 1, 1, 1)
        );
        let t2 = ManifoldChernData::complex_torus(2);
        assert!(t2.chern_numbers().values().all(Rational::is_zero));
        assert!(t2.has_full_data());
    }

    #[test]
    fn hypersurfaces() {
        // degree 1 is CP^2
        let h = ManifoldChernData::hypersurface(2, 1);
        assert_eq!(h.chern_number(&p(&[2])), rat(3));
        assert_eq!(h.chern_number(&p(&[1, 1])), rat(9));
        // K3
        let k3 = ManifoldChernData::hypersurface(2, 4);
        assert_eq!(k3.chern_number(&p(&[2])), rat(24));
        assert_eq!(k3.chern_number(&p(&[1, 1])), rat(0));
        // elliptic cubic curve
        let cubic = ManifoldChernData::hypersurface(1, 3);
        assert_eq!(cubic.chern_number(&p(&[1])), rat(0));
    }

    #[test]
    fn hypersurface_degree_one_is_projective_space() {
        for n in 1..=6 {
            let h = ManifoldChernData::hypersurface(n, 1);
            let cp = ManifoldChernData::projective_space(n);
            assert_eq!(h.chern_numbers(), cp.chern_numbers(), "n = {n}");
        }
    }

    #[test]
    fn proportionality_scales_and_composes() {
        let cp2 = ManifoldChernData::projective_space(2);
        let same = cp2.proportionality(&rat(1)).unwrap();
        assert_eq!(same.chern_numbers(), cp2.chern_numbers());

        let cp3 = ManifoldChernData::projective_space(3);
        let scaled = cp3.proportionality(&rat(-1)).unwrap();
        assert_eq!(scaled.chern_number(&p(&[3])), rat(-4));
        assert_eq!(scaled.chern_number(&p(&[2, 1])), rat(-24));
        assert_eq!(scaled.chern_number(&p(&[1, 1, 1])), rat(-64));

        let twice = cp2
            .proportionality(&frac(2, 3))
            .unwrap()
            .proportionality(&frac(3, 2))
            .unwrap();
        assert_eq!(twice.chern_numbers(), cp2.chern_numbers());
        assert!(cp2.proportionality(&rat(0)).is_err());
        // a fractional factor produces flagged non-geometric data
        let frac_data = cp2.proportionality(&frac(1, 2)).unwrap();
        assert!(!frac_data.is_integral());
        assert!(!frac_data.warnings().is_empty());
    }

    #[test]
    fn ball_quotients() {
        let b2 = ManifoldChernData::ball_quotient(2);
        assert_eq!(b2.chern_number(&p(&[2])), rat(3));
        assert_eq!(b2.chern_number(&p(&[1, 1])), rat(9));
        assert!(b2.hodge().is_none());
        let b3 = ManifoldChernData::ball_quotient(3);
        assert_eq!(b3.chern_number(&p(&[3])), rat(-4));
        assert_eq!(b3.chern_number(&p(&[2, 1])), rat(-24));
        assert_eq!(b3.chern_number(&p(&[1, 1, 1])), rat(-64));
    }

    #[test]
    fn products() {
        let t1 = ManifoldChernData::complex_torus(1);
        let tt = ManifoldChernData::product(&t1, &t1).unwrap();
        assert!(tt.chern_numbers().values().all(Rational::is_zero));

        let cp1 = ManifoldChernData::projective_space(1);
        let p11 = ManifoldChernData::product(&cp1, &cp1).unwrap();
        assert_eq!(p11.chern_number(&p(&[2])), rat(4));
        assert_eq!(p11.chern_number(&p(&[1, 1])), rat(8));

        let mixed = ManifoldChernData::product(&cp1, &t1).unwrap();
        assert_eq!(mixed.chern_number(&p(&[2])), rat(0));
        assert_eq!(mixed.chern_number(&p(&[1, 1])), rat(0));

        // sparse data is rejected
        let sparse =
            ManifoldChernData::new("sparse", 2, BTreeMap::new()).unwrap();
        assert!(ManifoldChernData::product(&sparse, &cp1).is_err());
    }

    #[test]
    fn descriptor_parse_and_roundtrip() {
        let text = r#"{"dim": 2, "chern_numbers": {"2": "3", "1,1": "9"}}"#;
        let data = ManifoldChernData::from_descriptor_str(text).unwrap();
        assert_eq!(data.chern_numbers(), ManifoldChernData::projective_space(2).chern_numbers());
        assert!(data.warnings().is_empty());

        let empty = ManifoldChernData::from_descriptor_str(r#"{"dim": 2, "chern_numbers": {}}"#)
            .unwrap();
        assert!(empty.chern_numbers().is_empty());
        assert_eq!(empty.warnings().len(), 2, "one warning per missing key");
        assert_eq!(empty.chern_number(&p(&[2])), rat(0));

        let weight_err =
            ManifoldChernData::from_descriptor_str(r#"{"dim": 2, "chern_numbers": {"3": "1"}}"#);
        assert!(matches!(
            weight_err,
            Err(Error::WeightMismatch { weight: 3, dim: 2 })
        ));

        // canonical output is parse-stable byte for byte
        let json = ManifoldChernData::projective_space(3).to_descriptor_json();
        let reparsed = ManifoldChernData::from_descriptor_str(&json).unwrap();
        assert_eq!(reparsed.to_descriptor_json(), json);
    }

    #[test]
    fn descriptor_hodge_cross_check() {
        let good = r#"{
            "dim": 1, "chern_numbers": {"1": "2"},
            "hodge": [[1, 0], [0, 1]]
        }"#;
        let data = ManifoldChernData::from_descriptor_str(good).unwrap();
        assert!(data.hodge().is_some());

        let bad = r#"{
            "dim": 1, "chern_numbers": {"1": "2"},
            "hodge": [[1, 1], [0, 1]]
        }"#;
        assert!(matches!(
            ManifoldChernData::from_descriptor_str(bad),
            Err(Error::HodgeChernMismatch { .. })
        ));
    }
}

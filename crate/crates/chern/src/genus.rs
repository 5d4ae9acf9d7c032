//! The χ_y-genus engine.
//!
//! The genus of a compact complex `n`-fold is the integral of
//! `Π_i x_i (1 + y e^{-x_i}) / (1 - e^{-x_i})` over the formal Chern
//! roots. Writing `Q(x) = Σ_k q_k(y) x^k` for the single-root factor, the
//! coefficient of the monomial symmetric function `m_λ` in the product is
//! `q_0^{n-ℓ(λ)} Π_j q_{λ_j}`; converting each `m_λ` to the elementary
//! basis gives the universal genus polynomial in Chern classes.
//!
//! Expanding the genus at `y = -1` instead of `y = 0` produces the Taylor
//! coefficients `K_j`, whose low-order closed forms, parity dependence and
//! support pattern are verified here exactly.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::catalog::ManifoldChernData;
use crate::chern_poly::ChernPolynomial;
use crate::error::Error;
use crate::linalg::{self, Matrix};
use crate::partition::{partitions, Partition};
use crate::rational::{binomial, frac, rat, Rational};
use crate::series::TruncatedSeries;
use crate::symmetric::monomial_to_elementary;
use crate::ypoly::YPoly;

/// Coefficients `q_0, …, q_n` of the single-root factor
/// `Q(x) = x (1 + y e^{-x}) / (1 - e^{-x})`, each linear in `y`.
pub fn q_coefficients(n: usize) -> Vec<YPoly> {
    assert!(n >= 1, "dimension must be at least 1");
    // order n+1 so the quotient still carries x^n after the shared factor
    // x is cancelled
    let order = n + 1;
    let one = TruncatedSeries::one(order);
    let exp = TruncatedSeries::exp_neg_x(order);
    let numerator = &TruncatedSeries::x(order) * &(&one + &exp.scale(&YPoly::y()));
    let denominator = &one - &exp;
    let q = numerator
        .divide(&denominator)
        .expect("1 - e^{-x} has x-valuation 1 and unit reduced constant term");
    (0..=n).map(|k| q.coeff(k)).collect()
}

/// The universal genus polynomial: `χ^p` as Chern polynomials, for
/// `0 <= p <= n`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniversalGenus {
    dim: usize,
    chi: Vec<ChernPolynomial>,
}

impl UniversalGenus {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn chi(&self) -> &[ChernPolynomial] {
        &self.chi
    }

    pub fn chi_p(&self, p: usize) -> Result<&ChernPolynomial, Error> {
        self.chi.get(p).ok_or(Error::IndexOutOfRange {
            index: p,
            dim: self.dim,
        })
    }

    /// Whether `χ^p = (-1)^n χ^{n-p}` holds coefficient-wise.
    pub fn satisfies_duality(&self) -> bool {
        let n = self.dim;
        (0..=n).all(|p| {
            let mirrored = if n % 2 == 0 {
                self.chi[n - p].clone()
            } else {
                -&self.chi[n - p]
            };
            self.chi[p] == mirrored
        })
    }

    /// Evaluation at y = -1 as a Chern polynomial: `Σ_p (-1)^p χ^p`.
    pub fn euler_polynomial(&self) -> ChernPolynomial {
        let mut acc = ChernPolynomial::zero(self.dim);
        for (p, chi) in self.chi.iter().enumerate() {
            acc = if p % 2 == 0 { &acc + chi } else { &acc - chi };
        }
        acc
    }

    /// Pairs every `χ^p` with the manifold's Chern numbers.
    pub fn evaluate(&self, manifold: &ManifoldChernData) -> Result<EvaluatedGenus, Error> {
        let chi = self
            .chi
            .iter()
            .map(|poly| poly.evaluate(manifold))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EvaluatedGenus {
            dim: self.dim,
            chi,
        })
    }
}

fn universal_cache() -> &'static RwLock<HashMap<usize, Arc<UniversalGenus>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<UniversalGenus>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The weight-`n` component of the genus integrand in Chern classes,
/// cached per dimension. Recomputation under cache contention is
/// idempotent, so readers never block writers for long.
pub fn chi_y_universal(n: usize) -> Arc<UniversalGenus> {
    assert!(n >= 1, "dimension must be at least 1");
    if let Some(g) = universal_cache().read().unwrap().get(&n) {
        return g.clone();
    }
    let q = q_coefficients(n);
    let mut chi = vec![ChernPolynomial::zero(n); n + 1];
    for lambda in partitions(n) {
        let mut weight = q[0].pow(n - lambda.len());
        for &part in lambda.parts() {
            weight = &weight * &q[part as usize];
        }
        let basis = monomial_to_elementary(&lambda, n).expect("weight matches dimension");
        for (p, slot) in chi.iter_mut().enumerate() {
            let coeff = weight.coeff(p);
            if !coeff.is_zero() {
                *slot = &*slot + &basis.scale(&coeff);
            }
        }
    }
    let genus = Arc::new(UniversalGenus { dim: n, chi });
    universal_cache()
        .write()
        .unwrap()
        .insert(n, genus.clone());
    genus
}

/// The universal polynomial computing `χ^p` from Chern numbers.
pub fn chi_p(n: usize, p: usize) -> Result<ChernPolynomial, Error> {
    chi_y_universal(n).chi_p(p).cloned()
}

/// A genus evaluated on a manifold: the integer (for genuine manifolds)
/// values `χ^0, …, χ^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluatedGenus {
    dim: usize,
    chi: Vec<Rational>,
}

impl EvaluatedGenus {
    pub fn from_chi(dim: usize, chi: Vec<Rational>) -> Self {
        assert_eq!(chi.len(), dim + 1);
        EvaluatedGenus { dim, chi }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn chi(&self, p: usize) -> &Rational {
        &self.chi[p]
    }

    pub fn chi_values(&self) -> &[Rational] {
        &self.chi
    }

    /// Exact evaluation at a rational `y`.
    pub fn at(&self, y: &Rational) -> Rational {
        self.to_ypoly().eval(y)
    }

    pub fn to_ypoly(&self) -> YPoly {
        YPoly::from_coeffs(self.chi.clone())
    }

    /// Each `χ^p` is the index of an elliptic operator, so genuine
    /// manifold data must make every value an integer.
    pub fn is_integral(&self) -> bool {
        self.chi.iter().all(Rational::is_integer)
    }
}

impl fmt::Display for EvaluatedGenus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_ypoly().fmt(f)
    }
}

/// Evaluates the universal genus of the manifold's dimension on its Chern
/// numbers. Non-integer `χ^p` are not an error here; callers flag them
/// via [`EvaluatedGenus::is_integral`].
pub fn evaluate_genus(manifold: &ManifoldChernData) -> Result<EvaluatedGenus, Error> {
    chi_y_universal(manifold.dim()).evaluate(manifold)
}

/// Taylor coefficients of the genus at `y = -1`:
/// `χ_y = Σ_j K_j (y+1)^j` with each `K_j` a Chern polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct KTable {
    dim: usize,
    entries: Vec<ChernPolynomial>,
}

impl KTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[ChernPolynomial] {
        &self.entries
    }

    pub fn entry(&self, j: usize) -> Result<&ChernPolynomial, Error> {
        self.entries.get(j).ok_or(Error::IndexOutOfRange {
            index: j,
            dim: self.dim,
        })
    }
}

/// Re-expands the universal genus around `y = -1` by the exact change of
/// variable `y = t - 1`: `K_j = Σ_{p=j}^n (-1)^{p-j} C(p,j) χ^p`.
pub fn k_table(n: usize) -> KTable {
    let genus = chi_y_universal(n);
    let entries = (0..=n)
        .map(|j| {
            let mut acc = ChernPolynomial::zero(n);
            for p in j..=n {
                let sign = if (p - j) % 2 == 0 { rat(1) } else { rat(-1) };
                let coeff = sign * binomial(p, j);
                acc = &acc + &genus.chi()[p].scale(&coeff);
            }
            acc
        })
        .collect();
    KTable { dim: n, entries }
}

/// Appends `coeff · c_{i_1}···c_{i_k}` under the conventions `c_0 = 1` and
/// `c_i = 0` for `i < 0` or `i > n`.
fn add_index_monomial(acc: &mut ChernPolynomial, n: usize, coeff: Rational, indices: &[i64]) {
    let mut parts = Vec::new();
    for &i in indices {
        if i < 0 || i as usize > n {
            return; // the whole monomial vanishes
        }
        if i > 0 {
            parts.push(i as u32);
        }
    }
    acc.add_term(Partition::from_unsorted(parts), coeff)
        .expect("closed-form monomials have weight n");
}

/// Closed form of `K_j` for `j <= 4`, valid for any `n >= j` under the
/// `c_0 = 1`, out-of-range-`c` = 0 conventions.
pub fn k_closed_form(n: usize, j: usize) -> ChernPolynomial {
    assert!(j <= 4, "closed forms are known here only for j <= 4");
    assert!(j <= n, "K_j exists only for j <= n");
    let ni = n as i64;
    let mut acc = ChernPolynomial::zero(n);
    match j {
        0 => add_index_monomial(&mut acc, n, rat(1), &[ni]),
        1 => add_index_monomial(&mut acc, n, frac(-ni, 2), &[ni]),
        2 => {
            let twelfth = frac(1, 12);
            add_index_monomial(
                &mut acc,
                n,
                &twelfth * frac(ni * (3 * ni - 5), 2),
                &[ni],
            );
            add_index_monomial(&mut acc, n, twelfth, &[1, ni - 1]);
        }
        3 => {
            let factor = frac(-1, 24);
            add_index_monomial(
                &mut acc,
                n,
                &factor * frac(ni * (ni - 2) * (ni - 3), 2),
                &[ni],
            );
            add_index_monomial(&mut acc, n, &factor * rat(ni - 2), &[1, ni - 1]);
        }
        4 => {
            let factor = frac(1, 5760);
            add_index_monomial(
                &mut acc,
                n,
                &factor * rat(ni * (15 * ni * ni * ni - 150 * ni * ni + 485 * ni - 502)),
                &[ni],
            );
            add_index_monomial(
                &mut acc,
                n,
                &factor * rat(4 * (15 * ni * ni - 85 * ni + 108)),
                &[1, ni - 1],
            );
            add_index_monomial(&mut acc, n, &factor * rat(8), &[1, 1, ni - 2]);
            add_index_monomial(&mut acc, n, &factor * rat(24), &[2, ni - 2]);
            add_index_monomial(&mut acc, n, &factor * rat(-8), &[1, 1, 1, ni - 3]);
            add_index_monomial(&mut acc, n, &factor * rat(24), &[1, 2, ni - 3]);
            add_index_monomial(&mut acc, n, &factor * rat(-24), &[3, ni - 3]);
        }
        _ => unreachable!(),
    }
    acc
}

#[derive(Clone, Debug)]
pub struct ClosedFormCheck {
    pub j: usize,
    pub matches: bool,
    /// Computed minus closed form; zero exactly when they agree.
    pub discrepancy: ChernPolynomial,
}

#[derive(Clone, Debug)]
pub struct ClosedFormReport {
    pub dim: usize,
    pub checks: Vec<ClosedFormCheck>,
}

impl ClosedFormReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.matches)
    }
}

/// Compares the computed `K_j` against the known closed forms for
/// `j <= min(n, 4)`. A mismatch is reported, not raised.
pub fn verify_k_closed_forms(n: usize) -> ClosedFormReport {
    let table = k_table(n);
    let checks = (0..=n.min(4))
        .map(|j| {
            let discrepancy = &table.entries[j] - &k_closed_form(n, j);
            ClosedFormCheck {
                j,
                matches: discrepancy.is_zero(),
                discrepancy,
            }
        })
        .collect();
    ClosedFormReport { dim: n, checks }
}

/// `K_{2i+1} = Σ_j coefficients[j] · K_{2j}`.
#[derive(Clone, Debug)]
pub struct OddRelation {
    pub odd_index: usize,
    pub coefficients: Vec<Rational>,
}

/// Expresses every odd coefficient `K_{2i+1}` (with `2i+1 <= n`) in the
/// span of `{K_{2j} : j <= i}` by an exact linear solve in the partition
/// basis, verifying that the residual vanishes identically.
pub fn odd_k_dependence(n: usize) -> Result<Vec<OddRelation>, Error> {
    let table = k_table(n);
    let parts = partitions(n);
    let mut out = Vec::new();
    let mut i = 0;
    while 2 * i + 1 <= n {
        let j = 2 * i + 1;
        let evens: Vec<&ChernPolynomial> = (0..=i).map(|jj| &table.entries[2 * jj]).collect();
        let a: Matrix = parts
            .iter()
            .map(|lambda| evens.iter().map(|k| k.coeff(lambda)).collect())
            .collect();
        let b: Vec<Rational> = parts
            .iter()
            .map(|lambda| table.entries[j].coeff(lambda))
            .collect();
        let coefficients =
            linalg::solve(&a, &b).ok_or(Error::OddDependenceFalsified { n, j })?;
        let mut combo = ChernPolynomial::zero(n);
        for (c, k) in coefficients.iter().zip(&evens) {
            combo = &combo + &k.scale(c);
        }
        if combo != table.entries[j] {
            return Err(Error::OddDependenceFalsified { n, j });
        }
        out.push(OddRelation {
            odd_index: j,
            coefficients,
        });
        i += 1;
    }
    Ok(out)
}

/// Chern-class indices appearing in `K_j` with nonzero coefficient.
/// Requires an even `j = 2i <= n`.
pub fn k_support(n: usize, j: usize) -> Result<BTreeSet<u32>, Error> {
    if j % 2 != 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, dim: n });
    }
    Ok(k_table(n).entries[j].support())
}

/// The set the support of `K_{2i}` is contained in:
/// `{1, …, 2i-1} ∪ {n-2i+1, …, n}`. For `i = 0` the coefficient is the
/// top Chern class alone, so the bound degenerates to `{n}`.
pub fn k_support_bound(n: usize, j: usize) -> BTreeSet<u32> {
    assert!(j % 2 == 0 && j <= n);
    let i = j / 2;
    let mut set = BTreeSet::new();
    if i == 0 {
        set.insert(n as u32);
        return set;
    }
    for v in 1..=(2 * i - 1) {
        set.insert(v as u32);
    }
    let lo = (n + 1).saturating_sub(2 * i).max(1);
    for v in lo..=n {
        set.insert(v as u32);
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ypoly(coeffs: &[Rational]) -> YPoly {
        YPoly::from_coeffs(coeffs.to_vec())
    }

    /// Oracle for the q_k: multiply the Bernoulli-recurrence expansion of
    /// x/(1 - e^{-x}) by (1 + y e^{-x}) term by term.
    fn q_oracle(n: usize) -> Vec<YPoly> {
        // Bernoulli numbers, B_1 = -1/2 convention
        let mut bern: Vec<Rational> = vec![Rational::one()];
        for m in 1..=n {
            let mut acc = Rational::zero();
            for (j, bj) in bern.iter().enumerate() {
                acc += binomial(m + 1, j) * bj;
            }
            bern.push(-acc / rat(m as i64 + 1));
        }
        let mut fact = Rational::one();
        let todd: Vec<Rational> = (0..=n)
            .map(|k| {
                if k > 0 {
                    fact *= rat(k as i64);
                }
                let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
                sign * &bern[k] / &fact
            })
            .collect();
        let mut fact = Rational::one();
        let exp: Vec<Rational> = (0..=n)
            .map(|k| {
                if k > 0 {
                    fact *= rat(k as i64);
                }
                let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
                sign / &fact
            })
            .collect();
        (0..=n)
            .map(|k| {
                // q_k = todd_k + y * Σ_{i+j=k} todd_i exp_j
                let mut ycoef = Rational::zero();
                for i in 0..=k {
                    ycoef += &todd[i] * &exp[k - i];
                }
                ypoly(&[todd[k].clone(), ycoef])
            })
            .collect()
    }

    #[test]
    fn q_coefficients_match_oracle() {
        let q = q_coefficients(10);
        let oracle = q_oracle(10);
        assert_eq!(q, oracle);
        assert_eq!(q[0], ypoly(&[rat(1), rat(1)]), "q_0 = 1 + y");
        assert_eq!(q[1], ypoly(&[frac(1, 2), frac(-1, 2)]), "q_1 = (1 - y)/2");
        assert_eq!(q[2], ypoly(&[frac(1, 12), frac(1, 12)]), "q_2 = (1 + y)/12");
    }

    #[test]
    fn universal_dimension_one() {
        let g = chi_y_universal(1);
        let half_c1 = ChernPolynomial::monomial(1, p(&[1]), frac(1, 2)).unwrap();
        assert_eq!(g.chi()[0], half_c1);
        assert_eq!(g.chi()[1], -&half_c1);
    }

    #[test]
    fn universal_dimension_two() {
        // ((1+y)^2/12)(c_1^2 - 2 c_2) + ((1-y)^2/4) c_2
        let g = chi_y_universal(2);
        let expected_chi0 = ChernPolynomial::from_terms(
            2,
            vec![(p(&[1, 1]), frac(1, 12)), (p(&[2]), frac(1, 12))],
        )
        .unwrap();
        let expected_chi1 = ChernPolynomial::from_terms(
            2,
            vec![(p(&[1, 1]), frac(1, 6)), (p(&[2]), frac(-5, 6))],
        )
        .unwrap();
        assert_eq!(g.chi()[0], expected_chi0);
        assert_eq!(g.chi()[1], expected_chi1);
        assert_eq!(g.chi()[2], expected_chi0);
    }

    #[test]
    fn chi_p_accessor() {
        let todd = chi_p(2, 0).unwrap();
        assert_eq!(
            todd,
            ChernPolynomial::from_terms(
                2,
                vec![(p(&[1, 1]), frac(1, 12)), (p(&[2]), frac(1, 12))]
            )
            .unwrap()
        );
        assert!(chi_p(2, 3).is_err());
        // sign fixed by chi^1(CP^2) = -1
        let cp2 = ManifoldChernData::projective_space(2);
        assert_eq!(chi_p(2, 1).unwrap().evaluate(&cp2).unwrap(), rat(-1));
    }

    #[test]
    fn duality_and_euler_collapse() {
        for n in 1..=8 {
            let g = chi_y_universal(n);
            assert!(g.satisfies_duality(), "duality at n = {n}");
            let euler = g.euler_polynomial();
            let top = ChernPolynomial::monomial(n, Partition::single(n as u32), rat(1)).unwrap();
            assert_eq!(euler, top, "Euler collapse at n = {n}");
        }
    }

    #[test]
    fn projective_space_genus() {
        for n in 1..=10 {
            let cp = ManifoldChernData::projective_space(n);
            let genus = evaluate_genus(&cp).unwrap();
            for pidx in 0..=n {
                let expected = if pidx % 2 == 0 { rat(1) } else { rat(-1) };
                assert_eq!(genus.chi(pidx), &expected, "chi^{pidx}(CP^{n})");
            }
        }
    }

    #[test]
    fn evaluated_genus_examples() {
        let cp2 = ManifoldChernData::projective_space(2);
        let g = evaluate_genus(&cp2).unwrap();
        assert_eq!(g.to_ypoly(), ypoly(&[rat(1), rat(-1), rat(1)]));
        assert!(g.is_integral());

        let k3 = ManifoldChernData::hypersurface(2, 4);
        let g = evaluate_genus(&k3).unwrap();
        assert_eq!(g.to_ypoly(), ypoly(&[rat(2), rat(-20), rat(2)]));

        let torus = ManifoldChernData::complex_torus(3);
        let g = evaluate_genus(&torus).unwrap();
        assert!(g.to_ypoly().is_zero());
    }

    #[test]
    fn k_table_low_entries() {
        for n in 1..=6 {
            let table = k_table(n);
            let top = Partition::single(n as u32);
            assert_eq!(
                table.entries()[0],
                ChernPolynomial::monomial(n, top.clone(), rat(1)).unwrap()
            );
            assert_eq!(
                table.entries()[1],
                ChernPolynomial::monomial(n, top, frac(-(n as i64), 2)).unwrap()
            );
        }
        // K_2 at n = 2 is (c_1^2 + c_2)/12
        let k2 = k_table(2).entries()[2].clone();
        assert_eq!(
            k2,
            ChernPolynomial::from_terms(
                2,
                vec![(p(&[1, 1]), frac(1, 12)), (p(&[2]), frac(1, 12))]
            )
            .unwrap()
        );
    }

    #[test]
    fn k_table_is_consistent_with_genus() {
        // Σ_j K_j (y+1)^j re-expanded in y must reproduce χ_y, i.e.
        // χ^p = Σ_j C(j,p) K_j.
        for n in 1..=10 {
            let genus = chi_y_universal(n);
            let table = k_table(n);
            for pidx in 0..=n {
                let mut acc = ChernPolynomial::zero(n);
                for j in pidx..=n {
                    acc = &acc + &table.entries()[j].scale(&binomial(j, pidx));
                }
                assert_eq!(acc, genus.chi()[pidx], "n = {n}, p = {pidx}");
            }
        }
    }

    #[test]
    fn closed_forms_match() {
        for n in [1, 2, 3, 4, 6, 10] {
            let report = verify_k_closed_forms(n);
            assert!(
                report.all_match(),
                "closed forms disagree at n = {n}: {:?}",
                report
                    .checks
                    .iter()
                    .filter(|c| !c.matches)
                    .map(|c| (c.j, c.discrepancy.to_string()))
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn odd_dependence() {
        for n in 1..=10 {
            let relations = odd_k_dependence(n).unwrap();
            // K_1 = (-n/2) K_0 always
            assert_eq!(relations[0].coefficients, vec![frac(-(n as i64), 2)]);
        }
        // n = 4: K_3 = K_0 - K_2
        let relations = odd_k_dependence(4).unwrap();
        assert_eq!(relations[1].coefficients, vec![rat(1), rat(-1)]);
    }

    #[test]
    fn support_patterns() {
        assert!(k_support(6, 2)
            .unwrap()
            .is_subset(&[1u32, 5, 6].into_iter().collect()));
        assert!(k_support(8, 4)
            .unwrap()
            .is_subset(&[1u32, 2, 3, 5, 6, 7, 8].into_iter().collect()));
        assert_eq!(
            k_support(4, 0).unwrap(),
            [4u32].into_iter().collect::<BTreeSet<_>>()
        );
        assert!(k_support(4, 3).is_err(), "odd index rejected");
        assert!(k_support(4, 6).is_err(), "j > n rejected");
        for n in 1..=9 {
            for i in 0..=(n / 2) {
                let j = 2 * i;
                assert!(
                    k_support(n, j).unwrap().is_subset(&k_support_bound(n, j)),
                    "support bound fails at n = {n}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let cp2 = ManifoldChernData::projective_space(2);
        let table = k_table(2);
        assert_eq!(table.entries()[0].evaluate(&cp2).unwrap(), rat(3));
        assert_eq!(table.entries()[2].evaluate(&cp2).unwrap(), rat(1));
        let torus = ManifoldChernData::complex_torus(2);
        for entry in table.entries() {
            assert_eq!(entry.evaluate(&torus).unwrap(), rat(0));
        }
        // dimension mismatch is rejected
        assert!(table.entries()[0]
            .evaluate(&ManifoldChernData::complex_torus(3))
            .is_err());
    }

    #[test]
    fn cpn_bound_identity() {
        // (-1)^j K_j(CP^n) = Σ_{p=j}^n C(p,j) = C(n+1, j+1)
        for n in 1..=10 {
            let cp = ManifoldChernData::projective_space(n);
            let table = k_table(n);
            for j in 0..=n {
                let value = table.entries()[j].evaluate(&cp).unwrap();
                let signed = if j % 2 == 0 { value.clone() } else { -&value };
                let sum: Rational = (j..=n).map(|pp| binomial(pp, j)).sum();
                assert_eq!(signed, sum, "sum form at n = {n}, j = {j}");
                assert_eq!(signed, binomial(n + 1, j + 1), "binomial form");
            }
        }
    }

    #[test]
    fn genus_is_multiplicative_on_products() {
        let cp1 = ManifoldChernData::projective_space(1);
        let cp2 = ManifoldChernData::projective_space(2);
        let t1 = ManifoldChernData::complex_torus(1);
        for (a, b) in [(&cp1, &cp1), (&cp1, &cp2), (&t1, &t1)] {
            let prod = ManifoldChernData::product(a, b).unwrap();
            let lhs = evaluate_genus(&prod).unwrap().to_ypoly();
            let rhs = &evaluate_genus(a).unwrap().to_ypoly()
                * &evaluate_genus(b).unwrap().to_ypoly();
            assert_eq!(lhs, rhs, "{} x {}", a.name(), b.name());
        }
    }

    #[test]
    fn ball_quotient_k_values() {
        // K_j(B^n/Gamma) = (-1)^n K_j(CP^n)
        for n in 2..=4 {
            let ball = ManifoldChernData::ball_quotient(n);
            let cp = ManifoldChernData::projective_space(n);
            let table = k_table(n);
            let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
            for entry in table.entries() {
                assert_eq!(
                    entry.evaluate(&ball).unwrap(),
                    sign.clone() * entry.evaluate(&cp).unwrap()
                );
            }
        }
    }

    #[test]
    fn cache_is_safe_under_concurrent_use() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| chi_y_universal(6)))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for g in &results[1..] {
            assert_eq!(g.chi(), results[0].chi());
        }
    }

    #[test]
    fn k2_on_cp2_matches_taylor_expansion() {
        // 1 - y + y^2 expanded at y = -1 is 3 - 3(y+1) + (y+1)^2
        let cp2 = ManifoldChernData::projective_space(2);
        let table = k_table(2);
        let values: Vec<Rational> = table
            .entries()
            .iter()
            .map(|k| k.evaluate(&cp2).unwrap())
            .collect();
        assert_eq!(values, vec![rat(3), rat(-3), rat(1)]);
    }
}

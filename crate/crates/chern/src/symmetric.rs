//! Conversion between the monomial and elementary bases of symmetric
//! functions.
//!
//! The elementary symmetric polynomials of the Chern roots are the Chern
//! classes, so expressing a monomial symmetric function `m_λ` through
//! products `e_{μ_1}···e_{μ_k}` is exactly what turns a genus integrand
//! into a polynomial in Chern numbers.
//!
//! The transition matrix from products of elementary symmetric polynomials
//! to the monomial basis is built combinatorially (repeated multiplication
//! by `e_k` in the monomial basis) and inverted exactly; both directions
//! are cached per weight.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::chern_poly::ChernPolynomial;
use crate::error::Error;
use crate::linalg::{self, Matrix};
use crate::partition::{partitions, Partition};
use crate::rational::{binomial, Rational};

/// Symmetric polynomial of one fixed weight, stored in the monomial basis.
type MonomialBasis = BTreeMap<Partition, Rational>;

/// Multiplies a weight-`d` symmetric polynomial by `e_k`, staying in the
/// monomial basis with `nvars` variables.
///
/// The coefficient of `m_ν` in `f·e_k` is a sum over the ways to pick the
/// `k` variables contributing the `e_k` factor: group the entries of `ν`
/// (padded with zeros to `nvars`) by value, choose how many of each
/// positive group to decrement, and read off `f`'s coefficient at the
/// decremented exponent pattern.
fn multiply_by_elementary(f: &MonomialBasis, d: usize, k: usize, nvars: usize) -> MonomialBasis {
    let mut out = MonomialBasis::new();
    for nu in partitions(d + k) {
        if nu.len() > nvars {
            continue;
        }
        // groups of equal entries in nu padded to nvars slots
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &part in nu.parts() {
            match groups.last_mut() {
                Some((v, count)) if *v == part => *count += 1,
                _ => groups.push((part, 1)),
            }
        }
        let zeros = nvars - nu.len();
        if zeros > 0 {
            groups.push((0, zeros));
        }
        let mut coeff = Rational::zero();
        let mut picks = vec![0usize; groups.len()];
        enumerate_picks(&groups, 0, k, &mut picks, &mut |picks| {
            let mut decremented: Vec<u32> = Vec::with_capacity(nvars);
            let mut ways = Rational::one();
            for (gi, &(value, count)) in groups.iter().enumerate() {
                let t = picks[gi];
                ways *= binomial(count, t);
                for _ in 0..t {
                    decremented.push(value - 1);
                }
                for _ in t..count {
                    decremented.push(value);
                }
            }
            let key = Partition::from_unsorted(decremented);
            if let Some(c) = f.get(&key) {
                coeff += ways * c;
            }
        });
        if !coeff.is_zero() {
            out.insert(nu, coeff);
        }
    }
    out
}

/// Walks all ways to take `remaining` decrements from the positive-value
/// groups, at most `count` from each.
fn enumerate_picks(
    groups: &[(u32, usize)],
    idx: usize,
    remaining: usize,
    picks: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx == groups.len() {
        if remaining == 0 {
            visit(picks);
        }
        return;
    }
    let (value, count) = groups[idx];
    let max = if value == 0 { 0 } else { count.min(remaining) };
    for t in 0..=max {
        picks[idx] = t;
        enumerate_picks(groups, idx + 1, remaining - t, picks, visit);
    }
    picks[idx] = 0;
}

/// Expansion of the product `e_{μ_1}···e_{μ_k}` in the monomial basis.
fn elementary_product(mu: &Partition, nvars: usize) -> MonomialBasis {
    let mut f = MonomialBasis::new();
    f.insert(Partition::empty(), Rational::one());
    let mut weight = 0usize;
    for &part in mu.parts() {
        f = multiply_by_elementary(&f, weight, part as usize, nvars);
        weight += part as usize;
    }
    f
}

struct Transition {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    e_to_m: Matrix,
    m_to_e: Matrix,
}

fn transition_cache() -> &'static RwLock<HashMap<usize, Arc<Transition>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Computation is idempotent, so a duplicated build under contention is
/// harmless; last writer wins.
fn transition(w: usize) -> Arc<Transition> {
    assert!(w >= 1, "weight must be at least 1");
    if let Some(t) = transition_cache().read().unwrap().get(&w) {
        return t.clone();
    }
    let parts = partitions(w);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let e_to_m: Matrix = parts
        .iter()
        .map(|mu| {
            let expansion = elementary_product(mu, w);
            parts
                .iter()
                .map(|lambda| expansion.get(lambda).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let m_to_e = linalg::invert(&e_to_m)
        .expect("elementary-to-monomial transition matrix is invertible over Q");
    let t = Arc::new(Transition {
        parts,
        index,
        e_to_m,
        m_to_e,
    });
    transition_cache().write().unwrap().insert(w, t.clone());
    t
}

/// Matrix whose `(μ, λ)` entry is the coefficient of `m_λ` in
/// `e_{μ_1}···e_{μ_k}`, rows and columns indexed by `partitions(w)` in
/// canonical order. Requires `w >= 1`.
pub fn elementary_to_monomial_matrix(w: usize) -> Matrix {
    transition(w).e_to_m.clone()
}

/// Exact inverse of [`elementary_to_monomial_matrix`]: the `(λ, μ)` entry
/// is the coefficient of `e_{μ_1}···e_{μ_k}` in the expansion of `m_λ`.
pub fn monomial_to_elementary_matrix(w: usize) -> Matrix {
    transition(w).m_to_e.clone()
}

/// Expands the monomial symmetric polynomial `m_λ(x_1,…,x_n)` in the
/// elementary symmetric polynomials, relabelled as Chern classes. Requires
/// `weight(λ) = n`.
pub fn monomial_to_elementary(lambda: &Partition, n: usize) -> Result<ChernPolynomial, Error> {
    if lambda.weight() != n {
        return Err(Error::WeightMismatch {
            weight: lambda.weight(),
            dim: n,
        });
    }
    let t = transition(n);
    let row = &t.m_to_e[t.index[lambda]];
    ChernPolynomial::from_terms(
        n,
        t.parts
            .iter()
            .zip(row)
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, c)| (mu.clone(), c.clone())),
    )
}

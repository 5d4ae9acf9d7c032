//! Independent verification of the symmetric-function basis conversion.
//!
//! Three routes that never touch the library's own expansion code:
//!
//! 1. explicit polynomial expansion in `w` variables (exponent-vector
//!    maps): products of elementary symmetric polynomials and monomial
//!    symmetric polynomials are expanded from scratch and compared;
//! 2. a row-by-row count of 0-1 matrices with prescribed row and column
//!    sums, which is what the coefficient of `m_λ` in `e_{μ_1}···e_{μ_k}`
//!    counts;
//! 3. the exact product of the two transition matrices, which must be the
//!    identity.

use std::collections::HashMap;

use chern::partition::{partitions, Partition};
use chern::rational::{rat, Rational};
use chern::symmetric::{
    elementary_to_monomial_matrix, monomial_to_elementary, monomial_to_elementary_matrix,
};
use num_traits::Zero;

/// Dense-exponent polynomial: exponent vector (one slot per variable) to
/// integer coefficient.
type ExpPoly = HashMap<Vec<u8>, i128>;

fn poly_mul(a: &ExpPoly, b: &ExpPoly) -> ExpPoly {
    let mut out = ExpPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exp: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(exp).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `e_k(x_1..x_nvars)` by direct subset enumeration.
fn elementary_poly(k: usize, nvars: usize) -> ExpPoly {
    let mut out = ExpPoly::new();
    let mut chosen = Vec::new();
    fn subsets(
        start: usize,
        k: usize,
        nvars: usize,
        chosen: &mut Vec<usize>,
        out: &mut ExpPoly,
    ) {
        if chosen.len() == k {
            let mut exp = vec![0u8; nvars];
            for &i in chosen.iter() {
                exp[i] = 1;
            }
            out.insert(exp, 1);
            return;
        }
        for i in start..nvars {
            chosen.push(i);
            subsets(i + 1, k, nvars, chosen, out);
            chosen.pop();
        }
    }
    subsets(0, k, nvars, &mut chosen, &mut out);
    out
}

fn elementary_product_poly(mu: &Partition, nvars: usize) -> ExpPoly {
    let mut acc = ExpPoly::new();
    acc.insert(vec![0u8; nvars], 1);
    for &part in mu.parts() {
        acc = poly_mul(&acc, &elementary_poly(part as usize, nvars));
    }
    acc
}

/// `m_λ(x_1..x_nvars)`: one term per distinct permutation of the padded
/// exponent vector.
fn monomial_poly(lambda: &Partition, nvars: usize) -> ExpPoly {
    let mut padded: Vec<u8> = lambda.parts().iter().map(|&p| p as u8).collect();
    padded.resize(nvars, 0);
    padded.sort_unstable();
    let mut out = ExpPoly::new();
    loop {
        out.insert(padded.clone(), 1);
        // next lexicographic permutation of a multiset
        let Some(i) = (0..padded.len() - 1).rev().find(|&i| padded[i] < padded[i + 1]) else {
            break;
        };
        let j = (i + 1..padded.len())
            .rev()
            .find(|&j| padded[j] > padded[i])
            .unwrap();
        padded.swap(i, j);
        padded[i + 1..].reverse();
    }
    out
}

fn padded_exponent(lambda: &Partition, nvars: usize) -> Vec<u8> {
    let mut exp: Vec<u8> = lambda.parts().iter().map(|&p| p as u8).collect();
    exp.resize(nvars, 0);
    exp
}

#[test]
fn explicit_expansion_matches_matrix() {
    for w in 1..=9 {
        let parts = partitions(w);
        let matrix = elementary_to_monomial_matrix(w);
        for (r, mu) in parts.iter().enumerate() {
            let expansion = elementary_product_poly(mu, w);
            for (c, lambda) in parts.iter().enumerate() {
                let coeff = expansion
                    .get(&padded_exponent(lambda, w))
                    .copied()
                    .unwrap_or(0);
                assert_eq!(
                    matrix[r][c],
                    rat(coeff as i64),
                    "entry (e_{mu}, m_{lambda}) at w = {w}"
                );
            }
        }
    }
}

#[test]
fn explicit_monomial_reconstruction() {
    // Substituting explicit variables into monomial_to_elementary(λ, w)
    // reproduces m_λ symbol for symbol.
    for w in 1..=8 {
        let parts = partitions(w);
        for lambda in &parts {
            let combo = monomial_to_elementary(lambda, w).unwrap();
            let mut reconstructed: HashMap<Vec<u8>, Rational> = HashMap::new();
            for (mu, coeff) in combo.terms() {
                for (exp, c) in elementary_product_poly(mu, w) {
                    let entry = reconstructed.entry(exp).or_insert_with(Rational::zero);
                    *entry += coeff * rat(c as i64);
                }
            }
            reconstructed.retain(|_, c| !c.is_zero());
            let target = monomial_poly(lambda, w);
            assert_eq!(
                reconstructed.len(),
                target.len(),
                "term count for m_{lambda} at w = {w}"
            );
            for (exp, c) in &target {
                assert_eq!(
                    reconstructed.get(exp),
                    Some(&rat(*c as i64)),
                    "coefficient of {exp:?} in m_{lambda} at w = {w}"
                );
            }
        }
    }
}

/// Number of 0-1 matrices with the given row sums and column sums, counted
/// row by row. `cols` is kept sorted descending; zero columns are dropped.
fn fill_count(
    rows: &[u32],
    cols: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i128>,
) -> i128 {
    if rows.is_empty() {
        return i128::from(cols.iter().all(|&c| c == 0));
    }
    let key = (rows.to_vec(), cols.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rows[0] as usize;
    // group the remaining column sums by value
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &c in cols {
        match groups.last_mut() {
            Some((v, n)) if *v == c => *n += 1,
            _ => groups.push((c, 1)),
        }
    }
    let mut total = 0i128;
    let mut picks = vec![0usize; groups.len()];
    fn walk(
        groups: &[(u32, usize)],
        idx: usize,
        remaining: usize,
        picks: &mut Vec<usize>,
        rows: &[u32],
        memo: &mut HashMap<(Vec<u32>, Vec<u32>), i128>,
        total: &mut i128,
    ) {
        if idx == groups.len() {
            if remaining != 0 {
                return;
            }
            let mut ways = 1i128;
            let mut next_cols: Vec<u32> = Vec::new();
            for (g, &(value, count)) in groups.iter().enumerate() {
                let t = picks[g];
                ways *= binom_i128(count, t);
                for _ in 0..t {
                    if value > 1 {
                        next_cols.push(value - 1);
                    }
                }
                for _ in t..count {
                    next_cols.push(value);
                }
            }
            next_cols.sort_unstable_by(|a, b| b.cmp(a));
            *total += ways * fill_count(&rows[1..], &next_cols, memo);
            return;
        }
        let (value, count) = groups[idx];
        let max = if value == 0 { 0 } else { count.min(remaining) };
        for t in 0..=max {
            picks[idx] = t;
            walk(groups, idx + 1, remaining - t, picks, rows, memo, total);
        }
        picks[idx] = 0;
    }
    walk(&groups, 0, r, &mut picks, rows, memo, &mut total);
    memo.insert(key, total);
    total
}

fn binom_i128(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let mut acc = 1i128;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

#[test]
fn fill_count_matches_matrix_up_to_twelve() {
    let mut memo = HashMap::new();
    for w in 1..=12 {
        let parts = partitions(w);
        let matrix = elementary_to_monomial_matrix(w);
        for (r, mu) in parts.iter().enumerate() {
            for (c, lambda) in parts.iter().enumerate() {
                let count = fill_count(mu.parts(), lambda.parts(), &mut memo);
                assert_eq!(
                    matrix[r][c],
                    rat(count as i64),
                    "0-1 matrix count differs at w={w}, mu={mu}, lambda={lambda}"
                );
            }
        }
    }
}

#[test]
fn transition_matrices_are_exact_inverses() {
    for w in 1..=12 {
        let a = elementary_to_monomial_matrix(w);
        let b = monomial_to_elementary_matrix(w);
        let size = a.len();
        for i in 0..size {
            for j in 0..size {
                let mut acc = Rational::zero();
                for (k, b_row) in b.iter().enumerate() {
                    acc += &a[i][k] * &b_row[j];
                }
                let expected = if i == j { rat(1) } else { rat(0) };
                assert_eq!(acc, expected, "product entry ({i},{j}) at w = {w}");
            }
        }
    }
}

#[test]
fn membership_example_from_the_expansion() {
    // e_2 e_1 in three variables expands to m_(2,1) + 3 m_(1,1,1); the
    // inverse direction must therefore subtract the cube term.
    let mu = Partition::new(vec![2, 1]).unwrap();
    let expansion = elementary_product_poly(&mu, 3);
    assert_eq!(expansion.get(&vec![2, 1, 0]).copied(), Some(1));
    assert_eq!(expansion.get(&vec![1, 1, 1]).copied(), Some(3));
}

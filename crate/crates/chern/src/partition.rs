//! Integer partitions.
//!
//! Partitions index the Chern monomials `c_λ = c_{λ_1} ··· c_{λ_k}`. The
//! canonical order everywhere in this crate is reverse-lexicographic, e.g.
//! for weight 4: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. [`Ord`] on
//! [`Partition`] follows that order, so sorted containers iterate canonically.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// A weakly decreasing sequence of positive integers. The empty partition
/// (weight 0) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let ok = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::BadPartition { parts })
        }
    }

    /// Sorts `parts` descending and drops zeros. Total weight is preserved
    /// only if all entries are nonnegative, which the type guarantees.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Partition with a single part, e.g. the top Chern class `c_n`.
    pub fn single(part: u32) -> Self {
        assert!(part >= 1);
        Partition(vec![part])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts, usually written `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses the descriptor key syntax: comma-separated weakly decreasing
    /// positive integers, e.g. `"2,1,1"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadDescriptor(format!("malformed partition key {s:?}"));
        let parts: Vec<u32> = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        Partition::new(parts).map_err(|_| {
            Error::BadDescriptor(format!(
                "partition key {s:?} is not weakly decreasing positive"
            ))
        })
    }
}

impl Ord for Partition {
    /// Reverse-lexicographic: `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// All partitions of weight `w` in canonical (reverse-lexicographic) order.
/// `partitions(0)` is `[()]`.
pub fn partitions(w: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(w, w.min(u32::MAX as usize) as u32, &mut current, &mut out);
    out
}

fn descend(remaining: usize, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    let hi = max_part.min(remaining as u32);
    for part in (1..=hi).rev() {
        current.push(part);
        descend(remaining - part as usize, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn empty_weight() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn weight_four_in_canonical_order() {
        let expected = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(partitions(4), expected);
        let mut sorted = partitions(4);
        sorted.sort();
        assert_eq!(sorted, partitions(4), "Ord matches enumeration order");
    }

    /// Independent counting oracle: Euler's pentagonal number recurrence
    /// p(n) = Σ_k (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
    fn pentagonal_count(n: usize) -> i64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * p[m - g1 as usize];
                if g2 as usize <= m {
                    total += sign * p[m - g2 as usize];
                }
                k += 1;
            }
            p[m] = total;
        }
        p[n]
    }

    #[test]
    fn counts_match_pentagonal_oracle() {
        assert_eq!(partitions(10).len(), 42);
        for w in 0..=15 {
            assert_eq!(partitions(w).len() as i64, pentagonal_count(w), "w = {w}");
        }
    }

    #[test]
    fn parse_keys() {
        assert_eq!(Partition::parse("2,1,1").unwrap(), p(&[2, 1, 1]));
        assert_eq!(Partition::parse("7").unwrap(), p(&[7]));
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("2,0").is_err());
        assert!(Partition::parse("a,b").is_err());
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3, 1]), p(&[3, 1, 1]));
    }
}

//! Integer partitions: enumeration, conjugation, ordering and scalar observables.
//!
//! A [`Partition`] stores its positive parts in nonincreasing order with no
//! trailing zeros, so structural equality is equality of partitions.
//! The canonical vertex order used throughout the crate is decreasing
//! lexicographic order of part sequences: `(n)` comes first, `(1^n)` last.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on `n` accepted by [`enumerate_partitions`].
pub const DEFAULT_CAP: u32 = 40;

/// A partition of a nonnegative integer, parts nonincreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

/// Height and support of a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionObservables {
    pub height: u64,
    pub support: u32,
}

impl Partition {
    /// Validates `parts` as a nonincreasing sequence of positive integers.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} contains a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not nonincreasing"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Builds a partition from arbitrary nonnegative parts: zeros are dropped
    /// and the rest sorted into nonincreasing order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    /// The one-row partition `(n)`.
    pub fn single_row(n: u32) -> Self {
        Self::hook(n, 0)
    }

    /// The one-column partition `(1^n)`.
    pub fn single_column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
            n,
        }
    }

    /// The hook `(n-k, 1^k)`. Requires `k < n` (or `n = 0`).
    pub fn hook(n: u32, k: u32) -> Self {
        assert!(n == 0 || k < n, "hook (n-k,1^k) needs k < n");
        if n == 0 {
            return Partition {
                parts: Vec::new(),
                n: 0,
            };
        }
        let mut parts = Vec::with_capacity(k as usize + 1);
        parts.push(n - k);
        parts.extend(std::iter::repeat_n(1, k as usize));
        Partition { parts, n }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of positive parts, `ℓ(λ)`.
    pub fn support(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `Σ i·λ_i` with 1-based indices.
    pub fn height(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (i as u64 + 1) * p as u64)
            .sum()
    }

    pub fn observables(&self) -> PartitionObservables {
        PartitionObservables {
            height: self.height(),
            support: self.support(),
        }
    }

    /// Transpose of the Ferrers diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest_part();
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts, n: self.n }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// `λ_i` with a zero beyond the last part (0-based index).
    fn part_or_zero(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }
}

/// Compares part sequences position by position, absent parts read as 0.
///
/// Only defined between partitions of the same integer.
pub fn lex_compare(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.n != b.n {
        return Err(Error::MismatchedN {
            left: a.n,
            right: b.n,
        });
    }
    Ok(a.cmp(b))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.parts.len().max(other.parts.len());
        (0..len)
            .map(|i| self.part_or_zero(i).cmp(&other.part_or_zero(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of `n` in decreasing lexicographic order, capped at
/// [`DEFAULT_CAP`].
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    enumerate_partitions_capped(n, DEFAULT_CAP)
}

pub fn enumerate_partitions_capped(n: u32, cap: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    if n > cap {
        return Err(Error::NAboveCap { n, cap });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n as usize);
    descend(n, n, &mut prefix, &mut out, n);
    Ok(out)
}

// Emits partitions of `remaining` with parts ≤ `max_part`, largest first part first.
fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>, n: u32) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
            n,
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out, n);
        prefix.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[a,b,...]`, whitespace allowed anywhere between tokens.
    fn from_str(s: &str) -> Result<Self> {
        let syntax = |reason: &str| Error::PartitionSyntax {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| syntax("expected brackets around comma-separated parts"))?;
        if inner.trim().is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| syntax(&format!("bad part {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| syntax(&e.to_string()))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_small_cases() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p(&[1])]);
        assert_eq!(
            enumerate_partitions(4).unwrap(),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
        assert_eq!(enumerate_partitions(10).unwrap().len(), 42);
        assert_eq!(enumerate_partitions(12).unwrap().len(), 77);
    }

    #[test]
    fn enumeration_rejects_bad_n() {
        assert_eq!(enumerate_partitions(0), Err(Error::ZeroN));
        assert_eq!(
            enumerate_partitions(41),
            Err(Error::NAboveCap { n: 41, cap: 40 })
        );
        assert!(enumerate_partitions_capped(41, 50).is_ok());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert!(p(&[2, 1]).is_self_conjugate());
    }

    #[test]
    fn heights() {
        assert_eq!(p(&[6]).height(), 6);
        assert_eq!(Partition::single_column(6).height(), 21);
        assert_eq!(p(&[2, 1, 1]).height(), 7);
    }

    #[test]
    fn lex_order() {
        assert_eq!(
            lex_compare(&p(&[4]), &p(&[3, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            lex_compare(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(),
            Ordering::Greater
        );
        assert!(lex_compare(&p(&[2, 2]), &p(&[3])).is_err());
        let mut all = enumerate_partitions(4).unwrap();
        all.reverse();
        all.sort_by(|a, b| b.cmp(a));
        assert_eq!(all, enumerate_partitions(4).unwrap());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(" [ 3 , 1 ] ".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("[3,0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[3,x]".parse::<Partition>().is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3]), p(&[3, 1]));
    }

    #[test]
    fn hooks() {
        assert_eq!(Partition::hook(5, 2), p(&[3, 1, 1]));
        assert_eq!(Partition::single_row(3), p(&[3]));
    }
}

//! Integer partitions, the index set of every polynomial family here.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing tuple of nonnegative integers with trailing zeros removed.
///
/// Ordering is by weight first, then lexicographic on the parts, so iteration
/// over ordered maps visits low degrees first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, rejecting increasing sequences.
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(alloc::format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self::from_sorted(parts.to_vec()))
    }

    /// Sorts the parts; useful for exponent vectors of symmetric monomials.
    pub fn from_unsorted(parts: &[usize]) -> Self {
        let mut v = parts.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(v)
    }

    fn from_sorted(mut v: Vec<usize>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self.part(i)).collect()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.len() > rank {
            Err(Error::PartitionTooLong {
                partition: self.clone(),
                len: self.len(),
                rank,
            })
        } else {
            Ok(())
        }
    }

    /// Young diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ≤ other` (same weight assumed by callers).
    pub fn is_dominated_by(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `self + ε_j` (0-based `j`) if it is still a partition.
    pub fn add_box(&self, j: usize) -> Option<Partition> {
        if j > 0 && self.part(j - 1) == self.part(j) {
            return None;
        }
        let mut v = self.padded(self.len().max(j + 1));
        v[j] += 1;
        Some(Self::from_sorted(v))
    }

    /// `self - ε_j` (0-based `j`) if it is still a partition.
    pub fn remove_box(&self, j: usize) -> Option<Partition> {
        if self.part(j) == 0 || self.part(j + 1) == self.part(j) {
            return None;
        }
        let mut v = self.0.clone();
        v[j] -= 1;
        Some(Self::from_sorted(v))
    }

    /// All partitions of `weight` with at most `max_len` parts, in
    /// lexicographically decreasing order (a linear extension of dominance).
    pub fn all_of_weight(weight: usize, max_len: usize) -> Vec<Partition> {
        fn rec(rem: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(weight, weight, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with weight at most `max_weight` and at most `max_len` parts.
    pub fn all_up_to(max_weight: usize, max_len: usize) -> Vec<Partition> {
        (0..=max_weight)
            .flat_map(|w| Self::all_of_weight(w, max_len))
            .collect()
    }

    /// All `k ⊆ self`, ordered by weight.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(m: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == m.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in 0..=m[i].min(cap) {
                cur.push(p);
                rec(m, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// `(1^k)`, written ⟨k⟩ in the moment formulas.
    pub fn column(k: usize) -> Partition {
        Partition(alloc::vec![1; k])
    }

    /// Rectangle `(n^k)`.
    pub fn rectangle(n: usize, k: usize) -> Partition {
        Self::from_sorted(alloc::vec![n; k])
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl core::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `"2,1"`, `"(2,1,0)"`, `"[2, 1]"` or an empty string.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(alloc::format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(&[$($p),+]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Partition::new(&[2, 1, 0, 0]).unwrap(), part![2, 1]);
        assert!(Partition::new(&[1, 2]).is_err());
        assert_eq!("(3,0)".parse::<Partition>().unwrap(), part![3]);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(alloc::format!("{}", part![2, 1]), "(2,1)");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Partition::all_of_weight(4, 4).len(), 5);
        assert_eq!(Partition::all_of_weight(4, 2).len(), 3);
        assert_eq!(Partition::all_of_weight(0, 3), alloc::vec![Partition::empty()]);
        assert_eq!(Partition::all_up_to(4, 3).len(), 1 + 1 + 2 + 3 + 4);
        let lex = Partition::all_of_weight(5, 5);
        assert!(lex.windows(2).all(|w| w[0].parts() > w[1].parts()));
    }

    #[test]
    fn boxes_and_containment() {
        let m = part![2, 2];
        assert_eq!(m.add_box(1), None);
        assert_eq!(m.add_box(2), Some(part![2, 2, 1]));
        assert_eq!(m.remove_box(0), None);
        assert_eq!(m.remove_box(1), Some(part![2, 1]));
        assert_eq!(m.subpartitions().len(), 6);
        assert!(part![2, 1].is_contained_in(&m));
        assert!(!part![3].is_contained_in(&m));
        assert!(part![2, 1, 1].is_dominated_by(&part![2, 2]));
        assert!(!part![3, 1].is_dominated_by(&part![2, 2]));
    }

    #[test]
    fn ordering_weight_first() {
        assert!(part![5] < part![1, 1, 1, 1, 1, 1]);
        assert!(part![2, 1] < part![3]);
    }
}

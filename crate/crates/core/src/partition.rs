//! Integer partitions and Young's lattice.
//!
//! Partitions are stored with zero parts stripped, so `(2,1,0)` and `(2,1)`
//! are the same value. Set-valued operations return deterministically sorted
//! lists (reverse-lexicographic for partitions of a fixed size).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping zero parts. Fails unless the remaining
    /// parts are weakly decreasing.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but also rejects negative entries.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if let Some(&neg) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::NegativePart(neg));
        }
        Self::new(parts.iter().map(|&p| p as usize))
    }

    /// Sorts arbitrary positive parts into a partition; used for p-monomial keys.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    /// `(1^n)`
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(n)`, or `∅` when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Diagram containment `self ≤ other` in Young's lattice.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Number of distinct part values; equals the number of removable corners.
    pub fn distinct_parts(&self) -> usize {
        let mut v = self.parts.clone();
        v.dedup();
        v.len()
    }

    /// All `μ ⋖ λ`, in reverse-lexicographic order.
    pub fn covers_down(&self) -> Vec<Partition> {
        let r = self.length();
        let mut out = Vec::new();
        for i in 0..r {
            if i + 1 == r || self.parts[i] > self.parts[i + 1] {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// All `γ ⋗ λ`, in reverse-lexicographic order.
    pub fn covers_up(&self) -> Vec<Partition> {
        let r = self.length();
        let mut out = Vec::new();
        for i in 0..=r {
            if i == 0 || self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                if i == r {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Hook length at the 1-based cell `(i, j)`.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || j == 0 || j > self.part(i) {
            return Err(Error::CellNotInDiagram { row: i, col: j });
        }
        let leg = self.parts.iter().skip(i).take_while(|&&p| p >= j).count();
        Ok(self.part(i) - j + leg + 1)
    }

    /// All cells `(i, j)` of the diagram in row-major order, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| self.part(i) - j + conj.part(j) - i + 1)
            .collect()
    }

    /// `H(λ)`, the product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        self.hook_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * h)
    }

    /// `(λ_r, λ_{r-1} + 1, …, λ_1 + r - 1)`
    pub fn degree_vector(&self) -> Vec<usize> {
        let r = self.length();
        (1..=r).map(|i| self.part(r + 1 - i) + i - 1).collect()
    }

    /// Number of standard Young tableaux via the hook formula `|λ|!/H(λ)`.
    pub fn syt_count(&self) -> BigUint {
        factorial(self.size()) / self.hook_product()
    }

    /// Rim hooks `λ/μ` of size `k`, one per cell with hook length `k`.
    ///
    /// The hook attached to cell `(i, j)` has highest row `i` and leftmost
    /// column `j`; its inner shape takes `μ_s = λ_{s+1} - 1` for rows
    /// `i ≤ s < λ'_j` and `μ_{λ'_j} = j - 1`.
    pub fn rim_hooks_down(&self, k: usize) -> Vec<RimHook> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        if k == 0 {
            return out;
        }
        for (i, j) in self.cells() {
            let bottom = conj.part(j);
            if self.part(i) - j + bottom - i + 1 != k {
                continue;
            }
            let mut inner = self.parts.clone();
            for s in i..bottom {
                inner[s - 1] = self.part(s + 1) - 1;
            }
            inner[bottom - 1] = j - 1;
            inner.retain(|&p| p > 0);
            out.push(RimHook {
                outer: self.clone(),
                inner: Partition::from_parts_unchecked(inner),
                size: k,
                height: bottom - i,
            });
        }
        out.sort_unstable_by(|a, b| b.inner.cmp(&a.inner));
        out
    }

    /// Rim hooks `γ/λ` of size `k`, found by sliding one bead of the
    /// `(ℓ(λ)+k)`-bead abacus `k` positions up. The height is the number of
    /// beads jumped over.
    pub fn rim_hooks_up(&self, k: usize) -> Vec<RimHook> {
        let mut out = Vec::new();
        if k == 0 {
            return out;
        }
        let m = self.length() + k;
        let beta: Vec<usize> = (1..=m).map(|i| self.part(i) + m - i).collect();
        for (idx, &b) in beta.iter().enumerate() {
            let target = b + k;
            if beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&c| c > b && c < target).count();
            let mut moved = beta.clone();
            moved[idx] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(i, &c)| c - (m - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            out.push(RimHook {
                outer: Partition::from_parts_unchecked(parts),
                inner: self.clone(),
                size: k,
                height,
            });
        }
        out.sort_unstable_by(|a, b| b.outer.cmp(&a.outer));
        out
    }
}

impl fmt::Display for Partition {
    /// `(5,3,2)`, with `∅` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"5,3,2"`; the empty string, `"0"` and `"∅"` give `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_signed(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A rim hook `outer/inner`: a connected skew shape with no 2×2 square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RimHook {
    pub outer: Partition,
    pub inner: Partition,
    pub size: usize,
    /// Number of rows occupied, minus one.
    pub height: usize,
}

impl RimHook {
    /// `(-1)^height`
    pub fn sign(&self) -> i64 {
        if self.height.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// `Δ(n) = ∏_{i<j} (n_j - n_i)`
pub fn vandermonde(values: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i + 1..] {
            acc *= BigInt::from(b) - BigInt::from(a);
        }
    }
    acc
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max`, grouped by size and reverse-lex within a size.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

/// `F_{λ/μ}`: saturated chains from `μ` up to `λ`, counted by memoised
/// recursion over the interval `[μ, λ]`.
pub fn skew_syt_count(outer: &Partition, inner: &Partition) -> BigUint {
    fn chains(
        nu: &Partition,
        inner: &Partition,
        memo: &mut HashMap<Partition, BigUint>,
    ) -> BigUint {
        if nu == inner {
            return BigUint::one();
        }
        if nu.size() <= inner.size() {
            return BigUint::default();
        }
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        let mut total = BigUint::default();
        for below in nu.covers_down() {
            if inner.is_contained_in(&below) {
                total += chains(&below, inner, memo);
            }
        }
        memo.insert(nu.clone(), total.clone());
        total
    }
    if !inner.is_contained_in(outer) {
        return BigUint::default();
    }
    chains(outer, inner, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn construction_strips_zeros_and_rejects_bad_input() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(Partition::from_signed(&[3, -1]), Err(Error::NegativePart(-1)));
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::NotDecreasing(_))
        ));
        let e = Partition::empty();
        assert_eq!((e.size(), e.length()), (0, 0));
    }

    #[test]
    fn parsing() {
        assert_eq!("5,3,2".parse::<Partition>().unwrap(), p(&[5, 3, 2]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("1,-2".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[4, 3, 2]).conjugate(), p(&[3, 3, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        for n in 0..=20 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn covers() {
        assert_eq!(p(&[2, 1]).covers_down(), vec![p(&[2]), p(&[1, 1])]);
        assert!(Partition::empty().covers_down().is_empty());
        assert_eq!(p(&[1, 1, 1]).covers_down(), vec![p(&[1, 1])]);

        assert_eq!(Partition::empty().covers_up(), vec![p(&[1])]);
        assert_eq!(p(&[2]).covers_up(), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(
            p(&[2, 1]).covers_up(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        for n in 0..=9 {
            for lam in partitions_of(n) {
                assert_eq!(lam.covers_up().len(), lam.distinct_parts() + 1);
                assert_eq!(lam.covers_down().len(), lam.distinct_parts());
            }
        }
    }

    #[test]
    fn hooks() {
        let lam = p(&[5, 3, 2]);
        assert_eq!(lam.hook_length(1, 1).unwrap(), 7);
        assert_eq!(lam.hook_length(2, 2).unwrap(), 3);
        assert_eq!(p(&[1]).hook_length(1, 1).unwrap(), 1);
        assert_eq!(
            lam.hook_length(2, 4),
            Err(Error::CellNotInDiagram { row: 2, col: 4 })
        );
        assert!(lam.hook_length(0, 1).is_err());
        assert_eq!(lam.hook_product(), BigUint::from(8064u32));
        assert_eq!(Partition::empty().hook_product(), BigUint::one());
        assert_eq!(p(&[2, 1]).hook_product(), BigUint::from(3u32));
    }

    #[test]
    fn hook_lengths_match_arm_leg_count() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                let conj = lam.conjugate();
                for ((i, j), h) in lam.cells().zip(lam.hook_lengths()) {
                    let arm = (j + 1..=lam.part(i)).count();
                    let leg = (i + 1..=conj.part(j)).count();
                    assert_eq!(h, arm + leg + 1);
                    assert_eq!(lam.hook_length(i, j).unwrap(), h);
                }
            }
        }
    }

    #[test]
    fn degree_vectors_and_vandermonde() {
        assert_eq!(p(&[4, 3, 2]).degree_vector(), vec![2, 4, 6]);
        assert_eq!(p(&[7]).degree_vector(), vec![7]);
        assert_eq!(p(&[1, 1, 1]).degree_vector(), vec![1, 2, 3]);
        assert_eq!(vandermonde(&[2, 4, 6]), BigInt::from(16));
        assert_eq!(vandermonde(&[5]), BigInt::one());
        assert_eq!(vandermonde(&[]), BigInt::one());
        assert_eq!(vandermonde(&[1, 2, 3]), BigInt::from(2));
        for n in 0..=9 {
            for lam in partitions_of(n) {
                assert!(lam.degree_vector().windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn syt_counts() {
        for n in 0..8 {
            assert_eq!(Partition::column(n).syt_count(), BigUint::one());
        }
        assert_eq!(p(&[2, 1]).syt_count(), BigUint::from(2u32));
        assert_eq!(p(&[5, 3, 2]).syt_count(), BigUint::from(450u32));
    }

    #[test]
    fn skew_counts() {
        assert_eq!(
            skew_syt_count(&p(&[2, 1]), &Partition::empty()),
            BigUint::from(2u32)
        );
        assert_eq!(skew_syt_count(&p(&[2, 1]), &p(&[1])), BigUint::from(2u32));
        assert_eq!(skew_syt_count(&p(&[3, 1]), &p(&[3, 1])), BigUint::one());
        assert_eq!(skew_syt_count(&p(&[2, 1]), &p(&[3])), BigUint::default());
        // every tableau of (3,2) starts at (1)
        assert_eq!(skew_syt_count(&p(&[3, 2]), &p(&[1])), BigUint::from(5u32));
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(5).len(), 7);
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        for n in 0..=10 {
            let all = partitions_of(n);
            assert!(all.windows(2).all(|w| w[0] > w[1]));
        }
    }

    /// Brute force: every μ ⊆ λ with |λ/μ| = k whose skew cells are
    /// edge-connected and free of 2×2 squares.
    fn rim_hooks_brute(lam: &Partition, k: usize) -> BTreeSet<(Partition, usize)> {
        let mut out = BTreeSet::new();
        if k > lam.size() {
            return out;
        }
        for mu in partitions_of(lam.size() - k) {
            if !mu.is_contained_in(lam) {
                continue;
            }
            let cells: BTreeSet<(usize, usize)> = lam
                .cells()
                .filter(|&(i, j)| j > mu.part(i))
                .collect();
            let square = cells.iter().any(|&(i, j)| {
                cells.contains(&(i + 1, j))
                    && cells.contains(&(i, j + 1))
                    && cells.contains(&(i + 1, j + 1))
            });
            if square {
                continue;
            }
            let start = *cells.iter().next().unwrap();
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some((i, j)) = stack.pop() {
                let nbrs = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
                for c in nbrs {
                    if cells.contains(&c) && seen.insert(c) {
                        stack.push(c);
                    }
                }
            }
            if seen.len() != cells.len() {
                continue;
            }
            let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
            out.insert((mu, rows.len() - 1));
        }
        out
    }

    #[test]
    fn rim_hook_examples() {
        let down = p(&[5, 3, 2]).rim_hooks_down(1);
        assert_eq!(down.len(), 3);
        assert!(down.iter().all(|h| h.height == 0));
        assert!(p(&[2, 1]).rim_hooks_down(2).is_empty());
        let single = p(&[2]).rim_hooks_down(2);
        assert_eq!(single.len(), 1);
        assert_eq!((single[0].inner.clone(), single[0].height), (Partition::empty(), 0));

        let up = Partition::empty().rim_hooks_up(2);
        let got: Vec<_> = up.iter().map(|h| (h.outer.clone(), h.height)).collect();
        assert_eq!(got, vec![(p(&[2]), 0), (p(&[1, 1]), 1)]);
        let got: Vec<_> = Partition::empty()
            .rim_hooks_up(1)
            .iter()
            .map(|h| (h.outer.clone(), h.height))
            .collect();
        assert_eq!(got, vec![(p(&[1]), 0)]);
        let got: Vec<_> = p(&[1])
            .rim_hooks_up(1)
            .iter()
            .map(|h| (h.outer.clone(), h.height))
            .collect();
        assert_eq!(got, vec![(p(&[2]), 0), (p(&[1, 1]), 0)]);
    }

    #[test]
    fn rim_hooks_down_match_brute_force() {
        // The figure for (5,3,2): sizes 1,1,1,2,2 at height 0, then 3,3,4 at
        // height 1 and 6,7 at height 2.
        let heights: Vec<(usize, usize)> = (1..=10)
            .flat_map(|k| p(&[5, 3, 2]).rim_hooks_down(k))
            .map(|h| (h.size, h.height))
            .collect();
        let mut sorted = heights.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![(1, 0), (1, 0), (1, 0), (2, 0), (2, 0), (3, 1), (4, 1), (4, 1), (6, 2), (7, 2)]
        );
        for n in 0..=8 {
            for lam in partitions_of(n) {
                for k in 1..=n {
                    let fast: BTreeSet<_> = lam
                        .rim_hooks_down(k)
                        .into_iter()
                        .map(|h| (h.inner, h.height))
                        .collect();
                    assert_eq!(fast, rim_hooks_brute(&lam, k), "{lam} k={k}");
                }
            }
        }
    }

    #[test]
    fn up_and_down_are_inverse() {
        for n in 0..=8 {
            for mu in partitions_of(n) {
                for k in 1..=4 {
                    for hook in mu.rim_hooks_up(k) {
                        assert_eq!(hook.outer.size(), n + k);
                        let back = hook.outer.rim_hooks_down(k);
                        assert!(back.contains(&hook), "{} / {mu}", hook.outer);
                    }
                    for hook in mu.rim_hooks_down(k) {
                        assert!(hook.inner.rim_hooks_up(k).contains(&hook));
                    }
                }
            }
        }
    }

    #[test]
    fn size_one_rim_hooks_are_covers() {
        for n in 0..=9 {
            for lam in partitions_of(n) {
                let down: Vec<_> = lam.rim_hooks_down(1).into_iter().map(|h| h.inner).collect();
                assert_eq!(down, lam.covers_down());
                let up: Vec<_> = lam.rim_hooks_up(1).into_iter().map(|h| h.outer).collect();
                assert_eq!(up, lam.covers_up());
            }
        }
    }
}

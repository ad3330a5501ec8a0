//! Integer partitions and skew shapes.
//!
//! Partitions are stored as weakly decreasing vectors of positive parts, row 0
//! being the longest row. The derived `Ord` is lexicographic on the parts, so
//! sorting in descending order yields reverse-lexicographic order
//! (`5 > 41 > 32 > 311 > ...`).

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`partitions_of`].
pub const DEFAULT_PARTITION_BOUND: usize = 64;

/// Largest size for which factorial-based counts are computed in 64 bits.
pub const FACTORIAL_BOUND: usize = 20;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

/// True iff `s` is weakly decreasing with no zero entry.
pub fn is_partition(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[0] >= w[1]) && s.last() != Some(&0)
}

impl Partition {
    /// Builds a partition, stripping trailing zeros first.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if is_partition(&parts) {
            Ok(Partition { parts })
        } else {
            Err(Error::NotAPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition {
            parts: if n == 0 { vec![] } else { vec![n] },
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (0..first)
            .map(|i| self.parts.iter().take_while(|&&p| p > i).count())
            .collect();
        Partition { parts }
    }

    /// `self ⊆ outer` as Ferrers diagrams.
    pub fn is_included_in(&self, outer: &Partition) -> bool {
        included(self, outer)
    }

    /// Multiplicity `m_i` of each part size `i`, indexed from 0.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Cells `(row, col)` of the Ferrers diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col < self[row]
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    /// Rows past the end read as 0.
    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Error from parsing the comma-separated partition format.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParsePartitionError {
    #[error("malformed number {0:?}")]
    BadNumber(String),
    #[error("zero part")]
    ZeroPart,
    #[error("not weakly decreasing")]
    NotDecreasing,
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| ParsePartitionError::BadNumber(tok.to_string()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(ParsePartitionError::ZeroPart);
        }
        if !is_partition(&parts) {
            return Err(ParsePartitionError::NotDecreasing);
        }
        Ok(Partition { parts })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for literal partitions in tests and examples. Panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($x),+]).expect("valid partition literal")
    };
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_bounded(n, DEFAULT_PARTITION_BOUND)
}

pub fn partitions_of_bounded(n: usize, bound: usize) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "partitions_of",
            got: n,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(n, n, &mut cur, &mut out);
    Ok(out)
}

fn gen_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        gen_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions included in `outer`, in reverse-lexicographic order.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if row >= outer.len() {
            return;
        }
        for p in 1..=max.min(outer[row]) {
            cur.push(p);
            go(outer, row + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 0, outer[0], &mut Vec::new(), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn included(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(i, o)| i <= o)
}

/// True iff every prefix sum of `p` is at least the matching prefix sum of `q`.
pub fn dominates(p: &Partition, q: &Partition) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch {
            left: p.size(),
            right: q.size(),
        });
    }
    let (mut sp, mut sq) = (0, 0);
    for i in 0..p.len().max(q.len()) {
        sp += p[i];
        sq += q[i];
        if sp < sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewShape {
    inner: Partition,
    outer: Partition,
}

impl SkewShape {
    pub fn new(inner: Partition, outer: Partition) -> Result<Self> {
        if !included(&inner, &outer) {
            return Err(Error::NotIncluded(inner.to_string(), outer.to_string()));
        }
        Ok(SkewShape { inner, outer })
    }

    /// A straight shape seen as `shape / ()`.
    pub fn straight(shape: Partition) -> Self {
        SkewShape {
            inner: Partition::empty(),
            outer: shape,
        }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// Number of rows, including rows of the skew shape that are empty.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Length of skew row `r` (`outer_r - inner_r`).
    pub fn row_len(&self, r: usize) -> usize {
        self.outer[r] - self.inner[r]
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.num_rows()).map(|r| self.row_len(r)).collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.inner[row] <= col && col < self.outer[row]
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

pub fn skew_size(s: &SkewShape) -> usize {
    s.size()
}

/// Hook length `arm + leg + 1` of every cell, row by row.
pub fn hook_lengths(p: &Partition) -> Vec<Vec<usize>> {
    let conj = p.conjugate();
    p.parts
        .iter()
        .enumerate()
        .map(|(r, &len)| (0..len).map(|c| (len - c - 1) + (conj[c] - r - 1) + 1).collect())
        .collect()
}

fn factorial(n: usize) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow("factorial")))
}

fn check_factorial_bound(what: &'static str, n: usize) -> Result<()> {
    if n > FACTORIAL_BOUND {
        return Err(Error::BoundExceeded {
            what,
            got: n,
            bound: FACTORIAL_BOUND,
        });
    }
    Ok(())
}

/// Number of standard tableaux of shape `p`, by the hook-length formula.
pub fn count_syt(p: &Partition) -> Result<u64> {
    check_factorial_bound("count_syt", p.size())?;
    let n_fact = factorial(p.size())?;
    let hooks = hook_lengths(p)
        .iter()
        .flatten()
        .try_fold(1u64, |acc, &h| acc.checked_mul(h as u64))
        .ok_or(Error::Overflow("count_syt"))?;
    debug_assert_eq!(n_fact % hooks, 0);
    Ok(n_fact / hooks)
}

/// `z_mu = prod_i i^{m_i} m_i!`, the centralizer order of cycle type `mu`.
pub fn centralizer_order(mu: &Partition) -> Result<u64> {
    check_factorial_bound("centralizer_order", mu.size())?;
    let overflow = || Error::Overflow("centralizer_order");
    let mut z = 1u64;
    for (i, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        let pow = (i as u64).checked_pow(m as u32).ok_or_else(overflow)?;
        z = z.checked_mul(pow).ok_or_else(overflow)?;
        z = z.checked_mul(factorial(m)?).ok_or_else(overflow)?;
    }
    Ok(z)
}

/// Size `n!/z_mu` of the conjugacy class of cycle type `mu`.
pub fn class_size(mu: &Partition) -> Result<u64> {
    Ok(factorial(mu.size())? / centralizer_order(mu)?)
}

/// All ways to remove a `k`-ribbon from `p`: pairs `(q, height)` with `p/q` a
/// ribbon of `k` cells spanning `height + 1` rows.
///
/// Works on the beta-set `{p_i + (L - 1 - i)}`: removing a ribbon of size `k`
/// moves one bead from `b` to a free position `b - k`, and the height is the
/// number of beads jumped over. Results come in reverse-lexicographic order.
pub fn removable_ribbons(p: &Partition, k: usize) -> Vec<(Partition, usize)> {
    if k == 0 {
        return Vec::new();
    }
    let len = p.len();
    let beta: Vec<usize> = (0..len).map(|i| p[i] + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let Some(target) = b.checked_sub(k) else { continue };
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
        out.push((Partition::new(parts).expect("bead moves preserve partitions"), height));
    }
    out.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    out
}

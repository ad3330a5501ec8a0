//! Irreducible characters of the symmetric groups via the Murnaghan-Nakayama rule.
//!
//! Characters are evaluated on cycle types; [`cycle_type`] is the only link
//! from group elements to the class functions computed here.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, removable_ribbons, Partition};

/// Largest `n` accepted by [`char_table`] and [`first_column`].
pub const CHAR_TABLE_BOUND: usize = 12;

/// Value `chi^lambda(mu)` of an irreducible character.
pub type CharacterValue = i64;

/// A permutation of `0..n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= seen.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degrees");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }
}

/// Cycle lengths of `p`, fixed points included, in decreasing order.
pub fn cycle_type(p: &Permutation) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p.images[i];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lengths).expect("cycle lengths are positive")
}

/// Memoised Murnaghan-Nakayama evaluator for a fixed cycle type `mu`.
/// Ribbons of size `mu_0, mu_1, ...` are peeled in that order, largest first.
struct MnEvaluator<'a> {
    mu: &'a Partition,
    memo: HashMap<(Partition, usize), i64>,
}

impl MnEvaluator<'_> {
    fn eval(&mut self, lambda: &Partition, idx: usize) -> Result<i64> {
        if idx == self.mu.len() {
            return Ok(i64::from(lambda.is_empty()));
        }
        let key = (lambda.clone(), idx);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let mut total = 0i64;
        for (q, height) in removable_ribbons(lambda, self.mu[idx]) {
            let v = self.eval(&q, idx + 1)?;
            let signed = if height % 2 == 0 { Some(v) } else { v.checked_neg() };
            total = signed
                .and_then(|s| total.checked_add(s))
                .ok_or(Error::Overflow("mn_coeff"))?;
        }
        self.memo.insert(key, total);
        Ok(total)
    }
}

/// `chi^lambda` evaluated on the class of cycle type `mu`.
pub fn mn_coeff(lambda: &Partition, mu: &Partition) -> Result<CharacterValue> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    MnEvaluator {
        mu,
        memo: HashMap::new(),
    }
    .eval(lambda, 0)
}

/// Character table of the symmetric group on `n` points. Rows (`lambda`) and
/// columns (`mu`) both run over the partitions of `n` in reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharTable {
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<CharacterValue>>,
}

impl CharTable {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<CharacterValue> {
        let r = self.partitions.iter().position(|p| p == lambda)?;
        let c = self.partitions.iter().position(|p| p == mu)?;
        Some(self.values[r][c])
    }
}

fn check_table_bound(what: &'static str, n: usize) -> Result<()> {
    if n > CHAR_TABLE_BOUND {
        return Err(Error::BoundExceeded {
            what,
            got: n,
            bound: CHAR_TABLE_BOUND,
        });
    }
    Ok(())
}

pub fn char_table(n: usize) -> Result<CharTable> {
    check_table_bound("char_table", n)?;
    let partitions = partitions_of(n)?;
    let mut values = vec![vec![0; partitions.len()]; partitions.len()];
    // one memo per column: subproblems depend on the remaining parts of mu
    for (c, mu) in partitions.iter().enumerate() {
        let mut eval = MnEvaluator {
            mu,
            memo: HashMap::new(),
        };
        for (r, lambda) in partitions.iter().enumerate() {
            values[r][c] = eval.eval(lambda, 0)?;
        }
    }
    Ok(CharTable { partitions, values })
}

/// `chi^lambda(1^n)`, the degree of the irreducible representation.
pub fn first_column(lambda: &Partition) -> Result<CharacterValue> {
    check_table_bound("first_column", lambda.size())?;
    mn_coeff(lambda, &Partition::column(lambda.size()))
}

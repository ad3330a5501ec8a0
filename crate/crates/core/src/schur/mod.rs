//! Schur functions: monomial expansions, Kostka numbers, Littlewood-Richardson
//! coefficients, Schur products and the Pieri rules.

mod lr;
mod monomial;
mod pieri;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{is_partition, Partition};
use crate::tableau::{enum_ssyt, enum_ssyt_content, SSYT_BOUND};
use crate::word::evaluation;

pub use lr::{lr_coeff, lr_coeff_slow, lr_enum_yam, schur_product, schur_product_threads, PRODUCT_BOUND};
pub use monomial::{monomial_product_oracle, schur_polynomial, Polynomial, MONOMIAL_ORACLE_BOUND};
pub use pieri::{pieri_col, pieri_row};

/// Linear combination of Schur functions `s_lambda`, all of one degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A single `s_lambda`.
    pub fn basis(lambda: Partition) -> Self {
        let mut e = Self::zero(lambda.size());
        e.terms.insert(lambda, 1);
        e
    }

    /// Builds an expansion from `(partition, coefficient)` pairs, summing repeats.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut e = Self::zero(degree);
        for (p, c) in terms {
            e.add_term(p, c)?;
        }
        Ok(e)
    }

    pub fn add_term(&mut self, p: Partition, c: i64) -> Result<()> {
        if p.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: p.size(),
                right: self.degree,
            });
        }
        add_checked(&mut self.terms, p, c, "schur expansion")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in reverse-lexicographic order of the partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Linear combination of monomial symmetric polynomials `m_lambda` in `num_vars` variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MonomialExpansion {
    degree: usize,
    num_vars: usize,
    terms: BTreeMap<Partition, i64>,
}

impl MonomialExpansion {
    pub fn zero(degree: usize, num_vars: usize) -> Self {
        MonomialExpansion {
            degree,
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coeff(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in reverse-lexicographic order of the partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn add_checked(terms: &mut BTreeMap<Partition, i64>, p: Partition, c: i64, what: &'static str) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    let entry = terms.entry(p);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().checked_add(c).ok_or(Error::Overflow(what))?;
            if sum == 0 {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
    Ok(())
}

pub(crate) fn to_i64(x: u64, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

/// Expansion of `s_lambda(x_0, ..., x_{n-1})` in the monomial basis. The
/// coefficient of `m_mu` counts the tableaux of shape `lambda` and evaluation `mu`.
pub fn schur_to_monomial(lambda: &Partition, num_vars: usize) -> Result<MonomialExpansion> {
    if lambda.size() > SSYT_BOUND {
        return Err(Error::BoundExceeded {
            what: "schur_to_monomial",
            got: lambda.size(),
            bound: SSYT_BOUND,
        });
    }
    let mut out = MonomialExpansion::zero(lambda.size(), num_vars);
    if lambda.len() > num_vars {
        return Ok(out);
    }
    if lambda.is_empty() {
        out.terms.insert(Partition::empty(), 1);
        return Ok(out);
    }
    // a partition evaluation never uses a letter beyond |lambda| - 1
    let max_letter = num_vars.min(lambda.size()) - 1;
    for t in enum_ssyt(lambda, max_letter)? {
        let eval = evaluation(&t.to_word());
        if is_partition(&eval) {
            let p = Partition::new(eval).expect("checked");
            add_checked(&mut out.terms, p, 1, "schur_to_monomial")?;
        }
    }
    Ok(out)
}

/// Number of semistandard tableaux of shape `lambda` and evaluation `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(enum_ssyt_content(lambda, mu.parts())?.len() as u64)
}

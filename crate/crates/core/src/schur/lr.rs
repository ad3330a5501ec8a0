//! Littlewood-Richardson coefficients.
//!
//! `C_{inner, mu}^{outer}` counts the skew tableaux of shape `outer/inner` whose
//! row reading is a Yamanouchi word of evaluation `mu`. The fast routines fill
//! cells in reverse reading order (bottom row first, each row right to left), so
//! the letters placed so far are always a suffix of the reading word and the
//! Yamanouchi condition is one comparison per placement.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{to_i64, SchurExpansion};
use crate::error::{Error, Result};
use crate::partition::{included, Partition, SkewShape};
use crate::tableau::is_skew_reshape_tableau;
use crate::word::{enum_yameval, Letter, Word};

/// Largest `|lambda| + |mu|` accepted by [`schur_product`].
pub const PRODUCT_BOUND: usize = 40;

fn check_lr_input(outer: &Partition, inner: &Partition, mu: &Partition) -> Result<()> {
    if outer.size() != inner.size() + mu.size() {
        return Err(Error::SizeMismatch {
            left: outer.size(),
            right: inner.size() + mu.size(),
        });
    }
    if !included(inner, outer) {
        return Err(Error::NotIncluded(inner.to_string(), outer.to_string()));
    }
    Ok(())
}

/// Yamanouchi words of evaluation `mu` that are row readings of skew tableaux
/// of shape `outer/inner`, in lexicographic order. Filters the whole of
/// [`enum_yameval`], so it is only meant for small `mu`.
pub fn lr_enum_yam(outer: &Partition, inner: &Partition, mu: &Partition) -> Result<Vec<Word>> {
    check_lr_input(outer, inner, mu)?;
    Ok(enum_yameval(mu)?
        .into_iter()
        .filter(|w| is_skew_reshape_tableau(inner, outer, w))
        .collect())
}

/// Definitional coefficient: the number of words returned by [`lr_enum_yam`].
pub fn lr_coeff_slow(outer: &Partition, inner: &Partition, mu: &Partition) -> Result<u64> {
    Ok(lr_enum_yam(outer, inner, mu)?.len() as u64)
}

/// Per-cell data for the fixed-shape search, cells in reverse reading order.
struct Cell {
    /// Index of the cell immediately to the right, if it is in the skew shape.
    right: Option<usize>,
    /// Index of the cell immediately below, if it is in the skew shape.
    below: Option<usize>,
}

struct FixedShapeSearch<'a> {
    cells: Vec<Cell>,
    mu: &'a [usize],
    vals: Vec<Letter>,
    counts: Vec<usize>,
}

impl FixedShapeSearch<'_> {
    fn count(&mut self, i: usize) -> Result<u64> {
        if i == self.cells.len() {
            return Ok(1);
        }
        let cell = &self.cells[i];
        let hi = match cell.right {
            Some(j) => self.vals[j],
            None => self.mu.len() - 1,
        };
        let lo = cell.below.map_or(0, |j| self.vals[j] + 1);
        let mut total = 0u64;
        for x in lo..=hi {
            if self.counts[x] == self.mu[x] || (x > 0 && self.counts[x] == self.counts[x - 1]) {
                continue;
            }
            self.counts[x] += 1;
            self.vals[i] = x;
            let sub = self.count(i + 1);
            self.counts[x] -= 1;
            total = total.checked_add(sub?).ok_or(Error::Overflow("lr_coeff"))?;
        }
        Ok(total)
    }
}

/// `C_{inner, mu}^{outer}` by backtracking. Returns 0 when the sizes do not add
/// up or `inner` is not included in `outer`.
pub fn lr_coeff(outer: &Partition, inner: &Partition, mu: &Partition) -> Result<u64> {
    if outer.size() != inner.size() + mu.size() || !included(inner, outer) || !included(mu, outer) {
        return Ok(0);
    }
    if mu.is_empty() {
        return Ok(1);
    }
    let shape = SkewShape::new(inner.clone(), outer.clone())?;
    let mut index = BTreeMap::new();
    let mut cells = Vec::with_capacity(shape.size());
    for r in 0..shape.num_rows() {
        for c in (inner[r]..outer[r]).rev() {
            index.insert((r, c), cells.len());
            cells.push(Cell {
                right: index.get(&(r, c + 1)).copied(),
                below: if r > 0 { index.get(&(r - 1, c)).copied() } else { None },
            });
        }
    }
    let mut search = FixedShapeSearch {
        vals: vec![0; cells.len()],
        cells,
        mu: mu.parts(),
        counts: vec![0; mu.len()],
    };
    search.count(0)
}

/// Search for all `nu` at once: rows of `nu/lambda` are chosen bottom-up,
/// first their length, then their letters right to left.
struct ProductSearch<'a> {
    lambda: &'a Partition,
    mu: &'a [usize],
    counts: Vec<usize>,
    remaining: usize,
    /// Letters of each completed skew row of `nu/lambda`.
    rows: Vec<Word>,
    /// `nu_r` for each completed row.
    nu: Vec<usize>,
    found: BTreeMap<Partition, u64>,
}

impl ProductSearch<'_> {
    fn new<'a>(lambda: &'a Partition, mu: &'a Partition) -> ProductSearch<'a> {
        ProductSearch {
            lambda,
            mu: mu.parts(),
            counts: vec![0; mu.len()],
            remaining: mu.size(),
            rows: Vec::new(),
            nu: Vec::new(),
            found: BTreeMap::new(),
        }
    }

    fn record(&mut self) -> Result<()> {
        let r = self.nu.len();
        let mut parts = self.nu.clone();
        parts.extend(self.lambda.parts().iter().skip(r));
        let nu = Partition::new(parts).expect("rows stay weakly decreasing");
        let c = self.found.entry(nu).or_insert(0);
        *c = c.checked_add(1).ok_or(Error::Overflow("schur_product"))?;
        Ok(())
    }

    /// Choices of length for row `r = self.nu.len()`.
    fn row_lengths(&self) -> std::ops::RangeInclusive<usize> {
        let r = self.nu.len();
        let room = match r {
            0 => self.remaining,
            _ => self.nu[r - 1] - self.lambda[r],
        };
        // an empty row above the last row of lambda ends the shape
        let min = usize::from(r >= self.lambda.len());
        min..=room.min(self.remaining)
    }

    fn next_row(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return self.record();
        }
        for len in self.row_lengths() {
            self.start_row(len)?;
        }
        Ok(())
    }

    fn start_row(&mut self, len: usize) -> Result<()> {
        let mut row = vec![0; len];
        self.fill(&mut row, len)
    }

    /// Fills `row[..j]` right to left, then moves to the next row.
    fn fill(&mut self, row: &mut Word, j: usize) -> Result<()> {
        let r = self.nu.len();
        if j == 0 {
            self.remaining -= row.len();
            self.nu.push(self.lambda[r] + row.len());
            self.rows.push(row.clone());
            let res = self.next_row();
            self.rows.pop();
            self.nu.pop();
            self.remaining += row.len();
            return res;
        }
        let i = j - 1;
        let col = self.lambda[r] + i;
        let hi = if i + 1 < row.len() { row[i + 1] } else { self.mu.len() - 1 };
        let lo = match r {
            0 => 0,
            _ if col >= self.lambda[r - 1] => self.rows[r - 1][col - self.lambda[r - 1]] + 1,
            _ => 0,
        };
        for x in lo..=hi {
            if self.counts[x] == self.mu[x] || (x > 0 && self.counts[x] == self.counts[x - 1]) {
                continue;
            }
            self.counts[x] += 1;
            row[i] = x;
            let res = self.fill(row, i);
            self.counts[x] -= 1;
            res?;
        }
        Ok(())
    }

    fn into_expansion(self, degree: usize) -> Result<SchurExpansion> {
        let mut e = SchurExpansion::zero(degree);
        for (nu, c) in self.found {
            e.add_term(nu, to_i64(c, "schur_product")?)?;
        }
        Ok(e)
    }
}

fn check_product_bound(lambda: &Partition, mu: &Partition) -> Result<usize> {
    let degree = lambda.size() + mu.size();
    if degree > PRODUCT_BOUND {
        return Err(Error::BoundExceeded {
            what: "schur_product",
            got: degree,
            bound: PRODUCT_BOUND,
        });
    }
    Ok(degree)
}

/// `s_lambda * s_mu` expanded in the Schur basis.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    let degree = check_product_bound(lambda, mu)?;
    let mut search = ProductSearch::new(lambda, mu);
    search.next_row()?;
    search.into_expansion(degree)
}

/// [`schur_product`] with the bottom-row branches spread over `threads` workers.
/// Partial results are merged in key order, so the output does not depend on
/// scheduling.
pub fn schur_product_threads(lambda: &Partition, mu: &Partition, threads: usize) -> Result<SchurExpansion> {
    if threads <= 1 || mu.is_empty() {
        return schur_product(lambda, mu);
    }
    let degree = check_product_bound(lambda, mu)?;
    let lengths: Vec<usize> = ProductSearch::new(lambda, mu).row_lengths().collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let partials: Vec<Result<BTreeMap<Partition, u64>>> = pool.install(|| {
        lengths
            .par_iter()
            .map(|&len| {
                let mut search = ProductSearch::new(lambda, mu);
                search.start_row(len)?;
                Ok(search.found)
            })
            .collect()
    });
    let mut merged: BTreeMap<Partition, u64> = BTreeMap::new();
    for partial in partials {
        for (nu, c) in partial? {
            let slot = merged.entry(nu).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow("schur_product"))?;
        }
    }
    let mut e = SchurExpansion::zero(degree);
    for (nu, c) in merged {
        e.add_term(nu, to_i64(c, "schur_product")?)?;
    }
    Ok(e)
}

//! Semistandard, standard and skew tableaux.
//!
//! Rows are stored bottom row first (French convention): row 0 is the longest
//! and every higher row strictly dominates the row below it. The row reading
//! is the concatenation of the rows from the top one down.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::word::{Letter, Word};

/// Largest shape size accepted by [`enum_ssyt`].
pub const SSYT_BOUND: usize = 12;
/// Largest shape size accepted by [`enum_syt`].
pub const SYT_BOUND: usize = 9;

pub fn is_row(u: &[Letter]) -> bool {
    u.windows(2).all(|w| w[0] <= w[1])
}

/// `u` dominates `v`: `u` is no longer than `v` and strictly larger columnwise.
pub fn row_dominates(u: &[Letter], v: &[Letter]) -> bool {
    u.len() <= v.len() && u.iter().zip(v).all(|(a, b)| a > b)
}

pub fn is_tableau(rows: &[Word]) -> bool {
    rows.iter().all(|r| !r.is_empty() && is_row(r))
        && rows.windows(2).all(|w| row_dominates(&w[1], &w[0]))
}

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Word>,
}

impl Tableau {
    pub fn new(rows: Vec<Word>) -> Result<Self> {
        if is_tableau(&rows) {
            Ok(Tableau { rows })
        } else {
            Err(Error::NotATableau)
        }
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Word>) -> Self {
        debug_assert!(is_tableau(&rows), "{rows:?}");
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Word> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows shrink upward")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn to_word(&self) -> Word {
        to_word(&self.rows)
    }

    /// Letters `0..n` each appear exactly once.
    pub fn is_standard(&self) -> bool {
        let mut seen = vec![false; self.size()];
        self.rows.iter().flatten().all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }
}

impl fmt::Display for Tableau {
    /// One row per line, bottom row first, letters comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{}", crate::word::format_word(row))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Row reading: rows concatenated from the top row down.
pub fn to_word(rows: &[Word]) -> Word {
    rows.iter().rev().flatten().copied().collect()
}

/// A filling of a skew shape. Row `r` holds the `outer_r - inner_r` letters of
/// that row, possibly none.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Word>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Word>) -> Result<Self> {
        if is_skew_tableau(&shape, &rows)? {
            Ok(SkewTableau { shape, rows })
        } else {
            Err(Error::NotATableau)
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn to_word(&self) -> Word {
        to_word(&self.rows)
    }
}

/// Rows weakly increasing and columns strict, with row `r` starting at column `inner_r`.
pub fn is_skew_tableau(shape: &SkewShape, rows: &[Word]) -> Result<bool> {
    if rows.len() != shape.num_rows() || rows.iter().enumerate().any(|(r, row)| row.len() != shape.row_len(r)) {
        return Err(Error::ShapeMismatch);
    }
    Ok(skew_rows_valid(shape.inner(), rows))
}

/// Semistandard check of `rows` against the inner offsets, lengths already known to fit.
pub(crate) fn skew_rows_valid(inner: &Partition, rows: &[Word]) -> bool {
    if !rows.iter().all(|r| is_row(r)) {
        return false;
    }
    for r in 1..rows.len() {
        let (below, here) = (&rows[r - 1], &rows[r]);
        let (below_start, start) = (inner[r - 1], inner[r]);
        for (i, &x) in here.iter().enumerate() {
            let col = start + i;
            if col >= below_start {
                // the cell below lies in the skew shape since outer_{r-1} >= outer_r
                if x <= below[col - below_start] {
                    return false;
                }
            }
        }
    }
    true
}

/// Cuts `w` into the rows of `outer/inner`, the last segment becoming row 0,
/// so that [`to_word`] gives `w` back. The result is not checked for being a tableau.
pub fn skew_reshape_rows(inner: &Partition, outer: &Partition, w: &[Letter]) -> Result<Vec<Word>> {
    let shape = SkewShape::new(inner.clone(), outer.clone())?;
    if w.len() != shape.size() {
        return Err(Error::LengthMismatch {
            expected: shape.size(),
            got: w.len(),
        });
    }
    let mut rows = vec![Vec::new(); shape.num_rows()];
    let mut pos = 0;
    for r in (0..shape.num_rows()).rev() {
        let len = shape.row_len(r);
        rows[r] = w[pos..pos + len].to_vec();
        pos += len;
    }
    Ok(rows)
}

/// Like [`skew_reshape_rows`], failing with [`Error::NotATableau`] if the
/// resulting filling is not semistandard.
pub fn skew_reshape(inner: &Partition, outer: &Partition, w: &[Letter]) -> Result<SkewTableau> {
    let rows = skew_reshape_rows(inner, outer, w)?;
    SkewTableau::new(SkewShape::new(inner.clone(), outer.clone())?, rows)
}

/// `w` is the row reading of a skew tableau of shape `outer/inner`.
pub fn is_skew_reshape_tableau(inner: &Partition, outer: &Partition, w: &[Letter]) -> bool {
    match skew_reshape_rows(inner, outer, w) {
        Ok(rows) => skew_rows_valid(inner, &rows),
        Err(_) => false,
    }
}

/// Glues the rows of `s` and `t` side by side, padding the shorter with empty rows.
pub fn join_tab(s: &Tableau, t: &SkewTableau) -> Vec<Word> {
    let n = s.rows().len().max(t.rows().len());
    (0..n)
        .map(|r| {
            let mut row = s.rows().get(r).cloned().unwrap_or_default();
            row.extend(t.rows().get(r).into_iter().flatten());
            row
        })
        .collect()
}

/// Cell-by-cell semistandard filler. Cells are visited row by row from the
/// bottom, left to right, so the left and lower neighbours are always known.
struct Filler<'a> {
    shape: &'a Partition,
    max_letter: Letter,
    remaining: Option<Vec<usize>>,
    rows: Vec<Word>,
    out: Vec<Tableau>,
}

impl Filler<'_> {
    fn fill(&mut self, row: usize, col: usize) {
        if row == self.shape.len() {
            self.out.push(Tableau::from_rows_unchecked(self.rows.clone()));
            return;
        }
        if col == self.shape[row] {
            self.fill(row + 1, 0);
            return;
        }
        let mut lo = 0;
        if col > 0 {
            lo = self.rows[row][col - 1];
        }
        if row > 0 {
            lo = lo.max(self.rows[row - 1][col] + 1);
        }
        for x in lo..=self.max_letter {
            if let Some(rem) = &mut self.remaining {
                if rem[x] == 0 {
                    continue;
                }
                rem[x] -= 1;
            }
            self.rows[row].push(x);
            self.fill(row, col + 1);
            self.rows[row].pop();
            if let Some(rem) = &mut self.remaining {
                rem[x] += 1;
            }
        }
    }
}

fn run_filler(shape: &Partition, max_letter: Letter, remaining: Option<Vec<usize>>) -> Vec<Tableau> {
    let mut filler = Filler {
        shape,
        max_letter,
        remaining,
        rows: vec![Vec::new(); shape.len()],
        out: Vec::new(),
    };
    filler.fill(0, 0);
    filler.out
}

fn check_bound(what: &'static str, got: usize, bound: usize) -> Result<()> {
    if got > bound {
        return Err(Error::BoundExceeded { what, got, bound });
    }
    Ok(())
}

/// All semistandard tableaux of `shape` with letters in `0..=max_letter`.
pub fn enum_ssyt(shape: &Partition, max_letter: Letter) -> Result<Vec<Tableau>> {
    check_bound("enum_ssyt", shape.size(), SSYT_BOUND)?;
    Ok(run_filler(shape, max_letter, None))
}

/// All semistandard tableaux of `shape` whose evaluation is `content`
/// (letter `i` used exactly `content[i]` times).
pub fn enum_ssyt_content(shape: &Partition, content: &[usize]) -> Result<Vec<Tableau>> {
    check_bound("enum_ssyt", shape.size(), SSYT_BOUND)?;
    if content.iter().sum::<usize>() != shape.size() {
        return Ok(Vec::new());
    }
    if content.is_empty() {
        return Ok(vec![Tableau::empty()]);
    }
    Ok(run_filler(shape, content.len() - 1, Some(content.to_vec())))
}

/// All standard tableaux of `shape`, labelled `0..n`.
pub fn enum_syt(shape: &Partition) -> Result<Vec<Tableau>> {
    check_bound("enum_syt", shape.size(), SYT_BOUND)?;
    let n = shape.size();
    if n == 0 {
        return Ok(vec![Tableau::empty()]);
    }
    Ok(run_filler(shape, n - 1, Some(vec![1; n])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::{count_syt, partitions_of, subpartitions};
    use crate::word::{all_words, evaluation};

    fn letters(s: &str) -> Word {
        s.bytes().map(|b| (b - b'a') as Letter).collect()
    }

    fn digits(s: &str) -> Word {
        s.bytes().map(|b| (b - b'0') as Letter).collect()
    }

    fn rs_final_p() -> Vec<Word> {
        vec![vec![0, 0, 1, 2], vec![1, 3, 3], vec![2, 4]]
    }

    #[test]
    fn row_dominance() {
        assert!(row_dominates(&[1, 3, 3], &[0, 0, 1, 2]));
        assert!(row_dominates(&[], &[4, 5]));
        assert!(!row_dominates(&[0], &[0]));
        assert!(!row_dominates(&[1, 2, 3], &[0, 1]));
    }

    #[test]
    fn is_tableau_examples() {
        assert!(is_tableau(&rs_final_p()));
        assert!(is_tableau(&[]));
        assert!(!is_tableau(&[vec![0, 1], vec![1, 1]]));
        assert!(!is_tableau(&[vec![0, 1], vec![]]));
        assert!(!is_tableau(&[vec![1, 0]]));
    }

    #[test]
    fn reading_words() {
        // the pictured filling has d above e in column 3, so only its reading is checked
        let rows = vec![letters("aabeefgh"), letters("bccdf"), letters("cdd"), letters("ff")];
        assert!(!is_tableau(&rows));
        assert_eq!(to_word(&rows), letters("ffcddbccdfaabeefgh"));
        assert_eq!(to_word(&[vec![0, 1, 1]]), [0, 1, 1]);
        assert_eq!(to_word(&rs_final_p()), [2, 4, 1, 3, 3, 0, 0, 1, 2]);
        let std = Tableau::new(vec![digits("01369"), digits("258"), digits("4"), digits("7")]).unwrap();
        assert!(std.is_standard());
        assert_eq!(std.shape(), part![5, 3, 1, 1]);
    }

    #[test]
    fn reshape_rebuilds_insertion_tableau() {
        let w = to_word(&rs_final_p());
        let t = skew_reshape(&Partition::empty(), &part![4, 3, 2], &w).unwrap();
        assert_eq!(t.rows(), rs_final_p().as_slice());
        assert!(matches!(
            skew_reshape(&Partition::empty(), &part![4, 3, 2], &w[1..]),
            Err(Error::LengthMismatch { expected: 9, got: 8 })
        ));
    }

    #[test]
    fn reshape_is_inverse_of_reading() {
        for n in 0..=8usize {
            for outer in partitions_of(n).unwrap() {
                for inner in subpartitions(&outer) {
                    let shape = SkewShape::new(inner.clone(), outer.clone()).unwrap();
                    let w: Word = (0..shape.size()).map(|i| (i * 7 + n) % 5).collect();
                    let rows = skew_reshape_rows(&inner, &outer, &w).unwrap();
                    assert_eq!(to_word(&rows), w);
                    let back = skew_reshape_rows(&inner, &outer, &to_word(&rows)).unwrap();
                    assert_eq!(back, rows);
                }
            }
        }
    }

    #[test]
    fn skew_tableau_examples() {
        let shape = SkewShape::new(part![3, 3, 1], part![5, 4, 3, 2]).unwrap();
        for rows in [
            vec![vec![0, 0], vec![1], vec![0, 0], vec![1, 2]],
            vec![vec![0, 0], vec![1], vec![0, 1], vec![0, 2]],
            vec![vec![0, 0], vec![1], vec![0, 2], vec![0, 1]],
        ] {
            assert!(is_skew_tableau(&shape, &rows).unwrap(), "{rows:?}");
            assert_eq!(evaluation(&to_word(&rows)), [4, 2, 1]);
        }
        let flat = SkewShape::new(part![2, 1], part![2, 1]).unwrap();
        assert!(is_skew_tableau(&flat, &[vec![], vec![]]).unwrap());
        let col = SkewShape::new(part![1], part![2, 2]).unwrap();
        assert!(!is_skew_tableau(&col, &[vec![3], vec![1, 3]]).unwrap());
        assert!(is_skew_tableau(&col, &[vec![3], vec![1, 4]]).unwrap());
        assert_eq!(is_skew_tableau(&col, &[vec![3]]), Err(Error::ShapeMismatch));
    }

    #[test]
    fn join_tab_picture() {
        let s = Tableau::new(vec![letters("aab"), letters("bcc"), letters("c")]).unwrap();
        let t_shape = SkewShape::new(part![3, 3, 1], part![7, 5, 3, 2]).unwrap();
        // pictured gluing; as drawn the pieces are not column-strict, so build t directly
        let t = SkewTableau {
            shape: t_shape,
            rows: vec![letters("eefg"), letters("df"), letters("dd"), letters("ff")],
        };
        let joined = join_tab(&s, &t);
        assert_eq!(joined, vec![letters("aabeefg"), letters("bccdf"), letters("cdd"), letters("ff")]);

        let none = SkewTableau::new(SkewShape::new(s.shape(), s.shape()).unwrap(), vec![vec![]; 3]).unwrap();
        assert_eq!(join_tab(&s, &none), s.rows());
    }

    #[test]
    fn join_of_larger_letters_is_tableau() {
        // s a tableau over {0,1}, t a skew tableau over {2,3} on outer/shape(s)
        for total in 0..=6usize {
            for outer in partitions_of(total).unwrap() {
                for inner in subpartitions(&outer) {
                    let shape = SkewShape::new(inner.clone(), outer.clone()).unwrap();
                    let ss = enum_ssyt(&inner, 1).unwrap();
                    let ts: Vec<Vec<Word>> = all_words(shape.size(), 2)
                        .into_iter()
                        .map(|w| w.into_iter().map(|x| x + 2).collect::<Word>())
                        .filter_map(|w| skew_reshape(&inner, &outer, &w).ok())
                        .map(|t| t.rows().to_vec())
                        .collect();
                    for s in &ss {
                        for rows in &ts {
                            let t = SkewTableau::new(shape.clone(), rows.clone()).unwrap();
                            assert!(is_tableau(&join_tab(s, &t)), "{s:?} {rows:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn schur_21_tableaux() {
        assert_eq!(enum_ssyt(&part![2, 1], 2).unwrap().len(), 8);
        assert_eq!(enum_ssyt(&part![1], 4).unwrap().len(), 5);
        assert_eq!(enum_ssyt(&Partition::empty(), 3).unwrap(), vec![Tableau::empty()]);
        assert!(enum_ssyt(&Partition::row(13), 1).is_err());
    }

    #[test]
    fn six_tableaux_of_content_0011234() {
        let pics = ["4,3,12,001", "4,2,13,001", "3,2,14,001", "4,3,11,002", "4,2,11,003", "3,2,11,004"];
        let mut expected: Vec<Tableau> = pics
            .iter()
            .map(|p| {
                let rows: Vec<Word> = p.split(',').rev().map(digits).collect();
                Tableau::new(rows).unwrap()
            })
            .collect();
        expected.sort();
        let mut got = enum_ssyt_content(&part![3, 2, 1, 1], &[2, 2, 1, 1, 1]).unwrap();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerations_are_valid() {
        for n in 0..=6 {
            for shape in partitions_of(n).unwrap() {
                for t in enum_ssyt(&shape, 2).unwrap() {
                    assert!(is_tableau(t.rows()));
                    assert_eq!(t.shape(), shape);
                }
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enum_syt(&part![2, 1]).unwrap().len(), 2);
        assert_eq!(enum_syt(&part![5]).unwrap().len(), 1);
        for n in 0..=8 {
            for p in partitions_of(n).unwrap() {
                let syt = enum_syt(&p).unwrap();
                assert!(syt.iter().all(Tableau::is_standard));
                assert_eq!(syt.len() as u64, count_syt(&p).unwrap());
            }
        }
        assert!(enum_syt(&part![5, 5]).is_err());
    }

    /// Columns read bottom to top strictly increase and rows weakly increase.
    fn cellwise_tableau(rows: &[Word]) -> bool {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens.contains(&0) || lens.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        for (r, row) in rows.iter().enumerate() {
            for c in 0..row.len() {
                if c > 0 && row[c - 1] > row[c] {
                    return false;
                }
                if r > 0 && rows[r - 1][c] >= row[c] {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn dominance_and_cell_formulations_agree() {
        for n in 0..=6 {
            for shape in partitions_of(n).unwrap() {
                for w in all_words(n, 3) {
                    let rows = skew_reshape_rows(&Partition::empty(), &shape, &w).unwrap();
                    assert_eq!(is_tableau(&rows), cellwise_tableau(&rows), "{rows:?}");
                }
            }
        }
    }
}

//! Schensted insertion and the Robinson-Schensted correspondence.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{is_row, Tableau};
use crate::word::{Letter, Word};

/// Largest word length accepted by the brute-force Greene oracles.
pub const GREENE_ORACLE_BOUND: usize = 10;

/// Inserts `l` into the row `r`: the first entry strictly larger than `l` is
/// replaced and returned, otherwise `l` is appended.
pub fn insert_row(r: &[Letter], l: Letter) -> (Word, Option<Letter>) {
    let mut row = r.to_vec();
    let bumped = insert_row_in_place(&mut row, l);
    (row, bumped)
}

fn insert_row_in_place(row: &mut Word, l: Letter) -> Option<Letter> {
    debug_assert!(is_row(row));
    let pos = row.partition_point(|&x| x <= l);
    if pos == row.len() {
        row.push(l);
        None
    } else {
        Some(std::mem::replace(&mut row[pos], l))
    }
}

/// The bottom row of `P(w)`. Its length is the longest weakly increasing
/// subsequence of `w`.
pub fn schensted_row(w: &[Letter]) -> Word {
    let mut row = Vec::new();
    for &x in w {
        insert_row_in_place(&mut row, x);
    }
    row
}

/// Insertion tableau `p` and standard recording tableau `q` of the same shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct RSPair {
    p: Tableau,
    q: Tableau,
}

impl RSPair {
    pub fn new(p: Tableau, q: Tableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::MalformedPair("P and Q have different shapes"));
        }
        if !q.is_standard() {
            return Err(Error::MalformedPair("Q is not standard"));
        }
        Ok(RSPair { p, q })
    }

    pub fn p(&self) -> &Tableau {
        &self.p
    }

    pub fn q(&self) -> &Tableau {
        &self.q
    }

    pub fn into_parts(self) -> (Tableau, Tableau) {
        (self.p, self.q)
    }
}

/// Row-inserts `x` into `rows`, bumping upward; returns the row where a box was created.
fn insert_tableau(rows: &mut Vec<Word>, mut x: Letter) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match insert_row_in_place(row, x) {
            Some(bumped) => x = bumped,
            None => return r,
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Insertion tableau only.
pub fn rs_p(w: &[Letter]) -> Tableau {
    let mut p = Vec::new();
    for &x in w {
        insert_tableau(&mut p, x);
    }
    Tableau::from_rows_unchecked(p)
}

pub fn rs(w: &[Letter]) -> RSPair {
    let mut p: Vec<Word> = Vec::new();
    let mut q: Vec<Word> = Vec::new();
    for (step, &x) in w.iter().enumerate() {
        let r = insert_tableau(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(step);
    }
    RSPair {
        p: Tableau::from_rows_unchecked(p),
        q: Tableau::from_rows_unchecked(q),
    }
}

/// The unique word whose RS pair is `pair`.
pub fn rs_inverse(pair: &RSPair) -> Result<Word> {
    let mut p: Vec<Word> = pair.p.rows().to_vec();
    let n = pair.q.size();
    // row holding each recording label
    let mut row_of = vec![0; n];
    for (r, row) in pair.q.rows().iter().enumerate() {
        for &label in row {
            row_of[label] = r;
        }
    }
    let mut w = vec![0; n];
    for label in (0..n).rev() {
        let r = row_of[label];
        let mut x = p[r].pop().ok_or(Error::MalformedPair("recording label outside P"))?;
        if p[r].is_empty() {
            if r + 1 != p.len() {
                return Err(Error::MalformedPair("Q labels do not form a growth"));
            }
            p.pop();
        }
        for row in p[..r].iter_mut().rev() {
            // rightmost entry strictly smaller than x
            let pos = row.partition_point(|&y| y < x);
            if pos == 0 {
                return Err(Error::MalformedPair("reverse bump found no smaller entry"));
            }
            x = std::mem::replace(&mut row[pos - 1], x);
        }
        w[label] = x;
    }
    Ok(w)
}

/// Sum of the first `k` rows of the shape of `P(w)`.
pub fn greene_row(w: &[Letter], k: usize) -> usize {
    rs_p(w).shape().parts().iter().take(k).sum()
}

/// Sum of the first `k` columns of the shape of `P(w)`.
pub fn greene_col(w: &[Letter], k: usize) -> usize {
    rs_p(w).shape().conjugate().parts().iter().take(k).sum()
}

/// Maximum total length of at most `k` disjoint weakly increasing subsequences,
/// by exhaustive search.
pub fn greene_row_oracle(w: &[Letter], k: usize) -> Result<usize> {
    greene_oracle(w, k, |last, x| last <= x)
}

/// Maximum total length of at most `k` disjoint strictly decreasing subsequences,
/// by exhaustive search.
pub fn greene_col_oracle(w: &[Letter], k: usize) -> Result<usize> {
    greene_oracle(w, k, |last, x| last > x)
}

/// Scans positions left to right, either skipping each one or appending it to
/// one of `k` chains. Chains are identified only by their last letter, so the
/// state is the sorted list of chain tails (`None` for a chain not yet opened);
/// results are memoised on `(position, tails)`.
fn greene_oracle(w: &[Letter], k: usize, extends: fn(Letter, Letter) -> bool) -> Result<usize> {
    if w.len() > GREENE_ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "greene oracle",
            got: w.len(),
            bound: GREENE_ORACLE_BOUND,
        });
    }
    fn best(
        w: &[Letter],
        pos: usize,
        tails: Vec<Option<Letter>>,
        extends: fn(Letter, Letter) -> bool,
        memo: &mut HashMap<(usize, Vec<Option<Letter>>), usize>,
    ) -> usize {
        if pos == w.len() {
            return 0;
        }
        if let Some(&v) = memo.get(&(pos, tails.clone())) {
            return v;
        }
        let x = w[pos];
        let mut result = best(w, pos + 1, tails.clone(), extends, memo);
        for i in 0..tails.len() {
            if i > 0 && tails[i] == tails[i - 1] {
                continue;
            }
            if tails[i].is_none_or(|t| extends(t, x)) {
                let mut next = tails.clone();
                next[i] = Some(x);
                next.sort_unstable();
                result = result.max(1 + best(w, pos + 1, next, extends, memo));
            }
        }
        memo.insert((pos, tails), result);
        result
    }
    let k = k.min(w.len());
    Ok(best(w, 0, vec![None; k], extends, &mut HashMap::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{count_syt, partitions_of};
    use crate::tableau::enum_syt;
    use crate::word::all_words;
    use std::collections::HashSet;

    fn example_word() -> Word {
        vec![0, 2, 3, 1, 0, 4, 3, 1, 2]
    }

    #[test]
    fn insert_row_examples() {
        assert_eq!(insert_row(&[0, 2, 3], 1), (vec![0, 1, 3], Some(2)));
        assert_eq!(insert_row(&[], 5), (vec![5], None));
        assert_eq!(insert_row(&[0, 1], 1), (vec![0, 1, 1], None));
        assert_eq!(insert_row(&[0, 1, 1, 2], 1), (vec![0, 1, 1, 1], Some(2)));
    }

    #[test]
    fn schensted_row_examples() {
        assert_eq!(schensted_row(&example_word()), [0, 0, 1, 2]);
        assert_eq!(schensted_row(&[0, 1, 1, 3]), [0, 1, 1, 3]);
    }

    fn longest_increasing_brute(w: &[Letter]) -> usize {
        (0u32..1 << w.len())
            .filter_map(|mask| {
                let sub: Vec<Letter> = (0..w.len()).filter(|i| mask & (1 << i) != 0).map(|i| w[i]).collect();
                is_row(&sub).then_some(sub.len())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn schensted_row_length_is_longest_increasing() {
        for len in 0..=8 {
            for w in all_words(len, 3) {
                assert_eq!(schensted_row(&w).len(), longest_increasing_brute(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn example_pair() {
        let pair = rs(&example_word());
        assert_eq!(pair.p().rows(), &[vec![0, 0, 1, 2], vec![1, 3, 3], vec![2, 4]]);
        assert_eq!(pair.q().rows(), &[vec![0, 1, 2, 5], vec![3, 6, 8], vec![4, 7]]);
        assert_eq!(rs_inverse(&pair).unwrap(), example_word());
        let empty = rs(&[]);
        assert_eq!(empty.p(), &Tableau::empty());
        assert_eq!(rs_inverse(&empty).unwrap(), Vec::<Letter>::new());
    }

    #[test]
    fn rs_is_a_bijection_on_small_words() {
        for len in 0..=6 {
            let mut seen = HashSet::new();
            for w in all_words(len, 3) {
                let pair = rs(&w);
                assert_eq!(pair.p().shape(), pair.q().shape());
                assert!(pair.q().is_standard());
                assert_eq!(rs_inverse(&pair).unwrap(), w);
                assert!(seen.insert(pair));
            }
        }
    }

    #[test]
    fn malformed_pairs_are_rejected() {
        let p = Tableau::new(vec![vec![0, 1], vec![2]]).unwrap();
        let q = Tableau::new(vec![vec![0, 1, 2]]).unwrap();
        assert!(RSPair::new(p.clone(), q).is_err());
        let q = Tableau::new(vec![vec![0, 2], vec![3]]).unwrap();
        assert_eq!(RSPair::new(p, q), Err(Error::MalformedPair("Q is not standard")));
    }

    #[test]
    fn rs_inverse_hits_every_pair() {
        // every (P, Q) with P over {0,1} and Q standard of the same shape is reached
        for n in 0..=5 {
            for shape in partitions_of(n).unwrap() {
                let ps = crate::tableau::enum_ssyt(&shape, 1).unwrap();
                for p in &ps {
                    for q in enum_syt(&shape).unwrap() {
                        let pair = RSPair::new(p.clone(), q).unwrap();
                        let w = rs_inverse(&pair).unwrap();
                        assert_eq!(rs(&w), pair);
                    }
                }
            }
        }
    }

    #[test]
    fn greene_examples() {
        let w = example_word();
        assert_eq!([1, 2, 3].map(|k| greene_row(&w, k)), [4, 7, 9]);
        assert_eq!(greene_row(&w, 0), 0);
        assert_eq!(greene_row(&w, 10), 9);
        assert_eq!(greene_col(&[3, 2, 1, 0], 1), 4);
        assert_eq!(greene_col(&[0, 1], 1), 1);
        assert_eq!(greene_row_oracle(&[0, 1, 1, 2], 1).unwrap(), 4);
        assert_eq!(greene_row_oracle(&[3, 2, 1, 0], 1).unwrap(), 1);
        assert_eq!(greene_row_oracle(&w, 2).unwrap(), 7);
        assert!(greene_row_oracle(&[0; 11], 1).is_err());
    }

    #[test]
    fn greene_matches_oracles() {
        for len in 0..=7 {
            for w in all_words(len, 3) {
                for k in 0..=3 {
                    assert_eq!(greene_row(&w, k), greene_row_oracle(&w, k).unwrap(), "{w:?} {k}");
                    assert_eq!(greene_col(&w, k), greene_col_oracle(&w, k).unwrap(), "{w:?} {k}");
                }
            }
        }
    }

    #[test]
    fn sum_of_squared_syt_counts_is_factorial() {
        let mut fact = 1u64;
        for n in 0..=8u64 {
            if n > 0 {
                fact *= n;
            }
            let total: u64 = partitions_of(n as usize)
                .unwrap()
                .iter()
                .map(|p| count_syt(p).unwrap().pow(2))
                .sum();
            assert_eq!(total, fact);
        }
    }
}

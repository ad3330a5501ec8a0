//! Words over the alphabet of nonnegative integers.

use crate::error::{Error, Result};
use crate::partition::Partition;

pub type Letter = usize;

/// A finite sequence of letters. The empty word is valid.
pub type Word = Vec<Letter>;

/// Largest `|mu|` accepted by [`enum_yameval`].
pub const DEFAULT_YAMANOUCHI_BOUND: usize = 25;

/// Occurrence counts of letters `0..=max(w)`.
pub fn evaluation(w: &[Letter]) -> Vec<usize> {
    let Some(&max) = w.iter().max() else {
        return Vec::new();
    };
    let mut counts = vec![0; max + 1];
    for &x in w {
        counts[x] += 1;
    }
    counts
}

/// Every suffix holds at least as many `k` as `k + 1`, for all `k`.
pub fn is_yamanouchi(w: &[Letter]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in w.iter().rev() {
        if counts.len() <= x {
            counts.resize(x + 1, 0);
        }
        counts[x] += 1;
        if x > 0 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// All Yamanouchi words of evaluation `mu`, in lexicographic order.
pub fn enum_yameval(mu: &Partition) -> Result<Vec<Word>> {
    enum_yameval_bounded(mu, DEFAULT_YAMANOUCHI_BOUND)
}

pub fn enum_yameval_bounded(mu: &Partition, bound: usize) -> Result<Vec<Word>> {
    if mu.size() > bound {
        return Err(Error::BoundExceeded {
            what: "enum_yameval",
            got: mu.size(),
            bound,
        });
    }
    let n = mu.size();
    let mut out = Vec::new();
    let mut word = vec![0; n];
    let mut counts = vec![0; mu.len()];
    // fill from the right, so the filled part is always a suffix
    fn go(mu: &Partition, pos: usize, word: &mut Word, counts: &mut [usize], out: &mut Vec<Word>) {
        if pos == 0 {
            out.push(word.clone());
            return;
        }
        for x in 0..counts.len() {
            if counts[x] < mu[x] && (x == 0 || counts[x] < counts[x - 1]) {
                counts[x] += 1;
                word[pos - 1] = x;
                go(mu, pos - 1, word, counts, out);
                counts[x] -= 1;
            }
        }
    }
    go(mu, n, &mut word, &mut counts, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// The permutation of `0..len` with the same version relation as `w`: equal
/// letters are ordered left to right.
pub fn standardize(w: &[Letter]) -> Word {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0; w.len()];
    for (label, i) in order.into_iter().enumerate() {
        out[i] = label;
    }
    out
}

/// `u` and `v` have equal length and `u_i <= u_j <=> v_i <= v_j` for all `i <= j`.
pub fn same_versions(u: &[Letter], v: &[Letter]) -> bool {
    u.len() == v.len()
        && (0..u.len()).all(|i| (i..u.len()).all(|j| (u[i] <= u[j]) == (v[i] <= v[j])))
}

/// Parses the comma-separated word format; the empty string is the empty word.
pub fn parse_word(s: &str) -> std::result::Result<Word, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<Letter>().map_err(|_| format!("malformed letter {tok:?}"))
        })
        .collect()
}

pub fn format_word(w: &[Letter]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// All words of length `len` over `0..alphabet`, lexicographically.
pub fn all_words(len: usize, alphabet: usize) -> Vec<Word> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..alphabet).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

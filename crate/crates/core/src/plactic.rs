//! Knuth relations and the plactic monoid.
//!
//! Two words are plactic-equivalent iff they have the same insertion tableau.
//! The rewriting closure under the Knuth relations is kept as an independent
//! oracle for that criterion.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rs::rs_p;
use crate::tableau::to_word;
use crate::word::{Letter, Word};

/// Largest word length accepted by [`plactic_class_oracle`].
pub const PLACTIC_CLASS_BOUND: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnuthRule {
    /// `b c a <-> b a c` for `a < b <= c`.
    BcaBac,
    /// `a c b <-> c a b` for `a <= b < c`.
    AcbCab,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// From the left-hand pattern to the right-hand one (`bca -> bac`, `acb -> cab`).
    Forward,
    Backward,
}

/// One Knuth rewrite on the window `position..position + 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KnuthMove {
    pub position: usize,
    pub rule: KnuthRule,
    pub direction: Direction,
}

impl KnuthMove {
    /// Rewritten window, if the move's pattern matches `[x, y, z]`.
    fn rewrite(rule: KnuthRule, direction: Direction, [x, y, z]: [Letter; 3]) -> Option<[Letter; 3]> {
        use Direction::*;
        use KnuthRule::*;
        match (rule, direction) {
            // x y z = b c a with a < b <= c
            (BcaBac, Forward) => (z < x && x <= y).then_some([x, z, y]),
            // x y z = b a c with a < b <= c
            (BcaBac, Backward) => (y < x && x <= z).then_some([x, z, y]),
            // x y z = a c b with a <= b < c
            (AcbCab, Forward) => (x <= z && z < y).then_some([y, x, z]),
            // x y z = c a b with a <= b < c
            (AcbCab, Backward) => (y <= z && z < x).then_some([y, x, z]),
        }
    }

    /// Applies the move, or returns `None` if its pattern does not match `w`.
    pub fn apply(&self, w: &[Letter]) -> Option<Word> {
        let window = w.get(self.position..self.position + 3)?;
        let new = Self::rewrite(self.rule, self.direction, [window[0], window[1], window[2]])?;
        let mut out = w.to_vec();
        out[self.position..self.position + 3].copy_from_slice(&new);
        Some(out)
    }
}

/// All moves that apply to `w`.
pub fn knuth_moves(w: &[Letter]) -> Vec<(KnuthMove, Word)> {
    let mut out = Vec::new();
    for position in 0..w.len().saturating_sub(2) {
        for rule in [KnuthRule::BcaBac, KnuthRule::AcbCab] {
            for direction in [Direction::Forward, Direction::Backward] {
                let mv = KnuthMove {
                    position,
                    rule,
                    direction,
                };
                if let Some(v) = mv.apply(w) {
                    out.push((mv, v));
                }
            }
        }
    }
    out
}

/// Words reachable from `w` by a single Knuth move, without duplicates.
pub fn knuth_neighbors(w: &[Letter]) -> Vec<Word> {
    let mut out: Vec<Word> = knuth_moves(w).into_iter().map(|(_, v)| v).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn plactic_equiv(u: &[Letter], v: &[Letter]) -> bool {
    u.len() == v.len() && rs_p(u) == rs_p(v)
}

/// Row reading of the insertion tableau.
pub fn plactic_normal_form(w: &[Letter]) -> Word {
    to_word(rs_p(w).rows())
}

/// Connected component of `w` in the Knuth-move graph, by breadth-first search.
pub fn plactic_class_oracle(w: &[Letter]) -> Result<HashSet<Word>> {
    if w.len() > PLACTIC_CLASS_BOUND {
        return Err(Error::BoundExceeded {
            what: "plactic_class_oracle",
            got: w.len(),
            bound: PLACTIC_CLASS_BOUND,
        });
    }
    let mut seen = HashSet::from([w.to_vec()]);
    let mut frontier = VecDeque::from([w.to_vec()]);
    while let Some(u) = frontier.pop_front() {
        for v in knuth_neighbors(&u) {
            if seen.insert(v.clone()) {
                frontier.push_back(v);
            }
        }
    }
    Ok(seen)
}

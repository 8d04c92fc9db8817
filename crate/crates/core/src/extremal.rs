//! Lexicographically least and greatest infinite good words.
//!
//! The least one, `ℓ`, is the fixed point of `[0001, 0101]` from 0; the
//! greatest, `m`, is the fixed point of `[1000, 1010]` from 1. They can also be
//! built greedily, one letter at a time, using the extendability search as a
//! stand-in for "prefix of an infinite good word".

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fife::extendable;
use crate::goodness::suffix_violation_slice;
use crate::word::{period_doubling_prefix, BinaryMorphism, BinaryWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Least,
    Greatest,
}

impl Direction {
    fn letter_order(self) -> [u8; 2] {
        match self {
            Direction::Least => [0, 1],
            Direction::Greatest => [1, 0],
        }
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "least" => Ok(Direction::Least),
            "greatest" => Ok(Direction::Greatest),
            other => Err(format!("unknown direction {other:?}")),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Least => "least",
            Direction::Greatest => "greatest",
        })
    }
}

/// Greedy length-`n` prefix of the extremal infinite good word.
///
/// At every step the preferred letter is kept if the extended word is good
/// and still extends by `horizon` letters.
pub fn lex_extremal_prefix(
    n: usize,
    direction: Direction,
    horizon: usize,
    bound: usize,
) -> Result<BinaryWord> {
    if n > bound {
        return Err(Error::BoundExceeded { what: "length", value: n, bound });
    }
    let mut buf: Vec<u8> = Vec::with_capacity(n);
    while buf.len() < n {
        let mut chosen = None;
        for letter in direction.letter_order() {
            buf.push(letter);
            let keep = suffix_violation_slice(&buf).is_none()
                && extendable(&BinaryWord::from_raw(buf.clone()), horizon);
            buf.pop();
            if keep {
                chosen = Some(letter);
                break;
            }
        }
        match chosen {
            Some(letter) => buf.push(letter),
            None => return Err(Error::DeadEnd { length: buf.len() }),
        }
    }
    Ok(BinaryWord::from_raw(buf))
}

/// Length-`n` prefix of `ℓ` (least) or `m` (greatest) from its generating
/// morphism.
pub fn extremal_fixed_point(direction: Direction, n: usize) -> BinaryWord {
    let (m, seed) = match direction {
        Direction::Least => (BinaryMorphism::least_generator(), 0),
        Direction::Greatest => (BinaryMorphism::greatest_generator(), 1),
    };
    m.iterate_to_length(seed, n).expect("generator is prolongable")
}

/// The three fixed points compared in this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FixedPoint {
    D,
    Least,
    Greatest,
}

impl FixedPoint {
    pub fn prefix(self, n: usize) -> BinaryWord {
        match self {
            FixedPoint::D => period_doubling_prefix(n),
            FixedPoint::Least => extremal_fixed_point(Direction::Least, n),
            FixedPoint::Greatest => extremal_fixed_point(Direction::Greatest, n),
        }
    }
}

/// Window of a fixed point searched for a candidate factor of length `k`.
pub fn factor_window(k: usize, per_letter: usize) -> usize {
    2048usize.max(per_letter * k)
}

/// Set of distinct length-`k` factors of `w`.
pub fn factor_set(w: &BinaryWord, k: usize) -> HashSet<&[u8]> {
    if k > w.len() {
        return HashSet::new();
    }
    w.letters().windows(k).collect()
}

/// Length-`k` factors of `source`'s `source_len` prefix that do not occur in
/// `target`'s `target_len` prefix.
pub fn missing_factors(
    source: FixedPoint,
    source_len: usize,
    target: FixedPoint,
    target_len: usize,
    k: usize,
) -> Vec<BinaryWord> {
    let s = source.prefix(source_len);
    let t = target.prefix(target_len);
    let have = factor_set(&t, k);
    let mut missing: Vec<BinaryWord> = factor_set(&s, k)
        .into_iter()
        .filter(|f| !have.contains(f))
        .map(|f| BinaryWord::from_raw(f.to_vec()))
        .collect();
    missing.sort();
    missing
}

/// Longest common suffixes of the length-`n` prefixes of `d`, `ℓ` and `m`.
///
/// Only a report: a long shared tail at one `n` says nothing about the
/// infinite words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailReport {
    pub length: usize,
    pub d_least: usize,
    pub d_greatest: usize,
    pub least_greatest: usize,
}

fn common_suffix(a: &BinaryWord, b: &BinaryWord) -> usize {
    a.letters().iter().rev().zip(b.letters().iter().rev()).take_while(|(x, y)| x == y).count()
}

pub fn tail_report(n: usize) -> TailReport {
    let d = FixedPoint::D.prefix(n);
    let l = FixedPoint::Least.prefix(n);
    let m = FixedPoint::Greatest.prefix(n);
    TailReport {
        length: n,
        d_least: common_suffix(&d, &l),
        d_greatest: common_suffix(&d, &m),
        least_greatest: common_suffix(&l, &m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goodness::is_good;
    use crate::word::{delta, w};
    use proptest::prelude::*;

    #[test]
    fn greedy_examples() {
        assert_eq!(lex_extremal_prefix(4, Direction::Least, 64, 4096).unwrap(), w("0001"));
        assert_eq!(lex_extremal_prefix(1, Direction::Greatest, 64, 4096).unwrap(), w("1"));
        assert_eq!(lex_extremal_prefix(16, Direction::Greatest, 64, 4096).unwrap(), w("1010100010101000"));
        assert_eq!(lex_extremal_prefix(0, Direction::Least, 64, 4096).unwrap(), w(""));
        assert!(matches!(lex_extremal_prefix(10, Direction::Least, 64, 5), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(extremal_fixed_point(Direction::Least, 4), w("0001"));
        assert_eq!(extremal_fixed_point(Direction::Greatest, 4), w("1010"));
        assert_eq!(extremal_fixed_point(Direction::Least, 16), w("0001000100010101"));
        assert_eq!(
            extremal_fixed_point(Direction::Least, 16),
            delta(&extremal_fixed_point(Direction::Greatest, 8))
        );
    }

    #[test]
    fn greedy_agrees_with_fixed_points_and_is_horizon_stable() {
        for dir in [Direction::Least, Direction::Greatest] {
            let greedy64 = lex_extremal_prefix(24, dir, 64, 4096).unwrap();
            let greedy96 = lex_extremal_prefix(24, dir, 96, 4096).unwrap();
            assert_eq!(greedy64, greedy96);
            assert_eq!(greedy64, extremal_fixed_point(dir, 24));
            for n in 0..=24 {
                let p = greedy64.prefix(n);
                assert!(is_good(&p) && extendable(&p, 64));
            }
        }
    }

    #[test]
    fn delta_relations() {
        for n in 1..=512 {
            let l = extremal_fixed_point(Direction::Least, 2 * n);
            let m = extremal_fixed_point(Direction::Greatest, n);
            assert_eq!(l, delta(&m));
            let m2 = extremal_fixed_point(Direction::Greatest, 2 * n - 1);
            let ln = extremal_fixed_point(Direction::Least, n);
            assert_eq!(w("0").concat(&m2), delta(&ln));
        }
    }

    #[test]
    fn shared_factors() {
        for k in 1..=10 {
            for fp in [FixedPoint::Least, FixedPoint::Greatest] {
                assert!(missing_factors(fp, 2048, FixedPoint::D, 8192, k).is_empty());
                assert!(missing_factors(FixedPoint::D, 2048, fp, 8192, k).is_empty());
            }
        }
    }

    #[test]
    fn tail_report_is_symmetric_in_shape() {
        let r = tail_report(1024);
        assert_eq!(r.length, 1024);
        assert!(r.d_least < 1024 && r.d_greatest < 1024 && r.least_greatest < 1024);
    }

    fn arb_pair() -> impl Strategy<Value = (BinaryWord, BinaryWord)> {
        (1usize..=12)
            .prop_flat_map(|n| (proptest::collection::vec(0u8..=1, n), proptest::collection::vec(0u8..=1, n)))
            .prop_map(|(a, b)| (BinaryWord::from_raw(a), BinaryWord::from_raw(b)))
    }

    proptest! {
        #[test]
        fn delta_reverses_order((u, v) in arb_pair()) {
            prop_assume!(u != v);
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            prop_assert!(delta(&lo) > delta(&hi));
        }
    }
}

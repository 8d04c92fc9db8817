//! Preimages under `δ` and the factorization `w = a·δ(u)·b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::goodness::check_good;
use crate::word::{delta, find_factor, BinaryWord};

/// `w = a·δ(core)·b` with `a ∈ {ε, 0, 1}` and `b ∈ {ε, 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization {
    pub a: BinaryWord,
    pub core: BinaryWord,
    pub b: BinaryWord,
}

impl Factorization {
    pub fn reassemble(&self) -> BinaryWord {
        self.a.concat(&delta(&self.core)).concat(&self.b)
    }
}

/// The `u` with `δ(u) = w`, if any.
///
/// `w` must have even length and a 0 at every even 0-based index (odd
/// 1-based index); it then splits into blocks `01 -> 0` and `00 -> 1`.
pub fn delta_preimage(w: &BinaryWord) -> Option<BinaryWord> {
    let s = w.letters();
    if !s.len().is_multiple_of(2) {
        return None;
    }
    s.chunks(2)
        .map(|pair| match pair {
            [0, 1] => Some(0),
            [0, 0] => Some(1),
            _ => None,
        })
        .collect::<Option<Vec<u8>>>()
        .map(BinaryWord::from_raw)
}

/// Candidate `(a, b)` pairs in canonical order: shorter `a` first, then
/// shorter `b`, with 0 before 1.
const BORDERS: [(&[u8], &[u8]); 6] =
    [(&[], &[]), (&[], &[0]), (&[0], &[]), (&[0], &[0]), (&[1], &[]), (&[1], &[0])];

/// Every triple `(a, u, b)` with `w = a·δ(u)·b`, in canonical order.
pub fn all_factorizations(w: &BinaryWord) -> Vec<Factorization> {
    let s = w.letters();
    BORDERS
        .iter()
        .filter_map(|&(a, b)| {
            if a.len() + b.len() > s.len() || !s.starts_with(a) || !s.ends_with(b) {
                return None;
            }
            let mid = BinaryWord::from_raw(s[a.len()..s.len() - b.len()].to_vec());
            delta_preimage(&mid).map(|core| Factorization {
                a: BinaryWord::from_raw(a.to_vec()),
                core,
                b: BinaryWord::from_raw(b.to_vec()),
            })
        })
        .collect()
}

/// Factorizes a word free of `11`, `1001` and `0000`.
///
/// For `|w| >= 4` the result is the unique triple; for shorter words it is
/// the canonical one (minimal `|a|`, then minimal `|b|`).
pub fn factorize(w: &BinaryWord) -> Result<Factorization> {
    for (which, f) in [("11", &[1u8, 1][..]), ("1001", &[1, 0, 0, 1]), ("0000", &[0, 0, 0, 0])] {
        if let Some(index) = find_factor(f, w.letters()) {
            return Err(Error::ForbiddenFactor { which, index });
        }
    }
    let mut found = all_factorizations(w).into_iter();
    let first = found.next().ok_or_else(|| Error::NoFactorization { word: w.to_string() })?;
    debug_assert!(w.len() < 4 || found.next().is_none(), "non-unique factorization of {w}");
    Ok(first)
}

/// Layers peeled off by repeated factorization, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub layers: Vec<(BinaryWord, BinaryWord)>,
    pub core: BinaryWord,
}

impl Decomposition {
    pub fn reassemble(&self) -> BinaryWord {
        self.layers.iter().rev().fold(self.core.clone(), |inner, (a, b)| a.concat(&delta(&inner)).concat(b))
    }
}

/// Factorizes repeatedly until the core is shorter than 4 letters.
pub fn full_decomposition(w: &BinaryWord) -> Result<Decomposition> {
    if let Some(v) = check_good(w) {
        return Err(Error::ForbiddenFactor { which: v.kind.as_str(), index: v.start });
    }
    let mut layers = Vec::new();
    let mut core = w.clone();
    while core.len() >= 4 {
        let f = factorize(&core)?;
        layers.push((f.a, f.b));
        core = f.core;
    }
    Ok(Decomposition { layers, core })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goodness::{enumerate_good, is_good};
    use crate::word::{period_doubling_prefix, w};
    use proptest::prelude::*;

    #[test]
    fn preimage_examples() {
        assert_eq!(delta_preimage(&w("0000")), Some(w("11")));
        assert_eq!(delta_preimage(&w("0100")), Some(w("01")));
        assert_eq!(delta_preimage(&w("011")), None);
        assert_eq!(delta_preimage(&w("10")), None);
        assert_eq!(delta_preimage(&w("")), Some(w("")));
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&w("0001")).unwrap();
        assert_eq!((f.a, f.core, f.b), (w(""), w("10"), w("")));
        assert_eq!(all_factorizations(&w("0001")).len(), 1);

        let f = factorize(&w("00101000")).unwrap();
        assert_eq!((f.a.clone(), f.core.clone(), f.b.clone()), (w("0"), w("001"), w("0")));
        assert_eq!(all_factorizations(&w("00101000")), vec![f]);

        let f = factorize(&w("0")).unwrap();
        assert_eq!((f.a, f.core, f.b), (w(""), w(""), w("0")));
    }

    #[test]
    fn factorize_rejects_forbidden_factors() {
        assert_eq!(factorize(&w("0110")), Err(Error::ForbiddenFactor { which: "11", index: 1 }));
        assert_eq!(factorize(&w("01001")), Err(Error::ForbiddenFactor { which: "1001", index: 1 }));
        assert_eq!(factorize(&w("10000")), Err(Error::ForbiddenFactor { which: "0000", index: 1 }));
    }

    #[test]
    fn json_shape() {
        let f = factorize(&w("00101000")).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"a":"0","core":"001","b":"0"}"#);
    }

    #[test]
    fn decomposition_examples() {
        let d = full_decomposition(&w("0001")).unwrap();
        assert_eq!(d.layers, vec![(w(""), w(""))]);
        assert_eq!(d.core, w("10"));

        let d = full_decomposition(&w("0")).unwrap();
        assert!(d.layers.is_empty());
        assert_eq!(d.core, w("0"));

        let prefix = period_doubling_prefix(16);
        let dec = full_decomposition(&prefix).unwrap();
        assert_eq!(dec.reassemble(), prefix);
        let mut core = prefix.clone();
        for (a, b) in &dec.layers {
            assert!(a.is_empty());
            assert!(b.is_empty() || *b == w("0"));
            core = factorize(&core).unwrap().core;
            assert!(period_doubling_prefix(core.len()) == core);
        }
        assert_eq!(core, dec.core);
    }

    #[test]
    fn decomposition_rejects_bad_words() {
        assert!(full_decomposition(&w("00010100")).is_err());
    }

    #[test]
    fn round_trip_uniqueness_and_descent() {
        for n in 0..=16 {
            for u in enumerate_good(n, 22).unwrap() {
                let f = factorize(&u).unwrap();
                assert_eq!(f.reassemble(), u);
                assert!(is_good(&f.core), "{u}");
                if (4..=14).contains(&n) {
                    assert_eq!(all_factorizations(&u), vec![f], "{u}");
                }
                assert_eq!(full_decomposition(&u).unwrap().reassemble(), u);
            }
        }
    }

    proptest! {
        #[test]
        fn preimage_inverts_delta(bits in proptest::collection::vec(0u8..=1, 0..=12)) {
            let u = BinaryWord::from_raw(bits);
            prop_assert_eq!(delta_preimage(&delta(&u)), Some(u));
        }
    }
}

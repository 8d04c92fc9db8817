//! Finite binary words and non-erasing binary morphisms.
//!
//! Words are immutable values over `{0, 1}`; every operation returns a fresh
//! word. Positions are 0-based throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word over the alphabet `{0, 1}`.
///
/// Letters are stored as the bytes `0` and `1`. The derived ordering is the
/// usual lexicographic order, which is the order used for extremal words when
/// both operands have the same length.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    /// Builds a word from raw letters, rejecting anything other than 0 or 1.
    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|&b| b > 1) {
            return Err(Error::InvalidLetter { letter: letters[pos] as char, position: pos });
        }
        Ok(BinaryWord(letters))
    }

    /// Caller guarantees every byte is 0 or 1.
    pub(crate) fn from_raw(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&b| b <= 1));
        BinaryWord(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: u8) -> usize {
        self.0.iter().filter(|&&b| b == letter).count()
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn complement(&self) -> Self {
        BinaryWord(self.0.iter().map(|&b| 1 - b).collect())
    }

    pub fn reverse(&self) -> Self {
        BinaryWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &BinaryWord) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        BinaryWord(v)
    }

    /// The word followed by a single letter.
    pub fn push(&self, letter: u8) -> Self {
        debug_assert!(letter <= 1);
        let mut v = Vec::with_capacity(self.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(letter);
        BinaryWord(v)
    }

    /// The factor occupying `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        BinaryWord(self.0[range].to_vec())
    }

    pub fn prefix(&self, n: usize) -> Self {
        BinaryWord(self.0[..n.min(self.len())].to_vec())
    }

    pub fn starts_with(&self, other: &BinaryWord) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn ends_with(&self, other: &BinaryWord) -> bool {
        self.0.ends_with(&other.0)
    }

    /// Smallest start index of an occurrence of `needle` in `self`.
    pub fn find(&self, needle: &BinaryWord) -> Option<usize> {
        find_factor(&needle.0, &self.0)
    }

    pub fn contains(&self, needle: &BinaryWord) -> bool {
        self.find(needle).is_some()
    }
}

/// Smallest start index of `needle` inside `haystack`; the empty needle
/// occurs at 0.
pub fn find_factor(needle: &[u8], haystack: &[u8]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    if needle.len() > haystack.len() {
        return None;
    }
    haystack.windows(needle.len()).position(|w| w == needle)
}

/// Smallest start index of `needle` in `haystack`, or `None`.
pub fn is_factor(needle: &BinaryWord, haystack: &BinaryWord) -> Option<usize> {
    haystack.find(needle)
}

pub fn complement(w: &BinaryWord) -> BinaryWord {
    w.complement()
}

pub fn reverse(w: &BinaryWord) -> BinaryWord {
    w.reverse()
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                letter => Err(Error::InvalidLetter { letter, position }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryWord)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| (b'0' + b) as char).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for literal words in code and tests; panics on a bad literal.
pub fn w(s: &str) -> BinaryWord {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}

/// A non-erasing morphism `[image0, image1]` on binary words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMorphism {
    image0: BinaryWord,
    image1: BinaryWord,
}

impl BinaryMorphism {
    pub fn new(image0: BinaryWord, image1: BinaryWord) -> Result<Self> {
        if image0.is_empty() || image1.is_empty() {
            return Err(Error::ErasingMorphism);
        }
        Ok(BinaryMorphism { image0, image1 })
    }

    fn from_strs(image0: &str, image1: &str) -> Self {
        BinaryMorphism::new(w(image0), w(image1)).expect("literal morphism is non-erasing")
    }

    /// The period-doubling morphism `[01, 00]`.
    pub fn delta() -> Self {
        Self::from_strs("01", "00")
    }

    /// `[1000, 1010]`; its fixed point from 1 is the greatest infinite good word.
    pub fn greatest_generator() -> Self {
        Self::from_strs("1000", "1010")
    }

    /// `[0001, 0101]`; its fixed point from 0 is the least infinite good word.
    pub fn least_generator() -> Self {
        Self::from_strs("0001", "0101")
    }

    /// Parse code `[0, 01]`.
    pub fn parse_code_p1() -> Self {
        Self::from_strs("0", "01")
    }

    /// Parse code `[0, 10]`.
    pub fn parse_code_p2() -> Self {
        Self::from_strs("0", "10")
    }

    pub fn image(&self, letter: u8) -> &BinaryWord {
        if letter == 0 {
            &self.image0
        } else {
            &self.image1
        }
    }

    pub fn apply(&self, w: &BinaryWord) -> BinaryWord {
        let len = w.count(0) * self.image0.len() + w.count(1) * self.image1.len();
        let mut out = Vec::with_capacity(len);
        for &b in w.letters() {
            out.extend_from_slice(self.image(b).letters());
        }
        BinaryWord(out)
    }

    /// Applies the morphism `times` times.
    pub fn apply_iter(&self, w: &BinaryWord, times: usize) -> BinaryWord {
        (0..times).fold(w.clone(), |acc, _| self.apply(&acc))
    }

    /// Length-`n` prefix of the fixed point starting with `seed`.
    pub fn iterate_to_length(&self, seed: u8, n: usize) -> Result<BinaryWord> {
        if self.image(seed).first() != Some(seed) {
            return Err(Error::NotProlongable { seed });
        }
        let mut cur = BinaryWord(vec![seed]);
        while cur.len() < n {
            let next = self.apply(&cur);
            if next.len() <= cur.len() {
                return Err(Error::InsufficientGrowth { reached: cur.len(), wanted: n });
            }
            cur = next;
        }
        Ok(cur.prefix(n))
    }

    /// Decodes `w` as a concatenation of images, if possible.
    ///
    /// Returns the decoding that a left-to-right reachability pass finds
    /// first; for the codes used here (`[0,01]`, `[0,10]`, `[01,00]`) the
    /// decoding is unique.
    pub fn decode(&self, w: &BinaryWord) -> Option<BinaryWord> {
        let n = w.len();
        // back[i] = letter whose image ends at position i on some full parse
        let mut back: Vec<Option<u8>> = vec![None; n + 1];
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for i in 0..n {
            if !reach[i] {
                continue;
            }
            for letter in [0u8, 1] {
                let img = self.image(letter).letters();
                let j = i + img.len();
                if j <= n && !reach[j] && &w.letters()[i..j] == img {
                    reach[j] = true;
                    back[j] = Some(letter);
                }
            }
        }
        if !reach[n] {
            return None;
        }
        let mut out = Vec::new();
        let mut pos = n;
        while pos > 0 {
            let letter = back[pos]?;
            out.push(letter);
            pos -= self.image(letter).len();
        }
        out.reverse();
        Some(BinaryWord(out))
    }
}

impl fmt::Display for BinaryMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.image0, self.image1)
    }
}

impl fmt::Debug for BinaryMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn apply_morphism(m: &BinaryMorphism, w: &BinaryWord) -> BinaryWord {
    m.apply(w)
}

pub fn iterate_to_length(m: &BinaryMorphism, seed: u8, n: usize) -> Result<BinaryWord> {
    m.iterate_to_length(seed, n)
}

/// Length-`n` prefix of the period-doubling word.
pub fn period_doubling_prefix(n: usize) -> BinaryWord {
    BinaryMorphism::delta().iterate_to_length(0, n).expect("delta is prolongable on 0")
}

/// `δ(w)`.
pub fn delta(w: &BinaryWord) -> BinaryWord {
    BinaryMorphism::delta().apply(w)
}

/// `δⁿ(w)`.
pub fn delta_pow(w: &BinaryWord, n: usize) -> BinaryWord {
    BinaryMorphism::delta().apply_iter(w, n)
}

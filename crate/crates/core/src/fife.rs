//! Fife-style descriptions of infinite good words.
//!
//! A word with suffix `δⁿ(01)` (with `n` maximal) is extended by one of three
//! operators:
//!
//! ```text
//! α(w) = w·δⁿ(00)      = y·δⁿ⁺¹(01)
//! β(w) = w·δⁿ(0100)    = y·δⁿ⁺¹(001)
//! γ(w) = w·δⁿ(010100)  = y·δⁿ⁺¹(0001)
//! ```
//!
//! Folding a sequence of operators over the seed `01` (or `001`) gives
//! ever-longer prefixes of an infinite word. The automata `A01` and `A001`
//! accept exactly the operator sequences whose words stay good; here they are
//! transition tables checked against a finite-horizon extendability search.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::goodness::{is_good, suffix_violation_slice};
use crate::word::{delta_pow, w, BinaryWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FifeLetter {
    Alpha,
    Beta,
    Gamma,
}

impl FifeLetter {
    pub const ALL: [FifeLetter; 3] = [FifeLetter::Alpha, FifeLetter::Beta, FifeLetter::Gamma];

    fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            FifeLetter::Alpha => 'a',
            FifeLetter::Beta => 'b',
            FifeLetter::Gamma => 'g',
        }
    }

    /// The word `δⁿ(·)` is applied to when extending.
    fn increment(self) -> BinaryWord {
        match self {
            FifeLetter::Alpha => w("00"),
            FifeLetter::Beta => w("0100"),
            FifeLetter::Gamma => w("010100"),
        }
    }

    /// `y·δⁿ⁺¹(tail)` is the expected result.
    fn tail(self) -> BinaryWord {
        match self {
            FifeLetter::Alpha => w("01"),
            FifeLetter::Beta => w("001"),
            FifeLetter::Gamma => w("0001"),
        }
    }
}

/// A finite word over `{α, β, γ}`, written with `a`, `b`, `g`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FifeWord(Vec<FifeLetter>);

impl FifeWord {
    pub fn new(letters: Vec<FifeLetter>) -> Self {
        FifeWord(letters)
    }

    pub fn letters(&self) -> &[FifeLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix(&self, n: usize) -> FifeWord {
        FifeWord(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn concat(&self, other: &FifeWord) -> FifeWord {
        FifeWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// All words of length `k`, in `a < b < g` lexicographic order.
    pub fn all_of_length(k: usize) -> Vec<FifeWord> {
        let mut out = vec![FifeWord::default()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|f| {
                    FifeLetter::ALL.into_iter().map(move |l| {
                        let mut v = f.0.clone();
                        v.push(l);
                        FifeWord(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl FromStr for FifeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                'a' => Ok(FifeLetter::Alpha),
                'b' => Ok(FifeLetter::Beta),
                'g' => Ok(FifeLetter::Gamma),
                letter => Err(Error::InvalidFifeLetter { letter, position }),
            })
            .collect::<Result<Vec<_>>>()
            .map(FifeWord)
    }
}

impl fmt::Display for FifeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.as_char()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for FifeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl Serialize for FifeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FifeWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Largest `n` such that `δⁿ(01)` is a suffix of `w`.
pub fn max_suffix_exponent(w: &BinaryWord) -> Option<usize> {
    let mut best = None;
    let mut n = 0;
    let mut block = crate::word::w("01");
    while block.len() <= w.len() {
        if w.ends_with(&block) {
            best = Some(n);
        }
        block = crate::word::delta(&block);
        n += 1;
    }
    best
}

pub fn apply_fife_letter(w: &BinaryWord, letter: FifeLetter) -> Result<BinaryWord> {
    let n = max_suffix_exponent(w).ok_or_else(|| Error::NoSuffix01 { word: w.to_string() })?;
    let out = w.concat(&delta_pow(&letter.increment(), n));
    debug_assert!({
        let suffix_len = 2usize << n;
        let y = w.prefix(w.len() - suffix_len);
        out == y.concat(&delta_pow(&letter.tail(), n + 1))
    });
    Ok(out)
}

/// The seeds the operators are folded over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Seed {
    #[serde(rename = "01")]
    S01,
    #[serde(rename = "001")]
    S001,
}

impl Seed {
    pub fn word(self) -> BinaryWord {
        match self {
            Seed::S01 => w("01"),
            Seed::S001 => w("001"),
        }
    }

    pub fn automaton(self) -> &'static FifeAutomaton {
        match self {
            Seed::S01 => &A01,
            Seed::S001 => &A001,
        }
    }
}

impl FromStr for Seed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "01" => Ok(Seed::S01),
            "001" => Ok(Seed::S001),
            other => Err(Error::InvalidSeed { seed: other.to_string() }),
        }
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Seed::S01 => "01",
            Seed::S001 => "001",
        })
    }
}

/// Folds the operators of `f` over `seed` from left to right.
pub fn bullet(seed: &BinaryWord, f: &FifeWord) -> Result<BinaryWord> {
    if *seed != w("01") && *seed != w("001") {
        return Err(Error::InvalidSeed { seed: seed.to_string() });
    }
    f.letters().iter().try_fold(seed.clone(), |acc, &l| apply_fife_letter(&acc, l))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FifeState {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "d")]
    D,
    /// The `A001` state reached first by `βγα`.
    #[serde(rename = "bga")]
    Bga,
    #[serde(rename = "sink")]
    Sink,
}

impl FifeState {
    pub fn is_sink(self) -> bool {
        self == FifeState::Sink
    }

    pub fn label(self) -> &'static str {
        match self {
            FifeState::A => "a",
            FifeState::B => "b",
            FifeState::C => "c",
            FifeState::D => "d",
            FifeState::Bga => "bga",
            FifeState::Sink => "sink",
        }
    }
}

/// A five-state deterministic automaton over `{α, β, γ}`; the last state is
/// the absorbing, non-accepting sink.
#[derive(Debug)]
pub struct FifeAutomaton {
    pub name: &'static str,
    pub states: [FifeState; 5],
    /// `table[i][l]`: successor of `states[i]` on the letter with index `l`
    /// (α, β, γ).
    pub table: [[FifeState; 3]; 5],
}

use FifeState::{Bga, Sink, A, B, C, D};

pub static A01: FifeAutomaton = FifeAutomaton {
    name: "A01",
    states: [A, B, C, D, Sink],
    table: [
        //  α     β     γ
        [A, B, C],          // a
        [D, B, C],          // b
        [D, Sink, C],       // c
        [B, C, Sink],       // d
        [Sink, Sink, Sink], // sink
    ],
};

pub static A001: FifeAutomaton = FifeAutomaton {
    name: "A001",
    states: [A, B, C, Bga, Sink],
    table: [
        //  α      β     γ
        [A, B, Sink],       // a
        [A, B, C],          // b
        [Bga, B, C],        // c
        [B, C, Sink],       // bga
        [Sink, Sink, Sink], // sink
    ],
};

impl FifeAutomaton {
    pub fn step(&self, state: FifeState, letter: FifeLetter) -> FifeState {
        let row = self
            .states
            .iter()
            .position(|&s| s == state)
            .unwrap_or_else(|| panic!("state {state:?} does not belong to {}", self.name));
        self.table[row][letter.index()]
    }

    pub fn walk(&self, f: &FifeWord) -> FifeState {
        f.letters().iter().fold(A, |s, &l| self.step(s, l))
    }

    /// Length of the shortest prefix of `f` that reaches the sink.
    pub fn first_sink_prefix(&self, f: &FifeWord) -> Option<usize> {
        let mut s = A;
        for (i, &l) in f.letters().iter().enumerate() {
            s = self.step(s, l);
            if s.is_sink() {
                return Some(i + 1);
            }
        }
        None
    }
}

pub fn walk_a01(f: &FifeWord) -> FifeState {
    A01.walk(f)
}

pub fn walk_a001(f: &FifeWord) -> FifeState {
    A001.walk(f)
}

/// Whether some factor of `f` lies in
/// `I = (β+γ)(αα)*α(γ+ββ) ∪ γ(αβ)*αγ`.
pub fn has_ideal_factor(f: &FifeWord) -> bool {
    use FifeLetter::{Alpha, Beta, Gamma};
    let s = f.letters();
    let at = |i: usize| s.get(i).copied();
    (0..s.len()).any(|i| {
        // (β+γ) α^odd (γ + ββ); the α run must be maximal since γ/β follows
        let first_alt = matches!(s[i], Beta | Gamma) && {
            let run = s[i + 1..].iter().take_while(|&&l| l == Alpha).count();
            let j = i + 1 + run;
            run % 2 == 1 && (at(j) == Some(Gamma) || (at(j) == Some(Beta) && at(j + 1) == Some(Beta)))
        };
        // γ (αβ)* αγ
        let second_alt = s[i] == Gamma && {
            let mut j = i + 1;
            loop {
                match (at(j), at(j + 1)) {
                    (Some(Alpha), Some(Gamma)) => break true,
                    (Some(Alpha), Some(Beta)) => j += 2,
                    _ => break false,
                }
            }
        };
        first_alt || second_alt
    })
}

/// Whether `w` is good and has a good extension by `horizon` more letters.
///
/// Depth-first, trying 0 before 1.
pub fn extendable(w: &BinaryWord, horizon: usize) -> bool {
    if !is_good(w) {
        return false;
    }
    let mut buf = w.letters().to_vec();
    let target = buf.len() + horizon;
    extend_rec(&mut buf, target)
}

fn extend_rec(buf: &mut Vec<u8>, target: usize) -> bool {
    if buf.len() == target {
        return true;
    }
    for b in [0u8, 1] {
        buf.push(b);
        let ok = suffix_violation_slice(buf).is_none() && extend_rec(buf, target);
        buf.pop();
        if ok {
            return true;
        }
    }
    false
}

/// Words `seed • f` over all `f` of length `k` not rejected by the seed's
/// automaton.
pub fn good_prefix_language(seed: Seed, k: usize, bound: usize) -> Result<BTreeSet<BinaryWord>> {
    if k > bound {
        return Err(Error::BoundExceeded { what: "depth", value: k, bound });
    }
    let automaton = seed.automaton();
    let seed_word = seed.word();
    FifeWord::all_of_length(k)
        .into_iter()
        .filter(|f| !automaton.walk(f).is_sink())
        .map(|f| bullet(&seed_word, &f))
        .collect()
}

pub fn good_prefix_language_01(k: usize, bound: usize) -> Result<BTreeSet<BinaryWord>> {
    good_prefix_language(Seed::S01, k, bound)
}

/// Comparison of the ideal `I` against an automaton over all words of one
/// length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub automaton: &'static str,
    pub length: usize,
    /// Words with a factor in `I` that the automaton still accepts.
    pub ideal_but_accepted: Vec<FifeWord>,
    /// Words the automaton rejects although no factor lies in `I`.
    pub rejected_without_ideal: Vec<FifeWord>,
}

pub fn ideal_report(automaton: &'static FifeAutomaton, length: usize) -> IdealReport {
    let mut ideal_but_accepted = Vec::new();
    let mut rejected_without_ideal = Vec::new();
    for f in FifeWord::all_of_length(length) {
        let ideal = has_ideal_factor(&f);
        let sink = automaton.walk(&f).is_sink();
        if ideal && !sink {
            ideal_but_accepted.push(f);
        } else if sink && !ideal {
            rejected_without_ideal.push(f);
        }
    }
    IdealReport { automaton: automaton.name, length, ideal_but_accepted, rejected_without_ideal }
}

//! Binary patterns encountered by the period-doubling word `d`.
//!
//! `d` encounters `p` exactly when `p` or its complement is a factor of `d`,
//! of the `[0,01]`-preimage of `d`, of the `[0,10]`-preimage of `d`, or is one
//! of ten sporadic patterns. Factor tests on the infinite words use finite
//! prefix windows; `d` is uniformly recurrent, so a window a few dozen times
//! the factor length sees every short factor.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::goodness::{encounters_pattern_bounded, PatternWitness};
use crate::word::{find_factor, period_doubling_prefix, BinaryMorphism, BinaryWord};

/// The patterns encountered by `d` for reasons other than being (the
/// complement of) a factor of `d` or of one of its two preimages.
pub const SPORADIC: [&str; 10] = [
    "0010100",
    "01001001000",
    "00100100100",
    "001001001000",
    "00010010010",
    "000100100100",
    "0010001000100",
    "00100010001000",
    "00010001000100",
    "000100010001000",
];

/// Prefix-free-by-lookahead codes used to parse `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ParseCode {
    /// `[0, 01]`
    P1,
    /// `[0, 10]`
    P2,
}

impl ParseCode {
    pub fn morphism(self) -> BinaryMorphism {
        match self {
            ParseCode::P1 => BinaryMorphism::parse_code_p1(),
            ParseCode::P2 => BinaryMorphism::parse_code_p2(),
        }
    }
}

impl FromStr for ParseCode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "p1" => Ok(ParseCode::P1),
            "p2" => Ok(ParseCode::P2),
            other => Err(format!("unknown parse code {other:?}")),
        }
    }
}

/// Decodes the first `n` letters of `host` read as a concatenation of code
/// words.
fn tokenize(code: &BinaryMorphism, host: &[u8], n: usize) -> Result<BinaryWord> {
    let starts = [code.image(0).letters()[0], code.image(1).letters()[0]];
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while out.len() < n {
        // among matching images prefer one after which parsing can go on,
        // then the longer one
        let chosen = [0u8, 1]
            .into_iter()
            .filter(|&letter| {
                let img = code.image(letter).letters();
                i + img.len() <= host.len() && &host[i..i + img.len()] == img
            })
            .max_by_key(|&letter| {
                let end = i + code.image(letter).len();
                (host.get(end).is_none_or(|c| starts.contains(c)), end)
            });
        let letter = chosen.ok_or(Error::ParseMismatch { position: i })?;
        i += code.image(letter).len();
        if i > host.len() {
            return Err(Error::ParseMismatch { position: i });
        }
        out.push(letter);
    }
    Ok(BinaryWord::from_raw(out))
}

/// First `n` letters of the preimage of `d` under `code`.
pub fn preimage_prefix(code: ParseCode, n: usize) -> Result<BinaryWord> {
    // every code word has length <= 2; one spare token for lookahead
    let host = period_doubling_prefix(2 * n + 4);
    tokenize(&code.morphism(), host.letters(), n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    FactorOfD,
    FactorOfP1Preimage,
    FactorOfP2Preimage,
    Sporadic,
    None,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::FactorOfD => "factor_of_d",
            Reason::FactorOfP1Preimage => "factor_of_p1_preimage",
            Reason::FactorOfP2Preimage => "factor_of_p2_preimage",
            Reason::Sporadic => "sporadic",
            Reason::None => "none",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub pattern: BinaryWord,
    pub encountered: bool,
    pub reason: Reason,
    /// The reason holds for the complement of the pattern.
    pub complemented: bool,
    /// An instance of the pattern in `d`; `start` indexes into `d`.
    pub witness: Option<PatternWitness>,
}

/// Shared read-only windows of `d` and its two preimages.
#[derive(Debug, Clone)]
pub struct Classifier {
    config: Config,
    d: BinaryWord,
    p1: BinaryWord,
    p2: BinaryWord,
}

impl Classifier {
    pub fn new(config: Config) -> Result<Self> {
        let longest = config
            .factor_window(config.max_factor_length.max(config.max_pattern_length))
            .max(config.window_cap)
            .max(config.avoid_window)
            .max(config.positive_window);
        Ok(Classifier {
            config,
            d: period_doubling_prefix(longest),
            p1: preimage_prefix(ParseCode::P1, longest)?,
            p2: preimage_prefix(ParseCode::P2, longest)?,
        })
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn d_prefix(&self, n: usize) -> &[u8] {
        &self.d.letters()[..n.min(self.d.len())]
    }

    fn check_len(&self, q: &BinaryWord) -> Result<()> {
        let bound = self.config.max_factor_length;
        if q.len() > bound {
            return Err(Error::BoundExceeded { what: "factor length", value: q.len(), bound });
        }
        Ok(())
    }

    fn host(&self, code: Option<ParseCode>) -> &BinaryWord {
        match code {
            None => &self.d,
            Some(ParseCode::P1) => &self.p1,
            Some(ParseCode::P2) => &self.p2,
        }
    }

    /// Factor search in an explicit window length; used for self-checks.
    pub fn is_factor_in_window(&self, code: Option<ParseCode>, q: &BinaryWord, window: usize) -> bool {
        let host = self.host(code).letters();
        find_factor(q.letters(), &host[..window.min(host.len())]).is_some()
    }

    pub fn is_factor_of_d(&self, q: &BinaryWord) -> Result<bool> {
        self.check_len(q)?;
        Ok(self.is_factor_in_window(None, q, self.config.factor_window(q.len())))
    }

    pub fn is_factor_of_preimage(&self, code: ParseCode, q: &BinaryWord) -> Result<bool> {
        self.check_len(q)?;
        Ok(self.is_factor_in_window(Some(code), q, self.config.factor_window(q.len())))
    }

    /// Whether `code(q)` is a factor of `d`, i.e. `q` is a factor of the
    /// preimage of some factor of `d`.
    ///
    /// This is wider than [`Self::is_factor_of_preimage`]: an occurrence of
    /// `code(q)` need not line up with the parse of `d` as a whole. For
    /// example `[0,10](010010010)` occurs at index 8 of `d`, where the first
    /// `0` is the tail of the token `10` starting at index 7.
    pub fn image_is_factor_of_d(&self, code: ParseCode, q: &BinaryWord) -> Result<bool> {
        self.check_len(q)?;
        let image = code.morphism().apply(q);
        Ok(self.is_factor_in_window(None, &image, self.config.factor_window(image.len())))
    }

    /// Bounded encounter search in the `prefix_len` prefix of `d`.
    ///
    /// A hit is an exact certificate; `None` only means nothing was found
    /// within the bounds.
    pub fn encounter_search_d(
        &self,
        p: &BinaryWord,
        prefix_len: usize,
        max_x: usize,
        max_y: usize,
    ) -> Result<Option<PatternWitness>> {
        let host = if prefix_len <= self.d.len() {
            self.d.prefix(prefix_len)
        } else {
            period_doubling_prefix(prefix_len)
        };
        encounters_pattern_bounded(&host, p, max_x, max_y)
    }

    /// The first condition that holds, checking `p` before its complement
    /// within each condition. The preimage conditions are tested through
    /// [`Self::image_is_factor_of_d`].
    pub fn reason(&self, p: &BinaryWord) -> Result<(Reason, bool)> {
        let bar = p.complement();
        let candidates = [(p, false), (&bar, true)];
        let conditions: [(Reason, Option<ParseCode>); 3] = [
            (Reason::FactorOfD, None),
            (Reason::FactorOfP1Preimage, Some(ParseCode::P1)),
            (Reason::FactorOfP2Preimage, Some(ParseCode::P2)),
        ];
        for (reason, code) in conditions {
            for &(cand, complemented) in &candidates {
                let hit = match code {
                    None => self.is_factor_of_d(cand)?,
                    Some(c) => self.image_is_factor_of_d(c, cand)?,
                };
                if hit {
                    return Ok((reason, complemented));
                }
            }
        }
        for &(cand, complemented) in &candidates {
            if is_sporadic(cand) {
                return Ok((Reason::Sporadic, complemented));
            }
        }
        Ok((Reason::None, false))
    }

    pub fn classify(&self, p: &BinaryWord) -> Result<Classification> {
        if p.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let bound = self.config.max_pattern_length;
        if p.len() > bound {
            return Err(Error::BoundExceeded { what: "pattern length", value: p.len(), bound });
        }
        let (reason, complemented) = self.reason(p)?;
        let encountered = reason != Reason::None;
        let witness = if encountered { Some(self.find_witness(p)?) } else { None };
        Ok(Classification { pattern: p.clone(), encountered, reason, complemented, witness })
    }

    /// Doubles the window from the configured size until an instance turns
    /// up or the cap is passed.
    fn find_witness(&self, p: &BinaryWord) -> Result<PatternWitness> {
        let cap = self.config.window_cap;
        let k = self.config.max_image_positive;
        let mut window = self.config.window.min(cap);
        loop {
            if let Some(wit) = self.encounter_search_d(p, window, k, k)? {
                return Ok(wit);
            }
            if window >= cap {
                return Err(Error::WitnessNotFound { pattern: p.to_string(), window });
            }
            window = (window * 2).min(cap);
        }
    }

    /// A longest factor of the configured `d` window containing no
    /// occurrence of `q`; the earliest one among equals.
    pub fn longest_factor_avoiding(&self, q: &BinaryWord) -> BinaryWord {
        longest_factor_avoiding_in(self.d_prefix(self.config.avoid_window), q)
    }
}

pub fn is_sporadic(p: &BinaryWord) -> bool {
    let s = p.to_string();
    SPORADIC.contains(&s.as_str())
}

/// Longest factor of `host` with no occurrence of `q`, earliest first.
pub fn longest_factor_avoiding_in(host: &[u8], q: &BinaryWord) -> BinaryWord {
    let n = host.len();
    let k = q.len();
    if k == 0 {
        return BinaryWord::empty();
    }
    let occurrences: Vec<usize> = if k > n {
        Vec::new()
    } else {
        host.windows(k).enumerate().filter(|(_, f)| *f == q.letters()).map(|(i, _)| i).collect()
    };
    // maximal avoiding factors sit between consecutive occurrences
    let mut best = (0usize, 0usize);
    let mut from = 0usize;
    for &o in occurrences.iter().chain(std::iter::once(&n)) {
        let to = if o == n { n } else { o + k - 1 };
        if to > from && to - from > best.1 - best.0 {
            best = (from, to);
        }
        if o < n {
            from = o + 1;
        }
    }
    BinaryWord::from_raw(host[best.0..best.1].to_vec())
}

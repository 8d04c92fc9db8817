//! Goodness of finite binary words and exact pattern-encounter search.
//!
//! A word is good when it has neither `11` nor `1001` as a factor and
//! encounters neither the pattern `0000` nor the pattern `00010100`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{find_factor, BinaryWord};

/// An occurrence of `g(p)` in a host word, with `g = [X, Y]`.
///
/// `x` is absent when `p` has no `0`, `y` is absent when `p` has no `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PatternWitness {
    pub start: usize,
    #[serde(rename = "X")]
    pub x: Option<BinaryWord>,
    #[serde(rename = "Y")]
    pub y: Option<BinaryWord>,
}

impl PatternWitness {
    /// `g(p)` for this witness's images.
    pub fn instance(&self, pattern: &BinaryWord) -> BinaryWord {
        let mut out = Vec::new();
        for &b in pattern.letters() {
            let img = if b == 0 { &self.x } else { &self.y };
            out.extend_from_slice(img.as_ref().expect("image for a letter of the pattern").letters());
        }
        BinaryWord::from_raw(out)
    }

    /// True iff substituting the images into `pattern` gives the factor of
    /// `host` at `start`.
    pub fn certifies(&self, pattern: &BinaryWord, host: &BinaryWord) -> bool {
        if self.x.as_ref().is_some_and(|x| x.is_empty())
            || self.y.as_ref().is_some_and(|y| y.is_empty())
            || (pattern.count(0) > 0) != self.x.is_some()
            || (pattern.count(1) > 0) != self.y.is_some()
        {
            return false;
        }
        let inst = self.instance(pattern);
        host.letters().get(self.start..self.start + inst.len()).is_some_and(|f| f == inst.letters())
    }
}

/// Tests whether `g(p)`, `g = [X, Y]` with `|X| = xlen`, `|Y| = ylen`, occurs
/// at `start`. The images are read off the host at the first occurrence of
/// each pattern letter, then every other occurrence is compared against them.
fn instance_at(host: &[u8], p: &[u8], start: usize, xlen: usize, ylen: usize) -> bool {
    let mut first: [Option<usize>; 2] = [None, None];
    let mut pos = start;
    for &b in p {
        let len = if b == 0 { xlen } else { ylen };
        if pos + len > host.len() {
            return false;
        }
        match first[b as usize] {
            None => first[b as usize] = Some(pos),
            Some(at) => {
                if host[at..at + len] != host[pos..pos + len] {
                    return false;
                }
            }
        }
        pos += len;
    }
    true
}

fn witness_at(host: &[u8], p: &[u8], start: usize, xlen: usize, ylen: usize) -> PatternWitness {
    let mut pos = start;
    let mut x = None;
    let mut y = None;
    for &b in p {
        let len = if b == 0 { xlen } else { ylen };
        let slot = if b == 0 { &mut x } else { &mut y };
        if slot.is_none() {
            *slot = Some(BinaryWord::from_raw(host[pos..pos + len].to_vec()));
        }
        pos += len;
    }
    PatternWitness { start, x, y }
}

/// Exhaustive encounter search with image lengths capped at `max_x` / `max_y`.
///
/// Candidates are visited in order of start index, then `|X|`, then `|Y|`,
/// so the first hit is the smallest witness in that order.
pub fn encounters_pattern_bounded(
    w: &BinaryWord,
    p: &BinaryWord,
    max_x: usize,
    max_y: usize,
) -> Result<Option<PatternWitness>> {
    if p.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let host = w.letters();
    let pat = p.letters();
    let n = host.len();
    let zeros = p.count(0);
    let ones = p.count(1);
    for start in 0..n {
        let room = n - start;
        // a letter absent from p contributes one dummy iteration with length 0
        let xs: Box<dyn Iterator<Item = usize>> = match room.checked_div(zeros) {
            Some(most) => Box::new(1..=max_x.min(most)),
            None => Box::new(std::iter::once(0)),
        };
        for xlen in xs {
            let used = zeros * xlen;
            if ones == 0 {
                if instance_at(host, pat, start, xlen, 0) {
                    return Ok(Some(witness_at(host, pat, start, xlen, 0)));
                }
                continue;
            }
            let max_y_here = max_y.min((room - used) / ones);
            for ylen in 1..=max_y_here {
                if instance_at(host, pat, start, xlen, ylen) {
                    return Ok(Some(witness_at(host, pat, start, xlen, ylen)));
                }
            }
        }
    }
    Ok(None)
}

/// Exact, complete search for an instance of `p` in `w`.
pub fn encounters_pattern(w: &BinaryWord, p: &BinaryWord) -> Result<Option<PatternWitness>> {
    encounters_pattern_bounded(w, p, w.len(), w.len())
}

/// Smallest `(start, |X|)` with `XXXX` occurring at `start`.
pub fn find_fourth_power(w: &BinaryWord) -> Option<PatternWitness> {
    let s = w.letters();
    let n = s.len();
    for start in 0..n {
        for q in 1..=(n - start) / 4 {
            if s[start..start + 3 * q] == s[start + q..start + 4 * q] {
                return Some(PatternWitness {
                    start,
                    x: Some(BinaryWord::from_raw(s[start..start + q].to_vec())),
                    y: None,
                });
            }
        }
    }
    None
}

/// Smallest `(start, |X|, |Y|)` instance of `00010100`, i.e. `XXXYXYXX`.
pub fn find_p00010100(w: &BinaryWord) -> Option<PatternWitness> {
    let s = w.letters();
    let n = s.len();
    for start in 0..n {
        let room = n - start;
        for x in 1..=room.saturating_sub(2) / 6 {
            // XXX must be a cube of period x
            if s[start..start + 2 * x] != s[start + x..start + 3 * x] {
                continue;
            }
            let xw = &s[start..start + x];
            let y1 = start + 3 * x;
            for y in 1..=(room - 6 * x) / 2 {
                let x3 = y1 + y;
                let y2 = x3 + x;
                let x4 = y2 + y;
                let x5 = x4 + x;
                if &s[x3..x3 + x] == xw
                    && &s[x4..x4 + x] == xw
                    && &s[x5..x5 + x] == xw
                    && s[y1..y1 + y] == s[y2..y2 + y]
                {
                    return Some(PatternWitness {
                        start,
                        x: Some(BinaryWord::from_raw(xw.to_vec())),
                        y: Some(BinaryWord::from_raw(s[y1..y1 + y].to_vec())),
                    });
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ViolationKind {
    #[serde(rename = "factor11")]
    Factor11,
    #[serde(rename = "factor1001")]
    Factor1001,
    #[serde(rename = "fourth_power")]
    FourthPower,
    #[serde(rename = "p00010100")]
    P00010100,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::Factor11 => "factor11",
            ViolationKind::Factor1001 => "factor1001",
            ViolationKind::FourthPower => "fourth_power",
            ViolationKind::P00010100 => "p00010100",
        }
    }
}

/// Certificate that a word is not good.
///
/// For the literal-factor kinds `X` holds the factor itself and `Y` is null.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub start: usize,
    #[serde(rename = "X")]
    pub x: BinaryWord,
    #[serde(rename = "Y")]
    pub y: Option<BinaryWord>,
}

impl Violation {
    fn literal(kind: ViolationKind, start: usize, factor: &[u8]) -> Self {
        Violation { kind, start, x: BinaryWord::from_raw(factor.to_vec()), y: None }
    }

    fn from_witness(kind: ViolationKind, wit: PatternWitness) -> Self {
        Violation { kind, start: wit.start, x: wit.x.expect("both patterns use 0"), y: wit.y }
    }
}

const F11: &[u8] = &[1, 1];
const F1001: &[u8] = &[1, 0, 0, 1];

/// The first failed goodness condition, checked in the order `11`, `1001`,
/// fourth power, `00010100`, each with its smallest witness.
pub fn check_good(w: &BinaryWord) -> Option<Violation> {
    let s = w.letters();
    if let Some(i) = find_factor(F11, s) {
        return Some(Violation::literal(ViolationKind::Factor11, i, F11));
    }
    if let Some(i) = find_factor(F1001, s) {
        return Some(Violation::literal(ViolationKind::Factor1001, i, F1001));
    }
    if let Some(wit) = find_fourth_power(w) {
        return Some(Violation::from_witness(ViolationKind::FourthPower, wit));
    }
    find_p00010100(w).map(|wit| Violation::from_witness(ViolationKind::P00010100, wit))
}

pub fn is_good(w: &BinaryWord) -> bool {
    check_good(w).is_none()
}

/// A goodness violation that ends at the last letter of `s`, if any.
///
/// If `s` minus its last letter is good, then `s` is good exactly when this
/// returns `None`, because any new violation must use the last letter.
pub fn suffix_violation_slice(s: &[u8]) -> Option<Violation> {
    let n = s.len();
    if s.ends_with(F11) {
        return Some(Violation::literal(ViolationKind::Factor11, n - 2, F11));
    }
    if s.ends_with(F1001) {
        return Some(Violation::literal(ViolationKind::Factor1001, n - 4, F1001));
    }
    // every instance of either pattern ends in a square XX
    for x in 1..=n / 2 {
        if s[n - 1] != s[n - 1 - x] || s[n - 2 * x..n - x] != s[n - x..] {
            continue;
        }
        let xw = &s[n - x..];
        if 4 * x <= n && s[n - 4 * x..n - 2 * x] == s[n - 2 * x..] {
            return Some(Violation {
                kind: ViolationKind::FourthPower,
                start: n - 4 * x,
                x: BinaryWord::from_raw(xw.to_vec()),
                y: None,
            });
        }
        if 6 * x + 2 > n {
            continue;
        }
        // XXXY XYXX: the last two X are fixed, scan |Y|
        for y in 1..=(n - 6 * x) / 2 {
            let start = n - 6 * x - 2 * y;
            let y1 = start + 3 * x;
            let x3 = y1 + y;
            let y2 = x3 + x;
            if &s[x3..x3 + x] == xw
                && s[y1..y1 + y] == s[y2..y2 + y]
                && &s[start..start + x] == xw
                && &s[start + x..start + 2 * x] == xw
                && &s[start + 2 * x..start + 3 * x] == xw
            {
                return Some(Violation {
                    kind: ViolationKind::P00010100,
                    start,
                    x: BinaryWord::from_raw(xw.to_vec()),
                    y: Some(BinaryWord::from_raw(s[y1..y1 + y].to_vec())),
                });
            }
        }
    }
    None
}

pub fn suffix_violation(w: &BinaryWord) -> Option<Violation> {
    suffix_violation_slice(w.letters())
}

/// All good words of length `n`, in lexicographic order.
///
/// Prefix-tree search: a good word's prefixes are good, so each extension
/// only needs checking for violations ending at its new last letter.
pub fn enumerate_good(n: usize, bound: usize) -> Result<Vec<BinaryWord>> {
    if n > bound {
        return Err(Error::BoundExceeded { what: "length", value: n, bound });
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    enumerate_rec(&mut buf, n, &mut |s| out.push(BinaryWord::from_raw(s.to_vec())));
    Ok(out)
}

/// Number of good words of each length `0..=max_len`.
pub fn count_good(max_len: usize, bound: usize) -> Result<Vec<u64>> {
    if max_len > bound {
        return Err(Error::BoundExceeded { what: "length", value: max_len, bound });
    }
    let mut counts = vec![0u64; max_len + 1];
    let mut buf = Vec::with_capacity(max_len);
    count_rec(&mut buf, max_len, &mut counts);
    Ok(counts)
}

fn enumerate_rec(buf: &mut Vec<u8>, n: usize, emit: &mut dyn FnMut(&[u8])) {
    if buf.len() == n {
        emit(buf);
        return;
    }
    for b in [0u8, 1] {
        buf.push(b);
        if suffix_violation_slice(buf).is_none() {
            enumerate_rec(buf, n, emit);
        }
        buf.pop();
    }
}

fn count_rec(buf: &mut Vec<u8>, max_len: usize, counts: &mut [u64]) {
    counts[buf.len()] += 1;
    if buf.len() == max_len {
        return;
    }
    for b in [0u8, 1] {
        buf.push(b);
        if suffix_violation_slice(buf).is_none() {
            count_rec(buf, max_len, counts);
        }
        buf.pop();
    }
}

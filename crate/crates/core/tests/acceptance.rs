//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use perdoub::config::Config;
use perdoub::extremal::{extremal_fixed_point, lex_extremal_prefix, Direction};
use perdoub::factorization::{all_factorizations, factorize};
use perdoub::fife::{
    apply_fife_letter, bullet, extendable, has_ideal_factor, walk_a001, FifeAutomaton, FifeLetter, FifeWord,
    A001, A01,
};
use perdoub::goodness::{enumerate_good, is_good};
use perdoub::patterns::{Classifier, Reason, SPORADIC};
use perdoub::verify::all_words;
use perdoub::word::{delta, period_doubling_prefix, BinaryMorphism, BinaryWord};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn w(s: &str) -> BinaryWord {
    s.parse().expect("literal word")
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const D32: &str = "01000101010001000100010101000101";

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let d = period_doubling_prefix(32);
    let elapsed = start.elapsed();
    check(d == w(D32), || format!("library prefix {d}"))?;
    check(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;

    let out = Command::new(env!("CARGO_BIN_EXE_perdoub"))
        .args(["d", "--length", "32"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    check(out.status.code() == Some(0) && text.trim_end() == D32, || format!("cli printed {text:?}"))?;
    Ok(format!("library {elapsed:?}, cli output exact"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for n in [256, 1024, 4096] {
        check(is_good(&period_doubling_prefix(n)), || format!("prefix {n} not good"))?;
    }
    Ok(format!("lengths 256/1024/4096 good in {:?}", start.elapsed()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut words = 0usize;
    for n in 1..=12 {
        for u in all_words(n) {
            words += 1;
            let (gu, gd) = (is_good(&u), is_good(&delta(&u)));
            check(!gu || gd, || format!("{u} good but delta image not"))?;
            check(!gd || gu, || format!("delta image of {u} good but {u} not"))?;
        }
    }
    check(words == 8190, || format!("{words} words"))?;
    check(start.elapsed() < Duration::from_secs(60), || format!("took {:?}", start.elapsed()))?;
    Ok(format!("{words} words, 0 exceptions, {:?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    let mut count = 0usize;
    for n in 4..=14 {
        for u in enumerate_good(n, n).map_err(|e| e.to_string())? {
            let all = all_factorizations(&u);
            check(all.len() == 1, || format!("{u}: {} triples", all.len()))?;
            let f = factorize(&u).map_err(|e| format!("{u}: {e}"))?;
            check(f == all[0], || format!("{u}: factorize disagrees"))?;
            check(f.reassemble() == u, || format!("{u}: reassembly"))?;
            check(is_good(&f.core), || format!("{u}: core {} not good", f.core))?;
            count += 1;
        }
    }
    Ok(format!("{count} good words, unique factorization with good core"))
}

fn criterion_5() -> Outcome {
    let base = w("0001000101");
    let cases = [
        (FifeLetter::Alpha, "00 0100 0101 0100 0100"),
        (FifeLetter::Beta, "00 0100 0101 0100 0101 0100 0100"),
        (FifeLetter::Gamma, "00 0100 0101 0100 0101 0100 0101 0100 0100"),
    ];
    for (letter, expected) in cases {
        let got = apply_fife_letter(&base, letter).map_err(|e| e.to_string())?;
        check(got == w(&expected.replace(' ', "")), || format!("{letter:?}: {got}"))?;
    }
    Ok("alpha, beta, gamma expansions exact".into())
}

struct AutomatonAudit {
    unsound: usize,
    live_sinks: usize,
}

fn audit(automaton: &FifeAutomaton, seed: &str, horizon: usize) -> Result<AutomatonAudit, String> {
    let seed = w(seed);
    let mut unsound = 0;
    let mut live_sinks = 0;
    for f in FifeWord::all_of_length(7) {
        match automaton.first_sink_prefix(&f) {
            None => {
                let x = bullet(&seed, &f).map_err(|e| e.to_string())?;
                if !(is_good(&x) && extendable(&x, horizon)) {
                    unsound += 1;
                }
            }
            Some(k) => {
                let x = bullet(&seed, &f.prefix(k)).map_err(|e| e.to_string())?;
                if extendable(&x, horizon) {
                    live_sinks += 1;
                }
            }
        }
    }
    Ok(AutomatonAudit { unsound, live_sinks })
}

fn criterion_6() -> Outcome {
    let horizon = Config::default().horizon;
    let words = FifeWord::all_of_length(7);
    check(words.len() == 2187, || format!("{} Fife words", words.len()))?;

    let a01 = audit(&A01, "01", horizon)?;
    let a001 = audit(&A001, "001", horizon)?;
    let ideal_escapes = words.iter().filter(|f| has_ideal_factor(f) && !A01.walk(f).is_sink()).count();
    let babb: FifeWord = "babb".parse().map_err(|e: perdoub::Error| e.to_string())?;
    let babb_ok = has_ideal_factor(&babb) && !walk_a001(&babb).is_sink();

    let summary = format!(
        "A01: {} unsound, {} live sinks, {} ideal words accepted; \
         A001: {} unsound, {} live sinks; babb in ideal and accepted by A001: {}",
        a01.unsound, a01.live_sinks, ideal_escapes, a001.unsound, a001.live_sinks, babb_ok
    );
    let ok = a01.unsound == 0
        && a01.live_sinks == 0
        && ideal_escapes == 0
        && a001.unsound == 0
        && a001.live_sinks == 0
        && babb_ok;
    if ok {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn criterion_7() -> Outcome {
    let cfg = Config::default();
    let bound = cfg.max_extremal_length;
    let l4 = lex_extremal_prefix(4, Direction::Least, cfg.horizon, bound).map_err(|e| e.to_string())?;
    let m1 = lex_extremal_prefix(1, Direction::Greatest, cfg.horizon, bound).map_err(|e| e.to_string())?;
    check(l4 == w("0001"), || format!("least prefix 4 = {l4}"))?;
    check(m1 == w("1"), || format!("greatest prefix 1 = {m1}"))?;
    for dir in [Direction::Least, Direction::Greatest] {
        let g64 = lex_extremal_prefix(24, dir, 64, bound).map_err(|e| e.to_string())?;
        let g96 = lex_extremal_prefix(24, dir, 96, bound).map_err(|e| e.to_string())?;
        check(g64 == g96, || format!("{dir}: horizon 64 gives {g64}, 96 gives {g96}"))?;
        let fp = extremal_fixed_point(dir, 24);
        check(g64 == fp, || format!("{dir}: greedy {g64} vs fixed point {fp}"))?;
    }
    let l = extremal_fixed_point(Direction::Least, 1024);
    let m = extremal_fixed_point(Direction::Greatest, 1024);
    check(l == delta(&m.prefix(512)), || "least != delta(greatest)".into())?;
    check(w("0").concat(&m.prefix(1023)) == delta(&l.prefix(512)), || "0·greatest != delta(least)".into())?;
    Ok("greedy = fixed points to 24, stable 64->96, identities to 1024".into())
}

fn criterion_8() -> Outcome {
    let cfg = Config::default();
    let c = Classifier::new(cfg).map_err(|e| e.to_string())?;
    let (mut positive, mut negative) = (0usize, 0usize);
    for n in 1..=9 {
        for p in all_words(n) {
            let r = c.classify(&p).map_err(|e| format!("{p}: {e}"))?;
            if r.encountered {
                let wit = r.witness.as_ref().ok_or_else(|| format!("{p}: no witness"))?;
                let host = period_doubling_prefix(cfg.window_cap);
                check(wit.certifies(&p, &host), || format!("{p}: witness does not certify"))?;
                let k = cfg.max_image_positive;
                let found = c.encounter_search_d(&p, cfg.positive_window, k, k).map_err(|e| e.to_string())?;
                check(found.is_some(), || format!("{p}: encountered but oracle finds nothing"))?;
                positive += 1;
            } else {
                let k = cfg.max_image_negative;
                let found = c.encounter_search_d(&p, cfg.negative_window, k, k).map_err(|e| e.to_string())?;
                check(found.is_none(), || format!("{p}: not encountered but oracle finds {found:?}"))?;
                negative += 1;
            }
        }
    }
    check(positive + negative == 2 * 511, || format!("{} patterns", positive + negative))?;

    let host = period_doubling_prefix(cfg.window_cap);
    for s in SPORADIC {
        let p = w(s);
        let r = c.classify(&p).map_err(|e| format!("{s}: {e}"))?;
        check(r.encountered && r.reason == Reason::Sporadic, || format!("{s}: {:?}", r.reason))?;
        let wit = r.witness.ok_or_else(|| format!("{s}: no witness"))?;
        check(wit.certifies(&p, &host), || format!("{s}: witness does not certify"))?;
    }
    for s in ["0000", "00010100", "000111000", "0001001001000"] {
        let r = c.classify(&w(s)).map_err(|e| format!("{s}: {e}"))?;
        check(!r.encountered, || format!("{s}: classified encountered"))?;
    }
    Ok(format!("{positive} encountered, {negative} avoided, 10 sporadic certified, 4 avoided"))
}

fn criterion_9() -> Outcome {
    let c = Classifier::new(Config::default()).map_err(|e| e.to_string())?;
    let f = c.longest_factor_avoiding(&w("010001"));
    check(f == w("100010101000") && f.len() == 12, || format!("longest avoiding factor {f}"))?;

    let d = period_doubling_prefix(512);
    let p1 = BinaryMorphism::parse_code_p1();
    let mut checked = 0usize;
    for i in (0..d.len()).filter(|&i| d.letters()[i] == 0) {
        for j in i + 13..=d.len() {
            let factor = d.slice(i..j);
            let parsed = p1.decode(&factor).ok_or_else(|| format!("{factor} has no parse"))?;
            check(parsed.contains(&w("1001")), || format!("{factor} parses to {parsed}"))?;
            checked += 1;
        }
    }
    Ok(format!("longest avoiding factor has length 12; {checked} factors parse to words containing 1001"))
}

fn criterion_10() -> Outcome {
    let d = period_doubling_prefix(4096);
    for k in 1..=12 {
        let set: std::collections::HashSet<&[u8]> = d.letters().windows(k).collect();
        for f in &set {
            let r: Vec<u8> = f.iter().rev().copied().collect();
            check(set.contains(r.as_slice()), || format!("k={k}: reversal missing"))?;
        }
    }
    let u = w("00101000");
    check(is_good(&u), || "00101000 not good".into())?;
    check(!is_good(&u.complement()), || "complement good".into())?;
    check(!is_good(&u.reverse()), || "reversal good".into())?;
    Ok("d factors reversal-closed for k<=12; 00101000 good, its complement and reversal not".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "d prefix", criterion_1),
        (2, "goodness of d", criterion_2),
        (3, "delta preserves and reflects goodness", criterion_3),
        (4, "factorization", criterion_4),
        (5, "Fife worked example", criterion_5),
        (6, "Fife soundness", criterion_6),
        (7, "extremal words", criterion_7),
        (8, "pattern classifier vs oracle", criterion_8),
        (9, "infinitely many avoided patterns", criterion_9),
        (10, "symmetry", criterion_10),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {n:>2} {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {n:>2} {name} ({secs:.2}s): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

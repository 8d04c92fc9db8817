//! Exhaustive property suites, runnable from the command line.
//!
//! Each property checks one invariant over a finite but complete range of
//! inputs and reports the first counterexample it finds.

use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::config::Config;
use crate::extremal::{extremal_fixed_point, lex_extremal_prefix, missing_factors, Direction, FixedPoint};
use crate::factorization::{all_factorizations, delta_preimage, factorize, full_decomposition};
use crate::fife::{
    bullet, extendable, has_ideal_factor, walk_a001, FifeAutomaton, FifeWord, Seed, A001, A01,
};
use crate::goodness::{encounters_pattern, enumerate_good, find_fourth_power, is_good};
use crate::patterns::{preimage_prefix, Classification, Classifier, ParseCode, SPORADIC};
use crate::word::{delta, delta_pow, period_doubling_prefix, w, BinaryMorphism, BinaryWord};

pub type Check = std::result::Result<(), String>;

pub struct Property {
    pub suite: &'static str,
    pub name: &'static str,
    run: fn(&Context) -> Check,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Shared, lazily built inputs.
pub struct Context {
    pub config: Config,
    classifier: OnceLock<Classifier>,
    classifications: OnceLock<Vec<Classification>>,
}

impl Context {
    pub fn new(config: Config) -> Self {
        Context { config, classifier: OnceLock::new(), classifications: OnceLock::new() }
    }

    pub fn classifier(&self) -> &Classifier {
        self.classifier.get_or_init(|| Classifier::new(self.config).expect("d windows tokenize"))
    }

    /// Classification of every pattern of length 1..=9.
    fn classifications(&self) -> &[Classification] {
        self.classifications.get_or_init(|| {
            (1..=9)
                .flat_map(all_words)
                .map(|p| self.classifier().classify(&p).expect("pattern within bounds"))
                .collect()
        })
    }
}

/// All binary words of length `n` in lexicographic order.
pub fn all_words(n: usize) -> impl Iterator<Item = BinaryWord> {
    (0u64..(1u64 << n))
        .map(move |bits| BinaryWord::from_raw((0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u8).collect()))
}

fn all_words_up_to(n: usize) -> impl Iterator<Item = BinaryWord> {
    (0..=n).flat_map(all_words)
}

fn good_up_to(n: usize) -> Vec<BinaryWord> {
    (0..=n).flat_map(|k| enumerate_good(k, usize::MAX).expect("unbounded")).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fife_words_up_to(k: usize) -> Vec<FifeWord> {
    (0..=k).flat_map(FifeWord::all_of_length).collect()
}

macro_rules! property {
    ($suite:literal, $name:literal, $f:expr) => {
        Property { suite: $suite, name: $name, run: $f }
    };
}

pub fn properties() -> Vec<Property> {
    vec![
        // word-core
        property!("word", "morphism_homomorphism", |_| {
            let words: Vec<_> = all_words_up_to(5).collect();
            for m in [
                BinaryMorphism::delta(),
                BinaryMorphism::greatest_generator(),
                BinaryMorphism::least_generator(),
            ] {
                for u in &words {
                    for v in &words {
                        ensure(m.apply(&u.concat(v)) == m.apply(u).concat(&m.apply(v)), || {
                            format!("{m} on {u}·{v}")
                        })?;
                    }
                }
            }
            Ok(())
        }),
        property!("word", "fixed_point_prefixes_nest", |_| {
            let m = BinaryMorphism::delta();
            let long = m.iterate_to_length(0, 1025).map_err(|e| e.to_string())?;
            for n in 0..=1024 {
                let p = m.iterate_to_length(0, n).map_err(|e| e.to_string())?;
                ensure(long.starts_with(&p), || format!("n={n}"))?;
            }
            Ok(())
        }),
        property!("word", "reverse_complement_involutions", |_| {
            for u in all_words_up_to(12) {
                ensure(u.reverse().reverse() == u && u.complement().complement() == u, || u.to_string())?;
            }
            Ok(())
        }),
        property!("word", "delta_squared_conjugates_h1", |_| {
            let h1 = BinaryMorphism::greatest_generator();
            for a in [w("0"), w("1")] {
                let lhs = delta_pow(&a, 2);
                let rhs = w("0").concat(&h1.apply(&a));
                let rhs = rhs.prefix(rhs.len() - 1);
                ensure(lhs == rhs, || format!("a={a}"))?;
            }
            Ok(())
        }),
        property!("word", "d_factors_closed_under_reversal", |_| {
            let d = period_doubling_prefix(4096);
            for k in 1..=12 {
                let set: HashSet<&[u8]> = d.letters().windows(k).collect();
                for f in &set {
                    let r: Vec<u8> = f.iter().rev().copied().collect();
                    ensure(set.contains(r.as_slice()), || {
                        format!("k={k} {}", BinaryWord::from_raw(f.to_vec()))
                    })?;
                }
            }
            Ok(())
        }),
        // goodness-engine
        property!("goodness", "factorial_closure", |_| {
            for u in good_up_to(14) {
                for i in 0..u.len() {
                    for j in i + 1..=u.len() {
                        ensure(is_good(&u.slice(i..j)), || format!("{u}[{i}..{j}]"))?;
                    }
                }
            }
            Ok(())
        }),
        property!("goodness", "delta_preserves_goodness", |_| {
            for u in good_up_to(12) {
                ensure(is_good(&delta(&u)), || u.to_string())?;
            }
            Ok(())
        }),
        property!("goodness", "delta_reflects_goodness", |_| {
            for u in all_words_up_to(12) {
                ensure(!is_good(&delta(&u)) || is_good(&u), || u.to_string())?;
            }
            Ok(())
        }),
        property!("goodness", "encounter_search_matches_naive", |_| {
            let patterns: Vec<_> = (1..=4).flat_map(all_words).collect();
            for host in all_words_up_to(8) {
                let factors: Vec<BinaryWord> = (0..host.len())
                    .flat_map(|i| (i + 1..=host.len()).map(move |j| (i, j)))
                    .map(|(i, j)| host.slice(i..j))
                    .collect::<HashSet<_>>()
                    .into_iter()
                    .collect();
                for p in &patterns {
                    let fast = encounters_pattern(&host, p).map_err(|e| e.to_string())?;
                    let naive = factors.iter().any(|x| {
                        factors.iter().any(|y| {
                            let g = BinaryMorphism::new(x.clone(), y.clone()).expect("nonempty");
                            host.contains(&g.apply(p))
                        })
                    });
                    ensure(fast.is_some() == naive, || format!("host {host} pattern {p}"))?;
                    if let Some(wit) = fast {
                        ensure(wit.certifies(p, &host), || format!("bad witness {host} {p}"))?;
                    }
                }
            }
            Ok(())
        }),
        property!("goodness", "fourth_power_specialization", |_| {
            let p = w("0000");
            for u in all_words_up_to(20) {
                let a = find_fourth_power(&u);
                let b = encounters_pattern(&u, &p).map_err(|e| e.to_string())?;
                ensure(a == b, || u.to_string())?;
            }
            Ok(())
        }),
        property!("goodness", "slide_counterexample", |_| {
            ensure(is_good(&w("1010101")) && !is_good(&w("01010101")), || "1010101 / 01010101".into())
        }),
        property!("goodness", "pruned_enumeration_matches_filter", |_| {
            for n in 0..=14 {
                let brute: Vec<_> = all_words(n).filter(is_good).collect();
                let pruned = enumerate_good(n, usize::MAX).map_err(|e| e.to_string())?;
                ensure(brute == pruned, || format!("n={n}"))?;
            }
            Ok(())
        }),
        // factorization
        property!("factorization", "round_trip", |_| {
            for u in good_up_to(16) {
                let f = factorize(&u).map_err(|e| format!("{u}: {e}"))?;
                ensure(f.reassemble() == u, || u.to_string())?;
                let d = full_decomposition(&u).map_err(|e| format!("{u}: {e}"))?;
                ensure(d.reassemble() == u, || format!("decomposition of {u}"))?;
            }
            Ok(())
        }),
        property!("factorization", "unique_for_length_at_least_4", |_| {
            for u in good_up_to(14).into_iter().filter(|u| u.len() >= 4) {
                let all = all_factorizations(&u);
                ensure(all.len() == 1, || format!("{u}: {} triples", all.len()))?;
                ensure(factorize(&u).ok().as_ref() == all.first(), || u.to_string())?;
            }
            Ok(())
        }),
        property!("factorization", "core_is_good", |_| {
            for u in good_up_to(16) {
                let f = factorize(&u).map_err(|e| e.to_string())?;
                ensure(is_good(&f.core), || u.to_string())?;
            }
            Ok(())
        }),
        property!("factorization", "preimage_inverts_delta", |_| {
            for u in all_words_up_to(12) {
                ensure(delta_preimage(&delta(&u)) == Some(u.clone()), || u.to_string())?;
            }
            Ok(())
        }),
        // fife
        property!("fife", "bullet_prefix_monotone", |_| {
            for seed in [w("01"), w("001")] {
                for f in fife_words_up_to(4) {
                    let base = bullet(&seed, &f).map_err(|e| e.to_string())?;
                    for g in fife_words_up_to(2).into_iter().filter(|g| !g.is_empty()) {
                        let ext = bullet(&seed, &f.concat(&g)).map_err(|e| e.to_string())?;
                        ensure(ext.len() > base.len() && ext.starts_with(&base), || {
                            format!("{seed} {f} {g}")
                        })?;
                    }
                }
            }
            Ok(())
        }),
        property!("fife", "delta_conjugation_identity", |_| {
            let d = BinaryMorphism::delta();
            for f in fife_words_up_to(5) {
                let k = f.len();
                let left = bullet(&w("01"), &f).map_err(|e| e.to_string())?;
                let block = d.apply_iter(&w("01"), k);
                ensure(left.ends_with(&block), || format!("{f}"))?;
                let stem = left.prefix(left.len() - block.len());
                for l in FifeWord::all_of_length(1) {
                    let whole = bullet(&w("01"), &f.concat(&l)).map_err(|e| e.to_string())?;
                    let x = bullet(&w("01"), &l).map_err(|e| e.to_string())?;
                    ensure(whole == stem.concat(&d.apply_iter(&x, k)), || format!("{f}{l}"))?;
                }
            }
            Ok(())
        }),
        property!("fife", "a01_soundness", |ctx| soundness(&A01, Seed::S01, 6, ctx.config.horizon)),
        property!("fife", "a01_ideal_implies_sink", |_| ideal_implies_sink(&A01, 6)),
        property!("fife", "a01_sink_is_dead", |ctx| sink_is_dead(&A01, Seed::S01, 6, ctx.config.horizon)),
        property!("fife", "a001_soundness", |ctx| soundness(&A001, Seed::S001, 6, ctx.config.horizon)),
        property!("fife", "a001_sink_is_dead", |ctx| sink_is_dead(&A001, Seed::S001, 6, ctx.config.horizon)),
        property!("fife", "a001_accepts_ideal_word_babb", |_| {
            let f: FifeWord = "babb".parse().map_err(|e: crate::Error| e.to_string())?;
            ensure(has_ideal_factor(&f) && !walk_a001(&f).is_sink(), || "babb".into())
        }),
        property!("fife", "horizon_stability", |ctx| {
            let (h, step) = (ctx.config.horizon, ctx.config.horizon_step);
            for seed in [Seed::S01, Seed::S001] {
                for f in fife_words_up_to(4) {
                    let x = bullet(&seed.word(), &f).map_err(|e| e.to_string())?;
                    ensure(extendable(&x, h) == extendable(&x, h + step), || format!("{seed} {f}"))?;
                }
            }
            Ok(())
        }),
        property!("fife", "slide", |ctx| {
            let h = ctx.config.slide_horizon;
            for u in good_up_to(16).into_iter().filter(|u| u.first() == Some(1)) {
                ensure(extendable(&u, h) == extendable(&w("0").concat(&u), h), || u.to_string())?;
            }
            Ok(())
        }),
        property!("fife", "g1_is_quotient_of_g01", |ctx| {
            let (h, step) = (ctx.config.horizon, ctx.config.horizon_step);
            for u in good_up_to(14).into_iter().filter(|u| u.first() == Some(1)) {
                let a = extendable(&u, h);
                ensure(a == extendable(&u, h + step), || format!("unstable {u}"))?;
                ensure(a == extendable(&w("0").concat(&u), h), || u.to_string())?;
            }
            Ok(())
        }),
        property!("fife", "g0001_is_delta_of_g1", |ctx| {
            let h = ctx.config.horizon;
            for u in good_up_to(10).into_iter().filter(|u| u.first() == Some(1)) {
                ensure(extendable(&delta(&u), h) == extendable(&u, h / 2), || u.to_string())?;
            }
            Ok(())
        }),
        // extremal
        property!("extremal", "greedy_matches_fixed_points", |ctx| {
            let (h, step) = (ctx.config.horizon, ctx.config.horizon_step);
            for dir in [Direction::Least, Direction::Greatest] {
                let a = lex_extremal_prefix(24, dir, h, usize::MAX).map_err(|e| e.to_string())?;
                let b = lex_extremal_prefix(24, dir, h + 2 * step, usize::MAX).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("{dir}: horizon instability"))?;
                ensure(a == extremal_fixed_point(dir, 24), || format!("{dir}: {a}"))?;
                for n in 0..=24 {
                    let p = a.prefix(n);
                    ensure(is_good(&p) && extendable(&p, h), || format!("{dir} prefix {p}"))?;
                }
            }
            Ok(())
        }),
        property!("extremal", "least_is_delta_of_greatest", |_| {
            let l = extremal_fixed_point(Direction::Least, 1024);
            let m = extremal_fixed_point(Direction::Greatest, 512);
            ensure(l == delta(&m), || "prefix 1024".into())
        }),
        property!("extremal", "zero_greatest_is_delta_of_least", |_| {
            let m = extremal_fixed_point(Direction::Greatest, 1023);
            let l = extremal_fixed_point(Direction::Least, 512);
            ensure(w("0").concat(&m) == delta(&l), || "prefix 1024".into())
        }),
        property!("extremal", "delta_reverses_order", |_| {
            for n in 1..=8 {
                let words: Vec<_> = all_words(n).collect();
                for (i, u) in words.iter().enumerate() {
                    for v in &words[i + 1..] {
                        ensure(delta(u) > delta(v), || format!("{u} < {v}"))?;
                    }
                }
            }
            Ok(())
        }),
        property!("extremal", "shared_factors_with_d", |_| {
            for k in 1..=10 {
                for fp in [FixedPoint::Least, FixedPoint::Greatest] {
                    let a = missing_factors(fp, 2048, FixedPoint::D, 8192, k);
                    ensure(a.is_empty(), || format!("{fp:?} k={k}: {:?}", a.first()))?;
                    let b = missing_factors(FixedPoint::D, 2048, fp, 8192, k);
                    ensure(b.is_empty(), || format!("d vs {fp:?} k={k}: {:?}", b.first()))?;
                }
            }
            Ok(())
        }),
        property!("extremal", "factor_window_multiplier", |_| {
            for k in 1..=10 {
                for fp in [FixedPoint::Least, FixedPoint::Greatest, FixedPoint::D] {
                    let src = fp.prefix(2048);
                    for f in src.letters().windows(k).collect::<HashSet<_>>() {
                        let f = BinaryWord::from_raw(f.to_vec());
                        let a = fp.prefix(32 * k).contains(&f) || fp.prefix(2048).contains(&f);
                        let b = fp.prefix(64 * k).contains(&f) || fp.prefix(2048).contains(&f);
                        ensure(a == b, || format!("{fp:?} {f}"))?;
                    }
                }
            }
            Ok(())
        }),
        // pattern-classifier
        property!("patterns", "complement_symmetry", |ctx| {
            let c = ctx.classifications();
            for r in c {
                let bar = r.pattern.complement();
                let other = c.iter().find(|o| o.pattern == bar).expect("complement classified");
                ensure(r.encountered == other.encountered, || r.pattern.to_string())?;
            }
            Ok(())
        }),
        property!("patterns", "reversal_symmetry", |ctx| {
            let c = ctx.classifications();
            for r in c {
                let rev = r.pattern.reverse();
                let other = c.iter().find(|o| o.pattern == rev).expect("reversal classified");
                ensure(r.encountered == other.encountered, || r.pattern.to_string())?;
            }
            Ok(())
        }),
        property!("patterns", "oracle_positive", |ctx| {
            let cfg = ctx.config;
            let k = cfg.max_image_positive;
            for r in ctx.classifications().iter().filter(|r| r.encountered) {
                let found = ctx
                    .classifier()
                    .encounter_search_d(&r.pattern, cfg.positive_window, k, k)
                    .map_err(|e| e.to_string())?;
                ensure(found.is_some(), || r.pattern.to_string())?;
            }
            Ok(())
        }),
        property!("patterns", "oracle_negative", |ctx| {
            let cfg = ctx.config;
            let k = cfg.max_image_negative;
            for r in ctx.classifications().iter().filter(|r| !r.encountered) {
                let found = ctx
                    .classifier()
                    .encounter_search_d(&r.pattern, cfg.negative_window, k, k)
                    .map_err(|e| e.to_string())?;
                ensure(found.is_none(), || format!("{} {:?}", r.pattern, found))?;
            }
            Ok(())
        }),
        property!("patterns", "sporadic_witnesses_and_exclusivity", |ctx| {
            let c = ctx.classifier();
            let d = period_doubling_prefix(ctx.config.window_cap);
            for s in SPORADIC {
                let p = w(s);
                let r = c.classify(&p).map_err(|e| e.to_string())?;
                let wit = r.witness.ok_or_else(|| format!("{s}: no witness"))?;
                ensure(wit.certifies(&p, &d), || format!("{s}: bad witness"))?;
                for cand in [p.clone(), p.complement()] {
                    let hit = c.is_factor_of_d(&cand).map_err(|e| e.to_string())?
                        || c.image_is_factor_of_d(ParseCode::P1, &cand).map_err(|e| e.to_string())?
                        || c.image_is_factor_of_d(ParseCode::P2, &cand).map_err(|e| e.to_string())?;
                    ensure(!hit, || format!("{cand} meets a factor condition"))?;
                }
            }
            Ok(())
        }),
        property!("patterns", "preimage_re_encodes_to_d", |_| {
            for code in [ParseCode::P1, ParseCode::P2] {
                let pre = preimage_prefix(code, 2048).map_err(|e| e.to_string())?;
                let m = code.morphism();
                let d = period_doubling_prefix(4 * 2048 + 8);
                for n in 0..=2048 {
                    let img = m.apply(&pre.prefix(n));
                    ensure(d.starts_with(&img), || format!("{code:?} n={n}"))?;
                }
            }
            Ok(())
        }),
        property!("patterns", "long_d_factors_parse_to_1001", |_| {
            let d = period_doubling_prefix(512);
            let p1 = BinaryMorphism::parse_code_p1();
            for i in 0..d.len() {
                if d.letters()[i] != 0 {
                    continue;
                }
                for j in i + 13..=d.len() {
                    let f = d.slice(i..j);
                    let p = p1.decode(&f).ok_or_else(|| format!("{f} does not parse"))?;
                    ensure(p.contains(&w("1001")), || format!("{f} -> {p}"))?;
                }
            }
            Ok(())
        }),
        property!("patterns", "longest_factor_avoiding_010001", |ctx| {
            let f = ctx.classifier().longest_factor_avoiding(&w("010001"));
            ensure(f == w("100010101000"), || f.to_string())
        }),
    ]
}

fn soundness(automaton: &FifeAutomaton, seed: Seed, depth: usize, horizon: usize) -> Check {
    for f in fife_words_up_to(depth) {
        if automaton.walk(&f).is_sink() {
            continue;
        }
        let x = bullet(&seed.word(), &f).map_err(|e| e.to_string())?;
        ensure(is_good(&x), || format!("{f}: {x} not good"))?;
        ensure(extendable(&x, horizon), || format!("{f}: not extendable"))?;
    }
    Ok(())
}

fn ideal_implies_sink(automaton: &FifeAutomaton, depth: usize) -> Check {
    for f in fife_words_up_to(depth) {
        ensure(!has_ideal_factor(&f) || automaton.walk(&f).is_sink(), || f.to_string())?;
    }
    Ok(())
}

fn sink_is_dead(automaton: &FifeAutomaton, seed: Seed, depth: usize, horizon: usize) -> Check {
    let mut seen = HashSet::new();
    for f in fife_words_up_to(depth) {
        if let Some(k) = automaton.first_sink_prefix(&f) {
            let head = f.prefix(k);
            if seen.insert(head.clone()) {
                let x = bullet(&seed.word(), &head).map_err(|e| e.to_string())?;
                ensure(!extendable(&x, horizon), || format!("{head}: still extendable"))?;
            }
        }
    }
    Ok(())
}

pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = Vec::new();
    for p in properties() {
        if !names.contains(&p.suite) {
            names.push(p.suite);
        }
    }
    names
}

/// Runs every property of `suite` (all suites when `None`), in declaration
/// order.
pub fn run(ctx: &Context, suite: Option<&str>) -> Vec<Outcome> {
    properties()
        .into_iter()
        .filter(|p| suite.is_none_or(|s| s == p.suite))
        .map(|p| {
            let start = Instant::now();
            let result = (p.run)(ctx);
            Outcome {
                suite: p.suite,
                name: p.name,
                passed: result.is_ok(),
                detail: result.err(),
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

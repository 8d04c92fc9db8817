//! Good binary words and the period-doubling word.
//!
//! A binary word is *good* when it avoids the factors `11` and `1001` and
//! encounters neither of the patterns `0000` and `00010100`. The
//! period-doubling word `d`, the fixed point of `δ = [01, 00]`, is good, and
//! goodness is preserved and reflected by `δ`. This crate makes those facts
//! executable: goodness decisions with certificates, the `a·δ(u)·b`
//! factorization, Fife-style automata for infinite good words, the
//! lexicographically extremal infinite good words, and a classifier for the
//! binary patterns encountered by `d`.

pub mod cli;
pub mod config;
pub mod error;
pub mod extremal;
pub mod factorization;
pub mod fife;
pub mod goodness;
pub mod patterns;
pub mod verify;
pub mod word;

pub use config::Config;
pub use error::{Error, Result};
pub use word::{BinaryMorphism, BinaryWord};

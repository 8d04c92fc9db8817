//! Default bounds for every finite proxy of an infinite-word statement.

use serde::Serialize;

/// Environment variable overriding [`Config::max_enum_length`].
pub const MAX_ENUM_ENV: &str = "PERDOUB_MAX_ENUM";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Extension depth used when asking whether a prefix extends to a long good word.
    pub horizon: usize,
    /// Extension depth for slide-style comparisons.
    pub slide_horizon: usize,
    /// Extra depth used by horizon-stability checks.
    pub horizon_step: usize,
    /// Minimum prefix window of `d` used for factor checks.
    pub window: usize,
    /// Window length per letter of the candidate factor.
    pub window_per_letter: usize,
    /// Largest window the witness search grows to.
    pub window_cap: usize,
    /// Image-length cap when searching for positive witnesses.
    pub max_image_positive: usize,
    /// Image-length cap for the negative oracle.
    pub max_image_negative: usize,
    /// Window for the negative oracle.
    pub negative_window: usize,
    /// Window for the positive oracle.
    pub positive_window: usize,
    /// Longest word length `enumerate_good` accepts.
    pub max_enum_length: usize,
    /// Largest Fife depth for prefix-language enumeration.
    pub max_fife_depth: usize,
    /// Longest factor accepted by the factor-of-d queries.
    pub max_factor_length: usize,
    /// Longest pattern accepted by `classify`.
    pub max_pattern_length: usize,
    /// Longest extremal prefix the greedy construction will build.
    pub max_extremal_length: usize,
    /// Window for `longest_factor_avoiding`.
    pub avoid_window: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            horizon: 64,
            slide_horizon: 48,
            horizon_step: 16,
            window: 4096,
            window_per_letter: 32,
            window_cap: 65536,
            max_image_positive: 8,
            max_image_negative: 6,
            negative_window: 4096,
            positive_window: 8192,
            max_enum_length: 22,
            max_fife_depth: 8,
            max_factor_length: 64,
            max_pattern_length: 64,
            max_extremal_length: 4096,
            avoid_window: 8192,
        }
    }
}

impl Config {
    /// Defaults, with `PERDOUB_MAX_ENUM` applied when it parses as an integer.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Some(n) = std::env::var(MAX_ENUM_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            cfg.max_enum_length = n;
        }
        cfg
    }

    /// Window of `d` used to decide whether a word of length `len` is a factor.
    pub fn factor_window(&self, len: usize) -> usize {
        self.window.max(self.window_per_letter * len)
    }
}

//! Run configuration: defaults, `key = value` files, command-line overrides.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub bound_factor: BigRational,
    pub digits: u32,
    pub term_cap: u64,
    pub seed: u64,
    pub workers: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            bound_factor: BigRational::from_integer(4.into()),
            digits: 30,
            term_cap: 10_000_000,
            seed: 0,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Parses `7`, `3/2` or `1.25` exactly.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let t = text.trim();
    let bad = || format!("'{t}' is not a rational number");
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, scale));
    }
    t.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad())
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let num = |v: &str| v.trim().parse::<u64>().map_err(|e| format!("{key}: '{v}': {e}"));
        match key {
            "bound_factor" => {
                let b = parse_rational(value)?;
                if b < BigRational::one() {
                    return Err(format!("bound_factor must be at least 1, got {b}"));
                }
                self.bound_factor = b;
            }
            "digits" => self.digits = positive(key, num(value)?)? as u32,
            "term_cap" => self.term_cap = positive(key, num(value)?)?,
            "seed" => self.seed = num(value)?,
            "workers" => self.workers = positive(key, num(value)?)? as usize,
            other => return Err(format!("unknown configuration key '{other}'")),
        }
        Ok(())
    }

    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), String> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
            self.set(k.trim(), v.trim()).map_err(|e| format!("line {}: {e}", i + 1))?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        self.apply_text(&text)
    }
}

fn positive(key: &str, v: u64) -> Result<u64, String> {
    if v == 0 {
        Err(format!("{key} must be positive"))
    } else {
        Ok(v)
    }
}

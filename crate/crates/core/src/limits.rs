//! Process-wide enumeration cap.
//!
//! Exhaustive enumerations (permutations, packed words, compositions) refuse
//! degrees above the cap. The default is 8 and can be overridden through the
//! `NCSF_MAX_DEGREE` environment variable or [`set_cap`].

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 8;

/// Degrees at or above this value trigger a warning from the CLI.
pub const WARN_DEGREE: usize = 9;

pub const CAP_ENV: &str = "NCSF_MAX_DEGREE";

static CAP: AtomicUsize = AtomicUsize::new(0);

pub fn cap() -> usize {
    match CAP.load(Ordering::Relaxed) {
        0 => {
            let value = std::env::var(CAP_ENV)
                .ok()
                .and_then(|s| s.trim().parse::<usize>().ok())
                .filter(|&v| v > 0)
                .unwrap_or(DEFAULT_CAP);
            CAP.store(value, Ordering::Relaxed);
            value
        }
        value => value,
    }
}

pub fn set_cap(value: usize) {
    CAP.store(value.max(1), Ordering::Relaxed);
}

pub(crate) fn check(n: usize) -> Result<()> {
    let cap = cap();
    if n > cap {
        Err(Error::ResourceLimit { requested: n, cap })
    } else {
        Ok(())
    }
}

//! Size guards for validation and lattice enumeration.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_validation_size`].
pub const MAX_SIZE_ENV: &str = "RADICAL_LAB_MAX_SIZE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest structure whose axioms are checked exhaustively (cubic cost).
    pub max_validation_size: usize,
    /// Largest parent for which substructure lattices are enumerated.
    pub max_enumeration_size: usize,
    /// Largest number of substructures an enumeration may produce.
    pub max_lattice_members: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_validation_size: 256,
            max_enumeration_size: 4096,
            max_lattice_members: 100_000,
        }
    }
}

impl Limits {
    /// Defaults, with the validation guard taken from `RADICAL_LAB_MAX_SIZE` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_SIZE_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_validation_size = n;
        }
        limits
    }

    /// Process-wide limits, read from the environment once.
    pub fn global() -> &'static Limits {
        static GLOBAL: OnceLock<Limits> = OnceLock::new();
        GLOBAL.get_or_init(Limits::from_env)
    }

    pub(crate) fn check_validation(&self, what: &str, size: usize) -> Result<()> {
        guard(what, size, self.max_validation_size)
    }

    pub(crate) fn check_enumeration(&self, what: &str, size: usize) -> Result<()> {
        guard(what, size, self.max_enumeration_size)
    }
}

fn guard(what: &str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::SizeGuardExceeded {
            what: what.to_string(),
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}

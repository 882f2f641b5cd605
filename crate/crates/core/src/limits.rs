use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource caps checked before any exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest group order `r^n * n!` that may be enumerated.
    pub max_group_size: u128,
    /// Largest number of pairwise compositions in one convolution.
    pub max_product_terms: u128,
    /// Largest number of candidate maps in a brute-force P-partition count.
    pub max_bruteforce_maps: u128,
    /// Largest number of (colored) linear extensions materialized at once.
    pub max_extensions: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_size: 10_000_000,
            max_product_terms: 200_000_000,
            max_bruteforce_maps: 50_000_000,
            max_extensions: 5_000_000,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_group_size: u128::MAX,
            max_product_terms: u128::MAX,
            max_bruteforce_maps: u128::MAX,
            max_extensions: u128::MAX,
        }
    }

    pub fn with_max_group_size(mut self, limit: u128) -> Self {
        self.max_group_size = limit;
        self
    }

    pub(crate) fn check(what: &'static str, size: u128, limit: u128) -> Result<()> {
        if size > limit {
            Err(Error::CapExceeded { what, size, limit })
        } else {
            Ok(())
        }
    }
}

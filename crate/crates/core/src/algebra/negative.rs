//! Statistics whose level sets do not span a subalgebra.

use serde::{Deserialize, Serialize};

use super::partition::{verify_closure, ClassPartition, PairOutcome};
use crate::error::Result;
use crate::group::ColoredGroup;
use crate::limits::Limits;

/// Closure test for one boundary convention `(a, b)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariantOutcome {
    pub a: u32,
    pub b: u32,
    pub class_count: usize,
    /// Groups elements exactly as the standard descent number does.
    pub same_as_standard: bool,
    pub closure_passed: bool,
    pub first_failure: Option<PairOutcome>,
}

/// Every boundary convention `(a, b) ∈ [0, r-1]^2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariantScan {
    pub r: u32,
    pub n: usize,
    pub outcomes: Vec<VariantOutcome>,
}

impl VariantScan {
    /// Closure holds exactly for the conventions that reproduce the
    /// standard partition.
    pub fn only_standard_passes(&self) -> bool {
        self.outcomes.iter().all(|o| o.closure_passed == o.same_as_standard)
    }
}

pub fn scan_variants(group: &ColoredGroup, limits: &Limits) -> Result<VariantScan> {
    let standard = ClassPartition::by_des(group);
    let mut outcomes = Vec::new();
    for a in 0..group.r() {
        for b in 0..group.r() {
            let partition = ClassPartition::by_variant_des(group, a, b)?;
            let report = verify_closure(group, &partition, limits)?;
            outcomes.push(VariantOutcome {
                a,
                b,
                class_count: partition.class_count(),
                same_as_standard: partition.same_blocks(&standard),
                closure_passed: report.passed,
                first_failure: report.first_failure().cloned(),
            });
        }
    }
    Ok(VariantScan { r: group.r(), n: group.n(), outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g22_scan() {
        let g = ColoredGroup::new(2, 2, &Limits::default()).unwrap();
        let scan = scan_variants(&g, &Limits::default()).unwrap();
        assert_eq!(scan.outcomes.len(), 4);
        assert!(scan.only_standard_passes());
        let standard = scan.outcomes.iter().find(|o| (o.a, o.b) == (0, 1)).unwrap();
        assert!(standard.same_as_standard && standard.closure_passed);
        assert!(scan.outcomes.iter().any(|o| !o.closure_passed));
    }
}

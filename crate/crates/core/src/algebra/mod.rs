//! The group algebra of `G(r, n)` and its descent subalgebras.

mod element;
mod eulerian;
mod negative;
mod partition;
mod polynomial;

pub use element::GroupAlgebraElement;
pub use eulerian::{
    check_idempotents, class_sums_des, class_sums_mr, combine_des, eulerian_idempotents, idempotent_coefficients,
    phi_argument, structure_poly_coefficients, structure_poly_eval, verify_phi_identity,
    verify_phi_identity_collapsed, DesAlgebra, DesCoefficientJson, IdempotentCheck, IdempotentJson, IdempotentTable,
    IdempotentTableJson,
};
pub use negative::{scan_variants, VariantOutcome, VariantScan};
pub use partition::{
    is_in_span, verify_closure, ClassAlgebra, ClassInfo, ClassPartition, ClosureReport, PairOutcome, SpanCheck,
    SpanWitness, StructureConstants,
};
pub use polynomial::Polynomial;

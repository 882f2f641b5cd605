//! Colored permutation groups `G(r, n) = Z_r ≀ S_n`, colored P-partitions and
//! the colored Eulerian descent algebra, in exact arithmetic.
//!
//! ```
//! use colored_eulerian::{ColoredGroup, IdempotentTable, Limits};
//!
//! let g = ColoredGroup::new(5, 3, &Limits::default()).unwrap();
//! assert_eq!(g.order(), 750);
//! let table = IdempotentTable::new(5, 3).unwrap();
//! assert_eq!(table.render_row(2), "c_2 = 1/750 (27 C_0 + 12 C_1 - 3 C_2 - 18 C_3)");
//! ```

pub mod algebra;
pub mod binomial;
pub mod error;
pub mod group;
pub mod letter;
pub mod limits;
pub mod poset;
pub mod ppartition;
pub mod scalar;
pub mod verify;

pub use algebra::{
    ClassAlgebra, ClassPartition, ClosureReport, DesAlgebra, GroupAlgebraElement, IdempotentTable, Polynomial,
    StructureConstants,
};
pub use error::{Error, Result};
pub use group::{ColoredComposition, ColoredGroup, ColoredPermutation, DescentProfile};
pub use letter::ColoredLetter;
pub use limits::Limits;
pub use poset::{AnchoredWord, ColoredPoset};
pub use ppartition::TruncatedSeries;
pub use scalar::Scalar;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Polynomials with exact rational coefficients.
pub type QPolynomial = Polynomial<Rational>;
/// Group-algebra elements with exact rational coefficients.
pub type QElement = GroupAlgebraElement<Rational>;
/// Group-algebra elements with `f64` coefficients, for quick exploration.
pub type F64Element = GroupAlgebraElement<f64>;
/// Class-collapsed multiplication over the rationals.
pub type QClassAlgebra = ClassAlgebra<Rational>;

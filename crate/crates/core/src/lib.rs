//! Exact computations with Lie color algebras, omni-Lie color algebras and
//! Lie color 2-algebras.

pub mod coloralg;
pub mod cyclotomic;
pub mod fixtures;
pub mod grading;
pub mod gvs;
pub mod lc2;
pub mod linalg;
pub mod linf2;
pub mod omni;
pub mod scalar;
pub mod tensor;
pub mod verdict;

/// Scalars in `Q(ζ_m)`.
pub type Scalar = cyclotomic::Cyclotomic;
/// Scalars in `Q`, enough whenever ε takes only the values ±1.
pub type Rational = num_rational::BigRational;

//! Torsion-class invariants of finitely generated groups.
//!
//! Groups are direct products of built-in families ([`group`]). On top of
//! them: power-conjugacy classes and the counts `F`, `F^pol` ([`torsion`]),
//! exact group-algebra traces ([`trace`]), conjugacy growth ([`growth`]),
//! closed forms ([`formulas`]) and the derived rank bounds ([`bounds`]).

pub mod algebra;
pub mod bounds;
pub mod error;
pub mod formulas;
pub mod group;
pub mod growth;
pub mod linalg;
pub mod scalar;
pub mod torsion;
pub mod trace;
pub mod validate;

pub use error::{GroupError, Result};
pub use group::{Element, Group, GroupOptions, GroupSpec, OrderResult};

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Group-algebra elements with rational coefficients.
pub type GroupAlgebra = algebra::GroupAlgebraElement<Rational>;
/// Rational matrix, row-major.
pub type TraceMatrix = Vec<Vec<Rational>>;
pub type DegreeFit = growth::DegreeFit<f64>;
pub type MajorantParams = growth::MajorantParams<f64>;
pub type MajorantSums = growth::MajorantSums<f64>;

//! Raising-operator formulas for Macdonald polynomials.
//!
//! The crate computes modified Macdonald polynomials, their `(m, n)`
//! generalizations, Hall-Littlewood polynomials and integral forms by
//! contracting products of raising-operator factors into finite weight
//! series and symmetrizing. An independent LLT / HHL oracle and the
//! `nabla` operator are provided for verification.

pub mod error;
pub mod laurent;
pub mod macdonald;
pub mod oracle;
pub mod shapes;
pub mod suites;
pub mod symfunc;
pub mod weyl;

pub use error::{Error, Result};
pub use laurent::{FracQT, LaurentQT, Specialization, Var};
pub use shapes::{ColumnDiagram, Composition, Partition};
pub use symfunc::SchurExpansion;

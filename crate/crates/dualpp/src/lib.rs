//! Exact-rational workbench for dual pre-Poisson algebras.
//!
//! Algebras are stored as structure-constant tensors over an exact field
//! (rationals by default). Every defining identity is multilinear, so each
//! checker evaluates it on all tuples of basis vectors and reports every
//! nonzero residual.

pub mod algebra;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod kernel;
pub mod operad;
pub mod quadratic;
pub mod report;
pub mod representations;
pub mod ybe;

pub use algebra::{check_structure, Algebra, StructureKind};
pub use error::{Error, Result};
pub use kernel::{Field, Matrix, Tensor3, TruncatedSeries, Q};
pub use report::{VerificationReport, Witness};
pub use representations::Representation;

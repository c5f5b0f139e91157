//! Exact scalars, dense matrices, sparse 3-tensors and truncated series.

mod field;
mod matrix;
mod series;
mod tensor;

pub use field::{add_vec, axpy, frac, int, is_zero_vec, scale_vec, sub_vec, unit, Field, Q};
pub use matrix::{flip, invert, kron, Matrix};
pub use series::{series_compose, TruncatedSeries};
pub use tensor::Tensor3;

//! Exact linear algebra over `Z` and `Z/m`.

mod hermite;
mod howell;
mod matrix;
mod snf;
mod solve;
pub mod system;

pub use hermite::{column_hermite, column_hermite_basis, ColumnHermite};
pub use howell::{howell_form, HowellForm};
pub use matrix::Matrix;
pub use snf::{smith_normal_form, SmithDecomposition};
pub use solve::{column_span_basis, in_column_span, kernel_basis, solve_right};
pub use system::{LinearSystem, Solution, Unknown};

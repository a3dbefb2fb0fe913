//! Exact integer polynomial arithmetic. Nothing in here rounds.

pub mod cyclotomic;
pub mod matrix;
pub mod poly;
pub mod resultant;
pub mod sturm;
pub mod transform;

pub use cyclotomic::{cyclotomic_poly, cyclotomic_zero_exists};
pub use matrix::det_bareiss;
pub use poly::{normalize_alexander, IntLaurentPoly, IntPoly};
pub use resultant::resultant;
pub use sturm::{sturm_count, IsolatingInterval, RootIsolation, SturmChain};
pub use transform::{power_transform, reciprocal_decompose};

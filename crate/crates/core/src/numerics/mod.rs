//! Certified numerics: interval arithmetic over MPFR, root isolation and
//! Mahler measures.

pub mod ball;
pub mod complex;
pub mod mahler;
pub mod roots;
pub mod unit_circle;

pub use ball::{CertifiedReal, DEFAULT_PRECISION_CAP, DEFAULT_RADIUS};
pub use complex::ComplexBall;
pub use mahler::{cyclic_norm, log_mahler, log_mahler_with_cap};
pub use roots::{isolate_roots, isolate_roots_with_cap, CertifiedComplexBox};
pub use unit_circle::{unit_circle_root_count, unit_circle_roots, RealAlgebraic, UnitCircleRoot};

//! Knot-level invariants: Alexander polynomial, Levine–Tristram signatures,
//! τ and ρ.

pub mod hermitian;
pub mod profile;
pub mod record;
pub mod seifert;
pub mod turn;

pub use profile::{SignatureJump, SignatureProfile};
pub use record::{DeclaredJump, KnotRecord, KnotSpec};
pub use seifert::SeifertMatrix;
pub use turn::{parse_rational, Turn};

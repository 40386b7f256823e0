//! Braid-group computations around the Dehornoy order: handle reduction,
//! Dehornoy floors, exact fractional Dehn twist coefficients (FDTC), and the
//! genus and concordance bounds that relate them to knots.

pub mod braid;
pub mod cli;
pub mod corpus;
pub mod dehornoy;
pub mod error;
pub mod families;
pub mod fdtc;
pub mod invariants;
pub mod murasugi;
pub mod qp;
pub mod rational;

pub use braid::{BraidWord, Letter, Permutation, Sign};
pub use dehornoy::{compare, handle_reduce, order_sign, Limits, OrderSign};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use fdtc::{dehornoy_floor, fdtc_exact, FdtcResult, FloorResult};
pub use invariants::{AuditInputs, InvariantBounds, Predicate};
pub use murasugi::Murasugi3Form;
pub use qp::{Syllable, SyllableWord};
pub use rational::Rational;

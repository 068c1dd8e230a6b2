//! Exact arithmetic for generalized Fibonacci sequences and the weighted,
//! binomial and double binomial sum identities they satisfy.
//!
//! Every term is an arbitrary-precision [`Integer`], every weight and every
//! evaluated side of an identity is a canonical [`Rational`]. Nothing here
//! touches floating point.
//!
//! The crate is layered bottom-up:
//!
//! * [`seq`] evaluates Fibonacci, Lucas and arbitrary-seed terms at any
//!   integer index, plus binomial coefficients and a brute-force oracle.
//! * [`engine`] implements the generic sum identities for arbitrary second-
//!   and third-order rules over any [`engine::TermAccessor`].
//! * [`identities`] checks the five fundamental identities.
//! * [`sums`] holds the Fibonacci-specialized theorems and corollaries.
//! * [`verify`] is the identity registry, the grid sweeper and the report
//!   writers.

pub mod engine;
mod error;
pub mod exact;
pub mod identities;
pub mod seq;
pub mod sums;
pub mod verify;

pub use engine::{SecondOrderRule, SumComparison, TermAccessor, ThirdOrderRule};
pub use error::{Error, Result};
pub use exact::{Integer, Rational};
pub use seq::{binom, fib, gen_term, gen_term_oracle, lucas, SequenceSpec};

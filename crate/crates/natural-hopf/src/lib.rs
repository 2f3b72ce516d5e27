//! Natural Hopf algebras of free operads and of some of their quotients,
//! together with their polynomial realizations over forest-like alphabets.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers
//! and infinite alphabets are handled through explicit finite truncations.
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod alphabet;
pub mod enumerate;
pub mod error;
pub mod forest;
pub mod hopf;
pub mod lincomb;
pub mod positions;
pub mod quotient;
pub mod syntax;
pub mod signature;
pub mod term;
pub mod trimmed;
pub mod wqsym;

pub use alphabet::{ForestLikeAlphabet, Letter, Polynomial, Word};
pub use error::Error;
pub use forest::{AdmissiblePair, Forest, NodeTable};
pub use lincomb::{LinComb, Monoid};
pub use signature::{Gen, Signature};
pub use term::Term;
pub use trimmed::{TrimmedForest, TrimmedTree};

pub type Result<T> = core::result::Result<T, Error>;

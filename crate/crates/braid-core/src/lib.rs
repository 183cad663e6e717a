//! Braid-group computation toolkit built around word reversing in Garside
//! monoids.
//!
//! The crate turns any signed braid word into a quasi-geodesic sigma-definite
//! representative (the generator with highest index occurs with a single
//! sign), for both the classical positive braid monoid and the dual
//! Birman--Ko--Lee monoid. The building blocks are exposed individually:
//!
//! * [`words`] — generator alphabets, signed words, parsing and printing;
//! * [`reversing`] — the generic right/left reversing engine over a
//!   [`reversing::GarsideContext`], with divisibility tests and left gcd;
//! * [`classical`] — the positive braid monoid instance and the
//!   flip splitting of positive braids;
//! * [`fractions`] — Garside quotients, the Garside--Thurston normal form
//!   and braid index computation;
//! * [`sigmadef`] — sigma-definite classification, the main normalization
//!   pipeline and the Dehornoy order comparator;
//! * [`dual`] — band generators, machine-derived lcm selector tables for the
//!   dual monoid, and the dual normalization pipeline;
//! * [`oracle`] — an independent ground truth: the faithful free-group
//!   action, Cayley-ball BFS and brute-force divisor enumeration.
//!
//! The library is `no_std` (requires `alloc`); IO, CLI and file formats live
//! in the companion `braid-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod lattice;

pub mod classical;
pub mod dual;
pub mod fractions;
pub mod oracle;
pub mod reversing;
pub mod sigmadef;
pub mod words;

pub use error::{Error, ParseError};
pub use words::{BraidWord, Family, Generator, Letter, Sign};

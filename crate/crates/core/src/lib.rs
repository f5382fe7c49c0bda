//! Algebraic machinery for marked surfaces and homology cylinders.
//!
//! The crate is organised around a free group `F` of rank `b = 2g + n - 1`
//! attached to a compact surface of genus `g` with `n > 0` boundary
//! components.  On top of it live:
//!
//! * reduced words and the boundary word ([`word`]),
//! * truncated Magnus expansions and lower-central-series weights
//!   ([`series`]),
//! * free-Lie-algebra rank counts ([`ranks`]),
//! * automorphisms of free nilpotent quotients ([`nilq`]),
//! * cylinder classes carrying a Milnor-type invariant tuple and the
//!   induced automorphism, with their group law, filtrations, basis
//!   changes and embedding pushforwards ([`cylinder`]),
//! * towers of finite abelian `p`-covers with characters ([`cover`]),
//! * exact cyclotomic arithmetic, certified sign evaluation and
//!   Witt-style signature invariants of Seifert matrices ([`cyclo`],
//!   [`interval`], [`seifert`]),
//! * satellite-infection signature bookkeeping and independence
//!   certificates ([`infect`]),
//! * a self-check suite exercising the whole stack ([`checks`]).
//!
//! Everything is `no_std + alloc`; all arithmetic is exact (big integers
//! and rationals), and the few numeric sign decisions are made with
//! adaptive-precision rational interval arithmetic.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod checks;
pub mod corpus;
pub mod cover;
pub mod cyclo;
pub mod cylinder;
pub mod error;
pub mod infect;
pub mod interval;
pub mod intmat;
pub mod lyndon;
pub mod nilq;
pub mod poly;
pub mod ranks;
pub mod rng;
pub mod seifert;
pub mod series;
pub mod word;

pub use error::Error;

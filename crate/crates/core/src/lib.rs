//! Exact graded characters of fusion products of Kirillov-Reshetikhin
//! modules for `sl(r+1)`, computed with q-difference raising operators, and
//! checkers for the operator identities they satisfy.
//!
//! Everything is exact: coefficients are big integers, Laurent polynomials
//! in `q` or `w = v^(1/2)`, or reduced rational functions.
#![no_std]

extern crate alloc;

pub mod characters;
pub mod combinat;
pub mod error;
pub mod macdonald;
pub mod poly;
pub mod qdiff;
pub mod qtorus;
pub mod symfun;
pub mod verify;
pub mod whittaker;

pub use error::{Error, Result};

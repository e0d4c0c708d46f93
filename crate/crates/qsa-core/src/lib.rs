//! Exact arithmetic for shuffle algebras of quantum affine algebras and
//! Yangians: the shuffle product, PBWD bases, specialization maps and
//! membership predicates.
#![no_std]

extern crate alloc;

pub mod error;
pub mod membership;
pub mod multipoly;
pub mod pbwd;
pub mod ring;
pub mod shuffle;
pub mod special;

pub use error::{Error, Result};

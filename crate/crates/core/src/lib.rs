//! Exact construction and verification of hyper-Kähler symmetric triples
//! through quadratic extensions of graded nilpotent Lie algebras.

pub mod accheck;
pub mod catalog;
pub mod cli;
pub mod cochain;
pub mod error;
pub mod exactalg;
pub mod io;
pub mod liealg;
pub mod quadext;
pub mod report;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::Verdict;

//! Solvable radicals of finite permutation groups and of finite-dimensional
//! Lie algebras over the rationals.
//!
//! The group side compares the set of radical elements (those `y` for which
//! every `⟨x, y⟩` is solvable) against an independently computed solvable
//! radical. The Lie side does the same with the Killing-form radical and the
//! iterated-bracket words `v_n`. The [`verify`] module checks the generation
//! results that drive these characterizations on concrete groups.

pub mod error;
pub mod perm;
pub mod group;
pub mod classes;
pub mod catalog;
pub mod radical;
pub mod verify;
pub mod linalg;
pub mod lie;
pub mod cli;

pub use error::{Error, Result};
pub use group::{DerivedSeries, PermGroup, DEFAULT_CAP};
pub use perm::{parse_cycles, print_cycles, Permutation};

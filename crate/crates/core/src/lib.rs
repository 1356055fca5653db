//! Radicals, prime-type submodules and radical formulas of finite rings and
//! left modules, computed exhaustively over Cayley tables.
//!
//! Start from [`catalog`] for ready-made rings and modules, [`radicals`] for
//! the predicates, and [`suites`] for the theorem checks.

pub mod catalog;
pub mod cli;
pub mod config;
pub mod error;
pub mod limits;
pub mod module;
pub mod radicals;
pub mod report;
pub mod ring;
pub mod search;
pub mod substructure;
pub mod suites;

pub use error::{Error, Result};
pub use module::{FiniteModule, ModuleHom};
pub use radicals::{ModuleAnalysis, RadicalReport, RingAnalysis, Verdict, Witness};
pub use ring::FiniteRing;
pub use substructure::{Kind, Substructure};

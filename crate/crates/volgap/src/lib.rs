//! Command-line front end for `volgap-core`: the claim suite, gap tables and
//! single-value queries.

#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![deny(missing_docs)]

pub mod claims;
pub mod cli;
mod error;
pub mod render;
pub mod table;

pub use self::error::CliError;

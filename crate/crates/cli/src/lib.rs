//! Command-line plumbing for the workbench: carrier expressions, set
//! and multiplier parsing, report shaping, and the full verification
//! suite the `verify` subcommand and the acceptance tests share.

pub mod input;
pub mod report;
pub mod verify;

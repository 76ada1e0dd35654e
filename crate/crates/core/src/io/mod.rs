//! Group files, expressions, reports and the command operations.

pub mod commands;
mod expr;
mod group_file;
mod report;

pub use expr::{parse_expr, MAX_EXPONENT};
pub use group_file::{parse_group_file, Group, GroupFile};
pub use report::Report;

//! File formats, reports and subcommands of the `nakayama` tool.

pub mod commands;
pub mod format;
pub mod json;
pub mod report;

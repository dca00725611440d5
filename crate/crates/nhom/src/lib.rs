//! Relation files, report rendering and the `nhom` command line on top of
//! `nhom-core`.

pub mod cli;
pub mod commands;
pub mod par;
pub mod relfile;

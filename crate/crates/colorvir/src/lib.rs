//! Std companion to `colorvir-core`: rayon drivers, deterministic JSON and
//! table reports, and the `colorvir` command line.

pub mod cli;
pub mod config;
pub mod drivers;
pub mod report;

pub use colorvir_core;

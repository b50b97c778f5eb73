//! Std companion to `mim-core`: the edge-list file format, wall-clock
//! budgets, per-instance bound reports, parallel sweeps to CSV, the
//! verification suites and the `mim` command line.

pub mod budget;
pub mod cli;
pub mod edgelist;
pub mod report;
pub mod sweep;
pub mod verify;

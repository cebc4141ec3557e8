//! File formats, parallel drivers and the command-line front end for
//! [`thresholdkit_core`].

pub mod cli;
pub mod formats;
pub mod manifest;
pub mod parallel;

pub use thresholdkit_core as core;

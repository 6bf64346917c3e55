//! File formats, the experiment harness, and the command-line front end for
//! [`lattice_rearrange_core`].

pub mod bench;
pub mod formats;

pub use lattice_rearrange_core as core;

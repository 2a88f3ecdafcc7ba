//! Exact pole and residue analysis of degenerate Eisenstein series on the
//! quasi-split forms of `Spin(8)`.

pub mod affine;
pub mod characters;
pub mod error;
pub mod lfun;
pub mod rational;
pub mod rootdata;

pub use error::{Error, Result};
pub mod cli;
pub mod ctan;
pub mod gk;
pub mod jacquet;
pub mod residue;
pub mod siegelweil;
pub mod verify;

//! Exact verification toolkit for low-degree characters of finite spin groups:
//! polynomial arithmetic in `q`, symbol combinatorics, unipotent degrees,
//! exhaustive small-degree scans, finite-geometry oracles and the modular
//! degree lists.

pub mod arith;
pub mod brauer;
pub mod degrees;
pub mod error;
pub mod finitegeom;
pub mod gapscan;
pub mod qpoly;
mod serde_text;
pub mod symbols;
pub mod verify;

pub use error::{Error, Result};
pub use qpoly::QPoly;
pub use symbols::{Family, FamilyTag, Symbol};

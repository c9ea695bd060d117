//! Additive (1+u)-constacyclic codes over Z2 x R with R = F2 + uF2, u^2 = 0.
//!
//! The crate builds codes from generator polynomials, enumerates them
//! explicitly, and checks structural formulas (sizes, Type parameters,
//! duals, Gray images) against exhaustive computation.

pub mod codeword;
pub mod duality;
pub mod error;
pub mod examples;
pub mod gf2;
pub mod gray;
pub mod linalg;
pub mod report;
pub mod ring;
pub mod structure;
pub mod text;
pub mod workbench;

pub use codeword::{Ambient, Case, CodeSet, CodeSpec, Codeword};
pub use error::{Error, Result};
pub use gf2::{BinPoly, Degree, Factorization};
pub use ring::{AmbientElement, RElem, RPoly};

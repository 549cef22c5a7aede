//! Kirillov–Reshetikhin crystals `B_s(x)` of affine type A, ıcrystal
//! structures for the quasi-split Satake diagrams A.1, A.3 and A.4, and the
//! combinatorial R- and K-matrices together with exhaustive checkers for the
//! Yang–Baxter and reflection equations.

pub mod coefficient;
pub mod crystal;
pub mod error;
pub mod icrystal;
pub mod kmatrix;
pub mod lattice;
pub mod rmatrix;
pub mod satake;
pub mod verify;

pub use coefficient::ICoefficient;
pub use crystal::{AffineElement, Composition, CrystalElement, Op, OrientedSlot, Tensor, Weight};
pub use error::{Error, Result};
pub use icrystal::{CrystalGraph, FormalSum, IWeight};
pub use kmatrix::A3Case;
pub use rmatrix::{RFormula, RKind};
pub use satake::{Family, Pairing, SatakeDiagram};
pub use verify::CheckReport;

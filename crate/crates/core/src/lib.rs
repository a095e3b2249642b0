//! Exact symbolic and numeric tools for the geometry of simple, simply
//! connected compact Lie groups at a positive level:
//!
//! * root data and the basic inner form, with all arithmetic over exact
//!   rationals ([`lattice`]);
//! * the (affine) Weyl group, alcove folding, and Bruhat covers ([`weyl`]);
//! * a formal character ring with exact truncation bookkeeping and exact
//!   division by `e^α − 1` ([`char_ring`]);
//! * level-`k` theta characters and divisibility certificates for their
//!   Weyl differences ([`theta`]);
//! * the double-lattice/Weyl/SL₂(ℤ) symmetry groups of the associated line
//!   bundle and numeric section evaluation ([`modular`]);
//! * GKM-style membership tests in equivariant K-theory ([`gkm`]);
//! * exact stalk/support analysis at torus points ([`stalk`]).
//!
//! Everything symbolic is exact; floating point appears only in the numeric
//! evaluation layer of [`modular`], where the functions return explicit error
//! bounds instead of silently rounding.

pub mod char_ring;
pub mod error;
pub mod exact;
pub mod gkm;
pub mod lattice;
pub(crate) mod linalg;
pub mod modular;
pub mod sample;
pub mod serial;
pub mod stalk;
pub mod theta;
pub mod weyl;

pub use error::{Error, Result};

//! Exact computations on finite T0 spaces: subset systems, Smyth and Hoare
//! power spaces, sobriety-type checkers, reflections, and certificates for a
//! few classical infinite counterexamples.

pub mod bits;
pub mod check;
pub mod config;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod map;
pub mod power;
pub mod space;
pub mod sweep;
pub mod system;
pub mod zoo;

pub use bits::Bits;
pub use config::Caps;
pub use error::{Error, Result};
pub use map::SpaceMap;
pub use space::{ClosedSet, CompactSat, Description, FamilyKind, FiniteSpace, OrderOp, PointSet};

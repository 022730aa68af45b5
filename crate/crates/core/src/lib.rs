//! Exact symbolic intersection theory.
//!
//! The engine covers Chow rings of products of projective spaces,
//! Grassmannians (Schubert calculus) and projective bundles; characteristic
//! classes with Riemann–Roch; symmetric determinantal loci and their double
//! covers; and the mod-2 cohomology of `BSO(4)` with Steenrod squares.
//! Every computation is exact.

pub mod appendix;
pub mod charclass;
pub mod error;
pub mod exact;
pub mod ranklocus;
pub mod ring;
pub mod schubert;
pub mod topology;
pub mod varieties;

pub use error::{Error, Result};
pub use ring::{IntersectionRing, TruncatedRing};

//! Exact workbench for rank-two wild Vafa-Witten pairs on the projective plane.
//!
//! Every number produced here is an exact integer or rational. Closed-form
//! dimension formulas are paired with independent routes (Riemann-Roch,
//! Kunneth on the conic cover, brute-force linear algebra on explicit Higgs
//! fields) and [`verify`] runs the whole cross-check suite.

pub mod chow;
pub mod cohomology;
pub mod exact;
pub mod fixed_points;
pub mod moduli;
pub mod report;
pub mod schwarzenberger;
pub mod split;
pub mod verify;

pub use chow::{ChernPair, ChowClass};
pub use exact::{HomPoly, Rational, RationalMatrix};
pub use fixed_points::{enumerate_fixed, FixedComponent, StabilityFlag};
pub use moduli::{HyperDim, SpectralTerms};
pub use report::{Discrepancy, Report, Status};
pub use schwarzenberger::{H1Mode, L1Bundle, L2Bundle};
pub use split::{PolyMatrix2, SplitPair};

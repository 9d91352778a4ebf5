//! Symmetric-cube and adjoint-cube L-functions for GL(2).
//!
//! The crate computes unramified local factors for `sym³` and the adjoint
//! cube representation, checks the polynomial identities that tie them to
//! triple products, Rankin–Selberg products and monomial (dihedral) Hecke
//! factors, and models the G₂ root-system calculus behind the unramified
//! intertwining operator whose constant term carries these L-functions.
//! Global numerics (Euler products, Dirichlet series, approximate
//! functional equations) are layered on top.

pub mod analytic;
pub mod cyclo;
pub mod dd;
pub mod delta;
pub mod g2root;
pub mod ingest;
pub mod intertwining;
pub mod localfactor;
pub mod monomial;
pub mod poly;
pub mod satake;
pub mod scalar;
pub mod special;

pub use analytic::{AfeConfig, CoefficientTable, EulerData};
pub use cyclo::Cyclo;
pub use ingest::{ParsedForm, ParsedHeckeData};
pub use localfactor::RepTag;
pub use monomial::HeckeLocalData;
pub use poly::{Poly, ReciprocalPoly};
pub use satake::SatakeClass;
pub use scalar::Scalar;

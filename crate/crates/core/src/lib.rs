//! Norm-set constructions in finite projective spaces, the incidence graphs
//! of their linear representations, and certificates that those graphs
//! contain neither a 4-cycle nor a θ(3,t).
//!
//! Pipeline: [`construct::build_norm_set`] → [`construct::PointSet::audit`]
//! → [`linrep::build_linear_representation`] → [`verify`] → [`bounds`].
//! [`oracle`] holds brute-force counterparts of the fast paths.

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod gf;
pub mod graph;
pub mod linrep;
pub mod oracle;
mod par;
pub mod projgeom;
pub mod verify;

pub use error::{Error, Result};
pub use par::{current_threads, with_jobs};

//! Exact rotation-set computation and localized-entropy bounds for a family
//! of two-dimensional potentials on the one-sided full shift over `{0,1,2}`.
//!
//! The library is organized around five subsystems:
//!
//! * [`symbolic`] — words, necklace canonicalization, enumeration of periodic
//!   orbits, and the `θ`-metric between periodic points.
//! * [`potential`] — the parameterized potential family: the point sequences
//!   `u_k`, `v_k`, `w_k`, exact evaluation on periodic points, rotation
//!   vectors, and finite-memory truncations.
//! * [`geometry`] — exact rational 2-D convex hulls, support functions,
//!   edge-slope sequences, and the `g` counterexample of a discontinuous
//!   concave usc function.
//! * [`transfer`] — de Bruijn transfer graphs, topological pressure by power
//!   iteration, Karp max-mean-cycle support functions, and the convex dual
//!   solver for localized entropy, with a small independent primal oracle.
//! * [`reproduce`] — end-to-end reports with stable CSV/SVG/JSON outputs and
//!   the acceptance checks behind the `verify` CLI subcommand.
//!
//! All geometry up to the transfer-graph boundary is exact rational
//! arithmetic ([`Rat`], [`Vec2Q`]); floating point enters only when edge
//! values are loaded into a [`transfer::TransferGraph`].

pub mod error;
pub mod exact;
pub mod geometry;
pub mod potential;
pub mod reproduce;
pub mod symbolic;
pub mod transfer;

pub use error::{Error, Result};
pub use exact::{rat, Rat, Vec2Q};
pub use geometry::{HullQ, SlopeSeq};
pub use potential::{PotentialParams, PotentialTable, ValueClass};
pub use symbolic::{PeriodicOrbit, Word};
pub use transfer::{GibbsData, SpectrumSample, TransferGraph};

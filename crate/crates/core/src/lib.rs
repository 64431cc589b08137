//! Signless Laplacian spectral radius of digraphs and degree-based upper
//! bounds on it.
//!
//! For a digraph `G` without loops or multiple arcs, `Q(G) = D(G) + A(G)`
//! where `D` holds the outdegrees. This crate computes the spectral radius
//! `q(G)` of `Q(G)` block by block over the strongly connected components
//! and evaluates a family of upper bounds built from outdegrees `d_i`,
//! 2-outdegrees `t_i = Σ_{i→j} d_j` and average 2-outdegrees
//! `m_i = t_i / d_i`.
//!
//! ```
//! use signless::{generate, bounds, spectral};
//!
//! let star = generate::bidirectional_star(4).unwrap();
//! let q = spectral::q_of(&star).unwrap();
//! assert!((q - 4.0).abs() < 1e-9);
//! assert_eq!(bounds::bound_thm31(&star).value(), Some(4.0));
//! ```
//!
//! Modules:
//!
//! - [`digraph`]: representation, degree profile, components, classification
//! - [`generate`]: cycles, complete digraphs, stars, bipartite families, random
//! - [`spectral`]: `Q(G)`, power iteration, row-sum brackets, ovals
//! - [`bounds`]: every bound with its applicability rules
//! - [`verify`]: invariant sweeps, table-row reconstruction, rankings
//! - [`edgelist`], [`report`], [`cli`]: file format, rendering, commands

pub mod bounds;
pub mod cli;
pub mod digraph;
pub mod edgelist;
pub mod error;
pub mod generate;
pub mod report;
pub mod spectral;
pub mod verify;

pub use bounds::{all_bounds, BoundId, BoundValue};
pub use digraph::{Classification, DegreeProfile, Digraph, SccDecomposition};
pub use error::{Error, Result};
pub use spectral::{spectral_radius, SolverOptions, SpectralResult};

//! Configuration spaces of disks and segments in the unit disk.
//!
//! This crate computes the combinatorial and geometric objects attached to
//! `Conf_{n,r}(D^2)` (n labeled disks of radius r in the unit disk) and
//! `Seg_{n,r}(D^2)` (n labeled oriented segments of length r):
//!
//! - [`forests`]: ordered forests, the free basis of `H^*(Conf_n)`, kernel
//!   generators for the n = 4 restriction map, and the per-degree kernel
//!   ladder as exact integer ranks.
//! - [`pairing`]: integer pairings between torus homology classes and
//!   forest cohomology classes, the unimodular dual-basis matrix, the
//!   dual-basis expansion recursion, and an independent numeric degree
//!   oracle for torus maps.
//! - [`geometry`]: disk/segment configurations, tautological functions, the
//!   recursive spinning constructions `k_n` and `q_n`, matching and swap
//!   families, scaled embeddings, and greedy disk packing.
//! - [`balance`]: contact (stress) graphs, balancedness as linear
//!   feasibility, enclosing balls of trees, and a multistart search for
//!   balanced configurations.
//! - [`segments`]: the perpendicular two-segment threshold, hourglass trap
//!   parameters, grid certification of trapping, and related obstructions.
//!
//! Every runnable capability has an example under `examples/`; the
//! `confspace` binary exposes the same operations as subcommands, and the
//! acceptance suite lives in `tests/acceptance.rs` (also runnable as
//! `confspace verify all`).

pub mod acceptance;
pub mod balance;
pub mod cli;
pub mod exact;
pub mod forests;
pub mod geometry;
pub mod io;
pub mod pairing;
pub mod plane;
pub mod segments;
pub mod svg;

pub use forests::{CohomClass, ComponentProfile, OrderedForest};
pub use geometry::{DiskConfig, PackedLayout, SegConfig};
pub use pairing::{PairingMatrix, Permutation};

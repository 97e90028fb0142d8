//! Exact counting of domino and monomer-dimer tilings of thin grid regions.
//!
//! The crate is organised around three layers:
//!
//! * [`exact`] — an exact arithmetic kernel: arbitrary-precision integers and
//!   rationals, dense univariate and sparse multivariate polynomials, generic
//!   matrices with exact linear solving, and canonical rational functions with
//!   power-series expansion.
//! * [`region`], [`direct`] — the geometric data model (finite sets of unit
//!   cells, plus builders for rectangles, frames and crosses) and a
//!   memoised dynamic-programming counter that serves as the ground truth for
//!   every other engine.
//! * [`transfer`], [`composite`], [`cfinite`], [`stats`] — transfer matrices
//!   for fixed-width strips, seam-matrix assembly for frames and crosses,
//!   C-finite recurrence guessing / verification with rational generating
//!   functions, and exact moment statistics of tile-count distributions.
//!
//! Everything is computed over exact integers and rationals; there is no
//! floating point anywhere except the explicitly approximate growth-rate
//! estimate in [`stats`].
//!
//! The crate is `no_std` (it requires `alloc`). All values are immutable once
//! constructed and all free functions are pure; the few caching structures
//! ([`transfer::TmCache`], [`composite::Engine`]) take `&mut self` and can be
//! instantiated per thread for concurrent use.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cfinite;
pub mod composite;
pub mod direct;
pub mod exact;
pub mod region;
pub mod stats;
pub mod transfer;

pub use direct::TilingMode;
pub use exact::{Int, Rat};

//! Multipartite total-correlation measures for finite-dimensional density
//! operators.
//!
//! The crate is organized in four layers:
//!
//! - [`linalg`]: a dense complex matrix kernel (Hermitian eigendecomposition,
//!   operator functions, Kronecker products) that everything else builds on;
//! - [`states`]: multipartite density operators, partial traces, and the
//!   standard state families (GHZ, W, classically correlated mixtures,
//!   Haar/Ginibre random ensembles);
//! - [`correlations`]: scalar correlation measures in bits — von Neumann
//!   entropy, quantum relative entropy, bipartite and multipartite mutual
//!   information, marginal sums, and residual three-partite correlation;
//! - [`audit`]: machine verification of the entropy equalities and
//!   inequalities these measures satisfy (strong subadditivity and its
//!   extension, generalized monogamy relations, the pure-state distribution
//!   identity), on single states or random ensembles.
//!
//! All logarithms are base 2; every measure is reported in bits. The crate is
//! `no_std` (with `alloc`): all operations are pure functions on immutable
//! values and safe to evaluate in parallel.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod audit;
pub mod correlations;
mod error;
pub mod linalg;
pub mod states;

pub use error::Error;
pub use linalg::{ComplexMatrix, Spectrum, C64};
pub use states::{DensityOperator, SubsystemSet, SystemShape};

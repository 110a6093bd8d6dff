//! Exact symbolic verification of quantum current algebras, Drinfeldians,
//! and Yangians for the classical series A, B, C, D.
//!
//! The crate is organized as a small computer-algebra stack:
//!
//! - [`scalar`] — exact multivariate rational functions over a fixed
//!   variable set (the coefficient field for everything else),
//! - [`rootsys`] — root-system data for the four classical series,
//! - [`freealg`] — a weight-graded free noncommutative algebra with
//!   q-commutators, tensor squares/cubes, and classical limits,
//! - [`relations`] — machine-readable catalogs of the defining relations
//!   of each algebra family, composite root vectors, and the weight-(−θ)
//!   element used to deform the affine generator,
//! - [`reps`] — exact matrix representations: the verification oracle,
//! - [`hopf`] — coproduct/antipode/counit data and Hopf-axiom checks,
//! - [`cybe`] — the classical Yang-Baxter machinery for sl₂,
//! - [`suite`] — the check suites and report plumbing behind the `qkmv`
//!   command-line tool.
//!
//! Everything is computed in exact arithmetic; there is no floating point
//! anywhere in the crate. Matrix checks are necessary conditions only: the
//! shipped vector representations are not faithful on the whole enveloping
//! algebra, and reports say so.

pub mod cybe;
pub mod freealg;
pub mod hopf;
pub mod relations;
pub mod reps;
pub mod rootsys;
pub mod scalar;
pub mod suite;

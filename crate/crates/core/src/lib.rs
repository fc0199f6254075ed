//! Exact combinatorics behind the dimension counting for orbifold
//! Gromov-Witten invariants of weighted blow-ups at smooth points.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact`]: arbitrary-precision rationals, `frac`, `floor`, `lcm`.
//! - [`cyclic`]: weights, sector labels, degree shifting numbers and the
//!   twisted sectors of `WP(w)`.
//! - [`wps`]: Betti ranks, line orbibundles, and `c_1` of the model spaces
//!   `WP(w, 1)` and its weighted blow-up.
//! - [`moduli`]: virtual dimensions of absolute and relative moduli spaces
//!   and the contact-order congruence.
//! - [`degeneration`]: degeneration components, the gluing coefficient,
//!   vanishing certificates and end-to-end certification reports.
//! - [`cli`]: the `orbiblow` command-line front end.

pub mod cli;
pub mod cyclic;
pub mod degeneration;
pub mod error;
pub mod exact;
pub mod moduli;
pub mod wps;

pub use cyclic::{degree_shift, enumerate_sectors, sector_inverse, SectorLabel, TwistedSector, Weight};
pub use error::{Error, Result};
pub use exact::Rational;

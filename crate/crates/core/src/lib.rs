//! Period map for triple covers of the projective plane branched along
//! six-line configurations with two triple points, and its inverse by
//! genus-2 theta functions.
//!
//! The pipeline: a real configuration (x1, x2) determines a genus-2 curve
//! whose period integrals over four explicit chains assemble into a point
//! (eta, z1, z2) of the domain B x C^2 (B the right half plane). A modular
//! embedding carries that point to (tau, zeta) in the Siegel upper half
//! space, where one theta value cuts out the image of the map and theta
//! quotients recover (x1, x2), the cross-ratio t, and the u-coordinate of
//! points on the curve. A congruence subgroup over the Eisenstein integers
//! acts on everything compatibly; the recovered moduli are constant along
//! its orbits.
//!
//! Module map:
//! * [`eisenstein`] — exact arithmetic in `Z[rho]` and the lattice forms;
//! * [`quad`] — Gauss-Jacobi and tanh-sinh engines for the singular integrals;
//! * [`curve`] — chain integrals and the periods y1..y4 of the curve;
//! * [`periodmap`] — the period point, the modular embedding, Abel-Jacobi
//!   images of branch points and of on-curve sample points;
//! * [`theta`] — genus-2 theta with rational characteristics;
//! * [`inverse`] — theta-quotient inversion and the zero-pattern table;
//! * [`modgroup`] — the level subgroup, its domain action, and the exact
//!   symplectic embeddings.

pub mod curve;
pub mod eisenstein;
pub mod error;
pub mod inverse;
pub mod linalg;
pub mod modgroup;
pub mod periodmap;
pub mod quad;
pub mod theta;

pub use curve::{ConfigPoint, CurvePeriods};
pub use error::{Error, Result};
pub use inverse::InverseResult;
pub use periodmap::{PeriodPoint, SiegelPoint};
pub use quad::QuadSpec;

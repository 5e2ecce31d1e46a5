//! The period point (eta, z1, z2) of a configuration and its embedding into
//! the Siegel upper half space H_2 x C^2.

use num_complex::Complex64;

use crate::curve::{self, omega, ConfigPoint};
use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::quad::{QuadSpec, Scheme};

/// A point of the period domain D = B x C^2, B the right half plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodPoint {
    pub eta: Complex64,
    pub z1: Complex64,
    pub z2: Complex64,
}

impl PeriodPoint {
    /// Validates Re(eta) > 0.
    pub fn new(eta: Complex64, z1: Complex64, z2: Complex64) -> Result<Self> {
        if eta.re <= 0.0 {
            return Err(Error::Domain(format!(
                "eta = {eta} has nonpositive real part"
            )));
        }
        Ok(PeriodPoint { eta, z1, z2 })
    }
}

/// A point (tau, zeta) with tau symmetric and Im(tau) positive definite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiegelPoint {
    pub tau: Mat2,
    pub zeta: [Complex64; 2],
}

impl SiegelPoint {
    pub fn new(tau: Mat2, zeta: [Complex64; 2]) -> Result<Self> {
        let asym = (tau.m[0][1] - tau.m[1][0]).norm();
        if asym > 1e-12 {
            return Err(Error::NotPositiveDefinite(format!(
                "tau not symmetric (|t12 - t21| = {asym:.3e})"
            )));
        }
        let (l_min, _) = im_eigenvalues(&tau);
        if l_min <= 0.0 {
            return Err(Error::NotPositiveDefinite(format!(
                "Im(tau) has min eigenvalue {l_min:.3e}"
            )));
        }
        Ok(SiegelPoint { tau, zeta })
    }

    /// Least eigenvalue of Im(tau); positive by construction.
    pub fn lambda_min(&self) -> f64 {
        im_eigenvalues(&self.tau).0
    }
}

/// Eigenvalues (min, max) of the symmetric 2x2 real matrix Im(tau).
fn im_eigenvalues(tau: &Mat2) -> (f64, f64) {
    let y11 = tau.m[0][0].im;
    let y12 = 0.5 * (tau.m[0][1].im + tau.m[1][0].im);
    let y22 = tau.m[1][1].im;
    let tr = y11 + y22;
    let det = y11 * y22 - y12 * y12;
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    (0.5 * (tr - disc), 0.5 * (tr + disc))
}

/// Forward period map: (x1, x2) -> (eta, z1, z2) = (y1/y2, y3/y2, y4/y2).
pub fn forward(cfg: &ConfigPoint, spec: &QuadSpec) -> Result<PeriodPoint> {
    let p = curve::curve_periods(cfg, spec)?;
    if p.y2.norm() == 0.0 {
        return Err(Error::Invariant("y2 vanished".into()));
    }
    let eta = p.y1 / p.y2;
    if eta.re <= 0.0 {
        return Err(Error::Invariant(format!(
            "Re(eta) = {} <= 0: branch convention bug",
            eta.re
        )));
    }
    Ok(PeriodPoint {
        eta,
        z1: p.y3 / p.y2,
        z2: p.y4 / p.y2,
    })
}

/// The constrained tau(eta) = (1/2) [[sqrt(-3)/eta, -1], [-1, sqrt(-3) eta]],
/// with sqrt(-3) = i sqrt(3).
pub fn tau_of_eta(eta: Complex64) -> Result<Mat2> {
    if eta.re <= 0.0 {
        return Err(Error::Domain(format!("Re(eta) = {} <= 0", eta.re)));
    }
    let s3 = Complex64::new(0.0, 3f64.sqrt());
    let half = Complex64::new(0.5, 0.0);
    Ok(Mat2::new([
        [half * s3 / eta, Complex64::new(-0.5, 0.0)],
        [Complex64::new(-0.5, 0.0), half * s3 * eta],
    ]))
}

/// Modular embedding j_D: (eta, z) -> (tau(eta), zeta) with
/// zeta = (1/2) ((z1/(1-omega) - z2/(1-omega^2)) / eta,
///               z1/(1-omega) + z2/(1-omega^2)).
pub fn embed_jd(p: &PeriodPoint) -> Result<SiegelPoint> {
    let tau = tau_of_eta(p.eta)?;
    let w = omega();
    let one = Complex64::new(1.0, 0.0);
    let a = p.z1 / (one - w);
    let b = p.z2 / (one - w * w);
    let zeta = [(a - b) / p.eta * 0.5, (a + b) * 0.5];
    SiegelPoint::new(tau, zeta)
}

/// Branch-point vectors p_0 = (0,0), p_1 = (1,0), p_t = (0,2), p_inf = (1,2).
pub const BRANCH_VECTORS: [[i64; 2]; 4] = [[0, 0], [1, 0], [0, 2], [1, 2]];

/// Abel-Jacobi images of the four branch points:
/// zeta(P_i) = (1/3)(-p_i U tau + p_i), row-vector convention.
pub fn abel_jacobi_branch_points(tau: &Mat2) -> [[Complex64; 2]; 4] {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 4];
    for (i, p) in BRANCH_VECTORS.iter().enumerate() {
        // row p U = (p2, p1)
        let pu = [p[1] as f64, p[0] as f64];
        for j in 0..2 {
            let ptau = pu[0] * tau.m[0][j] + pu[1] * tau.m[1][j];
            out[i][j] = (-ptau + p[j] as f64) / 3.0;
        }
    }
    out
}

/// Abel-Jacobi image of the on-curve point at u-coordinate `u_star` along the
/// gamma3 chain:
/// zeta(p) = ((A + B)/(2 y1), (A - B)/(2 y2)) with A, B the incomplete
/// integrals of the two normalized forms, carrying the same frozen calibration
/// units as `curve_periods`. At u_star = 1 - x1 this reproduces embed_jd of
/// the forward point.
pub fn on_curve_point(cfg: &ConfigPoint, u_star: f64, spec: &QuadSpec) -> Result<SiegelPoint> {
    let scheme = Scheme::GaussJacobi;
    let p = curve::curve_periods(cfg, spec)?;
    let w = omega();
    // Partial analogues of y3/(1-omega) and y4/(1-omega^2), same frozen units.
    let a = (-w) * curve::unit(1.0 / 3.0) * curve::incomplete_magnitude(cfg, u_star, spec, scheme)?;
    let b = Complex64::from(-curve::incomplete_dual_magnitude(cfg, u_star, spec, scheme)?);
    let a_over = a / p.y2;
    let b_over = b / p.y2;
    let tau = tau_of_eta(p.eta())?;
    let zeta = [(a_over - b_over) / p.eta() * 0.5, (a_over + b_over) * 0.5];
    SiegelPoint::new(tau, zeta)
}

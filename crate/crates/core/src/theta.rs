//! Genus-2 Riemann theta functions with rational characteristics,
//!
//! ```text
//!   theta_{a,b}(tau, zeta) =
//!     sum_{n in Z^2} exp[pi i {(n+a) tau (n+a)^t + 2 (n+a) (zeta+b)^t}],
//! ```
//!
//! evaluated by direct summation over an ellipse determined by Im(tau), with
//! the truncation radius certified from the Gaussian tail bound.
//! Characteristic arithmetic is exact (rationals); floating point enters only
//! in the final exponential sums.

use num_complex::Complex64;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::periodmap::SiegelPoint;

/// Rational characteristic pair (a, b), row 2-vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaChar {
    pub a: [Rational64; 2],
    pub b: [Rational64; 2],
}

impl ThetaChar {
    pub fn new(a: [Rational64; 2], b: [Rational64; 2]) -> Self {
        ThetaChar { a, b }
    }

    pub fn zero() -> Self {
        let z = Rational64::new(0, 1);
        ThetaChar::new([z, z], [z, z])
    }

    pub fn a_f64(&self) -> [f64; 2] {
        [ratio_f64(self.a[0]), ratio_f64(self.a[1])]
    }

    pub fn b_f64(&self) -> [f64; 2] {
        [ratio_f64(self.b[0]), ratio_f64(self.b[1])]
    }
}

fn ratio_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Bracket characteristic `[m]`: expands to `(-mU/3, m/3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BracketChar {
    pub m: [i64; 2],
}

impl BracketChar {
    pub fn new(m: [i64; 2]) -> Self {
        BracketChar { m }
    }

    /// The nine classes `m` mod 3, in the row order of the zero-order table.
    pub const TABLE_ORDER: [[i64; 2]; 9] = [
        [2, 1],
        [0, 1],
        [2, 0],
        [0, 0],
        [1, 1],
        [2, 2],
        [0, 2],
        [1, 0],
        [1, 2],
    ];

    pub fn expand(&self) -> ThetaChar {
        // -mU/3 = (-m2/3, -m1/3), m/3
        ThetaChar::new(
            [
                Rational64::new(-self.m[1], 3),
                Rational64::new(-self.m[0], 3),
            ],
            [Rational64::new(self.m[0], 3), Rational64::new(self.m[1], 3)],
        )
    }
}

/// Least eigenvalue of Im(tau) and the center `-Im(zeta) Im(tau)^{-1}` of the
/// Gaussian envelope of the summand.
fn envelope(tau: &Mat2, zeta: &[Complex64; 2]) -> Result<(f64, [f64; 2], f64)> {
    let y11 = tau.m[0][0].im;
    let y12 = 0.5 * (tau.m[0][1].im + tau.m[1][0].im);
    let y22 = tau.m[1][1].im;
    let det = y11 * y22 - y12 * y12;
    let tr = y11 + y22;
    if y11 <= 0.0 || det <= 0.0 {
        return Err(Error::NotPositiveDefinite(format!(
            "Im(tau): diag ({y11}, {y22}), det {det}"
        )));
    }
    let lambda_min = 0.5 * (tr - (tr * tr - 4.0 * det).max(0.0).sqrt());
    let iy = [[y22 / det, -y12 / det], [-y12 / det, y11 / det]];
    let imz = [zeta[0].im, zeta[1].im];
    let center = [
        -(imz[0] * iy[0][0] + imz[1] * iy[1][0]),
        -(imz[0] * iy[0][1] + imz[1] * iy[1][1]),
    ];
    // q = Im(zeta) Y^{-1} Im(zeta)^t, the constant in the envelope bound
    let q = imz[0] * (iy[0][0] * imz[0] + iy[0][1] * imz[1])
        + imz[1] * (iy[1][0] * imz[0] + iy[1][1] * imz[1]);
    Ok((lambda_min, center, q))
}

/// Radius R such that the Gaussian tail `sum_{|n+a-center| > R} |term|`
/// stays below eps, from `|term| <= exp(pi q) exp(-pi lambda_min |v|^2)`.
pub fn truncation_radius(tau: &Mat2, zeta: &[Complex64; 2], eps: f64) -> Result<f64> {
    assert!(eps > 0.0);
    let (lambda_min, _, q) = envelope(tau, zeta)?;
    Ok((((1.0 / eps).ln() + std::f64::consts::PI * q.max(0.0))
        / (std::f64::consts::PI * lambda_min))
        .sqrt())
}

/// Cap on the summation radius. Hitting it means Im(tau) is nearly
/// degenerate (a configuration pushed against a chamber wall); the sum
/// would need millions of terms, so it is refused instead.
const MAX_RADIUS: f64 = 200.0;

/// Theta value with absolute truncation error below `eps`.
pub fn theta(ch: &ThetaChar, s: &SiegelPoint, eps: f64) -> Result<Complex64> {
    theta_raw(ch, &s.tau, &s.zeta, eps)
}

/// Same as `theta` but on raw (tau, zeta) so callers can shift zeta freely.
pub fn theta_raw(
    ch: &ThetaChar,
    tau: &Mat2,
    zeta: &[Complex64; 2],
    eps: f64,
) -> Result<Complex64> {
    let (_, center, _) = envelope(tau, zeta)?;
    // two extra rings absorb the polynomial lattice-count prefactor the
    // Gaussian bound ignores; the doubling self-test pins this down
    let radius = truncation_radius(tau, zeta, eps)? + 2.0;
    if radius > MAX_RADIUS {
        return Err(Error::Domain(format!(
            "theta sum needs radius {radius:.1} > {MAX_RADIUS}: tau is nearly degenerate"
        )));
    }
    Ok(sum_over_ellipse(ch, tau, zeta, center, radius))
}

fn sum_over_ellipse(
    ch: &ThetaChar,
    tau: &Mat2,
    zeta: &[Complex64; 2],
    center: [f64; 2],
    radius: f64,
) -> Complex64 {
    let a = ch.a_f64();
    let b = ch.b_f64();
    let pi_i = Complex64::new(0.0, std::f64::consts::PI);
    let (t11, t12, t22) = (tau.m[0][0], tau.m[0][1], tau.m[1][1]);
    let zb = [zeta[0] + b[0], zeta[1] + b[1]];
    let n1_lo = (center[0] - a[0] - radius).floor() as i64;
    let n1_hi = (center[0] - a[0] + radius).ceil() as i64;
    let n2_lo = (center[1] - a[1] - radius).floor() as i64;
    let n2_hi = (center[1] - a[1] + radius).ceil() as i64;
    let r2 = radius * radius;
    let mut acc = Complex64::new(0.0, 0.0);
    for n1 in n1_lo..=n1_hi {
        let v1 = n1 as f64 + a[0];
        let d1 = v1 - center[0];
        for n2 in n2_lo..=n2_hi {
            let v2 = n2 as f64 + a[1];
            let d2 = v2 - center[1];
            if d1 * d1 + d2 * d2 > r2 {
                continue;
            }
            let quad = t11 * (v1 * v1) + t12 * (2.0 * v1 * v2) + t22 * (v2 * v2);
            let lin = zb[0] * v1 + zb[1] * v2;
            acc += (pi_i * (quad + lin * 2.0)).exp();
        }
    }
    acc
}

/// Theta with bracket characteristic `[m]`.
pub fn theta_bracket(m: [i64; 2], s: &SiegelPoint, eps: f64) -> Result<Complex64> {
    theta(&BracketChar::new(m).expand(), s, eps)
}

/// Residual |LHS - RHS| of the quasi-periodicity identity
///
/// ```text
///   theta_{a,b}(tau, c tau + d)
///     = exp[-pi i (c tau c^t + 2 c (b + d)^t)] theta_{a+c, b+d}(tau, 0),
/// ```
///
/// both sides evaluated by independent truncated sums.
pub fn quasi_periodicity_residual(
    ch: &ThetaChar,
    tau: &Mat2,
    c: [Rational64; 2],
    d: [Rational64; 2],
    eps: f64,
) -> Result<f64> {
    let cf = [ratio_f64(c[0]), ratio_f64(c[1])];
    let df = [ratio_f64(d[0]), ratio_f64(d[1])];
    let ctau = tau.row_mul(&[cf[0].into(), cf[1].into()]);
    let zeta = [ctau[0] + df[0], ctau[1] + df[1]];
    let lhs = theta_raw(ch, tau, &zeta, eps)?;

    let shifted = ThetaChar::new(
        [ch.a[0] + c[0], ch.a[1] + c[1]],
        [ch.b[0] + d[0], ch.b[1] + d[1]],
    );
    let zero = [Complex64::new(0.0, 0.0); 2];
    let theta0 = theta_raw(&shifted, tau, &zero, eps)?;
    let c_tau_c = ctau[0] * cf[0] + ctau[1] * cf[1];
    let b_plus_d = [
        ratio_f64(ch.b[0] + d[0]),
        ratio_f64(ch.b[1] + d[1]),
    ];
    let pairing = c_tau_c + 2.0 * (cf[0] * b_plus_d[0] + cf[1] * b_plus_d[1]);
    let factor = (Complex64::new(0.0, -std::f64::consts::PI) * pairing).exp();
    Ok((lhs - factor * theta0).norm())
}

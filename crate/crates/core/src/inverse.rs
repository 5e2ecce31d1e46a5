//! Inversion of the period map by theta quotients: membership in the theta
//! divisor, recovery of u, t and (x1, x2), and the involution on (tau, zeta)
//! that produces the second coordinate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::periodmap::{
    abel_jacobi_branch_points, embed_jd, PeriodPoint, SiegelPoint,
};
use crate::theta::{theta_bracket, theta_raw, BracketChar};

/// Result of the full inversion at one period point.
#[derive(Debug, Clone, Copy)]
pub struct InverseResult {
    pub x1_hat: Complex64,
    pub x2_hat: Complex64,
    /// Scale-free residual of the defining theta relation; small exactly on
    /// the image of the period map.
    pub vanish_residual: f64,
}

/// Zero orders mod 3 of `theta_[m]` at the branch points (P0, P1, Pt, Pinf),
/// rows in `BracketChar::TABLE_ORDER`.
pub const TABLE1_ORDERS: [[u8; 4]; 9] = [
    [2, 0, 0, 0],
    [0, 2, 0, 0],
    [0, 0, 2, 0],
    [0, 0, 0, 2],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
    [2, 2, 2, 2],
];

/// Exponents `(-1)^{r_i}` in the order congruence, for (P0, P1, Pt, Pinf).
pub const BRANCH_PARITIES: [i64; 4] = [1, 2, 2, 1];

/// Zero-order congruence: ord `theta_[m]` at P_i is
/// `(-1)^{r_i} (m + p_i) U (m + p_i)^t mod 3`.
pub fn order_congruence(m: [i64; 2], branch: usize) -> u8 {
    let p = crate::periodmap::BRANCH_VECTORS[branch];
    let v = [m[0] + p[0], m[1] + p[1]];
    let q = 2 * v[0] * v[1]; // v U v^t
    let sign = if BRANCH_PARITIES[branch] % 2 == 0 { 1 } else { -1 };
    (sign * q).rem_euclid(3) as u8
}

/// `|theta_[1,2]|` at `j_D(p)`, normalized by the largest of the nine bracket
/// theta values at the same point.
pub fn vanishing_residual(p: &PeriodPoint, eps: f64) -> Result<f64> {
    let s = embed_jd(p)?;
    vanishing_residual_at(&s, eps)
}

pub fn vanishing_residual_at(s: &SiegelPoint, eps: f64) -> Result<f64> {
    let mut scale = 0.0f64;
    let mut target = 0.0f64;
    for m in BracketChar::TABLE_ORDER {
        let v = theta_bracket(m, s, eps)?.norm();
        scale = scale.max(v);
        if m == [1, 2] {
            target = v;
        }
    }
    if scale == 0.0 {
        return Err(Error::Invariant("all nine theta values vanished".into()));
    }
    Ok(target / scale)
}

/// Relative scale used to call a theta value "vanishing" at a Siegel point.
fn theta_scale(s: &SiegelPoint, eps: f64) -> Result<f64> {
    let mut scale = 0.0f64;
    for m in BracketChar::TABLE_ORDER {
        scale = scale.max(theta_bracket(m, s, eps)?.norm());
    }
    Ok(scale)
}

/// `u = 1 - theta_[0,1]^3 / theta_[0,2]^3` at the given point.
pub fn u_from_point(s: &SiegelPoint, eps: f64) -> Result<Complex64> {
    let num = theta_bracket([0, 1], s, eps)?;
    let den = theta_bracket([0, 2], s, eps)?;
    let scale = theta_scale(s, eps)?;
    if den.norm() < 1e3 * eps * scale {
        return Err(Error::DivisionByZeroTheta("u_from_point"));
    }
    Ok(Complex64::new(1.0, 0.0) - (num / den).powi(3))
}

/// 1/t from theta constants: `1/t = 1 - theta_[0,0]^3 / theta_[0,1]^3` at
/// `(tau(eta), 0)`. The caller inverts to get t.
pub fn t_inverse(tau: &Mat2, eps: f64) -> Result<Complex64> {
    let zero = [Complex64::new(0.0, 0.0); 2];
    let num = theta_raw(&BracketChar::new([0, 0]).expand(), tau, &zero, eps)?;
    let den = theta_raw(&BracketChar::new([0, 1]).expand(), tau, &zero, eps)?;
    if den.norm() < 1e3 * eps * num.norm().max(1.0) {
        return Err(Error::DivisionByZeroTheta("t_inverse"));
    }
    Ok(Complex64::new(1.0, 0.0) - (num / den).powi(3))
}

/// The involution on (tau, zeta):
/// iota*(zeta) = zeta diag(1, -1) + (0, sqrt(3) i / 3 * eta).
pub fn iota_star(p: &PeriodPoint) -> Result<SiegelPoint> {
    let s = embed_jd(p)?;
    let shift = Complex64::new(0.0, 3f64.sqrt() / 3.0) * p.eta;
    SiegelPoint::new(s.tau, [s.zeta[0], -s.zeta[1] + shift])
}

/// Threshold on the scale-free residual below which a point is accepted as
/// lying on the period-map image.
pub const VANISH_THRESHOLD: f64 = 1e-6;

/// Full inversion: x1 from theta cubes at (tau, zeta), x2 at (tau, iota* zeta).
pub fn x_of_period(p: &PeriodPoint, eps: f64) -> Result<InverseResult> {
    let residual = vanishing_residual(p, eps)?;
    if residual > VANISH_THRESHOLD {
        return Err(Error::InvalidPeriod { residual });
    }
    let s = embed_jd(p)?;
    let x1_hat = theta_cube_ratio(&s, eps)?;
    let si = iota_star(p)?;
    let x2_hat = theta_cube_ratio(&si, eps)?;
    Ok(InverseResult {
        x1_hat,
        x2_hat,
        vanish_residual: residual,
    })
}

/// `theta_[0,1]^3 / theta_[0,2]^3` at the given point (equals 1 - u there).
fn theta_cube_ratio(s: &SiegelPoint, eps: f64) -> Result<Complex64> {
    let num = theta_bracket([0, 1], s, eps)?;
    let den = theta_bracket([0, 2], s, eps)?;
    let scale = theta_scale(s, eps)?;
    if den.norm() < 1e3 * eps * scale {
        return Err(Error::DivisionByZeroTheta("x_of_period"));
    }
    Ok((num / den).powi(3))
}

/// 9x4 vanishing pattern of `|theta_[m](tau, zeta(P_i))|`, true = vanish.
/// Rows follow `BracketChar::TABLE_ORDER`, columns (P0, P1, Pt, Pinf).
pub fn table1_pattern(tau: &Mat2, eps: f64) -> Result<[[bool; 4]; 9]> {
    let points = abel_jacobi_branch_points(tau);
    let mut out = [[false; 4]; 9];
    for (row, m) in BracketChar::TABLE_ORDER.iter().enumerate() {
        let ch = BracketChar::new(*m).expand();
        let mut vals = [0.0f64; 4];
        for (col, zeta) in points.iter().enumerate() {
            vals[col] = theta_raw(&ch, tau, zeta, eps)?.norm();
        }
        let scale = vals.iter().cloned().fold(1.0f64, f64::max);
        for col in 0..4 {
            out[row][col] = vals[col] < 1e4 * eps * scale;
        }
    }
    Ok(out)
}

/// The pattern Table 1 predicts: vanish wherever the order mod 3 is nonzero.
pub fn table1_expected() -> [[bool; 4]; 9] {
    let mut out = [[false; 4]; 9];
    for (row, orders) in TABLE1_ORDERS.iter().enumerate() {
        for col in 0..4 {
            out[row][col] = orders[col] != 0;
        }
    }
    out
}

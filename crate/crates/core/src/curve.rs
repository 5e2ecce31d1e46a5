//! Period integrals of the genus-2 curve w^3 = u(1-u)^2 (1-tu)^{-1} over the
//! four real chains attached to a configuration (x1, x2), plus the pullback
//! integral under the curve's extra involution. A hypergeometric series
//! serves as an independent oracle for the quadrature.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{integrate_01, QuadSpec, Scheme};

/// Margin below which a configuration counts as sitting on a chamber wall.
pub const WALL_MARGIN: f64 = 1e-6;

/// omega = e^{2 pi i / 3} = (-1 + i sqrt 3)/2.
pub fn omega() -> Complex64 {
    Complex64::new(-0.5, 0.75f64.sqrt())
}

/// e(x) = exp(2 pi i x).
pub fn unit(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * x)
}

/// A real configuration in the chamber 0 < x1, x2, x1 + x2 < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfigPoint {
    x1: f64,
    x2: f64,
}

impl ConfigPoint {
    /// Validates chamber membership with the wall margin.
    pub fn new(x1: f64, x2: f64) -> Result<Self> {
        let t = t_raw(x1, x2);
        let margin = [x1, x2, 1.0 - x1 - x2, t, 1.0 - t]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if !margin.is_finite() || margin < WALL_MARGIN {
            return Err(Error::Domain(format!(
                "({x1}, {x2}) is outside the chamber or within {WALL_MARGIN:e} of a wall"
            )));
        }
        Ok(ConfigPoint { x1, x2 })
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    /// Cross-ratio parameter t = (1-x1-x2)/((1-x1)(1-x2)) in (0,1).
    pub fn t(&self) -> f64 {
        t_raw(self.x1, self.x2)
    }

    pub fn swapped(&self) -> ConfigPoint {
        ConfigPoint {
            x1: self.x2,
            x2: self.x1,
        }
    }
}

fn t_raw(x1: f64, x2: f64) -> f64 {
    // grouped so the value is bit-identical under x1 <-> x2
    (1.0 - (x1 + x2)) / ((1.0 - x1) * (1.0 - x2))
}

/// t-map as a free function; validates the chamber constraints.
pub fn t_of_config(x1: f64, x2: f64) -> Result<f64> {
    ConfigPoint::new(x1, x2).map(|c| c.t())
}

/// The four chains. Improper ones are compactified: gamma1 by u = -s/(1-s)
/// and gamma2 by u = 1/(t s), both mapping to s in (0,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainId {
    /// u in (-infty, 0), w on the ray e(1/2) R+.
    Gamma1,
    /// u in (1/t, infty), w on the ray e(1/6) R+.
    Gamma2,
    /// u in (0, 1-x1), w on the ray e(1/3) R+.
    Gamma3,
    /// u in (0, 1-x2), w on the ray e(1/3) R+.
    Gamma4,
}

impl ChainId {
    pub const ALL: [ChainId; 4] = [
        ChainId::Gamma1,
        ChainId::Gamma2,
        ChainId::Gamma3,
        ChainId::Gamma4,
    ];

    /// Constant phase of the integrand on this chain.
    pub fn phase(&self) -> Complex64 {
        match self {
            ChainId::Gamma1 => unit(0.5),
            ChainId::Gamma2 => unit(1.0 / 6.0),
            ChainId::Gamma3 | ChainId::Gamma4 => unit(1.0 / 3.0),
        }
    }
}

/// Positive magnitude of the chain integral,
/// int |u|^{-2/3} |1-u|^{-1/3} |1-tu|^{-1/3} |du| over the chain.
pub fn chain_magnitude(
    chain: ChainId,
    cfg: &ConfigPoint,
    spec: &QuadSpec,
    scheme: Scheme,
) -> Result<f64> {
    let t = cfg.t();
    match chain {
        // u = -s/(1-s): int_0^1 s^{-2/3}(1-s)^{-2/3}(1-(1-t)s)^{-1/3} ds
        ChainId::Gamma1 => integrate_01(
            -2.0 / 3.0,
            -2.0 / 3.0,
            |s, _| (1.0 - (1.0 - t) * s).powf(-1.0 / 3.0),
            spec,
            scheme,
        ),
        // u = 1/(t s): int_0^1 s^{-2/3}(1-s)^{-1/3}(1-t s)^{-1/3} ds
        ChainId::Gamma2 => integrate_01(
            -2.0 / 3.0,
            -1.0 / 3.0,
            |s, _| (1.0 - t * s).powf(-1.0 / 3.0),
            spec,
            scheme,
        ),
        ChainId::Gamma3 => incomplete_magnitude(cfg, 1.0 - cfg.x1(), spec, scheme),
        ChainId::Gamma4 => incomplete_magnitude(cfg, 1.0 - cfg.x2(), spec, scheme),
    }
}

/// int_0^b u^{-2/3}(1-u)^{-1/3}(1-tu)^{-1/3} du for 0 < b < 1, rescaled to
/// (0,1) so the u^{-2/3} singularity sits in the quadrature weight.
pub fn incomplete_magnitude(
    cfg: &ConfigPoint,
    b: f64,
    spec: &QuadSpec,
    scheme: Scheme,
) -> Result<f64> {
    if !(0.0..1.0).contains(&b) {
        return Err(Error::Domain(format!("incomplete endpoint {b} not in (0,1)")));
    }
    let t = cfg.t();
    let v = integrate_01(
        -2.0 / 3.0,
        0.0,
        |s, _| ((1.0 - b * s) * (1.0 - t * b * s)).powf(-1.0 / 3.0),
        spec,
        scheme,
    )?;
    Ok(b.powf(1.0 / 3.0) * v)
}

/// Magnitude of the involution-pullback integral,
/// (1-t)^{1/3} int_0^b u^{-1/3}(1-u)^{-2/3}(1-tu)^{-2/3} du.
pub fn incomplete_dual_magnitude(
    cfg: &ConfigPoint,
    b: f64,
    spec: &QuadSpec,
    scheme: Scheme,
) -> Result<f64> {
    if !(0.0..1.0).contains(&b) {
        return Err(Error::Domain(format!("incomplete endpoint {b} not in (0,1)")));
    }
    let t = cfg.t();
    let v = integrate_01(
        -1.0 / 3.0,
        0.0,
        |s, _| ((1.0 - b * s) * (1.0 - t * b * s)).powf(-2.0 / 3.0),
        spec,
        scheme,
    )?;
    Ok((1.0 - t).powf(1.0 / 3.0) * b.powf(2.0 / 3.0) * v)
}

/// phi'_i: the chain integral of the holomorphic form, as phase * magnitude.
pub fn chain_integral(
    chain: ChainId,
    cfg: &ConfigPoint,
    spec: &QuadSpec,
    scheme: Scheme,
) -> Result<Complex64> {
    Ok(chain.phase() * chain_magnitude(chain, cfg, spec, scheme)?)
}

/// The four periods y1..y4 of the holomorphic form over the marked cycles,
/// normalized with the overall constant set to 1 (all consumers take ratios).
#[derive(Debug, Clone, Copy)]
pub struct CurvePeriods {
    pub y1: Complex64,
    pub y2: Complex64,
    pub y3: Complex64,
    pub y4: Complex64,
}

impl CurvePeriods {
    pub fn eta(&self) -> Complex64 {
        self.y1 / self.y2
    }
}

// Calibration units multiplying the y3/y4 assembly, pinned once by requiring
// the theta-divisor identities (vanishing, Table-1 pattern, round trip) at the
// reference configuration (0.3, 0.3) and then frozen. See also
// `periodmap::on_curve_point`, which uses the same units for partial paths.
fn unit_y3() -> Complex64 {
    -omega()
}
const UNIT_Y4: f64 = -1.0;

/// Assemble (y1, y2, y3, y4) from the chain integrals:
///
/// ```text
///   y1 = omega (1 - omega^2) phi'_2,
///   y2 = (1 - omega^2) (phi'_1 + phi'_2),
///   y3 = (1 - omega) * c3 * phi'_3,
///   y4 = (1 - omega^2) * c4 * Jhat,
/// ```
///
/// where Jhat is the involution-pullback integral along the gamma3 sheet and
/// (c3, c4) = (-omega, -1) is the frozen calibration table.
pub fn curve_periods(cfg: &ConfigPoint, spec: &QuadSpec) -> Result<CurvePeriods> {
    let scheme = Scheme::GaussJacobi;
    let w = omega();
    let w2 = w * w;
    let f1 = chain_integral(ChainId::Gamma1, cfg, spec, scheme)?;
    let f2 = chain_integral(ChainId::Gamma2, cfg, spec, scheme)?;
    let f3 = chain_integral(ChainId::Gamma3, cfg, spec, scheme)?;
    let jhat = incomplete_dual_magnitude(cfg, 1.0 - cfg.x1(), spec, scheme)?;
    let y1 = w * (Complex64::new(1.0, 0.0) - w2) * f2;
    let y2 = (Complex64::new(1.0, 0.0) - w2) * (f1 + f2);
    let y3 = (Complex64::new(1.0, 0.0) - w) * unit_y3() * f3;
    let y4 = (Complex64::new(1.0, 0.0) - w2) * UNIT_Y4 * jhat;
    let periods = CurvePeriods { y1, y2, y3, y4 };
    if periods.eta().re <= 0.0 {
        return Err(Error::Invariant(format!(
            "Re(y1/y2) = {} <= 0 at ({}, {}); branch conventions violated",
            periods.eta().re,
            cfg.x1(),
            cfg.x2()
        )));
    }
    Ok(periods)
}

/// Gauss hypergeometric series 2F1(a,b;c;z) for |z| < 1, summed to `tol`.
/// Independent oracle for the chain quadrature (Euler integral identity).
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64, tol: f64) -> Result<f64> {
    if c <= 0.0 && c == c.floor() {
        return Err(Error::Domain(format!("2F1 pole: c = {c}")));
    }
    if z.abs() >= 1.0 {
        return Err(Error::Domain(format!("2F1 series needs |z| < 1, got {z}")));
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for n in 0..200_000u64 {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.abs() < tol * sum.abs().max(1.0) && n > 3 {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(format!(
        "2F1({a},{b};{c};{z}) did not reach tol {tol:e}"
    )))
}

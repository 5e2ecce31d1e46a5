//! Quadrature engines for integrals of the form
//!
//! ```text
//!     int_0^1 x^alpha (1-x)^beta f(x) dx,    alpha, beta > -1,
//! ```
//!
//! with `f` analytic on `[0,1]`. Two independent schemes are provided:
//!
//! * Gauss-Jacobi rules with the endpoint weight built into the nodes
//!   (Golub-Welsch on the Jacobi recurrence), refined by doubling `n`;
//! * tanh-sinh (double exponential) refinement, which integrates the full
//!   singular integrand directly.
//!
//! The second scheme exists as an independent cross-check of the first; the
//! two share no code path beyond this module's interface.

use crate::error::{Error, Result};

/// Tolerances and refinement cap for the adaptive schemes.
#[derive(Debug, Clone, Copy)]
pub struct QuadSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_refinement_levels: usize,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec {
            abs_tol: 1e-12,
            rel_tol: 1e-11,
            max_refinement_levels: 7,
        }
    }
}

impl QuadSpec {
    pub fn with_tol(tol: f64) -> Self {
        QuadSpec {
            abs_tol: tol * 1e-2,
            rel_tol: tol,
            ..Default::default()
        }
    }

    fn converged(&self, delta: f64, value: f64) -> bool {
        delta <= self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Which engine evaluates the integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    GaussJacobi,
    TanhSinh,
}

/// Adaptive evaluation of int_0^1 x^alpha (1-x)^beta f(x) dx.
/// `f` receives (x, 1-x) so integrands can use the complementary coordinate
/// without cancellation near x = 1.
pub fn integrate_01<F>(alpha: f64, beta: f64, f: F, spec: &QuadSpec, scheme: Scheme) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    if spec.abs_tol <= 0.0 || spec.rel_tol <= 0.0 {
        return Err(Error::Domain("quadrature tolerances must be positive".into()));
    }
    match scheme {
        Scheme::GaussJacobi => gauss_jacobi_adaptive(alpha, beta, &f, spec),
        Scheme::TanhSinh => tanh_sinh_adaptive(alpha, beta, &f, spec),
    }
}

// ---------------------------------------------------------------------------
// Gauss-Jacobi (Golub-Welsch)
// ---------------------------------------------------------------------------

/// Nodes and weights on (0,1) for the weight x^alpha (1-x)^beta.
#[derive(Debug, Clone)]
pub struct GaussJacobiRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussJacobiRule {
    /// Build an n-point rule. Weight exponents map to the classical Jacobi
    /// weight (1-u)^a (1+u)^b on (-1,1) with a = beta, b = alpha under
    /// x = (1+u)/2.
    pub fn new(n: usize, alpha: f64, beta: f64) -> Result<Self> {
        assert!(n >= 2 && alpha > -1.0 && beta > -1.0);
        let a = beta;
        let b = alpha;
        // Recurrence coefficients of the monic Jacobi polynomials.
        let mut diag = vec![0f64; n];
        let mut off = vec![0f64; n]; // off[k] couples k-1,k for k >= 1
        let apb = a + b;
        diag[0] = (b - a) / (apb + 2.0);
        let mu0 = (apb + 1.0) * 2f64.ln() + ln_gamma(a + 1.0) + ln_gamma(b + 1.0)
            - ln_gamma(apb + 2.0);
        let mu0 = mu0.exp();
        for k in 1..n {
            let kf = k as f64;
            let den = 2.0 * kf + apb;
            diag[k] = (b * b - a * a) / (den * (den + 2.0));
            let bk = if k == 1 {
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + apb).powi(2) * (3.0 + apb))
            } else {
                4.0 * kf * (kf + a) * (kf + b) * (kf + apb)
                    / (den * den * (den + 1.0) * (den - 1.0))
            };
            off[k] = bk.sqrt();
        }
        let mut z = vec![0f64; n];
        z[0] = 1.0;
        tql2_first_row(&mut diag, &mut off, &mut z)?;
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            // map from (-1,1) to (0,1): x = (1+u)/2, extra 2^{-alpha-beta-1}
            nodes.push(0.5 * (1.0 + diag[i]));
            weights.push(mu0 * z[i] * z[i] * 0.5f64.powf(alpha + beta + 1.0));
        }
        Ok(GaussJacobiRule { nodes, weights })
    }

    /// Apply the rule to the smooth factor `f(x, 1-x)`.
    pub fn apply<F: Fn(f64, f64) -> f64>(&self, f: &F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x, 1.0 - x))
            .sum()
    }
}

fn gauss_jacobi_adaptive<F>(alpha: f64, beta: f64, f: &F, spec: &QuadSpec) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    let mut n = 24;
    let mut prev = GaussJacobiRule::new(n, alpha, beta)?.apply(f);
    for _ in 0..spec.max_refinement_levels {
        n *= 2;
        let cur = GaussJacobiRule::new(n, alpha, beta)?.apply(f);
        if spec.converged((cur - prev).abs(), cur) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NonConvergence(format!(
        "Gauss-Jacobi stalled at n={n} (last value {prev:.6e})"
    )))
}

/// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating only
/// the first row of the eigenvector matrix (all Golub-Welsch needs).
/// `d` = diagonal, `e[1..]` = off-diagonal; on return `d` holds eigenvalues
/// in ascending order and `z[i]` the first component of eigenvector i.
fn tql2_first_row(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    // shift off-diagonals down: e[i] couples i, i+1 below
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::NonConvergence("tql2 exceeded 50 sweeps".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0f64;
            for i in (l..m).rev() {
                let mut ff = s * e[i];
                let bb = c * e[i];
                r = ff.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = ff / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * bb;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - bb;
                // first-row eigenvector update
                ff = z[i + 1];
                z[i + 1] = s * z[i] + c * ff;
                z[i] = c * z[i] - s * ff;
            }
            if r == 0.0 && m > l + 1 {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // sort ascending, carrying z
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let ds: Vec<f64> = idx.iter().map(|&i| d[i]).collect();
    let zs: Vec<f64> = idx.iter().map(|&i| z[i]).collect();
    d.copy_from_slice(&ds);
    z.copy_from_slice(&zs);
    Ok(())
}

// ---------------------------------------------------------------------------
// tanh-sinh
// ---------------------------------------------------------------------------

fn tanh_sinh_adaptive<F>(alpha: f64, beta: f64, f: &F, spec: &QuadSpec) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    // x(t) = 1/(1 + exp(-pi sinh t)) maps R -> (0,1); both x and 1-x are
    // computed without cancellation so the endpoint weights stay accurate.
    let t_max = 6.1f64;
    let full = |x: f64, omx: f64| x.powf(alpha) * omx.powf(beta) * f(x, omx);
    let eval = |t: f64| -> f64 {
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        let x = 1.0 / (1.0 + (-2.0 * u).exp());
        let omx = 1.0 / (1.0 + (2.0 * u).exp());
        if x <= 0.0 || omx <= 0.0 {
            return 0.0;
        }
        // dx/dt = (pi/2) cosh t / (2 cosh^2 u)
        let sech = 1.0 / u.cosh();
        let dxdt = std::f64::consts::FRAC_PI_2 * t.cosh() * 0.25 * sech * sech * 2.0;
        let v = full(x, omx);
        if v.is_finite() {
            v * dxdt
        } else {
            0.0
        }
    };

    let mut h = 0.5f64;
    let mut kmax = (t_max / h) as i64;
    let mut sum = eval(0.0);
    for k in 1..=kmax {
        sum += eval(k as f64 * h) + eval(-(k as f64) * h);
    }
    let mut prev = sum * h;
    for _ in 0..spec.max_refinement_levels {
        h *= 0.5;
        kmax = (t_max / h) as i64;
        // new points are the odd multiples of the refined step
        let mut add = 0.0;
        let mut k = 1;
        while k <= kmax {
            add += eval(k as f64 * h) + eval(-(k as f64) * h);
            k += 2;
        }
        let cur = prev * 0.5 + add * h;
        if spec.converged((cur - prev).abs(), cur) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NonConvergence(format!(
        "tanh-sinh stalled at h={h:.3e} (last value {prev:.6e})"
    )))
}

// ---------------------------------------------------------------------------
// log-gamma (Lanczos, g = 7)
// ---------------------------------------------------------------------------

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311e-7,
];

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires x > 0");
    if x < 0.5 {
        // reflection
        return (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln()
            - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Beta function B(p, q).
pub fn beta(p: f64, q: f64) -> f64 {
    (ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q)).exp()
}

//! Exact arithmetic in the ring `Z[rho]`, `rho^2 + rho + 1 = 0`, together with the
//! hermitian form h(x,y) = x U conj(y)^t on rank-2 vectors and the induced
//! integral symmetric forms used by the lattice checks.
//!
//! Everything here is exact integer / rational arithmetic; the only floating
//! point is in the complex embeddings `chi` / `chi_bar` and the signature
//! computation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Rational64;

/// Element `a + b*rho` of `Z[rho]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };
pub const RHO: Eisenstein = Eisenstein { a: 0, b: 1 };
/// The ramified prime 1 - rho.
pub const ONE_MINUS_RHO: Eisenstein = Eisenstein { a: 1, b: -1 };

impl Eisenstein {
    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Complex conjugation: conj(rho) = rho^2 = -1 - rho.
    pub fn conj(&self) -> Self {
        Eisenstein::new(self.a - self.b, -self.b)
    }

    /// Re(x) = (x + conj(x))/2 = a - b/2, as an exact rational.
    pub fn re(&self) -> Rational64 {
        Rational64::new(2 * self.a - self.b, 2)
    }

    /// Norm x * conj(x) = a^2 - ab + b^2 >= 0.
    pub fn norm(&self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    /// Image in `Z[rho]/(1-rho) = F_3` under `rho -> 1`, representatives {0,1,2}.
    pub fn mod_one_minus_rho(&self) -> u8 {
        (self.a + self.b).rem_euclid(3) as u8
    }

    /// Exact division by (1 - rho); `None` if not divisible.
    pub fn div_one_minus_rho(&self) -> Option<Self> {
        // (1-rho)(c+d rho) = (c+d) + (2d-c) rho, so d = (a+b)/3, c = a - d.
        let s = self.a + self.b;
        if s.rem_euclid(3) != 0 {
            return None;
        }
        let d = s / 3;
        Some(Eisenstein::new(self.a - d, d))
    }

    /// rho^k for k mod 3.
    pub fn rho_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => ONE,
            1 => RHO,
            _ => Eisenstein::new(-1, -1), // rho^2
        }
    }

    /// Embedding chi: rho -> omega = e^{2 pi i/3}.
    pub fn chi(&self) -> Complex64 {
        let omega = Complex64::new(-0.5, 0.75f64.sqrt());
        Complex64::new(self.a as f64, 0.0) + omega * self.b as f64
    }

    /// Conjugate embedding chi_bar: rho -> omega^2.
    pub fn chi_bar(&self) -> Complex64 {
        self.conj().chi()
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Self) -> Self {
        Eisenstein::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Self) -> Self {
        Eisenstein::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Self {
        Eisenstein::new(-self.a, -self.b)
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: Self) -> Self {
        // (a + b rho)(c + d rho) = (ac - bd) + (ad + bc - bd) rho.
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        Eisenstein::new(a * c - b * d, a * d + b * c - b * d)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}ρ"),
            (a, b) if b < 0 => write!(f, "{a}{b}ρ"),
            (a, b) => write!(f, "{a}+{b}ρ"),
        }
    }
}

/// Length-2 vector over `Z[rho]`.
pub type EisVec2 = [Eisenstein; 2];

/// `h(x, y) = x U conj(y)^t` with `U = [[0,1],[1,0]]`, i.e.
/// `x1 conj(y2) + x2 conj(y1)`.
pub fn hermitian_form(x: &EisVec2, y: &EisVec2) -> Eisenstein {
    x[0] * y[1].conj() + x[1] * y[0].conj()
}

/// Normalization selector for the symmetric form: factor 2 on the
/// transcendental lattice itself, 2/3 on its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormScale {
    Two,
    TwoThirds,
}

impl FormScale {
    fn ratio(self) -> Rational64 {
        match self {
            FormScale::Two => Rational64::new(2, 1),
            FormScale::TwoThirds => Rational64::new(2, 3),
        }
    }
}

/// scale * Re(h(x, y)); symmetric and Z-bilinear.
pub fn symmetric_form(x: &EisVec2, y: &EisVec2, scale: FormScale) -> Rational64 {
    scale.ratio() * hermitian_form(x, y).re()
}

/// Gram matrix of `2*Re(h)` on the Z-basis `{e1, rho e1, e2, rho e2}` of
/// `Z[rho]^2`, with its exact determinant.
pub fn gram_and_discriminant() -> ([[i64; 4]; 4], i64) {
    let basis: [EisVec2; 4] = [
        [ONE, ZERO],
        [RHO, ZERO],
        [ZERO, ONE],
        [ZERO, RHO],
    ];
    let mut g = [[0i64; 4]; 4];
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let v = symmetric_form(x, y, FormScale::Two);
            debug_assert!(v.is_integer());
            g[i][j] = v.to_integer();
        }
    }
    let det = det4(&g);
    (g, det)
}

/// Signature (n_plus, n_minus) of a symmetric 4x4 integer matrix, via cyclic
/// Jacobi rotations in f64 (entries here are tiny, so this is exact enough to
/// read off signs).
#[allow(clippy::needless_range_loop)]
pub fn signature(g: &[[i64; 4]; 4]) -> (usize, usize) {
    let mut m = [[0f64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = g[i][j] as f64;
        }
    }
    for _sweep in 0..64 {
        let mut off = 0.0;
        for p in 0..4 {
            for q in (p + 1)..4 {
                off += m[p][q] * m[p][q];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..4 {
            for q in (p + 1)..4 {
                if m[p][q].abs() < 1e-18 {
                    continue;
                }
                let theta = 0.5 * (m[q][q] - m[p][p]) / m[p][q];
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..4 {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..4 {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut plus = 0;
    let mut minus = 0;
    for i in 0..4 {
        if m[i][i] > 0.0 {
            plus += 1;
        } else if m[i][i] < 0.0 {
            minus += 1;
        }
    }
    (plus, minus)
}

fn det4(g: &[[i64; 4]; 4]) -> i64 {
    // cofactor expansion along the first row
    fn det3(m: [[i64; 3]; 3]) -> i64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
    let mut det = 0i64;
    for c in 0..4 {
        let mut minor = [[0i64; 3]; 3];
        for (ri, row) in g.iter().skip(1).enumerate() {
            let mut cj = 0;
            for (cidx, &v) in row.iter().enumerate() {
                if cidx == c {
                    continue;
                }
                minor[ri][cj] = v;
                cj += 1;
            }
        }
        let sign = if c % 2 == 0 { 1 } else { -1 };
        det += sign * g[0][c] * det3(minor);
    }
    det
}

//! The unitary group of `U = [[0,1],[1,0]]` over `Z[rho]`, its level-(1-rho)
//! congruence subgroup inside the semidirect product with translations, the
//! action on the period domain, and the exact symplectic embeddings into
//! Sp_4(Z) |x Z^4.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::eisenstein::{Eisenstein, EisVec2, ONE, RHO, ZERO};
use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::periodmap::{PeriodPoint, SiegelPoint};

/// 2x2 matrix over `Z[rho]`.
pub type EisMat2 = [[Eisenstein; 2]; 2];

/// Element of the unitary group `Gamma = { g : g U conj(g)^t = U }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaElement {
    pub g: EisMat2,
}

/// Element of `G = Gamma |x Z[rho]^2`, the block matrix `[[g, 0], [b, 1]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupElement {
    pub g: GammaElement,
    pub b: EisVec2,
}

/// Affine symplectic pair: 4x4 integer matrix with t(s) J s = J and an
/// integer translation row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticAffine {
    pub s: [[i64; 4]; 4],
    pub v: [i64; 4],
}

pub const EIS_IDENTITY: EisMat2 = [[ONE, ZERO], [ZERO, ONE]];

pub fn eis_mat_mul(a: &EisMat2, b: &EisMat2) -> EisMat2 {
    let mut out = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn eis_det(a: &EisMat2) -> Eisenstein {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

impl GammaElement {
    pub fn new(g: EisMat2) -> Self {
        GammaElement { g }
    }

    pub fn identity() -> Self {
        GammaElement::new(EIS_IDENTITY)
    }

    pub fn mul(&self, other: &GammaElement) -> GammaElement {
        GammaElement::new(eis_mat_mul(&self.g, &other.g))
    }

    pub fn det(&self) -> Eisenstein {
        eis_det(&self.g)
    }
}

impl GroupElement {
    pub fn new(g: GammaElement, b: EisVec2) -> Self {
        GroupElement { g, b }
    }

    pub fn identity() -> Self {
        GroupElement::new(GammaElement::identity(), [ZERO, ZERO])
    }

    /// Block product `[[g,0],[b,1]] [[h,0],[c,1]] = [[gh, 0],[bh + c, 1]]`.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let g = self.g.mul(&other.g);
        let h = &other.g.g;
        let b = [
            self.b[0] * h[0][0] + self.b[1] * h[1][0] + other.b[0],
            self.b[0] * h[0][1] + self.b[1] * h[1][1] + other.b[1],
        ];
        GroupElement::new(g, b)
    }
}

/// Exact check of the unitary relation `g U conj(g)^t = U`.
pub fn is_in_gamma(g: &GammaElement) -> bool {
    // (g U conj(g)^t)_{ij} = sum_k g_{i k} conj(g_{j, 1-k})
    let m = &g.g;
    let mut form = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            form[i][j] = m[i][0] * m[j][1].conj() + m[i][1] * m[j][0].conj();
        }
    }
    form == [[ZERO, ONE], [ONE, ZERO]]
}

/// Congruence condition g = I mod (1-rho) on the Gamma part.
pub fn is_in_gamma_level(g: &GammaElement) -> bool {
    if !is_in_gamma(g) {
        return false;
    }
    let m = &g.g;
    m[0][0].mod_one_minus_rho() == 1
        && m[1][1].mod_one_minus_rho() == 1
        && m[0][1].mod_one_minus_rho() == 0
        && m[1][0].mod_one_minus_rho() == 0
}

/// Full level condition on the semidirect product: g = I and b = 0
/// mod (1-rho).
pub fn is_in_level(e: &GroupElement) -> bool {
    is_in_gamma_level(&e.g)
        && e.b[0].mod_one_minus_rho() == 0
        && e.b[1].mod_one_minus_rho() == 0
}

/// Generator set used by the random sampler: diag(rho, rho), upper and lower
/// unipotents with entries k rho(1-rho), and their U-conjugates (which the
/// lower unipotents already realize).
fn generators() -> Vec<EisMat2> {
    let mut gens = vec![[[RHO, ZERO], [ZERO, RHO]]];
    // rho(1-rho) = 1 + 2 rho, purely imaginary, divisible by (1-rho)
    let base = Eisenstein::new(1, 2);
    for k in [-2i64, -1, 1, 2] {
        let e = Eisenstein::new(k * base.a, k * base.b);
        gens.push([[ONE, e], [ZERO, ONE]]);
        gens.push([[ONE, ZERO], [e, ONE]]);
    }
    gens
}

/// Seeded random element of G(1-rho): a word of `word_len` generators plus a
/// translation in `(1-rho) Z[rho]^2` with small coefficients. `word_len = 0`
/// yields a pure translation (identity Gamma part).
pub fn random_level_element(seed: u64, word_len: usize) -> GroupElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = generators();
    let mut g = GammaElement::identity();
    for _ in 0..word_len {
        let pick = rng.gen_range(0..gens.len());
        g = g.mul(&GammaElement::new(gens[pick]));
    }
    let mut small = || Eisenstein::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
    let omr = crate::eisenstein::ONE_MINUS_RHO;
    let b = [omr * small(), omr * small()];
    let e = GroupElement::new(g, b);
    debug_assert!(is_in_level(&e));
    e
}

/// `j_H: Z[rho]^2 -> Z^4`, `(r1 + r2 rho, s1 + s2 rho) -> (s2, r2, r1, s1)`.
pub fn embed_jh(b: &EisVec2) -> [i64; 4] {
    [b[1].b, b[0].b, b[0].a, b[1].a]
}

/// `j_Gamma: g = g1 + g2 rho -> [[U(g1-g2)U, -U g2], [g2 U, g1]]` in `Sp_4(Z)`.
pub fn embed_jgamma(g: &GammaElement) -> [[i64; 4]; 4] {
    let mut g1 = [[0i64; 2]; 2];
    let mut g2 = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            g1[i][j] = g.g[i][j].a;
            g2[i][j] = g.g[i][j].b;
        }
    }
    let u = [[0i64, 1], [1, 0]];
    let mul = |a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]| {
        let mut out = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    };
    let sub = |a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]| {
        let mut out = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][j] - b[i][j];
            }
        }
        out
    };
    let tl = mul(&mul(&u, &sub(&g1, &g2)), &u);
    let tr = mul(&u, &g2);
    let bl = mul(&g2, &u);
    let mut out = [[0i64; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = tl[i][j];
            out[i][j + 2] = -tr[i][j];
            out[i + 2][j] = bl[i][j];
            out[i + 2][j + 2] = g1[i][j];
        }
    }
    out
}

/// j_G on G(1-rho): the symplectic image of the Gamma part together with the
/// translation row of the level-normalized class b/(1-rho). The division is
/// exact precisely because of the level condition; it is what makes the
/// affine action land in the integer lattice.
pub fn embed_jg(e: &GroupElement) -> Result<SymplecticAffine> {
    if !is_in_level(e) {
        return Err(Error::Domain(
            "embed_jg requires an element of G(1-rho)".into(),
        ));
    }
    let b_scaled = [
        e.b[0].div_one_minus_rho().expect("level condition"),
        e.b[1].div_one_minus_rho().expect("level condition"),
    ];
    Ok(SymplecticAffine {
        s: embed_jgamma(&e.g),
        v: embed_jh(&b_scaled),
    })
}

/// `J = [[0, -I], [I, 0]]`.
pub const SYMPLECTIC_J: [[i64; 4]; 4] = [
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
];

pub fn mat4_mul(a: &[[i64; 4]; 4], b: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for (k, row) in b.iter().enumerate() {
                out[i][j] += a[i][k] * row[j];
            }
        }
    }
    out
}

fn mat4_transpose(a: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i];
        }
    }
    out
}

/// Exact check of `t(s) J s = J`.
pub fn is_symplectic(s: &[[i64; 4]; 4]) -> bool {
    mat4_mul(&mat4_mul(&mat4_transpose(s), &SYMPLECTIC_J), s) == SYMPLECTIC_J
}

impl SymplecticAffine {
    pub fn identity() -> Self {
        let mut s = [[0i64; 4]; 4];
        for (i, row) in s.iter_mut().enumerate() {
            row[i] = 1;
        }
        SymplecticAffine { s, v: [0; 4] }
    }

    /// Semidirect product matching the block product in G:
    /// (s1, v1) (s2, v2) = (s1 s2, v1 s2 + v2).
    pub fn mul(&self, other: &SymplecticAffine) -> SymplecticAffine {
        let s = mat4_mul(&self.s, &other.s);
        let mut v = other.v;
        for j in 0..4 {
            for (k, row) in other.s.iter().enumerate() {
                v[j] += self.v[k] * row[j];
            }
        }
        SymplecticAffine { s, v }
    }
}

/// Action of [[g, 0], [b, 1]] on the period domain:
///
/// ```text
///   eta -> (g11 eta + g12) / (g21 eta + g22)            (entries via chi)
///   z1  -> (z1 + w1 eta + w2) / (g21 eta + g22)
///   z2  -> (z2 - conj(w1) eta + conj(w2)) / (-conj(g21) eta + conj(g22))
/// ```
pub fn act_on_d(e: &GroupElement, p: &PeriodPoint) -> Result<PeriodPoint> {
    let g = &e.g.g;
    let den = g[1][0].chi() * p.eta + g[1][1].chi();
    let den_conj = -g[1][0].chi_bar() * p.eta + g[1][1].chi_bar();
    if den.norm() < 1e-12 || den_conj.norm() < 1e-12 {
        return Err(Error::SingularDenominator("act_on_d"));
    }
    let eta = (g[0][0].chi() * p.eta + g[0][1].chi()) / den;
    let z1 = (p.z1 + e.b[0].chi() * p.eta + e.b[1].chi()) / den;
    let z2 = (p.z2 - e.b[0].chi_bar() * p.eta + e.b[1].chi_bar()) / den_conj;
    if eta.re <= 0.0 {
        return Err(Error::Invariant(format!(
            "group action left the right half plane: Re(eta') = {}",
            eta.re
        )));
    }
    Ok(PeriodPoint { eta, z1, z2 })
}

/// Standard affine-symplectic action on H_2 x C^2 (row-vector convention):
/// tau -> (A tau + B)(C tau + D)^{-1}, zeta -> (zeta + mu tau + nu)(C tau + D)^{-1}.
pub fn act_on_siegel(sa: &SymplecticAffine, s: &SiegelPoint) -> Result<SiegelPoint> {
    let block = |r0: usize, c0: usize| {
        Mat2::from_real(&[
            [sa.s[r0][c0], sa.s[r0][c0 + 1]],
            [sa.s[r0 + 1][c0], sa.s[r0 + 1][c0 + 1]],
        ])
    };
    let a = block(0, 0);
    let b = block(0, 2);
    let c = block(2, 0);
    let d = block(2, 2);
    let ctd = c.mul(&s.tau).add(&d);
    let ctd_inv = ctd.inverse("act_on_siegel: C tau + D")?;
    let tau = a.mul(&s.tau).add(&b).mul(&ctd_inv);
    // symmetrize away roundoff drift
    let tau = Mat2::new([
        [tau.m[0][0], (tau.m[0][1] + tau.m[1][0]) * 0.5],
        [(tau.m[0][1] + tau.m[1][0]) * 0.5, tau.m[1][1]],
    ]);
    let mu = [sa.v[0] as f64, sa.v[1] as f64];
    let nu = [sa.v[2] as f64, sa.v[3] as f64];
    let mut row = s.tau.row_mul(&[mu[0].into(), mu[1].into()]);
    row[0] += s.zeta[0] + nu[0];
    row[1] += s.zeta[1] + nu[1];
    let zeta = ctd_inv.row_mul(&row);
    SiegelPoint::new(tau, zeta)
}

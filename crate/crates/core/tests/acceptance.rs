//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured figure. Thresholds are pinned here, not configurable.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use num_complex::Complex64;
use num_rational::Rational64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tripcover::curve::{chain_magnitude, gauss_2f1, ChainId, ConfigPoint};
use tripcover::inverse::{
    table1_expected, table1_pattern, t_inverse, vanishing_residual, vanishing_residual_at,
    x_of_period,
};
use tripcover::modgroup::{
    act_on_d, embed_jg, embed_jgamma, is_in_level, is_symplectic, random_level_element,
    act_on_siegel,
};
use tripcover::periodmap::{embed_jd, forward, on_curve_point, tau_of_eta, PeriodPoint};
use tripcover::quad::{beta, integrate_01, QuadSpec, Scheme};
use tripcover::theta::{quasi_periodicity_residual, theta_raw, BracketChar, ThetaChar};

const QUAD_TOL: f64 = 1e-10;
const THETA_EPS: f64 = 1e-12;

fn quad_spec() -> QuadSpec {
    QuadSpec::with_tol(QUAD_TOL)
}

/// 7x7 grid over the chamber with margin 0.05 on all three walls.
fn grid_points() -> Vec<ConfigPoint> {
    let margin = 0.05;
    let mut pts = Vec::new();
    for i in 0..7 {
        for j in 0..7 {
            let x1 = margin + (1.0 - 2.0 * margin) * i as f64 / 6.0;
            let x2 = margin + (1.0 - 2.0 * margin) * j as f64 / 6.0;
            if 1.0 - x1 - x2 >= margin {
                pts.push(ConfigPoint::new(x1, x2).unwrap());
            }
        }
    }
    pts
}

fn random_config(rng: &mut ChaCha8Rng) -> ConfigPoint {
    loop {
        let x1 = rng.gen_range(0.05..0.9);
        let x2 = rng.gen_range(0.05..0.9);
        if 1.0 - x1 - x2 >= 0.05 {
            return ConfigPoint::new(x1, x2).unwrap();
        }
    }
}

#[test]
fn criterion_1_round_trip_fidelity() {
    let started = Instant::now();
    let spec = quad_spec();
    let pts = grid_points();
    let mut max_err = 0.0f64;
    let mut max_imag = 0.0f64;
    for cfg in &pts {
        let p = forward(cfg, &spec).unwrap();
        let inv = x_of_period(&p, THETA_EPS).unwrap();
        max_err = max_err
            .max((inv.x1_hat.re - cfg.x1()).abs())
            .max((inv.x2_hat.re - cfg.x2()).abs());
        max_imag = max_imag.max(inv.x1_hat.im.abs()).max(inv.x2_hat.im.abs());
    }
    let elapsed = started.elapsed().as_secs_f64();
    let pass = max_err < 1e-6 && max_imag < 1e-7;
    println!(
        "criterion 1 (round trip, {} grid points): max|dx| = {max_err:.3e}, max|Im| = {max_imag:.3e}, {elapsed:.1}s -> {}",
        pts.len(),
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
    assert!(elapsed < 120.0, "round-trip sweep exceeded 120 s");
}

#[test]
fn criterion_2_image_characterization() {
    let spec = quad_spec();
    let mut max_on = 0.0f64;
    for cfg in grid_points().iter().step_by(2) {
        let p = forward(cfg, &spec).unwrap();
        max_on = max_on.max(vanishing_residual(&p, THETA_EPS).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut min_off = f64::INFINITY;
    for _ in 0..50 {
        let p = PeriodPoint::new(
            Complex64::new(rng.gen_range(0.2..2.5), rng.gen_range(-1.5..1.5)),
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        )
        .unwrap();
        min_off = min_off.min(vanishing_residual(&p, THETA_EPS).unwrap());
    }
    let pass = max_on < 1e-8 && min_off >= 1e-2;
    println!(
        "criterion 2 (image = theta divisor): max on-image residual {max_on:.3e}, min off-image residual {min_off:.3e} -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_3_table1_pattern() {
    let spec = quad_spec();
    let expected = table1_expected();
    let configs = [(0.3, 0.4), (0.15, 0.15), (0.55, 0.2)];
    let mut all_match = true;
    for (x1, x2) in configs {
        let cfg = ConfigPoint::new(x1, x2).unwrap();
        let p = forward(&cfg, &spec).unwrap();
        let tau = tau_of_eta(p.eta).unwrap();
        let got = table1_pattern(&tau, THETA_EPS).unwrap();
        all_match &= got == expected;
    }
    // row [1,2] vanishes identically on the curve: 5 random sample points
    let cfg = ConfigPoint::new(0.3, 0.4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut max_row12 = 0.0f64;
    for _ in 0..5 {
        let u_star = (1.0 - cfg.x1()) * rng.gen_range(0.1..0.95);
        let pt = on_curve_point(&cfg, u_star, &spec).unwrap();
        max_row12 = max_row12.max(vanishing_residual_at(&pt, THETA_EPS).unwrap());
    }
    let pass = all_match && max_row12 < 1e-8;
    println!(
        "criterion 3 (Table 1 pattern at 3 eta values + on-curve row [1,2] residual {max_row12:.3e}) -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_4_schwarz_inversion() {
    let spec = quad_spec();
    let mut worst = 0.0f64;
    for t in [0.2f64, 0.5, 0.75] {
        // symmetric configuration with that t: x = (sqrt(1-t) - (1-t))/t
        let x = ((1.0 - t).sqrt() - (1.0 - t)) / t;
        let cfg = ConfigPoint::new(x, x).unwrap();
        assert!((cfg.t() - t).abs() < 1e-13);
        let p = forward(&cfg, &spec).unwrap();
        let tau = tau_of_eta(p.eta).unwrap();
        let recip = t_inverse(&tau, THETA_EPS).unwrap();
        let t_hat = (Complex64::new(1.0, 0.0) / recip).re;
        worst = worst.max((t_hat - t).abs());
    }
    let pass = worst < 1e-8;
    println!(
        "criterion 4 (Schwarz inversion, t in {{0.2, 0.5, 0.75}}): max |t_hat - t| = {worst:.3e} -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_5_quadrature_oracle() {
    let spec = quad_spec();
    // Euler-integral closed form for the gamma3 endpoint-limit family
    let mut worst_euler = 0.0f64;
    for k in 1..=9 {
        let t = k as f64 / 10.0;
        let quad_val = integrate_01(
            -2.0 / 3.0,
            -1.0 / 3.0,
            |u, _| (1.0 - t * u).powf(-1.0 / 3.0),
            &spec,
            Scheme::GaussJacobi,
        )
        .unwrap();
        let oracle =
            beta(1.0 / 3.0, 2.0 / 3.0) * gauss_2f1(1.0 / 3.0, 1.0 / 3.0, 1.0, t, 1e-14).unwrap();
        worst_euler = worst_euler.max(((quad_val - oracle) / oracle).abs());
    }
    // two independent schemes on all four chains, 20 random configurations
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_pair = 0.0f64;
    for _ in 0..20 {
        let cfg = random_config(&mut rng);
        for chain in ChainId::ALL {
            let gj = chain_magnitude(chain, &cfg, &spec, Scheme::GaussJacobi).unwrap();
            let ts = chain_magnitude(chain, &cfg, &spec, Scheme::TanhSinh).unwrap();
            worst_pair = worst_pair.max(((gj - ts) / gj).abs());
        }
    }
    let pass = worst_euler < 1e-9 && worst_pair < 1e-10;
    println!(
        "criterion 5 (quadrature oracles): Euler/2F1 rel err {worst_euler:.3e}, scheme pair rel err {worst_pair:.3e} -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_6_group_suite() {
    let spec = quad_spec();
    // exact membership and symplectic images for 100 seeded elements
    let mut membership = true;
    let mut symplectic = true;
    for seed in 0..100u64 {
        let e = random_level_element(seed, 1 + (seed % 5) as usize);
        membership &= is_in_level(&e);
        symplectic &= is_symplectic(&embed_jgamma(&e.g));
    }
    // equivariance of the embedding and orbit invariance of the inversion
    let p = forward(&ConfigPoint::new(0.3, 0.4).unwrap(), &spec).unwrap();
    let s = embed_jd(&p).unwrap();
    let base = x_of_period(&p, THETA_EPS).unwrap();
    let mut max_equiv = 0.0f64;
    let mut max_xdev = 0.0f64;
    for seed in 0..50u64 {
        let e = random_level_element(seed, 1 + (seed % 4) as usize);
        let moved = act_on_d(&e, &p).unwrap();
        let lhs = embed_jd(&moved).unwrap();
        let rhs = act_on_siegel(&embed_jg(&e).unwrap(), &s).unwrap();
        let dev = lhs.tau.max_abs_diff(&rhs.tau)
            + (lhs.zeta[0] - rhs.zeta[0]).norm()
            + (lhs.zeta[1] - rhs.zeta[1]).norm();
        max_equiv = max_equiv.max(dev);
        if seed % 10 == 0 {
            let inv = x_of_period(&moved, THETA_EPS).unwrap();
            max_xdev = max_xdev
                .max((inv.x1_hat - base.x1_hat).norm())
                .max((inv.x2_hat - base.x2_hat).norm());
        }
    }
    let pass = membership && symplectic && max_equiv < 1e-9 && max_xdev < 1e-6;
    println!(
        "criterion 6 (group suite): membership {membership}, symplectic {symplectic}, equivariance {max_equiv:.3e}, orbit x-deviation {max_xdev:.3e} -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_7_lattice_suite() {
    let (gram, det) = tripcover::eisenstein::gram_and_discriminant();
    let sig = tripcover::eisenstein::signature(&gram);
    let pass = det == 9 && sig == (2, 2);
    println!(
        "criterion 7 (lattice): Gram det = {det}, signature = ({}, {}) -> {}",
        sig.0,
        sig.1,
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_8_theta_self_consistency() {
    let spec = quad_spec();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    // a couple of on-pipeline tau values plus one synthetic
    let p = forward(&ConfigPoint::new(0.25, 0.5).unwrap(), &spec).unwrap();
    let tau1 = tau_of_eta(p.eta).unwrap();
    let tau2 = tau_of_eta(Complex64::new(1.4, -0.6)).unwrap();
    let mut worst_qp = 0.0f64;
    for k in 0..50 {
        let tau = if k % 2 == 0 { &tau1 } else { &tau2 };
        let third = |r: &mut ChaCha8Rng| Rational64::new(r.gen_range(-3i64..=3), 3);
        let ch = ThetaChar::new(
            [third(&mut rng), third(&mut rng)],
            [third(&mut rng), third(&mut rng)],
        );
        let c = [third(&mut rng), third(&mut rng)];
        let d = [third(&mut rng), third(&mut rng)];
        worst_qp = worst_qp.max(quasi_periodicity_residual(&ch, tau, c, d, THETA_EPS).unwrap());
    }
    // truncation self-consistency: R vs 2R through the public surface by
    // tightening eps (radius grows like sqrt(log 1/eps): eps^4 doubles R)
    let zeta = [Complex64::new(0.2, 0.3), Complex64::new(-0.1, 0.15)];
    let mut worst_trunc = 0.0f64;
    for m in BracketChar::TABLE_ORDER {
        let ch = BracketChar::new(m).expand();
        let v1 = theta_raw(&ch, &tau1, &zeta, THETA_EPS).unwrap();
        let v2 = theta_raw(&ch, &tau1, &zeta, THETA_EPS.powi(4)).unwrap();
        worst_trunc = worst_trunc.max((v1 - v2).norm());
    }
    let pass = worst_qp < 1e-10 && worst_trunc < THETA_EPS;
    println!(
        "criterion 8 (theta self-consistency): quasi-periodicity residual {worst_qp:.3e}, truncation drift {worst_trunc:.3e} -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_9_invariant_guards() {
    let spec = quad_spec();
    let mut pass = true;
    for cfg in grid_points() {
        let p = forward(&cfg, &spec).unwrap();
        pass &= p.eta.re > 0.0;
        let s = embed_jd(&p).unwrap();
        pass &= s.tau.m[0][1] == Complex64::new(-0.5, 0.0);
        pass &= s.tau.m[1][0] == Complex64::new(-0.5, 0.0);
        pass &= s.lambda_min() > 0.0;
    }
    println!(
        "criterion 9 (invariant guards on every forward evaluation) -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

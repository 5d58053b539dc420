//! Closed-form evaluations checked against quadrature of the defining
//! integrals, plus the structural identities of the extended-modulus forms.

use std::f64::consts::FRAC_PI_2;

use jacobi_eps_zeta::carlson::{rc, rd, rf};
use jacobi_eps_zeta::extended::{
    ek_ratio_imaginary, ek_ratio_large_real, epsilon_large_real_linear_form, k_e_continued,
};
use jacobi_eps_zeta::quadrature::{epsilon_by_quadrature, integrate, zeta_by_quadrature};
use jacobi_eps_zeta::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `∫₀^∞ g(r) dr` through `r = s/(1−s)`, with `tail` the limit of the
/// transformed integrand at `s = 1`.
fn half_line<G: Fn(f64) -> f64>(g: G, tail: f64, tol: f64) -> f64 {
    let h = |s: f64| {
        if s >= 1.0 {
            return tail;
        }
        g(s / (1.0 - s)) / (1.0 - s).powi(2)
    };
    integrate(h, 0.0, 1.0, tol).unwrap().value
}

/// `r/√(r² + a)`, finite at `r = a = 0`.
fn damp(r: f64, a: f64) -> f64 {
    if a == 0.0 {
        1.0
    } else {
        r / (r * r + a).sqrt()
    }
}

// With t = r², each integrand below carries the Jacobian 2r, which is
// absorbed into one `damp` factor so that a zero argument stays finite.

fn rf_by_quadrature(x: f64, y: f64, z: f64, tol: f64) -> f64 {
    half_line(|r| damp(r, x) / ((r * r + y) * (r * r + z)).sqrt(), 1.0, tol)
}

fn rd_by_quadrature(x: f64, y: f64, z: f64, tol: f64) -> f64 {
    half_line(|r| 3.0 * damp(r, x) / (r * r + y).sqrt() / (r * r + z).powf(1.5), 0.0, tol)
}

fn rc_by_quadrature(x: f64, y: f64, tol: f64) -> f64 {
    half_line(|r| damp(r, x) / (r * r + y), 1.0, tol)
}

#[test]
fn carlson_matches_defining_integrals() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let log_uniform = |rng: &mut ChaCha8Rng| 10f64.powf(rng.gen_range(-3.0..3.0));
    for _ in 0..100 {
        let (x, y, z) = (log_uniform(&mut rng), log_uniform(&mut rng), log_uniform(&mut rng));
        let exact = rf(x, y, z).unwrap();
        let quad = rf_by_quadrature(x, y, z, 1e-12 * exact);
        assert!(((exact - quad) / exact).abs() < 1e-9, "rf({x},{y},{z}): {exact} vs {quad}");

        let exact = rd(x, y, z).unwrap();
        let quad = rd_by_quadrature(x, y, z, 1e-12 * exact);
        assert!(((exact - quad) / exact).abs() < 1e-9, "rd({x},{y},{z}): {exact} vs {quad}");
    }
}

#[test]
fn carlson_frozen_quadrature_values() {
    let v = rd_by_quadrature(0.0, 2.0, 1.0, 1e-13);
    assert!((rd(0.0, 2.0, 1.0).unwrap() - v).abs() < 1e-11);
    let v = rc_by_quadrature(0.0, 1.0, 1e-13);
    assert!((rc(0.0, 1.0).unwrap() - v).abs() < 1e-11);
    // K(0.5) and E(0.5) by quadrature of the Legendre integrands
    let k = integrate(|t: f64| 1.0 / (1.0 - 0.25 * t.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, 1e-14)
        .unwrap()
        .value;
    let e = integrate(|t: f64| (1.0 - 0.25 * t.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, 1e-14)
        .unwrap()
        .value;
    assert!((rf(0.0, 0.75, 1.0).unwrap() - k).abs() < 1e-13);
    assert!((complete_k(0.5).unwrap() - k).abs() < 1e-13);
    assert!((complete_e(0.5).unwrap() - e).abs() < 1e-13);
    let e07 = integrate(|t: f64| (1.0 - 0.25 * t.sin().powi(2)).sqrt(), 0.0, 0.7, 1e-14)
        .unwrap()
        .value;
    assert!((incomplete_e(0.7, 0.5).unwrap() - e07).abs() < 1e-13);
}

#[test]
fn carlson_homogeneity() {
    let (x, y, z) = (0.3, 2.2, 7.5);
    let f = rf(x, y, z).unwrap();
    let d = rd(x, y, z).unwrap();
    for lam in [0.25, 4.0, 1e6] {
        let fl = rf(lam * x, lam * y, lam * z).unwrap();
        let dl = rd(lam * x, lam * y, lam * z).unwrap();
        assert!((fl / (f * lam.powf(-0.5)) - 1.0).abs() < 1e-13);
        assert!((dl / (d * lam.powf(-1.5)) - 1.0).abs() < 1e-13);
    }
}

#[test]
fn standard_epsilon_matches_quadrature() {
    for i in 1..=9 {
        let k = i as f64 / 10.0;
        let m = Modulus::real(k).unwrap();
        for j in 0..=10 {
            let x = j as f64 * 0.5;
            let q = epsilon_by_quadrature(x, m, 1e-12).unwrap();
            assert!((epsilon(x, k).unwrap() - q).abs() < 1e-9, "k={k} x={x}");
        }
    }
}

#[test]
fn extended_epsilon_matches_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let x = rng.gen_range(-4.0..4.0);
        let big = Modulus::real(rng.gen_range(1.01..8.0)).unwrap();
        let imag = Modulus::imaginary(rng.gen_range(0.01..8.0)).unwrap();
        for m in [big, imag] {
            let q = epsilon_by_quadrature(x, m, 1e-12).unwrap();
            assert!((epsilon_any(x, m).unwrap() - q).abs() < 1e-9, "{m} x={x}");
        }
    }
}

#[test]
fn zeta_large_real_two_routes_agree() {
    for k in [1.1, 1.5, 2.0, 5.0, 30.0] {
        for b in [Branch::Lower, Branch::Upper] {
            let r = ek_ratio_large_real(k, b).unwrap();
            for i in -6..=6 {
                let x = 0.5 * i as f64;
                let direct = zeta_large_real(x, k, b).unwrap();
                let via_ratio = ComplexValue::from(epsilon_large_real(x, k).unwrap()) - r * x;
                assert!((direct - via_ratio).norm() < 1e-12, "k={k} x={x}");
            }
        }
    }
    // and against quadrature for ε
    let m = Modulus::real(2.0).unwrap();
    let q = zeta_by_quadrature(0.5, m, Branch::Lower, 1e-13).unwrap();
    assert!((q - zeta_any(0.5, m).unwrap()).norm() < 1e-10);
}

#[test]
fn zeta_large_real_imaginary_part_is_linear() {
    for k in [1.2, 2.0, 10.0] {
        let inv = EllipticPair::new(1.0 / k).unwrap();
        let comp = EllipticPair::new(((k - 1.0) * (k + 1.0)).sqrt() / k).unwrap();
        let slope = -k * k * FRAC_PI_2 / (inv.k * inv.k + comp.k * comp.k);
        for x in [0.1, 0.7, 2.3, -1.9] {
            let z1 = zeta_large_real(x, k, Branch::Lower).unwrap();
            let z2 = zeta_large_real(2.0 * x, k, Branch::Lower).unwrap();
            assert!((z2.im - 2.0 * z1.im).abs() < 1e-12);
            assert!((z1.im / x - slope).abs() < 1e-12, "k={k}");
        }
    }
}

#[test]
fn zeta_large_real_oscillating_part_has_reciprocal_period() {
    for k in [1.5, 2.0, 5.0] {
        let period = 2.0 * complete_k(1.0 / k).unwrap() / k;
        for x in [-1.3, 0.2, 0.9, 2.6] {
            let a = k * zeta(k * x, 1.0 / k).unwrap();
            let b = k * zeta(k * (x + period), 1.0 / k).unwrap();
            assert!((a - b).abs() < 1e-11);
        }
        // the real part of Z minus its linear trend carries the same period
        let z0 = zeta_large_real(0.4, k, Branch::Lower).unwrap();
        let z1 = zeta_large_real(0.4 + period, k, Branch::Lower).unwrap();
        let trend = (zeta_large_real(period, k, Branch::Lower).unwrap().re) / period;
        assert!((z1.re - z0.re - trend * period).abs() < 1e-11);
    }
}

#[test]
fn large_real_is_odd_per_branch() {
    for b in [Branch::Lower, Branch::Upper] {
        for x in [0.3, 1.7, 4.4] {
            let z = zeta_large_real(x, 3.0, b).unwrap();
            let zm = zeta_large_real(-x, 3.0, b).unwrap();
            assert!((z + zm).norm() < 1e-13);
        }
    }
}

#[test]
fn legendre_collapse_of_bracket() {
    for k in [1.2, 2.0, 10.0] {
        let a = EllipticPair::new(1.0 / k).unwrap();
        let b = EllipticPair::new(((k - 1.0) * (k + 1.0)).sqrt() / k).unwrap();
        let v = a.k * b.k * (a.ratio() + b.ratio() - 1.0);
        assert!((v - FRAC_PI_2).abs() < 1e-12, "k={k}: {v}");
    }
}

#[test]
fn linear_form_matches_delegation() {
    for k in [1.5, 2.0, 5.0] {
        for i in -30..=30 {
            let x = 0.1 * i as f64;
            let a = epsilon_large_real(x, k).unwrap();
            let b = epsilon_large_real_linear_form(x, k).unwrap();
            assert!((a - b).abs() < 1e-11, "k={k} x={x}");
        }
    }
}

#[test]
fn continued_k_e_ratio_matches() {
    let (kk, ee) = k_e_continued(2.0, Branch::Lower).unwrap();
    let r = ek_ratio_large_real(2.0, Branch::Lower).unwrap();
    assert!((ee / kk - r).norm() < 1e-12);
}

#[test]
fn pure_imaginary_consistency() {
    for k in [0.05, 0.5, 1.0, 2.0, 20.0] {
        let ratio = ek_ratio_imaginary(k).unwrap();
        for x in [-2.0, -0.3, 0.5, 1.1, 3.7] {
            let eps = epsilon_imaginary(x, k).unwrap();
            let z = zeta_imaginary(x, k).unwrap();
            assert!((z - (eps - ratio * x)).abs() < 1e-12);
            assert!((epsilon_imaginary(-x, k).unwrap() + eps).abs() < 1e-13);
            assert!((zeta_imaginary(-x, k).unwrap() + z).abs() < 1e-13);
        }
    }
}

#[test]
fn continuity_across_regimes() {
    let delta = 1e-6;
    for x in [0.25, 0.5, 1.0, 2.0] {
        let at_one = epsilon(x, 1.0).unwrap();
        let above = epsilon_large_real(x, 1.0 + delta).unwrap();
        let below = epsilon(x, 1.0 - delta).unwrap();
        assert!((above - at_one).abs() < 1e-4, "x={x}");
        assert!((below - at_one).abs() < 1e-4, "x={x}");
        let imag = epsilon_imaginary(x, delta).unwrap();
        assert!((imag - x).abs() < 1e-4);
    }
}

#[test]
fn quadrature_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = |t: f64| sncndn(t, 0.8).unwrap().dn.powi(2);
    for _ in 0..20 {
        let (a, c) = (-1.0, 3.0);
        let b = rng.gen_range(a..c);
        let whole = integrate(f, a, c, 1e-12).unwrap().value;
        let parts = integrate(f, a, b, 1e-12).unwrap().value + integrate(f, b, c, 1e-12).unwrap().value;
        assert!((whole - parts).abs() < 3e-12);
    }
}

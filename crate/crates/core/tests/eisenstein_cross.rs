//! Cross-checks between the lattice-sum and Fourier evaluators of E(z, s).

use langlands_core::eisenstein::{
    eval_fourier, eval_lattice_sum, extract_coefficient_by_quadrature, fourier_coefficient,
    HalfPlanePoint, SpectralParameter, TruncationPolicy,
};
use langlands_core::ComplexValue;

fn point(x: f64, y: f64) -> HalfPlanePoint {
    HalfPlanePoint::new(x, y).unwrap()
}

#[test]
fn lattice_and_fourier_agree_at_i() {
    let t = TruncationPolicy::default().with_lattice_radius(2000);
    let s = SpectralParameter::real(2.5);
    let z = point(0.0, 1.0);
    let lattice = eval_lattice_sum(&z, &s, &t).unwrap();
    let fourier = eval_fourier(&z, &s, &t).unwrap();
    assert!((lattice.value - fourier.value).norm() < 1e-6);
    assert!(lattice.tail_bound < 1e-6);
}

#[test]
fn lattice_and_fourier_agree_off_axis_complex_s() {
    let t = TruncationPolicy::default().with_lattice_radius(600);
    for (z, s) in [
        (point(0.3, 1.2), ComplexValue::new(2.5, 0.0)),
        (point(-0.4, 0.8), ComplexValue::new(3.0, 1.0)),
        (point(0.45, 0.95), ComplexValue::new(4.0, -2.0)),
    ] {
        let s = SpectralParameter::new(s);
        let lattice = eval_lattice_sum(&z, &s, &t).unwrap();
        let fourier = eval_fourier(&z, &s, &t).unwrap();
        let gap = (lattice.value - fourier.value).norm();
        assert!(
            gap <= lattice.tail_bound + 1e-10,
            "gap {gap} bound {}",
            lattice.tail_bound
        );
    }
}

#[test]
fn modular_inversion_invariance() {
    let t = TruncationPolicy::default();
    let s = SpectralParameter::real(2.5);
    let z = point(0.2, 1.1);
    let a = eval_fourier(&z, &s, &t).unwrap().value;
    let b = eval_fourier(&z.invert(), &s, &t).unwrap().value;
    assert!((a - b).norm() < 1e-6);
    // also holds off the convergence half-plane
    let s = SpectralParameter::new(ComplexValue::new(0.3, 4.0));
    let a = eval_fourier(&z, &s, &t).unwrap().value;
    let b = eval_fourier(&z.invert(), &s, &t).unwrap().value;
    assert!((a - b).norm() < 1e-9 * a.norm().max(1.0));
}

#[test]
fn quadrature_extraction_matches_closed_form() {
    let t = TruncationPolicy::default()
        .with_lattice_radius(400)
        .with_quadrature_nodes(64);
    let s = SpectralParameter::real(2.5);
    for (n, y) in [(0, 2.0), (1, 1.0), (2, 1.0)] {
        let q = extract_coefficient_by_quadrature(n, y, &s, &t).unwrap();
        let exact = fourier_coefficient(n, y, &s).unwrap();
        assert!((q - exact).norm() < 1e-6, "n={n}: {q} vs {exact}");
    }
    // Box-truncation noise leaks into high modes at R = 400 (~1e-10), so use
    // a larger box; 32 nodes alias n = 5 only with n = 37.
    let t = t.with_lattice_radius(1000).with_quadrature_nodes(32);
    let q = extract_coefficient_by_quadrature(5, 3.0, &s, &t).unwrap();
    // e^{-2π·15} ≈ 4e-41; what remains is lattice truncation noise
    assert!(q.norm() < 1e-10, "{q}");
}

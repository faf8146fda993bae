//! The non-holomorphic Eisenstein series for SL₂(ℤ),
//!
//! E(z, s) = Σ_{γ ∈ Γ_∞\Γ} Im(γz)^s = ½ Σ_{gcd(m,n)=1} y^s / |mz + n|^{2s},
//!
//! normalized so that its constant term is y^s + φ(s) y^{1-s} with the
//! scattering ratio φ(s) = ξ(2s-1)/ξ(2s).
//!
//! Two independent evaluators are provided: the coprime lattice sum
//! ([`eval_lattice_sum`], Re(s) > 1 only) and the Fourier expansion
//! ([`eval_fourier`], any s off the poles). The expansion is taken as the
//! definition of E(z, s) outside the half-plane of absolute convergence.

mod checks;
mod fourier;
mod lattice;

use serde::{Deserialize, Serialize};

pub use checks::{
    extract_coefficient_by_quadrature, extract_coefficient_with, extract_coefficients,
    first_coefficient_xi_check, functional_equation_defect, strip_grid, CoefficientSource,
    FIRST_COEFFICIENT_HEIGHT, STRIP_GRID_HEIGHTS, STRIP_GRID_SIGMAS,
};
pub use fourier::{eval_fourier, fourier_coefficient, scattering_ratio, FourierEvaluation};
pub use lattice::{eval_lattice_sum, lattice_pair_term, LatticeEvaluation};

use crate::error::{Error, Result};
use crate::special::ComplexValue;

/// A point z = x + iy of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlanePoint {
    x: f64,
    y: f64,
}

impl HalfPlanePoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() || y <= 0.0 {
            return Err(Error::Domain(format!(
                "z = {x}+{y}i is not in the upper half-plane"
            )));
        }
        Ok(Self { x, y })
    }

    pub fn from_complex(z: ComplexValue) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_complex(&self) -> ComplexValue {
        ComplexValue::new(self.x, self.y)
    }

    /// z ↦ -1/z.
    pub fn invert(&self) -> Self {
        let w = -1.0 / self.to_complex();
        Self { x: w.re, y: w.im }
    }

    /// z ↦ z + dx.
    pub fn translate(&self, dx: f64) -> Self {
        Self {
            x: self.x + dx,
            y: self.y,
        }
    }
}

/// Default exclusion radius around s = 1/2 and s = 1.
pub const EISENSTEIN_POLE_RADIUS: f64 = 1e-6;

/// The spectral variable s together with its pole-exclusion radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralParameter {
    value: ComplexValue,
    pole_exclusion_radius: f64,
}

impl SpectralParameter {
    pub fn new(value: ComplexValue) -> Self {
        Self {
            value,
            pole_exclusion_radius: EISENSTEIN_POLE_RADIUS,
        }
    }

    pub fn real(value: f64) -> Self {
        Self::new(ComplexValue::new(value, 0.0))
    }

    pub fn with_radius(value: ComplexValue, pole_exclusion_radius: f64) -> Result<Self> {
        if !pole_exclusion_radius.is_finite() || pole_exclusion_radius < 0.0 {
            return Err(Error::Domain(format!(
                "pole exclusion radius {pole_exclusion_radius} is invalid"
            )));
        }
        Ok(Self {
            value,
            pole_exclusion_radius,
        })
    }

    pub fn value(&self) -> ComplexValue {
        self.value
    }

    pub fn pole_exclusion_radius(&self) -> f64 {
        self.pole_exclusion_radius
    }

    /// s ↦ 1 - s, keeping the radius.
    pub fn reflect(&self) -> Self {
        Self {
            value: 1.0 - self.value,
            ..*self
        }
    }

    /// Refuses s within the exclusion radius of 1/2 or 1, where ξ(2s-1) or
    /// ξ(2s) is singular.
    pub fn check_poles(&self) -> Result<()> {
        let s = self.value;
        if !(s.re.is_finite() && s.im.is_finite()) {
            return Err(Error::Domain(format!("non-finite spectral parameter {s}")));
        }
        for pole in [0.5, 1.0] {
            if (s - pole).norm() <= self.pole_exclusion_radius {
                return Err(Error::Pole {
                    function: "eisenstein",
                    at: s,
                });
            }
        }
        Ok(())
    }
}

/// Truncation parameters shared by the evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationPolicy {
    /// Box max(|m|, |n|) ≤ radius for the lattice sum.
    pub lattice_radius: u32,
    /// Minimum number of nonzero modes n = 1..N in the Fourier sum.
    pub fourier_terms: u32,
    /// Trapezoid nodes on x ∈ [0, 1) for coefficient extraction.
    pub quadrature_nodes: u32,
    /// Keep adding Fourier modes while the last one exceeds this (relative
    /// to max(1, |partial sum|)). `None` disables escalation.
    pub escalation_tolerance: Option<f64>,
}

/// Hard cap on Fourier modes under escalation.
pub const MAX_FOURIER_TERMS: u32 = 4096;

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            lattice_radius: 1000,
            fourier_terms: 30,
            quadrature_nodes: 128,
            escalation_tolerance: Some(1e-17),
        }
    }
}

impl TruncationPolicy {
    pub fn validate(&self) -> Result<()> {
        if self.lattice_radius < 10 {
            return Err(Error::Domain(format!(
                "lattice_radius {} < 10",
                self.lattice_radius
            )));
        }
        if self.fourier_terms < 1 || self.fourier_terms > MAX_FOURIER_TERMS {
            return Err(Error::Domain(format!(
                "fourier_terms {} outside 1..={MAX_FOURIER_TERMS}",
                self.fourier_terms
            )));
        }
        if self.quadrature_nodes < 16 {
            return Err(Error::Domain(format!(
                "quadrature_nodes {} < 16",
                self.quadrature_nodes
            )));
        }
        if let Some(tol) = self.escalation_tolerance {
            if tol.is_nan() || tol <= 0.0 {
                return Err(Error::Domain(format!(
                    "escalation tolerance {tol} must be positive"
                )));
            }
        }
        Ok(())
    }

    pub fn with_lattice_radius(self, lattice_radius: u32) -> Self {
        Self {
            lattice_radius,
            ..self
        }
    }

    pub fn with_fourier_terms(self, fourier_terms: u32) -> Self {
        Self {
            fourier_terms,
            ..self
        }
    }

    pub fn with_quadrature_nodes(self, quadrature_nodes: u32) -> Self {
        Self {
            quadrature_nodes,
            ..self
        }
    }
}

use std::fs;

use langlands_core::cplx::format_complex;
use langlands_core::eisenstein::{
    eval_fourier, eval_lattice_sum, extract_coefficients, first_coefficient_xi_check,
    fourier_coefficient, functional_equation_defect, scattering_ratio, strip_grid,
    CoefficientSource, HalfPlanePoint, SpectralParameter, TruncationPolicy,
};
use langlands_core::euler::{parse_place_data, partial_l, LFunctionData};
use langlands_core::roots::{enumerate_table, CartanType};
use langlands_core::special::xi_completed;
use langlands_core::{ComplexValue, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::failure::{core_kind, CliError};
use crate::report::*;

type Result<T> = std::result::Result<T, CliError>;

pub fn eval(
    z: ComplexValue,
    s: ComplexValue,
    method: Method,
    policy: &TruncationPolicy,
) -> Result<EvalReport> {
    let point = HalfPlanePoint::from_complex(z)?;
    let param = SpectralParameter::new(s);
    let lattice = match method {
        Method::Lattice | Method::Both => {
            let e = eval_lattice_sum(&point, &param, policy)?;
            Some(MethodValue {
                value_re: e.value.re,
                value_im: e.value.im,
                tail_bound: e.tail_bound,
                terms_used: None,
            })
        }
        Method::Fourier => None,
    };
    let fourier = match method {
        Method::Fourier | Method::Both => {
            let e = eval_fourier(&point, &param, policy)?;
            Some(MethodValue {
                value_re: e.value.re,
                value_im: e.value.im,
                tail_bound: e.tail_bound,
                terms_used: Some(e.terms_used),
            })
        }
        Method::Lattice => None,
    };
    let discrepancy = match (&lattice, &fourier) {
        (Some(l), Some(f)) => {
            Some(ComplexValue::new(l.value_re - f.value_re, l.value_im - f.value_im).norm())
        }
        _ => None,
    };
    let headline = fourier
        .as_ref()
        .or(lattice.as_ref())
        .expect("at least one method runs");
    Ok(EvalReport {
        z: format_complex(z),
        s: format_complex(s),
        method,
        value_re: headline.value_re,
        value_im: headline.value_im,
        tail_bound: headline.tail_bound,
        lattice,
        fourier,
        discrepancy,
    })
}

pub fn fourier(
    y: f64,
    s: ComplexValue,
    count: u32,
    extract: Option<CoefficientSource>,
    policy: &TruncationPolicy,
) -> Result<FourierReport> {
    let param = SpectralParameter::new(s);
    let ratio = scattering_ratio(&param)?;
    let modes: Vec<i64> = (0..=i64::from(count)).collect();
    let closed = modes
        .iter()
        .map(|&n| fourier_coefficient(n, y, &param))
        .collect::<langlands_core::Result<Vec<_>>>()?;
    let extracted = match extract {
        Some(source) => Some(extract_coefficients(&modes, y, &param, policy, source)?),
        None => None,
    };
    let coefficients = modes
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let e = extracted.as_ref().map(|v| v[i]);
            CoefficientRow {
                n,
                coefficient_re: closed[i].re,
                coefficient_im: closed[i].im,
                extracted_re: e.map(|e| e.re),
                extracted_im: e.map(|e| e.im),
                extraction_error: e.map(|e| (e - closed[i]).norm()),
            }
        })
        .collect();
    Ok(FourierReport {
        y,
        s: format_complex(s),
        scattering_re: ratio.re,
        scattering_im: ratio.im,
        quadrature_nodes: extract.map(|_| policy.quadrature_nodes),
        coefficients,
    })
}

/// Sample points for the ξ sweep: uniform in |s| ≤ 10, at least 0.1 from 0 and 1.
pub fn xi_sample_points(count: usize, seed: u64) -> Vec<ComplexValue> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let s = ComplexValue::new(rng.gen_range(-10.0..=10.0), rng.gen_range(-10.0..=10.0));
        if s.norm() <= 10.0 && s.norm() >= 0.1 && (s - 1.0).norm() >= 0.1 {
            points.push(s);
        }
    }
    points
}

fn xi_defect(s: ComplexValue) -> langlands_core::Result<f64> {
    Ok((xi_completed(s)? - xi_completed(1.0 - s)?).norm())
}

pub fn fe_check(
    check: Check,
    z: ComplexValue,
    points: Option<Vec<ComplexValue>>,
    samples: usize,
    seed: u64,
    policy: &TruncationPolicy,
) -> Result<CheckReport> {
    let point = HalfPlanePoint::from_complex(z)?;
    let points = points.unwrap_or_else(|| match check {
        Check::Xi => xi_sample_points(samples, seed),
        _ => strip_grid(),
    });
    let evaluate = |s: ComplexValue| -> langlands_core::Result<f64> {
        let param = SpectralParameter::new(s);
        match check {
            Check::Fe => functional_equation_defect(&point, &param, policy),
            Check::Xi => xi_defect(s),
            Check::FirstCoefficient => first_coefficient_xi_check(s),
            Check::Scattering => {
                Ok((scattering_ratio(&param)? * scattering_ratio(&param.reflect())? - 1.0).norm())
            }
        }
    };
    let rows: Vec<CheckPoint> = points
        .par_iter()
        .map(|&s| {
            let (status, defect, message) = match evaluate(s) {
                Ok(d) => (PointStatus::Ok, Some(d), None),
                Err(e @ Error::Pole { .. }) => {
                    (PointStatus::SkippedPole, None, Some(e.to_string()))
                }
                Err(e) => (
                    PointStatus::Error,
                    None,
                    Some(format!("{}: {e}", core_kind(&e))),
                ),
            };
            CheckPoint {
                s: format_complex(s),
                status,
                defect,
                message,
            }
        })
        .collect();
    let max_defect = rows.iter().filter_map(|p| p.defect).reduce(f64::max);
    let count = |st| rows.iter().filter(|p| p.status == st).count();
    Ok(CheckReport {
        check,
        z: matches!(check, Check::Fe).then(|| format_complex(z)),
        max_defect,
        skipped: count(PointStatus::SkippedPole),
        failed: count(PointStatus::Error),
        points: rows,
    })
}

pub fn xi(s: ComplexValue) -> Result<XiReport> {
    let a = xi_completed(s)?;
    let b = xi_completed(1.0 - s)?;
    Ok(XiReport {
        s: format_complex(s),
        xi_re: a.re,
        xi_im: a.im,
        reflected_re: b.re,
        reflected_im: b.im,
        defect: (a - b).norm(),
    })
}

pub enum PlaceSource {
    File { path: String, label: String },
    Trivial { bound: u64 },
}

pub fn euler(source: &PlaceSource, s: ComplexValue, max_q: u64) -> Result<EulerReport> {
    let (data, name) = match source {
        PlaceSource::File { path, label } => {
            let text = fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.clone(),
                message: e.to_string(),
            })?;
            (parse_place_data(&text, label)?, path.clone())
        }
        PlaceSource::Trivial { bound } => (
            LFunctionData::trivial(*bound, 1),
            format!("trivial:{bound}"),
        ),
    };
    let r = partial_l(&data, s, max_q)?;
    Ok(EulerReport {
        source: name,
        excluded_set: data.excluded_set_label().to_string(),
        s: format_complex(s),
        max_q,
        value_re: r.value.re,
        value_im: r.value.im,
        factors_used: r.factors_used,
        tail_estimate: r.tail_estimate,
        abscissa: r.abscissa,
        margin: r.margin,
        warning: r.warning.map(|w| w.message),
    })
}

/// Types listed by `decompose --table`.
pub const DEFAULT_TABLE: &[(CartanType, usize)] = &[
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::A, 4),
    (CartanType::B, 2),
    (CartanType::B, 3),
    (CartanType::B, 4),
    (CartanType::C, 3),
    (CartanType::C, 4),
    (CartanType::D, 4),
    (CartanType::D, 5),
    (CartanType::E, 6),
    (CartanType::E, 7),
    (CartanType::E, 8),
    (CartanType::F, 4),
    (CartanType::G, 2),
];

pub fn decompose(types: &[(CartanType, usize)]) -> Result<DecomposeReport> {
    Ok(DecomposeReport {
        rows: enumerate_table(types)?,
    })
}

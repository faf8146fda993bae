//! Report types. Every report is serialized as-is for `--format json`;
//! the [`Render`] impls give the csv and text layouts.

use langlands_core::roots::TableRow;
use serde::{Deserialize, Serialize};

pub trait Render: Serialize {
    fn columns(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;
    /// Summary lines shown under the table in text mode.
    fn notes(&self) -> Vec<String> {
        Vec::new()
    }
}

/// Shortest round-trip form, with an exponent for very small or large values.
fn num(x: f64) -> String {
    format!("{x:?}")
}

fn opt_num(x: &Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodValue {
    pub value_re: f64,
    pub value_im: f64,
    pub tail_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms_used: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Lattice,
    Fourier,
    Both,
}

/// `eval`: the headline value is the Fourier one whenever it was computed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub z: String,
    pub s: String,
    pub method: Method,
    pub value_re: f64,
    pub value_im: f64,
    pub tail_bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<MethodValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fourier: Option<MethodValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<f64>,
}

impl Render for EvalReport {
    fn columns(&self) -> Vec<&'static str> {
        vec![
            "method",
            "value_re",
            "value_im",
            "tail_bound",
            "terms_used",
            "discrepancy",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        [("lattice", &self.lattice), ("fourier", &self.fourier)]
            .into_iter()
            .filter_map(|(name, v)| v.as_ref().map(|v| (name, v)))
            .map(|(name, v)| {
                vec![
                    name.into(),
                    num(v.value_re),
                    num(v.value_im),
                    num(v.tail_bound),
                    v.terms_used.map(|t| t.to_string()).unwrap_or_default(),
                    opt_num(&self.discrepancy),
                ]
            })
            .collect()
    }

    fn notes(&self) -> Vec<String> {
        let mut notes = vec![format!("E({}, {})", self.z, self.s)];
        if let Some(d) = self.discrepancy {
            notes.push(format!("discrepancy {d:e}"));
        }
        notes
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub n: i64,
    pub coefficient_re: f64,
    pub coefficient_im: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extracted_re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extracted_im: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extraction_error: Option<f64>,
}

/// `fourier`: closed-form a_n(y, s), optionally against quadrature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierReport {
    pub y: f64,
    pub s: String,
    pub scattering_re: f64,
    pub scattering_im: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadrature_nodes: Option<u32>,
    pub coefficients: Vec<CoefficientRow>,
}

impl Render for FourierReport {
    fn columns(&self) -> Vec<&'static str> {
        vec![
            "n",
            "coefficient_re",
            "coefficient_im",
            "extracted_re",
            "extracted_im",
            "extraction_error",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.coefficients
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    num(r.coefficient_re),
                    num(r.coefficient_im),
                    opt_num(&r.extracted_re),
                    opt_num(&r.extracted_im),
                    opt_num(&r.extraction_error),
                ]
            })
            .collect()
    }

    fn notes(&self) -> Vec<String> {
        vec![format!(
            "y = {}, s = {}, scattering ratio {}{:+}i",
            self.y, self.s, self.scattering_re, self.scattering_im
        )]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// |E(z,s) − φ(s)E(z,1−s)|
    Fe,
    /// |ξ(s) − ξ(1−s)|
    Xi,
    /// ξ reflection recovered from the first Fourier coefficient
    FirstCoefficient,
    /// |φ(s)φ(1−s) − 1|
    Scattering,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointStatus {
    Ok,
    SkippedPole,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckPoint {
    pub s: String,
    pub status: PointStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

/// `fe-check`: one row per grid point, failures recorded in place.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    pub points: Vec<CheckPoint>,
    pub max_defect: Option<f64>,
    pub skipped: usize,
    pub failed: usize,
}

impl Render for CheckReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["s", "status", "defect", "message"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.points
            .iter()
            .map(|p| {
                let status = match p.status {
                    PointStatus::Ok => "ok",
                    PointStatus::SkippedPole => "skipped-pole",
                    PointStatus::Error => "error",
                };
                vec![
                    p.s.clone(),
                    status.into(),
                    opt_num(&p.defect),
                    p.message.clone().unwrap_or_default(),
                ]
            })
            .collect()
    }

    fn notes(&self) -> Vec<String> {
        vec![format!(
            "max defect {}, {} points, {} skipped, {} failed",
            self.max_defect
                .map(|d| format!("{d:e}"))
                .unwrap_or_else(|| "n/a".into()),
            self.points.len(),
            self.skipped,
            self.failed
        )]
    }
}

/// `xi`: ξ(s), ξ(1 − s) and their difference.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct XiReport {
    pub s: String,
    pub xi_re: f64,
    pub xi_im: f64,
    pub reflected_re: f64,
    pub reflected_im: f64,
    pub defect: f64,
}

impl Render for XiReport {
    fn columns(&self) -> Vec<&'static str> {
        vec![
            "s",
            "xi_re",
            "xi_im",
            "reflected_re",
            "reflected_im",
            "defect",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.s.clone(),
            num(self.xi_re),
            num(self.xi_im),
            num(self.reflected_re),
            num(self.reflected_im),
            num(self.defect),
        ]]
    }
}

/// `euler`: a truncated partial L-function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EulerReport {
    pub source: String,
    pub excluded_set: String,
    pub s: String,
    pub max_q: u64,
    pub value_re: f64,
    pub value_im: f64,
    pub factors_used: usize,
    pub tail_estimate: f64,
    pub abscissa: Option<f64>,
    pub margin: Option<f64>,
    pub warning: Option<String>,
}

impl Render for EulerReport {
    fn columns(&self) -> Vec<&'static str> {
        vec![
            "s",
            "max_q",
            "value_re",
            "value_im",
            "factors_used",
            "tail_estimate",
            "abscissa",
            "margin",
            "warning",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.s.clone(),
            self.max_q.to_string(),
            num(self.value_re),
            num(self.value_im),
            self.factors_used.to_string(),
            num(self.tail_estimate),
            opt_num(&self.abscissa),
            opt_num(&self.margin),
            self.warning.clone().unwrap_or_default(),
        ]]
    }

    fn notes(&self) -> Vec<String> {
        vec![format!(
            "L_S with S = {} from {}",
            self.excluded_set, self.source
        )]
    }
}

/// `decompose`: rows of the maximal-parabolic table. Serialized as a bare array.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DecomposeReport {
    pub rows: Vec<TableRow>,
}

impl Render for DecomposeReport {
    fn columns(&self) -> Vec<&'static str> {
        vec!["type", "rank", "removed_index", "levi", "m", "dims", "a"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let join = |v: Vec<String>| v.join(";");
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.cartan_type.to_string(),
                    r.rank.to_string(),
                    r.removed_index.to_string(),
                    r.levi.clone(),
                    r.m.to_string(),
                    join(r.dims.iter().map(usize::to_string).collect()),
                    join(r.a.iter().map(u32::to_string).collect()),
                ]
            })
            .collect()
    }
}

pub fn to_csv<R: Render>(report: &R) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    // Writing into a Vec cannot fail.
    w.write_record(report.columns()).expect("in-memory csv");
    for row in report.rows() {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

pub fn to_text<R: Render>(report: &R) -> String {
    let columns = report.columns();
    let rows = report.rows();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            rows.iter()
                .map(|r| r[i].chars().count())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(columns.clone()) + "\n";
    for r in &rows {
        out += &line(r.iter().map(String::as_str).collect());
        out.push('\n');
    }
    for n in report.notes() {
        out += &n;
        out.push('\n');
    }
    out
}

pub fn to_json<R: Render>(report: &R) -> String {
    serde_json::to_string_pretty(report).expect("reports hold only finite numbers") + "\n"
}

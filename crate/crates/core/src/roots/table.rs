use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{build_root_system, levi_type, nilradical_decomposition, CartanType, ParabolicDatum};
use crate::error::{Error, Result};

/// One maximal parabolic. Field names are the stable export columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub rank: usize,
    pub removed_index: usize,
    /// Simple factors joined by `x`, e.g. `A1xA1`; `T` for a torus.
    pub levi: String,
    pub m: usize,
    pub dims: Vec<usize>,
    pub a: Vec<u32>,
}

fn levi_label(factors: &[(CartanType, usize)]) -> String {
    if factors.is_empty() {
        return "T".into();
    }
    factors
        .iter()
        .map(|(t, n)| format!("{t}{n}"))
        .collect::<Vec<_>>()
        .join("x")
}

/// Rows ordered by input position, then removed index.
pub fn enumerate_table(types: &[(CartanType, usize)]) -> Result<Vec<TableRow>> {
    let systems = types
        .iter()
        .map(|&(t, n)| build_root_system(t, n))
        .collect::<Result<Vec<_>>>()?;
    let rows = systems
        .iter()
        .flat_map(|rs| (0..rs.rank()).map(move |k| (rs, k)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(rs, k)| {
            let p = ParabolicDatum::new(rs, k)?;
            let d = nilradical_decomposition(&p);
            Ok(TableRow {
                cartan_type: rs.cartan_type(),
                rank: rs.rank(),
                removed_index: k,
                levi: levi_label(&levi_type(&p)),
                m: d.m(),
                dims: d.dims(),
                a: d.a(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

/// CSV with header `type,rank,removed_index,levi,m,dims,a`; list cells are
/// `;`-separated.
pub fn table_to_csv(rows: &[TableRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Domain(format!("csv: {e}"));
    w.write_record(["type", "rank", "removed_index", "levi", "m", "dims", "a"])
        .map_err(io)?;
    for r in rows {
        w.write_record([
            r.cartan_type.to_string(),
            r.rank.to_string(),
            r.removed_index.to_string(),
            r.levi.clone(),
            r.m.to_string(),
            join(&r.dims),
            join(&r.a),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Domain(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Domain(e.to_string()))
}

pub fn table_to_json(rows: &[TableRow]) -> Result<String> {
    serde_json::to_string_pretty(rows).map_err(|e| Error::Domain(format!("json: {e}")))
}

//! Place data as text: one place per line, `q re_1 im_1 re_2 im_2 ...`.
//! Blank lines and anything after `#` are ignored.

use super::{LFunctionData, PlaceDatum, SatakeClass};
use crate::error::{Error, Result};
use crate::special::ComplexValue;

pub fn parse_place_data(text: &str, excluded_set_label: &str) -> Result<LFunctionData> {
    let mut places = Vec::new();
    let mut dim = None;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let q_text = fields.next().unwrap_or_default();
        let q: u64 = q_text
            .parse()
            .map_err(|_| err(format!("q '{q_text}' is not a positive integer")))?;
        let numbers = fields
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| err(format!("'{f}' is not a number")))
            })
            .collect::<Result<Vec<_>>>()?;
        if numbers.is_empty() || numbers.len() % 2 != 0 {
            return Err(err(format!(
                "expected re/im pairs after q, got {} numbers",
                numbers.len()
            )));
        }
        let eigenvalues: Vec<ComplexValue> = numbers
            .chunks(2)
            .map(|c| ComplexValue::new(c[0], c[1]))
            .collect();
        if *dim.get_or_insert(eigenvalues.len()) != eigenvalues.len() {
            return Err(err(format!(
                "{} eigenvalues, earlier lines have {}",
                eigenvalues.len(),
                dim.unwrap_or(0)
            )));
        }
        let satake = SatakeClass::new(eigenvalues).map_err(|e| err(e.to_string()))?;
        places.push(PlaceDatum::new(q, satake).map_err(|e| err(e.to_string()))?);
    }
    LFunctionData::new(places, excluded_set_label)
}

/// Writes data in the format read by [`parse_place_data`]; values round-trip exactly.
pub fn write_place_data(data: &LFunctionData) -> String {
    let mut out = format!("# S = {}\n", data.excluded_set_label());
    for place in data.places() {
        out.push_str(&place.q().to_string());
        for l in place.satake().eigenvalues() {
            out.push_str(&format!(" {:?} {:?}", l.re, l.im));
        }
        out.push('\n');
    }
    out
}

//! Single-token complex literals of the form `a+bi`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parses `2.5`, `0+1i`, `-0.4+0.8i`, `3-1.5i`, `2i`, `-i`, `1e-3+2e1i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t = text.trim();
    let bad = || Error::Domain(format!("not a complex literal `{text}` (expected a+bi)"));
    if t.is_empty() || t.contains(char::is_whitespace) {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    // Split at the last sign that is not a leading sign or part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

/// Inverse of [`parse_complex`] for finite values.
pub fn format_complex(z: Complex64) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

//! Bit-exact serialization of results to human-readable text, JSON and CSV.
//!
//! Coefficients always serialize as decimal strings in JSON: they exceed
//! the 64-bit range quickly as the genus grows. Rationals print as `p/q`
//! (plain `p` when the denominator is 1). All orders are canonical, so two
//! identical invocations produce byte-identical output.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;

/// Output format selector shared by every subcommand.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

/// Serialize a polynomial: human as `-2*y^4 - y^5 + y^6`, JSON as
/// `{"variable":"y","terms":[{"exp":4,"coeff":"-2"},...]}`, CSV as
/// `exp,coeff` rows. Terms are ascending by exponent in every format.
pub fn render_poly(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Human => p.to_string(),
        Format::Json => poly_json(p),
        Format::Csv => {
            let mut out = String::from("exp,coeff\n");
            for (e, c) in p.terms() {
                out.push_str(&format!("{e},{c}\n"));
            }
            out
        }
    }
}

/// The JSON object form of a polynomial, with fixed key order.
pub fn poly_json(p: &LaurentPoly) -> String {
    let terms: Vec<String> = p
        .terms()
        .map(|(e, c)| format!("{{\"exp\":{e},\"coeff\":\"{c}\"}}"))
        .collect();
    format!("{{\"variable\":\"y\",\"terms\":[{}]}}", terms.join(","))
}

/// Parse the JSON form back; the round trip is the identity.
pub fn parse_poly_json(s: &str) -> Result<LaurentPoly> {
    let value: serde_json::Value = serde_json::from_str(s)
        .map_err(|e| Error::domain(format!("invalid polynomial JSON: {e}")))?;
    if value.get("variable").and_then(|v| v.as_str()) != Some("y") {
        return Err(Error::domain("polynomial JSON must declare variable \"y\""));
    }
    let terms = value
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or_else(|| Error::domain("polynomial JSON needs a terms array"))?;
    let mut p = LaurentPoly::zero();
    for term in terms {
        let exp = term
            .get("exp")
            .and_then(|e| e.as_i64())
            .ok_or_else(|| Error::domain("term needs an integer exp"))?;
        let coeff_str = term
            .get("coeff")
            .and_then(|c| c.as_str())
            .ok_or_else(|| Error::domain("term needs a decimal-string coeff"))?;
        let coeff = BigInt::from_str(coeff_str)
            .map_err(|e| Error::domain(format!("invalid coefficient {coeff_str:?}: {e}")))?;
        p.add_term(exp, coeff);
    }
    Ok(p)
}

/// `p/q`, or plain `p` when the denominator is 1.
pub fn rational_str(r: &BigRational) -> String {
    r.to_string()
}

/// Quote a CSV field when it contains a comma, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `a,b,c` rendering of an integer vector.
pub fn vec_str(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `[a,b,c]` JSON rendering of an integer vector.
pub fn vec_json(v: &[i64]) -> String {
    format!(
        "[{}]",
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    )
}

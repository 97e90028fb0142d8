//! Input-file parsing: term lists and C-finite JSON descriptions.

use std::path::Path;
use std::str::FromStr;

use serde_json::Value;
use tilings_core::cfinite::CFinite;
use tilings_core::exact::Rat;

pub fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// Whitespace/newline-separated rationals; `#` starts a comment to end of
/// line.
pub fn parse_terms(text: &str) -> Result<Vec<Rat>, String> {
    let mut out = Vec::new();
    for line in text.lines() {
        let data = line.split('#').next().unwrap_or("");
        for token in data.split_whitespace() {
            let value =
                Rat::from_str(token).map_err(|_| format!("invalid rational term {token:?}"))?;
            out.push(value);
        }
    }
    Ok(out)
}

fn rat_from_value(v: &Value) -> Result<Rat, String> {
    match v {
        Value::String(s) => Rat::from_str(s).map_err(|_| format!("invalid rational {s:?}")),
        Value::Number(n) => {
            let as_text = n.to_string();
            Rat::from_str(&as_text).map_err(|_| format!("non-integer number {as_text}"))
        }
        other => Err(format!("expected a rational, got {other}")),
    }
}

fn rat_array(value: &Value, field: &str) -> Result<Vec<Rat>, String> {
    let arr = value
        .get(field)
        .and_then(Value::as_array)
        .ok_or_else(|| format!("missing array field {field:?}"))?;
    arr.iter().map(rat_from_value).collect()
}

/// Parses the `{"initial": [...], "coeffs": [...]}` form; elements may be
/// JSON integers or `"p/q"` strings.
pub fn parse_cfinite_json(text: &str) -> Result<CFinite, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let initial = rat_array(&value, "initial")?;
    let coeffs = rat_array(&value, "coeffs")?;
    CFinite::new(initial, coeffs).map_err(|e| e.to_string())
}

//! Output rendering. Plain output is line-oriented and diffable; JSON output
//! is a single compact line with keys in lexicographic order (serde_json maps
//! sort keys), so parsing and re-serialising an emitted document is the
//! identity.

use serde_json::{json, Value};
use tilings_core::cfinite::{BivariateGf, CFinite};
use tilings_core::exact::{MultiPoly, Rat, RationalFunction, UniPoly};

pub fn rat_str(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_list_json(values: &[Rat]) -> Value {
    Value::Array(values.iter().map(|r| Value::String(rat_str(r))).collect())
}

pub fn unipoly_json(p: &UniPoly) -> Value {
    rat_list_json(p.coeffs())
}

/// `[[coeff, [exponents...]], ...]` with exponent vectors padded to `nvars`.
pub fn multipoly_json(p: &MultiPoly, nvars: usize) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(key, c)| {
            let mut exps: Vec<u16> = key.to_vec();
            exps.resize(exps.len().max(nvars), 0);
            json!([rat_str(c), exps])
        })
        .collect();
    Value::Array(terms)
}

pub fn rf_json(rf: &RationalFunction) -> Value {
    json!({
        "denominator": unipoly_json(rf.denominator()),
        "numerator": unipoly_json(rf.numerator()),
        "var": "t",
    })
}

pub fn cfinite_json(cf: &CFinite) -> Value {
    json!({
        "coeffs": rat_list_json(cf.coeffs()),
        "initial": rat_list_json(cf.initial()),
    })
}

/// The `[[d1, ..., dL], [c1, ..., cL]]` coding.
pub fn cfinite_plain(cf: &CFinite) -> String {
    let join = |values: &[Rat]| values.iter().map(rat_str).collect::<Vec<_>>().join(", ");
    format!("[[{}], [{}]]", join(cf.initial()), join(cf.coeffs()))
}

pub fn bivariate_json(gf: &BivariateGf, convention: &str) -> Value {
    json!({
        "convention": convention,
        "p": multipoly_json(&gf.p, 2),
        "q1": unipoly_json(&gf.q1),
        "q2": unipoly_json(&gf.q2),
        "vars": ["x", "y"],
    })
}

pub fn bivariate_plain(gf: &BivariateGf) -> String {
    format!(
        "P = {}\nQ1 = {}\nQ2 = {}",
        gf.p.to_string_with(&["x", "y"]),
        gf.q1.to_string_with("x"),
        gf.q2.to_string_with("y"),
    )
}

pub fn print_json(value: &Value) {
    println!("{value}");
}

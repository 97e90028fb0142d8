//! Canonical rational functions and their power-series expansion.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::poly::UniPoly;
use super::{ExactError, Rat};

/// A reduced numerator/denominator pair in canonical form:
///
/// * `gcd(numerator, denominator) = 1`;
/// * the denominator has coprime integer coefficients and a positive leading
///   coefficient.
///
/// The canonical form makes structural equality decide equality of rational
/// functions, but printed reference values are usually compared by
/// cross-multiplication ([`RationalFunction::eq_cross`]) because external
/// sources print factored, sign-varied forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

/// Reduces and canonicalises `num / den`. Fails on a zero denominator.
pub fn rf_normalize(num: UniPoly, den: UniPoly) -> Result<RationalFunction, ExactError> {
    if den.is_zero() {
        return Err(ExactError::DivisionByZeroPolynomial);
    }
    let g = UniPoly::gcd_monic(&num, &den);
    let (num, den) = if g.degree() == Some(0) {
        (num, den)
    } else {
        let (qn, rn) = num.divrem(&g)?;
        let (qd, rd) = den.divrem(&g)?;
        debug_assert!(rn.is_zero() && rd.is_zero());
        (qn, qd)
    };
    // Scale the pair so the denominator becomes integer-primitive with a
    // positive leading coefficient.
    let (den_prim, factor) = den.primitive_scale();
    let inv = Rat::new(factor.denom().clone(), factor.numer().clone());
    Ok(RationalFunction {
        num: num.scale(&inv),
        den: den_prim,
    })
}

/// Coefficients of `t^0 .. t^n` of the power series of `rf` at the origin, by
/// exact long division. Fails when the denominator vanishes at `t = 0`.
pub fn rf_series(rf: &RationalFunction, n: usize) -> Result<Vec<Rat>, ExactError> {
    series_of(&rf.num, &rf.den, n)
}

pub(crate) fn series_of(num: &UniPoly, den: &UniPoly, n: usize) -> Result<Vec<Rat>, ExactError> {
    let q0 = den.coeff(0);
    if q0.is_zero() {
        return Err(ExactError::NoPowerSeriesAtZero);
    }
    let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num.coeff(k);
        for i in 1..=k.min(den.degree().unwrap_or(0)) {
            acc -= den.coeff(i) * &out[k - i];
        }
        out.push(acc / &q0);
    }
    Ok(out)
}

impl RationalFunction {
    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn series(&self, n: usize) -> Result<Vec<Rat>, ExactError> {
        rf_series(self, n)
    }

    /// Equality by cross-multiplication: `p1*q2 == p2*q1`.
    pub fn eq_cross(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// `(numerator) / (denominator)` with both polynomials rendered in `var`.
    pub fn to_string_with(&self, var: &str) -> String {
        let mut s = String::from("(");
        s.push_str(&self.num.to_string_with(var));
        s.push_str(") / (");
        s.push_str(&self.den.to_string_with(var));
        s.push(')');
        s
    }
}

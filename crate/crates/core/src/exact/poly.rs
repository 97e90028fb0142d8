//! Dense univariate polynomials over exact rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Int, Rat};

/// A univariate polynomial with rational coefficients, stored densely with the
/// lowest degree first. The coefficient vector never has trailing zeros; the
/// zero polynomial has an empty vector.
///
/// The indeterminate is anonymous; a variable name is supplied only when
/// formatting (see [`UniPoly::to_string_with`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The polynomial `c * t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        UniPoly::new(values.iter().map(|&v| super::rat_int(v)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division: `self = q * den + r` with `deg r < deg den`.
    pub fn divrem(&self, den: &Self) -> Result<(Self, Self), ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZeroPolynomial);
        }
        let dd = den.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let factor = &rem[k] / lead;
            for i in 0..dd {
                let delta = &factor * &den.coeffs[i];
                rem[k - dd + i] -= delta;
            }
            rem[k] = Rat::zero();
            quot[k - dd] = factor;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Monic greatest common divisor (zero if both arguments are zero).
    pub fn gcd_monic(a: &Self, b: &Self) -> Self {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => {
                let inv = Rat::one() / l.clone();
                a.scale(&inv)
            }
            None => a,
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * super::rat_int(k as i64))
                .collect(),
        )
    }

    /// Writes `self = factor * p` where `p` has coprime integer coefficients
    /// and a positive leading coefficient; returns `(p, factor)`. The zero
    /// polynomial yields `(0, 1)`.
    pub fn primitive_scale(&self) -> (Self, Rat) {
        if self.is_zero() {
            return (UniPoly::zero(), Rat::one());
        }
        let mut denom_lcm = Int::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = Int::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if ints.last().expect("nonzero poly").is_negative() {
            content = -content;
        }
        let prim = UniPoly::new(
            ints.iter()
                .map(|v| Rat::from_integer(v / &content))
                .collect(),
        );
        // self = (content / denom_lcm) * prim
        let factor = Rat::new(content, denom_lcm);
        (prim, factor)
    }

    /// Least common multiple, normalised to integer-primitive form with a
    /// positive leading coefficient.
    pub fn lcm(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return UniPoly::zero();
        }
        let g = UniPoly::gcd_monic(a, b);
        let (q, r) = a.mul(b).divrem(&g).expect("gcd divides product");
        debug_assert!(r.is_zero());
        q.primitive_scale().0
    }

    /// Renders the polynomial with explicit `+`/`-` separated monomials in
    /// ascending degree, e.g. `1 - 4*t + t^2`.
    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(&mut out, &mut first, c, &monomial_str(var, k));
        }
        out
    }
}

/// Formats one `coefficient * monomial` term with sign separators shared by
/// the univariate and multivariate printers.
pub(super) fn write_term(out: &mut String, first: &mut bool, c: &Rat, monomial: &str) {
    let mag = c.abs();
    if *first {
        if c.is_negative() {
            out.push('-');
        }
        *first = false;
    } else if c.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if monomial.is_empty() {
        let _ = write!(out, "{mag}");
    } else if mag.is_one() {
        out.push_str(monomial);
    } else {
        let _ = write!(out, "{mag}*{monomial}");
    }
}

fn monomial_str(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => String::from(var),
        _ => {
            let mut s = String::from(var);
            let _ = write!(s, "^{k}");
            s
        }
    }
}

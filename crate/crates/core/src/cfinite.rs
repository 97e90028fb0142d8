//! C-finite sequences: recurrence guessing, verification under order bounds,
//! equality decision, sequence algebra and rational generating functions.
//!
//! A C-finite sequence satisfies a homogeneous linear recurrence with
//! constant coefficients
//!
//! ```text
//! a(n) = c1*a(n-1) + c2*a(n-2) + ... + cL*a(n-L)
//! ```
//!
//! and is fully described by the `2L` values `[[d1..dL], [c1..cL]]` — the
//! initial terms and the recurrence coefficients. Two descriptions of orders
//! `La`, `Lb` denote the same sequence iff they agree on the first `La + Lb`
//! terms (their difference is C-finite of order at most `La + Lb`, and such a
//! sequence vanishing on that many leading terms vanishes identically). The
//! same order-counting argument powers [`verify_cfinite_with_bound`]: a
//! candidate identity between two sequences with known order bounds is proved
//! outright by checking finitely many terms.
//!
//! Equivalently, a sequence is C-finite iff its ordinary generating function
//! is rational with the denominator degree exceeding the numerator degree;
//! [`to_rational_gf`] and [`guess_rational_gf`] move between the two forms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{
    rf_normalize, solve_linear_exact, Int, Matrix, MultiPoly, Rat, RationalFunction, UniPoly,
};

/// A C-finite sequence description: `order()` initial terms plus recurrence
/// coefficients `c1..cL`, in the `[[d1..dL], [c1..cL]]` coding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFinite {
    initial: Vec<Rat>,
    coeffs: Vec<Rat>,
}

/// Error type for C-finite constructors and classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CFiniteError {
    LengthMismatch { initial: usize, coeffs: usize },
    NegativeValue,
}

impl fmt::Display for CFiniteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CFiniteError::LengthMismatch { initial, coeffs } => write!(
                f,
                "initial terms and coefficients must have equal length (got {initial} and {coeffs})"
            ),
            CFiniteError::NegativeValue => write!(f, "classification requires a nonnegative value"),
        }
    }
}

impl core::error::Error for CFiniteError {}

impl CFinite {
    pub fn new(initial: Vec<Rat>, coeffs: Vec<Rat>) -> Result<Self, CFiniteError> {
        if initial.len() != coeffs.len() {
            return Err(CFiniteError::LengthMismatch {
                initial: initial.len(),
                coeffs: coeffs.len(),
            });
        }
        Ok(CFinite { initial, coeffs })
    }

    /// The all-zero sequence (order 0).
    pub fn zero() -> Self {
        CFinite {
            initial: Vec::new(),
            coeffs: Vec::new(),
        }
    }

    /// The constant sequence `c, c, c, ...` as `[[c], [1]]`.
    pub fn constant(c: Rat) -> Self {
        CFinite {
            initial: vec![c],
            coeffs: vec![Rat::one()],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn initial(&self) -> &[Rat] {
        &self.initial
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The first `count` terms, by iterating the recurrence.
    pub fn terms(&self, count: usize) -> Vec<Rat> {
        let l = self.order();
        let mut out: Vec<Rat> = Vec::with_capacity(count);
        for n in 0..count {
            let value = if n < l {
                self.initial[n].clone()
            } else {
                let mut acc = Rat::zero();
                for (i, c) in self.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        acc += c * &out[n - 1 - i];
                    }
                }
                acc
            };
            out.push(value);
        }
        out
    }

    /// `a(n)`; costs `O(n * order)` exact operations.
    pub fn nth(&self, n: usize) -> Rat {
        self.terms(n + 1).pop().unwrap_or_else(Rat::zero)
    }
}

/// How hard to try when fitting a recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GuessConfig {
    /// Largest recurrence order attempted.
    pub max_order: usize,
    /// Number of terms beyond the `2L` fitting window that must also satisfy
    /// the recurrence before order `L` is accepted.
    pub margin: usize,
}

impl GuessConfig {
    pub fn new(max_order: usize, margin: usize) -> Self {
        GuessConfig {
            max_order: max_order.max(1),
            margin: margin.max(1),
        }
    }
}

impl Default for GuessConfig {
    fn default() -> Self {
        GuessConfig {
            max_order: 8,
            margin: 5,
        }
    }
}

/// Outcome of [`verify_cfinite_with_bound`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyStatus {
    /// The data sufficed: under the stated order bound the identity holds for
    /// every index.
    ProvedUnderBound,
    /// No mismatch, but too few terms were supplied to conclude.
    Inconclusive,
    /// A term disagrees outright.
    Refuted,
}

impl fmt::Display for VerifyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            VerifyStatus::ProvedUnderBound => "ProvedUnderBound",
            VerifyStatus::Inconclusive => "Inconclusive",
            VerifyStatus::Refuted => "Refuted",
        };
        f.write_str(name)
    }
}

/// Finds the minimal-order recurrence reproducing every supplied term, or
/// `None` if no order up to `config.max_order` fits.
///
/// For each candidate order `L` (needing at least `2L + margin` terms) the
/// recurrence is required to hold for all `n >= L` — the first `L` terms are
/// covered by the initial conditions, which is what makes leading zeros and
/// singular leading Hankel blocks harmless. The coefficients are the exact
/// solution of the full linear system over the rationals, so an accepted
/// order reproduces every supplied term by construction.
pub fn guess_cfinite(seq: &[Rat], config: &GuessConfig) -> Option<CFinite> {
    if seq.is_empty() {
        return None;
    }
    if seq.iter().all(Zero::is_zero) {
        return Some(CFinite::zero());
    }
    for order in 1..=config.max_order {
        if seq.len() < 2 * order + config.margin {
            return None;
        }
        let rows = seq.len() - order;
        let a = Matrix::from_fn(rows, order, |r, c| seq[order + r - 1 - c].clone());
        let rhs: Vec<Rat> = seq[order..].to_vec();
        if let Some(coeffs) = solve_linear_exact(&a, &rhs) {
            let initial = seq[..order].to_vec();
            return Some(CFinite { initial, coeffs });
        }
    }
    None
}

/// Decides equality of the sequences described by `a` and `b` by comparing
/// the first `order(a) + order(b)` terms.
pub fn cfinite_equal(a: &CFinite, b: &CFinite) -> bool {
    let window = a.order() + b.order();
    a.terms(window) == b.terms(window)
}

/// Termwise sum, as a minimal description found under the certified order
/// bound `order(a) + order(b)`.
pub fn cfinite_add(a: &CFinite, b: &CFinite) -> CFinite {
    combine(a, b, a.order() + b.order(), |x, y| x + y)
}

/// Termwise (Hadamard) product, under the bound `order(a) * order(b)`.
pub fn cfinite_mul(a: &CFinite, b: &CFinite) -> CFinite {
    combine(a, b, a.order() * b.order(), |x, y| x * y)
}

fn combine(a: &CFinite, b: &CFinite, bound: usize, f: impl Fn(&Rat, &Rat) -> Rat) -> CFinite {
    if bound == 0 {
        // one operand is the zero sequence
        return match f(&Rat::one(), &Rat::zero()).is_zero() {
            // product: anything times zero vanishes
            true => CFinite::zero(),
            // sum: return the other operand's description
            false if a.order() == 0 => b.clone(),
            false => a.clone(),
        };
    }
    let config = GuessConfig::new(bound, GuessConfig::default().margin);
    let len = 2 * bound + config.margin;
    let ta = a.terms(len);
    let tb = b.terms(len);
    let combined: Vec<Rat> = ta.iter().zip(&tb).map(|(x, y)| f(x, y)).collect();
    guess_cfinite(&combined, &config)
        .expect("a sequence C-finite under a known bound always admits a fit")
}

/// The rational ordinary generating function of `cf`: denominator
/// `1 - c1*t - ... - cL*t^L`, numerator the matching truncation, both in
/// canonical form.
pub fn to_rational_gf(cf: &CFinite) -> RationalFunction {
    let l = cf.order();
    let mut den = vec![Rat::zero(); l + 1];
    den[0] = Rat::one();
    for (i, c) in cf.coeffs().iter().enumerate() {
        den[i + 1] = -c.clone();
    }
    let den = UniPoly::new(den);
    // numerator coefficients: p_n = a_n - sum_{i=1..n} c_i a_{n-i}, n < L
    let init = cf.initial();
    let mut num = Vec::with_capacity(l);
    for n in 0..l {
        let mut acc = init[n].clone();
        for i in 1..=n {
            acc -= &cf.coeffs()[i - 1] * &init[n - i];
        }
        num.push(acc);
    }
    rf_normalize(UniPoly::new(num), den).expect("denominator has constant term 1")
}

/// Guesses a C-finite description of `seq` and converts it to a rational
/// generating function, revalidating the series expansion against the whole
/// input.
pub fn guess_rational_gf(seq: &[Rat], config: &GuessConfig) -> Option<RationalFunction> {
    let cf = guess_cfinite(seq, config)?;
    let rf = to_rational_gf(&cf);
    let check = rf.series(seq.len().saturating_sub(1)).ok()?;
    if check != seq {
        return None;
    }
    Some(rf)
}

/// Checks the identity "`seq` (assumed C-finite of order at most `bound`)
/// equals the sequence of `cf`". Any mismatch refutes it; agreement on at
/// least `order(cf) + bound` terms proves it; fewer terms are inconclusive.
pub fn verify_cfinite_with_bound(cf: &CFinite, seq: &[Rat], bound: usize) -> VerifyStatus {
    let needed = cf.order() + bound;
    let own = cf.terms(seq.len());
    if own != seq {
        return VerifyStatus::Refuted;
    }
    if seq.len() >= needed {
        VerifyStatus::ProvedUnderBound
    } else {
        VerifyStatus::Inconclusive
    }
}

/// A bivariate generating function with separable denominator:
/// `P(x, y) / (Q1(x) * Q2(y))`, where `x` tracks the row index and `y` the
/// column index. In `p`, variable 0 is `x` and variable 1 is `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateGf {
    pub p: MultiPoly,
    pub q1: UniPoly,
    pub q2: UniPoly,
}

impl BivariateGf {
    /// The denominator `Q1(x) * Q2(y)` as a bivariate polynomial.
    pub fn denominator(&self) -> MultiPoly {
        let qx = embed_uni(&self.q1, 0);
        let qy = embed_uni(&self.q2, 1);
        qx.mul(&qy)
    }

    /// Equality with another bivariate form by cross-multiplication.
    pub fn eq_cross(&self, other: &BivariateGf) -> bool {
        self.p.mul(&other.denominator()) == other.p.mul(&self.denominator())
    }

    /// Coefficients `F(i, j)` of the double series for `0 <= i <= m_last`,
    /// `0 <= j <= n_last`.
    pub fn expand(&self, m_last: usize, n_last: usize) -> Option<Vec<Vec<Rat>>> {
        let q1 = self.q1.coeffs();
        let q2 = self.q2.coeffs();
        let (q10, q20) = (q1.first()?, q2.first()?);
        if q10.is_zero() || q20.is_zero() {
            return None;
        }
        let unit = q10 * q20;
        let mut table: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n_last + 1]; m_last + 1];
        for i in 0..=m_last {
            for j in 0..=n_last {
                let mut acc = self.p.coeff(&[i as u16, j as u16]);
                for (u, cu) in q1.iter().enumerate().take(i + 1) {
                    if cu.is_zero() {
                        continue;
                    }
                    for (v, cv) in q2.iter().enumerate().take(j + 1) {
                        if (u == 0 && v == 0) || cv.is_zero() {
                            continue;
                        }
                        acc -= cu * cv * &table[i - u][j - v];
                    }
                }
                table[i][j] = acc / &unit;
            }
        }
        Some(table)
    }
}

fn embed_uni(p: &UniPoly, var: usize) -> MultiPoly {
    MultiPoly::from_terms(p.coeffs().iter().enumerate().filter_map(|(k, c)| {
        if c.is_zero() {
            return None;
        }
        let mut key = vec![0u16; var + 1];
        key[var] = k as u16;
        Some((key, c.clone()))
    }))
}

/// Fits `P(x, y) / (Q1(x) Q2(y))` to a doubly-indexed table: `Q2` is the
/// least common multiple of the denominators guessed from the rows (fixed
/// first index), `Q1` likewise from the columns, and `P` is the product
/// `F * Q1 * Q2`, which must terminate as a polynomial of degree less than
/// `(deg Q1, deg Q2)`. Returns `None` — never a partial answer — if any row
/// or column resists fitting, if the product fails to terminate, or if the
/// re-expansion does not reproduce the table.
pub fn guess_bivariate_gf(table: &[Vec<Rat>], config: &GuessConfig) -> Option<BivariateGf> {
    let m_len = table.len();
    if m_len == 0 {
        return None;
    }
    let n_len = table[0].len();
    if n_len == 0 || table.iter().any(|row| row.len() != n_len) {
        return None;
    }
    let mut q2 = UniPoly::one();
    for row in table {
        let rf = guess_rational_gf(row, config)?;
        q2 = UniPoly::lcm(&q2, rf.denominator());
    }
    let mut q1 = UniPoly::one();
    for j in 0..n_len {
        let col: Vec<Rat> = table.iter().map(|row| row[j].clone()).collect();
        let rf = guess_rational_gf(&col, config)?;
        q1 = UniPoly::lcm(&q1, rf.denominator());
    }
    let d1 = q1.degree().unwrap_or(0);
    let d2 = q2.degree().unwrap_or(0);
    // P = F * Q1 * Q2, computed as a truncated product over the table; every
    // coefficient outside the expected degree box must vanish.
    let mut p = MultiPoly::zero();
    for i in 0..m_len {
        for j in 0..n_len {
            let mut acc = Rat::zero();
            for (u, cu) in q1.coeffs().iter().enumerate().take(i + 1) {
                if cu.is_zero() {
                    continue;
                }
                for (v, cv) in q2.coeffs().iter().enumerate().take(j + 1) {
                    if cv.is_zero() {
                        continue;
                    }
                    acc += cu * cv * &table[i - u][j - v];
                }
            }
            if acc.is_zero() {
                continue;
            }
            if i >= d1 || j >= d2 {
                return None;
            }
            p = p.add(&MultiPoly::from_terms([(vec![i as u16, j as u16], acc)]));
        }
    }
    let gf = BivariateGf { p, q1, q2 };
    if gf.expand(m_len - 1, n_len - 1)? != table {
        return None;
    }
    Some(gf)
}

/// Classification of a count under the reflective-symmetry theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Square,
    TwiceSquare,
    Neither,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Classification::Square => "Square",
            Classification::TwiceSquare => "TwiceSquare",
            Classification::Neither => "Neither",
        };
        f.write_str(name)
    }
}

/// Exact classification of `value` as a perfect square, twice a perfect
/// square, or neither. Zero classifies as `Square`.
pub fn ciucu_classify(value: &Int) -> Result<Classification, CFiniteError> {
    if value.is_negative() {
        return Err(CFiniteError::NegativeValue);
    }
    let root = value.sqrt();
    if &root * &root == *value {
        return Ok(Classification::Square);
    }
    if (value % Int::from(2)).is_zero() {
        let half: Int = value / Int::from(2);
        let root = half.sqrt();
        if &root * &root == half {
            return Ok(Classification::TwiceSquare);
        }
    }
    Ok(Classification::Neither)
}

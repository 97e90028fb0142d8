//! Sparse multivariate polynomials over exact rationals.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_traits::{One, Zero};

use super::matrix::{Ring, WeightRing};
use super::poly::write_term;
use super::Rat;

/// A sparse multivariate polynomial: a map from exponent vectors to nonzero
/// rational coefficients.
///
/// Exponent vectors are kept with trailing zeros trimmed, so `h^2` is stored
/// as `[2]` whether the polynomial nominally lives in two or three variables.
/// That makes the ring operations independent of any declared arity; the
/// number of variables is supplied only when formatting or evaluating.
/// Variable positions are fixed by convention at the call sites: tile weights
/// use `(h, v, m) = (0, 1, 2)` and bivariate generating functions use
/// `(x, y) = (0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u16>, Rat>,
}

fn trim(mut key: Vec<u16>) -> Vec<u16> {
    while key.last() == Some(&0) {
        key.pop();
    }
    key
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { terms }
    }

    /// The polynomial consisting of the single variable at `index`.
    pub fn var(index: usize) -> Self {
        let mut key = Vec::with_capacity(index + 1);
        key.resize(index, 0);
        key.push(1);
        let mut terms = BTreeMap::new();
        terms.insert(key, Rat::one());
        MultiPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Vec<u16>, Rat)>) -> Self {
        let mut out = MultiPoly::zero();
        for (key, c) in it {
            out.add_term(trim(key), c);
        }
        out
    }

    fn add_term(&mut self, key: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of variables actually appearing (highest used index + 1).
    pub fn arity(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rat)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn coeff(&self, key: &[u16]) -> Rat {
        let k = trim(key.to_vec());
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let n = ka.len().max(kb.len());
                let mut key = Vec::with_capacity(n);
                for i in 0..n {
                    key.push(ka.get(i).copied().unwrap_or(0) + kb.get(i).copied().unwrap_or(0));
                }
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Value with every variable set to one.
    pub fn eval_ones(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Evaluates at the given variable values; variables beyond the slice are
    /// set to one.
    pub fn eval(&self, values: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in k.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values.get(i).cloned().unwrap_or_else(Rat::one);
                let mut p = Rat::one();
                for _ in 0..e {
                    p *= &v;
                }
                term *= p;
            }
            acc += term;
        }
        acc
    }

    /// Restricts to the variable at `index` by setting every other variable to
    /// one; returns the dense coefficient vector of the resulting univariate
    /// polynomial (lowest degree first).
    pub fn restrict(&self, index: usize) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::new();
        for (k, c) in &self.terms {
            let e = k.get(index).copied().unwrap_or(0) as usize;
            if out.len() <= e {
                out.resize(e + 1, Rat::zero());
            }
            out[e] += c;
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    /// Renders with explicit `+`/`-` separated monomials ordered by ascending
    /// total degree (reverse-lexicographic within a degree), e.g.
    /// `36 - 23*x - 23*y + 10*x*y`.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().map(|&e| e as u32).sum();
            let db: u32 = b.iter().map(|&e| e as u32).sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        let mut first = true;
        for key in keys {
            let c = &self.terms[key];
            let mut mono = String::new();
            for (i, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                match names.get(i) {
                    Some(name) => mono.push_str(name),
                    None => {
                        let _ = write!(mono, "v{i}");
                    }
                }
                if e > 1 {
                    let _ = write!(mono, "^{e}");
                }
            }
            write_term(&mut out, &mut first, c, &mono);
        }
        out
    }
}

impl core::ops::Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> Self {
        MultiPoly::add(&self, &rhs)
    }
}

impl core::ops::Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> Self {
        MultiPoly::mul(&self, &rhs)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::one()
    }
}

impl Ring for MultiPoly {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

impl WeightRing for MultiPoly {
    fn horizontal() -> Self {
        MultiPoly::var(0)
    }
    fn vertical() -> Self {
        MultiPoly::var(1)
    }
    fn monomer() -> Self {
        MultiPoly::var(2)
    }
}

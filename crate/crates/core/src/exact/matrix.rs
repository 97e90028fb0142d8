//! Generic matrices over a commutative ring, exact linear solving.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Int, Rat};

/// Minimal commutative-ring interface shared by [`Int`], [`Rat`] and
/// [`super::MultiPoly`]. The reference-taking methods let matrix kernels
/// avoid needless clones of big values.
pub trait Ring: Clone + PartialEq + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl Ring for Int {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Ring for Rat {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Rings that can weight tiles: the images of the three tile kinds. For plain
/// counting over [`Int`] all three are one; over [`super::MultiPoly`] they are
/// the variables `h`, `v`, `m`.
pub trait WeightRing: Ring {
    fn horizontal() -> Self;
    fn vertical() -> Self;
    fn monomer() -> Self;
}

impl WeightRing for Int {
    fn horizontal() -> Self {
        Int::one()
    }
    fn vertical() -> Self {
        Int::one()
    }
    fn monomer() -> Self {
        Int::one()
    }
}

/// A dense row-major matrix. Most uses are square (transfer matrices), but
/// rectangular shapes occur for seam matrices between sides of different
/// lengths and for least-constraint linear systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul_ref(b);
                    let cell: &mut T = out.get_mut(r, c);
                    *cell = cell.add_ref(&prod);
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix dimension mismatch");
        let mut out = vec![T::zero(); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            for (c, value) in v.iter().enumerate() {
                let a = self.get(r, c);
                if a.is_zero() || value.is_zero() {
                    continue;
                }
                *slot = slot.add_ref(&a.mul_ref(value));
            }
        }
        out
    }

    /// `self^k` by binary exponentiation; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Self {
        assert_eq!(self.rows, self.cols, "matrix power of non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.add_ref(self.get(i, i));
        }
        acc
    }
}

/// Solves `a * x = b` exactly over the rationals by Gaussian elimination with
/// deterministic pivoting (first nonzero entry in column order). Returns
/// `None` when the system is inconsistent; free variables are set to zero, so
/// the returned solution is unique for a given input.
pub fn solve_linear_exact(a: &Matrix<Rat>, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    let mut pivot_cols: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if pivot_row != rank {
            for c in 0..cols {
                let tmp = m.get(rank, c).clone();
                *m.get_mut(rank, c) = m.get(pivot_row, c).clone();
                *m.get_mut(pivot_row, c) = tmp;
            }
            rhs.swap(rank, pivot_row);
        }
        let inv = Rat::one() / m.get(rank, col).clone();
        for c in col..cols {
            let v = m.get(rank, c).clone() * &inv;
            *m.get_mut(rank, c) = v;
        }
        rhs[rank] *= &inv;
        for r in 0..rows {
            if r == rank || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in col..cols {
                let v = m.get(r, c).clone() - &factor * m.get(rank, c);
                *m.get_mut(r, c) = v;
            }
            let v = rhs[r].clone() - &factor * &rhs[rank];
            rhs[r] = v;
        }
        pivot_cols.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Inconsistent if any remaining row reduced to 0 = nonzero.
    if rhs[rank..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, col) in pivot_cols {
        x[col] = rhs[row].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat_int};
    use super::*;

    fn fib_companion() -> Matrix<Int> {
        Matrix::from_fn(2, 2, |r, c| if (r, c) == (1, 1) { int(0) } else { int(1) })
    }

    #[test]
    fn pow_zero_is_identity() {
        let m = fib_companion();
        assert_eq!(m.pow(0), Matrix::identity(2));
    }

    #[test]
    fn fibonacci_companion_tenth_power() {
        // top-left entry of the tenth power is the eleventh Fibonacci number
        let m = fib_companion().pow(10);
        assert_eq!(*m.get(0, 0), int(89));
    }

    #[test]
    fn solve_identity_system() {
        let a = Matrix::<Rat>::identity(3);
        let b = [rat_int(4), rat_int(-1), rat_int(7)];
        assert_eq!(solve_linear_exact(&a, &b), Some(b.to_vec()));
    }

    #[test]
    fn solve_fibonacci_hankel() {
        // recurrence coefficients from the window 0,1,1,2,3,5
        let seq = [0i64, 1, 1, 2, 3, 5].map(rat_int);
        let a = Matrix::from_fn(2, 2, |r, c| seq[2 + r - 1 - c].clone());
        let b = [seq[2].clone(), seq[3].clone()];
        let x = solve_linear_exact(&a, &b).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
    }

    #[test]
    fn solve_inconsistent_returns_none() {
        let a = Matrix::zero(1, 1);
        assert_eq!(solve_linear_exact(&a, &[rat_int(1)]), None);
    }

    #[test]
    fn solve_underdetermined_sets_free_to_zero() {
        // x + y = 3 with two unknowns
        let a = Matrix::from_fn(1, 2, |_, _| rat_int(1));
        let x = solve_linear_exact(&a, &[rat_int(3)]).unwrap();
        assert_eq!(x, vec![rat_int(3), rat_int(0)]);
    }
}

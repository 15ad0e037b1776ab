//! Dense exact linear algebra over a field: reduced row echelon forms,
//! kernels, ranks, and linear solves.
//!
//! Everything is exact. The field is abstracted by [`Field`] so the same code
//! serves the rationals and the cyclotomic fields. A field element may need a
//! context to build its zero and one (the conductor, for cyclotomic numbers),
//! which is why matrices carry a `ctx`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub trait Field: Clone + PartialEq + fmt::Debug {
    type Ctx: Clone + PartialEq + fmt::Debug;

    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Field for Rational {
    type Ctx = ();

    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }
    fn one_in(_: &()) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

pub type RationalMatrix = Matrix<Rational>;

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, ctx: F::Ctx) -> Self {
        let data = vec![F::zero_in(&ctx); rows * cols];
        Self {
            rows,
            cols,
            ctx,
            data,
        }
    }

    pub fn identity(n: usize, ctx: F::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.data[i * n + i] = F::one_in(&m.ctx);
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, ctx: F::Ctx, rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::arg(format!(
                    "row {i} has length {} but the matrix has {cols} columns",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Self {
            rows: n,
            cols,
            ctx,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: Vec<F>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::arg("row length does not match column count"));
        }
        self.data.extend(row);
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.ctx.clone());
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::arg(format!(
                "vector of length {} for a matrix with {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| dot(&self.ctx, self.row(r), v))
            .collect())
    }

    /// Reduced row echelon form: pivots equal 1, pivot columns strictly
    /// increasing, zero rows dropped.
    pub fn rref(&self) -> Echelon<F> {
        let mut rows = self.row_vecs();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            let Some(p) = (next..rows.len()).find(|&r| !rows[r][c].is_zero_elem()) else {
                continue;
            };
            rows.swap(next, p);
            let inv = rows[next][c].inv().expect("nonzero pivot");
            for x in rows[next].iter_mut() {
                *x = x.mul(&inv);
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[c].is_zero_elem() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero_elem() {
                        *x = x.sub(&f.mul(p));
                    }
                }
            }
            pivots.push(c);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        Echelon {
            cols: self.cols,
            ctx: self.ctx.clone(),
            rows,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right kernel. The basis is in reduced echelon form read
    /// from the right: each vector's last nonzero entry is 1, sits in a column
    /// where every other basis vector vanishes, and vectors are listed with
    /// these columns descending.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        self.rref().kernel_basis()
    }

    /// Some `x` with `m x = b`, free variables set to zero, or `None` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::arg(format!(
                "right-hand side of length {} for a matrix with {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1, self.ctx.clone());
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero_in(&self.ctx); self.cols];
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }
}

pub fn dot<F: Field>(ctx: &F::Ctx, a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero_elem() && !y.is_zero_elem())
        .fold(F::zero_in(ctx), |acc, (x, y)| acc.add(&x.mul(y)))
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero_elem())
}

/// A reduced row echelon form. Doubles as a canonical description of the row
/// space: two matrices span the same space iff their echelon forms are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<F: Field> {
    cols: usize,
    ctx: F::Ctx,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    /// The row space spanned by `vectors` (each of length `cols`).
    pub fn span(cols: usize, ctx: F::Ctx, vectors: Vec<Vec<F>>) -> Result<Self> {
        Ok(Matrix::from_rows(cols, ctx, vectors)?.rref())
    }

    pub fn zero_space(cols: usize, ctx: F::Ctx) -> Self {
        Self {
            cols,
            ctx,
            rows: vec![],
            pivots: vec![],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, ascending. Their unit vectors span a
    /// complement of the row space.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut piv = self.pivots.iter().peekable();
        (0..self.cols)
            .filter(|c| {
                if piv.peek() == Some(&c) {
                    piv.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.cols, self.ctx.clone(), self.rows.clone())
            .expect("echelon rows have uniform length")
    }

    /// Remainder of `v` after clearing every pivot column; zero iff `v` lies
    /// in the row space.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero_elem() {
                continue;
            }
            let f = out[p].clone();
            for (x, r) in out.iter_mut().zip(row) {
                if !r.is_zero_elem() {
                    *x = x.sub(&f.mul(r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coefficients of `v` in the echelon rows, if `v` lies in the row space.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Echelon form of the sum of two row spaces.
    pub fn join(&self, other: &Self) -> Self {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix::from_rows(self.cols, self.ctx.clone(), rows)
            .expect("uniform rows")
            .rref()
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let free = self.free_columns();
        free.iter()
            .rev()
            .map(|&f| {
                let mut v = vec![F::zero_in(&self.ctx); self.cols];
                v[f] = F::one_in(&self.ctx);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero_elem() {
                        v[p] = row[f].neg();
                    }
                }
                v
            })
            .collect()
    }
}

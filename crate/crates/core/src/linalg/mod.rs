//! Dense exact linear algebra over any [`Field`].
//!
//! Vectors are columns and matrices act on the left. A [`Subspace`] keeps
//! its basis vectors as the rows of a reduced row echelon matrix.

use crate::error::{Error, Result};
use crate::field::Field;

mod echelon;
mod subspace;

pub use echelon::IncrementalEchelon;
pub use subspace::{induced_actions, InducedActions, Subspace};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        Mat { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = f.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major entries; this is also the flattening used for span tests.
    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<E> {
        self.data
    }

    pub fn map<T: Clone>(&self, g: impl FnMut(&E) -> T) -> Mat<T> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(g).collect() }
    }

    pub fn try_map<T: Clone, Er>(&self, g: impl FnMut(&E) -> std::result::Result<T, Er>) -> std::result::Result<Mat<T>, Er> {
        Ok(Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(g).collect::<std::result::Result<_, _>>()? })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut data = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for i in r0..r1 {
            data.extend_from_slice(&self.row(i)[c0..c1]);
        }
        Mat { rows: r1 - r0, cols: c1 - c0, data }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|e| f.is_zero(e))
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { f.is_one(self.get(i, j)) } else { f.is_zero(self.get(i, j)) })
            })
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: &E, f: &F) -> Self {
        self.map(|a| f.mul(a, c))
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..other.cols {
                let mut acc = f.zero();
                for (k, a) in row.iter().enumerate() {
                    if f.is_zero(a) {
                        continue;
                    }
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                data.push(acc);
            }
        }
        Mat { rows: self.rows, cols: other.cols, data }
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, v: &[E], f: &F) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn pow<F: Field<Elem = E>>(&self, mut e: u64, f: &F) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(f, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    pub fn kronecker<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = Self::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        m
    }

    /// Block diagonal matrix with `blocks` along the diagonal.
    pub fn block_diag<F: Field<Elem = E>>(blocks: &[Self], f: &F) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(f, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Usage("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let r = rref(&self.hconcat(&Self::identity(f, n)), f);
        if r.pivots.iter().take_while(|&&p| p < n).count() < n {
            return Err(Error::Singular);
        }
        Ok(r.matrix.block(0, n, n, 2 * n))
    }

    pub fn determinant<F: Field<Elem = E>>(&self, f: &F) -> E {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !f.is_zero(m.get(r, col))) else {
                return f.zero();
            };
            if piv != col {
                m.swap_rows(piv, col);
                det = f.neg(&det);
            }
            let pv = m.get(col, col).clone();
            det = f.mul(&det, &pv);
            let inv = f.inv(&pv).expect("nonzero pivot");
            for r in col + 1..n {
                if f.is_zero(m.get(r, col)) {
                    continue;
                }
                let c = f.mul(m.get(r, col), &inv);
                for j in col..n {
                    let v = f.sub(m.get(r, j), &f.mul(&c, m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn hconcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "dimension mismatch");
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Mat { rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn vconcat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Reduced row echelon form of a matrix with the row operations applied.
#[derive(Clone, Debug)]
pub struct Rref<E> {
    pub matrix: Mat<E>,
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
    /// Invertible `T` with `T * input = matrix`.
    pub transform: Mat<E>,
}

pub fn rref<F: Field>(a: &Mat<F::Elem>, f: &F) -> Rref<F::Elem> {
    let mut m = a.clone();
    let mut t = Mat::identity(f, a.rows);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(piv) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
            continue;
        };
        m.swap_rows(piv, row);
        t.swap_rows(piv, row);
        let inv = f.inv(m.get(row, col)).expect("nonzero pivot");
        for j in 0..m.cols {
            let v = f.mul(m.get(row, j), &inv);
            m.set(row, j, v);
        }
        for j in 0..t.cols {
            let v = f.mul(t.get(row, j), &inv);
            t.set(row, j, v);
        }
        for r in 0..m.rows {
            if r == row || f.is_zero(m.get(r, col)) {
                continue;
            }
            let c = m.get(r, col).clone();
            for j in 0..m.cols {
                if !f.is_zero(m.get(row, j)) {
                    let v = f.sub(m.get(r, j), &f.mul(&c, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            for j in 0..t.cols {
                if !f.is_zero(t.get(row, j)) {
                    let v = f.sub(t.get(r, j), &f.mul(&c, t.get(row, j)));
                    t.set(r, j, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref { matrix: m, rank: row, pivots, transform: t }
}

pub fn rank<F: Field>(a: &Mat<F::Elem>, f: &F) -> usize {
    rref(a, f).rank
}

/// `{ v : E v = 0 }`.
pub fn nullspace<F: Field>(e: &Mat<F::Elem>, f: &F) -> Subspace<F::Elem> {
    let r = rref(e, f);
    let n = e.cols();
    let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
    let vectors = free
        .iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); n];
            v[fc] = f.one();
            for (i, &pc) in r.pivots.iter().enumerate() {
                v[pc] = f.neg(r.matrix.get(i, fc));
            }
            v
        })
        .collect();
    Subspace::from_vectors(n, vectors, f)
}

/// Coefficients `a` with `target = sum a_k basis_k`, matrices flattened
/// row-major. The basis must be linearly independent.
pub fn coordinates<F: Field>(target: &Mat<F::Elem>, basis: &[Mat<F::Elem>], f: &F) -> Result<Vec<F::Elem>> {
    let mut ech = IncrementalEchelon::new(target.entries().len());
    for b in basis {
        if b.entries().len() != target.entries().len() {
            return Err(Error::Usage("basis and target shapes differ".into()));
        }
        if ech.insert(b.entries().to_vec(), f).is_none() {
            return Err(Error::Usage("basis elements are linearly dependent".into()));
        }
    }
    ech.express(target.entries(), f).ok_or(Error::NotInSpan)
}

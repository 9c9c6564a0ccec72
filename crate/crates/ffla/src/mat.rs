use crate::{FflaError, Fp, Result};
use std::fmt;

pub type Vector = Vec<u32>;

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    f: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "Mat<F_{}>{}x{}[", self.f.p(), self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(fm, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(fm, " ")?;
                }
                write!(fm, "{}", self.get(r, c))?;
            }
        }
        write!(fm, "]")
    }
}

impl Mat {
    pub fn zeros(f: Fp, rows: usize, cols: usize) -> Self {
        Mat { f, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(f: Fp, n: usize) -> Self {
        let mut m = Mat::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % f.p();
        }
        m
    }

    pub fn scalar(f: Fp, n: usize, c: u32) -> Self {
        let mut m = Mat::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_vec(f: Fp, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        let data = data.into_iter().map(|v| v % f.p()).collect();
        Mat { f, rows, cols, data }
    }

    pub fn from_i64(f: Fp, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Mat { f, rows, cols, data: data.iter().map(|&v| f.reduce(v)).collect() }
    }

    pub fn from_rows(f: Fp, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let flat: Vec<i64> = rows.iter().flat_map(|x| x.iter().copied()).collect();
        Mat::from_i64(f, r, c, &flat)
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(f: Fp, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Mat::zeros(f, rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for i in 0..rows {
                m.data[i * m.cols + j] = v[i];
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.f
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.f.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.f, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "mul shape {}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols);
        let p = self.f.p() as u64;
        let mut out = Mat::zeros(self.f, self.rows, o.cols);
        let mut acc = vec![0u64; o.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &o.data[k * o.cols..(k + 1) * o.cols];
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x += a * b as u64;
                }
            }
            for c in 0..o.cols {
                out.data[r * o.cols + c] = (acc[c] % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vector {
        assert_eq!(self.cols, v.len());
        let p = self.f.p() as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let f = self.f;
        Mat {
            f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let f = self.f;
        Mat {
            f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let f = self.f;
        Mat { f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    pub fn neg(&self) -> Mat {
        let f = self.f;
        Mat { f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.neg(a)).collect() }
    }

    /// In-place accumulate `self += c * o`.
    pub fn axpy(&mut self, c: u32, o: &Mat) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if c == 0 {
            return;
        }
        let f = self.f;
        for (a, &b) in self.data.iter_mut().zip(&o.data) {
            *a = f.add(*a, f.mul(c, b));
        }
    }

    pub fn hstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.rows, o.rows);
        let mut m = Mat::zeros(self.f, self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * m.cols + c] = self.get(r, c);
            }
            for c in 0..o.cols {
                m.data[r * m.cols + self.cols + c] = o.get(r, c);
            }
        }
        m
    }

    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&o.data);
        Mat { f: self.f, rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Block matrix `[[a, 0], [c, d]]`-style assembly from four blocks.
    pub fn blocks(tl: &Mat, tr: &Mat, bl: &Mat, br: &Mat) -> Mat {
        tl.hstack(tr).vstack(&bl.hstack(br))
    }

    pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
        let tr = Mat::zeros(a.f, a.rows, b.cols);
        let bl = Mat::zeros(a.f, b.rows, a.cols);
        Mat::blocks(a, &tr, &bl, b)
    }

    /// Copy `o` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put(&mut self, r0: usize, c0: usize, o: &Mat) {
        assert!(r0 + o.rows <= self.rows && c0 + o.cols <= self.cols);
        for r in 0..o.rows {
            for c in 0..o.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = o.get(r, c);
            }
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(self.f, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = self.get(r0 + r, c0 + c);
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.f, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.f;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            for k in c..cols {
                self.data[r * cols + k] = f.mul(self.data[r * cols + k], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for k in c..cols {
                    let v = f.mul(factor, self.data[r * cols + k]);
                    self.data[i * cols + k] = f.sub(self.data[i * cols + k], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}` in reduced column-echelon form: each
    /// vector has a leading 1 that is zero in all the other vectors.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let f = self.f;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let raw: Vec<Vector> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, free));
                }
                v
            })
            .collect();
        Echelon::from_vectors(f, self.cols, &raw).basis
    }

    /// All solutions of `self * x = b`, or `None` if `b` is not in the image.
    pub fn solve_affine(&self, b: &[u32]) -> Result<Option<(Vector, Vec<Vector>)>> {
        if b.len() != self.rows {
            return Err(FflaError::Dim(format!("matrix has {} rows, rhs has length {}", self.rows, b.len())));
        }
        let f = self.f;
        let aug = self.hstack(&Mat::from_cols(f, self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Ok(Some((x, self.kernel_basis())))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.f, n));
        let (r, pivots) = aug.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Echelon basis of the column space.
    pub fn column_space(&self) -> Echelon {
        let cols: Vec<Vector> = (0..self.cols).map(|c| self.col(c)).collect();
        Echelon::from_vectors(self.f, self.rows, &cols)
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut r = Mat::identity(self.f, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u64).is_zero()
    }
}

/// A subspace kept as a reduced row-echelon basis: basis vector `k` has a 1 at
/// `pivots[k]`, zeros before it, and every other basis vector is zero there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub f: Fp,
    pub dim_ambient: usize,
    pub basis: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn empty(f: Fp, dim_ambient: usize) -> Self {
        Echelon { f, dim_ambient, basis: vec![], pivots: vec![] }
    }

    pub fn from_vectors(f: Fp, dim_ambient: usize, vs: &[Vector]) -> Self {
        if vs.is_empty() {
            return Echelon::empty(f, dim_ambient);
        }
        let flat: Vec<u32> = vs.iter().flat_map(|v| {
            assert_eq!(v.len(), dim_ambient);
            v.iter().copied()
        }).collect();
        let m = Mat { f, rows: vs.len(), cols: dim_ambient, data: flat };
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Echelon { f, dim_ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Subtract the projection onto the span; returns (coordinates, residual).
    pub fn reduce(&self, v: &[u32]) -> (Vector, Vector) {
        let f = self.f;
        let mut r = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = r[pc];
            coords.push(c);
            if c != 0 {
                for (x, &y) in r.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        (coords, r)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).1.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` if it lies in the span.
    pub fn coords(&self, v: &[u32]) -> Option<Vector> {
        let (c, r) = self.reduce(v);
        r.iter().all(|&x| x == 0).then_some(c)
    }

    pub fn combine(&self, coords: &[u32]) -> Vector {
        let f = self.f;
        let mut v = vec![0; self.dim_ambient];
        for (b, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
        }
        v
    }

    /// Add a vector; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        *self = Echelon::from_vectors(self.f, self.dim_ambient, &vs);
        true
    }

    pub fn contains_space(&self, o: &Echelon) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    /// Columns-as-basis matrix (ambient x dim).
    pub fn as_cols(&self) -> Mat {
        Mat::from_cols(self.f, self.dim_ambient, &self.basis)
    }
}

/// An independent family of vectors with a fixed left inverse, for reading
/// off coordinates in a basis that is not echelonised.
#[derive(Clone, Debug)]
pub struct Frame {
    pub f: Fp,
    pub dim_ambient: usize,
    pub vecs: Vec<Vector>,
    rows: Vec<usize>,
    sinv: Mat,
}

impl Frame {
    /// Panics if the vectors are dependent.
    pub fn new(f: Fp, dim_ambient: usize, vecs: Vec<Vector>) -> Self {
        let k = vecs.len();
        let m = Mat::from_cols(f, dim_ambient, &vecs);
        let (_, rows) = m.transpose().rref();
        assert_eq!(rows.len(), k, "frame vectors must be independent");
        let mut s = Mat::zeros(f, k, k);
        for (i, &r) in rows.iter().enumerate() {
            for j in 0..k {
                s.set(i, j, m.get(r, j));
            }
        }
        let sinv = s.inverse().expect("pivot rows give an invertible minor");
        Frame { f, dim_ambient, vecs, rows, sinv }
    }

    pub fn dim(&self) -> usize {
        self.vecs.len()
    }

    /// Coordinates of `x`, assuming it lies in the span.
    pub fn coords_unchecked(&self, x: &[u32]) -> Vector {
        let sub: Vector = self.rows.iter().map(|&r| x[r]).collect();
        self.sinv.mul_vec(&sub)
    }

    pub fn coords(&self, x: &[u32]) -> Option<Vector> {
        let c = self.coords_unchecked(x);
        (self.combine(&c) == x).then_some(c)
    }

    pub fn combine(&self, c: &[u32]) -> Vector {
        let f = self.f;
        let mut v = vec![0; self.dim_ambient];
        for (b, &a) in self.vecs.iter().zip(c) {
            if a != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(a, y));
                }
            }
        }
        v
    }
}

//! Dense matrices over an exact scalar ring.
//!
//! Sizes here are tiny (the braiding layers on a handful of strands), so a
//! dense representation with zero-skipping multiplication is enough.

use crate::error::Error;
use crate::scalars::ScalarRing;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Matrix<E> {
    pub fn zero<R: ScalarRing<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity<R: ScalarRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_fn<R: ScalarRing<Elem = E>>(
        ring: &R,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> E,
    ) -> Self {
        let _ = ring;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to<R: ScalarRing<Elem = E>>(&mut self, ring: &R, r: usize, c: usize, v: &E) {
        let cur = ring.add(self.get(r, c), v);
        self.set(r, c, cur);
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Self::zero(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let p = ring.mul(a, b);
                    out.add_to(ring, i, j, &p);
                }
            }
        }
        out
    }

    pub fn scale<R: ScalarRing<Elem = E>>(&self, ring: &R, s: &E) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| ring.mul(x, s)).collect(),
        }
    }

    pub fn add<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn kron<R: ScalarRing<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zero(ring, rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if ring.is_zero(a) {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if ring.is_zero(b) {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, ring.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn is_identity<R: ScalarRing<Elem = E>>(&self, ring: &R) -> bool {
        self.rows == self.cols && *self == Self::identity(ring, self.rows)
    }

    /// Exact inverse over the ring by fraction-free Gauss-Jordan elimination
    /// (Montante/Bareiss). Every intermediate division is exact over an
    /// integral domain; the final divisions by the determinant succeed iff
    /// the inverse exists over the ring itself.
    pub fn inverse<R: ScalarRing<Elem = E>>(&self, ring: &R) -> Result<Self, Error> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let w = 2 * n;
        let mut m = Self::zero(ring, n, w);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.get(i, j).clone());
            }
            m.set(i, n + i, ring.one());
        }
        let mut prev = ring.one();
        for k in 0..n {
            if ring.is_zero(m.get(k, k)) {
                let Some(r) = (k + 1..n).find(|&r| !ring.is_zero(m.get(r, k))) else {
                    return Err(Error::SingularMatrix);
                };
                for j in 0..w {
                    let tmp = m.get(k, j).clone();
                    m.set(k, j, ring.neg(m.get(r, j)));
                    m.set(r, j, tmp);
                }
            }
            let pivot = m.get(k, k).clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let mik = m.get(i, k).clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let t = ring.sub(
                        &ring.mul(&pivot, m.get(i, j)),
                        &ring.mul(&mik, m.get(k, j)),
                    );
                    let v = ring
                        .div_exact(&t, &prev)
                        .ok_or(Error::SingularMatrix)?;
                    m.set(i, j, v);
                }
                m.set(i, k, ring.zero());
            }
            prev = pivot;
        }
        // Diagonal is now det(A) in every slot; divide it out.
        let mut inv = Self::zero(ring, n, n);
        for i in 0..n {
            let d = m.get(i, i).clone();
            for j in 0..n {
                let v = ring
                    .div_exact(m.get(i, n + j), &d)
                    .ok_or(Error::SingularMatrix)?;
                inv.set(i, j, v);
            }
        }
        Ok(inv)
    }
}

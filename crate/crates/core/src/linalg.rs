//! Dense matrices over any [`Scalar`], exact Gaussian elimination over ℚ and
//! the division-by-integers characteristic polynomial.

use crate::scalar::{Scalar, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<R> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<R>,
}

impl<R: Scalar> Mat<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> R {
        (0..self.rows).fold(R::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Coefficients of `det(λ - A)`: entry `k` multiplies `λ^(n-k)`, entry 0 is 1.
    ///
    /// Faddeev–LeVerrier; the only divisions are by the integers `1..=n`.
    pub fn char_poly(&self) -> Vec<R> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![R::one()];
        let mut m = Self::identity(n);
        for k in 1..=n {
            let am = self.mul(&m);
            let c = am.trace().neg().scale(&Q::new(1.into(), (k as i64).into()));
            coeffs.push(c.clone());
            if k < n {
                m = am;
                for i in 0..n {
                    let idx = i * n + i;
                    m.data[idx] = m.data[idx].add(&c);
                }
            }
        }
        coeffs
    }
}

/// Row reduction over ℚ. Returns the reduced matrix and its pivot columns.
pub fn rref(m: &Mat<Q>) -> (Mat<Q>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = a.get(row, col).recip();
        for c in 0..a.cols {
            let v = a.get(row, c) * &inv;
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r != row && !a.get(r, col).is_zero() {
                let f = a.get(r, col).clone();
                for c in 0..a.cols {
                    let v = a.get(r, c) - &f * a.get(row, c);
                    a.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Mat<Q>) -> usize {
    rref(m).1.len()
}

/// Basis of the right null space, one vector per free column.
pub fn kernel(m: &Mat<Q>) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); m.cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = b`; `None` when inconsistent. Free variables are set to zero.
pub fn solve(m: &Mat<Q>, b: &[Q]) -> Option<Vec<Q>> {
    let aug = Mat::from_fn(m.rows, m.cols + 1, |r, c| if c < m.cols { m.get(r, c).clone() } else { b[r].clone() });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![Q::zero(); m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, m.cols).clone();
    }
    Some(x)
}

pub fn inverse(m: &Mat<Q>) -> Option<Mat<Q>> {
    let n = m.rows;
    let aug = Mat::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m.get(r, c).clone()
        } else if c - n == r {
            Q::one()
        } else {
            Q::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Mat::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

//! Univariate polynomials over ℚ and the rational function field ℚ(z).

use std::fmt;

use crate::linalg::Mat;
use crate::scalar::{fmt_q, q, Scalar, Q};

/// Dense polynomial, `coeffs[k]` multiplies `z^k`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    pub coeffs: Vec<Q>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `z`.
    pub fn var() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn monic(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        let inv = d.lead().recip();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * q(k as i64)).collect())
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_mat<R: Scalar>(&self, m: &Mat<R>) -> Mat<R> {
        let n = m.rows;
        let mut acc = Mat::<R>::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let idx = i * n + i;
                acc.data[idx] = acc.data[idx].add(&R::from_q(c));
            }
        }
        acc
    }
}

impl Scalar for QPoly {
    fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(Q::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }
    fn neg(&self) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }
    fn from_q(c: &Q) -> Self {
        Self::constant(c.clone())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_q(c),
                1 => format!("{}*z", fmt_q(c)),
                _ => format!("{}*z^{}", fmt_q(c), k),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Element of ℚ(z) in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    pub num: QPoly,
    pub den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = (num.div_rem(&g).0, den.div_rem(&g).0);
        let l = den.lead().recip();
        RatFunc { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::one() }
    }

    /// `c · z^k` for any integer `k`.
    pub fn monomial(c: Q, k: i64) -> Self {
        if k >= 0 {
            Self::new(QPoly::monomial(c, k as usize), QPoly::one())
        } else {
            Self::new(QPoly::constant(c), QPoly::monomial(Q::one(), (-k) as usize))
        }
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::new(n, self.den.mul(&self.den))
    }

    pub fn inv(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Degree at infinity: `deg num - deg den`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::one() }
    }
    fn one() -> Self {
        Self::poly(QPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        Self::new(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }
    fn from_q(c: &Q) -> Self {
        Self::poly(QPoly::constant(c.clone()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (z-1)^2 (z+2)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])));
        assert_eq!(f.gcd(&p(&[1, 0, -1])), p(&[-1, 1]));
        let (qq, r) = f.div_rem(&p(&[2, 1]));
        assert!(r.is_zero());
        assert_eq!(qq, p(&[1, -2, 1]));
    }

    #[test]
    fn rational_functions_reduce() {
        let a = RatFunc::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert_eq!(a, RatFunc::new(p(&[1, 1]), p(&[2])));
        let z = RatFunc::poly(QPoly::var());
        assert_eq!(z.inv().derivative(), RatFunc::monomial(q(-1), -2));
        assert!(z.add(&z.inv()).sub(&z.inv()).is_polynomial());
    }

    #[test]
    fn matrix_evaluation() {
        let m = Mat::from_fn(2, 2, |r, c| q([[0, 1], [1, 0]][r][c]));
        let cp = p(&[-1, 0, 1]);
        assert!(cp.eval_mat(&m).is_zero());
    }
}

//! Exact rational Laurent polynomials with explicit truncation windows.
//!
//! A [`LaurentPoly`] with window `[lo, hi]` is a Laurent series whose
//! coefficients vanish below `lo` and are known exactly up to `hi`. A missing
//! `hi` means the value is an exact Laurent polynomial. Reading a coefficient
//! above `hi` is an error, never a silent zero.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{fmt_q, parse_q, q, Scalar, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i64,
    hi: Option<i64>,
    /// `coeffs[k]` multiplies `t^(lo + k)`; trailing zeros are trimmed.
    coeffs: Vec<Q>,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, hi: None, coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Q, k: i64) -> Self {
        Self::from_terms([(k, c)])
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(Q::one(), k)
    }

    /// Exact Laurent polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Q)>) -> Self {
        let terms: Vec<(i64, Q)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let top = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Q::zero(); (top - lo + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - lo) as usize] += c;
        }
        let mut p = LaurentPoly { lo, hi: None, coeffs };
        p.normalize();
        p
    }

    /// Series known on `[lo, hi]` only. Fails if a term lies outside.
    pub fn truncated(terms: impl IntoIterator<Item = (i64, Q)>, lo: i64, hi: i64) -> Result<Self> {
        if hi < lo {
            return Err(Error::WindowUnderflow { exponent: lo, hi });
        }
        let mut coeffs = vec![Q::zero(); (hi - lo + 1) as usize];
        for (k, c) in terms {
            if k < lo || k > hi {
                return Err(Error::WindowUnderflow { exponent: k, hi });
            }
            coeffs[(k - lo) as usize] += c;
        }
        let mut p = LaurentPoly { lo, hi: Some(hi), coeffs };
        p.normalize();
        Ok(p)
    }

    fn normalize(&mut self) {
        if let Some(hi) = self.hi {
            let keep = (hi - self.lo + 1).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.hi.is_none() {
            let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
            if lead == self.coeffs.len() {
                self.lo = 0;
                self.coeffs.clear();
            } else if lead > 0 {
                self.coeffs.drain(..lead);
                self.lo += lead as i64;
            }
        }
    }

    pub fn window(&self) -> (i64, Option<i64>) {
        (self.lo, self.hi)
    }

    pub fn is_exact(&self) -> bool {
        self.hi.is_none()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.hi.is_none() && self.coeffs.is_empty()
    }

    /// Drops the truncation marker after checking nothing is unknown; used once
    /// a computation no longer needs its tail.
    pub fn with_window(&self, lo: i64, hi: Option<i64>) -> Self {
        let terms = self.terms().filter(|(k, _)| *k >= lo);
        match hi {
            None => Self::from_terms(terms),
            Some(h) => {
                let h = min_opt(Some(h), self.hi).unwrap();
                let mut p = LaurentPoly { lo, hi: Some(h), coeffs: vec![Q::zero(); (h - lo + 1).max(0) as usize] };
                for (k, c) in terms {
                    if k <= h {
                        p.coeffs[(k - lo) as usize] = c;
                    }
                }
                p.normalize();
                p
            }
        }
    }

    /// Nonzero stored terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Q)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.lo + i as i64, c.clone()))
    }

    pub fn coeff(&self, k: i64) -> Result<Q> {
        if let Some(hi) = self.hi {
            if k > hi {
                return Err(Error::WindowUnderflow { exponent: k, hi });
            }
        }
        if k < self.lo {
            return Ok(Q::zero());
        }
        Ok(self.coeffs.get((k - self.lo) as usize).cloned().unwrap_or_else(Q::zero))
    }

    /// Order of vanishing; `Ok(None)` for the exact zero polynomial.
    pub fn valuation(&self) -> Result<Option<i64>> {
        if let Some(i) = self.coeffs.iter().position(|c| !c.is_zero()) {
            return Ok(Some(self.lo + i as i64));
        }
        match self.hi {
            None => Ok(None),
            Some(hi) => Err(Error::WindowUnderflow { exponent: hi + 1, hi }),
        }
    }

    /// Highest exponent with a nonzero coefficient, for exact values.
    pub fn degree(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.lo + self.coeffs.len() as i64 - 1)
        }
    }

    /// Coefficient of `t^0`: the residue of `self · dt/t`.
    pub fn residue(&self) -> Result<Q> {
        self.coeff(0)
    }

    /// Substitutes `t = u^h`.
    pub fn ramified_pullback(&self, h: u32) -> Self {
        assert!(h >= 1);
        let h = h as i64;
        let mut coeffs = vec![Q::zero(); ((self.coeffs.len() as i64 - 1).max(0) * h + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * h as usize] = c.clone();
        }
        let mut p = LaurentPoly { lo: self.lo * h, hi: self.hi.map(|x| x * h + h - 1), coeffs };
        p.normalize();
        p
    }

    /// `d/dt`.
    pub fn derivative(&self) -> Self {
        let mut p = LaurentPoly {
            lo: self.lo - 1,
            hi: self.hi.map(|x| x - 1),
            coeffs: self.coeffs.iter().enumerate().map(|(i, c)| c * q(self.lo + i as i64)).collect(),
        };
        p.normalize();
        p
    }

    /// `t · d/dt`, the derivative against `dt/t`.
    pub fn log_derivative(&self) -> Self {
        self.derivative().shift(1)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut p = self.clone();
        p.lo += k;
        p.hi = p.hi.map(|x| x + k);
        p.normalize();
        p
    }

    /// `t ↦ 1/t`; only exact values have a known image.
    pub fn invert_variable(&self) -> Result<Self> {
        if let Some(hi) = self.hi {
            return Err(Error::WindowUnderflow { exponent: hi + 1, hi });
        }
        Ok(Self::from_terms(self.terms().map(|(k, c)| (-k, c))))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_window(self.add_impl(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_window(self.mul_impl(other))
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.is_exact_zero() {
            return other.clone();
        }
        if other.is_exact_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = min_opt(self.hi, other.hi);
        let top = (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64);
        let mut coeffs = vec![Q::zero(); (top - lo).max(0) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + i] += c;
        }
        let mut p = LaurentPoly { lo, hi, coeffs };
        p.normalize();
        p
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::zero();
        }
        let lo = self.lo + other.lo;
        let hi = min_opt(other.hi.map(|h| self.lo + h), self.hi.map(|h| other.lo + h));
        let len = self.coeffs.len() + other.coeffs.len();
        let mut coeffs = vec![Q::zero(); len.saturating_sub(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let mut p = LaurentPoly { lo, hi, coeffs };
        p.normalize();
        p
    }

    fn scale_impl(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: self.lo, hi: self.hi, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Q::one()), |acc, _| acc.mul_impl(self))
    }

    /// JSON array-of-pairs form `[[k, "c"], ...]`.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms().map(|(k, c)| (k, fmt_q(&c))).collect()
    }

    pub fn from_pairs(pairs: &[(i64, String)]) -> Result<Self> {
        let terms: Result<Vec<(i64, Q)>> = pairs.iter().map(|(k, c)| Ok((*k, parse_q(c)?))).collect();
        Ok(Self::from_terms(terms?))
    }

    /// Parses the text form written by `Display`, e.g. `3*t^-2 + 5 + O(t^4)`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("{m} in Laurent polynomial {s:?}"));
        let norm = s.replace(' ', "").replace("-", "+-").replace("^+-", "^-");
        let mut terms = Vec::new();
        let mut hi = None;
        for tok in norm.split('+').filter(|t| !t.is_empty()) {
            if let Some(rest) = tok.strip_prefix("O(t^").and_then(|r| r.strip_suffix(')')) {
                let k: i64 = rest.parse().map_err(|_| bad("bad order term"))?;
                hi = Some(k - 1);
                continue;
            }
            let (coef, var) = match tok.find('t') {
                None => (tok, None),
                Some(i) => (tok[..i].trim_end_matches('*'), Some(&tok[i + 1..])),
            };
            let c = match coef {
                "" => Q::one(),
                "-" => -Q::one(),
                _ => parse_q(coef)?,
            };
            let k = match var {
                None => 0,
                Some("") => 1,
                Some(e) => {
                    e.strip_prefix('^').ok_or_else(|| bad("missing ^"))?.parse().map_err(|_| bad("bad exponent"))?
                }
            };
            terms.push((k, c));
        }
        match hi {
            None => Ok(Self::from_terms(terms)),
            Some(h) => {
                let lo = terms.iter().map(|t| t.0).min().unwrap_or(h).min(h);
                Self::truncated(terms, lo, h)
            }
        }
    }
}

fn check_window(p: LaurentPoly) -> Result<LaurentPoly> {
    match p.hi {
        Some(hi) if hi < p.lo => Err(Error::WindowUnderflow { exponent: p.lo, hi }),
        _ => Ok(p),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> =
            self.terms().map(|(k, c)| if k == 0 { fmt_q(&c) } else { format!("{}*t^{}", fmt_q(&c), k) }).collect();
        if let Some(hi) = self.hi {
            parts.push(format!("O(t^{})", hi + 1));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::constant(Q::one())
    }
    fn is_zero(&self) -> bool {
        self.is_exact_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self.add_impl(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add_impl(&other.scale_impl(&-Q::one()))
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn neg(&self) -> Self {
        self.scale_impl(&-Q::one())
    }
    fn scale(&self, c: &Q) -> Self {
        self.scale_impl(c)
    }
    fn from_q(c: &Q) -> Self {
        LaurentPoly::constant(c.clone())
    }
}

pub enum ArithOp {
    Add,
    Mul,
    Scalar(Q),
}

/// Window-checked arithmetic: fails when the result would be known nowhere.
pub fn laurent_arith(f: &LaurentPoly, g: &LaurentPoly, op: ArithOp) -> Result<LaurentPoly> {
    match op {
        ArithOp::Add => f.checked_add(g),
        ArithOp::Mul => f.checked_mul(g),
        ArithOp::Scalar(c) => Ok(f.scale_impl(&c)),
    }
}

/// A `𝔤`-valued section of `ω^k`, written as `value · (dt/t)^k` over the
/// Chevalley basis.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedElement {
    pub value: Vec<LaurentPoly>,
    pub form_degree: i32,
}

impl TwistedElement {
    pub fn new(value: Vec<LaurentPoly>, form_degree: i32) -> Self {
        TwistedElement { value, form_degree }
    }

    /// Pullback along `t = u^h`; `(dt/t)^k` becomes `h^k (du/u)^k`.
    pub fn ramified_pullback(&self, h: u32) -> Self {
        let factor = num_traits::pow(q(h as i64), self.form_degree.unsigned_abs() as usize);
        let factor = if self.form_degree < 0 { factor.recip() } else { factor };
        TwistedElement {
            value: self.value.iter().map(|p| p.ramified_pullback(h).scale_impl(&factor)).collect(),
            form_degree: self.form_degree,
        }
    }
}

/// Per-degree pole-order bounds `bᵢ`: component `i` is a section of
/// `ω^{dᵢ}` with pole order at most `bᵢ`. For a component `g · (dt/t)^d`
/// the pole order is `d - ord_t(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderBound {
    pub degrees: Vec<u32>,
    pub bounds: Vec<i64>,
}

impl OrderBound {
    pub fn le(&self, other: &Self) -> bool {
        self.bounds.iter().zip(&other.bounds).all(|(a, b)| a <= b)
    }

    pub fn meet(&self, other: &Self) -> Self {
        OrderBound {
            degrees: self.degrees.clone(),
            bounds: self.bounds.iter().zip(&other.bounds).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn join(&self, other: &Self) -> Self {
        OrderBound {
            degrees: self.degrees.clone(),
            bounds: self.bounds.iter().zip(&other.bounds).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// Minimal `t`-order of `g` for `g · (dt/t)^{dᵢ}` to satisfy bound `i`.
    pub fn min_order(&self, i: usize) -> i64 {
        self.degrees[i] as i64 - self.bounds[i]
    }
}

/// Pole order of `g · (dt/t)^d` as a section of `ω^d`; `None` for zero.
pub fn pole_order(g: &LaurentPoly, d: u32) -> Result<Option<i64>> {
    Ok(g.valuation()?.map(|v| d as i64 - v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qf;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, q(c))))
    }

    #[test]
    fn basic_products() {
        let f = lp(&[(-1, 1), (0, 1)]);
        let g = lp(&[(1, 1)]);
        assert_eq!(f.mul(&g), lp(&[(0, 1), (1, 1)]));
        assert_eq!(lp(&[(3, 1), (5, -1)]).valuation().unwrap(), Some(3));
        assert_eq!(LaurentPoly::zero().valuation().unwrap(), None);
    }

    #[test]
    fn residues() {
        assert_eq!(lp(&[(0, 1)]).residue().unwrap(), q(1));
        assert_eq!(lp(&[(1, 1)]).residue().unwrap(), q(0));
        assert_eq!(lp(&[(-2, 3), (0, 5)]).residue().unwrap(), q(5));
        let t = LaurentPoly::truncated([(1, q(1))], 1, 3).unwrap();
        assert_eq!(t.residue().unwrap(), q(0));
        let t = LaurentPoly::truncated([(-3, q(1))], -3, -1).unwrap();
        assert!(matches!(t.residue(), Err(Error::WindowUnderflow { .. })));
    }

    #[test]
    fn pullbacks() {
        assert_eq!(lp(&[(-1, 1)]).ramified_pullback(2), lp(&[(-2, 1)]));
        assert_eq!(lp(&[(0, 1), (1, 1)]).ramified_pullback(3), lp(&[(0, 1), (3, 1)]));
        let g = lp(&[(-1, 2), (1, 1)]);
        let tw = TwistedElement::new(vec![g.clone()], 1).ramified_pullback(2);
        assert_eq!(tw.value[0], g.ramified_pullback(2).scale(&q(2)));
        let tr = LaurentPoly::truncated([(0, q(1))], 0, 2).unwrap().ramified_pullback(2);
        assert_eq!(tr.window(), (0, Some(5)));
    }

    #[test]
    fn reads_outside_window_fail() {
        let f = LaurentPoly::truncated([(0, q(1)), (2, q(4))], -2, 2).unwrap();
        assert_eq!(f.coeff(2).unwrap(), q(4));
        assert_eq!(f.coeff(-5).unwrap(), q(0));
        assert!(f.coeff(3).is_err());
        let z = LaurentPoly::truncated([], 0, 3).unwrap();
        assert!(z.valuation().is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = LaurentPoly::from_terms([(-2, q(3)), (0, q(5)), (4, qf(-1, 2))]);
        let s = f.to_string();
        assert_eq!(s, "3*t^-2 + 5 + -1/2*t^4");
        assert_eq!(LaurentPoly::parse(&s).unwrap(), f);
        assert_eq!(LaurentPoly::parse("t^-1 - 2*t").unwrap(), lp(&[(-1, 1), (1, -2)]));
        let tr = LaurentPoly::parse("1 + t + O(t^3)").unwrap();
        assert_eq!(tr.window(), (0, Some(2)));
        assert_eq!(LaurentPoly::from_pairs(&f.to_pairs()).unwrap(), f);
    }

    #[test]
    fn order_bounds_lattice_ops() {
        let a = OrderBound { degrees: vec![2, 3], bounds: vec![1, 4] };
        let b = OrderBound { degrees: vec![2, 3], bounds: vec![2, 3] };
        assert_eq!(a.meet(&b).bounds, vec![1, 3]);
        assert_eq!(a.join(&b).bounds, vec![2, 4]);
        assert!(a.meet(&b).le(&a) && a.le(&a.join(&b)));
        assert_eq!(a.min_order(1), -1);
    }
}

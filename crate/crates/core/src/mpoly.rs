//! Sparse multivariate polynomials over ℚ in a fixed number of variables.

use std::collections::BTreeMap;

use std::fmt;

use crate::scalar::{fmt_q, Scalar, Q};

#[derive(Clone, Debug)]
pub struct MPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, Q>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        let n = self.nvars.max(other.nvars);
        self.widen(n).terms == other.widen(n).terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero_in(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant_in(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero_in(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero_in(nvars);
        p.terms.insert(e, Q::one());
        p
    }

    fn widen(&self, nvars: usize) -> Self {
        if self.nvars == nvars {
            return self.clone();
        }
        MPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(nvars, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree where variable `i` has weight `w[i]`.
    pub fn weighted_degree(&self, w: &[u32]) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().zip(w).map(|(a, b)| a * b).sum()).max()
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.substitute(x)
    }

    /// Substitutes `x[i]` for variable `i` in any coefficient ring.
    pub fn substitute<R: Scalar>(&self, x: &[R]) -> R {
        let mut powers: Vec<Vec<R>> = vec![vec![R::one()]; self.nvars];
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut term = R::from_q(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&x[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    fn insert(&mut self, e: Vec<u32>, c: Q) {
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

impl Scalar for MPoly {
    fn zero() -> Self {
        Self::zero_in(0)
    }
    fn one() -> Self {
        Self::constant_in(0, Q::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.nvars.max(other.nvars);
        let mut out = self.widen(n);
        for (e, c) in other.widen(n).terms {
            out.insert(e, c);
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let n = self.nvars.max(other.nvars);
        let (a, b) = (self.widen(n), other.widen(n));
        let mut acc: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(Q::zero) += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        MPoly { nvars: n, terms: acc }
    }
    fn neg(&self) -> Self {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
    fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }
    fn from_q(c: &Q) -> Self {
        Self::constant_in(0, c.clone())
    }
}

/// Terms in increasing exponent order, variables written `c0, c1, …`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut parts = vec![fmt_q(c)];
                for (i, &k) in e.iter().enumerate() {
                    match k {
                        0 => {}
                        1 => parts.push(format!("c{i}")),
                        _ => parts.push(format!("c{i}^{k}")),
                    }
                }
                parts.join("*")
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

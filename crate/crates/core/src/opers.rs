//! Opers on the Langlands dual: canonical forms, the conditions at `0` and
//! `∞`, the Frenkel–Gross connection `∂_z + f/z + a·e_θ`, its slope
//! certificate and scalar differential equation, and the global counts on ℙ¹.
//!
//! A connection is `∇ = d + A(z)dz` with `A` stored on the Chevalley basis of
//! the dual root datum, each coefficient an exact Laurent polynomial in `z`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{inverse, kernel, Mat};
use crate::poly::{QPoly, RatFunc};
use crate::rootdata::{CartanType, PrincipalTriple, RootDatum};
use crate::scalar::{fmt_q, q, qf, Scalar, Q};

/// Root datum of the Langlands dual, with the node permutation identifying
/// its Cartan matrix with the transpose of the input one.
pub fn dual_datum(cartan: CartanType) -> Result<(Arc<RootDatum>, Vec<usize>)> {
    let (dual, perm) = cartan.langlands_dual();
    Ok((Arc::new(RootDatum::new(dual)?), perm))
}

/// Principal data reused by every oper computation on one root datum.
#[derive(Clone, Debug)]
pub struct OperFrame {
    pub rd: Arc<RootDatum>,
    pub triple: PrincipalTriple,
    /// `ρ^∨ = h/2` on the Chevalley basis.
    pub rho_check: Vec<Q>,
    /// Principal height of each basis line.
    pub heights: Vec<i64>,
    /// Graded basis `pᵢ` of `ker(ad e)` and the exponent `dᵢ - 1` of each.
    pub slice: Vec<(i64, Vec<Q>)>,
    /// Per height `k ≥ 0`: inverse of `[ad f: 𝔤_{k+1} → 𝔤_k | pᵢ of height k]`.
    splittings: Vec<Mat<Q>>,
}

impl OperFrame {
    pub fn new(rd: Arc<RootDatum>) -> Self {
        let triple = rd.principal_triple();
        let heights: Vec<i64> = (0..rd.dim()).map(|a| RootDatum::height(&rd.weight(a))).collect();
        let rho_check = triple.h.iter().map(|x| x * qf(1, 2)).collect();
        let slice = rd.graded_centralizer(&triple.e, &triple.h_coroot);
        let top = rd.coxeter_number - 1;
        let mut splittings = Vec::new();
        for k in 0..=top {
            let here: Vec<usize> = (0..rd.dim()).filter(|&a| heights[a] == k).collect();
            let above: Vec<usize> = (0..rd.dim()).filter(|&a| heights[a] == k + 1).collect();
            let mut cols: Vec<Vec<Q>> =
                above.iter().map(|&b| rd.bracket(&triple.f, &rd.basis_vector::<Q>(b))).collect();
            cols.extend(slice.iter().filter(|(j, _)| *j == k).map(|(_, v)| v.clone()));
            let m = Mat::from_fn(here.len(), cols.len(), |r, c| cols[c][here[r]].clone());
            splittings.push(inverse(&m).expect("ad f and ker(ad e) split each graded piece"));
        }
        OperFrame { rd, triple, rho_check, heights, slice, splittings }
    }

    fn lines_at(&self, k: i64) -> Vec<usize> {
        (0..self.rd.dim()).filter(|&a| self.heights[a] == k).collect()
    }

    /// `Ad(exp y)A - Σ_{j≥0} (ad y)^j y' / (j+1)!`.
    pub fn gauge(&self, a: &[LaurentPoly], y: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let rd = &self.rd;
        let mut out = rd.ad_exp(y, a);
        // term_j = (ad y)^j y' / (j+1)!
        let mut term: Vec<LaurentPoly> = y.iter().map(|p| p.derivative()).collect();
        let mut j = 1i64;
        while term.iter().any(|p| !p.is_zero()) {
            for (o, t) in out.iter_mut().zip(&term) {
                *o = o.sub(t);
            }
            j += 1;
            term = rd.bracket(y, &term).iter().map(|p| p.scale(&qf(1, j))).collect();
        }
        out
    }

    /// Gauge by the constant or monomial cocharacter `ρ^∨(c·z^s)`.
    pub fn cocharacter_gauge(&self, a: &[LaurentPoly], c: &Q, s: i64) -> Vec<LaurentPoly> {
        let mut out: Vec<LaurentPoly> = a
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let k = self.heights[i];
                let factor = num_traits::pow(c.clone(), k.unsigned_abs() as usize);
                let factor = if k < 0 { factor.recip() } else { factor };
                p.shift(s * k).scale(&factor)
            })
            .collect();
        if s != 0 {
            for (o, r) in out.iter_mut().zip(&self.rho_check) {
                if !r.is_zero() {
                    *o = o.sub(&LaurentPoly::monomial(r * q(s), -1));
                }
            }
        }
        out
    }

    /// The monomial `φ` with negative part `φ·f`, if `A` has oper shape.
    pub fn f_factor(&self, a: &[LaurentPoly]) -> Result<LaurentPoly> {
        let mut phi: Option<LaurentPoly> = None;
        for (i, p) in a.iter().enumerate() {
            let k = self.heights[i];
            if k < -1 && !p.is_zero() {
                return Err(Error::NotOperShape(format!("component on {} below height -1", self.rd.line_name(i))));
            }
            if k == -1 {
                let fi = &self.triple.f[i];
                let cand = p.scale(&fi.recip());
                match &phi {
                    None => phi = Some(cand),
                    Some(ph) if *ph != cand => {
                        return Err(Error::NotOperShape("height -1 part is not a multiple of f".into()))
                    }
                    _ => {}
                }
            }
        }
        let phi = phi.unwrap_or_else(LaurentPoly::zero);
        let terms: Vec<(i64, Q)> = phi.terms().collect();
        if terms.len() != 1 || terms[0].1 != Q::one() {
            return Err(Error::NotOperShape(format!("f-component is {phi}, not a power of z times f")));
        }
        Ok(phi)
    }

    /// Coordinates of the height-`≥ 0` part along `pᵢ`, if it lies in `ker(ad e)`.
    pub fn slice_coordinates(&self, a: &[LaurentPoly]) -> Option<Vec<LaurentPoly>> {
        let mut rest = a.to_vec();
        for (i, r) in rest.iter_mut().enumerate() {
            if self.heights[i] < 0 {
                *r = LaurentPoly::zero();
            }
        }
        let mut coords = Vec::new();
        for (k, p) in &self.slice {
            let lines = self.lines_at(*k);
            let pivot = lines.iter().copied().find(|&l| !p[l].is_zero())?;
            let c = rest[pivot].scale(&p[pivot].recip());
            for &l in &lines {
                rest[l] = rest[l].sub(&c.scale(&p[l]));
            }
            coords.push(c);
        }
        rest.iter().all(|r| r.is_zero()).then_some(coords)
    }

    /// Drinfeld–Sokolov reduction to `φ·f + v`, `v ∈ ker(ad e)`.
    pub fn reduce(&self, a: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
        let phi = self.f_factor(a)?;
        let shift = phi.valuation().unwrap().unwrap();
        let mut cur = a.to_vec();
        for (k, inv) in self.splittings.iter().enumerate() {
            let k = k as i64;
            let here = self.lines_at(k);
            let above = self.lines_at(k + 1);
            let b: Vec<LaurentPoly> = here.iter().map(|&l| cur[l].clone()).collect();
            let mut y = vec![LaurentPoly::zero(); self.rd.dim()];
            let mut any = false;
            for (j, &line) in above.iter().enumerate() {
                let c = (0..here.len()).fold(LaurentPoly::zero(), |acc, r| acc.add(&b[r].scale(inv.get(j, r))));
                if !c.is_zero() {
                    any = true;
                }
                y[line] = c.shift(-shift);
            }
            if any {
                cur = self.gauge(&cur, &y);
            }
        }
        Ok(cur)
    }
}

#[derive(Clone, Debug)]
pub struct Oper {
    /// Root datum the connection lives on (the dual of `dual_of`).
    pub rd: Arc<RootDatum>,
    pub dual_of: CartanType,
    /// Coefficients of `A(z)` on the Chevalley basis of `rd`.
    pub matrix: Vec<LaurentPoly>,
    /// `A = z^k·f + v` with `v ∈ ker(ad e)`.
    pub canonical: bool,
}

impl PartialEq for Oper {
    fn eq(&self, other: &Self) -> bool {
        self.rd.cartan == other.rd.cartan && self.dual_of == other.dual_of && self.matrix == other.matrix
    }
}

impl Oper {
    pub fn new(rd: Arc<RootDatum>, dual_of: CartanType, matrix: Vec<LaurentPoly>) -> Self {
        let frame = OperFrame::new(rd.clone());
        let canonical = frame.f_factor(&matrix).is_ok() && frame.slice_coordinates(&matrix).is_some();
        Oper { rd, dual_of, matrix, canonical }
    }

    pub fn frame(&self) -> OperFrame {
        OperFrame::new(self.rd.clone())
    }

    /// `A(z)` in the defining representation.
    pub fn defining_matrix(&self) -> Mat<LaurentPoly> {
        self.rd.to_matrix(&self.matrix)
    }

    /// Coefficients `vᵢ(z)` along the graded basis `pᵢ` of `ker(ad e)`.
    pub fn slice_coordinates(&self) -> Option<Vec<LaurentPoly>> {
        self.frame().slice_coordinates(&self.matrix)
    }
}

pub fn gauge_reduce(op: &Oper) -> Result<Oper> {
    let reduced = op.frame().reduce(&op.matrix)?;
    Ok(Oper::new(op.rd.clone(), op.dual_of, reduced))
}

/// Gauge transform by `exp(y)`.
pub fn gauge(op: &Oper, y: &[LaurentPoly]) -> Oper {
    let out = op.frame().gauge(&op.matrix, y);
    Oper::new(op.rd.clone(), op.dual_of, out)
}

/// `∇ = ∂_z + f/z + a·e_θ` on the dual of `cartan`.
pub fn fg_connection(cartan: CartanType, a: &Q) -> Result<Oper> {
    let (rd, _) = dual_datum(cartan)?;
    let f = rd.principal_triple().f;
    let mut m: Vec<LaurentPoly> = f.iter().map(|c| LaurentPoly::monomial(c.clone(), -1)).collect();
    let et = rd.e_theta();
    m[et] = m[et].add(&LaurentPoly::constant(a.clone()));
    Ok(Oper::new(rd, cartan, m))
}

/// Regular singularity at `0` with residue `f`: polar part exactly `f/z`
/// and regular `ker(ad e)`-components.
pub fn check_residue_rs(op: &Oper) -> bool {
    let frame = op.frame();
    let Ok(phi) = frame.f_factor(&op.matrix) else { return false };
    if phi != LaurentPoly::t_pow(-1) {
        return false;
    }
    match frame.slice_coordinates(&op.matrix) {
        Some(v) => v.iter().all(|c| c.is_zero() || c.valuation().unwrap().unwrap() >= 0),
        None => false,
    }
}

/// The connection in `t = 1/z` normalized to `f/t + w(t)`, `w ∈ ker(ad e)`.
pub fn at_infinity(op: &Oper) -> Result<Vec<LaurentPoly>> {
    let frame = op.frame();
    // A(z)dz = -t^{-2} A(1/t) dt
    let a_t: Vec<LaurentPoly> =
        op.matrix.iter().map(|p| Ok(p.invert_variable()?.shift(-2).neg())).collect::<Result<_>>()?;
    // restore the sign of f with the constant cocharacter ρ^∨(-1)
    let a_t = frame.cocharacter_gauge(&a_t, &q(-1), 0);
    let phi = frame.f_factor(&a_t)?;
    let j = phi.valuation().unwrap().unwrap();
    let a_t = frame.cocharacter_gauge(&a_t, &Q::one(), j + 1);
    frame.reduce(&a_t)
}

/// Pole orders at `∞` of the `ker(ad e)`-components against the bounds
/// `ord_t wᵢ ≥ -1 - ⌊dᵢ/h⌋` in the normal form `∂_t + f/t + w`.
pub fn infinity_orders(op: &Oper) -> Result<Vec<(u32, Option<i64>, i64)>> {
    let frame = op.frame();
    let w = frame
        .slice_coordinates(&at_infinity(op)?)
        .ok_or_else(|| Error::NotOperShape("normal form at infinity".into()))?;
    let h = op.rd.coxeter_number;
    Ok(frame
        .slice
        .iter()
        .zip(&w)
        .map(|((k, _), wi)| {
            let d = k + 1;
            (d as u32, wi.valuation().unwrap(), -1 - d / h)
        })
        .collect())
}

pub fn check_irregular_type(op: &Oper) -> bool {
    match infinity_orders(op) {
        Ok(v) => v.iter().all(|(_, o, b)| o.map_or(true, |o| o >= *b)),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeCertificate {
    pub pullback_degree: i64,
    pub gauge_exponent: i64,
    /// Pole order in `u` of the gauged connection against `du/u`.
    pub pole_order: i64,
    pub leading_matrix: Vec<Vec<String>>,
    pub regular_semisimple: bool,
    /// `pole_order / pullback_degree`.
    pub slope: String,
    /// Minimality of the ramification is asserted, not proved.
    pub claim: String,
}

/// Pulls the normal form at `∞` back along `t = u^h` and searches
/// `ρ^∨(u^c)`, `|c| ≤ h`, for a gauge with regular semisimple leading term.
pub fn slope_certificate(op: &Oper) -> Result<SlopeCertificate> {
    let frame = op.frame();
    let rd = &op.rd;
    let w = at_infinity(op)?;
    let h = rd.coxeter_number;
    if w.iter().enumerate().all(|(i, p)| frame.heights[i] < 0 || p.is_zero() || p.valuation().unwrap().unwrap() >= -1) {
        return Err(Error::Precondition("the connection is tame at infinity".into()));
    }
    let jac = LaurentPoly::monomial(q(h), h - 1);
    let pulled: Vec<LaurentPoly> = w.iter().map(|p| p.ramified_pullback(h as u32).mul(&jac)).collect();
    let mut order: Vec<i64> = (-h..=h).collect();
    order.sort_by_key(|c| (c.abs(), -c));
    for c in order {
        let g = frame.cocharacter_gauge(&pulled, &Q::one(), c);
        let n = g.iter().filter(|p| !p.is_zero()).map(|p| p.valuation().unwrap().unwrap()).min().unwrap();
        if n > -2 {
            continue;
        }
        let lead: Vec<Q> = g.iter().map(|p| p.coeff(n).unwrap()).collect();
        if rd.is_regular_semisimple(&lead) {
            let m = rd.to_matrix(&lead);
            let leading_matrix = (0..m.rows).map(|r| (0..m.cols).map(|s| fmt_q(m.get(r, s))).collect()).collect();
            return Ok(SlopeCertificate {
                pullback_degree: h,
                gauge_exponent: c,
                pole_order: -n - 1,
                leading_matrix,
                regular_semisimple: true,
                slope: fmt_q(&qf(-n - 1, h)),
                claim: "no ramification of degree below h yields a regular semisimple leading term".into(),
            });
        }
    }
    Err(Error::NoCertificate(format!("no gauge exponent in [-{h}, {h}]")))
}

/// `L = Σ bₖ(z) ∂^k`, `b_N = 1`, annihilating the cyclic vector.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarOde {
    pub cyclic_vector: usize,
    pub coeffs: Vec<RatFunc>,
}

impl ScalarOde {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients cleared of denominators by their monic lcm.
    pub fn polynomial_form(&self) -> Vec<QPoly> {
        let l = self.coeffs.iter().fold(QPoly::one(), |acc, c| {
            let g = acc.gcd(&c.den);
            acc.mul(&c.den).div_rem(&g).0
        });
        self.coeffs.iter().map(|c| c.num.mul(&l).div_rem(&c.den).0).collect()
    }

    /// Irregularity at `∞` from the Newton polygon: `max_k (deg bₖ - k) + N`,
    /// floored at 0.
    pub fn irregularity_at_infinity(&self) -> i64 {
        let n = self.order() as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, b)| b.degree().map(|d| d - k as i64 + n))
            .max()
            .unwrap_or(0)
            .max(0)
    }

    /// Irregularity at `0`: `max_k (N - k - ord₀ bₖ)` floored at 0; 0 means
    /// the singularity is regular (Fuchs).
    pub fn irregularity_at_zero(&self) -> i64 {
        let n = self.order() as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .map(|(k, b)| -(ord_zero(b) + n - k as i64))
            .max()
            .unwrap_or(0)
            .max(0)
    }
}

impl std::fmt::Display for ScalarOde {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .polynomial_form()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*D"),
                _ => format!("({c})*D^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn ord_zero(r: &RatFunc) -> i64 {
    let low = |p: &QPoly| p.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0) as i64;
    low(&r.num) - low(&r.den)
}

fn laurent_to_rat(p: &LaurentPoly) -> RatFunc {
    p.terms().fold(RatFunc::zero(), |acc, (k, c)| acc.add(&RatFunc::monomial(c, k)))
}

fn solve_ratfunc(cols: &[Vec<RatFunc>], rhs: &[RatFunc]) -> Option<Vec<RatFunc>> {
    let n = rhs.len();
    let mut m: Vec<Vec<RatFunc>> =
        (0..n).map(|r| cols.iter().map(|c| c[r].clone()).chain([rhs[r].clone()]).collect()).collect();
    let k = cols.len();
    for c in 0..k {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].inv();
        m[c] = m[c].iter().map(|x| x.mul(&inv)).collect();
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let row = m[c].clone();
                m[r] = m[r].iter().zip(&row).map(|(x, y)| x.sub(&f.mul(y))).collect();
            }
        }
    }
    Some((0..k).map(|r| m[r][k].clone()).collect())
}

/// Cyclic-vector elimination `v_{k+1} = v_k' + A v_k` in the defining
/// representation, starting from the first basis vector that is cyclic.
pub fn cyclic_ode(op: &Oper) -> Result<ScalarOde> {
    let a = op.defining_matrix().map(laurent_to_rat);
    let n = a.rows;
    for start in 0..n {
        let mut vs: Vec<Vec<RatFunc>> =
            vec![(0..n).map(|i| if i == start { RatFunc::one() } else { RatFunc::zero() }).collect()];
        for _ in 0..n {
            let v = vs.last().unwrap();
            let next: Vec<RatFunc> =
                (0..n).map(|r| (0..n).fold(v[r].derivative(), |acc, c| acc.add(&a.get(r, c).mul(&v[c])))).collect();
            vs.push(next);
        }
        if let Some(c) = solve_ratfunc(&vs[..n], &vs[n]) {
            let mut coeffs: Vec<RatFunc> = c.iter().map(|x| x.neg()).collect();
            coeffs.push(RatFunc::one());
            return Ok(ScalarOde { cyclic_vector: start, coeffs });
        }
    }
    Err(Error::CyclicFailure)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GlobalOperSpace {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub dual_type: String,
    pub dimension: usize,
    /// Each basis vector as `(slice index, power of z, coefficient)` triples.
    pub basis: Vec<Vec<(usize, i64, String)>>,
    pub basis_is_e_theta: bool,
    pub degree_bound: i64,
}

/// Solves for `v ∈ ker(ad e) ⊗ ℚ[z]`, degree `≤ h`, such that
/// `∂_z + f/z + v` satisfies the conditions at `0` and `∞`.
pub fn global_oper_space(cartan: CartanType) -> Result<GlobalOperSpace> {
    let (rd, _) = dual_datum(cartan)?;
    let frame = OperFrame::new(rd.clone());
    let h = rd.coxeter_number;
    let unknowns: Vec<(usize, i64)> = (0..frame.slice.len()).flat_map(|i| (0..=h).map(move |k| (i, k))).collect();
    let base = fg_connection(cartan, &Q::from_integer(0.into()))?;
    let base_inf = at_infinity(&base)?;
    let base_w = frame.slice_coordinates(&base_inf).expect("normal form");
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut images: Vec<Vec<LaurentPoly>> = Vec::new();
    for &(i, k) in &unknowns {
        let mut m = base.matrix.clone();
        for (l, c) in frame.slice[i].1.iter().enumerate() {
            m[l] = m[l].add(&LaurentPoly::monomial(c.clone(), k));
        }
        let op = Oper::new(rd.clone(), cartan, m);
        let w = frame.slice_coordinates(&at_infinity(&op)?).expect("normal form");
        images.push(w.iter().zip(&base_w).map(|(a, b)| a.sub(b)).collect());
    }
    // constraints: every coefficient below the bound at ∞ vanishes
    for (j, (kj, _)) in frame.slice.iter().enumerate() {
        let bound = -1 - (kj + 1) / h;
        let lowest = images.iter().filter_map(|w| w[j].valuation().unwrap()).min().unwrap_or(bound);
        for e in lowest..bound {
            rows.push(images.iter().map(|w| w[j].coeff(e).unwrap()).collect());
        }
    }
    let ker = if rows.is_empty() {
        (0..unknowns.len())
            .map(|i| (0..unknowns.len()).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect()
    } else {
        kernel(&Mat::from_fn(rows.len(), unknowns.len(), |r, c| rows[r][c].clone()))
    };
    let basis: Vec<Vec<(usize, i64, String)>> = ker
        .iter()
        .map(|v| unknowns.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(&(i, k), c)| (i, k, fmt_q(c))).collect())
        .collect();
    let basis_is_e_theta = ker.len() == 1 && {
        let mut vec = vec![Q::zero(); rd.dim()];
        for (&(i, k), c) in unknowns.iter().zip(&ker[0]) {
            if !c.is_zero() {
                if k != 0 {
                    return Ok(GlobalOperSpace {
                        cartan_type: cartan.to_string(),
                        dual_type: rd.cartan.to_string(),
                        dimension: ker.len(),
                        basis,
                        basis_is_e_theta: false,
                        degree_bound: h,
                    });
                }
                for (l, x) in frame.slice[i].1.iter().enumerate() {
                    vec[l] += x * c;
                }
            }
        }
        let et = rd.e_theta();
        !vec[et].is_zero() && vec.iter().enumerate().all(|(l, x)| l == et || x.is_zero())
    };
    Ok(GlobalOperSpace {
        cartan_type: cartan.to_string(),
        dual_type: rd.cartan.to_string(),
        dimension: ker.len(),
        basis,
        basis_is_e_theta,
        degree_bound: h,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalHitchinBase {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub degrees: Vec<u32>,
    /// Degree of `ω^{dᵢ}((dᵢ-1)·0 + (dᵢ + δᵢ)·∞)` on ℙ¹, `δ` only for the top degree.
    pub line_bundle_degrees: Vec<i64>,
    pub dimensions: Vec<i64>,
    pub total: i64,
}

pub fn global_hitchin_base(cartan: CartanType) -> Result<GlobalHitchinBase> {
    let (rd, _) = dual_datum(cartan)?;
    let degrees = rd.fundamental_degrees().0;
    let l = degrees.len();
    let line_bundle_degrees: Vec<i64> = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let d = d as i64;
            -2 * d + (d - 1) + d + i64::from(i + 1 == l)
        })
        .collect();
    let dimensions: Vec<i64> = line_bundle_degrees.iter().map(|k| (k + 1).max(0)).collect();
    Ok(GlobalHitchinBase {
        cartan_type: cartan.to_string(),
        degrees,
        total: dimensions.iter().sum(),
        line_bundle_degrees,
        dimensions,
    })
}

/// Exponent of `z` in a coefficient known to be a monomial.
pub fn monomial_exponent(p: &LaurentPoly) -> Option<i64> {
    let t: Vec<(i64, Q)> = p.terms().collect();
    (t.len() == 1).then(|| t[0].0)
}

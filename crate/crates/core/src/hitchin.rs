//! The local Hitchin map on twisted Laurent elements: invariant polynomials,
//! image order bounds for the duals of Moy–Prasad lattices, the Kostant
//! section and its surjectivity certificate, and the residue square.
//!
//! Invariants are coefficients of `det(λ - ρ(X))` in the defining
//! representation `ρ`. Everything is normalized against powers of `dt/t`:
//! a component `g(t)·(dt/t)^d` has pole order `d - ord_t(g)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::affine::{MPLattice, Parahoric};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, OrderBound, TwistedElement};
use crate::linalg::{kernel, rank, Mat};
use crate::mpoly::MPoly;
use crate::rootdata::{PrincipalTriple, RootDatum};
use crate::scalar::{fmt_q, q, to_i64, Scalar, Q};

/// Which homogeneous invariant realizes a fundamental degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Generator {
    /// Coefficient of `λ^{N-k}` in `det(λ - ρ(X))`.
    CharPoly(usize),
    /// `tr ρ(X)^k`.
    TracePower(usize),
}

#[derive(Clone, Debug)]
pub struct InvariantSystem {
    pub rd: Arc<RootDatum>,
    pub degrees: Vec<u32>,
    pub generators: Vec<Generator>,
}

impl InvariantSystem {
    pub fn new(rd: Arc<RootDatum>) -> Result<Self> {
        rd.cartan.require_invariants()?;
        let degrees = rd.fundamental_degrees().0;
        let generators = degrees.iter().map(|&d| Generator::CharPoly(d as usize)).collect();
        let mut inv = InvariantSystem { rd, degrees, generators };
        let mut rng = ChaCha8Rng::seed_from_u64(0x1a2b);
        let point = random_element(&mut rng, inv.rd.dim());
        if inv.jacobian_rank(&point) < inv.rd.rank() {
            inv.generators = inv.degrees.iter().map(|&d| Generator::TracePower(d as usize)).collect();
        }
        Ok(inv)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::new(Arc::new(RootDatum::from_name(name)?))
    }

    pub fn eval<R: Scalar>(&self, x: &[R]) -> Vec<R> {
        let m = self.rd.to_matrix(x);
        let cp = if self.generators.iter().any(|g| matches!(g, Generator::CharPoly(_))) {
            m.char_poly()
        } else {
            Vec::new()
        };
        self.generators
            .iter()
            .map(|g| match g {
                Generator::CharPoly(k) => cp[*k].clone(),
                Generator::TracePower(k) => (1..*k).fold(m.clone(), |acc, _| acc.mul(&m)).trace(),
            })
            .collect()
    }

    /// Derivatives of every generator along `dir` at `x`, via dual numbers.
    pub fn directional_derivative(&self, x: &[Q], dir: &[Q]) -> Vec<Q> {
        let dual: Vec<LaurentPoly> = x
            .iter()
            .zip(dir)
            .map(|(a, b)| LaurentPoly::truncated([(0, a.clone()), (1, b.clone())], 0, 1).unwrap())
            .collect();
        self.eval(&dual).iter().map(|p| p.coeff(1).unwrap()).collect()
    }

    pub fn jacobian_rank(&self, x: &[Q]) -> usize {
        let dim = self.rd.dim();
        let cols: Vec<Vec<Q>> = (0..dim).map(|b| self.directional_derivative(x, &self.rd.basis_vector(b))).collect();
        rank(&Mat::from_fn(self.generators.len(), dim, |r, c| cols[c][r].clone()))
    }

    /// Derivative of each generator at `y` along `[x, y]`; zero for invariants.
    pub fn invariance_defect(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.directional_derivative(y, &self.rd.bracket(x, y))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HitchinValue {
    pub components: Vec<LaurentPoly>,
    pub degrees: Vec<u32>,
}

impl HitchinValue {
    pub fn pole_orders(&self) -> Result<Vec<Option<i64>>> {
        self.components.iter().zip(&self.degrees).map(|(g, &d)| Ok(g.valuation()?.map(|v| d as i64 - v))).collect()
    }
}

pub fn chevalley_map(inv: &InvariantSystem, xi: &TwistedElement) -> Result<HitchinValue> {
    if xi.form_degree != 1 {
        return Err(Error::Precondition(format!("expected a 1-form, got form degree {}", xi.form_degree)));
    }
    let components = inv.eval(&xi.value);
    for c in &components {
        if let (_, Some(hi)) = c.window() {
            if hi < c.window().0 {
                return Err(Error::WindowUnderflow { exponent: c.window().0, hi });
            }
        }
    }
    Ok(HitchinValue { components, degrees: inv.degrees.clone() })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HitchinImage {
    pub n: i64,
    pub bounds: OrderBound,
}

/// `bᵢ = dᵢ - ⌈dᵢ(1-n)/m⌉`.
pub fn hitchin_bounds(p: &Parahoric, n: i64) -> HitchinImage {
    let degrees = p.rd.fundamental_degrees().0;
    let bounds = degrees.iter().map(|&d| d as i64 - Integer::div_ceil(&(d as i64 * (1 - n)), &p.m)).collect();
    HitchinImage { n, bounds: OrderBound { degrees, bounds } }
}

/// Verification report shared by the sampling sweeps.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub proposition: String,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub parahoric: Vec<i64>,
    pub n: i64,
    pub samples: usize,
    pub max_orders: Vec<Option<i64>>,
    pub status: String,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

impl Report {
    fn new(proposition: &str, p: &Parahoric, n: i64, samples: usize) -> Self {
        Report {
            proposition: proposition.into(),
            cartan_type: p.rd.cartan.to_string(),
            parahoric: p.kac_coords.clone(),
            n,
            samples,
            max_orders: Vec::new(),
            status: "pass".into(),
            extra: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Number of lowest admissible `t`-orders per line that receive random
/// coefficients when sampling a lattice.
pub const SAMPLE_DEPTH: i64 = 3;

pub(crate) fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn nonzero_int(rng: &mut ChaCha8Rng, k: i64) -> Q {
    let v = rng.gen_range(1..=k);
    q(if rng.gen_bool(0.5) { v } else { -v })
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Q> {
    (0..dim).map(|_| nonzero_int(rng, 5)).collect()
}

/// Random element of the lattice with the given orders: independent small
/// integer coefficients at the `SAMPLE_DEPTH` lowest admissible orders.
pub fn sample_lattice(rng: &mut ChaCha8Rng, orders: &[i64]) -> Vec<LaurentPoly> {
    orders
        .iter()
        .map(|&o| LaurentPoly::from_terms((o..o + SAMPLE_DEPTH).map(|k| (k, q(rng.gen_range(-3..=3))))))
        .collect()
}

/// Runs `f` over `0..count` on `jobs` threads (0: rayon default); the output
/// order never depends on the thread count.
pub fn par_map<T: Send>(jobs: usize, count: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    let run = || (0..count).into_par_iter().map(&f).collect::<Vec<T>>();
    if jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool").install(run)
    }
}

fn merge_max(acc: &mut Vec<Option<i64>>, orders: &[Option<i64>]) {
    if acc.is_empty() {
        acc.resize(orders.len(), None);
    }
    for (a, o) in acc.iter_mut().zip(orders) {
        *a = (*a).max(*o);
    }
}

fn element_text(rd: &RootDatum, x: &[LaurentPoly]) -> String {
    x.iter()
        .enumerate()
        .filter(|(_, p)| !p.is_exact_zero())
        .map(|(i, p)| format!("({p})*{}", rd.line_name(i)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Samples `𝔭(n)^⊥`, applies the Hitchin map and checks every pole order
/// against `bᵢ = dᵢ - ⌈dᵢ(1-n)/m⌉`.
pub fn verify_containment(
    inv: &InvariantSystem,
    p: &Parahoric,
    n: i64,
    samples: usize,
    seed: u64,
    jobs: usize,
) -> Result<Report> {
    let perp = p.orthogonal_lattice(n)?;
    let bounds = hitchin_bounds(p, n).bounds;
    let results = par_map(jobs, samples, |k| -> Result<(Vec<Option<i64>>, Vec<LaurentPoly>)> {
        let x = sample_lattice(&mut rng_for(seed, k), &perp.orders);
        let orders = chevalley_map(inv, &TwistedElement::new(x.clone(), 1))?.pole_orders()?;
        Ok((orders, x))
    });
    let mut report = Report::new("size-of-image", p, n, samples);
    for (k, r) in results.into_iter().enumerate() {
        let (orders, x) = r?;
        for (i, o) in orders.iter().enumerate() {
            if o.is_some_and(|o| o > bounds.bounds[i]) {
                return Err(Error::ContainmentViolation(format!(
                    "seed {seed} sample {k}: component {i} has pole order {} > {}; element {}",
                    o.unwrap(),
                    bounds.bounds[i],
                    element_text(&p.rd, &x)
                )));
            }
        }
        merge_max(&mut report.max_orders, &orders);
    }
    report.extra.insert("bounds".into(), json!(bounds.bounds));
    report.extra.insert("degrees".into(), json!(bounds.degrees));
    report.extra.insert("seed".into(), json!(seed));
    report.extra.insert("sample_depth".into(), json!(SAMPLE_DEPTH));
    Ok(report)
}

/// The slice `f' + ker(ad e')` with its exact inverse to the Hitchin map.
#[derive(Clone, Debug)]
pub struct KostantSlice {
    pub triple: PrincipalTriple,
    /// Graded basis `pᵢ` of `ker(ad e')`, `pᵢ` of `h'`-weight `2(dᵢ - 1)`.
    pub basis: Vec<Vec<Q>>,
    pub degrees: Vec<u32>,
    /// `Φᵢ(x) = χᵢ(f' + Σ xⱼ pⱼ)`.
    pub phi: Vec<MPoly>,
    /// `Ψ = Φ⁻¹`, polynomial and weighted-homogeneous.
    pub psi: Vec<MPoly>,
    /// Coefficient of `xᵢ` in `Φᵢ`.
    pub kappa: Vec<Q>,
}

impl KostantSlice {
    pub fn new(inv: &InvariantSystem, triple: PrincipalTriple) -> Result<Self> {
        let rd = &inv.rd;
        let l = rd.rank();
        let cent = rd.graded_centralizer(&triple.e, &triple.h_coroot);
        let degrees: Vec<u32> = cent.iter().map(|(k, _)| (k + 1) as u32).collect();
        if degrees != inv.degrees {
            return Err(Error::Mismatch(format!("centralizer degrees {degrees:?} vs {:?}", inv.degrees)));
        }
        let basis: Vec<Vec<Q>> = cent.into_iter().map(|(_, v)| v).collect();
        let generic: Vec<MPoly> = (0..rd.dim())
            .map(|a| {
                (0..l).fold(MPoly::constant_in(l, triple.f[a].clone()), |acc, i| {
                    acc.add(&MPoly::var(i, l).scale(&basis[i][a]))
                })
            })
            .collect();
        let phi = inv.eval(&generic);
        let mut kappa = Vec::new();
        let mut psi: Vec<MPoly> = Vec::new();
        for j in 0..l {
            let mut lin = vec![0; l];
            lin[j] = 1;
            let kj = phi[j].coeff(&lin);
            if kj.is_zero() {
                return Err(Error::Mismatch(format!("invariant {j} has no linear term on the slice")));
            }
            let rest = phi[j].sub(&MPoly::var(j, l).scale(&kj));
            let lower_only =
                rest.terms.keys().all(|e| e.iter().enumerate().all(|(i, &k)| k == 0 || degrees[i] < degrees[j]));
            if !lower_only {
                return Err(Error::Mismatch(format!("invariant {j} is not triangular on the slice")));
            }
            let mut args: Vec<MPoly> = psi.clone();
            args.resize(l, MPoly::zero_in(l));
            let pj = MPoly::var(j, l).sub(&rest.substitute(&args)).scale(&kj.recip());
            psi.push(pj);
            kappa.push(kj);
        }
        for j in 0..l {
            if phi[j].substitute(&psi) != MPoly::var(j, l) {
                return Err(Error::Mismatch(format!("slice inverse fails in component {j}")));
            }
        }
        Ok(KostantSlice { triple, basis, degrees, phi, psi, kappa })
    }

    /// Slice coordinates `xᵢ = Ψᵢ(c)` with `χ(f' + Σ xᵢ pᵢ) = c`.
    pub fn coordinates<R: Scalar>(&self, c: &[R]) -> Vec<R> {
        self.psi.iter().map(|p| p.substitute(c)).collect()
    }

    pub fn element<R: Scalar>(&self, x: &[R]) -> Vec<R> {
        let dim = self.triple.f.len();
        (0..dim)
            .map(|a| {
                x.iter().zip(&self.basis).fold(R::from_q(&self.triple.f[a]), |acc, (xi, p)| acc.add(&xi.scale(&p[a])))
            })
            .collect()
    }
}

/// `f' + Σ Ψᵢ(c) pᵢ`, the point of the Kostant slice over `c`.
pub fn kostant_section<R: Scalar>(slice: &KostantSlice, c: &[R]) -> Vec<R> {
    slice.element(&slice.coordinates(c))
}

fn require_principal(p: &Parahoric) -> Result<PrincipalTriple> {
    p.twisted_triple()
        .ok_or_else(|| Error::Precondition(format!("{} {:?} is not principal", p.rd.cartan, p.kac_coords)))
}

/// Builds `ξ ∈ 𝔭(2)^⊥` with `χ(ξ) = (t^{-⌊dᵢ/m⌋} cᵢ(t))ᵢ` by the Kostant
/// section on the `m`-fold cover, the gauge `Ad(h'(u))` and the inverse of
/// `X_β t^k ↦ X_β u^{mk + ⟨η,β⟩}`.
pub fn surjectivity_witness(
    inv: &InvariantSystem,
    p: &Parahoric,
    slice: &KostantSlice,
    c: &[LaurentPoly],
) -> Result<(Vec<LaurentPoly>, Vec<LaurentPoly>)> {
    let rd = &inv.rd;
    let m = p.m;
    let targets: Vec<LaurentPoly> =
        c.iter().zip(&inv.degrees).map(|(ci, &d)| ci.shift(-Integer::div_floor(&(d as i64), &m))).collect();
    // wᵢ(u) = m^{dᵢ} u^{-dᵢ} gᵢ(u^m): the section in du normalization
    let w: Vec<LaurentPoly> = targets
        .iter()
        .zip(&inv.degrees)
        .map(|(g, &d)| g.ramified_pullback(m as u32).shift(-(d as i64)).scale(&num_traits::pow(q(m), d as usize)))
        .collect();
    let z = kostant_section(slice, &w);
    let minv = q(m).recip();
    let mut xi = Vec::with_capacity(rd.dim());
    for (a, za) in z.iter().enumerate() {
        let shift = 1 + to_i64(&rd.cartan_weight(&slice.triple.h_coroot, a)).unwrap();
        let deg = p.line_degree(a);
        let mut terms = Vec::new();
        for (j, coef) in za.shift(shift).terms() {
            if (j - deg).rem_euclid(m) != 0 {
                return Err(Error::SurjectivityFailure(format!(
                    "line {} carries u^{j}, not of degree {deg} mod {m}",
                    rd.line_name(a)
                )));
            }
            terms.push(((j - deg) / m, coef * &minv));
        }
        xi.push(LaurentPoly::from_terms(terms));
    }
    Ok((xi, targets))
}

/// Kostant-section round trips at `n = 2`: each witness must lie in
/// `𝔭(2)^⊥` and map exactly to its prescribed Hitchin value.
pub fn verify_surjectivity(
    inv: &InvariantSystem,
    p: &Parahoric,
    trials: usize,
    seed: u64,
    jobs: usize,
) -> Result<Report> {
    let triple = require_principal(p)?;
    let slice = KostantSlice::new(inv, triple)?;
    let perp = p.orthogonal_lattice(2)?;
    let bounds = hitchin_bounds(p, 2).bounds;
    let results = par_map(jobs, trials, |k| -> Result<Vec<Option<i64>>> {
        let mut rng = rng_for(seed, k);
        let c: Vec<LaurentPoly> = inv
            .degrees
            .iter()
            .map(|_| {
                LaurentPoly::from_terms(
                    (0..3).map(|j| (j, if j == 0 { nonzero_int(&mut rng, 4) } else { q(rng.gen_range(-4..=4)) })),
                )
            })
            .collect();
        let (xi, targets) = surjectivity_witness(inv, p, &slice, &c)?;
        if !perp.contains(&xi)? {
            return Err(Error::SurjectivityFailure(format!(
                "trial {k}: witness {} is not in the dual lattice",
                element_text(&p.rd, &xi)
            )));
        }
        let value = chevalley_map(inv, &TwistedElement::new(xi, 1))?;
        if value.components != targets {
            return Err(Error::SurjectivityFailure(format!("trial {k}: Hitchin map does not reproduce the target")));
        }
        value.pole_orders()
    });
    let mut report = Report::new("surjectivity", p, 2, trials);
    for r in results {
        merge_max(&mut report.max_orders, &r?);
    }
    let attained: Vec<bool> = report.max_orders.iter().zip(&bounds.bounds).map(|(o, b)| *o == Some(*b)).collect();
    if attained.iter().any(|a| !a) {
        report.status = "fail".into();
    }
    report.extra.insert("bounds".into(), json!(bounds.bounds));
    report.extra.insert("boundary_attained".into(), json!(attained));
    report.extra.insert("slice_normalization".into(), json!(slice.kappa.iter().map(fmt_q).collect::<Vec<_>>()));
    report.extra.insert("seed".into(), json!(seed));
    Ok(report)
}

/// For `n = 1` every bound `bᵢ = dᵢ` is attained, witnessed by elements of the
/// Iwahori dual lattice `𝔦(1)^⊥ ⊆ 𝔭(1)^⊥` with generic Cartan part.
pub fn verify_n1_corollary(inv: &InvariantSystem, p: &Parahoric, seed: u64) -> Result<Report> {
    let iw = Parahoric::iwahori(p.rd.clone());
    let iw_perp = iw.orthogonal_lattice(1)?;
    let perp = p.orthogonal_lattice(1)?;
    if !iw_perp.orders.iter().zip(&perp.orders).all(|(a, b)| a >= b) {
        return Err(Error::Mismatch("Iwahori dual lattice is not contained in the parahoric one".into()));
    }
    let bounds = hitchin_bounds(p, 1).bounds;
    let mut report = Report::new("n1-corollary", p, 1, 0);
    for k in 0..20 {
        let x = sample_lattice(&mut rng_for(seed, k), &iw_perp.orders);
        if !perp.contains(&x)? {
            return Err(Error::ContainmentViolation("Iwahori witness escapes the parahoric lattice".into()));
        }
        let orders = chevalley_map(inv, &TwistedElement::new(x, 1))?.pole_orders()?;
        report.samples += 1;
        merge_max(&mut report.max_orders, &orders);
        if report.max_orders.iter().zip(&bounds.bounds).all(|(o, b)| *o == Some(*b)) {
            break;
        }
    }
    if report.max_orders.iter().zip(&bounds.bounds).any(|(o, b)| *o != Some(*b)) {
        report.status = "fail".into();
    }
    report.extra.insert("bounds".into(), json!(bounds.bounds));
    report.extra.insert("seed".into(), json!(seed));
    Ok(report)
}

/// Scalars `λ` with `bottom = λ · top` in the residue square, one per type.
pub fn recorded_residue_scalar(rd: &RootDatum) -> Option<Q> {
    let name = rd.cartan.to_string();
    let v = match name.as_str() {
        "A1" | "A2" | "A3" | "A4" => q(-1),
        "C2" => crate::scalar::qf(1, 4),
        "G2" => crate::scalar::qf(-1, 432),
        _ => return None,
    };
    Some(v)
}

/// Lines of `V_P = 𝔤₀(1)` for the Iwahori with the `t`-order at which each
/// enters `𝔦(1)`, and its Kac label.
pub fn iwahori_v_lines(rd: &RootDatum) -> Vec<(usize, i64, i64)> {
    let mut out: Vec<(usize, i64, i64)> = (0..rd.rank()).map(|i| (rd.idx_e(i), 0, rd.kac_labels[i + 1])).collect();
    out.push((rd.f_theta(), 1, rd.kac_labels[0]));
    out
}

/// Both paths of the residue square on samples of `𝔭(2)^⊥` for an Iwahori:
/// the invariant monomial `∏ z_L^{a_L}` of the residue pairing against `V_P`,
/// and the `t^{-1}` coefficients of the components with `m | dᵢ`.
pub fn residue_diagram(inv: &InvariantSystem, p: &Parahoric, samples: usize, seed: u64, jobs: usize) -> Result<Report> {
    if !p.is_iwahori() {
        return Err(Error::Precondition("the residue square is implemented for Iwahori parahorics".into()));
    }
    let rd = &p.rd;
    let perp = p.orthogonal_lattice(2)?;
    let lines = iwahori_v_lines(rd);
    let top_bottom = |x: &[LaurentPoly]| -> Result<(Q, Vec<Q>)> {
        let mut top = Q::one();
        for &(line, order, label) in &lines {
            let probe = rd.basis_vector::<LaurentPoly>(line);
            let z = rd.trace_pairing(&probe, x).shift(order).residue()?;
            top *= num_traits::pow(z, label as usize);
        }
        let value = chevalley_map(inv, &TwistedElement::new(x.to_vec(), 1))?;
        let bottom = value
            .components
            .iter()
            .zip(&inv.degrees)
            .filter(|(_, &d)| (d as i64) % p.m == 0)
            .map(|(g, &d)| g.coeff(-(d as i64) / p.m))
            .collect::<Result<Vec<Q>>>()?;
        Ok((top, bottom))
    };
    let pairs = par_map(jobs, samples, |k| top_bottom(&sample_lattice(&mut rng_for(seed, k), &perp.orders)));
    let mut scalar: Option<Q> = None;
    for (k, r) in pairs.into_iter().enumerate() {
        let (top, bottom) = r?;
        for b in bottom {
            if top.is_zero() {
                if !b.is_zero() {
                    return Err(Error::DiagramMismatch(format!("sample {k}: top path 0, bottom {}", fmt_q(&b))));
                }
                continue;
            }
            let ratio = &b / &top;
            match &scalar {
                None => scalar = Some(ratio),
                Some(s) if *s != ratio => {
                    return Err(Error::DiagramMismatch(format!(
                        "sample {k}: ratio {} differs from {}",
                        fmt_q(&ratio),
                        fmt_q(s)
                    )))
                }
                _ => {}
            }
        }
    }
    let scalar = scalar.ok_or_else(|| Error::DiagramMismatch("no sample with nonzero top path".into()))?;
    if scalar.is_zero() {
        return Err(Error::DiagramMismatch("scalar is zero".into()));
    }
    if let Some(rec) = recorded_residue_scalar(rd) {
        if rec != scalar {
            return Err(Error::DiagramMismatch(format!(
                "scalar {} differs from recorded {}",
                fmt_q(&scalar),
                fmt_q(&rec)
            )));
        }
    }
    // elements of 𝔭(1)^⊥ have vanishing image on both paths
    let inner = p.orthogonal_lattice(1)?;
    for k in 0..samples.min(10) {
        let (top, bottom) = top_bottom(&sample_lattice(&mut rng_for(seed ^ 0x5eed, k), &inner.orders))?;
        if !top.is_zero() || bottom.iter().any(|b| !b.is_zero()) {
            return Err(Error::DiagramMismatch("element of the smaller dual lattice has nonzero residue".into()));
        }
    }
    let mut report = Report::new("residue-diagram", p, 2, samples);
    report.extra.insert("scalar".into(), json!(fmt_q(&scalar)));
    report.extra.insert("seed".into(), json!(seed));
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusInvariant {
    /// Exponents `(n₀, …, n_ℓ)` of the generating monomial `∏ zᵢ^{nᵢ}`.
    pub exponents: Vec<i64>,
    pub degree: i64,
    /// Every invariant monomial up to this total degree was checked to be a
    /// power of the generator.
    pub checked_up_to: i64,
}

/// Generator of the `T`-invariant monomials on `V = ⊕ U_{αᵢ}` (Iwahori),
/// from the lattice kernel of `(ᾱ₀ = -θ, α₁, …, α_ℓ)`.
pub fn torus_invariant_generator(p: &Parahoric) -> Result<TorusInvariant> {
    if !p.is_iwahori() {
        return Err(Error::Precondition("torus invariants are computed for Iwahori parahorics".into()));
    }
    let rd = &p.rd;
    let l = rd.rank();
    let theta = rd.theta();
    let cols: Vec<Vec<i64>> = std::iter::once(theta.iter().map(|x| -x).collect())
        .chain((0..l).map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        }))
        .collect();
    let m = Mat::from_fn(l, l + 1, |r, c| q(cols[c][r]));
    let ker = kernel(&m);
    if ker.len() != 1 {
        return Err(Error::Mismatch(format!("character kernel has rank {}", ker.len())));
    }
    let v = &ker[0];
    let den = v.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::from(0), |acc, x| acc.gcd(x));
    let mut gen: Vec<i64> = ints.iter().map(|x| i64::try_from(x / &g).unwrap()).collect();
    if gen.iter().any(|&x| x < 0) {
        gen.iter_mut().for_each(|x| *x = -*x);
    }
    if gen.iter().any(|&x| x <= 0) {
        return Err(Error::Mismatch(format!("kernel generator {gen:?} is not positive")));
    }
    let degree: i64 = gen.iter().sum();
    let limit = 2 * rd.coxeter_number;
    let mut stack = vec![(0usize, vec![0i64; l + 1], 0i64)];
    while let Some((i, exps, total)) = stack.pop() {
        if i == l + 1 {
            let weight: Vec<i64> = (0..l).map(|r| (0..=l).map(|c| exps[c] * cols[c][r]).sum()).collect();
            if weight.iter().all(|&w| w == 0) && total > 0 {
                let k = exps[0] / gen[0];
                if exps.iter().zip(&gen).any(|(e, g)| *e != k * g) {
                    return Err(Error::Mismatch(format!("invariant monomial {exps:?} is not a power of {gen:?}")));
                }
            }
            continue;
        }
        for e in 0..=(limit - total) {
            let mut next = exps.clone();
            next[i] = e;
            stack.push((i + 1, next, total + e));
        }
    }
    Ok(TorusInvariant { exponents: gen, degree, checked_up_to: limit })
}

/// Whether `x` (a twisted 1-form) lies in the given dual lattice.
pub fn in_lattice(lattice: &MPLattice, x: &[LaurentPoly]) -> Result<bool> {
    lattice.contains(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_values() {
        let inv = InvariantSystem::from_name("A1").unwrap();
        let rd = inv.rd.clone();
        let t = rd.principal_triple();
        let lp = |v: &[Q]| v.iter().map(|x| LaurentPoly::constant(x.clone())).collect::<Vec<_>>();
        let vh = chevalley_map(&inv, &TwistedElement::new(lp(&t.h), 1)).unwrap();
        assert_eq!(vh.components[0], LaurentPoly::constant(q(-1)));
        let ve = chevalley_map(&inv, &TwistedElement::new(lp(&t.e), 1)).unwrap();
        assert!(ve.components[0].is_exact_zero());
    }

    #[test]
    fn a1_slice_normalization() {
        let inv = InvariantSystem::from_name("A1").unwrap();
        let slice = KostantSlice::new(&inv, inv.rd.principal_triple()).unwrap();
        assert_eq!(slice.kappa, vec![q(-1)]);
    }
}

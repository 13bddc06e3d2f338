//! Parahoric subalgebras of the loop algebra via Kac coordinates, their
//! Moy–Prasad lattices, the grading they induce on the finite algebra and
//! the principality test.
//!
//! A standard parahoric is fixed by Kac coordinates `(s₀, …, s_ℓ)` with
//! `sᵢ ∈ {0, 1}`; its period is `m = Σ aᵢ sᵢ`. The cocharacter `η` pairs with
//! the simple root `αᵢ` as `sᵢ`, so a root `β` sits in degree `⟨η, β⟩ mod m`.
//! A line `X_β` enters the level-`n` lattice at `t`-order
//! `⌈(n - ⟨η, β⟩)/m⌉`; Cartan lines enter at `⌈n/m⌉`.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{kernel, solve, Mat};
use crate::rootdata::{positive_roots, PrincipalTriple, RootDatum};
use crate::scalar::{q, qf, Scalar, Q};

#[derive(Clone, Debug)]
pub struct Parahoric {
    pub rd: Arc<RootDatum>,
    pub kac_coords: Vec<i64>,
    pub m: i64,
    /// Twisting order of the affine diagram; only `r = 1` is computed with.
    pub twist: u32,
}

impl Parahoric {
    pub fn new(rd: Arc<RootDatum>, kac_coords: &[i64]) -> Result<Self> {
        Self::with_twist(rd, kac_coords, 1)
    }

    pub fn with_twist(rd: Arc<RootDatum>, kac_coords: &[i64], twist: u32) -> Result<Self> {
        let l = rd.rank();
        if kac_coords.len() != l + 1 {
            return Err(Error::InvalidCoordinates(format!(
                "expected {} coordinates for {}, got {}",
                l + 1,
                rd.cartan,
                kac_coords.len()
            )));
        }
        if kac_coords.iter().any(|&s| s != 0 && s != 1) {
            return Err(Error::InvalidCoordinates(format!("{kac_coords:?}: entries must be 0 or 1")));
        }
        if kac_coords.iter().all(|&s| s == 0) {
            return Err(Error::InvalidCoordinates("all coordinates are zero".into()));
        }
        let m = kac_coords.iter().zip(&rd.kac_labels).map(|(s, a)| s * a).sum();
        Ok(Parahoric { rd, kac_coords: kac_coords.to_vec(), m, twist })
    }

    pub fn iwahori(rd: Arc<RootDatum>) -> Self {
        let l = rd.rank();
        Self::new(rd, &vec![1; l + 1]).unwrap()
    }

    /// The hyperspecial vertex `(1, 0, …, 0)`.
    pub fn hyperspecial(rd: Arc<RootDatum>) -> Self {
        let mut s = vec![0; rd.rank() + 1];
        s[0] = 1;
        Self::new(rd, &s).unwrap()
    }

    pub fn parse_coords(s: &str) -> Result<Vec<i64>> {
        s.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| Error::InvalidCoordinates(format!("{s:?}")))).collect()
    }

    pub fn is_iwahori(&self) -> bool {
        self.kac_coords.iter().all(|&s| s == 1)
    }

    pub fn is_hyperspecial(&self) -> bool {
        self.m == 1
    }

    /// `αᵢ(x_P) = sᵢ/m` for the simple affine roots `α₀, …, α_ℓ`.
    pub fn barycenter_values(&self) -> Vec<Q> {
        self.kac_coords.iter().map(|&s| qf(s, self.m)).collect()
    }

    /// Pairings `⟨η, αᵢ⟩` for `i = 1..ℓ`.
    pub fn eta(&self) -> &[i64] {
        &self.kac_coords[1..]
    }

    pub fn eta_pair(&self, weight: &[i64]) -> i64 {
        weight.iter().zip(self.eta()).map(|(a, b)| a * b).sum()
    }

    /// Unreduced degree `⟨η, β⟩` of a basis line (0 for Cartan lines).
    pub fn line_degree(&self, idx: usize) -> i64 {
        self.eta_pair(&self.rd.weight(idx))
    }

    /// `t`-order at which basis line `idx` enters `𝔭(n)`.
    pub fn line_order(&self, idx: usize, n: i64) -> i64 {
        Integer::div_ceil(&(n - self.line_degree(idx)), &self.m)
    }

    pub fn moy_prasad(&self, n: i64) -> MPLattice {
        MPLattice { n, form_degree: 0, orders: (0..self.rd.dim()).map(|i| self.line_order(i, n)).collect() }
    }

    /// `𝔭(n)^⊥` under `Res κ(·,·) dt/t`, computed from the closed formula
    /// `𝔭(n)^⊥ = 𝔭(1-n)·dt/t` and by brute force; the two must agree.
    pub fn orthogonal_lattice(&self, n: i64) -> Result<MPLattice> {
        let closed = self.moy_prasad(1 - n).orders;
        let brute = annihilator(&self.rd, &self.moy_prasad(n).orders)?;
        if closed != brute {
            return Err(Error::Mismatch(format!(
                "{} {:?} n={n}: closed {closed:?} vs brute force {brute:?}",
                self.rd.cartan, self.kac_coords
            )));
        }
        Ok(MPLattice { n, form_degree: 1, orders: closed })
    }

    /// `[𝔭(i), 𝔭(j)] ⊆ 𝔭(i+j)`, checked on all basis pairs.
    pub fn bracket_compatible(&self, i: i64, j: i64) -> bool {
        let (li, lj, lij) = (self.moy_prasad(i), self.moy_prasad(j), self.moy_prasad(i + j));
        let dim = self.rd.dim();
        (0..dim).all(|a| {
            (0..dim)
                .all(|b| self.rd.bracket_basis(a, b).iter().all(|(c, _)| li.orders[a] + lj.orders[b] >= lij.orders[*c]))
        })
    }

    pub fn kac_grading(&self) -> Result<KacGrading> {
        if self.twist != 1 {
            return Err(Error::UnsupportedTwisted(self.twist));
        }
        let mut pieces: BTreeMap<i64, Vec<usize>> = (0..self.m).map(|i| (i, Vec::new())).collect();
        for idx in 0..self.rd.dim() {
            pieces.get_mut(&self.line_degree(idx).rem_euclid(self.m)).unwrap().push(idx);
        }
        Ok(KacGrading { m: self.m, eta: self.eta().to_vec(), pieces })
    }

    /// Dimension of the Levi `L_P`, from the affine Dynkin subdiagram on the
    /// nodes with `sᵢ = 0`; independent of the grading computation.
    pub fn levi_dimension(&self) -> usize {
        let aff = self.rd.affine_cartan_matrix();
        let nodes: Vec<usize> = (0..=self.rd.rank()).filter(|&i| self.kac_coords[i] == 0).collect();
        let sub: Vec<Vec<i64>> = nodes.iter().map(|&i| nodes.iter().map(|&j| aff[i][j]).collect()).collect();
        let roots = if sub.is_empty() { 0 } else { positive_roots(&sub).len() };
        self.rd.rank() + 2 * roots
    }

    /// Whether the degree-1 piece contains a regular nilpotent.
    ///
    /// Decided by comparing `x_P` with the alcove representatives of
    /// `ρ^∨/m + ω` for `ω` running over the minuscule coweights and zero.
    pub fn is_principal(&self) -> bool {
        let target = self.barycenter_values()[1..].to_vec();
        let mut shifts = vec![None];
        shifts.extend((1..=self.rd.rank()).filter(|&j| self.rd.kac_labels[j] == 1).map(Some));
        shifts.into_iter().any(|w| {
            let x: Vec<Q> = (0..self.rd.rank())
                .map(|i| qf(1, self.m) + if w == Some(i + 1) { Q::one() } else { Q::zero() })
                .collect();
            alcove_reduce(&self.rd, x) == target
        })
    }

    /// A simple system `S = wΔ` with every `γ ∈ S` in degree 1 mod `m`;
    /// `Σ_{γ∈S} X_γ` is then a regular nilpotent in the degree-1 piece.
    pub fn principal_witness(&self) -> Option<Vec<Vec<i64>>> {
        let l = self.rd.rank();
        let start: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                let mut v = vec![0; l];
                v[i] = 1;
                v
            })
            .collect();
        let good = |s: &[Vec<i64>]| s.iter().all(|g| (self.eta_pair(g) - 1).rem_euclid(self.m) == 0);
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(sys) = queue.pop_front() {
            if good(&sys) {
                return Some(sys);
            }
            for i in 0..l {
                let next: Vec<Vec<i64>> = sys.iter().map(|g| reflect(&self.rd, i, g)).collect();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// Principal triple `{e', h', f'}` adapted to the grading: `e'` has
    /// degree 1 and `f'` degree -1. `None` when the parahoric is not principal.
    pub fn twisted_triple(&self) -> Option<PrincipalTriple> {
        let sys = self.principal_witness()?;
        Some(triple_for_simple_system(&self.rd, &sys))
    }

    pub fn descriptor(&self) -> ParahoricDescriptor {
        ParahoricDescriptor {
            cartan_type: self.rd.cartan.to_string(),
            rank: self.rd.rank(),
            kac_coords: self.kac_coords.clone(),
            m: self.m,
        }
    }
}

/// `s_i(γ)` for the `i`-th simple reflection acting on a root.
fn reflect(rd: &RootDatum, i: usize, g: &[i64]) -> Vec<i64> {
    let mut v = g.to_vec();
    v[i] -= rd.pair_simple_coroot(i, g);
    v
}

/// Moves a point, given by its values `αᵢ(x)`, into the closed fundamental
/// alcove using simple reflections and the affine reflection `s₀`.
fn alcove_reduce(rd: &RootDatum, mut x: Vec<Q>) -> Vec<Q> {
    let l = rd.rank();
    let theta = rd.theta().to_vec();
    let theta_co = rd.coroot(&theta);
    // ⟨θ^∨, αⱼ⟩
    let theta_pair: Vec<Q> = (0..l).map(|j| (0..l).map(|i| &theta_co[i] * q(rd.cartan_matrix[i][j])).sum()).collect();
    loop {
        if let Some(i) = (0..l).find(|&i| x[i] < Q::zero()) {
            let xi = x[i].clone();
            for j in 0..l {
                x[j] -= &xi * q(rd.cartan_matrix[i][j]);
            }
            continue;
        }
        let th: Q = (0..l).map(|j| &x[j] * q(theta[j])).sum();
        if th > Q::one() {
            let c = th - Q::one();
            for j in 0..l {
                x[j] -= &c * &theta_pair[j];
            }
            continue;
        }
        return x;
    }
}

pub fn triple_for_simple_system(rd: &RootDatum, sys: &[Vec<i64>]) -> PrincipalTriple {
    let l = rd.rank();
    let dim = rd.dim();
    // h' = Σ cᵢ Hᵢ with γ(h') = 2 for γ ∈ S
    let a = Mat::from_fn(l, l, |r, c| q(rd.pair_simple_coroot(c, &sys[r])));
    let c = solve(&a, &vec![q(2); l]).expect("simple system spans");
    // h' = Σ d_γ [X_γ, X_{-γ}]; brackets of distinct pairs vanish since
    // differences of simple roots are not roots
    let pairs: Vec<(usize, usize)> = sys
        .iter()
        .map(|g| {
            let neg: Vec<i64> = g.iter().map(|x| -x).collect();
            (rd.index_of_root(g).unwrap(), rd.index_of_root(&neg).unwrap())
        })
        .collect();
    let brackets: Vec<Vec<Q>> =
        pairs.iter().map(|&(a, b)| rd.bracket(&rd.basis_vector::<Q>(a), &rd.basis_vector(b))).collect();
    let b = Mat::from_fn(l, l, |r, k| brackets[k][rd.idx_h(r)].clone());
    let d = solve(&b, &c).expect("coroots of a simple system span the Cartan");
    let mut e = vec![Q::zero(); dim];
    let mut f = vec![Q::zero(); dim];
    let mut h = vec![Q::zero(); dim];
    for (k, &(ig, ing)) in pairs.iter().enumerate() {
        e[ig] = d[k].clone();
        f[ing] = Q::one();
    }
    for i in 0..l {
        h[rd.idx_h(i)] = c[i].clone();
    }
    PrincipalTriple { e, h, f, h_coroot: c }
}

/// For each basis line, the least exponent `j` such that `X_a t^j` pairs to
/// zero residue against every `X_b t^k` in the lattice with the given
/// orders. Computed level by level from the trace-form Gram matrix.
pub fn annihilator(rd: &RootDatum, orders: &[i64]) -> Result<Vec<i64>> {
    let dim = rd.dim();
    let gram: Vec<Vec<Q>> = (0..dim).map(|a| (0..dim).map(|b| rd.trace_form(a, b)).collect()).collect();
    let lo = -orders.iter().max().unwrap();
    let hi = -orders.iter().min().unwrap() + 1;
    let mut out = vec![None; dim];
    for j in lo..=hi {
        let rows: Vec<usize> = (0..dim).filter(|&b| orders[b] <= -j).collect();
        let allowed: Vec<usize> = (0..dim).filter(|&a| rows.iter().all(|&b| gram[b][a].is_zero())).collect();
        let m = Mat::from_fn(rows.len(), dim, |r, c| gram[rows[r]][c].clone());
        let kdim = if rows.is_empty() { dim } else { kernel(&m).len() };
        if kdim != allowed.len() {
            return Err(Error::Mismatch(format!("annihilator at level {j} is not spanned by basis lines")));
        }
        for &a in &allowed {
            out[a].get_or_insert(j);
        }
        for (a, o) in out.iter().enumerate() {
            if o.is_some() && !allowed.contains(&a) {
                return Err(Error::Mismatch(format!("annihilator not monotone on line {a} at level {j}")));
            }
        }
    }
    out.into_iter().map(|o| o.ok_or_else(|| Error::Mismatch("line never admitted".into()))).collect()
}

/// A lattice of the form `⊕_a X_a t^{orders[a]} 𝒪`, optionally twisted by
/// `dt/t` (form degree 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MPLattice {
    pub n: i64,
    pub form_degree: i32,
    pub orders: Vec<i64>,
}

impl MPLattice {
    pub fn contains(&self, x: &[LaurentPoly]) -> Result<bool> {
        for (p, o) in x.iter().zip(&self.orders) {
            if let Some(v) = p.valuation()? {
                if v < *o {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `line name → minimal order`.
    pub fn dump(&self, rd: &RootDatum) -> BTreeMap<String, i64> {
        self.orders.iter().enumerate().map(|(i, o)| (rd.line_name(i), *o)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KacGrading {
    pub m: i64,
    pub eta: Vec<i64>,
    /// Degree `i mod m` → basis lines of `𝔤₀(i)`.
    pub pieces: BTreeMap<i64, Vec<usize>>,
}

impl KacGrading {
    pub fn piece(&self, i: i64) -> &[usize] {
        &self.pieces[&i.rem_euclid(self.m)]
    }

    pub fn degree_of(&self, idx: usize) -> i64 {
        *self.pieces.iter().find(|(_, v)| v.contains(&idx)).unwrap().0
    }

    /// `[𝔤₀(i), 𝔤₀(j)] ⊆ 𝔤₀(i+j)` on basis lines.
    pub fn is_compatible(&self, rd: &RootDatum) -> bool {
        (0..rd.dim()).all(|a| {
            (0..rd.dim()).all(|b| {
                let want = (self.degree_of(a) + self.degree_of(b)).rem_euclid(self.m);
                rd.bracket_basis(a, b).iter().all(|(c, _)| self.degree_of(*c) == want)
            })
        })
    }

    /// The `t`-order at which `X_β` enters `𝔭(n)`, read off from the graded
    /// realization `∏_{j≥n} 𝔤₀(j) u^j` with `t = u^m`.
    pub fn graded_order(&self, p: &Parahoric, idx: usize, n: i64) -> i64 {
        let d = p.line_degree(idx);
        let j = n + (d - n).rem_euclid(self.m);
        (j - d) / self.m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParahoricDescriptor {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub kac_coords: Vec<i64>,
    pub m: i64,
}

/// Generic element `Σ X_γ` for a witness simple system.
pub fn witness_element(rd: &RootDatum, sys: &[Vec<i64>]) -> Vec<Q> {
    let mut x = vec![Q::zero(); rd.dim()];
    for g in sys {
        x[rd.index_of_root(g).unwrap()] = Q::one();
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn par(name: &str, s: &[i64]) -> Parahoric {
        Parahoric::new(Arc::new(RootDatum::from_name(name).unwrap()), s).unwrap()
    }

    #[test]
    fn periods() {
        assert_eq!(par("A1", &[1, 1]).m, 2);
        assert!(par("A2", &[1, 0, 0]).is_hyperspecial());
        assert_eq!(par("G2", &[1, 1, 1]).m, 6);
        let rd = Arc::new(RootDatum::from_name("A2").unwrap());
        assert!(matches!(Parahoric::new(rd.clone(), &[0, 0, 0]), Err(Error::InvalidCoordinates(_))));
        assert!(matches!(Parahoric::new(rd.clone(), &[2, 0, 0]), Err(Error::InvalidCoordinates(_))));
        assert!(matches!(Parahoric::new(rd, &[1, 0]), Err(Error::InvalidCoordinates(_))));
    }

    #[test]
    fn a1_iwahori_orders() {
        let p = par("A1", &[1, 1]);
        let rd = &p.rd;
        let (e, f, h) = (rd.idx_e(0), rd.idx_f(0), rd.idx_h(0));
        let l0 = p.moy_prasad(0);
        assert_eq!((l0.orders[e], l0.orders[f], l0.orders[h]), (0, 1, 0));
        let l1 = p.moy_prasad(1);
        assert_eq!((l1.orders[e], l1.orders[f], l1.orders[h]), (0, 1, 1));
        let perp = p.orthogonal_lattice(2).unwrap();
        // 𝔭(2)^⊥ = 𝔭(-3)⊗ω, and ω = t·(dt/t)𝒪
        assert_eq!(perp.orders, p.moy_prasad(-3).orders.iter().map(|x| x + 1).collect::<Vec<_>>());
        assert_eq!(perp.orders, p.moy_prasad(-1).orders);
    }

    #[test]
    fn twisted_rejected() {
        let rd = Arc::new(RootDatum::from_name("A2").unwrap());
        let p = Parahoric::with_twist(rd, &[1, 1, 1], 2).unwrap();
        assert_eq!(p.kac_grading(), Err(Error::UnsupportedTwisted(2)));
    }

    #[test]
    fn c2_principality() {
        assert!(par("C2", &[1, 0, 1]).is_principal());
        assert!(!par("C2", &[0, 1, 0]).is_principal());
        assert!(par("C2", &[1, 0, 1]).principal_witness().is_some());
        assert!(par("C2", &[0, 1, 0]).principal_witness().is_none());
    }
}

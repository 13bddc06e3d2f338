//! Finite root systems, Chevalley bases and principal sl₂-triples.
//!
//! Every algebra is realized by explicit matrices in its defining
//! representation. Structure constants are read off from matrix commutators,
//! so each identity the rest of the crate relies on can be re-checked
//! against an honest matrix computation.
//!
//! # Basis and sign conventions
//!
//! The Chevalley basis is ordered as: `E_β` for positive roots `β` (by height,
//! then lexicographically on simple-root coordinates), `F_β` in the same
//! order, then `H_1, …, H_ℓ`. For a non-simple positive root `β`, let `i` be
//! the smallest index with `γ = β - αᵢ` a root and `p` the largest integer
//! with `γ - p·αᵢ` a root. Then `E_β = [E_i, E_γ]/(p+1)`, so every
//! extraspecial pair has positive structure constant `p+1`. `F_β` is scaled
//! so that `[E_β, F_β] = H_β`, the coroot of `β`.
//!
//! The Cartan matrix follows `a_ij = ⟨αᵢ^∨, αⱼ⟩`, i.e. `[H_i, E_j] = a_ij E_j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{kernel, rank, solve, Mat};
use crate::poly::QPoly;
use crate::scalar::{q, qf, to_i64, Scalar, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=8).contains(&rank),
            Family::B | Family::C => (2..=8).contains(&rank),
            Family::D => (3..=8).contains(&rank),
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family:?}{rank}")))
        }
    }

    /// Types whose invariant theory is handled through characteristic
    /// polynomials of a small faithful representation.
    pub fn supports_invariants(&self) -> bool {
        match self.family {
            Family::A => self.rank <= 4,
            Family::C => self.rank == 2,
            Family::G => true,
            _ => false,
        }
    }

    pub fn require_invariants(&self) -> Result<()> {
        if self.supports_invariants() {
            Ok(())
        } else {
            Err(Error::UnsupportedType(format!("{self} (invariant theory supports A1-A4, C2, G2)")))
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for i in 0..l {
            a[i][i] = 2;
        }
        let chain = match self.family {
            Family::D => l - 1,
            _ => l,
        };
        for i in 0..chain.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
        match self.family {
            Family::B => a[l - 1][l - 2] = -2,
            Family::C => a[l - 2][l - 1] = -2,
            Family::D => {
                a[l - 3][l - 1] = -1;
                a[l - 1][l - 3] = -1;
            }
            Family::G => a[1][0] = -3,
            Family::A => {}
        }
        a
    }

    /// Type of the Langlands dual together with the node permutation that
    /// identifies its Cartan matrix with the transpose of ours.
    pub fn langlands_dual(&self) -> (CartanType, Vec<usize>) {
        let l = self.rank;
        match self.family {
            Family::B => (CartanType { family: Family::C, rank: l }, (0..l).collect()),
            Family::C => (CartanType { family: Family::B, rank: l }, (0..l).collect()),
            Family::G => (*self, vec![1, 0]),
            _ => (*self, (0..l).collect()),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

type Sparse = BTreeMap<(usize, usize), Q>;

fn sp_mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (&(i, k), x) in a {
        for (&(_, j), y) in b.range((k, 0)..(k + 1, 0)) {
            *out.entry((i, j)).or_insert_with(Q::zero) += x * y;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn sp_comm(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = sp_mul(a, b);
    for (k, v) in sp_mul(b, a) {
        *out.entry(k).or_insert_with(Q::zero) -= v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn sp_scale(a: &Sparse, c: &Q) -> Sparse {
    a.iter().map(|(k, v)| (*k, v * c)).collect()
}

fn sp_unit(entries: &[(usize, usize, i64)]) -> Sparse {
    entries.iter().map(|&(i, j, v)| ((i, j), q(v))).collect()
}

/// Matrices of the simple root vectors `E_i` in the defining representation.
fn simple_root_matrices(ct: CartanType) -> (usize, Vec<Sparse>) {
    let l = ct.rank;
    let paired = |n: usize, i: usize| sp_unit(&[(i, i + 1, 1), (n - 2 - i, n - 1 - i, -1)]);
    match ct.family {
        Family::A => (l + 1, (0..l).map(|i| sp_unit(&[(i, i + 1, 1)])).collect()),
        Family::B => {
            let n = 2 * l + 1;
            let mut v: Vec<Sparse> = (0..l - 1).map(|i| paired(n, i)).collect();
            v.push(sp_unit(&[(l - 1, l, 1), (l, l + 1, -1)]));
            (n, v)
        }
        Family::C => {
            let n = 2 * l;
            let mut v: Vec<Sparse> = (0..l - 1).map(|i| paired(n, i)).collect();
            v.push(sp_unit(&[(l - 1, l, 1)]));
            (n, v)
        }
        Family::D => {
            let n = 2 * l;
            let mut v: Vec<Sparse> = (0..l - 1).map(|i| paired(n, i)).collect();
            v.push(sp_unit(&[(l - 2, l, 1), (l - 1, l + 1, -1)]));
            (n, v)
        }
        Family::G => {
            (7, vec![sp_unit(&[(1, 2, 1), (4, 5, 1)]), sp_unit(&[(0, 1, 1), (2, 3, 1), (3, 4, 1), (5, 6, 1)])])
        }
    }
}

/// `F_i` for each simple root. A rescaled transpose works for the classical
/// types; the short root of G2 acts on a 3-dimensional string and needs
/// unequal weights.
fn simple_coroot_partners(ct: CartanType, es: &[Sparse]) -> Vec<Sparse> {
    if ct.family == Family::G {
        return vec![sp_unit(&[(2, 1, 1), (5, 4, 1)]), sp_unit(&[(1, 0, 1), (3, 2, 2), (4, 3, 2), (6, 5, 1)])];
    }
    es.iter()
        .map(|e| {
            let et: Sparse = e.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect();
            let lam = pivot_ratio(&sp_comm(&sp_comm(e, &et), e), e);
            sp_scale(&et, &(q(2) / lam))
        })
        .collect()
}

/// A root system with a Chevalley basis realized in the defining
/// representation. Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan: CartanType,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, in basis order.
    pub pos_roots: Vec<Vec<i64>>,
    /// `(αᵢ, αᵢ)/2` with short roots normalized to 1.
    pub symmetrizer: Vec<i64>,
    /// `(a₀, …, a_ℓ)` with `a₀ = 1`.
    pub kac_labels: Vec<i64>,
    pub coxeter_number: i64,
    pub rep_dim: usize,
    rep: Vec<Sparse>,
    root_index: HashMap<Vec<i64>, usize>,
    brackets: Vec<Vec<(usize, Q)>>,
}

impl RootDatum {
    pub fn new(cartan: CartanType) -> Result<Self> {
        let cartan = CartanType::new(cartan.family, cartan.rank)?;
        let l = cartan.rank;
        let a = cartan.cartan_matrix();
        let symmetrizer = symmetrizer(&a);
        let pos_roots = positive_roots(&a);
        let np = pos_roots.len();
        let dim = 2 * np + l;
        let theta = pos_roots.last().unwrap().clone();
        let mut kac_labels = vec![1];
        kac_labels.extend(&theta);
        let coxeter_number = kac_labels.iter().sum();

        let mut root_index = HashMap::new();
        for (k, r) in pos_roots.iter().enumerate() {
            root_index.insert(r.clone(), k);
            root_index.insert(r.iter().map(|x| -x).collect(), np + k);
        }

        let (rep_dim, es) = simple_root_matrices(cartan);
        let mut e_mats: Vec<Sparse> = Vec::with_capacity(np);
        let mut f_mats: Vec<Sparse> = Vec::with_capacity(np);
        let mut h_mats: Vec<Sparse> = Vec::with_capacity(l);
        for (e, f) in es.iter().zip(simple_coroot_partners(cartan, &es)) {
            h_mats.push(sp_comm(e, &f));
            f_mats.push(f);
            e_mats.push(e.clone());
        }
        let mut rd = RootDatum {
            cartan,
            cartan_matrix: a,
            pos_roots,
            symmetrizer,
            kac_labels,
            coxeter_number,
            rep_dim,
            rep: Vec::new(),
            root_index,
            brackets: Vec::new(),
        };
        for k in l..np {
            let beta = rd.pos_roots[k].clone();
            let (i, gamma) = (0..l)
                .find_map(|i| {
                    let mut g = beta.clone();
                    g[i] -= 1;
                    rd.root_index.get(&g).filter(|&&x| x < np).map(|_| (i, g))
                })
                .expect("non-simple root has a simple predecessor");
            let p = rd.string_down(&gamma, i);
            let gi = rd.root_index[&gamma];
            let scale = qf(1, p + 1);
            let e = sp_scale(&sp_comm(&e_mats[i], &e_mats[gi]), &scale);
            let f0 = sp_scale(&sp_comm(&f_mats[i], &f_mats[gi]), &scale);
            let hb = rd.coroot(&beta).iter().zip(&h_mats).fold(Sparse::new(), |mut acc, (c, m)| {
                for (key, v) in m {
                    *acc.entry(*key).or_insert_with(Q::zero) += c * v;
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            });
            let lam = pivot_ratio(&sp_comm(&e, &f0), &hb);
            e_mats.push(e);
            f_mats.push(sp_scale(&f0, &lam.recip()));
        }
        rd.rep = e_mats.into_iter().chain(f_mats).chain(h_mats).collect();
        rd.brackets = rd.compute_brackets();
        debug_assert_eq!(rd.rep.len(), dim);
        Ok(rd)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::new(name.parse()?)
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn num_pos(&self) -> usize {
        self.pos_roots.len()
    }

    pub fn dim(&self) -> usize {
        2 * self.num_pos() + self.rank()
    }

    pub fn idx_e(&self, k: usize) -> usize {
        k
    }

    pub fn idx_f(&self, k: usize) -> usize {
        self.num_pos() + k
    }

    pub fn idx_h(&self, i: usize) -> usize {
        2 * self.num_pos() + i
    }

    pub fn is_cartan(&self, idx: usize) -> bool {
        idx >= 2 * self.num_pos()
    }

    /// Signed root of a basis line; the zero vector for Cartan lines.
    pub fn weight(&self, idx: usize) -> Vec<i64> {
        let np = self.num_pos();
        if idx < np {
            self.pos_roots[idx].clone()
        } else if idx < 2 * np {
            self.pos_roots[idx - np].iter().map(|x| -x).collect()
        } else {
            vec![0; self.rank()]
        }
    }

    /// Human-readable label: `E[1,1]`, `F[0,1]`, `H2`.
    pub fn line_name(&self, idx: usize) -> String {
        let np = self.num_pos();
        let fmt = |r: &[i64]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if idx < np {
            format!("E[{}]", fmt(&self.pos_roots[idx]))
        } else if idx < 2 * np {
            format!("F[{}]", fmt(&self.pos_roots[idx - np]))
        } else {
            format!("H{}", idx - 2 * np + 1)
        }
    }

    pub fn index_of_root(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    pub fn theta(&self) -> &[i64] {
        self.pos_roots.last().unwrap()
    }

    /// Basis index of `E_θ`.
    pub fn e_theta(&self) -> usize {
        self.num_pos() - 1
    }

    /// Basis index of `F_θ`.
    pub fn f_theta(&self) -> usize {
        2 * self.num_pos() - 1
    }

    /// Symmetric bilinear form on the root lattice, short roots of length² 2.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                s += x[i] * y[j] * self.symmetrizer[i] * self.cartan_matrix[i][j];
            }
        }
        s
    }

    /// Coroot of `β` in the basis `H_1, …, H_ℓ` (integer coefficients).
    pub fn coroot(&self, beta: &[i64]) -> Vec<Q> {
        let bb = self.inner(beta, beta);
        beta.iter().zip(&self.symmetrizer).map(|(b, d)| qf(2 * b * d, bb)).collect()
    }

    /// `⟨αᵢ^∨, β⟩`.
    pub fn pair_simple_coroot(&self, i: usize, beta: &[i64]) -> i64 {
        (0..self.rank()).map(|j| self.cartan_matrix[i][j] * beta[j]).sum()
    }

    /// Largest `p` with `γ - p·αᵢ` a root.
    fn string_down(&self, gamma: &[i64], i: usize) -> i64 {
        let mut g = gamma.to_vec();
        let mut p = 0;
        loop {
            g[i] -= 1;
            if self.root_index.contains_key(&g) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    fn compute_brackets(&self) -> Vec<Vec<(usize, Q)>> {
        let dim = self.dim();
        let l = self.rank();
        let n = self.rep_dim;
        let h_diag = Mat::from_fn(n, l, |r, c| self.rep[self.idx_h(c)].get(&(r, r)).cloned().unwrap_or_else(Q::zero));
        let mut out = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                let wa = self.weight(a);
                let wb = self.weight(b);
                let w: Vec<i64> = wa.iter().zip(&wb).map(|(x, y)| x + y).collect();
                let entry = if w.iter().all(|&x| x == 0) {
                    if self.is_cartan(a) {
                        continue;
                    }
                    let c = sp_comm(&self.rep[a], &self.rep[b]);
                    let diag: Vec<Q> = (0..n).map(|r| c.get(&(r, r)).cloned().unwrap_or_else(Q::zero)).collect();
                    let x = solve(&h_diag, &diag).expect("commutator of opposite root vectors is in the Cartan");
                    x.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (self.idx_h(i), v)).collect()
                } else if let Some(&g) = self.root_index.get(&w) {
                    let c = sp_comm(&self.rep[a], &self.rep[b]);
                    if c.is_empty() {
                        Vec::new()
                    } else {
                        vec![(g, pivot_ratio(&c, &self.rep[g]))]
                    }
                } else {
                    continue;
                };
                out[a * dim + b] = entry;
            }
        }
        out
    }

    /// `[X_a, X_b]` as a sparse combination of basis lines.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.brackets[a * self.dim() + b]
    }

    /// `N_{αβ}` with `[E_α, E_β] = N_{αβ} E_{α+β}` for signed roots.
    pub fn structure_constant(&self, alpha: &[i64], beta: &[i64]) -> Option<Q> {
        let a = self.index_of_root(alpha)?;
        let b = self.index_of_root(beta)?;
        let s: Vec<i64> = alpha.iter().zip(beta).map(|(x, y)| x + y).collect();
        let g = self.index_of_root(&s)?;
        Some(self.bracket_basis(a, b).iter().find(|(i, _)| *i == g).map(|(_, v)| v.clone()).unwrap_or_else(Q::zero))
    }

    pub fn basis_vector<R: Scalar>(&self, idx: usize) -> Vec<R> {
        let mut v = vec![R::zero(); self.dim()];
        v[idx] = R::one();
        v
    }

    pub fn bracket<R: Scalar>(&self, x: &[R], y: &[R]) -> Vec<R> {
        let dim = self.dim();
        let mut out = vec![R::zero(); dim];
        for a in (0..dim).filter(|&a| !x[a].is_zero()) {
            for b in (0..dim).filter(|&b| !y[b].is_zero()) {
                let br = &self.brackets[a * dim + b];
                if br.is_empty() {
                    continue;
                }
                let xy = x[a].mul(&y[b]);
                for (c, n) in br {
                    out[*c] = out[*c].add(&xy.scale(n));
                }
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` holds `[x, X_j]`.
    pub fn ad_matrix(&self, x: &[Q]) -> Mat<Q> {
        let dim = self.dim();
        let mut m = Mat::zeros(dim, dim);
        for a in (0..dim).filter(|&a| !x[a].is_zero()) {
            for b in 0..dim {
                for (c, n) in self.bracket_basis(a, b) {
                    let v = m.get(*c, b) + &x[a] * n;
                    m.set(*c, b, v);
                }
            }
        }
        m
    }

    /// Image of an element in the defining representation.
    pub fn to_matrix<R: Scalar>(&self, x: &[R]) -> Mat<R> {
        let n = self.rep_dim;
        let mut m = Mat::<R>::zeros(n, n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (&(i, j), v) in &self.rep[a] {
                let idx = i * n + j;
                m.data[idx] = m.data[idx].add(&xa.scale(v));
            }
        }
        m
    }

    pub fn basis_matrix(&self, idx: usize) -> Mat<Q> {
        self.to_matrix(&self.basis_vector::<Q>(idx))
    }

    /// Trace form `tr(ρ(X_a) ρ(X_b))` of the defining representation.
    pub fn trace_form(&self, a: usize, b: usize) -> Q {
        let mut s = Q::zero();
        for (&(i, j), x) in &self.rep[a] {
            if let Some(y) = self.rep[b].get(&(j, i)) {
                s += x * y;
            }
        }
        s
    }

    /// The pairing `tr(ρ(x) ρ(y))` on coefficient vectors.
    pub fn trace_pairing<R: Scalar>(&self, x: &[R], y: &[R]) -> R {
        let mut s = R::zero();
        for a in (0..self.dim()).filter(|&a| !x[a].is_zero()) {
            for b in self.dual_lines(a) {
                if y[b].is_zero() {
                    continue;
                }
                s = s.add(&x[a].mul(&y[b]).scale(&self.trace_form(a, b)));
            }
        }
        s
    }

    /// Basis lines that pair nontrivially with line `a` under the trace form.
    pub fn dual_lines(&self, a: usize) -> Vec<usize> {
        let np = self.num_pos();
        if a < np {
            vec![a + np]
        } else if a < 2 * np {
            vec![a - np]
        } else {
            (0..self.rank()).map(|i| self.idx_h(i)).collect()
        }
    }

    /// Eigenvalue of `ad h` on line `idx`, where `h = Σ cᵢ Hᵢ`.
    pub fn cartan_weight(&self, c: &[Q], idx: usize) -> Q {
        let w = self.weight(idx);
        (0..self.rank()).map(|i| &c[i] * q(self.pair_simple_coroot(i, &w))).sum()
    }

    pub fn principal_triple(&self) -> PrincipalTriple {
        let l = self.rank();
        let at = Mat::from_fn(l, l, |r, c| q(self.cartan_matrix[c][r]));
        let c = solve(&at, &vec![q(2); l]).expect("Cartan matrix is invertible");
        let mut e = vec![Q::zero(); self.dim()];
        let mut h = vec![Q::zero(); self.dim()];
        let mut f = vec![Q::zero(); self.dim()];
        for i in 0..l {
            e[self.idx_e(i)] = c[i].clone();
            h[self.idx_h(i)] = c[i].clone();
            f[self.idx_f(i)] = Q::one();
        }
        PrincipalTriple { e, h, f, h_coroot: c }
    }

    /// Basis of `ker(ad e)` graded by `h = Σ cᵢ Hᵢ`: entry `(k, v)` has
    /// `[h, v] = 2k·v`. Sorted by `k`. Requires `h` to act on `e` by 2.
    pub fn graded_centralizer(&self, e: &[Q], h_coroot: &[Q]) -> Vec<(i64, Vec<Q>)> {
        let half = |idx: usize| to_i64(&(self.cartan_weight(h_coroot, idx) / q(2))).expect("even grading");
        let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for idx in 0..self.dim() {
            by_weight.entry(half(idx)).or_default().push(idx);
        }
        let mut out = Vec::new();
        for (k, lines) in &by_weight {
            let target: Vec<usize> = by_weight.get(&(k + 1)).cloned().unwrap_or_default();
            let cols: Vec<Vec<Q>> = lines.iter().map(|&b| self.bracket(e, &self.basis_vector::<Q>(b))).collect();
            let m = Mat::from_fn(target.len(), lines.len(), |r, c| cols[c][target[r]].clone());
            let ker = if target.is_empty() {
                (0..lines.len())
                    .map(|i| (0..lines.len()).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
                    .collect()
            } else {
                kernel(&m)
            };
            for v in ker {
                let mut x = vec![Q::zero(); self.dim()];
                for (c, &b) in lines.iter().enumerate() {
                    x[b] = v[c].clone();
                }
                out.push((*k, x));
            }
        }
        out
    }

    /// `Ad(exp y) x = Σ (ad y)^k x / k!` for `ad y` nilpotent.
    pub fn ad_exp<R: Scalar>(&self, y: &[R], x: &[R]) -> Vec<R> {
        let mut acc = x.to_vec();
        let mut term = x.to_vec();
        for k in 1..=(2 * self.coxeter_number + 1) {
            let inv = qf(1, k);
            term = self.bracket(y, &term).iter().map(|t| t.scale(&inv)).collect();
            if term.iter().all(|v| v.is_zero()) {
                return acc;
            }
            for (a, t) in acc.iter_mut().zip(&term) {
                *a = a.add(t);
            }
        }
        panic!("ad y is not nilpotent");
    }

    pub fn exponents(&self) -> Vec<i64> {
        let t = self.principal_triple();
        self.graded_centralizer(&t.e, &t.h_coroot).into_iter().map(|(k, _)| k).collect()
    }

    pub fn fundamental_degrees(&self) -> Degrees {
        Degrees(self.exponents().into_iter().map(|k| (k + 1) as u32).collect())
    }

    pub fn is_regular_semisimple(&self, x: &[Q]) -> bool {
        let ad = self.ad_matrix(x);
        if self.dim() - rank(&ad) != self.rank() {
            return false;
        }
        let cp = QPoly::new(ad.char_poly().into_iter().rev().collect());
        cp.squarefree_part().eval_mat(&ad).is_zero()
    }

    /// The affine Cartan matrix with node 0 first.
    pub fn affine_cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        let theta = self.theta().to_vec();
        let tc = self.coroot(&theta);
        let mut m = vec![vec![0i64; l + 1]; l + 1];
        m[0][0] = 2;
        for j in 0..l {
            let mut aj = vec![0; l];
            aj[j] = 1;
            let v: Q = (0..l).map(|i| &tc[i] * q(self.pair_simple_coroot(i, &aj))).sum();
            m[0][j + 1] = -to_i64(&v).unwrap();
            m[j + 1][0] = -self.pair_simple_coroot(j, &theta);
            for i in 0..l {
                m[i + 1][j + 1] = self.cartan_matrix[i][j];
            }
        }
        m
    }

    pub fn summary(&self) -> RootDatumSummary {
        RootDatumSummary {
            cartan_type: self.cartan.to_string(),
            rank: self.rank(),
            dimension: self.dim(),
            cartan_matrix: self.cartan_matrix.clone(),
            positive_roots: self.pos_roots.clone(),
            highest_root: self.theta().to_vec(),
            kac_labels: self.kac_labels.clone(),
            coxeter_number: self.coxeter_number,
            degrees: self.fundamental_degrees().0,
        }
    }
}

fn pivot_ratio(x: &Sparse, base: &Sparse) -> Q {
    let (k, v) = base.iter().next().expect("nonzero basis matrix");
    x.get(k).cloned().unwrap_or_else(Q::zero) / v
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let l = a.len();
    let mut d: Vec<Option<Q>> = vec![None; l];
    d[0] = Some(Q::one());
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..l {
            for j in 0..l {
                if a[i][j] != 0 && d[i].is_some() && d[j].is_none() {
                    // dᵢ a_ij = dⱼ a_ji
                    d[j] = Some(d[i].clone().unwrap() * q(a[i][j]) / q(a[j][i]));
                    changed = true;
                }
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.unwrap()).collect();
    let min = d.iter().min().unwrap().clone();
    d.iter().map(|x| to_i64(&(x / &min)).unwrap()).collect()
}

/// Positive roots by height then lexicographic order, via root strings.
pub(crate) fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = a.len();
    let mut layers: Vec<Vec<Vec<i64>>> = vec![(0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect()];
    let mut all: std::collections::HashSet<Vec<i64>> = layers[0].iter().cloned().collect();
    loop {
        let mut next = std::collections::BTreeSet::new();
        for beta in layers.last().unwrap() {
            for i in 0..l {
                let mut down = beta.clone();
                let mut p = 0;
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..l).map(|j| a[i][j] * beta[j]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        layers.push(next.into_iter().collect());
    }
    layers.into_iter().flatten().collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootDatumSummary {
    pub cartan_type: String,
    pub rank: usize,
    pub dimension: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub kac_labels: Vec<i64>,
    pub coxeter_number: i64,
    pub degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalTriple {
    pub e: Vec<Q>,
    pub h: Vec<Q>,
    pub f: Vec<Q>,
    /// `h = Σ cᵢ Hᵢ`; `e = Σ cᵢ Eᵢ`.
    pub h_coroot: Vec<Q>,
}

impl PrincipalTriple {
    pub fn check(&self, rd: &RootDatum) -> bool {
        let two = q(2);
        rd.bracket(&self.h, &self.e) == self.e.iter().map(|x| x * &two).collect::<Vec<_>>()
            && rd.bracket(&self.h, &self.f) == self.f.iter().map(|x| -x * &two).collect::<Vec<_>>()
            && rd.bracket(&self.e, &self.f) == self.h
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Degrees(pub Vec<u32>);

impl Degrees {
    pub fn check(&self, rd: &RootDatum) -> bool {
        let sum: u32 = self.0.iter().map(|d| 2 * d - 1).sum();
        sum as usize == rd.dim() && *self.0.last().unwrap() as i64 == rd.coxeter_number
    }
}

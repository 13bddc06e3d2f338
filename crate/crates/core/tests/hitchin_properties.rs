use std::sync::Arc;

use loopalg::affine::Parahoric;
use loopalg::hitchin::{
    chevalley_map, hitchin_bounds, kostant_section, residue_diagram, torus_invariant_generator, verify_containment,
    verify_surjectivity, Generator, InvariantSystem, KostantSlice,
};
use loopalg::laurent::{LaurentPoly, TwistedElement};
use loopalg::linalg::Mat;
use loopalg::rootdata::RootDatum;
use loopalg::scalar::{q, qf, Scalar, Q};
use loopalg::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TYPES: [&str; 6] = ["A1", "A2", "A3", "A4", "C2", "G2"];

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    qf(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Q> {
    (0..dim).map(|_| random_q(rng)).collect()
}

fn det(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &a[c][k] * &f;
                a[r][k] -= v;
            }
        }
    }
    d
}

/// Coefficient of `λ^{N-k}` in `det(λ - X)`: `(-1)^k` times the sum of the
/// principal `k × k` minors.
fn char_coeff(m: &Mat<Q>, k: usize) -> Q {
    let n = m.rows;
    let mut total = Q::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        total += det(idx.iter().map(|&r| idx.iter().map(|&c| m.get(r, c).clone()).collect()).collect());
    }
    if k % 2 == 1 {
        -total
    } else {
        total
    }
}

fn trace_power(m: &Mat<Q>, k: usize) -> Q {
    let mut p = m.clone();
    for _ in 1..k {
        p = p.mul(m);
    }
    (0..m.rows).map(|i| p.get(i, i).clone()).sum()
}

fn oracle_invariants(inv: &InvariantSystem, x: &[Q]) -> Vec<Q> {
    let m = inv.rd.to_matrix(x);
    inv.generators
        .iter()
        .map(|g| match *g {
            Generator::CharPoly(k) => char_coeff(&m, k),
            Generator::TracePower(k) => trace_power(&m, k),
        })
        .collect()
}

/// A random nilpotent: a combination of positive root lines.
fn random_nilpotent(rng: &mut ChaCha8Rng, rd: &RootDatum) -> Vec<Q> {
    let mut y = vec![Q::zero(); rd.dim()];
    for k in 0..rd.num_pos() {
        y[rd.idx_e(k)] = random_q(rng);
    }
    y
}

#[test]
fn invariants_match_minor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for name in TYPES {
        let inv = InvariantSystem::from_name(name).unwrap();
        for _ in 0..5 {
            let x = random_element(&mut rng, inv.rd.dim());
            assert_eq!(inv.eval(&x), oracle_invariants(&inv, &x), "{name}");
        }
    }
}

#[test]
fn invariants_are_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for name in TYPES {
        let inv = InvariantSystem::from_name(name).unwrap();
        let rd = inv.rd.clone();
        for _ in 0..20 {
            let x = random_element(&mut rng, rd.dim());
            let y = random_element(&mut rng, rd.dim());
            assert!(inv.invariance_defect(&y, &x).iter().all(Q::is_zero), "{name}");
            let n = random_nilpotent(&mut rng, &rd);
            assert_eq!(inv.eval(&rd.ad_exp(&n, &x)), inv.eval(&x), "{name}");
        }
    }
}

#[test]
fn invariants_are_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in TYPES {
        let inv = InvariantSystem::from_name(name).unwrap();
        let x = random_element(&mut rng, inv.rd.dim());
        assert_eq!(inv.jacobian_rank(&x), inv.rd.rank(), "{name}");
        let t = inv.rd.principal_triple();
        let mut cyclic = t.f.clone();
        cyclic[inv.rd.e_theta()] = Q::one();
        assert_eq!(inv.jacobian_rank(&cyclic), inv.rd.rank(), "{name}");
        // the nilpotent cone is singular at 0
        assert_eq!(inv.jacobian_rank(&vec![Q::zero(); inv.rd.dim()]), 0);
    }
}

#[test]
fn chevalley_map_is_invariant_over_the_disc() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for name in ["A1", "A2", "C2"] {
        let inv = InvariantSystem::from_name(name).unwrap();
        let rd = inv.rd.clone();
        let p = Parahoric::iwahori(rd.clone());
        let perp = p.orthogonal_lattice(1).unwrap();
        for _ in 0..5 {
            let x: Vec<LaurentPoly> = perp
                .orders
                .iter()
                .map(|&o| LaurentPoly::from_terms((o..o + 3).map(|k| (k, q(rng.gen_range(-3..=3))))))
                .collect();
            // y ∈ 𝔫 ⊗ 𝒪 with polynomial coefficients
            let mut y = vec![LaurentPoly::zero(); rd.dim()];
            for k in 0..rd.num_pos() {
                y[rd.idx_e(k)] = LaurentPoly::from_terms((0..2).map(|j| (j, q(rng.gen_range(-2..=2)))));
            }
            let before = chevalley_map(&inv, &TwistedElement::new(x.clone(), 1)).unwrap();
            let after = chevalley_map(&inv, &TwistedElement::new(rd.ad_exp(&y, &x), 1)).unwrap();
            assert_eq!(before, after, "{name}");
        }
    }
}

#[test]
fn kostant_section_inverts_the_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in TYPES {
        let inv = InvariantSystem::from_name(name).unwrap();
        let slice = KostantSlice::new(&inv, inv.rd.principal_triple()).unwrap();
        for _ in 0..10 {
            let c: Vec<Q> = (0..inv.rd.rank()).map(|_| random_q(&mut rng)).collect();
            let x = kostant_section(&slice, &c);
            assert_eq!(oracle_invariants(&inv, &x), c, "{name}");
            // the slice directions commute with e
            let rd = &inv.rd;
            assert_eq!(rd.bracket(&slice.triple.e, &slice.element(&c)), rd.bracket(&slice.triple.e, &slice.triple.f));
        }
        let zero = vec![Q::zero(); inv.rd.rank()];
        assert_eq!(kostant_section(&slice, &zero), slice.triple.f);
        assert!(inv.eval(&slice.triple.f).iter().all(Q::is_zero));
    }
}

#[test]
fn slice_normalizations() {
    let kappa = |name: &str| {
        let inv = InvariantSystem::from_name(name).unwrap();
        KostantSlice::new(&inv, inv.rd.principal_triple()).unwrap().kappa
    };
    assert_eq!(kappa("A1"), vec![q(-1)]);
    assert_eq!(kappa("A2"), vec![q(-2), q(-1)]);
    assert_eq!(kappa("C2"), vec![qf(-5, 2), q(1)]);
    assert_eq!(kappa("G2"), vec![qf(-28, 3), q(-4)]);
}

#[test]
fn a1_values() {
    let inv = InvariantSystem::from_name("A1").unwrap();
    let rd = inv.rd.clone();
    let lp = |idx: usize| rd.basis_vector::<Q>(idx).into_iter().map(LaurentPoly::constant).collect::<Vec<_>>();
    let h = chevalley_map(&inv, &TwistedElement::new(lp(rd.idx_h(0)), 1)).unwrap();
    assert_eq!(h.components, vec![LaurentPoly::constant(q(-1))]);
    let e = chevalley_map(&inv, &TwistedElement::new(lp(rd.idx_e(0)), 1)).unwrap();
    assert!(e.components[0].is_zero());
    assert!(matches!(chevalley_map(&inv, &TwistedElement::new(lp(rd.idx_h(0)), 0)), Err(Error::Precondition(_))));
}

#[test]
fn bounds() {
    let a1 = Arc::new(RootDatum::from_name("A1").unwrap());
    let iw = Parahoric::iwahori(a1.clone());
    assert_eq!(hitchin_bounds(&iw, 1).bounds.bounds, vec![2]);
    assert_eq!(hitchin_bounds(&iw, 2).bounds.bounds, vec![3]);
    assert_eq!(hitchin_bounds(&Parahoric::hyperspecial(a1), 2).bounds.bounds, vec![4]);
    for name in TYPES {
        let rd = Arc::new(RootDatum::from_name(name).unwrap());
        let p = Parahoric::iwahori(rd.clone());
        let degrees = rd.fundamental_degrees().0;
        assert_eq!(hitchin_bounds(&p, 1).bounds.bounds, degrees.iter().map(|&d| d as i64).collect::<Vec<_>>());
        for n in 0..4 {
            let (lo, hi) = (hitchin_bounds(&p, n).bounds, hitchin_bounds(&p, n + 1).bounds);
            assert!(hi.bounds.iter().zip(&lo.bounds).all(|(a, b)| a >= b), "{name} n={n}");
        }
    }
}

#[test]
fn containment_small_sweeps() {
    for name in ["A1", "A2", "C2"] {
        let inv = InvariantSystem::from_name(name).unwrap();
        for p in [Parahoric::iwahori(inv.rd.clone()), Parahoric::hyperspecial(inv.rd.clone())] {
            for n in 1..=2 {
                let r = verify_containment(&inv, &p, n, 20, 9, 1).unwrap();
                assert!(r.passed(), "{name} {:?} n={n}", p.kac_coords);
            }
        }
    }
}

#[test]
fn surjectivity_on_every_principal_parahoric() {
    for name in ["A1", "A2", "A3", "C2", "G2"] {
        let inv = InvariantSystem::from_name(name).unwrap();
        let l = inv.rd.rank() + 1;
        for mask in 1u32..(1 << l) {
            let s: Vec<i64> = (0..l).map(|i| (mask >> i & 1) as i64).collect();
            let p = Parahoric::new(inv.rd.clone(), &s).unwrap();
            let r = verify_surjectivity(&inv, &p, 3, 11, 1);
            if p.is_principal() {
                assert!(r.unwrap().passed(), "{name} {s:?}");
            } else {
                assert!(matches!(r, Err(Error::Precondition(_))), "{name} {s:?}");
            }
        }
    }
}

#[test]
fn residue_square_preconditions() {
    let inv = InvariantSystem::from_name("A2").unwrap();
    let hs = Parahoric::hyperspecial(inv.rd.clone());
    assert!(matches!(residue_diagram(&inv, &hs, 5, 0, 1), Err(Error::Precondition(_))));
    assert!(residue_diagram(&inv, &Parahoric::iwahori(inv.rd.clone()), 10, 0, 1).unwrap().passed());
}

#[test]
fn torus_invariant_generator_is_the_marks() {
    for name in ["A1", "A2", "A3", "B3", "C2", "C3", "D4", "G2"] {
        let rd = Arc::new(RootDatum::from_name(name).unwrap());
        let gen = torus_invariant_generator(&Parahoric::iwahori(rd.clone())).unwrap();
        assert_eq!(gen.exponents, rd.kac_labels, "{name}");
        assert_eq!(gen.degree, rd.coxeter_number);
    }
}

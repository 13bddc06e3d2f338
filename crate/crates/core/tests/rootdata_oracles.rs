use loopalg::rootdata::{CartanType, Family, RootDatum};
use loopalg::scalar::{q, Scalar, Q};
use loopalg::Error;
use proptest::prelude::*;

const TYPES: [&str; 14] = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2"];

fn rd(name: &str) -> RootDatum {
    RootDatum::from_name(name).unwrap()
}

/// Degrees of the basic invariants from the classification tables.
fn table_degrees(family: Family, l: u32) -> Vec<u32> {
    let mut d: Vec<u32> = match family {
        Family::A => (2..=l + 1).collect(),
        Family::B | Family::C => (1..=l).map(|i| 2 * i).collect(),
        Family::D => (1..l).map(|i| 2 * i).chain([l]).collect(),
        Family::G => vec![2, 6],
    };
    d.sort();
    d
}

fn table_coxeter(family: Family, l: i64) -> i64 {
    match family {
        Family::A => l + 1,
        Family::B | Family::C => 2 * l,
        Family::D => 2 * l - 2,
        Family::G => 6,
    }
}

/// Marks of the affine diagram (including the node 0 mark), sorted.
fn table_marks(family: Family, l: usize) -> Vec<i64> {
    let mut m: Vec<i64> = match family {
        Family::A => vec![1; l + 1],
        Family::B => [vec![1, 1], vec![2; l - 1]].concat(),
        Family::C => [vec![1, 1], vec![2; l - 1]].concat(),
        Family::D => [vec![1; 4], vec![2; l - 3]].concat(),
        Family::G => vec![1, 2, 3],
    };
    m.sort();
    m
}

#[test]
fn classification_tables() {
    for name in TYPES {
        let r = rd(name);
        let (fam, l) = (r.cartan.family, r.rank());
        let mut deg = r.fundamental_degrees().0;
        deg.sort();
        assert_eq!(deg, table_degrees(fam, l as u32), "{name}");
        assert_eq!(r.coxeter_number, table_coxeter(fam, l as i64), "{name}");
        let mut marks = r.kac_labels.clone();
        marks.sort();
        assert_eq!(marks, table_marks(fam, l), "{name}");
        assert_eq!(r.kac_labels.iter().sum::<i64>(), r.coxeter_number);
        assert_eq!(r.dim() as i64, l as i64 * (r.coxeter_number + 1), "{name}");
        assert_eq!(r.num_pos() as i64 * 2, l as i64 * r.coxeter_number);
        assert!(r.fundamental_degrees().check(&r));
    }
}

#[test]
fn principal_triples() {
    for name in TYPES {
        let r = rd(name);
        let t = r.principal_triple();
        assert!(t.check(&r), "{name}");
        let exps = r.exponents();
        assert_eq!(exps.len(), r.rank());
        assert_eq!(exps[0], 1);
        assert_eq!(*exps.last().unwrap(), r.coxeter_number - 1);
    }
}

#[test]
fn regular_semisimple_examples() {
    for name in TYPES {
        let r = rd(name);
        let t = r.principal_triple();
        assert!(r.is_regular_semisimple(&t.h), "{name}");
        assert!(!r.is_regular_semisimple(&t.e), "{name}");
        assert!(!r.is_regular_semisimple(&vec![Q::zero(); r.dim()]));
        // f + e_θ is the standard cyclic element
        let mut x = t.f.clone();
        x[r.e_theta()] = Q::one();
        assert!(r.is_regular_semisimple(&x), "{name}");
    }
    let a3 = rd("A3");
    assert!(!a3.is_regular_semisimple(&a3.basis_vector::<Q>(a3.idx_h(0))));
    let a2 = rd("A2");
    assert!(a2.is_regular_semisimple(&a2.basis_vector::<Q>(a2.idx_h(0))));
    // h + e is conjugate to h
    let a1 = rd("A1");
    let mut x = a1.basis_vector::<Q>(a1.idx_h(0));
    x[a1.idx_e(0)] = q(1);
    assert!(a1.is_regular_semisimple(&x));
}

#[test]
fn unsupported_types() {
    assert!(matches!(RootDatum::from_name("E8"), Err(Error::UnsupportedType(_))));
    assert!(matches!(RootDatum::from_name("A0"), Err(Error::UnsupportedType(_))));
    assert!(matches!(RootDatum::from_name("G3"), Err(Error::UnsupportedType(_))));
    assert!(CartanType::new(Family::D, 2).is_err());
    assert!(!rd("B3").cartan.supports_invariants());
    assert!(rd("G2").cartan.supports_invariants());
}

#[test]
fn construction_is_deterministic() {
    for name in TYPES {
        assert_eq!(rd(name).summary(), rd(name).summary());
        assert_eq!(
            serde_json::to_string(&rd(name).summary()).unwrap(),
            serde_json::to_string(&rd(name).summary()).unwrap()
        );
    }
}

#[test]
fn dual_types() {
    for (name, dual) in [("A3", "A3"), ("B3", "C3"), ("C2", "B2"), ("G2", "G2"), ("D4", "D4")] {
        assert_eq!(rd(name).cartan.langlands_dual().0.to_string(), dual);
    }
}

fn lie_element(r: &RootDatum, seed: &[i64]) -> Vec<Q> {
    (0..r.dim()).map(|i| q(seed[i % seed.len()] * ((i as i64 * 7) % 5 - 2))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bracket_is_a_lie_bracket(
        ti in 0usize..TYPES.len(),
        a in prop::collection::vec(-3i64..=3, 1..6),
        b in prop::collection::vec(-3i64..=3, 1..6),
        c in prop::collection::vec(-3i64..=3, 1..6),
    ) {
        let r = rd(TYPES[ti]);
        let (x, y, z) = (lie_element(&r, &a), lie_element(&r, &b), lie_element(&r, &c));
        let neg: Vec<Q> = r.bracket(&y, &x).iter().map(|v| -v.clone()).collect();
        prop_assert_eq!(r.bracket(&x, &y), neg);
        let j1 = r.bracket(&x, &r.bracket(&y, &z));
        let j2 = r.bracket(&y, &r.bracket(&z, &x));
        let j3 = r.bracket(&z, &r.bracket(&x, &y));
        prop_assert!(j1.iter().zip(&j2).zip(&j3).all(|((p, q), s)| (p + q + s).is_zero()));
        // the matrix realization is a representation
        let lhs = r.to_matrix(&r.bracket(&x, &y));
        let rhs = r.to_matrix(&x).commutator(&r.to_matrix(&y));
        prop_assert_eq!(lhs, rhs);
        // and the trace form is invariant
        let l = r.trace_pairing(&r.bracket(&x, &y), &z);
        let rr = r.trace_pairing(&x, &r.bracket(&y, &z));
        prop_assert_eq!(l, rr);
    }
}

//! Acceptance suite: one line per criterion, exact arithmetic throughout,
//! wall-clock limits checked per criterion. Runs sequentially so the timings
//! are not distorted by sibling tests.

use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use loopalg::affine::Parahoric;
use loopalg::hitchin::{
    recorded_residue_scalar, residue_diagram, torus_invariant_generator, verify_containment, verify_n1_corollary,
    verify_surjectivity, InvariantSystem,
};
use loopalg::opers::{
    check_irregular_type, check_residue_rs, cyclic_ode, fg_connection, global_hitchin_base, global_oper_space,
    slope_certificate,
};
use loopalg::poly::QPoly;
use loopalg::rootdata::{CartanType, RootDatum};
use loopalg::scalar::{fmt_q, q, qf, Scalar, Q};

const TYPES: [&str; 6] = ["A1", "A2", "A3", "A4", "C2", "G2"];

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn datum(name: &str) -> Arc<RootDatum> {
    Arc::new(RootDatum::from_name(name).unwrap())
}

fn inv(name: &str) -> InvariantSystem {
    InvariantSystem::from_name(name).unwrap()
}

/// Kac coordinates strictly between the Iwahori and a vertex.
fn intermediate(name: &str) -> Vec<i64> {
    match name {
        "A1" => vec![0, 1],
        "A2" => vec![1, 1, 0],
        "A3" => vec![1, 0, 1, 0],
        "A4" => vec![1, 1, 0, 0, 0],
        "C2" => vec![0, 1, 0],
        "G2" => vec![0, 1, 0],
        _ => unreachable!(),
    }
}

fn jacobi_and_triples() -> Check {
    for name in TYPES {
        let rd = datum(name);
        let dim = rd.dim();
        let basis: Vec<Vec<Q>> = (0..dim).map(|i| rd.basis_vector(i)).collect();
        let brackets: Vec<Vec<Vec<Q>>> =
            (0..dim).map(|i| (0..dim).map(|j| rd.bracket(&basis[i], &basis[j])).collect()).collect();
        for a in 0..dim {
            for b in a + 1..dim {
                for c in b + 1..dim {
                    let s1 = rd.bracket(&basis[a], &brackets[b][c]);
                    let s2 = rd.bracket(&basis[b], &brackets[c][a]);
                    let s3 = rd.bracket(&basis[c], &brackets[a][b]);
                    let ok = (0..dim).all(|k| (&s1[k] + &s2[k] + &s3[k]).is_zero());
                    ensure(ok, || format!("{name}: Jacobi fails on ({a},{b},{c})"))?;
                }
            }
        }
        let degrees = rd.fundamental_degrees();
        let sum: u32 = degrees.0.iter().map(|d| 2 * d - 1).sum();
        ensure(sum as usize == dim, || format!("{name}: sum(2d-1) = {sum} != {dim}"))?;
        ensure(rd.principal_triple().check(&rd), || format!("{name}: sl2 relations fail"))?;
    }
    Ok("Jacobi on all basis triples, sum(2d_i-1) = dim, sl2 relations".into())
}

fn containment() -> Check {
    let mut count = 0;
    let mut boundary = Vec::new();
    for name in TYPES {
        let inv = inv(name);
        let rd = inv.rd.clone();
        let parahorics = [
            Parahoric::iwahori(rd.clone()),
            Parahoric::hyperspecial(rd.clone()),
            Parahoric::new(rd.clone(), &intermediate(name)).unwrap(),
        ];
        for p in &parahorics {
            for n in 0..=2 {
                let r = verify_containment(&inv, p, n, 100, 1000 + n as u64, 0).map_err(|e| e.to_string())?;
                ensure(r.passed(), || format!("{name} {:?} n={n}: {}", p.kac_coords, r.status))?;
                count += 1;
                if p.is_iwahori() && n == 2 {
                    boundary.push(format!(
                        "{name}:{:?}",
                        r.max_orders.iter().map(|o| o.unwrap_or(i64::MIN)).collect::<Vec<_>>()
                    ));
                }
            }
        }
    }
    Ok(format!("{count} sweeps x 100 samples, zero violations; Iwahori n=2 maxima {}", boundary.join(" ")))
}

fn surjectivity() -> Check {
    for name in TYPES {
        let inv = inv(name);
        let p = Parahoric::iwahori(inv.rd.clone());
        let r = verify_surjectivity(&inv, &p, 25, 2024, 0).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: boundary orders not all attained: {:?}", r.max_orders))?;
        let bounds: Vec<Option<i64>> =
            inv.degrees.iter().map(|&d| Some(d as i64 + (d as i64).div_euclid(p.m))).collect();
        ensure(r.max_orders == bounds, || format!("{name}: max orders {:?} vs {:?}", r.max_orders, bounds))?;
    }
    Ok("25 round trips per type land in p(2)^perp with chi(kappa(c)) = c; d_i + floor(d_i/m) attained".into())
}

fn standard_parahorics(rd: &Arc<RootDatum>) -> Vec<Parahoric> {
    let l = rd.rank() + 1;
    (1u32..(1 << l))
        .map(|mask| {
            let coords: Vec<i64> = (0..l).map(|i| i64::from((mask >> i) & 1)).collect();
            Parahoric::new(rd.clone(), &coords).unwrap()
        })
        .collect()
}

fn n1_corollary() -> Check {
    let mut total = 0;
    for name in TYPES {
        let inv = inv(name);
        for p in standard_parahorics(&inv.rd) {
            let r = verify_n1_corollary(&inv, &p, 11).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{name} {:?}: orders {:?}", p.kac_coords, r.max_orders))?;
            total += 1;
        }
    }
    Ok(format!("bound d_i attained through the Iwahori sublattice for all {total} standard parahorics"))
}

fn residue_square() -> Check {
    let mut scalars = Vec::new();
    for name in TYPES {
        let inv = inv(name);
        let p = Parahoric::iwahori(inv.rd.clone());
        let r = residue_diagram(&inv, &p, 50, 77, 0).map_err(|e| e.to_string())?;
        let recorded = recorded_residue_scalar(&inv.rd).ok_or_else(|| format!("{name}: no recorded scalar"))?;
        ensure(r.extra["scalar"] == fmt_q(&recorded), || {
            format!("{name}: scalar {} vs {}", r.extra["scalar"], fmt_q(&recorded))
        })?;
        scalars.push(format!("{name}={}", fmt_q(&recorded)));
    }
    Ok(format!("50 samples per type commute up to {}", scalars.join(" ")))
}

fn global_counts() -> Check {
    for name in TYPES {
        let t: CartanType = name.parse().unwrap();
        let s = global_oper_space(t).map_err(|e| e.to_string())?;
        ensure(s.dimension == 1 && s.basis_is_e_theta, || format!("{name}: oper space {s:?}"))?;
        let b = global_hitchin_base(t).map_err(|e| e.to_string())?;
        ensure(b.total == 1, || format!("{name}: Hitchin base {b:?}"))?;
    }
    Ok("oper space dim 1 spanned by e_theta; global Hitchin base dim 1".into())
}

fn fg_connections() -> Check {
    for name in TYPES {
        let t: CartanType = name.parse().unwrap();
        for a in [q(1), q(-2), qf(3, 5)] {
            let op = fg_connection(t, &a).map_err(|e| e.to_string())?;
            ensure(check_residue_rs(&op), || format!("{name} a={}: residue check", fmt_q(&a)))?;
            ensure(check_irregular_type(&op), || format!("{name} a={}: irregular type", fmt_q(&a)))?;
        }
        let cert = slope_certificate(&fg_connection(t, &q(1)).unwrap()).map_err(|e| e.to_string())?;
        ensure(cert.regular_semisimple && cert.pole_order == 1, || format!("{name}: certificate {cert:?}"))?;
    }
    // z y'' + y' - a y, by hand elimination of y1' = -a y2, y2' = -y1/z
    let t: CartanType = "A1".parse().unwrap();
    for a in [q(1), q(-2), qf(3, 5)] {
        let ode = cyclic_ode(&fg_connection(t, &a).unwrap()).map_err(|e| e.to_string())?;
        let expected = vec![QPoly::constant(-a.clone()), QPoly::one(), QPoly::var()];
        ensure(ode.polynomial_form() == expected, || format!("A1 a={}: {ode}", fmt_q(&a)))?;
    }
    Ok("residue and irregular-type checks for a in {1,-2,3/5}; slope 1/h certificates; A1 gives z y'' + y' - a y"
        .into())
}

fn invariant_generator() -> Check {
    for name in ["A1", "A2", "G2"] {
        let rd = datum(name);
        let g = torus_invariant_generator(&Parahoric::iwahori(rd.clone())).map_err(|e| e.to_string())?;
        ensure(g.exponents == rd.kac_labels, || format!("{name}: {:?} vs {:?}", g.exponents, rd.kac_labels))?;
        ensure(g.checked_up_to == 2 * rd.coxeter_number, || format!("{name}: checked to {}", g.checked_up_to))?;
    }
    Ok("generator exponents equal Kac labels for A1, A2, G2; lattice check to degree 2h".into())
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn cli(args: &[&str], golden: bool) -> (i32, Vec<u8>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_loopalg"));
    cmd.args(args).env_remove("LOOPALG_GOLDEN_BLESS");
    if golden {
        cmd.env("LOOPALG_GOLDEN_DIR", golden_dir());
    } else {
        cmd.env_remove("LOOPALG_GOLDEN_DIR");
    }
    let out = cmd.output().expect("run loopalg");
    (out.status.code().unwrap_or(-1), out.stdout)
}

pub const GOLDEN_COMMANDS: &[&[&str]] = &[
    &["degrees", "A2"],
    &["degrees", "G2"],
    &["kac", "--type", "G2", "--kac", "0,1,0"],
    &["grading", "--type", "A2", "--kac", "1,1,0"],
    &["hitchin-image", "--type", "A1", "--kac", "1,1", "--n", "2"],
    &["verify", "size-of-image", "--type", "A1", "--kac", "1,1", "--n", "2", "--samples", "100", "--seed", "7"],
    &["verify", "size-of-image", "--type", "G2", "--n", "0", "--samples", "20", "--seed", "3"],
    &["verify", "surjectivity", "--type", "C2", "--kac", "1,0,0", "--samples", "25", "--seed", "1"],
    &["verify", "surjectivity", "--type", "A2", "--samples", "25", "--seed", "5"],
    &["verify", "residue-diagram", "--type", "A2", "--samples", "50", "--seed", "9"],
    &["verify", "global-oper", "--type", "A2"],
    &["verify", "invariant-generator", "--type", "G2"],
    &["fg", "A1", "1"],
    &["fg", "A1", "0"],
    &["fg", "G2", "2/3"],
    &["oper-space", "C2"],
    &["hitchin-base", "G2"],
];

fn determinism() -> Check {
    for args in GOLDEN_COMMANDS {
        let (c1, o1) = cli(args, false);
        let (c2, o2) = cli(args, false);
        ensure(c1 == 0 && c2 == 0, || format!("{args:?}: exit codes {c1}, {c2}"))?;
        ensure(o1 == o2, || format!("{args:?}: outputs differ between runs"))?;
        let (cg, _) = cli(args, true);
        ensure(cg == 0, || format!("{args:?}: golden comparison exit {cg}"))?;
    }
    let base = ["verify", "size-of-image", "--type", "A3", "--n", "1", "--samples", "40", "--seed", "5"];
    let (_, one) = cli(&[&base[..], &["--jobs", "1"]].concat(), false);
    let (_, four) = cli(&[&base[..], &["--jobs", "4"]].concat(), false);
    ensure(one == four, || "output depends on --jobs".into())?;
    Ok(format!(
        "{} commands byte-identical across runs and equal to golden files; --jobs invariant",
        GOLDEN_COMMANDS.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Option<u64>); 9] = [
        ("1 root data", jacobi_and_triples, Some(10)),
        ("2 size of image", containment, Some(120)),
        ("3 surjectivity", surjectivity, Some(60)),
        ("4 n=1 corollary", n1_corollary, Some(60)),
        ("5 residue square", residue_square, None),
        ("6 global counts", global_counts, None),
        ("7 FG connection", fg_connections, None),
        ("8 invariant generator", invariant_generator, Some(10)),
        ("9 determinism", determinism, None),
    ];
    let mut failures = 0;
    for (label, run, limit) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => Err(format!("took {elapsed:.2?}, limit {s}s")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS [{label}] {elapsed:.2?}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL [{label}] {elapsed:.2?}: {detail}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}

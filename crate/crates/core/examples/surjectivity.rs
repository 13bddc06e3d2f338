//! Explicit preimages under the Hitchin map: elements of the dual lattice at
//! level 2 whose invariants are prescribed and reach every pole-order bound.
//!
//! `cargo run --release --example surjectivity -- A3 1,0,1,0`

use std::sync::Arc;

use loopalg::affine::Parahoric;
use loopalg::hitchin::{chevalley_map, surjectivity_witness, verify_surjectivity, InvariantSystem, KostantSlice};
use loopalg::laurent::{LaurentPoly, TwistedElement};
use loopalg::rootdata::RootDatum;
use loopalg::scalar::q;
use loopalg::Scalar;

fn main() -> loopalg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map_or("A3", String::as_str);
    let inv = InvariantSystem::new(Arc::new(RootDatum::from_name(name)?))?;
    let rd = inv.rd.clone();
    let p = match args.get(1) {
        Some(s) => Parahoric::new(rd.clone(), &Parahoric::parse_coords(s)?)?,
        None => Parahoric::iwahori(rd.clone()),
    };
    let Some(triple) = p.twisted_triple() else {
        println!("{name} {:?} has no regular nilpotent in degree 1", p.kac_coords);
        return Ok(());
    };
    let slice = KostantSlice::new(&inv, triple)?;
    let c: Vec<LaurentPoly> =
        (0..rd.rank()).map(|i| LaurentPoly::from_terms([(0, q(1)), (1, q(i as i64 + 2))])).collect();
    let (xi, targets) = surjectivity_witness(&inv, &p, &slice, &c)?;
    println!("{name} {:?}: witness", p.kac_coords);
    for (idx, v) in xi.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        println!("  {:<12} {v}", rd.line_name(idx));
    }
    let value = chevalley_map(&inv, &TwistedElement::new(xi.clone(), 1))?;
    for ((got, want), d) in value.components.iter().zip(&targets).zip(&inv.degrees) {
        println!("  degree {d}: {got}   (target {want})");
    }
    println!("  in p(2)^⊥: {}", p.orthogonal_lattice(2)?.contains(&xi)?);
    let report = verify_surjectivity(&inv, &p, 20, 0, 0)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}

//! Moy–Prasad lattices of a parahoric and their duals under the residue pairing.
//!
//! `cargo run --example parahoric_lattices -- A2 1,1,0`

use std::sync::Arc;

use loopalg::affine::Parahoric;
use loopalg::rootdata::RootDatum;

fn main() -> loopalg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map_or("A2", String::as_str);
    let rd = Arc::new(RootDatum::from_name(name)?);
    let p = match args.get(1) {
        Some(s) => Parahoric::new(rd.clone(), &Parahoric::parse_coords(s)?)?,
        None => Parahoric::iwahori(rd.clone()),
    };
    println!("{name} parahoric {:?}, m = {}", p.kac_coords, p.m);
    let levels: Vec<i64> = (-1..=3).collect();
    print!("{:<12}", "line");
    for n in &levels {
        print!(" p({n:>2}) p({n:>2})^⊥");
    }
    println!();
    let duals: Vec<_> = levels.iter().map(|&n| p.orthogonal_lattice(n)).collect::<Result<_, _>>()?;
    for idx in 0..rd.dim() {
        print!("{:<12}", rd.line_name(idx));
        for (n, perp) in levels.iter().zip(&duals) {
            print!(" {:>5} {:>8}", p.line_order(idx, *n), perp.orders[idx]);
        }
        println!();
    }
    for (i, j) in [(0, 1), (1, 1), (1, 2)] {
        println!("[p({i}), p({j})] ⊆ p({}): {}", i + j, p.bracket_compatible(i, j));
    }
    Ok(())
}

//! Pole-order bounds for the Hitchin image of a dual Moy–Prasad lattice,
//! checked on random lattice elements.
//!
//! `cargo run --release --example hitchin_image -- C2 1,1,1 100`

use std::sync::Arc;

use loopalg::affine::Parahoric;
use loopalg::hitchin::{hitchin_bounds, verify_containment, InvariantSystem};
use loopalg::rootdata::RootDatum;

fn main() -> loopalg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map_or("C2", String::as_str);
    let inv = InvariantSystem::new(Arc::new(RootDatum::from_name(name)?))?;
    let p = match args.get(1) {
        Some(s) => Parahoric::new(inv.rd.clone(), &Parahoric::parse_coords(s)?)?,
        None => Parahoric::iwahori(inv.rd.clone()),
    };
    let samples = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(100);
    println!("{name} {:?}, degrees {:?}, generators {:?}", p.kac_coords, inv.degrees, inv.generators);
    for n in 0..=3 {
        let bounds = hitchin_bounds(&p, n).bounds;
        let report = verify_containment(&inv, &p, n, samples, 0, 0)?;
        println!(
            "n={n}: bounds {:?}  observed {:?}  {}",
            bounds.bounds,
            report.max_orders.iter().map(|o| o.unwrap_or(i64::MIN)).collect::<Vec<_>>(),
            report.status
        );
    }
    Ok(())
}

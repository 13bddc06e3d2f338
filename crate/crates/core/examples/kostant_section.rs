//! The Kostant slice f + ker(ad e) as an exact section of the invariants.
//!
//! `cargo run --example kostant_section`

use loopalg::hitchin::{kostant_section, InvariantSystem, KostantSlice};
use loopalg::scalar::{fmt_q, qf};

fn main() -> loopalg::Result<()> {
    for name in ["A1", "A2", "A3", "C2", "G2"] {
        let inv = InvariantSystem::from_name(name)?;
        let slice = KostantSlice::new(&inv, inv.rd.principal_triple())?;
        let kappa: Vec<String> = slice.kappa.iter().map(fmt_q).collect();
        println!("{name}: degrees {:?}, linear coefficients {kappa:?}", slice.degrees);
        for (i, p) in slice.psi.iter().enumerate() {
            println!("  x{i} = {p}");
        }
        let c: Vec<_> = (0..inv.rd.rank()).map(|i| qf(2 * i as i64 - 1, 3)).collect();
        let x = kostant_section(&slice, &c);
        let back: Vec<String> = inv.eval(&x).iter().map(fmt_q).collect();
        println!("  chi(section({:?})) = {back:?}", c.iter().map(fmt_q).collect::<Vec<_>>());
    }
    Ok(())
}

//! Root data, degrees and principal triples for the supported types.
//!
//! `cargo run --example root_data`

use loopalg::rootdata::RootDatum;

fn main() -> loopalg::Result<()> {
    println!("{:<4} {:>4} {:>4} {:>3}  {:<16} {:<16} marks", "type", "rank", "dim", "h", "degrees", "exponents");
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "D5", "G2"] {
        let rd = RootDatum::from_name(name)?;
        let s = rd.summary();
        println!(
            "{:<4} {:>4} {:>4} {:>3}  {:<16} {:<16} {:?}",
            s.cartan_type,
            s.rank,
            s.dimension,
            s.coxeter_number,
            format!("{:?}", s.degrees),
            format!("{:?}", rd.exponents()),
            s.kac_labels
        );
        assert!(rd.principal_triple().check(&rd));
    }

    let g2 = RootDatum::from_name("G2")?;
    println!("\nG2 positive roots (simple-root coordinates):");
    for (k, root) in g2.pos_roots.iter().enumerate() {
        println!("  {:<8} {:?}", g2.line_name(g2.idx_e(k)), root);
    }
    println!("highest root {:?}", g2.theta());
    let (dual, perm) = g2.cartan.langlands_dual();
    println!("dual type {dual}, node permutation {perm:?}");
    Ok(())
}

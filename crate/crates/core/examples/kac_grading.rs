//! The grading of the finite algebra attached to each standard parahoric,
//! and which gradings carry a regular nilpotent in degree 1.
//!
//! `cargo run --example kac_grading -- G2`

use std::sync::Arc;

use loopalg::affine::Parahoric;
use loopalg::rootdata::RootDatum;

fn main() -> loopalg::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rd = Arc::new(RootDatum::from_name(&name)?);
    let nodes = rd.rank() + 1;
    println!("{name}: marks {:?}", rd.kac_labels);
    for mask in 1u32..(1 << nodes) {
        let s: Vec<i64> = (0..nodes).map(|i| i64::from(mask >> i & 1)).collect();
        let p = Parahoric::new(rd.clone(), &s)?;
        let g = p.kac_grading()?;
        let dims: Vec<usize> = g.pieces.values().map(Vec::len).collect();
        let witness = p.principal_witness().map(|w| format!("{w:?}")).unwrap_or_else(|| "-".into());
        println!(
            "{:?}  m={}  levi={:>2}  piece dims {:?}  principal={}  {}",
            s,
            p.m,
            p.levi_dimension(),
            dims,
            p.is_principal(),
            witness
        );
    }
    Ok(())
}

//! Gauge transformations of opers and Drinfeld–Sokolov reduction to the
//! canonical form z^k f + v with v in ker(ad e).
//!
//! `cargo run --example opers_reduction`

use loopalg::laurent::LaurentPoly;
use loopalg::opers::{fg_connection, gauge, gauge_reduce, OperFrame};
use loopalg::scalar::q;
use loopalg::Scalar;

fn main() -> loopalg::Result<()> {
    let op = fg_connection("A2".parse()?, &q(1))?;
    let rd = op.rd.clone();
    let frame = OperFrame::new(rd.clone());

    // move it off the canonical form with an upper-triangular gauge
    let mut y = vec![LaurentPoly::zero(); rd.dim()];
    y[rd.idx_e(0)] = LaurentPoly::from_terms([(0, q(1)), (1, q(2))]);
    y[rd.idx_e(2)] = LaurentPoly::t_pow(-1);
    let moved = gauge(&op, &y);
    println!("gauged (canonical: {}):", moved.canonical);
    show(&rd, &moved.matrix);

    let reduced = gauge_reduce(&moved)?;
    println!("reduced (canonical: {}):", reduced.canonical);
    show(&rd, &reduced.matrix);
    println!("equal to the original: {}", reduced == op);
    for ((k, _), v) in frame.slice.iter().zip(reduced.slice_coordinates().unwrap()) {
        println!("  slice coordinate of degree {}: {v}", k + 1);
    }
    Ok(())
}

fn show(rd: &loopalg::rootdata::RootDatum, m: &[LaurentPoly]) {
    for (idx, p) in m.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
        println!("  {:<10} {p}", rd.line_name(idx));
    }
}

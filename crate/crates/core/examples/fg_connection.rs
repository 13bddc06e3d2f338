//! The connection d + (f/z + a e_theta)dz: its behaviour at 0 and infinity,
//! a slope certificate and the scalar equation of a cyclic vector.
//!
//! `cargo run --example fg_connection -- G2 1`

use loopalg::opers::{
    check_irregular_type, check_residue_rs, cyclic_ode, fg_connection, infinity_orders, slope_certificate,
};
use loopalg::scalar::parse_q;

fn main() -> loopalg::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cartan = args.first().map_or("G2", String::as_str).parse()?;
    let a = parse_q(args.get(1).map_or("1", String::as_str))?;
    let op = fg_connection(cartan, &a)?;
    println!("{cartan}: connection on the dual {}", op.rd.cartan);
    println!("regular singularity at 0 with residue f: {}", check_residue_rs(&op));
    println!("within the bounds at infinity: {}", check_irregular_type(&op));
    for (d, ord, bound) in infinity_orders(&op)? {
        println!("  degree {d}: order {ord:?}, bound {bound}");
    }
    match slope_certificate(&op) {
        Ok(c) => println!(
            "slope {} via t = u^{}, gauge u^{}, leading term regular semisimple: {}",
            c.slope, c.pullback_degree, c.gauge_exponent, c.regular_semisimple
        ),
        Err(e) => println!("no certificate: {e}"),
    }
    let ode = cyclic_ode(&op)?;
    println!("order {} equation: {ode}", ode.order());
    println!("irregularity at 0: {}, at infinity: {}", ode.irregularity_at_zero(), ode.irregularity_at_infinity());
    Ok(())
}

//! Opers on the projective line with the prescribed singularities, and the
//! matching Hitchin base: both are one-dimensional.
//!
//! `cargo run --example global_counts`

use loopalg::opers::{global_hitchin_base, global_oper_space};

fn main() -> loopalg::Result<()> {
    for name in ["A1", "A2", "A3", "A4", "B2", "C2", "G2"] {
        let cartan = name.parse()?;
        let space = global_oper_space(cartan)?;
        let base = global_hitchin_base(cartan)?;
        println!(
            "{name} (dual {}): opers dim {} spanned by e_theta: {};  base degrees {:?} -> dims {:?}, total {}",
            space.dual_type,
            space.dimension,
            space.basis_is_e_theta,
            base.line_bundle_degrees,
            base.dimensions,
            base.total
        );
    }
    Ok(())
}

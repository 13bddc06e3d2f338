//! Residues of Iwahori dual-lattice elements: the invariant monomial in the
//! residue pairings against the degree-1 piece, and the leading coefficients
//! of the Hitchin components, agree up to one scalar per type.
//!
//! `cargo run --release --example residue_square`

use std::sync::Arc;

use loopalg::affine::Parahoric;
use loopalg::hitchin::{recorded_residue_scalar, residue_diagram, torus_invariant_generator, InvariantSystem};
use loopalg::rootdata::RootDatum;
use loopalg::scalar::fmt_q;

fn main() -> loopalg::Result<()> {
    for name in ["A1", "A2", "A3", "A4", "C2", "G2"] {
        let inv = InvariantSystem::new(Arc::new(RootDatum::from_name(name)?))?;
        let p = Parahoric::iwahori(inv.rd.clone());
        let gen = torus_invariant_generator(&p)?;
        let report = residue_diagram(&inv, &p, 50, 1, 0)?;
        println!(
            "{name}: invariant monomial exponents {:?} (degree {}), scalar {} (recorded {}), {}",
            gen.exponents,
            gen.degree,
            report.extra["scalar"].as_str().unwrap_or("?"),
            recorded_residue_scalar(&inv.rd).map(|s| fmt_q(&s)).unwrap_or_default(),
            report.status
        );
    }
    Ok(())
}

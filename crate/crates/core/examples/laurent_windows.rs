//! Exact Laurent polynomials with known-coefficient windows.
//!
//! `cargo run --example laurent_windows`

use loopalg::laurent::{laurent_arith, pole_order, ArithOp, LaurentPoly, TwistedElement};
use loopalg::scalar::q;
use loopalg::Scalar;

fn main() -> loopalg::Result<()> {
    let t = LaurentPoly::t_pow;
    let f = t(-1).add(&t(0));
    println!("({f}) * t = {}", f.mul(&t(1)));
    println!("val(t^3 - t^5) = {:?}", t(3).sub(&t(5)).valuation()?);

    // t^-2 + ... known on [-2, 2], times 1 + ... known on [0, 3]
    let a = LaurentPoly::parse("t^-2 + 3*t + O(t^3)")?;
    let b = LaurentPoly::truncated([(0, q(1)), (3, q(-2))], 0, 3)?;
    let prod = laurent_arith(&a, &b, ArithOp::Mul)?;
    println!("({a}) * ({b}) = {prod}   window {:?}", prod.window());
    match prod.coeff(2) {
        Ok(c) => println!("t^2 coefficient {c}"),
        Err(e) => println!("t^2 coefficient: {e}"),
    }

    let g = LaurentPoly::from_terms([(-2, q(3)), (0, q(5)), (1, q(1))]);
    println!("Res ({g}) dt/t = {}", g.residue()?);
    println!("Res d({g}) = {}", g.log_derivative().residue()?);
    println!("pole order of ({g}) (dt/t)^2 = {:?}", pole_order(&g, 2)?);

    // t = u^2: g(t) dt/t becomes 2 g(u^2) du/u
    let xi = TwistedElement::new(vec![g.clone()], 1);
    println!("pullback along t = u^2: {}", xi.ramified_pullback(2).value[0]);
    Ok(())
}

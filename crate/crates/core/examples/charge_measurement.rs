//! Reading off κ with the fiber derivative V̂₄.

use c2_monopole::monopole::{make_state, measure_charge};
use c2_monopole::restricted::RestrictedPoly;

fn main() -> c2_monopole::error::Result<()> {
    for (phi, kappa, delta) in [
        ("1", 2, 0),
        ("x3", 0, 0),
        ("r^2", 3, 1),
        ("x1 x2 - r^-1", -4, 2),
    ] {
        let poly: RestrictedPoly = phi.parse()?;
        let state = make_state(poly.to_symfunc(), kappa, delta)?;
        println!(
            "Φ = {phi:<14} κ = {kappa:>2}, δ = {delta:>2} → measured κ = {}",
            measure_charge(&state)?
        );
    }
    Ok(())
}

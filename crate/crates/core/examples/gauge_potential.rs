//! Extract A from V̂ acting on ξ_κ and compare with the closed form.

use std::f64::consts::PI;

use c2_monopole::monopole::{
    a_phi_closed_form, a_phi_delta_part, a_phi_kappa_part, gauge_potential,
};

fn main() -> c2_monopole::error::Result<()> {
    let (kappa, delta) = (2, 1);
    let pot = gauge_potential(kappa, delta);
    println!("A1 = {}", pot.cartesian[0]);
    println!(
        "{:>6} {:>10} {:>12} {:>12} {:>12} {:>10}",
        "r", "θ", "A_φ", "closed", "κ-part", "δ-part"
    );
    for (r, theta) in [(1.0, PI / 4.0), (1.0, PI / 2.0), (2.5, 2.0), (0.4, 0.2)] {
        let a = pot.spherical_at(r, theta, 0.7)?;
        println!(
            "{r:>6} {theta:>10.4} {:>12.8} {:>12.8} {:>12.8} {:>10.6}   (A_r, A_θ) = ({:.1e}, {:.1e})",
            a[2].re,
            a_phi_closed_form(kappa, delta, r, theta)?,
            a_phi_kappa_part(kappa, r, theta)?,
            a_phi_delta_part(delta, r, theta)?,
            a[0].norm(),
            a[1].norm()
        );
    }
    Ok(())
}

//! Curl of the extracted potential, its flux, and where the strings sit.

use std::collections::BTreeSet;

use c2_monopole::coords::R3Point;
use c2_monopole::monopole::{curl_check, gauge_potential, magnetic_field, string_singularities};
use c2_monopole::numerics::sphere_flux;

fn main() -> c2_monopole::error::Result<()> {
    let points = [(1.0, 0.7, 0.2), (0.6, 2.0, -1.3), (2.2, 1.4, 2.9)];
    for kappa in 0..=3 {
        let deltas: BTreeSet<i64> = [-kappa, 0, kappa].into();
        for delta in deltas {
            let pot = gauge_potential(kappa, delta);
            let flux = sphere_flux(
                |x| {
                    let (r, t, p) = x.spherical();
                    pot.curl_at(r, t, p, 1e-5)
                },
                1.0,
                64,
                8,
            )?;
            println!(
                "κ = {kappa}, δ = {delta:>2}: curl error {:.1e}, flux {flux:+.6} (−2πκ = {:+.6}), strings {:?}",
                curl_check(kappa, delta, &points, 1e-5)?,
                -2.0 * std::f64::consts::PI * kappa as f64,
                string_singularities(kappa, delta)?
            );
        }
    }
    println!(
        "B(κ=2) at (0,0,1) = {:?}",
        magnetic_field(2, &R3Point::new(0.0, 0.0, 1.0))?
    );
    Ok(())
}

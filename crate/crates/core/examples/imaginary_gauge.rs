//! A non-phase factor ξ = (z1 z2)^{κ/2}: its potential picks up a gradient
//! imaginary part that a real rescaling removes.

use c2_monopole::coords::Axis;
use c2_monopole::coords::{hopf_map, R3Point};
use c2_monopole::monopole::{imaginary_gauge, magnetic_field};
use c2_monopole::operators::hopf_coordinate;
use c2_monopole::symalg::{approx_equal, Sampler, DEFAULT_TOL};

fn main() -> c2_monopole::error::Result<()> {
    let g = imaginary_gauge(2);
    println!("ξ  = {}", g.factor);
    println!("ξ′ = {}", g.modulus);
    println!("ξ″ = {}", g.phase);
    println!("Im A1 = {}", g.im_potential[0]);
    let pts: Vec<R3Point> = Sampler::default()
        .with_count(50)
        .points()
        .iter()
        .map(hopf_map)
        .collect();
    println!(
        "Im A vs −∇ log ξ′: {:.2e}",
        g.gradient_deviation(&pts, 1e-5)?
    );
    let b = g.real_potential().curl_at(1.0, 0.05, 0.0, 1e-5)?;
    println!("rot Re A at θ = 0.05: {b:.6?}");
    println!(
        "−(κ/2) x/r³ there:    {:.6?}",
        magnetic_field(2, &R3Point::from_spherical(1.0, 0.05, 0.0))?
    );
    let phi = hopf_coordinate(Axis::X1);
    let cmp = approx_equal(
        &g.gauged_state(&phi),
        &(&phi * &g.phase),
        &Sampler::default(),
        DEFAULT_TOL,
    );
    println!("Φ ξ / ξ′ = Φ ξ″: {}", cmp.equal);
    Ok(())
}

//! Euler coordinates → C² → R³, and back.

use std::f64::consts::PI;

use c2_monopole::coords::{c2_to_euler, euler_to_c2, hopf_map, EulerCoords};

fn main() -> c2_monopole::error::Result<()> {
    for (r, theta, phi) in [(1.0, PI / 3.0, 0.5), (2.0, 0.0, 1.0), (0.5, PI, -2.0)] {
        println!("r = {r}, θ = {theta:.4}, φ = {phi:.4}");
        for gamma in [0.0, 1.0, 3.0] {
            let z = euler_to_c2(&EulerCoords::new(r, theta, phi, gamma)?);
            let x = hopf_map(&z);
            let back = c2_to_euler(&z);
            println!(
                "  γ = {gamma}: z1 = {:.4}, z2 = {:.4} → x = ({:.6}, {:.6}, {:.6}); chart {:?}",
                z.z1(),
                z.z2(),
                x.0[0],
                x.0[1],
                x.0[2],
                back.degenerate
            );
        }
    }
    Ok(())
}

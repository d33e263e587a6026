//! Monte-Carlo norms in the weighted C² measure.

use std::f64::consts::PI;

use c2_monopole::coords::hopf_map;
use c2_monopole::monopole::xi_factor;
use c2_monopole::numerics::{mc_integral_c2, mc_integral_r3, mc_norm_c2, QuadratureConfig};
use c2_monopole::verify::norm_test_phi;

fn main() -> c2_monopole::error::Result<()> {
    let cfg = QuadratureConfig::default();
    let phi = norm_test_phi();
    let env = |r: f64| (-r).exp();
    let plain = mc_norm_c2(&phi, env, &cfg)?;
    println!("‖Φ‖² = {:.5} ± {:.5}", plain.estimate, plain.stderr);
    for (k, d) in [(1, 1), (2, 0), (3, -1)] {
        let other = QuadratureConfig {
            seed: cfg.seed + 1,
            ..cfg
        };
        let n = mc_norm_c2(&(&phi * &xi_factor(k, d)), env, &other)?;
        println!(
            "‖Φ ξ‖² (κ={k}, δ={d:>2}) = {:.5} ± {:.5}  [{:.2}σ]",
            n.estimate,
            n.stderr,
            n.sigmas_from(plain.estimate, plain.stderr)
        );
    }
    let c2 = mc_integral_c2(|p| Ok((-hopf_map(p).norm().powi(2)).exp()), &cfg)?;
    let r3 = mc_integral_r3(|x| (-x.norm().powi(2)).exp(), &cfg)?;
    println!(
        "∫ e^(−|x|²): C² {:.5} ± {:.5}, R³ {:.5} ± {:.5}, exact {:.5}",
        c2.estimate,
        c2.stderr,
        r3.estimate,
        r3.stderr,
        PI.powf(1.5)
    );
    Ok(())
}

//! The velocity commutator and angular-momentum shift in the monopole sector.

use c2_monopole::coords::Axis;
use c2_monopole::monopole::{angular_shift_residual, field_strength_residual, make_state};
use c2_monopole::operators::hopf_coordinate;
use c2_monopole::symalg::{approx_equal, Sampler, SymFunc, DEFAULT_TOL};

fn main() -> c2_monopole::error::Result<()> {
    let sampler = Sampler::default();
    let zero = SymFunc::zero();
    for (kappa, delta) in [(0, 0), (1, 1), (2, 0), (3, -1), (4, 2)] {
        let state = make_state(hopf_coordinate(Axis::X3), kappa, delta)?;
        let worst = |fs: [SymFunc; 3]| {
            fs.iter()
                .map(|f| approx_equal(f, &zero, &sampler, DEFAULT_TOL).max_dev)
                .fold(0.0, f64::max)
        };
        println!(
            "κ = {kappa}, δ = {delta:>2}, μ = {:>4}: [V̂i,V̂j] residual {:.1e}, angular shift residual {:.1e}",
            state.mu(),
            worst(field_strength_residual(&state)),
            worst(angular_shift_residual(&state))
        );
    }
    Ok(())
}

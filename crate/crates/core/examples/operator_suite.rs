//! Laplacian, velocity and angular momentum on a restricted state.

use c2_monopole::coords::Axis;
use c2_monopole::operators::{
    angular_momentum, half_commutator_laplace_position, heisenberg_velocity, laplace, velocity,
};
use c2_monopole::restricted::RestrictedPoly;
use c2_monopole::symalg::{approx_equal, Sampler, DEFAULT_TOL};

fn main() {
    let poly: RestrictedPoly = "x1^2 x3 - 2*x2 r^-1".parse().expect("valid polynomial");
    let f = poly.to_symfunc();
    println!("Φ = {poly}");
    println!("ΔΦ has {} terms", laplace(&f).len());
    let sampler = Sampler::default();
    for a in Axis::ALL {
        let v = velocity(a, &f);
        let heis = approx_equal(&heisenberg_velocity(a, &f), &v, &sampler, DEFAULT_TOL);
        let half = approx_equal(
            &half_commutator_laplace_position(a, &f),
            &v,
            &sampler,
            DEFAULT_TOL,
        );
        println!(
            "{a}: V̂ has {} terms, L̂ has {} terms; −(i/2)[Δ,x̂] = V̂ {} (dev {:.1e}); ½[Δ,x̂] = V̂ {} (dev {:.2})",
            v.len(),
            angular_momentum(a, &f).len(),
            heis.equal,
            heis.max_dev,
            half.equal,
            half.max_dev
        );
    }
}

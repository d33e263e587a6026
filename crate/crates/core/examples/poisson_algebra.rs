//! Symbolic functions on C² and their Poisson brackets.

use num_complex::Complex64;

use c2_monopole::coords::Axis;
use c2_monopole::operators::hopf_coordinate;
use c2_monopole::symalg::{approx_equal, poisson, Sampler, SymFunc, Var};

fn main() {
    let z1 = SymFunc::var(Var::Z1);
    let z1c = SymFunc::var(Var::Z1Bar);
    println!("{{z1, z1*}} = {}", poisson(&z1, &z1c));

    let x = Axis::ALL.map(hopf_coordinate);
    for i in Axis::ALL {
        println!("{i} = {}", x[i.index()]);
    }
    let b12 = poisson(&x[0], &x[1]);
    let cmp = approx_equal(
        &b12,
        &x[2].scale(Complex64::new(2.0, 0.0)),
        &Sampler::default(),
        1e-12,
    );
    println!("{{x1, x2}} = {b12}");
    println!("{{x1, x2}} = 2 x3: {} (dev {:.1e})", cmp.equal, cmp.max_dev);

    let f = &(&x[0] * &x[2]) + &SymFunc::real(3.0);
    println!("∂/∂z1 (x1 x3 + 3) = {}", f.partial(Var::Z1));
    println!("as JSON: {}", serde_json::to_string(&x[2]).unwrap());
}

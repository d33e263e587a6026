//! Operators on [`SymFunc`]s built from the Poisson structure of C².
//!
//! On functions of `x = z̄σz` they reduce to the familiar R³ operators:
//! Δ → ∂_x·∂_x, V̂_i → −i∂_{x_i}, L̂_i → (x × V̂)_i.

#![allow(clippy::needless_range_loop)]

use std::fmt;

use num_complex::Complex64;

use crate::coords::Axis;
use crate::symalg::{poisson, Exponent, SymFunc, Var};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The Pauli matrices σ^i with exact entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PauliConstants;

impl PauliConstants {
    pub fn matrix(axis: Axis) -> [[Complex64; 2]; 2] {
        let o = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        match axis {
            Axis::X1 => [[o, one], [one, o]],
            Axis::X2 => [[o, -I], [I, o]],
            Axis::X3 => [[one, o], [o, -one]],
        }
    }

    /// Largest entry-wise violation of σ^i σ^j = δ_ij I + i ε_ijk σ^k.
    pub fn algebra_defect() -> f64 {
        let mut worst: f64 = 0.0;
        for a in Axis::ALL {
            for b in Axis::ALL {
                let (sa, sb) = (Self::matrix(a), Self::matrix(b));
                for row in 0..2 {
                    for col in 0..2 {
                        let lhs: Complex64 = (0..2).map(|k| sa[row][k] * sb[k][col]).sum();
                        let mut rhs = if a == b && row == col {
                            Complex64::new(1.0, 0.0)
                        } else {
                            Complex64::new(0.0, 0.0)
                        };
                        for c in Axis::ALL {
                            let eps = f64::from(levi_civita(a, b, c));
                            rhs += I * eps * Self::matrix(c)[row][col];
                        }
                        worst = worst.max((lhs - rhs).norm());
                    }
                }
            }
        }
        worst
    }
}

pub fn levi_civita(i: Axis, j: Axis, k: Axis) -> i32 {
    let (i, j, k) = (i.index() as i32, j.index() as i32, k.index() as i32);
    (j - i) * (k - i) * (k - j) / 2
}

/// Axes (j, k) with ε_ijk = +1.
pub fn cyclic(i: Axis) -> (Axis, Axis) {
    let n = i.index();
    (Axis::from_index(n + 1), Axis::from_index(n + 2))
}

fn r_inv() -> SymFunc {
    SymFunc::r_pow(Exponent::int(-1))
}

/// x_i = z*_α σ^i_{αβ} z_β.
pub fn hopf_coordinate(axis: Axis) -> SymFunc {
    let s = PauliConstants::matrix(axis);
    let mut x = SymFunc::zero();
    for a in 0..2 {
        for b in 0..2 {
            let t = &SymFunc::var(Var::zbar(a)) * &SymFunc::var(Var::z(b));
            x += &t.scale(s[a][b]);
        }
    }
    x
}

/// The radius symbol r.
pub fn radius() -> SymFunc {
    SymFunc::r_pow(Exponent::ONE)
}

/// Δf = (1/r) Σ_α ∂_{z_α} ∂_{z*_α} f.
pub fn laplace(f: &SymFunc) -> SymFunc {
    let mut sum = SymFunc::zero();
    for a in 0..2 {
        sum += &f.partial(Var::zbar(a)).partial(Var::z(a));
    }
    sum.times_r_pow(Exponent::int(-1))
}

/// Δf = (1/r){z*_α, {z_α, f}}, the bracket form.
pub fn laplace_nested(f: &SymFunc) -> SymFunc {
    let mut sum = SymFunc::zero();
    for a in 0..2 {
        let inner = poisson(&SymFunc::var(Var::z(a)), f);
        sum += &poisson(&SymFunc::var(Var::zbar(a)), &inner);
    }
    &r_inv() * &sum
}

pub fn position(axis: Axis, f: &SymFunc) -> SymFunc {
    &hopf_coordinate(axis) * f
}

/// V̂_i f = −(i/2r) σ^i_{αβ} (z*_α ∂_{z*_β} + z_β ∂_{z_α}) f.
pub fn velocity(axis: Axis, f: &SymFunc) -> SymFunc {
    let s = PauliConstants::matrix(axis);
    let mut sum = SymFunc::zero();
    for a in 0..2 {
        for b in 0..2 {
            if s[a][b] == Complex64::new(0.0, 0.0) {
                continue;
            }
            let t = &(&SymFunc::var(Var::zbar(a)) * &f.partial(Var::zbar(b)))
                + &(&SymFunc::var(Var::z(b)) * &f.partial(Var::z(a)));
            sum += &t.scale(s[a][b]);
        }
    }
    sum.times_r_pow(Exponent::int(-1))
        .scale(Complex64::new(0.0, -0.5))
}

/// Only the `z_β ∂_{z_α}` half of [`velocity`]; kept to compare against the
/// one-term potential formula.
pub fn velocity_holomorphic_part(axis: Axis, f: &SymFunc) -> SymFunc {
    let s = PauliConstants::matrix(axis);
    let mut sum = SymFunc::zero();
    for a in 0..2 {
        for b in 0..2 {
            let t = &SymFunc::var(Var::z(b)) * &f.partial(Var::z(a));
            sum += &t.scale(s[a][b]);
        }
    }
    sum.times_r_pow(Exponent::int(-1))
        .scale(Complex64::new(0.0, -0.5))
}

/// L̂_i f = (i/2){x_i, f}.
pub fn angular_momentum(axis: Axis, f: &SymFunc) -> SymFunc {
    poisson(&hopf_coordinate(axis), f).scale(Complex64::new(0.0, 0.5))
}

/// (x̂ × V̂)_i f = ε_ijk x̂_j V̂_k f.
pub fn cross_position_velocity(axis: Axis, f: &SymFunc) -> SymFunc {
    let (j, k) = cyclic(axis);
    &position(j, &velocity(k, f)) - &position(k, &velocity(j, f))
}

/// The fiber derivative (1/r)∂_γ = (i/2r)(z_α ∂_{z_α} − z*_α ∂_{z*_α}).
///
/// Annihilates functions of x and has eigenvalue iκ/(2r) on the phase ξ_κ.
pub fn v4(f: &SymFunc) -> SymFunc {
    let mut sum = SymFunc::zero();
    for a in 0..2 {
        sum += &(&SymFunc::var(Var::z(a)) * &f.partial(Var::z(a)));
        sum = &sum - &(&SymFunc::var(Var::zbar(a)) * &f.partial(Var::zbar(a)));
    }
    sum.times_r_pow(Exponent::int(-1))
        .scale(Complex64::new(0.0, 0.5))
}

/// (1/2r)(z*_α ∂_{z*_α} − z_α ∂_{z_α}) written out literally; equals i·[`v4`].
pub fn v4_displayed(f: &SymFunc) -> SymFunc {
    let mut sum = SymFunc::zero();
    for a in 0..2 {
        sum += &(&SymFunc::var(Var::zbar(a)) * &f.partial(Var::zbar(a)));
        sum = &sum - &(&SymFunc::var(Var::z(a)) * &f.partial(Var::z(a)));
    }
    sum.times_r_pow(Exponent::int(-1))
        .scale(Complex64::new(0.5, 0.0))
}

/// A named linear operator on [`SymFunc`]s.
#[derive(Debug, Clone, PartialEq)]
pub enum LinOp {
    Identity,
    Laplace,
    Position(Axis),
    Velocity(Axis),
    AngularMomentum(Axis),
    V4,
    /// Multiplication by a fixed function.
    Multiply(SymFunc),
    Scale(Complex64, Box<LinOp>),
    /// `A ∘ B`.
    Compose(Box<LinOp>, Box<LinOp>),
    /// `A∘B − B∘A`.
    Commutator(Box<LinOp>, Box<LinOp>),
    Sum(Box<LinOp>, Box<LinOp>),
}

impl LinOp {
    pub fn apply(&self, f: &SymFunc) -> SymFunc {
        match self {
            LinOp::Identity => f.clone(),
            LinOp::Laplace => laplace(f),
            LinOp::Position(i) => position(*i, f),
            LinOp::Velocity(i) => velocity(*i, f),
            LinOp::AngularMomentum(i) => angular_momentum(*i, f),
            LinOp::V4 => v4(f),
            LinOp::Multiply(g) => g * f,
            LinOp::Scale(c, a) => a.apply(f).scale(*c),
            LinOp::Compose(a, b) => a.apply(&b.apply(f)),
            LinOp::Commutator(a, b) => commutator(a, b, f),
            LinOp::Sum(a, b) => &a.apply(f) + &b.apply(f),
        }
    }

    pub fn then(self, after: LinOp) -> LinOp {
        LinOp::Compose(Box::new(after), Box::new(self))
    }

    pub fn commutator(a: LinOp, b: LinOp) -> LinOp {
        LinOp::Commutator(Box::new(a), Box::new(b))
    }

    pub fn scaled(self, c: Complex64) -> LinOp {
        LinOp::Scale(c, Box::new(self))
    }
}

impl fmt::Display for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinOp::Identity => write!(f, "1"),
            LinOp::Laplace => write!(f, "Δ"),
            LinOp::Position(i) => write!(f, "x̂{}", i.index() + 1),
            LinOp::Velocity(i) => write!(f, "V̂{}", i.index() + 1),
            LinOp::AngularMomentum(i) => write!(f, "L̂{}", i.index() + 1),
            LinOp::V4 => write!(f, "V̂4"),
            LinOp::Multiply(g) => write!(f, "[{g}]"),
            LinOp::Scale(c, a) => write!(f, "({c})·{a}"),
            LinOp::Compose(a, b) => write!(f, "{a}∘{b}"),
            LinOp::Commutator(a, b) => write!(f, "[{a}, {b}]"),
            LinOp::Sum(a, b) => write!(f, "({a} + {b})"),
        }
    }
}

/// A(B(f)) − B(A(f)).
pub fn commutator(a: &LinOp, b: &LinOp, f: &SymFunc) -> SymFunc {
    &a.apply(&b.apply(f)) - &b.apply(&a.apply(f))
}

/// ½(Δ(x_i f) − x_i Δf), the literal half-commutator.
pub fn half_commutator_laplace_position(axis: Axis, f: &SymFunc) -> SymFunc {
    commutator(&LinOp::Laplace, &LinOp::Position(axis), f).scale(Complex64::new(0.5, 0.0))
}

/// −(i/2)[Δ, x̂_i] f = i[H, x̂_i] f with H = −Δ/2.
pub fn heisenberg_velocity(axis: Axis, f: &SymFunc) -> SymFunc {
    commutator(&LinOp::Laplace, &LinOp::Position(axis), f).scale(Complex64::new(0.0, -0.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symalg::{approx_equal, Sampler, DEFAULT_TOL};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn x(i: usize) -> SymFunc {
        hopf_coordinate(Axis::ALL[i - 1])
    }

    fn r_pow(n: i32) -> SymFunc {
        SymFunc::r_pow(Exponent::int(n))
    }

    fn same(f: &SymFunc, g: &SymFunc) {
        let cmp = approx_equal(f, g, &Sampler::default(), DEFAULT_TOL);
        assert!(cmp.equal, "{f}\n  vs\n{g}\n  {cmp:?}");
    }

    #[test]
    fn pauli_algebra() {
        assert!(PauliConstants::algebra_defect() < 1e-15);
        assert_eq!(levi_civita(Axis::X1, Axis::X2, Axis::X3), 1);
        assert_eq!(levi_civita(Axis::X2, Axis::X1, Axis::X3), -1);
        assert_eq!(levi_civita(Axis::X1, Axis::X1, Axis::X3), 0);
        assert_eq!(cyclic(Axis::X3), (Axis::X1, Axis::X2));
    }

    #[test]
    fn laplace_examples() {
        assert!(laplace(&x(3)).is_zero());
        same(&laplace(&r_pow(2)), &SymFunc::real(6.0));
        same(&laplace(&r_pow(-1)), &SymFunc::zero());
    }

    #[test]
    fn nested_bracket_laplacian_agrees() {
        let f = &(&x(1) * &x(3)) + &(&r_pow(-1) * &x(2));
        same(&laplace(&f), &laplace_nested(&f));
        let xi = &SymFunc::var(Var::Z1) * &SymFunc::var(Var::Z2Bar).monomial_inverse().unwrap();
        same(&laplace(&xi), &laplace_nested(&xi));
    }

    #[test]
    fn position_examples() {
        let x3 = position(Axis::X3, &SymFunc::one());
        let expected = &(&SymFunc::var(Var::Z1) * &SymFunc::var(Var::Z1Bar))
            - &(&SymFunc::var(Var::Z2) * &SymFunc::var(Var::Z2Bar));
        assert_eq!(x3, expected);
        let sq = Axis::ALL
            .iter()
            .map(|&a| position(a, &position(a, &SymFunc::one())))
            .fold(SymFunc::zero(), |a, b| a + b);
        same(&sq, &r_pow(2));
        let p = crate::coords::CPoint::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(x3.eval(&p).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn velocity_examples() {
        same(&velocity(Axis::X1, &x(1)), &SymFunc::constant(c(0.0, -1.0)));
        same(&velocity(Axis::X3, &r_pow(2)), &x(3).scale(c(0.0, -2.0)));
        assert!(velocity(Axis::X1, &SymFunc::one()).is_zero());
    }

    #[test]
    fn angular_momentum_examples() {
        same(&angular_momentum(Axis::X3, &r_pow(2)), &SymFunc::zero());
        same(&angular_momentum(Axis::X3, &x(1)), &x(2).scale(c(0.0, 1.0)));
        let f = &(&x(1) * &x(2)) + &(&x(3) * &r_pow(-1));
        let l1 = LinOp::AngularMomentum(Axis::X1);
        let l2 = LinOp::AngularMomentum(Axis::X2);
        same(
            &commutator(&l1, &l2, &f),
            &angular_momentum(Axis::X3, &f).scale(c(0.0, 1.0)),
        );
        same(
            &cross_position_velocity(Axis::X2, &f),
            &angular_momentum(Axis::X2, &f),
        );
    }

    #[test]
    fn v4_examples() {
        assert!(v4(&x(3)).is_zero());
        same(&v4(&r_pow(2)), &SymFunc::zero());
        let ratio = &SymFunc::var(Var::Z1) * &SymFunc::var(Var::Z1Bar).monomial_inverse().unwrap();
        same(&v4(&ratio), &(&r_pow(-1) * &ratio).scale(c(0.0, 1.0)));
        same(&v4_displayed(&ratio), &v4(&ratio).scale(c(0.0, 1.0)));
    }

    #[test]
    fn commutator_examples() {
        let f = &x(3) * &x(1);
        let v1 = LinOp::Velocity(Axis::X1);
        let v2 = LinOp::Velocity(Axis::X2);
        same(&commutator(&v1, &v2, &f), &SymFunc::zero());
        let l3 = LinOp::AngularMomentum(Axis::X3);
        let x1 = LinOp::Position(Axis::X1);
        same(
            &commutator(&l3, &x1, &f),
            &position(Axis::X2, &f).scale(c(0.0, 1.0)),
        );
    }

    #[test]
    fn half_commutator_normalization() {
        // the Heisenberg form reproduces V̂; the bare ½[Δ, x̂] differs by a factor i
        let xi = &SymFunc::var(Var::Z2) * &SymFunc::var(Var::Z2Bar).monomial_inverse().unwrap();
        for f in [x(1), &x(3) * &r_pow(-1), &xi * &x(2)] {
            for a in Axis::ALL {
                same(&heisenberg_velocity(a, &f), &velocity(a, &f));
                same(
                    &half_commutator_laplace_position(a, &f),
                    &velocity(a, &f).scale(c(0.0, 1.0)),
                );
            }
        }
    }

    #[test]
    fn linop_composition() {
        let op = LinOp::Velocity(Axis::X1).then(LinOp::Position(Axis::X2));
        let f = &x(1) * &x(1);
        assert_eq!(op.apply(&f), position(Axis::X2, &velocity(Axis::X1, &f)));
        let s = LinOp::Laplace.scaled(c(2.0, 0.0));
        same(&s.apply(&r_pow(2)), &SymFunc::real(12.0));
        assert_eq!(
            format!(
                "{}",
                LinOp::commutator(LinOp::Velocity(Axis::X1), LinOp::V4)
            ),
            "[V̂1, V̂4]"
        );
    }
}

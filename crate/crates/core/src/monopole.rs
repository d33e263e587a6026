//! Generalized states Φ(x)·ξ_κ and the monopole physics they carry.
//!
//! ξ_κ = (z1/z1*)^{(κ−δ)/4} (z2/z2*)^{(κ+δ)/4} = e^{iκγ/2} e^{iδφ/2} is a pure
//! phase. Acting with V̂_j on Φ·ξ_κ produces, by the Leibniz rule, a gauge
//! potential A_j = V̂_j ξ_κ / ξ_κ whose only spherical component is
//! A_φ = (δ + κ cos θ)/(2r sin θ), and whose curl is the Coulomb-like field
//! B = −(κ/2) x / r³ of a magnetic charge μ = κ/2.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coords::{euler_to_c2, hopf_map, Axis, CPoint, EulerCoords, Pole, R3Point};
use crate::error::{Error, Result};
use crate::numerics::{
    cartesian_to_spherical, fd_gradient, spherical_curl, spherical_to_cartesian,
};
use crate::operators::{angular_momentum, cross_position_velocity, hopf_coordinate, v4, velocity};
use crate::symalg::{approx_equal, Exponent, Monomial, Sampler, SymFunc, Var, DEFAULT_TOL};

/// Divergence threshold for |A_φ| when scanning toward a pole at r = 1.
pub const STRING_THRESHOLD: f64 = 1e6;

/// Parse an integer charge, rejecting fractional values.
pub fn parse_charge(s: &str) -> Result<i64> {
    let t = s.trim();
    if let Ok(n) = t.parse::<i64>() {
        return Ok(n);
    }
    match t.parse::<f64>() {
        Ok(v) if v.fract() == 0.0 && v.abs() < 1e15 => Ok(v as i64),
        _ => Err(Error::NonIntegerCharge(t.to_string())),
    }
}

/// The phase factor ξ_κ as a single term.
pub fn xi_factor(kappa: i64, delta: i64) -> SymFunc {
    let a = Exponent::from_quarters((kappa - delta) as i32);
    let b = Exponent::from_quarters((kappa + delta) as i32);
    let mut m = Monomial::ONE;
    m.z[Var::Z1.index()] = a;
    m.z[Var::Z1Bar.index()] = -a;
    m.z[Var::Z2.index()] = b;
    m.z[Var::Z2Bar.index()] = -b;
    SymFunc::term(Complex64::new(1.0, 0.0), m)
}

/// Checks that every term has equal total powers of z and z*.
pub fn check_restricted(f: &SymFunc) -> Result<()> {
    for t in f.terms() {
        if t.mono.charge_quarters() != 0 {
            return Err(Error::NotRestricted(
                SymFunc::term(t.coeff, t.mono).to_string(),
            ));
        }
    }
    Ok(())
}

/// Φ_κ = Φ(x) · ξ_κ.
#[derive(Debug, Clone, PartialEq)]
pub struct MonopoleState {
    phi: SymFunc,
    kappa: i64,
    delta: i64,
    xi: SymFunc,
}

impl MonopoleState {
    pub fn new(phi: SymFunc, kappa: i64, delta: i64) -> Result<Self> {
        check_restricted(&phi)?;
        let xi = xi_factor(kappa, delta);
        for p in Sampler::default().with_count(10).points() {
            let m = xi.eval(&p)?.norm();
            if (m - 1.0).abs() > 1e-12 {
                return Err(Error::NotPhase(m));
            }
        }
        Ok(MonopoleState {
            phi,
            kappa,
            delta,
            xi,
        })
    }

    pub fn phi(&self) -> &SymFunc {
        &self.phi
    }

    pub fn xi(&self) -> &SymFunc {
        &self.xi
    }

    pub fn kappa(&self) -> i64 {
        self.kappa
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    /// Magnetic charge μ = κ/2.
    pub fn mu(&self) -> f64 {
        self.kappa as f64 / 2.0
    }

    pub fn full(&self) -> SymFunc {
        &self.phi * &self.xi
    }
}

pub fn make_state(phi: SymFunc, kappa: i64, delta: i64) -> Result<MonopoleState> {
    MonopoleState::new(phi, kappa, delta)
}

/// ε_ijk x̂_j V̂_k Φ_κ − L̂_i Φ_κ − (κ/2)(x_i/r) Φ_κ for i = 1, 2, 3.
pub fn angular_shift_residual(state: &MonopoleState) -> [SymFunc; 3] {
    let f = state.full();
    let half_kappa = Complex64::new(state.mu(), 0.0);
    Axis::ALL.map(|i| {
        let shift = (&hopf_coordinate(i) * &f)
            .times_r_pow(Exponent::int(-1))
            .scale(half_kappa);
        &(&cross_position_velocity(i, &f) - &angular_momentum(i, &f)) - &shift
    })
}

/// [V̂_i, V̂_j]Φ_κ − (κ/2) i ε_ijk (x_k/r³) Φ_κ for the three cyclic pairs.
pub fn field_strength_residual(state: &MonopoleState) -> [SymFunc; 3] {
    let f = state.full();
    Axis::ALL.map(|k| {
        let (i, j) = crate::operators::cyclic(k);
        let comm = &velocity(i, &velocity(j, &f)) - &velocity(j, &velocity(i, &f));
        let expected = (&hopf_coordinate(k) * &f)
            .times_r_pow(Exponent::int(-3))
            .scale(Complex64::new(0.0, state.mu()));
        &comm - &expected
    })
}

/// A_j = V̂_j ξ / ξ for a single-term factor ξ.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugePotential {
    pub kappa: i64,
    pub delta: i64,
    pub cartesian: [SymFunc; 3],
}

impl GaugePotential {
    pub fn from_factor(xi: &SymFunc, kappa: i64, delta: i64) -> Result<Self> {
        let inv = xi
            .monomial_inverse()
            .ok_or_else(|| Error::Config("gauge factor must be a single term".into()))?;
        Ok(GaugePotential {
            kappa,
            delta,
            cartesian: Axis::ALL.map(|j| &velocity(j, xi) * &inv),
        })
    }

    pub fn cartesian_at(&self, p: &CPoint) -> Result<[Complex64; 3]> {
        let [a, b, c] = &self.cartesian;
        Ok([a.eval(p)?, b.eval(p)?, c.eval(p)?])
    }

    /// Physical components (A_r, A_θ, A_φ) at spherical (r, θ, φ), lifted with γ = 0.
    pub fn spherical_at(&self, r: f64, theta: f64, phi: f64) -> Result<[Complex64; 3]> {
        let p = euler_to_c2(&EulerCoords::new(r, theta, phi, 0.0)?);
        let a = self.cartesian_at(&p)?;
        Ok(cartesian_to_spherical(a, theta, phi))
    }

    /// Real parts of [`spherical_at`](Self::spherical_at).
    pub fn spherical_real(&self, r: f64, theta: f64, phi: f64) -> Result<[f64; 3]> {
        Ok(self.spherical_at(r, theta, phi)?.map(|c| c.re))
    }

    /// Numerical curl of the real part at (r, θ, φ), in Cartesian components.
    pub fn curl_at(&self, r: f64, theta: f64, phi: f64, h: f64) -> Result<[f64; 3]> {
        let b = spherical_curl(
            |rr, tt, pp| self.spherical_real(rr, tt, pp),
            (r, theta, phi),
            h,
        )?;
        Ok(spherical_to_cartesian(b, theta, phi))
    }

    /// Imaginary parts (A − A*)/2i as functions.
    pub fn imaginary_part(&self) -> [SymFunc; 3] {
        self.cartesian
            .clone()
            .map(|a| (&a - &a.conj()).scale(Complex64::new(0.0, -0.5)))
    }

    pub fn real_part(&self) -> [SymFunc; 3] {
        self.cartesian
            .clone()
            .map(|a| (&a + &a.conj()).scale(Complex64::new(0.5, 0.0)))
    }
}

pub fn gauge_potential(kappa: i64, delta: i64) -> GaugePotential {
    GaugePotential::from_factor(&xi_factor(kappa, delta), kappa, delta)
        .expect("ξ_κ is a single term")
}

fn check_off_pole(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::Pole(theta));
    }
    Ok(())
}

/// A_φ = (δ + κ cos θ) / (2r sin θ).
pub fn a_phi_closed_form(kappa: i64, delta: i64, r: f64, theta: f64) -> Result<f64> {
    Ok(a_phi_kappa_part(kappa, r, theta)? + a_phi_delta_part(delta, r, theta)?)
}

/// A_φ^κ = (κ/2r) cot θ, the part carrying the field.
pub fn a_phi_kappa_part(kappa: i64, r: f64, theta: f64) -> Result<f64> {
    check_off_pole(theta)?;
    Ok(kappa as f64 * theta.cos() / (2.0 * r * theta.sin()))
}

/// A_φ^δ = (δ/2r) csc θ = ∇_φ(δφ/2), pure gauge.
pub fn a_phi_delta_part(delta: i64, r: f64, theta: f64) -> Result<f64> {
    check_off_pole(theta)?;
    Ok(delta as f64 / (2.0 * r * theta.sin()))
}

/// B = −(κ/2) x / r³.
pub fn magnetic_field(kappa: i64, x: &R3Point) -> Result<[f64; 3]> {
    let r = x.norm();
    if r == 0.0 {
        return Err(Error::Origin);
    }
    let s = -(kappa as f64) / (2.0 * r * r * r);
    Ok(x.0.map(|v| s * v))
}

/// Magnetic field sampled at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub point: R3Point,
    pub b: [f64; 3],
}

impl FieldSample {
    pub fn new(kappa: i64, point: R3Point) -> Result<Self> {
        Ok(FieldSample {
            point,
            b: magnetic_field(kappa, &point)?,
        })
    }

    /// |B × x| / (|B||x|), zero for a radial field.
    pub fn transverse_fraction(&self) -> f64 {
        let [b1, b2, b3] = self.b;
        let [x1, x2, x3] = self.point.0;
        let c = [b2 * x3 - b3 * x2, b3 * x1 - b1 * x3, b1 * x2 - b2 * x1];
        let cn = c.iter().map(|v| v * v).sum::<f64>().sqrt();
        let bn = self.b.iter().map(|v| v * v).sum::<f64>().sqrt();
        if bn == 0.0 {
            0.0
        } else {
            cn / (bn * self.point.norm())
        }
    }
}

fn vector_deviation(numeric: [f64; 3], exact: [f64; 3]) -> f64 {
    let diff = (0..3)
        .map(|k| (numeric[k] - exact[k]).powi(2))
        .sum::<f64>()
        .sqrt();
    let scale = exact.iter().map(|v| v * v).sum::<f64>().sqrt();
    if scale > 0.0 {
        diff / scale
    } else {
        diff
    }
}

/// Max relative deviation between the finite-difference curl of the extracted
/// potential and the closed-form field over spherical points (r, θ, φ).
/// Where the exact field vanishes the absolute deviation is used.
pub fn curl_check(kappa: i64, delta: i64, points: &[(f64, f64, f64)], h: f64) -> Result<f64> {
    let pot = gauge_potential(kappa, delta);
    let mut worst: f64 = 0.0;
    for &(r, t, p) in points {
        let numeric = pot.curl_at(r, t, p, h)?;
        let exact = magnetic_field(kappa, &R3Point::from_spherical(r, t, p))?;
        worst = worst.max(vector_deviation(numeric, exact));
    }
    Ok(worst)
}

/// Polar angles at which the extracted A_φ diverges, found by scanning
/// θ = 10^{-k} toward each pole at r = 1.
pub fn string_singularities(kappa: i64, delta: i64) -> Result<BTreeSet<Pole>> {
    let pot = gauge_potential(kappa, delta);
    let mut poles = BTreeSet::new();
    let phi = 0.3;
    for pole in [Pole::North, Pole::South] {
        let mut peak: f64 = 0.0;
        for k in 1..=10 {
            let eps = 10f64.powi(-k);
            let theta = match pole {
                Pole::North => eps,
                Pole::South => PI - eps,
            };
            let a_phi = pot.spherical_at(1.0, theta, phi)?[2];
            peak = peak.max(a_phi.norm());
        }
        if peak > STRING_THRESHOLD {
            poles.insert(pole);
        }
    }
    Ok(poles)
}

/// Applies V̂₄ and reads off κ from r·V̂₄Φ_κ = (iκ/2)Φ_κ.
pub fn measure_charge(state: &MonopoleState) -> Result<i64> {
    measure_charge_with(state, &Sampler::default(), DEFAULT_TOL)
}

pub fn measure_charge_with(state: &MonopoleState, sampler: &Sampler, tol: f64) -> Result<i64> {
    let f = state.full();
    let rv4 = v4(&f).times_r_pow(Exponent::ONE);
    let mut best: Option<(f64, Complex64)> = None;
    for p in sampler.points() {
        let fv = f.eval(&p)?;
        if best.is_none_or(|(m, _)| fv.norm() > m) {
            best = Some((fv.norm(), rv4.eval(&p)? / fv));
        }
    }
    let Some((_, lambda)) = best.filter(|(m, _)| *m > 0.0) else {
        return Err(Error::ChargeInconsistent(f64::INFINITY));
    };
    let kappa = (2.0 * lambda.im).round() as i64;
    let expected = f.scale(Complex64::new(0.0, kappa as f64 / 2.0));
    let cmp = approx_equal(&rv4, &expected, sampler, tol);
    if !cmp.equal {
        return Err(Error::ChargeInconsistent(cmp.max_dev));
    }
    Ok(kappa)
}

/// The non-phase factor ξ = (z1 z2)^{κ/2} split as ξ′(r, θ, φ) · ξ″(γ).
#[derive(Debug, Clone, PartialEq)]
pub struct ImaginaryGauge {
    pub kappa: i64,
    pub factor: SymFunc,
    /// ξ′ = |z1 z2|^{κ/2}.
    pub modulus: SymFunc,
    /// ξ″ = ξ_κ with δ = 0.
    pub phase: SymFunc,
    pub potential: GaugePotential,
    /// Im A_j.
    pub im_potential: [SymFunc; 3],
    /// Re A_j.
    pub re_potential: [SymFunc; 3],
}

pub fn imaginary_gauge(kappa: i64) -> ImaginaryGauge {
    let half = Exponent::from_quarters(2 * kappa as i32);
    let quarter = Exponent::from_quarters(kappa as i32);
    let mut m = Monomial::ONE;
    m.z[Var::Z1.index()] = half;
    m.z[Var::Z2.index()] = half;
    let factor = SymFunc::term(Complex64::new(1.0, 0.0), m);
    let modulus = SymFunc::term(
        Complex64::new(1.0, 0.0),
        Monomial {
            r: Exponent::ZERO,
            z: [quarter; 4],
        },
    );
    let potential =
        GaugePotential::from_factor(&factor, kappa, 0).expect("(z1 z2)^{κ/2} is a single term");
    ImaginaryGauge {
        kappa,
        im_potential: potential.imaginary_part(),
        re_potential: potential.real_part(),
        phase: xi_factor(kappa, 0),
        modulus,
        factor,
        potential,
    }
}

impl ImaginaryGauge {
    /// e^{−log ξ′} Φ ξ′ ξ″ = Φ ξ″ applied to Φ.
    pub fn gauged_state(&self, phi: &SymFunc) -> SymFunc {
        let inv = self.modulus.monomial_inverse().expect("single term");
        &(phi * &self.factor) * &inv
    }

    /// log ξ′ at a point of R³, computed as log |ξ| on a lift of x.
    pub fn log_modulus_at(&self, x: &R3Point) -> Result<f64> {
        let (r, t, p) = x.spherical();
        let z = euler_to_c2(&EulerCoords::new(r, t, p, 0.0)?);
        Ok(self.factor.eval(&z)?.norm().ln())
    }

    /// Im A at the lift of x.
    pub fn im_potential_at(&self, x: &R3Point) -> Result<[f64; 3]> {
        let (r, t, p) = x.spherical();
        let z = euler_to_c2(&EulerCoords::new(r, t, p, 0.0)?);
        let [a, b, c] = &self.im_potential;
        Ok([a.eval(&z)?.re, b.eval(&z)?.re, c.eval(&z)?.re])
    }

    /// Largest relative deviation of Im A from −∇ log ξ′ (central differences
    /// with step h) over the given points.
    pub fn gradient_deviation(&self, points: &[R3Point], h: f64) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for x in points {
            self.log_modulus_at(x)?;
            let log_mod = |p: &[f64; 3]| self.log_modulus_at(&R3Point(*p)).unwrap_or(f64::NAN);
            let exact = fd_gradient(log_mod, &x.0, h).map(|g| -g);
            if exact.iter().any(|g| !g.is_finite()) {
                return Err(Error::NonFinite(format!("∇ log ξ′ near {:?}", x.0)));
            }
            worst = worst.max(vector_deviation(self.im_potential_at(x)?, exact));
        }
        Ok(worst)
    }

    /// Real part of the extracted potential as its own [`GaugePotential`].
    pub fn real_potential(&self) -> GaugePotential {
        GaugePotential {
            kappa: self.kappa,
            delta: 0,
            cartesian: self.re_potential.clone(),
        }
    }
}

/// Point on S² of radius r given by a C² sample; convenience for samplers.
pub fn sample_sphere_point(p: &CPoint) -> (f64, f64, f64) {
    hopf_map(p).spherical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::EulerCoords;
    use crate::operators::velocity_holomorphic_part;
    use approx::assert_abs_diff_eq;

    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn xi_is_a_phase(
            k in -6i64..=6, d in -6i64..=6,
            a in 0.05f64..3.0, b in 0.05f64..3.0,
            t1 in -3.1f64..3.1, t2 in -3.1f64..3.1,
        ) {
            let p = CPoint::new(Complex64::from_polar(a, t1), Complex64::from_polar(b, t2)).unwrap();
            let m = xi_factor(k, d).eval(&p).unwrap().norm();
            prop_assert!((m - 1.0).abs() < 1e-12);
        }

        #[test]
        fn real_part_of_potential_has_only_phi_component(
            k in -4i64..=4, d in -4i64..=4,
            r in 0.2f64..4.0, t in 0.05f64..3.09, ph in -3.0f64..3.0,
        ) {
            let a = gauge_potential(k, d).spherical_at(r, t, ph).unwrap();
            let closed = a_phi_closed_form(k, d, r, t).unwrap();
            prop_assert!(a[0].norm() < 1e-9 * (1.0 + closed.abs()));
            prop_assert!(a[1].norm() < 1e-9 * (1.0 + closed.abs()));
            prop_assert!((a[2] - closed).norm() < 1e-9 * (1.0 + closed.abs()));
        }
    }

    fn x3() -> SymFunc {
        hopf_coordinate(Axis::X3)
    }

    fn zero_on_samples(f: &SymFunc) {
        let cmp = approx_equal(f, &SymFunc::zero(), &Sampler::default(), DEFAULT_TOL);
        assert!(cmp.equal, "{cmp:?}");
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi_factor(0, 0), SymFunc::one());
        let t = xi_factor(1, 1).as_monomial().unwrap();
        assert_eq!(t.mono.exp(Var::Z1), Exponent::ZERO);
        assert_eq!(t.mono.exp(Var::Z2), Exponent::from_quarters(2));
        assert_eq!(t.mono.exp(Var::Z2Bar), Exponent::from_quarters(-2));
        let (phi0, gamma0) = (0.7, -1.1);
        let p = euler_to_c2(&EulerCoords::new(1.0, PI / 2.0, phi0, gamma0).unwrap());
        let v = xi_factor(2, 0).eval(&p).unwrap();
        assert_abs_diff_eq!(
            (v - Complex64::from_polar(1.0, gamma0)).norm(),
            0.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn xi_euler_form() {
        for (k, d) in [(1, 1), (3, -1), (2, 0), (4, 2)] {
            for (t, p, g) in [(0.4, 0.3, 0.2), (2.0, -0.5, 0.9)] {
                let e = EulerCoords::new(1.3, t, p, g).unwrap();
                let v = xi_factor(k, d).eval(&euler_to_c2(&e)).unwrap();
                let want = Complex64::from_polar(1.0, k as f64 * g / 2.0 + d as f64 * p / 2.0);
                assert_abs_diff_eq!((v - want).norm(), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn charges_parse_as_integers() {
        assert_eq!(parse_charge("3").unwrap(), 3);
        assert_eq!(parse_charge("-2").unwrap(), -2);
        assert_eq!(parse_charge("4.0").unwrap(), 4);
        assert!(matches!(
            parse_charge("1.5"),
            Err(Error::NonIntegerCharge(_))
        ));
        assert!(parse_charge("one").is_err());
    }

    #[test]
    fn state_construction() {
        let s = make_state(SymFunc::one(), 2, 0).unwrap();
        assert_eq!(s.mu(), 1.0);
        let s = make_state(x3(), 0, 0).unwrap();
        assert_eq!(s.xi(), &SymFunc::one());
        assert_eq!(s.full(), x3());
        let bad = make_state(SymFunc::var(Var::Z1), 1, 1);
        assert!(matches!(bad, Err(Error::NotRestricted(_))));
    }

    #[test]
    fn angular_shift_examples() {
        let s = make_state(x3(), 0, 0).unwrap();
        for r in angular_shift_residual(&s) {
            zero_on_samples(&r);
        }
        for (phi, k, d) in [(SymFunc::one(), 2, 0), (x3(), 4, 2)] {
            let s = make_state(phi, k, d).unwrap();
            for r in angular_shift_residual(&s) {
                zero_on_samples(&r);
            }
        }
    }

    #[test]
    fn velocity_commutator_is_field_strength() {
        let s = make_state(SymFunc::one(), 2, 0).unwrap();
        for r in field_strength_residual(&s) {
            zero_on_samples(&r);
        }
        // κ = 0: flat derivatives commute
        let s = make_state(x3(), 0, 0).unwrap();
        for r in field_strength_residual(&s) {
            zero_on_samples(&r);
        }
    }

    #[test]
    fn potential_examples() {
        let pot = gauge_potential(2, 0);
        let a = pot.spherical_at(1.0, PI / 2.0, 0.4).unwrap();
        assert_abs_diff_eq!(a[2].norm(), 0.0, epsilon = 1e-12);
        let a = pot.spherical_at(1.0, PI / 4.0, -1.0).unwrap();
        assert_abs_diff_eq!(a[2].re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(a[0].norm() + a[1].norm(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(a[2].im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn potential_is_independent_of_fiber_angle() {
        let pot = gauge_potential(3, 1);
        for g in [0.0, 1.0, 5.0] {
            let p = euler_to_c2(&EulerCoords::new(1.2, 0.8, 0.5, g).unwrap());
            let a = pot.cartesian_at(&p).unwrap();
            let ref_p = euler_to_c2(&EulerCoords::new(1.2, 0.8, 0.5, 0.0).unwrap());
            let b = pot.cartesian_at(&ref_p).unwrap();
            for k in 0..3 {
                assert_abs_diff_eq!((a[k] - b[k]).norm(), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn partial_velocity_gives_half_potential() {
        // the z∂_z half of V̂ alone yields exactly half of A_φ
        let (k, d) = (2, 1);
        let xi = xi_factor(k, d);
        let inv = xi.monomial_inverse().unwrap();
        let (r, t, p) = (1.4, 1.1, 0.3);
        let z = euler_to_c2(&EulerCoords::new(r, t, p, 0.0).unwrap());
        let part = Axis::ALL.map(|j| {
            (&velocity_holomorphic_part(j, &xi) * &inv)
                .eval(&z)
                .unwrap()
        });
        let a_phi = cartesian_to_spherical(part, t, p)[2];
        let closed = a_phi_closed_form(k, d, r, t).unwrap();
        assert_abs_diff_eq!(a_phi.re, 0.5 * closed, epsilon = 1e-12);
    }

    #[test]
    fn closed_form_examples() {
        assert_abs_diff_eq!(
            a_phi_closed_form(0, 2, 1.0, PI / 2.0).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            a_phi_closed_form(2, 0, 2.0, PI / 2.0).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        assert!(matches!(
            a_phi_closed_form(1, 0, 1.0, 0.0),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            a_phi_closed_form(1, 0, 1.0, PI),
            Err(Error::Pole(_))
        ));
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(9);
        for _ in 0..1000 {
            use rand::Rng;
            let r = rng.gen_range(0.1..5.0);
            let t = rng.gen_range(0.01..PI - 0.01);
            let (k, d) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
            let total = a_phi_closed_form(k, d, r, t).unwrap();
            let parts = a_phi_kappa_part(k, r, t).unwrap() + a_phi_delta_part(d, r, t).unwrap();
            assert_abs_diff_eq!(total, parts, epsilon = 1e-12 * (1.0 + total.abs()));
        }
    }

    #[test]
    fn field_examples() {
        assert_eq!(
            magnetic_field(2, &R3Point::new(0.0, 0.0, 1.0)).unwrap(),
            [0.0, 0.0, -1.0]
        );
        assert_eq!(
            magnetic_field(0, &R3Point::new(0.3, 2.0, -1.0)).unwrap(),
            [0.0; 3]
        );
        assert!(magnetic_field(1, &R3Point::new(0.0, 0.0, 0.0)).is_err());
        let s = FieldSample::new(3, R3Point::new(0.3, -0.7, 1.1)).unwrap();
        assert!(s.transverse_fraction() < 1e-15);
    }

    #[test]
    fn flux_by_quadrature() {
        // Gauss–Legendre-free check: midpoint rule on the closed form
        let flux = crate::numerics::sphere_flux(|x| magnetic_field(3, x), 1.0, 200, 8).unwrap();
        assert!((flux + 6.0 * PI).abs() < 1e-3 * 6.0 * PI, "{flux}");
    }

    #[test]
    fn curl_examples() {
        let pts = [(1.0, 0.7, 0.2), (0.6, 2.0, -1.3), (2.2, 1.4, 2.9)];
        assert_eq!(curl_check(0, 0, &pts, 1e-5).unwrap(), 0.0);
        let e20 = curl_check(2, 0, &pts, 1e-5).unwrap();
        assert!(e20 < 1e-4, "{e20}");
        let e22 = curl_check(2, 2, &pts, 1e-5).unwrap();
        assert!(e22 < 1e-4, "{e22}");
        let pot = gauge_potential(0, 2);
        let b = pot.curl_at(1.0, 0.9, 0.1, 1e-5).unwrap();
        assert!(b.iter().all(|v| v.abs() < 1e-6));
    }

    #[test]
    fn strings() {
        let both = string_singularities(2, 0).unwrap();
        assert_eq!(both, [Pole::North, Pole::South].into_iter().collect());
        assert_eq!(
            string_singularities(2, 2).unwrap(),
            [Pole::North].into_iter().collect()
        );
        assert_eq!(
            string_singularities(2, -2).unwrap(),
            [Pole::South].into_iter().collect()
        );
        assert!(string_singularities(0, 0).unwrap().is_empty());
    }

    #[test]
    fn charge_examples() {
        let s = make_state(SymFunc::one(), 2, 0).unwrap();
        assert_eq!(measure_charge(&s).unwrap(), 2);
        let s = make_state(x3(), 0, 0).unwrap();
        assert_eq!(measure_charge(&s).unwrap(), 0);
        let s = make_state(SymFunc::r_pow(Exponent::int(2)), 3, 1).unwrap();
        assert_eq!(measure_charge(&s).unwrap(), 3);
        let s = make_state(x3(), -3, 1).unwrap();
        assert_eq!(measure_charge(&s).unwrap(), -3);
    }

    #[test]
    fn v4_on_xi() {
        let xi = xi_factor(2, 0);
        let lhs = v4(&xi);
        let rhs = xi.times_r_pow(Exponent::int(-1)).scale(c(0.0, 1.0));
        let cmp = approx_equal(&lhs, &rhs, &Sampler::default(), DEFAULT_TOL);
        assert!(cmp.equal);
    }

    #[test]
    fn single_valuedness_over_fiber() {
        for k in -3..=3 {
            for d in -3..=3 {
                let xi = xi_factor(k, d);
                let a = xi.eval_along_angles(1.0, 1.0, 0.4, 0.3).unwrap();
                let b = xi.eval_along_angles(1.0, 1.0, 0.4, 0.3 + 4.0 * PI).unwrap();
                assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-12);
            }
        }
        // a half-odd "κ" built by hand is double-valued on the fiber
        let mut m = Monomial::ONE;
        m.z[Var::Z1.index()] = Exponent::from_quarters(1);
        m.z[Var::Z1Bar.index()] = Exponent::from_quarters(-1);
        let bad = SymFunc::term(c(1.0, 0.0), m);
        let a = bad.eval_along_angles(1.0, 1.0, 0.4, 0.3).unwrap();
        let b = bad
            .eval_along_angles(1.0, 1.0, 0.4, 0.3 + 4.0 * PI)
            .unwrap();
        assert_abs_diff_eq!((a + b).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn imaginary_gauge_examples() {
        let g = imaginary_gauge(2);
        let b = g.real_potential().curl_at(1.0, 0.3, 0.0, 1e-5).unwrap();
        let exact = magnetic_field(2, &R3Point::from_spherical(1.0, 0.3, 0.0)).unwrap();
        assert!(vector_deviation(b, exact) < 1e-4);
        let at_pole = magnetic_field(2, &R3Point::new(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(at_pole, [0.0, 0.0, -1.0]);

        let phi = x3();
        let gauged = g.gauged_state(&phi);
        let cmp = approx_equal(
            &gauged,
            &(&phi * &g.phase),
            &Sampler::default(),
            DEFAULT_TOL,
        );
        assert!(cmp.equal, "{cmp:?}");

        let pts: Vec<R3Point> = Sampler::default()
            .with_count(50)
            .points()
            .iter()
            .map(hopf_map)
            .collect();
        let dev = g.gradient_deviation(&pts, 1e-5).unwrap();
        assert!(dev < 1e-5, "{dev}");

        let g0 = imaginary_gauge(0);
        for a in &g0.im_potential {
            assert!(a.is_zero());
        }
    }
}

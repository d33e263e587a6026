//! Points of C² \ {0}, their Euler-angle parametrization and the Hopf map to R³.
//!
//! Arguments of complex numbers use the principal branch `arg ∈ (−π, π]`
//! everywhere in the crate.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const FOUR_PI: f64 = 4.0 * PI;

/// Cartesian axis of R³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    pub fn index(self) -> usize {
        match self {
            Axis::X1 => 0,
            Axis::X2 => 1,
            Axis::X3 => 2,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i % 3]
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.index() + 1)
    }
}

/// A point (z1, z2) of C² with the origin removed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CPoint {
    z1: Complex64,
    z2: Complex64,
}

impl CPoint {
    pub fn new(z1: Complex64, z2: Complex64) -> Result<Self> {
        let r = z1.norm_sqr() + z2.norm_sqr();
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::Origin);
        }
        Ok(CPoint { z1, z2 })
    }

    pub fn z1(&self) -> Complex64 {
        self.z1
    }

    pub fn z2(&self) -> Complex64 {
        self.z2
    }

    /// r = z̄_α z_α.
    pub fn radius(&self) -> f64 {
        self.z1.norm_sqr() + self.z2.norm_sqr()
    }

    /// Lebesgue coordinates (Re z1, Im z1, Re z2, Im z2).
    pub fn to_real(&self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    pub fn from_real(v: [f64; 4]) -> Result<Self> {
        CPoint::new(Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3]))
    }
}

/// Euler parametrization (r, θ, φ, γ) of C² \ {0}.
///
/// φ and γ are reduced into `[0, 4π)` on construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerCoords {
    r: f64,
    theta: f64,
    phi: f64,
    gamma: f64,
}

impl EulerCoords {
    pub fn new(r: f64, theta: f64, phi: f64, gamma: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::NonPositiveRadius(r));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::PolarAngle(theta));
        }
        if !phi.is_finite() || !gamma.is_finite() {
            return Err(Error::NonFinite("Euler angle".into()));
        }
        Ok(EulerCoords {
            r,
            theta,
            phi: phi.rem_euclid(FOUR_PI),
            gamma: gamma.rem_euclid(FOUR_PI),
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }
    pub fn theta(&self) -> f64 {
        self.theta
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn to_c2(&self) -> CPoint {
        euler_to_c2(self)
    }
}

/// A point of R³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct R3Point(pub [f64; 3]);

impl R3Point {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        R3Point([x1, x2, x3])
    }

    pub fn from_spherical(r: f64, theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        R3Point([r * st * cp, r * st * sp, r * ct])
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// (r, θ, φ) with θ ∈ [0, π] and φ ∈ (−π, π].
    pub fn spherical(&self) -> (f64, f64, f64) {
        let r = self.norm();
        let [x1, x2, x3] = self.0;
        let theta = if r > 0.0 {
            (x3 / r).clamp(-1.0, 1.0).acos()
        } else {
            0.0
        };
        (r, theta, x2.atan2(x1))
    }

    pub fn get(&self, axis: Axis) -> f64 {
        self.0[axis.index()]
    }
}

/// Orthonormal spherical frame (ê_r, ê_θ, ê_φ) at polar angles (θ, φ), in Cartesian components.
pub fn spherical_frame(theta: f64, phi: f64) -> [[f64; 3]; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [
        [st * cp, st * sp, ct],
        [ct * cp, ct * sp, -st],
        [-sp, cp, 0.0],
    ]
}

pub fn euler_to_c2(e: &EulerCoords) -> CPoint {
    let sr = e.r.sqrt();
    let (s, c) = (e.theta / 2.0).sin_cos();
    let z1 = Complex64::from_polar(sr * c, 0.5 * (e.gamma - e.phi));
    let z2 = Complex64::from_polar(sr * s, 0.5 * (e.phi + e.gamma));
    CPoint { z1, z2 }
}

/// x^i = z̄ σ^i z.
pub fn hopf_map(p: &CPoint) -> R3Point {
    let cross = p.z1.conj() * p.z2;
    R3Point([
        2.0 * cross.re,
        2.0 * cross.im,
        p.z1.norm_sqr() - p.z2.norm_sqr(),
    ])
}

/// Which fibration singularity a point sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pole {
    /// θ = 0, z2 = 0.
    North,
    /// θ = π, z1 = 0.
    South,
}

/// Result of inverting the Euler parametrization.
///
/// On a pole one of φ ± γ is undetermined; it is set to zero and the pole is recorded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerChart {
    pub coords: EulerCoords,
    pub degenerate: Option<Pole>,
}

pub fn c2_to_euler(p: &CPoint) -> EulerChart {
    let r = p.radius();
    let (m1, m2) = (p.z1.norm(), p.z2.norm());
    let theta = 2.0 * m2.atan2(m1);
    // arg z1 = (γ − φ)/2, arg z2 = (φ + γ)/2
    let (phi, gamma, degenerate) = if p.z2 == Complex64::new(0.0, 0.0) {
        let a1 = p.z1.arg();
        (-a1, a1, Some(Pole::North))
    } else if p.z1 == Complex64::new(0.0, 0.0) {
        let a2 = p.z2.arg();
        (a2, a2, Some(Pole::South))
    } else {
        let (a1, a2) = (p.z1.arg(), p.z2.arg());
        (a2 - a1, a1 + a2, None)
    };
    let coords = EulerCoords::new(r, theta.clamp(0.0, PI), phi, gamma)
        .expect("CPoint invariant guarantees a positive radius");
    EulerChart { coords, degenerate }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn wrap_2pi(a: f64) -> f64 {
        let w = a.rem_euclid(2.0 * PI);
        w.min(2.0 * PI - w)
    }

    #[test]
    fn euler_examples() {
        let p = euler_to_c2(&EulerCoords::new(1.0, 0.0, 0.0, 0.0).unwrap());
        assert_abs_diff_eq!(p.z1().re, 1.0);
        assert_abs_diff_eq!(p.z2().norm(), 0.0);

        let p = euler_to_c2(&EulerCoords::new(4.0, PI, 0.0, 0.0).unwrap());
        assert_abs_diff_eq!(p.z1().norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.z2().re, 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.z2().im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn rejects_bad_coordinates() {
        assert_eq!(
            EulerCoords::new(0.0, 0.1, 0.0, 0.0),
            Err(Error::NonPositiveRadius(0.0))
        );
        assert!(EulerCoords::new(-1.0, 0.1, 0.0, 0.0).is_err());
        assert!(EulerCoords::new(1.0, 4.0, 0.0, 0.0).is_err());
        assert_eq!(CPoint::new(c(0.0, 0.0), c(0.0, 0.0)), Err(Error::Origin));
    }

    #[test]
    fn angles_reduced_mod_4pi() {
        let e = EulerCoords::new(1.0, 1.0, 5.0 * PI, -PI).unwrap();
        assert_abs_diff_eq!(e.phi(), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(e.gamma(), 3.0 * PI, epsilon = 1e-12);
    }

    #[test]
    fn hopf_examples() {
        let x = hopf_map(&CPoint::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap());
        assert_eq!(x.0, [0.0, 0.0, 1.0]);
        let x = hopf_map(&CPoint::new(c(0.0, 0.0), c(1.0, 0.0)).unwrap());
        assert_eq!(x.0, [0.0, 0.0, -1.0]);
        let s = 0.5f64.sqrt();
        let x = hopf_map(&CPoint::new(c(s, 0.0), c(s, 0.0)).unwrap());
        assert_abs_diff_eq!(x.0[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x.0[1], 0.0);
        assert_abs_diff_eq!(x.0[2], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn inverse_at_poles() {
        let chart = c2_to_euler(&CPoint::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap());
        assert_eq!(chart.degenerate, Some(Pole::North));
        let e = chart.coords;
        assert_eq!((e.r(), e.theta(), e.phi(), e.gamma()), (1.0, 0.0, 0.0, 0.0));

        let p = CPoint::new(c(0.0, 0.0), c(0.0, 2.0)).unwrap();
        let chart = c2_to_euler(&p);
        assert_eq!(chart.degenerate, Some(Pole::South));
        let e = chart.coords;
        assert_abs_diff_eq!(e.r(), 4.0);
        assert_abs_diff_eq!(e.theta(), PI);
        // φ − γ canonicalized, φ + γ = 2 arg z2
        assert_abs_diff_eq!(wrap_2pi(e.phi() - e.gamma()), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_2pi(e.phi() + e.gamma() - PI), 0.0, epsilon = 1e-12);
        let back = euler_to_c2(&e);
        assert_abs_diff_eq!((back.z2() - p.z2()).norm(), 0.0, epsilon = 1e-12);
    }

    fn nonzero_point() -> impl Strategy<Value = CPoint> {
        (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64)
            .prop_filter("origin", |(a, b, c, d)| {
                a * a + b * b + c * c + d * d > 1e-6
            })
            .prop_map(|(a, b, cc, d)| CPoint::new(c(a, b), c(cc, d)).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn inverse_round_trip(p in nonzero_point()) {
            let back = euler_to_c2(&c2_to_euler(&p).coords);
            prop_assert!((back.z1() - p.z1()).norm() < 1e-12);
            prop_assert!((back.z2() - p.z2()).norm() < 1e-12);
        }

        #[test]
        fn hopf_radius_matches(p in nonzero_point()) {
            let x = hopf_map(&p);
            prop_assert!((x.norm() - p.radius()).abs() <= 1e-12 * p.radius());
        }

        #[test]
        fn hopf_gives_spherical_coords(
            r in 0.01..10.0f64, theta in 0.01..(PI - 0.01), phi in -10.0..10.0f64,
            g1 in -20.0..20.0f64, g2 in -20.0..20.0f64,
        ) {
            let x = hopf_map(&euler_to_c2(&EulerCoords::new(r, theta, phi, g1).unwrap()));
            let (xr, xt, xp) = x.spherical();
            prop_assert!((xr - r).abs() < 1e-12 * r.max(1.0));
            prop_assert!((xt - theta).abs() < 1e-10);
            prop_assert!(wrap_2pi(xp - phi) < 1e-10);
            // the fiber angle drops out
            let y = hopf_map(&euler_to_c2(&EulerCoords::new(r, theta, phi, g2).unwrap()));
            for i in 0..3 {
                prop_assert!((x.0[i] - y.0[i]).abs() < 1e-12 * r.max(1.0));
            }
        }
    }
}

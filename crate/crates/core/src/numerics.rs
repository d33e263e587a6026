//! Independent numerical oracles: central differences, the spherical curl and
//! Monte-Carlo norms on R³ and C².
//!
//! C² integrals use the weight `2r/π` against the measure
//! `dz dz̄ := 2 · dRe z1 dIm z1 dRe z2 dIm z2`. With that normalization the
//! Hopf map pushes `(2r/π) dz dz̄` forward to `d³x` times the fiber length, so
//! C² and R³ integrals of functions of x agree.

use std::f64::consts::PI;
use std::ops::{Add, Div, Mul, Sub};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coords::{spherical_frame, CPoint, R3Point};
use crate::error::{Error, Result};
use crate::symalg::SymFunc;

/// Lebesgue-to-`dz dz̄` factor of the C² measure.
pub const C2_MEASURE_FACTOR: f64 = 2.0;

pub fn c2_weight(r: f64) -> f64 {
    2.0 * r / PI
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub samples: usize,
    pub seed: u64,
    /// Integrands vanish outside `[r_min, r_max]`.
    pub r_min: f64,
    pub r_max: f64,
    pub fd_step: f64,
    /// Proposal scale λ: C² samples ∝ e^{−λr}, R³ samples ∝ e^{−λ|x|²/2}.
    pub envelope_rate: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            samples: 100_000,
            seed: 42,
            r_min: 0.0,
            r_max: f64::INFINITY,
            fd_step: 1e-5,
            envelope_rate: 1.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples < 1000 {
            return Err(Error::Config(format!(
                "need at least 1000 samples, got {}",
                self.samples
            )));
        }
        if !(1e-7..=1e-3).contains(&self.fd_step) {
            return Err(Error::Config(format!(
                "fd step {} outside [1e-7, 1e-3]",
                self.fd_step
            )));
        }
        if !(self.r_min >= 0.0 && self.r_min < self.r_max) {
            return Err(Error::Config("radial cutoff range is empty".into()));
        }
        if !(self.envelope_rate > 0.0 && self.envelope_rate.is_finite()) {
            return Err(Error::Config("envelope rate must be positive".into()));
        }
        Ok(())
    }
}

/// Neumaier-compensated sum in iteration order.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// `(f(p + h·d) − f(p − h·d)) / 2h`.
pub fn fd_partial<const N: usize, T, F>(f: F, p: &[f64; N], dir: &[f64; N], h: f64) -> T
where
    F: Fn(&[f64; N]) -> T,
    T: Sub<Output = T> + Div<f64, Output = T>,
{
    let mut plus = *p;
    let mut minus = *p;
    for k in 0..N {
        plus[k] += h * dir[k];
        minus[k] -= h * dir[k];
    }
    (f(&plus) - f(&minus)) / (2.0 * h)
}

pub fn fd_gradient<T, F>(f: F, p: &[f64; 3], h: f64) -> [T; 3]
where
    F: Fn(&[f64; 3]) -> T,
    T: Sub<Output = T> + Div<f64, Output = T>,
{
    let e = |k: usize| {
        let mut d = [0.0; 3];
        d[k] = 1.0;
        d
    };
    [0, 1, 2].map(|k| fd_partial(&f, p, &e(k), h))
}

/// Cartesian Laplacian by the fourth-order five-point stencil on each axis.
pub fn fd_laplacian<T, F>(f: F, p: &[f64; 3], h: f64) -> T
where
    F: Fn(&[f64; 3]) -> T,
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> + Div<f64, Output = T>,
{
    let at = |k: usize, s: f64| {
        let mut q = *p;
        q[k] += s * h;
        f(&q)
    };
    let centre = f(p);
    let mut acc = centre * 0.0;
    for k in 0..3 {
        let num = (at(k, 1.0) + at(k, -1.0)) * 16.0 - (at(k, 2.0) + at(k, -2.0)) - centre * 30.0;
        acc = acc + num / (12.0 * h * h);
    }
    acc
}

/// Curl of a field given by physical spherical components `(A_r, A_θ, A_φ)`
/// evaluated at `(r, θ, φ)`; returns `(B_r, B_θ, B_φ)`.
pub fn spherical_curl<F>(a: F, point: (f64, f64, f64), h: f64) -> Result<[f64; 3]>
where
    F: Fn(f64, f64, f64) -> Result<[f64; 3]>,
{
    let (r, t, p) = point;
    if t < 10.0 * h || PI - t < 10.0 * h {
        return Err(Error::Pole(t));
    }
    if r <= 10.0 * h {
        return Err(Error::Origin);
    }
    let d = |f: &dyn Fn(f64) -> Result<f64>, x: f64| -> Result<f64> {
        Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
    };
    let st = t.sin();
    let dt_sin_aphi = d(&|tt| Ok(tt.sin() * a(r, tt, p)?[2]), t)?;
    let dp_atheta = d(&|pp| Ok(a(r, t, pp)?[1]), p)?;
    let dp_ar = d(&|pp| Ok(a(r, t, pp)?[0]), p)?;
    let dr_r_aphi = d(&|rr| Ok(rr * a(rr, t, p)?[2]), r)?;
    let dr_r_atheta = d(&|rr| Ok(rr * a(rr, t, p)?[1]), r)?;
    let dt_ar = d(&|tt| Ok(a(r, tt, p)?[0]), t)?;
    Ok([
        (dt_sin_aphi - dp_atheta) / (r * st),
        (dp_ar / st - dr_r_aphi) / r,
        (dr_r_atheta - dt_ar) / r,
    ])
}

/// Spherical physical components at (θ, φ) to Cartesian.
pub fn spherical_to_cartesian(v: [f64; 3], theta: f64, phi: f64) -> [f64; 3] {
    let frame = spherical_frame(theta, phi);
    let mut out = [0.0; 3];
    for (comp, e) in v.iter().zip(frame) {
        for k in 0..3 {
            out[k] += comp * e[k];
        }
    }
    out
}

/// Cartesian to spherical physical components at (θ, φ).
pub fn cartesian_to_spherical<T>(v: [T; 3], theta: f64, phi: f64) -> [T; 3]
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
{
    spherical_frame(theta, phi).map(|e| v[0] * e[0] + v[1] * e[1] + v[2] * e[2])
}

/// Outward flux of `field` through the sphere of given radius, midpoint rule
/// in (θ, φ), so no node sits on a pole.
pub fn sphere_flux<F>(field: F, radius: f64, n_theta: usize, n_phi: usize) -> Result<f64>
where
    F: Fn(&R3Point) -> Result<[f64; 3]> + Sync,
{
    let dt = PI / n_theta as f64;
    let dp = 2.0 * PI / n_phi as f64;
    let nodes: Vec<(f64, f64)> = (0..n_theta)
        .flat_map(|i| (0..n_phi).map(move |j| ((i as f64 + 0.5) * dt, (j as f64 + 0.5) * dp)))
        .collect();
    let contributions = nodes
        .par_iter()
        .map(|&(t, p)| {
            let x = R3Point::from_spherical(radius, t, p);
            let b = field(&x)?;
            let n = spherical_frame(t, p)[0];
            let br = b[0] * n[0] + b[1] * n[1] + b[2] * n[2];
            Ok(br * radius * radius * t.sin() * dt * dp)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(compensated_sum(contributions))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

impl MonteCarloEstimate {
    /// Distance to `other` in units of the combined standard error.
    pub fn sigmas_from(&self, value: f64, value_stderr: f64) -> f64 {
        let s = (self.stderr.powi(2) + value_stderr.powi(2)).sqrt();
        let d = (self.estimate - value).abs();
        if d == 0.0 {
            0.0
        } else {
            d / s
        }
    }
}

fn summarize(values: Vec<f64>) -> Result<MonteCarloEstimate> {
    let n = values.len() as f64;
    let mean = compensated_sum(values.iter().copied()) / n;
    let var = compensated_sum(values.iter().map(|v| (v - mean).powi(2))) / (n - 1.0);
    let est = MonteCarloEstimate {
        estimate: mean,
        stderr: (var / n).sqrt(),
    };
    if est.estimate == 0.0 && est.stderr == 0.0 {
        return Ok(est);
    }
    // a single sample carrying a visible share of the total signals an
    // infinite-variance tail
    let total_abs = compensated_sum(values.iter().map(|v| v.abs()));
    let largest = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let heavy_tail = largest > 0.02 * total_abs;
    if !est.estimate.is_finite()
        || !est.stderr.is_finite()
        || est.stderr > 0.5 * est.estimate.abs()
        || heavy_tail
    {
        return Err(Error::Divergent {
            estimate: est.estimate,
            stderr: est.stderr,
        });
    }
    Ok(est)
}

/// Importance-sampled estimate of `∫ (2r/π) g(z) dz dz̄` over C².
pub fn mc_integral_c2<G>(g: G, cfg: &QuadratureConfig) -> Result<MonteCarloEstimate>
where
    G: Fn(&CPoint) -> Result<f64> + Sync,
{
    cfg.validate()?;
    let lambda = cfg.envelope_rate;
    let normal = Normal::new(0.0, (0.5 / lambda).sqrt()).expect("positive scale");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let draws: Vec<[f64; 4]> = (0..cfg.samples)
        .map(|_| [0; 4].map(|_| normal.sample(&mut rng)))
        .collect();
    let norm_const = (lambda / PI).powi(2);
    let values = draws
        .par_iter()
        .map(|v| {
            let Ok(p) = CPoint::from_real(*v) else {
                return Ok(0.0);
            };
            let r = p.radius();
            if r < cfg.r_min || r > cfg.r_max {
                return Ok(0.0);
            }
            let q = norm_const * (-lambda * r).exp();
            Ok(C2_MEASURE_FACTOR * c2_weight(r) * g(&p)? / q)
        })
        .collect::<Result<Vec<f64>>>()?;
    summarize(values)
}

/// `‖f · envelope(r)‖²` in the weighted C² norm.
pub fn mc_norm_c2<E>(f: &SymFunc, envelope: E, cfg: &QuadratureConfig) -> Result<MonteCarloEstimate>
where
    E: Fn(f64) -> f64 + Sync,
{
    if f.is_zero() {
        return Ok(MonteCarloEstimate {
            estimate: 0.0,
            stderr: 0.0,
        });
    }
    mc_integral_c2(|p| Ok((f.eval(p)? * envelope(p.radius())).norm_sqr()), cfg)
}

/// Importance-sampled estimate of `∫ g(x) d³x`.
pub fn mc_integral_r3<G>(g: G, cfg: &QuadratureConfig) -> Result<MonteCarloEstimate>
where
    G: Fn(&R3Point) -> f64 + Sync,
{
    cfg.validate()?;
    let lambda = cfg.envelope_rate;
    let normal = Normal::new(0.0, (1.0 / lambda).sqrt()).expect("positive scale");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let draws: Vec<[f64; 3]> = (0..cfg.samples)
        .map(|_| [0; 3].map(|_| normal.sample(&mut rng)))
        .collect();
    let norm_const = (lambda / (2.0 * PI)).powf(1.5);
    let values: Vec<f64> = draws
        .par_iter()
        .map(|v| {
            let x = R3Point(*v);
            let r = x.norm();
            if r < cfg.r_min || r > cfg.r_max {
                return 0.0;
            }
            let q = norm_const * (-0.5 * lambda * r * r).exp();
            g(&x) / q
        })
        .collect();
    summarize(values)
}

/// `∫ |g(x)|² d³x`.
pub fn mc_norm_r3<G>(g: G, cfg: &QuadratureConfig) -> Result<MonteCarloEstimate>
where
    G: Fn(&R3Point) -> Complex64 + Sync,
{
    mc_integral_r3(|x| g(x).norm_sqr(), cfg)
}

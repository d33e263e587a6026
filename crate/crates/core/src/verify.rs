//! The identity suite behind `monopole verify`.
//!
//! Every check produces one [`Record`] per (κ, δ) it covers. Records are sorted
//! by name, κ, δ so the JSON form depends only on the configuration.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coords::{hopf_map, Axis, Pole, R3Point};
use crate::error::{Error, Result};
use crate::monopole::{
    a_phi_closed_form, angular_shift_residual, field_strength_residual, gauge_potential,
    imaginary_gauge, magnetic_field, make_state, measure_charge_with, string_singularities,
    xi_factor, GaugePotential,
};
use crate::numerics::{
    fd_gradient, fd_laplacian, mc_integral_c2, mc_integral_r3, mc_norm_c2, sphere_flux,
    QuadratureConfig,
};
use crate::operators::{
    angular_momentum, cross_position_velocity, heisenberg_velocity, hopf_coordinate, laplace,
    velocity, LinOp, PauliConstants,
};
use crate::restricted::RestrictedPoly;
use crate::symalg::{approx_equal, Exponent, Sampler, SymFunc, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub kappa_max: u32,
    /// Fixed δ for every κ; `None` sweeps −κ..=κ.
    pub delta: Option<i64>,
    pub seed: u64,
    /// Symbolic identities through the randomized oracle.
    pub tol: f64,
    /// Finite-difference oracles, relative.
    pub fd_tol: f64,
    /// Numerical curl against the closed-form field, relative.
    pub curl_tol: f64,
    /// Flux through the unit sphere, relative.
    pub flux_tol: f64,
    /// Monte-Carlo agreement in combined standard errors.
    pub sigmas: f64,
    pub fd_step: f64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            kappa_max: 4,
            delta: None,
            seed: 42,
            tol: DEFAULT_TOL,
            fd_tol: 1e-5,
            curl_tol: 1e-4,
            flux_tol: 1e-3,
            sigmas: 3.0,
            fd_step: 1e-5,
            samples: 100_000,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("tol", self.tol),
            ("fd-tol", self.fd_tol),
            ("curl-tol", self.curl_tol),
            ("flux-tol", self.flux_tol),
            ("sigmas", self.sigmas),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        self.quadrature().validate()
    }

    fn quadrature(&self) -> QuadratureConfig {
        QuadratureConfig {
            samples: self.samples,
            seed: self.seed,
            fd_step: self.fd_step,
            ..QuadratureConfig::default()
        }
    }

    fn sampler(&self) -> Sampler {
        Sampler::with_seed(self.seed)
    }

    /// The (κ, δ) grid.
    pub fn grid(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for k in 0..=self.kappa_max as i64 {
            match self.delta {
                Some(d) => out.push((k, d)),
                None => out.extend((-k..=k).map(|d| (k, d))),
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    /// The identity being checked, written out.
    pub eq: String,
    pub kappa: i64,
    pub delta: i64,
    pub max_dev: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Record {
    fn new(name: &str, eq: &str, (kappa, delta): (i64, i64), max_dev: f64, tol: f64) -> Self {
        Record {
            name: name.into(),
            eq: eq.into(),
            kappa,
            delta,
            max_dev,
            tol,
            pass: max_dev <= tol,
        }
    }

    fn from_result(name: &str, eq: &str, kd: (i64, i64), dev: Result<f64>, tol: f64) -> Self {
        Record::new(name, eq, kd, dev.unwrap_or(f64::INFINITY), tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub seed: u64,
    pub records: Vec<Record>,
}

impl VerifyReport {
    fn assemble(seed: u64, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| {
            (a.name.as_str(), a.kappa, a.delta).cmp(&(b.name.as_str(), b.kappa, b.delta))
        });
        let verdict = if records.iter().all(|r| r.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerifyReport {
            verdict,
            seed,
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s += &format!(
                "{:<4} {:<26} κ={:<2} δ={:<3} dev={:<10.3e} tol={:.1e}  {}\n",
                if r.pass { "ok" } else { "FAIL" },
                r.name,
                r.kappa,
                r.delta,
                r.max_dev,
                r.tol,
                r.eq
            );
        }
        let failed = self.failures().count();
        s += &format!(
            "verdict: {} ({} records, {} failed, seed {})\n",
            if self.passed() { "pass" } else { "fail" },
            self.records.len(),
            failed,
            self.seed
        );
        s
    }
}

/// |a − b| / (1 + |b|).
fn scaled(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

fn relative_vec(numeric: [f64; 3], exact: [f64; 3]) -> f64 {
    let d = (0..3)
        .map(|k| (numeric[k] - exact[k]).powi(2))
        .sum::<f64>()
        .sqrt();
    let s = exact.iter().map(|v| v * v).sum::<f64>().sqrt();
    if s > 0.0 {
        d / s
    } else {
        d
    }
}

fn max_zero(fs: &[SymFunc], sampler: &Sampler, tol: f64) -> f64 {
    fs.iter()
        .map(|f| approx_equal(f, &SymFunc::zero(), sampler, tol).max_dev)
        .fold(0.0, f64::max)
}

/// Random restricted polynomials shared by the restricted-sector checks.
pub fn random_polys(seed: u64, count: usize) -> Vec<RestrictedPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| RestrictedPoly::random(&mut rng, 3))
        .collect()
}

/// Random points (r, θ, φ) with θ at least 0.05 away from the poles.
pub fn spherical_points(seed: u64, count: usize) -> Vec<(f64, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                rng.gen_range(0.3..3.0),
                rng.gen_range(0.05..PI - 0.05),
                rng.gen_range(-PI..PI),
            )
        })
        .collect()
}

/// Largest scaled deviation of the symbolic Laplacian, velocity and angular
/// momentum of each polynomial from Cartesian finite differences.
pub fn restricted_fd_deviation(polys: &[RestrictedPoly], sampler: &Sampler, h: f64) -> Result<f64> {
    let points = sampler.points();
    let devs = polys
        .par_iter()
        .map(|poly| -> Result<f64> {
            let f = poly.to_symfunc();
            let lap = laplace(&f);
            let vel = Axis::ALL.map(|a| velocity(a, &f));
            let ang = Axis::ALL.map(|a| angular_momentum(a, &f));
            let g = |p: &[f64; 3]| poly.eval_r3(&R3Point(*p));
            let mut worst: f64 = 0.0;
            for p in &points {
                let x = hopf_map(p);
                let lap_fd = fd_laplacian(g, &x.0, 1e-3 * x.norm());
                worst = worst.max(scaled(lap.eval(p)?, lap_fd.into()));
                let grad = fd_gradient(g, &x.0, h);
                for a in Axis::ALL {
                    let i = a.index();
                    let v_fd = Complex64::new(0.0, -grad[i]);
                    worst = worst.max(scaled(vel[i].eval(p)?, v_fd));
                    let (j, k) = crate::operators::cyclic(a);
                    let l = x.get(j) * grad[k.index()] - x.get(k) * grad[j.index()];
                    worst = worst.max(scaled(ang[i].eval(p)?, Complex64::new(0.0, -l)));
                }
            }
            Ok(worst)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(devs.into_iter().fold(0.0, f64::max))
}

/// ε_ijk x̂_j V̂_k f − L̂_i f over the polynomials.
pub fn cross_product_deviation(polys: &[RestrictedPoly], sampler: &Sampler, tol: f64) -> f64 {
    polys
        .iter()
        .map(|p| {
            let f = p.to_symfunc();
            let res = Axis::ALL.map(|a| &cross_position_velocity(a, &f) - &angular_momentum(a, &f));
            max_zero(&res, sampler, tol)
        })
        .fold(0.0, f64::max)
}

/// [L̂_i, L̂_j] f − i ε_ijk L̂_k f over the polynomials.
pub fn su2_deviation(polys: &[RestrictedPoly], sampler: &Sampler, tol: f64) -> f64 {
    polys
        .iter()
        .map(|p| {
            let f = p.to_symfunc();
            let res = Axis::ALL.map(|k| {
                let (i, j) = crate::operators::cyclic(k);
                let c = crate::operators::commutator(
                    &LinOp::AngularMomentum(i),
                    &LinOp::AngularMomentum(j),
                    &f,
                );
                &c - &angular_momentum(k, &f).scale(Complex64::new(0.0, 1.0))
            });
            max_zero(&res, sampler, tol)
        })
        .fold(0.0, f64::max)
}

/// Restricted factors used on the monopole grid: 1, x₃, r².
pub fn grid_phis() -> [SymFunc; 3] {
    [
        SymFunc::one(),
        hopf_coordinate(Axis::X3),
        SymFunc::r_pow(Exponent::int(2)),
    ]
}

fn state_full(phi: &SymFunc, k: i64, d: i64) -> Result<SymFunc> {
    Ok(make_state(phi.clone(), k, d)?.full())
}

/// −(i/2)[Δ, x̂_i]Φ_κ − V̂_i Φ_κ.
pub fn heisenberg_deviation(k: i64, d: i64, sampler: &Sampler, tol: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for phi in grid_phis() {
        let f = state_full(&phi, k, d)?;
        let res = Axis::ALL.map(|a| &heisenberg_velocity(a, &f) - &velocity(a, &f));
        worst = worst.max(max_zero(&res, sampler, tol));
    }
    Ok(worst)
}

pub fn field_strength_deviation(k: i64, d: i64, sampler: &Sampler, tol: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for phi in grid_phis() {
        let s = make_state(phi, k, d)?;
        worst = worst.max(max_zero(&field_strength_residual(&s), sampler, tol));
    }
    Ok(worst)
}

pub fn angular_shift_deviation(k: i64, d: i64, sampler: &Sampler, tol: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for phi in grid_phis() {
        let s = make_state(phi, k, d)?;
        worst = worst.max(max_zero(&angular_shift_residual(&s), sampler, tol));
    }
    Ok(worst)
}

/// Max over points of the scaled deviation of the extracted A_φ from the closed
/// form together with |A_r| and |A_θ|.
pub fn a_phi_deviation(k: i64, d: i64, points: &[(f64, f64, f64)]) -> Result<f64> {
    let pot = gauge_potential(k, d);
    let mut worst: f64 = 0.0;
    for &(r, t, p) in points {
        let a = pot.spherical_at(r, t, p)?;
        let closed = a_phi_closed_form(k, d, r, t)?;
        let s = 1.0 + closed.abs();
        worst = worst
            .max((a[2] - closed).norm() / s)
            .max(a[0].norm() / s)
            .max(a[1].norm() / s);
    }
    Ok(worst)
}

fn curl_values(pot: &GaugePotential, points: &[(f64, f64, f64)], h: f64) -> Result<Vec<[f64; 3]>> {
    points
        .iter()
        .map(|&(r, t, p)| pot.curl_at(r, t, p, h))
        .collect()
}

/// Relative deviation of the numerical curl from −(κ/2)x/r³.
pub fn curl_deviation(k: i64, d: i64, points: &[(f64, f64, f64)], h: f64) -> Result<f64> {
    crate::monopole::curl_check(k, d, points, h)
}

/// Relative spread of the numerical curl between δ and δ = 0.
pub fn delta_independence_deviation(
    k: i64,
    d: i64,
    points: &[(f64, f64, f64)],
    h: f64,
) -> Result<f64> {
    let a = curl_values(&gauge_potential(k, d), points, h)?;
    let b = curl_values(&gauge_potential(k, 0), points, h)?;
    Ok(a.into_iter()
        .zip(b)
        .map(|(x, y)| relative_vec(x, y))
        .fold(0.0, f64::max))
}

/// Flux of the numerical curl of the extracted potential through the unit sphere.
pub fn numerical_flux(k: i64, d: i64, h: f64) -> Result<f64> {
    let pot = gauge_potential(k, d);
    sphere_flux(
        |x| {
            let (r, t, p) = x.spherical();
            pot.curl_at(r, t, p, h)
        },
        1.0,
        128,
        16,
    )
}

pub fn flux_deviation(k: i64, d: i64, h: f64) -> Result<f64> {
    let flux = numerical_flux(k, d, h)?;
    let exact = -2.0 * PI * k as f64;
    Ok(if k == 0 {
        flux.abs()
    } else {
        (flux - exact).abs() / exact.abs()
    })
}

/// Poles at which (δ + κ cos θ) does not vanish.
pub fn expected_strings(k: i64, d: i64) -> BTreeSet<Pole> {
    let mut s = BTreeSet::new();
    if d + k != 0 {
        s.insert(Pole::North);
    }
    if d - k != 0 {
        s.insert(Pole::South);
    }
    s
}

/// Number of poles classified differently from the expectation.
pub fn string_mismatch(k: i64, d: i64) -> Result<f64> {
    let found = string_singularities(k, d)?;
    Ok(found.symmetric_difference(&expected_strings(k, d)).count() as f64)
}

/// Deviation of r·V̂₄Φ_κ from (iκ/2)Φ_κ; infinite if the measured charge is wrong.
pub fn charge_deviation(k: i64, d: i64, sampler: &Sampler, tol: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for phi in grid_phis() {
        let s = make_state(phi, k, d)?;
        let f = s.full();
        let rv4 = crate::operators::v4(&f).times_r_pow(Exponent::ONE);
        let expected = f.scale(Complex64::new(0.0, k as f64 / 2.0));
        worst = worst.max(approx_equal(&rv4, &expected, sampler, tol).max_dev);
        if measure_charge_with(&s, sampler, tol)? != k {
            return Ok(f64::INFINITY);
        }
    }
    Ok(worst)
}

pub fn xi_phase_deviation(k: i64, d: i64, sampler: &Sampler) -> Result<f64> {
    let xi = xi_factor(k, d);
    let mut worst: f64 = 0.0;
    for p in sampler.points() {
        worst = worst.max((xi.eval(&p)?.norm() - 1.0).abs());
    }
    Ok(worst)
}

/// |ξ(γ) − ξ(γ + 4π)| continued along the fiber.
pub fn single_valued_deviation(k: i64, d: i64, points: &[(f64, f64, f64)]) -> Result<f64> {
    let xi = xi_factor(k, d);
    let mut worst: f64 = 0.0;
    for (i, &(r, t, p)) in points.iter().enumerate() {
        let g = -PI + 0.37 * i as f64;
        let a = xi.eval_along_angles(r, t, p, g)?;
        let b = xi.eval_along_angles(r, t, p, g + 4.0 * PI)?;
        worst = worst.max((a - b).norm());
    }
    Ok(worst)
}

/// Restricted factor and envelope for the norm checks.
pub fn norm_test_phi() -> SymFunc {
    &SymFunc::one() + &hopf_coordinate(Axis::X3)
}

/// |‖Φξ_κ‖² − ‖Φ‖²| in combined standard errors, from independent streams.
pub fn norm_sigmas(k: i64, d: i64, q: &QuadratureConfig) -> Result<f64> {
    let phi = norm_test_phi();
    let env = |r: f64| (-r).exp();
    let plain = mc_norm_c2(&phi, env, q)?;
    let q2 = QuadratureConfig {
        seed: q.seed.wrapping_add(1),
        ..*q
    };
    let with_xi = mc_norm_c2(&(&phi * &xi_factor(k, d)), env, &q2)?;
    Ok(with_xi.sigmas_from(plain.estimate, plain.stderr))
}

/// ∫(2r/π)e^{−|x|²} dz dz̄ and ∫e^{−|x|²} d³x against π^{3/2}, in standard errors.
pub fn weight_sigmas(q: &QuadratureConfig) -> Result<f64> {
    let exact = PI.powf(1.5);
    let c2 = mc_integral_c2(
        |p| {
            let x = hopf_map(p);
            Ok((-x.norm().powi(2)).exp())
        },
        q,
    )?;
    let r3 = mc_integral_r3(|x| (-x.norm().powi(2)).exp(), q)?;
    Ok(c2.sigmas_from(exact, 0.0).max(r3.sigmas_from(exact, 0.0)))
}

/// Imaginary-gauge checks for ξ = (z₁z₂)^{κ/2}: (Im A vs −∇log ξ′, Re-part curl
/// vs B, gauged state vs Φ ξ″).
pub fn imaginary_gauge_deviations(
    k: i64,
    sampler: &Sampler,
    points: &[(f64, f64, f64)],
    cfg: &VerifyConfig,
) -> Result<(f64, f64, f64)> {
    let g = imaginary_gauge(k);
    let r3: Vec<R3Point> = sampler
        .with_count(50)
        .points()
        .iter()
        .map(hopf_map)
        .collect();
    let grad = g.gradient_deviation(&r3, cfg.fd_step)?;
    let re = g.real_potential();
    let mut curl: f64 = 0.0;
    for &(r, t, p) in points {
        let b = re.curl_at(r, t, p, cfg.fd_step)?;
        curl = curl.max(relative_vec(
            b,
            magnetic_field(k, &R3Point::from_spherical(r, t, p))?,
        ));
    }
    let mut gauged: f64 = 0.0;
    for phi in grid_phis() {
        let want = &phi * &g.phase;
        gauged = gauged.max(approx_equal(&g.gauged_state(&phi), &want, sampler, cfg.tol).max_dev);
    }
    Ok((grad, curl, gauged))
}

pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let sampler = cfg.sampler();
    let tol = cfg.tol;
    let h = cfg.fd_step;
    let points = spherical_points(cfg.seed, 100);
    let mut records = Vec::new();

    let polys = random_polys(cfg.seed, 20);
    records.push(Record::from_result(
        "restricted_fd",
        "Δ, V̂ = −i∇, L̂ = −i x×∇ on Φ(x) vs finite differences",
        (0, 0),
        restricted_fd_deviation(&polys, &sampler.with_count(8), h),
        cfg.fd_tol,
    ));
    records.push(Record::new(
        "angular_momentum_cross",
        "L̂_i = ε_ijk x̂_j V̂_k",
        (0, 0),
        cross_product_deviation(&polys, &sampler, tol),
        tol,
    ));
    records.push(Record::new(
        "su2",
        "[L̂_i, L̂_j] = i ε_ijk L̂_k",
        (0, 0),
        su2_deviation(&polys, &sampler, tol),
        tol,
    ));
    records.push(Record::new(
        "pauli_algebra",
        "σ^i σ^j = δ_ij + i ε_ijk σ^k",
        (0, 0),
        PauliConstants::algebra_defect(),
        tol,
    ));

    let q = cfg.quadrature();
    records.push(Record::from_result(
        "weight_correspondence",
        "∫(2r/π) g(x) dz dz̄ = ∫ g d³x = π^{3/2} for g = e^{−|x|²}",
        (0, 0),
        weight_sigmas(&q),
        cfg.sigmas,
    ));

    let grid = cfg.grid();
    let per_pair: Vec<Vec<Record>> = grid
        .par_iter()
        .map(|&(k, d)| {
            let kd = (k, d);
            let mut out = vec![
                Record::from_result(
                    "velocity_heisenberg",
                    "V̂_i Φ_κ = −(i/2)[Δ, x̂_i] Φ_κ",
                    kd,
                    heisenberg_deviation(k, d, &sampler, tol),
                    tol,
                ),
                Record::from_result(
                    "velocity_commutator",
                    "[V̂_i, V̂_j] Φ_κ = (κ/2) i ε_ijk (x_k/r³) Φ_κ",
                    kd,
                    field_strength_deviation(k, d, &sampler, tol),
                    tol,
                ),
                Record::from_result(
                    "angular_shift",
                    "ε_ijk x̂_j V̂_k Φ_κ = (L̂_i + (κ/2) x̂_i/r) Φ_κ",
                    kd,
                    angular_shift_deviation(k, d, &sampler, tol),
                    tol,
                ),
                Record::from_result(
                    "gauge_potential",
                    "A_φ = (δ + κ cos θ)/(2r sin θ), A_r = A_θ = 0",
                    kd,
                    a_phi_deviation(k, d, &points),
                    tol,
                ),
                Record::from_result(
                    "curl",
                    "rot A = −(κ/2) x/r³",
                    kd,
                    curl_deviation(k, d, &points, h),
                    cfg.curl_tol,
                ),
                Record::from_result(
                    "delta_independence",
                    "rot A(κ, δ) = rot A(κ, 0)",
                    kd,
                    delta_independence_deviation(k, d, &points, h),
                    cfg.curl_tol,
                ),
                Record::from_result(
                    "flux",
                    "∮ rot A · dS over the unit sphere = −2πκ",
                    kd,
                    flux_deviation(k, d, h),
                    cfg.flux_tol,
                ),
                Record::from_result(
                    "charge_v4",
                    "r V̂₄ Φ_κ = (iκ/2) Φ_κ",
                    kd,
                    charge_deviation(k, d, &sampler, tol),
                    tol,
                ),
                Record::from_result(
                    "xi_phase",
                    "|ξ_κ| = 1",
                    kd,
                    xi_phase_deviation(k, d, &sampler),
                    tol,
                ),
                Record::from_result(
                    "single_valued",
                    "ξ_κ(γ + 4π) = ξ_κ(γ)",
                    kd,
                    single_valued_deviation(k, d, &points),
                    tol,
                ),
                Record::from_result(
                    "norm_preservation",
                    "‖Φ ξ_κ‖ = ‖Φ‖",
                    kd,
                    norm_sigmas(k, d, &q),
                    cfg.sigmas,
                ),
            ];
            if k != 0 || d != 0 {
                out.push(Record::from_result(
                    "dirac_strings",
                    "A_φ diverges where δ ± κ ≠ 0",
                    kd,
                    string_mismatch(k, d),
                    0.0,
                ));
            } else {
                out.push(Record::from_result(
                    "dirac_strings",
                    "no string when κ = δ = 0",
                    kd,
                    string_singularities(0, 0).map(|s| s.len() as f64),
                    0.0,
                ));
            }
            out
        })
        .collect();
    records.extend(per_pair.into_iter().flatten());

    let gauge: Vec<Vec<Record>> = (0..=cfg.kappa_max as i64)
        .into_par_iter()
        .map(|k| {
            let kd = (k, 0);
            match imaginary_gauge_deviations(k, &sampler, &points, cfg) {
                Ok((grad, curl, gauged)) => vec![
                    Record::new(
                        "imaginary_gauge_gradient",
                        "Im A = −∇ log ξ′",
                        kd,
                        grad,
                        cfg.fd_tol,
                    ),
                    Record::new(
                        "imaginary_gauge_field",
                        "rot Re A = −(κ/2) x/r³",
                        kd,
                        curl,
                        cfg.curl_tol,
                    ),
                    Record::new("imaginary_gauge_state", "Φ ξ / ξ′ = Φ ξ″", kd, gauged, tol),
                ],
                Err(_) => vec![Record::new(
                    "imaginary_gauge_gradient",
                    "Im A = −∇ log ξ′",
                    kd,
                    f64::INFINITY,
                    cfg.fd_tol,
                )],
            }
        })
        .collect();
    records.extend(gauge.into_iter().flatten());

    Ok(VerifyReport::assemble(cfg.seed, records))
}

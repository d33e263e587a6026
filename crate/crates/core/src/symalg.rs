//! Exact-exponent symbolic algebra over functions on C² \ {0}.
//!
//! A [`SymFunc`] is a finite sum of terms `c · r^s · z1^p1 · z1*^q1 · z2^p2 · z2*^q2`
//! with complex coefficients and exponents on the quarter-integer lattice. The
//! symbols z_α and z*_α are independent (Wirtinger calculus); `r` is kept as its
//! own symbol with ∂_{z_α} r = z*_α and ∂_{z*_α} r = z_α. Because `r` is never
//! expanded into z̄z the representation is not unique, so equality is decided by
//! [`approx_equal`] on random sample points.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coords::CPoint;
use crate::error::{Error, Result};

/// Default tolerance for symbolic-vs-symbolic comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A rational exponent with denominator dividing 4, stored in quarters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent(i32);

impl Exponent {
    pub const ZERO: Exponent = Exponent(0);
    pub const ONE: Exponent = Exponent(4);

    pub const fn int(n: i32) -> Self {
        Exponent(4 * n)
    }

    pub const fn from_quarters(q: i32) -> Self {
        Exponent(q)
    }

    /// `num/den`, rejected unless it lies on the quarter lattice.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 || (4 * num) % den != 0 {
            return Err(Error::ExponentLattice { num, den });
        }
        let q = 4 * num / den;
        i32::try_from(q)
            .map(Exponent)
            .map_err(|_| Error::ExponentLattice { num, den })
    }

    pub fn quarters(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 4 == 0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 4.0
    }

    /// Reduced (numerator, denominator) with positive denominator.
    pub fn ratio(self) -> (i64, i64) {
        let (mut n, mut d) = (i64::from(self.0), 4i64);
        while d > 1 && n % 2 == 0 {
            n /= 2;
            d /= 2;
        }
        (n, d)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, o: Exponent) -> Exponent {
        Exponent(self.0 + o.0)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, o: Exponent) -> Exponent {
        Exponent(self.0 - o.0)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ratio() {
            (n, 1) => write!(f, "{n}"),
            (n, d) => write!(f, "{n}/{d}"),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (n, d) = self.ratio();
        [n, d].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [n, den] = <[i64; 2]>::deserialize(d)?;
        Exponent::new(n, den).map_err(D::Error::custom)
    }
}

/// The four independent complex symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    Z1,
    Z1Bar,
    Z2,
    Z2Bar,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Z1, Var::Z1Bar, Var::Z2, Var::Z2Bar];

    /// z_α for α ∈ {0, 1}.
    pub fn z(alpha: usize) -> Var {
        [Var::Z1, Var::Z2][alpha]
    }

    /// z*_α for α ∈ {0, 1}.
    pub fn zbar(alpha: usize) -> Var {
        [Var::Z1Bar, Var::Z2Bar][alpha]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn conj(self) -> Var {
        match self {
            Var::Z1 => Var::Z1Bar,
            Var::Z1Bar => Var::Z1,
            Var::Z2 => Var::Z2Bar,
            Var::Z2Bar => Var::Z2,
        }
    }

    fn value(self, p: &CPoint) -> Complex64 {
        match self {
            Var::Z1 => p.z1(),
            Var::Z1Bar => p.z1().conj(),
            Var::Z2 => p.z2(),
            Var::Z2Bar => p.z2().conj(),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::Z1 => "z1",
            Var::Z1Bar => "z1*",
            Var::Z2 => "z2",
            Var::Z2Bar => "z2*",
        })
    }
}

/// Exponent tuple `(s; p1, q1, p2, q2)` of one term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub r: Exponent,
    /// Indexed by [`Var::index`].
    pub z: [Exponent; 4],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        r: Exponent::ZERO,
        z: [Exponent::ZERO; 4],
    };

    pub fn var(v: Var) -> Monomial {
        let mut m = Monomial::ONE;
        m.z[v.index()] = Exponent::ONE;
        m
    }

    pub fn exp(&self, v: Var) -> Exponent {
        self.z[v.index()]
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            r: -self.r,
            z: self.z.map(|e| -e),
        }
    }

    /// Net power difference between z and z*; zero for functions of x = z̄σz.
    pub fn charge_quarters(&self) -> i32 {
        let [p1, q1, p2, q2] = self.z.map(Exponent::quarters);
        p1 + p2 - q1 - q2
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, o: Monomial) -> Monomial {
        let mut z = self.z;
        for (a, b) in z.iter_mut().zip(o.z) {
            *a = *a + b;
        }
        Monomial { r: self.r + o.r, z }
    }
}

fn power(w: Complex64, e: Exponent, var: Var) -> Result<Complex64> {
    if e == Exponent::ZERO {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if w.re == 0.0 && w.im == 0.0 {
        if e.is_integer() && e.quarters() > 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::BranchPoint {
            var,
            exponent: e.to_string(),
        });
    }
    if e.is_integer() {
        Ok(w.powi(e.quarters() / 4))
    } else {
        let x = e.as_f64();
        Ok(Complex64::from_polar(w.norm().powf(x), x * w.arg()))
    }
}

/// One term `coeff · monomial`; the unit of serialization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymTerm {
    pub coeff: Complex64,
    pub mono: Monomial,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    re: f64,
    im: f64,
    r: Exponent,
    z1: Exponent,
    z1c: Exponent,
    z2: Exponent,
    z2c: Exponent,
}

impl Serialize for SymTerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [z1, z1c, z2, z2c] = self.mono.z;
        TermRepr {
            re: self.coeff.re,
            im: self.coeff.im,
            r: self.mono.r,
            z1,
            z1c,
            z2,
            z2c,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymTerm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let t = TermRepr::deserialize(d)?;
        Ok(SymTerm {
            coeff: Complex64::new(t.re, t.im),
            mono: Monomial {
                r: t.r,
                z: [t.z1, t.z1c, t.z2, t.z2c],
            },
        })
    }
}

/// Normalized finite sum of [`SymTerm`]s.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Monomial, Complex64>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        SymFunc::term(c, Monomial::ONE)
    }

    pub fn real(c: f64) -> Self {
        SymFunc::constant(Complex64::new(c, 0.0))
    }

    pub fn var(v: Var) -> Self {
        SymFunc::term(Complex64::new(1.0, 0.0), Monomial::var(v))
    }

    /// The radius symbol raised to `s`.
    pub fn r_pow(s: Exponent) -> Self {
        SymFunc::term(
            Complex64::new(1.0, 0.0),
            Monomial {
                r: s,
                ..Monomial::ONE
            },
        )
    }

    pub fn term(c: Complex64, mono: Monomial) -> Self {
        let mut f = SymFunc::zero();
        f.push(c, mono);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = SymTerm>>(terms: I) -> Self {
        let mut f = SymFunc::zero();
        for t in terms {
            f.push(t.coeff, t.mono);
        }
        f
    }

    fn push(&mut self, c: Complex64, mono: Monomial) {
        if c.re == 0.0 && c.im == 0.0 {
            return;
        }
        let slot = self.terms.entry(mono).or_insert(Complex64::new(0.0, 0.0));
        *slot += c;
        if slot.re == 0.0 && slot.im == 0.0 {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = SymTerm> + '_ {
        self.terms.iter().map(|(m, c)| SymTerm {
            coeff: *c,
            mono: *m,
        })
    }

    /// The single term of a monomial function, if it is one.
    pub fn as_monomial(&self) -> Option<SymTerm> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    pub fn scale(&self, c: Complex64) -> SymFunc {
        if c.re == 0.0 && c.im == 0.0 {
            return SymFunc::zero();
        }
        SymFunc::from_terms(self.terms().map(|t| SymTerm {
            coeff: t.coeff * c,
            mono: t.mono,
        }))
    }

    /// Multiply every term by `r^s`.
    pub fn times_r_pow(&self, s: Exponent) -> SymFunc {
        self.terms().fold(SymFunc::zero(), |mut acc, t| {
            let mut m = t.mono;
            m.r = m.r + s;
            acc.push(t.coeff, m);
            acc
        })
    }

    /// Reciprocal of a single-term function.
    pub fn monomial_inverse(&self) -> Option<SymFunc> {
        self.as_monomial()
            .map(|t| SymFunc::term(t.coeff.inv(), t.mono.inverse()))
    }

    /// Complex conjugate: conj(c z^p z*^q) = c̄ z*^p z^q (valid off the branch cut).
    pub fn conj(&self) -> SymFunc {
        SymFunc::from_terms(self.terms().map(|t| {
            let [p1, q1, p2, q2] = t.mono.z;
            SymTerm {
                coeff: t.coeff.conj(),
                mono: Monomial {
                    r: t.mono.r,
                    z: [q1, p1, q2, p2],
                },
            }
        }))
    }

    /// ∂f/∂v with v, v* independent and ∂_v r = v*.
    pub fn partial(&self, v: Var) -> SymFunc {
        let mut out = SymFunc::zero();
        for t in self.terms() {
            if t.mono.r != Exponent::ZERO {
                let mut m = t.mono;
                m.r = m.r - Exponent::ONE;
                m.z[v.conj().index()] = m.z[v.conj().index()] + Exponent::ONE;
                out.push(t.coeff * t.mono.r.as_f64(), m);
            }
            let e = t.mono.exp(v);
            if e != Exponent::ZERO {
                let mut m = t.mono;
                m.z[v.index()] = e - Exponent::ONE;
                out.push(t.coeff * e.as_f64(), m);
            }
        }
        out
    }

    /// Principal-branch evaluation: `z^p = |z|^p e^{i p arg z}`.
    pub fn eval(&self, p: &CPoint) -> Result<Complex64> {
        let vals = Var::ALL.map(|v| v.value(p));
        let r = p.radius();
        let mut sum = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = *c;
            if m.r != Exponent::ZERO {
                t *= if m.r.is_integer() {
                    r.powi(m.r.quarters() / 4)
                } else {
                    r.powf(m.r.as_f64())
                };
            }
            for v in Var::ALL {
                t *= power(vals[v.index()], m.exp(v), v)?;
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Evaluation continued along raw Euler angles: arg z1 = (γ − φ)/2 and
    /// arg z2 = (φ + γ)/2 without reduction, so winding in γ and φ is visible.
    pub fn eval_along_angles(&self, r: f64, theta: f64, phi: f64, gamma: f64) -> Result<Complex64> {
        let (s, c) = (theta / 2.0).sin_cos();
        let sr = r.sqrt();
        let moduli = [sr * c, sr * c, sr * s, sr * s];
        let a1 = 0.5 * (gamma - phi);
        let a2 = 0.5 * (phi + gamma);
        let args = [a1, -a1, a2, -a2];
        let mut sum = Complex64::new(0.0, 0.0);
        for (m, coeff) in &self.terms {
            let mut t = *coeff * r.powf(m.r.as_f64());
            for v in Var::ALL {
                let e = m.exp(v);
                if e == Exponent::ZERO {
                    continue;
                }
                let modulus = moduli[v.index()];
                if modulus == 0.0 {
                    if e.is_integer() && e.quarters() > 0 {
                        t = Complex64::new(0.0, 0.0);
                        continue;
                    }
                    return Err(Error::BranchPoint {
                        var: v,
                        exponent: e.to_string(),
                    });
                }
                t *= Complex64::from_polar(modulus.powf(e.as_f64()), e.as_f64() * args[v.index()]);
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Largest relative deviation `|f − g| / (1 + |f|)` over the points.
    /// Evaluation failures count as an infinite deviation.
    pub fn max_deviation(&self, other: &SymFunc, points: &[CPoint]) -> f64 {
        points
            .par_iter()
            .map(|p| match (self.eval(p), other.eval(p)) {
                (Ok(a), Ok(b)) => {
                    let d = (a - b).norm() / (1.0 + a.norm());
                    if d.is_nan() {
                        f64::INFINITY
                    } else {
                        d
                    }
                }
                _ => f64::INFINITY,
            })
            .reduce(|| 0.0, f64::max)
    }
}

impl From<Var> for SymFunc {
    fn from(v: Var) -> SymFunc {
        SymFunc::var(v)
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, o: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, o: SymFunc) -> SymFunc {
        self += &o;
        self
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, o: &SymFunc) {
        for t in o.terms() {
            self.push(t.coeff, t.mono);
        }
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, o: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for t in o.terms() {
            out.push(-t.coeff, t.mono);
        }
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, o: SymFunc) -> SymFunc {
        &self - &o
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, o: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for a in self.terms() {
            for b in o.terms() {
                out.push(a.coeff * b.coeff, a.mono * b.mono);
            }
        }
        out
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, o: SymFunc) -> SymFunc {
        &self * &o
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({}{:+}i)", t.coeff.re, t.coeff.im)?;
            if t.mono.r != Exponent::ZERO {
                write!(f, "·r^{}", t.mono.r)?;
            }
            for v in Var::ALL {
                let e = t.mono.exp(v);
                if e != Exponent::ZERO {
                    write!(f, "·{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            terms: Vec<SymTerm>,
        }
        Repr {
            terms: self.terms().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<SymTerm>,
        }
        Ok(SymFunc::from_terms(Repr::deserialize(d)?.terms))
    }
}

/// {f, g} = −i Σ_α (∂_{z_α} f ∂_{z*_α} g − ∂_{z*_α} f ∂_{z_α} g).
pub fn poisson(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut sum = SymFunc::zero();
    for alpha in 0..2 {
        let (z, zb) = (Var::z(alpha), Var::zbar(alpha));
        sum += &(&f.partial(z) * &g.partial(zb));
        sum = &sum - &(&f.partial(zb) * &g.partial(z));
    }
    sum.scale(Complex64::new(0.0, -1.0))
}

/// Random points of C² with |z1|, |z2| in a box away from the origin and
/// from the principal-branch cut.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampler {
    pub seed: u64,
    pub count: usize,
    pub min_modulus: f64,
    pub max_modulus: f64,
    /// Minimum angular distance of each coordinate from the negative real axis.
    pub cut_margin: f64,
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler {
            seed: 42,
            count: 32,
            min_modulus: 0.2,
            max_modulus: 2.0,
            cut_margin: 1e-3,
        }
    }
}

impl Sampler {
    pub fn with_seed(seed: u64) -> Self {
        Sampler {
            seed,
            ..Sampler::default()
        }
    }

    pub fn with_count(mut self, count: usize) -> Self {
        self.count = count;
        self
    }

    fn coordinate<R: Rng>(&self, rng: &mut R) -> Complex64 {
        let m = self.max_modulus;
        loop {
            let z = Complex64::new(rng.gen_range(-m..m), rng.gen_range(-m..m));
            let n = z.norm();
            if n >= self.min_modulus && n <= m && PI - z.arg().abs() > self.cut_margin {
                return z;
            }
        }
    }

    pub fn points(&self) -> Vec<CPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|_| {
                let z1 = self.coordinate(&mut rng);
                let z2 = self.coordinate(&mut rng);
                CPoint::new(z1, z2).expect("moduli bounded below")
            })
            .collect()
    }
}

/// Outcome of a randomized identity check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub equal: bool,
    pub max_dev: f64,
}

/// `|f(p) − g(p)| ≤ tol · (1 + |f(p)|)` at every sampled point.
pub fn approx_equal(f: &SymFunc, g: &SymFunc, sampler: &Sampler, tol: f64) -> Comparison {
    let max_dev = f.max_deviation(g, &sampler.points());
    Comparison {
        equal: max_dev <= tol,
        max_dev,
    }
}

//! Restricted states Φ(x): polynomials in x1, x2, x3 times integer powers of r = |x|.
//!
//! The same object evaluates directly on R³ and lifts to a [`SymFunc`] on C²
//! through x_i = z̄σ^i z, which is what the finite-difference oracles compare.
//!
//! Text form: `c * x1^a x2^b x3^c r^d` terms joined by `+`/`-`, e.g.
//! `2*x1^2 x3 - 0.5 r^-1`. Factors are separated by whitespace or `*`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;

use crate::coords::{Axis, R3Point};
use crate::error::{Error, Result};
use crate::operators::hopf_coordinate;
use crate::symalg::{Exponent, SymFunc};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyTerm {
    pub coeff: f64,
    pub powers: [u32; 3],
    pub r_power: i32,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RestrictedPoly {
    pub terms: Vec<PolyTerm>,
}

impl RestrictedPoly {
    pub fn constant(c: f64) -> Self {
        RestrictedPoly {
            terms: vec![PolyTerm {
                coeff: c,
                powers: [0; 3],
                r_power: 0,
            }],
        }
    }

    pub fn coordinate(axis: Axis) -> Self {
        let mut powers = [0; 3];
        powers[axis.index()] = 1;
        RestrictedPoly {
            terms: vec![PolyTerm {
                coeff: 1.0,
                powers,
                r_power: 0,
            }],
        }
    }

    pub fn r_power(d: i32) -> Self {
        RestrictedPoly {
            terms: vec![PolyTerm {
                coeff: 1.0,
                powers: [0; 3],
                r_power: d,
            }],
        }
    }

    /// Random polynomial with total x-degree ≤ `max_degree`; with probability ½
    /// the whole thing is divided by r or r².
    pub fn random<R: Rng>(rng: &mut R, max_degree: u32) -> Self {
        let n = rng.gen_range(1..=4);
        let r_power = if rng.gen_bool(0.5) {
            -rng.gen_range(1..=2)
        } else {
            0
        };
        let terms = (0..n)
            .map(|_| {
                let deg = rng.gen_range(0..=max_degree);
                let mut powers = [0u32; 3];
                for _ in 0..deg {
                    powers[rng.gen_range(0..3)] += 1;
                }
                PolyTerm {
                    coeff: rng.gen_range(-2.0..2.0),
                    powers,
                    r_power,
                }
            })
            .collect();
        RestrictedPoly { terms }
    }

    pub fn eval_r3(&self, x: &R3Point) -> f64 {
        let r = x.norm();
        self.terms
            .iter()
            .map(|t| {
                let mut v = t.coeff * r.powi(t.r_power);
                for (xi, &p) in x.0.iter().zip(&t.powers) {
                    v *= xi.powi(p as i32);
                }
                v
            })
            .sum()
    }

    pub fn to_symfunc(&self) -> SymFunc {
        let xs = Axis::ALL.map(hopf_coordinate);
        let mut out = SymFunc::zero();
        for t in &self.terms {
            let mut f =
                SymFunc::r_pow(Exponent::int(t.r_power)).scale(Complex64::new(t.coeff, 0.0));
            for (x, &p) in xs.iter().zip(&t.powers) {
                for _ in 0..p {
                    f = &f * x;
                }
            }
            out += &f;
        }
        out
    }
}

impl fmt::Display for RestrictedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{}", t.coeff)?;
            } else if t.coeff < 0.0 {
                write!(f, " - {}", -t.coeff)?;
            } else {
                write!(f, " + {}", t.coeff)?;
            }
            for (k, &p) in t.powers.iter().enumerate() {
                if p > 0 {
                    write!(f, " x{}^{p}", k + 1)?;
                }
            }
            if t.r_power != 0 {
                write!(f, " r^{}", t.r_power)?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn number(&mut self) -> Result<f64> {
        let start = self.pos;
        let rest = &self.src[start..];
        let mut end = 0;
        let bytes = rest.as_bytes();
        while end < bytes.len() {
            let b = bytes[end];
            let exp_sign =
                (b == b'-' || b == b'+') && end > 0 && matches!(bytes[end - 1], b'e' | b'E');
            if b.is_ascii_digit() || b == b'.' || b == b'e' || b == b'E' || exp_sign {
                end += 1;
            } else {
                break;
            }
        }
        match rest[..end].parse::<f64>() {
            Ok(v) => {
                self.pos += end;
                Ok(v)
            }
            Err(_) => self.err(format!("bad number '{}'", &rest[..end])),
        }
    }

    fn integer(&mut self) -> Result<i32> {
        self.skip_ws();
        let start = self.pos;
        let mut s = String::new();
        if let Some(c @ ('-' | '+')) = self.peek() {
            s.push(c);
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "expected an integer exponent".into(),
        })
    }
}

impl FromStr for RestrictedPoly {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let mut cur = Cursor { src, pos: 0 };
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.peek().is_none() {
                if first {
                    return cur.err("empty expression");
                }
                break;
            }
            let mut sign = 1.0;
            match cur.peek() {
                Some('+') if !first => cur.pos += 1,
                Some('-') => {
                    sign = -1.0;
                    cur.pos += 1;
                }
                Some(_) if !first => return cur.err("expected '+' or '-'"),
                _ => {}
            }
            first = false;
            let mut term = PolyTerm {
                coeff: sign,
                powers: [0; 3],
                r_power: 0,
            };
            let mut factors = 0;
            loop {
                cur.skip_ws();
                match cur.peek() {
                    Some(c) if c.is_ascii_digit() || c == '.' => {
                        term.coeff *= cur.number()?;
                    }
                    Some('x') => {
                        cur.pos += 1;
                        let axis = match cur.peek() {
                            Some(d @ '1'..='3') => {
                                cur.pos += 1;
                                d as usize - '1' as usize
                            }
                            _ => return cur.err("expected x1, x2 or x3"),
                        };
                        let p = power_suffix(&mut cur)?;
                        if p < 0 {
                            return cur.err("coordinate powers must be non-negative");
                        }
                        term.powers[axis] += p as u32;
                    }
                    Some('r') => {
                        cur.pos += 1;
                        term.r_power += power_suffix(&mut cur)?;
                    }
                    Some('*') if factors > 0 => {
                        cur.pos += 1;
                        continue;
                    }
                    _ => break,
                }
                factors += 1;
            }
            if factors == 0 {
                return cur.err("expected a term");
            }
            terms.push(term);
        }
        Ok(RestrictedPoly { terms })
    }
}

fn power_suffix(cur: &mut Cursor<'_>) -> Result<i32> {
    cur.skip_ws();
    if cur.peek() == Some('^') {
        cur.pos += 1;
        let n = cur.integer()?;
        if cur.peek() == Some('.') {
            return cur.err("exponents must be integers");
        }
        Ok(n)
    } else {
        Ok(1)
    }
}

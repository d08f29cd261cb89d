//! Exact arithmetic in F = Q(ζ₅), its distinguished constants, complex
//! embeddings, the eigenspace signature of a cyclic cover and Klein's J.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nt;
use crate::ops::forward_all;
use crate::ring_f0::{fmt_linear, parse_rational, q_f64, q_int, split_terms, F0Elem, Q};

/// `c0 + c1·ζ + c2·ζ² + c3·ζ³` with `ζ⁴ = −1 − ζ − ζ² − ζ³`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FElem {
    c: [Q; 4],
}

impl FElem {
    pub fn new(c: [Q; 4]) -> Self {
        FElem { c }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        FElem::new(c.map(q_int))
    }

    pub fn zero() -> Self {
        FElem::from_ints([0; 4])
    }

    pub fn one() -> Self {
        FElem::from_ints([1, 0, 0, 0])
    }

    pub fn zeta() -> Self {
        FElem::from_ints([0, 1, 0, 0])
    }

    /// `ζᵏ` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(5) {
            4 => FElem::from_ints([-1, -1, -1, -1]),
            r => {
                let mut c = [0; 4];
                c[r as usize] = 1;
                FElem::from_ints(c)
            }
        }
    }

    pub fn from_rational(q: Q) -> Self {
        FElem::new([q, Q::zero(), Q::zero(), Q::zero()])
    }

    /// Image of `a + b·u` under `u = −(ζ² + ζ³)`.
    pub fn from_f0(x: &F0Elem) -> Self {
        let b = -x.b().clone();
        FElem::new([x.a().clone(), Q::zero(), b.clone(), b])
    }

    pub fn coeffs(&self) -> &[Q; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == FElem::one()
    }

    /// Integrality in Z[ζ₅], the full ring of integers.
    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    pub fn scale(&self, q: &Q) -> Self {
        FElem::new(self.c.clone().map(|x| x * q))
    }

    /// The automorphism `σ_j : ζ ↦ ζʲ`.
    pub fn galois(&self, j: i64) -> Self {
        let mut acc = FElem::zero();
        for (k, ck) in self.c.iter().enumerate() {
            if !ck.is_zero() {
                acc = acc + FElem::zeta_pow(j * k as i64).scale(ck);
            }
        }
        acc
    }

    /// Complex conjugation, `ζ ↦ ζ⁴`.
    pub fn conj(&self) -> Self {
        self.galois(4)
    }

    pub fn norm_q(&self) -> Q {
        let prod = self * &self.galois(2) * self.galois(3) * self.galois(4);
        prod.c[0].clone()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let others = self.galois(2) * self.galois(3) * self.galois(4);
        let n = (self * &others).c[0].clone();
        Some(others.scale(&n.recip()))
    }

    pub fn checked_div(&self, rhs: &FElem) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = FElem::one();
        let mut b = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        acc
    }

    pub fn in_real_subfield(&self) -> bool {
        self.conj() == *self
    }

    /// The element as a member of F₀, when it is fixed by conjugation.
    pub fn to_f0(&self) -> Option<F0Elem> {
        if !self.in_real_subfield() {
            return None;
        }
        Some(F0Elem::new(self.c[0].clone(), -self.c[2].clone()))
    }

    /// `σ_j(x)` with `σ_j(ζ) = e^{2πij/5}`.
    pub fn embed(&self, j: u32) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, ck) in self.c.iter().enumerate() {
            let angle = 2.0 * std::f64::consts::PI * ((j as usize * k) % 5) as f64 / 5.0;
            acc += Complex64::from_polar(q_f64(ck), angle);
        }
        acc
    }
}

impl<'a, 'b> Add<&'b FElem> for &'a FElem {
    type Output = FElem;
    fn add(self, rhs: &'b FElem) -> FElem {
        FElem::new(std::array::from_fn(|i| &self.c[i] + &rhs.c[i]))
    }
}

impl<'a, 'b> Sub<&'b FElem> for &'a FElem {
    type Output = FElem;
    fn sub(self, rhs: &'b FElem) -> FElem {
        FElem::new(std::array::from_fn(|i| &self.c[i] - &rhs.c[i]))
    }
}

impl<'a, 'b> Mul<&'b FElem> for &'a FElem {
    type Output = FElem;
    fn mul(self, rhs: &'b FElem) -> FElem {
        let mut w: [Q; 7] = std::array::from_fn(|_| Q::zero());
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                w[i + j] += &self.c[i] * &rhs.c[j];
            }
        }
        let w5 = w[5].clone();
        let w6 = w[6].clone();
        w[0] += w5;
        w[1] += w6;
        let w4 = w[4].clone();
        FElem::new(std::array::from_fn(|i| &w[i] - &w4))
    }
}

impl<'a> Neg for &'a FElem {
    type Output = FElem;
    fn neg(self) -> FElem {
        FElem::new(self.c.clone().map(|x| -x))
    }
}

forward_all!(FElem);

impl From<i64> for FElem {
    fn from(n: i64) -> Self {
        FElem::from_ints([n, 0, 0, 0])
    }
}

impl From<&F0Elem> for FElem {
    fn from(x: &F0Elem) -> Self {
        FElem::from_f0(x)
    }
}

impl fmt::Display for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syms = ["", "z", "z^2", "z^3"];
        let terms: Vec<(&Q, &str)> = self.c.iter().zip(syms).collect();
        f.write_str(&fmt_linear(&terms))
    }
}

impl FromStr for FElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut acc = FElem::zero();
        for (neg, body) in split_terms(s)? {
            let (coeff, power) = match body.find('z') {
                None => (body.as_str(), 0),
                Some(i) => {
                    let rest = &body[i + 1..];
                    let k = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<i64>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad power in {body:?}")))?
                    };
                    let c = &body[..i];
                    (c.strip_suffix('*').unwrap_or(c), k)
                }
            };
            if power == 0 && coeff.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let mut c = parse_rational(coeff)?;
            if neg {
                c = -c;
            }
            acc = acc + FElem::zeta_pow(power).scale(&c);
        }
        Ok(acc)
    }
}

/// The distinguished constants of Q(ζ₅).
#[derive(Clone, Debug)]
pub struct Constants {
    pub zeta: FElem,
    /// `ε = ζ + ζ⁻¹ = (−1+√5)/2`.
    pub epsilon: FElem,
    /// `α = ζ − ζ⁻¹`.
    pub alpha: FElem,
    /// `β₀ = 5/(ζ³ − ζ²) = √5·α`.
    pub beta0: FElem,
    /// `ω² = ε`, an element of F₀.
    pub omega_sq: F0Elem,
}

pub fn constants() -> Constants {
    let zeta = FElem::zeta();
    let zinv = FElem::zeta_pow(-1);
    let epsilon = &zeta + &zinv;
    let alpha = &zeta - &zinv;
    let denom = FElem::zeta_pow(3) - FElem::zeta_pow(2);
    let beta0 = FElem::from(5).checked_div(&denom).expect("nonzero");
    let omega_sq = epsilon.to_f0().expect("ε is real");
    Constants { zeta, epsilon, alpha, beta0, omega_sq }
}

/// Numerical `ω = √ε > 0` under the first real embedding.
pub fn omega_f64() -> f64 {
    constants().omega_sq.tau1().sqrt()
}

pub fn embed(x: &FElem, j: u32) -> Result<Complex64> {
    if !(1..=4).contains(&j) {
        return Err(Error::Precondition(format!("embedding index {j} not in 1..4")));
    }
    Ok(x.embed(j))
}

/// Dimensions of the eigenspaces of a cyclic degree-`m` cover with four branch points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub m: u64,
    pub a: [u64; 4],
    pub f: Vec<i64>,
}

pub fn signature(m: u64, a: [u64; 4]) -> Result<Signature> {
    if m < 3 || !nt::is_prime(m) {
        return Err(Error::InvalidSignature(format!("m = {m} is not an odd prime")));
    }
    if a.iter().any(|&ai| ai % m == 0) {
        return Err(Error::InvalidSignature("inertia entries must be prime to m".into()));
    }
    if a.iter().sum::<u64>() % m != 0 {
        return Err(Error::InvalidSignature("inertia entries must sum to 0 mod m".into()));
    }
    let f = (1..m)
        .map(|n| {
            let s: u64 = a.iter().map(|&ai| (m - (n * ai) % m) % m).sum();
            s as i64 / m as i64 - 1
        })
        .collect();
    Ok(Signature { m, a, f })
}

/// `J(t) = (t²−t+1)³ / (t²(t−1)²)` over F₀.
pub fn klein_j(t: &F0Elem) -> Result<F0Elem> {
    let one = F0Elem::one();
    let tm1 = t - &one;
    let den = (t * &tm1).square();
    if den.is_zero() {
        return Err(Error::Pole(format!("J has a pole at t = {t}")));
    }
    let base = t.square() - t + &one;
    let num = &base.square() * &base;
    Ok(num.checked_div(&den).unwrap())
}

/// `J(t)` for rational `t`.
pub fn klein_j_q(t: &Q) -> Result<Q> {
    Ok(klein_j(&F0Elem::from_rational(t.clone()))?.a().clone())
}

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::ops::forward_all;

pub type Q = BigRational;

/// Golden ratio `(1+√5)/2`, the value of `u` under the first real embedding.
pub const PHI: f64 = 1.618_033_988_749_895;
/// Value of `u` under the second real embedding.
pub const PHI_CONJ: f64 = -0.618_033_988_749_894_9;

/// Exact element `a + b·u` of Q(√5), with `u² = u + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct F0Elem {
    a: Q,
    b: Q,
}

pub(crate) fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sign of `p + q·√5` for rationals `p`, `q`, decided exactly.
pub(crate) fn sign_with_sqrt5(p: &Q, q: &Q) -> Ordering {
    let zero = Q::zero();
    let sp = p.cmp(&zero);
    let sq = q.cmp(&zero);
    if sq == Ordering::Equal || sp == sq {
        return sp;
    }
    if sp == Ordering::Equal {
        return sq;
    }
    let p2 = p * p;
    let q2 = q * q * q_int(5);
    if p2 > q2 {
        sp
    } else {
        sq
    }
}

impl F0Elem {
    pub fn new(a: Q, b: Q) -> Self {
        F0Elem { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        F0Elem::new(q_int(a), q_int(b))
    }

    pub fn from_bigints(a: BigInt, b: BigInt) -> Self {
        F0Elem::new(Q::from_integer(a), Q::from_integer(b))
    }

    pub fn from_rational(a: Q) -> Self {
        F0Elem::new(a, Q::zero())
    }

    pub fn zero() -> Self {
        F0Elem::from_ints(0, 0)
    }

    pub fn one() -> Self {
        F0Elem::from_ints(1, 0)
    }

    pub fn u() -> Self {
        F0Elem::from_ints(0, 1)
    }

    /// `√5 = 2u − 1`.
    pub fn sqrt5() -> Self {
        F0Elem::from_ints(-1, 2)
    }

    pub fn a(&self) -> &Q {
        &self.a
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate, `u ↦ 1 − u`.
    pub fn tau(&self) -> Self {
        F0Elem::new(&self.a + &self.b, -&self.b)
    }

    pub fn norm(&self) -> Q {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn trace(&self) -> Q {
        &self.a + &self.a + &self.b
    }

    pub fn norm_trace(&self) -> (Q, Q) {
        (self.norm(), self.trace())
    }

    pub fn scale(&self, c: &Q) -> Self {
        F0Elem::new(&self.a * c, &self.b * c)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(self.tau().scale(&n.recip()))
    }

    pub fn checked_div(&self, rhs: &F0Elem) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = F0Elem::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = sq.square();
            k >>= 1;
        }
        Some(acc)
    }

    /// Exact sign of the first real embedding (`u ↦ (1+√5)/2`).
    pub fn sign_tau1(&self) -> Ordering {
        sign_with_sqrt5(&(&self.a + &self.a + &self.b), &self.b)
    }

    /// Exact sign of the second real embedding (`u ↦ (1−√5)/2`).
    pub fn sign_tau2(&self) -> Ordering {
        sign_with_sqrt5(&(&self.a + &self.a + &self.b), &-&self.b)
    }

    pub fn is_totally_positive(&self) -> bool {
        self.sign_tau1() == Ordering::Greater && self.sign_tau2() == Ordering::Greater
    }

    pub fn tau1(&self) -> f64 {
        q_f64(&self.a) + q_f64(&self.b) * PHI
    }

    pub fn tau2(&self) -> f64 {
        q_f64(&self.a) + q_f64(&self.b) * PHI_CONJ
    }

    /// Coefficients as machine integers, when integral and small enough.
    pub fn to_i128_pair(&self) -> Option<(i128, i128)> {
        if !self.is_integral() {
            return None;
        }
        Some((self.a.to_integer().to_i128()?, self.b.to_integer().to_i128()?))
    }

    pub fn from_i128_pair(a: i128, b: i128) -> Self {
        F0Elem::from_bigints(BigInt::from(a), BigInt::from(b))
    }

    /// Integer coefficients, when integral.
    pub fn to_bigint_pair(&self) -> Option<(BigInt, BigInt)> {
        if !self.is_integral() {
            return None;
        }
        Some((self.a.to_integer(), self.b.to_integer()))
    }

    /// Lexicographic order on the coefficient pair `(a, b)`; a fixed total order for output.
    pub fn cmp_coeffs(&self, other: &F0Elem) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

pub(crate) fn q_f64(x: &Q) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => x.to_f64().unwrap_or(f64::NAN),
    }
}

impl<'a, 'b> Add<&'b F0Elem> for &'a F0Elem {
    type Output = F0Elem;
    fn add(self, rhs: &'b F0Elem) -> F0Elem {
        F0Elem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a, 'b> Sub<&'b F0Elem> for &'a F0Elem {
    type Output = F0Elem;
    fn sub(self, rhs: &'b F0Elem) -> F0Elem {
        F0Elem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a, 'b> Mul<&'b F0Elem> for &'a F0Elem {
    type Output = F0Elem;
    fn mul(self, rhs: &'b F0Elem) -> F0Elem {
        let bd = &self.b * &rhs.b;
        F0Elem::new(&self.a * &rhs.a + &bd, &self.a * &rhs.b + &self.b * &rhs.a + bd)
    }
}

impl<'a> Neg for &'a F0Elem {
    type Output = F0Elem;
    fn neg(self) -> F0Elem {
        F0Elem::new(-&self.a, -&self.b)
    }
}

forward_all!(F0Elem);

impl From<i64> for F0Elem {
    fn from(n: i64) -> Self {
        F0Elem::from_ints(n, 0)
    }
}

impl From<Q> for F0Elem {
    fn from(q: Q) -> Self {
        F0Elem::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_trace_examples() {
        assert_eq!(F0Elem::u().norm_trace(), (q_int(-1), q_int(1)));
        assert_eq!(F0Elem::from(3).norm_trace(), (q_int(9), q_int(6)));
        assert_eq!(F0Elem::from_ints(2, 1).norm_trace(), (q_int(5), q_int(5)));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(F0Elem::u().tau(), F0Elem::from_ints(1, -1));
        assert_eq!(F0Elem::from(7).tau(), F0Elem::from(7));
        assert_eq!(F0Elem::from_ints(75, 56).tau(), F0Elem::from_ints(131, -56));
        let x = F0Elem::new(Q::new(3.into(), 7.into()), q_int(-5));
        assert_eq!(x.tau().tau(), x);
    }

    #[test]
    fn sqrt5_squares_to_five() {
        assert_eq!(F0Elem::sqrt5().square(), F0Elem::from(5));
        assert_eq!(F0Elem::u().square(), &F0Elem::u() + &F0Elem::one());
    }

    #[test]
    fn total_positivity_examples() {
        assert!(!F0Elem::u().is_totally_positive());
        assert!(F0Elem::from_ints(2, 1).is_totally_positive());
        let u_sqrt5 = F0Elem::u() * F0Elem::sqrt5();
        assert_eq!(u_sqrt5, F0Elem::from_ints(2, 1));
        assert!(u_sqrt5.is_totally_positive());
        assert!(!F0Elem::from_ints(1, -1).is_totally_positive());
        assert!(F0Elem::from_ints(2, -1).is_totally_positive());
        assert!(!F0Elem::zero().is_totally_positive());
    }

    #[test]
    fn exact_signs_match_floats() {
        for a in -20..20 {
            for b in -20..20 {
                let x = F0Elem::from_ints(a, b);
                let s1 = x.sign_tau1();
                let f1 = x.tau1();
                if f1.abs() > 1e-9 {
                    assert_eq!(s1, f1.partial_cmp(&0.0).unwrap());
                }
                let f2 = x.tau2();
                if f2.abs() > 1e-9 {
                    assert_eq!(x.sign_tau2(), f2.partial_cmp(&0.0).unwrap());
                }
            }
        }
    }

    #[test]
    fn inverse_and_powers() {
        let u = F0Elem::u();
        assert_eq!(u.inv().unwrap(), F0Elem::from_ints(-1, 1));
        assert_eq!(u.pow(-2).unwrap() * u.pow(2).unwrap(), F0Elem::one());
        assert_eq!(u.pow(6).unwrap(), F0Elem::from_ints(5, 8));
        assert!(F0Elem::zero().inv().is_none());
    }
}

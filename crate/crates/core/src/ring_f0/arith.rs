//! Euclidean arithmetic in Z[u]: division with remainder, gcd, factorization,
//! unit normalization and reduction modulo principal ideals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::elem::{F0Elem, Q};
use crate::error::{Error, Result};
use crate::nt;

fn round_half_up(x: &Q) -> BigInt {
    (x + Q::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

fn require_integral(x: &F0Elem, what: &str) -> Result<()> {
    if x.is_integral() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} must be integral")))
    }
}

pub fn is_unit(x: &F0Elem) -> bool {
    x.is_integral() && x.norm().abs().is_one()
}

/// `x / y` when the quotient lies in Z[u].
pub fn exact_div(x: &F0Elem, y: &F0Elem) -> Option<F0Elem> {
    let q = x.checked_div(y)?;
    q.is_integral().then_some(q)
}

pub fn divides(d: &F0Elem, x: &F0Elem) -> bool {
    if d.is_zero() {
        return x.is_zero();
    }
    exact_div(x, d).is_some()
}

/// Division with remainder: `x = q·y + r` with `|N(r)| < |N(y)|`.
pub fn div_rem(x: &F0Elem, y: &F0Elem) -> (F0Elem, F0Elem) {
    let exact = x.checked_div(y).expect("division by zero");
    let q = F0Elem::from_bigints(round_half_up(exact.a()), round_half_up(exact.b()));
    let r = x - &(&q * y);
    (q, r)
}

pub fn gcd(x: &F0Elem, y: &F0Elem) -> F0Elem {
    let (mut a, mut b) = (x.clone(), y.clone());
    while !b.is_zero() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

pub fn associated(x: &F0Elem, y: &F0Elem) -> bool {
    match exact_div(x, y) {
        Some(q) => is_unit(&q),
        None => false,
    }
}

/// Multiply by a power of `u^(2n)` so that the embedding ratio `τ₁/τ₂` of a totally
/// positive `x` lies in `[φ^(−2n), φ^(2n))`. Returns the balanced element and the
/// exponent `k` with `balanced = x·u^(2nk)`.
pub fn balance(x: &F0Elem, n: i64) -> (F0Elem, i64) {
    debug_assert!(x.is_totally_positive());
    let un = F0Elem::u().pow(n).unwrap();
    let step = un.square();
    let step_inv = step.inv().unwrap();
    let ratio = (x.tau1() / x.tau2()).ln();
    let width = 4.0 * (n as f64) * super::elem::PHI.ln();
    let mut k = if ratio.is_finite() { -(ratio / width).round() as i64 } else { 0 };
    let mut y = x * &step.pow(k).unwrap();
    let untau = un.tau();
    loop {
        if (&y * &un).trace() < Q::zero() {
            y = &y * &step;
            k += 1;
        } else if (&y * &untau).trace() <= Q::zero() {
            y = &y * &step_inv;
            k -= 1;
        } else {
            return (y, k);
        }
    }
}

/// The totally positive, balanced associate of a nonzero `x`, with `x = unit·canon`.
pub fn canonical_associate(x: &F0Elem) -> (F0Elem, F0Elem) {
    assert!(!x.is_zero());
    let mut y = x.clone();
    if y.norm() < Q::zero() {
        y = &y * &F0Elem::u();
    }
    if y.sign_tau1() == Ordering::Less {
        y = -y;
    }
    let (c, _) = balance(&y, 1);
    let unit = x.checked_div(&c).unwrap();
    (unit, c)
}

/// Rational prime below an integral element of prime-power norm.
fn prime_factors_of_norm(x: &F0Elem) -> Result<Vec<(u64, u32)>> {
    let n = x.norm().abs().to_integer();
    let n = n.to_u64().ok_or_else(|| Error::Precondition("norm exceeds 64 bits".into()))?;
    Ok(nt::factor_u64(n))
}

/// The canonical primes of Z[u] above the rational prime `p`.
pub fn primes_above(p: u64) -> Vec<F0Elem> {
    let pe = F0Elem::from(p as i64);
    match p % 5 {
        0 => vec![canonical_associate(&F0Elem::sqrt5()).1],
        1 | 4 => {
            let s = nt::sqrt_mod(5, p).expect("5 is a square mod p");
            let half = nt::inv_mod(2, p);
            let mut out: Vec<F0Elem> = [s, p - s]
                .iter()
                .map(|&si| {
                    let r = nt::mul_mod((1 + si) % p, half, p);
                    let g = gcd(&pe, &(F0Elem::u() - F0Elem::from(r as i64)));
                    canonical_associate(&g).1
                })
                .collect();
            out.sort_by(|a, b| a.cmp_coeffs(b));
            out.dedup();
            out
        }
        _ => vec![canonical_associate(&pe).1],
    }
}

/// Factorization `x = unit · Π πᵢ^eᵢ` into canonical primes.
pub fn factor(x: &F0Elem) -> Result<(F0Elem, Vec<(F0Elem, u32)>)> {
    require_integral(x, "factored element")?;
    if x.is_zero() {
        return Err(Error::Precondition("cannot factor zero".into()));
    }
    let mut rest = x.clone();
    let mut out = Vec::new();
    for (p, _) in prime_factors_of_norm(x)? {
        for pi in primes_above(p) {
            let mut e = 0;
            while let Some(q) = exact_div(&rest, &pi) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((pi, e));
            }
        }
    }
    if !is_unit(&rest) {
        return Err(Error::InvariantViolation("factorization left a non-unit".into()));
    }
    Ok((rest, out))
}

/// Prime test through the norm: `N = ±p`, or `N = ±p²` with `p` inert and `x ~ p`.
pub fn is_irreducible(x: &F0Elem) -> Result<bool> {
    require_integral(x, "argument")?;
    if x.is_zero() || is_unit(x) {
        return Err(Error::Precondition("zero and units are neither prime nor composite".into()));
    }
    let f = prime_factors_of_norm(x)?;
    Ok(match f.as_slice() {
        [(_, 1)] => true,
        [(p, 2)] => matches!(p % 5, 2 | 3) && associated(x, &F0Elem::from(*p as i64)),
        _ => false,
    })
}

/// Hermite basis `{(A,0), (C,D)}` of the ideal `m·Z[u]` in `(a,b)` coordinates.
fn ideal_hnf(m: &F0Elem) -> (BigInt, BigInt, BigInt) {
    let (m0, m1) = m.to_bigint_pair().expect("integral modulus");
    let v1 = (m0.clone(), m1.clone());
    let v2 = (m1.clone(), &m0 + &m1);
    let ext = v1.1.extended_gcd(&v2.1);
    let g = ext.gcd.clone();
    let (c, d) = if g.is_zero() {
        (BigInt::zero(), BigInt::zero())
    } else {
        (&ext.x * &v1.0 + &ext.y * &v2.0, g.clone())
    };
    let norm = m.norm().to_integer().abs();
    if d.is_zero() {
        // m1 = 0 and m0 = 0 cannot both hold for m ≠ 0, so d = 0 is unreachable.
        unreachable!("zero modulus");
    }
    let a = &norm / &d;
    let c = c.mod_floor(&a);
    (a, c, d.abs())
}

/// Canonical representative of `x mod m·Z[u]`: coefficients `(i, j)` with
/// `0 ≤ j < D`, `0 ≤ i < A` for the Hermite basis of the ideal.
pub fn mod_reduce(x: &F0Elem, m: &F0Elem) -> Result<F0Elem> {
    require_integral(x, "reduced element")?;
    require_integral(m, "modulus")?;
    if m.is_zero() {
        return Err(Error::Precondition("modulus must be nonzero".into()));
    }
    let (a_, c_, d_) = ideal_hnf(m);
    let (mut a, mut b) = x.to_bigint_pair().unwrap();
    let k = b.div_floor(&d_);
    b -= &k * &d_;
    a -= &k * &c_;
    a = a.mod_floor(&a_);
    Ok(F0Elem::from_bigints(a, b))
}

/// All canonical residues modulo `m`, in `(b, a)` increasing order.
pub fn residues(m: &F0Elem) -> Vec<F0Elem> {
    let (a_, _, d_) = ideal_hnf(m);
    let (na, nd) = (a_.to_i64().unwrap(), d_.to_i64().unwrap());
    let mut out = Vec::new();
    for j in 0..nd {
        for i in 0..na {
            out.push(F0Elem::from_ints(i, j));
        }
    }
    out
}

pub fn congruent(x: &F0Elem, y: &F0Elem, m: &F0Elem) -> Result<bool> {
    Ok(mod_reduce(&(x - y), m)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> F0Elem {
        F0Elem::from_ints(a, b)
    }

    #[test]
    fn euclidean_remainder_shrinks() {
        for a in -15..15 {
            for b in -15..15 {
                let x = e(a, b);
                for y in [e(3, 1), e(7, 0), e(2, -5), e(0, 1)] {
                    let (q, r) = div_rem(&x, &y);
                    assert_eq!(&q * &y + &r, x);
                    assert!(r.norm().abs() < y.norm().abs());
                }
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&e(3, 0)).unwrap());
        assert!(is_irreducible(&e(2, 1)).unwrap());
        assert!(!is_irreducible(&e(4, 0)).unwrap());
        assert!(!is_irreducible(&e(11, 0)).unwrap());
        assert!(is_irreducible(&e(3, 1)).unwrap());
        assert!(is_irreducible(&e(1, 0)).is_err());
        assert!(is_irreducible(&e(0, 0)).is_err());
        assert!(is_irreducible(&e(0, 1)).is_err());
    }

    #[test]
    fn mod_reduce_examples() {
        assert_eq!(mod_reduce(&e(-3, 0), &e(4, 0)).unwrap(), e(1, 0));
        let u2 = F0Elem::u().square();
        assert_eq!(mod_reduce(&u2, &e(2, 0)).unwrap(), u2);
        assert_eq!(mod_reduce(&e(3, 5), &e(2, 0)).unwrap(), u2);
        assert_eq!(residues(&e(2, 0)).len(), 4);
        assert_eq!(residues(&e(4, 0)).len(), 16);
        assert_eq!(residues(&e(3, 1)).len(), 11);
    }

    #[test]
    fn mod_reduce_is_canonical() {
        for m in [e(4, 0), e(3, 1), e(2, 1), e(5, -7), e(8, 0)] {
            let res = residues(&m);
            for a in -12..12 {
                for b in -12..12 {
                    let x = e(a, b);
                    let r = mod_reduce(&x, &m).unwrap();
                    assert!(res.contains(&r));
                    assert!(divides(&m, &(&x - &r)));
                }
            }
            for (i, r) in res.iter().enumerate() {
                for s in &res[i + 1..] {
                    assert!(!divides(&m, &(r - s)));
                }
            }
        }
    }

    #[test]
    fn factorization_roundtrip() {
        for a in -30..30 {
            for b in -30..30 {
                let x = e(a, b);
                if x.is_zero() {
                    continue;
                }
                let (unit, fs) = factor(&x).unwrap();
                assert!(is_unit(&unit));
                let mut prod = unit.clone();
                for (p, k) in &fs {
                    assert!(is_irreducible(p).unwrap());
                    assert!(p.is_totally_positive());
                    prod = &prod * &p.pow(*k as i64).unwrap();
                }
                assert_eq!(prod, x);
            }
        }
    }

    #[test]
    fn primes_above_split_and_inert() {
        let ps = primes_above(11);
        assert_eq!(ps.len(), 2);
        for p in &ps {
            assert_eq!(p.norm(), Q::from_integer(11.into()));
        }
        assert!(associated(&ps[0].tau(), &ps[1]));
        assert_eq!(primes_above(7), vec![e(7, 0)]);
        assert_eq!(primes_above(5)[0].norm(), Q::from_integer(5.into()));
    }

    #[test]
    fn balanced_associates_are_stable() {
        let x = e(75, 56);
        let (b, _) = balance(&x, 3);
        let (b2, k2) = balance(&(&b * &F0Elem::u().pow(12).unwrap()), 3);
        assert_eq!(b, b2);
        assert_eq!(k2, -2);
    }
}

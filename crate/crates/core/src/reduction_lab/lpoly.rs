//! L-polynomials of genus-4 curves from point counts over `F_{p^k}`, `k = 1..4`.

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::count::count_points_rational;
use crate::error::{Error, Result};
use crate::ring_f0::Q;

pub const GENUS: usize = 4;

/// `L(T) = Σ aᵢ Tⁱ` of degree 8 with `a₀ = 1` and `a_{8−i} = p^{4−i}·aᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LPolynomial {
    pub p: u64,
    pub coeffs: Vec<i64>,
}

impl LPolynomial {
    /// From `N_k = #C(F_{p^k})`, `k = 1..4`, by Newton's identities.
    pub fn from_counts(p: u64, counts: &[u64; 4]) -> Result<Self> {
        let pi = p as i128;
        let s: Vec<i128> = (1..=4u32).map(|k| pi.pow(k) + 1 - counts[k as usize - 1] as i128).collect();
        // e_k = (1/k) Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} S_i
        let mut e = vec![1i128];
        for k in 1..=4usize {
            let mut acc = 0i128;
            for i in 1..=k {
                let term = e[k - i] * s[i - 1];
                acc += if i % 2 == 1 { term } else { -term };
            }
            if acc % k as i128 != 0 {
                return Err(Error::InconsistentCounts(format!(
                    "Newton identity at k = {k} is not integral for p = {p}"
                )));
            }
            e.push(acc / k as i128);
        }
        let mut a = vec![0i128; 2 * GENUS + 1];
        for i in 0..=GENUS {
            a[i] = if i % 2 == 0 { e[i] } else { -e[i] };
        }
        for i in 0..GENUS {
            a[2 * GENUS - i] = pi.pow((GENUS - i) as u32) * a[i];
        }
        let coeffs = a
            .into_iter()
            .map(|c| i64::try_from(c).map_err(|_| Error::InconsistentCounts("coefficient overflow".into())))
            .collect::<Result<Vec<_>>>()?;
        let out = LPolynomial { p, coeffs };
        out.validate()?;
        Ok(out)
    }

    pub fn functional_equation_holds(&self) -> bool {
        let p = self.p as i128;
        self.coeffs.len() == 2 * GENUS + 1
            && self.coeffs[0] == 1
            && (0..=GENUS).all(|i| {
                self.coeffs[2 * GENUS - i] as i128 == p.pow((GENUS - i) as u32) * self.coeffs[i] as i128
            })
    }

    /// `|aᵢ| ≤ C(8, i)·p^{i/2}` for `i ≤ 4`.
    pub fn weil_bounds_hold(&self) -> bool {
        let binom = [1.0, 8.0, 28.0, 56.0, 70.0];
        let sp = (self.p as f64).sqrt();
        (0..=GENUS).all(|i| (self.coeffs[i] as f64).abs() <= binom[i] * sp.powi(i as i32) + 1e-9)
    }

    /// `#C(F_{p^k})` predicted by this polynomial.
    pub fn predicted_count(&self, k: u32) -> i128 {
        let mut s = vec![0i128; k as usize + 1];
        // power sums of the reciprocal roots from the coefficients
        let e: Vec<i128> = (0..=2 * GENUS)
            .map(|i| if i % 2 == 0 { self.coeffs[i] as i128 } else { -(self.coeffs[i] as i128) })
            .collect();
        for m in 1..=k as usize {
            let mut acc = if m <= 2 * GENUS { m as i128 * e[m] * if m % 2 == 1 { 1 } else { -1 } } else { 0 };
            for i in 1..m {
                if i <= 2 * GENUS {
                    let term = e[i] * s[m - i];
                    acc += if i % 2 == 1 { term } else { -term };
                }
            }
            s[m] = acc;
        }
        (self.p as i128).pow(k) + 1 - s[k as usize]
    }

    /// Distinct reciprocal roots `α` (roots of `X⁸ L(1/X)`).
    pub fn reciprocal_roots(&self) -> Vec<Complex64> {
        let monic: Vec<Q> = self.coeffs.iter().rev().map(|&c| Q::from_integer(c.into())).collect();
        let sf = squarefree(&monic);
        let d = sf.len() - 1;
        let sp = (self.p as f64).sqrt();
        // roots y = α/√p lie on the unit circle
        let scaled: Vec<Complex64> = sf
            .iter()
            .enumerate()
            .map(|(i, c)| Complex64::new(c.to_f64().unwrap() * sp.powi(i as i32 - d as i32), 0.0))
            .collect();
        aberth(&scaled).into_iter().map(|y| y * sp).collect()
    }

    /// `max_α | |α| − √p |`.
    pub fn root_modulus_deviation(&self) -> f64 {
        let sp = (self.p as f64).sqrt();
        self.reciprocal_roots().iter().map(|a| (a.norm() - sp).abs()).fold(0.0, f64::max)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.functional_equation_holds() {
            return Err(Error::InconsistentCounts("functional equation fails".into()));
        }
        if !self.weil_bounds_hold() {
            return Err(Error::InconsistentCounts(format!("Weil bound fails for p = {}", self.p)));
        }
        let dev = self.root_modulus_deviation();
        if dev > crate::tolerance::ROOT_MODULUS {
            return Err(Error::InconsistentCounts(format!("root modulus off by {dev:e}")));
        }
        Ok(())
    }
}

/// Counts `N_1..N_4` for rational `t` at a good prime.
pub fn counts_for(t: &Q, p: u64) -> Result<[u64; 4]> {
    let mut out = [0u64; 4];
    for k in 1..=4u32 {
        out[k as usize - 1] = count_points_rational(t, p, k)?;
    }
    Ok(out)
}

pub fn l_polynomial(t: &Q, p: u64) -> Result<LPolynomial> {
    LPolynomial::from_counts(p, &counts_for(t, p)?)
}

type Poly = Vec<Q>;

fn trim(mut a: Poly) -> Poly {
    while a.len() > 1 && a.last().unwrap().is_zero() {
        a.pop();
    }
    a
}

fn derivative(a: &Poly) -> Poly {
    trim((1..a.len()).map(|i| &a[i] * Q::from_integer((i as i64).into())).collect())
}

/// Quotient and remainder of polynomials with coefficients in increasing degree.
fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    if r.len() < b.len() {
        return (vec![Q::zero()], r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![Q::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &c * bi;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
        if r.len() < b.len() {
            break;
        }
    }
    if r.is_empty() {
        r.push(Q::zero());
    }
    (trim(q), r)
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !(b.len() == 1 && b[0].is_zero()) {
        let (_, r) = divmod(&a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().unwrap().clone();
    a.iter().map(|c| c / &lead).collect()
}

/// `a / gcd(a, a')`, monic.
fn squarefree(a: &Poly) -> Poly {
    let g = gcd(a, &derivative(a));
    let (q, _) = divmod(a, &g);
    let lead = q.last().unwrap().clone();
    q.iter().map(|c| c / &lead).collect()
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::zero();
    let mut d = Complex64::zero();
    for &a in c.iter().rev() {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

/// Simultaneous roots of a monic polynomial by the Aberth–Ehrlich iteration.
pub fn aberth(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for k in 0..n {
            let (v, d) = horner(c, z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| Complex64::one() / (z[k] - z[j])).sum();
            let w = ratio / (Complex64::one() - ratio * s);
            z[k] -= w;
            delta = delta.max(w.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

//! Finite fields `F_{p^k}` through exp/log tables. Elements are encoded as integers
//! `c₀ + c₁p + … + c_{k−1}p^{k−1}` in the polynomial basis of a primitive modulus.

use crate::error::{Error, Result};
use crate::nt;

/// Largest field order for which a full table is built.
pub const MAX_TABLE_ORDER: u64 = 1 << 24;

pub const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct GfTable {
    p: u32,
    k: u32,
    q: u32,
    /// `T^k = Σ modulus[i]·T^i`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn digits(x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(k as usize);
    let mut x = x;
    for _ in 0..k {
        d.push(x % p);
        x /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl GfTable {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !nt::is_prime(p) || k == 0 {
            return Err(Error::Precondition(format!("F_{{{p}^{k}}} is not a field size")));
        }
        let q = (p as u128).pow(k);
        if q > MAX_TABLE_ORDER as u128 {
            return Err(Error::Precondition(format!("table for {p}^{k} too large")));
        }
        let (p, q) = (p as u32, q as u32);
        if k == 1 {
            let g = primitive_root(p);
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut log = vec![NO_LOG; q as usize];
            let mut x = 1u32;
            for i in 0..q - 1 {
                exp.push(x);
                log[x as usize] = i;
                x = ((x as u64 * g as u64) % p as u64) as u32;
            }
            return Ok(GfTable { p, k, q, modulus: vec![g], exp, log });
        }
        // Candidate moduli are enumerated in a fixed order so tables are reproducible.
        for code in 0..q {
            let m = digits(code, p, k);
            if m[0] == 0 {
                continue;
            }
            if let Some((exp, log)) = try_primitive(p, k, q, &m) {
                return Ok(GfTable { p, k, q, modulus: m, exp, log });
            }
        }
        Err(Error::InvariantViolation("no primitive modulus found".into()))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Generator of the multiplicative group.
    pub fn generator(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn log(&self, x: u32) -> u32 {
        self.log[x as usize]
    }

    #[inline]
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let s = self.log[x as usize] as u64 + self.log[y as usize] as u64;
        self.exp(s)
    }

    pub fn inv(&self, x: u32) -> Option<u32> {
        if x == 0 {
            return None;
        }
        let n = self.q as u64 - 1;
        Some(self.exp(n - self.log[x as usize] as u64))
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        let n = self.q as u64 - 1;
        self.exp((self.log[x as usize] as u64 % n) * (e % n) % n)
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        if self.k == 1 {
            return (x + y) % self.p;
        }
        let (mut x, mut y) = (x, y);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, x: u32) -> u32 {
        let mut x = x;
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    /// `x − r` for `r` in the prime field; only the constant digit changes.
    #[inline]
    pub fn sub_prime(&self, x: u32, r: u32) -> u32 {
        let c = x % self.p;
        x - c + (c + self.p - r) % self.p
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<u32> {
        if c.len() > self.k as usize || c.iter().any(|&d| d >= self.p) {
            return Err(Error::Precondition("coefficients outside F_p or too many".into()));
        }
        Ok(undigits(c, self.p))
    }

    pub fn coeffs(&self, x: u32) -> Vec<u32> {
        digits(x, self.p, self.k)
    }
}

fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let n = p as u64 - 1;
    let fs = nt::factor_u64(n);
    (2..p).find(|&g| fs.iter().all(|&(l, _)| nt::pow_mod(g as u64, n / l, p as u64) != 1)).unwrap()
}

/// Exp/log tables if `T` generates `(F_p[T]/m)^*`; `m` holds `T^k = Σ m_i T^i`.
fn try_primitive(p: u32, k: u32, q: u32, m: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = q - 1;
    let mut exp = Vec::with_capacity(n as usize);
    let mut log = vec![NO_LOG; q as usize];
    let mut x = vec![0u32; k as usize];
    x[0] = 1;
    for i in 0..n {
        let code = undigits(&x, p);
        if log[code as usize] != NO_LOG {
            return None;
        }
        log[code as usize] = i;
        exp.push(code);
        let top = x[k as usize - 1];
        for j in (1..k as usize).rev() {
            x[j] = x[j - 1];
        }
        x[0] = 0;
        for j in 0..k as usize {
            x[j] = ((x[j] as u64 + top as u64 * m[j] as u64) % p as u64) as u32;
        }
    }
    (x.first() == Some(&1) && x[1..].iter().all(|&c| c == 0)).then_some((exp, log))
}

/// `F_{p⁴} = F_{p²}[θ]/(θ² − c)` on top of a table for `F_{p²}`, `c` the table generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quad(pub u32, pub u32);

pub struct QuadExt<'a> {
    pub base: &'a GfTable,
    pub c: u32,
}

impl<'a> QuadExt<'a> {
    pub fn new(base: &'a GfTable) -> Self {
        QuadExt { base, c: base.generator() }
    }

    pub fn mul(&self, x: Quad, y: Quad) -> Quad {
        let f = self.base;
        let r0 = f.add(f.mul(x.0, y.0), f.mul(self.c, f.mul(x.1, y.1)));
        let r1 = f.add(f.mul(x.0, y.1), f.mul(x.1, y.0));
        Quad(r0, r1)
    }

    pub fn pow(&self, mut x: Quad, mut e: u64) -> Quad {
        let mut acc = Quad(1, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        for (p, k) in [(2, 3), (3, 2), (7, 2), (11, 1), (3, 4), (13, 2)] {
            let f = GfTable::new(p, k).unwrap();
            let q = f.order();
            assert_eq!(q as u64, p.pow(k));
            for x in 1..q {
                assert_eq!(f.exp(f.log(x) as u64), x);
                assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
                assert_eq!(f.add(x, f.neg(x)), 0);
            }
            // distributivity on a sample
            for x in (0..q).step_by(3) {
                for y in (0..q).step_by(5) {
                    let z = f.generator();
                    assert_eq!(f.mul(z, f.add(x, y)), f.add(f.mul(z, x), f.mul(z, y)));
                }
            }
        }
    }

    #[test]
    fn quadratic_extension_has_order_p4_minus_one() {
        for p in [3u64, 7, 11] {
            let base = GfTable::new(p, 2).unwrap();
            let ext = QuadExt::new(&base);
            let n = p.pow(4) - 1;
            let x = Quad(1, 1);
            assert_eq!(ext.pow(x, n), Quad(1, 0));
            let theta = Quad(0, 1);
            assert_eq!(ext.pow(theta, p * p), Quad(0, base.neg(1)));
        }
    }
}

//! `#C_t(F_q)` for the smooth projective model of `y⁵ = x(x−1)(x−t)`.
//!
//! Above each affine `x` there are 1, 5 or 0 points according to whether `f(x)`
//! is zero, a nonzero fifth power or not; there is one point at infinity. When
//! `q ≢ 1 mod 5` every `x` has one point and the count is `q + 1`.
//!
//! For `t ∈ F_p` the fifth-power character is evaluated multiplicatively on the
//! three factors `x − r`, `r ∈ {0, 1, t}`:
//! - `F_p`, `F_{p²}`: discrete logs of the factors;
//! - `F_{p³}`: the character factors through the norm to `F_p`, and
//!   `N(x − r) = −m_x(r)` for the characteristic polynomial `m_x`;
//! - `F_{p⁴} = F_{p²}(θ)`: through the norm `(a−r)² − c·b²` when `5 | p² − 1`,
//!   and through the class of `(a − r)/b` in `F_{p⁴}^*/F_{p²}^*` when `5 | p² + 1`.

use rayon::prelude::*;

use super::field::{GfTable, Quad, QuadExt, NO_LOG};
use crate::error::{Error, Result};
use crate::nt;
use crate::ring_f0::Q;

/// Largest `q = p^k` accepted by [`count_points`].
pub const MAX_Q: u128 = 1 << 32;

/// `t mod p` for rational `t`, or `None` when `p` divides the denominator.
pub fn reduce_mod_p(t: &Q, p: u64) -> Option<u64> {
    let d = nt::big_mod(t.denom(), p);
    if d == 0 {
        return None;
    }
    let n = nt::big_mod(t.numer(), p);
    Some(nt::mul_mod(n, nt::inv_mod(d, p), p))
}

/// Why `p` cannot be used for `t`, if it cannot.
pub fn bad_reason(t: &Q, p: u64) -> Option<String> {
    if p == 5 {
        return Some("p = 5 divides the order of the automorphism".into());
    }
    match reduce_mod_p(t, p) {
        None => Some("t has a pole mod p".into()),
        Some(0) => Some("t ≡ 0 mod p".into()),
        Some(1) => Some("t ≡ 1 mod p".into()),
        Some(_) => None,
    }
}

fn check_args(t: u64, p: u64, k: u32) -> Result<u64> {
    if !nt::is_prime(p) || k == 0 {
        return Err(Error::Precondition(format!("{p}^{k} is not a prime power")));
    }
    if p == 5 {
        return Err(Error::BadPrime { p, reason: "p = 5".into() });
    }
    let q = (p as u128).checked_pow(k).filter(|&q| q <= MAX_Q);
    let Some(q) = q else {
        return Err(Error::Precondition(format!("{p}^{k} exceeds 2^32")));
    };
    let t = t % p;
    if t == 0 || t == 1 {
        return Err(Error::BadPrime { p, reason: format!("degenerate parameter t = {t}") });
    }
    Ok(q as u64)
}

#[inline]
fn fiber(l: u32) -> u64 {
    if l % 5 == 0 {
        5
    } else {
        0
    }
}

/// `#C_t(F_{p^k})` for `t ∈ F_p ∖ {0, 1}`.
pub fn count_points(t: u64, p: u64, k: u32) -> Result<u64> {
    let q = check_args(t, p, k)?;
    let t = t % p;
    if q % 5 != 1 {
        return Ok(q + 1);
    }
    match k {
        1 | 2 => count_small(t, p, k),
        3 => count_cubic(t, p),
        4 => {
            if (p * p) % 5 == 1 {
                count_quartic_norm(t, p)
            } else {
                count_quartic_coset(t, p)
            }
        }
        _ => Err(Error::Precondition("only k ≤ 4 has a fast path".into())),
    }
}

pub fn count_points_rational(t: &Q, p: u64, k: u32) -> Result<u64> {
    if let Some(reason) = bad_reason(t, p) {
        return Err(Error::BadPrime { p, reason });
    }
    count_points(reduce_mod_p(t, p).unwrap(), p, k)
}

/// Counts over `F_p` or `F_{p²}` from discrete logs of `x`, `x − 1`, `x − t`.
fn count_small(t: u64, p: u64, k: u32) -> Result<u64> {
    let f = GfTable::new(p, k)?;
    let (t, q) = (t as u32, f.order());
    let mut total = 1u64;
    for x in 0..q {
        let ls = [f.log(x), f.log(f.sub_prime(x, 1)), f.log(f.sub_prime(x, t))];
        if ls.contains(&NO_LOG) {
            total += 1;
        } else {
            total += fiber(ls[0] % 5 + ls[1] % 5 + ls[2] % 5);
        }
    }
    Ok(total)
}

/// Monic irreducible `T³ + m₂T² + m₁T + m₀`, smallest in a fixed order.
fn irreducible_cubic(p: u64) -> [u64; 3] {
    for code in 0..p * p * p {
        let m = [code % p, (code / p) % p, code / (p * p)];
        let has_root = (0..p).any(|r| {
            let v = (nt::pow_mod(r, 3, p) + m[2] * r % p * r + m[1] * r + m[0]) % p;
            v == 0
        });
        if !has_root {
            return m;
        }
    }
    unreachable!("irreducible cubics exist over every prime field")
}

/// `#C_t(F_{p³})` for `p ≡ 1 mod 5`, where the character factors through `N: F_{p³} → F_p`.
fn count_cubic(t: u64, p: u64) -> Result<u64> {
    let fp = GfTable::new(p, 1)?;
    let m = irreducible_cubic(p);
    // T³ = −m₀ − m₁T − m₂T²
    let red = [(p - m[0]) % p, (p - m[1]) % p, (p - m[2]) % p];
    let rs = [0u64, 1, t];
    let total: u64 = (0..p)
        .into_par_iter()
        .map(|x0| {
            let mut acc = 0u64;
            for x1 in 0..p {
                for x2 in 0..p {
                    // Columns of multiplication by x on the basis 1, T, T².
                    let c0 = [x0, x1, x2];
                    let c1 = times_t(c0, red, p);
                    let c2 = times_t(c1, red, p);
                    let e1 = (c0[0] + c1[1] + c2[2]) % p;
                    let minor = |a: [u64; 3], b: [u64; 3], i: usize, j: usize| {
                        (a[i] * b[j] % p + p - a[j] * b[i] % p) % p
                    };
                    let e2 = (minor(c0, c1, 0, 1) + minor(c0, c2, 0, 2) + minor(c1, c2, 1, 2)) % p;
                    let e3 = det3(c0, c1, c2, p);
                    let mut l = 0u32;
                    let mut zero = false;
                    for &r in &rs {
                        // N(x − r) = −m_x(r) = −(r³ − e₁r² + e₂r − e₃)
                        let r2 = r * r % p;
                        let mv = (r2 * r % p + p - e1 * r2 % p + e2 * r % p + p - e3) % p;
                        let nv = (p - mv) % p;
                        let lg = fp.log(nv as u32);
                        if lg == NO_LOG {
                            zero = true;
                            break;
                        }
                        l += lg % 5;
                    }
                    acc += if zero { 1 } else { fiber(l) };
                }
            }
            acc
        })
        .sum();
    Ok(total + 1)
}

fn times_t(c: [u64; 3], red: [u64; 3], p: u64) -> [u64; 3] {
    let top = c[2];
    [top * red[0] % p, (c[0] + top * red[1]) % p, (c[1] + top * red[2]) % p]
}

fn det3(a: [u64; 3], b: [u64; 3], c: [u64; 3], p: u64) -> u64 {
    // columns a, b, c
    let m = |x: u64, y: u64| x * y % p;
    let pos = m(a[0], m(b[1], c[2])) + m(b[0], m(c[1], a[2])) + m(c[0], m(a[1], b[2]));
    let neg = m(c[0], m(b[1], a[2])) + m(a[0], m(c[1], b[2])) + m(b[0], m(a[1], c[2]));
    (pos % p + p - neg % p) % p
}

/// Residue of a discrete log mod 5, with `ZERO` marking the zero element.
const ZERO: u8 = 5;

fn fiber_table() -> [u8; 216] {
    let mut out = [0u8; 216];
    for (i, v) in out.iter_mut().enumerate() {
        let h = [i / 36, (i / 6) % 6, i % 6];
        *v = if h.contains(&(ZERO as usize)) {
            1
        } else if (h[0] + h[1] + h[2]) % 5 == 0 {
            5
        } else {
            0
        };
    }
    out
}

fn log5_table(f: &GfTable) -> Vec<u8> {
    (0..f.order())
        .map(|x| match f.log(x) {
            NO_LOG => ZERO,
            l => (l % 5) as u8,
        })
        .collect()
}

/// Representatives `i` of `b = g^i ∈ F_{p²}^*` under `b ↦ b^p·c^{(p−1)/2}`, the action
/// of the `p`-power Frobenius on the `θ`-coordinate, with orbit sizes. The summand
/// depends only on the orbit because the curve is defined over `F_p`.
fn frobenius_orbits(p: u64, n: u64) -> Vec<(u64, u64)> {
    let step = |i: u64| ((i as u128 * p as u128 + (p as u128 - 1) / 2) % n as u128) as u64;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        let mut size = 0;
        let mut j = i;
        while !seen[j as usize] {
            seen[j as usize] = true;
            size += 1;
            j = step(j);
        }
        out.push((i, size));
    }
    out
}

/// `#C_t(F_{p⁴})` when `5 | p² − 1`: the character of `F_{p⁴}` is that of `F_{p²}`
/// applied to the norm, and `N(a − r + bθ) = (a−r)² − c·b²`.
fn count_quartic_norm(t: u64, p: u64) -> Result<u64> {
    let f = GfTable::new(p, 2)?;
    let (pu, n) = (p as u32, (f.order() - 1) as u64);
    let c = f.generator();
    let l5 = log5_table(&f);
    let sq: Vec<(u32, u32)> = (0..f.order())
        .map(|a| {
            let s = f.mul(a, a);
            (s % pu, s / pu)
        })
        .collect();
    let fib = fiber_table();
    let total: u64 = frobenius_orbits(p, n)
        .par_iter()
        .map(|&(i, w)| {
            let b = f.exp(i);
            let beta = f.mul(c, f.mul(b, b));
            let (b0, b1) = (beta % pu, beta / pu);
            let h: Vec<u8> = sq
                .iter()
                .map(|&(s0, s1)| {
                    let d0 = if s0 >= b0 { s0 - b0 } else { s0 + pu - b0 };
                    let d1 = if s1 >= b1 { s1 - b1 } else { s1 + pu - b1 };
                    l5[(d0 + pu * d1) as usize]
                })
                .collect();
            w * sum_shifted(pu, &h, t as u32, &fib)
        })
        .sum();
    // b = 0: x ∈ F_{p²} and the norm is a square, hence a fifth power iff the base value is.
    let h: Vec<u8> = sq.iter().map(|&(s0, s1)| l5[(s0 + pu * s1) as usize]).collect();
    Ok(1 + total + sum_shifted(pu, &h, t as u32, &fib))
}

/// `Σ_a fiber(h(a) + h(a−1) + h(a−t))` over `F_{p²}`; shifts touch only the constant digit.
fn sum_shifted(p: u32, h: &[u8], t: u32, fib: &[u8; 216]) -> u64 {
    let pu = p as usize;
    let m1: Vec<usize> = (0..p).map(|a| ((a + p - 1) % p) as usize).collect();
    let mt: Vec<usize> = (0..p).map(|a| ((a + p - t) % p) as usize).collect();
    let mut acc = 0u64;
    for row in h.chunks_exact(pu) {
        let mut r = 0u32;
        for a in 0..pu {
            let idx = row[a] as usize * 36 + row[m1[a]] as usize * 6 + row[mt[a]] as usize;
            r += fib[idx] as u32;
        }
        acc += r as u64;
    }
    acc
}

/// `#C_t(F_{p⁴})` when `5 | p² + 1`: the character is trivial on `F_{p²}^*`, so
/// `χ(a + bθ) = ψ(a/b)` with `ψ(s) = χ(s + θ)`.
fn count_quartic_coset(t: u64, p: u64) -> Result<u64> {
    let f = GfTable::new(p, 2)?;
    let ext = QuadExt::new(&f);
    let (t, q2) = (t as u32, f.order() as u64);
    let e = (q2 + 1) / 5;
    // ψ(s) = ((s − θ)/(s + θ))^{(p²+1)/5}; (s+θ)^{p²} = s − θ.
    let mut roots: Vec<Quad> = Vec::new();
    let mut psi = vec![0u8; q2 as usize];
    let raw: Vec<Quad> = (0..q2 as u32)
        .map(|s| {
            let s2 = f.mul(s, s);
            let den = f.inv(f.sub(s2, ext.c)).expect("c is not a square");
            let w = Quad(f.mul(f.add(s2, ext.c), den), f.mul(f.neg(f.add(s, s)), den));
            ext.pow(w, e)
        })
        .collect();
    if let Some(z) = raw.iter().find(|&&w| w != Quad(1, 0)) {
        let mut acc = Quad(1, 0);
        for _ in 0..5 {
            roots.push(acc);
            acc = ext.mul(acc, *z);
        }
    } else {
        return Err(Error::InvariantViolation("ψ is trivial".into()));
    }
    for (s, w) in raw.iter().enumerate() {
        psi[s] = roots
            .iter()
            .position(|r| r == w)
            .ok_or_else(|| Error::InvariantViolation("ψ value outside μ₅".into()))? as u8;
    }
    let n = q2 - 1;
    let psi_exp: Vec<u8> = (0..n).map(|j| psi[f.exp(j) as usize]).collect();
    let logs: Vec<u32> = (0..q2 as u32).map(|a| f.log(a)).collect();
    let fib = fiber_table();
    let nu = n as u32;
    let off: u64 = frobenius_orbits(p, n)
        .par_iter()
        .map(|&(i, w)| {
            // ψ(a/b) with b = g^i
            let shift = nu - i as u32;
            let g: Vec<u8> = logs
                .iter()
                .map(|&l| {
                    if l == NO_LOG {
                        psi[0]
                    } else {
                        let j = l + shift;
                        psi_exp[(if j >= nu { j - nu } else { j }) as usize]
                    }
                })
                .collect();
            w * sum_shifted(p as u32, &g, t, &fib)
        })
        .sum();
    // b = 0 gives x ∈ F_{p²}, where every nonzero value is a fifth power.
    let on_base = 5 * (q2 - 3) + 3;
    Ok(1 + on_base + off)
}

/// Reference count over `F_q` with `t` given by coefficients in the table basis;
/// loops over every `x` and evaluates `f(x)` directly.
pub fn count_points_naive(t: &[u32], p: u64, k: u32) -> Result<u64> {
    let f = GfTable::new(p, k)?;
    let t = f.from_coeffs(t)?;
    if t == 0 || t == 1 {
        return Err(Error::BadPrime { p, reason: "degenerate parameter".into() });
    }
    let q = f.order() as u64;
    let five = q % 5 == 1;
    let mut total = 1u64;
    for x in 0..f.order() {
        let fx = f.mul(f.mul(x, f.sub(x, 1)), f.sub(x, t));
        total += if fx == 0 {
            1
        } else if !five {
            1
        } else {
            fiber(f.log(fx) % 5)
        };
    }
    Ok(total)
}

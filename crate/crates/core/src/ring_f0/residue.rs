//! Residue fields of Z[u] at prime elements and the residue symbols built on them.

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::arith;
use super::elem::{F0Elem, Q};
use crate::error::{Error, Result};
use crate::nt;

/// `Z[u]/(λ)` for a prime element `λ`: `F_p` (degree 1) or `F_p[u]/(u²−u−1)` (degree 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    modulus: F0Elem,
    p: u64,
    degree: u8,
    root: u64,
}

/// Residue `c0 + c1·u`; in degree 1 the second coordinate is always zero.
pub type Residue = (u64, u64);

impl ResidueField {
    pub fn new(lambda: &F0Elem) -> Result<Self> {
        if !arith::is_irreducible(lambda)? {
            return Err(Error::Precondition("residue field modulus must be irreducible".into()));
        }
        let n = lambda.norm().to_integer();
        let n = n.magnitude().to_u64().ok_or_else(|| Error::Precondition("norm too large".into()))?;
        let f = nt::factor_u64(n);
        let (p, e) = f[0];
        let (l0, l1) = lambda.to_bigint_pair().unwrap();
        if e == 2 {
            return Ok(ResidueField { modulus: lambda.clone(), p, degree: 2, root: 0 });
        }
        let l0 = nt::big_mod(&l0, p);
        let l1 = nt::big_mod(&l1, p);
        let root = nt::mul_mod((p - l0) % p, nt::inv_mod(l1, p), p);
        debug_assert_eq!((nt::mul_mod(root, root, p) + 2 * p - root - 1) % p, 0);
        Ok(ResidueField { modulus: lambda.clone(), p, degree: 1, root })
    }

    pub fn modulus(&self) -> &F0Elem {
        &self.modulus
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }

    fn rational_mod(&self, x: &Q) -> Result<u64> {
        let d = nt::big_mod(x.denom(), self.p);
        if d == 0 {
            return Err(Error::Precondition("denominator not invertible in the residue field".into()));
        }
        Ok(nt::mul_mod(nt::big_mod(x.numer(), self.p), nt::inv_mod(d, self.p), self.p))
    }

    pub fn reduce(&self, x: &F0Elem) -> Result<Residue> {
        let a = self.rational_mod(x.a())?;
        let b = self.rational_mod(x.b())?;
        Ok(if self.degree == 1 { ((a + nt::mul_mod(b, self.root, self.p)) % self.p, 0) } else { (a, b) })
    }

    pub fn mul(&self, x: Residue, y: Residue) -> Residue {
        let p = self.p;
        if self.degree == 1 {
            return (nt::mul_mod(x.0, y.0, p), 0);
        }
        let bd = nt::mul_mod(x.1, y.1, p);
        let c0 = (nt::mul_mod(x.0, y.0, p) + bd) % p;
        let c1 = (nt::mul_mod(x.0, y.1, p) + nt::mul_mod(x.1, y.0, p) + bd) % p;
        (c0, c1)
    }

    pub fn pow(&self, mut x: Residue, mut e: u64) -> Residue {
        let mut acc = (1 % self.p, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    pub fn is_one(&self, x: Residue) -> bool {
        x == (1 % self.p, 0)
    }

    /// Whether a nonzero residue is an `n`-th power.
    pub fn is_power(&self, x: Residue, n: u64) -> bool {
        let q1 = self.size() - 1;
        self.is_one(self.pow(x, q1 / q1.gcd(&n)))
    }
}

fn require_odd_prime(lambda: &F0Elem) -> Result<ResidueField> {
    let field = ResidueField::new(lambda)?;
    if field.p == 2 {
        return Err(Error::Precondition("legendre symbol needs an odd-norm modulus".into()));
    }
    Ok(field)
}

/// Quadratic residue symbol `(a/λ)` for a prime `λ` of odd norm.
pub fn legendre(a: &F0Elem, lambda: &F0Elem) -> Result<i8> {
    let field = require_odd_prime(lambda)?;
    let x = field.reduce(a)?;
    if x == (0, 0) {
        return Ok(0);
    }
    let y = field.pow(x, (field.size() - 1) / 2);
    Ok(if field.is_one(y) { 1 } else { -1 })
}

/// Jacobi-type symbol `(a/b)` for integral `b` of odd norm: the product over the prime factors of `b`.
pub fn jacobi(a: &F0Elem, b: &F0Elem) -> Result<i8> {
    if !b.is_integral() || b.is_zero() {
        return Err(Error::Precondition("jacobi modulus must be integral and nonzero".into()));
    }
    if b.norm().to_integer().is_even() {
        return Err(Error::Precondition("jacobi modulus must have odd norm".into()));
    }
    let (_, fs) = arith::factor(b)?;
    let mut acc = 1i8;
    for (pi, e) in fs {
        let s = legendre(a, &pi)?;
        acc *= s.pow(e);
    }
    Ok(acc)
}

/// Whether the integral `a`, prime to `λ`, is an `n`-th power modulo the prime `λ`.
pub fn is_power_residue(a: &F0Elem, lambda: &F0Elem, n: u64) -> Result<bool> {
    let field = ResidueField::new(lambda)?;
    let x = field.reduce(a)?;
    if x == (0, 0) {
        return Err(Error::Precondition("element not prime to the modulus".into()));
    }
    Ok(field.is_power(x, n))
}

/// Squares of the unit classes of Z[u] modulo `8`.
pub(crate) fn unit_squares_mod8() -> Vec<F0Elem> {
    let eight = F0Elem::from(8);
    let mut out: Vec<F0Elem> = arith::residues(&eight)
        .into_iter()
        .filter(|x| x.norm().to_integer().is_odd())
        .map(|x| arith::mod_reduce(&x.square(), &eight).unwrap())
        .collect();
    out.sort_by(|a, b| a.cmp_coeffs(b));
    out.dedup();
    out
}

/// Whether the prime `s` splits in `F₀(√d)/F₀`, for `d` prime to `s`.
/// Odd `s` uses the residue symbol; `s ~ 2` uses squares of units modulo 8.
pub fn splits_in_quadratic(d: &F0Elem, s: &F0Elem) -> Result<bool> {
    let n = s.norm().to_integer();
    if n.is_even() {
        if !arith::associated(s, &F0Elem::from(2)) {
            return Err(Error::Precondition("unexpected prime of even norm".into()));
        }
        if d.norm().to_integer().is_even() {
            return Ok(false);
        }
        let r = arith::mod_reduce(d, &F0Elem::from(8))?;
        return Ok(unit_squares_mod8().contains(&r));
    }
    Ok(legendre(d, s)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn e(a: i64, b: i64) -> F0Elem {
        F0Elem::from_ints(a, b)
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(&e(-1, 0), &e(3, 0)).unwrap(), 1);
        assert_eq!(legendre(&e(0, 1), &e(3, 0)).unwrap(), -1);
        for lam in [e(3, 0), e(7, 0), e(3, 1), e(4, 1), e(5, 3)] {
            assert_eq!(legendre(&e(4, 0), &lam).unwrap(), 1);
            assert_eq!(legendre(&lam, &lam).unwrap(), 0);
        }
        assert!(legendre(&e(1, 0), &e(2, 0)).is_err());
        assert!(legendre(&e(1, 0), &e(9, 0)).is_err());
    }

    #[test]
    fn legendre_matches_brute_force_squares() {
        for lam in [e(3, 0), e(7, 0), e(3, 1), e(4, 1), e(13, 0), e(1, 3)] {
            let field = ResidueField::new(&lam).unwrap();
            let res = arith::residues(&lam);
            let squares: Vec<Residue> = res.iter().map(|x| field.reduce(&x.square()).unwrap()).collect();
            for x in &res {
                let r = field.reduce(x).unwrap();
                let s = legendre(x, &lam).unwrap();
                if r == (0, 0) {
                    assert_eq!(s, 0);
                } else {
                    assert_eq!(s == 1, squares.contains(&r));
                }
            }
        }
    }

    #[test]
    fn residue_field_table_respects_u_squared() {
        let field = ResidueField::new(&e(7, 0)).unwrap();
        let u = field.reduce(&F0Elem::u()).unwrap();
        let u2 = field.reduce(&F0Elem::u().square()).unwrap();
        assert_eq!(field.mul(u, u), u2);
        assert_eq!(field.size(), 49);
        let split = ResidueField::new(&e(3, 1)).unwrap();
        assert_eq!((split.degree(), split.size()), (1, 11));
        let r = split.reduce(&F0Elem::u()).unwrap();
        assert_eq!(split.mul(r, r), split.reduce(&e(1, 1)).unwrap());
    }

    #[test]
    fn rational_inputs_reduce() {
        let half = F0Elem::new(Q::new(1.into(), 2.into()), Q::zero());
        let field = ResidueField::new(&e(7, 0)).unwrap();
        assert_eq!(field.reduce(&half).unwrap(), (4, 0));
        assert!(ResidueField::new(&e(3, 0))
            .unwrap()
            .reduce(&F0Elem::new(Q::new(1.into(), 3.into()), Q::zero()))
            .is_err());
    }

    #[test]
    fn splitting_at_two() {
        let sq = unit_squares_mod8();
        assert!(sq.contains(&e(1, 0)));
        assert!(splits_in_quadratic(&e(-7, 0), &e(2, 0)).unwrap());
        assert!(splits_in_quadratic(&e(-3, 0), &e(2, 0)).unwrap());
        assert!(!splits_in_quadratic(&e(3, 0), &e(2, 0)).unwrap());
    }
}

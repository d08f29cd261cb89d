//! Exact arithmetic in F₀ = Q(√5) and its ring of integers Z[u], `u = (1+√5)/2`.
//!
//! Elements are kept in the basis `{1, u}` so that integrality is coefficient
//! integrality. Signs of the real embeddings are decided by exact rational
//! comparisons.

mod arith;
mod elem;
mod parse;
mod residue;

pub use arith::{
    associated, balance, canonical_associate, congruent, div_rem, divides, exact_div, factor, gcd,
    is_irreducible, is_unit, mod_reduce, primes_above, residues,
};
pub use elem::{F0Elem, PHI, PHI_CONJ, Q};
pub use residue::{is_power_residue, jacobi, legendre, splits_in_quadratic, Residue, ResidueField};

pub(crate) use elem::{q_f64, q_int};
pub(crate) use parse::{fmt_linear, parse_rational, split_terms};

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::nt;

pub fn norm_trace(x: &F0Elem) -> (Q, Q) {
    x.norm_trace()
}

pub fn tau(x: &F0Elem) -> F0Elem {
    x.tau()
}

pub fn is_totally_positive(x: &F0Elem) -> bool {
    x.is_totally_positive()
}

/// The residues `−λ mod 4` allowed for admissible `λ`: `1`, `1+u`, `1+u^τ`, reduced.
pub fn admissible_residues_mod4() -> Vec<F0Elem> {
    let four = F0Elem::from(4);
    let one = F0Elem::one();
    let u = F0Elem::u();
    [one.clone(), &one + &u, &one + &u.tau()].iter().map(|x| mod_reduce(x, &four).unwrap()).collect()
}

/// `{x² mod 4 : x of odd norm}`, computed over the full transversal.
pub fn odd_squares_mod4() -> Vec<F0Elem> {
    let four = F0Elem::from(4);
    let mut out: Vec<F0Elem> = residues(&four)
        .into_iter()
        .filter(|x| x.norm().to_integer().is_odd())
        .map(|x| mod_reduce(&x.square(), &four).unwrap())
        .collect();
    out.sort_by(|a, b| a.cmp_coeffs(b));
    out.dedup();
    out
}

fn norm_u64(x: &F0Elem) -> Option<u64> {
    use num_traits::ToPrimitive;
    x.norm().to_integer().abs().to_u64()
}

/// Totally positive prime of odd norm prime to 5 with `−λ` in the admissible classes mod 4.
pub fn lambda_admissible(lambda: &F0Elem) -> bool {
    if !lambda.is_integral() || lambda.is_zero() || is_unit(lambda) {
        return false;
    }
    if !lambda.is_totally_positive() {
        return false;
    }
    let Some(n) = norm_u64(lambda) else { return false };
    if n % 2 == 0 || n % 5 == 0 {
        return false;
    }
    if !matches!(is_irreducible(lambda), Ok(true)) {
        return false;
    }
    let r = mod_reduce(&-lambda, &F0Elem::from(4)).unwrap();
    admissible_residues_mod4().contains(&r)
}

/// Inertness of the prime `λ` in Q(ζ₅)/F₀, read off from `N(λ) mod 5`.
pub fn is_inert_in_f(lambda: &F0Elem) -> Result<bool> {
    if !is_irreducible(lambda)? {
        return Err(Error::Precondition("λ must be irreducible".into()));
    }
    let n = norm_u64(lambda).ok_or_else(|| Error::Precondition("norm too large".into()))?;
    if n % 5 == 0 {
        return Err(Error::Precondition("λ must be prime to 5".into()));
    }
    Ok(n % 5 == 4)
}

/// `(−λ/β)·(β/λ)` computed as two independent residue symbols; `β` may be composite.
/// A factor shared by `λ` and `β` gives `0` and a logged warning.
pub fn reciprocity_pair(lambda: &F0Elem, beta: &F0Elem) -> Result<i8> {
    if !lambda_admissible(lambda) {
        return Err(Error::Precondition(format!("λ = {lambda} is not admissible")));
    }
    if !beta.is_integral() || beta.is_zero() {
        return Err(Error::Precondition("β must be integral and nonzero".into()));
    }
    if beta.norm().to_integer().is_even() {
        return Err(Error::Precondition("β must have odd norm".into()));
    }
    if !beta.is_totally_positive() {
        return Err(Error::Precondition("β must be totally positive".into()));
    }
    if divides(lambda, beta) {
        log::warn!("reciprocity_pair: {lambda} divides {beta}; returning 0");
        return Ok(0);
    }
    let left = jacobi(&-lambda, beta)?;
    let right = legendre(beta, lambda)?;
    Ok(left * right)
}

/// Valuation at the prime `√5` (`val(√5) = 1`, `val(5) = 2`); `None` for zero.
pub fn val_sqrt5(x: &F0Elem) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let n = x.norm();
    let vn = nt::val_big(n.numer(), 5) as i64 - nt::val_big(n.denom(), 5) as i64;
    Some(vn)
}

/// The rational prime under a prime element.
pub fn rational_prime_below(pi: &F0Elem) -> Option<u64> {
    let n = norm_u64(pi)?;
    nt::factor_u64(n).first().map(|&(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> F0Elem {
        F0Elem::from_ints(a, b)
    }

    #[test]
    fn admissibility_examples() {
        assert!(lambda_admissible(&e(3, 0)));
        assert!(!lambda_admissible(&e(2, 1)));
        assert!(lambda_admissible(&e(7, 0)));
        assert!(lambda_admissible(&e(75, 56)));
        assert!(!lambda_admissible(&e(2, 0)));
        assert!(!lambda_admissible(&e(0, 1)));
    }

    #[test]
    fn admissible_classes_are_odd_squares() {
        let mut adm = admissible_residues_mod4();
        adm.sort_by(|a, b| a.cmp_coeffs(b));
        assert_eq!(adm, odd_squares_mod4());
        assert_eq!(residues(&F0Elem::from(4)).len(), 16);
    }

    #[test]
    fn inertness_examples() {
        assert!(is_inert_in_f(&e(3, 0)).unwrap());
        assert!(!is_inert_in_f(&e(3, 1)).unwrap());
        assert!(is_inert_in_f(&e(2, 0)).unwrap());
        assert!(is_inert_in_f(&e(2, 1)).is_err());
    }

    #[test]
    fn reciprocity_examples() {
        assert_eq!(reciprocity_pair(&e(3, 0), &e(2, 1)).unwrap(), 1);
        assert_eq!(reciprocity_pair(&e(3, 0), &e(7, 0)).unwrap(), 1);
        assert_eq!(reciprocity_pair(&e(3, 0), &e(9, 0)).unwrap(), 0);
        assert_eq!(reciprocity_pair(&e(3, 0), &e(49, 0)).unwrap(), 1);
        assert!(reciprocity_pair(&e(2, 1), &e(7, 0)).is_err());
    }

    #[test]
    fn sqrt5_valuations() {
        assert_eq!(val_sqrt5(&F0Elem::sqrt5()), Some(1));
        assert_eq!(val_sqrt5(&e(25, 0)), Some(4));
        assert_eq!(val_sqrt5(&F0Elem::from_rational(Q::new(27.into(), 4.into()))), Some(0));
        assert_eq!(val_sqrt5(&F0Elem::from_rational(Q::new(1.into(), 5.into()))), Some(-2));
        assert_eq!(val_sqrt5(&e(0, 0)), None);
    }
}

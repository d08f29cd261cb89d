//! L₁ = F₀(s), `s⁴ = 5`, as a quadratic extension of F₀, and the relative norm
//! equation `A² − √5·B² = T` solved exhaustively inside an η-fundamental domain.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ops::forward_all;
use crate::ring_f0::{self, F0Elem, PHI, PHI_CONJ};

/// `5^{1/4}`.
pub fn kappa() -> f64 {
    5f64.sqrt().sqrt()
}

/// `A + B·s` with `s² = √5`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LElem {
    pub a: F0Elem,
    pub b: F0Elem,
}

impl LElem {
    pub fn new(a: F0Elem, b: F0Elem) -> Self {
        LElem { a, b }
    }

    pub fn from_f0(a: F0Elem) -> Self {
        LElem::new(a, F0Elem::zero())
    }

    pub fn one() -> Self {
        LElem::from_f0(F0Elem::one())
    }

    pub fn s() -> Self {
        LElem::new(F0Elem::zero(), F0Elem::one())
    }

    /// The norm-one unit `η = u² + u·s`.
    pub fn eta() -> Self {
        let u = F0Elem::u();
        LElem::new(u.square(), u)
    }

    /// `η⁻¹ = u² − u·s`.
    pub fn eta_inv() -> Self {
        LElem::eta().conj()
    }

    pub fn eta_pow(k: i64) -> Self {
        let base = if k < 0 { LElem::eta_inv() } else { LElem::eta() };
        (0..k.unsigned_abs()).fold(LElem::one(), |acc, _| &acc * &base)
    }

    /// The nontrivial automorphism over F₀, `s ↦ −s`.
    pub fn conj(&self) -> Self {
        LElem::new(self.a.clone(), -&self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integral() && self.b.is_integral()
    }

    /// The two real embeddings `τ₁(A) ± τ₁(B)·5^{1/4}`.
    pub fn real_embeddings(&self) -> (f64, f64) {
        let (a, b) = (self.a.tau1(), self.b.tau1() * kappa());
        (a + b, a - b)
    }

    /// Geodesic parameter `x₁/d₁` under the first embedding.
    pub fn param(&self) -> f64 {
        self.a.tau1() / self.b.tau1()
    }

    fn cmp_coeffs(&self, other: &LElem) -> Ordering {
        self.a.cmp_coeffs(&other.a).then_with(|| self.b.cmp_coeffs(&other.b))
    }
}

pub fn norm_l(x: &LElem) -> F0Elem {
    x.a.square() - F0Elem::sqrt5() * x.b.square()
}

impl<'a, 'b> Add<&'b LElem> for &'a LElem {
    type Output = LElem;
    fn add(self, rhs: &'b LElem) -> LElem {
        LElem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a, 'b> Sub<&'b LElem> for &'a LElem {
    type Output = LElem;
    fn sub(self, rhs: &'b LElem) -> LElem {
        LElem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a, 'b> Mul<&'b LElem> for &'a LElem {
    type Output = LElem;
    fn mul(self, rhs: &'b LElem) -> LElem {
        let bd = &self.b * &rhs.b;
        LElem::new(&self.a * &rhs.a + F0Elem::sqrt5() * bd, &self.a * &rhs.b + &self.b * &rhs.a)
    }
}

impl<'a> Neg for &'a LElem {
    type Output = LElem;
    fn neg(self) -> LElem {
        LElem::new(-&self.a, -&self.b)
    }
}

forward_all!(LElem);

impl fmt::Display for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})*s", self.a, self.b)
    }
}

/// `η₊ = τ₁(u²) + τ₁(u)·5^{1/4} ≈ 5.037`, the expansion factor of η on the first embedding.
pub fn eta_plus() -> f64 {
    PHI * PHI + PHI * kappa()
}

/// An element of Z[u] in machine integers, `(a, b) = a + b·u`.
type Zu = (i128, i128);

fn zmul(x: Zu, y: Zu) -> Zu {
    let bd = x.1 * y.1;
    (x.0 * y.0 + bd, x.0 * y.1 + x.1 * y.0 + bd)
}

fn zsqrt5(x: Zu) -> Zu {
    (2 * x.1 - x.0, 2 * x.0 + x.1)
}

fn ztau1(x: Zu) -> f64 {
    x.0 as f64 + x.1 as f64 * PHI
}

fn ztau2(x: Zu) -> f64 {
    x.0 as f64 + x.1 as f64 * PHI_CONJ
}

/// Square roots of `d` in Z[u], found from the embeddings and confirmed exactly.
fn zsqrt(d: Zu) -> Option<Zu> {
    let (t1, t2) = (ztau1(d), ztau2(d));
    if t1 < -0.5 || t2 < -0.5 {
        return None;
    }
    let (r1, r2) = (t1.max(0.0).sqrt(), t2.max(0.0).sqrt());
    let sqrt5 = 5f64.sqrt();
    for s2 in [1.0, -1.0] {
        let x1 = ((r1 - s2 * r2) / sqrt5).round() as i128;
        let x0 = (r1 - x1 as f64 * PHI).round() as i128;
        for cand in [(x0, x1), (x0 - 1, x1), (x0 + 1, x1)] {
            if zmul(cand, cand) == d {
                return Some(cand);
            }
        }
    }
    None
}

/// Result of the norm-equation search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormSolutions {
    /// One representative per orbit of `±η^ℤ`, sorted.
    pub solutions: Vec<LElem>,
    /// True when the box contained the whole fundamental domain, so an empty list is a proof.
    pub complete: bool,
}

/// Default box: embedding magnitude `4·√(max |τᵢ(T)|)`.
pub fn default_box(target: &F0Elem) -> f64 {
    4.0 * target.tau1().abs().max(target.tau2().abs()).sqrt()
}

fn in_domain_exact_edge(x: &LElem) -> bool {
    x.a.is_zero() || x.b.is_zero()
}

/// Representative of `±η^ℤ·x` with `ρ₊ > 0` and `|ρ₊/ρ₋| ∈ [1, η₊²)`.
pub fn eta_reduce(x: &LElem) -> LElem {
    assert!(!norm_l(x).is_zero(), "η-reduction needs a nonzero norm");
    let mut v = x.clone();
    if v.real_embeddings().0 < 0.0 {
        v = -v;
    }
    let width = 2.0 * eta_plus().ln();
    let ratio = |w: &LElem| {
        let (p, m) = w.real_embeddings();
        (p / m).abs().ln()
    };
    let k = (ratio(&v) / width).floor() as i64;
    v = &v * &LElem::eta_pow(-k);
    let tol = 1e-9;
    let r = ratio(&v);
    if r > width - tol {
        let w = &v * &LElem::eta_inv();
        if in_domain_exact_edge(&w) || r >= width {
            v = w;
        }
    } else if r < tol && !in_domain_exact_edge(&v) && r < 0.0 {
        v = &v * &LElem::eta();
    }
    v
}

/// All integral `A + B·s` with `A² − √5·B² = target`, one per orbit of `±η^ℤ`.
///
/// `box_bound` caps the embedding magnitudes of `B` that are searched; `None` uses
/// [`default_box`], which always covers the fundamental domain.
pub fn solve_norm(target: &F0Elem, box_bound: Option<f64>) -> NormSolutions {
    let empty = |complete| NormSolutions { solutions: Vec::new(), complete };
    let Some(t) = target.to_i128_pair() else { return empty(true) };
    if t == (0, 0) {
        return NormSolutions { solutions: vec![LElem::from_f0(F0Elem::zero())], complete: true };
    }
    let (t1, t2) = (ztau1(t), ztau2(t));
    if target.sign_tau2() != Ordering::Greater {
        return empty(true);
    }
    let (k, ep) = (kappa(), eta_plus());
    let m = t1.abs().sqrt();
    let (lo1, hi1) = if t1 < 0.0 {
        (m / k, (ep + 1.0 / ep) * m / (2.0 * k))
    } else {
        (0.0, (ep - 1.0 / ep) * m / (2.0 * k))
    };
    let h2 = (t2 / 5f64.sqrt()).sqrt();
    let slack = 1e-6 * (1.0 + hi1 + h2);
    let bound = box_bound.unwrap_or_else(|| default_box(target));
    let complete = hi1 + slack <= bound && h2 + slack <= bound;
    let hi1 = (hi1 + slack).min(bound);
    let lo1 = lo1 - slack;
    let h2 = (h2 + slack).min(bound);
    let sqrt5 = 5f64.sqrt();
    let mut found: Vec<LElem> = Vec::new();
    if lo1 <= hi1 {
        let b1_lo = ((lo1 - h2) / sqrt5).ceil() as i128;
        let b1_hi = ((hi1 + h2) / sqrt5).floor() as i128;
        for b1 in b1_lo..=b1_hi {
            let f1 = b1 as f64 * PHI;
            let f2 = b1 as f64 * PHI_CONJ;
            let b0_lo = (lo1 - f1).max(-h2 - f2).ceil() as i128;
            let b0_hi = (hi1 - f1).min(h2 - f2).floor() as i128;
            for b0 in b0_lo..=b0_hi {
                let b = (b0, b1);
                let sb = zsqrt5(zmul(b, b));
                let d = (t.0 + sb.0, t.1 + sb.1);
                if let Some(a) = zsqrt(d) {
                    for sign in [1, -1] {
                        let x = LElem::new(
                            F0Elem::from_i128_pair(sign * a.0, sign * a.1),
                            F0Elem::from_i128_pair(b0, b1),
                        );
                        found.push(eta_reduce(&x));
                    }
                }
            }
        }
    }
    found.sort_by(|x, y| x.cmp_coeffs(y));
    found.dedup();
    NormSolutions { solutions: found, complete }
}

/// The target `u^τ·λ` whose norm representations are the q_{Q,P}-representations of `λ`.
pub fn qp_target(lambda: &F0Elem) -> F0Elem {
    F0Elem::u().tau() * lambda
}

/// Whether `λ` and `λ^τ` are both represented; `false` for inadmissible `λ`.
/// A negative answer is a proof only when both searches are complete.
pub fn representable_both(lambda: &F0Elem, box_bound: Option<f64>) -> bool {
    if !ring_f0::lambda_admissible(lambda) {
        return false;
    }
    let s1 = solve_norm(&qp_target(lambda), box_bound);
    if s1.solutions.is_empty() {
        return false;
    }
    !solve_norm(&qp_target(&lambda.tau()), box_bound).solutions.is_empty()
}

/// Whether `x⁴ ≡ 5 mod λ` is solvable, a necessary condition for representability.
pub fn fifth_root_quartic_residue(lambda: &F0Elem) -> Result<bool> {
    ring_f0::is_power_residue(&F0Elem::from(5), lambda, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> F0Elem {
        F0Elem::from_ints(a, b)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_l(&LElem::eta()), F0Elem::one());
        let x = LElem::new(e(2, 0), F0Elem::u());
        assert_eq!(norm_l(&x), e(4, 0) - F0Elem::sqrt5() * e(1, 1));
        assert_eq!(-F0Elem::u() * norm_l(&x), e(3, 0));
        assert_eq!(norm_l(&LElem::s()), -F0Elem::sqrt5());
    }

    #[test]
    fn eta_expansion_factor() {
        let (p, m) = LElem::eta().real_embeddings();
        assert!((p - eta_plus()).abs() < 1e-12);
        assert!((p * m - 1.0).abs() < 1e-12);
        assert_eq!(&LElem::eta() * &LElem::eta_inv(), LElem::one());
    }

    #[test]
    fn solve_lambda_three() {
        let sols = solve_norm(&qp_target(&e(3, 0)), None);
        assert!(sols.complete);
        let v = LElem::new(e(2, 0), F0Elem::u());
        assert!(sols.solutions.contains(&eta_reduce(&v)));
        assert_eq!(eta_reduce(&v), v);
        assert_eq!(sols.solutions.len(), 2);
        for s in &sols.solutions {
            assert_eq!(-F0Elem::u() * norm_l(s), e(3, 0));
        }
    }

    #[test]
    fn solve_units_and_midpoint() {
        let sols = solve_norm(&F0Elem::one(), None);
        assert_eq!(sols.solutions, vec![LElem::one()]);
        assert_eq!(eta_reduce(&LElem::eta()), LElem::one());
        assert_eq!(eta_reduce(&-LElem::eta_pow(-3)), LElem::one());
        let mid = solve_norm(&(e(1, 0) - F0Elem::sqrt5()), None);
        assert!(mid.solutions.contains(&LElem::new(e(1, 0), e(1, 0))));
    }

    #[test]
    fn unsolvable_targets() {
        let s = solve_norm(&e(-1, 0), None);
        assert!(s.complete && s.solutions.is_empty());
        let s = solve_norm(&F0Elem::from_rational(crate::ring_f0::Q::new(1.into(), 2.into())), None);
        assert!(s.solutions.is_empty());
    }

    #[test]
    fn representability_examples() {
        assert!(representable_both(&e(3, 0), None));
        assert!(!representable_both(&e(2, 1), None));
        assert!(representable_both(&e(75, 56), None));
        assert!(fifth_root_quartic_residue(&e(75, 56)).unwrap());
    }

    #[test]
    fn tiny_box_is_incomplete() {
        let s = solve_norm(&qp_target(&e(75, 56)), Some(0.5));
        assert!(!s.complete);
    }

    #[test]
    fn reduction_is_orbit_invariant() {
        let v = LElem::new(e(2, 0), F0Elem::u());
        for k in -4..=4 {
            let w = &v * &LElem::eta_pow(k);
            assert_eq!(eta_reduce(&w), v);
            assert_eq!(eta_reduce(&-w), v);
        }
    }
}

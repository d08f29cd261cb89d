//! The Δ(2,3,10) triangle group: explicit generators over Q(ζ₅), the change to
//! the isotropic basis, the Möbius action on the upper half plane, fixed points,
//! the geodesic G_{QP} and its η-action, and hyperbolic metric helpers.

pub mod svg;

use std::f64::consts::PI;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{constants, omega_f64, FElem};
use crate::error::{Error, Result};
use crate::quartic_field::kappa;
use crate::ring_f0::F0Elem;

/// 2×2 matrix over Q(ζ₅) in standard coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2Std {
    pub m: [[FElem; 2]; 2],
}

impl Mat2Std {
    pub fn new(a: FElem, b: FElem, c: FElem, d: FElem) -> Self {
        Mat2Std { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Mat2Std::new(FElem::one(), FElem::zero(), FElem::zero(), FElem::one())
    }

    pub fn scalar(x: FElem) -> Self {
        Mat2Std::new(x.clone(), FElem::zero(), FElem::zero(), x)
    }

    pub fn det(&self) -> FElem {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn trace(&self) -> FElem {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2Std::identity()
    }

    pub fn add(&self, rhs: &Mat2Std) -> Mat2Std {
        let f = |i: usize, j: usize| &self.m[i][j] + &rhs.m[i][j];
        Mat2Std::new(f(0, 0), f(0, 1), f(1, 0), f(1, 1))
    }

    pub fn scale(&self, x: &FElem) -> Mat2Std {
        let f = |i: usize, j: usize| x * &self.m[i][j];
        Mat2Std::new(f(0, 0), f(0, 1), f(1, 0), f(1, 1))
    }

    pub fn inv(&self) -> Option<Mat2Std> {
        let d = self.det().inv()?;
        let [[a, b], [c, e]] = &self.m;
        Some(Mat2Std::new(e * &d, -(b * &d), -(c * &d), a * &d))
    }

    pub fn pow(&self, k: u64) -> Mat2Std {
        (0..k).fold(Mat2Std::identity(), |acc, _| &acc * self)
    }

    /// Smallest `k ≤ limit` with `Mᵏ = Id`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_identity() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    pub fn is_integral(&self) -> bool {
        self.m.iter().flatten().all(FElem::is_integral)
    }
}

impl<'a, 'b> Mul<&'b Mat2Std> for &'a Mat2Std {
    type Output = Mat2Std;
    fn mul(self, rhs: &'b Mat2Std) -> Mat2Std {
        let f = |i: usize, j: usize| &self.m[i][0] * &rhs.m[0][j] + &self.m[i][1] * &rhs.m[1][j];
        Mat2Std::new(f(0, 0), f(0, 1), f(1, 0), f(1, 1))
    }
}

/// The generators `A_P, A_Q, A_R` and the trace-zero stabilizers `γ_P, γ_Q, γ_R`.
#[derive(Clone, Debug)]
pub struct Generators {
    pub a_p: Mat2Std,
    pub a_q: Mat2Std,
    pub a_r: Mat2Std,
    pub gamma_p: Mat2Std,
    pub gamma_q: Mat2Std,
    pub gamma_r: Mat2Std,
}

pub fn generators() -> Generators {
    let c = constants();
    let z = FElem::zeta();
    let zi = FElem::zeta_pow(-1);
    let ie = c.epsilon.inv().unwrap();
    let alpha = c.alpha.clone();
    let s0 = &alpha * &ie;
    let a_p = Mat2Std::new(-zi.clone(), FElem::zero(), FElem::zero(), z.clone());
    let a_q = Mat2Std::new(-(&z * &ie), FElem::one(), ie.clone(), -(&zi * &ie));
    let a_r = Mat2Std::new(ie.clone(), -zi.clone(), &z * &ie, -ie.clone());
    let gamma_p = Mat2Std::new(-alpha.clone(), FElem::zero(), FElem::zero(), alpha.clone());
    let gamma_q = Mat2Std::new(-s0.clone(), FElem::from(2), FElem::from(2) * &ie, s0.clone());
    let gamma_r = Mat2Std::new(s0.clone(), -(&zi * &alpha), &z * &alpha * &ie, -s0);
    Generators { a_p, a_q, a_r, gamma_p, gamma_q, gamma_r }
}

/// One exactly checked group relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub name: String,
    pub holds: bool,
}

/// The defining relations `A_P¹⁰ = A_Q³ = A_R² = A_P A_Q A_R = Id`, plus minimality of the orders.
pub fn certify_relations(g: &Generators) -> Vec<Relation> {
    let rel = |name: &str, holds: bool| Relation { name: name.into(), holds };
    vec![
        rel("A_P^10 = Id", g.a_p.pow(10).is_identity()),
        rel("A_Q^3 = Id", g.a_q.pow(3).is_identity()),
        rel("A_R^2 = Id", g.a_r.pow(2).is_identity()),
        rel("A_P*A_Q*A_R = Id", (&(&g.a_p * &g.a_q) * &g.a_r).is_identity()),
        rel("order(A_P) = 10", g.a_p.order(10) == Some(10)),
        rel("order(A_Q) = 3", g.a_q.order(3) == Some(3)),
        rel("order(A_R) = 2", g.a_r.order(2) == Some(2)),
    ]
}

/// 2×2 complex matrix in isotropic coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2Iso {
    pub m: [[Complex64; 2]; 2],
}

impl Mat2Iso {
    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn scale(&self, c: Complex64) -> Mat2Iso {
        Mat2Iso { m: self.m.map(|row| row.map(|x| x * c)) }
    }

    pub fn max_abs_diff(&self, other: &Mat2Iso) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        d
    }
}

/// The exact entries `r, s, j, k` of the basis change, with `ω² = ε`.
pub fn rsjk(m: &Mat2Std) -> [FElem; 4] {
    let eps = constants().epsilon;
    let [[a, b], [c, d]] = &m.m;
    let ec = &eps * c;
    [a + d, d - a, &ec + b, &ec - b]
}

/// `X = (1/2ω)·[[ωr + j, β₀(ωs − k)], [β₀⁻¹(ωs + k), ωr − j]]` under the first embedding.
pub fn to_isotropic(m: &Mat2Std) -> Mat2Iso {
    let w = Complex64::new(omega_f64(), 0.0);
    let b0 = constants().beta0.embed(1);
    let [r, s, j, k] = rsjk(m).map(|x| x.embed(1));
    let h = 1.0 / (2.0 * w);
    Mat2Iso { m: [[(w * r + j) * h, b0 * (w * s - k) * h], [(w * s + k) / b0 * h, (w * r - j) * h]] }
}

/// Exact `(ω²r² − j² − ω²s² + k²)/4ω²`, the determinant predicted for `X`.
pub fn isotropic_det_exact(m: &Mat2Std) -> FElem {
    let eps = constants().epsilon;
    let [r, s, j, k] = rsjk(m);
    let num = &eps * &r * &r - &j * &j - &eps * &s * &s + &k * &k;
    num.checked_div(&(FElem::from(4) * eps)).unwrap()
}

/// A point of the upper half plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HPoint {
    pub re: f64,
    pub im: f64,
}

impl HPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !(im > 0.0) || !re.is_finite() || !im.is_finite() {
            return Err(Error::Precondition(format!("{re}+{im}i is not in the upper half plane")));
        }
        Ok(HPoint { re, im })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        HPoint::new(z.re, z.im)
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn dist_euclid(&self, other: &HPoint) -> f64 {
        (self.z() - other.z()).norm()
    }
}

/// Fractional-linear image `(x₁₁θ + x₁₂)/(x₂₁θ + x₂₂)`.
pub fn mobius(x: &Mat2Iso, z: Complex64) -> Result<Complex64> {
    let den = x.m[1][0] * z + x.m[1][1];
    let num = x.m[0][0] * z + x.m[0][1];
    if den.norm() <= f64::EPSILON * (1.0 + num.norm()) {
        return Err(Error::ImageAtInfinity);
    }
    Ok(num / den)
}

pub fn mobius_h(x: &Mat2Iso, z: &HPoint) -> Result<HPoint> {
    HPoint::from_complex(mobius(x, z.z())?)
}

/// Root in H of `x₂₁θ² + (x₂₂ − x₁₁)θ − x₁₂ = 0`.
pub fn fixed_point(x: &Mat2Iso) -> Result<HPoint> {
    let [[a, b], [c, d]] = x.m;
    let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
    if c.norm() <= 1e-12 * scale {
        return Err(Error::NotElliptic("a fixed point lies at infinity".into()));
    }
    let disc = (d - a) * (d - a) + 4.0 * c * b;
    let sq = disc.sqrt();
    let r1 = (a - d + sq) / (2.0 * c);
    let r2 = (a - d - sq) / (2.0 * c);
    let tol = 1e-9 * (1.0 + r1.norm().max(r2.norm()));
    let (up, down) = if r1.im > r2.im { (r1, r2) } else { (r2, r1) };
    if up.im <= tol || down.im >= -tol || (up - down.conj()).norm() > 1e-6 * (1.0 + up.norm()) {
        return Err(Error::NotElliptic("fixed points are not a conjugate pair off the real line".into()));
    }
    HPoint::from_complex(up)
}

/// `√5/ω`, the radius of G_{QP}, computed as `σ₁(β₀/α)/ω`.
pub fn geodesic_scale() -> f64 {
    let c = constants();
    (c.beta0.embed(1) / c.alpha.embed(1)).re / omega_f64()
}

/// `z(t) = (β₀/(ωα))·(t + i√(√5 − t²))` on the geodesic G_{QP}.
pub fn geodesic_point(t: f64) -> Result<HPoint> {
    let r = 5f64.sqrt() - t * t;
    if !(t.abs() < kappa()) || !(r > 0.0) {
        return Err(Error::Boundary(format!("|t| = {} is not below 5^(1/4)", t.abs())));
    }
    let c = constants();
    let factor = c.beta0.embed(1) / (c.alpha.embed(1) * omega_f64());
    HPoint::from_complex(factor * Complex64::new(t, r.sqrt()))
}

/// `geodesic_point(τ₁(t))` for an exact parameter.
pub fn geodesic_point_exact(t: &F0Elem) -> Result<HPoint> {
    geodesic_point(t.tau1())
}

/// Inverse of [`geodesic_point`] for points on G_{QP}.
pub fn geodesic_param(z: &HPoint) -> f64 {
    z.re / geodesic_scale()
}

/// `(u·t + √5)/(t + u)` exactly.
pub fn eta_on_param(t: &F0Elem) -> Result<F0Elem> {
    let u = F0Elem::u();
    let den = t + &u;
    if den.is_zero() {
        return Err(Error::Pole("η has a pole at t = −u".into()));
    }
    Ok((&u * t + F0Elem::sqrt5()).checked_div(&den).unwrap())
}

pub fn eta_on_param_f64(t: f64) -> Result<f64> {
    let u = crate::ring_f0::PHI;
    if (t + u).abs() < f64::EPSILON {
        return Err(Error::Pole("η has a pole at t = −u".into()));
    }
    Ok((u * t + 5f64.sqrt()) / (t + u))
}

/// Poincaré distance.
pub fn hyp_distance(z1: &HPoint, z2: &HPoint) -> f64 {
    let d = (z1.z() - z2.z()).norm();
    2.0 * (d / (2.0 * (z1.im * z2.im).sqrt())).asinh()
}

/// The hyperbolic geodesic through two points: a vertical line or a semicircle on R.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Geodesic {
    Vertical { x: f64 },
    Circle { center: f64, radius: f64 },
}

pub fn geodesic_through(z1: &HPoint, z2: &HPoint) -> Geodesic {
    let dx = z2.re - z1.re;
    if dx.abs() <= 1e-12 * (1.0 + z1.re.abs() + z2.re.abs()) {
        return Geodesic::Vertical { x: z1.re };
    }
    let n1 = z1.z().norm_sqr();
    let n2 = z2.z().norm_sqr();
    let center = (n2 - n1) / (2.0 * dx);
    let radius = (z1.z() - Complex64::new(center, 0.0)).norm();
    Geodesic::Circle { center, radius }
}

pub fn hyp_midpoint(z1: &HPoint, z2: &HPoint) -> HPoint {
    match geodesic_through(z1, z2) {
        Geodesic::Vertical { x } => HPoint { re: x, im: (z1.im * z2.im).sqrt() },
        Geodesic::Circle { center, radius } => {
            let (a, b) = (center - radius, center + radius);
            let to_axis = |z: Complex64| -(z - a) / (z - b);
            let h1 = to_axis(z1.z()).im;
            let h2 = to_axis(z2.z()).im;
            let w = Complex64::new(0.0, (h1 * h2).sqrt());
            let z = (a + w * b) / (w + 1.0);
            HPoint { re: z.re, im: z.im }
        }
    }
}

/// Interior angle at `z` of the geodesic triangle with the other vertices `w1`, `w2`.
pub fn angle_at(z: &HPoint, w1: &HPoint, w2: &HPoint) -> f64 {
    let disk = |w: &HPoint| (w.z() - z.z()) / (w.z() - z.z().conj());
    let d = (disk(w1) / disk(w2)).arg().abs();
    d.min(2.0 * PI - d)
}

/// Area by angle defect; a triangle with two coincident vertices has area 0.
pub fn triangle_area(p: &HPoint, q: &HPoint, r: &HPoint) -> f64 {
    let tiny = 1e-12;
    if p.dist_euclid(q) < tiny || q.dist_euclid(r) < tiny || p.dist_euclid(r) < tiny {
        return 0.0;
    }
    PI - (angle_at(p, q, r) + angle_at(q, r, p) + angle_at(r, p, q))
}

/// The vertices `P̃, Q̃, R̃` as fixed points of `X_P, X_Q, X_R`.
pub fn special_points() -> Result<[HPoint; 3]> {
    let g = generators();
    Ok([
        fixed_point(&to_isotropic(&g.a_p))?,
        fixed_point(&to_isotropic(&g.a_q))?,
        fixed_point(&to_isotropic(&g.a_r))?,
    ])
}

/// Area of the fundamental triangle `P̃Q̃R̃`.
pub fn fundamental_triangle_area() -> Result<f64> {
    let [p, q, r] = special_points()?;
    Ok(triangle_area(&p, &q, &r))
}

/// Named points on G_{QP} with exact parameters.
pub fn marked_geodesic_points() -> Vec<(&'static str, F0Elem)> {
    let q = |n: i64, d: i64| crate::ring_f0::Q::new(n.into(), d.into());
    let u = F0Elem::u();
    vec![
        ("P~", F0Elem::zero()),
        ("eta^-1(Q1)", &u - &F0Elem::one()),
        ("M~", F0Elem::one()),
        ("Q~", F0Elem::from_ints(-2, 2)),
        ("R1", F0Elem::from_ints(3, -1)),
        ("Q1", F0Elem::from_ints(4, 2).scale(&q(1, 5))),
        ("eta(Q~)", eta_on_param(&F0Elem::from_ints(-2, 2)).unwrap()),
        ("P1", F0Elem::from_ints(-2, 4).scale(&q(1, 3))),
    ]
}

/// `5^{1/4}`, the endpoint parameter of G_{QP}.
pub fn geodesic_endpoint() -> f64 {
    kappa()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring_f0::Q;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exact_relations() {
        let g = generators();
        assert!(certify_relations(&g).iter().all(|r| r.holds));
        assert_eq!(g.a_p.order(20), Some(10));
        assert_eq!(g.a_q.order(20), Some(3));
        assert_eq!(g.a_r.order(20), Some(2));
        for m in [&g.a_p, &g.a_q, &g.a_r, &g.gamma_p, &g.gamma_q, &g.gamma_r] {
            assert!(m.is_integral());
        }
    }

    #[test]
    fn gamma_traces_and_determinants() {
        let g = generators();
        let sqrt5u = F0Elem::sqrt5() * F0Elem::u();
        assert!(g.gamma_q.trace().is_zero());
        assert_eq!(g.gamma_q.det(), FElem::from(3));
        assert_eq!(g.gamma_p.det().to_f0().unwrap(), sqrt5u);
        assert_eq!(g.gamma_r.det().to_f0().unwrap(), sqrt5u);
    }

    #[test]
    fn x_p_matches_closed_form() {
        let g = generators();
        let x = to_isotropic(&g.a_p);
        let half_alpha = constants().alpha.embed(1) / 2.0;
        let s5 = 5f64.sqrt();
        let expected = Mat2Iso {
            m: [[c(1.0, 0.0), c((5.0 - s5) / 2.0, 0.0)], [c((s5 - 3.0) / 10.0, 0.0), c(1.0, 0.0)]],
        }
        .scale(half_alpha);
        assert!(x.max_abs_diff(&expected) < 1e-12);
        let id = to_isotropic(&Mat2Std::identity());
        let one = Mat2Iso { m: [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]] };
        assert!(id.max_abs_diff(&one) < 1e-12);
        let xg = to_isotropic(&g.gamma_p);
        assert!(xg.trace().norm() < 1e-12);
    }

    #[test]
    fn fixed_points_match_published_values() {
        let [p, q, r] = special_points().unwrap();
        assert!((p.re).abs() < 1e-9 && (p.im - 4.253_254_041_760_2).abs() < 1e-9);
        assert!((q.re - 3.516).abs() < 5e-4 && (q.im - 2.394).abs() < 5e-4);
        assert!((r.re - 4.200).abs() < 5e-4 && (r.im - 3.472).abs() < 5e-4);
        let b0 = constants().beta0.embed(1);
        assert!((mobius(&to_isotropic(&generators().a_p), b0).unwrap() - b0).norm() < 1e-9);
    }

    #[test]
    fn stabilizers_fix_the_vertices() {
        let g = generators();
        let pts = special_points().unwrap();
        for (gamma, z) in [(&g.gamma_p, pts[0]), (&g.gamma_q, pts[1]), (&g.gamma_r, pts[2])] {
            let x = to_isotropic(gamma);
            let w = mobius_h(&x, &z).unwrap();
            assert!(w.dist_euclid(&z) < 1e-9);
            assert!(fixed_point(&x).unwrap().dist_euclid(&z) < 1e-9);
        }
    }

    #[test]
    fn non_elliptic_is_rejected() {
        let hyperbolic = Mat2Iso { m: [[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.5, 0.0)]] };
        assert!(fixed_point(&hyperbolic).is_err());
        let h2 = Mat2Iso { m: [[c(2.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(1.0, 0.0)]] };
        assert!(fixed_point(&h2).is_err());
        let singular = Mat2Iso { m: [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]] };
        assert!(matches!(mobius(&singular, c(0.0, 0.0)), Err(Error::ImageAtInfinity)));
    }

    #[test]
    fn transform_law_on_generators() {
        let g = generators();
        for m in [&g.a_p, &g.a_q, &g.a_r, &g.gamma_q] {
            let x = to_isotropic(m);
            assert!((x.trace() - m.trace().embed(1)).norm() < 1e-9);
            assert_eq!(isotropic_det_exact(m), m.det());
            assert!((x.det() - m.det().embed(1)).norm() < 1e-9);
        }
    }

    #[test]
    fn metric_examples() {
        let i = HPoint::new(0.0, 1.0).unwrap();
        let two_i = HPoint::new(0.0, 2.0).unwrap();
        assert!((hyp_distance(&i, &two_i) - 2f64.ln()).abs() < 1e-12);
        let m = hyp_midpoint(&i, &HPoint::new(0.0, 4.0).unwrap());
        assert!(m.dist_euclid(&two_i) < 1e-12);
        let a = HPoint::new(-1.0, 0.5).unwrap();
        let b = HPoint::new(2.0, 1.5).unwrap();
        let mid = hyp_midpoint(&a, &b);
        assert!((hyp_distance(&a, &mid) - hyp_distance(&mid, &b)).abs() < 1e-9);
        assert!((hyp_distance(&a, &mid) * 2.0 - hyp_distance(&a, &b)).abs() < 1e-9);
        assert!(HPoint::new(0.0, 0.0).is_err());
    }

    #[test]
    fn geodesic_examples() {
        let p = geodesic_point(0.0).unwrap();
        assert!((p.z() - constants().beta0.embed(1)).norm() < 1e-9);
        let m = geodesic_point(1.0).unwrap();
        let r1 = geodesic_point_exact(&F0Elem::from_ints(3, -1)).unwrap();
        assert!((hyp_distance(&p, &m) - hyp_distance(&m, &r1)).abs() < 1e-9);
        assert!(hyp_midpoint(&p, &r1).dist_euclid(&m) < 1e-9);
        assert!(geodesic_point(kappa()).is_err());
        assert!(geodesic_point(-1.6).is_err());
        assert!((geodesic_scale() - 5f64.sqrt() / omega_f64()).abs() < 1e-12);
    }

    #[test]
    fn eta_param_examples() {
        let t1 = eta_on_param(&F0Elem::zero()).unwrap();
        assert_eq!(t1, F0Elem::from_ints(3, -1));
        let t2 = eta_on_param(&t1).unwrap();
        assert_eq!(t2, F0Elem::from_ints(-2, 4).scale(&Q::new(1.into(), 3.into())));
        assert!((eta_on_param_f64(kappa()).unwrap() - kappa()).abs() < 1e-12);
        assert!((eta_on_param_f64(-kappa()).unwrap() + kappa()).abs() < 1e-12);
        assert!(eta_on_param(&-F0Elem::u()).is_err());
    }

    #[test]
    fn eta_maps_p_tilde_to_r1_as_points() {
        let a_r1 = &(&generators().a_q.inv().unwrap() * &generators().gamma_r) * &generators().a_q;
        let z = fixed_point(&to_isotropic(&a_r1)).unwrap();
        let r1 = geodesic_point_exact(&F0Elem::from_ints(3, -1)).unwrap();
        assert!(z.dist_euclid(&r1) < 1e-9);
        assert!((r1.re - 3.931).abs() < 5e-4 && (r1.im - 1.625).abs() < 5e-4);
    }

    #[test]
    fn area_and_right_angle() {
        let [p, q, r] = special_points().unwrap();
        assert!((triangle_area(&p, &q, &r) - PI / 15.0).abs() < 1e-9);
        assert!((angle_at(&r, &p, &q) - PI / 2.0).abs() < 1e-9);
        assert!((angle_at(&q, &p, &r) - PI / 3.0).abs() < 1e-9);
        assert!((angle_at(&p, &q, &r) - PI / 10.0).abs() < 1e-9);
        assert_eq!(triangle_area(&p, &p, &r), 0.0);
    }

    #[test]
    fn marked_points_order_along_the_geodesic() {
        let ts: Vec<f64> = marked_geodesic_points().iter().map(|(_, t)| t.tau1()).collect();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert!(ts.iter().all(|t| t.abs() < kappa()));
    }
}

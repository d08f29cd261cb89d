//! Binary quadratic forms attached to pairs of the stabilizers `γ_P, γ_Q, γ_R`,
//! the (x₁, d₁) chart for q_{Q,P}, the order classification mod 2, η-transport,
//! CM points on G_{QP} and the search for admissible λ.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::FElem;
use crate::error::{Error, Result};
use crate::nt;
use crate::quartic_field::{kappa, qp_target, solve_norm, LElem};
use crate::ring_f0::{self, associated, balance, mod_reduce, F0Elem, Q};
use crate::triangle_group::{generators, geodesic_point_exact, HPoint, Mat2Std};

/// Version tag of the JSON representation of [`LambdaCandidate`].
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    QP,
    QR,
    PR,
}

impl Form {
    pub fn all() -> [Form; 3] {
        [Form::QP, Form::QR, Form::PR]
    }

    fn gammas(self) -> (Mat2Std, Mat2Std) {
        let g = generators();
        match self {
            Form::QP => (g.gamma_q, g.gamma_p),
            Form::QR => (g.gamma_q, g.gamma_r),
            Form::PR => (g.gamma_p, g.gamma_r),
        }
    }
}

impl std::str::FromStr for Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "QP" | "PQ" => Ok(Form::QP),
            "QR" | "RQ" => Ok(Form::QR),
            "PR" | "RP" => Ok(Form::PR),
            _ => Err(Error::Parse(format!("unknown form {s:?}"))),
        }
    }
}

/// `a·x² + 2b·xy + c·y²` over F₀.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadForm {
    pub form: Form,
    pub a: F0Elem,
    pub b: F0Elem,
    pub c: F0Elem,
    pub discriminant: F0Elem,
}

impl QuadForm {
    pub fn new(form: Form) -> Self {
        let u = F0Elem::u();
        let s5u = F0Elem::sqrt5() * &u;
        let (a, b, c) = match form {
            Form::QR => (F0Elem::from(3), -s5u.clone(), s5u),
            Form::QP => (F0Elem::from(3), F0Elem::sqrt5() * u.square(), s5u),
            Form::PR => (s5u.clone(), -(&s5u * &u), s5u),
        };
        let discriminant = F0Elem::from(4) * (b.square() - &a * &c);
        QuadForm { form, a, b, c, discriminant }
    }

    pub fn eval(&self, x: &F0Elem, y: &F0Elem) -> F0Elem {
        &self.a * x.square() + F0Elem::from(2) * &self.b * x * y + &self.c * y.square()
    }
}

/// The form polynomial at `(x, y)`.
pub fn q_eval(form: Form, x: &F0Elem, y: &F0Elem) -> F0Elem {
    QuadForm::new(form).eval(x, y)
}

fn combination(form: Form, x: &F0Elem, y: &F0Elem) -> Mat2Std {
    let (g1, g2) = form.gammas();
    g1.scale(&FElem::from(x)).add(&g2.scale(&FElem::from(y)))
}

/// `det(x·γ₁ + y·γ₂)` computed in Q(ζ₅).
pub fn q_det(form: Form, x: &F0Elem, y: &F0Elem) -> Result<F0Elem> {
    combination(form, x, y)
        .det()
        .to_f0()
        .ok_or_else(|| Error::InvariantViolation("determinant outside F₀".into()))
}

/// `q_{Q,P}` in the chart `x₁ = 2x`, `d₁ = y + u·x`: `−u(x₁² − √5·d₁²)`.
pub fn q_qp_diag(x1: &F0Elem, d1: &F0Elem) -> F0Elem {
    -F0Elem::u() * (x1.square() - F0Elem::sqrt5() * d1.square())
}

pub fn to_chart(x: &F0Elem, y: &F0Elem) -> (F0Elem, F0Elem) {
    (F0Elem::from(2) * x, y + &F0Elem::u() * x)
}

pub fn from_chart(x1: &F0Elem, d1: &F0Elem) -> (F0Elem, F0Elem) {
    let half = Q::new(1.into(), 2.into());
    let x = x1.scale(&half);
    let y = d1 - &F0Elem::u() * &x;
    (x, y)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Integrality {
    /// Entries of `x·γ₁ + y·γ₂` lie in Z[ζ₅].
    pub integral: bool,
    /// `(x₁, d₁)` for q_{Q,P}.
    pub chart: Option<(F0Elem, F0Elem)>,
}

/// Integrality of `x·γ₁ + y·γ₂`. For q_{Q,P} the chart coordinates are also returned
/// and the answer agrees with `x₁, d₁ ∈ Z[u]`.
pub fn integrality_check(x: &F0Elem, y: &F0Elem, form: Form) -> Integrality {
    let integral = combination(form, x, y).is_integral();
    let chart = (form == Form::QP).then(|| to_chart(x, y));
    if let Some((x1, d1)) = &chart {
        debug_assert_eq!(integral, x1.is_integral() && d1.is_integral());
    }
    Integrality { integral, chart }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderTag {
    MaximalOE,
    NonMaximal,
}

impl OrderTag {
    pub fn flip(self) -> Self {
        match self {
            OrderTag::MaximalOE => OrderTag::NonMaximal,
            OrderTag::NonMaximal => OrderTag::MaximalOE,
        }
    }
}

/// Integral `(x₁, d₁)` with `−u(x₁² − √5·d₁²) = value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSolution {
    pub x1: F0Elem,
    pub d1: F0Elem,
    pub value: F0Elem,
    pub order_tag: OrderTag,
}

impl FormSolution {
    /// Builds and classifies a solution; the value must be `≡ −1 mod 4`.
    pub fn new(x1: F0Elem, d1: F0Elem) -> Result<Self> {
        if !x1.is_integral() || !d1.is_integral() {
            return Err(Error::Precondition("x₁ and d₁ must be integral".into()));
        }
        let value = q_qp_diag(&x1, &d1);
        let order_tag = classify_residues(&x1, &d1, &value)?;
        Ok(FormSolution { x1, d1, value, order_tag })
    }

    pub fn from_lelem(v: &LElem) -> Result<Self> {
        FormSolution::new(v.a.clone(), v.b.clone())
    }

    /// `t = x₁/d₁`.
    pub fn param(&self) -> Result<F0Elem> {
        self.x1.checked_div(&self.d1).ok_or_else(|| Error::Pole("d₁ = 0".into()))
    }
}

pub fn is_minus_one_mod4(x: &F0Elem) -> bool {
    x.is_integral() && mod_reduce(&(x + &F0Elem::one()), &F0Elem::from(4)).unwrap().is_zero()
}

fn mod2(x: &F0Elem) -> F0Elem {
    mod_reduce(x, &F0Elem::from(2)).unwrap()
}

fn classify_residues(x1: &F0Elem, d1: &F0Elem, value: &F0Elem) -> Result<OrderTag> {
    if !is_minus_one_mod4(value) {
        return Err(Error::Precondition(format!("value {value} is not ≡ −1 mod 4")));
    }
    let u = F0Elem::u();
    let r = (mod2(x1), mod2(d1));
    if r == (F0Elem::zero(), mod2(&u)) {
        Ok(OrderTag::MaximalOE)
    } else if r == (mod2(&u.square()), F0Elem::one()) {
        Ok(OrderTag::NonMaximal)
    } else {
        Err(Error::InvariantViolation(format!("(x₁, d₁) ≡ ({}, {}) mod 2 is in neither class", r.0, r.1)))
    }
}

/// Whether every entry of `Id + x·γ_Q + y·γ_P` is divisible by 2 in Z[ζ₅].
pub fn identity_plus_matrix_even(x1: &F0Elem, d1: &F0Elem) -> bool {
    let (x, y) = from_chart(x1, d1);
    let m = Mat2Std::identity().add(&combination(Form::QP, &x, &y));
    m.scale(&FElem::from_rational(Q::new(1.into(), 2.into()))).is_integral()
}

/// Order tag from the residues of `(x₁, d₁)` mod 2, confirmed by the parity of
/// `Id + x·γ_Q + y·γ_P`.
pub fn classify_order(sol: &FormSolution) -> Result<OrderTag> {
    let tag = classify_residues(&sol.x1, &sol.d1, &sol.value)?;
    let even = identity_plus_matrix_even(&sol.x1, &sol.d1);
    if even != (tag == OrderTag::MaximalOE) {
        return Err(Error::InvariantViolation("residue class and matrix parity disagree".into()));
    }
    Ok(tag)
}

/// `(x₁, d₁) ↦ (u(u·x₁ + √5·d₁), u(x₁ + u·d₁))`, multiplication by η.
pub fn transport_pair(x1: &F0Elem, d1: &F0Elem) -> (F0Elem, F0Elem) {
    let u = F0Elem::u();
    let nx = &u * (&u * x1 + F0Elem::sqrt5() * d1);
    let nd = &u * (x1 + &u * d1);
    (nx, nd)
}

pub fn transport(sol: &FormSolution) -> Result<FormSolution> {
    let (x1, d1) = transport_pair(&sol.x1, &sol.d1);
    let out = FormSolution::new(x1, d1)?;
    if out.value != sol.value || out.order_tag != sol.order_tag.flip() {
        return Err(Error::InvariantViolation("transport must keep the value and flip the tag".into()));
    }
    Ok(out)
}

/// Splitting of one prime of S in F₀(√−λ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitFlag {
    pub prime: F0Elem,
    pub splits: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateFlags {
    pub admissible: bool,
    pub minus_one_mod4: bool,
    pub inert_in_f: bool,
    pub not_self_conjugate: bool,
    pub representable_both: bool,
    pub s_split: Vec<SplitFlag>,
}

impl CandidateFlags {
    pub fn all_hold(&self) -> bool {
        self.admissible
            && self.minus_one_mod4
            && self.inert_in_f
            && self.not_self_conjugate
            && self.representable_both
            && self.s_split.iter().all(|s| s.splits)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaCandidate {
    pub lambda: F0Elem,
    pub norm: u64,
    pub flags: CandidateFlags,
    /// η-reduced representations of λ by q_{Q,P}.
    pub solutions: Vec<FormSolution>,
    /// Representations of λ^τ by q_{Q,P}.
    pub tau_solutions: Vec<FormSolution>,
}

fn classified(sols: &[LElem]) -> Result<Vec<FormSolution>> {
    sols.iter().map(FormSolution::from_lelem).collect()
}

impl LambdaCandidate {
    /// Computes every flag for `λ`; solutions are kept when `λ ≡ −1 mod 4`.
    pub fn evaluate(lambda: &F0Elem, s: &[F0Elem], box_bound: Option<f64>) -> Result<Self> {
        if !lambda.is_integral() || lambda.is_zero() {
            return Err(Error::Precondition("λ must be a nonzero integer of F₀".into()));
        }
        let norm = lambda.norm().to_integer();
        let norm: u64 =
            norm.magnitude().try_into().map_err(|_| Error::Precondition("norm exceeds 64 bits".into()))?;
        let admissible = ring_f0::lambda_admissible(lambda);
        let minus_one_mod4 = is_minus_one_mod4(lambda);
        let inert_in_f = admissible && ring_f0::is_inert_in_f(lambda).unwrap_or(false);
        let not_self_conjugate = *lambda != lambda.tau();
        let own = solve_norm(&qp_target(lambda), box_bound).solutions;
        let tau = solve_norm(&qp_target(&lambda.tau()), box_bound).solutions;
        let representable_both = admissible && !own.is_empty() && !tau.is_empty();
        let mut s_split = Vec::with_capacity(s.len());
        for p in s {
            let splits = ring_f0::splits_in_quadratic(&-lambda, p).unwrap_or(false);
            s_split.push(SplitFlag { prime: p.clone(), splits });
        }
        let (solutions, tau_solutions) = if minus_one_mod4 && admissible {
            (classified(&own)?, classified(&tau)?)
        } else {
            (Vec::new(), Vec::new())
        };
        Ok(LambdaCandidate {
            lambda: lambda.clone(),
            norm,
            flags: CandidateFlags {
                admissible,
                minus_one_mod4,
                inert_in_f,
                not_self_conjugate,
                representable_both,
                s_split,
            },
            solutions,
            tau_solutions,
        })
    }

    pub fn accepted(&self) -> bool {
        self.flags.all_hold()
    }
}

/// A CM point on G_{QP} with its parameter and solution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CmPoint {
    pub t: F0Elem,
    pub point: HPoint,
    pub order_tag: OrderTag,
    pub solution: FormSolution,
}

fn cm_point(sol: FormSolution) -> Result<CmPoint> {
    let t = sol.param()?;
    let point = geodesic_point_exact(&t)?;
    let order_tag = classify_order(&sol)?;
    Ok(CmPoint { t, point, order_tag, solution: sol })
}

/// The two CM points attached to `λ`: a maximal-order solution `v` and its transport `η·v`.
pub fn locate_cm_points(cand: &LambdaCandidate, box_bound: Option<f64>) -> Result<Vec<CmPoint>> {
    let lambda = &cand.lambda;
    if !ring_f0::lambda_admissible(lambda) {
        return Err(Error::Precondition(format!("λ = {lambda} is not admissible")));
    }
    if !is_minus_one_mod4(lambda) {
        return Err(Error::Precondition(format!("λ = {lambda} is not ≡ −1 mod 4")));
    }
    if !ring_f0::is_inert_in_f(lambda)? {
        return Err(Error::Precondition(format!("λ = {lambda} is not inert in Q(ζ₅)")));
    }
    let found = solve_norm(&qp_target(lambda), box_bound);
    let sols = classified(&found.solutions)?;
    let Some(v) = sols.iter().find(|s| s.order_tag == OrderTag::MaximalOE).cloned() else {
        return Err(if found.complete {
            Error::Precondition(format!("λ = {lambda} is not represented by q_QP"))
        } else {
            Error::BoxExhausted(format!("no maximal-order solution for λ = {lambda}"))
        });
    };
    let w = transport(&v)?;
    let pts = vec![cm_point(v)?, cm_point(w)?];
    if pts[0].order_tag == pts[1].order_tag {
        return Err(Error::InvariantViolation("located points carry equal tags".into()));
    }
    Ok(pts)
}

/// Checks `S = S^τ` up to units and that no element of S lies over 5.
pub fn validate_s(s: &[F0Elem]) -> Result<()> {
    for p in s {
        if !p.is_integral() || p.is_zero() || !ring_f0::is_irreducible(p)? {
            return Err(Error::Precondition(format!("{p} is not a prime of Z[u]")));
        }
        if associated(p, &F0Elem::sqrt5()) {
            return Err(Error::Precondition("S must not contain the prime above 5".into()));
        }
        let pt = p.tau();
        if !s.iter().any(|q| associated(q, &pt)) {
            return Err(Error::Precondition(format!("S is not τ-stable: {pt} missing")));
        }
    }
    Ok(())
}

/// Representatives `λ ≡ −1 mod 4`, totally positive and balanced for `u⁶`, of the
/// split primes of norm `p ≡ 4 mod 5` up to `norm_bound`.
pub fn lambda_pool(norm_bound: u64) -> Vec<F0Elem> {
    let u2 = F0Elem::u().square();
    let mut out = Vec::new();
    for p in nt::primes_in(2, norm_bound.saturating_add(1)) {
        if p % 5 != 4 {
            continue;
        }
        for pi in ring_f0::primes_above(p) {
            let mut c = pi.clone();
            for _ in 0..3 {
                if is_minus_one_mod4(&c) {
                    out.push(balance(&c, 3).0);
                    break;
                }
                c = &c * &u2;
            }
        }
    }
    out.sort_by(lambda_order);
    out
}

fn lambda_order(x: &F0Elem, y: &F0Elem) -> Ordering {
    x.norm().cmp(&y.norm()).then_with(|| x.cmp_coeffs(y))
}

/// All λ with `N(λ) ≤ norm_bound` passing every flag, ordered by norm then coefficients.
pub fn lambda_search(norm_bound: u64, s: &[F0Elem]) -> Result<Vec<LambdaCandidate>> {
    validate_s(s)?;
    let pool = lambda_pool(norm_bound);
    let mut out: Vec<LambdaCandidate> = pool
        .par_iter()
        .map(|l| LambdaCandidate::evaluate(l, s, None))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(LambdaCandidate::accepted)
        .collect();
    out.sort_by(|a, b| lambda_order(&a.lambda, &b.lambda));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Density {
    /// Bin edges over `(−⁴√5, ⁴√5)`, `bins + 1` values.
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
    pub left_of_midpoint: usize,
    pub right_of_midpoint: usize,
}

impl Density {
    pub fn both_sides(&self) -> bool {
        self.left_of_midpoint > 0 && self.right_of_midpoint > 0
    }
}

/// Histogram of `τ₁(x₁/d₁)` for the maximal-order solution of each candidate.
pub fn density_diagnostic(cands: &[LambdaCandidate], bins: usize) -> Result<Density> {
    if cands.is_empty() {
        return Err(Error::Precondition("no candidates".into()));
    }
    if bins == 0 {
        return Err(Error::Precondition("at least one bin".into()));
    }
    let k = kappa();
    let edges: Vec<f64> = (0..=bins).map(|i| -k + 2.0 * k * i as f64 / bins as f64).collect();
    let mut counts = vec![0; bins];
    let (mut left, mut right) = (0, 0);
    for c in cands {
        let Some(sol) = c.solutions.iter().find(|s| s.order_tag == OrderTag::MaximalOE) else {
            continue;
        };
        let t = sol.param()?.tau1();
        let i = (((t + k) / (2.0 * k)) * bins as f64).floor().clamp(0.0, bins as f64 - 1.0) as usize;
        counts[i] += 1;
        if t < 1.0 {
            left += 1;
        } else if t > 1.0 {
            right += 1;
        }
    }
    Ok(Density { edges, counts, left_of_midpoint: left, right_of_midpoint: right })
}

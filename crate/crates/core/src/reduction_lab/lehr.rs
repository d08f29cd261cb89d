//! Behaviour at 5 through the normalized `j = (u√5)⁻⁵·J`, the hypothesis checker
//! for basic reduction, and the Shimura–Taniyama prediction for CM points.
//!
//! Two parity conventions exist for the second hypothesis. `h2` tests
//! `val(J − 27/4)`; `h2_literal` tests `val(j − (u√5)⁻⁵·27/4)`, which differs by
//! the odd shift `−5`. Both are reported, `h2` is the one used.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring_f0::{
    associated, is_irreducible, lambda_admissible, splits_in_quadratic, val_sqrt5, F0Elem, Q,
};

/// `u√5`, the prime of F₀ above 5.
pub fn pi5() -> F0Elem {
    &F0Elem::u() * &F0Elem::sqrt5()
}

pub fn j_normalized(j_big: &F0Elem) -> F0Elem {
    let s = pi5().pow(-5).expect("u√5 is invertible");
    &s * j_big
}

/// `val(j) = val(J) − 5`; `None` is `+∞` (`J = 0`).
pub fn val5_j(j_big: &F0Elem) -> Option<i64> {
    val_sqrt5(j_big).map(|v| v - 5)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LehrOutcome {
    PotentiallyGood,
    DegeneratesToCP,
}

pub fn lehr_criterion(j_big: &F0Elem) -> LehrOutcome {
    match val5_j(j_big) {
        Some(v) if v < 0 => LehrOutcome::DegeneratesToCP,
        _ => LehrOutcome::PotentiallyGood,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub h1: bool,
    pub h2: bool,
    pub h3: bool,
    pub h2_literal: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.h1 && self.h2 && self.h3
    }
}

pub fn j_pole() -> F0Elem {
    F0Elem::from_rational(Q::new(27.into(), 4.into()))
}

pub fn theorem_hypotheses(j_big: &F0Elem) -> Hypotheses {
    let diff = &j_pole() - j_big;
    let h1 = diff.is_totally_positive();
    let v = val_sqrt5(&diff);
    let h2 = matches!(v, Some(v) if v % 2 == 0);
    let h2_literal = matches!(v, Some(v) if (v - 5) % 2 == 0);
    let h3 = matches!(val5_j(j_big), Some(v) if v < 0);
    Hypotheses { h1, h2, h3, h2_literal }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StPrediction {
    Basic,
    NoPrediction,
}

/// Basic iff `𝔭` does not split in `F₀(√−λ)`; `𝔭 ~ λ` ramifies. Only meaningful for
/// abelian varieties with CM by `Q(ζ₅, √−λ)` of the relevant type.
pub fn st_predict(lambda: &F0Elem, prime: &F0Elem) -> Result<StPrediction> {
    if !lambda_admissible(lambda) {
        return Err(Error::Precondition(format!("λ = {lambda} is not admissible")));
    }
    if !matches!(is_irreducible(prime), Ok(true)) {
        return Err(Error::Precondition(format!("{prime} is not prime")));
    }
    if associated(lambda, prime) {
        return Ok(StPrediction::Basic);
    }
    let d = -lambda;
    Ok(if splits_in_quadratic(&d, prime)? { StPrediction::NoPrediction } else { StPrediction::Basic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring_f0::primes_above;

    fn r(n: i64, d: i64) -> F0Elem {
        F0Elem::from_rational(Q::new(n.into(), d.into()))
    }

    #[test]
    fn valuations() {
        assert_eq!(val5_j(&r(27, 4)), Some(-5));
        assert_eq!(val5_j(&r(25, 1)), Some(-1));
        assert_eq!(val5_j(&r(0, 1)), None);
        assert_eq!(val_sqrt5(&j_normalized(&r(125, 1))), Some(1));
        assert_eq!(val_sqrt5(&pi5()), Some(1));
    }

    #[test]
    fn lehr_examples() {
        assert_eq!(lehr_criterion(&r(27, 4)), LehrOutcome::DegeneratesToCP);
        assert_eq!(lehr_criterion(&r(125, 7)), LehrOutcome::PotentiallyGood);
        assert_eq!(lehr_criterion(&r(1, 1)), LehrOutcome::DegeneratesToCP);
    }

    #[test]
    fn hypothesis_examples() {
        let h = theorem_hypotheses(&r(-1, 1));
        assert!(h.h1 && h.h2 && h.h3);
        assert!(!h.h2_literal);
        assert!(!theorem_hypotheses(&r(27, 4)).h1);
        assert!(!theorem_hypotheses(&r(7, 1)).h1);
    }

    #[test]
    fn prediction_examples() {
        let three = F0Elem::from(3);
        assert_eq!(st_predict(&three, &three).unwrap(), StPrediction::Basic);
        for p in primes_above(11) {
            assert_eq!(st_predict(&three, &p).unwrap(), StPrediction::Basic);
        }
        assert_eq!(st_predict(&three, &F0Elem::from(7)).unwrap(), StPrediction::NoPrediction);
        assert!(st_predict(&F0Elem::from(2), &three).is_err());
    }
}

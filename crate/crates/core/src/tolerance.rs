//! Tolerances for numerical comparisons. Exact arithmetic is used wherever an
//! exact form exists; these apply only to binary64 evaluations.

/// Fixed-point, metric and trace/determinant identities.
pub const GEOMETRY: f64 = 1e-9;

/// Isometry checks that compose several Möbius maps.
pub const ISOMETRY: f64 = 1e-8;

/// Moduli of reciprocal roots of L-polynomials.
pub const ROOT_MODULUS: f64 = 1e-6;

/// Agreement with three-decimal published coordinates.
pub const THREE_DECIMALS: f64 = 5e-4;

/// Tolerance implied by a requested number of significant decimal digits,
/// never tighter than what binary64 supports.
pub fn from_digits(digits: u32) -> f64 {
    10f64.powi(-(digits.min(15) as i32)).max(1e-15)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_policy() {
        assert_eq!(from_digits(9), 1e-9);
        assert_eq!(from_digits(40), 1e-15);
        assert!(close(1.0, 1.0 + 1e-10, GEOMETRY));
        assert!(!close(1.0, 1.0 + 1e-6, GEOMETRY));
    }
}

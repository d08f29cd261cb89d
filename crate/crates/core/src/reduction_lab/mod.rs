//! Reductions of `C_t : y⁵ = x(x−1)(x−t)`: point counts, L-polynomials, Newton
//! polygons and their classification, behaviour at 5, and per-prime scans.

pub mod count;
pub mod field;
pub mod lehr;
pub mod lpoly;
pub mod newton;
pub mod scan;

pub use count::{bad_reason, count_points, count_points_naive, count_points_rational, reduce_mod_p};
pub use lehr::{
    j_normalized, lehr_criterion, st_predict, theorem_hypotheses, val5_j, Hypotheses, LehrOutcome,
    StPrediction,
};
pub use lpoly::{counts_for, l_polynomial, LPolynomial, GENUS};
pub use newton::{classify_np, newton_polygon, ClassifiedNp, NewtonPolygon, NpLabel, Slope};
pub use scan::{scan_basic, CountCache, PrimeRow, ScanReport, Skipped};

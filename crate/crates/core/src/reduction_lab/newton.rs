//! Newton polygons of L-polynomials and their place in the μ-ordinary/basic table.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::lpoly::{LPolynomial, GENUS};
use crate::error::{Error, Result};

pub type Slope = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    /// Ascending, with multiplicity; `2g` entries.
    pub slopes: Vec<Slope>,
    /// Hull vertices `(i, val_p(aᵢ))`.
    pub vertices: Vec<(i64, i64)>,
}

fn val_p(mut x: i64, p: i64) -> Option<i64> {
    if x == 0 {
        return None;
    }
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    Some(v)
}

/// Lower convex hull of `{(i, val_p(aᵢ)) : aᵢ ≠ 0}`.
pub fn newton_polygon(l: &LPolynomial) -> NewtonPolygon {
    let p = l.p as i64;
    let pts: Vec<(i64, i64)> =
        l.coeffs.iter().enumerate().filter_map(|(i, &c)| val_p(c, p).map(|v| (i as i64, v))).collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly below the segment a–pt
            let cross = (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut slopes = Vec::new();
    for w in hull.windows(2) {
        let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        for _ in 0..dx {
            slopes.push(Slope::new(dy, dx));
        }
    }
    NewtonPolygon { slopes, vertices: hull }
}

impl NewtonPolygon {
    pub fn from_slopes(mut slopes: Vec<Slope>) -> Self {
        slopes.sort();
        let mut vertices = vec![(0i64, 0i64)];
        let mut y = Slope::from_integer(0);
        for (i, s) in slopes.iter().enumerate() {
            y += *s;
            let last = i + 1 == slopes.len() || slopes[i + 1] != *s;
            if last {
                vertices.push(((i + 1) as i64, y.to_integer()));
            }
        }
        NewtonPolygon { slopes, vertices }
    }

    /// `s ↔ 1 − s` symmetry, endpoints `(0,0)`–`(2g, g)`, integral breakpoints.
    pub fn check(&self) -> Result<()> {
        let n = self.slopes.len();
        if n != 2 * GENUS {
            return Err(Error::InvariantViolation(format!("{n} slopes")));
        }
        let one = Slope::from_integer(1);
        for i in 0..n {
            if self.slopes[i] + self.slopes[n - 1 - i] != one {
                return Err(Error::InvariantViolation("slopes are not symmetric".into()));
            }
        }
        let rise: Slope = self.slopes.iter().sum();
        if rise != Slope::from_integer(GENUS as i64) {
            return Err(Error::InvariantViolation("total rise is not g".into()));
        }
        let mut y = Slope::from_integer(0);
        for (i, s) in self.slopes.iter().enumerate() {
            y += *s;
            let breakpoint = i + 1 == n || self.slopes[i + 1] != *s;
            if breakpoint && !y.is_integer() {
                return Err(Error::InvariantViolation("non-integral breakpoint".into()));
            }
        }
        Ok(())
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.slopes.iter().map(|s| s.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NpLabel {
    MuOrdinary,
    Basic,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedNp {
    pub label: NpLabel,
    pub p_mod5: u64,
}

fn repeat(parts: &[(i64, i64, usize)]) -> Vec<Slope> {
    let mut out = Vec::new();
    for &(n, d, m) in parts {
        out.extend(std::iter::repeat(Slope::new(n, d)).take(m));
    }
    out.sort();
    out
}

fn ord(m: usize) -> Vec<(i64, i64, usize)> {
    vec![(0, 1, m), (1, 1, m)]
}

fn ss(m: usize) -> Vec<(i64, i64, usize)> {
    vec![(1, 2, 2 * m)]
}

/// `(μ-ordinary, basic)` slope multisets for the residue of `p` mod 5.
pub fn table_row(p: u64) -> Option<(Vec<Slope>, Vec<Slope>)> {
    let ord2_ss2 = repeat(&[ord(2), ss(2)].concat());
    match p % 5 {
        1 => Some((repeat(&ord(4)), ord2_ss2)),
        4 => Some((ord2_ss2, repeat(&ss(4)))),
        2 | 3 => Some((repeat(&[(1, 4, 4), (3, 4, 4)]), repeat(&ss(4)))),
        _ => None,
    }
}

pub fn classify_np(np: &NewtonPolygon, p: u64) -> ClassifiedNp {
    let mut s = np.slopes.clone();
    s.sort();
    let label = match table_row(p) {
        Some((mu, _)) if s == mu => NpLabel::MuOrdinary,
        Some((_, basic)) if s == basic => NpLabel::Basic,
        _ => NpLabel::Other,
    };
    ClassifiedNp { label, p_mod5: p % 5 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(p: i64, low: [i64; 5]) -> LPolynomial {
        let mut c = vec![0i64; 9];
        for i in 0..5 {
            c[i] = low[i];
        }
        for i in 0..4 {
            c[8 - i] = p.pow(4 - i as u32) * low[i];
        }
        LPolynomial { p: p as u64, coeffs: c }
    }

    fn sl(v: &[(i64, i64)]) -> Vec<Slope> {
        v.iter().map(|&(n, d)| Slope::new(n, d)).collect()
    }

    #[test]
    fn hull_examples() {
        let p = 7;
        let np = newton_polygon(&lp(p, [1, 0, 0, 0, 3 * p]));
        assert_eq!(np.slopes, sl(&[(1, 4), (1, 4), (1, 4), (1, 4), (3, 4), (3, 4), (3, 4), (3, 4)]));
        np.check().unwrap();
        let np = newton_polygon(&lp(p, [1, 0, 4 * p, 0, 6 * p * p]));
        assert!(np.slopes.iter().all(|s| *s == Slope::new(1, 2)));
        let np = newton_polygon(&lp(11, [1, 3, 2, 5, 1]));
        assert_eq!(np.slopes, sl(&[(0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (1, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn table_examples() {
        let ord4 = NewtonPolygon::from_slopes(sl(&[(0, 1); 4]).into_iter().chain(sl(&[(1, 1); 4])).collect());
        assert_eq!(classify_np(&ord4, 11).label, NpLabel::MuOrdinary);
        let ss4 = NewtonPolygon::from_slopes(sl(&[(1, 2); 8]));
        assert_eq!(classify_np(&ss4, 19).label, NpLabel::Basic);
        assert_eq!(classify_np(&ss4, 3).label, NpLabel::Basic);
        let quarter =
            NewtonPolygon::from_slopes(sl(&[(1, 4); 4]).into_iter().chain(sl(&[(3, 4); 4])).collect());
        assert_eq!(classify_np(&quarter, 2).label, NpLabel::MuOrdinary);
        assert_eq!(classify_np(&quarter, 11).label, NpLabel::Other);
        assert_eq!(classify_np(&ord4, 19).label, NpLabel::Other);
        ss4.check().unwrap();
        assert_eq!(ss4.vertices, vec![(0, 0), (8, 4)]);
    }
}

//! Text form `a+b*u` (rationals as `p/q`); the parser also accepts `x+y*sqrt5`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::elem::{F0Elem, Q};
use crate::error::Error;

pub(crate) fn fmt_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Coefficient-times-symbol term without its sign, e.g. `u`, `3*u`, `1/2*z^2`.
pub(crate) fn fmt_term(c: &Q, sym: &str) -> String {
    if c.is_one() {
        sym.to_string()
    } else {
        format!("{}*{}", fmt_rational(c), sym)
    }
}

/// Sum of `coeff·symbol` terms, zero terms omitted; the empty sum prints as `0`.
pub(crate) fn fmt_linear(terms: &[(&Q, &str)]) -> String {
    let mut out = String::new();
    for (c, sym) in terms {
        if c.is_zero() {
            continue;
        }
        let body = if sym.is_empty() { fmt_rational(&c.abs()) } else { fmt_term(&c.abs(), sym) };
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for F0Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_linear(&[(self.a(), ""), (self.b(), "u")]))
    }
}

/// Split `s` into signed terms `(negative, body)`.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, String)>, Error> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && !cur.ends_with('^') {
            if i > 0 {
                if cur.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {s:?}")));
                }
                terms.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("trailing sign in {s:?}")));
    }
    terms.push((neg, cur));
    Ok(terms)
}

pub(crate) fn parse_rational(s: &str) -> Result<Q, Error> {
    if s.is_empty() {
        return Ok(Q::one());
    }
    Q::from_str(s).map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

/// Split a term body into its coefficient and the symbol it ends with, if any.
pub(crate) fn split_symbol<'a>(body: &'a str, symbols: &[&'a str]) -> (&'a str, Option<&'a str>) {
    for sym in symbols {
        if let Some(coeff) = body.strip_suffix(sym) {
            return (coeff.strip_suffix('*').unwrap_or(coeff), Some(sym));
        }
    }
    (body, None)
}

impl FromStr for F0Elem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut acc = F0Elem::zero();
        for (neg, body) in split_terms(s)? {
            let (coeff, sym) = split_symbol(&body, &["sqrt5", "sqrt(5)", "√5", "u"]);
            if sym.is_none() && coeff.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let mut c = parse_rational(coeff)?;
            if neg {
                c = -c;
            }
            let term = match sym {
                None => F0Elem::from_rational(c),
                Some("u") => F0Elem::new(Q::zero(), c),
                Some(_) => F0Elem::sqrt5().scale(&c),
            };
            acc = acc + term;
        }
        Ok(acc)
    }
}

impl Serialize for F0Elem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for F0Elem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

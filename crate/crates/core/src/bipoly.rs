//! Sparse polynomials in two variables, used to map Pell solutions to
//! solutions of `f(x) = g(y)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::poly::Poly;
use crate::rational::{format_rational, parse_rational, Rational};

/// `sum c_(i,j) p^i q^j`, keyed by `(i, j)`; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> BiPoly {
        let mut out = BiPoly::default();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: (u32, u32), c: Rational) {
        let e = self.terms.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// `u(p)`
    pub fn in_first(u: &Poly) -> BiPoly {
        BiPoly::from_terms(u.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    /// `u(q)`
    pub fn in_second(u: &Poly) -> BiPoly {
        BiPoly::from_terms(u.coeffs().iter().enumerate().map(|(j, c)| ((0, j as u32), c.clone())))
    }

    pub fn first() -> BiPoly {
        BiPoly::in_first(&Poly::x())
    }

    pub fn second() -> BiPoly {
        BiPoly::in_second(&Poly::x())
    }

    pub fn evaluate(&self, p: &Rational, q: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(p.clone(), i as usize) * num_traits::pow(q.clone(), j as usize))
            .sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| {
                let mut s = format_rational(c);
                for (v, e) in [("p", i), ("q", j)] {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*{v}")),
                        _ => s.push_str(&format!("*{v}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiPolyJson {
    /// `[i, j, "c"]` for `c p^i q^j`
    terms: Vec<(u32, u32, String)>,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiPolyJson {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| (i, j, format_rational(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<BiPoly, D::Error> {
        let raw = BiPolyJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|(i, j, c)| parse_rational(&c).map(|c| ((i, j), c)))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(BiPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn product_and_evaluation() {
        // p (q^2 - 91)
        let m = &BiPoly::first() * &BiPoly::in_second(&Poly::from_ints(&[-91, 0, 1]));
        assert_eq!(m.evaluate(&int(252), &int(70)), int(252 * (4900 - 91)));
        assert_eq!(m.to_string(), "1*p*q^2 + -91*p");
        let back: BiPoly = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
        let zero = &m + &BiPoly::from_terms(m.terms().map(|(k, c)| (*k, -c.clone())));
        assert_eq!(zero.to_string(), "0");
    }
}

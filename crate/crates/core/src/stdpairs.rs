//! The five kinds of standard pairs, the explicit solutions of
//! `D_N(x, b) + u = (x + w_1) ... (x + w_N)`, and degree bookkeeping for
//! equations `f(x) = g(y)` with simple rational roots.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dickson::dickson;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::pte::decompose;
use crate::rational::{int, serde_str, serde_str_vec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    First,
    Second,
    Third,
    Fourth,
    Fifth,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardPair {
    /// `(x^q, alpha x^p v(x)^q)`
    First { q: u32, p: u32, alpha: Rational, v: Poly },
    /// `(x^2, (alpha x^2 + beta) v(x)^2)`
    Second { alpha: Rational, beta: Rational, v: Poly },
    /// `(D_mu(x, alpha^nu), D_nu(x, alpha^mu))`
    Third { mu: u32, nu: u32, alpha: Rational },
    /// `(alpha^(-mu/2) D_mu(x, alpha), -beta^(-nu/2) D_nu(x, beta))`
    Fourth { mu: u32, nu: u32, alpha: Rational, beta: Rational },
    /// `((alpha x^2 - 1)^3, 3x^4 - 4x^3)`
    Fifth { alpha: Rational },
}

impl StandardPair {
    pub fn kind(&self) -> Kind {
        match self {
            StandardPair::First { .. } => Kind::First,
            StandardPair::Second { .. } => Kind::Second,
            StandardPair::Third { .. } => Kind::Third,
            StandardPair::Fourth { .. } => Kind::Fourth,
            StandardPair::Fifth { .. } => Kind::Fifth,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParameters(m.into()));
        match self {
            StandardPair::First { q, p, alpha, v } => {
                if p >= q || p.gcd(q) != 1 {
                    return bad("first kind needs 0 <= p < q with gcd(p, q) = 1");
                }
                let dv = v.degree().ok_or(Error::ZeroPolynomial)?;
                if *p as usize + dv == 0 {
                    return bad("first kind needs p + deg v > 0");
                }
                nonzero(alpha)
            }
            StandardPair::Second { alpha, beta, v } => {
                if v.is_zero() {
                    return Err(Error::ZeroPolynomial);
                }
                nonzero(alpha)?;
                nonzero(beta)
            }
            StandardPair::Third { mu, nu, alpha } => {
                if *mu == 0 || *nu == 0 || mu.gcd(nu) != 1 {
                    return bad("third kind needs gcd(mu, nu) = 1");
                }
                nonzero(alpha)
            }
            StandardPair::Fourth { mu, nu, alpha, beta } => {
                if *mu == 0 || *nu == 0 || mu.gcd(nu) != 2 {
                    return bad("fourth kind needs gcd(mu, nu) = 2");
                }
                nonzero(alpha)?;
                nonzero(beta)
            }
            StandardPair::Fifth { alpha } => nonzero(alpha),
        }
    }

    /// The concrete pair `(F, G)`.
    pub fn realize(&self) -> Result<(Poly, Poly)> {
        self.validate()?;
        let one = Rational::one();
        Ok(match self {
            StandardPair::First { q, p, alpha, v } => (
                Poly::monomial(one, *q as usize),
                &Poly::monomial(alpha.clone(), *p as usize) * &v.pow(*q),
            ),
            StandardPair::Second { alpha, beta, v } => (
                Poly::monomial(one, 2),
                &Poly::new(vec![beta.clone(), Rational::zero(), alpha.clone()]) * &v.pow(2),
            ),
            StandardPair::Third { mu, nu, alpha } => (
                dickson(*mu, &qpow(alpha, *nu as i32))?,
                dickson(*nu, &qpow(alpha, *mu as i32))?,
            ),
            StandardPair::Fourth { mu, nu, alpha, beta } => (
                dickson(*mu, alpha)?.scale(&qpow(alpha, -(*mu as i32) / 2)),
                dickson(*nu, beta)?.scale(&-qpow(beta, -(*nu as i32) / 2)),
            ),
            StandardPair::Fifth { alpha } => (
                Poly::new(vec![-one, Rational::zero(), alpha.clone()]).pow(3),
                Poly::from_ints(&[0, 0, 0, -4, 3]),
            ),
        })
    }
}

fn nonzero(q: &Rational) -> Result<()> {
    if q.is_zero() {
        Err(Error::InvalidParameters("parameters alpha, beta must be nonzero".into()))
    } else {
        Ok(())
    }
}

fn qpow(q: &Rational, e: i32) -> Rational {
    num_traits::Pow::pow(q, e)
}

/// `D_N(x, b) + u = prod_i (x + w_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DicksonFactorization {
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(with = "serde_str_vec")]
    pub w: Vec<Rational>,
    #[serde(with = "serde_str")]
    pub b: Rational,
    #[serde(with = "serde_str")]
    pub u: Rational,
}

impl DicksonFactorization {
    /// `prod_i (x + w_i)`
    pub fn product(&self) -> Poly {
        self.w
            .iter()
            .map(|w| Poly::new(vec![w.clone(), Rational::one()]))
            .product()
    }
}

pub const DICKSON_DEGREES: [u32; 5] = [1, 2, 3, 4, 6];

/// The explicit solutions for `N` in `{1, 2, 3, 4, 6}`.
///
/// For `N = 1, 2` the parameter `b` is free and must be supplied; for the
/// other degrees it is determined by `w1, w2`, and a supplied `b` must agree.
pub fn param_factorization(
    n: u32,
    w1: &Rational,
    w2: &Rational,
    b: Option<&Rational>,
) -> Result<DicksonFactorization> {
    let sq = |q: &Rational| q * q;
    let (w, b_val, u) = match n {
        1 | 2 => {
            let b = b
                .cloned()
                .ok_or_else(|| Error::InvalidParameters(format!("N = {n} needs an explicit b")))?;
            if n == 1 {
                (vec![w1.clone()], b, w1.clone())
            } else {
                let u = int(2) * &b - sq(w1);
                (vec![w1.clone(), -w1.clone()], b, u)
            }
        }
        3 => {
            let b = (sq(w1) + w1 * w2 + sq(w2)) / int(3);
            let u = -(sq(w1) * w2 + w1 * sq(w2));
            (vec![w1.clone(), w2.clone(), -(w1 + w2)], b, u)
        }
        4 => {
            let (s1, s2) = (sq(w1), sq(w2));
            let b = (&s1 + &s2) / int(4);
            let u = -(sq(&s1) - int(6) * &s1 * &s2 + sq(&s2)) / int(8);
            (vec![w1.clone(), -w1.clone(), w2.clone(), -w2.clone()], b, u)
        }
        6 => {
            let w3 = w1 + w2;
            let big_w = sq(w1) + w1 * w2 + sq(w2);
            let b = &big_w / int(3);
            let u = int(2) * sq(&big_w) * &big_w / int(27) - sq(&(w1 * w2 * &w3));
            let w = vec![
                w1.clone(),
                -w1.clone(),
                w2.clone(),
                -w2.clone(),
                w3.clone(),
                -w3,
            ];
            (w, b, u)
        }
        _ => {
            return Err(Error::InvalidParameters(format!(
                "N = {n} is not one of 1, 2, 3, 4, 6"
            )))
        }
    };
    if b_val.is_zero() {
        return Err(Error::ZeroB);
    }
    if n > 2 {
        if let Some(given) = b {
            if *given != b_val {
                return Err(Error::MismatchedB(format!("supplied {given}, derived {b_val}")));
            }
        }
    }
    let distinct: BTreeSet<&Rational> = w.iter().collect();
    if distinct.len() != w.len() {
        return Err(Error::DegenerateRoots);
    }
    Ok(DicksonFactorization { n, w, b: b_val, u })
}

/// Exact check of `D_N(x, b) + u = prod (x + w_i)`.
pub fn verify_factorization(df: &DicksonFactorization) -> bool {
    if df.w.len() != df.n as usize {
        return false;
    }
    match dickson(df.n, &df.b) {
        Ok(d) => d + Poly::constant(df.u.clone()) == df.product(),
        Err(_) => false,
    }
}

/// Triples `(m, n, s)` with `k = m s`, `l = n s` and either
/// `m in {1, 2, 3, 4, 6}` or `n in {1, 2}`. When both polynomials have simple
/// rational roots and `k <= l`, only `m in {1, 2}` survives.
pub fn classify_degrees(k: u32, l: u32, both_simple: bool) -> BTreeSet<(u32, u32, u32)> {
    let mut out = BTreeSet::new();
    if k == 0 || l == 0 {
        return out;
    }
    let g = k.gcd(&l);
    for s in (1..=g).filter(|s| g % s == 0) {
        let (m, n) = (k / s, l / s);
        if !(DICKSON_DEGREES.contains(&m) || n <= 2) {
            continue;
        }
        if both_simple && k <= l && m > 2 {
            continue;
        }
        out.insert((m, n, s));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KindFeasibility {
    pub kind: Kind,
    pub admissible: bool,
    /// Degrees `deg F` for which `f = phi(F)` with every `F - p_i`
    /// simple-rational-rooted.
    pub inner_degrees: Vec<usize>,
    pub constraint: String,
}

/// Which kinds of standard pair can underlie `f = phi(F)` for a given `f`
/// with simple rational roots.
pub fn feasible_kinds(f: &Poly) -> Result<Vec<KindFeasibility>> {
    if !f.is_simple_rational_rooted()? {
        return Err(Error::NotSimpleRooted(f.to_string()));
    }
    let n = f.degree().unwrap_or(0);
    let decomposable: Vec<usize> = (1..=n)
        .filter(|d| n % d == 0 && decompose(f, *d).is_ok())
        .collect();
    let restrict = |allowed: &[usize]| -> Vec<usize> {
        decomposable
            .iter()
            .copied()
            .filter(|d| allowed.contains(d))
            .collect()
    };
    let third = restrict(&[1, 2, 3, 4, 6]);
    let fourth = restrict(&[2, 4, 6]);
    Ok(vec![
        KindFeasibility {
            kind: Kind::First,
            admissible: !decomposable.is_empty(),
            inner_degrees: decomposable.clone(),
            constraint: "min(deg F, deg G) <= 2".into(),
        },
        KindFeasibility {
            kind: Kind::Second,
            admissible: !decomposable.is_empty(),
            inner_degrees: decomposable.clone(),
            constraint: "min(deg F, deg G) <= 2".into(),
        },
        KindFeasibility {
            kind: Kind::Third,
            admissible: !third.is_empty(),
            inner_degrees: third,
            constraint: "deg F in {1, 2, 3, 4, 6}".into(),
        },
        KindFeasibility {
            kind: Kind::Fourth,
            admissible: !fourth.is_empty(),
            inner_degrees: fourth,
            constraint: "deg F in {2, 4, 6}".into(),
        },
        KindFeasibility {
            kind: Kind::Fifth,
            admissible: false,
            inner_degrees: Vec::new(),
            constraint: "excluded: F - p has a multiple root for every p".into(),
        },
    ])
}

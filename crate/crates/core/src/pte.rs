//! Prouhet–Tarry–Escott sets: monic polynomials with simple rational roots
//! that differ only in their constant terms.
//!
//! A [`PteSet`] stores each block of roots together with the shared
//! nonconstant part and the per-block offset, so that
//! `prod_{r in block i} (x - r) = shared(x) + offsets[i]`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{power_sums, Poly};
use crate::rational::{int, serde_str_vec, Rational};
use crate::reps::{reps_hex_form, reps_sum_two_squares};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PteSet {
    pub m: usize,
    #[serde(with = "blocks_serde")]
    pub blocks: Vec<Vec<Rational>>,
    pub shared: Poly,
    #[serde(with = "serde_str_vec")]
    pub offsets: Vec<Rational>,
}

mod blocks_serde {
    use super::*;
    use crate::rational::{format_rational, parse_rational};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<Vec<String>> = v
            .iter()
            .map(|b| b.iter().map(format_rational).collect())
            .collect();
        raw.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(d)?;
        raw.iter()
            .map(|b| {
                b.iter()
                    .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

impl PteSet {
    /// Builds the set from raw blocks. The shared part is taken from the
    /// first block with its constant removed; offsets are each block's
    /// constant term.
    pub fn from_blocks(blocks: Vec<Vec<Rational>>) -> Result<PteSet> {
        let m = blocks.first().map(Vec::len).unwrap_or(0);
        if m == 0 || blocks.iter().any(|b| b.len() != m) {
            return Err(Error::InvalidParameters(
                "blocks must be nonempty and of equal size".into(),
            ));
        }
        let polys: Vec<Poly> = blocks
            .iter()
            .map(|b| Poly::from_roots(&Rational::one(), b))
            .collect::<Result<_>>()?;
        let offsets = polys.iter().map(|p| p.coeff(0)).collect();
        let shared = &polys[0] - &Poly::constant(polys[0].coeff(0));
        Ok(PteSet {
            m,
            blocks,
            shared,
            offsets,
        })
    }

    pub fn block_polys(&self) -> Vec<Poly> {
        self.offsets
            .iter()
            .map(|o| &self.shared + &Poly::constant(o.clone()))
            .collect()
    }

    /// Every block expands to `shared + offset`.
    pub fn is_consistent(&self) -> bool {
        self.blocks.len() == self.offsets.len()
            && self
                .blocks
                .iter()
                .zip(self.block_polys())
                .all(|(b, p)| Poly::from_roots(&Rational::one(), b).ok() == Some(p))
    }

    /// `prod_i (shared + offsets[i])`, the PTE_m-polynomial of the set.
    pub fn product_poly(&self) -> Poly {
        self.block_polys().into_iter().product()
    }
}

/// `{+-a1, +-a2}` for each primitive representation `M = a1^2 + a2^2`;
/// shared part `x^4 - M x^2`, offsets `(a1 a2)^2`.
pub fn construct_pte4(m: u64) -> Result<PteSet> {
    let blocks = reps_sum_two_squares(m)?
        .into_iter()
        .map(|r| {
            let (a, b) = (int(r.x as i64), int(r.y as i64));
            vec![a.clone(), -a, b.clone(), -b]
        })
        .collect();
    PteSet::from_blocks(blocks)
}

/// `{+-x, +-y, +-(x+y)}` for each primitive `M = x^2 + xy + y^2`; shared part
/// `x^6 - 2M x^4 + M^2 x^2`, offsets `-(x y (x+y))^2`.
pub fn construct_pte6(m: u64) -> Result<PteSet> {
    let blocks = reps_hex_form(m)?
        .into_iter()
        .map(|r| {
            let (x, y) = (int(r.x as i64), int(r.y as i64));
            let s = &x + &y;
            vec![x.clone(), -x, y.clone(), -y, s.clone(), -s]
        })
        .collect();
    PteSet::from_blocks(blocks)
}

/// Triples with sum 0 and sum of squares `2M^2`: the base triple
/// `(-M, 0, M)` first, then for every primitive `M = x^2 + xy + y^2` the
/// triple `(M + x(y-x), -M + y(y-x), x^2 - y^2)` followed by its negation.
pub fn construct_pte3(m: u64) -> Result<PteSet> {
    let reps = reps_hex_form(m)?;
    let big_m = int(m as i64);
    let mut blocks = vec![vec![-big_m.clone(), Rational::zero(), big_m.clone()]];
    for r in reps {
        let (x, y) = (int(r.x as i64), int(r.y as i64));
        let d = &y - &x;
        let t = vec![&big_m + &x * &d, -&big_m + &y * &d, &x * &x - &y * &y];
        let neg: Vec<Rational> = t.iter().map(|v| -v.clone()).collect();
        blocks.push(t);
        blocks.push(neg);
    }
    PteSet::from_blocks(blocks)
}

/// Power sums agree across blocks for `j = 1..m-1` and all roots are
/// pairwise distinct.
pub fn verify_pte(set: &PteSet) -> bool {
    let Some(first) = set.blocks.first() else {
        return false;
    };
    let m = set.m;
    if set.blocks.iter().any(|b| b.len() != m) {
        return false;
    }
    let mut seen = BTreeSet::new();
    if !set.blocks.iter().flatten().all(|r| seen.insert(r.clone())) {
        return false;
    }
    let jmax = m.saturating_sub(1);
    let reference = power_sums(first, jmax);
    set.blocks.iter().all(|b| power_sums(b, jmax) == reference)
}

/// `f = phi(inner)` with `inner` monic of degree `m` and zero constant term;
/// `p_list` are the (distinct, rational) roots of `phi`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PteDecomposition {
    pub phi: Poly,
    pub inner: Poly,
    #[serde(with = "serde_str_vec")]
    pub p_list: Vec<Rational>,
}

/// Splits a simple-rational-rooted `f` as `phi(F)` with `deg F = m`.
///
/// The coefficients of `F` are fixed top-down from those of `f / lead(f)`:
/// the coefficient of `x^(n-k)` in `F^s` is `s * c_(m-k)` plus terms in the
/// already-known `c_(m-1), ..., c_(m-k+1)`. `phi` is then read off as the
/// `F`-adic expansion of `f` by repeated division.
pub fn decompose(f: &Poly, m: usize) -> Result<PteDecomposition> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 || n == 0 || n % m != 0 {
        return Err(Error::DegreeMismatch(format!(
            "inner degree {m} does not divide deg f = {n}"
        )));
    }
    if !f.is_simple_rational_rooted()? {
        return Err(Error::NotSimpleRooted(f.to_string()));
    }
    let inner = right_component(f, m);
    let phi = left_component(f, &inner)?;
    if phi.compose(&inner) != *f {
        return Err(Error::NoDecomposition(format!("no degree-{m} right factor")));
    }
    let p_list = phi.rational_roots()?;
    let s = n / m;
    let distinct: BTreeSet<_> = p_list.iter().collect();
    if p_list.len() != s || distinct.len() != s {
        return Err(Error::NoDecomposition("phi lacks distinct rational roots".into()));
    }
    for p in &p_list {
        let shifted = &inner - &Poly::constant(p.clone());
        if !shifted.is_simple_rational_rooted()? {
            return Err(Error::NoDecomposition(format!("F - {p} is not simple-rooted")));
        }
    }
    Ok(PteDecomposition { phi, inner, p_list })
}

/// Candidate monic `F` of degree `m` with `F(0) = 0` agreeing with the top
/// coefficients of `f^(1/s)`.
fn right_component(f: &Poly, m: usize) -> Poly {
    let n = f.degree().expect("nonzero");
    let s = (n / m) as u32;
    let fm = f.monic();
    let mut coeffs = vec![Rational::zero(); m + 1];
    coeffs[m] = Rational::one();
    let s_inv = Rational::new(BigInt::one(), BigInt::from(s));
    for k in 1..m {
        let partial = Poly::new(coeffs.clone()).pow(s);
        let c = (fm.coeff(n - k) - partial.coeff(n - k)) * &s_inv;
        coeffs[m - k] = c;
    }
    Poly::new(coeffs)
}

fn left_component(f: &Poly, inner: &Poly) -> Result<Poly> {
    let mut digits = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(inner);
        if !r.is_constant() {
            return Err(Error::NoDecomposition(format!(
                "remainder {r} is not constant"
            )));
        }
        digits.push(r.coeff(0));
        rest = q;
    }
    Ok(Poly::new(digits))
}

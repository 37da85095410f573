//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order of degree and the zero
//! polynomial is the empty vector, so the leading coefficient of a nonzero
//! polynomial is always nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Poly {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, deg: usize) -> Poly {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::new(coeffs)
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Poly {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `self(inner(x))`, by Horner's scheme in the ring.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * inner) + &Poly::constant(c.clone())
        })
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let ints = self.integer_coefficients();
        Poly::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Coprime integer coefficients of a positive multiple of `self`.
    pub fn integer_coefficients(&self) -> Vec<BigInt> {
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    /// Squarefree decomposition `p = lc * prod a_i^i` with monic, pairwise
    /// coprime, squarefree `a_i`. Returns `(i, a_i)` for nonconstant factors.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Poly)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((i, a.clone()));
            }
            let b_next = b.exact_div(&a).expect("gcd divides");
            let c_next = d.exact_div(&a).expect("gcd divides");
            d = &c_next - &b_next.derivative();
            b = b_next;
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// `lead * prod (x - r)`.
    pub fn from_roots(lead: &Rational, roots: &[Rational]) -> Result<Poly> {
        if lead.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let p = roots
            .iter()
            .fold(Poly::one(), |acc, r| &acc * &Poly::linear_root(r));
        Ok(p.scale(lead))
    }

    /// All rational roots with multiplicity, ascending.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        for (mult, factor) in self.squarefree_decomposition() {
            for r in squarefree_rational_roots(&factor) {
                roots.extend(std::iter::repeat(r).take(mult));
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// True iff the polynomial has `deg` distinct rational roots.
    pub fn is_simple_rational_rooted(&self) -> Result<bool> {
        let deg = self.degree().ok_or(Error::ConstantPolynomial)?;
        if deg == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !self.is_squarefree() {
            return Ok(false);
        }
        Ok(squarefree_rational_roots(self).len() == deg)
    }

    pub fn discriminant(&self) -> Result<Rational> {
        let n = match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        let res = resultant(self, &self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(res * int(sign) / self.lead().expect("nonzero"))
    }

    /// `self(a x + b)`.
    pub fn similar(&self, s: &LinearSubst) -> Poly {
        self.compose(&s.as_poly())
    }

    /// Lagrange interpolation through points with distinct abscissae.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
        let mut out = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Poly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let d = xi - xj;
                if d.is_zero() {
                    return Err(Error::InvalidParameters("repeated abscissa".into()));
                }
                basis = &basis * &Poly::linear_root(xj).scale(&(Rational::one() / d));
            }
            out = out + basis;
        }
        Ok(out)
    }
}

/// Distinct rational roots of a squarefree polynomial, ascending.
///
/// Roots `p/q` of the primitive integer form have `q | lead`, so they live on
/// the lattice `(1/lead) Z`. Sturm sequences count roots in half-open lattice
/// intervals and bisection narrows them to unit lattice cells; a rational
/// root is then the right endpoint of its cell.
fn squarefree_rational_roots(p: &Poly) -> Vec<Rational> {
    let mut roots = Vec::new();
    let mut p = p.clone();
    if p.is_constant() {
        return roots;
    }
    if p.coeff(0).is_zero() {
        roots.push(Rational::zero());
        p = Poly::new(p.coeffs[1..].to_vec());
        if p.is_constant() {
            return roots;
        }
    }
    let mut ints = p.integer_coefficients();
    if ints.last().expect("nonconstant").is_negative() {
        ints.iter_mut().for_each(|c| *c = -&*c);
    }
    let n = ints.len() - 1;
    let lead = ints[n].clone();

    let chain = sturm_chain(&Poly::new(ints.iter().cloned().map(Rational::from_integer).collect()));
    let evaluator = LatticeSigns::new(&chain, &lead);

    // Fujiwara bound: every root has |r| < 2 max |c_i / c_n|^(1/(n-i)).
    let mut bound = BigInt::one();
    for (i, c) in ints.iter().enumerate().take(n) {
        if c.is_zero() {
            continue;
        }
        let ratio = c.abs().div_ceil(&lead);
        let root = ratio.nth_root((n - i) as u32) + BigInt::one();
        bound = bound.max(root);
    }
    let hi = BigInt::from(2) * bound * &lead;
    let lo = -hi.clone();

    let mut found = Vec::new();
    let v_lo = evaluator.variations(&lo);
    let v_hi = evaluator.variations(&hi);
    isolate(&evaluator, &ints, lo, hi, v_lo, v_hi, &mut found);
    roots.extend(found.into_iter().map(|j| Rational::new(j, lead.clone())));
    roots.sort();
    roots
}

fn sturm_chain(p: &Poly) -> Vec<Vec<BigInt>> {
    let mut chain = vec![p.primitive_part(), p.derivative().primitive_part()];
    loop {
        let k = chain.len();
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-r).primitive_part());
    }
    chain.iter().map(|q| q.integer_coefficients()).collect()
}

/// Sign variations of a Sturm chain at lattice points `j / lead`.
struct LatticeSigns<'a> {
    chain: &'a [Vec<BigInt>],
    lead_powers: Vec<BigInt>,
}

impl<'a> LatticeSigns<'a> {
    fn new(chain: &'a [Vec<BigInt>], lead: &BigInt) -> Self {
        let max_deg = chain.iter().map(|c| c.len()).max().unwrap_or(1);
        let mut lead_powers = vec![BigInt::one()];
        for i in 1..max_deg {
            let next = &lead_powers[i - 1] * lead;
            lead_powers.push(next);
        }
        LatticeSigns { chain, lead_powers }
    }

    /// Sign of `lead^deg * q(j / lead)`, which has the sign of `q(j / lead)`.
    fn sign(&self, q: &[BigInt], j: &BigInt) -> Sign {
        let d = q.len() - 1;
        let mut acc = q[d].clone();
        for i in (0..d).rev() {
            acc = acc * j + &q[i] * &self.lead_powers[d - i];
        }
        acc.sign()
    }

    fn variations(&self, j: &BigInt) -> usize {
        let signs: Vec<Sign> = self
            .chain
            .iter()
            .map(|q| self.sign(q, j))
            .filter(|s| *s != Sign::NoSign)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

fn isolate(
    ev: &LatticeSigns<'_>,
    p: &[BigInt],
    lo: BigInt,
    hi: BigInt,
    v_lo: usize,
    v_hi: usize,
    out: &mut Vec<BigInt>,
) {
    if v_lo <= v_hi {
        return;
    }
    if &hi - &lo == BigInt::one() {
        if ev.sign(p, &hi) == Sign::NoSign {
            out.push(hi);
        }
        return;
    }
    let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
    let v_mid = ev.variations(&mid);
    isolate(ev, p, lo, mid.clone(), v_lo, v_mid, out);
    isolate(ev, p, mid, hi, v_mid, v_hi, out);
}

/// Resultant via the determinant of the Sylvester matrix.
pub fn resultant(p: &Poly, q: &Poly) -> Rational {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return Rational::zero();
    };
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut mat = vec![vec![Rational::zero(); size]; size];
    for row in 0..n {
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    determinant(mat)
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn determinant(mut mat: Vec<Vec<Rational>>) -> Rational {
    let n = mat.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !mat[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let pv = mat[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pv;
            for c in col..n {
                let delta = &factor * &mat[col][c];
                mat[r][c] -= delta;
            }
        }
    }
    det
}

/// `[sum r, sum r^2, ..., sum r^jmax]`.
pub fn power_sums(roots: &[Rational], jmax: usize) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); jmax];
    for r in roots {
        let mut pw = Rational::one();
        for s in sums.iter_mut() {
            pw *= r;
            *s += &pw;
        }
    }
    sums
}

/// Power sums of the roots of a monic polynomial, from its coefficients
/// through the Newton identities.
pub fn power_sums_from_monic(p: &Poly, jmax: usize) -> Vec<Rational> {
    let n = p.degree().unwrap_or(0);
    let p = p.monic();
    // e_k = (-1)^k c_{n-k}
    let e = |k: usize| -> Rational {
        if k > n {
            return Rational::zero();
        }
        let c = p.coeff(n - k);
        if k % 2 == 0 {
            c
        } else {
            -c
        }
    };
    let mut sums: Vec<Rational> = Vec::with_capacity(jmax);
    for k in 1..=jmax {
        let mut s = Rational::zero();
        for i in 1..k {
            let term = e(i) * &sums[k - i - 1];
            if i % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        let last = e(k) * int(k as i64);
        if k % 2 == 1 {
            s += last;
        } else {
            s -= last;
        }
        sums.push(s);
    }
    sums
}

/// Monic polynomial of degree `sums.len()` whose roots have the given power
/// sums.
pub fn monic_from_power_sums(sums: &[Rational]) -> Poly {
    let n = sums.len();
    let mut e = vec![Rational::one()];
    for k in 1..=n {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / int(k as i64));
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, ek) in e.into_iter().enumerate() {
        coeffs[n - k] = if k % 2 == 0 { ek } else { -ek };
    }
    Poly::new(coeffs)
}

/// The substitution `x -> a x + b` with `a != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubst {
    a: Rational,
    b: Rational,
}

impl LinearSubst {
    pub fn new(a: Rational, b: Rational) -> Result<LinearSubst> {
        if a.is_zero() {
            return Err(Error::InvalidParameters("linear substitution needs a != 0".into()));
        }
        Ok(LinearSubst { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn as_poly(&self) -> Poly {
        Poly::new(vec![self.b.clone(), self.a.clone()])
    }

    pub fn inverse(&self) -> LinearSubst {
        let a = self.a.recip();
        let b = -&self.b * &a;
        LinearSubst { a, b }
    }

    /// Image of a root of `p` under the passage from `p` to `p(a x + b)`.
    pub fn pull_back_root(&self, r: &Rational) -> Rational {
        (r - &self.b) / &self.a
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Poly, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

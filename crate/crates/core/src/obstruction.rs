//! Finiteness certificates for the two shapes where a third- or fourth-kind
//! pair with `deg F > 2` could still occur: the `(3, 4)` discriminant
//! comparison and the `(4, 6)` leading-sign test, plus the rational
//! parametrization of `3a^2 + b^2 = c^2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{big, int, is_rational_square, rational_sqrt_exact, serde_str, serde_str_vec, Rational};

/// `U(x) = (x - A1)(x - A2)(x + A1 + A2)` and
/// `V(y) = Delta (y^2 - B1^2)(y^2 - B2^2)`.
pub fn shape_polys(a1: &Rational, a2: &Rational, delta: &Rational, b1: &Rational, b2: &Rational) -> Result<(Poly, Poly)> {
    let one = Rational::one();
    let u = Poly::from_roots(&one, &[a1.clone(), a2.clone(), -(a1 + a2)])?;
    let v = Poly::from_roots(delta, &[b1.clone(), -b1.clone(), b2.clone(), -b2.clone()])?;
    Ok((u, v))
}

/// `disc(p + z)` as a polynomial in `z`, by interpolation at `z = 0..deg p`.
pub fn shifted_discriminant(p: &Poly) -> Result<Poly> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let points = (0..n as i64)
        .map(|z| {
            let shifted = p + &Poly::constant(int(z));
            shifted.discriminant().map(|d| (int(z), d))
        })
        .collect::<Result<Vec<_>>>()?;
    Poly::interpolate(&points)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ERoot {
    #[serde(with = "serde_str")]
    pub value: Rational,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    #[serde(with = "serde_str")]
    pub a1: Rational,
    #[serde(with = "serde_str")]
    pub a2: Rational,
    #[serde(with = "serde_str")]
    pub delta: Rational,
    #[serde(with = "serde_str")]
    pub b1: Rational,
    #[serde(with = "serde_str")]
    pub b2: Rational,
    /// Roots of `D(z)` are `d_center +- sqrt(d_radicand)`.
    #[serde(with = "serde_str")]
    pub d_center: Rational,
    #[serde(with = "serde_str")]
    pub d_radicand: Rational,
    /// `3 (A1^2 + A1 A2 + A2^2)`; the roots of `D` are rational iff this is a square.
    #[serde(with = "serde_str")]
    pub three_w: Rational,
    pub d_roots_rational: bool,
    #[serde(with = "serde_str_vec")]
    pub d_roots: Vec<Rational>,
    pub e_roots: Vec<ERoot>,
    /// Roots of `D` (counted once) that are not roots of `E`.
    pub d_roots_off_e: usize,
    /// `[m / 2]` for `m = deg U = 3`.
    pub required: usize,
    pub finiteness_certified: bool,
}

/// Compares `D(z) = disc(U + z)` with `E(z) = disc(V + z)` for `U`, `V` of
/// the `(3, 4)` shape. Both root sets are taken from closed forms.
pub fn disc_obstruction(u: &Poly, v: &Poly) -> Result<ObstructionReport> {
    let (a1, a2) = cubic_shape(u)?;
    let (delta, b1, b2) = quartic_shape(v)?;
    let w = &a1 * &a1 + &a1 * &a2 + &a2 * &a2;
    let three_w = int(3) * &w;
    let d_center = -(&a1 * &a1 * &a2 + &a1 * &a2 * &a2);
    let d_radicand = int(4) * &w * &w * &w / int(27);
    let d_roots_rational = is_rational_square(&three_w);
    let d_roots = match rational_sqrt_exact(&d_radicand) {
        Some(r) => {
            let mut v = vec![&d_center - &r, &d_center + &r];
            v.dedup();
            v
        }
        None => Vec::new(),
    };
    let (s1, s2) = (&b1 * &b1, &b2 * &b2);
    let half_diff = (&s1 - &s2) / int(2);
    let e_roots = vec![
        ERoot { value: -(&delta * &s1 * &s2), multiplicity: 1 },
        ERoot { value: &delta * &half_diff * &half_diff, multiplicity: 2 },
    ];
    // Irrational roots of D never meet the rational roots of E.
    let d_roots_off_e = if d_roots_rational {
        d_roots.iter().filter(|r| e_roots.iter().all(|e| &e.value != *r)).count()
    } else {
        2
    };
    let required = 1;
    Ok(ObstructionReport {
        a1,
        a2,
        delta,
        b1,
        b2,
        d_center,
        d_radicand,
        three_w,
        d_roots_rational,
        d_roots,
        e_roots,
        d_roots_off_e,
        required,
        finiteness_certified: d_roots_off_e >= required,
    })
}

fn cubic_shape(u: &Poly) -> Result<(Rational, Rational)> {
    let bad = |m: &str| Error::ShapeMismatch(format!("U = {u}: {m}"));
    if u.degree() != Some(3) || u.lead() != Some(&Rational::one()) || !u.coeff(2).is_zero() {
        return Err(bad("expected a monic cubic with vanishing x^2 term"));
    }
    let roots = u.rational_roots()?;
    if roots.len() != 3 || !u.is_squarefree() {
        return Err(bad("expected three distinct rational roots"));
    }
    Ok((roots[0].clone(), roots[1].clone()))
}

fn quartic_shape(v: &Poly) -> Result<(Rational, Rational, Rational)> {
    let bad = |m: &str| Error::ShapeMismatch(format!("V = {v}: {m}"));
    if v.degree() != Some(4) || !v.coeff(1).is_zero() || !v.coeff(3).is_zero() {
        return Err(bad("expected an even quartic"));
    }
    let roots = v.rational_roots()?;
    if roots.len() != 4 || !v.is_squarefree() {
        return Err(bad("expected four distinct rational roots"));
    }
    let delta = v.lead().expect("quartic").clone();
    Ok((delta, roots[3].clone(), roots[2].clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignReport {
    #[serde(with = "serde_str")]
    pub lead_f: Rational,
    #[serde(with = "serde_str")]
    pub lead_g: Rational,
    pub signs_differ: bool,
}

/// For `a^-2 D_4(x, a) = -b^-3 D_6(y, b)`: both sides have even degree, so
/// opposite leading signs leave only finitely many bounded-denominator
/// solutions.
pub fn leading_sign_obstruction(a: &Rational, b: &Rational) -> Result<SignReport> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let lead_f = Rational::one() / (a * a);
    let lead_g = -Rational::one() / (b * b * b);
    let signs_differ = lead_f.is_positive() != lead_g.is_positive();
    Ok(SignReport { lead_f, lead_g, signs_differ })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeParam {
    #[serde(with = "serde_str")]
    pub u: Rational,
    #[serde(with = "serde_str")]
    pub v: Rational,
    #[serde(with = "serde_str")]
    pub w: Rational,
    /// Signs with `a = s0 w 2uv`, `b = s1 w (3u^2 - v^2)`, `c = s2 w (3u^2 + v^2)`.
    pub signs: [i8; 3],
}

impl ConeParam {
    pub fn abc(&self) -> (Rational, Rational, Rational) {
        let (u, v, w) = (&self.u, &self.v, &self.w);
        let s = |i: usize| int(self.signs[i] as i64);
        let three_u2 = int(3) * u * u;
        (
            s(0) * w * int(2) * u * v,
            s(1) * w * (&three_u2 - v * v),
            s(2) * w * (&three_u2 + v * v),
        )
    }
}

fn sign(q: &Rational) -> i8 {
    if q.is_negative() {
        -1
    } else {
        1
    }
}

/// Rational `u, v, w` and signs with `(a, b, c)` as in [`ConeParam`], for a
/// point on `3a^2 + b^2 = c^2`. For `a != 0`, `u = |a|`, `v = |c| - |b|`,
/// `w = 1 / (2v)` solve the system, after which `(u, v)` is scaled to a
/// coprime integer pair.
pub fn parametrize_3a2b2(a: &Rational, b: &Rational, c: &Rational) -> Result<ConeParam> {
    if int(3) * a * a + b * b != c * c {
        return Err(Error::NotOnCone(format!("3({a})^2 + ({b})^2 != ({c})^2")));
    }
    let param = if a.is_zero() {
        // 2uv = 0, 3u^2 - v^2 = -1, 3u^2 + v^2 = 1
        ConeParam {
            u: Rational::zero(),
            v: Rational::one(),
            w: c.abs(),
            signs: [1, -sign(b), sign(c)],
        }
    } else {
        let (aa, bb, cc) = (a.abs(), b.abs(), c.abs());
        let v = &cc - &bb;
        let w = Rational::one() / (int(2) * &v);
        let (u, v, w) = normalize(aa, v, w);
        ConeParam { u, v, w, signs: [sign(a), sign(b), sign(c)] }
    };
    debug_assert_eq!(param.abc(), (a.clone(), b.clone(), c.clone()));
    if param.abc() != (a.clone(), b.clone(), c.clone()) {
        return Err(Error::NotOnCone("round trip failed".into()));
    }
    Ok(param)
}

/// Scales `(u, v)` by `1/lambda` to coprime integers and `w` by `lambda^2`.
fn normalize(u: Rational, v: Rational, w: Rational) -> (Rational, Rational, Rational) {
    let l = u.denom().lcm(v.denom());
    let un = u.numer() * (&l / u.denom());
    let vn = v.numer() * (&l / v.denom());
    let g = un.gcd(&vn);
    let lambda = Rational::new(g.clone(), l);
    let (u2, v2): (BigInt, BigInt) = (&un / &g, &vn / &g);
    (big(&u2), big(&v2), w * &lambda * &lambda)
}

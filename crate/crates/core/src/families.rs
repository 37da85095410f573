//! Equation families `f(x) = g(y)` with `f = phi(F)`, `g = phi(G)` for a
//! standard pair `(F, G)`, together with an infinite solution source, and
//! their exact verification.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::dickson::{dickson, verify_bridge_4_10, verify_bridge_6_10};
use crate::error::{Error, Result};
use crate::pell::{Orientation, SolutionSeq};
use crate::poly::Poly;
use crate::rational::{big, format_rational, int, serde_str, Rational};
use crate::stdpairs::param_factorization;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    First,
    Second,
    Third,
    Fourth,
}

/// `Standard`: `f` is built on the `F` side of the pair (`F = x` or `x^2`).
/// `Mirrored`: the roles are exchanged, so `f = phi(G)` and `g = phi(y)` or
/// `phi(y^2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    #[default]
    Standard,
    Mirrored,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum Param {
    /// `(x, y) = (x(X), y(X))` for every `X`.
    Poly { x: Poly, y: Poly },
    /// `(x, y) = (x(p, q), y(p, q))` for every element `(p, q)` of `seq`.
    Pell { seq: SolutionSeq, x: BiPoly, y: BiPoly },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BridgeVariant {
    #[serde(rename = "4_10")]
    FourTen,
    #[serde(rename = "6_10")]
    SixTen,
}

impl BridgeVariant {
    pub fn degree(self) -> u32 {
        match self {
            BridgeVariant::FourTen => 4,
            BridgeVariant::SixTen => 6,
        }
    }

    /// The Pell data `(D, N)` of the conic `b^(m/2) v1^2 + a v2^2 = 4ab`.
    pub fn pell_data(self, a: &Rational, b: &Rational) -> (Rational, Rational) {
        let half = self.degree() as i32 / 2;
        let bh = num_traits::Pow::pow(b, half);
        (-a / &bh, int(4) * a * b / bh)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bridge {
    pub variant: BridgeVariant,
    #[serde(with = "serde_str")]
    pub a: Rational,
    #[serde(with = "serde_str")]
    pub b: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationFamily {
    pub id: String,
    pub kind: FamilyKind,
    #[serde(default)]
    pub layout: Layout,
    pub f: Poly,
    pub g: Poly,
    pub phi: Poly,
    /// The inner polynomials with `f = phi(inner_f)`, `g = phi(inner_g)`.
    pub inner_f: Poly,
    pub inner_g: Poly,
    pub param: Param,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bridge: Option<Bridge>,
    pub provenance: String,
}

impl EquationFamily {
    pub fn with_id(mut self, id: &str, provenance: &str) -> EquationFamily {
        self.id = id.to_string();
        self.provenance = provenance.to_string();
        self
    }
}

fn require_simple(f: &Poly) -> Result<()> {
    if f.is_simple_rational_rooted()? {
        Ok(())
    } else {
        Err(Error::NotSimpleRooted(f.to_string()))
    }
}

fn require_nonconstant(p: &Poly) -> Result<()> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        _ => Ok(()),
    }
}

/// `F = x`: `f = phi`, `g = phi(G)`, solutions `(G(X), X)`. Mirrored:
/// `f = phi(G)`, `g = phi`, solutions `(X, G(X))`.
pub fn build_first_kind(phi: &Poly, big_g: &Poly, layout: Layout) -> Result<EquationFamily> {
    require_nonconstant(phi)?;
    require_nonconstant(big_g)?;
    let composed = phi.compose(big_g);
    let (f, g, inner_f, inner_g, x, y) = match layout {
        Layout::Standard => (phi.clone(), composed, Poly::x(), big_g.clone(), big_g.clone(), Poly::x()),
        Layout::Mirrored => (composed, phi.clone(), big_g.clone(), Poly::x(), Poly::x(), big_g.clone()),
    };
    require_simple(&f)?;
    Ok(EquationFamily {
        id: "custom".into(),
        kind: FamilyKind::First,
        layout,
        f,
        g,
        phi: phi.clone(),
        inner_f,
        inner_g,
        param: Param::Poly { x, y },
        bridge: None,
        provenance: "first kind, F = x".into(),
    })
}

/// Number of roots (over the algebraic closure) of odd multiplicity.
pub fn odd_multiplicity_roots(p: &Poly) -> usize {
    p.squarefree_decomposition()
        .iter()
        .filter(|(m, _)| m % 2 == 1)
        .map(|(_, q)| q.degree().unwrap_or(0))
        .sum()
}

/// `F = x^2`: `f = phi(x^2)`, `g = phi(G)`, with solutions supplied by a
/// parametrization of `x^2 = G(y)`. Mirrored: `f = phi(G)`, `g = phi(y^2)`
/// and the source parametrizes `G(x) = y^2`.
pub fn build_second_kind(phi: &Poly, big_g: &Poly, source: Param, layout: Layout) -> Result<EquationFamily> {
    require_nonconstant(phi)?;
    require_nonconstant(big_g)?;
    let square = Poly::monomial(Rational::one(), 2);
    let (inner_f, inner_g) = match layout {
        Layout::Standard => (square, big_g.clone()),
        Layout::Mirrored => (big_g.clone(), square),
    };
    let f = phi.compose(&inner_f);
    let g = phi.compose(&inner_g);
    require_simple(&f)?;
    let odd = odd_multiplicity_roots(big_g);
    if odd > 2 {
        return Err(Error::OddMultiplicityViolation(odd));
    }
    let source_ok = match &source {
        Param::Poly { x, y } => inner_f.compose(x) == inner_g.compose(y),
        Param::Pell { seq, x, y } => seq.iter().take(2).all(|(p, q)| {
            let (p, q) = (big(&p), big(&q));
            inner_f.evaluate(&x.evaluate(&p, &q)) == inner_g.evaluate(&y.evaluate(&p, &q))
        }),
    };
    if !source_ok {
        return Err(Error::SolutionSourceInvalid(format!(
            "source does not solve {inner_f} = {inner_g}"
        )));
    }
    Ok(EquationFamily {
        id: "custom".into(),
        kind: FamilyKind::Second,
        layout,
        f,
        g,
        phi: phi.clone(),
        inner_f,
        inner_g,
        param: source,
        bridge: None,
        provenance: "second kind, F = x^2".into(),
    })
}

/// `phi = prod (x + u_i)` over the factorizations
/// `D_(n_f)(x, b^(n_g)) + u_i = prod (x + w)`, `F = D_(n_f)(x, b^(n_g))`,
/// `G = D_(n_g)(y, b^(n_f))`, solutions `(D_(n_g)(X, b), D_(n_f)(X, b))`.
pub fn build_third_kind(n_f: u32, n_g: u32, b: &Rational, reps: &[(Rational, Rational)]) -> Result<EquationFamily> {
    if ![3, 4, 6].contains(&n_f) || n_g == 0 {
        return Err(Error::InvalidParameters(format!("unsupported degrees ({n_f}, {n_g})")));
    }
    if n_f.gcd(&n_g) != 1 {
        return Err(Error::NotCoprime(n_f, n_g));
    }
    if b.is_zero() {
        return Err(Error::ZeroB);
    }
    if reps.is_empty() {
        return Err(Error::InvalidParameters("at least one representation needed".into()));
    }
    let b_f = num_traits::pow(b.clone(), n_g as usize);
    let b_g = num_traits::pow(b.clone(), n_f as usize);
    let mut phi = Poly::one();
    for (w1, w2) in reps {
        let df = param_factorization(n_f, w1, w2, None)?;
        if df.b != b_f {
            return Err(Error::MismatchedB(format!(
                "({w1}, {w2}) gives b = {}, expected {b_f}",
                df.b
            )));
        }
        phi = &phi * &Poly::new(vec![df.u, Rational::one()]);
    }
    let inner_f = dickson(n_f, &b_f)?;
    let inner_g = dickson(n_g, &b_g)?;
    let f = phi.compose(&inner_f);
    require_simple(&f)?;
    let g = phi.compose(&inner_g);
    Ok(EquationFamily {
        id: "custom".into(),
        kind: FamilyKind::Third,
        layout: Layout::Standard,
        f,
        g,
        phi,
        inner_f,
        inner_g,
        param: Param::Poly { x: dickson(n_g, b)?, y: dickson(n_f, b)? },
        bridge: None,
        provenance: format!("third kind, degrees ({n_f}, {n_g})"),
    })
}

/// `F = b^(-m/2) D_m(x, b)` with `m = 4` or `6`, `G = -a^(-5) D_10(y, a)`,
/// `phi = prod (x + u_i b^(-m/2))`. Solutions come from Pell pairs
/// `(v1, v2)` on `b^(m/2) v1^2 + a v2^2 = 4ab` through
/// `x = b^-2 D_5(v2, b)` and `y = v1 v2` (m = 4) or `v1 (v2^2 - b)` (m = 6).
pub fn build_fourth_kind(
    variant: BridgeVariant,
    a: &Rational,
    b: &Rational,
    reps: &[(Rational, Rational)],
    seq: SolutionSeq,
) -> Result<EquationFamily> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroDelta);
    }
    if reps.is_empty() {
        return Err(Error::InvalidParameters("at least one representation needed".into()));
    }
    if seq.orientation != Orientation::Standard {
        return Err(Error::ConstraintViolated("bridge seeds must be (v1, v2) pairs".into()));
    }
    let m = variant.degree();
    let half = (m / 2) as i32;
    let scale = num_traits::Pow::pow(b, -half);
    let mut phi = Poly::one();
    for (w1, w2) in reps {
        let df = param_factorization(m, w1, w2, None)?;
        if df.b != *b {
            return Err(Error::MismatchedB(format!(
                "({w1}, {w2}) gives b = {}, expected {b}",
                df.b
            )));
        }
        phi = &phi * &Poly::new(vec![df.u * &scale, Rational::one()]);
    }
    let bh = num_traits::Pow::pow(b, half);
    let four_ab = int(4) * a * b;
    for (i, (v1, v2)) in seq.seeds.iter().enumerate() {
        let (v1, v2) = (big(v1), big(v2));
        if &bh * &v1 * &v1 + a * &v2 * &v2 != four_ab {
            return Err(Error::ConstraintViolated(format!(
                "seed {i} is off b^{half} v1^2 + a v2^2 = 4ab"
            )));
        }
    }
    let inner_f = dickson(m, b)?.scale(&scale);
    let inner_g = dickson(10, a)?.scale(&-num_traits::Pow::pow(a, -5i32));
    let f = phi.compose(&inner_f);
    require_simple(&f)?;
    let g = phi.compose(&inner_g);
    let x = BiPoly::in_second(&dickson(5, b)?.scale(&(Rational::one() / (b * b))));
    let y = match variant {
        BridgeVariant::FourTen => &BiPoly::first() * &BiPoly::second(),
        BridgeVariant::SixTen => {
            &BiPoly::first() * &BiPoly::in_second(&Poly::new(vec![-b.clone(), Rational::zero(), Rational::one()]))
        }
    };
    Ok(EquationFamily {
        id: "custom".into(),
        kind: FamilyKind::Fourth,
        layout: Layout::Standard,
        f,
        g,
        phi,
        inner_f,
        inner_g,
        param: Param::Pell { seq, x, y },
        bridge: Some(Bridge { variant, a: a.clone(), b: b.clone() }),
        provenance: format!("fourth kind, degrees ({m}, 10)"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    PolynomialIdentity,
    FiniteHorizon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

impl Check {
    pub fn new(label: impl Into<String>, lhs: impl ToString, rhs: impl ToString, passed: bool) -> Check {
        Check { label: label.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), passed }
    }

    pub fn eq_poly(label: &str, lhs: &Poly, rhs: &Poly) -> Check {
        Check::new(label, lhs, rhs, lhs == rhs)
    }

    pub fn eq_rat(label: String, lhs: &Rational, rhs: &Rational) -> Check {
        Check::new(label, format_rational(lhs), format_rational(rhs), lhs == rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub family: String,
    pub kind: FamilyKind,
    pub provenance: String,
    pub check: CheckKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<usize>,
    pub verified: bool,
    pub transcript: Vec<Check>,
}

/// Exact verification. Polynomial parametrizations are checked as identities
/// in `X`; Pell-driven ones element by element up to `horizon`.
pub fn verify_family(fam: &EquationFamily, horizon: usize) -> Certificate {
    let mut transcript = Vec::new();
    let simple = fam.f.is_simple_rational_rooted().unwrap_or(false);
    transcript.push(Check::new("f has only simple rational roots", &fam.f, simple, simple));
    transcript.push(Check::eq_poly("f = phi(inner_f)", &fam.f, &fam.phi.compose(&fam.inner_f)));
    transcript.push(Check::eq_poly("g = phi(inner_g)", &fam.g, &fam.phi.compose(&fam.inner_g)));
    let (check, horizon) = match &fam.param {
        Param::Poly { x, y } => {
            transcript.push(Check::eq_poly("f(x(X)) = g(y(X))", &fam.f.compose(x), &fam.g.compose(y)));
            (CheckKind::PolynomialIdentity, None)
        }
        Param::Pell { seq, x, y } => {
            for (i, (p, q)) in seq.iter().take(horizon).enumerate() {
                transcript.push(Check::new(
                    format!("element {i} on {:?} curve D = {}, N = {}", seq.orientation, seq.eq.d(), seq.eq.n()),
                    format!("({p}, {q})"),
                    seq.eq.n(),
                    seq.on_curve(&(p.clone(), q.clone())),
                ));
                let (pr, qr) = (big(&p), big(&q));
                let (xv, yv) = (x.evaluate(&pr, &qr), y.evaluate(&pr, &qr));
                if let Some(br) = &fam.bridge {
                    let ok = match br.variant {
                        BridgeVariant::FourTen => verify_bridge_4_10(&br.a, &br.b, &pr, &qr),
                        BridgeVariant::SixTen => verify_bridge_6_10(&br.a, &br.b, &pr, &qr),
                    };
                    let ok = ok.unwrap_or(false);
                    transcript.push(Check::new(format!("bridge identity at element {i}"), ok, true, ok));
                }
                transcript.push(Check::eq_rat(
                    format!("f(x_{i}) = g(y_{i}) at (x, y) = ({}, {})", format_rational(&xv), format_rational(&yv)),
                    &fam.f.evaluate(&xv),
                    &fam.g.evaluate(&yv),
                ));
            }
            (CheckKind::FiniteHorizon, Some(horizon))
        }
    };
    let verified = transcript.iter().all(|c| c.passed);
    Certificate {
        family: fam.id.clone(),
        kind: fam.kind,
        provenance: fam.provenance.clone(),
        check,
        horizon,
        verified,
        transcript,
    }
}

//! Generalized Pell equations `x^2 - D y^2 = N`: bounded seed search and the
//! second-order recurrence `s_i = t s_(i-1) - s_(i-2)`.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SEED_SEARCH_BOUND: u64 = 100_000_000;
pub const UNIT_SEARCH_BOUND: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, try_from = "RawPell")]
pub struct PellEquation {
    #[serde(rename = "D")]
    d: i64,
    #[serde(rename = "N")]
    n: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPell {
    #[serde(rename = "D")]
    d: i64,
    #[serde(rename = "N")]
    n: i64,
}

impl TryFrom<RawPell> for PellEquation {
    type Error = Error;

    fn try_from(r: RawPell) -> Result<PellEquation> {
        PellEquation::new(r.d, r.n)
    }
}

impl PellEquation {
    pub fn new(d: i64, n: i64) -> Result<PellEquation> {
        if d <= 0 || d.sqrt() * d.sqrt() == d {
            return Err(Error::InvalidParameters(format!("D = {d} must be a positive nonsquare")));
        }
        if n == 0 {
            return Err(Error::InvalidParameters("N must be nonzero".into()));
        }
        Ok(PellEquation { d, n })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// `x^2 - D y^2 == N`
    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        x * x - BigInt::from(self.d) * y * y == BigInt::from(self.n)
    }
}

/// How a stored pair `(p, q)` sits on the curve. `Swapped` pairs satisfy
/// `q^2 - D p^2 = N`, for curves written as `D (p^2 - c) = q^2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    #[default]
    Standard,
    Swapped,
}

pub type Pair = (BigInt, BigInt);

/// Deserialization goes through [`SolutionSeq::new`], so seeds off the curve
/// are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, try_from = "RawSeq")]
pub struct SolutionSeq {
    pub eq: PellEquation,
    #[serde(with = "pair_serde")]
    pub seeds: [Pair; 2],
    pub t: u64,
    #[serde(default)]
    pub orientation: Orientation,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeq {
    eq: PellEquation,
    #[serde(with = "pair_serde")]
    seeds: [Pair; 2],
    t: u64,
    #[serde(default)]
    orientation: Orientation,
}

impl TryFrom<RawSeq> for SolutionSeq {
    type Error = Error;

    fn try_from(r: RawSeq) -> Result<SolutionSeq> {
        let [s0, s1] = r.seeds;
        SolutionSeq::new(r.eq, s0, s1, r.t, r.orientation)
    }
}

mod pair_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Pair; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<[String; 2]> = v.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect();
        raw.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<[Pair; 2], D::Error> {
        let raw = <[[String; 2]; 2]>::deserialize(d)?;
        let parse = |s: &str| s.trim().parse::<BigInt>().map_err(serde::de::Error::custom);
        Ok([
            (parse(&raw[0][0])?, parse(&raw[0][1])?),
            (parse(&raw[1][0])?, parse(&raw[1][1])?),
        ])
    }
}

impl SolutionSeq {
    /// Validates both seeds and fixes the direction: the seeds are swapped
    /// when one step of the recurrence would not grow the `D`-weighted
    /// coordinate.
    pub fn new(eq: PellEquation, s0: Pair, s1: Pair, t: u64, orientation: Orientation) -> Result<SolutionSeq> {
        if t == 0 {
            return Err(Error::InvalidParameters("multiplier must be positive".into()));
        }
        let mut seq = SolutionSeq { eq, seeds: [s0, s1], t, orientation };
        for i in 0..2 {
            if !seq.on_curve(&seq.seeds[i]) {
                return Err(Error::OffCurve { index: i });
            }
        }
        let next = seq.step(&seq.seeds[0], &seq.seeds[1]);
        if seq.weighted(&next).abs() <= seq.weighted(&seq.seeds[1]).abs() {
            let back = seq.step(&seq.seeds[1], &seq.seeds[0]);
            if seq.weighted(&back).abs() > seq.weighted(&seq.seeds[0]).abs() {
                seq.seeds.swap(0, 1);
            }
        }
        Ok(seq)
    }

    /// The orbit of `seed` under the fundamental unit of `x^2 - D y^2 = 1`.
    pub fn from_unit(eq: PellEquation, seed: Pair) -> Result<SolutionSeq> {
        if !eq.contains(&seed.0, &seed.1) {
            return Err(Error::OffCurve { index: 0 });
        }
        let (x0, y0) = fundamental_unit(eq.d)?;
        let d = BigInt::from(eq.d);
        let next = (&x0 * &seed.0 + &d * &y0 * &seed.1, &x0 * &seed.1 + &y0 * &seed.0);
        let t = u64::try_from(&x0 * 2u32).map_err(|_| Error::FundamentalSearchOverflow(eq.d as u64))?;
        SolutionSeq::new(eq, seed, next, t, Orientation::Standard)
    }

    pub fn on_curve(&self, p: &Pair) -> bool {
        match self.orientation {
            Orientation::Standard => self.eq.contains(&p.0, &p.1),
            Orientation::Swapped => self.eq.contains(&p.1, &p.0),
        }
    }

    /// The coordinate multiplied by `D` in the curve equation.
    fn weighted<'a>(&self, p: &'a Pair) -> &'a BigInt {
        match self.orientation {
            Orientation::Standard => &p.1,
            Orientation::Swapped => &p.0,
        }
    }

    fn step(&self, prev: &Pair, cur: &Pair) -> Pair {
        let t = BigInt::from(self.t);
        (&t * &cur.0 - &prev.0, &t * &cur.1 - &prev.1)
    }

    /// The raw recurrence, unchecked.
    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        let mut state = Some((self.seeds[0].clone(), self.seeds[1].clone()));
        std::iter::from_fn(move || {
            let (a, b) = state.take()?;
            let c = self.step(&a, &b);
            state = Some((b, c));
            Some(a)
        })
    }

    pub fn negated(&self) -> SolutionSeq {
        let neg = |p: &Pair| (-p.0.clone(), -p.1.clone());
        SolutionSeq {
            seeds: [neg(&self.seeds[0]), neg(&self.seeds[1])],
            ..self.clone()
        }
    }
}

/// All `(x, y)` with `|y| <= bound` and `x^2 - D y^2 = N`, ordered by `|y|`,
/// then `y`, then `x`.
pub fn find_seeds(eq: &PellEquation, bound: u64) -> Result<Vec<Pair>> {
    if bound > SEED_SEARCH_BOUND {
        return Err(Error::SearchBoundExceeded(bound));
    }
    let (d, n) = (eq.d as i128, eq.n as i128);
    let mut out = Vec::new();
    for y in 0..=bound as i128 {
        let rhs = n + d * y * y;
        if rhs < 0 {
            continue;
        }
        let x = rhs.sqrt();
        if x * x != rhs {
            continue;
        }
        for sy in if y == 0 { vec![0] } else { vec![-y, y] } {
            for sx in if x == 0 { vec![0] } else { vec![-x, x] } {
                out.push((BigInt::from(sx), BigInt::from(sy)));
            }
        }
    }
    Ok(out)
}

/// Least `(x0, y0)` with `y0 > 0` and `x0^2 - D y0^2 = 1`, by scanning `y0`.
pub fn fundamental_unit(d: i64) -> Result<Pair> {
    PellEquation::new(d, 1)?;
    if d as u64 > UNIT_SEARCH_BOUND {
        return Err(Error::FundamentalSearchOverflow(d as u64));
    }
    let d = d as u128;
    for y in 1..=UNIT_SEARCH_BOUND as u128 {
        let rhs = 1 + d * y * y;
        let x = rhs.sqrt();
        if x * x == rhs {
            return Ok((BigInt::from(x), BigInt::from(y)));
        }
    }
    Err(Error::FundamentalSearchOverflow(d as u64))
}

/// `2 x0` for the fundamental unit `x0 + y0 sqrt(D)`.
pub fn recurrence_multiplier(d: i64) -> Result<u64> {
    let (x0, _) = fundamental_unit(d)?;
    u64::try_from(x0 * 2u32).map_err(|_| Error::FundamentalSearchOverflow(d as u64))
}

/// The first `count` pairs of the recurrence, each checked on the curve.
pub fn generate(seq: &SolutionSeq, count: usize) -> Result<Vec<Pair>> {
    if count == 0 {
        return Err(Error::InvalidParameters("count must be positive".into()));
    }
    let out: Vec<Pair> = seq.iter().take(count).collect();
    if let Some(index) = out.iter().position(|p| !seq.on_curve(p)) {
        return Err(Error::OffCurve { index });
    }
    Ok(out)
}

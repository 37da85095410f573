//! Representations of integers by `x^2 + y^2` and `x^2 + xy + y^2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{gcd_u64, isqrt_exact_u64};

pub const FACTORIZATION_BOUND: u64 = 1_000_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuadForm {
    /// `x^2 + y^2`
    #[serde(rename = "sq")]
    SumSquares,
    /// `x^2 + xy + y^2`
    #[serde(rename = "hex")]
    Hex,
}

impl QuadForm {
    pub fn eval(self, x: u64, y: u64) -> u64 {
        match self {
            QuadForm::SumSquares => x * x + y * y,
            QuadForm::Hex => x * x + x * y + y * y,
        }
    }

    fn prime_class(self) -> (u64, u64) {
        match self {
            QuadForm::SumSquares => (4, 1),
            QuadForm::Hex => (6, 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepPair {
    pub x: u64,
    pub y: u64,
    pub form: QuadForm,
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::InvalidParameters("cannot factor 0".into()));
    }
    if n > FACTORIZATION_BOUND {
        return Err(Error::FactorizationOverflow(n));
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

/// Number of prime factors if `m` is a squarefree product of primes
/// `= 1 (mod q)` for the form's modulus `q`; the error names the offender.
pub fn admissible_rank(m: u64, form: QuadForm) -> Result<u32> {
    let (modulus, class) = form.prime_class();
    if m < 2 {
        return Err(Error::BadModulusClass(format!("{m} has no prime factors")));
    }
    let fac = factorize(m)?;
    for &(p, e) in &fac {
        if e > 1 {
            return Err(Error::BadModulusClass(format!("{m} is not squarefree ({p}^{e})")));
        }
        if p % modulus != class {
            return Err(Error::BadModulusClass(format!(
                "prime factor {p} of {m} is not {class} mod {modulus}"
            )));
        }
    }
    Ok(fac.len() as u32)
}

pub fn is_admissible(m: u64, form: QuadForm) -> bool {
    admissible_rank(m, form).is_ok()
}

/// All coprime `x > y > 0` with `x^2 + y^2 = m`, descending `x`.
pub fn reps_sum_two_squares(m: u64) -> Result<Vec<RepPair>> {
    admissible_rank(m, QuadForm::SumSquares)?;
    Ok(primitive_reps(m, QuadForm::SumSquares))
}

/// All coprime `x > y > 0` with `x^2 + xy + y^2 = m`, descending `x`.
pub fn reps_hex_form(m: u64) -> Result<Vec<RepPair>> {
    admissible_rank(m, QuadForm::Hex)?;
    Ok(primitive_reps(m, QuadForm::Hex))
}

fn primitive_reps(m: u64, form: QuadForm) -> Vec<RepPair> {
    scan(m, form)
        .into_iter()
        .filter(|r| r.x > r.y && r.y > 0 && gcd_u64(r.x, r.y) == 1)
        .collect()
}

/// Every `x >= y >= 0` with `form(x, y) = m`, without coprimality or
/// modulus restrictions. Ordered by descending `x`.
pub fn reps_unrestricted(m: u64, form: QuadForm) -> Result<Vec<RepPair>> {
    if m > FACTORIZATION_BOUND {
        return Err(Error::FactorizationOverflow(m));
    }
    Ok(scan(m, form))
}

/// Scan `y = 0, 1, ...` with an exact square test for the partner `x >= y`.
fn scan(m: u64, form: QuadForm) -> Vec<RepPair> {
    let mut out = Vec::new();
    let mut y = 0u64;
    loop {
        // x >= y forces form(y, y) <= m.
        if form.eval(y, y) > m {
            break;
        }
        let x = match form {
            QuadForm::SumSquares => isqrt_exact_u64(m - y * y),
            // x = (-y + sqrt(4m - 3y^2)) / 2
            QuadForm::Hex => isqrt_exact_u64(4 * m - 3 * y * y)
                .filter(|s| s >= &y && (s - y) % 2 == 0)
                .map(|s| (s - y) / 2),
        };
        if let Some(x) = x {
            if x >= y {
                out.push(RepPair { x, y, form });
            }
        }
        y += 1;
    }
    out.sort_by(|a, b| b.x.cmp(&a.x).then(b.y.cmp(&a.y)));
    out
}

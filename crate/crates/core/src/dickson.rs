//! Dickson polynomials `D_mu(x, delta)` and the identities built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{big, int, Rational};

/// Degree and parameter of a Dickson polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicksonParams {
    mu: u32,
    delta: Rational,
}

impl DicksonParams {
    pub fn new(mu: u32, delta: Rational) -> Result<DicksonParams> {
        if mu == 0 {
            return Err(Error::InvalidParameters("Dickson degree must be positive".into()));
        }
        if delta.is_zero() {
            return Err(Error::ZeroDelta);
        }
        Ok(DicksonParams { mu, delta })
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn poly(&self) -> Poly {
        dickson_unchecked(self.mu, &self.delta)
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn dickson_unchecked(mu: u32, delta: &Rational) -> Poly {
    let mut coeffs = vec![Rational::zero(); mu as usize + 1];
    let minus_delta = -delta.clone();
    let mut pw = Rational::one();
    for i in 0..=mu / 2 {
        // mu / (mu - i) * C(mu - i, i) * (-delta)^i
        let c = Rational::new(BigInt::from(mu), BigInt::from(mu - i)) * big(&binomial(mu - i, i));
        coeffs[(mu - 2 * i) as usize] = c * &pw;
        pw *= &minus_delta;
    }
    Poly::new(coeffs)
}

/// `D_mu(x, delta) = sum_i mu/(mu-i) C(mu-i, i) (-delta)^i x^(mu-2i)`.
pub fn dickson(mu: u32, delta: &Rational) -> Result<Poly> {
    Ok(DicksonParams::new(mu, delta.clone())?.poly())
}

/// Checks `D_mu(y + delta/y, delta) = y^mu + (delta/y)^mu` at the points
/// `y = 1, 2, ..., samples`.
pub fn verify_laurent_identity(mu: u32, delta: &Rational, samples: u32) -> Result<bool> {
    let d = dickson(mu, delta)?;
    Ok((1..=samples as i64).all(|k| {
        let y = int(k);
        let t = delta / &y;
        d.evaluate(&(&y + &t)) == pow(&y, mu) + pow(&t, mu)
    }))
}

fn pow(q: &Rational, e: u32) -> Rational {
    num_traits::pow(q.clone(), e as usize)
}

/// `D_m(D_n(x, b), b^n) == D_n(D_m(x, b), b^m)` as polynomials.
pub fn verify_commutation(m: u32, n: u32, b: &Rational) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters("degrees must be positive".into()));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    let dm_b = dickson(m, b)?;
    let dn_b = dickson(n, b)?;
    let left = dickson(m, &pow(b, n))?.compose(&dn_b);
    let right = dickson(n, &pow(b, m))?.compose(&dm_b);
    Ok(left == right)
}

/// `b^-2 D_5(v2, b)`, the common x-coordinate of both bridge identities.
pub fn bridge_x(b: &Rational, v2: &Rational) -> Rational {
    let d5 = dickson_unchecked(5, b).evaluate(v2);
    d5 / (b * b)
}

/// `b^-2 D_4(b^-2 D_5(v2, b), b) = -a^-5 D_10(v1 v2, a)` on the conic
/// `b^2 v1^2 + a v2^2 = 4ab`.
pub fn verify_bridge_4_10(a: &Rational, b: &Rational, v1: &Rational, v2: &Rational) -> Result<bool> {
    check_nonzero(a, b)?;
    if b * b * v1 * v1 + a * v2 * v2 != int(4) * a * b {
        return Err(Error::ConstraintViolated(
            "b^2 v1^2 + a v2^2 != 4ab".into(),
        ));
    }
    let lhs = dickson_unchecked(4, b).evaluate(&bridge_x(b, v2)) / (b * b);
    let rhs = -dickson_unchecked(10, a).evaluate(&(v1 * v2)) / pow(a, 5);
    Ok(lhs == rhs)
}

/// `b^-3 D_6(b^-2 D_5(v2, b), b) = -a^-5 D_10(v1 (v2^2 - b), a)` on the conic
/// `b^3 v1^2 + a v2^2 = 4ab`.
pub fn verify_bridge_6_10(a: &Rational, b: &Rational, v1: &Rational, v2: &Rational) -> Result<bool> {
    check_nonzero(a, b)?;
    if pow(b, 3) * v1 * v1 + a * v2 * v2 != int(4) * a * b {
        return Err(Error::ConstraintViolated(
            "b^3 v1^2 + a v2^2 != 4ab".into(),
        ));
    }
    let lhs = dickson_unchecked(6, b).evaluate(&bridge_x(b, v2)) / pow(b, 3);
    let y = v1 * (v2 * v2 - b);
    let rhs = -dickson_unchecked(10, a).evaluate(&y) / pow(a, 5);
    Ok(lhs == rhs)
}

fn check_nonzero(a: &Rational, b: &Rational) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroDelta);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn small_dickson_polynomials() {
        let b = frac(7, 3);
        assert_eq!(dickson(1, &b).unwrap(), Poly::x());
        assert_eq!(
            dickson(2, &b).unwrap(),
            Poly::new(vec![-int(2) * &b, int(0), int(1)])
        );
        let b2 = &b * &b;
        let b3 = &b2 * &b;
        assert_eq!(
            dickson(6, &b).unwrap(),
            Poly::new(vec![
                -int(2) * b3,
                int(0),
                int(9) * b2,
                int(0),
                -int(6) * &b,
                int(0),
                int(1)
            ])
        );
        assert_eq!(dickson(3, &int(0)), Err(Error::ZeroDelta));
        assert!(dickson(0, &int(1)).is_err());
    }

    #[test]
    fn laurent_identity_examples() {
        assert!(verify_laurent_identity(3, &int(2401), 7).unwrap());
        assert!(verify_laurent_identity(1, &int(1), 3).unwrap());
        assert!(verify_laurent_identity(4, &int(125), 9).unwrap());
    }

    #[test]
    fn commutation_examples() {
        assert!(verify_commutation(3, 4, &int(7)).unwrap());
        assert!(verify_commutation(1, 9, &frac(-2, 5)).unwrap());
        assert!(verify_commutation(6, 5, &int(7)).unwrap());
        assert_eq!(verify_commutation(4, 6, &int(7)), Err(Error::NotCoprime(4, 6)));
        assert_eq!(verify_commutation(3, 4, &int(0)), Err(Error::ZeroDelta));
    }

    #[test]
    fn bridge_4_10_on_pell_data() {
        let a = int(-10 * 65 * 65);
        let b = int(65);
        assert!(verify_bridge_4_10(&a, &b, &int(-80), &int(30)).unwrap());
        assert!(verify_bridge_4_10(&a, &b, &int(280), &int(90)).unwrap());
        // 38 * (280, 90) - (-80, 30)
        assert!(verify_bridge_4_10(&a, &b, &int(10720), &int(3390)).unwrap());
        assert!(matches!(
            verify_bridge_4_10(&a, &b, &int(1), &int(1)),
            Err(Error::ConstraintViolated(_))
        ));
    }

    #[test]
    fn bridge_6_10_on_pell_data() {
        let a = int(-14 * 91 * 91 * 91);
        let b = int(91);
        assert!(verify_bridge_6_10(&a, &b, &int(-140), &int(42)).unwrap());
        assert!(verify_bridge_6_10(&a, &b, &int(252), &int(70)).unwrap());
        // 30 * (252, 70) - (-140, 42)
        assert!(verify_bridge_6_10(&a, &b, &int(7700), &int(2058)).unwrap());
        assert!(matches!(
            verify_bridge_6_10(&a, &b, &int(0), &int(0)),
            Err(Error::ConstraintViolated(_))
        ));
    }

    #[test]
    fn parity_of_coefficients() {
        for mu in 1..=12u32 {
            let d = dickson(mu, &frac(-3, 2)).unwrap();
            assert_eq!(d.degree(), Some(mu as usize));
            assert_eq!(d.lead(), Some(&int(1)));
            for (i, c) in d.coeffs().iter().enumerate() {
                if (i as u32 + mu) % 2 == 1 {
                    assert!(c.is_zero(), "mu={mu} i={i}");
                }
            }
        }
    }
}

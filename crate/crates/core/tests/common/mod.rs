//! Independent oracles shared by the integration tests. Nothing here calls
//! the library routine it is used to check.

#![allow(dead_code)]

use dickson_pte::pte::{construct_pte3, construct_pte4};
use dickson_pte::rational::{frac, int};
use dickson_pte::{Poly, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// `D_0 = 2`, `D_1 = x`, `D_(k+1) = x D_k - b D_(k-1)`.
pub fn dickson_rec(n: u32, b: &Rational) -> Poly {
    let mut prev = Poly::constant(int(2));
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::x();
    for _ in 1..n {
        let next = &(&Poly::x() * &cur) - &prev.scale(b);
        prev = cur;
        cur = next;
    }
    cur
}

pub fn random_rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    frac(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_nonzero(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    loop {
        let q = random_rational(rng, num, den);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn is_square_int(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

pub fn is_square_rational(q: &Rational) -> bool {
    // reduced p/q is a square iff p and q are
    is_square_int(q.numer()) && is_square_int(q.denom())
}

/// Counts of coprime `x > y > 0` with `x^2 + y^2 = m` (`hex = false`) or
/// `x^2 + xy + y^2 = m` (`hex = true`) for every `m <= limit`.
pub fn brute_rep_counts(limit: u64, hex: bool) -> Vec<u32> {
    let mut counts = vec![0u32; limit as usize + 1];
    let mut x = 1u64;
    loop {
        let smallest = if hex { x * x + x + 1 } else { x * x + 1 };
        if smallest > limit {
            break;
        }
        for y in 1..x {
            let v = if hex { x * x + x * y + y * y } else { x * x + y * y };
            if v > limit {
                break;
            }
            if x.gcd(&y) == 1 {
                counts[v as usize] += 1;
            }
        }
        x += 1;
    }
    counts
}

/// Squarefree `m >= 2` whose prime factors are all `1 mod modulus`, with the
/// number of prime factors, via a smallest-prime-factor sieve.
pub fn admissible_sieve(limit: u64, modulus: u64) -> Vec<(u64, u32)> {
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    let mut out = Vec::new();
    'outer: for m in 2..=n {
        let (mut r, mut rho, mut last) = (m, 0u32, 0u32);
        while r > 1 {
            let p = spf[r];
            if p == last || p as u64 % modulus != 1 {
                continue 'outer;
            }
            last = p;
            rho += 1;
            r /= p as usize;
        }
        out.push((m as u64, rho));
    }
    out
}

/// `sum_i r_i^j` for `j = 1..=jmax`, directly.
pub fn power_sums_direct(roots: &[Rational], jmax: usize) -> Vec<Rational> {
    (1..=jmax)
        .map(|j| roots.iter().map(|r| num_traits::pow(r.clone(), j)).sum())
        .collect()
}

/// `lead^(2n-2) prod_(i<j) (r_i - r_j)^2`.
pub fn discriminant_from_roots(lead: &Rational, roots: &[Rational]) -> Rational {
    let n = roots.len();
    let mut d = num_traits::pow(lead.clone(), 2 * n - 2);
    for i in 0..n {
        for j in i + 1..n {
            let diff = &roots[i] - &roots[j];
            d *= &diff * &diff;
        }
    }
    d
}

pub fn poly_from_roots(lead: &Rational, roots: &[Rational]) -> Poly {
    roots.iter().fold(Poly::constant(lead.clone()), |acc, r| {
        &acc * &Poly::new(vec![-r.clone(), Rational::one()])
    })
}

/// A valid decomposition instance: `f = lead prod (F - p_i)` with `F` monic
/// of degree `deg_f`, zero constant term, and `f` simple-rational-rooted.
pub struct DecompInstance {
    pub f: Poly,
    pub inner: Poly,
    pub lead: Rational,
    pub p_list: Vec<Rational>,
}

const HEX_M: [u64; 6] = [7, 13, 19, 91, 133, 1729];
const SQ_M: [u64; 5] = [65, 85, 145, 221, 1105];

/// `x -> c x` applied to a monic zero-constant `F` of degree `d`, keeping it
/// monic: `c^d F(x / c)`.
fn rescale(p: &Poly, c: &Rational) -> Poly {
    let d = p.degree().unwrap_or(0);
    Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| a * num_traits::pow(c.clone(), d - i))
            .collect(),
    )
}

pub fn random_decomposition(rng: &mut impl Rng) -> DecompInstance {
    loop {
        let deg_f = rng.gen_range(1..=4usize);
        let k = rng.gen_range(1..=3usize);
        let (inner, mut ps): (Poly, Vec<Rational>) = match deg_f {
            1 => (Poly::x(), (0..k).map(|_| random_rational(rng, 30, 4)).collect()),
            2 => {
                let b = random_rational(rng, 20, 3);
                let inner = Poly::new(vec![Rational::zero(), b.clone(), Rational::one()]);
                let ps = (0..k)
                    .map(|_| {
                        let r = random_rational(rng, 20, 3);
                        &r * (&r + &b)
                    })
                    .collect();
                (inner, ps)
            }
            3 => {
                let set = construct_pte3(HEX_M[rng.gen_range(0..HEX_M.len())]).expect("admissible");
                let take: Vec<Rational> = set.offsets.iter().take(k).map(|o| -o.clone()).collect();
                (set.shared.clone(), take)
            }
            _ => {
                let set = construct_pte4(SQ_M[rng.gen_range(0..SQ_M.len())]).expect("admissible");
                let take: Vec<Rational> = set.offsets.iter().take(k).map(|o| -o.clone()).collect();
                (set.shared.clone(), take)
            }
        };
        let c = random_nonzero(rng, 5, 3);
        let inner = rescale(&inner, &c);
        let cd = num_traits::pow(c.clone(), deg_f);
        for p in ps.iter_mut() {
            *p = &*p * &cd;
        }
        ps.sort();
        ps.dedup();
        let lead = random_nonzero(rng, 7, 2);
        let f = ps.iter().fold(Poly::constant(lead.clone()), |acc, p| {
            &acc * &(&inner - &Poly::constant(p.clone()))
        });
        if f.is_simple_rational_rooted().unwrap_or(false) {
            return DecompInstance { f, inner, lead, p_list: ps };
        }
    }
}

/// `x^2 - D y^2` for the pair, as an exact integer.
pub fn pell_form(x: &BigInt, y: &BigInt, d: i64) -> BigInt {
    x * x - BigInt::from(d) * y * y
}

/// Least `x0` with `x0^2 - D y0^2 = 1`, `y0 >= 1`, by direct search.
pub fn fundamental_x(d: i64) -> BigInt {
    let mut y = BigInt::one();
    loop {
        let v = BigInt::one() + BigInt::from(d) * &y * &y;
        if is_square_int(&v) {
            return v.sqrt();
        }
        y += 1;
    }
}

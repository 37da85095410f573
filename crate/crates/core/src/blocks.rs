//! Equal products `a_1 ... a_k = b_1 ... b_l` with distinct factors taken
//! from two disjoint blocks of consecutive positive integers.
//!
//! Each instance is reported with tight blocks: `blockA` is the hull of
//! `chosenA` and `blockB` the hull of `chosenB`. Every larger pair of blocks
//! containing the same choices is the same instance.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_BLOCK: u32 = 12;
pub const MAX_START: u64 = 10_000;
/// Cap on enumerated subsets across both sides.
pub const MAX_SUBSETS: u64 = 1 << 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DivClass {
    #[serde(rename = "k-div-l")]
    KDivL,
    #[serde(rename = "k-div-2l")]
    KDiv2L,
    #[serde(rename = "k-ndiv-2l")]
    KNotDiv2L,
}

impl DivClass {
    pub fn of(k: usize, l: usize) -> DivClass {
        if l % k == 0 {
            DivClass::KDivL
        } else if (2 * l) % k == 0 {
            DivClass::KDiv2L
        } else {
            DivClass::KNotDiv2L
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DivClass::KDivL => "k-div-l",
            DivClass::KDiv2L => "k-div-2l",
            DivClass::KNotDiv2L => "k-ndiv-2l",
        }
    }

    pub fn parse(s: &str) -> Result<DivClass> {
        [DivClass::KDivL, DivClass::KDiv2L, DivClass::KNotDiv2L]
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::Parse(format!("unknown class {s:?}")))
    }
}

/// Deserialization rejects instances that fail [`BlockProductInstance::is_valid`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", try_from = "RawInstance")]
pub struct BlockProductInstance {
    pub block_a: [u64; 2],
    pub block_b: [u64; 2],
    pub chosen_a: Vec<u64>,
    pub chosen_b: Vec<u64>,
    #[serde(with = "biguint_str")]
    pub product: BigUint,
    #[serde(rename = "divisibility_class")]
    pub class: DivClass,
    /// `k` does not divide `2l`.
    pub sporadic: bool,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RawInstance {
    block_a: [u64; 2],
    block_b: [u64; 2],
    chosen_a: Vec<u64>,
    chosen_b: Vec<u64>,
    #[serde(with = "biguint_str")]
    product: BigUint,
    #[serde(rename = "divisibility_class")]
    class: DivClass,
    sporadic: bool,
}

impl TryFrom<RawInstance> for BlockProductInstance {
    type Error = Error;

    fn try_from(r: RawInstance) -> Result<BlockProductInstance> {
        let inst = BlockProductInstance {
            block_a: r.block_a,
            block_b: r.block_b,
            chosen_a: r.chosen_a,
            chosen_b: r.chosen_b,
            product: r.product,
            class: r.class,
            sporadic: r.sporadic,
        };
        if inst.is_valid() {
            Ok(inst)
        } else {
            Err(Error::InvalidParameters("block product instance fails its invariants".into()))
        }
    }
}

mod biguint_str {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigUint, D::Error> {
        String::deserialize(d)?.trim().parse().map_err(serde::de::Error::custom)
    }
}

impl BlockProductInstance {
    pub fn k(&self) -> usize {
        self.chosen_a.len()
    }

    pub fn l(&self) -> usize {
        self.chosen_b.len()
    }

    /// Recomputes both products and checks containment and disjointness.
    pub fn is_valid(&self) -> bool {
        let prod = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).product::<BigUint>();
        let inside = |v: &[u64], b: [u64; 2]| v.iter().all(|&x| b[0] <= x && x <= b[1]);
        let sorted = |v: &[u64]| v.windows(2).all(|w| w[0] < w[1]);
        let (a, b) = (self.block_a, self.block_b);
        !self.chosen_a.is_empty()
            && self.k() < self.l()
            && sorted(&self.chosen_a)
            && sorted(&self.chosen_b)
            && inside(&self.chosen_a, a)
            && inside(&self.chosen_b, b)
            && (a[1] < b[0] || b[1] < a[0])
            && prod(&self.chosen_a) == self.product
            && prod(&self.chosen_b) == self.product
            && self.class == DivClass::of(self.k(), self.l())
            && self.sporadic == (self.class == DivClass::KNotDiv2L)
    }
}

pub fn classify_instance(inst: &BlockProductInstance) -> DivClass {
    DivClass::of(inst.k(), inst.l())
}

/// Subsets with minimum `lo`, hull size at most `n` and between `min_len`
/// and `max_len` elements.
fn subsets_from(lo: u64, n: u32, min_len: usize, max_len: usize, mut visit: impl FnMut(&[u64])) {
    let mut stack = vec![lo];
    fn rec(stack: &mut Vec<u64>, hi: u64, min_len: usize, max_len: usize, visit: &mut dyn FnMut(&[u64])) {
        if stack.len() >= min_len {
            visit(stack);
        }
        if stack.len() == max_len {
            return;
        }
        let last = *stack.last().expect("nonempty");
        for next in last + 1..=hi {
            stack.push(next);
            rec(stack, hi, min_len, max_len, visit);
            stack.pop();
        }
    }
    rec(&mut stack, lo + n as u64 - 1, min_len, max_len, &mut visit);
}

fn count_subsets(n: u32, max_len: usize, starts: u64) -> u64 {
    // subsets of the n - 1 slots after the minimum with < max_len elements
    let mut c = 1u64;
    let mut total = 0u64;
    for j in 0..max_len.min(n as usize) {
        total += c;
        c = c * (n as u64 - 1 - j as u64) / (j as u64 + 1);
    }
    total.saturating_mul(starts)
}

/// All instances with hull sizes at most `n`, hull starts in
/// `[1, max_start]`, `1 <= k <= k_max`, `k < l <= l_max`. Sorted by
/// `(product, aLo, bLo, chosenA, chosenB)`.
pub fn search(n: u32, max_start: u64, k_max: usize, l_max: usize) -> Result<Vec<BlockProductInstance>> {
    if n == 0 || n > MAX_BLOCK {
        return Err(Error::ResourceBoundExceeded(format!("block size {n} outside 1..={MAX_BLOCK}")));
    }
    if max_start == 0 || max_start > MAX_START {
        return Err(Error::ResourceBoundExceeded(format!("max start {max_start} outside 1..={MAX_START}")));
    }
    if k_max == 0 || l_max > n as usize {
        return Err(Error::ResourceBoundExceeded(format!(
            "need 1 <= kmax and lmax <= N, got kmax = {k_max}, lmax = {l_max}, N = {n}"
        )));
    }
    if k_max >= l_max {
        return Ok(Vec::new());
    }
    let work = count_subsets(n, k_max, max_start) + count_subsets(n, l_max, max_start);
    if work > MAX_SUBSETS {
        return Err(Error::ResourceBoundExceeded(format!(
            "{work} subsets to enumerate exceeds {MAX_SUBSETS}"
        )));
    }

    let mut index: HashMap<BigUint, Vec<Vec<u64>>> = HashMap::new();
    for lo in 1..=max_start {
        subsets_from(lo, n, 1, k_max, |s| {
            index.entry(product(s)).or_default().push(s.to_vec());
        });
    }

    let mut out = Vec::new();
    for lo in 1..=max_start {
        subsets_from(lo, n, 2, l_max, |t| {
            let p = product(t);
            let Some(cands) = index.get(&p) else { return };
            let (t_lo, t_hi) = (t[0], *t.last().expect("nonempty"));
            for s in cands.iter().filter(|s| s.len() < t.len()) {
                let (s_lo, s_hi) = (s[0], *s.last().expect("nonempty"));
                if s_hi < t_lo || t_hi < s_lo {
                    let class = DivClass::of(s.len(), t.len());
                    out.push(BlockProductInstance {
                        block_a: [s_lo, s_hi],
                        block_b: [t_lo, t_hi],
                        chosen_a: s.clone(),
                        chosen_b: t.to_vec(),
                        product: p.clone(),
                        class,
                        sporadic: class == DivClass::KNotDiv2L,
                    });
                }
            }
        });
    }
    out.sort_by(|x, y| {
        (&x.product, x.block_a[0], x.block_b[0], &x.chosen_a, &x.chosen_b)
            .cmp(&(&y.product, y.block_a[0], y.block_b[0], &y.chosen_a, &y.chosen_b))
    });
    Ok(out)
}

fn product(s: &[u64]) -> BigUint {
    s.iter().fold(BigUint::one(), |acc, &x| acc * x)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub total: usize,
    pub by_class: BTreeMap<String, usize>,
    /// Keyed by `"k,l"`.
    pub by_degrees: BTreeMap<String, usize>,
    pub note: String,
}

pub fn census(instances: &[BlockProductInstance]) -> Census {
    let mut c = Census {
        total: instances.len(),
        note: "raw enumeration over (k, l, N); no finiteness claim is made".into(),
        ..Census::default()
    };
    for inst in instances {
        *c.by_class.entry(inst.class.label().to_string()).or_default() += 1;
        *c.by_degrees.entry(format!("{},{}", inst.k(), inst.l())).or_default() += 1;
    }
    c
}

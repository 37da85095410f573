//! Explicit factorizations D_N(x, b) + u = prod (x + w_i), degree
//! classification, and the kinds a given f can come from.

use dickson_pte::rational::int;
use dickson_pte::stdpairs::{classify_degrees, feasible_kinds, param_factorization, verify_factorization, StandardPair};
use dickson_pte::Poly;

fn main() -> dickson_pte::Result<()> {
    for (n, w1, w2) in [(3, 14, 77), (4, 4, 22), (6, 211, 25)] {
        let df = param_factorization(n, &int(w1), &int(w2), None)?;
        println!("N = {n}: b = {}, u = {}, w = {:?}, ok {}", df.b, df.u, df.w.iter().map(ToString::to_string).collect::<Vec<_>>(), verify_factorization(&df));
    }

    for (k, l) in [(2, 3), (3, 4), (4, 6), (6, 9)] {
        println!("deg f = {k}, deg g = {l}: {:?}", classify_degrees(k, l, true));
    }

    let pair = StandardPair::Third { mu: 3, nu: 4, alpha: int(7) };
    let (f, g) = pair.realize()?;
    println!("third kind (3, 4, 7): ({f}, {g})");

    let f = Poly::from_roots(&int(1), &[int(-77), int(-14), int(91)])?;
    for k in feasible_kinds(&f)? {
        println!("{:?}: admissible {}, inner degrees {:?} ({})", k.kind, k.admissible, k.inner_degrees, k.constraint);
    }
    Ok(())
}

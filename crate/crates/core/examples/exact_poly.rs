//! Exact polynomial arithmetic over the rationals.

use dickson_pte::poly::{power_sums, resultant};
use dickson_pte::rational::{frac, int};
use dickson_pte::{LinearSubst, Poly};

fn main() -> dickson_pte::Result<()> {
    let f = Poly::from_roots(&int(1), &[int(-286), int(-13), int(299)])?;
    println!("f = {f}");
    println!("roots: {:?}", f.rational_roots()?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("disc(f) = {}", f.discriminant()?);

    let x = Poly::from_ints(&[338, 0, -52, 0, 1]);
    println!("f(X^4 - 52X^2 + 338) = {}", f.compose(&x));

    // repeated roots come back with multiplicity
    let g = Poly::from_ints(&[0, 49, -14, 1]);
    println!("y(y - 7)^2 roots: {:?}", g.rational_roots()?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("squarefree parts: {:?}", g.squarefree_decomposition().iter().map(|(k, p)| format!("{k}: {p}")).collect::<Vec<_>>());

    let s = LinearSubst::new(frac(1, 2), int(3))?;
    println!("f(x/2 + 3) = {}", f.similar(&s));
    println!("res(f, f') = {}", resultant(&f, &f.derivative()));
    println!("power sums of (1, 2, 3): {:?}", power_sums(&[int(1), int(2), int(3)], 3).iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("json: {}", serde_json::to_string(&f).unwrap());
    Ok(())
}

//! Constructing PTE sets and splitting a polynomial as phi(F).

use dickson_pte::pte::{construct_pte3, construct_pte4, construct_pte6, decompose, verify_pte};
use dickson_pte::rational::int;
use dickson_pte::Poly;

fn main() -> dickson_pte::Result<()> {
    for set in [construct_pte4(1105)?, construct_pte6(1729)?, construct_pte3(1729)?] {
        println!("m = {}, shared {}, {} blocks, power sums agree: {}", set.m, set.shared, set.blocks.len(), verify_pte(&set));
        for (b, c) in set.blocks.iter().zip(&set.offsets) {
            println!("  {:?}  offset {c}", b.iter().map(ToString::to_string).collect::<Vec<_>>());
        }
    }

    let roots: Vec<_> = [1840i64, 249, 1591, 1961, 656, 1305].iter().flat_map(|&r| [int(r), int(-r)]).collect();
    let f = Poly::from_roots(&int(1), &roots)?;
    let d = decompose(&f, 3)?;
    println!("F = {}", d.inner);
    println!("phi = {}", d.phi);
    Ok(())
}

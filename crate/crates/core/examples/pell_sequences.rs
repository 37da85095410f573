//! Seeds, fundamental units and verified solution sequences.

use dickson_pte::pell::{find_seeds, fundamental_unit, generate, recurrence_multiplier, Orientation, PellEquation, SolutionSeq};
use num_bigint::BigInt;

fn main() -> dickson_pte::Result<()> {
    let eq = PellEquation::new(10, -2600)?;
    println!("unit for D = 10: {:?}", fundamental_unit(10)?);
    let seeds = find_seeds(&eq, 100)?;
    println!("seeds with |y| <= 100: {}", seeds.len());

    let p = |x: i64, y: i64| (BigInt::from(x), BigInt::from(y));
    let seq = SolutionSeq::new(eq, p(-80, 30), p(280, 90), recurrence_multiplier(10)?, Orientation::Standard)?;
    for (x, y) in generate(&seq, 6)? {
        println!("  ({x}, {y})");
    }

    // pairs (p, q) with q^2 - 26 p^2 = -28730
    let eq = PellEquation::new(26, -28730)?;
    let seq = SolutionSeq::new(eq, p(247, -1248), p(117, 572), 102, Orientation::Swapped)?;
    println!("{}", serde_json::to_string(&seq).unwrap());
    println!("{:?}", generate(&seq, 4)?.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>());
    Ok(())
}

//! Primitive representations by x^2 + y^2 and x^2 + xy + y^2.

use dickson_pte::reps::{admissible_rank, factorize, reps_hex_form, reps_sum_two_squares, reps_unrestricted, QuadForm};

fn main() -> dickson_pte::Result<()> {
    for m in [65u64, 1105] {
        let reps = reps_sum_two_squares(m)?;
        println!("{m} = {:?}, rank {}", reps.iter().map(|r| (r.x, r.y)).collect::<Vec<_>>(), admissible_rank(m, QuadForm::SumSquares)?);
    }
    let reps = reps_hex_form(1729)?;
    println!("1729 = x^2 + xy + y^2 for {:?}", reps.iter().map(|r| (r.x, r.y)).collect::<Vec<_>>());

    match reps_hex_form(50421) {
        Ok(_) => {}
        Err(e) => println!("50421 = {:?}: {e}", factorize(50421)?),
    }
    let all = reps_unrestricted(50421, QuadForm::Hex)?;
    println!("unrestricted: {:?}", all.iter().map(|r| (r.x, r.y)).collect::<Vec<_>>());
    Ok(())
}

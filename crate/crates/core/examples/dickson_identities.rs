//! Dickson polynomials, their commutation, and the two bridge identities.

use dickson_pte::dickson::{bridge_x, dickson, verify_bridge_4_10, verify_commutation, verify_laurent_identity};
use dickson_pte::rational::int;

fn main() -> dickson_pte::Result<()> {
    for mu in 1..=6 {
        println!("D_{mu}(x, 7) = {}", dickson(mu, &int(7))?);
    }
    println!("D_5(y + 3/y, 3) = y^5 + (3/y)^5: {}", verify_laurent_identity(5, &int(3), 8)?);
    println!("D_3(D_4(x, 7), 7^4) = D_4(D_3(x, 7), 7^3): {}", verify_commutation(3, 4, &int(7))?);

    // on b^2 v1^2 + a v2^2 = 4ab with a = -10 * 65^2, b = 65
    let (a, b) = (int(-10 * 65 * 65), int(65));
    let (v1, v2) = (int(-80), int(30));
    println!("x = {}", bridge_x(&b, &v2));
    println!("bridge 4_10 at (v1, v2) = ({v1}, {v2}): {}", verify_bridge_4_10(&a, &b, &v1, &v2)?);
    Ok(())
}

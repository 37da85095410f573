//! Comparing disc(U + z) and disc(V + z) for a cubic U and a quartic V.

use dickson_pte::obstruction::{disc_obstruction, leading_sign_obstruction, parametrize_3a2b2, shape_polys};
use dickson_pte::rational::int;

fn main() -> dickson_pte::Result<()> {
    for (a1, a2) in [(1, 2), (26, -22)] {
        let (u, v) = shape_polys(&int(a1), &int(a2), &int(1), &int(1), &int(2))?;
        let rep = disc_obstruction(&u, &v)?;
        println!(
            "A = ({a1}, {a2}): 3W = {}, D roots rational {}, off E {}, finiteness certified {}",
            rep.three_w, rep.d_roots_rational, rep.d_roots_off_e, rep.finiteness_certified
        );
    }
    let s = leading_sign_obstruction(&int(2), &int(3))?;
    println!("leading signs {} and {}, differ {}", s.lead_f, s.lead_g, s.signs_differ);

    let p = parametrize_3a2b2(&int(1), &int(1), &int(2))?;
    println!("(1, 1, 2): u = {}, v = {}, w = {}, signs {:?}", p.u, p.v, p.w, p.signs);
    Ok(())
}

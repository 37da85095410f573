//! Building infinite families of solutions to f(x) = g(y) and checking them.

use dickson_pte::families::{build_first_kind, build_third_kind, verify_family, Layout};
use dickson_pte::rational::int;
use dickson_pte::{catalog, Poly};

fn main() -> dickson_pte::Result<()> {
    let fam = build_third_kind(3, 4, &int(7), &[(int(14), int(77)), (int(23), int(71))])?;
    println!("f = {}\ng = {}", fam.f, fam.g);
    let cert = verify_family(&fam, 10);
    println!("{:?} verified: {}", cert.check, cert.verified);

    // f = phi, g = phi(y^3 - y)
    let phi = Poly::from_roots(&int(1), &[int(1), int(-2), int(3)])?;
    let fam = build_first_kind(&phi, &Poly::from_ints(&[0, -1, 0, 1]), Layout::Standard)?;
    println!("g = {}, verified {}", fam.g, verify_family(&fam, 10).verified);

    // a Pell-driven fourth-kind family, checked element by element
    let fam = catalog::families("7.4")?.remove(0);
    let cert = verify_family(&fam, 5);
    for c in cert.transcript.iter().filter(|c| c.label.starts_with("f(")) {
        println!("  {}", c.label);
    }
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
    Ok(())
}

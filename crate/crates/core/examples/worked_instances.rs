//! Runs every named worked instance and prints its checks.

use dickson_pte::catalog::run_all;

fn main() {
    let mut failed = 0;
    for rep in run_all(10, 0) {
        println!("{:6} {:4} {} ({} checks)", rep.id, if rep.passed { "ok" } else { "FAIL" }, rep.title, rep.checks.len());
        for c in rep.checks.iter().filter(|c| !c.passed) {
            println!("         {}: {} != {}", c.label, c.lhs, c.rhs);
            failed += 1;
        }
    }
    println!("{failed} failed checks");
}

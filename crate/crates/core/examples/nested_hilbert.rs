//! Nested Hilbert schemes: one box added to a fixed point.

use hilbfock::hilbloc::{cover_pairs, nested_euler_identity_check, nested_euler_rhs, nested_tangent_char};
use hilbfock::partitions::Partition;

fn main() -> Result<(), hilbfock::Error> {
    for (mu, lam) in cover_pairs(3) {
        let chi = nested_tangent_char(&mu, &lam)?;
        let s = Partition::added_square(&mu, &lam)?;
        println!("{mu} < {lam} (box {s}): {chi}");
        println!("  Euler weight {}", nested_euler_rhs(&mu, &lam)?);
    }

    let r = nested_euler_identity_check(6);
    println!("identity through size 6: {} checks, {} failures", r.checks, r.failures.len());
    Ok(())
}

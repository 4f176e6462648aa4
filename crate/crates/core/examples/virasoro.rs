//! Virasoro operators and their commutators.

use hilbfock::exact::GradedScalar;
use hilbfock::fock::{basis_vector, virasoro_check, FockOperator};

fn main() -> Result<(), hilbfock::Error> {
    let one = GradedScalar::one();
    let l1 = FockOperator::virasoro(1, &one);
    let lm1 = FockOperator::virasoro(-1, &one);

    let v = basis_vector(&"[2]".parse()?);
    println!("L_1 p[2] = {}", l1.apply(&v)?);
    println!("L_-1 p[2] = {}", lm1.apply(&v)?);
    println!("[L_1, L_-1] p[2] = {}", l1.commutator(&lm1).apply(&v)?);

    for (m, n) in [(2, -2), (1, 2), (3, -1)] {
        let r = virasoro_check(m, n, &one, &one, 4);
        println!("[L_{m}, L_{n}] through degree 4: {} checks, {} failures", r.checks, r.failures.len());
    }
    Ok(())
}

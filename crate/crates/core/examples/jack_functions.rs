//! Jack functions from two independent constructions.

use hilbfock::jack::{eigenvalue, norm_formula, JackAlgorithm, Jacks};
use hilbfock::partitions::enumerate;

fn main() -> Result<(), hilbfock::Error> {
    let jacks = Jacks::new(6);
    let n = 4;
    let gs = jacks.family(n, JackAlgorithm::GramSchmidt)?;
    let ham = jacks.family(n, JackAlgorithm::Hamiltonian)?;

    for lam in enumerate(n) {
        let p = jacks.jack(&lam)?;
        let same = gs.get(&lam) == ham.get(&lam);
        println!("P{lam} = {p}");
        println!("  constructions agree: {same}");
        println!("  eigenvalue {}  norm {}", eigenvalue(&lam), norm_formula(&lam));
        println!("  integral form {}", jacks.integral_form(&lam)?);
        println!("  at k = 1: {}", jacks.schur_specialize(&lam)?);
    }
    Ok(())
}

//! The cubic Lehn operator, diagonal on Jack functions.

use hilbfock::fock::{lehn_eigen_check, lift, FockOperator};
use hilbfock::hilbloc::c1_eigenvalue;
use hilbfock::jack::Jacks;
use hilbfock::partitions::enumerate;

fn main() -> Result<(), hilbfock::Error> {
    let jacks = Jacks::new(5);
    let lehn = FockOperator::lehn_cubic(5);

    for lam in enumerate(3) {
        let v = lift(jacks.ring(), &jacks.jack(&lam)?)?;
        let image = lehn.apply(&v)?;
        let expected = v.scale(&c1_eigenvalue(&lam));
        println!("P{lam}: eigenvalue {}  matches: {}", c1_eigenvalue(&lam), image == expected);
    }

    let r = lehn_eigen_check(&jacks, 5);
    println!("eigen check through degree 5: {} checks, {} failures", r.checks, r.failures.len());

    match FockOperator::lehn_cubic(2).apply(&lift(jacks.ring(), &jacks.jack(&"[3]".parse()?)?)?) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("beyond its cap: {e}"),
    }
    Ok(())
}

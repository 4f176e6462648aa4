//! Torus fixed points of the Hilbert scheme and the localized pairing.

use hilbfock::hilbloc::{
    euler_class, fixed_to_monomial, localized_pairing, tangent_char, FixedBasisVector,
};
use hilbfock::jack::Jacks;
use hilbfock::partitions::enumerate;

fn main() -> Result<(), hilbfock::Error> {
    let jacks = Jacks::new(4);
    for lam in enumerate(3) {
        let chi = tangent_char(&lam);
        println!("T_{lam} = {chi}");
        println!("  Euler class {}", euler_class(&chi)?);

        let v = FixedBasisVector::fixed_point(&lam);
        println!("  [I_{lam}] = {}", fixed_to_monomial(&jacks, &v)?);
        println!("  self pairing {}", localized_pairing(&v, &v)?);
    }
    Ok(())
}

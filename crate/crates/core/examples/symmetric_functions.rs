//! Monomial and power-sum bases with the k-deformed inner product.

use hilbfock::exact::RationalFunction;
use hilbfock::partitions::Partition;
use hilbfock::symfunc::{power_sum_norm, Basis, Lambda, SymFunc};

fn main() -> Result<(), hilbfock::Error> {
    let ring = Lambda::new(6);
    let lam: Partition = "[2,1]".parse()?;

    let m = SymFunc::<RationalFunction>::basis_element(Basis::Monomial, lam.clone());
    let p = ring.to_power_sum(&m)?;
    println!("m{lam} = {p}");
    println!("back: {}", ring.to_monomial(&p)?);

    let p1 = SymFunc::<RationalFunction>::basis_element(Basis::PowerSum, "[1]".parse()?);
    println!("p1 * m{lam} = {}", ring.to_monomial(&ring.multiply(&p1, &m)?)?);

    println!("<p{lam}, p{lam}> = {}", power_sum_norm(&lam));
    println!("<m{lam}, m{lam}> = {}", ring.inner_product(&m, &m)?);
    println!("box Hamiltonian on m{lam}: {}", ring.box_hamiltonian(&p)?);
    Ok(())
}

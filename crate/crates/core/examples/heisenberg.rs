//! Heisenberg modes acting on the Fock space.

use hilbfock::exact::GradedScalar;
use hilbfock::fock::{
    basis_vector, coproduct_insert, fock_pairing, heis_apply, vacuum, FockOperator, HeisenbergMode,
};
use hilbfock::partitions::Partition;

fn main() -> Result<(), hilbfock::Error> {
    let one = GradedScalar::one();
    let create = HeisenbergMode::new(-2, one.clone())?;
    let annihilate = HeisenbergMode::new(2, one.clone())?;

    let v = heis_apply(&create, &vacuum())?;
    println!("P_-2 |0> = {v}");
    println!("P_2 P_-2 |0> = {}", heis_apply(&annihilate, &v)?);

    let lam: Partition = "[2,1]".parse()?;
    let w = basis_vector(&lam);
    println!("<p{lam}, p{lam}> = {}", fock_pairing(&w, &w)?);

    let comm = FockOperator::mode(&annihilate).commutator(&FockOperator::mode(&create));
    println!("[P_2, P_-2] p{lam} = {}", comm.apply(&w)?);

    let delta = coproduct_insert(&[1, -1], &one, true)?;
    println!("coproduct of P_1 P_-1 on p{lam}: {}", delta.apply(&w)?);
    Ok(())
}

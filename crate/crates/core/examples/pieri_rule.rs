//! Multiplying a Jack function by p1.

use hilbfock::jack::{pieri_coefficient, Jacks};
use hilbfock::partitions::Partition;

fn main() -> Result<(), hilbfock::Error> {
    let jacks = Jacks::new(6);
    let mu: Partition = "[2,1]".parse()?;

    println!("p1 * P{mu}:");
    for (lam, c) in jacks.pieri_expansion(&mu)? {
        let closed = pieri_coefficient(&mu, &lam)?;
        println!("  P{lam}: {c}  (box formula {closed})");
    }
    Ok(())
}

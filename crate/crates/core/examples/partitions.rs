//! Young diagrams, hooks and dominance.

use hilbfock::partitions::{enumerate, Partition};

fn main() -> Result<(), hilbfock::Error> {
    let lam: Partition = "[3,1]".parse()?;
    println!("lambda = {lam}, conjugate = {}", lam.conjugate());
    println!("n(lambda) = {}, z(lambda) = {}", lam.n_stat(), lam.z_stat());

    for s in lam.squares() {
        let h = lam.arm_leg(s)?;
        println!("  square {s}: arm {} leg {}", h.arm, h.leg);
    }

    for (nu, s) in lam.add_box_targets() {
        println!("  add {s} -> {nu}");
    }

    let all = enumerate(5);
    println!("{} partitions of 5:", all.len());
    for mu in &all {
        let below: Vec<String> = all
            .iter()
            .filter(|nu| *nu != mu && nu.dominated_by(mu))
            .map(ToString::to_string)
            .collect();
        println!("  {mu} dominates {}", below.join(" "));
    }
    Ok(())
}

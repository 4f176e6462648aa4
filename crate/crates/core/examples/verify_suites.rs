//! Running the verification suites from library code.

use hilbfock::cli::run;

fn main() {
    for suite in ["heisenberg", "pieri", "nested"] {
        let out = run(["hilbfock", "verify", suite, "--max-degree", "4"]);
        print!("{}", out.stdout);
    }
    let out = run(["hilbfock", "jack", "[3,1]", "--max-degree", "4", "--output", "json"]);
    print!("{}", out.stdout);
}

//! Command-line front end: `jack`, `verify`, `tangent` and `pieri`.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::Error;
use crate::exact::{gs_constants, GradedScalar, RationalFunction};
use crate::fock::{
    basis_up_to, basis_vector, commutator_check, heis_apply, lehn_commutator_check,
    lehn_eigen_check, lehn_hamiltonian_check, transpose_check, virasoro_check, HeisenbergMode,
};
use crate::hilbloc::{
    euler_class, euler_nonpos, localization_check, nested_euler_identity_check,
    nested_tangent_char, tangent_char, triangularity_check,
};
use crate::jack::{
    c_diag_check, cross_validation_check, eigen_check, jack_triangularity_check, norm_check,
    pieri_check, schur_check, JackAlgorithm, Jacks,
};
use crate::partitions::Partition;
use crate::report::Report;
use crate::symfunc::SymFunc;

pub const DEFAULT_MAX_DEGREE: usize = 8;
pub const HARD_DEGREE_CAP: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    Heisenberg,
    Virasoro,
    Lehn,
    Norm,
    Pieri,
    Localization,
    Nested,
    Triangularity,
    Jack,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Heisenberg,
        Suite::Virasoro,
        Suite::Lehn,
        Suite::Norm,
        Suite::Pieri,
        Suite::Localization,
        Suite::Nested,
        Suite::Triangularity,
        Suite::Jack,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Heisenberg => "heisenberg",
            Suite::Virasoro => "virasoro",
            Suite::Lehn => "lehn",
            Suite::Norm => "norm",
            Suite::Pieri => "pieri",
            Suite::Localization => "localization",
            Suite::Nested => "nested",
            Suite::Triangularity => "triangularity",
            Suite::Jack => "jack",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CliConfig {
    pub max_degree: usize,
    pub output: Output,
    pub seed: u64,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            max_degree: DEFAULT_MAX_DEGREE,
            output: Output::Text,
            seed: 0,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hilbfock", version, about = "Jack functions, the Fock space and fixed points on Hilb^n(C²)")]
struct Cli {
    /// Largest partition size considered.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..=HARD_DEGREE_CAP as u64))]
    max_degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Seed for the randomly sampled colors.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print P_λ in the monomial basis.
    Jack {
        partition: Partition,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::GramSchmidt)]
        algorithm: AlgorithmArg,
        /// Print the integral form J_λ.
        #[arg(long, conflicts_with = "schur")]
        integral: bool,
        /// Print the specialization at k = 1.
        #[arg(long)]
        schur: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Tangent character and Euler classes at a fixed point.
    Tangent {
        partition: Partition,
        /// Smaller partition of a nested pair.
        #[arg(long)]
        nested: Option<Partition>,
    },
    /// Expand p_1·P_μ in the Jack basis.
    Pieri { partition: Partition },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum AlgorithmArg {
    GramSchmidt,
    Hamiltonian,
}

impl From<AlgorithmArg> for JackAlgorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::GramSchmidt => JackAlgorithm::GramSchmidt,
            AlgorithmArg::Hamiltonian => JackAlgorithm::Hamiltonian,
        }
    }
}

/// Result of a command: text to print and the exit code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn usage(msg: impl ToString) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: msg.to_string(),
            code: 2,
        }
    }
}

/// Parses arguments (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            };
        }
    };
    let cfg = CliConfig {
        max_degree: cli.max_degree,
        output: cli.output,
        seed: cli.seed,
    };
    let result = match cli.command {
        Command::Jack {
            partition,
            algorithm,
            integral,
            schur,
        } => cmd_jack(&cfg, &partition, algorithm.into(), integral, schur),
        Command::Verify { suite } => return cmd_verify(&cfg, suite),
        Command::Tangent { partition, nested } => cmd_tangent(&cfg, &partition, nested.as_ref()),
        Command::Pieri { partition } => cmd_pieri(&cfg, &partition),
    };
    match result {
        Ok(s) => Outcome::ok(s),
        Err(e) => Outcome::usage(format!("error: {e}")),
    }
}

fn check_size(cfg: &CliConfig, n: usize) -> Result<(), Error> {
    if n > cfg.max_degree {
        return Err(Error::DegreeCap {
            degree: n,
            cap: cfg.max_degree,
        });
    }
    Ok(())
}

fn render<T: serde::Serialize>(cfg: &CliConfig, value: &T, text: String) -> String {
    match cfg.output {
        Output::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Output::Text => text + "\n",
    }
}

pub fn cmd_jack(
    cfg: &CliConfig,
    lam: &Partition,
    algorithm: JackAlgorithm,
    integral: bool,
    schur: bool,
) -> Result<String, Error> {
    check_size(cfg, lam.size())?;
    let jacks = Jacks::new(cfg.max_degree);
    let fam = jacks.family(lam.size(), algorithm)?;
    let p = fam.get(lam).expect("family covers all partitions").clone();
    if schur {
        let one = crate::exact::Rational::from_integer(1.into());
        let s = p.try_map_coeffs(|c| c.eval(&one))?;
        let as_rf: SymFunc<RationalFunction> = s.map_coeffs(|r| RationalFunction::constant(r.clone()));
        return Ok(render(cfg, &as_rf, s.to_string()));
    }
    let f = if integral {
        p.scale(&crate::jack::integral_form_scalar(lam))
    } else {
        p
    };
    Ok(render(cfg, &f, f.to_string()))
}

pub fn cmd_tangent(cfg: &CliConfig, lam: &Partition, nested: Option<&Partition>) -> Result<String, Error> {
    check_size(cfg, lam.size())?;
    let (chi, nonpos) = match nested {
        Some(mu) => (nested_tangent_char(mu, lam)?, None),
        None => (tangent_char(lam), Some(euler_nonpos(lam))),
    };
    let euler = euler_class(&chi)?;
    let mut text = format!("character: {chi}\ndimension: {}\ne: {euler}", chi.dimension());
    if let Some(e) = &nonpos {
        write!(text, "\ne≤0: {e}").expect("string write");
    }
    let value = json!({
        "partition": lam,
        "nested": nested,
        "character": chi,
        "dimension": chi.dimension(),
        "euler": euler,
        "euler_nonpos": nonpos,
    });
    Ok(render(cfg, &value, text))
}

pub fn cmd_pieri(cfg: &CliConfig, mu: &Partition) -> Result<String, Error> {
    check_size(cfg, mu.size() + 1)?;
    let jacks = Jacks::new(cfg.max_degree);
    let exp = jacks.pieri_expansion(mu)?;
    let text = exp
        .iter()
        .map(|(lam, c)| {
            let cs = c.to_string();
            if c.is_one() {
                format!("P{lam}")
            } else if cs.contains(['+', '-', '/', ' ']) {
                format!("({cs})·P{lam}")
            } else {
                format!("{cs}·P{lam}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ");
    let value = json!({
        "mu": mu,
        "terms": exp
            .iter()
            .map(|(lam, c)| json!({"partition": lam, "coeff": c}))
            .collect::<Vec<_>>(),
    });
    Ok(render(cfg, &value, text))
}

/// Runs one suite at the configured degree.
pub fn run_suite(cfg: &CliConfig, jacks: &Jacks, suite: Suite) -> Report {
    let d = cfg.max_degree;
    let c = gs_constants();
    let mut report = Report::new(suite.name(), d);
    let mut absorb = |r: Result<Report, Error>, what: &str| match r {
        Ok(r) => report.merge(r),
        Err(e) => report.error(what.to_string(), e),
    };
    match suite {
        Suite::Heisenberg => {
            let colors = [c.one.clone(), c.eps1.clone(), c.eps2.clone(), c.c2x.clone()];
            let top = d.min(5) as i64;
            let modes: Vec<i64> = (-top..=top).filter(|&m| m != 0).collect();
            let mut cases = Vec::new();
            for &i in &modes {
                for &j in &modes {
                    for a in &colors {
                        for b in &colors {
                            cases.push((i, j, a.clone(), b.clone()));
                        }
                    }
                }
            }
            let results: Vec<_> = cases
                .par_iter()
                .map(|(i, j, a, b)| commutator_check(*i, *j, a, b, d))
                .collect();
            for r in results {
                absorb(r, "commutator");
            }
            for &m in modes.iter().filter(|&&m| m > 0) {
                absorb(transpose_check(m, &c.eps2, d.min(6)), "transpose");
            }
            absorb(linearity_check(cfg.seed, d), "linearity");
        }
        Suite::Virasoro => {
            let colors = [c.one.clone(), c.eps2.clone()];
            let mut cases = Vec::new();
            for n in -3..=3i64 {
                for m in -3..=3i64 {
                    for a in &colors {
                        for b in &colors {
                            cases.push((n, m, a.clone(), b.clone()));
                        }
                    }
                }
            }
            let results: Vec<_> = cases
                .par_iter()
                .map(|(n, m, a, b)| virasoro_check(*n, *m, a, b, d))
                .collect();
            for r in results {
                absorb(Ok(r), "virasoro");
            }
        }
        Suite::Lehn => {
            absorb(Ok(lehn_hamiltonian_check(jacks.ring(), d)), "lehn");
            absorb(Ok(lehn_eigen_check(jacks, d)), "lehn");
            for n in [-2i64, -1, 1, 2] {
                for a in [&c.one, &c.eps2] {
                    absorb(lehn_commutator_check(n, a, d.min(6)), "lehn commutator");
                }
            }
        }
        Suite::Norm => absorb(Ok(norm_check(jacks, d)), "norm"),
        Suite::Pieri => absorb(Ok(pieri_check(jacks, d)), "pieri"),
        Suite::Localization => absorb(Ok(localization_check(jacks, d, d.min(6))), "localization"),
        Suite::Nested => absorb(Ok(nested_euler_identity_check(d)), "nested"),
        Suite::Triangularity => {
            absorb(Ok(jack_triangularity_check(jacks, d)), "triangularity");
            absorb(Ok(triangularity_check(jacks, d)), "triangularity");
        }
        Suite::Jack => {
            absorb(Ok(cross_validation_check(jacks, d)), "jack");
            absorb(Ok(eigen_check(jacks, d)), "jack");
            absorb(Ok(schur_check(jacks, d.min(6))), "jack");
            absorb(Ok(c_diag_check(d.min(6))), "jack");
        }
        Suite::All => {
            let reports: Vec<Report> = Suite::EACH
                .par_iter()
                .map(|&s| run_suite(cfg, jacks, s))
                .collect();
            for r in reports {
                report.merge(r);
            }
        }
    }
    report
}

/// `P_m(f·α) = f·P_m(α)` for seeded random scalars `f`.
pub fn linearity_check(seed: u64, maxdeg: usize) -> Result<Report, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("heisenberg", maxdeg);
    let c = gs_constants();
    let colors = [c.one, c.eps1, c.eps2, c.c2x];
    let basis = basis_up_to(maxdeg.min(6));
    for _ in 0..8 {
        let f = random_scalar(&mut rng);
        let m = loop {
            let m = rng.gen_range(-5i64..=5);
            if m != 0 {
                break m;
            }
        };
        for alpha in &colors {
            let scaled = HeisenbergMode::new(m, f.mul(alpha))?;
            let plain = HeisenbergMode::new(m, alpha.clone())?;
            for lam in &basis {
                let v = basis_vector(lam);
                report.check(
                    || format!("P_{m}(({f})·{alpha}) on p{lam}"),
                    &heis_apply(&scaled, &v)?,
                    &heis_apply(&plain, &v)?.scale(&f),
                );
            }
        }
    }
    Ok(report)
}

/// A random scalar with small integer data in degrees `-1..=2`.
pub fn random_scalar(rng: &mut impl Rng) -> GradedScalar {
    let mut acc = GradedScalar::zero();
    for d in -1..=2 {
        if rng.gen_bool(0.6) {
            let f = RationalFunction::linear(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            acc = acc.add(&GradedScalar::homogeneous(d, f));
        }
    }
    acc
}

pub fn cmd_verify(cfg: &CliConfig, suite: Suite) -> Outcome {
    let jacks = Jacks::new(cfg.max_degree);
    let report = run_suite(cfg, &jacks, suite);
    let code = if report.passed() { 0 } else { 1 };
    let stdout = match cfg.output {
        Output::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        Output::Text => {
            let mut s = format!(
                "{}: {} ({} checks, {} failures, max degree {})\n",
                report.suite,
                if report.passed() { "PASS" } else { "FAIL" },
                report.checks,
                report.failures.len(),
                report.maxdeg
            );
            if let Some(f) = report.failures.first() {
                writeln!(s, "first failure: {}\n  lhs: {}\n  rhs: {}", f.input, f.lhs, f.rhs)
                    .expect("string write");
            }
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> Outcome {
        run(std::iter::once("hilbfock").chain(args.iter().copied()))
    }

    #[test]
    fn jack_command() {
        assert_eq!(out(&["jack", "[2]"]).stdout, "m[2] + (2/(1+k))·m[1,1]\n");
        assert_eq!(out(&["jack", "[1]"]).stdout, "m[1]\n");
        assert_eq!(out(&["jack", "[2]", "--schur"]).stdout, "m[2] + m[1,1]\n");
        assert_eq!(
            out(&["jack", "[2]", "--algorithm", "hamiltonian"]).stdout,
            "m[2] + (2/(1+k))·m[1,1]\n"
        );
        assert_eq!(out(&["jack", "[2]", "--integral"]).stdout, "(1+k)·m[2] + 2·m[1,1]\n");
        assert_eq!(out(&["jack", "[3]", "--max-degree", "2"]).code, 2);
    }

    #[test]
    fn pieri_command() {
        assert_eq!(out(&["pieri", "[1]"]).stdout, "P[2] + (2k/(1+k))·P[1,1]\n");
        assert_eq!(out(&["pieri", "[]"]).stdout, "P[1]\n");
        assert_eq!(out(&["pieri", "[2]"]).stdout.matches("P[").count(), 2);
    }

    #[test]
    fn tangent_command() {
        assert!(out(&["tangent", "[1]"]).stdout.starts_with("character: t1 + t2\n"));
        assert!(out(&["tangent", "[2]", "--nested", "[1]"])
            .stdout
            .starts_with("character: t1 + 2t2 + t1t2^-1\n"));
        let empty = out(&["tangent", "[]"]).stdout;
        assert!(empty.contains("character: 0\n") && empty.contains("e: 1\n"), "{empty}");
        assert_eq!(out(&["tangent", "[1,1]", "--nested", "[2]"]).code, 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(out(&["verify", "bogus"]).code, 2);
        assert_eq!(out(&["verify", "norm", "--max-degree", "13"]).code, 2);
        assert_eq!(out(&["verify", "norm", "--max-degree", "0"]).code, 2);
        assert_eq!(out(&["jack", "[1,2]"]).code, 2);
    }

    #[test]
    fn verify_json_round_trips() {
        let o = out(&["verify", "nested", "--max-degree", "4", "--output", "json"]);
        assert_eq!(o.code, 0);
        let r: Report = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(r.suite, "nested");
        assert!(r.checks > 0 && r.failures.is_empty());
    }
}

mod error;
mod input;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cuspalg::classify::{classify_n2, classify_n3, restricts_to_cusp, Coupling, TriangularT};
use cuspalg::cusp::MIN_TRUNCATION;
use cuspalg::dual::{closed_pairing, PairingOracle};
use cuspalg::exactalg::Scalar;
use cuspalg::report::{Check, Report};

use error::{in_range, CliError, CHECK_FAILED};
use suites::{Bounds, Suite};

const MAX_DEGREE: i64 = 60;
const MAX_HOPF_DEGREE: u32 = 12;
const MAX_PAIR_L: u32 = 12;
const MAX_PAIR_B: u32 = 24;

#[derive(Parser)]
#[command(name = "cuspalg", version, about = "Exact checks for the quantum automorphism of the cusp")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Truncation degree for operators on the cusp.
    #[arg(long, global = true, default_value_t = 24)]
    max_degree: i64,
    /// Bound on the Y-exponent of H_σ basis words.
    #[arg(long, global = true, default_value_t = 6)]
    hopf_degree: u32,
    /// Pairing table bounds `L,B` on the Y- and φ-exponents.
    #[arg(long, global = true, alias = "bounds", default_value = "6,6", value_parser = parse_pair_bounds)]
    pair_bounds: (u32, u32),
    /// Seed for the randomized classification sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Extra λ for the cusp embedding, e.g. "1/2" or "1+i".
    #[arg(long, global = true)]
    lambda: Option<Scalar>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Decide whether an upper-triangular T restricts to the cusp.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
        /// Include the coupling witnesses in the report.
        #[arg(long)]
        witnesses: bool,
    },
    /// Evaluate ⟨CⁱDʲKᵏYˡ, γᵃφᵇψᶜ⟩ by the closed formula and by the oracle.
    Pair {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_pair_bounds(s: &str) -> Result<(u32, u32), String> {
    let (l, b) = s.split_once(',').ok_or("expected L,B")?;
    let num = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(l)?, num(b)?))
}

fn bounds(cli: &Cli) -> Result<Bounds, CliError> {
    Ok(Bounds {
        max_degree: in_range("--max-degree", cli.max_degree, MIN_TRUNCATION, MAX_DEGREE)?,
        hopf_degree: in_range("--hopf-degree", cli.hopf_degree, 0, MAX_HOPF_DEGREE)?,
        pair_l: in_range("--pair-bounds L", cli.pair_bounds.0, 0, MAX_PAIR_L)?,
        pair_b: in_range("--pair-bounds B", cli.pair_bounds.1, 0, MAX_PAIR_B)?,
        seed: cli.seed,
        lambda: cli.lambda.clone(),
    })
}

fn classify(n: usize, path: &PathBuf, witnesses: bool) -> Result<Report, CliError> {
    in_range("--n", n, 2, 3)?;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    let inp = input::parse(&text, n)?;
    let zero_param = |e: cuspalg::classify::ClassifyError| CliError::Input(e.to_string());
    let (accepted, mut note) = if n == 2 {
        let d = classify_n2(&inp.alpha, &inp.beta, &inp.upper[0]).map_err(zero_param)?;
        let mut note = format!("{}, case {}", if d.accepted { "accept" } else { "reject" }, d.case.number());
        if let Some(w) = &d.witness {
            note.push_str(&format!(": {w}"));
        }
        (d.accepted, note)
    } else {
        let gamma = inp.gamma.as_ref().expect("size 3 has γ");
        let d = classify_n3(&inp.alpha, &inp.beta, gamma, &inp.upper[0], &inp.upper[1], &inp.upper[2]).map_err(zero_param)?;
        let kind = match d.coupling {
            Coupling::Regular { .. } => "regular",
            Coupling::Singular { .. } => "singular",
        };
        let mut note = format!(
            "{}, x case {}, y case {}, {kind} coupling",
            if d.accepted { "accept" } else { "reject" },
            d.x_case.number(),
            d.y_case.number()
        );
        if !d.failures.is_empty() {
            note.push_str(&format!(": {}", d.failures.join("; ")));
        }
        if witnesses {
            match &d.coupling {
                Coupling::Regular { a, b } => note.push_str(&format!("; a = {a}, b = {b}")),
                Coupling::Singular { c } => note.push_str(&format!("; c = {c}")),
            }
        }
        (d.accepted, note)
    };
    let t = TriangularT::from_laurent(&inp.matrix).map_err(|e| CliError::Input(e.to_string()))?;
    let direct = restricts_to_cusp(&t);
    if direct != accepted {
        note.push_str(&format!("; direct restriction test says {direct}"));
    }
    let mut rep = Report::new("classify").bound("n", n);
    rep.push(Check::new("closed-form decision agrees with the direct restriction test", "classify.equivalence", direct == accepted, None).with_note(note));
    Ok(rep)
}

fn pair(hx: [u32; 4], ax: [u32; 3]) -> Result<Report, CliError> {
    for (name, v) in [("--i", hx[0]), ("--j", hx[1]), ("--k", hx[2]), ("--a", ax[0]), ("--c", ax[2])] {
        in_range(name, v, 0, 1)?;
    }
    in_range("--l", hx[3], 0, MAX_PAIR_L)?;
    in_range("--b", ax[1], 0, MAX_PAIR_B)?;
    let formula = closed_pairing(hx, ax);
    let oracle = PairingOracle::new().pair_monomials(hx, ax);
    let [i, j, k, l] = hx;
    let [a, b, c] = ax;
    let mut rep = Report::new("pair");
    for (key, v) in [("i", i), ("j", j), ("k", k), ("l", l), ("a", a), ("b", b), ("c", c)] {
        rep = rep.bound(key, v);
    }
    rep.push(
        Check::new("closed formula agrees with the oracle", "pairing.closed_formula", formula == oracle, None)
            .with_note(format!("formula {formula}, oracle {oracle}")),
    );
    Ok(rep)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let b = bounds(cli)?;
    match &cli.command {
        Command::Verify { suite } => Ok(suites::run(*suite, &b)),
        Command::Classify { n, input, witnesses } => classify(*n, input, *witnesses),
        Command::Pair { i, j, k, l, a, b, c } => pair([*i, *j, *k, *l], [*a, *b, *c]),
    }
}

fn emit(cli: &Cli, rep: &Report) -> Result<(), CliError> {
    let text = match cli.format {
        Format::Json => rep.to_json() + "\n",
        Format::Text => rep.to_string(),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|rep| emit(&cli, &rep).map(|_| rep.passed()));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_bounds_syntax() {
        assert_eq!(parse_pair_bounds("6,6"), Ok((6, 6)));
        assert_eq!(parse_pair_bounds(" 2, 13"), Ok((2, 13)));
        assert!(parse_pair_bounds("6").is_err());
        assert!(parse_pair_bounds("a,1").is_err());
    }

    #[test]
    fn global_flags_follow_the_subcommand() {
        let cli = Cli::try_parse_from(["cuspalg", "verify", "cusp", "--max-degree", "12", "--lambda", "1/2"]).unwrap();
        assert_eq!(cli.max_degree, 12);
        assert_eq!(cli.lambda, Some(Scalar::ratio(1, 2)));
        assert_eq!(cli.pair_bounds, (6, 6));
    }
}

//! Command-line front end: polynomial generation, plans, Pieri tables, the
//! verification suites, and the operator-count benchmark.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
//! assertion (monic-convention violation and relatives).

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mpoly::compositions::Composition;
use mpoly::families;
use mpoly::pieri;
use mpoly::verify::{self, VerifyConfig};
use mpoly::{Error, Family, Generator, MPoly, QtRat};

#[derive(Parser)]
#[command(name = "mpoly", version, about = "Macdonald polynomial calculator over exact Q(q,t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for polynomials and coefficients
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory for the persistent polynomial cache
    /// (falls back to the MPOLY_CACHE_DIR environment variable)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct GenArgs {
    /// Composition (or partition), comma separated, e.g. "2,1"
    composition: String,

    /// Number of variables; pads the composition with zeros (default: its length)
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Nonsymmetric Macdonald polynomial E_eta(z;q,t)
    Ns(GenArgs),
    /// Interpolation Macdonald polynomial E*_eta(z;q,t)
    Interp(GenArgs),
    /// Symmetric Macdonald polynomial P_kappa(z;q,t)
    Sym(GenArgs),
    /// Antisymmetric Macdonald polynomial S_kappa(z;q,t)
    Asym(GenArgs),
    /// Symmetric interpolation Macdonald polynomial
    Symint(GenArgs),
    /// Antisymmetric interpolation Macdonald polynomial
    Asymint(GenArgs),
    /// Prescribed-symmetry polynomial S^{(I,J)}
    Presym {
        #[command(flatten)]
        args: GenArgs,
        /// Generator indices to symmetrize over, comma separated
        #[arg(long, value_delimiter = ',')]
        sym: Vec<usize>,
        /// Generator indices to antisymmetrize over, comma separated
        #[arg(long, value_delimiter = ',')]
        anti: Vec<usize>,
        /// Use the interpolation family instead of the Macdonald family
        #[arg(long)]
        interp: bool,
    },
    /// Hall-Littlewood polynomial P_kappa(z;t)
    Hl(GenArgs),
    /// Schur polynomial s_kappa(z)
    Schur(GenArgs),
    /// Minimal operator word for a composition, as JSON
    Plan {
        /// Composition, comma separated
        composition: String,
        /// Strip the leading raises allowed for compositions without zeros
        #[arg(long)]
        reduced: bool,
    },
    /// Pieri-type coefficients A^(r)_{eta,lambda}
    Pieri {
        /// Base composition eta
        eta: String,
        /// Degree of the elementary symmetric factor
        r: usize,
        /// Target composition; omit to print the whole nonzero row
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Run the invariant suites and report per-suite pass/fail
    Verify {
        #[arg(long, default_value_t = 3)]
        max_modulus: u32,
        #[arg(long, default_value_t = 3)]
        max_vars: usize,
        /// Seed for the randomized relation checks
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// CSV of operator counts and wall times per composition and family
    Bench {
        /// Compositions to benchmark, e.g. "0,4" "1,3"
        compositions: Vec<String>,
        /// Named preset: "table1" runs the standard 14 rows
        #[arg(long)]
        preset: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let gen = match &cli.cache_dir {
        Some(dir) => Generator::with_cache_dir(dir),
        None => Generator::from_env(),
    };
    match run(&cli, &gen) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::ConventionViolation(_)
        | Error::PlannerBug(_)
        | Error::NonExactDivision
        | Error::PeelingFailed => 3,
        _ => 2,
    }
}

fn parse_comp(s: &str, n: Option<usize>) -> Result<Composition, Error> {
    let comp: Composition = s.parse()?;
    match n {
        Some(n) => comp.padded(n),
        None => Ok(comp),
    }
}

fn run(cli: &Cli, gen: &Generator) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Ns(args) => {
            let eta = parse_comp(&args.composition, args.n)?;
            print_poly(&gen.nonsymmetric(&eta)?, cli.format);
        }
        Command::Interp(args) => {
            let eta = parse_comp(&args.composition, args.n)?;
            print_poly(&gen.interpolation(&eta)?, cli.format);
        }
        Command::Sym(args) => {
            let kappa = parse_comp(&args.composition, args.n)?;
            print_poly(&families::sym_mac(gen, &kappa)?, cli.format);
        }
        Command::Asym(args) => {
            let kappa = parse_comp(&args.composition, args.n)?;
            print_poly(&families::asym_mac(gen, &kappa)?, cli.format);
        }
        Command::Symint(args) => {
            let kappa = parse_comp(&args.composition, args.n)?;
            print_poly(&families::sym_int_mac(gen, &kappa)?, cli.format);
        }
        Command::Asymint(args) => {
            let kappa = parse_comp(&args.composition, args.n)?;
            print_poly(&families::asym_int_mac(gen, &kappa)?, cli.format);
        }
        Command::Presym {
            args,
            sym,
            anti,
            interp,
        } => {
            let eta = parse_comp(&args.composition, args.n)?;
            let sym: BTreeSet<usize> = sym.iter().copied().collect();
            let anti: BTreeSet<usize> = anti.iter().copied().collect();
            let family = if *interp {
                Family::Interpolation
            } else {
                Family::Nonsymmetric
            };
            let result = families::prescribed(gen, &eta, &sym, &anti, family)?;
            print_poly(&result.poly, cli.format);
        }
        Command::Hl(args) => {
            let kappa = parse_comp(&args.composition, args.n)?;
            print_poly(&families::hall_littlewood(gen, &kappa)?, cli.format);
        }
        Command::Schur(args) => {
            let kappa = parse_comp(&args.composition, args.n)?;
            print_poly(&families::schur(gen, &kappa)?, cli.format);
        }
        Command::Plan {
            composition,
            reduced,
        } => {
            let eta: Composition = composition.parse()?;
            let plan = if *reduced {
                eta.plan_reduced()
            } else {
                eta.plan()
            };
            println!(
                "{}",
                serde_json::to_string(&plan).expect("plan serializes")
            );
        }
        Command::Pieri { eta, r, lambda } => {
            let eta: Composition = eta.parse()?;
            match lambda {
                Some(lambda) => {
                    let lambda: Composition = lambda.parse()?;
                    let coeff = pieri::pieri_coeff(gen, &eta, &lambda, *r)?;
                    print_coeff(&coeff, cli.format);
                }
                None => {
                    let row = pieri::pieri_row(gen, &eta, *r)?;
                    print_row(&eta, *r, &row, cli.format);
                }
            }
        }
        Command::Verify {
            max_modulus,
            max_vars,
            seed,
        } => {
            let cfg = VerifyConfig {
                max_modulus: *max_modulus,
                max_vars: *max_vars,
                seed: *seed,
            };
            let reports = verify::run_all(gen, &cfg);
            let all_passed = print_reports(&reports, cli.format);
            if !all_passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            compositions,
            preset,
        } => {
            let mut etas: Vec<Composition> = Vec::new();
            if let Some(name) = preset {
                if name != "table1" {
                    return Err(Error::InvalidComposition(format!(
                        "unknown preset '{}'",
                        name
                    )));
                }
                for s in [
                    "0,4", "1,3", "2,2", "3,1", "4,0", "0,0,4", "1,1,2", "2,1,1", "4,0,0",
                    "1,3,0", "0,7", "3,4", "4,3", "7,0",
                ] {
                    etas.push(s.parse()?);
                }
            }
            for s in compositions {
                etas.push(s.parse()?);
            }
            if etas.is_empty() {
                return Err(Error::InvalidComposition(
                    "no compositions given; pass some or use --preset table1".to_string(),
                ));
            }
            run_bench(&etas)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_poly(p: &MPoly, format: Format) {
    match format {
        Format::Text => println!("{}", p.render_text()),
        Format::Json => println!("{}", serde_json::to_string(p).expect("poly serializes")),
        Format::Latex => println!("{}", p.render_latex()),
    }
}

fn print_coeff(c: &QtRat, format: Format) {
    match format {
        Format::Text => println!("{}", c.render()),
        Format::Json => println!(
            "{}",
            serde_json::json!({ "num": c.num().render(), "den": c.den().render() })
        ),
        Format::Latex => {
            if c.den().is_one() {
                println!("{}", c.num().render());
            } else {
                println!("\\frac{{{}}}{{{}}}", c.num().render(), c.den().render());
            }
        }
    }
}

fn print_row(eta: &Composition, r: usize, row: &pieri::ExpansionTable, format: Format) {
    match format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = row
                .entries()
                .map(|(lambda, coeff)| {
                    serde_json::json!({
                        "lambda": lambda.parts(),
                        "coeff": { "num": coeff.num().render(), "den": coeff.den().render() },
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({ "eta": eta.parts(), "r": r, "entries": entries })
            );
        }
        _ => {
            for (lambda, coeff) in row.entries() {
                println!("{}: {}", lambda, coeff.render());
            }
        }
    }
}

fn print_reports(reports: &[verify::SuiteReport], format: Format) -> bool {
    let all_passed = reports.iter().all(|r| r.passed());
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "suite": r.name,
                        "passed": r.passed(),
                        "checks": r.checks,
                        "failures": r.failures,
                    })
                })
                .collect();
            println!("{}", serde_json::json!(rows));
        }
        _ => {
            for r in reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!("{}: {} (checks={})", r.name, status, r.checks);
                for failure in &r.failures {
                    println!("  failed: {}", failure);
                }
            }
        }
    }
    all_passed
}

fn run_bench(etas: &[Composition]) -> Result<(), Error> {
    println!("eta,family,operators,time_s");
    for eta in etas {
        // A fresh generator per row keeps the timing honest.
        let gen = Generator::new();
        let ops = eta.plan_reduced().operator_count();
        let start = Instant::now();
        gen.nonsymmetric(eta)?;
        let dt = start.elapsed().as_secs_f64();
        println!("\"{}\",E,{},{:.4}", eta, ops, dt);

        let gen = Generator::new();
        let ops = eta.plan().operator_count();
        let start = Instant::now();
        gen.interpolation(eta)?;
        let dt = start.elapsed().as_secs_f64();
        println!("\"{}\",E*,{},{:.4}", eta, ops, dt);
    }
    Ok(())
}

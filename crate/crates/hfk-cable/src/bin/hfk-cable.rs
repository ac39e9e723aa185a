//! Command line front end: validation, homology, cable tables, Alexander
//! polynomials and cross-checks for filtered knot complexes.
//!
//! Exit codes: 0 success (warnings included), 1 failed validation or
//! verification, 2 usage and input errors.

use clap::{Parser, Subcommand, ValueEnum};
use hfk_cable::alexander::{euler_poly, torus_alexander, LaurentPoly};
use hfk_cable::cable::{cable_hfk, CableError, CableParams};
use hfk_cable::complex::FilteredComplex;
use hfk_cable::io::{parse_complex, parse_table, write_cable_table, write_complex, write_table, IoError};
use hfk_cable::render::{color_enabled, paint, render_cable_grid, render_csv, render_grid};
use hfk_cable::torus::{hfk_torus_2, hfk_torus_3_7, staircase_t2};
use hfk_cable::verify::{run_verify, CheckStatus};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "hfk-cable", version, about = "Knot Floer homology of cable knots from filtered complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Grid,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining axioms of a complex file
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Homology of the filtration subcomplex at a level
    Homology {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        level: i64,
    },
    /// Knot Floer table of the complex itself (graded homology)
    Hfk {
        #[arg(long)]
        input: PathBuf,
    },
    /// Built-in torus knot tables and staircase complexes
    Torus {
        /// Table family: "2" for T(2, 2n+1) (needs --param), "37" for T(3, 7)
        #[arg(long)]
        family: Option<String>,
        /// Twisting parameter n for family 2
        #[arg(long, allow_hyphen_values = true)]
        param: Option<i64>,
        /// Emit the staircase complex of T(2, 2m+1) (mirror for m < 0) as JSON
        #[arg(long, allow_hyphen_values = true)]
        staircase: Option<i64>,
    },
    /// Knot Floer table of a cable of the input complex
    Cable {
        #[arg(long)]
        input: PathBuf,
        /// Cabling index, at least 2
        #[arg(long)]
        p: i64,
        /// Twisting parameter, nonzero; negative builds the mirror-side cable
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Projection parameter for p > 2
        #[arg(long = "c-prime", allow_hyphen_values = true)]
        c_prime: Option<i64>,
        /// Treat n as large even below the heuristic bound
        #[arg(long = "assume-large-n")]
        assume_large_n: bool,
        #[arg(long, value_enum, default_value = "grid")]
        format: Format,
    },
    /// Alexander polynomial of a complex or a torus knot
    Alexander {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Torus knot indices p q
        #[arg(long, num_args = 2, value_names = ["P", "Q"], allow_hyphen_values = true)]
        torus: Option<Vec<i64>>,
    },
    /// Cross-check a complex and one of its cables
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long = "c-prime", allow_hyphen_values = true)]
        c_prime: Option<i64>,
    },
    /// Re-render a saved table file
    Table {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "grid")]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_complex(path: &Path) -> Result<FilteredComplex, String> {
    parse_complex(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn status_label(status: CheckStatus, color: bool) -> String {
    match status {
        CheckStatus::Pass => paint("PASS", "32", color),
        CheckStatus::Warn => paint("WARN", "33", color),
        CheckStatus::Fail => paint("FAIL", "31", color),
    }
}

fn poly_lines(delta: &LaurentPoly) -> String {
    let terms: Vec<String> =
        delta.terms().map(|(e, c)| format!("[{e},\"{c}\"]")).collect();
    format!("{delta}\n[{}]", terms.join(","))
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Validate { input } => {
            let color = color_enabled();
            let cx = match parse_complex(&read_file(&input)?) {
                Ok(cx) => cx,
                Err(IoError::Complex(e)) => {
                    println!("structure {} {e}", status_label(CheckStatus::Fail, color));
                    println!("invalid");
                    return Ok(1);
                }
                Err(e) => return Err(format!("{}: {e}", input.display())),
            };
            let report = cx.validate();
            let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for check in &report.checks {
                let status =
                    if check.passed { CheckStatus::Pass } else { CheckStatus::Fail };
                let mut line = format!("{:<width$} {}", check.name, status_label(status, color));
                if let Some(detail) = &check.detail {
                    line.push_str(&format!(" {detail}"));
                }
                println!("{line}");
            }
            for warning in &report.warnings {
                println!("{} {warning}", paint("warning:", "33", color));
            }
            if report.is_valid() {
                println!("valid");
                Ok(0)
            } else {
                println!("invalid");
                Ok(1)
            }
        }

        Command::Homology { input, level } => {
            let cx = load_complex(&input)?;
            match cx.filtration_homology(level) {
                Ok(h) => {
                    println!("{h}");
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(1)
                }
            }
        }

        Command::Hfk { input } => {
            let cx = load_complex(&input)?;
            match cx.associated_graded() {
                Ok(table) => {
                    print!("{}", render_grid(&table));
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(1)
                }
            }
        }

        Command::Torus { family, param, staircase } => match (family, staircase) {
            (Some(_), Some(_)) => Err("choose one of --family and --staircase".into()),
            (None, None) => Err("one of --family or --staircase is required".into()),
            (None, Some(m)) => {
                let cx = staircase_t2(m).map_err(|e| e.to_string())?;
                print!("{}", write_complex(&cx));
                Ok(0)
            }
            (Some(family), None) => {
                let table = match family.as_str() {
                    "2" => {
                        let n = param.ok_or("--family 2 needs --param N")?;
                        hfk_torus_2(n)
                    }
                    "37" => {
                        if param.is_some() {
                            return Err("--family 37 takes no --param".into());
                        }
                        hfk_torus_3_7()
                    }
                    other => return Err(format!("unknown family {other:?}, expected 2 or 37")),
                };
                print!("{}", render_grid(&table));
                Ok(0)
            }
        },

        Command::Cable { input, p, n, c_prime, assume_large_n, format } => {
            let cx = load_complex(&input)?;
            let params = CableParams { p, n, c_prime, large_n_override: assume_large_n };
            let cable = match cable_hfk(&cx, &params) {
                Ok(c) => c,
                Err(e @ CableError::InvalidParams(_)) | Err(e @ CableError::MissingCPrime) => {
                    return Err(e.to_string());
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(1);
                }
            };
            match format {
                Format::Grid => print!("{}", render_cable_grid(&cable)),
                Format::Json => {
                    let q = p * n + 1;
                    let name = format!("({p},{q}) cable of {}", cx.name());
                    print!("{}", write_cable_table(&cable, Some(&name)));
                }
                Format::Csv => {
                    print!("{}", render_csv(&cable.table));
                    for w in &cable.warnings {
                        eprintln!("warning: {w}");
                    }
                }
            }
            Ok(0)
        }

        Command::Alexander { input, torus } => {
            let delta = match (input, torus) {
                (Some(_), Some(_)) => return Err("choose one of --input and --torus".into()),
                (None, None) => return Err("one of --input or --torus is required".into()),
                (Some(path), None) => {
                    let cx = load_complex(&path)?;
                    match cx.associated_graded() {
                        Ok(table) => euler_poly(&table),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return Ok(1);
                        }
                    }
                }
                (None, Some(pq)) => {
                    let (p, q) = (pq[0], pq[1]);
                    torus_alexander(p, q).map_err(|e| e.to_string())?
                }
            };
            println!("{}", poly_lines(&delta));
            Ok(0)
        }

        Command::Verify { input, p, n, c_prime } => {
            let cx = load_complex(&input)?;
            let params = match (p, n) {
                (None, None) => {
                    if c_prime.is_some() {
                        return Err("--c-prime needs --p and --n".into());
                    }
                    None
                }
                (Some(p), Some(n)) => {
                    Some(CableParams { p, n, c_prime, large_n_override: false })
                }
                _ => return Err("--p and --n go together".into()),
            };
            let report = run_verify(&cx, params.as_ref());
            let color = color_enabled();
            let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for check in &report.checks {
                println!(
                    "{:<width$} {} {}",
                    check.name,
                    status_label(check.status, color),
                    check.detail
                );
            }
            Ok(report.exit_code())
        }

        Command::Table { input, format } => {
            let saved = parse_table(&read_file(&input)?)
                .map_err(|e| format!("{}: {e}", input.display()))?;
            match format {
                Format::Grid => {
                    print!("{}", render_grid(&saved.table));
                    for w in &saved.warnings {
                        println!("warning: {w}");
                    }
                }
                Format::Csv => print!("{}", render_csv(&saved.table)),
                Format::Json => match (saved.valid_range, saved.assumptions) {
                    (Some(valid_range), Some(assumptions)) => {
                        let cable = hfk_cable::cable::CableTable {
                            table: saved.table,
                            valid_range,
                            assumptions,
                            warnings: saved.warnings,
                        };
                        print!("{}", write_cable_table(&cable, saved.name.as_deref()));
                    }
                    _ => print!("{}", write_table(&saved.table, saved.name.as_deref())),
                },
            }
            Ok(0)
        }
    }
}

//! Command-line front end: parse `.hcy`/`.aut` files, run invariant
//! pipelines, emit text/JSON reports.
//!
//! Exit codes: 0 success, 2 input/validation error, 3 internal assertion
//! failure (theorem-level integrity checks). JSON goes to stdout,
//! diagnostics to stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hcy::error::Error;
use hcy::fixtures;
use hcy::fracmat::FracMatrix;
use hcy::invariants::{
    self, alexander_rational, closing_alexander, closing_degree, mapping_torus,
    torsion_n2, torsion_n2_degree, DegreeValue,
};
use hcy::laurent::{Cocharacter, Vars};
use hcy::presentation::{
    from_mapping_class, parse_aut, stack, AdmissiblePresentation,
};

#[derive(Parser)]
#[command(
    name = "hcy",
    version,
    about = "Exact invariants of homology cylinders over a surface",
    after_help = "File formats: hcy v1, aut v1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Presentation file (.hcy); alternative to --preset
    file: Option<PathBuf>,
    /// Built-in preset: trivial, tauzeta, tausep, eg4, sl-trivial
    #[arg(long)]
    preset: Option<String>,
    /// Genus for the parametrized presets (trivial, sl-trivial)
    #[arg(long, default_value_t = 2)]
    genus: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Magnus matrix r₂ of a presentation
    Magnus {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the matrix as JSON instead of canonical text
        #[arg(long)]
        json: bool,
    },
    /// Degree reports: --what magnus|torsion|alex|closing
    Degree {
        #[command(flatten)]
        input: InputArgs,
        /// Cocharacter ψ as comma-separated integers (length 2g)
        #[arg(long)]
        psi: String,
        #[arg(long)]
        what: String,
    },
    /// Stack two presentations (first on the i₊ side) and write .hcy
    Stack {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the cylinder of a mapping class from an .aut file
    Mcg {
        autfile: PathBuf,
        /// Write the presentation here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Mapping-torus factorization report; ψ has length 2g+1 (λ last)
    Torus {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        psi: String,
    },
    /// Alexander polynomial of the closing: minor-gcd route vs product route
    Alex {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Validation, kernel identities and determinant-degree checks
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
}

fn load_input(input: &InputArgs) -> Result<AdmissiblePresentation, Error> {
    if let Some(name) = &input.preset {
        return fixtures::preset(name, input.genus);
    }
    let Some(path) = &input.file else {
        return Err(Error::Parse {
            line: 0,
            msg: "provide a .hcy file or --preset".into(),
        });
    };
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {}", path.display(), e),
    })?;
    AdmissiblePresentation::from_hcy(&text)
}

fn parse_psi(s: &str, expect_len: usize) -> Result<Cocharacter, Error> {
    let entries: Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    let entries = entries.map_err(|_| Error::Parse {
        line: 0,
        msg: format!("bad psi: {}", s),
    })?;
    if entries.len() != expect_len {
        return Err(Error::Parse {
            line: 0,
            msg: format!("psi must have {} entries, got {}", expect_len, entries.len()),
        });
    }
    Cocharacter::new(entries)
}

fn matrix_text(m: &FracMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format!("{}", m.at(i, j))).collect();
        out.push_str(&format!("[ {} ]\n", row.join(" , ")));
    }
    out
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Magnus { input, json } => {
            let p = load_input(&input)?;
            let marking = p.validate()?;
            let vars = Vars::gamma(2 * p.genus());
            let r = p.magnus(&marking, &vars)?;
            if json {
                println!("{}", r.to_json());
            } else {
                print!("{}", matrix_text(&r));
            }
            Ok(())
        }
        Command::Degree { input, psi, what } => {
            let p = load_input(&input)?;
            let marking = p.validate()?;
            let g2 = 2 * p.genus();
            let psi = parse_psi(&psi, g2)?;
            let vars = Vars::gamma(g2);
            let report = match what.as_str() {
                "magnus" => {
                    let det = p.magnus(&marking, &vars)?.det()?;
                    let lhs = DegreeValue::from_option(det.psi_degree(psi.entries()));
                    serde_json::json!({
                        "invariant": "magnus_det_degree",
                        "psi": psi.entries(),
                        "lhs": lhs.to_json(),
                        "components": {},
                        "consistent": true,
                    })
                }
                "torsion" => {
                    let d = torsion_n2_degree(&p, &psi)?;
                    serde_json::json!({
                        "invariant": "torsion_degree",
                        "psi": psi.entries(),
                        "lhs": d,
                        "components": {"class": torsion_n2(&p)?.to_json()},
                        "consistent": true,
                    })
                }
                "alex" => {
                    let delta = alexander_rational(&p)?;
                    let lhs = DegreeValue::from_option(delta.psi_degree(psi.entries()));
                    serde_json::json!({
                        "invariant": "alexander_degree",
                        "psi": psi.entries(),
                        "lhs": lhs.to_json(),
                        "components": {"delta": delta.to_json()},
                        "consistent": true,
                    })
                }
                "closing" => {
                    let rep = closing_degree(&p, &psi)?;
                    rep.to_json("closing_degree", &psi)
                }
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("unknown --what {} (magnus|torsion|alex|closing)", other),
                    })
                }
            };
            println!("{}", report);
            Ok(())
        }
        Command::Stack {
            file1,
            file2,
            output,
        } => {
            let read = |p: &PathBuf| -> Result<AdmissiblePresentation, Error> {
                let text = std::fs::read_to_string(p).map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("{}: {}", p.display(), e),
                })?;
                AdmissiblePresentation::from_hcy(&text)
            };
            let p1 = read(&file1)?;
            let p2 = read(&file2)?;
            let s = stack(&p1, &p2)?;
            s.validate()?;
            std::fs::write(&output, s.to_hcy()).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {}", output.display(), e),
            })?;
            eprintln!("wrote {}", output.display());
            Ok(())
        }
        Command::Mcg { autfile, output } => {
            let text = std::fs::read_to_string(&autfile).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {}", autfile.display(), e),
            })?;
            let phi = parse_aut(&text)?;
            let p = from_mapping_class(&phi)?;
            p.validate()?;
            match output {
                Some(path) => {
                    std::fs::write(&path, p.to_hcy()).map_err(|e| Error::Parse {
                        line: 0,
                        msg: format!("{}: {}", path.display(), e),
                    })?;
                    eprintln!("wrote {}", path.display());
                }
                None => print!("{}", p.to_hcy()),
            }
            Ok(())
        }
        Command::Torus { input, psi } => {
            let p = load_input(&input)?;
            let g2 = 2 * p.genus();
            let psi = parse_psi(&psi, g2 + 1)?;
            let rep = mapping_torus(&p, &psi)?;
            println!("{}", rep.to_json("mapping_torus_degree", &psi));
            Ok(())
        }
        Command::Alex { input } => {
            let p = load_input(&input)?;
            let rep = closing_alexander(&p)?;
            let gcd_json = match &rep.gcd_route {
                Some(g) => g.to_json(),
                None => serde_json::json!(null),
            };
            println!(
                "{}",
                serde_json::json!({
                    "invariant": "closing_alexander",
                    "gcd_route": gcd_json,
                    "product_route": rep.product_route.to_json(),
                    "equal_up_to_unit": rep.equal_up_to_unit,
                })
            );
            Ok(())
        }
        Command::Check { input } => {
            let p = load_input(&input)?;
            let results = run_check(&p)?;
            let ok = results.iter().all(|(_, pass)| *pass);
            let checks: Vec<serde_json::Value> = results
                .iter()
                .map(|(name, pass)| serde_json::json!({"check": name, "pass": pass}))
                .collect();
            println!(
                "{}",
                serde_json::json!({"invariant": "check", "checks": checks, "consistent": ok})
            );
            if ok {
                Ok(())
            } else {
                Err(Error::Parse {
                    line: 0,
                    msg: "check failed".into(),
                })
            }
        }
    }
}

/// The check battery: validation, the kernel identities (on σ₂-trivial
/// input), determinant-degree vanishing for sample cocharacters, and the
/// .hcy round trip.
fn run_check(p: &AdmissiblePresentation) -> Result<Vec<(String, bool)>, Error> {
    let mut out = Vec::new();
    let marking = p.validate()?;
    out.push(("validate".to_string(), true));
    let g2 = 2 * p.genus();
    let vars = Vars::gamma(g2);
    let r = p.magnus(&marking, &vars)?;
    let sigma_trivial = marking
        .sigma2
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)));
    if sigma_trivial {
        let k = FracMatrix::identity(&vars, g2).sub(&r);
        let u = invariants::one_minus_gamma_bar(&vars, g2);
        let v = invariants::zeta_bar_col(p.genus(), &vars);
        out.push(("kernel_row".to_string(), u.mul(&k).is_zero()));
        out.push(("kernel_col".to_string(), k.mul(&v).is_zero()));
    } else {
        out.push(("kernel_identities_skipped_sigma2_nontrivial".to_string(), true));
    }
    let det = r.det()?;
    let mut vanish = !det.is_zero();
    for i in 0..g2 {
        let mut e = vec![0i64; g2];
        e[i] = 1;
        let psi = Cocharacter::new(e)?;
        vanish &= det.psi_degree(psi.entries()) == Some(0);
    }
    let mut mixed = vec![1i64; g2];
    mixed[0] = 2;
    if let Ok(psi) = Cocharacter::new(mixed) {
        vanish &= det.psi_degree(psi.entries()) == Some(0);
    }
    out.push(("magnus_det_degree_zero".to_string(), vanish));
    let roundtrip = AdmissiblePresentation::from_hcy(&p.to_hcy())
        .map(|q| q == *p)
        .unwrap_or(false);
    out.push(("hcy_roundtrip".to_string(), roundtrip));
    Ok(out)
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Internal(_)) => {
            eprintln!("internal error: {}", e);
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

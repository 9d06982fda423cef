//! `loopbraid`: evaluate loop braid words, decide equality, and verify the
//! presentation through the lifted Artin representation.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use loopbraid::golden::run_golden;
use loopbraid::{
    artin_conditions, conserves_flux, dahm, equal_in_group, evaluate, goldsmith_form,
    verify_relations, AggMorphism, BigInt, BraidWord, Error,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "loopbraid", version, about)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Rank {
    /// Number of circles.
    #[arg(short = 'n', long = "rank", value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Print the automorphism of M_n assigned to a word.
    Eval {
        #[command(flatten)]
        rank: Rank,
        word: String,
    },
    /// Decide whether two words are the same group element.
    Equal {
        #[command(flatten)]
        rank: Rank,
        first: String,
        second: String,
    },
    /// Verify every defining relation at rank n; fails if any does not hold.
    Relations {
        #[command(flatten)]
        rank: Rank,
    },
    /// Report the conjugating form, Artin conditions and flux for a word.
    Check {
        #[command(flatten)]
        rank: Rank,
        word: String,
    },
    /// Recompute the rank-3 hand-worked relation chains.
    Selftest,
    /// Re-read an automorphism printout (file or stdin) and print it canonically.
    #[command(hide = true)]
    Parse { path: Option<String> },
}

enum Failure {
    Input(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn parse_word(text: &str, rank: &Rank) -> Result<BraidWord, Failure> {
    BraidWord::parse(text, rank.n as usize).map_err(|e| Failure::Input(format!("in `{text}`: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { rank, word } => {
            let w = parse_word(&word, &rank)?;
            let image = evaluate::<BigInt>(&w)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "word": w.to_string(), "automorphism": image.forward().to_json() })
                );
            } else {
                print!("{image}");
            }
        }
        Command::Equal {
            rank,
            first,
            second,
        } => {
            let (u, v) = (parse_word(&first, &rank)?, parse_word(&second, &rank)?);
            let equal = equal_in_group::<BigInt>(&u, &v)?;
            if cli.json {
                println!("{}", json!({ "equal": equal }));
            } else {
                println!("{}", if equal { "equal" } else { "not-equal" });
            }
        }
        Command::Relations { rank } => {
            let n = rank.n as usize;
            if n < 2 {
                return Err(Failure::Input("relations need rank at least 2".into()));
            }
            let report = verify_relations::<BigInt>(n)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
            if !report.all_hold() {
                return Err(Failure::Check);
            }
        }
        Command::Check { rank, word } => {
            let w = parse_word(&word, &rank)?;
            let free = dahm(&w)?;
            let form = goldsmith_form(&free);
            let (conjugating, boundary) = artin_conditions(&free);
            let flux = conserves_flux(&loopbraid::evaluate_morphism::<BigInt>(&w)?);
            if cli.json {
                let form_json = form.as_ref().map(|f| {
                    json!({
                        "permutation": f.permutation,
                        "signs": f.signs,
                        "conjugators": f.conjugators.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                    })
                });
                println!(
                    "{}",
                    json!({
                        "word": w.to_string(),
                        "goldsmith_form": form_json,
                        "artin_conjugating": conjugating,
                        "artin_product_fixed": boundary,
                        "flux_conserved": flux,
                    })
                );
            } else {
                match &form {
                    Some(f) => print!("{f}"),
                    None => println!("NOT IN FORM"),
                }
                println!("artin conjugating: {conjugating}");
                println!("artin product fixed: {boundary}");
                println!("flux conserved: {flux}");
            }
        }
        Command::Selftest => {
            let report = run_golden()?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "passed": report.all_ok(),
                        "steps": report.steps.len(),
                        "failures": report.steps.iter().filter(|s| !s.ok()).map(|s| json!({
                            "relation": s.relation, "word": s.word, "basis": s.basis,
                            "step": s.step, "expected": s.expected, "computed": s.computed,
                        })).collect::<Vec<_>>(),
                    })
                );
            } else {
                print!("{report}");
            }
            if !report.all_ok() {
                return Err(Failure::Check);
            }
        }
        Command::Parse { path } => {
            let text = match path {
                Some(p) => {
                    std::fs::read_to_string(&p).map_err(|e| Failure::Input(format!("{p}: {e}")))?
                }
                None => {
                    let mut s = String::new();
                    std::io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| Failure::Input(e.to_string()))?;
                    s
                }
            };
            let f = AggMorphism::parse(&text)?;
            if cli.json {
                println!("{}", f.to_json());
            } else {
                print!("{f}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

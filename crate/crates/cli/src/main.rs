//! `heisid`: command-line front end.
//!
//! Exit codes: `0` for a positive result (identity reachable, witness valid,
//! solution found, all checks pass), `1` for a negative one, `2` for input or
//! usage errors.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use heisid::decider::{decide_with, DecideOptions, Factor, Product, Route, Verdict};
use heisid::diophantine::solve_homogeneous;
use heisid::encodings::{pcp_to_generators, pcp_witness, verify_sl3q_embedding};
use heisid::format;
use heisid::oracle::{bfs_identity, SearchConfig, SearchOutcome};
use heisid::Error;

#[derive(Parser, Debug)]
#[command(name = "heisid", version, about = "Identity problem for Heisenberg matrix semigroups")]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    format: OutputFormat,

    /// Worker threads for independent subproblems.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the identity is a product of the generators.
    Decide {
        /// Instance file, or `-` for stdin.
        input: PathBuf,
    },
    /// Re-multiply a witness against an instance.
    WitnessVerify {
        input: PathBuf,
        /// Verdict or bare witness file.
        witness: PathBuf,
    },
    /// Bounded breadth-first search for a short identity product.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        /// Explore every sequence instead of merging equal elements.
        #[arg(long)]
        no_dedup: bool,
        /// Give up after storing this many states.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Solve a homogeneous system `A y = 0` over the non-negative integers.
    Dioph { input: PathBuf },
    /// Emit the SL(4, Z) generators for a PCP instance.
    EncodePcp { input: PathBuf },
    /// Build an identity product of SL(4, Z) generators from a PCP solution.
    PcpWitness {
        input: PathBuf,
        /// Letter names or 0-based indices, separated by spaces or commas.
        #[arg(long)]
        solution: String,
    },
    /// Check the SL(3, Q) embedding of a direct product of free monoids.
    VerifyEmbedding,
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn factor_text(f: &Factor) -> String {
    match f {
        Factor::Run { generator, exponent } => format!("g{generator}^{exponent}"),
        Factor::Repeat { body, times } => {
            let inner: Vec<String> = body.iter().map(factor_text).collect();
            format!("({})^{times}", inner.join(" "))
        }
    }
}

fn product_text(p: &Product) -> String {
    p.factors().iter().map(factor_text).collect::<Vec<_>>().join(" ")
}

fn verdict_text(v: &Verdict) -> String {
    let mut out = String::new();
    match &v.witness {
        Some(w) => {
            out.push_str("YES\n");
            match &v.route {
                Some(Route::Commuting { clique }) => out.push_str(&format!("commuting generators {clique:?}\n")),
                Some(Route::NonCommuting { i, j }) => out.push_str(&format!("non-commuting pair ({i}, {j})\n")),
                None => {}
            }
            out.push_str(&format!("witness: {}\n", product_text(w.product())));
        }
        None => out.push_str("NO\n"),
    }
    out
}

struct Report {
    json: Value,
    text: String,
    success: bool,
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Decide { input } => {
            let gens = format::parse_instance(&read_input(input)?)?;
            let v = decide_with(&gens, &DecideOptions { jobs: cli.jobs.max(1) })?;
            Ok(Report { json: format::verdict_to_json(&v), text: verdict_text(&v), success: v.is_yes() })
        }
        Command::WitnessVerify { input, witness } => {
            let gens = format::parse_instance(&read_input(input)?)?;
            let product = format::parse_witness(&read_input(witness)?)?;
            let value = match product.evaluate(gens.generators()) {
                Ok(t) => t,
                Err(e @ Error::IndexOutOfRange { .. }) => bail!("witness: {e}"),
                Err(e) => return Err(e.into()),
            };
            let ok = value.is_identity();
            Ok(Report {
                json: json!({ "identity": ok, "product": format::triple_to_json(&value) }),
                text: if ok {
                    "identity\n".into()
                } else {
                    format!("not the identity: {}\n", format::triple_to_json(&value))
                },
                success: ok,
            })
        }
        Command::Oracle { input, max_len, no_dedup, budget } => {
            let gens = format::parse_instance(&read_input(input)?)?;
            let cfg = SearchConfig { max_length: (*max_len).max(1), dedup: !no_dedup, state_budget: *budget };
            Ok(match bfs_identity(gens.generators(), &cfg) {
                SearchOutcome::Found(seq) => Report {
                    text: format!("found: {}\n", seq.iter().map(|g| format!("g{g}")).collect::<Vec<_>>().join(" ")),
                    json: json!({ "found": true, "sequence": seq }),
                    success: true,
                },
                SearchOutcome::NotFound { max_length } => Report {
                    text: format!("not found <= {max_length}\n"),
                    json: json!({ "found": false, "max_length": max_length }),
                    success: false,
                },
                SearchOutcome::BudgetExhausted { depth, states } => Report {
                    text: format!("budget exhausted after {states} states; no identity of length <= {depth}\n"),
                    json: json!({ "found": false, "budget_exhausted": true, "complete_depth": depth, "states": states }),
                    success: false,
                },
            })
        }
        Command::Dioph { input } => {
            let sys = format::parse_system(&read_input(input)?)?;
            Ok(match solve_homogeneous(&sys) {
                Some(sol) => {
                    let y: Vec<String> = sol.y.iter().map(ToString::to_string).collect();
                    Report {
                        text: format!("solution: {}\n", y.join(" ")),
                        json: json!({ "solution": y }),
                        success: true,
                    }
                }
                None => Report { text: "no solution\n".into(), json: json!({ "solution": null }), success: false },
            })
        }
        Command::EncodePcp { input } => {
            let inst = format::parse_pcp(&read_input(input)?)?;
            let set = pcp_to_generators(&inst);
            let mut text = String::new();
            for g in &set.generators {
                text.push_str(&format!("{}\n", g.label));
                for r in g.matrix.to_rows() {
                    let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                    text.push_str(&format!("  {}\n", cells.join(" ")));
                }
            }
            Ok(Report { json: format::matrix_list_to_json(&set), text, success: true })
        }
        Command::PcpWitness { input, solution } => {
            let inst = format::parse_pcp(&read_input(input)?)?;
            let solution = format::parse_pcp_solution(&inst, solution)?;
            let set = pcp_to_generators(&inst);
            match pcp_witness(&inst, &set, &solution) {
                Ok(seq) => {
                    let labels: Vec<String> = seq.iter().map(|&i| set.generators[i].label.to_string()).collect();
                    Ok(Report {
                        text: format!("{}\n", labels.join(" ")),
                        json: json!({ "sequence": seq, "labels": labels, "identity": true }),
                        success: true,
                    })
                }
                Err(e @ (Error::NotAPcpSolution(_) | Error::Precondition(_))) => Ok(Report {
                    text: format!("{e}\n"),
                    json: json!({ "identity": false, "reason": e.to_string() }),
                    success: false,
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::VerifyEmbedding => {
            let r = verify_sl3q_embedding();
            let text = r
                .checks
                .iter()
                .map(|c| format!("{} {}  ({})\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
                .collect();
            let checks: Vec<Value> =
                r.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect();
            Ok(Report {
                json: json!({ "all_passed": r.all_passed(), "checks": checks }),
                text,
                success: r.all_passed(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                OutputFormat::Json => println!("{}", report.json),
                OutputFormat::Text => print!("{}", report.text),
            }
            ExitCode::from(if report.success { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

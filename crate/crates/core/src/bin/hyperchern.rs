use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperchern::charcls::{lambda_formula, MAX_CACHED_RANK};
use hyperchern::golden::{case_entries, run_checks, REGISTRY};
use hyperchern::pipeline::CASES;
use hyperchern::report::{ReportDocument, ReportEntry};
use hyperchern::ulrich::solve_ulrich_chern;
use serde_json::json;

#[derive(Parser)]
#[command(name = "hyperchern", version, about = "Exact Chern class checks on hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run reference checks.
    Verify {
        #[command(subcommand)]
        scope: Scope,
    },
    /// Print symbolic formulas.
    Chern {
        #[command(subcommand)]
        what: ChernCmd,
    },
}

#[derive(Subcommand)]
enum Scope {
    /// Every check.
    All {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One of the four (n, r) cases.
    Case {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Checks whose id equals or extends ID (e.g. w7.9, xne.6, case.6.5).
    Lemma {
        id: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ChernCmd {
    /// c_k(Λ^p F) in terms of c1..c_rank.
    Lambda {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        power: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Chern classes forced on a rank-r Ulrich bundle on X_n.
    Ulrich {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(entries: Vec<ReportEntry>, format: Format) -> ExitCode {
    let doc = ReportDocument::new(entries);
    match format {
        Format::Json => print!("{}", doc.to_json()),
        Format::Text => print!("{}", doc.to_text()),
    }
    ExitCode::from(doc.exit_code())
}

fn verify(scope: Scope) -> ExitCode {
    match scope {
        Scope::All { format } => emit(run_checks(None), format),
        Scope::Case { n, r, format } => {
            if !CASES.contains(&(n, r)) {
                return usage_error("cases are (6,4), (6,5), (8,6), (8,7)");
            }
            emit(case_entries(n, r), format)
        }
        Scope::Lemma { id, format } => {
            let entries = run_checks(Some(&id));
            if entries.is_empty() {
                eprintln!("error: unknown id {id:?}; known ids:");
                for known in REGISTRY {
                    eprintln!("  {known}");
                }
                return ExitCode::from(2);
            }
            emit(entries, format)
        }
    }
}

fn chern(what: ChernCmd) -> ExitCode {
    match what {
        ChernCmd::Lambda { rank, power, max_degree } => {
            if rank == 0 || rank > MAX_CACHED_RANK {
                return usage_error(&format!("rank must be in 1..={MAX_CACHED_RANK}"));
            }
            if max_degree > 8 {
                return usage_error("max-degree must be at most 8");
            }
            let f = match lambda_formula(rank, power, max_degree) {
                Ok(f) => f,
                Err(e) => return usage_error(&e.to_string()),
            };
            println!("rank(Λ^{power} F) = {}", f.output_rank());
            for k in 0..=max_degree {
                match f.chern_poly(k) {
                    Ok(p) => println!("c{k} = {}", p.to_factored_text()),
                    Err(e) => return usage_error(&e.to_string()),
                }
            }
            ExitCode::SUCCESS
        }
        ChernCmd::Ulrich { n, r, format } => {
            let sol = match solve_ulrich_chern(n, r) {
                Ok(s) => s,
                Err(e) => return usage_error(&e.to_string()),
            };
            let mut bad: BTreeMap<usize, Vec<String>> = BTreeMap::new();
            for (i, d) in sol.non_integral_at(3, 20) {
                bad.entry(i).or_default().push(d.to_string());
            }
            for (i, ds) in bad {
                eprintln!("warning: e{i} is not an integer at d = {}", ds.join(", "));
            }
            let classes: Vec<String> = sol.classes().iter().map(|e| e.to_factored_text()).collect();
            match format {
                Format::Json => {
                    let doc = json!({ "n": n, "r": r, "e": classes });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
                Format::Text => {
                    for (i, c) in classes.iter().enumerate() {
                        let note = if i + 1 > r { "  (formal, above the rank)" } else { "" };
                        println!("e{} = {c}{note}", i + 1);
                    }
                }
            }
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { scope } => verify(scope),
        Command::Chern { what } => chern(what),
    }
}

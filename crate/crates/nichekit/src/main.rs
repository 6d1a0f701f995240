use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use nichekit::enumerate::{
    niche_spectrum, partitions, Orientations, DEFAULT_CROSS_PAIR_GUARD, DEFAULT_REALIZE_GUARD,
};
use nichekit::graph::Partition;
use nichekit::io;
use nichekit::niche::niche_graph;
use nichekit::props::{canonical_form, CanonicalForm};
use nichekit::realize::{decide_with_guard, Answer};
use nichekit::verify::{verify, TheoremId};
use nichekit::Graph;

const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_INPUT_ERROR: u8 = 3;
const EXIT_FAIL: u8 = 4;

#[derive(Parser)]
#[command(name = "nichekit", version, about = "Niche graphs of multipartite tournaments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the niche graph of a tournament file
    Niche {
        /// Tournament file (text format)
        file: PathBuf,
        /// Emit DOT instead of the graph text format
        #[arg(long)]
        dot: bool,
        /// Emit JSON instead of the graph text format
        #[arg(long, conflicts_with = "dot")]
        json: bool,
    },
    /// Decide niche-realizability of (G, k)
    Realize {
        /// Graph file (text format)
        file: PathBuf,
        /// Number of partite sets (k >= 3)
        #[arg(long)]
        k: usize,
        /// Vertex cap for the brute-force fallback
        #[arg(long)]
        guard: Option<usize>,
        /// Emit the verdict as JSON
        #[arg(long)]
        json: bool,
    },
    /// List all orientations of a complete multipartite graph
    Enumerate {
        #[command(flatten)]
        parts: PartsArg,
        /// Print only the number of orientations
        #[arg(long)]
        count_only: bool,
    },
    /// Multiset of canonical niche graphs over all orientations
    Spectrum {
        /// Comma-separated part sizes, e.g. 2,1,1
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        /// Aggregate over all partitions of N vertices ...
        #[arg(long, requires = "k", conflicts_with = "parts")]
        n: Option<usize>,
        /// ... into K parts
        #[arg(long, requires = "n")]
        k: Option<usize>,
    },
    /// Re-verify the characterization theorems by exhaustive enumeration
    Verify {
        /// Theorem id (thm2.1, thm2.2, cor2.1, thm3.1, thm3.2, thm4.1,
        /// thm4.2, lem4.3, lem4.5, thm4.3) or `all`
        theorem: String,
        /// Largest vertex count to enumerate
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Worker threads for the orientation scan
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args)]
struct PartsArg {
    /// Comma-separated part sizes, e.g. 2,1,1
    #[arg(long, value_delimiter = ',', required = true)]
    parts: Vec<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Niche { file, dot, json } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let t = io::parse_tournament(&text).map_err(|e| format!("{}: {e}", file.display()))?;
            let niche = niche_graph(t.digraph());
            if dot {
                print!("{}", io::graph_to_dot(&niche));
            } else if json {
                println!("{}", io::graph_to_json(&niche));
            } else {
                print!("{}", io::graph_to_text(&niche));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Realize {
            file,
            k,
            guard,
            json,
        } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let g = io::parse_graph(&text).map_err(|e| format!("{}: {e}", file.display()))?;
            let guard = guard.or_else(env_guard).unwrap_or(DEFAULT_REALIZE_GUARD);
            let verdict = decide_with_guard(&g, k, guard).map_err(|e| e.to_string())?;
            if json {
                println!("{}", io::verdict_to_json(&verdict));
            } else {
                match verdict.answer {
                    Answer::Yes => {
                        println!("YES ({})", verdict.citation.expect("yes carries a citation"));
                        print!(
                            "{}",
                            io::tournament_to_text(
                                verdict.witness.as_ref().expect("yes carries a witness")
                            )
                        );
                    }
                    Answer::No => {
                        println!("NO ({})", verdict.citation.expect("no carries a citation"));
                    }
                    Answer::Unknown => {
                        println!(
                            "UNKNOWN: {}",
                            verdict.reason.as_deref().unwrap_or("uncharacterized")
                        );
                    }
                }
            }
            Ok(match verdict.answer {
                Answer::Yes => ExitCode::SUCCESS,
                Answer::No => ExitCode::from(EXIT_NO),
                Answer::Unknown => ExitCode::from(EXIT_UNKNOWN),
            })
        }
        Command::Enumerate { parts, count_only } => {
            let p = Partition::new(&parts.parts).map_err(|e| e.to_string())?;
            let o = Orientations::with_guard(&p, DEFAULT_CROSS_PAIR_GUARD)
                .map_err(|e| e.to_string())?;
            if count_only {
                println!("{}", o.count());
            } else {
                for t in o.iter() {
                    println!("{}", io::tournament_to_text(&t));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { parts, n, k } => {
            let partition_list: Vec<Partition> = match (parts, n, k) {
                (Some(sizes), None, None) => {
                    vec![Partition::new(&sizes).map_err(|e| e.to_string())?]
                }
                (None, Some(n), Some(k)) => partitions(n, k).map_err(|e| e.to_string())?,
                _ => return Err("pass either --parts or both --n and --k".into()),
            };
            let mut total: BTreeMap<CanonicalForm, u64> = BTreeMap::new();
            let mut reps: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
            for p in &partition_list {
                let spectrum =
                    niche_spectrum(p, DEFAULT_CROSS_PAIR_GUARD, false).map_err(|e| e.to_string())?;
                // A representative per form, for readable output.
                let o = Orientations::with_guard(p, DEFAULT_CROSS_PAIR_GUARD)
                    .map_err(|e| e.to_string())?;
                for t in o.iter() {
                    let g = niche_graph(t.digraph());
                    let form = canonical_form(&g).map_err(|e| e.to_string())?;
                    reps.entry(form).or_insert(g);
                }
                for (form, count) in spectrum {
                    *total.entry(form).or_insert(0) += count;
                }
            }
            for (form, count) in &total {
                let rep = &reps[form];
                let edges: Vec<String> = rep
                    .edges()
                    .iter()
                    .map(|(u, v)| format!("{u}-{v}"))
                    .collect();
                println!("{count}\tn={} edges={{{}}}", rep.n(), edges.join(","));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            max_n,
            threads,
        } => {
            if let Some(t) = threads {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                    .map_err(|e| e.to_string())?;
            }
            let ids: Vec<TheoremId> = if theorem == "all" {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse()?]
            };
            let mut all_passed = true;
            for id in ids {
                let report = verify(id, max_n);
                println!("{report}");
                all_passed &= report.passed;
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            })
        }
    }
}

fn env_guard() -> Option<usize> {
    std::env::var("NICHEKIT_GUARD").ok()?.parse().ok()
}

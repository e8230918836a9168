use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use antiforcing::generators::{
    enumerate_hex_systems, gen_named, gen_truncated_parallelogram, glue_af2, glue_presets, Named,
};
use antiforcing::io::{read_instance, write_graph, write_hex};
use antiforcing::report::compute_report;
use antiforcing::verify::{Status, Verifier, VerifyOptions};
use antiforcing::{Config, Error, Limits};

#[derive(Parser)]
#[command(name = "antiforcing", version, about = "Forcing and anti-forcing invariants of perfect matchings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Caps {
    #[arg(long, default_value_t = 1_000_000)]
    max_matchings: usize,
    #[arg(long, default_value_t = 1_000_000)]
    max_cycles: usize,
    /// Reserved; every computation is deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

impl Caps {
    fn config(self) -> Config {
        Config::with_limits(Limits {
            max_matchings: self.max_matchings,
            max_cycles: self.max_cycles,
        })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute invariants of a .graph or .hex file.
    Compute {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated invariant names.
        #[arg(long, value_delimiter = ',', required = true)]
        inv: Vec<String>,
        /// Comma-separated suite ids to check on this instance.
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Run a property-check suite (or `all`) over the generated corpus.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_cells: usize,
        /// Print every instance, not just failures.
        #[arg(long)]
        verbose: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Write an instance (or a corpus) in canonical form.
    Generate {
        family: Family,
        /// Row lengths, a name, a cell count or a preset number.
        params: String,
        /// Output file; a directory for `polyhex-corpus`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum Family {
    TruncPara,
    Named,
    PolyhexCorpus,
    GluePreset,
}

enum Failure {
    Lib(Error),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inapplicable(_) | Error::NoPerfectMatching | Error::NotBipartite => 3,
        Error::LimitExceeded { .. } => 4,
        _ => 2,
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn bad_params(p: &str) -> Failure {
    Failure::Lib(Error::Parse {
        line: 0,
        msg: format!("bad parameters `{p}`"),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Compute {
            input,
            inv,
            check,
            out,
            caps,
        } => {
            let inst = read_instance(&input)?;
            let id = input
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let names: Vec<&str> = inv.iter().map(|s| s.trim()).collect();
            let checks: Vec<&str> = check.iter().map(|s| s.trim()).collect();
            let report = compute_report(&id, &inst, &names, &checks, &caps.config())?;
            write_out(out.as_deref(), &report.to_json())?;
            if report.checks.iter().any(|c| c.status == Status::Fail) {
                return Err(Failure::Verify);
            }
        }
        Cmd::Verify {
            suite,
            max_cells,
            verbose,
            caps,
        } => {
            let v = Verifier::new(VerifyOptions {
                max_cells,
                config: caps.config(),
            });
            let mut failed = false;
            for r in v.run(&suite)? {
                for x in &r.results {
                    if verbose || x.status == Status::Fail {
                        let status = match x.status {
                            Status::Pass => "pass",
                            Status::Fail => "FAIL",
                            Status::Skipped => "skip",
                        };
                        println!("{} {} {status}", r.suite, x.instance);
                    }
                    if let Some(c) = &x.counterexample {
                        println!("  counterexample: {}", serde_json::to_string(c).unwrap());
                    }
                }
                println!(
                    "{}: {} passed, {} failed, {} skipped",
                    r.suite, r.passed, r.failed, r.skipped
                );
                failed |= !r.ok();
            }
            if failed {
                return Err(Failure::Verify);
            }
        }
        Cmd::Generate {
            family,
            params,
            out,
        } => match family {
            Family::TruncPara => {
                let rows = params
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad_params(&params))?;
                let h = gen_truncated_parallelogram(&rows)?;
                write_out(out.as_deref(), &write_hex(h.cells()))?;
            }
            Family::Named => {
                let text = match gen_named(&params)? {
                    Named::Graph(g) => write_graph(&g),
                    Named::Hex(h) => write_hex(h.cells()),
                };
                write_out(out.as_deref(), &text)?;
            }
            Family::GluePreset => {
                let k: usize = params.trim().parse().map_err(|_| bad_params(&params))?;
                let presets = glue_presets();
                let spec = k
                    .checked_sub(1)
                    .and_then(|i| presets.get(i))
                    .ok_or_else(|| bad_params(&params))?;
                write_out(out.as_deref(), &write_hex(glue_af2(spec)?.cells()))?;
            }
            Family::PolyhexCorpus => {
                let n: usize = params.trim().parse().map_err(|_| bad_params(&params))?;
                let systems = enumerate_hex_systems(n)?;
                match out {
                    Some(dir) => {
                        std::fs::create_dir_all(&dir)
                            .map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
                        for (i, h) in systems.iter().enumerate() {
                            let path = dir.join(format!("polyhex-{n}-{i:04}.hex"));
                            write_out(Some(&path), &write_hex(h.cells()))?;
                        }
                    }
                    None => {
                        for (i, h) in systems.iter().enumerate() {
                            print!("# polyhex-{n}-{i:04}\n{}", write_hex(h.cells()));
                        }
                    }
                }
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quadwalk::classify::{
    census, guess_model, model_report, run_suite, sweep, tally, GuessKind, ModelOptions, Suite, SweepOptions,
};
use quadwalk::group::{DEFAULT_BOUND, DEFAULT_DEGREE_CAP};
use quadwalk::model::Model;
use quadwalk::Error;

#[derive(Parser)]
#[command(name = "quadwalk", version, about = "Quarter-plane walks with multiplicities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count raw, interesting and canonical models with multiplicities up to --max-mult.
    Census {
        #[arg(long, default_value_t = 3)]
        max_mult: u32,
        /// Expected number of canonical classes; exit 1 on mismatch.
        #[arg(long)]
        expect: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Group, families and orbit sum of every canonical class, as JSONL.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_mult: u32,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        group_bound: u32,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        resume: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Also guess a recurrence for f(0,0,t) of finite-group classes from this many terms.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Report on a single model given as eight comma-separated multiplicities.
    Model {
        #[arg(allow_hyphen_values = true)]
        model: String,
        #[arg(long, default_value_t = 12)]
        terms: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        group_bound: u32,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
        #[arg(long)]
        guess: bool,
        /// Write the report as JSON to this file ("-" for stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite: d4, d6, d8, d10, kernel, funceq or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        /// Write one JSON record per check to this file ("-" for stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Guess equations for f(0,0,t) of a model and check them on a quarter more terms.
    Guess {
        #[arg(allow_hyphen_values = true)]
        model: String,
        #[arg(long, default_value_t = 60)]
        terms: usize,
        /// auto, algebraic, recurrence or ode.
        #[arg(long, default_value = "auto")]
        kind: String,
    },
}

fn code(e: &Error) -> ExitCode {
    match e {
        Error::Parse { .. } | Error::Cache(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {}", e);
    code(&e)
}

fn writer(path: &PathBuf) -> std::io::Result<Box<dyn Write>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(std::io::stdout()))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Census { max_mult, expect, jobs } => {
            set_jobs(jobs);
            let r = census(max_mult);
            println!("{}", r);
            if let Some(e) = expect {
                if e != r.classes {
                    eprintln!("expected {} classes, found {}", e, r.classes);
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Cmd::Sweep {
            max_mult,
            group_bound,
            degree_cap,
            out,
            resume,
            jobs,
            terms,
        } => {
            if resume && out.is_none() {
                return Err(Error::Cache("--resume needs --out".into()));
            }
            let o = sweep(&SweepOptions {
                max_mult,
                group_bound,
                degree_cap,
                out,
                resume,
                jobs,
                guess_terms: terms,
            })?;
            if o.reused > 0 {
                println!("reused {} cached records", o.reused);
            }
            println!("{}", o.summary);
        }
        Cmd::Model {
            model,
            terms,
            group_bound,
            degree_cap,
            guess,
            out,
        } => {
            let m: Model = model.parse()?;
            let r = model_report(
                &m,
                &ModelOptions {
                    terms,
                    group_bound,
                    degree_cap,
                    guess,
                },
            )?;
            println!("{}", r);
            if let Some(p) = out {
                let mut w = writer(&p)?;
                writeln!(w, "{}", serde_json::to_string(&r).map_err(|e| Error::Io(e.to_string()))?)?;
            }
            if r.functional_equation.is_fail() {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Verify { suite, terms, out, jobs } => {
            let s: Suite = suite.parse()?;
            set_jobs(jobs);
            let recs = run_suite(s, terms);
            for r in &recs {
                println!("{:<8} {:<10} {:<34} {}", r.tag, r.status, r.check, r.model);
            }
            let (pass, failed, skipped) = tally(&recs);
            println!("{} checks: {} pass, {} fail, {} skipped", recs.len(), pass, failed, skipped);
            if let Some(p) = out {
                let mut w = writer(&p)?;
                for r in &recs {
                    writeln!(w, "{}", serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?)?;
                }
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Guess { model, terms, kind } => {
            let m: Model = model.parse()?;
            let k: GuessKind = kind.parse()?;
            let found = guess_model(&m, terms, k);
            if found.is_empty() {
                println!("no equation found within the bounds");
            }
            let mut ok = true;
            for (e, fit) in &found {
                println!("{:?} (order {}, degree {}, spare {}): {}", e.kind, e.effective_order(), e.effective_degree(), e.spare, e);
                println!("  checked on {} terms: {}", e.extended_terms(), if *fit { "pass" } else { "fail" });
                ok &= *fit;
            }
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(e) => fail(e),
    }
}

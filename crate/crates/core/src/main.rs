use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use operadlab::arith::{rational, Rational};
use operadlab::lattice::check_delta;
use operadlab::operad::{Membership, RelationDoc, RenderOptions};
use operadlab::pipelines::{self, PipelineOptions, PipelineReport};

#[derive(Parser, Debug)]
#[command(name = "operadlab", version, about = "Exact deformation computations for dendriform and diassociative operads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a pipeline (or `all`) and write its report.
    Run {
        pipeline: String,
        #[command(flatten)]
        common: Common,
        /// LLL parameter in (1/4, 1], e.g. 3/4.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Run every acceptance check; exit status 1 if any fails.
    Verify {
        #[arg(long, default_value = "all")]
        pipeline: String,
        /// Specialization point; defaults to checking both 0 and 1.
        #[arg(long)]
        q: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Pretty-print a relation JSON file (one document or an array).
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        unicode: bool,
    },
}

#[derive(clap::Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = MembershipArg::Field)]
    membership: MembershipArg,
    #[arg(long)]
    unicode: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MembershipArg {
    Ring,
    Field,
}

enum Failure {
    Checks,
    Input(String),
}

impl From<operadlab::Error> for Failure {
    fn from(e: operadlab::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn options(common: &Common, delta: Option<Rational>) -> PipelineOptions {
    PipelineOptions {
        delta,
        membership: match common.membership {
            MembershipArg::Ring => Membership::Ring,
            MembershipArg::Field => Membership::Field,
        },
        render: RenderOptions { unicode: common.unicode },
    }
}

fn parse_rational_arg(flag: &str, text: &str) -> Result<Rational, Failure> {
    rational(text).map_err(|e| Failure::Input(format!("--{flag}: {e}")))
}

fn text_report(rep: &PipelineReport, out: &mut String) {
    let _ = writeln!(out, "pipeline {} ({} ms)", rep.pipeline, rep.elapsed_ms);
    for c in &rep.checks {
        let status = match (c.pass, c.informational) {
            (true, _) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "note",
        };
        let _ = writeln!(out, "  {status}  {:<48} {}", c.name, c.detail);
    }
    for (k, v) in &rep.summary {
        let _ = writeln!(out, "  {k}: {v}");
    }
    for (name, m) in &rep.matrices.0 {
        let _ = writeln!(out, "  matrix {name}: {}x{} over {}", m.rows, m.cols, m.ring);
    }
    for r in &rep.relations {
        let _ = writeln!(out, "  {}", r.text.as_deref().unwrap_or_default());
    }
}

fn csv_report(rep: &PipelineReport, out: &mut String) {
    for (name, doc) in &rep.matrices.0 {
        let _ = writeln!(out, "# {} {}", rep.pipeline, name);
        for row in &doc.entries {
            let cells: Vec<String> = row.iter().map(|e| csv_cell(e)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
    }
}

fn csv_cell(e: &str) -> String {
    if e.contains([',', ' ', '"']) {
        format!("\"{}\"", e.replace('"', "\"\""))
    } else {
        e.to_string()
    }
}

fn emit(reports: &[PipelineReport], common: &Common) -> Result<(), Failure> {
    let mut out = String::new();
    match common.format {
        Format::Json => {
            let json = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(reports)
            };
            out = json.map_err(|e| Failure::Input(e.to_string()))?;
            out.push('\n');
        }
        Format::Text => reports.iter().for_each(|r| text_report(r, &mut out)),
        Format::Csv => reports.iter().for_each(|r| csv_report(r, &mut out)),
    }
    match &common.out {
        Some(path) => std::fs::write(path, out)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn run_selected(names: &[&str], opts: &PipelineOptions) -> Result<Vec<PipelineReport>, Failure> {
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = names.iter().map(|n| s.spawn(move || pipelines::run(n, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("pipeline thread")).collect()
    });
    results.into_iter().map(|r| r.map_err(Failure::from)).collect()
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Run { pipeline, common, delta } => {
            let delta = match delta {
                Some(d) => {
                    let d = parse_rational_arg("delta", &d)?;
                    check_delta(&d)?;
                    Some(d)
                }
                None => None,
            };
            let names = pipelines::expand_selection(&pipeline)?;
            let reports = run_selected(&names, &options(&common, delta))?;
            emit(&reports, &common)?;
            if reports.iter().all(PipelineReport::passed) {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Verify { pipeline, q, common } => {
            let points = match q {
                Some(q) => vec![parse_rational_arg("q", &q)?],
                None => vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())],
            };
            let names = pipelines::expand_selection(&pipeline)?;
            let opts = options(&common, None);
            let mut reports = run_selected(&names, &opts)?;
            if pipeline == "all" {
                for q0 in &points {
                    reports.push(pipelines::verify_specialization(q0, &opts)?);
                }
            }
            emit(&reports, &common)?;
            let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
            if failed == 0 {
                Ok(())
            } else {
                eprintln!("{failed} check(s) failed");
                Err(Failure::Checks)
            }
        }
        Command::Render { input, unicode } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", input.display())))?;
            let docs: Vec<RelationDoc> = match serde_json::from_str::<Vec<RelationDoc>>(&text) {
                Ok(v) => v,
                Err(_) => vec![RelationDoc::from_json(&text)?],
            };
            for doc in docs {
                let r = doc.to_relation()?;
                println!("{}", r.render(RenderOptions { unicode }));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

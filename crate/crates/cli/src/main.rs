mod args;
mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::Parser;
use rayon::prelude::*;

use packem::bounds::bounds_report;
use packem::certificate::{Certificate, CertificateError, Provenance};
use packem::constructions::{color_cycle_total, color_path_total, color_star_total};
use packem::graph::{generate, Family};
use packem::packing::{chi_rho, chi_rho_index, chi_rho_total, PackingError};
use packem::reproduce::{run_case, suite_cases, Row, Status};
use packem::{Graph, Target};

use args::{
    BoundsArgs, ChiArgs, Cli, Command, GenArgs, OptionalSource, ReproduceArgs, Source, VerifyArgs,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;
const EXIT_VERIFY: u8 = 4;

/// An error paired with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure::new(EXIT_FAILURE, error)
    }
}

impl From<io::Error> for Failure {
    fn from(error: io::Error) -> Self {
        Failure::new(EXIT_FAILURE, error)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Chi(a) => cmd_chi(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Reproduce(a) => cmd_reproduce(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) if is_broken_pipe(&f.error) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

/// A closed stdout (e.g. piping into `head`) is not an error.
fn is_broken_pipe(error: &anyhow::Error) -> bool {
    error.chain().any(|cause| {
        let kind = if let Some(e) = cause.downcast_ref::<io::Error>() {
            Some(e.kind())
        } else if let Some(e) = cause.downcast_ref::<serde_json::Error>() {
            e.io_error_kind()
        } else if let Some(csv::ErrorKind::Io(e)) =
            cause.downcast_ref::<csv::Error>().map(csv::Error::kind)
        {
            Some(e.kind())
        } else {
            None
        };
        kind == Some(io::ErrorKind::BrokenPipe)
    })
}

fn parse_family(spec: &[String]) -> Result<Family, Failure> {
    spec.join(" ")
        .parse::<Family>()
        .map_err(|e| Failure::new(EXIT_PARSE, e))
}

fn generated(spec: &[String]) -> Result<Graph, Failure> {
    generate(parse_family(spec)?).map_err(|e| Failure::new(EXIT_PARSE, e))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    text.parse::<Graph>().map_err(|e| {
        Failure::new(
            EXIT_PARSE,
            anyhow!(e).context(format!("parsing {}", path.display())),
        )
    })
}

fn load(source: &Source) -> Result<Graph, Failure> {
    match (&source.input, &source.generator) {
        (Some(path), _) => read_graph(path),
        (None, Some(spec)) => generated(spec),
        (None, None) => Err(Failure::new(EXIT_PARSE, anyhow!("no input graph given"))),
    }
}

fn load_optional(source: &OptionalSource) -> Result<Option<Graph>, Failure> {
    match (&source.input, &source.generator) {
        (Some(path), _) => read_graph(path).map(Some),
        (None, Some(spec)) => generated(spec).map(Some),
        (None, None) => Ok(None),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Outcome {
    let family = parse_family(&a.spec)?;
    let g = generate(family).map_err(|e| Failure::new(EXIT_PARSE, e))?;
    match &a.out {
        Some(path) => {
            write_file(path, &g.to_edge_list())?;
            writeln!(io::stdout(), "{} {}", g.vertex_count(), g.edge_count())?;
        }
        None => io::stdout().write_all(g.to_edge_list().as_bytes())?,
    }
    if let Some(path) = &a.cert {
        let coloring = match family {
            Family::Path(n) => color_path_total(n),
            Family::Cycle(n) => color_cycle_total(n),
            Family::Star(n) => color_star_total(n),
            other => {
                return Err(Failure::new(
                    EXIT_PARSE,
                    anyhow!("no explicit coloring for `{other}`; use `chi --cert` instead"),
                ))
            }
        }
        .context("building the explicit coloring")?;
        write_file(
            path,
            &Certificate::new(&g, &coloring, Provenance::Construction).to_json(),
        )?;
    }
    Ok(0)
}

fn cmd_chi(a: ChiArgs) -> Outcome {
    let g = load(&a.source)?;
    let target = Target::from(a.target);
    let budget = a.budget.budget();
    let result = match target {
        Target::Graph => chi_rho(&g, budget),
        Target::Line => chi_rho_index(&g, budget),
        Target::Total => chi_rho_total(&g, budget),
    };
    let report = match result {
        Ok(report) => report,
        Err(PackingError::Timeout {
            lower,
            upper,
            nodes,
        }) => {
            render::chi_timeout(a.format, target, lower, upper, nodes)?;
            return Ok(EXIT_TIMEOUT);
        }
        Err(PackingError::Edgeless) => {
            return Err(Failure::new(EXIT_PARSE, PackingError::Edgeless))
        }
        Err(e) => return Err(anyhow!(e).into()),
    };
    if let Some(path) = &a.cert {
        write_file(
            path,
            &Certificate::new(&g, &report.witness, Provenance::Search).to_json(),
        )?;
    }
    render::chi(a.format, &g, target, &report, a.cert.as_deref())?;
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let text =
        fs::read_to_string(&a.cert).with_context(|| format!("reading {}", a.cert.display()))?;
    let cert = Certificate::from_json(&text).map_err(|e| Failure::new(EXIT_PARSE, e))?;
    let graph = load_optional(&a.source)?;
    let verification = match cert.verify(graph.as_ref()) {
        Ok(v) => v,
        Err(e @ CertificateError::HashMismatch { .. }) => return Err(Failure::new(EXIT_VERIFY, e)),
        Err(e @ CertificateError::Packing(_)) => return Err(Failure::new(EXIT_VERIFY, e)),
        Err(e) => return Err(Failure::new(EXIT_PARSE, e)),
    };
    render::verification(a.format, &cert, &verification)?;
    Ok(if verification.passed() {
        0
    } else {
        EXIT_VERIFY
    })
}

fn cmd_bounds(a: BoundsArgs) -> Outcome {
    let g = load(&a.source)?;
    render::bounds(a.format, &bounds_report(&g))?;
    Ok(0)
}

/// Thread count for suite runs: `PACKEM_THREADS` if set, else rayon's
/// default.
fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var("PACKEM_THREADS") {
        let threads: usize = value.parse().ok().filter(|&t| t > 0).ok_or_else(|| {
            Failure::new(
                EXIT_PARSE,
                anyhow!("PACKEM_THREADS must be a positive integer, got `{value}`"),
            )
        })?;
        builder = builder.num_threads(threads);
    }
    builder.build().map_err(|e| Failure::new(EXIT_FAILURE, e))
}

fn cmd_reproduce(a: ReproduceArgs) -> Outcome {
    let budget = a.budget.budget();
    let cases: Vec<_> = a.suite.suites().into_iter().flat_map(suite_cases).collect();
    let pool = thread_pool()?;
    let rows: Vec<Row> = pool.install(|| {
        cases
            .par_iter()
            .map(|&case| run_case(case, budget))
            .collect()
    });
    render::rows(a.format, &rows)?;
    io::stdout().flush()?;
    let code = if rows.iter().any(|r| r.status == Status::Mismatch) {
        EXIT_VERIFY
    } else if rows.iter().any(|r| r.status == Status::Timeout) {
        EXIT_TIMEOUT
    } else {
        0
    };
    Ok(code)
}

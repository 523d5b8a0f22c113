use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use necklace_core::complex::{fixture_names, standard, Complex, OrderedComplex, SimplicialSet};
use necklace_core::homotopy::{inner_horn_check, NerveLevels, MAX_HORN_DIM};
use necklace_core::report::{
    categorify_report, comonad_report, homology_report, mapping_space_report, parse_complex, CategorifyReport, Report,
    VerifyReport,
};
use necklace_core::rigid::{categorify, coherent_nerve_truncated, mapping_space, mapping_space_bounded, MappingSpace};
use necklace_core::{verify, Error};

#[derive(Parser)]
#[command(name = "necklace", version, about = "Rigidification of finite simplicial sets via necklaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the mapping space between two vertices.
    MappingSpace {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        ends: Endpoints,
        /// Necklace vertex bound, required for inputs that are not ordered.
        #[arg(long)]
        bound: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Run the verification suites.
    Verify {
        /// Run a single suite.
        #[arg(long)]
        only: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Integral homology of a complex, or of one of its mapping spaces when
    /// --from and --to are given.
    Homology {
        #[command(flatten)]
        source: Source,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
        #[arg(long)]
        bound: Option<usize>,
        /// Top homology dimension (defaults to the top dimension).
        #[arg(long)]
        dmax: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Build the simplicial category of an ordered complex.
    Categorify {
        #[command(flatten)]
        source: Source,
        /// Also build the coherent nerve up to this level and check inner horns.
        #[arg(long)]
        nmax: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare resolution levels of [n] with chain counts.
    Oracle {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        lmax: usize,
        #[command(flatten)]
        out: Output,
    },
    /// List the named fixtures.
    Fixtures,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// A named fixture, e.g. `simplex:3`, `horn:3:1`, `two_triangles`.
    #[arg(long)]
    fixture: Option<String>,
    /// A JSON complex description.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Endpoints {
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Failures, split by exit code.
enum Failure {
    Checks(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(source: &Source) -> Result<Complex, Failure> {
    if let Some(spec) = &source.fixture {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let params = parts
            .map(|p| p.parse::<usize>().map_err(|_| Failure::Usage(format!("fixture parameter `{p}` is not a number"))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(standard(name, &params)?);
    }
    let path = source.input.as_ref().expect("clap enforces one source");
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_complex(&text)?)
}

fn as_ordered(c: &Complex) -> Result<OrderedComplex, Error> {
    match c {
        Complex::Ordered(o) => Ok(o.clone()),
        Complex::Generated(g) => OrderedComplex::from_simplicial_set(g),
    }
}

fn space(c: &Complex, a: usize, b: usize, bound: Option<usize>) -> Result<MappingSpace, Failure> {
    let n = c.vertex_count();
    if a >= n || b >= n {
        return Err(Failure::Usage(format!("endpoints ({a}, {b}) out of range for {n} vertices")));
    }
    match (as_ordered(c), bound) {
        (Ok(o), None) => Ok(mapping_space(&o, a, b)?),
        (_, Some(bound)) => Ok(mapping_space_bounded(c, a, b, bound)?),
        (Err(e), None) => Err(Failure::Usage(format!("{e}; pass --bound to enumerate a truncated mapping space"))),
    }
}

fn emit<R: Report>(report: &R, out: &Output) -> Result<(), Failure> {
    let text = report.render(matches!(out.format, Format::Json));
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct NerveSummary {
    levels: Vec<usize>,
    horns_checked: usize,
    horn_failures: usize,
}

#[derive(Serialize)]
struct CategoryWithNerve {
    #[serde(flatten)]
    category: CategorifyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    nerve: Option<NerveSummary>,
}

impl Report for CategoryWithNerve {
    fn table(&self) -> String {
        let mut s = self.category.table();
        if let Some(n) = &self.nerve {
            s.push_str(&format!(
                "nerve levels {:?}\ninner horns checked {}, unfillable {}\n",
                n.levels, n.horns_checked, n.horn_failures
            ));
        }
        s
    }
}

struct FixtureList(Vec<(&'static str, &'static str)>);

impl Serialize for FixtureList {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.0.iter().copied())
    }
}

impl Report for FixtureList {
    fn table(&self) -> String {
        self.0.iter().map(|(name, params)| format!("{name}\t{params}\n")).collect()
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::MappingSpace { source, ends, bound, out } => {
            let c = load(&source)?;
            let sp = space(&c, ends.from, ends.to, bound)?;
            emit(&mapping_space_report(&sp), &out)
        }
        Command::Verify { only, out } => {
            let report = VerifyReport::new(verify::run(only.as_deref())?);
            emit(&report, &out)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Checks("some checks failed".into()))
            }
        }
        Command::Homology { source, from, to, bound, dmax, out } => {
            let c = load(&source)?;
            let report = match (from, to) {
                (Some(a), Some(b)) => {
                    let sp = space(&c, a, b, bound)?;
                    homology_report(sp.complex(), dmax.unwrap_or(sp.complex().max_dim().unwrap_or(0)))?
                }
                _ => homology_report(&c, dmax.unwrap_or(c.max_dim().unwrap_or(0)))?,
            };
            emit(&report, &out)
        }
        Command::Categorify { source, nmax, out } => {
            let c = as_ordered(&load(&source)?)?;
            let cat = categorify(&c)?;
            let nerve = match nmax {
                None => None,
                Some(n) => {
                    let levels = coherent_nerve_truncated(&cat, n)?;
                    let horns = inner_horn_check(&NerveLevels(&levels), n.min(MAX_HORN_DIM))?;
                    Some(NerveSummary {
                        levels: levels.iter().map(|l| l.functors.len()).collect(),
                        horns_checked: horns.checked,
                        horn_failures: horns.failures.len(),
                    })
                }
            };
            emit(&CategoryWithNerve { category: categorify_report(&cat)?, nerve }, &out)
        }
        Command::Oracle { n, lmax, out } => {
            let report = comonad_report(n, lmax)?;
            emit(&report, &out)?;
            if report.all_equal {
                Ok(())
            } else {
                Err(Failure::Checks("resolution levels and chain counts disagree".into()))
            }
        }
        Command::Fixtures => emit(&FixtureList(fixture_names()), &Output { format: Format::Table, output: None }),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

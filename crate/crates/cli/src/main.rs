use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symsearch::domains::{
    make_hanoi, make_mc, make_vacuum, DomainKind, HanoiState, McState, ShippedMirror, VacuumState,
    DEFAULT_MOVES,
};
use symsearch::explicit::parse_problem_file;
use symsearch::export::{export_dot, write_metrics, DotOptions, MetricsFormat, MetricsRow};
use symsearch::symmetry::{mirror_meet, quotient, Automorphism, SymmetryGroup};
use symsearch::{
    bfs, bidirectional_bfs, depth_limited, uniform_cost, Outcome, Problem, SearchConfig,
    SearchError, SearchResult,
};

#[derive(Parser, Debug)]
#[command(
    name = "symsearch",
    version,
    about = "State-space search with symmetry reduction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one problem with one algorithm and print the plan.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "bfs")]
        algo: Algo,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Run several algorithms on the same problem and emit a metrics table.
    Compare {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ',', required = true)]
        algos: Vec<Algo>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Write the reachable state space as a DOT graph.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: PathBuf,
        /// Export the quotient under the shipped or declared symmetries.
        #[arg(long)]
        quotient: bool,
        /// Fill nodes of the same orbit with the same color.
        #[arg(long)]
        color_orbits: bool,
        #[arg(long, default_value_t = symsearch::search::DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// One of vacuum, mc, hanoi.
    #[arg(long, required_unless_present = "file", conflicts_with = "file")]
    domain: Option<String>,
    /// Explicit problem file.
    #[arg(long)]
    file: Option<PathBuf>,
    #[command(flatten)]
    params: DomainParams,
}

#[derive(Args, Debug)]
struct DomainParams {
    /// Vacuum squares.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Hanoi disks.
    #[arg(long, default_value_t = 3)]
    disks: usize,
    #[arg(long, default_value_t = 3)]
    missionaries: u8,
    #[arg(long, default_value_t = 3)]
    cannibals: u8,
    /// Initial state in the domain's rendering, e.g. L,1,1 or 3,3,1 or A,A,A.
    #[arg(long)]
    init: Option<String>,
    /// Symmetry from the problem file to use as the mirror.
    #[arg(long)]
    sym: Option<String>,
}

#[derive(Args, Debug)]
struct RunOpts {
    /// Depth limit for dls.
    #[arg(long, default_value_t = 32)]
    limit: usize,
    #[arg(long, default_value_t = symsearch::search::DEFAULT_NODE_CAP)]
    node_cap: usize,
    /// Report zero wall time so output is reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Bfs,
    Ucs,
    Dls,
    Bidir,
    MirrorMeet,
    QuotientBfs,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Bfs => "bfs",
            Algo::Ucs => "ucs",
            Algo::Dls => "dls",
            Algo::Bidir => "bidir",
            Algo::MirrorMeet => "mirror-meet",
            Algo::QuotientBfs => "quotient-bfs",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        CliError::Data(e.to_string())
    }
}

/// Symmetries available for a loaded problem.
struct Symmetries<S, A> {
    mirror: Option<Automorphism<S, A>>,
    group: SymmetryGroup<S, A>,
}

impl<S: Clone + 'static, A: Clone + 'static> Symmetries<S, A> {
    fn from_mirror(mirror: Automorphism<S, A>) -> Self {
        Symmetries {
            group: SymmetryGroup::new(vec![mirror.clone()]),
            mirror: Some(mirror),
        }
    }
}

/// Work to do on whichever concrete problem type the source resolves to.
trait Job {
    type Out;
    fn run<P>(
        self,
        problem: P,
        syms: Symmetries<P::State, P::Action>,
    ) -> Result<Self::Out, CliError>
    where
        P: Problem + Clone,
        P::State: 'static,
        P::Action: 'static;
}

fn with_problem<J: Job>(source: &Source, job: J) -> Result<J::Out, CliError> {
    let p = &source.params;
    if let Some(path) = &source.file {
        let bytes = fs::read(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        let parsed = parse_problem_file(&bytes)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        let problem = parsed.to_problem();
        let mirror =
            match &p.sym {
                Some(name) => Some(problem.symmetry(name).ok_or_else(|| {
                    CliError::Usage(format!("--sym: no symmetry named `{name}`"))
                })?),
                None => problem
                    .symmetry_names()
                    .first()
                    .and_then(|n| problem.symmetry(n)),
            };
        let group = problem.symmetry_group();
        return job.run(problem, Symmetries { mirror, group });
    }

    let domain = source.domain.as_deref().unwrap_or_default();
    let kind: DomainKind = domain
        .parse()
        .map_err(|e| CliError::Usage(format!("--domain: {e}")))?;
    let flag = |name: &'static str| {
        move |e: symsearch::domains::DomainError| CliError::Usage(format!("{name}: {e}"))
    };
    match kind {
        DomainKind::Vacuum => {
            let init = match &p.init {
                Some(text) => VacuumState::parse(p.n, text).map_err(flag("--init"))?,
                None => VacuumState::all_dirty(p.n),
            };
            let world = make_vacuum(p.n, init).map_err(flag("--n"))?;
            let syms = Symmetries::from_mirror(world.mirror());
            job.run(world, syms)
        }
        DomainKind::Missionaries => {
            let mut mc = make_mc(p.missionaries, p.cannibals, &DEFAULT_MOVES)
                .map_err(flag("--missionaries/--cannibals"))?;
            if let Some(text) = &p.init {
                let init = McState::parse(text).map_err(flag("--init"))?;
                mc = mc.with_initial(init).map_err(flag("--init"))?;
            }
            let syms = Symmetries::from_mirror(mc.mirror());
            job.run(mc, syms)
        }
        DomainKind::Hanoi => {
            let mut hanoi = make_hanoi(p.disks).map_err(flag("--disks"))?;
            if let Some(text) = &p.init {
                let init = HanoiState::parse(p.disks, text).map_err(flag("--init"))?;
                hanoi = hanoi.with_initial(init).map_err(flag("--init"))?;
            }
            let syms = Symmetries::from_mirror(hanoi.mirror());
            job.run(hanoi, syms)
        }
    }
}

fn run_algo<P>(
    problem: &P,
    syms: &Symmetries<P::State, P::Action>,
    algo: Algo,
    opts: &RunOpts,
) -> Result<SearchResult<P::State, P::Action>, SearchError>
where
    P: Problem + Clone,
{
    let config = SearchConfig {
        node_cap: opts.node_cap,
    };
    let mut result = match algo {
        Algo::Bfs => bfs(problem, &config),
        Algo::Ucs => uniform_cost(problem, &config),
        Algo::Dls => depth_limited(problem, opts.limit, &config),
        Algo::Bidir => bidirectional_bfs(problem, &config),
        Algo::MirrorMeet => match &syms.mirror {
            Some(mirror) => mirror_meet(problem, mirror, &config),
            None => Err(SearchError::PreconditionFailed(
                "problem declares no mirror symmetry".into(),
            )),
        },
        Algo::QuotientBfs => {
            let q = quotient(problem.clone(), syms.group.clone(), opts.node_cap)?;
            let result = bfs(&q, &config)?;
            let outcome = match result.outcome {
                Outcome::Found(path) => Outcome::Found(
                    q.lift(&path)
                        .map_err(|e| SearchError::InvalidSymmetry(e.to_string()))?,
                ),
                other => other,
            };
            Ok(SearchResult {
                outcome,
                metrics: result.metrics,
            })
        }
    }?;
    if opts.no_timing {
        result.metrics.wall_time = Default::default();
    }
    Ok(result)
}

/// Precondition failures become table rows; anything else aborts the run.
fn is_inapplicable(e: &SearchError) -> bool {
    !matches!(e, SearchError::ResourceLimit { .. })
}

struct Solve<'a> {
    algo: Algo,
    opts: &'a RunOpts,
}

impl Job for Solve<'_> {
    type Out = (String, bool);

    fn run<P>(
        self,
        problem: P,
        syms: Symmetries<P::State, P::Action>,
    ) -> Result<Self::Out, CliError>
    where
        P: Problem + Clone,
    {
        let result = run_algo(&problem, &syms, self.algo, self.opts)?;
        let mut out = String::new();
        let found = match &result.outcome {
            Outcome::Found(path) => {
                for action in path.actions() {
                    out.push_str(&format!("{action}\n"));
                }
                out.push_str(&format!(
                    "cost: {}\nlength: {}\n",
                    path.total_cost,
                    path.len()
                ));
                true
            }
            Outcome::NoSolution => {
                out.push_str("no solution\n");
                false
            }
            Outcome::Cutoff => {
                out.push_str(&format!("cutoff at depth {}\n", self.opts.limit));
                false
            }
        };
        let m = &result.metrics;
        out.push_str(&format!(
            "nodes_expanded: {}\nnodes_generated: {}\nmax_frontier: {}\nwall_time_ms: {:.3}\n",
            m.nodes_expanded,
            m.nodes_generated,
            m.max_frontier,
            m.wall_time.as_secs_f64() * 1000.0
        ));
        Ok((out, found))
    }
}

struct Compare<'a> {
    algos: &'a [Algo],
    opts: &'a RunOpts,
}

impl Job for Compare<'_> {
    type Out = Vec<MetricsRow>;

    fn run<P>(
        self,
        problem: P,
        syms: Symmetries<P::State, P::Action>,
    ) -> Result<Self::Out, CliError>
    where
        P: Problem + Clone,
    {
        let mut rows = Vec::with_capacity(self.algos.len());
        for &algo in self.algos {
            match run_algo(&problem, &syms, algo, self.opts) {
                Ok(result) => rows.push(MetricsRow::from_result(algo.name(), &result)),
                Err(e) if is_inapplicable(&e) => rows.push(MetricsRow::inapplicable(algo.name())),
                Err(e) => return Err(e.into()),
            }
        }
        Ok(rows)
    }
}

struct Export {
    quotient: bool,
    color_orbits: bool,
    node_cap: usize,
}

impl Job for Export {
    type Out = (String, usize);

    fn run<P>(
        self,
        problem: P,
        syms: Symmetries<P::State, P::Action>,
    ) -> Result<Self::Out, CliError>
    where
        P: Problem + Clone,
        P::State: 'static,
        P::Action: 'static,
    {
        let options = DotOptions {
            orbit_colors: self.color_orbits.then_some(&syms.group),
            node_cap: self.node_cap,
        };
        let dot = if self.quotient {
            let q = quotient(problem, syms.group.clone(), self.node_cap)?;
            export_dot(&q, &options)?
        } else {
            export_dot(&problem, &options)?
        };
        let nodes = dot
            .lines()
            .filter(|l| !l.contains("->") && l.starts_with("  "))
            .count();
        Ok((dot, nodes))
    }
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn execute(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Solve { source, algo, run } => {
            let (report, found) = with_problem(&source, Solve { algo, opts: &run })?;
            print!("{report}");
            Ok(if found {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Compare {
            source,
            algos,
            format,
            out,
            run,
        } => {
            if algos.len() < 2 {
                return Err(CliError::Usage(
                    "--algos: compare needs at least two algorithms".into(),
                ));
            }
            let mut rows = with_problem(
                &source,
                Compare {
                    algos: &algos,
                    opts: &run,
                },
            )?;
            if run.no_timing {
                rows = rows.into_iter().map(MetricsRow::without_timing).collect();
            }
            let format = match format {
                Format::Csv => MetricsFormat::Csv,
                Format::Json => MetricsFormat::Json,
            };
            let bytes = write_metrics(&rows, format);
            match out {
                Some(path) => write_file(&path, &bytes)?,
                None => io::stdout()
                    .write_all(&bytes)
                    .map_err(|source| CliError::Io {
                        path: "<stdout>".into(),
                        source,
                    })?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Export {
            source,
            out,
            quotient,
            color_orbits,
            node_cap,
        } => {
            let (dot, nodes) = with_problem(
                &source,
                Export {
                    quotient,
                    color_orbits,
                    node_cap,
                },
            )?;
            write_file(&out, dot.as_bytes())?;
            println!("wrote {} ({nodes} nodes)", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use firebreak::bounds::{self, BoundHints, LadderSeed};
use firebreak::game::{self, make_strategy, StrategyParams};
use firebreak::graph::generate::{self, FamilyParams};
use firebreak::graph::io::{self, Document};
use firebreak::orient::{self, RecipeParams};
use firebreak::solver::{self, SolveReport, SolverConfig};
use firebreak::verify::{self, VerifyOptions, SUITES};
use firebreak::{Error, Graph, Orientation};

#[derive(Parser)]
#[command(name = "firebreak", version, about = "Oriented firefighting: orientations, simulation, exact values and bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a named family.
    Generate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
        /// Emit the plain text format instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Orient a graph with a named recipe.
    Orient {
        #[arg(long)]
        recipe: String,
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Play the fire game on an orientation with a scripted defence.
    Simulate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        f: usize,
        #[arg(long, default_value_t = 0)]
        start: usize,
        #[arg(long, default_value = "greedy-outdeg")]
        strategy: String,
        /// Protection schedule for the scripted strategy, e.g. `[[1],[6]]`.
        #[arg(long)]
        script: Option<String>,
        /// Orient a graph input with this recipe first.
        #[arg(long)]
        recipe: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Optimal play on one orientation.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        f: usize,
        /// Solve a single start instead of the worst one.
        #[arg(long)]
        start: Option<usize>,
        #[arg(long)]
        recipe: Option<String>,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Best orientation of a small graph.
    SolveBest {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        f: usize,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form bounds with their hypotheses.
    Bounds {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        f: usize,
        /// Use 6 instead of 5 as the degree-4 seed of the degree ladder.
        #[arg(long)]
        ladder_six: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Run a named verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        slow: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: Output,
    },
}

/// Where the input graph or orientation comes from: a family, a file, or
/// standard input.
#[derive(Args)]
struct Source {
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    budget_ms: Option<u64>,
    #[arg(long, env = "FIREBREAK_THREADS")]
    threads: Option<usize>,
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit Graphviz DOT where the output is a graph or orientation.
    #[arg(long)]
    dot: bool,
}

enum Failure {
    Input(Error),
    Suite,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl Source {
    fn family_params(&self) -> FamilyParams {
        FamilyParams { n: self.n, p: self.p, q: self.q, k: self.k, w: self.w, h: self.h, seed: self.seed }
    }

    fn label(&self) -> String {
        match (&self.family, &self.input) {
            (Some(f), _) => {
                let p = self.family_params();
                let dims: Vec<String> = [("n", p.n), ("p", p.p), ("q", p.q), ("k", p.k), ("w", p.w), ("h", p.h)]
                    .iter()
                    .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
                    .collect();
                format!("{f}({})", dims.join(","))
            }
            (None, Some(path)) => path.display().to_string(),
            (None, None) => "<stdin>".to_string(),
        }
    }

    fn load(&self) -> Result<Document, Error> {
        if let Some(family) = &self.family {
            return generate::generate(family, &self.family_params()).map(Document::Graph);
        }
        let text = match &self.input {
            Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
            None => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
                s
            }
        };
        io::read_document(&text)
    }

    fn graph(&self) -> Result<Graph, Error> {
        Ok(match self.load()? {
            Document::Graph(g) => g,
            Document::Orientation(o) => o.graph().clone(),
        })
    }

    /// The input as an orientation, orienting a graph input with `recipe`.
    fn orientation(&self, recipe: Option<&str>) -> Result<Orientation, Error> {
        match (self.load()?, recipe) {
            (Document::Orientation(o), None) => Ok(o),
            (doc, Some(r)) => {
                let g = match doc {
                    Document::Graph(g) => g,
                    Document::Orientation(o) => o.graph().clone(),
                };
                orient::orient(r, &g, &self.recipe_params())
            }
            (Document::Graph(_), None) => {
                Err(Error::InvalidParams("input is an undirected graph; pass --recipe to orient it".into()))
            }
        }
    }

    fn recipe_params(&self) -> RecipeParams {
        RecipeParams { k: self.k, w: self.w, h: self.h, ..Default::default() }
    }
}

impl RunArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig { budget: self.budget(), threads: self.threads, ..Default::default() }
    }

    fn budget(&self) -> Option<Duration> {
        self.budget_ms.map(Duration::from_millis)
    }
}

impl Output {
    fn write(&self, text: &str) -> Result<(), Error> {
        let text = if text.ends_with('\n') { text.to_string() } else { format!("{text}\n") };
        match &self.out {
            Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn json<T: Serialize>(&self, value: &T) -> Result<(), Error> {
        self.write(&serde_json::to_string_pretty(value).expect("serialisable output"))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate { source, output, text } => {
            let g = source.graph()?;
            if output.dot {
                output.write(&io::graph_to_dot(&g))?;
            } else if text {
                output.write(&io::write_graph(&g))?;
            } else {
                output.json(&io::graph_to_json(&g))?;
            }
        }
        Command::Orient { recipe, source, output } => {
            let g = match (&source.family, &source.input, source.w, source.h) {
                (None, None, Some(w), Some(h)) if orient::grid_graph(&recipe, w, h).is_some() => {
                    orient::grid_graph(&recipe, w, h).expect("grid recipe")
                }
                _ => source.graph()?,
            };
            let o = orient::orient(&recipe, &g, &source.recipe_params())?;
            if output.dot {
                output.write(&io::orientation_to_dot(&o))?;
            } else {
                output.json(&io::orientation_to_json(&o, Some(&recipe)))?;
            }
        }
        Command::Simulate { source, f, start, strategy, script, recipe, output } => {
            let o = source.orientation(recipe.as_deref())?;
            let script = script
                .map(|s| {
                    serde_json::from_str::<Vec<Vec<usize>>>(&s)
                        .map_err(|e| Error::InvalidParams(format!("--script: {e}")))
                })
                .transpose()?;
            let params = StrategyParams { k: source.k, script };
            let mut st = make_strategy(&strategy, &params)?;
            let trace = game::simulate(&o, start, f, st.as_mut())?;
            output.write(&trace.to_json())?;
        }
        Command::Solve { source, f, start, recipe, run, output } => {
            let o = source.orientation(recipe.as_deref())?;
            let v = solver::solve_orientation(&o, f, start, &run.config())?;
            output.write(&SolveReport::new(source.label(), f, "fixed", &v, Some(source.seed)).to_json())?;
        }
        Command::SolveBest { source, f, run, output } => {
            let g = source.graph()?;
            let v = solver::solve_best_orientation(&g, f, &run.config())?;
            output.write(&SolveReport::new(source.label(), f, "best", &v, Some(source.seed)).to_json())?;
        }
        Command::Bounds { source, f, ladder_six, output } => {
            let hints = BoundHints {
                k: source.k,
                ladder_seed: if ladder_six { LadderSeed::Six } else { LadderSeed::Five },
                ..Default::default()
            };
            let mut entries = match source.load()? {
                Document::Graph(g) => bounds::graph_bounds(&g, f, &hints).entries,
                Document::Orientation(o) => {
                    let mut e = bounds::graph_bounds(o.graph(), f, &hints).entries;
                    e.extend(bounds::orientation_bounds(&o, f).entries);
                    e
                }
            };
            entries.sort_by_key(|e| (e.scope as u8, e.kind as u8));
            output.json(&entries)?;
        }
        Command::Verify { suite, slow, seed, run, output } => {
            let opts = VerifyOptions { slow, seed, threads: run.threads, budget: run.budget() };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut results = Vec::new();
            for name in names {
                results.push(verify::run_suite(name, &opts)?);
            }
            let ok = results.iter().all(|r| r.passed);
            if results.len() == 1 {
                output.json(&results[0])?;
            } else {
                output.json(&results)?;
            }
            if !ok {
                return Err(Failure::Suite);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Suite) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

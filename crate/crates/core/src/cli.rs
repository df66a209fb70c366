//! The `unicwd` command line.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a negative
//! verdict, 2 for malformed input or usage errors, 3 when a size guard
//! refuses the input.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::{random_unigraph, recognize};
use crate::decomp::decompose;
use crate::edgelist::{parse_edge_list, write_edge_list};
use crate::error::{ExprError, OracleError, SynthError};
use crate::graph::Graph;
use crate::kexpr::{parse_expr, KExpr};
use crate::oracle::{cwd_interval, enumerate_decompositions, oracle_unigraph, DEFAULT_CWD_BUDGET};
use crate::report::{self, GraphDiff};
use crate::solve::{solve, Problem, Solution};
use crate::synth::synthesize;

#[derive(Parser, Debug)]
#[command(name = "unicwd", version, about = "Unigraph recognition and clique-width expressions")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph is a unigraph and name its components.
    Recognize { graph: String },
    /// Print the canonical decomposition.
    Decompose { graph: String },
    /// Build an expression with at most five labels for a unigraph.
    Synthesize {
        graph: String,
        /// Write the expression here instead of standard output.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Evaluate an expression and print the resulting graph.
    Eval { expr: String },
    /// Compare a graph with the graph an expression builds.
    Check { graph: String, expr: String },
    /// Solve an optimisation problem over an expression.
    Solve {
        #[arg(long)]
        problem: Problem,
        graph: String,
        /// Use this expression instead of synthesising one.
        #[arg(long)]
        expr: Option<String>,
    },
    /// Generate a random unigraph.
    Gen {
        #[arg(long)]
        seed: u64,
        /// Rough vertex budget.
        #[arg(long, default_value_t = 30)]
        budget: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Exhaustive reference procedures for small graphs.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Bounds on the clique-width from tests `cwd <= k` for `k <= max-k`.
    Cwd {
        #[arg(long)]
        max_k: usize,
        /// Search steps allowed per test.
        #[arg(long, default_value_t = DEFAULT_CWD_BUDGET)]
        budget: u64,
        graph: String,
    },
    /// Decide the unigraph property by listing realizations.
    Unigraph { graph: String },
    /// List every maximal decomposition.
    Decomps { graph: String },
}

enum Failure {
    /// Bad input files, bad arguments, I/O problems.
    Input(String),
    /// A guard refused the size of the input.
    Guard(String),
    /// A negative answer that comes with an explanation.
    Negative(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Guard(m) | Failure::Negative(m) => m,
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Expr(e) => Failure::Input(e.to_string()),
            other => Failure::Guard(other.to_string()),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            if self.stdin_used {
                return Err(Failure::Input("standard input can be read only once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("<stdin>: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
        }
    }

    fn graph(&mut self, path: &str) -> Result<Graph, Failure> {
        let text = self.read(path)?;
        parse_edge_list(&text).map_err(|e| Failure::Input(format!("{}:{e}", shown(path))))
    }

    fn expr(&mut self, path: &str) -> Result<KExpr, Failure> {
        let text = self.read(path)?;
        let e = parse_expr(&text).map_err(|e| Failure::Input(format!("{}:{e}", shown(path))))?;
        e.validate().map_err(|e| Failure::Input(format!("{}: {e}", shown(path))))?;
        Ok(e)
    }

    fn out(&mut self, text: &str) -> Result<(), Failure> {
        match self.stdout.write_all(text.as_bytes()) {
            // a reader that stops early is not an error
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            other => other.map_err(|e| Failure::Input(format!("<stdout>: {e}"))),
        }
    }

    fn json(&mut self, v: &Value) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(v).expect("serialisable");
        self.out(&text)?;
        self.out("\n")
    }
}

fn shown(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}

fn write_file(path: &str, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn evaluate(e: &KExpr) -> Result<Graph, Failure> {
    e.evaluate()
        .map(|lg| lg.into_graph())
        .map_err(|err: ExprError| Failure::Input(err.to_string()))
}

fn synth_failure(e: SynthError) -> Failure {
    match e {
        SynthError::Expr(_) | SynthError::Graph(_) => Failure::Input(e.to_string()),
        other => Failure::Negative(other.to_string()),
    }
}

fn prefixed(text: &str) -> String {
    text.lines().map(|l| format!("# {l}\n")).collect()
}

/// Runs one command; returns the exit code.
fn dispatch(cli: Cli, io: &mut Io<'_>) -> Result<i32, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Recognize { graph } => {
            let g = io.graph(&graph)?;
            let r = recognize(&g);
            if json {
                io.json(&report::recognition_json(&r))?;
            } else {
                io.out(&report::recognition_text(&r))?;
            }
            Ok(if r.is_complete() { 0 } else { 1 })
        }
        Command::Decompose { graph } => {
            let d = decompose(&io.graph(&graph)?);
            if json {
                io.json(&report::decomposition_json(&d))?;
            } else {
                io.out(&report::decomposition_text(&d))?;
            }
            Ok(0)
        }
        Command::Synthesize { graph, output } => {
            let g = io.graph(&graph)?;
            let (e, rep) = synthesize(&g).map_err(synth_failure)?;
            let expr_line = format!("{e}\n");
            if let Some(path) = &output {
                write_file(path, &expr_line)?;
            }
            if json {
                io.json(&report::synthesis_json(&e, &rep))?;
            } else if output.is_some() {
                io.out(&report::synthesis_text(&rep))?;
            } else {
                io.out(&expr_line)?;
                io.out(&prefixed(&report::synthesis_text(&rep)))?;
            }
            Ok(0)
        }
        Command::Eval { expr } => {
            let e = io.expr(&expr)?;
            let g = evaluate(&e)?;
            if json {
                let mut v = report::graph_json(&g);
                v["width"] = json!(e.width());
                io.json(&v)?;
            } else {
                io.out(&report::eval_text(&g, e.width()))?;
            }
            Ok(0)
        }
        Command::Check { graph, expr } => {
            let g = io.graph(&graph)?;
            let e = io.expr(&expr)?;
            let diff = GraphDiff::between(&g, &evaluate(&e)?);
            if json {
                io.json(&report::check_json(&diff))?;
            } else {
                io.out(&report::check_text(&diff))?;
            }
            Ok(if diff.is_equal() { 0 } else { 1 })
        }
        Command::Solve { problem, graph, expr } => {
            let g = io.graph(&graph)?;
            let s = match expr {
                Some(path) => {
                    let e = io.expr(&path)?;
                    if !GraphDiff::between(&g, &evaluate(&e)?).is_equal() {
                        return Err(Failure::Negative("the expression does not build the graph".into()));
                    }
                    solve(problem, &e)?
                }
                None if g.is_empty() => Solution {
                    problem,
                    value: 0,
                    witness: Vec::new(),
                },
                None => solve(problem, &synthesize(&g).map_err(synth_failure)?.0)?,
            };
            if json {
                io.json(&report::solution_json(&s))?;
            } else {
                io.out(&format!("{s}\n"))?;
            }
            Ok(0)
        }
        Command::Gen { seed, budget, output } => {
            let (g, _) = random_unigraph(seed, budget);
            let text = if json {
                format!("{}\n", serde_json::to_string_pretty(&report::graph_json(&g)).expect("serialisable"))
            } else {
                write_edge_list(&g)
            };
            match output {
                Some(path) => write_file(&path, &text)?,
                None => io.out(&text)?,
            }
            Ok(0)
        }
        Command::Oracle(OracleCommand::Cwd { max_k, budget, graph }) => {
            let g = io.graph(&graph)?;
            let iv = cwd_interval(&g, max_k, budget)?;
            if json {
                io.json(&report::cwd_json(&iv))?;
            } else {
                io.out(&report::cwd_text(&iv))?;
            }
            Ok(0)
        }
        Command::Oracle(OracleCommand::Unigraph { graph }) => {
            let g = io.graph(&graph)?;
            let seq = g.degree_sequence();
            let yes = oracle_unigraph(&seq)?;
            if json {
                io.json(&json!({ "sequence": seq, "unigraph": yes }))?;
            } else {
                io.out(&format!("sequence={seq} unigraph={yes}\n"))?;
            }
            Ok(if yes { 0 } else { 1 })
        }
        Command::Oracle(OracleCommand::Decomps { graph }) => {
            let all = enumerate_decompositions(&io.graph(&graph)?)?;
            if json {
                io.json(&report::decompositions_json(&all))?;
            } else {
                io.out(&report::decompositions_text(&all))?;
            }
            Ok(0)
        }
    }
}

/// Runs the command line against the given streams.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stdin_used: false,
    };
    let code = match dispatch(cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    };
    let _ = io.stdout.flush();
    code
}

/// Runs the command line against the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    run_with(argv, &mut stdin.lock(), &mut out, &mut std::io::stderr())
}

mod parse;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use grundy_core::verify::{default_params, list_suites, run_suite, Outcome, Params, Verdict};
use grundy_core::young::{find_pprime_subdiagram, hook_lengths, psi_diagram, tableau_count, Shape};
use grundy_core::{psi_sum, Base, EvalTable, GameSpec, SumPosition};
use serde_json::{json, Value};

use parse::ShapeArg;

const SCHEMA_VERSION: u64 = 1;
const DEFAULT_MAX_BOUND: u64 = 12;

#[derive(Parser)]
#[command(
    name = "grundy",
    version,
    about = "Sprague-Grundy values of saturated subtraction games and Young diagram tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sprague-Grundy value and longest walk of one position.
    Sg {
        game: String,
        /// Commas within a summand, semicolons between summands.
        position: String,
        #[command(flatten)]
        eval: EvalArgs,
        #[arg(long)]
        json: bool,
    },
    /// Sprague-Grundy values of every position up to the bound.
    Table {
        game: String,
        #[command(flatten)]
        eval: EvalArgs,
        #[arg(long)]
        json: bool,
    },
    /// psi_p of a diagram or diagram tuple, or of a Welter position with --position.
    Psi {
        input: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long)]
        position: bool,
        #[arg(long)]
        json: bool,
    },
    /// Hook-length multiset of a diagram or diagram tuple.
    Hooks {
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// Number of standard tableaux.
    Fcount {
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// A subshape with psi_p cells whose tableau count is prime to p.
    Pprime {
        shape: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run one verification suite, or `all`.
    Verify {
        suite: String,
        #[command(flatten)]
        overrides: Overrides,
        #[arg(long)]
        json: bool,
    },
    /// List the verification suites.
    Suites {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct EvalArgs {
    /// Base for --saturate.
    #[arg(long, default_value_t = 2)]
    p: u64,
    /// Coordinate cap for evaluation.
    #[arg(long)]
    bound: Option<u64>,
    /// Evaluate the canonical p-saturation instead of the game itself.
    #[arg(long)]
    saturate: bool,
}

#[derive(Args)]
struct Overrides {
    /// Full parameter set as JSON, replacing the suite defaults.
    #[arg(long)]
    params: Option<String>,
    /// Bases to sweep; may be repeated.
    #[arg(long = "p")]
    primes: Vec<u64>,
    #[arg(long)]
    bound: Option<u64>,
    #[arg(long)]
    cells: Option<u64>,
    #[arg(long)]
    tuple_cells: Option<u64>,
    #[arg(long)]
    instances: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Check only the instance equal to this JSON value.
    #[arg(long)]
    focus: Option<String>,
}

impl Overrides {
    fn apply(&self, suite: &str) -> Result<Params> {
        let mut params = match &self.params {
            Some(text) => serde_json::from_str(text).context("parsing --params")?,
            None => default_params(suite)?,
        };
        if !self.primes.is_empty() {
            params.primes = self.primes.clone();
            params.tuple_primes = self.primes.clone();
        }
        if self.bound.is_some() {
            params.bound = self.bound;
        }
        if let Some(c) = self.cells {
            params.cells = c;
        }
        if let Some(c) = self.tuple_cells {
            params.tuple_cells = c;
        }
        if let Some(n) = self.instances {
            params.instances = n;
        }
        if let Some(s) = self.seed {
            params.seed = s;
        }
        if let Some(f) = &self.focus {
            params.focus = Some(serde_json::from_str(f).context("parsing --focus")?);
        }
        Ok(params)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn record(command: &str, inputs: Value, result: Value) -> String {
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
    });
    v.to_string()
}

fn max_bound() -> Result<u64> {
    match std::env::var("GRUNDY_MAX_BOUND") {
        Ok(v) => v.parse().with_context(|| format!("GRUNDY_MAX_BOUND={v} is not a number")),
        Err(_) => Ok(DEFAULT_MAX_BOUND),
    }
}

fn check_bound(bound: u64) -> Result<u64> {
    let cap = max_bound()?;
    if bound > cap {
        bail!("bound {bound} exceeds the safety cap {cap} (raise it with GRUNDY_MAX_BOUND)");
    }
    Ok(bound)
}

fn build_game(game: &str, eval: &EvalArgs) -> Result<GameSpec> {
    let spec = parse::game(game)?;
    if eval.saturate {
        Ok(spec.saturate(Base::new(eval.p)?)?)
    } else {
        Ok(spec)
    }
}

fn eval_inputs(game: &str, eval: &EvalArgs, bound: u64) -> Value {
    json!({ "game": game, "saturate": eval.saturate, "p": eval.saturate.then_some(eval.p), "bound": bound })
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Sg { game, position, eval, json } => {
            let spec = build_game(&game, &eval)?;
            let a = parse::position(&position)?;
            let top = a.iter().copied().max().unwrap_or(0);
            let bound = check_bound(eval.bound.unwrap_or(top))?;
            let mut table = EvalTable::new(spec, bound)?;
            let e = table.eval(&a)?;
            if json {
                let mut inputs = eval_inputs(&game, &eval, bound);
                inputs["position"] = json!(a);
                println!("{}", record("sg", inputs, json!({ "sg": e.sg, "lg": e.lg, "full": e.is_full() })));
            } else {
                println!("sg={} lg={}", e.sg, e.lg);
            }
        }
        Command::Table { game, eval, json } => {
            let spec = build_game(&game, &eval)?;
            let bound = check_bound(eval.bound.unwrap_or(7))?;
            let mut table = EvalTable::new(spec.clone(), bound)?;
            if json {
                for (a, e) in table.fill() {
                    let inputs = eval_inputs(&game, &eval, bound);
                    println!("{}", record("table", inputs, json!({ "position": a, "sg": e.sg, "lg": e.lg })));
                }
            } else {
                print_grid(&spec, &mut table, bound)?;
            }
        }
        Command::Psi { input, p, position, json } => {
            let base = Base::new(p)?;
            let value = if position {
                psi_sum(base, &SumPosition::from_coords(parse::components(&input)?)?)?
            } else {
                match parse::shape(&input)? {
                    ShapeArg::Single(y) => psi_diagram(base, &y),
                    ShapeArg::Tuple(t) => psi_diagram(base, &t),
                }
            };
            if json {
                let inputs = json!({ "input": input, "p": p, "position": position });
                println!("{}", record("psi", inputs, json!({ "psi": value })));
            } else {
                println!("{value}");
            }
        }
        Command::Hooks { shape, json } => {
            let hooks = match parse::shape(&shape)? {
                ShapeArg::Single(y) => hook_lengths(&y),
                ShapeArg::Tuple(t) => hook_lengths(&t),
            };
            if json {
                println!("{}", record("hooks", json!({ "shape": shape }), json!({ "hooks": hooks.values() })));
            } else {
                let text: Vec<String> = hooks.values().iter().map(u64::to_string).collect();
                println!("{}", text.join(","));
            }
        }
        Command::Fcount { shape, json } => {
            let f = match parse::shape(&shape)? {
                ShapeArg::Single(y) => tableau_count(&y),
                ShapeArg::Tuple(t) => tableau_count(&t),
            };
            if json {
                println!("{}", record("fcount", json!({ "shape": shape }), json!({ "f": f.to_string() })));
            } else {
                println!("{f}");
            }
        }
        Command::Pprime { shape, p, json } => {
            let base = Base::new(p)?;
            let (z, f) = match parse::shape(&shape)? {
                ShapeArg::Single(y) => pprime(base, &y)?,
                ShapeArg::Tuple(t) => pprime(base, &t)?,
            };
            if json {
                let inputs = json!({ "shape": shape, "p": p });
                println!("{}", record("pprime", inputs, json!({ "z": z, "f": f })));
            } else {
                println!("Z={z} f={f}");
            }
        }
        Command::Verify { suite, overrides, json } => {
            let names: Vec<String> =
                if suite == "all" { list_suites().iter().map(|s| s.name.to_string()).collect() } else { vec![suite] };
            let mut all_ok = true;
            for name in names {
                let params = overrides.apply(&name)?;
                let verdict = run_suite(&name, &params)?;
                all_ok &= verdict.ok();
                if json {
                    let inputs = json!({ "suite": name, "params": params });
                    let result = serde_json::to_value(&verdict).expect("plain data");
                    println!("{}", record("verify", inputs, result));
                } else {
                    print_verdict(&verdict);
                }
            }
            return Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Suites { json } => {
            for s in list_suites() {
                if json {
                    println!("{}", record("suites", json!({}), serde_json::to_value(&s).expect("plain data")));
                } else {
                    println!("{}\t{}", s.name, s.claim);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn pprime<S: Shape + ToString>(p: Base, shape: &S) -> Result<(String, String)> {
    let z = find_pprime_subdiagram(p, shape)?;
    Ok((z.to_string(), tableau_count(&z).to_string()))
}

fn print_grid(spec: &GameSpec, table: &mut EvalTable, bound: u64) -> Result<()> {
    let cell = |table: &mut EvalTable, a: &[u64]| -> Result<String> {
        if spec.contains(a) {
            Ok(table.sg(a)?.to_string())
        } else {
            Ok("-".to_string())
        }
    };
    match spec.arity() {
        1 => {
            for x in 0..=bound {
                println!("{x}\t{}", cell(table, &[x])?);
            }
        }
        2 => {
            let header: Vec<String> = (0..=bound).map(|y| y.to_string()).collect();
            println!("\t{}", header.join("\t"));
            for x in 0..=bound {
                let row = (0..=bound).map(|y| cell(table, &[x, y])).collect::<Result<Vec<_>>>()?;
                println!("{x}\t{}", row.join("\t"));
            }
        }
        m => bail!("grid output needs arity 1 or 2, got {m}; use --json for records"),
    }
    Ok(())
}

fn print_verdict(v: &Verdict) {
    let status = if v.ok() { "PASS" } else { "FAIL" };
    let note = match (v.outcome, v.expected) {
        (Outcome::Fail, Outcome::Fail) => ", expected failure observed",
        (Outcome::Pass, Outcome::Fail) => ", expected a failure but none was found",
        _ => "",
    };
    println!("{status} {} ({} checked, {} ms{note})", v.suite, v.positions_checked, v.elapsed_ms);
    if let Some(cx) = &v.counterexample {
        println!("  counterexample: {cx}");
    }
    if let Some(replay) = &v.replay {
        let params = serde_json::to_string(replay).expect("plain data");
        println!("  replay: grundy verify {} --params '{params}'", v.suite);
    }
}

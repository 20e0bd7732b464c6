//! `multifol` — JSON front end for projective systems, multifoliate
//! structures, and Weil-algebra evaluation.
//!
//! Exit codes: 0 for success (verdicts like "not equivalent" or "not
//! complete" are payload, not failure), 1 for domain errors (cycles, broken
//! squares, size caps), 2 for unreadable or malformed input.  Output is
//! deterministic byte for byte: objects are emitted with sorted keys and a
//! single trailing newline.

use clap::{Parser, Subcommand};
use multifol::classify::{classify, DualSystem};
use multifol::json::{self, LoadError};
use multifol::multifoliate::MultifoliateStructure;
use multifol::projsys::ProjectiveSystem;
use multifol::selftest;
use multifol::weil::{fiber_product, weil_apply, CartesianMultifibered};
use multifol::Error;
use serde_json::{json, Map, Value};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Library-wide ceiling on poset size; `--max-poset` can lower it, never
/// raise it.
const HARD_CAP: usize = 20;

#[derive(Parser)]
#[command(name = "multifol", version, about = "Projective systems over finite posets: completion, classification, equivalence, and Weil-algebra evaluation", long_about = None)]
struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Reject inputs whose poset has more than this many elements (capped at 20).
    #[arg(long, global = true, default_value_t = HARD_CAP, value_name = "N")]
    max_poset: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect what a JSON file describes and check the domain rules.
    Validate { input: PathBuf },
    /// Complete a projective system (also accepts a structure).
    Complete { input: PathBuf },
    /// Recover the multifoliate structure of a complete system.
    Classify { input: PathBuf },
    /// Decide whether two multifoliate structures are equivalent.
    Equiv { left: PathBuf, right: PathBuf },
    /// Product of two systems or of two structures over the same poset.
    Product { left: PathBuf, right: PathBuf },
    /// Dual subspaces (kernel annihilators) of a complete system.
    Dual { input: PathBuf },
    /// Evaluate a polynomial map on Weil-algebra points.
    #[command(name = "weil-eval")]
    WeilEval { algebra: PathBuf, eval: PathBuf },
    /// Dimension of the fiber product of a Weil system with a multifibered object.
    #[command(name = "fiber-dim")]
    FiberDim { system: PathBuf, object: PathBuf },
    /// Run the built-in property suite and print a summary table.
    Selftest {
        /// Seed for the randomized samples.
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
    },
}

/// A finished run: the bytes to emit and the exit code to return.
struct Outcome {
    text: String,
    exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli.max_poset.min(HARD_CAP);
    let outcome = match &cli.command {
        Command::Selftest { seed } => run_selftest(*seed),
        cmd => match run(cmd, cap) {
            Ok(v) => Outcome { text: render(&v, cli.pretty), exit: 0 },
            Err(f) => Outcome { text: render(&f.payload, cli.pretty), exit: f.exit },
        },
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.exit)
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(v).expect("JSON value")
    } else {
        serde_json::to_string(v).expect("JSON value")
    };
    s.push('\n');
    s
}

/// Error destined for the payload channel, tagged with its exit code.
struct Fail {
    payload: Value,
    exit: u8,
}

impl From<LoadError> for Fail {
    fn from(e: LoadError) -> Fail {
        let exit = match &e {
            LoadError::Schema(_) => 2,
            LoadError::Domain(_) => 1,
        };
        Fail { payload: json::load_error_to_value(&e), exit }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail { payload: json::core_error_to_value(&e), exit: 1 }
    }
}

fn schema_fail(msg: String) -> Fail {
    Fail::from(LoadError::Schema(msg))
}

fn load(path: &Path) -> Result<Value, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail {
        payload: json::error_to_value(
            "IoError",
            &format!("cannot read {}: {e}", path.display()),
            None,
        ),
        exit: 2,
    })?;
    serde_json::from_str(&text)
        .map_err(|e| schema_fail(format!("{} is not valid JSON: {e}", path.display())))
}

fn check_cap(size: usize, cap: usize) -> Result<(), Fail> {
    if size > cap {
        return Err(Fail {
            payload: json::error_to_value(
                "PosetTooLarge",
                &format!("poset has {size} elements, --max-poset allows at most {cap}"),
                Some(json!({ "size": size, "limit": cap })),
            ),
            exit: 1,
        });
    }
    Ok(())
}

/// Parse a file as either a projective system or a structure (whose induced
/// coordinate system is used).
fn load_system(path: &Path, cap: usize) -> Result<ProjectiveSystem, Fail> {
    let v = load(path)?;
    let sys = match json::detect_kind(&v) {
        Some("system") => json::system_from_value(&v)?,
        Some("structure") => json::structure_from_value(&v)?.system(),
        _ => {
            return Err(schema_fail(format!(
                "{} does not describe a projective system or a structure",
                path.display()
            )))
        }
    };
    check_cap(sys.poset().len(), cap)?;
    Ok(sys)
}

fn load_structure(path: &Path, cap: usize) -> Result<MultifoliateStructure, Fail> {
    let v = load(path)?;
    if json::detect_kind(&v) != Some("structure") {
        return Err(schema_fail(format!(
            "{} does not describe a multifoliate structure",
            path.display()
        )));
    }
    let s = json::structure_from_value(&v)?;
    check_cap(s.poset().len(), cap)?;
    Ok(s)
}

fn run(cmd: &Command, cap: usize) -> Result<Value, Fail> {
    match cmd {
        Command::Validate { input } => validate(input, cap),
        Command::Complete { input } => {
            let sys = load_system(input, cap)?;
            let c = sys.completion()?;
            check_cap(c.system.poset().len(), cap)?;
            Ok(json::completion_to_value(&c))
        }
        Command::Classify { input } => {
            let sys = load_system(input, cap)?;
            match classify(&sys) {
                Ok(c) => Ok(json::classification_to_value(&c)),
                Err(Error::NotComplete) => {
                    Ok(json!({ "classified": false, "verdict": "NotComplete" }))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Equiv { left, right } => {
            let s = load_structure(left, cap)?;
            let t = load_structure(right, cap)?;
            let verdict = match s.equivalent(&t) {
                Ok(v) => v,
                // different coordinate counts: no bijection can exist
                Err(Error::SizeMismatch(..)) => None,
                Err(e) => return Err(e.into()),
            };
            Ok(match verdict {
                Some((omega, sigma)) => {
                    let om: Map<String, Value> = omega
                        .iter()
                        .enumerate()
                        .map(|(a, &b)| {
                            (s.poset().id(a).to_string(), json!(t.poset().id(b)))
                        })
                        .collect();
                    let sg: Map<String, Value> = sigma
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| ((i + 1).to_string(), json!(j + 1)))
                        .collect();
                    json!({ "equivalent": true, "omega": om, "sigma": sg })
                }
                None => json!({ "equivalent": false, "verdict": "NOT_EQUIVALENT" }),
            })
        }
        Command::Product { left, right } => product(left, right, cap),
        Command::Dual { input } => {
            let sys = load_system(input, cap)?;
            match DualSystem::new(sys) {
                Ok(d) => {
                    let p = d.base().poset();
                    let mut duals = Map::new();
                    let mut floor_map = Map::new();
                    for (a, fl) in p.floors().into_iter().enumerate() {
                        duals.insert(
                            p.id(a).to_string(),
                            json!({
                                "dim": d.dual(a).dim(),
                                "basis": json::matrix_to_value(d.dual(a).basis()),
                            }),
                        );
                        floor_map.insert(p.id(a).to_string(), json!(fl));
                    }
                    Ok(json!({ "duals": duals, "floors": floor_map }))
                }
                Err(Error::NotComplete) => {
                    Ok(json!({ "verdict": "NotComplete" }))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::WeilEval { algebra, eval } => weil_eval(algebra, eval),
        Command::FiberDim { system, object } => {
            let v = load(system)?;
            if json::detect_kind(&v) != Some("weil-system") {
                return Err(schema_fail(format!(
                    "{} does not describe a Weil system",
                    system.display()
                )));
            }
            let mu = json::weil_system_from_value(&v)?;
            check_cap(mu.poset().len(), cap)?;
            let s = load_structure(object, cap)?;
            let pi = CartesianMultifibered::from_structure(&s);
            let fp = fiber_product(&mu, &pi)?;
            Ok(json!({
                "dim": fp.dim(),
                "ambient": fp.ambient(),
                "base_dim": pi.total(),
            }))
        }
        Command::Selftest { .. } => unreachable!("handled in main"),
    }
}

fn validate(input: &Path, cap: usize) -> Result<Value, Fail> {
    let v = load(input)?;
    let kind = json::detect_kind(&v).ok_or_else(|| {
        schema_fail(format!(
            "{} does not match any known input shape",
            input.display()
        ))
    })?;
    let summary = match kind {
        "poset" => {
            let p = json::poset_from_value(&v)?;
            check_cap(p.len(), cap)?;
            json!({ "elements": p.len(), "covers": p.covers().len() })
        }
        "system" => {
            let sys = json::system_from_value(&v)?;
            check_cap(sys.poset().len(), cap)?;
            json!({ "levels": sys.poset().len(), "limit_dim": sys.limit_dim() })
        }
        "structure" => {
            let s = json::structure_from_value(&v)?;
            check_cap(s.poset().len(), cap)?;
            json!({ "levels": s.poset().len(), "n": s.n() })
        }
        "algebra" => {
            let a = json::weil_algebra_from_value(&v)?;
            json!({ "dim": a.dim() })
        }
        "weil-system" => {
            let mu = json::weil_system_from_value(&v)?;
            check_cap(mu.poset().len(), cap)?;
            json!({ "levels": mu.poset().len() })
        }
        other => unreachable!("detect_kind returned {other}"),
    };
    let mut out = Map::new();
    out.insert("valid".to_string(), json!(true));
    out.insert("kind".to_string(), json!(kind));
    out.insert("summary".to_string(), summary);
    Ok(Value::Object(out))
}

fn product(left: &Path, right: &Path, cap: usize) -> Result<Value, Fail> {
    let lv = load(left)?;
    let rv = load(right)?;
    let kinds = (json::detect_kind(&lv), json::detect_kind(&rv));
    match kinds {
        (Some("structure"), Some("structure")) => {
            let s = json::structure_from_value(&lv)?;
            let t = json::structure_from_value(&rv)?;
            check_cap(s.poset().len(), cap)?;
            let p = s.product(&t)?;
            Ok(json::structure_to_value(&p))
        }
        (Some("system"), Some("system")) => {
            let s = json::system_from_value(&lv)?;
            let t = json::system_from_value(&rv)?;
            check_cap(s.poset().len(), cap)?;
            let p = s.product(&t)?;
            Ok(json::system_to_value(&p))
        }
        _ => Err(schema_fail(
            "product expects two structures or two systems".to_string(),
        )),
    }
}

fn weil_eval(algebra: &Path, eval: &Path) -> Result<Value, Fail> {
    let av = load(algebra)?;
    if json::detect_kind(&av) != Some("algebra") {
        return Err(schema_fail(format!(
            "{} does not describe a Weil algebra",
            algebra.display()
        )));
    }
    let a = json::weil_algebra_from_value(&av)?;
    let ev = load(eval)?;
    let f = json::polymap_from_value(&ev)?;
    let points_v = ev
        .get("points")
        .ok_or_else(|| schema_fail("evaluation request needs \"points\"".to_string()))?;
    let point_list = points_v
        .as_array()
        .ok_or_else(|| schema_fail("\"points\" must be an array".to_string()))?;
    let mut values = Vec::new();
    for (i, pv) in point_list.iter().enumerate() {
        let x = json::points_from_value(pv, a.dim(), &format!("points[{i}]"))?;
        if x.len() != f.vars() {
            return Err(schema_fail(format!(
                "points[{i}] has {} coordinates, the map takes {}",
                x.len(),
                f.vars()
            )));
        }
        let y = weil_apply(&a, &f, &x)?;
        values.push(json::points_to_value(&y));
    }
    Ok(json!({ "values": values }))
}

fn run_selftest(seed: u64) -> Outcome {
    let reports = selftest::run_all(seed);
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.line());
        text.push('\n');
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    let total_ms: u128 = reports.iter().map(|r| r.millis).sum();
    text.push_str(&format!(
        "{passed}/{} criteria passed in {total_ms} ms (seed {seed})\n",
        reports.len()
    ));
    Outcome { text, exit: if selftest::all_pass(&reports) { 0 } else { 1 } }
}

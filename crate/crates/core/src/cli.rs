//! Command-line front end: parses an argument list, runs one operation and
//! returns a JSON document together with a status.
//!
//! Every document carries `"schema_version": "1"`. Failures carry an
//! `"error"` field. Status `falsified` means the question was answered in the
//! negative (not interval, not chordal, no witness, not realized, lemma
//! violations).

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::chordal::is_chordal;
use crate::competition::{
    competition_graph, competition_hypergraph, verify_structure_lemmas, DoublyPartialOrder,
};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::interval::{is_interval, is_interval_graph};
use crate::patterns::{gadget_dpo, generate_pattern, generate_staircase, GadgetKind, PatternFamily, PatternKind};
use crate::synthesis::{check_realization, embed_interval_hypergraph, search_realization, RealizationSearch};
use crate::witness::{Containment, WitnessSearch};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    Falsified,
    InputError,
    TooLarge,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Falsified => 1,
            Status::InputError => 2,
            Status::TooLarge => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Falsified => "falsified",
            Status::InputError => "input_error",
            Status::TooLarge => "too_large",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct CommandOutcome {
    pub status: Status,
    pub payload: Value,
}

impl CommandOutcome {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// Pretty-printed payload with a trailing newline.
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.payload).expect("payload is plain JSON");
        text.push('\n');
        text
    }

    fn from_error(err: &Error) -> Self {
        let status = match err {
            Error::TooLarge { .. } => Status::TooLarge,
            _ => Status::InputError,
        };
        CommandOutcome::message(status, err.to_string())
    }

    fn message(status: Status, error: String) -> Self {
        CommandOutcome {
            status,
            payload: json!({
                "schema_version": SCHEMA_VERSION,
                "status": status.as_str(),
                "error": error,
            }),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "dpoh", version, about = "Competition hypergraphs of doubly partial orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Competition hypergraph of a point set, with the witness of each hyperedge.
    Compete { points: Option<PathBuf> },
    /// Competition graph of a point set.
    CompeteGraph { points: Option<PathBuf> },
    /// Decide whether a hypergraph is interval; on success give an ordering.
    Interval { hyper: Option<PathBuf> },
    /// Decide whether a graph is an interval graph.
    IntervalGraph { graph: Option<PathBuf> },
    /// Decide chordality; a chordless cycle is reported otherwise.
    Chordal { hyper: Option<PathBuf> },
    /// Search vertex subsets for a forbidden pattern.
    Witness {
        hyper: Option<PathBuf>,
        /// Comma-separated families among c, m, f, o1, o2.
        #[arg(long, default_value = "c,m,f,o1,o2")]
        kinds: String,
        #[arg(long)]
        max_subset: Option<usize>,
        /// `trace` (exact) or `partial` (pattern edges among the trace edges).
        #[arg(long, default_value = "trace")]
        containment: String,
    },
    /// A forbidden pattern by name (c3, m2, f1, o1, ...).
    Pattern { name: String },
    /// Point set whose competition hypergraph contains M_n or F_n.
    Gadget {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
    },
    /// The two staircases A_n and B_n.
    Staircase {
        #[arg(long)]
        n: usize,
    },
    /// Point set whose competition hypergraph contains an interval hypergraph.
    Embed { hyper: Option<PathBuf> },
    /// Is the competition hypergraph of the points the hypergraph plus isolated points?
    Check { points: PathBuf, hyper: PathBuf },
    /// Random search for a point set realizing the hypergraph plus isolated points.
    Realize {
        hyper: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        grid: u32,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check the structural facts about competition hyperedges.
    Lemmas { points: Option<PathBuf> },
}

/// Runs a command line (`argv[0]` is the program name), reading `-` or
/// missing file arguments from standard input.
pub fn dispatch<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    dispatch_with_stdin(argv, &mut std::io::stdin())
}

pub fn dispatch_with_stdin<I, T>(argv: I, stdin: &mut dyn Read) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutcome {
                    status: Status::Ok,
                    payload: json!({
                        "schema_version": SCHEMA_VERSION,
                        "help": err.to_string(),
                    }),
                },
                _ => CommandOutcome::message(Status::InputError, err.to_string()),
            };
        }
    };
    let mut input = Input { stdin, used: false };
    match run(cli.command, &mut input) {
        Ok((status, body)) => {
            let mut doc = Map::new();
            doc.insert("schema_version".into(), SCHEMA_VERSION.into());
            doc.insert("status".into(), status.as_str().into());
            doc.extend(body);
            CommandOutcome {
                status,
                payload: Value::Object(doc),
            }
        }
        Err(err) => CommandOutcome::from_error(&err),
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn text(&mut self, path: Option<&PathBuf>) -> Result<String> {
        match path {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
                .map_err(|e| Error::Format(format!("{}: {e}", p.display()))),
            _ => {
                if self.used {
                    return Err(Error::Format("standard input can only be read once".into()));
                }
                self.used = true;
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Error::Format(format!("standard input: {e}")))?;
                Ok(text)
            }
        }
    }

    fn doc<T: DeserializeOwned>(&mut self, path: Option<&PathBuf>) -> Result<T> {
        let text = self.text(path)?;
        serde_json::from_str(&text).map_err(|e| {
            let name = path.map_or("<stdin>".to_string(), |p| p.display().to_string());
            Error::Format(format!("{name}: {e}"))
        })
    }
}

type Body = Map<String, Value>;

fn body<T: Serialize>(value: &T) -> Body {
    match serde_json::to_value(value).expect("serializable") {
        Value::Object(map) => map,
        other => {
            let mut map = Map::new();
            map.insert("result".into(), other);
            map
        }
    }
}

fn answer(yes: bool) -> Status {
    if yes {
        Status::Ok
    } else {
        Status::Falsified
    }
}

fn parse_families(list: &str) -> Result<Vec<PatternFamily>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

fn parse_containment(name: &str) -> Result<Containment> {
    match name.trim().to_ascii_lowercase().as_str() {
        "trace" => Ok(Containment::Trace),
        "partial" => Ok(Containment::Partial),
        other => Err(Error::BadParameter(format!(
            "containment must be trace or partial, got {other:?}"
        ))),
    }
}

fn run(command: Command, input: &mut Input) -> Result<(Status, Body)> {
    match command {
        Command::Compete { points } => {
            let dpo: DoublyPartialOrder = input.doc(points.as_ref())?;
            let result = competition_hypergraph(&dpo);
            let mut out = body(&result.hypergraph);
            let witnesses: Vec<Value> = result
                .witnesses
                .iter()
                .map(|(edge, by)| json!({ "edge": edge, "witnesses": by }))
                .collect();
            out.insert("witnesses".into(), witnesses.into());
            Ok((Status::Ok, out))
        }
        Command::CompeteGraph { points } => {
            let dpo: DoublyPartialOrder = input.doc(points.as_ref())?;
            Ok((Status::Ok, body(&competition_graph(&dpo))))
        }
        Command::Interval { hyper } => {
            let h: Hypergraph = input.doc(hyper.as_ref())?;
            let cert = is_interval(&h);
            let mut out = Body::new();
            out.insert("interval".into(), cert.interval.into());
            if let Some(ordering) = &cert.ordering {
                out.insert("ordering".into(), json!(ordering));
            }
            Ok((answer(cert.interval), out))
        }
        Command::IntervalGraph { graph } => {
            let g: Graph = input.doc(graph.as_ref())?;
            let interval = is_interval_graph(&g)?;
            let mut out = Body::new();
            out.insert("interval_graph".into(), interval.into());
            Ok((answer(interval), out))
        }
        Command::Chordal { hyper } => {
            let h: Hypergraph = input.doc(hyper.as_ref())?;
            let report = is_chordal(&h)?;
            Ok((answer(report.chordal), body(&report)))
        }
        Command::Witness {
            hyper,
            kinds,
            max_subset,
            containment,
        } => {
            let families = parse_families(&kinds)?;
            let containment = parse_containment(&containment)?;
            let h: Hypergraph = input.doc(hyper.as_ref())?;
            let mut search = WitnessSearch::families(&families).containment(containment);
            if let Some(k) = max_subset {
                search = search.max_subset(k);
            }
            let witness = search.run(&h)?;
            let mut out = Body::new();
            out.insert("found".into(), witness.is_some().into());
            out.insert("witness".into(), serde_json::to_value(&witness)?);
            Ok((answer(witness.is_some()), out))
        }
        Command::Pattern { name } => {
            let kind: PatternKind = name.parse()?;
            let h = generate_pattern(kind)?;
            let mut out = Body::new();
            out.insert("pattern".into(), kind.to_string().into());
            out.extend(body(&h));
            Ok((Status::Ok, out))
        }
        Command::Gadget { kind, n } => {
            let kind: GadgetKind = kind.parse()?;
            let points = gadget_dpo(kind, n)?;
            let mut out = Body::new();
            out.insert("pattern".into(), kind.pattern(n).to_string().into());
            out.insert("points".into(), serde_json::to_value(&points)?);
            Ok((Status::Ok, out))
        }
        Command::Staircase { n } => {
            let (a, b) = generate_staircase(n)?;
            let ids = |ps: &[crate::geometry::Point2]| ps.iter().map(|p| p.id.clone()).collect::<Vec<_>>();
            let mut out = Body::new();
            out.insert("a".into(), json!(ids(&a)));
            out.insert("b".into(), json!(ids(&b)));
            let all: Vec<_> = a.into_iter().chain(b).collect();
            out.insert("points".into(), serde_json::to_value(&all)?);
            Ok((Status::Ok, out))
        }
        Command::Embed { hyper } => {
            let h: Hypergraph = input.doc(hyper.as_ref())?;
            let cert = is_interval(&h);
            let Some(ordering) = cert.ordering.filter(|_| cert.interval) else {
                return Err(Error::BadParameter("hypergraph is not interval".into()));
            };
            let points = embed_interval_hypergraph(&h, &ordering)?;
            let mut out = Body::new();
            out.insert("ordering".into(), json!(ordering));
            out.insert("points".into(), serde_json::to_value(&points)?);
            Ok((Status::Ok, out))
        }
        Command::Check { points, hyper } => {
            let dpo: DoublyPartialOrder = input.doc(Some(&points))?;
            let h: Hypergraph = input.doc(Some(&hyper))?;
            let report = check_realization(&dpo, &h);
            Ok((answer(report.realized), body(&report)))
        }
        Command::Realize {
            hyper,
            grid,
            extra,
            budget,
            seed,
            threads,
        } => {
            let h: Hypergraph = input.doc(hyper.as_ref())?;
            let params = RealizationSearch::new(grid, extra, budget, seed).threads(threads);
            let report = search_realization(&h, params)?;
            let mut out = body(&report);
            out.insert(
                "search".into(),
                json!({ "grid": grid, "extra": extra, "budget": budget, "seed": seed }),
            );
            Ok((answer(report.realized), out))
        }
        Command::Lemmas { points } => {
            let dpo: DoublyPartialOrder = input.doc(points.as_ref())?;
            let violations = verify_structure_lemmas(&dpo);
            let mut out = Body::new();
            out.insert("points".into(), dpo.len().into());
            out.insert("violations".into(), serde_json::to_value(&violations)?);
            Ok((answer(violations.is_empty()), out))
        }
    }
}

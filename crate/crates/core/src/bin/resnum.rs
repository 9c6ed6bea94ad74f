use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use resnum::bounds::{verify_bound, verify_bounds, PropId};
use resnum::enumerate::{enumerate_graphs, EnumConstraints};
use resnum::families::{classify_res, generate, FamilySpec, Res3Catalog};
use resnum::invariants::{invariant_summary, Girth};
use resnum::io::{parse_edge_list, parse_graph6_stream, write_graph6};
use resnum::resolve::{metric_dimension, resolving_number_from, upper_dimension};
use resnum::{DistanceMatrix, Error, Graph};

#[derive(Parser)]
#[command(name = "resnum", version, about = "Resolving number and related graph parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Resolving number and invariants, one JSON line per input graph.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        dim: bool,
        #[arg(long)]
        updim: bool,
    },
    /// Category of each graph with respect to res <= 3.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Bound verdicts, one JSON array per input graph.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, default_value = "all")]
        prop: String,
    },
    /// Prints a family member as graph6.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
    },
    /// Streams one graph6 line per isomorphism class.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_deg: Option<usize>,
        #[arg(long)]
        min_girth: Option<usize>,
        #[arg(long)]
        trees: bool,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
    },
    /// Derives the res = 3 catalog and compares it with a fixture.
    Catalog {
        #[arg(long, default_value_t = 3)]
        res: usize,
        /// Fixture that must match the derived catalog byte for byte.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Writes the derived catalog to this path.
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::TooLarge { .. } => 3,
                Error::TheoremViolation(_) => 4,
                _ => 2,
            })
        }
    }
}

fn read_graphs(path: &PathBuf, format: Option<Format>) -> Result<Vec<Graph>, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    let edgelist = match format {
        Some(Format::Edgelist) => true,
        Some(Format::Graph6) => false,
        None => text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .find(|l| !l.is_empty())
            .is_some_and(|l| l.starts_with("n ")),
    };
    if edgelist {
        Ok(vec![parse_edge_list(&text)?.graph])
    } else {
        Ok(parse_graph6_stream(&text)?.into_iter().map(|d| d.graph).collect())
    }
}

fn emit<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(|e| Failure::Input(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

#[derive(Serialize)]
struct ComputeReport {
    n: usize,
    m: usize,
    res: usize,
    witness_pair: Option<(usize, usize)>,
    diameter: u32,
    girth: Option<usize>,
    is_tree: bool,
    omega: usize,
    max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    updim: Option<usize>,
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Compute {
            input,
            format,
            dim,
            updim,
        } => {
            for g in read_graphs(&input, format)? {
                let dm = DistanceMatrix::new(&g)?;
                let report = resolving_number_from(&dm);
                let inv = invariant_summary(&g, &dm)?;
                let row = ComputeReport {
                    n: inv.n,
                    m: inv.m,
                    res: report.res,
                    witness_pair: report.witness_pair,
                    diameter: inv.diameter,
                    girth: inv.girth.finite(),
                    is_tree: inv.is_tree,
                    omega: inv.omega,
                    max_degree: inv.max_degree,
                    dim: dim.then(|| metric_dimension(&g).map(|d| d.0)).transpose()?,
                    updim: updim.then(|| upper_dimension(&g).map(|d| d.0)).transpose()?,
                };
                emit(&mut out, &row)?;
            }
        }
        Command::Classify { input, format } => {
            let catalog = Res3Catalog::embedded()?;
            for g in read_graphs(&input, format)? {
                let category = classify_res(&g, Some(&catalog))?;
                let member = catalog.find(&g).map(|m| m.graph6.clone());
                let mut row = json!({ "category": category.tag, "res": category.res });
                if let Some(m) = member {
                    row["catalog_member"] = json!(m);
                }
                emit(&mut out, &row)?;
            }
        }
        Command::Verify {
            input,
            format,
            prop,
        } => {
            let selected = if prop.eq_ignore_ascii_case("all") {
                None
            } else {
                Some(PropId::parse(&prop).ok_or_else(|| Failure::Input(format!("unknown proposition `{prop}`")))?)
            };
            for g in read_graphs(&input, format)? {
                let dm = DistanceMatrix::new(&g)?;
                let res = resolving_number_from(&dm).res;
                let inv = invariant_summary(&g, &dm)?;
                let verdicts = match selected {
                    None => verify_bounds(&g, &inv, res),
                    Some(p) => vec![verify_bound(&g, &inv, res, p)],
                };
                if let Some(v) = verdicts.iter().find(|v| v.is_violation()) {
                    emit(&mut out, &verdicts)?;
                    return Err(Error::TheoremViolation(format!("{:?}: {}", v.prop_id, v.reason)).into());
                }
                emit(&mut out, &verdicts)?;
            }
        }
        Command::Gen { family, params } => {
            let g = generate(&FamilySpec::from_name(&family, &params)?)?;
            writeln!(out, "{}", write_graph6(&g)?)?;
        }
        Command::Enum {
            n,
            max_deg,
            min_girth,
            trees,
            all,
        } => {
            let c = EnumConstraints {
                n,
                max_degree: max_deg,
                min_girth: min_girth.map(Girth::Finite),
                connected_only: !all,
                trees_only: trees,
            };
            for g in enumerate_graphs(&c)? {
                writeln!(out, "{}", write_graph6(&g)?)?;
            }
        }
        Command::Catalog {
            res,
            fixture,
            write,
        } => {
            if res != 3 {
                return Err(Failure::Input(format!("only the res = 3 catalog is derivable, got {res}")));
            }
            let catalog = Res3Catalog::build()?;
            let text = catalog.to_fixture();
            if let Some(path) = write {
                fs::write(path, &text)?;
            }
            let count = |g| catalog.with_girth(Girth::Finite(g)).count();
            let mut orders: Vec<usize> = catalog.with_girth(Girth::Finite(5)).map(|m| m.n).collect();
            orders.dedup();
            let mut report = json!({
                "res": 3,
                "count": catalog.len(),
                "girth_split": { "3": count(3), "4": count(4), "5": count(5) },
                "girth5_orders": orders,
                "members": catalog.members().iter().map(|m| json!({
                    "graph6": m.graph6,
                    "n": m.n,
                    "girth": m.girth.finite(),
                    "omega": m.omega,
                    "degree_sequence": m.degree_sequence,
                })).collect::<Vec<_>>(),
            });
            let mismatch = match fixture {
                Some(path) => {
                    let on_disk = fs::read_to_string(&path)?;
                    report["fixture_match"] = json!(on_disk == text);
                    on_disk != text
                }
                None => false,
            };
            emit(&mut out, &report)?;
            if mismatch {
                return Err(Failure::Input("derived catalog differs from the fixture".into()));
            }
        }
    }
    Ok(())
}

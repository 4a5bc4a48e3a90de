use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use radiotree::bounds::{certify_tightness, comparison_bound, default_comparison_center};
use radiotree::families::{
    gen_caterpillar, gen_complete_binary, gen_levelwise, gen_lmh, gen_path, gen_random_two_branch,
};
use radiotree::labelling::{greedy_label_from_order, label_from_order, verify_labelling};
use radiotree::order::a_sequence;
use radiotree::solver::{exact_rn, Limits};
use radiotree::{Error, FamilyInstance, LinearOrder, RadioLabelling, Report, Tree, TreeMetrics};

const NOT_CONFIRMED: u8 = 1;
const INPUT_ERROR: u8 = 3;
const RESOURCE_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(name = "radiotree", version, about = "Radio labelling bounds, certificates and exact search for trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weight centers, levels, remote vertices and bounds of a tree.
    Analyze {
        /// Tree file (`u v` edge lines); `-` reads standard input.
        tree: PathBuf,
        #[arg(long)]
        json: bool,
        /// Print a Graphviz description instead.
        #[arg(long)]
        dot: bool,
    },
    /// Lower bounds, optionally with the comparison bound.
    Bounds {
        tree: PathBuf,
        #[arg(long)]
        compare: bool,
        /// Degree-2 weight center for the comparison bound.
        #[arg(long)]
        center: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check that an order certifies the improved bound.
    Certify {
        tree: PathBuf,
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Label a tree from an order and print the label file.
    Label {
        tree: PathBuf,
        #[arg(long)]
        order: PathBuf,
        /// Use the smallest valid label for each vertex instead of the level recurrence.
        #[arg(long)]
        greedy: bool,
    },
    /// Check a labelling against the radio condition.
    Verify {
        tree: PathBuf,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Exact radio number by exhaustive search.
    Exact {
        tree: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_order: usize,
        #[arg(long, default_value_t = 300)]
        timeout_s: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
        /// Include wall-clock time in the JSON report.
        #[arg(long)]
        stats: bool,
    },
    /// Generate a family member as a tree file.
    Gen {
        #[command(subcommand)]
        family: FamilyCmd,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Generate, build the proof order, certify and report.
    Demo {
        #[command(subcommand)]
        family: FamilyCmd,
        #[arg(long, global = true)]
        json: bool,
    },
}

#[derive(Args)]
struct GenOutput {
    /// Output file; vertex names go to FILE.names and the order to FILE.order.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Also emit `name id` lines.
    #[arg(long, global = true)]
    names: bool,
    /// Also emit the proof order.
    #[arg(long, global = true)]
    with_order: bool,
}

#[derive(Subcommand, Clone)]
enum FamilyCmd {
    Path {
        #[arg(long)]
        n: usize,
    },
    Caterpillar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Levelwise {
        #[arg(long)]
        z: usize,
        /// Degrees by level, comma separated, e.g. `2,3,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
    },
    Lmh {
        #[arg(long)]
        z: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: usize,
    },
    Binary {
        #[arg(long)]
        h: usize,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl FamilyCmd {
    fn generate(&self) -> radiotree::Result<FamilyInstance> {
        match self {
            FamilyCmd::Path { n } => gen_path(*n),
            FamilyCmd::Caterpillar { n, k } => gen_caterpillar(*n, *k),
            FamilyCmd::Levelwise { z, degrees } => gen_levelwise(*z, degrees),
            FamilyCmd::Lmh { z, m, h } => gen_lmh(*z, *m, *h),
            FamilyCmd::Binary { h } => gen_complete_binary(*h),
            FamilyCmd::Random { n, seed } => gen_random_two_branch(*n, *seed),
        }
    }
}

enum Failure {
    Input(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OrderTooLarge { .. } | Error::ExhaustedAttempts(_) => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<TreeMetrics, Failure> {
    let tree = Tree::parse(&read_text(path)?)?;
    Ok(TreeMetrics::new(&tree)?)
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
}

fn analyze(tree: &Path, json: bool, dot: bool) -> Outcome {
    let metrics = load(tree)?;
    if dot {
        print!("{}", metrics.tree().to_dot(None));
    } else {
        emit(&Report::new(&metrics)?, json);
    }
    Ok(0)
}

fn bounds(tree: &Path, compare: bool, center: Option<usize>, json: bool) -> Outcome {
    let metrics = load(tree)?;
    let mut report = Report::new(&metrics)?;
    if compare || center.is_some() {
        let x = center
            .or_else(|| default_comparison_center(&metrics))
            .ok_or_else(|| Failure::Input("no weight center of degree 2".into()))?;
        report = report.with_comparison(comparison_bound(&metrics, x)?);
    }
    emit(&report, json);
    Ok(0)
}

fn certify(tree: &Path, order: &Path, json: bool) -> Outcome {
    let metrics = load(tree)?;
    let order = LinearOrder::parse(&read_text(order)?)?;
    let cert = certify_tightness(&metrics, &order)?;
    let mut report = Report::new(&metrics)?.with_certification(&cert);
    if let Some(f) = cert.labelling() {
        report = report.with_labels(f);
    }
    emit(&report, json);
    if let Some(failure) = cert.failure() {
        eprintln!("not certified: {failure}");
        return Ok(NOT_CONFIRMED);
    }
    Ok(0)
}

fn label(tree: &Path, order: &Path, greedy: bool) -> Outcome {
    let metrics = load(tree)?;
    let order = LinearOrder::parse(&read_text(order)?)?;
    let labelling = if greedy {
        greedy_label_from_order(&metrics, &order)?
    } else {
        label_from_order(&metrics, &order, &a_sequence(&metrics, &order)?)?
    };
    print!("{}", labelling.to_text());
    if let Some((u, v)) = verify_labelling(metrics.tree(), &labelling)? {
        eprintln!("warning: labelling violates the radio condition at ({u},{v})");
        return Ok(NOT_CONFIRMED);
    }
    Ok(0)
}

fn verify(tree: &Path, labels: &Path) -> Outcome {
    let tree = Tree::parse(&read_text(tree)?)?;
    let labelling = RadioLabelling::parse(&read_text(labels)?, tree.order())?;
    match verify_labelling(&tree, &labelling)? {
        None => {
            println!("valid, span {}", labelling.span());
            Ok(0)
        }
        Some((u, v)) => {
            println!("violation ({u},{v})");
            Ok(NOT_CONFIRMED)
        }
    }
}

fn exact(tree: &Path, limits: &Limits, json: bool, stats: bool) -> Outcome {
    let metrics = load(tree)?;
    let solved = exact_rn(metrics.tree(), limits)?;
    let report = Report::new(&metrics)?
        .with_exact(&solved, stats && json)
        .with_labels(&solved.witness);
    emit(&report, json);
    if !solved.stats.completed {
        eprintln!("timeout: {} is only an upper bound", solved.rn);
        return Ok(RESOURCE_LIMIT);
    }
    Ok(0)
}

fn gen(family: &FamilyCmd, out: &GenOutput) -> Outcome {
    let mut inst = family.generate()?;
    if out.with_order {
        inst = inst.with_proof_order()?;
    }
    let order_text = inst.proof_order().map(LinearOrder::to_text);
    match &out.output {
        Some(path) => {
            write_text(path, &inst.tree().to_text())?;
            let sibling = |ext: &str| {
                let mut name = path.as_os_str().to_owned();
                name.push(ext);
                PathBuf::from(name)
            };
            if out.names {
                write_text(&sibling(".names"), &inst.names_text())?;
            }
            if let Some(order) = order_text {
                write_text(&sibling(".order"), &order)?;
            }
        }
        None => {
            print!("{}", inst.tree().to_text());
            if out.names {
                println!("# names");
                for line in inst.names_text().lines() {
                    println!("# {line}");
                }
            }
            if let Some(order) = order_text {
                println!("# order");
                print!("# {order}");
            }
        }
    }
    Ok(0)
}

fn demo(family: &FamilyCmd, json: bool) -> Outcome {
    let inst = family.generate()?;
    let metrics = inst.metrics()?;
    let mut report = Report::new(&metrics)?.with_family(inst.family());
    if let Some(x) = default_comparison_center(&metrics) {
        if let Ok(c) = comparison_bound(&metrics, x) {
            report = report.with_comparison(c);
        }
    }
    let code = match inst.clone().with_proof_order() {
        Ok(inst) => {
            let cert = certify_tightness(&metrics, inst.proof_order().expect("proof order"))?;
            report = report.with_certification(&cert);
            if let Some(f) = cert.labelling() {
                report = report.with_labels(f);
            }
            if cert.is_certified() {
                0
            } else {
                NOT_CONFIRMED
            }
        }
        Err(Error::UnsupportedParams(why)) => {
            // No proof order: fall back to the exact search on small trees.
            let solved = exact_rn(inst.tree(), &Limits::default()).map_err(|e| {
                Failure::Limit(format!("{why}; exact search unavailable: {e}"))
            })?;
            report = report.with_exact(&solved, false).with_labels(&solved.witness);
            let target = inst.closed_form_rn().or(report.bound_improved);
            if solved.stats.completed && target == Some(solved.rn as i64) {
                0
            } else {
                NOT_CONFIRMED
            }
        }
        Err(e) => return Err(e.into()),
    };
    emit(&report, json);
    if !json {
        if let Some(closed) = inst.closed_form_rn() {
            println!("closed form  {closed}");
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze { tree, json, dot } => analyze(tree, *json, *dot),
        Command::Bounds {
            tree,
            compare,
            center,
            json,
        } => bounds(tree, *compare, *center, *json),
        Command::Certify { tree, order, json } => certify(tree, order, *json),
        Command::Label { tree, order, greedy } => label(tree, order, *greedy),
        Command::Verify { tree, labels } => verify(tree, labels),
        Command::Exact {
            tree,
            max_order,
            timeout_s,
            threads,
            json,
            stats,
        } => {
            let limits = Limits {
                max_order: *max_order,
                timeout: Some(Duration::from_secs(*timeout_s)),
                threads: *threads,
                ..Limits::default()
            };
            exact(tree, &limits, *json, *stats)
        }
        Command::Gen { family, out } => gen(family, out),
        Command::Demo { family, json } => demo(family, *json),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(RESOURCE_LIMIT)
        }
    }
}

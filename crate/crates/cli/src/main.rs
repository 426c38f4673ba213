use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use birkhoff_core::birkhoff::{
    birkhoff, check_extension, complete_context, verify_commutation, verify_duality, CompletionReport,
    Side,
};
use birkhoff_core::fca::{concept_lattice, standard_context, ConceptLattice, FormalContext};
use birkhoff_core::implications::{canonical_direct_basis, proper_premises, ImplicationBasis};
use birkhoff_core::io::dot::{concept_lattice_dot, lattice_dot};
use birkhoff_core::io::{datasets, load_input, Input};
use birkhoff_core::order::{is_isomorphic, Lattice};
use birkhoff_core::sets::format_label_set;

/// Concept lattices, implication bases and Birkhoff completions.
#[derive(Parser)]
#[command(name = "birkhoff", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write a DOT Hasse diagram to PATH; bare `--dot` or `--dot -` prints it instead.
    #[arg(long, global = true, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    dot: Option<PathBuf>,
    /// Suppress notices on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all formal concepts in lectic order of their intents.
    Concepts(InputArg),
    /// Print the canonical direct basis of a context.
    Basis {
        #[command(flatten)]
        input: InputArg,
        /// Keep only implications with a single-attribute premise.
        #[arg(long)]
        distributive_only: bool,
        /// Tag each implication as distributive or non-distributive.
        #[arg(long)]
        mark: bool,
    },
    /// Compute the up-set or down-set Birkhoff completion.
    Bc {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, conflicts_with = "down")]
        up: bool,
        #[arg(long)]
        down: bool,
        /// Complete the context by adding negated generators (default for contexts).
        #[arg(long, conflicts_with = "lattice_level")]
        context_level: bool,
        /// Complete the lattice as a set family (default for lattices).
        #[arg(long)]
        lattice_level: bool,
    },
    /// Run the completion and distributivity checks on an input.
    Check(InputArg),
    /// Emit the Hasse diagram of a lattice or concept lattice as DOT.
    Render(InputArg),
    /// List the bundled datasets.
    Datasets,
}

#[derive(Args)]
struct InputArg {
    /// A .cxt, .csv or .json file, or the name of a bundled dataset.
    input: Option<String>,
}

enum Failure {
    Input(String),
    Check,
}

impl From<birkhoff_core::Error> for Failure {
    fn from(e: birkhoff_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Ctx {
    json: bool,
    dot: Option<PathBuf>,
    quiet: bool,
}

impl Ctx {
    fn notice(&self, msg: &str) {
        if !self.quiet {
            eprintln!("note: {msg}");
        }
    }

    fn dot_to_stdout(&self) -> bool {
        self.dot.as_deref().is_some_and(|p| p.as_os_str() == "-")
    }

    /// Writes DOT to the requested place. Returns true when it went to
    /// stdout, in which case nothing else should be printed there.
    fn emit_dot(&self, dot: impl FnOnce() -> String) -> Result<bool, Failure> {
        match &self.dot {
            None => Ok(false),
            Some(p) if p.as_os_str() == "-" => {
                print!("{}", dot());
                Ok(true)
            }
            Some(p) => {
                fs::write(p, dot()).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
                Ok(false)
            }
        }
    }
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    // `concepts --dot data/m3.json`: the path was taken by `--dot`, so it
    // is the input and the DOT goes to stdout.
    if let Some(arg) = input_mut(&mut cli.command) {
        if arg.input.is_none() && cli.dot.as_deref().is_some_and(|p| p.as_os_str() != "-") {
            arg.input = cli.dot.replace(PathBuf::from("-")).map(|p| p.to_string_lossy().into_owned());
        }
    }
    let ctx = Ctx {
        json: cli.json,
        dot: cli.dot,
        quiet: cli.quiet,
    };
    match run(&ctx, cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn input_mut(c: &mut Command) -> Option<&mut InputArg> {
    match c {
        Command::Concepts(a) | Command::Check(a) | Command::Render(a) => Some(a),
        Command::Basis { input, .. } | Command::Bc { input, .. } => Some(input),
        Command::Datasets => None,
    }
}

fn load(arg: &InputArg) -> Result<Input, Failure> {
    let source = arg
        .input
        .as_deref()
        .ok_or_else(|| Failure::Input("no input given".into()))?;
    Ok(load_input(source)?)
}

fn as_context(input: &Input) -> FormalContext {
    match input {
        Input::Context(k) => k.clone(),
        Input::Lattice(l) | Input::Extension { lattice: l, .. } => standard_context(l),
    }
}

fn run(ctx: &Ctx, command: Command) -> Result<(), Failure> {
    match command {
        Command::Concepts(arg) => concepts(ctx, &load(&arg)?),
        Command::Basis {
            input,
            distributive_only,
            mark,
        } => basis(ctx, &load(&input)?, distributive_only, mark),
        Command::Bc {
            input,
            down,
            context_level,
            lattice_level,
            ..
        } => {
            let side = if down { Side::Down } else { Side::Up };
            bc(ctx, &load(&input)?, side, context_level, lattice_level)
        }
        Command::Check(arg) => check(ctx, &load(&arg)?),
        Command::Render(arg) => render(ctx, &load(&arg)?),
        Command::Datasets => list_datasets(ctx),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("plain data serializes"));
}

#[derive(Serialize)]
struct ConceptJson<'a> {
    extent: Vec<&'a str>,
    intent: Vec<&'a str>,
}

fn concepts(ctx: &Ctx, input: &Input) -> Result<(), Failure> {
    let k = as_context(input);
    let cl = concept_lattice(&k);
    if ctx.emit_dot(|| concept_lattice_dot(&cl, "concepts", &[]))? {
        return Ok(());
    }
    if ctx.json {
        let list: Vec<ConceptJson> = (0..cl.len())
            .map(|i| ConceptJson {
                extent: cl.extent_labels(i),
                intent: cl.intent_labels(i),
            })
            .collect();
        print_json(&serde_json::json!({ "count": cl.len(), "concepts": list }));
    } else {
        println!("{} concepts", cl.len());
        for i in 0..cl.len() {
            println!(
                "{i}: {} | {}",
                format_label_set(&cl.extent_labels(i)),
                format_label_set(&cl.intent_labels(i))
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ImplicationJson<'a> {
    premise: Vec<&'a str>,
    conclusion: Vec<&'a str>,
    distributive: bool,
}

fn basis(ctx: &Ctx, input: &Input, distributive_only: bool, mark: bool) -> Result<(), Failure> {
    let mut k = as_context(input);
    if !k.is_attribute_reduced() {
        let before = k.num_attributes();
        k = k.reduce();
        ctx.notice(&format!(
            "context reduced to {} of {} attributes",
            k.num_attributes(),
            before
        ));
    }
    let mut b: ImplicationBasis = canonical_direct_basis(&k)?;
    if distributive_only {
        b = b.distributive_part();
    }
    if ctx.json {
        let list: Vec<ImplicationJson> = b
            .iter()
            .map(|imp| ImplicationJson {
                premise: b.labels(&imp.premise),
                conclusion: b.labels(&imp.conclusion),
                distributive: imp.is_distributive(),
            })
            .collect();
        print_json(&serde_json::json!({ "attributes": b.universe(), "implications": list }));
    } else {
        for imp in b.iter() {
            let line = b.format_line(imp);
            if mark {
                let tag = if imp.is_distributive() { "distributive" } else { "non-distributive" };
                println!("{line}  [{tag}]");
            } else {
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn bc(ctx: &Ctx, input: &Input, side: Side, context_level: bool, lattice_level: bool) -> Result<(), Failure> {
    let use_context = match input {
        Input::Context(_) => !lattice_level,
        _ => context_level,
    };
    if use_context {
        let c = complete_context(&as_context(input), side);
        let report = CompletionReport::from_context(&c);
        if ctx.emit_dot(|| concept_lattice_dot(&c.completed, "completion", &c.new_concepts))? {
            return Ok(());
        }
        if ctx.json {
            print!("{}", report.to_json());
            return Ok(());
        }
        let (what, base) = match side {
            Side::Up => ("objects", "object"),
            Side::Down => ("attributes", "attribute"),
        };
        println!("{} completion, context level", side.name());
        println!("original concepts: {}", report.original_size);
        println!("completed concepts: {}", report.completed_size);
        println!("added {what}: {}", c.added.len());
        for a in &c.added {
            let el = format_label_set(&report.added.iter().find(|e| e.label == a.label).unwrap().element);
            if a.coincides_with.is_empty() {
                let status = if a.generates_new_concept { "new concept" } else { "existing concept" };
                println!("  {}: {status} {el}", a.label);
            } else {
                println!(
                    "  {}: same {base} concept as {}",
                    a.label,
                    a.coincides_with.join(", ")
                );
            }
        }
        println!(
            "new concepts: {} ({} generated by added {what})",
            report.new_elements.len(),
            report.generated_new_elements.len()
        );
        for e in &report.new_elements {
            println!("  {}", format_label_set(e));
        }
        println!("invalidated implications: {} of {}", c.invalidated.len(), c.basis.len());
        for inv in &c.invalidated {
            println!("  {}  (refuted by {})", inv.implication, inv.witnesses.join(", "));
        }
    } else {
        let l = match input {
            Input::Context(k) => concept_lattice(k).lattice().clone(),
            Input::Lattice(l) | Input::Extension { lattice: l, .. } => l.clone(),
        };
        let c = birkhoff(&l, side);
        let report = CompletionReport::from_lattice(&l, &c);
        if ctx.emit_dot(|| lattice_dot(c.completed(), "completion", &c.new_elements()))? {
            return Ok(());
        }
        if ctx.json {
            print!("{}", report.to_json());
            return Ok(());
        }
        println!("{} completion, lattice level", side.name());
        println!("original elements: {}", report.original_size);
        println!("completed elements: {}", report.completed_size);
        println!("embedding:");
        for (x, image) in &report.embedding {
            println!("  {x} -> {}", format_label_set(image));
        }
        println!("new elements: {}", report.new_elements.len());
        for e in &report.new_elements {
            println!("  {}", format_label_set(e));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckLine {
    name: &'static str,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct CheckReport {
    distributive: bool,
    witness: Option<String>,
    up_size: usize,
    down_size: usize,
    checks: Vec<CheckLine>,
    passed: bool,
}

fn check(ctx: &Ctx, input: &Input) -> Result<(), Failure> {
    let k = as_context(input);
    let l: Lattice = match input {
        Input::Context(k) => concept_lattice(k).lattice().clone(),
        Input::Lattice(l) | Input::Extension { lattice: l, .. } => l.clone(),
    };
    let mut checks = Vec::new();

    let comm = verify_commutation(&k);
    checks.push(CheckLine {
        name: "commutation",
        passed: comm.holds(),
        detail: format!(
            "completed context has {} concepts, completed concept lattice has {} elements",
            comm.context_route_size, comm.lattice_route_size
        ),
    });

    let up = birkhoff(&l, Side::Up);
    let down = birkhoff(&l, Side::Down);
    let distributive = l.is_distributive();
    let witness = l.find_forbidden_sublattice().map(|f| f.describe(&l));
    let up_iso = is_isomorphic(up.completed(), &l);
    let down_iso = is_isomorphic(down.completed(), &l);
    let reduced = standard_context(&l).reduce();
    let singleton = proper_premises(&reduced).iter().all(|p| p.premise.count_ones(..) <= 1);
    let agree = [witness.is_none(), up_iso, down_iso, singleton]
        .iter()
        .all(|&v| v == distributive);
    checks.push(CheckLine {
        name: "distributivity",
        passed: agree,
        detail: format!(
            "distributive laws {distributive}, no M3/N5 {}, up-set completion isomorphic {up_iso}, \
             down-set completion isomorphic {down_iso}, all proper premises singletons {singleton}",
            witness.is_none()
        ),
    });

    let dual = verify_duality(&l);
    checks.push(CheckLine {
        name: "duality",
        passed: dual.holds(),
        detail: format!(
            "down-set completion has {} elements, dual of the dual's up-set completion has {}",
            dual.down_size, dual.dual_up_size
        ),
    });

    if let Input::Extension { lattice, extension } = input {
        let e = check_extension(lattice, extension);
        checks.push(CheckLine {
            name: "extension",
            passed: e.passes(),
            detail: format!(
                "extension has {} elements (distributive {}, order embedding {}, joins preserved {}); \
                 completions have {} (up) and {} (down)",
                e.large_size,
                e.large_is_distributive,
                e.inclusion_is_order_embedding,
                e.inclusion_preserves_joins,
                e.up_size,
                e.down_size
            ),
        });
    }

    let report = CheckReport {
        distributive,
        witness,
        up_size: up.len(),
        down_size: down.len(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    };
    if ctx.json {
        print_json(&report);
    } else {
        println!("elements: {}", l.len());
        match &report.witness {
            None => println!("distributive"),
            Some(w) => println!("not distributive: {w}"),
        }
        println!("completion sizes: {} (up), {} (down)", report.up_size, report.down_size);
        for c in &report.checks {
            println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn render(ctx: &Ctx, input: &Input) -> Result<(), Failure> {
    let dot = match input {
        Input::Context(k) => concept_lattice_dot(&ConceptLattice::new(k), "concepts", &[]),
        Input::Lattice(l) | Input::Extension { lattice: l, .. } => lattice_dot(l, "lattice", &[]),
    };
    if ctx.dot.is_none() || ctx.dot_to_stdout() {
        print!("{dot}");
        Ok(())
    } else {
        ctx.emit_dot(|| dot).map(|_| ())
    }
}

fn list_datasets(ctx: &Ctx) -> Result<(), Failure> {
    if ctx.json {
        let list: Vec<_> = datasets::all()
            .iter()
            .map(|d| serde_json::json!({ "name": d.name, "file": d.file, "provenance": d.provenance }))
            .collect();
        print_json(&list);
    } else {
        for d in datasets::all() {
            println!("{:<9} {:<14} {}", d.name, d.file, d.provenance);
        }
    }
    Ok(())
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use lefschetz_core::catalog::Catalog;
use lefschetz_core::document::{self, DocumentError};
use lefschetz_core::ratlin::{format_rational, DisplayVector};
use lefschetz_core::repn::Representation;
use lefschetz_core::task::{self, RunError, Task};

/// Twisted Lefschetz numbers of Lie algebra endomorphisms, computed exactly.
#[derive(Parser)]
#[command(name = "lefschetz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every validator on a task document.
    Check { file: PathBuf },
    /// Cohomology dimensions of the Chevalley-Eilenberg complex.
    Cohomology {
        file: PathBuf,
        /// Override the module of the task document.
        #[arg(long, value_enum)]
        module: Option<ModuleChoice>,
        #[arg(long)]
        json: bool,
        /// Include representative cocycles.
        #[arg(long)]
        verbose: bool,
    },
    /// Full twisted Lefschetz report.
    Lefschetz {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Nilshadow of a split presentation and the induced map.
    Shadow {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Fixed points of a linear torus map, e.g. --matrix "2,1;1,1".
    Torus {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        json: bool,
    },
    /// Built-in example algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
    Export { name: String },
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleChoice {
    Trivial,
    Adjoint,
}

enum Outcome {
    Ok,
    VerdictFalse,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerdictFalse) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn invalid(path: &str, message: impl std::fmt::Display) -> RunError {
    RunError::Invalid(DocumentError {
        path: path.to_string(),
        message: message.to_string(),
    })
}

fn catalog() -> Result<Catalog, RunError> {
    Catalog::load().map_err(|e| invalid("", e))
}

fn load_task(file: &Path, catalog: &Catalog) -> Result<Task, RunError> {
    let text = std::fs::read_to_string(file).map_err(|e| invalid("", format!("{}: {e}", file.display())))?;
    Ok(Task::from_str(&text, catalog)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Ok
    } else {
        Outcome::VerdictFalse
    }
}

fn run(command: Command) -> Result<Outcome, RunError> {
    match command {
        Command::Check { file } => {
            let task = load_task(&file, &catalog()?)?;
            task.check()?;
            println!("ok");
            Ok(Outcome::Ok)
        }
        Command::Cohomology {
            file,
            module,
            json,
            verbose,
        } => {
            let mut task = load_task(&file, &catalog()?)?;
            if let Some(choice) = module {
                task.module = match choice {
                    ModuleChoice::Trivial => Representation::trivial(task.algebra.clone()),
                    ModuleChoice::Adjoint => Representation::adjoint(task.algebra.clone()),
                };
                task.map = None;
                task.intertwiner = None;
            }
            let v = task.cohomology(verbose)?;
            if json {
                print_json(&v);
            } else {
                println!("dims:  {}", v["dims"]);
                println!("betti: {}", v["betti"]);
                if let Some(Value::Object(maps)) = v.get("maps") {
                    for (p, m) in maps {
                        println!("H^{p} map: {m}");
                    }
                }
                if let Some(Value::Object(reps)) = v.get("representatives") {
                    for (p, r) in reps {
                        println!("H^{p} basis: {r}");
                    }
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Lefschetz { file, json } => {
            let task = load_task(&file, &catalog()?)?;
            let r = task.lefschetz()?;
            if json {
                print_json(&task::lefschetz_json(&r));
            } else {
                println!("betti:          {:?}", r.betti);
                println!("traces:         {}", DisplayVector(&r.traces));
                println!("lefschetz:      {}", format_rational(&r.lefschetz));
                println!("hopf:           {}", format_rational(&r.hopf));
                println!("det(I - A):     {}", format_rational(&r.linearization));
                println!("agree:          {}", r.agree);
                if !r.agree && !r.formula_guaranteed {
                    println!("note: the formula is not guaranteed for this input");
                }
            }
            Ok(verdict(r.agree))
        }
        Command::Shadow { file, json } => {
            let task = load_task(&file, &catalog()?)?;
            let s = task.shadow()?;
            let v = task::shadow_json(&s);
            if json {
                print_json(&v);
            } else {
                println!("shadow brackets: {}", v["shadow"]["brackets"]);
                println!("S:               {}", v["s"]);
                println!("shadow morphism: {}", s.map.is_shadow_morphism());
                if let Some(why) = &s.map.shadow_morphism_violation {
                    println!("  {why}");
                }
                println!("det(I - S):      {}", format_rational(&s.map.det_shadow));
                println!("det(I - B):      {}", format_rational(&s.map.det_original));
                if let Some(r) = &s.shadow_report {
                    println!("L on shadow:     {}", format_rational(&r.lefschetz));
                }
                match s.verdict() {
                    Some(b) => println!("agree:           {b}"),
                    None => println!("agree:           not computed"),
                }
            }
            Ok(verdict(s.verdict() == Some(true)))
        }
        Command::Torus { matrix, json } => {
            let c = task::run_torus(&matrix)?;
            if json {
                print_json(&task::torus_json(&c));
            } else {
                let fp = &c.fixed_points;
                println!("fixed points:   {}", fp.count);
                println!("index each:     {}", fp.index_each);
                println!("det(I - A):     {}", fp.lefschetz);
                println!("CE lefschetz:   {}", format_rational(&c.ce_lefschetz));
                for p in &fp.points {
                    println!("  {}", DisplayVector(p));
                }
                println!("pass:           {}", c.pass);
            }
            Ok(verdict(c.pass))
        }
        Command::Catalog { action } => {
            let cat = catalog()?;
            match action {
                CatalogAction::List => {
                    for e in cat.entries() {
                        println!("{:<14} dim {}  {}", e.name, e.algebra.dim(), e.notes);
                    }
                    Ok(Outcome::Ok)
                }
                CatalogAction::Show { name } => {
                    let e = cat.get(&name).map_err(|e| invalid("", e))?;
                    println!("{}: {}", e.name, e.notes);
                    println!("basis: {}", e.algebra.labels().join(", "));
                    for (&(i, j), v) in e.algebra.brackets() {
                        let l = e.algebra.labels();
                        println!("  [{}, {}] = {}", l[i], l[j], DisplayVector(v));
                    }
                    if let Some(g) = &e.grading {
                        println!("grading: {g:?}");
                    }
                    if let Some(s) = &e.split {
                        println!("split: ideal {:?}, complement {:?}", s.nil_ideal, s.complement);
                    }
                    for (k, f) in &e.morphisms {
                        println!("morphism {k}: {}", document::matrix_to_json(&f.matrix));
                    }
                    Ok(Outcome::Ok)
                }
                CatalogAction::Export { name } => {
                    let e = cat.get(&name).map_err(|e| invalid("", e))?;
                    print_json(&e.to_json());
                    Ok(Outcome::Ok)
                }
                CatalogAction::Selftest => {
                    let mut failed = false;
                    for (name, r) in cat.self_test() {
                        match r {
                            Ok(()) => println!("ok    {name}"),
                            Err(e) => {
                                failed = true;
                                println!("FAIL  {name}: {e}");
                            }
                        }
                    }
                    if failed {
                        Err(RunError::Internal("catalog self-test failed".into()))
                    } else {
                        Ok(Outcome::Ok)
                    }
                }
            }
        }
    }
}

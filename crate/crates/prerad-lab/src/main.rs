mod expr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use expr::{expr_to_json, parse_expr, submodule_of};
use prerad_core::config::{
    build_from_config, default_max_order, parse_config, parse_seed, run_config, WorkbenchConfig,
    DEFAULT_PRERADICAL_NODES, DEFAULT_SUM_ARITY,
};
use prerad_core::module::{FiniteModule, Submodule};
use prerad_core::products::{box_product, comultiplication, totalizer_check};
use prerad_core::ring::{make_ring, FiniteRing};
use prerad_core::universe::default_universe;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "prerad-lab", version, about = "Preradical workbench over finite rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run proposition suites and emit a deterministic report
    Check(CheckArgs),
    /// Evaluate submodule products and preradical expressions
    #[command(subcommand)]
    Compute(ComputeCmd),
    /// Pretty-print hom-sets, submodule lattices and evaluations
    #[command(subcommand)]
    Inspect(InspectCmd),
    /// List the iso-classes of a preset universe
    Universe(UniverseArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// JSON config file; exclusive with the flag-based selection below
    #[arg(long, conflicts_with_all = ["ring", "suite", "max_order", "sum_arity"])]
    config: Option<PathBuf>,
    #[arg(long)]
    ring: Option<String>,
    /// suite id or "all"; repeatable
    #[arg(long = "suite")]
    suite: Vec<String>,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    sum_arity: Option<usize>,
    /// write the canonical JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// print the canonical JSON instead of the text projection
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// Box product (A box B) inside a module
    Box {
        ring: String,
        module: String,
        a: String,
        b: String,
    },
    /// Comultiplication (A : B) inside a module
    Comult {
        ring: String,
        module: String,
        a: String,
        b: String,
    },
    /// Totalizer of N in M, with its universal property re-verified
    Tot {
        ring: String,
        module: String,
        n: String,
    },
    /// Evaluate a preradical expression on a module
    Eval {
        ring: String,
        expr: String,
        module: String,
        /// print the expression tree and value as JSON
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum InspectCmd {
    /// List all module homomorphisms between two modules
    Hom {
        ring: String,
        src: String,
        dst: String,
    },
    /// Submodule lattice as a Hasse-diagram edge list
    Lattice { ring: String, module: String },
    /// Evaluate a preradical expression, text rendering
    Eval {
        ring: String,
        expr: String,
        module: String,
    },
}

#[derive(Args)]
struct UniverseArgs {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    sum_arity: Option<usize>,
}

/// Module by spec: seed syntax first ("R", "0", "Z2+Z4"), then universe
/// class names (covers rings whose simples need "#" disambiguation).
fn resolve_module(ring: &Arc<FiniteRing>, spec: &str) -> Result<Arc<FiniteModule>> {
    if let Ok(m) = parse_seed(ring, spec) {
        return Ok(m);
    }
    let uv = default_universe(ring, default_max_order(&ring.tag), DEFAULT_SUM_ARITY)?;
    uv.find_class_by_name(spec)
        .map(|c| uv.classes[c].clone())
        .ok_or_else(|| anyhow!("unknown module {spec:?} over {}", ring.tag))
}

fn render_value(m: &FiniteModule, v: &Submodule) -> String {
    if v.is_zero() {
        "0".to_string()
    } else if v.is_full(m) {
        "full".to_string()
    } else {
        let elems: Vec<String> = v.elems.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", elems.join(","))
    }
}

fn cmd_check(args: CheckArgs) -> Result<i32> {
    let cfg = match (&args.config, &args.ring) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            parse_config(&text)?
        }
        (None, Some(ring)) => {
            let suites = if args.suite.is_empty() {
                vec!["all".to_string()]
            } else {
                args.suite.clone()
            };
            let cfg = WorkbenchConfig {
                max_order: args.max_order.unwrap_or_else(|| default_max_order(ring)),
                sum_arity: args.sum_arity.unwrap_or(DEFAULT_SUM_ARITY),
                preradical_nodes: DEFAULT_PRERADICAL_NODES,
                seeds: vec!["R".to_string()],
                suites,
                out: None,
                ring: ring.clone(),
            };
            make_ring(&cfg.ring)?;
            cfg
        }
        _ => bail!("check needs exactly one of --config or --ring"),
    };

    let report = run_config(&cfg)?;
    let json = report.to_canonical_json();
    let out = args.out.or_else(|| cfg.out.as_ref().map(PathBuf::from));
    if let Some(path) = out {
        std::fs::write(&path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    if args.json {
        print!("{json}");
    } else {
        print!("{}", report.render_text());
    }

    let failed = report.failed_assertions();
    if failed.is_empty() {
        Ok(0)
    } else {
        eprintln!("asserted propositions failed: {}", failed.join(", "));
        Ok(1)
    }
}

fn run_compute(cmd: ComputeCmd) -> Result<i32> {
    match cmd {
        ComputeCmd::Box { ring, module, a, b } => {
            let r = make_ring(&ring)?;
            let m = resolve_module(&r, &module)?;
            let sa = submodule_of(&m, &a)?;
            let sb = submodule_of(&m, &b)?;
            let v = box_product(&m, &sa, &sb)?;
            println!("{}", render_value(&m, &v));
        }
        ComputeCmd::Comult { ring, module, a, b } => {
            let r = make_ring(&ring)?;
            let m = resolve_module(&r, &module)?;
            let sa = submodule_of(&m, &a)?;
            let sb = submodule_of(&m, &b)?;
            let v = comultiplication(&m, &sa, &sb)?;
            println!("{}", render_value(&m, &v));
        }
        ComputeCmd::Tot { ring, module, n } => {
            let r = make_ring(&ring)?;
            let m = resolve_module(&r, &module)?;
            let sn = submodule_of(&m, &n)?;
            let (tot, universal, minimal) = totalizer_check(&m, &sn)?;
            println!("{}", render_value(&m, &tot));
            println!("universal: {universal}");
            println!("minimal: {minimal}");
        }
        ComputeCmd::Eval {
            ring,
            expr,
            module,
            json,
        } => {
            let r = make_ring(&ring)?;
            let e = parse_expr(&r, &expr)?;
            let m = resolve_module(&r, &module)?;
            let v = e.eval(&m)?;
            if json {
                let doc = serde_json::json!({
                    "expr": expr_to_json(&e),
                    "module": module,
                    "value": v.elems.iter().collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                println!("{}", render_value(&m, &v));
            }
        }
    }
    Ok(0)
}

fn run_inspect(cmd: InspectCmd) -> Result<i32> {
    match cmd {
        InspectCmd::Hom { ring, src, dst } => {
            let r = make_ring(&ring)?;
            let a = resolve_module(&r, &src)?;
            let b = resolve_module(&r, &dst)?;
            let homs = prerad_core::hom::hom_set(&a, &b);
            println!("{} morphisms {src} -> {dst}", homs.len());
            for f in &homs {
                let images: Vec<String> = f.gen_images.iter().map(|x| x.to_string()).collect();
                println!("  generators -> [{}]", images.join(", "));
            }
        }
        InspectCmd::Lattice { ring, module } => {
            let r = make_ring(&ring)?;
            let m = resolve_module(&r, &module)?;
            let subs = prerad_core::module::enumerate_submodules(&m);
            println!("{} submodules of {module}", subs.len());
            for (i, s) in subs.iter().enumerate() {
                println!("  [{i}] size {} gens {:?}", s.len(), s.gens);
            }
            // Hasse edges: covering relations only
            for (i, s) in subs.iter().enumerate() {
                for (j, t) in subs.iter().enumerate() {
                    if i == j || !s.elems.is_subset(&t.elems) || s.elems == t.elems {
                        continue;
                    }
                    let covered = !subs.iter().enumerate().any(|(k, u)| {
                        k != i
                            && k != j
                            && s.elems.is_subset(&u.elems)
                            && u.elems.is_subset(&t.elems)
                            && u.elems != s.elems
                            && u.elems != t.elems
                    });
                    if covered {
                        println!("  edge [{i}] < [{j}]");
                    }
                }
            }
        }
        InspectCmd::Eval { ring, expr, module } => {
            let r = make_ring(&ring)?;
            let e = parse_expr(&r, &expr)?;
            let m = resolve_module(&r, &module)?;
            println!("{}", render_value(&m, &e.eval(&m)?));
        }
    }
    Ok(0)
}

fn run_universe(args: UniverseArgs) -> Result<i32> {
    let cfg = WorkbenchConfig {
        max_order: args
            .max_order
            .unwrap_or_else(|| default_max_order(&args.ring)),
        sum_arity: args.sum_arity.unwrap_or(DEFAULT_SUM_ARITY),
        preradical_nodes: DEFAULT_PRERADICAL_NODES,
        seeds: vec!["R".to_string()],
        suites: vec![],
        out: None,
        ring: args.ring.clone(),
    };
    let (_, uv) = build_from_config(&cfg)?;
    println!(
        "ring {} | {} classes (max_order {}, sum_arity {})",
        cfg.ring, uv.num_classes(), cfg.max_order, cfg.sum_arity
    );
    for (i, m) in uv.classes.iter().enumerate() {
        println!(
            "  [{i}] {:<10} size {:<4} submodules {}",
            uv.names[i],
            m.size,
            uv.submods[i].len()
        );
    }
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Check(args) => cmd_check(args),
        Cmd::Compute(cmd) => run_compute(cmd),
        Cmd::Inspect(cmd) => run_inspect(cmd),
        Cmd::Universe(args) => run_universe(args),
    };
    match code {
        Ok(c) => std::process::exit(c),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

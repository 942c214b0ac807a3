//! `krc`: generate, export and verify Kirillov-Reshetikhin crystals.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails or a
//! computation errors, 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use kr_crystals::cartan::{AffineType, ClassicalType, Family};
use kr_crystals::classical::ClassicalGraph;
use kr_crystals::crystal::Crystal;
use kr_crystals::energy::EnergyContext;
use kr_crystals::export::{element_key, tableau_key, GraphExport};
use kr_crystals::kr::DEFAULT_CAP;
use kr_crystals::lusztig::{self, frak_k, rectangle_blocks, Group, LeviSelection, LusztigEvaluator};
use kr_crystals::partition::{Partition, RectangleList};
use kr_crystals::poly::LaurentPoly;
use kr_crystals::splitting::{state_rects, state_vertices, Splitter};
use kr_crystals::verify::{self, Options};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "krc", version, about = "Kirillov-Reshetikhin crystals, energy and one-dimensional sums")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Text, global = true)]
    emit: Emit,
    /// Directory of cached KR crystals.
    #[arg(long, env = "KR_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,
    /// Vertex cap for crystal generation.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    max_vertices: usize,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Classical highest-weight crystal B(λ).
    Crystal {
        /// Classical type: A, B, C or D.
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: usize,
        /// Highest weight as a partition, e.g. "2,1".
        #[arg(long)]
        lambda: String,
    },
    /// KR crystal B^{r,s} with 0-arrows and σ.
    Kr {
        #[command(flatten)]
        aff: AffineArgs,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Combinatorial R-matrix B^{r1,s1} ⊗ B^{r2,s2} → B^{r2,s2} ⊗ B^{r1,s1}.
    Rmatrix {
        #[command(flatten)]
        aff: AffineArgs,
        /// Two rectangles, e.g. "2x1,1x1".
        #[arg(long)]
        tensors: String,
    },
    /// One-dimensional sums X̄_{λ,B}(q).
    Onedimsum {
        #[command(flatten)]
        aff: AffineArgs,
        #[arg(long)]
        tensors: String,
        /// Restrict to one λ; all λ otherwise.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Row or box splitting of the I_0-highest elements of B^R.
    Split {
        #[command(flatten)]
        aff: AffineArgs,
        #[arg(long)]
        tensors: String,
        #[arg(long, value_enum, default_value_t = SplitMode::Row)]
        mode: SplitMode,
    },
    /// Parabolic Lusztig q-analogues. With --tensors, 𝔎 for the kind of
    /// the affine --type; otherwise K^{G,U}_{λ,μ} for the classical group
    /// of --type (A: GL, B: SO odd, C: Sp, D: SO even).
    Lusztig {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: usize,
        /// Dominant weight, e.g. "2,1,0".
        #[arg(long)]
        lambda: String,
        /// Weight μ for K^{G,U}_{λ,μ}.
        #[arg(long)]
        mu: Option<String>,
        /// Block sizes of the Levi subgroup; the torus when omitted.
        #[arg(long)]
        eta: Option<String>,
        /// Sum over S_n instead of the full Weyl group.
        #[arg(long)]
        stable: bool,
        /// Rectangles for 𝔎, e.g. "1x2,1x1".
        #[arg(long)]
        tensors: Option<String>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
    },
}

#[derive(Args)]
struct AffineArgs {
    /// Affine type: A, C, D (untwisted) or D2 (D_rank^{(2)}).
    #[arg(long = "type")]
    ty: String,
    /// Rank subscript of the affine Dynkin label.
    #[arg(long)]
    rank: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SplitMode {
    /// One row-splitting step S.
    Step,
    /// Full splitting into rows.
    Row,
    /// Splitting into single boxes.
    Box,
}

/// Errors with their exit status.
enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

type Res<T> = Result<T, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn runtime<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Runtime(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.jobs > 0 {
        // The global pool can only be set once per process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {}", m);
            ExitCode::from(2)
        }
    }
}

fn context(g: &Global, a: &AffineArgs) -> Res<EnergyContext> {
    let aff = AffineType::parse(&a.ty, a.rank).map_err(usage)?;
    Ok(EnergyContext::with_cap(aff, g.max_vertices).with_cache_dir(g.cache_dir.clone()))
}

fn parse_weight(text: &str, n: usize) -> Res<Vec<i32>> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    let mut w: Vec<i32> = if text.is_empty() {
        Vec::new()
    } else {
        text.split(',').map(|t| t.trim().parse::<i32>().map_err(|_| usage(format!("bad weight entry {:?}", t)))).collect::<Res<_>>()?
    };
    if w.len() > n {
        return Err(usage(format!("weight {:?} has more than {} entries", text, n)));
    }
    w.resize(n, 0);
    Ok(w)
}

fn parse_rects(text: &str) -> Res<RectangleList> {
    text.parse().map_err(usage)
}

fn poly_json(p: &LaurentPoly) -> Value {
    Value::Object(p.to_map().into_iter().map(|(k, c)| (k.to_string(), json!(c))).collect())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn no_dot(cmd: &str) -> Failure {
    usage(format!("--emit dot is only available for crystal and kr, not {}", cmd))
}

fn run(cli: &Cli) -> Res<String> {
    let g = &cli.global;
    match &cli.command {
        Command::Crystal { ty, rank, lambda } => {
            let ct = ClassicalType::parse(ty, *rank).map_err(usage)?;
            let lam: Partition = lambda.parse().map_err(usage)?;
            if lam.len() > ct.n {
                return Err(usage(format!("{} has more than {} parts", lam, ct.n)));
            }
            let graph = ClassicalGraph::highest_weight(ct, &lam, g.max_vertices).map_err(runtime)?;
            let keys = graph.vertices.iter().map(element_key).collect();
            let ex = GraphExport::new(&format!("{} B{}", ct, lam), &graph, keys, None);
            Ok(render_graph(&ex, g.emit))
        }
        Command::Kr { aff, r, s } => {
            let ctx = context(g, aff)?;
            let k = ctx.kr((*r, *s)).map_err(runtime)?;
            let sigma = if ctx.aff.kind() == kr_crystals::partition::Kind::Empty { None } else { Some(ctx.sigma((*r, *s)).map_err(runtime)?.to_vec()) };
            let keys = k.vertices.iter().map(tableau_key).collect();
            let ex = GraphExport::new(&format!("{} B^{{{},{}}}", ctx.aff, r, s), &*k, keys, sigma);
            if g.emit == Emit::Text {
                let mut out = ex.to_text();
                out.push_str(&format!("level: {}\n", k.level()));
                return Ok(out);
            }
            Ok(render_graph(&ex, g.emit))
        }
        Command::Rmatrix { aff, tensors } => {
            let ctx = context(g, aff)?;
            let rl = parse_rects(tensors)?;
            let [a, b] = rl.rects() else { return Err(usage("rmatrix needs exactly two rectangles")) };
            let rm = ctx.rmatrix(*a, *b).map_err(runtime)?;
            match g.emit {
                Emit::Dot => Err(no_dot("rmatrix")),
                Emit::Json => {
                    let entries: Vec<Value> = (0..rm.src.len())
                        .map(|x| json!({"from": rm.src.label(x), "to": rm.tgt.label(rm.map[x] as usize), "hbar": rm.hbar[x]}))
                        .collect();
                    Ok(pretty(&json!({"type": ctx.aff.to_string(), "tensors": rl.to_string(), "entries": entries})))
                }
                Emit::Text => Ok((0..rm.src.len())
                    .map(|x| format!("{} ↦ {}  H̄={}\n", rm.src.label(x), rm.tgt.label(rm.map[x] as usize), rm.hbar[x]))
                    .collect()),
            }
        }
        Command::Onedimsum { aff, tensors, lambda } => {
            let ctx = context(g, aff)?;
            let rl = parse_rects(tensors)?;
            let sums = ctx.one_dim_sums(&rl).map_err(runtime)?;
            if let Some(l) = lambda {
                let lam: Partition = l.parse().map_err(usage)?;
                let p = sums.get(&lam).cloned().unwrap_or_default();
                return match g.emit {
                    Emit::Dot => Err(no_dot("onedimsum")),
                    Emit::Json => Ok(pretty(&poly_json(&p))),
                    Emit::Text => Ok(format!("{}\n", p)),
                };
            }
            match g.emit {
                Emit::Dot => Err(no_dot("onedimsum")),
                Emit::Json => Ok(pretty(&Value::Object(sums.iter().map(|(l, p)| (l.to_string(), poly_json(p))).collect()))),
                Emit::Text => Ok(sums.iter().map(|(l, p)| format!("{}: {}\n", l, p)).collect()),
            }
        }
        Command::Split { aff, tensors, mode } => {
            let ctx = context(g, aff)?;
            let rl = parse_rects(tensors)?;
            let sp = Splitter::new(&ctx);
            let t = ctx.tensor(&rl).map_err(runtime)?;
            let mut rows = Vec::new();
            for v in ctx.highest_elements(&rl).map_err(runtime)? {
                let st = match mode {
                    SplitMode::Step => sp.split_step(&rl, &v).map_err(runtime)?.ok_or_else(|| usage("row splitting needs a rectangle with at least two rows"))?,
                    SplitMode::Row => sp.full_row_split(&rl, &v).map_err(runtime)?,
                    SplitMode::Box => sp.box_split(&rl, &v).map_err(runtime)?,
                };
                let (sr, sv) = (state_rects(&st), state_vertices(&st));
                let image = ctx.tensor(&sr).map_err(runtime)?;
                let before = ctx.energy_tensor(&rl, &v).map_err(runtime)?;
                let after = ctx.energy_tensor(&sr, &sv).map_err(runtime)?;
                rows.push((t.label(t.encode(&v)), sr.to_string(), image.label(image.encode(&sv)), before, after));
            }
            match g.emit {
                Emit::Dot => Err(no_dot("split")),
                Emit::Json => Ok(pretty(&Value::Array(
                    rows.iter().map(|r| json!({"element": r.0, "shape": r.1, "image": r.2, "energy": r.3, "image_energy": r.4})).collect(),
                ))),
                Emit::Text => Ok(rows.iter().map(|r| format!("{} ↦ {} in {}  D: {} → {}\n", r.0, r.2, r.1, r.3, r.4)).collect()),
            }
        }
        Command::Lusztig { ty, rank, lambda, mu, eta, stable, tensors } => {
            let p = match tensors {
                Some(t) => {
                    let aff = AffineType::parse(ty, *rank).map_err(usage)?;
                    let n = aff.n();
                    let rl = parse_rects(t)?;
                    let blocks = rectangle_blocks(rl.rects(), n).map_err(usage)?;
                    frak_k(&blocks, &parse_weight(lambda, n)?, aff.kind(), lusztig::DEFAULT_RANK_CAP).map_err(runtime)?
                }
                None => {
                    let ct = ClassicalType::parse(ty, *rank).map_err(usage)?;
                    let group = match ct.family {
                        Family::A => Group::Gl,
                        Family::B => Group::SoOdd,
                        Family::C => Group::Sp,
                        Family::D => Group::SoEven,
                    };
                    let n = ct.n;
                    let mu = mu.as_deref().ok_or_else(|| usage("--mu is required without --tensors"))?;
                    let levi = match eta {
                        Some(e) => {
                            let eta: Vec<usize> = e.split(',').map(|x| x.trim().parse().map_err(|_| usage(format!("bad block {:?}", x)))).collect::<Res<_>>()?;
                            if eta.iter().sum::<usize>() != n || eta.contains(&0) {
                                return Err(usage(format!("--eta must be positive and sum to {}", n)));
                            }
                            LeviSelection::new(&eta)
                        }
                        None => LeviSelection::torus(n),
                    };
                    let ev = LusztigEvaluator::new(group, &levi, *stable, lusztig::DEFAULT_RANK_CAP).map_err(runtime)?;
                    ev.eval(&parse_weight(lambda, n)?, &parse_weight(mu, n)?).map_err(runtime)?
                }
            };
            match g.emit {
                Emit::Dot => Err(no_dot("lusztig")),
                Emit::Json => Ok(pretty(&poly_json(&p))),
                Emit::Text => Ok(format!("{}\n", p)),
            }
        }
        Command::Verify { suite } => {
            let opts = Options { jobs: g.jobs, max_vertices: g.max_vertices, cache_dir: g.cache_dir.clone(), contexts: Arc::default(), ..Options::default() };
            let report = verify::run_suite(suite, &opts).ok_or_else(|| usage(format!("unknown suite {:?}", suite)))?;
            let out = match g.emit {
                Emit::Dot => return Err(no_dot("verify")),
                Emit::Json => report.to_json() + "\n",
                Emit::Text => report.to_text(),
            };
            if report.passed {
                Ok(out)
            } else {
                print!("{}", out);
                Err(Failure::Verification)
            }
        }
    }
}

fn render_graph(ex: &GraphExport, emit: Emit) -> String {
    match emit {
        Emit::Json => ex.to_json() + "\n",
        Emit::Dot => ex.to_dot(),
        Emit::Text => ex.to_text(),
    }
}

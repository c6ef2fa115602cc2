//! Command-line front end for stratalab.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on bad input.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use stratalab::orbits::{self, Algebra, ClassicalLevi, LeviOrbit, OrbitLabel, Partition};
use stratalab::sheets::{self, IsolatedExtension, PseudoLevis};
use stratalab::strata::StrataAnalysis;
use stratalab::verify::{self, Check, Report};
use stratalab::{CartanType, Config, Error, Poset, RootSystem, WeylGroup};

#[derive(Parser)]
#[command(
    name = "stratalab",
    version,
    about = "Weyl-group strata, pseudo-Levi sheets and nilpotent orbit partitions"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    /// Largest Weyl group that may be enumerated.
    #[arg(long, global = true, env = "STRATALAB_BUDGET")]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Root systems.
    Roots {
        #[command(subcommand)]
        cmd: RootsCmd,
    },
    /// Conjugacy classes of Weyl groups.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// Spherical strata.
    Strata {
        #[command(subcommand)]
        cmd: StrataCmd,
    },
    /// Nilpotent orbits of classical Lie algebras.
    Orbits {
        #[command(subcommand)]
        cmd: OrbitsCmd,
    },
    /// Pseudo-Levi subsystems and sheets.
    Sheets {
        #[command(subcommand)]
        cmd: SheetsCmd,
    },
    /// Run verification checks.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Family letter (A-G) or a full label such as E6.
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn cartan(&self) -> Result<CartanType, Error> {
        CartanType::parse(&self.ty, self.rank)
    }
}

#[derive(Subcommand)]
enum RootsCmd {
    Show(TypeArgs),
}

#[derive(Subcommand)]
enum WeylCmd {
    /// All conjugacy classes.
    Classes(TypeArgs),
    /// Conjugacy classes of involutions.
    Involutions(TypeArgs),
}

#[derive(Subcommand)]
enum StrataCmd {
    /// One line per stratum.
    List(TypeArgs),
    /// Dimension of each stratum.
    Dims(TypeArgs),
}

#[derive(Subcommand)]
enum OrbitsCmd {
    /// Conjugate partition.
    Dual { partition: String },
    /// Dominance order.
    Dominance { p: String, q: String },
    /// The sheet order of type A.
    Preceq { p: String, q: String },
    /// Largest orbit of the algebra dominated by a partition.
    Collapse {
        #[arg(long)]
        algebra: String,
        partition: String,
    },
    /// Induce an orbit from a Levi subalgebra.
    Induce {
        #[arg(long)]
        algebra: String,
        /// Sizes of the gl blocks, comma separated.
        #[arg(long, default_value = "")]
        blocks: String,
        /// Orbit on each gl block, in block order (defaults to zero orbits).
        #[arg(long)]
        nu: Vec<String>,
        /// Orbit on the residual factor (defaults to the zero orbit).
        #[arg(long)]
        mu: Option<String>,
    },
    /// Rigidity of one orbit, or of every orbit of the algebra.
    Rigid {
        #[arg(long)]
        algebra: String,
        partition: Option<String>,
    },
    /// Rigid orbits with a non-rigid orbit in their closure.
    Scan {
        #[arg(long)]
        algebra: String,
    },
    /// Hasse diagram of the dominance or sheet order.
    Hasse {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value_t = Order::Dominance)]
        order: Order,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Dominance,
    Preceq,
}

#[derive(Subcommand)]
enum SheetsCmd {
    /// Pairs of a pseudo-Levi class and a rigid orbit.
    List(TypeArgs),
    /// Pseudo-Levi classes.
    Pseudolevis(TypeArgs),
    /// Closure poset of the sheets of sl(n).
    Poset {
        #[arg(long)]
        n: usize,
    },
    /// Extend a pseudo-Levi basis to full rank.
    Isolated {
        #[command(flatten)]
        ty: TypeArgs,
        /// Extended-diagram node indices, comma separated (0 is the lowest root).
        #[arg(long)]
        indices: String,
        /// List every extension instead of the default one.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    check: Vec<String>,
    /// Every check; over the default type matrix unless a type is given.
    #[arg(long)]
    all: bool,
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut config = Config::from_env();
    if let Some(b) = cli.budget {
        config = config.with_scan_budget(b);
    }
    match run(&cli, &config) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, config: &Config) -> Out {
    let f = cli.format;
    match &cli.command {
        Command::Roots { cmd: RootsCmd::Show(t) } => roots_show(t, f),
        Command::Weyl { cmd } => weyl(cmd, f, config),
        Command::Strata { cmd } => strata(cmd, f, config),
        Command::Orbits { cmd } => orbits_cmd(cmd, f, config),
        Command::Sheets { cmd } => sheets_cmd(cmd, f, config),
        Command::Verify(v) => verify_cmd(v, f, config),
    }
}

fn no_dot(f: Format) -> Result<(), Failure> {
    if f == Format::Dot {
        return Err(Failure::Usage("DOT output is only available for posets".into()));
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Out {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn word(w: &[usize]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn roots_show(t: &TypeArgs, f: Format) -> Out {
    no_dot(f)?;
    let sys = RootSystem::build(t.cartan()?);
    if f == Format::Json {
        return to_json(&sys.export());
    }
    let mut out = vec![
        format!(
            "type {}  rank {}  roots {}",
            sys.cartan_type(),
            sys.rank(),
            sys.roots().len()
        ),
        format!("highest root {}", sys.highest_root()),
        "positive roots:".into(),
    ];
    out.extend(sys.positive_roots().iter().map(|r| format!("  {r}")));
    Ok(lines(out))
}

fn weyl(cmd: &WeylCmd, f: Format, config: &Config) -> Out {
    no_dot(f)?;
    let (t, involutions) = match cmd {
        WeylCmd::Classes(t) => (t, false),
        WeylCmd::Involutions(t) => (t, true),
    };
    let group = WeylGroup::new(&RootSystem::build(t.cartan()?));
    let classes = if involutions {
        group.involution_classes(config.scan_budget)?
    } else {
        group.conjugacy_classes(config.scan_budget)?
    };
    let exports: Vec<_> = classes.iter().map(|c| group.export_class(c)).collect();
    if f == Format::Json {
        return to_json(&exports);
    }
    let mut out = vec![format!("{:>6} {:>5} {:>5}  maximum", "size", "lmin", "lmax")];
    out.extend(exports.iter().map(|e| {
        format!(
            "{:>6} {:>5} {:>5}  {}",
            e.size,
            e.min_length,
            e.max_length,
            e.maximum_word.as_deref().map_or("-".to_string(), word)
        )
    }));
    Ok(lines(out))
}

fn strata(cmd: &StrataCmd, f: Format, config: &Config) -> Out {
    let (t, dims_only) = match cmd {
        StrataCmd::List(t) => (t, false),
        StrataCmd::Dims(t) => (t, true),
    };
    let analysis = StrataAnalysis::new(&RootSystem::build(t.cartan()?), config.scan_budget)?;
    let strata = analysis.spherical_strata();
    let exports: Vec<_> = strata.iter().map(|s| analysis.export_stratum(s)).collect();
    match f {
        Format::Json if dims_only => to_json(
            &exports
                .iter()
                .map(|e| json!({"pi": e.pi, "dim": e.dim}))
                .collect::<Vec<_>>(),
        ),
        Format::Json => to_json(&exports),
        Format::Dot => {
            let group = analysis.group();
            let poset = Poset::new((0..strata.len()).collect(), |&a: &usize, &b: &usize| {
                group.bruhat_leq(&strata[a].m_c, &strata[b].m_c)
            });
            Ok(poset.to_dot("strata", |&i| {
                format!("{} dim {}", word(&exports[i].m_word), exports[i].dim)
            }))
        }
        Format::Table if dims_only => Ok(lines(exports.iter().map(|e| format!("{:?} {}", e.pi, e.dim)))),
        Format::Table => {
            let mut out = vec![format!("{} strata", exports.len())];
            for e in &exports {
                let classes: Vec<String> = e
                    .classes
                    .iter()
                    .map(|c| format!("{}:{}", c.size, word(&c.max_word)))
                    .collect();
                out.push(format!(
                    "pi={:?} dim={} m={} classes=[{}]",
                    e.pi,
                    e.dim,
                    word(&e.m_word),
                    classes.join("; ")
                ));
            }
            Ok(lines(out))
        }
    }
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Ok(Partition::parse(s)?)
}

fn algebra(s: &str) -> Result<Algebra, Failure> {
    Ok(Algebra::parse(s)?)
}

fn orbit_line(o: &OrbitLabel, bound: usize) -> Result<String, Failure> {
    Ok(format!(
        "{}  dim={}  rigid={}",
        o,
        orbits::orbit_dimension(o),
        orbits::is_rigid(o, bound)?
    ))
}

fn orbits_cmd(cmd: &OrbitsCmd, f: Format, config: &Config) -> Out {
    let bound = config.rigidity_dim_bound;
    if !matches!(cmd, OrbitsCmd::Hasse { .. }) {
        no_dot(f)?;
    }
    let json = f == Format::Json;
    match cmd {
        OrbitsCmd::Dual { partition: p } => {
            let d = partition(p)?.dual();
            if json {
                to_json(&d)
            } else {
                Ok(format!("{d}\n"))
            }
        }
        OrbitsCmd::Dominance { p, q } | OrbitsCmd::Preceq { p, q } => {
            let (p, q) = (partition(p)?, partition(q)?);
            let r = if matches!(cmd, OrbitsCmd::Dominance { .. }) {
                orbits::dominance_leq(&p, &q)?
            } else {
                orbits::sheet_preceq(&p, &q)?
            };
            if json {
                to_json(&json!({"p": p, "q": q, "result": r}))
            } else {
                Ok(format!("{r}\n"))
            }
        }
        OrbitsCmd::Collapse {
            algebra: a,
            partition: p,
        } => {
            let o = orbits::collapse(algebra(a)?, &partition(p)?)?;
            if json {
                to_json(&orbits::export_orbit(&o, bound)?)
            } else {
                Ok(format!("{}\n", o.partition()))
            }
        }
        OrbitsCmd::Induce {
            algebra: a,
            blocks,
            nu,
            mu,
        } => {
            let a = algebra(a)?;
            let blocks: Vec<usize> = partition(blocks)?.parts().to_vec();
            let residual = if a.is_type_a() {
                0
            } else {
                a.natural_dim()
                    .checked_sub(2 * blocks.iter().sum::<usize>())
                    .ok_or_else(|| Failure::Usage("blocks too large".into()))?
            };
            let levi = ClassicalLevi::new(a, blocks.clone(), residual)?;
            let mut orbit = LeviOrbit::zero(&levi);
            if !nu.is_empty() {
                if nu.len() != blocks.len() {
                    return Err(Failure::Usage("give one --nu per block".into()));
                }
                orbit.nus = nu.iter().map(|s| partition(s)).collect::<Result<_, _>>()?;
            }
            if let Some(mu) = mu {
                orbit.mu = partition(mu)?;
            }
            let o = orbits::induce(&levi, &orbit)?;
            if json {
                to_json(&orbits::export_orbit(&o, bound)?)
            } else {
                Ok(lines([orbit_line(&o, bound)?]))
            }
        }
        OrbitsCmd::Rigid {
            algebra: a,
            partition: p,
        } => {
            let a = algebra(a)?;
            let labels = match p {
                Some(p) => vec![OrbitLabel::new(a, partition(p)?)?],
                None => orbits::orbits(a),
            };
            if json {
                let ex: Vec<_> = labels
                    .iter()
                    .map(|o| orbits::export_orbit(o, bound))
                    .collect::<Result<_, _>>()?;
                to_json(&ex)
            } else {
                Ok(lines(
                    labels
                        .iter()
                        .map(|o| orbit_line(o, bound))
                        .collect::<Result<Vec<_>, _>>()?,
                ))
            }
        }
        OrbitsCmd::Scan { algebra: a } => {
            let pairs = orbits::counterexample_scan(algebra(a)?, bound)?;
            if json {
                let ex: Vec<_> = pairs
                    .iter()
                    .map(|(x, y)| Ok(json!({"rigid": orbits::export_orbit(x, bound)?, "non_rigid": orbits::export_orbit(y, bound)?})))
                    .collect::<Result<_, Failure>>()?;
                to_json(&ex)
            } else {
                Ok(lines(pairs.iter().map(|(x, y)| format!("{x} > {y}"))))
            }
        }
        OrbitsCmd::Hasse { algebra: a, order } => {
            let a = algebra(a)?;
            if *order == Order::Preceq && !a.is_type_a() {
                return Err(Failure::Usage("the sheet order is defined for gl/sl only".into()));
            }
            if a.natural_dim() > config.poset_bound {
                return Err(Error::BoundExceeded {
                    size: a.natural_dim(),
                    bound: config.poset_bound,
                }
                .into());
            }
            let poset = Poset::new(orbits::orbits(a), |x: &OrbitLabel, y: &OrbitLabel| match order {
                Order::Dominance => x.closure_leq(y).expect("same algebra"),
                Order::Preceq => orbits::sheet_closure_leq(x, y).expect("type A"),
            });
            poset_output(&poset, f, &a.to_string(), label_text)
        }
    }
}

fn label_text(o: &OrbitLabel) -> String {
    let s = o.to_string();
    s[s.find('[').unwrap_or(0)..].to_string()
}

fn poset_output<T>(poset: &Poset<T>, f: Format, name: &str, label: impl Fn(&T) -> String) -> Out {
    let edges = poset.hasse_edges();
    match f {
        Format::Dot => Ok(poset.to_dot(name, label)),
        Format::Json => to_json(&json!({
            "elements": poset.elements().iter().map(&label).collect::<Vec<_>>(),
            "hasse": edges,
        })),
        Format::Table => Ok(lines(edges.iter().map(|&(a, b)| {
            format!("{} < {}", label(&poset.elements()[a]), label(&poset.elements()[b]))
        }))),
    }
}

fn indices(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse().map_err(|_| Failure::Usage(format!("bad index {x:?}"))))
        .collect()
}

fn sheets_cmd(cmd: &SheetsCmd, f: Format, config: &Config) -> Out {
    if !matches!(cmd, SheetsCmd::Poset { .. }) {
        no_dot(f)?;
    }
    let json = f == Format::Json;
    match cmd {
        SheetsCmd::List(t) => {
            let p = PseudoLevis::new(&RootSystem::build(t.cartan()?), config.scan_budget)?;
            let pairs = p.sheet_pairs(config.rigidity_dim_bound)?;
            if json {
                return to_json(&pairs.iter().map(|s| s.export()).collect::<Vec<_>>());
            }
            let mut out = vec![format!("{} sheet pairs", pairs.len())];
            out.extend(pairs.iter().map(|s| {
                let orbits: Vec<String> = s
                    .orbits
                    .iter()
                    .map(|o| format!("[{}]", o.partition().compact()))
                    .collect();
                format!(
                    "{:<14} {:?}  {}",
                    s.levi.type_label(),
                    s.levi.representative().indices(),
                    orbits.join(" ")
                )
            }));
            Ok(lines(out))
        }
        SheetsCmd::Pseudolevis(t) => {
            let p = PseudoLevis::new(&RootSystem::build(t.cartan()?), config.scan_budget)?;
            if json {
                return to_json(&p.classes().iter().map(|c| c.export()).collect::<Vec<_>>());
            }
            let mut out = vec![format!("{:<16} {:<16} {:>5} {:>3}", "type", "nodes", "levi", "z")];
            out.extend(p.classes().iter().map(|c| {
                format!(
                    "{:<16} {:<16} {:>5} {:>3}",
                    c.type_label(),
                    format!("{:?}", c.representative().indices()),
                    c.is_levi(),
                    c.center_component_order()
                )
            }));
            Ok(lines(out))
        }
        SheetsCmd::Poset { n } => {
            let poset = sheets::sl_sheet_poset(*n, config.poset_bound)?;
            poset_output(&poset, f, &format!("sl{n}"), |p| format!("[{}]", p.compact()))
        }
        SheetsCmd::Isolated { ty, indices: idx, all } => {
            let sys = RootSystem::build(ty.cartan()?);
            let p = PseudoLevis::new(&sys, config.scan_budget)?;
            let idx = indices(idx)?;
            let describe = |b: &stratalab::SubsystemBasis| -> Result<serde_json::Value, Failure> {
                let class = p.class_of(b.indices())?;
                Ok(json!({"indices": b.indices(), "type": class.type_label()}))
            };
            if *all {
                let exts = p.isolated_extensions(&idx)?;
                let ex: Vec<_> = exts.iter().map(&describe).collect::<Result<_, _>>()?;
                if json {
                    return to_json(&ex);
                }
                return Ok(lines(
                    ex.iter()
                        .map(|e| format!("{} {}", e["indices"], e["type"].as_str().unwrap_or(""))),
                ));
            }
            let (kind, basis) = match p.isolated_extension(&idx)? {
                IsolatedExtension::Isolated(b) => ("isolated", b),
                IsolatedExtension::Levi(b) => ("levi", b),
                IsolatedExtension::Extended(b) => ("extended", b),
            };
            let d = describe(&basis)?;
            if json {
                to_json(&json!({"result": kind, "basis": d}))
            } else {
                Ok(format!(
                    "{kind} {} {}\n",
                    d["indices"],
                    d["type"].as_str().unwrap_or("")
                ))
            }
        }
    }
}

fn verify_cmd(v: &VerifyArgs, f: Format, config: &Config) -> Out {
    no_dot(f)?;
    let ty = match &v.ty {
        Some(t) => Some(CartanType::parse(t, v.rank)?),
        None => None,
    };
    let checks: Vec<Check> = v.check.iter().map(|c| c.parse()).collect::<Result<_, _>>()?;
    if checks.is_empty() && !v.all {
        return Err(Failure::Usage("give --check NAME or --all".into()));
    }
    let report = if v.all && ty.is_none() {
        verify::run_all(config)
    } else {
        let list: Vec<Check> = if v.all { Check::ALL.to_vec() } else { checks };
        let mut outcomes = Vec::new();
        for c in list {
            outcomes.extend(verify::run(c, ty, config)?.outcomes);
        }
        Report { outcomes }
    };
    let text = if f == Format::Json {
        let rows: Vec<_> = report
            .outcomes
            .iter()
            .map(|o| json!({"check": o.check.name(), "scope": o.scope, "passed": o.passed, "detail": o.detail}))
            .collect();
        serde_json::to_string_pretty(&rows)? + "\n"
    } else {
        report.render()
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

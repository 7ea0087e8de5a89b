use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sobriety::check::{Checker, Property};
use sobriety::construct::{self, ReflectionKind};
use sobriety::power::{self, HoareFamily};
use sobriety::system::{h_sets, Base, SubsetSystemId};
use sobriety::zoo::{self, SymbolicSpace};
use sobriety::{Caps, Error, FiniteSpace};

#[derive(Parser)]
#[command(name = "sobriety", version, about = "Exact computations on finite T0 spaces")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct CapArgs {
    #[arg(long, global = true)]
    cap_families: Option<usize>,
    #[arg(long, global = true)]
    cap_rudin: Option<usize>,
    #[arg(long, global = true)]
    cap_subset_scan: Option<usize>,
    #[arg(long, global = true)]
    cap_smyth: Option<usize>,
    #[arg(long, global = true)]
    cap_double_smyth: Option<usize>,
    #[arg(long, global = true)]
    cap_maps: Option<usize>,
    #[arg(long, global = true)]
    cap_product: Option<usize>,
    #[arg(long, global = true)]
    cap_targets: Option<usize>,
    #[arg(long, global = true)]
    cap_filters: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let mut c = Caps::default();
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut c.families, self.cap_families);
        set(&mut c.rudin, self.cap_rudin);
        set(&mut c.subset_scan, self.cap_subset_scan);
        set(&mut c.smyth, self.cap_smyth);
        set(&mut c.double_smyth, self.cap_double_smyth);
        set(&mut c.maps, self.cap_maps);
        set(&mut c.product, self.cap_product);
        set(&mut c.targets, self.cap_targets);
        set(&mut c.filters, self.cap_filters);
        c
    }
}

#[derive(Subcommand)]
enum Command {
    /// Carrier, order and derived families of a space.
    Inspect {
        #[arg(long)]
        space: String,
    },
    /// Run a checker with its cross-characterization report.
    Check {
        #[arg(long)]
        space: String,
        #[arg(long)]
        prop: String,
        #[arg(long)]
        system: Option<String>,
        /// Only the primary characterization.
        #[arg(long)]
        fast: bool,
        /// Also print the full condition reports for the system.
        #[arg(long)]
        cross: bool,
    },
    /// Products, function spaces and power spaces.
    Construct {
        #[arg(value_enum)]
        op: ConstructOp,
        /// One space, or two for products and function spaces.
        #[arg(long, required = true)]
        space: Vec<String>,
    },
    /// Build a reflection and verify its universal property.
    Reflect {
        #[arg(long)]
        space: String,
        #[arg(long, default_value = "D")]
        system: String,
        #[arg(long, default_value = "h_sobrification")]
        kind: String,
        /// Largest target size for the universal property.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// List the symbolic spaces, or verify their claims.
    Zoo { space: Option<String>, claim: Option<String> },
    /// Random posets through the full invariant suite.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_points: usize,
    },
    /// DOT drawing of a space or one of its power spaces.
    Render {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value_t = RenderWhat::Space)]
        what: RenderWhat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructOp {
    Product,
    FunctionSpace,
    Smyth,
    Hoare,
    DoubleSmyth,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderWhat {
    Space,
    Smyth,
    Hoare,
}

enum Outcome {
    Ok(String),
    Violation(String),
}

fn builtin(name: &str) -> Option<FiniteSpace> {
    Some(match name {
        "sierpinski" => FiniteSpace::sierpinski(),
        "one_point" => FiniteSpace::one_point(),
        "diamond" => FiniteSpace::diamond(),
        "chain3" => FiniteSpace::chain(&["a", "b", "c"]),
        "antichain2" => FiniteSpace::antichain(&["a", "b"]),
        _ => return None,
    })
}

/// A file path, or `builtin:<name>`.
fn load(spec: &str) -> Result<FiniteSpace, Error> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin(name).ok_or_else(|| Error::Parse(format!("unknown builtin space `{name}`")));
    }
    let text = std::fs::read_to_string(PathBuf::from(spec)).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
    FiniteSpace::parse(&text)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn legend_json(legend: &[(String, Vec<String>)]) -> Value {
    Value::Array(legend.iter().map(|(k, v)| json!({ "label": k, "set": v })).collect())
}

fn render_space(x: &FiniteSpace, name: &str, legend: &[(String, Vec<String>)], format: Format, extra: Value) -> String {
    match format {
        Format::Dot => x.to_dot(name, legend),
        Format::Text => {
            let mut s = format!("{name}: {} points\n", x.len());
            for (a, b) in x.hasse_covers() {
                s.push_str(&format!("  {} < {}\n", x.label(a), x.label(b)));
            }
            for (k, v) in legend {
                s.push_str(&format!("  {k} = {{{}}}\n", v.join(",")));
            }
            s
        }
        Format::Json => {
            let mut v = json!({ "space": x.to_description(), "legend": legend_json(legend) });
            if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
                m.extend(e);
            }
            pretty(&v)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let caps = cli.caps.caps();
    match &cli.command {
        Command::Inspect { space } => {
            let x = load(space)?;
            let closed = x.down_sets(Some(1 << 12)).map(|v| v.len()).ok();
            let compacts = x.compact_sets(Some(1 << 12)).map(|v| v.len()).ok();
            let mut systems = serde_json::Map::new();
            for h in SubsetSystemId::all_base() {
                let cat = h_sets(h, &x, &caps);
                systems.insert(h.to_string(), json!({ "sets": cat.sets.len(), "scope": cat.scope.to_string() }));
            }
            let derived = if x.len() <= 6 {
                Some(construct::derived_families(&x, Base::D, &caps)?)
            } else {
                None
            };
            let irr: Vec<Vec<String>> = (0..x.len()).map(|i| x.label_list(x.down_of_point(i))).collect();
            let v = json!({
                "space": x.to_description(),
                "points": x.len(),
                "closed_sets": closed,
                "compact_saturated_sets": compacts,
                "irreducible_closed_sets": irr,
                "h_sets": systems,
                "derived_families": derived,
            });
            Ok(Outcome::Ok(match cli.format {
                Format::Dot => x.to_dot("space", &[]),
                _ => pretty(&v),
            }))
        }
        Command::Check { space, prop, system, fast, cross } => {
            let x = load(space)?;
            let p: Property = prop.parse()?;
            let h: Option<SubsetSystemId> = system.as_deref().map(str::parse).transpose()?;
            let c = Checker::new(&x, &caps);
            let verdict = c.check_with(p, h, *fast)?;
            let mut v = verdict.to_json();
            if *cross {
                let h = h.ok_or_else(|| Error::MissingSystem("cross".into()))?;
                let a = serde_json::to_value(c.crosscheck_h_sober(h)?).unwrap_or_default();
                let b = serde_json::to_value(c.crosscheck_super(h)?).unwrap_or_default();
                if let Value::Object(m) = &mut v {
                    m.insert("crosscheck_h_sober".into(), a);
                    m.insert("crosscheck_super".into(), b);
                }
            }
            let text = match cli.format {
                Format::Text => format!(
                    "{}: holds={} agreed={}\n",
                    verdict.property, verdict.holds, verdict.characterizations_agreed
                ),
                _ => pretty(&v),
            };
            if verdict.characterizations_agreed {
                Ok(Outcome::Ok(text))
            } else {
                Ok(Outcome::Violation(text))
            }
        }
        Command::Construct { op, space } => {
            let xs: Vec<FiniteSpace> = space.iter().map(|s| load(s)).collect::<Result<_, _>>()?;
            let need = |n: usize| -> Result<(), Error> {
                if xs.len() == n {
                    Ok(())
                } else {
                    Err(Error::Parse(format!("expected {n} --space arguments, got {}", xs.len())))
                }
            };
            let out = match op {
                ConstructOp::Product => {
                    let p = construct::product(&xs, &caps)?;
                    render_space(&p.space, "product", &[], cli.format, json!({}))
                }
                ConstructOp::FunctionSpace => {
                    need(2)?;
                    let f = construct::function_space(&xs[0], &xs[1], &caps)?;
                    render_space(&f.space, "function_space", &f.legend(), cli.format, json!({}))
                }
                ConstructOp::Smyth => {
                    need(1)?;
                    let s = power::smyth(&xs[0], &caps)?;
                    render_space(s.as_space(), "smyth", &s.legend(), cli.format, json!({}))
                }
                ConstructOp::Hoare => {
                    need(1)?;
                    let h = power::hoare(&xs[0], &HoareFamily::AllClosed, &caps)?;
                    render_space(h.as_space(), "hoare", &h.legend(), cli.format, json!({}))
                }
                ConstructOp::DoubleSmyth => {
                    need(1)?;
                    let u = power::smyth_union(&xs[0], &caps)?;
                    let extra = json!({ "union_map": u.map.describe() });
                    render_space(u.double.as_space(), "double_smyth", &u.double.legend(), cli.format, extra)
                }
            };
            Ok(Outcome::Ok(out))
        }
        Command::Reflect { space, system, kind, bound } => {
            let x = load(space)?;
            let h: SubsetSystemId = system.parse()?;
            let k: ReflectionKind = kind.parse()?;
            let r = construct::reflect(&x, h, k, &caps)?;
            let u = construct::universal_property_verify(&r, *bound, &caps)?;
            let out = match cli.format {
                Format::Dot => r.reflected().to_dot("reflection", &r.carrier_labeling()),
                Format::Text => format!(
                    "{k} over {h}: {} points, {} maps to {} targets, unique={}\n",
                    r.reflected().len(),
                    u.maps,
                    u.targets,
                    u.unique
                ),
                Format::Json => pretty(&json!({ "reflection": r.describe(), "universal_property": u })),
            };
            if u.unique {
                Ok(Outcome::Ok(out))
            } else {
                Ok(Outcome::Violation(out))
            }
        }
        Command::Zoo { space, claim } => {
            let reports = match (space, claim) {
                (None, _) => {
                    let v: Vec<Value> = zoo::ZOO.iter().map(|z| json!({ "space": z, "claims": z.claims() })).collect();
                    return Ok(Outcome::Ok(pretty(&Value::Array(v))));
                }
                (Some(s), None) => {
                    let z: SymbolicSpace = s.parse()?;
                    z.claims().iter().map(|c| zoo::verify_claim(z, c)).collect::<Result<Vec<_>, _>>()?
                }
                (Some(s), Some(c)) => vec![zoo::verify_claim(s.parse()?, c)?],
            };
            let ok = reports.iter().all(|r| r.verdict != zoo::ZooVerdict::Refuted && r.revalidate());
            let out = match cli.format {
                Format::Text => reports
                    .iter()
                    .map(|r| format!("{}.{}: {:?}\n", r.space, r.claim, r.verdict))
                    .collect(),
                _ if reports.len() == 1 => pretty(&reports[0].to_json()),
                _ => pretty(&Value::Array(reports.iter().map(|r| r.to_json()).collect())),
            };
            Ok(if ok { Outcome::Ok(out) } else { Outcome::Violation(out) })
        }
        Command::Sweep { seed, count, max_points } => {
            let r = sobriety::sweep::sweep(*seed, *count, *max_points, &caps)?;
            let out = r.to_json_string();
            Ok(if r.passed() { Outcome::Ok(out) } else { Outcome::Violation(out) })
        }
        Command::Render { space, what } => {
            let x = load(space)?;
            let out = match what {
                RenderWhat::Space => x.to_dot("space", &[]),
                RenderWhat::Smyth => {
                    let s = power::smyth(&x, &caps)?;
                    s.as_space().to_dot("smyth", &s.legend())
                }
                RenderWhat::Hoare => {
                    let h = power::hoare(&x, &HoareFamily::AllClosed, &caps)?;
                    h.as_space().to_dot("hoare", &h.legend())
                }
            };
            Ok(Outcome::Ok(out))
        }
    }
}

fn error_kind(e: &Error) -> String {
    let d = format!("{e:?}");
    d.split(['(', ' ', '{']).next().unwrap_or("Error").to_string()
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Invariant(_) | Error::NoHomeomorphism(_) => 1,
        _ => 2,
    }
}

fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    if !s.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok(s)) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Violation(s)) => {
            emit(&s);
            eprintln!("{}", json!({ "error": "Violation", "message": "a checked property failed" }));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": error_kind(&e), "message": e.to_string() }));
            ExitCode::from(exit_code(&e))
        }
    }
}

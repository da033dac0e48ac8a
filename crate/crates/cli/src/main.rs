use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use g1min::constructions::{
    construct_22, construct_cube, construct_cube_point, convert_2to3, convert_3to2, critical_model,
    enumerate_minimal_weights, oracle_minimality_22, symmetry_filter,
};
use g1min::exactnum::{LocalContext, TrialDivision};
use g1min::invariants::{discriminant, hypercube_invariants, invariant_set, quartic_invariants};
use g1min::minimiser::{minimise_global_with, minimise_local};
use g1min::models::json::ModelFile;
use g1min::models::{Model, ModelKind};
use g1min::weierstrass::level;
use g1min::Error;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "g1min", version, about = "Invariants and minimisation of genus one models")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the resulting model file here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// c4, c6, Delta and the marked point data of a model file.
    Invariants {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Minimise at one prime or at every prime dividing Delta.
    Minimise {
        file: PathBuf,
        #[arg(long, conflicts_with = "global", required_unless_present = "global")]
        prime: Option<u64>,
        #[arg(long)]
        global: bool,
        #[command(flatten)]
        common: Common,
    },
    /// v(Delta), v(Delta_min), kappa and the level at p.
    Level {
        file: PathBuf,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Build a model: a level 0 model from y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x,
    /// or a seeded critical model.
    Construct {
        #[arg(long = "type", value_enum)]
        ty: BuildType,
        /// a1,a2,a3,a4
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        curve: Option<Vec<BigInt>>,
        /// Build a critical model at this prime instead.
        #[arg(long)]
        critical: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Switch between (2,2)-forms and cubes.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        /// Point on the first cubic (3to2), default (0,0,1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<BigInt>>,
        /// Point on the second cubic (3to2), default (0,1,0).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        y: Option<Vec<BigInt>>,
        #[command(flatten)]
        common: Common,
    },
    /// Independent checks: the weight enumeration and brute force (2,2) minimality.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    Weights {
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        common: Common,
    },
    Minimal22 {
        file: PathBuf,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildType {
    #[value(name = "22")]
    Form22,
    Cube,
    Hypercube,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    #[value(name = "2to3")]
    TwoToThree,
    #[value(name = "3to2")]
    ThreeToTwo,
}

/// Failure with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::KindMismatch(_) | Error::Precondition(_) | Error::Unsupported(_) | Error::NotOnCurve => 3,
            Error::Singular => 4,
            Error::Factorisation(_) => 5,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

type Out = Result<(), Failure>;

fn read_model(path: &Path) -> Result<Model, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {}", path.display(), e)))?;
    Ok(ModelFile::parse(&text)?.to_model()?.model)
}

fn expect_kind(m: &Model, kind: ModelKind) -> Result<(), Failure> {
    if m.kind() == kind {
        Ok(())
    } else {
        Err(Error::KindMismatch(format!("expected a {}, got a {}", kind.name(), m.kind().name())).into())
    }
}

fn require_nonsingular(m: &Model) -> Result<BigInt, Failure> {
    let d = discriminant(m)?;
    if d.is_zero() {
        return Err(Error::Singular.into());
    }
    Ok(d)
}

fn write_model(common: &Common, m: &Model, meta: Option<Value>) -> Out {
    if let Some(path) = &common.out {
        let mut file = ModelFile::from_model(m);
        file.meta = meta;
        std::fs::write(path, file.to_json() + "\n").map_err(|e| Failure(1, format!("{}: {}", path.display(), e)))?;
    }
    Ok(())
}

fn coeff_line(m: &Model) -> String {
    m.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit(common: &Common, value: &Value, text: impl FnOnce() -> String) {
    let s = if common.json { serde_json::to_string_pretty(value).expect("json") + "\n" } else { text() };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().write_all(s.as_bytes());
}

fn cmd_invariants(file: &Path, common: &Common) -> Out {
    let m = read_model(file)?;
    let value = match &m {
        Model::Quartic(g) => serde_json::to_value(quartic_invariants(g)),
        Model::Hypercube(h) if !m.is_zero() => serde_json::to_value(hypercube_invariants(h)?),
        _ => serde_json::to_value(invariant_set(&m)?),
    }
    .expect("json");
    emit(common, &value, || {
        let mut s = String::new();
        flatten_text("", &value, &mut s);
        s
    });
    Ok(())
}

/// Writes nested JSON objects as `a.b: value` lines.
fn flatten_text(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{}.{}", prefix, k) };
                flatten_text(&key, x, out);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten_text(&format!("{}[{}]", prefix, i), x, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{}: {}\n", prefix, s)),
        other => out.push_str(&format!("{}: {}\n", prefix, other)),
    }
}

fn factorizer() -> TrialDivision {
    let mut f = TrialDivision::default();
    if let Some(b) = std::env::var("G1MIN_PRIME_BOUND").ok().and_then(|s| s.parse().ok()) {
        f.trial_bound = b;
    }
    f
}

fn cmd_minimise(file: &Path, prime: Option<u64>, common: &Common) -> Out {
    let m = read_model(file)?;
    require_nonsingular(&m)?;
    let (value, fin, transform, minimal, text) = match prime {
        Some(p) => {
            let ctx = LocalContext::new(p)?;
            let r = minimise_local(&m, &ctx)?;
            let mut t = String::new();
            if r.already_minimal() {
                t.push_str("already minimal\n");
            }
            for s in &r.steps {
                t.push_str(&format!("step: {} [{}] v(Delta) {} -> {}\n", s.label, s.witness, s.v_before, s.v_after));
            }
            t.push_str(&format!("v(Delta): {} -> {}\n", r.v_delta_initial, r.v_delta_final));
            let v = serde_json::to_value(&r).expect("json");
            (v, r.final_model.clone(), r.transform.clone(), r.already_minimal(), t)
        }
        None => {
            let r = minimise_global_with(&m, &factorizer())?;
            let mut t = String::new();
            if r.already_minimal() {
                t.push_str("already minimal\n");
            }
            for (p, lr) in &r.local {
                t.push_str(&format!("p = {}: v(Delta) {} -> {}, {} steps\n", p, lr.v_delta_initial, lr.v_delta_final, lr.steps.len()));
            }
            t.push_str(&format!("Delta: {} -> {}\n", r.delta_initial, r.delta_final));
            let v = serde_json::to_value(&r).expect("json");
            (v, r.final_model.clone(), r.transform.clone(), r.already_minimal(), t)
        }
    };
    let meta = json!({ "transform": transform, "already_minimal": minimal });
    write_model(common, &fin, Some(meta))?;
    emit(common, &value, || format!("{}final: {}\n", text, coeff_line(&fin)));
    Ok(())
}

fn cmd_level(file: &Path, prime: u64, common: &Common) -> Out {
    let m = read_model(file)?;
    require_nonsingular(&m)?;
    let ctx = LocalContext::new(prime)?;
    let r = level(&m, &ctx)?;
    let value = serde_json::to_value(&r).expect("json");
    emit(common, &value, || {
        format!("vDelta: {}\nvDeltaMin: {}\nkappa: {}\nlevel: {}\n", r.v_delta_model, r.v_delta_min, r.kappa, r.level)
    });
    Ok(())
}

fn cmd_construct(ty: BuildType, curve: Option<Vec<BigInt>>, critical: Option<u64>, seed: u64, common: &Common) -> Out {
    let m = match (curve, critical) {
        (Some(a), None) => {
            let [a1, a2, a3, a4]: [BigInt; 4] =
                a.try_into().map_err(|_| Failure(2, "--curve takes four integers a1,a2,a3,a4".into()))?;
            match ty {
                BuildType::Form22 => Model::Form22(construct_22(&a1, &a2, &a3, &a4)),
                BuildType::Cube => Model::Cube(construct_cube(&a1, &a2, &a3, &a4)),
                BuildType::Hypercube => {
                    return Err(Error::Unsupported("no level 0 hypercube construction from a curve".into()).into())
                }
            }
        }
        (None, Some(p)) => {
            let kind = match ty {
                BuildType::Form22 => ModelKind::Form22,
                BuildType::Cube => ModelKind::Cube,
                BuildType::Hypercube => ModelKind::Hypercube,
            };
            critical_model(kind, p, seed)?
        }
        _ => return Err(Failure(2, "give exactly one of --curve and --critical".into())),
    };
    let file = ModelFile::from_model(&m);
    write_model(common, &m, None)?;
    emit(common, &serde_json::to_value(&file).expect("json"), || file.to_json() + "\n");
    Ok(())
}

fn point(v: Option<Vec<BigInt>>, default: [BigInt; 3]) -> Result<[BigInt; 3], Failure> {
    match v {
        None => Ok(default),
        Some(v) => v.try_into().map_err(|_| Failure(2, "points take three integers".into())),
    }
}

fn cmd_convert(dir: Direction, file: &Path, x: Option<Vec<BigInt>>, y: Option<Vec<BigInt>>, common: &Common) -> Out {
    let m = read_model(file)?;
    let (out, meta) = match (dir, &m) {
        (Direction::TwoToThree, Model::Form22(f)) => (Model::Cube(convert_2to3(f)?), None),
        (Direction::ThreeToTwo, Model::Cube(s)) => {
            let (dx, dy) = construct_cube_point();
            let (f, g) = convert_3to2(s, &point(x, dx)?, &point(y, dy)?)?;
            (Model::Form22(f), Some(json!({ "cube_transform": g })))
        }
        (Direction::TwoToThree, _) => return expect_kind(&m, ModelKind::Form22),
        (Direction::ThreeToTwo, _) => return expect_kind(&m, ModelKind::Cube),
    };
    let mut mf = ModelFile::from_model(&out);
    mf.meta = meta.clone();
    write_model(common, &out, meta)?;
    emit(common, &serde_json::to_value(&mf).expect("json"), || mf.to_json() + "\n");
    Ok(())
}

fn cmd_oracle(which: OracleCmd) -> Out {
    match which {
        OracleCmd::Weights { count_only, common } => {
            let all = enumerate_minimal_weights();
            let kept = symmetry_filter(&all);
            let value = if count_only {
                json!({ "minimal": all.len(), "after_symmetry": kept.len() })
            } else {
                json!({ "minimal": all, "after_symmetry": kept })
            };
            emit(&common, &value, || {
                let mut s = format!("{} minimal, {} after symmetry\n", all.len(), kept.len());
                if !count_only {
                    for w in &kept {
                        s.push_str(&format!("{:?}\n", w.tuple()));
                    }
                }
                s
            });
        }
        OracleCmd::Minimal22 { file, prime, common } => {
            let m = read_model(&file)?;
            expect_kind(&m, ModelKind::Form22)?;
            require_nonsingular(&m)?;
            let Model::Form22(f) = &m else { unreachable!() };
            let v = oracle_minimality_22(f, &LocalContext::new(prime)?)?;
            emit(&common, &serde_json::to_value(&v).expect("json"), || {
                let verdict = if v.minimal { "minimal" } else { "not minimal" };
                format!("{} ({} configurations tried)\n", verdict, v.configurations)
            });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let res = match cli.cmd {
        Cmd::Invariants { file, common } => cmd_invariants(&file, &common),
        Cmd::Minimise { file, prime, common, .. } => cmd_minimise(&file, prime, &common),
        Cmd::Level { file, prime, common } => cmd_level(&file, prime, &common),
        Cmd::Construct { ty, curve, critical, seed, common } => cmd_construct(ty, curve, critical, seed, &common),
        Cmd::Convert { direction, file, x, y, common } => cmd_convert(direction, &file, x, y, &common),
        Cmd::Oracle { which } => cmd_oracle(which),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(code)
        }
    }
}

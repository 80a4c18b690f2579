//! The `wehrhart` command line.
//!
//! Exit codes: 0 on success or a passing check, 1 when an identity check
//! fails, 2 on any input, usage or geometry error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::ehrhart::{CheckReport, Ehrhart, Identity};
use crate::error::Error;
use crate::exact::{rational_to_json, Poly};
use crate::io::{PolytopeFile, WeightFile};
use crate::lattice_count::{CountMode, LatticeCounter, DEFAULT_COUNT_BUDGET};
use crate::polytope::{standard_polytope, FaceId, PolytopeKind};
use crate::stanley::{builtin_weight_function_with_defaults, g_tilde_table, WeightFunction, WeightKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

const MIN_BUDGET: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "wehrhart",
    version,
    about = "Exact weighted Ehrhart polynomials of lattice polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List faces, f-vector, simplicity and Euler characteristic.
    Faces(Common),
    /// Print E(z, y) with its values next to direct weighted counts.
    Weighted {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Verify an identity exactly; exit 1 if it fails.
    Check {
        /// reciprocity, purity, constant-term, dehn-sommerville or oracle
        identity: String,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Intersection cohomology invariants from the g~ weights.
    Invariants(Common),
    /// Write a standard polytope file.
    Corpus {
        /// simplex, cube, cross or pyramid_over_square
        kind: String,
        /// Dimension (pyramid_over_square is always 3).
        dim: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count lattice points of a dilated face.
    Count {
        #[command(flatten)]
        common: Common,
        /// Face as comma-separated vertex indices; defaults to the polytope.
        #[arg(long, value_delimiter = ',')]
        face: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1)]
        dilation: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
        mode: ModeArg,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 5)]
    lmax: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_COUNT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// Weight file, or the JSON itself inline.
    #[arg(long, conflicts_with = "weights_kind")]
    weights: Option<PathBuf>,
    /// Builtin weights; defaults to constant.
    #[arg(long, value_enum)]
    weights_kind: Option<WeightKindArg>,
    /// Face for `--weights-kind indicator`, as comma-separated vertex indices.
    #[arg(long, value_delimiter = ',')]
    face: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Closed,
    Relint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WeightKindArg {
    Constant,
    Ic,
    Indicator,
    /// All proper faces: the boundary subcomplex.
    Boundary,
}

type CliResult<T> = Result<T, String>;

fn lib<T>(r: crate::error::Result<T>) -> CliResult<T> {
    r.map_err(|e: Error| e.to_string())
}

struct Loaded {
    name: String,
    ctx: Ehrhart,
}

fn load(common: &Common) -> CliResult<Loaded> {
    if common.lmax == 0 {
        return Err("--lmax must be at least 1".into());
    }
    if common.budget < MIN_BUDGET {
        return Err(format!("--budget must be at least {MIN_BUDGET}"));
    }
    let text = read(&common.input)?;
    let file = lib(PolytopeFile::parse(&text))?;
    let polytope = lib(file.to_polytope())?;
    let ctx = lib(Ehrhart::with_counter(polytope, LatticeCounter::new(common.budget)))?;
    Ok(Loaded { name: file.name, ctx })
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// Resolves the weight arguments, returning the weights, a label, and any
/// faces a table left at the default weight 0.
fn weights(args: &WeightArgs, ctx: &Ehrhart) -> CliResult<(WeightFunction, String, Vec<FaceId>)> {
    let lattice = ctx.lattice();
    let (kind, label) = match (&args.weights, args.weights_kind) {
        (Some(spec), _) => {
            let (text, label) = match spec.to_str().map(str::trim_start) {
                Some(inline) if inline.starts_with('{') => (inline.to_string(), "inline".to_string()),
                _ => (read(spec)?, format!("file {}", spec.display())),
            };
            let file = lib(WeightFile::parse(&text))?;
            (lib(file.to_kind())?, label)
        }
        (None, None) | (None, Some(WeightKindArg::Constant)) => (WeightKind::Constant, "constant".to_string()),
        (None, Some(WeightKindArg::Ic)) => (WeightKind::Ic, "ic".to_string()),
        (None, Some(WeightKindArg::Indicator)) => {
            let face = FaceId::new(args.face.clone().ok_or("--weights-kind indicator requires --face")?);
            let label = format!("indicator {face}");
            (WeightKind::Indicator(face), label)
        }
        (None, Some(WeightKindArg::Boundary)) => {
            let n = ctx.dim();
            let boundary = lattice
                .faces()
                .iter()
                .filter(|f| f.dim < n)
                .map(|f| f.id.clone())
                .collect();
            (WeightKind::Subcomplex(boundary), "boundary".to_string())
        }
    };
    let (w, defaulted) = lib(builtin_weight_function_with_defaults(&kind, lattice))?;
    Ok((w, label, defaulted))
}

fn poly_json(p: &Poly) -> Value {
    serde_json::to_value(p.to_laurent()).expect("polynomials serialize")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn cmd_faces(common: &Common) -> CliResult<String> {
    let Loaded { name, ctx } = load(common)?;
    let lat = ctx.lattice();
    let p = ctx.polytope();
    let f_vector = lat.f_vector();
    if common.format == Format::Json {
        let faces: Vec<Value> = lat.faces().iter().map(|f| json!({"id": f.id, "dim": f.dim})).collect();
        return Ok(pretty(&json!({
            "name": name,
            "dim": p.ambient_dim(),
            "f_vector": f_vector,
            "simple": p.is_simple(),
            "origin_interior": p.contains_origin_interior(),
            "euler_characteristic": lat.euler_characteristic(),
            "faces": faces,
        })));
    }
    let mut s = String::new();
    writeln!(s, "polytope: {name}").unwrap();
    writeln!(s, "dimension: {}", p.ambient_dim()).unwrap();
    writeln!(s, "f-vector: ({})", join(&f_vector)).unwrap();
    writeln!(s, "simple: {}", p.is_simple()).unwrap();
    writeln!(s, "origin in interior: {}", p.contains_origin_interior()).unwrap();
    writeln!(s, "euler characteristic: {}", lat.euler_characteristic()).unwrap();
    writeln!(s, "faces:").unwrap();
    for f in lat.faces() {
        writeln!(s, "  dim {} {}", f.dim, f.id).unwrap();
    }
    Ok(s)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn warn_defaulted(defaulted: &[FaceId], err: &mut dyn Write) {
    for face in defaulted {
        let _ = writeln!(err, "warning: face {face} missing from weight table, using weight 0");
    }
}

fn cmd_weighted(common: &Common, wargs: &WeightArgs, err: &mut dyn Write) -> CliResult<String> {
    let Loaded { name, ctx } = load(common)?;
    let (w, label, defaulted) = weights(wargs, &ctx)?;
    warn_defaulted(&defaulted, err);
    let e = lib(ctx.weighted_ehrhart(&w))?;
    let constant = lib(ctx.hodge_polynomial(&w))?;
    let values = (1..=common.lmax)
        .map(|l| Ok((l, e.evaluate(l as i64), lib(ctx.weighted_count_direct(&w, l))?)))
        .collect::<CliResult<Vec<_>>>()?;
    if common.format == Format::Json {
        let values: Vec<Value> = values
            .iter()
            .map(|(l, v, d)| json!({"l": l, "value": v, "direct": d}))
            .collect();
        return Ok(pretty(&json!({
            "name": name,
            "weights": label,
            "polynomial": e,
            "constant_term": constant,
            "values": values,
        })));
    }
    let mut s = String::new();
    writeln!(s, "polytope: {name}").unwrap();
    writeln!(s, "weights: {label}").unwrap();
    writeln!(s, "E(z, y) coefficients:").unwrap();
    for (k, c) in e.coeffs().iter().enumerate() {
        writeln!(s, "  z^{k}: {c}").unwrap();
    }
    writeln!(s, "constant term E(0, y): {constant}").unwrap();
    writeln!(s, "values:").unwrap();
    for (l, v, d) in &values {
        let tag = if v == d { "match" } else { "MISMATCH" };
        writeln!(s, "  l={l}: E = {v}; direct = {d} [{tag}]").unwrap();
    }
    Ok(s)
}

fn render_report(name: &str, label: &str, report: &CheckReport) -> String {
    let mut s = String::new();
    writeln!(s, "check: {}", report.identity).unwrap();
    writeln!(s, "polytope: {name}").unwrap();
    writeln!(s, "weights: {label}").unwrap();
    for row in &report.rows {
        if row.difference.is_zero() {
            writeln!(s, "  {}: ok ({})", row.label, row.lhs).unwrap();
        } else {
            writeln!(s, "  {}: FAIL", row.label).unwrap();
            writeln!(s, "    lhs: {}", row.lhs).unwrap();
            writeln!(s, "    rhs: {}", row.rhs).unwrap();
            writeln!(s, "    difference: {}", row.difference).unwrap();
        }
    }
    writeln!(s, "result: {}", if report.passed { "pass" } else { "fail" }).unwrap();
    s
}

fn cmd_check(identity: &str, common: &Common, wargs: &WeightArgs, err: &mut dyn Write) -> CliResult<(String, bool)> {
    let identity: Identity = lib(identity.parse())?;
    let Loaded { name, ctx } = load(common)?;
    let (report, label) = if identity == Identity::DehnSommerville {
        (lib(ctx.dehn_sommerville_check())?, "n/a".to_string())
    } else {
        let (w, label, defaulted) = weights(wargs, &ctx)?;
        warn_defaulted(&defaulted, err);
        let report = match identity {
            Identity::Reciprocity => ctx.check_reciprocity(&w, common.lmax),
            Identity::Purity => ctx.check_purity(&w, common.lmax),
            Identity::ConstantTerm => ctx.check_constant_term(&w),
            Identity::Oracle => ctx.check_oracle(&w, common.lmax),
            Identity::DehnSommerville => unreachable!(),
        };
        (lib(report)?, label)
    };
    let text = if common.format == Format::Json {
        pretty(&json!({"name": name, "weights": label, "report": report}))
    } else {
        render_report(&name, &label, &report)
    };
    Ok((text, report.passed))
}

fn cmd_invariants(common: &Common) -> CliResult<String> {
    let Loaded { name, ctx } = load(common)?;
    let chi = lib(ctx.ic_chi())?;
    let signature = lib(ctx.ic_signature())?;
    let poincare = lib(ctx.ih_poincare())?;
    let h = lib(ctx.toric_h())?;
    let table = lib(g_tilde_table(ctx.lattice()))?;
    let p = ctx.polytope();
    if common.format == Format::Json {
        let g: Vec<Value> = ctx
            .lattice()
            .faces()
            .iter()
            .map(|f| json!({"face": f.id, "dim": f.dim, "g_tilde": poly_json(&table[&f.id])}))
            .collect();
        return Ok(pretty(&json!({
            "name": name,
            "dim": p.ambient_dim(),
            "simple": p.is_simple(),
            "origin_interior": p.contains_origin_interior(),
            "ic_chi_y": chi,
            "signature": rational_to_json(&signature),
            "ih_poincare": poly_json(&poincare),
            "toric_h": poly_json(&h),
            "g_tilde": g,
        })));
    }
    let mut s = String::new();
    writeln!(s, "polytope: {name}").unwrap();
    writeln!(s, "dimension: {}", p.ambient_dim()).unwrap();
    writeln!(s, "simple: {}", p.is_simple()).unwrap();
    writeln!(s, "origin in interior: {}", p.contains_origin_interior()).unwrap();
    writeln!(s, "IC chi_y: {chi}").unwrap();
    writeln!(s, "signature: {signature}").unwrap();
    writeln!(s, "IH Poincare: {}", poincare.display("t")).unwrap();
    writeln!(s, "toric h: {}", h.display("s")).unwrap();
    writeln!(s, "g~ by face:").unwrap();
    for f in ctx.lattice().faces() {
        writeln!(s, "  dim {} {}: {}", f.dim, f.id, table[&f.id].display("t")).unwrap();
    }
    Ok(s)
}

fn cmd_corpus(kind: &str, dim: Option<usize>, output: Option<&Path>) -> CliResult<String> {
    let kind: PolytopeKind = lib(kind.parse())?;
    let n = match (kind, dim) {
        (_, Some(n)) => n,
        (PolytopeKind::PyramidOverSquare, None) => 3,
        (_, None) => return Err(format!("corpus {kind} needs a dimension")),
    };
    let p = lib(standard_polytope(kind, n))?;
    let name = match kind {
        PolytopeKind::PyramidOverSquare => kind.name().to_string(),
        _ => format!("{kind}_{n}"),
    };
    let mut text = PolytopeFile::from_polytope(name, &p).to_json();
    text.push('\n');
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn cmd_count(common: &Common, face: Option<&[usize]>, dilation: u64, mode: ModeArg) -> CliResult<String> {
    let Loaded { name, ctx } = load(common)?;
    let face = face
        .map(|f| FaceId::new(f.to_vec()))
        .unwrap_or_else(|| ctx.lattice().top().id.clone());
    let mode = match mode {
        ModeArg::Closed => CountMode::Closed,
        ModeArg::Relint => CountMode::RelativeInterior,
    };
    let q = lib(ctx.lattice().require(&face))?;
    let count = lib(ctx.counter().count(ctx.polytope(), q, dilation, mode))?;
    if common.format == Format::Json {
        return Ok(pretty(&json!({
            "name": name, "face": face, "dilation": dilation, "mode": mode, "count": count,
        })));
    }
    let what = match mode {
        CountMode::Closed => "closed",
        CountMode::RelativeInterior => "relative interior",
    };
    Ok(format!(
        "{name}: {what} count of face {face} at l={dilation}: {count}\n"
    ))
}

/// Runs the command line with explicit streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Faces(c) => cmd_faces(c).map(|s| (s, true)),
        Command::Weighted { common, weights } => cmd_weighted(common, weights, err).map(|s| (s, true)),
        Command::Check {
            identity,
            common,
            weights,
        } => cmd_check(identity, common, weights, err),
        Command::Invariants(c) => cmd_invariants(c).map(|s| (s, true)),
        Command::Corpus { kind, dim, output } => cmd_corpus(kind, *dim, output.as_deref()).map(|s| (s, true)),
        Command::Count {
            common,
            face,
            dilation,
            mode,
        } => cmd_count(common, face.as_deref(), *dilation, *mode).map(|s| (s, true)),
    };
    match result {
        Ok((text, passed)) => {
            let _ = out.write_all(text.as_bytes());
            if passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

//! Command-line front end: file ingestion, dispatch and reporting.
//!
//! Exit codes: 0 when the verdict is pass, 1 when it is fail, 2 for usage,
//! I/O and malformed-input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lya::cohomology::{pair_count, pairs};
use lya::deformation::certificate_holds;
use lya::io::{
    algebra_json, load_algebra, load_matrix, load_nijenhuis, load_operator, load_post, load_rep,
    load_vector, matrix_json, nijenhuis_json, post_json,
};
use lya::rrb::{random_masked_matrix, HomPair};
use lya::tensor::{Bilinear, Trilinear};
use lya::{
    check_equivalence, check_homomorphism, check_linear_deformation, check_nijenhuis,
    check_post_homomorphism, check_rrb_homomorphism, difference_class, induced_post_from_rrb,
    CheckOptions, Cochain, DifferenceClass, Extension, LinearMap, LyaError,
    OrderNDeformation, PostReading, Rational, Report, RrbOperator, TComplex,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] LyaError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "lya", version, about = "Exact checks and constructions for Lie-Yamaguti algebras and weight-1 relative Rota-Baxter operators")]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value = "pretty", global = true)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sampling.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Record every violation instead of the first 10 per equation.
    #[arg(long, global = true)]
    all_violations: bool,
    /// Write the payload to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify a structure against its defining identities.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Build a derived structure and print it in its file format.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Cohomology dimensions of the complex of an operator.
    Cohomology(CohomologyArgs),
    /// Linear deformations, equivalences and obstructions.
    #[command(subcommand)]
    Deform(DeformCmd),
}

#[derive(Debug, Subcommand)]
enum CheckCmd {
    /// Lie-Yamaguti axioms.
    Algebra { file: PathBuf },
    /// Representation identities.
    Rep { file: PathBuf },
    /// Representation identities plus the action conditions.
    Action { file: PathBuf },
    /// The weight-1 identities of an operator.
    Rrb {
        #[arg(long)]
        op: PathBuf,
        /// Also compare the three characterizations on this many random maps
        /// over the same action.
        #[arg(long, default_value_t = 0)]
        sample: usize,
    },
    /// Post-Lie-Yamaguti axioms.
    Post {
        file: PathBuf,
        /// Use the literal reading of the fourth and fifth axioms (first term {{x,w,z},w,t}, inner D).
        #[arg(long)]
        literal: bool,
    },
    /// Nijenhuis identities of `{"algebra": …, "N": matrix}`.
    Nijenhuis { file: PathBuf },
    /// Homomorphism between two algebras, post-algebras or operators.
    Homomorphism(HomArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HomKind {
    Algebra,
    Post,
    Rrb,
}

#[derive(Debug, Args)]
struct HomArgs {
    #[arg(long, value_enum, default_value = "algebra")]
    kind: HomKind,
    #[arg(long)]
    from: PathBuf,
    #[arg(long)]
    to: PathBuf,
    /// The map (ψ_g for operators).
    #[arg(long)]
    map: PathBuf,
    /// ψ_h, for operators.
    #[arg(long)]
    map_h: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum ConstructCmd {
    /// Semidirect product of an action.
    Semidirect {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Descent algebra of an operator.
    Descent {
        #[arg(long)]
        op: PathBuf,
    },
    /// Sub-adjacent algebra of a post-algebra.
    Subadjacent {
        #[arg(long)]
        post: PathBuf,
    },
    /// Induced post-algebra of an operator.
    Post {
        #[arg(long)]
        op: PathBuf,
    },
    /// Lift of an operator to a Nijenhuis operator on the semidirect product.
    Lift {
        #[arg(long)]
        op: PathBuf,
    },
}

#[derive(Debug, Args)]
struct CohomologyArgs {
    #[arg(long)]
    op: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    degree: u8,
    /// Print cocycles representing a basis of the cohomology group.
    #[arg(long)]
    witness: bool,
    /// Build the complex even if the operator fails its identities.
    #[arg(long)]
    unchecked: bool,
}

#[derive(Debug, Subcommand)]
enum DeformCmd {
    /// Whether `T + t·T1` satisfies the identities for every `t`.
    Linear {
        #[arg(long)]
        op: PathBuf,
        #[arg(long)]
        t1: PathBuf,
    },
    /// Equivalence of two linear deformations; without `--x` the element is solved for.
    Equiv {
        #[arg(long)]
        op: PathBuf,
        #[arg(long)]
        t1: PathBuf,
        #[arg(long)]
        t2: PathBuf,
        /// Pair coordinates of an element of the exterior square of g.
        #[arg(long)]
        x: Option<PathBuf>,
    },
    /// Obstruction class of an order-n deformation.
    Obstruct {
        #[arg(long)]
        op: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        terms: Vec<PathBuf>,
        /// Solve for the next term.
        #[arg(long)]
        extend: bool,
    },
}

struct Env {
    format: Format,
    opts: CheckOptions,
    seed: u64,
    out: Option<PathBuf>,
}

impl Env {
    fn emit_text(&self, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
        match &self.out {
            Some(p) => std::fs::write(p, text).map_err(|source| CliError::Write {
                path: p.clone(),
                source,
            }),
            None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Write {
                path: PathBuf::from("<stdout>"),
                source,
            }),
        }
    }

    fn report(&self, r: &Report, stdout: &mut dyn Write) -> CliResult<i32> {
        let text = match self.format {
            Format::Pretty => r.to_pretty(),
            Format::Json => to_json(&serde_json::to_value(r).expect("reports serialize")),
        };
        self.emit_text(&text, stdout)?;
        Ok(if r.passed() { 0 } else { 1 })
    }

    /// Constructed objects are always written in their file format.
    fn object(&self, v: &Value, stdout: &mut dyn Write) -> CliResult<i32> {
        self.emit_text(&to_json(v), stdout)?;
        Ok(0)
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let env = Env {
        format: if cli.json { Format::Json } else { cli.format },
        opts: if cli.all_violations {
            CheckOptions::all_violations()
        } else {
            CheckOptions::default()
        },
        seed: cli.seed,
        out: cli.out,
    };
    match dispatch(&env, cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(env: &Env, cmd: Command, stdout: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Check(c) => check(env, c, stdout),
        Command::Construct(c) => construct(env, c, stdout),
        Command::Cohomology(a) => cohomology(env, a, stdout),
        Command::Deform(c) => deform(env, c, stdout),
    }
}

fn vectors_json(vs: &[Vec<Rational>]) -> Value {
    json!(vs.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn check(env: &Env, cmd: CheckCmd, stdout: &mut dyn Write) -> CliResult<i32> {
    let opts = env.opts;
    let r = match cmd {
        CheckCmd::Algebra { file } => {
            let a = load_algebra(&file)?;
            let mut r = a.check_ly_axioms(opts);
            r.set("dim", a.dim());
            r.set("center", vectors_json(a.center().basis()));
            r
        }
        CheckCmd::Rep { file } => load_rep(&file)?.check_representation(opts),
        CheckCmd::Action { file } => load_rep(&file)?.check_action(opts),
        CheckCmd::Rrb { op, sample } => {
            let op = match operator_with_action(&op, opts)? {
                Ok(op) => op,
                Err(r) => return env.report(&r, stdout),
            };
            let mut r = op.check_rrb(opts);
            r.set("graph_subalgebra", op.graph_subalgebra_check(opts)?.passed());
            r.set("lift_nijenhuis", op.check_lift_nijenhuis(opts)?.passed());
            if sample > 0 {
                r.set("characterizations", compare_characterizations(&op, sample, env.seed)?);
            }
            r
        }
        CheckCmd::Post { file, literal } => {
            let reading = if literal { PostReading::Literal } else { PostReading::Transported };
            load_post(&file)?.check_post_axioms_with(opts, reading)
        }
        CheckCmd::Nijenhuis { file } => {
            let (a, n) = load_nijenhuis(&file)?;
            check_nijenhuis(&a, &n, opts)
        }
        CheckCmd::Homomorphism(h) => {
            let map = LinearMap::new(load_matrix(&h.map)?);
            match h.kind {
                HomKind::Algebra => check_homomorphism(&load_algebra(&h.from)?, &load_algebra(&h.to)?, &map, opts)?,
                HomKind::Post => check_post_homomorphism(&load_post(&h.from)?, &load_post(&h.to)?, &map, opts)?,
                HomKind::Rrb => {
                    let path = h
                        .map_h
                        .ok_or_else(|| CliError::Usage("--map-h is required for operator homomorphisms".into()))?;
                    let pair = HomPair::new(map, LinearMap::new(load_matrix(&path)?));
                    let (from, to) = match (operator_with_action(&h.from, opts)?, operator_with_action(&h.to, opts)?) {
                        (Ok(a), Ok(b)) => (a, b),
                        (Err(r), _) | (_, Err(r)) => return env.report(&r, stdout),
                    };
                    check_rrb_homomorphism(&from, &to, &pair, opts)?
                }
            }
        }
    };
    env.report(&r, stdout)
}

/// Counts agreements of the operator identities, the graph criterion and the
/// Nijenhuis criterion of the lift on random maps over `op`'s action.
fn compare_characterizations(op: &RrbOperator, samples: usize, seed: u64) -> CliResult<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, n) = (op.g().dim(), op.h().dim());
    let (mut operators, mut disagreements) = (0, 0);
    let o = CheckOptions::first_only();
    for _ in 0..samples {
        let t = op.with_map(LinearMap::new(random_masked_matrix(&mut rng, m, n)))?;
        let a = t.check_rrb(o).passed();
        let b = t.graph_subalgebra_check(o)?.passed();
        let c = t.check_lift_nijenhuis(o)?.passed();
        operators += a as usize;
        disagreements += !(a == b && b == c) as usize;
    }
    Ok(json!({ "seed": seed, "samples": samples, "operators": operators, "disagreements": disagreements }))
}

/// Loads an operator and certifies its action; a failing action check is
/// returned as the report.
fn operator_with_action(path: &Path, opts: CheckOptions) -> CliResult<Result<RrbOperator, Report>> {
    let op = load_operator(path)?;
    let (action, r) = op.action().clone().certify(opts);
    if !r.passed() {
        return Ok(Err(r));
    }
    Ok(Ok(RrbOperator::new(action, op.map().clone())?))
}

/// Loads an operator, certifies its action and verifies the identities.
fn verified_operator(path: &Path, opts: CheckOptions) -> CliResult<Result<RrbOperator, Report>> {
    let op = match operator_with_action(path, opts)? {
        Ok(op) => op,
        Err(r) => return Ok(Err(r)),
    };
    let (op, r) = op.verify(opts);
    Ok(if r.passed() && op.is_verified() { Ok(op) } else { Err(r) })
}

fn construct(env: &Env, cmd: ConstructCmd, stdout: &mut dyn Write) -> CliResult<i32> {
    let opts = env.opts;
    let op_or_report = |p: &Path| verified_operator(p, opts);
    let v = match cmd {
        ConstructCmd::Semidirect { rep } => {
            let (rep, r) = load_rep(&rep)?.certify(opts);
            if !r.passed() {
                return env.report(&r, stdout);
            }
            algebra_json(&rep.semidirect_product()?)
        }
        ConstructCmd::Descent { op } => match op_or_report(&op)? {
            Ok(op) => algebra_json(&op.descent_algebra()?),
            Err(r) => return env.report(&r, stdout),
        },
        ConstructCmd::Subadjacent { post } => {
            let p = load_post(&post)?;
            let r = p.check_post_axioms(opts);
            if !r.passed() {
                return env.report(&r, stdout);
            }
            algebra_json(&p.subadjacent()?)
        }
        ConstructCmd::Post { op } => match op_or_report(&op)? {
            Ok(op) => post_json(&induced_post_from_rrb(&op)?),
            Err(r) => return env.report(&r, stdout),
        },
        ConstructCmd::Lift { op } => match op_or_report(&op)? {
            Ok(op) => nijenhuis_json(&op.action().semidirect_product()?, &op.lift_operator()),
            Err(r) => return env.report(&r, stdout),
        },
    };
    env.object(&v, stdout)
}

fn complex_for(path: &Path, unchecked: bool, opts: CheckOptions) -> CliResult<Result<TComplex, Report>> {
    if unchecked {
        return Ok(operator_with_action(path, opts)?.map(TComplex::new_unchecked));
    }
    Ok(match verified_operator(path, opts)? {
        Ok(op) => Ok(TComplex::new(op)?),
        Err(r) => Err(r),
    })
}

fn cohomology(env: &Env, a: CohomologyArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let cx = match complex_for(&a.op, a.unchecked, env.opts)? {
        Ok(cx) => cx,
        Err(r) => return env.report(&r, stdout),
    };
    let p = a.degree as usize;
    let dims = cx.cohomology_dims(p)?;
    let mut r = Report::new(format!("cohomology in degree {p}"), env.opts);
    if a.unchecked && !cx.op().is_verified() {
        r.note("operator identities were not verified");
    }
    r.set("degree", p);
    r.set("cocycles", dims.cocycles);
    r.set("coboundaries", dims.coboundaries);
    r.set("cohomology", dims.cohomology);
    if a.witness {
        let ws: Vec<Vec<Rational>> = cx.cohomology_witnesses(p)?.iter().map(Cochain::coords).collect();
        r.set("witnesses", vectors_json(&ws));
    }
    env.report(&r, stdout)
}

fn map_file(path: &Path, op: &RrbOperator) -> CliResult<LinearMap> {
    let m = load_matrix(path)?;
    if m.rows() != op.g().dim() || m.cols() != op.h().dim() {
        return Err(LyaError::Format {
            path: path.display().to_string(),
            field: "matrix".into(),
            message: format!("expected {}x{}, found {}x{}", op.g().dim(), op.h().dim(), m.rows(), m.cols()),
        }
        .into());
    }
    Ok(LinearMap::new(m))
}

fn load_pair_coords(path: &Path, len: usize) -> CliResult<Vec<Rational>> {
    let x = load_vector(path)?;
    if x.len() != len {
        return Err(LyaError::Format {
            path: path.display().to_string(),
            field: "x".into(),
            message: format!("expected {len} pair coordinates, found {}", x.len()),
        }
        .into());
    }
    Ok(x)
}

fn bilinear_json(t: &Bilinear) -> Value {
    let mut out = Vec::new();
    for (i, j, v) in t.entries() {
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.push(json!([i, j, k, c.to_string()]));
            }
        }
    }
    Value::Array(out)
}

fn trilinear_json(t: &Trilinear) -> Value {
    let mut out = Vec::new();
    for (i, j, k, v) in t.entries() {
        for (l, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.push(json!([i, j, k, l, c.to_string()]));
            }
        }
    }
    Value::Array(out)
}

fn deform(env: &Env, cmd: DeformCmd, stdout: &mut dyn Write) -> CliResult<i32> {
    let opts = env.opts;
    let op_path = match &cmd {
        DeformCmd::Linear { op, .. } | DeformCmd::Equiv { op, .. } | DeformCmd::Obstruct { op, .. } => op.clone(),
    };
    let op = match verified_operator(&op_path, opts)? {
        Ok(op) => op,
        Err(r) => return env.report(&r, stdout),
    };
    let r = match cmd {
        DeformCmd::Linear { t1, .. } => check_linear_deformation(&op, &map_file(&t1, &op)?, opts)?,
        DeformCmd::Equiv { t1, t2, x, .. } => {
            let (f1, f2) = (map_file(&t1, &op)?, map_file(&t2, &op)?);
            let x = match x {
                Some(p) => load_pair_coords(&p, pair_count(op.g().dim()))?,
                None => match difference_class(&op, &f1, &f2)? {
                    DifferenceClass::Cohomologous { x } => x,
                    DifferenceClass::NotCohomologous { certificate } => {
                        let mut r = Report::new("equivalence of linear deformations", opts);
                        r.check_flag("equiv.difference_is_boundary", false);
                        r.set("certificate", certificate);
                        return env.report(&r, stdout);
                    }
                },
            };
            let mut r = check_equivalence(&op, &f1, &f2, &x, opts)?;
            r.set("x", &x);
            r.set(
                "pair_basis",
                pairs(op.g().dim()).iter().map(|(a, b)| format!("e{}^e{}", a + 1, b + 1)).collect::<Vec<_>>(),
            );
            r
        }
        DeformCmd::Obstruct { terms, extend, .. } => {
            let maps = terms.iter().map(|p| map_file(p, &op)).collect::<CliResult<Vec<_>>>()?;
            let d = OrderNDeformation::new(op.clone(), maps)?;
            let mut r = Report::new(format!("obstruction of an order-{} deformation", d.order()), opts);
            let base = d.check_order_n(opts);
            let valid = base.passed();
            r.absorb("", base);
            if valid {
                let ob = d.obstruction_class()?;
                r.check_flag("obstruction.is_cocycle", ob.is_cocycle);
                r.set("ob_I", bilinear_json(&ob.ob_i));
                r.set("ob_II", trilinear_json(&ob.ob_ii));
                r.set("ob_is_zero", ob.as_cochain.is_zero());
                if extend {
                    match d.extend()? {
                        Extension::Extended { next } => {
                            r.check_flag("extension.next_order", d.extended(next.clone())?.check_order_n(opts).passed());
                            r.set("extension", json!({ "verdict": "extended", "next": matrix_json(next.matrix()) }));
                        }
                        Extension::NotExtendable { certificate, rhs } => {
                            let cx = TComplex::new(op.clone())?;
                            let holds = certificate_holds(cx.coboundary_matrix(1)?, &rhs, &certificate);
                            r.check_flag("extension.solvable", false);
                            r.set(
                                "extension",
                                json!({ "verdict": "not_extendable", "certificate": certificate, "certificate_verified": holds }),
                            );
                        }
                    }
                }
            }
            r
        }
    };
    env.report(&r, stdout)
}

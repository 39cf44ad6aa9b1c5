//! JSON file formats.
//!
//! * algebra: `{"name", "dim", "basis", "binary": [[i, j, k, "p/q"], …],
//!   "ternary": [[i, j, k, l, "p/q"], …]}`, 0-based, antisymmetric completion
//!   on load;
//! * representation: `{"acting", "carrier", "rho": [matrix, …],
//!   "mu": [[matrix, …], …]}` where `acting`/`carrier` are inline algebras or
//!   paths relative to the referencing file;
//! * operator: `{"action": representation or path, "T": matrix}`;
//! * post-algebra: `{"name", "dim", "dot", "star", "angle", "brace"}` in the
//!   sparse format of the algebra file (`dot` and `angle` are completed
//!   antisymmetrically);
//! * matrix: row-major array of rows, entries rational strings or integers,
//!   either bare or as `{"matrix": …}`.

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::algebra::{LinearMap, LyAlgebra};
use crate::error::{LyaError, Result};
use crate::linalg::Matrix;
use crate::post::PostLyAlgebra;
use crate::rational::Rational;
use crate::rep::RepAction;
use crate::rrb::RrbOperator;
use crate::tensor::{Bilinear, Trilinear};

/// Where a value came from, for diagnostics and relative references.
#[derive(Clone, Debug)]
struct Ctx {
    path: String,
    dir: PathBuf,
}

impl Ctx {
    fn of(path: &Path) -> Self {
        Ctx {
            path: path.display().to_string(),
            dir: path.parent().map(Path::to_path_buf).unwrap_or_default(),
        }
    }

    fn err(&self, field: &str, message: impl Into<String>) -> LyaError {
        LyaError::Format {
            path: self.path.clone(),
            field: field.to_string(),
            message: message.into(),
        }
    }

    /// Re-labels a structural error from a constructor as a format error.
    fn wrap<T>(&self, field: &str, r: Result<T>) -> Result<T> {
        r.map_err(|e| self.err(field, e.to_string()))
    }
}

fn read_json(path: &Path) -> Result<(Value, Ctx)> {
    let text = std::fs::read_to_string(path).map_err(|source| LyaError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let ctx = Ctx::of(path);
    let v = serde_json::from_str(&text).map_err(|e| ctx.err("<root>", e.to_string()))?;
    Ok((v, ctx))
}

fn field<'a>(v: &'a Value, key: &str, ctx: &Ctx) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| ctx.err(key, "missing"))
}

fn usize_of(v: &Value, at: &str, ctx: &Ctx) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| ctx.err(at, "expected a non-negative integer"))
}

fn array_of<'a>(v: &'a Value, at: &str, ctx: &Ctx) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| ctx.err(at, "expected an array"))
}

fn rational_of(v: &Value, at: &str, ctx: &Ctx) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse().map_err(|_| ctx.err(at, format!("`{s}` is not a rational"))),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from_int)
            .ok_or_else(|| ctx.err(at, "numbers must be integers; write fractions as \"p/q\"")),
        _ => Err(ctx.err(at, "expected a rational string")),
    }
}

fn matrix_of(v: &Value, at: &str, ctx: &Ctx) -> Result<Matrix> {
    let v = v.get("matrix").unwrap_or(v);
    let rows = array_of(v, at, ctx)?;
    let mut data = Vec::new();
    let mut cols = None;
    for (r, row) in rows.iter().enumerate() {
        let at_r = format!("{at}[{r}]");
        let row = array_of(row, &at_r, ctx)?;
        if *cols.get_or_insert(row.len()) != row.len() {
            return Err(ctx.err(&at_r, "rows have different lengths"));
        }
        for (c, x) in row.iter().enumerate() {
            data.push(rational_of(x, &format!("{at_r}[{c}]"), ctx)?);
        }
    }
    ctx.wrap(at, Matrix::from_data(rows.len(), cols.unwrap_or(0), data))
}

fn sparse_entries(v: Option<&Value>, key: &str, arity: usize, dim: usize, ctx: &Ctx) -> Result<Vec<(Vec<usize>, Rational)>> {
    let Some(v) = v else { return Ok(Vec::new()) };
    let mut out = Vec::new();
    for (e, entry) in array_of(v, key, ctx)?.iter().enumerate() {
        let at = format!("{key}[{e}]");
        let items = array_of(entry, &at, ctx)?;
        if items.len() != arity + 1 {
            return Err(ctx.err(&at, format!("expected {} indices and a coefficient", arity)));
        }
        let mut idx = Vec::with_capacity(arity);
        for (p, x) in items[..arity].iter().enumerate() {
            let i = usize_of(x, &format!("{at}[{p}]"), ctx)?;
            if i >= dim {
                return Err(ctx.err(&format!("{at}[{p}]"), format!("index {i} out of range for dimension {dim}")));
            }
            idx.push(i);
        }
        out.push((idx, rational_of(&items[arity], &format!("{at}[{arity}]"), ctx)?));
    }
    Ok(out)
}

fn dim_of(v: &Value, ctx: &Ctx) -> Result<usize> {
    usize_of(field(v, "dim", ctx)?, "dim", ctx)
}

fn name_of(v: &Value, default: &str) -> String {
    v.get("name").and_then(Value::as_str).unwrap_or(default).to_string()
}

fn parse_algebra(v: &Value, ctx: &Ctx) -> Result<LyAlgebra> {
    let dim = dim_of(v, ctx)?;
    let bin: Vec<_> = sparse_entries(v.get("binary"), "binary", 3, dim, ctx)?
        .into_iter()
        .map(|(i, c)| (i[0], i[1], i[2], c))
        .collect();
    let ter: Vec<_> = sparse_entries(v.get("ternary"), "ternary", 4, dim, ctx)?
        .into_iter()
        .map(|(i, c)| (i[0], i[1], i[2], i[3], c))
        .collect();
    let a = ctx.wrap("binary", LyAlgebra::from_entries(name_of(v, "algebra"), dim, &bin, &ter))?;
    match v.get("basis") {
        None => Ok(a),
        Some(b) => {
            let names = array_of(b, "basis", ctx)?
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| ctx.err(&format!("basis[{i}]"), "expected a string"))
                })
                .collect::<Result<Vec<_>>>()?;
            ctx.wrap("basis", a.with_basis_names(names))
        }
    }
}

/// Inline object, or a path relative to the referencing file.
fn resolve<T>(v: &Value, key: &str, ctx: &Ctx, parse: fn(&Value, &Ctx) -> Result<T>) -> Result<T> {
    match field(v, key, ctx)? {
        Value::String(p) => {
            let path = ctx.dir.join(p);
            let (inner, ictx) = read_json(&path)?;
            parse(&inner, &ictx)
        }
        inline @ Value::Object(_) => parse(inline, ctx),
        _ => Err(ctx.err(key, "expected an inline object or a file path")),
    }
}

fn parse_rep(v: &Value, ctx: &Ctx) -> Result<RepAction> {
    let acting = resolve(v, "acting", ctx, parse_algebra)?;
    let carrier = resolve(v, "carrier", ctx, parse_algebra)?;
    let m = acting.dim();
    let rho = array_of(field(v, "rho", ctx)?, "rho", ctx)?
        .iter()
        .enumerate()
        .map(|(i, x)| matrix_of(x, &format!("rho[{i}]"), ctx))
        .collect::<Result<Vec<_>>>()?;
    let mu_rows = array_of(field(v, "mu", ctx)?, "mu", ctx)?;
    if mu_rows.len() != m {
        return Err(ctx.err("mu", format!("expected {m} rows of matrices, found {}", mu_rows.len())));
    }
    let mut mu = Vec::with_capacity(m * m);
    for (i, row) in mu_rows.iter().enumerate() {
        let row = array_of(row, &format!("mu[{i}]"), ctx)?;
        if row.len() != m {
            return Err(ctx.err(&format!("mu[{i}]"), format!("expected {m} matrices, found {}", row.len())));
        }
        for (j, x) in row.iter().enumerate() {
            mu.push(matrix_of(x, &format!("mu[{i}][{j}]"), ctx)?);
        }
    }
    ctx.wrap("rho", RepAction::new(acting, carrier, rho, mu))
}

fn parse_operator(v: &Value, ctx: &Ctx) -> Result<RrbOperator> {
    let action = resolve(v, "action", ctx, parse_rep)?;
    let t = matrix_of(field(v, "T", ctx)?, "T", ctx)?;
    ctx.wrap("T", RrbOperator::new(action, LinearMap::new(t)))
}

fn parse_post(v: &Value, ctx: &Ctx) -> Result<PostLyAlgebra> {
    let dim = dim_of(v, ctx)?;
    let bil = |key: &str, antisym: bool| -> Result<Bilinear> {
        let mut t = Bilinear::zero(dim, dim);
        for (idx, c) in sparse_entries(v.get(key), key, 3, dim, ctx)? {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let mut w = t.at(i, j).clone();
            w[k] = c.clone();
            t.put(i, j, w);
            if antisym && i != j {
                let mut w = t.at(j, i).clone();
                w[k] = -c;
                t.put(j, i, w);
            }
        }
        Ok(t)
    };
    let tri = |key: &str, antisym: bool| -> Result<Trilinear> {
        let mut t = Trilinear::zero(dim, dim);
        for (idx, c) in sparse_entries(v.get(key), key, 4, dim, ctx)? {
            let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
            let mut w = t.at(i, j, k).clone();
            w[l] = c.clone();
            t.put(i, j, k, w);
            if antisym && i != j {
                let mut w = t.at(j, i, k).clone();
                w[l] = -c;
                t.put(j, i, k, w);
            }
        }
        Ok(t)
    };
    let (dot, star, angle, brace) = (bil("dot", true)?, bil("star", false)?, tri("angle", true)?, tri("brace", false)?);
    ctx.wrap("dot", PostLyAlgebra::new(name_of(v, "post"), dot, star, angle, brace))
}

pub fn load_algebra(path: &Path) -> Result<LyAlgebra> {
    let (v, ctx) = read_json(path)?;
    parse_algebra(&v, &ctx)
}

pub fn load_rep(path: &Path) -> Result<RepAction> {
    let (v, ctx) = read_json(path)?;
    parse_rep(&v, &ctx)
}

pub fn load_operator(path: &Path) -> Result<RrbOperator> {
    let (v, ctx) = read_json(path)?;
    parse_operator(&v, &ctx)
}

pub fn load_post(path: &Path) -> Result<PostLyAlgebra> {
    let (v, ctx) = read_json(path)?;
    parse_post(&v, &ctx)
}

pub fn load_matrix(path: &Path) -> Result<Matrix> {
    let (v, ctx) = read_json(path)?;
    matrix_of(&v, "matrix", &ctx)
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

fn bilinear_entries(t: &Bilinear, lower_only: bool) -> Value {
    let mut out = Vec::new();
    for i in 0..t.n() {
        for j in 0..t.n() {
            if lower_only && i >= j {
                continue;
            }
            for (k, c) in t.at(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out.push(json!([i, j, k, c.to_string()]));
                }
            }
        }
    }
    Value::Array(out)
}

fn trilinear_entries(t: &Trilinear, lower_only: bool) -> Value {
    let n = t.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lower_only && i >= j {
                continue;
            }
            for k in 0..n {
                for (l, c) in t.at(i, j, k).iter().enumerate() {
                    if !c.is_zero() {
                        out.push(json!([i, j, k, l, c.to_string()]));
                    }
                }
            }
        }
    }
    Value::Array(out)
}

/// Writes only `i < j` entries; loading completes the rest.
pub fn algebra_json(a: &LyAlgebra) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(a.name()));
    m.insert("dim".into(), json!(a.dim()));
    m.insert("basis".into(), json!(a.basis_names()));
    m.insert("binary".into(), bilinear_entries(a.binary(), true));
    m.insert("ternary".into(), trilinear_entries(a.ternary(), true));
    Value::Object(m)
}

/// Both algebras inline.
pub fn rep_json(r: &RepAction) -> Value {
    let m = r.m();
    let mu: Vec<Value> = (0..m)
        .map(|i| Value::Array((0..m).map(|j| matrix_json(r.mu_e(i, j))).collect()))
        .collect();
    json!({
        "acting": algebra_json(r.acting()),
        "carrier": algebra_json(r.carrier()),
        "rho": r.rho_list().iter().map(matrix_json).collect::<Vec<_>>(),
        "mu": mu,
    })
}

/// The action inline.
pub fn operator_json(op: &RrbOperator) -> Value {
    json!({
        "action": rep_json(op.action()),
        "T": matrix_json(op.map().matrix()),
    })
}

pub fn post_json(p: &PostLyAlgebra) -> Value {
    json!({
        "name": p.name(),
        "dim": p.dot().n(),
        "dot": bilinear_entries(p.dot(), true),
        "star": bilinear_entries(p.star(), false),
        "angle": trilinear_entries(p.angle(), true),
        "brace": trilinear_entries(p.brace(), false),
    })
}

/// `{"algebra": inline or path, "N": matrix}`, the output of `lift`.
pub fn load_nijenhuis(path: &Path) -> Result<(LyAlgebra, LinearMap)> {
    let (v, ctx) = read_json(path)?;
    let a = resolve(&v, "algebra", &ctx, parse_algebra)?;
    let n = matrix_of(field(&v, "N", &ctx)?, "N", &ctx)?;
    if n.rows() != a.dim() || n.cols() != a.dim() {
        return Err(ctx.err("N", format!("expected a {0}x{0} matrix", a.dim())));
    }
    Ok((a, LinearMap::new(n)))
}

/// A vector of rationals, bare or as `{"x": […]}`.
pub fn load_vector(path: &Path) -> Result<Vec<Rational>> {
    let (v, ctx) = read_json(path)?;
    let v = v.get("x").unwrap_or(&v);
    array_of(v, "x", &ctx)?
        .iter()
        .enumerate()
        .map(|(i, x)| rational_of(x, &format!("x[{i}]"), &ctx))
        .collect()
}

pub fn nijenhuis_json(a: &LyAlgebra, n: &LinearMap) -> Value {
    json!({ "algebra": algebra_json(a), "N": matrix_json(n.matrix()) })
}

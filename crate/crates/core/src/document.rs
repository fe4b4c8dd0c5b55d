//! JSON documents describing modules, complexes, morphisms and chain maps,
//! plus the certificate and witness encodings emitted by the command line.
//!
//! Matrices are `{"rows": r, "cols": c, "entries": [["1", "0"], …]}` with
//! integers written as strings. Every component and matrix carries an
//! explicit degree. The exact grammar is documented in `formats.md`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::complex::{ChainMap, Complex};
use crate::error::Error;
use crate::homotopy::HomotopyWitness;
use crate::linalg::Matrix;
use crate::modules::{ModuleMorphism, PresentedModule};
use crate::ring::Ring;
use crate::subprojectivity::{Evidence, ProjectiveCover, Route, SubprojectivityCertificate};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{object}: {source}")]
    Invalid {
        object: String,
        #[source]
        source: Error,
    },
}

type DResult<T> = std::result::Result<T, DocumentError>;

fn schema<T>(path: &str, message: impl Into<String>) -> DResult<T> {
    Err(DocumentError::Schema {
        path: path.to_string(),
        message: message.into(),
    })
}

fn invalid(object: &str) -> impl FnOnce(Error) -> DocumentError + '_ {
    move |source| DocumentError::Invalid {
        object: object.to_string(),
        source,
    }
}

/// A fully resolved and validated object graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub ring: Ring,
    pub modules: BTreeMap<String, Arc<PresentedModule>>,
    pub complexes: BTreeMap<String, Arc<Complex>>,
    pub morphisms: BTreeMap<String, ModuleMorphism>,
    pub chain_maps: BTreeMap<String, ChainMap>,
}

impl Document {
    pub fn new(ring: Ring) -> Self {
        Document {
            ring,
            modules: BTreeMap::new(),
            complexes: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            chain_maps: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty() && self.complexes.is_empty() && self.morphisms.is_empty() && self.chain_maps.is_empty()
    }

    pub fn complex(&self, name: &str) -> Option<&Arc<Complex>> {
        self.complexes.get(name)
    }

    pub fn chain_map(&self, name: &str) -> Option<&ChainMap> {
        self.chain_maps.get(name)
    }

    /// Canonical form: every object written out explicitly.
    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("schema".into(), json!(SCHEMA_VERSION));
        root.insert("ring".into(), json!(self.ring.to_string()));
        let modules: Map<String, Value> = self.modules.iter().map(|(k, m)| (k.clone(), module_to_json(m))).collect();
        let complexes: Map<String, Value> = self.complexes.iter().map(|(k, c)| (k.clone(), complex_to_json(c))).collect();
        let morphisms: Map<String, Value> = self.morphisms.iter().map(|(k, f)| (k.clone(), morphism_to_json(f))).collect();
        let chain_maps: Map<String, Value> = self.chain_maps.iter().map(|(k, f)| (k.clone(), chain_map_to_json(f))).collect();
        root.insert("modules".into(), Value::Object(modules));
        root.insert("complexes".into(), Value::Object(complexes));
        root.insert("morphisms".into(), Value::Object(morphisms));
        root.insert("chain_maps".into(), Value::Object(chain_maps));
        Value::Object(root)
    }

    pub fn to_string_pretty(&self) -> String {
        to_pretty(&self.to_json())
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Parses JSON text, reporting syntax errors with line and column.
pub fn parse_json(text: &str) -> DResult<Value> {
    serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parses and validates a document. Blank text is the empty document over `Z`.
pub fn parse_document(text: &str) -> DResult<Document> {
    if text.trim().is_empty() {
        return Ok(Document::new(Ring::Integers));
    }
    let v = parse_json(text)?;
    document_from_json(&v)
}

pub fn document_from_json(v: &Value) -> DResult<Document> {
    let root = as_object(v, "$")?;
    check_keys(root, "$", &["schema", "ring", "modules", "complexes", "morphisms", "chain_maps"])?;
    if let Some(s) = root.get("schema") {
        let s = as_u64(s, "$.schema")?;
        if s != SCHEMA_VERSION {
            return schema("$.schema", format!("unsupported schema version {s}"));
        }
    }
    let ring = match root.get("ring") {
        Some(r) => parse_ring(r, "$.ring")?,
        None => Ring::Integers,
    };
    let section = |name: &str| -> DResult<Map<String, Value>> {
        match root.get(name) {
            None => Ok(Map::new()),
            Some(v) => Ok(as_object(v, &format!("$.{name}"))?.clone()),
        }
    };
    let mut r = Resolver {
        ring,
        raw_modules: section("modules")?,
        raw_complexes: section("complexes")?,
        modules: BTreeMap::new(),
        complexes: BTreeMap::new(),
        in_progress: BTreeSet::new(),
    };
    let module_names: Vec<String> = r.raw_modules.keys().cloned().collect();
    for name in &module_names {
        r.named_module(name, &format!("$.modules.{name}"))?;
    }
    let complex_names: Vec<String> = r.raw_complexes.keys().cloned().collect();
    for name in &complex_names {
        r.named_complex(name, &format!("$.complexes.{name}"))?;
    }
    let mut morphisms = BTreeMap::new();
    for (name, v) in section("morphisms")? {
        let path = format!("$.morphisms.{name}");
        morphisms.insert(name.clone(), r.morphism(&v, &path, &name)?);
    }
    let mut chain_maps = BTreeMap::new();
    for (name, v) in section("chain_maps")? {
        let path = format!("$.chain_maps.{name}");
        chain_maps.insert(name.clone(), r.chain_map(&v, &path, &name)?);
    }
    Ok(Document {
        ring,
        modules: r.modules,
        complexes: r.complexes,
        morphisms,
        chain_maps,
    })
}

struct Resolver {
    ring: Ring,
    raw_modules: Map<String, Value>,
    raw_complexes: Map<String, Value>,
    modules: BTreeMap<String, Arc<PresentedModule>>,
    complexes: BTreeMap<String, Arc<Complex>>,
    in_progress: BTreeSet<String>,
}

impl Resolver {
    fn named_module(&mut self, name: &str, path: &str) -> DResult<Arc<PresentedModule>> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        let Some(v) = self.raw_modules.get(name).cloned() else {
            return schema(path, format!("unknown module {name:?}"));
        };
        let m = Arc::new(module_from_json(&v, self.ring, &format!("$.modules.{name}"))?);
        self.modules.insert(name.to_string(), m.clone());
        Ok(m)
    }

    fn module_ref(&mut self, v: &Value, path: &str) -> DResult<Arc<PresentedModule>> {
        match v {
            Value::String(name) => self.named_module(name, path),
            _ => Ok(Arc::new(module_from_json(v, self.ring, path)?)),
        }
    }

    fn named_complex(&mut self, name: &str, path: &str) -> DResult<Arc<Complex>> {
        if let Some(c) = self.complexes.get(name) {
            return Ok(c.clone());
        }
        let Some(v) = self.raw_complexes.get(name).cloned() else {
            return schema(path, format!("unknown complex {name:?}"));
        };
        if !self.in_progress.insert(name.to_string()) {
            return schema(path, format!("complex {name:?} refers to itself"));
        }
        let c = Arc::new(self.complex(&v, &format!("$.complexes.{name}"), name)?);
        self.in_progress.remove(name);
        self.complexes.insert(name.to_string(), c.clone());
        Ok(c)
    }

    fn complex_ref(&mut self, v: &Value, path: &str, object: &str) -> DResult<Arc<Complex>> {
        match v {
            Value::String(name) => self.named_complex(name, path),
            _ => Ok(Arc::new(self.complex(v, path, object)?)),
        }
    }

    fn complex(&mut self, v: &Value, path: &str, object: &str) -> DResult<Complex> {
        let o = as_object(v, path)?;
        let forms = ["disc", "sphere", "shift", "sum"];
        if let Some(form) = forms.iter().find(|f| o.contains_key(**f)) {
            check_keys(o, path, &[form])?;
            let p = format!("{path}.{form}");
            let body = &o[*form];
            return match *form {
                "disc" | "sphere" => {
                    let b = as_object(body, &p)?;
                    check_keys(b, &p, &["module", "degree"])?;
                    let m = self.module_ref(required(b, "module", &p)?, &format!("{p}.module"))?;
                    let n = as_i64(required(b, "degree", &p)?, &format!("{p}.degree"))?;
                    Ok(if *form == "disc" { Complex::disc(&m, n) } else { Complex::sphere(&m, n) })
                }
                "shift" => {
                    let b = as_object(body, &p)?;
                    check_keys(b, &p, &["complex", "by"])?;
                    let c = self.complex_ref(required(b, "complex", &p)?, &format!("{p}.complex"), object)?;
                    let n = as_i64(required(b, "by", &p)?, &format!("{p}.by"))?;
                    Ok(c.shift(n))
                }
                _ => {
                    let items = as_array(body, &p)?;
                    let mut parts = Vec::new();
                    for (i, item) in items.iter().enumerate() {
                        parts.push(self.complex_ref(item, &format!("{p}[{i}]"), object)?.as_ref().clone());
                    }
                    let s = Complex::direct_sum(self.ring, &parts).map_err(invalid(object))?;
                    Ok(s.complex.as_ref().clone())
                }
            };
        }
        check_keys(o, path, &["window", "components", "differentials"])?;
        let wp = format!("{path}.window");
        let w = as_array(required(o, "window", path)?, &wp)?;
        if w.len() != 2 {
            return schema(&wp, "expected [lo, hi]");
        }
        let lo = as_i64(&w[0], &wp)?;
        let hi = as_i64(&w[1], &wp)?;
        if lo > hi {
            return schema(&wp, format!("empty window [{lo}, {hi}]"));
        }
        let mut comps: BTreeMap<i64, Arc<PresentedModule>> = BTreeMap::new();
        if let Some(list) = o.get("components") {
            let cp = format!("{path}.components");
            for (i, item) in as_array(list, &cp)?.iter().enumerate() {
                let ip = format!("{cp}[{i}]");
                let io = as_object(item, &ip)?;
                check_keys(io, &ip, &["degree", "module"])?;
                let d = as_i64(required(io, "degree", &ip)?, &format!("{ip}.degree"))?;
                if d < lo || d > hi {
                    return schema(&ip, format!("degree {d} outside the window [{lo}, {hi}]"));
                }
                let m = self.module_ref(required(io, "module", &ip)?, &format!("{ip}.module"))?;
                if comps.insert(d, m).is_some() {
                    return schema(&ip, format!("degree {d} listed twice"));
                }
            }
        }
        let module = |d: i64| comps.get(&d).cloned().unwrap_or_else(|| Arc::new(PresentedModule::zero(self.ring)));
        let mut diffs: BTreeMap<i64, Matrix> = BTreeMap::new();
        if let Some(list) = o.get("differentials") {
            let dp = format!("{path}.differentials");
            for (i, item) in as_array(list, &dp)?.iter().enumerate() {
                let ip = format!("{dp}[{i}]");
                let io = as_object(item, &ip)?;
                check_keys(io, &ip, &["degree", "matrix"])?;
                let d = as_i64(required(io, "degree", &ip)?, &format!("{ip}.degree"))?;
                if d <= lo || d > hi {
                    return schema(&ip, format!("d_{d} is outside the window ({lo}, {hi}]"));
                }
                let m = matrix_from_json(required(io, "matrix", &ip)?, &format!("{ip}.matrix"))?;
                if diffs.insert(d, m).is_some() {
                    return schema(&ip, format!("d_{d} listed twice"));
                }
            }
        }
        let modules: Vec<PresentedModule> = (lo..=hi).map(|d| module(d).as_ref().clone()).collect();
        let dmats: Vec<Matrix> = (lo + 1..=hi)
            .map(|d| {
                diffs
                    .remove(&d)
                    .unwrap_or_else(|| Matrix::zeros(module(d - 1).generators(), module(d).generators()))
            })
            .collect();
        Complex::new(self.ring, lo, modules, dmats).map_err(invalid(object))
    }

    fn morphism(&mut self, v: &Value, path: &str, object: &str) -> DResult<ModuleMorphism> {
        let o = as_object(v, path)?;
        check_keys(o, path, &["source", "target", "matrix"])?;
        let s = self.module_ref(required(o, "source", path)?, &format!("{path}.source"))?;
        let t = self.module_ref(required(o, "target", path)?, &format!("{path}.target"))?;
        let m = matrix_from_json(required(o, "matrix", path)?, &format!("{path}.matrix"))?;
        ModuleMorphism::new(s, t, m).map_err(invalid(object))
    }

    fn chain_map(&mut self, v: &Value, path: &str, object: &str) -> DResult<ChainMap> {
        let o = as_object(v, path)?;
        check_keys(o, path, &["source", "target", "components"])?;
        let s = self.complex_ref(required(o, "source", path)?, &format!("{path}.source"), object)?;
        let t = self.complex_ref(required(o, "target", path)?, &format!("{path}.target"), object)?;
        let comps = degree_matrices(o.get("components"), &format!("{path}.components"))?;
        let (lo, hi) = s.window();
        for d in comps.keys() {
            if *d < lo || *d > hi {
                return schema(path, format!("component f_{d} outside the source window [{lo}, {hi}]"));
            }
        }
        let mats = (lo..=hi)
            .map(|d| {
                comps
                    .get(&d)
                    .cloned()
                    .unwrap_or_else(|| Matrix::zeros(t.module(d).generators(), s.module(d).generators()))
            })
            .collect();
        ChainMap::new(s, t, mats).map_err(invalid(object))
    }
}

fn degree_matrices(v: Option<&Value>, path: &str) -> DResult<BTreeMap<i64, Matrix>> {
    let mut out = BTreeMap::new();
    let Some(v) = v else {
        return Ok(out);
    };
    for (i, item) in as_array(v, path)?.iter().enumerate() {
        let ip = format!("{path}[{i}]");
        let io = as_object(item, &ip)?;
        check_keys(io, &ip, &["degree", "matrix"])?;
        let d = as_i64(required(io, "degree", &ip)?, &format!("{ip}.degree"))?;
        let m = matrix_from_json(required(io, "matrix", &ip)?, &format!("{ip}.matrix"))?;
        if out.insert(d, m).is_some() {
            return schema(&ip, format!("degree {d} listed twice"));
        }
    }
    Ok(out)
}

fn as_object<'a>(v: &'a Value, path: &str) -> DResult<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| DocumentError::Schema {
        path: path.to_string(),
        message: "expected an object".into(),
    })
}

fn as_array<'a>(v: &'a Value, path: &str) -> DResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| DocumentError::Schema {
        path: path.to_string(),
        message: "expected an array".into(),
    })
}

fn as_i64(v: &Value, path: &str) -> DResult<i64> {
    v.as_i64().ok_or_else(|| DocumentError::Schema {
        path: path.to_string(),
        message: "expected an integer".into(),
    })
}

fn as_u64(v: &Value, path: &str) -> DResult<u64> {
    v.as_u64().ok_or_else(|| DocumentError::Schema {
        path: path.to_string(),
        message: "expected a nonnegative integer".into(),
    })
}

fn as_str<'a>(v: &'a Value, path: &str) -> DResult<&'a str> {
    v.as_str().ok_or_else(|| DocumentError::Schema {
        path: path.to_string(),
        message: "expected a string".into(),
    })
}

fn required<'a>(o: &'a Map<String, Value>, key: &str, path: &str) -> DResult<&'a Value> {
    o.get(key).ok_or_else(|| DocumentError::Schema {
        path: path.to_string(),
        message: format!("missing field {key:?}"),
    })
}

fn check_keys(o: &Map<String, Value>, path: &str, allowed: &[&str]) -> DResult<()> {
    for k in o.keys() {
        if !allowed.contains(&k.as_str()) {
            return schema(path, format!("unknown field {k:?}"));
        }
    }
    Ok(())
}

pub fn parse_ring(v: &Value, path: &str) -> DResult<Ring> {
    as_str(v, path)?.parse().map_err(|e: Error| DocumentError::Schema {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn parse_integer(v: &Value, path: &str) -> DResult<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| DocumentError::Schema {
            path: path.to_string(),
            message: format!("not an integer: {s:?}"),
        }),
        Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap())),
        Value::Number(n) if n.is_u64() => Ok(BigInt::from(n.as_u64().unwrap())),
        _ => schema(path, "expected an integer string"),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| Value::String(m[(i, j)].to_string())).collect()))
        .collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn matrix_from_json(v: &Value, path: &str) -> DResult<Matrix> {
    let o = as_object(v, path)?;
    check_keys(o, path, &["rows", "cols", "entries"])?;
    let rows = as_u64(required(o, "rows", path)?, &format!("{path}.rows"))? as usize;
    let cols = as_u64(required(o, "cols", path)?, &format!("{path}.cols"))? as usize;
    let ep = format!("{path}.entries");
    let entries = match o.get("entries") {
        Some(e) => as_array(e, &ep)?.clone(),
        None if rows == 0 || cols == 0 => vec![Value::Array(Vec::new()); rows],
        None => return schema(path, "missing field \"entries\""),
    };
    if entries.len() != rows {
        return schema(&ep, format!("expected {rows} rows, found {}", entries.len()));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in entries.iter().enumerate() {
        let rp = format!("{ep}[{i}]");
        let row = as_array(row, &rp)?;
        if row.len() != cols {
            return schema(&rp, format!("expected {cols} entries, found {}", row.len()));
        }
        for (j, e) in row.iter().enumerate() {
            data.push(parse_integer(e, &format!("{rp}[{j}]"))?);
        }
    }
    Ok(Matrix::from_vec(rows, cols, data))
}

/// Free modules omit `relations`.
pub fn module_to_json(m: &PresentedModule) -> Value {
    if m.relations().cols() == 0 {
        return json!({"generators": m.generators()});
    }
    json!({"generators": m.generators(), "relations": matrix_to_json(m.relations())})
}

pub fn module_from_json(v: &Value, ring: Ring, path: &str) -> DResult<PresentedModule> {
    let o = as_object(v, path)?;
    check_keys(o, path, &["generators", "relations"])?;
    let g = as_u64(required(o, "generators", path)?, &format!("{path}.generators"))? as usize;
    let rel = match o.get("relations") {
        Some(r) => matrix_from_json(r, &format!("{path}.relations"))?,
        None => Matrix::zeros(g, 0),
    };
    if rel.rows() != g {
        return schema(path, format!("relations have {} rows but the module has {g} generators", rel.rows()));
    }
    Ok(PresentedModule::new(ring, rel))
}

fn morphism_to_json(f: &ModuleMorphism) -> Value {
    json!({
        "source": module_to_json(f.source()),
        "target": module_to_json(f.target()),
        "matrix": matrix_to_json(f.matrix()),
    })
}

pub fn complex_to_json(c: &Complex) -> Value {
    let (lo, hi) = c.window();
    let comps: Vec<Value> = (lo..=hi)
        .map(|d| json!({"degree": d, "module": module_to_json(&c.module(d))}))
        .collect();
    let diffs: Vec<Value> = (lo + 1..=hi)
        .map(|d| json!({"degree": d, "matrix": matrix_to_json(c.differential(d).matrix())}))
        .collect();
    json!({"window": [lo, hi], "components": comps, "differentials": diffs})
}

pub fn chain_map_to_json(f: &ChainMap) -> Value {
    let (lo, hi) = f.source().window();
    let comps: Vec<Value> = (lo..=hi)
        .map(|d| json!({"degree": d, "matrix": matrix_to_json(f.component(d).matrix())}))
        .collect();
    json!({
        "source": complex_to_json(f.source()),
        "target": complex_to_json(f.target()),
        "components": comps,
    })
}

/// Standalone complex (explicit or constructor form) over `ring`.
pub fn complex_from_json(v: &Value, ring: Ring, path: &str) -> DResult<Complex> {
    let mut r = Resolver::standalone(ring);
    r.complex(v, path, path)
}

/// Standalone chain map with inline source and target.
pub fn chain_map_from_json(v: &Value, ring: Ring, path: &str) -> DResult<ChainMap> {
    let mut r = Resolver::standalone(ring);
    r.chain_map(v, path, path)
}

impl Resolver {
    fn standalone(ring: Ring) -> Self {
        Resolver {
            ring,
            raw_modules: Map::new(),
            raw_complexes: Map::new(),
            modules: BTreeMap::new(),
            complexes: BTreeMap::new(),
            in_progress: BTreeSet::new(),
        }
    }
}

/// `{"kind": "homotopy-witness", "ring", "map", "witness"}` for `f = ds + sd`.
pub fn witness_to_json(f: &ChainMap, s: &HomotopyWitness) -> Value {
    json!({
        "kind": "homotopy-witness",
        "schema": SCHEMA_VERSION,
        "ring": f.ring().to_string(),
        "map": chain_map_to_json(f),
        "witness": witness_maps_to_json(s),
    })
}

fn witness_maps_to_json(s: &HomotopyWitness) -> Value {
    let maps: Vec<Value> = s
        .maps()
        .iter()
        .enumerate()
        .map(|(k, m)| json!({"degree": s.lo() + k as i64, "matrix": matrix_to_json(m.matrix())}))
        .collect();
    Value::Array(maps)
}

fn witness_maps_from_json(v: &Value, f: &ChainMap, path: &str) -> DResult<HomotopyWitness> {
    let mats = degree_matrices(Some(v), path)?;
    let x = f.source();
    let y = f.target();
    let (lo, hi) = x.window();
    for d in mats.keys() {
        if *d < lo || *d > hi {
            return schema(path, format!("s_{d} outside the source window [{lo}, {hi}]"));
        }
    }
    let maps = (lo..=hi)
        .map(|d| {
            let m = mats
                .get(&d)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(y.module(d + 1).generators(), x.module(d).generators()));
            ModuleMorphism::new(x.module(d), y.module(d + 1), m).map_err(invalid(path))
        })
        .collect::<DResult<Vec<_>>>()?;
    Ok(HomotopyWitness::new(lo, maps))
}

pub fn witness_from_json(v: &Value) -> DResult<(ChainMap, HomotopyWitness)> {
    let o = as_object(v, "$")?;
    check_keys(o, "$", &["kind", "schema", "ring", "map", "witness"])?;
    let ring = parse_ring(required(o, "ring", "$")?, "$.ring")?;
    let f = chain_map_from_json(required(o, "map", "$")?, ring, "$.map")?;
    let s = witness_maps_from_json(required(o, "witness", "$")?, &f, "$.witness")?;
    Ok((f, s))
}

/// Self-contained certificate: both complexes, the route, the verdict and
/// the evidence, so that it can be re-checked without the original input.
pub fn certificate_to_json(m: &Complex, n: &Complex, cert: &SubprojectivityCertificate) -> Value {
    let evidence = match &cert.evidence {
        Evidence::Lifts { cover, lifts } => json!({
            "lifts": {
                "projective": complex_to_json(&cover.p),
                "epi": chain_map_to_json(&cover.pi),
                "pairs": lifts.iter().map(|(f, h)| json!({
                    "map": chain_map_to_json(f),
                    "lift": chain_map_to_json(h),
                })).collect::<Vec<_>>(),
            }
        }),
        Evidence::NullHomotopies { maps } => json!({
            "null_homotopies": maps.iter().map(|(f, s)| json!({
                "map": chain_map_to_json(f),
                "witness": witness_maps_to_json(s),
            })).collect::<Vec<_>>(),
        }),
        Evidence::Counterexample { map } => json!({"counterexample": chain_map_to_json(map)}),
    };
    json!({
        "kind": "subprojectivity-certificate",
        "schema": SCHEMA_VERSION,
        "ring": m.ring().to_string(),
        "route": cert.route.name(),
        "verdict": if cert.verdict { "YES" } else { "NO" },
        "m": complex_to_json(m),
        "n": complex_to_json(n),
        "evidence": evidence,
    })
}

pub type ParsedCertificate = (Arc<Complex>, Arc<Complex>, SubprojectivityCertificate);

pub fn certificate_from_json(v: &Value) -> DResult<ParsedCertificate> {
    let o = as_object(v, "$")?;
    check_keys(o, "$", &["kind", "schema", "ring", "route", "verdict", "m", "n", "evidence"])?;
    let ring = parse_ring(required(o, "ring", "$")?, "$.ring")?;
    let route: Route = as_str(required(o, "route", "$")?, "$.route")?
        .parse()
        .map_err(|e: Error| DocumentError::Schema {
            path: "$.route".into(),
            message: e.to_string(),
        })?;
    let verdict = match as_str(required(o, "verdict", "$")?, "$.verdict")? {
        "YES" => true,
        "NO" => false,
        other => return schema("$.verdict", format!("expected YES or NO, got {other:?}")),
    };
    let m = Arc::new(complex_from_json(required(o, "m", "$")?, ring, "$.m")?);
    let n = Arc::new(complex_from_json(required(o, "n", "$")?, ring, "$.n")?);
    let ev = as_object(required(o, "evidence", "$")?, "$.evidence")?;
    check_keys(ev, "$.evidence", &["lifts", "null_homotopies", "counterexample"])?;
    let evidence = if let Some(l) = ev.get("lifts") {
        let p = "$.evidence.lifts";
        let lo = as_object(l, p)?;
        check_keys(lo, p, &["projective", "epi", "pairs"])?;
        let proj = Arc::new(complex_from_json(required(lo, "projective", p)?, ring, &format!("{p}.projective"))?);
        let pi = chain_map_from_json(required(lo, "epi", p)?, ring, &format!("{p}.epi"))?;
        let mut lifts = Vec::new();
        for (i, pair) in as_array(required(lo, "pairs", p)?, &format!("{p}.pairs"))?.iter().enumerate() {
            let pp = format!("{p}.pairs[{i}]");
            let po = as_object(pair, &pp)?;
            check_keys(po, &pp, &["map", "lift"])?;
            let f = chain_map_from_json(required(po, "map", &pp)?, ring, &format!("{pp}.map"))?;
            let h = chain_map_from_json(required(po, "lift", &pp)?, ring, &format!("{pp}.lift"))?;
            lifts.push((f, h));
        }
        Evidence::Lifts {
            cover: ProjectiveCover { p: proj, pi },
            lifts,
        }
    } else if let Some(l) = ev.get("null_homotopies") {
        let p = "$.evidence.null_homotopies";
        let mut maps = Vec::new();
        for (i, item) in as_array(l, p)?.iter().enumerate() {
            let ip = format!("{p}[{i}]");
            let io = as_object(item, &ip)?;
            check_keys(io, &ip, &["map", "witness"])?;
            let f = chain_map_from_json(required(io, "map", &ip)?, ring, &format!("{ip}.map"))?;
            let s = witness_maps_from_json(required(io, "witness", &ip)?, &f, &format!("{ip}.witness"))?;
            maps.push((f, s));
        }
        Evidence::NullHomotopies { maps }
    } else if let Some(c) = ev.get("counterexample") {
        Evidence::Counterexample {
            map: chain_map_from_json(c, ring, "$.evidence.counterexample")?,
        }
    } else {
        return schema("$.evidence", "expected lifts, null_homotopies or counterexample");
    };
    Ok((m, n, SubprojectivityCertificate { verdict, route, evidence }))
}

#[cfg(test)]
mod tests {
    use super::*;

    const MULT2: &str = r#"{
        "schema": 1,
        "ring": "Z",
        "complexes": {
            "N": {
                "window": [0, 1],
                "components": [
                    {"degree": 1, "module": {"generators": 1}},
                    {"degree": 0, "module": {"generators": 1}}
                ],
                "differentials": [{"degree": 1, "matrix": {"rows": 1, "cols": 1, "entries": [["2"]]}}]
            }
        }
    }"#;

    #[test]
    fn loads_and_computes() {
        let doc = parse_document(MULT2).unwrap();
        let n = doc.complex("N").unwrap();
        let h = n.homology(0).unwrap();
        assert_eq!(h.module.invariant_factors(), vec![BigInt::from(2)]);
    }

    #[test]
    fn rejects_non_complex_with_degree() {
        let text = r#"{"complexes": {"X": {"window": [0, 2],
            "components": [{"degree": 0, "module": {"generators": 1}}, {"degree": 1, "module": {"generators": 1}}, {"degree": 2, "module": {"generators": 1}}],
            "differentials": [{"degree": 1, "matrix": {"rows": 1, "cols": 1, "entries": [["1"]]}},
                              {"degree": 2, "matrix": {"rows": 1, "cols": 1, "entries": [["1"]]}}]}}}"#;
        match parse_document(text) {
            Err(DocumentError::Invalid { object, source }) => {
                assert_eq!(object, "X");
                assert_eq!(source, Error::NotAComplex { degree: 2 });
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_and_syntax() {
        assert!(parse_document("").unwrap().is_empty());
        assert!(parse_document("{}").unwrap().is_empty());
        match parse_document("{\n  \"ring\": }") {
            Err(DocumentError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let text = r#"{"ring": "Zmod:4",
            "modules": {"M": {"generators": 2, "relations": {"rows": 2, "cols": 1, "entries": [["2"], ["0"]]}}},
            "complexes": {"D": {"disc": {"module": "M", "degree": 1}}, "S": {"shift": {"complex": "D", "by": -1}},
                          "T": {"sum": ["D", {"sphere": {"module": "M", "degree": 0}}]}},
            "morphisms": {"id": {"source": "M", "target": "M", "matrix": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}}},
            "chain_maps": {"i": {"source": "D", "target": "D", "components": [{"degree": 1, "matrix": {"rows": 2, "cols": 2, "entries": [["1","0"],["0","1"]]}},
                                                                               {"degree": 2, "matrix": {"rows": 2, "cols": 2, "entries": [["1","0"],["0","1"]]}}]}}}"#;
        let doc = parse_document(text).unwrap();
        let again = parse_document(&doc.to_string_pretty()).unwrap();
        assert_eq!(doc, again);
        assert_eq!(doc.to_string_pretty(), again.to_string_pretty());
    }

    #[test]
    fn self_reference_is_rejected() {
        let text = r#"{"complexes": {"A": {"shift": {"complex": "A", "by": 1}}}}"#;
        assert!(matches!(parse_document(text), Err(DocumentError::Schema { .. })));
    }
}

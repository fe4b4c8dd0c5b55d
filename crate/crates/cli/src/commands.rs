use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use subproj_core::complex::{ChainMap, Complex};
use subproj_core::document::{
    certificate_from_json, certificate_to_json, document_from_json, parse_json, to_pretty, witness_from_json,
    witness_to_json, Document,
};
use subproj_core::homotopy::{hom_k, is_null_homotopic, mapping_cone};
use subproj_core::subprojectivity::{is_subprojective_complex, pullback, subprojective_wrt_all_shifts, Route};
use subproj_core::{Error, PresentedModule, Ring};
use subproj_harness::{run_suite, Execution, SuiteReport, TrialConfig, SUITES};

use crate::failure::Failure;
use crate::text::{describe, module_summary};
use crate::{Cli, Command, RouteArg};

type Outcome = Result<bool, Failure>;

// stdout writes ignore errors so that a closed pipe ends output quietly
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(io::stdout().lock(), $($arg)*);
    }};
}

/// Runs one command; `Ok(false)` means the queried property does not hold.
pub fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Homology { file, object, degree } => homology(&load(file)?, object, *degree, json),
        Command::Exact { file, object, via_subproj } => exact(&load(file)?, object, *via_subproj, json),
        Command::Nullhomotopy { file, map, out } => nullhomotopy(&load(file)?, map, out.as_deref(), json),
        Command::Homk { file, source, target, degree } => homk(&load(file)?, source, target, *degree, json),
        Command::Subproj { file, m, n, route, out } => subproj(&load(file)?, m, n, *route, out.as_deref(), json),
        Command::Cone { file, map } => cone(&load(file)?, map),
        Command::Pullback { file, g, f } => pull(&load(file)?, g, f),
        Command::Verify { suite, ring, trials, seed, sequential } => verify(suite, ring, *trials, *seed, *sequential, json),
        Command::Shift { file, object, by } => shift(&load(file)?, object, *by),
        Command::Check { file } => check(file, json),
        Command::Suites => {
            for s in SUITES {
                out!("{s}");
            }
            Ok(true)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = read(path)?;
    subproj_core::document::parse_document(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn complex<'a>(doc: &'a Document, name: &str) -> Result<&'a Arc<Complex>, Failure> {
    doc.complex(name).ok_or_else(|| Failure::Input(format!("no complex named {name:?}")))
}

fn chain_map<'a>(doc: &'a Document, name: &str) -> Result<&'a ChainMap, Failure> {
    doc.chain_map(name).ok_or_else(|| Failure::Input(format!("no chain map named {name:?}")))
}

fn emit(v: &Value) {
    let mut out = io::stdout().lock();
    // a closed pipe on the reader side is not an error worth reporting
    let _ = write!(out, "{}", to_pretty(v));
}

fn write_json(path: &Path, v: &Value) -> Result<(), Failure> {
    fs::write(path, to_pretty(v)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn homology(doc: &Document, name: &str, degree: Option<i64>, json: bool) -> Outcome {
    let c = complex(doc, name)?;
    let degrees: Vec<i64> = match degree {
        Some(n) => vec![n],
        None => (c.lo()..=c.hi()).collect(),
    };
    let mut rows = Vec::new();
    for n in degrees {
        let h = c.homology(n)?;
        if !json {
            out!("H_{n} = {}", describe(&h.module));
        }
        let mut row = module_summary(&h.module);
        row["degree"] = json!(n);
        rows.push(row);
    }
    if json {
        emit(&json!({"kind": "homology", "object": name, "degrees": rows}));
    }
    Ok(true)
}

fn exact(doc: &Document, name: &str, via_subproj: bool, json: bool) -> Outcome {
    let c = complex(doc, name)?;
    let exact = c.is_exact()?;
    let via = if via_subproj {
        let r = Arc::new(Complex::sphere(&PresentedModule::free(c.ring(), 1), 0));
        let holds = subprojective_wrt_all_shifts(&r, c)?.holds;
        if holds != exact {
            return Err(Failure::Internal(format!(
                "homology says exact = {exact}, sphere shifts say {holds}"
            )));
        }
        Some(holds)
    } else {
        None
    };
    if json {
        emit(&json!({"kind": "exactness", "object": name, "exact": exact, "via_subproj": via}));
    } else {
        out!("exact: {exact}");
        if let Some(v) = via {
            out!("via sphere shifts: {v}");
        }
    }
    Ok(exact)
}

fn nullhomotopy(doc: &Document, name: &str, out: Option<&Path>, json: bool) -> Outcome {
    let f = chain_map(doc, name)?;
    let Some(s) = is_null_homotopic(f)? else {
        if json {
            emit(&json!({"kind": "null-homotopy", "map": name, "null_homotopic": false}));
        } else {
            out!("NO");
        }
        return Ok(false);
    };
    s.check(f).map_err(|e| Failure::Internal(format!("solver witness rejected: {e}")))?;
    let w = witness_to_json(f, &s);
    if let Some(p) = out {
        write_json(p, &w)?;
    }
    if json {
        emit(&w);
    } else {
        out!("YES");
        for (k, m) in s.maps().iter().enumerate() {
            out!("s_{} = {}", s.lo() + k as i64, m.matrix().to_string().trim_end());
        }
    }
    Ok(true)
}

fn homk(doc: &Document, source: &str, target: &str, degree: i64, json: bool) -> Outcome {
    let x = complex(doc, source)?;
    let y = complex(doc, target)?;
    let h = hom_k(x, y, degree)?;
    if json {
        let mut v = module_summary(&h.module);
        v["kind"] = json!("homk");
        v["source"] = json!(source);
        v["target"] = json!(target);
        v["degree"] = json!(degree);
        emit(&v);
    } else {
        out!("{}", describe(&h.module));
    }
    Ok(true)
}

fn subproj(doc: &Document, m: &str, n: &str, route: RouteArg, out: Option<&Path>, json: bool) -> Outcome {
    let (mc, nc) = (complex(doc, m)?, complex(doc, n)?);
    let routes: Vec<Route> = match route {
        RouteArg::Definition => vec![Route::Definition],
        RouteArg::Homk => vec![Route::HomKVanishing],
        RouteArg::Kernel => vec![Route::KernelRoute],
        RouteArg::All => Route::ALL.to_vec(),
    };
    let mut entries = Vec::new();
    let mut certificates = Vec::new();
    let mut verdicts = Vec::new();
    for r in routes {
        match is_subprojective_complex(mc, nc, r) {
            Ok(cert) => {
                if !cert.check(mc, nc)? {
                    return Err(Failure::Internal(format!("{r} certificate fails re-validation")));
                }
                let c = certificate_to_json(mc, nc, &cert);
                entries.push(json!({"route": r.name(), "status": yes_no(cert.verdict), "certificate": c}));
                if !json {
                    out!("{r}: {}", yes_no(cert.verdict));
                }
                certificates.push(c);
                verdicts.push((r, cert.verdict));
            }
            Err(Error::HypothesisNotMet(why)) => {
                if route != RouteArg::All {
                    return Err(Failure::Input(format!("{r} route not applicable: {why}")));
                }
                if !json {
                    out!("{r}: hypothesis not met ({why})");
                }
                entries.push(json!({"route": r.name(), "status": "hypothesis-not-met", "reason": why}));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let verdict = verdicts[0].1;
    if let Some((r, v)) = verdicts.iter().find(|(_, v)| *v != verdict) {
        return Err(Failure::Internal(format!(
            "routes disagree: {} says {}, {r} says {}",
            verdicts[0].0,
            yes_no(verdict),
            yes_no(*v)
        )));
    }
    let report = if route == RouteArg::All {
        json!({"kind": "subprojectivity-report", "m": m, "n": n, "verdict": yes_no(verdict), "routes": entries})
    } else {
        certificates.remove(0)
    };
    if let Some(p) = out {
        write_json(p, &report)?;
    }
    if json {
        emit(&report);
    } else if route == RouteArg::All {
        out!("verdict: {}", yes_no(verdict));
    }
    Ok(verdict)
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "YES"
    } else {
        "NO"
    }
}

fn cone(doc: &Document, name: &str) -> Outcome {
    let g = chain_map(doc, name)?;
    let mc = mapping_cone(g)?;
    let composite = mc.projection.compose(&mc.inclusion)?;
    let mono = mc.inclusion.components().iter().all(|c| c.is_mono());
    if !composite.is_zero() || !mono || !mc.projection.is_epi() {
        return Err(Failure::Internal("cone sequence is not short exact".into()));
    }
    let mut out = Document::new(g.ring());
    out.complexes.insert("K".into(), g.target().clone());
    out.complexes.insert("M".into(), mc.base.clone());
    out.complexes.insert("cone".into(), mc.cone.clone());
    out.chain_maps.insert("g".into(), g.clone());
    out.chain_maps.insert("inclusion".into(), mc.inclusion);
    out.chain_maps.insert("projection".into(), mc.projection);
    emit(&out.to_json());
    Ok(true)
}

fn pull(doc: &Document, g: &str, f: &str) -> Outcome {
    let (gm, fm) = (chain_map(doc, g)?, chain_map(doc, f)?);
    let sq = pullback(gm, fm)?;
    if !gm.compose(&sq.f_prime)?.equals(&fm.compose(&sq.g_prime)?)? {
        return Err(Failure::Internal("pullback square does not commute".into()));
    }
    let mut out = Document::new(gm.ring());
    out.complexes.insert("A".into(), fm.source().clone());
    out.complexes.insert("B".into(), fm.target().clone());
    out.complexes.insert("C".into(), gm.source().clone());
    out.complexes.insert("D".into(), sq.d.clone());
    out.chain_maps.insert("g".into(), gm.clone());
    out.chain_maps.insert("f".into(), fm.clone());
    out.chain_maps.insert("g_prime".into(), sq.g_prime);
    out.chain_maps.insert("f_prime".into(), sq.f_prime);
    emit(&out.to_json());
    Ok(true)
}

fn suite_config(ring: &str, trials: usize, seed: u64, sequential: bool) -> Result<TrialConfig, Failure> {
    let ring: Ring = ring.parse()?;
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    Ok(TrialConfig::new(ring, trials, seed).with_execution(exec))
}

fn verify(suite: &str, ring: &str, trials: usize, seed: u64, sequential: bool, json: bool) -> Outcome {
    let cfg = suite_config(ring, trials, seed, sequential)?;
    let report = run_suite(suite, &cfg)?;
    if json {
        let _ = write!(io::stdout().lock(), "{}", report.to_string_pretty());
    } else {
        out!(
            "{} over {}: {} trials, {} agreements, {} counterexamples, {} skipped, {} positive",
            report.suite,
            report.ring,
            report.trials,
            report.agreements,
            report.counterexamples.len(),
            report.skipped,
            report.positives
        );
        for c in &report.counterexamples {
            out!("trial {}: {}", c.trial, c.reason);
            let _ = write!(io::stdout().lock(), "{}", to_pretty(&c.instance));
        }
    }
    Ok(report.passed())
}

fn shift(doc: &Document, name: &str, by: i64) -> Outcome {
    let c = complex(doc, name)?;
    let mut out = Document::new(c.ring());
    out.complexes.insert(name.to_string(), Arc::new(c.shift(by)));
    emit(&out.to_json());
    Ok(true)
}

fn say(json: bool, kind: &str, valid: bool, detail: String) {
    if json {
        emit(&json!({"kind": "check", "checked": kind, "valid": valid, "detail": detail}));
    } else {
        out!("{kind}: {} ({detail})", if valid { "valid" } else { "INVALID" });
    }
}

fn check(path: &Path, json: bool) -> Outcome {
    let text = read(path)?;
    let v = if text.trim().is_empty() { json!({}) } else { parse_json(&text)? };
    let kind = v.get("kind").and_then(Value::as_str).map(str::to_owned);
    let valid = match kind.as_deref() {
        Some("subprojectivity-certificate") => {
            let (m, n, cert) = certificate_from_json(&v)?;
            let ok = cert.check(&m, &n)?;
            say(json, "certificate", ok, format!("{} {}", cert.route, yes_no(cert.verdict)));
            ok
        }
        Some("subprojectivity-report") => check_report(&v, json)?,
        Some("homotopy-witness") => {
            let (f, s) = witness_from_json(&v)?;
            let r = s.check(&f);
            say(json, "witness", r.is_ok(), r.err().map(|e| e.to_string()).unwrap_or_else(|| "f = ds + sd".into()));
            s.check(&f).is_ok()
        }
        Some("suite-report") => {
            let report = SuiteReport::from_json(&v).map_err(|e| Failure::Input(format!("suite report: {e}")))?;
            let counts = report.agreements + report.counterexamples.len() == report.trials;
            let cfg = suite_config(&report.ring, report.trials + report.skipped, report.seed, false)?;
            let replay = run_suite(&report.suite, &cfg)?;
            let ok = counts && replay.same_outcome(&report);
            say(json, "suite report", ok, format!("replayed {} with seed {}", report.suite, report.seed));
            ok
        }
        Some(other) => return Err(Failure::Input(format!("unknown kind {other:?}"))),
        None => {
            let doc = document_from_json(&v)?;
            let again = document_from_json(&doc.to_json())?;
            if again != doc {
                return Err(Failure::Internal("document does not survive a round trip".into()));
            }
            say(
                json,
                "document",
                true,
                format!(
                    "{} modules, {} complexes, {} morphisms, {} chain maps",
                    doc.modules.len(),
                    doc.complexes.len(),
                    doc.morphisms.len(),
                    doc.chain_maps.len()
                ),
            );
            true
        }
    };
    Ok(valid)
}

fn check_report(v: &Value, json: bool) -> Result<bool, Failure> {
    let routes = v
        .get("routes")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::Input("subprojectivity report without routes".into()))?;
    let mut verdicts = Vec::new();
    let mut ok = true;
    for r in routes {
        if let Some(c) = r.get("certificate") {
            let (m, n, cert) = certificate_from_json(c)?;
            ok &= cert.check(&m, &n)?;
            ok &= r.get("status").and_then(Value::as_str) == Some(yes_no(cert.verdict));
            verdicts.push(cert.verdict);
        }
    }
    let claimed = v.get("verdict").and_then(Value::as_str);
    ok &= !verdicts.is_empty() && verdicts.iter().all(|x| Some(yes_no(*x)) == claimed);
    say(json, "subprojectivity report", ok, format!("{} certificates", verdicts.len()));
    Ok(ok)
}

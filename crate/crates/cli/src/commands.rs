use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Value};

use rashba_green::greens_function::{
    argument_triples, dpm_g1_detailed, g1_at_origin_detailed, g1_detailed, g2_detailed,
    g2_ren_at_origin_detailed, green_matrix_with, theorem_flags, DEGENERATE_EPS,
};
use rashba_green::oracle::{macdonald_sum_g1, macdonald_sum_g2, quad_g1, quad_g2, QuadratureConfig};
use rashba_green::xy_series::{classify_xprime_region, Membership, XpRegions};
use rashba_green::{
    sigma_threshold, Error, EvalPoint, GreenMatrix, GreenOptions, GreenValue, PhysicalParams,
    SeriesParams, Sign, TripleArg,
};

use crate::args::{Common, Format, SweepVar, TableArgs};
use crate::output::{complex_json, csv_writer, full, sink, write_json};

/// A command failure with its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn io(e: impl std::fmt::Display) -> Self {
        Self { code: 1, message: format!("output error: {e}") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { code: exit_code(&e), message: e.to_string() }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidZeta { .. } => 2,
        Error::NoValidRegion(_) | Error::OutOfRegion(_) => 3,
        Error::NoConvergence { .. } => 4,
        _ => 1,
    }
}

pub const VERIFY_FAILED: u8 = 5;

type CmdResult = Result<(), Failure>;

fn fmt_c(z: Complex64) -> String {
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{:.15e} {sign} {:.15e}i", z.re + 0.0, z.im.abs())
}

/// Short display with signed zeros folded to `+0`.
fn short(z: Complex64) -> String {
    Complex64::new(z.re + 0.0, z.im + 0.0).to_string()
}

fn rep_tag(v: &GreenValue) -> &'static str {
    v.representation.map_or("-", |r| r.tag())
}

fn membership(m: Membership) -> &'static str {
    match m {
        Membership::Interior => "interior",
        Membership::Boundary => "boundary",
        Membership::Outside => "outside",
    }
}

struct Named {
    name: &'static str,
    value: GreenValue,
}

fn point_quantities(p: &PhysicalParams, x: &EvalPoint, opts: &GreenOptions) -> Result<Vec<Named>, Error> {
    p.validate()?;
    if x.r() < DEGENERATE_EPS {
        return Ok(vec![
            Named { name: "G1", value: g1_at_origin_detailed(p, opts)? },
            Named { name: "G2ren", value: g2_ren_at_origin_detailed(p, opts)? },
        ]);
    }
    Ok(vec![
        Named { name: "G1", value: g1_detailed(x, p, opts)? },
        Named { name: "G2", value: g2_detailed(x, p, opts)? },
        Named { name: "D+G1", value: dpm_g1_detailed(x, p, Sign::Plus, opts)? },
        Named { name: "D-G1", value: dpm_g1_detailed(x, p, Sign::Minus, opts)? },
    ])
}

fn quantity_json(q: &Named) -> Value {
    json!({
        "name": q.name,
        "value": complex_json(q.value.value),
        "path": q.value.path.tag(),
        "representation": rep_tag(&q.value),
        "terms_used": q.value.terms_used,
        "est_error": q.value.est_error,
        "boundary": q.value.boundary,
    })
}

fn matrix_entries(m: &GreenMatrix) -> [(&'static str, Complex64); 4] {
    [("g11", m.g11), ("g12", m.g12), ("g21", m.g21), ("g22", m.g22)]
}

pub fn eval(c: &Common) -> CmdResult {
    let p = c.params();
    let x = c.eval_point();
    let opts = c.options();
    let quantities = point_quantities(&p, &x, &opts)?;
    let matrix = if x.r() < DEGENERATE_EPS { None } else { Some(green_matrix_with(&x, &p, &opts)?) };

    let mut out = sink(c.output.as_deref()).map_err(Failure::io)?;
    match c.format {
        Format::Json => {
            let m = matrix.map(|m| {
                matrix_entries(&m)
                    .iter()
                    .map(|(k, v)| (k.to_string(), complex_json(*v)))
                    .collect::<serde_json::Map<_, _>>()
            });
            let doc = json!({
                "alpha": p.alpha,
                "beta": p.beta,
                "zeta": complex_json(p.zeta),
                "point": c.point,
                "r": x.r(),
                "quantities": quantities.iter().map(quantity_json).collect::<Vec<_>>(),
                "matrix": m,
            });
            write_json(&mut out, &doc).map_err(Failure::io)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["quantity", "re", "im", "path", "representation", "terms_used", "est_error"])
                .map_err(Failure::io)?;
            for q in &quantities {
                let v = &q.value;
                w.write_record([
                    q.name.to_string(),
                    full(v.value.re),
                    full(v.value.im),
                    v.path.tag().to_string(),
                    rep_tag(v).to_string(),
                    v.terms_used.to_string(),
                    full(v.est_error),
                ])
                .map_err(Failure::io)?;
            }
            for (k, v) in matrix.iter().flat_map(matrix_entries) {
                w.write_record([k.to_string(), full(v.re), full(v.im), "matrix".into(), "-".into(), "0".into(), full(0.0)])
                    .map_err(Failure::io)?;
            }
            w.flush().map_err(Failure::io)?;
        }
        Format::Text => {
            let write = |out: &mut dyn Write| -> std::io::Result<()> {
                writeln!(out, "alpha = {}, beta = {}, zeta = {}, Sigma = {}", p.alpha, p.beta, short(p.zeta), p.sigma())?;
                writeln!(out, "x = ({}, {}, {}), r = {}", c.point[0], c.point[1], c.point[2], x.r())?;
                for q in &quantities {
                    let v = &q.value;
                    writeln!(
                        out,
                        "{:<6} = {}  [{}, {}, {} terms, est. error {:.2e}{}]",
                        q.name,
                        fmt_c(v.value),
                        v.path.tag(),
                        rep_tag(v),
                        v.terms_used,
                        v.est_error,
                        if v.boundary { ", boundary" } else { "" }
                    )?;
                }
                if let Some(m) = &matrix {
                    writeln!(out, "matrix:")?;
                    for (k, v) in matrix_entries(m) {
                        writeln!(out, "  {k} = {}", fmt_c(v))?;
                    }
                }
                out.flush()
            };
            write(&mut *out).map_err(Failure::io)?;
        }
    }
    Ok(())
}

fn triple_regions(z: &TripleArg) -> XpRegions {
    classify_xprime_region(z, &SeriesParams::real(0.5, 1.5))
}

fn regions_json(z: Option<&TripleArg>) -> Value {
    match z {
        None => Value::Null,
        Some(z) => {
            let reg = triple_regions(z);
            json!({
                "z1": complex_json(z.z1),
                "z2": complex_json(z.z2),
                "z3": complex_json(z.z3),
                "xp1": membership(reg.xp1),
                "xp2": membership(reg.xp2),
                "xp3": membership(reg.xp3),
            })
        }
    }
}

pub fn region(c: &Common) -> CmdResult {
    let p = c.params();
    let sigma = sigma_threshold(p.alpha, p.beta);
    let validity = p.validate();
    let flags = theorem_flags(&p);
    let r = c.eval_point().r();
    let (v, u) = argument_triples(&p, r);
    let status = match &validity {
        Ok(()) => "valid".to_string(),
        Err(_) => format!("invalid: zeta lies in the essential spectrum [-{sigma}, inf)"),
    };

    let mut out = sink(c.output.as_deref()).map_err(Failure::io)?;
    match c.format {
        Format::Json => {
            let doc = json!({
                "alpha": p.alpha,
                "beta": p.beta,
                "zeta": complex_json(p.zeta),
                "sigma": sigma,
                "valid": validity.is_ok(),
                "status": status,
                "conditions": { "a": flags.a, "b": flags.b, "c": flags.c },
                "r": r,
                "v": regions_json(v.as_ref()),
                "u": regions_json(Some(&u)),
            });
            write_json(&mut out, &doc).map_err(Failure::io)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            let mut rows = vec![
                ("sigma".to_string(), full(sigma)),
                ("valid".into(), validity.is_ok().to_string()),
                ("condition_a".into(), flags.a.to_string()),
                ("condition_b".into(), flags.b.to_string()),
                ("condition_c".into(), flags.c.to_string()),
            ];
            for (name, z) in [("v", v), ("u", Some(u))] {
                let cells = match z {
                    Some(z) => {
                        let reg = triple_regions(&z);
                        [reg.xp1, reg.xp2, reg.xp3].map(|m| membership(m).to_string())
                    }
                    None => ["n/a", "n/a", "n/a"].map(String::from),
                };
                for (rep, cell) in ["xp1", "xp2", "xp3"].iter().zip(cells) {
                    rows.push((format!("{name}_{rep}"), cell));
                }
            }
            w.write_record(["key", "value"]).map_err(Failure::io)?;
            for (k, val) in rows {
                w.write_record([k, val]).map_err(Failure::io)?;
            }
            w.flush().map_err(Failure::io)?;
        }
        Format::Text => {
            let write = |out: &mut dyn Write| -> std::io::Result<()> {
                writeln!(out, "alpha = {}, beta = {}, zeta = {}", p.alpha, p.beta, short(p.zeta))?;
                writeln!(out, "Sigma = {sigma}")?;
                writeln!(out, "zeta: {status}")?;
                writeln!(out, "condition (a): {}", flags.a)?;
                writeln!(out, "condition (b): {}", flags.b)?;
                writeln!(out, "condition (c): {}", flags.c)?;
                writeln!(out, "r = {r}")?;
                for (name, z) in [("v", v), ("u", Some(u))] {
                    match z {
                        Some(z) => {
                            let reg = triple_regions(&z);
                            writeln!(
                                out,
                                "{name} = ({}, {}, {}): Xp1 {}, Xp2 {}, Xp3 {}",
                                short(z.z1),
                                short(z.z2),
                                short(z.z3),
                                membership(reg.xp1),
                                membership(reg.xp2),
                                membership(reg.xp3)
                            )?;
                        }
                        None => writeln!(out, "{name}: not used at beta = 0")?,
                    }
                }
                out.flush()
            };
            write(&mut *out).map_err(Failure::io)?;
        }
    }
    Ok(())
}

pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![start],
        n => (0..n).map(|k| start + (stop - start) * k as f64 / (n - 1) as f64).collect(),
    }
}

fn row_config(base: &Common, var: SweepVar, value: f64) -> Common {
    let mut c = base.clone();
    match var {
        SweepVar::R => {
            let x = base.eval_point();
            let len = x.r();
            let dir = if len > 0.0 { base.point.map(|v| v / len) } else { [0.0, 0.0, 1.0] };
            c.point = dir.map(|d| d * value);
        }
        SweepVar::Alpha => c.alpha = value,
        SweepVar::Beta => c.beta = value,
        SweepVar::ReZeta => c.zeta.re = value,
    }
    c
}

struct Row {
    value: f64,
    result: Result<[GreenValue; 3], Error>,
}

fn eval_row(base: &Common, var: SweepVar, value: f64) -> Row {
    let c = row_config(base, var, value);
    let p = c.params();
    let x = c.eval_point();
    let opts = c.options();
    let result = p.validate().and_then(|()| {
        Ok([
            g1_detailed(&x, &p, &opts)?,
            g2_detailed(&x, &p, &opts)?,
            dpm_g1_detailed(&x, &p, Sign::Plus, &opts)?,
        ])
    });
    Row { value, result }
}

const TABLE_HEADER: [&str; 16] = [
    "", "g1_re", "g1_im", "g2_re", "g2_im", "dpg1_re", "dpg1_im", "path", "representation", "g1_terms",
    "g1_est_error", "g2_terms", "g2_est_error", "dpg1_terms", "dpg1_est_error", "error",
];

fn row_cells(row: &Row) -> Vec<String> {
    let mut cells = vec![full(row.value)];
    match &row.result {
        Ok(v) => {
            for g in v {
                cells.push(full(g.value.re));
                cells.push(full(g.value.im));
            }
            cells.push(v[0].path.tag().to_string());
            cells.push(rep_tag(&v[0]).to_string());
            for g in v {
                cells.push(g.terms_used.to_string());
                cells.push(full(g.est_error));
            }
            cells.push(String::new());
        }
        Err(e) => {
            cells.extend(std::iter::repeat_n(String::new(), TABLE_HEADER.len() - 2));
            cells.push(format!("{}: {e}", error_tag(e)));
        }
    }
    cells
}

fn error_tag(e: &Error) -> &'static str {
    match e {
        Error::InvalidZeta { .. } => "invalid-zeta",
        Error::NoValidRegion(_) | Error::OutOfRegion(_) => "no-region",
        Error::NoConvergence { .. } => "no-convergence",
        _ => "error",
    }
}

fn row_json(var: SweepVar, row: &Row) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert(var.name().into(), json!(row.value));
    match &row.result {
        Ok(v) => {
            for (name, g) in ["G1", "G2", "D+G1"].iter().zip(v) {
                obj.insert(
                    (*name).into(),
                    json!({
                        "value": complex_json(g.value),
                        "path": g.path.tag(),
                        "representation": rep_tag(g),
                        "terms_used": g.terms_used,
                        "est_error": g.est_error,
                    }),
                );
            }
            obj.insert("error".into(), Value::Null);
        }
        Err(e) => {
            obj.insert("error".into(), json!({ "kind": error_tag(e), "message": e.to_string() }));
        }
    }
    Value::Object(obj)
}

pub fn table(t: &TableArgs) -> CmdResult {
    let c = &t.common;
    let values = linspace(t.start, t.stop, t.count);
    let compute = || values.par_iter().map(|&v| eval_row(c, t.sweep, v)).collect::<Vec<_>>();
    let rows = match c.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure { code: 1, message: format!("thread pool: {e}") })?
            .install(compute),
        None => compute(),
    };

    let mut header: Vec<String> = TABLE_HEADER.iter().map(|s| s.to_string()).collect();
    header[0] = t.sweep.name().to_string();
    let out = sink(c.output.as_deref()).map_err(Failure::io)?;
    match c.format {
        Format::Json => {
            let doc = json!({
                "sweep": t.sweep.name(),
                "alpha": c.alpha,
                "beta": c.beta,
                "zeta": complex_json(c.zeta),
                "point": c.point,
                "rows": rows.iter().map(|r| row_json(t.sweep, r)).collect::<Vec<_>>(),
            });
            let mut out = out;
            write_json(&mut out, &doc).map_err(Failure::io)?;
        }
        Format::Csv | Format::Text => {
            let delimiter = if c.format == Format::Csv { b',' } else { b'\t' };
            let mut w = csv::WriterBuilder::new().delimiter(delimiter).from_writer(out);
            w.write_record(&header).map_err(Failure::io)?;
            for row in &rows {
                w.write_record(row_cells(row)).map_err(Failure::io)?;
            }
            w.flush().map_err(Failure::io)?;
        }
    }
    Ok(())
}

struct Check {
    name: &'static str,
    deviation: Option<f64>,
    tolerance: f64,
    note: String,
}

impl Check {
    fn run(name: &'static str, tolerance: f64, dev: Result<f64, Error>) -> Self {
        match dev {
            Ok(d) => Self { name, deviation: Some(d), tolerance, note: String::new() },
            Err(e) => Self { name, deviation: None, tolerance, note: format!("skipped: {e}") },
        }
    }

    fn not_applicable(name: &'static str, tolerance: f64, why: &str) -> Self {
        Self { name, deviation: None, tolerance, note: format!("not applicable: {why}") }
    }

    fn passed(&self) -> bool {
        self.deviation.is_none_or(|d| d <= self.tolerance)
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

fn worst(pairs: &[(Complex64, Complex64)]) -> f64 {
    pairs.iter().map(|(a, b)| rel(*a, *b)).fold(0.0, f64::max)
}

pub fn verify(c: &Common) -> CmdResult {
    let p = c.params();
    p.validate()?;
    let x = c.eval_point();
    let r = x.r();
    let series = GreenOptions { prefer_closed_form: false, ..c.options() };
    let closed = GreenOptions::default();
    let quad_cfg = QuadratureConfig::default();

    let mut checks = Vec::new();
    if r < DEGENERATE_EPS {
        let s1 = g1_at_origin_detailed(&p, &series)?.value;
        let s2 = g2_ren_at_origin_detailed(&p, &series)?.value;
        let c1 = g1_at_origin_detailed(&p, &closed)?.value;
        let c2 = g2_ren_at_origin_detailed(&p, &closed)?.value;
        checks.push(Check::not_applicable("series vs quadrature", 1e-6, "origin"));
        checks.push(Check::not_applicable("series vs Macdonald sum", 1e-7, "origin"));
        checks.push(Check::run("origin series vs closed form", 1e-10, Ok(worst(&[(s1, c1), (s2, c2)]))));
    } else {
        let s1 = g1_detailed(&x, &p, &series)?.value;
        let s2 = g2_detailed(&x, &p, &series)?.value;
        let quad = quad_g1(r, &p, &quad_cfg).and_then(|q1| Ok((q1, quad_g2(r, &p, &quad_cfg)?)));
        let mac = macdonald_sum_g1(r, &p).and_then(|m1| Ok((m1, macdonald_sum_g2(r, &p)?)));
        checks.push(Check::run(
            "series vs quadrature",
            1e-6,
            quad.clone().map(|(q1, q2)| worst(&[(s1, q1), (s2, q2)])),
        ));
        checks.push(Check::run(
            "series vs Macdonald sum",
            1e-7,
            mac.clone().map(|(m1, m2)| worst(&[(s1, m1), (s2, m2)])),
        ));
        if let (Ok((q1, q2)), Ok((m1, m2))) = (&quad, &mac) {
            checks.push(Check::run("quadrature vs Macdonald sum", 1e-7, Ok(worst(&[(*q1, *m1), (*q2, *m2)]))));
        }
        if p.alpha < DEGENERATE_EPS {
            let c1 = g1_detailed(&x, &p, &closed)?.value;
            let c2 = g2_detailed(&x, &p, &closed)?.value;
            checks.push(Check::run("series vs alpha = 0 closed form", 1e-8, Ok(worst(&[(s1, c1), (s2, c2)]))));
        } else {
            checks.push(Check::not_applicable("series vs alpha = 0 closed form", 1e-8, "alpha > 0"));
        }
    }
    let ok = checks.iter().all(Check::passed);
    let max_dev = checks.iter().filter_map(|k| k.deviation).fold(0.0, f64::max);

    let mut out = sink(c.output.as_deref()).map_err(Failure::io)?;
    match c.format {
        Format::Json => {
            let doc = json!({
                "alpha": p.alpha,
                "beta": p.beta,
                "zeta": complex_json(p.zeta),
                "r": r,
                "checks": checks.iter().map(|k| json!({
                    "name": k.name,
                    "deviation": k.deviation,
                    "tolerance": k.tolerance,
                    "passed": k.passed(),
                    "note": k.note,
                })).collect::<Vec<_>>(),
                "max_deviation": max_dev,
                "passed": ok,
            });
            write_json(&mut out, &doc).map_err(Failure::io)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["check", "deviation", "tolerance", "passed", "note"]).map_err(Failure::io)?;
            for k in &checks {
                w.write_record([
                    k.name.to_string(),
                    k.deviation.map(full).unwrap_or_default(),
                    full(k.tolerance),
                    k.passed().to_string(),
                    k.note.clone(),
                ])
                .map_err(Failure::io)?;
            }
            w.flush().map_err(Failure::io)?;
        }
        Format::Text => {
            let write = |out: &mut dyn Write| -> std::io::Result<()> {
                writeln!(out, "alpha = {}, beta = {}, zeta = {}, r = {r}", p.alpha, p.beta, short(p.zeta))?;
                for k in &checks {
                    let status = match (k.deviation, k.passed()) {
                        (None, _) => "----",
                        (Some(_), true) => "PASS",
                        (Some(_), false) => "FAIL",
                    };
                    let dev = k.deviation.map_or(k.note.clone(), |d| format!("{d:.3e} (tol {:.0e})", k.tolerance));
                    writeln!(out, "{status} {}: {dev}", k.name)?;
                }
                writeln!(out, "max relative deviation {max_dev:.3e}")?;
                out.flush()
            };
            write(&mut *out).map_err(Failure::io)?;
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure { code: VERIFY_FAILED, message: format!("verification failed: max deviation {max_dev:.3e}") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_ends() {
        assert!(linspace(0.0, 1.0, 0).is_empty());
        assert_eq!(linspace(2.0, 5.0, 1), vec![2.0]);
        assert_eq!(linspace(0.0, 1.0, 5), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::InvalidZeta { zeta: Complex64::new(0.0, 0.0), sigma: 1.0 }), 2);
        assert_eq!(exit_code(&Error::NoValidRegion(String::new())), 3);
        assert_eq!(exit_code(&Error::NoConvergence { terms: 1, est_error: 0.0 }), 4);
        assert_eq!(exit_code(&Error::OriginNotAllowed), 1);
    }
}

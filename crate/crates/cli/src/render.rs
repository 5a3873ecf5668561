//! Text, JSON and CSV renderings of reports. JSON integers are decimal
//! strings and object keys are sorted, so output round-trips byte for byte.

use std::fmt::Write as _;
use std::io::Write;

use hilbert_core::bounds::CHECK_NAMES;
use hilbert_core::harness::SuiteReport;
use hilbert_core::{BoundCheck, CheckScope, ExternalReport, InstanceReport, Sense};
use serde_json::{json, Map, Value as Json};

pub const CSV_VERSION_LINE: &str = "# hilbert-bound-lab v1";

fn num(x: impl ToString) -> Json {
    Json::String(x.to_string())
}

fn nums<T: ToString + Copy>(xs: &[T]) -> Json {
    Json::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn comma_list(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn sense_name(sense: Sense) -> &'static str {
    match sense {
        Sense::Upper => "target <= bound",
        Sense::Lower => "target >= bound",
        Sense::StrictUpper => "target < bound",
        Sense::Equal => "target = bound",
    }
}

fn check_json(c: &BoundCheck) -> Json {
    let mut m = Map::new();
    m.insert("name".into(), json!(c.name));
    m.insert("statement".into(), json!(c.statement));
    m.insert("applicable".into(), json!(c.applicable));
    m.insert("holds".into(), json!(c.holds));
    m.insert("tight".into(), json!(c.tight));
    m.insert("sense".into(), json!(sense_name(c.sense)));
    m.insert("bound".into(), num(&c.bound));
    m.insert("target".into(), num(&c.target));
    m.insert(
        "scope".into(),
        json!(match c.scope {
            CheckScope::Exact => "exact",
            CheckScope::SuppliedRange => "supplied range",
        }),
    );
    if let Some(cmp) = &c.comparison {
        m.insert("relation".into(), json!(format!("{:?}", cmp.relation)));
        m.insert("checked_upto".into(), num(cmp.checked_upto));
        m.insert("tail".into(), json!(format!("{:?}", cmp.tail)));
        if let Some(n) = cmp.first_divergence {
            m.insert("first_divergence".into(), num(n));
        }
    }
    Json::Object(m)
}

fn violation_names<'a>(checks: impl Iterator<Item = &'a BoundCheck>) -> Json {
    Json::Array(
        checks
            .filter(|c| c.is_violation())
            .map(|c| json!(c.name))
            .collect(),
    )
}

pub fn instance_json(r: &InstanceReport) -> Json {
    let rec = &r.record;
    let d = &r.derived;
    let invariants = json!({
        "e0": num(rec.e0),
        "e1": num(rec.e1),
        "pn": num(rec.pn),
        "reduction_index": num(rec.reduction_index),
        "lambda": num(rec.lambda),
        "b": num(rec.b()),
        "mu": num(r.profile.mu),
        "o": num(r.profile.order),
        "h0": nums(&rec.h0_table),
        "v": nums(&rec.v_seq),
        "beta": num(d.beta),
        "w": num(d.w),
        "alpha": num(d.alpha),
        "delta": num(d.delta),
        "epsilon": num(d.epsilon),
        "epsilon_pn": num(d.epsilon_pn),
        "alpha_pn": num(d.alpha_pn),
        "rho": num(d.rho),
        "e0R": num(r.ring.e0),
        "e1R": num(r.ring.e1),
        "bR": num(r.ring.embedding_dim),
        "p1": num(rec.poincare_series(1)),
    });
    json!({
        "semigroup": nums(r.semigroup.min_generators()),
        "ideal": nums(r.ideal.min_generators()),
        "invariants": invariants,
        "checks": Json::Array(r.checks.iter().map(check_json).collect()),
        "violations": violation_names(r.checks.iter()),
        "notes": r.notes,
    })
}

pub fn external_json(r: &ExternalReport) -> Json {
    let mut inv = Map::new();
    inv.insert("dimension".into(), num(r.data.dimension));
    inv.insert("coefficients".into(), nums(&r.data.coefficients));
    inv.insert("e0".into(), num(r.data.e0()));
    inv.insert("e1".into(), num(r.data.e1()));
    inv.insert("pn".into(), num(r.pn));
    inv.insert("lambda".into(), num(r.lambda));
    inv.insert("w".into(), num(r.w));
    inv.insert("alpha".into(), num(r.alpha));
    inv.insert("delta".into(), num(r.delta));
    for (key, value) in [("mu", r.mu), ("b", r.b), ("beta", r.beta), ("rho", r.rho)] {
        if let Some(v) = value {
            inv.insert(key.into(), num(v));
        }
    }
    json!({
        "table": nums(&r.data.h0_table),
        "invariants": Json::Object(inv),
        "checks": Json::Array(r.checks.iter().map(check_json).collect()),
        "violations": violation_names(r.checks.iter()),
        "skipped": r.skipped,
    })
}

pub fn suite_json(s: &SuiteReport) -> Json {
    let violations: Vec<Json> = s
        .violations
        .iter()
        .map(|v| {
            json!({
                "semigroup": v.semigroup,
                "ideal": v.ideal,
                "check": v.check,
                "target": num(&v.target),
                "bound": num(&v.bound),
            })
        })
        .collect();
    let mut tightness = Map::new();
    for (name, t) in &s.tightness {
        tightness.insert(
            (*name).into(),
            json!({"applicable": num(t.applicable), "holds": num(t.holds), "tight": num(t.tight)}),
        );
    }
    json!({
        "instances": num(s.instances_run),
        "semigroups_per_genus": nums(&s.semigroups_per_genus),
        "violations": violations,
        "defects": s.defects,
        "tightness": Json::Object(tightness),
    })
}

pub fn to_json_string(v: &Json) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn check_line(out: &mut String, c: &BoundCheck) {
    let status = match (c.applicable, c.holds, c.tight) {
        (false, _, _) => "vacuous",
        (true, false, _) => "VIOLATED",
        (true, true, true) => "tight",
        (true, true, false) => "holds",
    };
    let scope = match c.scope {
        CheckScope::Exact => "",
        CheckScope::SuppliedRange => " [on supplied range]",
    };
    let _ = writeln!(
        out,
        "  {:<24} {:<8} target {} ; bound {}{scope}",
        c.name, status, c.target, c.bound
    );
    let _ = writeln!(out, "  {:<24} {}", "", c.statement);
}

pub fn instance_text(r: &InstanceReport) -> String {
    let rec = &r.record;
    let d = &r.derived;
    let mut out = String::new();
    let _ = writeln!(out, "semigroup {}  ideal {}", r.semigroup, r.ideal);
    let _ = writeln!(
        out,
        "ring: e0(R) = {}, e1(R) = {}, b(R) = {}",
        r.ring.e0, r.ring.e1, r.ring.embedding_dim
    );
    let _ = writeln!(
        out,
        "e0 = {}, e1 = {}, pn = {}, lambda = {}, b = {}, mu = {}, o = {}",
        rec.e0,
        rec.e1,
        rec.pn,
        rec.lambda,
        rec.b(),
        r.profile.mu,
        r.profile.order
    );
    let _ = writeln!(out, "H0 = {:?}, v = {:?}", rec.h0_table, rec.v_seq);
    let _ = writeln!(
        out,
        "beta = {}, w = {}, alpha = {}, delta = {}, epsilon = {}, epsilon_pn = {}, rho = {}, alpha_pn = {}",
        d.beta, d.w, d.alpha, d.delta, d.epsilon, d.epsilon_pn, d.rho, d.alpha_pn
    );
    let _ = writeln!(out, "P1 = {}", rec.poincare_series(1));
    let violations: Vec<&str> = r.violations().map(|c| c.name).collect();
    if violations.is_empty() {
        let _ = writeln!(out, "violations: none");
    } else {
        let _ = writeln!(out, "violations: {}", violations.join(", "));
    }
    let _ = writeln!(out, "checks:");
    for c in &r.checks {
        check_line(&mut out, c);
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn external_text(r: &ExternalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "dimension {}  table {:?}",
        r.data.dimension, r.data.h0_table
    );
    let _ = writeln!(
        out,
        "e0 = {}, e1 = {}, coefficients e_0..e_d = {:?}, pn = {}, lambda = {}",
        r.data.e0(),
        r.data.e1(),
        r.data.coefficients,
        r.pn,
        r.lambda
    );
    let opt = |v: Option<i64>| v.map_or("n/a".to_string(), |x| x.to_string());
    let _ = writeln!(
        out,
        "w = {}, alpha = {}, delta = {}, mu = {}, b = {}, beta = {}, rho = {}",
        r.w,
        r.alpha,
        r.delta,
        opt(r.mu),
        opt(r.b),
        opt(r.beta),
        opt(r.rho)
    );
    let violations: Vec<&str> = r.violations().map(|c| c.name).collect();
    if violations.is_empty() {
        let _ = writeln!(out, "violations: none");
    } else {
        let _ = writeln!(out, "violations: {}", violations.join(", "));
    }
    let _ = writeln!(out, "checks:");
    for c in &r.checks {
        check_line(&mut out, c);
    }
    let _ = writeln!(
        out,
        "skipped (not determined by the supplied data): {}",
        r.skipped.join(", ")
    );
    out
}

pub fn suite_text(s: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "instances: {}", s.instances_run);
    let _ = writeln!(out, "semigroups per genus: {:?}", s.semigroups_per_genus);
    let _ = writeln!(out, "elapsed: {:.3}s", s.elapsed.as_secs_f64());
    let _ = writeln!(out, "violations: {}", s.violations.len());
    for v in &s.violations {
        let semigroup = v.semigroup.trim_matches(|c| c == '<' || c == '>');
        let ideal = v.ideal.trim_matches(|c| c == '(' || c == ')');
        let _ = writeln!(
            out,
            "  {} target {} bound {}  (reproduce: analyze --semigroup {semigroup} --ideal {ideal})",
            v.check, v.target, v.bound
        );
    }
    let _ = writeln!(out, "defects: {}", s.defects.len());
    for d in &s.defects {
        let _ = writeln!(out, "  {d}");
    }
    let _ = writeln!(out, "tightness census (applicable / holds / tight):");
    for (name, t) in &s.tightness {
        let _ = writeln!(
            out,
            "  {name:<24} {} / {} / {}",
            t.applicable, t.holds, t.tight
        );
    }
    out
}

pub fn csv_header() -> Vec<String> {
    let mut header: Vec<String> = [
        "semigroup",
        "ideal",
        "e0R",
        "e1R",
        "bR",
        "e0",
        "e1",
        "pn",
        "lambda",
        "b",
        "mu",
        "o",
        "beta",
        "w",
        "alpha",
        "delta",
        "epsilon",
        "rho",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for name in CHECK_NAMES {
        header.push(format!("{name}_holds"));
        header.push(format!("{name}_tight"));
    }
    header
}

pub fn csv_row(r: &InstanceReport) -> Vec<String> {
    let rec = &r.record;
    let d = &r.derived;
    let mut row = vec![
        comma_list(r.semigroup.min_generators()),
        comma_list(r.ideal.min_generators()),
    ];
    row.extend(
        [
            r.ring.e0,
            r.ring.e1,
            r.ring.embedding_dim,
            rec.e0,
            rec.e1,
            rec.pn as i64,
            rec.lambda,
            rec.b(),
            r.profile.mu,
            r.profile.order,
            d.beta,
            d.w,
            d.alpha,
            d.delta,
            d.epsilon,
            d.rho,
        ]
        .iter()
        .map(i64::to_string),
    );
    for name in CHECK_NAMES {
        let c = r.check(name).expect("every report carries every check");
        row.push(c.holds.to_string());
        row.push(c.tight.to_string());
    }
    row
}

pub fn write_csv<W: Write>(mut out: W, reports: &[InstanceReport]) -> std::io::Result<()> {
    writeln!(out, "{CSV_VERSION_LINE}")?;
    let mut writer = csv::WriterBuilder::new().delimiter(b';').from_writer(out);
    writer.write_record(csv_header())?;
    for r in reports {
        writer.write_record(csv_row(r))?;
    }
    writer.flush()
}

/// `"<closed form> : c0 c1 ..."`.
pub fn series_line(closed: &impl std::fmt::Display, coefficients: &[i128]) -> String {
    let coeffs: Vec<String> = coefficients.iter().map(i128::to_string).collect();
    format!("{closed} : {}", coeffs.join(" "))
}

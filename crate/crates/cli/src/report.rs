//! Command output. Every report is built once as a list of fields; the text
//! and JSON forms are two renderings of the same strings.

use std::fmt::Write as _;

use monass_core::assoc::{self, Witness};
use monass_core::bounds::{bound_report, exceeds, BoundValue};
use monass_core::linsys::{
    delta_exact, hadamard_bound, theorem1_bound, DeltaLimits, DeltaSource, IneqSystem,
};
use monass_core::powers::{ass_sequence, indices_with_window, ObservedIndex};
use monass_core::verify;
use monass_core::{render_ideal, render_monomial, AssSet, ParsedIdeal, Result};
use serde_json::{json, Map, Value};

pub struct Report {
    text: String,
    json: Map<String, Value>,
}

impl Report {
    fn new() -> Self {
        Report {
            text: String::new(),
            json: Map::new(),
        }
    }

    fn header(p: &ParsedIdeal) -> Self {
        let mut rep = Report::new();
        rep.list("variables", p.names.clone());
        let gens: Vec<String> = p
            .ideal
            .generators()
            .iter()
            .rev()
            .map(|g| render_monomial(g, &p.names))
            .collect();
        let _ = writeln!(rep.text, "ideal: {}", render_ideal(&p.ideal, &p.names));
        rep.json.insert("ideal".into(), json!(gens));
        rep
    }

    /// `key: value` in text, a string in JSON.
    fn field(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        let _ = writeln!(self.text, "{}: {value}", key.replace('_', " "));
        self.json.insert(key.into(), Value::String(value));
    }

    fn flag(&mut self, key: &str, value: bool) {
        let _ = writeln!(
            self.text,
            "{}: {}",
            key.replace('_', " "),
            if value { "yes" } else { "no" }
        );
        self.json.insert(key.into(), Value::Bool(value));
    }

    fn list(&mut self, key: &str, items: Vec<String>) {
        let _ = writeln!(self.text, "{}: {}", key.replace('_', " "), items.join(", "));
        self.json.insert(key.into(), json!(items));
    }

    fn bound(&mut self, key: &str, b: &BoundValue) {
        let _ = writeln!(
            self.text,
            "{}: ceil {}, squared {}",
            key.replace('_', " "),
            b.ceil,
            b.squared
        );
        self.json.insert(
            key.into(),
            json!({ "ceil": b.ceil.to_string(), "squared": b.squared.to_string() }),
        );
    }

    fn raw(&mut self, key: &str, text: &str, value: Value) {
        self.text.push_str(text);
        self.json.insert(key.into(), value);
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn json(&self) -> &Map<String, Value> {
        &self.json
    }
}

fn primes(set: &AssSet, names: &[String]) -> Vec<String> {
    set.iter().map(|p| p.render(names)).collect()
}

pub fn ass(p: &ParsedIdeal, power: u32) -> Result<Report> {
    let mut rep = Report::header(p);
    rep.field("power", power);
    let set = assoc::ass(&p.ideal.power(power)?)?;
    rep.list("associated_primes", primes(&set, &p.names));
    Ok(rep)
}

fn index_json(ix: &ObservedIndex) -> Value {
    json!({ "value": ix.value.to_string(), "confirmed": ix.confirmed })
}

fn index_text(ix: &ObservedIndex) -> String {
    let tag = if ix.confirmed {
        "confirmed"
    } else {
        "unconfirmed"
    };
    format!("{} ({tag})", ix.value)
}

pub fn sequence(p: &ParsedIdeal, max_n: u32, window: usize) -> Result<Report> {
    let mut rep = Report::header(p);
    rep.field("max_n", max_n);
    let profile = ass_sequence(&p.ideal, max_n)?;

    let mut text = String::from("n\tAss(R/I^n)\n");
    let mut rows = Vec::new();
    for (k, set) in profile.sequence.iter().enumerate() {
        let n = k + 1;
        let _ = writeln!(text, "{n}\t{}", set.render(&p.names));
        rows.push(json!({ "n": n.to_string(), "ass": primes(set, &p.names) }));
    }
    rep.raw("sequence", &text, Value::Array(rows));

    let report = indices_with_window(&profile, window);
    let mut text = String::new();
    let mut indices = Map::new();
    for (name, ix) in [
        ("stab", &report.stab),
        ("pers", &report.pers),
        ("copers", &report.copers),
    ] {
        let _ = writeln!(text, "{name}: {}", index_text(ix));
        indices.insert(name.into(), index_json(ix));
    }
    rep.raw("indices", &text, Value::Object(indices));
    rep.field("window", report.window);

    let mut text = String::from("per-prime copersistence:\n");
    let mut cpi = Vec::new();
    for (prime, value) in &report.per_prime_cpi {
        let name = prime.render(&p.names);
        let _ = writeln!(text, "  {name}: {value}");
        cpi.push(json!({ "prime": name, "value": value.to_string() }));
    }
    rep.raw("per_prime_cpi", &text, Value::Array(cpi));
    Ok(rep)
}

pub fn bounds(p: &ParsedIdeal) -> Result<Report> {
    let mut rep = Report::header(p);
    let b = bound_report(&p.ideal)?;
    rep.field("r", b.stats.r);
    rep.field("s", b.stats.s);
    rep.field("d", b.stats.d);
    rep.field("d_red", b.stats.d_red);
    rep.field("support", b.stats.support.render(&p.names));
    let params = |(d, s, r): (u64, u64, u64)| vec![d.to_string(), s.to_string(), r.to_string()];
    rep.list("raw_params", params(b.raw_params));
    rep.list("reduced_params", params(b.reduced_params));
    rep.bound("sigma1_raw", &b.sigma1_raw);
    rep.bound("sigma2_raw", &b.sigma2_raw);
    rep.bound("sigma1_reduced", &b.sigma1_reduced);
    rep.bound("sigma2_reduced", &b.sigma2_reduced);
    rep.field("squared_ratio_raw", &b.ratio_raw);
    rep.field("squared_ratio_reduced", &b.ratio_reduced);
    rep.flag(
        "ratio_reduced_exceeds_1e6",
        exceeds(&b.ratio_reduced, 1_000_000),
    );
    if !b.notes.is_empty() {
        let text: String = b.notes.iter().map(|n| format!("note: {n}\n")).collect();
        rep.raw("notes", &text, json!(b.notes));
    }
    Ok(rep)
}

pub fn system(p: &ParsedIdeal, sys: &IneqSystem, inline: bool) -> Report {
    let mut rep = Report::new();
    if inline {
        // text output is exactly the dump
        rep.text = sys.to_dump();
    } else {
        let _ = writeln!(rep.text, "variables: {}", p.names.join(", "));
        let _ = writeln!(rep.text, "kind: {}", sys.kind().tag());
        let _ = writeln!(
            rep.text,
            "m: {}\nnu: {}\nk: {}\nr: {}",
            sys.m(),
            sys.nu(),
            sys.k(),
            sys.r()
        );
    }
    rep.json.insert("variables".into(), json!(p.names));
    rep.json.insert("kind".into(), json!(sys.kind().tag()));
    for (key, v) in [
        ("m", sys.m()),
        ("nu", sys.nu()),
        ("k", sys.k()),
        ("r", sys.r()),
    ] {
        rep.json.insert(key.into(), json!(v.to_string()));
    }
    if let monass_core::linsys::SystemKind::Sat(n) = sys.kind() {
        rep.json.insert("sat_n".into(), json!(n.to_string()));
    }
    let strings = |row: &[i64]| row.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let rows: Vec<Vec<String>> = sys.rows().iter().map(|r| strings(r)).collect();
    rep.json.insert("rows".into(), json!(rows));
    rep.json.insert("c".into(), json!(strings(sys.rhs())));
    rep
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verify(p: &ParsedIdeal, max_n: u32) -> Result<(Report, bool)> {
    let mut rep = Report::header(p);
    rep.field("max_n", max_n);
    let mut text =
        String::from("n\tassociated\twitness\tI^n:m\tsat(I^n)\tsat(I^n)∩I^(n-1)\tagree\n");
    let mut rows = Vec::new();
    let outcome = verify::verify(&p.ideal, max_n)?;
    for c in &outcome.characterizations {
        let witness = match &c.witness {
            Witness::Found(a) => render_monomial(a, &p.names),
            Witness::NotAssociated => "none".to_string(),
            Witness::Unknown => "unknown".to_string(),
        };
        let differs = |b: bool| if b { "differs" } else { "equal" };
        let _ = writeln!(
            text,
            "{}\t{}\t{witness}\t{}\t{}\t{}\t{}",
            c.n,
            yes_no(c.associated),
            differs(c.colon_differs),
            differs(c.sat_differs),
            differs(c.sat_meet_differs),
            yes_no(c.agrees())
        );
        rows.push(json!({
            "n": c.n.to_string(),
            "associated": c.associated,
            "witness": witness,
            "colon_differs": c.colon_differs,
            "sat_differs": c.sat_differs,
            "sat_meet_differs": c.sat_meet_differs,
            "agrees": c.agrees(),
        }));
    }
    let checks = &outcome.systems;
    rep.raw("characterizations", &text, Value::Array(rows));
    rep.field("system_points", checks.points);
    let mismatches: Vec<String> = checks
        .mismatches
        .iter()
        .map(|m| {
            format!(
                "{} n={} h={}: system {} ideal {}",
                m.kind,
                m.n,
                render_monomial(&m.h, &p.names),
                yes_no(m.system),
                yes_no(m.ideal)
            )
        })
        .collect();
    rep.field("system_mismatches", mismatches.len());
    if !mismatches.is_empty() {
        let text: String = mismatches.iter().map(|m| format!("  {m}\n")).collect();
        rep.raw("mismatch_details", &text, json!(mismatches));
    }
    let clean = outcome.is_clean();
    rep.field("result", if clean { "ok" } else { "mismatch" });
    Ok((rep, clean))
}

pub fn delta(sys: &IneqSystem, limits: DeltaLimits) -> Report {
    let mut rep = Report::new();
    rep.field("kind", sys.kind());
    rep.field("m", sys.m());
    rep.field("nu", sys.nu());
    let d = delta_exact(sys, limits);
    rep.field("delta", &d.value);
    rep.flag("exact", d.complete);
    rep.field("order_reached", d.order_reached);
    rep.field("minors_evaluated", d.minors_evaluated);
    if d.degenerate {
        rep.flag("degenerate", true);
    }
    rep.bound("hadamard", &hadamard_bound(sys));
    let t = theorem1_bound(sys, Some(limits));
    rep.bound("degree_bound", &t.value);
    rep.field(
        "degree_bound_source",
        match t.source {
            DeltaSource::Exact => "exact",
            DeltaSource::Hadamard => "hadamard",
        },
    );
    rep
}

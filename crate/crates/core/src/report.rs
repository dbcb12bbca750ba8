//! Pipelines that turn documents into check reports, and their text/JSON
//! rendering.

use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::accheck::{check_crux, check_hs_abelian, span_hs, tameness, SymPoly, Tameness};
use crate::exactalg::matrix::Vector;
use crate::exactalg::Subspace;
use crate::liealg::{format_combination, HyperKahlerTriple};
use crate::quadext::{
    build_extension_unchecked, check_admissible, check_indecomposable_sufficient, extract_canonical, ExtensionInput,
    Indecomposability,
};
use crate::verdict::Verdict;

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Fact {
    pub key: String,
    pub text: String,
    pub json: Value,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckLine>,
    pub facts: Vec<Fact>,
    pub summary: Option<String>,
}

struct Facts<'a>(&'a [Fact]);

impl Serialize for Facts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for f in self.0 {
            m.serialize_entry(&f.key, &f.json)?;
        }
        m.end()
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("subject", &self.subject)?;
        m.serialize_entry("passed", &self.passed())?;
        m.serialize_entry("checks", &self.checks)?;
        m.serialize_entry("facts", &Facts(&self.facts))?;
        if let Some(x) = &self.summary {
            m.serialize_entry("summary", x)?;
        }
        m.end()
    }
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.is_pass())
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.checks.push(CheckLine { name: name.into(), verdict, witness: None });
    }

    pub fn fact(&mut self, key: impl Into<String>, text: impl Into<String>, json: Value) {
        self.facts.push(Fact { key: key.into(), text: text.into(), json });
    }

    pub fn get_fact(&self, key: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.key == key)
    }

    pub fn get_check(&self, name: &str) -> Option<&CheckLine> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Appends another report's lines, prefixing names with `prefix`.
    pub fn absorb(&mut self, other: Report, prefix: &str) {
        let p = |s: String| if prefix.is_empty() { s } else { format!("{prefix} {s}") };
        self.checks.extend(other.checks.into_iter().map(|c| CheckLine { name: p(c.name), ..c }));
        self.facts.extend(other.facts.into_iter().map(|f| Fact { key: p(f.key), ..f }));
        if other.summary.is_some() {
            self.summary = other.summary;
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.subject);
        for c in &self.checks {
            let _ = writeln!(s, "check {}: {}", c.name, c.verdict);
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "  witness: {w}");
            }
        }
        for f in &self.facts {
            let _ = writeln!(s, "{}: {}", f.key, f.text);
        }
        if let Some(x) = &self.summary {
            let _ = writeln!(s, "{x}");
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "all checks passed" } else { "some checks FAILED" });
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

fn pair_fact(r: &mut Report, key: &str, p: (usize, usize)) {
    r.fact(key, format!("({}, {})", p.0, p.1), json!([p.0, p.1]));
}

/// Axioms, signature on the minus part, and holonomy.
pub fn triple_report(t: &HyperKahlerTriple) -> Report {
    let mut r = Report::new(format!("triple of dimension {}", t.dim()));
    let v = t.verify();
    let ok = v.passed();
    for (c, verdict) in v.checks {
        r.check(c.name(), verdict);
    }
    r.fact("dimension", t.dim().to_string(), json!(t.dim()));
    match t.signature_minus() {
        Ok(p) => pair_fact(&mut r, "signature", p),
        Err(e) => r.check("minus part nondegenerate", Verdict::fail(e.to_string())),
    }
    if let Ok(h) = t.holonomy() {
        let d = h.algebra.dim();
        let kind = if h.abelian { "abelian" } else { "non-abelian" };
        r.fact("holonomy", format!("{kind}, dim {d}"), json!({"dim": d, "abelian": h.abelian}));
    }
    if ok {
        if let Some(m) = t.lie().lower_central_series().nilpotency_m() {
            r.fact("nilpotency m", m.to_string(), json!(m));
        }
    }
    r
}

/// Validates the data, builds `d`, and reports on the resulting triple.
pub fn extension_report(x: &ExtensionInput) -> (Report, Option<HyperKahlerTriple>) {
    let mut r = Report::new(format!("extension data: dim l = {}, dim a = {}", x.dim_l(), x.dim_a()));
    if let Err(e) = x.validate() {
        r.check("input", Verdict::fail(e.to_string()));
        return (r, None);
    }
    r.check("input", Verdict::Pass);
    pair_fact(&mut r, "predicted signature", x.signature_formula());
    match build_extension_unchecked(x) {
        Ok(t) => {
            r.absorb(triple_report(&t), "");
            (r, Some(t))
        }
        Err(e) => {
            r.check("build", Verdict::fail(e.to_string()));
            (r, None)
        }
    }
}

pub fn admissibility_report(x: &ExtensionInput) -> Report {
    let mut r = Report::new(format!("admissibility: dim l = {}, dim a = {}", x.dim_l(), x.dim_a()));
    match check_admissible(x) {
        Err(e) => r.check("admissibility", Verdict::fail(e.to_string())),
        Ok(a) => {
            r.fact("m", a.m.to_string(), json!(a.m));
            for c in &a.conditions {
                r.checks.push(CheckLine { name: c.name.clone(), verdict: c.verdict.clone(), witness: c.witness.clone() });
            }
            r.fact("admissible", yes_no(a.admissible).to_string(), json!(a.admissible));
        }
    }
    let ind = check_indecomposable_sufficient(x);
    let text = match &ind {
        Indecomposability::CertifiedIndecomposable => "certified".to_string(),
        Indecomposability::Unknown(why) => format!("unknown ({why})"),
    };
    r.fact("indecomposable", text, serde_json::to_value(&ind).expect("serializable"));
    r
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn span_text(s: &Subspace, labels: &[String]) -> (String, Value) {
    let gens: Vec<String> = s.basis().iter().map(|v: &Vector| format_combination(labels, v)).collect();
    (format!("span{{{}}} (dim {})", gens.join(", "), s.dim()), json!(gens))
}

/// `S ∈ (S⁴E)^{h_S}`, `dim h_S`, `ann(S)`, and tameness.
pub fn quartic_report(s: &SymPoly) -> Report {
    let sp = s.space();
    let mut r = Report::new(format!("quartic on a symplectic space of dimension {}", sp.dim()));
    r.fact("S", s.to_string(), json!(s.to_string()));
    let crux = match check_crux(s) {
        Ok(v) => v,
        Err(e) => {
            r.check("crux", Verdict::fail(e.to_string()));
            return r;
        }
    };
    let crux_ok = crux.is_pass();
    r.check("crux", crux);
    if let Ok(h) = span_hs(s) {
        r.fact("dim h_S", h.dim().to_string(), json!(h.dim()));
    }
    if crux_ok {
        if let Ok(ab) = check_hs_abelian(s) {
            r.fact("h_S abelian", yes_no(ab).to_string(), json!(ab));
        }
    }
    let Ok(t) = tameness(s) else { return r };
    let labels = sp.labels();
    let (text, js) = span_text(&t.annihilator, &labels);
    r.fact("annihilator", text, js);
    let tame = t.verdict == Tameness::TameCertified;
    r.fact("tame", yes_no(tame).to_string(), json!(tame));
    r.summary = Some(format!("crux: {}, tame: {}", if crux_ok { "satisfied" } else { "violated" }, yes_no(tame)));
    r
}

/// Everything applicable to a document: for extension data, the build and
/// admissibility; for a triple, the axioms and the canonical extraction.
pub fn full_report(doc: &crate::io::Document) -> Report {
    use crate::io::Document;
    match doc {
        Document::Extension(x) => {
            let (mut r, t) = extension_report(x);
            if t.is_some() {
                r.absorb(admissibility_report(x), "");
            }
            r
        }
        Document::Triple(t) => {
            let mut r = triple_report(t);
            if r.passed() {
                match extract_canonical(t) {
                    Ok(x) => {
                        r.check("extraction", Verdict::Pass);
                        r.fact("extracted dim l", x.dim_l().to_string(), json!(x.dim_l()));
                        r.fact("extracted dim a", x.dim_a().to_string(), json!(x.dim_a()));
                        r.absorb(admissibility_report(&x), "extracted");
                    }
                    Err(e) => r.check("extraction", Verdict::fail(e.to_string())),
                }
            }
            r
        }
        Document::Quartic(s) => quartic_report(s),
    }
}

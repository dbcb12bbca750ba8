//! JSON interchange documents: extension data, triples, and quartics.
//!
//! The document kind is decided by which keys are present (`quartic`,
//! `metric`, or `module`); each kind rejects unknown keys.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::accheck::{SymPoly, SymplecticSpace};
use crate::cochain::{AlternatingForm, OrthModule, QuadCocycle2};
use crate::error::{Error, Result};
use crate::exactalg::matrix::Matrix;
use crate::exactalg::scalar::parse_rational;
use crate::exactalg::{Field, Scalar, SpaceCtx, SparseVec, SymBilinearForm};
use crate::liealg::{HyperKahlerTriple, LieAlgebra, QuatGrading};
use crate::quadext::ExtensionInput;

/// `a + b√d` before the field is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num {
    a: BigRational,
    b: BigRational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadRepr {
    a: String,
    b: String,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum NumRepr {
    Rational(String),
    Quadratic(QuadRepr),
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = NumRepr::deserialize(d)
            .map_err(|_| serde::de::Error::custom("expected a scalar \"p/q\" or {\"a\": \"p/q\", \"b\": \"r/s\"}"))?;
        let conv = |s: &str| parse_rational(s).map_err(serde::de::Error::custom);
        Ok(match r {
            NumRepr::Rational(s) => Num { a: conv(&s)?, b: BigRational::zero() },
            NumRepr::Quadratic(q) => Num { a: conv(&q.a)?, b: conv(&q.b)? },
        })
    }
}

impl Serialize for Num {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = if self.b.is_zero() {
            NumRepr::Rational(Scalar::rational_string(&self.a))
        } else {
            NumRepr::Quadratic(QuadRepr {
                a: Scalar::rational_string(&self.a),
                b: Scalar::rational_string(&self.b),
            })
        };
        r.serialize(s)
    }
}

impl Num {
    fn of(x: &Scalar) -> Self {
        Num { a: x.a().clone(), b: x.b() }
    }

    fn to_scalar(&self, field: Field, at: &str) -> Result<Scalar> {
        if self.b.is_zero() {
            return Ok(Scalar::from_rational(self.a.clone()));
        }
        match field {
            Field::Quadratic(d) => Ok(Scalar::quadratic(self.a.clone(), self.b.clone(), d)),
            Field::Rational => Err(Error::Parse(format!("{at}: irrational scalar in a document over Q"))),
        }
    }
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Quadratic(d) => format!("Q(sqrt({d}))"),
    }
}

/// Accepts `Q`, `Q(sqrt(d))`, `Q(sqrt d)` and `Q(√d)`.
pub fn parse_field(s: &str) -> Result<Field> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "Q" {
        return Ok(Field::Rational);
    }
    let inner = t
        .strip_prefix("Q(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unknown scalar_field {s:?}")))?;
    let d = inner
        .strip_prefix("sqrt(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| inner.strip_prefix("sqrt"))
        .or_else(|| inner.strip_prefix('√'))
        .ok_or_else(|| Error::Parse(format!("unknown scalar_field {s:?}")))?;
    let d: u32 = d.parse().map_err(|_| Error::Parse(format!("unknown scalar_field {s:?}")))?;
    Field::quadratic(d)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    x: String,
    y: String,
    out: BTreeMap<String, Num>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieDoc {
    basis: Vec<String>,
    brackets: Vec<BracketDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GradingDoc {
    plus: Vec<usize>,
    minus: Vec<usize>,
    #[serde(rename = "I")]
    i: Vec<Vec<Num>>,
    #[serde(rename = "J")]
    j: Vec<Vec<Num>>,
    #[serde(rename = "K")]
    k: Vec<Vec<Num>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleDoc {
    basis: Vec<String>,
    form: Vec<Vec<Num>>,
    grading: GradingDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FormValue {
    Vector(Vec<Num>),
    Scalar(Num),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormEntry {
    indices: Vec<usize>,
    value: FormValue,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtensionDoc {
    scalar_field: String,
    lie_algebra: LieDoc,
    grading: GradingDoc,
    module: ModuleDoc,
    alpha: Vec<FormEntry>,
    gamma: Vec<FormEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleDoc {
    scalar_field: String,
    lie_algebra: LieDoc,
    grading: GradingDoc,
    metric: Vec<Vec<Num>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    monomial: Vec<String>,
    coeff: Num,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuarticDoc {
    scalar_field: String,
    n: usize,
    quartic: Vec<TermDoc>,
}

/// A parsed interchange document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Extension(ExtensionInput),
    Triple(HyperKahlerTriple),
    Quartic(SymPoly),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Extension(_) => "extension",
            Document::Triple(_) => "triple",
            Document::Quartic(_) => "quartic",
        }
    }
}

fn located(e: serde_json::Error) -> Error {
    let msg = e.to_string();
    let msg = msg.rsplit_once(" at line ").map_or(msg.as_str(), |(m, _)| m);
    Error::Parse(format!("line {}, column {}: {msg}", e.line(), e.column()))
}

fn typed<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(located)
}

pub fn parse_document(text: &str) -> Result<Document> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(located)?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("line 1, column 1: expected a JSON object".into()))?;
    if obj.contains_key("quartic") {
        Ok(Document::Quartic(quartic_from_doc(typed(text)?)?))
    } else if obj.contains_key("metric") {
        Ok(Document::Triple(triple_from_doc(typed(text)?)?))
    } else if obj.contains_key("module") || obj.contains_key("alpha") {
        Ok(Document::Extension(extension_from_doc(typed(text)?)?))
    } else {
        Err(Error::Parse(
            "cannot tell the document kind: expected a `quartic`, `metric`, or `module` key".into(),
        ))
    }
}

pub fn document_to_json(doc: &Document) -> String {
    match doc {
        Document::Extension(x) => extension_to_json(x),
        Document::Triple(t) => triple_to_json(t),
        Document::Quartic(s) => quartic_to_json(s),
    }
}

fn pretty<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

pub fn extension_to_json(x: &ExtensionInput) -> String {
    pretty(&extension_doc(x))
}

pub fn triple_to_json(t: &HyperKahlerTriple) -> String {
    pretty(&TripleDoc {
        scalar_field: field_name(t.lie().field()),
        lie_algebra: lie_doc(t.lie()),
        grading: grading_doc(t.grading()),
        metric: matrix_doc(t.form().matrix()),
    })
}

pub fn quartic_to_json(s: &SymPoly) -> String {
    let sp = s.space();
    let mut field = Field::Rational;
    let quartic = s
        .terms()
        .map(|(m, c)| {
            if let Some(d) = c.radicand() {
                field = Field::Quadratic(d);
            }
            TermDoc { monomial: m.iter().map(|&a| sp.label(a)).collect(), coeff: Num::of(c) }
        })
        .collect();
    pretty(&QuarticDoc { scalar_field: field_name(field), n: sp.n(), quartic })
}

fn matrix_doc(m: &Matrix) -> Vec<Vec<Num>> {
    (0..m.nrows()).map(|r| m.row(r).iter().map(Num::of).collect()).collect()
}

fn lie_doc(l: &LieAlgebra) -> LieDoc {
    let brackets = l
        .structure_constants()
        .map(|(x, y, v)| BracketDoc {
            x: l.label(x).to_string(),
            y: l.label(y).to_string(),
            out: v.iter().map(|(i, c)| (l.label(i).to_string(), Num::of(c))).collect(),
        })
        .collect();
    LieDoc { basis: l.labels().to_vec(), brackets }
}

fn grading_doc(g: &QuatGrading) -> GradingDoc {
    GradingDoc {
        plus: g.plus().to_vec(),
        minus: g.minus().to_vec(),
        i: matrix_doc(g.op(0)),
        j: matrix_doc(g.op(1)),
        k: matrix_doc(g.op(2)),
    }
}

fn form_doc(f: &AlternatingForm, scalar: bool) -> Vec<FormEntry> {
    f.iter()
        .map(|(idx, v)| FormEntry {
            indices: idx.to_vec(),
            value: if scalar { FormValue::Scalar(Num::of(&v[0])) } else { FormValue::Vector(v.iter().map(Num::of).collect()) },
        })
        .collect()
}

fn extension_doc(x: &ExtensionInput) -> ExtensionDoc {
    let m = &x.module;
    ExtensionDoc {
        scalar_field: field_name(x.field().unwrap_or(Field::Rational)),
        lie_algebra: lie_doc(&x.lie),
        grading: grading_doc(&x.grading),
        module: ModuleDoc {
            basis: m.labels().to_vec(),
            form: matrix_doc(m.form().matrix()),
            grading: grading_doc(m.grading()),
        },
        alpha: form_doc(&x.cocycle.alpha, false),
        gamma: form_doc(&x.cocycle.gamma, true),
    }
}

fn matrix_from(rows: &[Vec<Num>], nrows: usize, ncols: usize, field: Field, at: &str) -> Result<Matrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse(format!("{at}: expected a {nrows}×{ncols} matrix")));
    }
    let mut m = Matrix::zeros(nrows, ncols);
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            m[(r, c)] = x.to_scalar(field, at)?;
        }
    }
    Ok(m)
}

fn lie_from(doc: &LieDoc, field: Field) -> Result<LieAlgebra> {
    let ctx = SpaceCtx::new(doc.basis.clone(), field)?;
    let idx = |s: &str, at: &str| {
        ctx.index_of(s)
            .ok_or_else(|| Error::Parse(format!("{at}: unknown basis label {s:?}")))
    };
    let mut br = Vec::with_capacity(doc.brackets.len());
    for (n, b) in doc.brackets.iter().enumerate() {
        let at = format!("lie_algebra.brackets[{n}]");
        let mut pairs = Vec::with_capacity(b.out.len());
        for (lab, c) in &b.out {
            pairs.push((idx(lab, &at)?, c.to_scalar(field, &at)?));
        }
        br.push((idx(&b.x, &at)?, idx(&b.y, &at)?, SparseVec::from_pairs(pairs)));
    }
    LieAlgebra::new(ctx, br)
}

fn grading_from(doc: &GradingDoc, dim: usize, field: Field, at: &str) -> Result<QuatGrading> {
    let m = doc.minus.len();
    let op = |rows: &[Vec<Num>], name: &str| matrix_from(rows, m, m, field, &format!("{at}.{name}"));
    QuatGrading::new(dim, doc.plus.clone(), doc.minus.clone(), [op(&doc.i, "I")?, op(&doc.j, "J")?, op(&doc.k, "K")?])
}

fn form_from(entries: &[FormEntry], n: usize, degree: usize, vdim: Option<usize>, field: Field, at: &str) -> Result<AlternatingForm> {
    let mut f = AlternatingForm::zero(n, degree, vdim.unwrap_or(1));
    for (k, e) in entries.iter().enumerate() {
        let at = format!("{at}[{k}]");
        if e.indices.len() != degree {
            return Err(Error::Parse(format!("{at}: expected {degree} indices")));
        }
        if e.indices.windows(2).any(|w| w[0] >= w[1]) || e.indices.iter().any(|&i| i >= n) {
            return Err(Error::Parse(format!("{at}: indices must be strictly increasing and below {n}")));
        }
        let value = match (&e.value, vdim) {
            (FormValue::Scalar(x), None) => vec![x.to_scalar(field, &at)?],
            (FormValue::Vector(v), Some(r)) if v.len() == r => {
                v.iter().map(|x| x.to_scalar(field, &at)).collect::<Result<_>>()?
            }
            (FormValue::Vector(v), Some(r)) => {
                return Err(Error::Parse(format!("{at}: value has length {} but dim a = {r}", v.len())))
            }
            (FormValue::Scalar(_), Some(_)) => return Err(Error::Parse(format!("{at}: expected a vector value"))),
            (FormValue::Vector(_), None) => return Err(Error::Parse(format!("{at}: expected a scalar value"))),
        };
        f.add_at(&e.indices, &value);
    }
    Ok(f)
}

fn extension_from_doc(doc: ExtensionDoc) -> Result<ExtensionInput> {
    let field = parse_field(&doc.scalar_field)?;
    let lie = lie_from(&doc.lie_algebra, field)?;
    let n = lie.dim();
    let grading = grading_from(&doc.grading, n, field, "grading")?;
    let r = doc.module.basis.len();
    let form = SymBilinearForm::new(matrix_from(&doc.module.form, r, r, field, "module.form")?)?;
    let mgrading = grading_from(&doc.module.grading, r, field, "module.grading")?;
    let module = OrthModule::new(SpaceCtx::new(doc.module.basis, field)?, form, mgrading)?;
    let alpha = form_from(&doc.alpha, n, 2, Some(r), field, "alpha")?;
    let gamma = form_from(&doc.gamma, n, 3, None, field, "gamma")?;
    ExtensionInput::new(lie, grading, module, QuadCocycle2::new(alpha, gamma)?)
}

fn triple_from_doc(doc: TripleDoc) -> Result<HyperKahlerTriple> {
    let field = parse_field(&doc.scalar_field)?;
    let lie = lie_from(&doc.lie_algebra, field)?;
    let n = lie.dim();
    let grading = grading_from(&doc.grading, n, field, "grading")?;
    let form = SymBilinearForm::new(matrix_from(&doc.metric, n, n, field, "metric")?)?;
    HyperKahlerTriple::new(lie, form, grading)
}

fn quartic_from_doc(doc: QuarticDoc) -> Result<SymPoly> {
    let field = parse_field(&doc.scalar_field)?;
    let sp = SymplecticSpace::new(doc.n);
    let mut terms = Vec::with_capacity(doc.quartic.len());
    for (k, t) in doc.quartic.iter().enumerate() {
        let at = format!("quartic[{k}]");
        let m = t
            .monomial
            .iter()
            .map(|l| sp.index_of(l).ok_or_else(|| Error::Parse(format!("{at}: unknown variable {l:?}"))))
            .collect::<Result<Vec<_>>>()?;
        terms.push((m, t.coeff.to_scalar(field, &at)?));
    }
    SymPoly::from_terms(sp, 4, terms)
}

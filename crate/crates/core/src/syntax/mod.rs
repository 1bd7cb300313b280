//! ASCII surface syntax: parsing, elaboration, and text/LaTeX/JSON printing.

mod lexer;
mod parser;

use std::fmt;

use serde_json::{json, Value as Json};
use thiserror::Error;

use crate::algebra::{Monomial, NcPoly};
use crate::calculus::{move_coeff_left_to_right, wedge, Form, Wedge};
use crate::scalars::{latex_term, text_mono, text_term, GaussianRational, ParamMono, ScalarPoly};

pub use lexer::{lex, Tok, Token};
pub use parser::{parse, BinOp, Expr};

/// Version tag of every JSON document.
pub const SCHEMA: &str = "ncborel/1";

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("lexical error at byte {offset}: unexpected character '{found}'")]
    Lex { offset: usize, found: char },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("degree error at byte {offset}: {message}")]
    Degree { offset: usize, message: String },
}

impl ParseError {
    /// Machine-readable category.
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Lex { .. } => "lex",
            ParseError::Syntax { .. } => "syntax",
            ParseError::Degree { .. } => "degree",
        }
    }

    pub fn offset(&self) -> usize {
        match self {
            ParseError::Lex { offset, .. } | ParseError::Syntax { offset, .. } | ParseError::Degree { offset, .. } => {
                *offset
            }
        }
    }

    pub fn to_json(&self) -> Json {
        json!({"schema": SCHEMA, "error": self.kind(), "offset": self.offset(), "message": self.to_string()})
    }
}

/// The result of elaborating an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(NcPoly),
    Form(Form),
}

impl Value {
    pub fn degree(&self) -> usize {
        match self {
            Value::Poly(_) => 0,
            Value::Form(f) => f.degree(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Poly(p) => p.is_zero(),
            Value::Form(f) => f.is_zero(),
        }
    }

    /// Views the value as a form (functions become 0-forms).
    pub fn into_form(self) -> Form {
        match self {
            Value::Poly(p) => Form::from_poly(p),
            Value::Form(f) => f,
        }
    }

    /// Collapses 0-forms to functions.
    pub fn from_form(f: Form) -> Value {
        match f.as_poly() {
            Some(p) => Value::Poly(p),
            None => Value::Form(f),
        }
    }

    pub fn text(&self) -> String {
        match self {
            Value::Poly(p) => format_poly_text(p),
            Value::Form(f) => format_form_text(f),
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Value::Poly(p) => format_poly_latex(p),
            Value::Form(f) => format_form_latex(f),
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Poly(p) => poly_json(p),
            Value::Form(f) => form_json(f),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

fn degree_err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Degree { offset, message: message.into() }
}

fn identifier(name: &str) -> Value {
    let gen = |prefix: &str| {
        name.strip_prefix(prefix).and_then(|d| match d {
            "1" => Some(1),
            "2" => Some(2),
            "3" => Some(3),
            _ => None,
        })
    };
    if let Some(i) = gen("dx") {
        return Value::Form(Form::dx(i));
    }
    if let Some(i) = gen("x") {
        return Value::Poly(NcPoly::x(i));
    }
    if let Some(i) = gen("k") {
        return Value::Poly(NcPoly::constant(ScalarPoly::k(i as u8)));
    }
    let s = match name {
        "lam" => ScalarPoly::lambda(),
        "i" => ScalarPoly::i(),
        other => ScalarPoly::sym(other),
    };
    Value::Poly(NcPoly::constant(s))
}

/// Elaborates an expression tree into a function or a form.
pub fn elaborate(e: &Expr) -> Result<Value, ParseError> {
    match e {
        Expr::Ident { name, .. } => Ok(identifier(name)),
        Expr::Num(n) => Ok(Value::Poly(NcPoly::constant(ScalarPoly::constant(GaussianRational::from_rational(
            n.clone(),
        ))))),
        Expr::Neg(inner) => Ok(match elaborate(inner)? {
            Value::Poly(p) => Value::Poly(-p),
            Value::Form(f) => Value::Form(-f),
        }),
        Expr::Pow { base, exp, offset } => match elaborate(base)? {
            Value::Poly(p) => Ok(Value::Poly(p.pow(*exp))),
            Value::Form(f) if *exp == 1 => Ok(Value::Form(f)),
            Value::Form(_) => Err(degree_err(*offset, "only functions can be raised to a power")),
        },
        Expr::Bin { op, lhs, rhs, offset } => {
            let (l, r) = (elaborate(lhs)?, elaborate(rhs)?);
            binary(*op, l, r, *offset)
        }
    }
}

fn binary(op: BinOp, l: Value, r: Value, offset: usize) -> Result<Value, ParseError> {
    use Value::*;
    match op {
        BinOp::Add | BinOp::Sub => {
            let r = if op == BinOp::Sub {
                match r {
                    Poly(p) => Poly(-p),
                    Form(f) => Form(-f),
                }
            } else {
                r
            };
            match (l, r) {
                (Poly(a), Poly(b)) => Ok(Poly(&a + &b)),
                (Form(a), Form(b)) if a.degree() == b.degree() || a.is_zero() || b.is_zero() => {
                    Ok(Value::from_form(&a + &b))
                }
                (Poly(a), Form(b)) | (Form(b), Poly(a)) if a.is_zero() => Ok(Form(b)),
                (Poly(a), Form(b)) | (Form(b), Poly(a)) if b.is_zero() => Ok(Poly(a)),
                (a, b) => Err(degree_err(
                    offset,
                    format!("cannot add a {}-form and a {}-form", a.degree(), b.degree()),
                )),
            }
        }
        BinOp::Mul => match (l, r) {
            (Poly(a), Poly(b)) => Ok(Poly(a.normal_mul(&b))),
            (Poly(a), Form(b)) => Ok(Form(move_coeff_left_to_right(&a, &b))),
            (Form(a), Poly(b)) => Ok(Form(a.right_mul(&b))),
            (Form(_), Form(_)) => Err(degree_err(offset, "use '/\\' to multiply forms")),
        },
        BinOp::Wedge => match (l, r) {
            (Form(a), Form(b)) => Ok(Form(wedge(&a, &b))),
            _ => Err(degree_err(offset, "wedge needs forms of degree at least 1 on both sides")),
        },
    }
}

/// Parses and elaborates in one step.
pub fn parse_value(src: &str) -> Result<Value, ParseError> {
    elaborate(&parse(src)?)
}

// Printing. Polynomials are expanded into scalar-monomial × x-monomial terms.

struct Piece<'a> {
    neg: bool,
    coeff: GaussianRational,
    params: &'a ParamMono,
    mono: &'a Monomial,
}

fn pieces(p: &NcPoly) -> Vec<Piece<'_>> {
    let mut out = Vec::new();
    for (m, s) in p.print_order() {
        for (pm, c) in s.print_order() {
            let neg = c.is_negative_like();
            out.push(Piece { neg, coeff: if neg { -c } else { c.clone() }, params: pm, mono: m });
        }
    }
    out
}

fn join_signed(items: Vec<(bool, String)>) -> String {
    if items.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (neg, body)) in items.into_iter().enumerate() {
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn piece_text(pc: &Piece, basis: Option<Wedge>) -> String {
    let mut factors = Vec::new();
    let pm = text_mono(pc.params);
    if !pm.is_empty() {
        factors.push(pm);
    }
    if let Some(w) = basis {
        factors.push(w.text());
    }
    let mono = pc.mono.text();
    if !mono.is_empty() {
        factors.push(mono);
    }
    text_term(&pc.coeff, &factors.join("*"))
}

/// Canonical text, e.g. `x1*x2 - 2*lam*x2`.
pub fn format_poly_text(p: &NcPoly) -> String {
    join_signed(pieces(p).iter().map(|pc| (pc.neg, piece_text(pc, None))).collect())
}

/// Canonical text, e.g. `dx1*(2*x1 - lam) + lam*dx2`.
pub fn format_form_text(f: &Form) -> String {
    if f.degree() == 0 {
        return format_poly_text(&f.coeff(&Wedge::EMPTY));
    }
    let mut items = Vec::new();
    for (w, c) in f.comps() {
        let ps = pieces(c);
        if ps.len() == 1 {
            items.push((ps[0].neg, piece_text(&ps[0], Some(*w))));
        } else {
            items.push((false, format!("{}*({})", w.text(), format_poly_text(c))));
        }
    }
    join_signed(items)
}

fn piece_latex(pc: &Piece) -> String {
    let mono = pc.mono.latex();
    let scalar = latex_term(&pc.coeff, pc.params);
    match (scalar.as_str(), mono.is_empty()) {
        (s, true) => s.to_string(),
        ("1", false) => mono,
        (s, false) => format!("{} {}", s, mono),
    }
}

pub fn format_poly_latex(p: &NcPoly) -> String {
    join_signed(pieces(p).iter().map(|pc| (pc.neg, piece_latex(pc))).collect())
}

pub fn format_form_latex(f: &Form) -> String {
    if f.degree() == 0 {
        return format_poly_latex(&f.coeff(&Wedge::EMPTY));
    }
    let mut items = Vec::new();
    for (w, c) in f.comps() {
        let ps = pieces(c);
        if ps.len() == 1 && ps[0].mono.degree() == 0 && ps[0].coeff.is_one() && ps[0].params.is_one() {
            items.push((ps[0].neg, w.latex()));
        } else {
            items.push((false, format!("{} \\, \\left({}\\right)", w.latex(), format_poly_latex(c))));
        }
    }
    join_signed(items)
}

pub fn scalar_json(s: &ScalarPoly) -> Json {
    Json::String(s.to_string())
}

pub fn poly_json(p: &NcPoly) -> Json {
    let terms: Vec<Json> = p
        .print_order()
        .into_iter()
        .map(|(m, c)| json!({"monomial": [m.a, m.b, m.c], "coeff": c.to_string()}))
        .collect();
    json!({"kind": "poly", "text": format_poly_text(p), "terms": terms})
}

pub fn form_json(f: &Form) -> Json {
    let comps: Vec<Json> = f
        .comps()
        .map(|(w, c)| json!({"basis": w.indices(), "coeff": format_poly_text(c)}))
        .collect();
    json!({"kind": "form", "degree": f.degree(), "text": format_form_text(f), "components": comps})
}

/// Wraps a payload with the schema tag.
pub fn document(payload: Json) -> Json {
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), Json::String(SCHEMA.into()));
    if let Json::Object(map) = payload {
        doc.extend(map);
    } else {
        doc.insert("value".into(), payload);
    }
    Json::Object(doc)
}

/// Parses a scalar expression (no `x` or `dx` atoms).
pub fn parse_scalar(src: &str) -> Result<ScalarPoly, ParseError> {
    match parse_value(src)? {
        Value::Poly(p) => p.as_scalar().ok_or_else(|| degree_err(0, "expected a scalar expression")),
        Value::Form(_) => Err(degree_err(0, "expected a scalar expression")),
    }
}


#[cfg(test)]
mod tests;

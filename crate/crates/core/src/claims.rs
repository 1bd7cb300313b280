//! Adjudication of the published identities about `R³_λ`.
//!
//! Every entry records where the identity is stated, its verbatim text, the
//! calculus variant (and plane-wave ordering) used, a verdict, and both the
//! computed and the claimed value. Entries are produced in a fixed order so
//! the serialized report is byte-identical across runs.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value as Json;

use crate::algebra::{Centrality, Monomial, NcPoly};
use crate::calculus::{
    d, d0, d_inner, d_leibniz, d_shuffle, generator_commutator, invariant_form, move_coeff_left_to_right,
    partials, vector_to_form, Form, RhoRep, Variant, Wedge,
};
use crate::hodge::{field_strength, star, star_basis, wave, wave0};
use crate::homology::{cohomology_dims, find_primitive};
use crate::scalars::{classical_limit, GaussianRational, Param, ScalarPoly};
use crate::symmetry::{adjoint_action, coregular_action, cross_relation_check, mat_mul, pairing_j_t, pairing_t_poly, CrossVerdict, GenMatrix, TIndex};
use crate::syntax::{document, format_form_text, format_poly_text};
use crate::waves::{wave_derivative_check, wave_eigenvalue_check, Convention, WaveCheck, WaveSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "AMBIGUOUS")]
    Ambiguous,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Ambiguous => "AMBIGUOUS",
        }
    }

    /// PASS or FAIL when all agree, AMBIGUOUS otherwise.
    pub fn combine(items: &[Status]) -> Status {
        if items.iter().all(|s| *s == Status::Pass) {
            Status::Pass
        } else if items.iter().all(|s| *s == Status::Fail) {
            Status::Fail
        } else {
            Status::Ambiguous
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimEntry {
    pub id: String,
    pub location: String,
    pub quote: String,
    pub variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
    pub status: Status,
    pub computed: String,
    pub claimed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub entries: Vec<ClaimEntry>,
}

impl ClaimReport {
    pub fn get(&self, id: &str) -> Option<&ClaimEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn to_json(&self) -> Json {
        document(serde_json::json!({
            "kind": "claims-report",
            "summary": {
                "total": self.entries.len(),
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "ambiguous": self.count(Status::Ambiguous),
            },
            "entries": self.entries,
        }))
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{:<9} {}  [{}", e.status.name(), e.id, e.variant)?;
            if let Some(c) = &e.convention {
                write!(f, ", {}", c)?;
            }
            writeln!(f, "]")?;
            writeln!(f, "    where:    {}", e.location)?;
            writeln!(f, "    quote:    {}", e.quote)?;
            writeln!(f, "    claimed:  {}", e.claimed)?;
            writeln!(f, "    computed: {}", e.computed)?;
        }
        write!(
            f,
            "{} claims: {} PASS, {} FAIL, {} AMBIGUOUS",
            self.entries.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Ambiguous)
        )
    }
}

const ANY: &str = "any";

struct Claim<'a> {
    id: String,
    location: &'a str,
    quote: &'a str,
    variant: &'a str,
    convention: Option<&'a str>,
}

impl<'a> Claim<'a> {
    fn new(id: impl Into<String>, location: &'a str, quote: &'a str) -> Self {
        Claim { id: id.into(), location, quote, variant: ANY, convention: None }
    }

    fn variant(mut self, v: Variant) -> Self {
        self.variant = v.name();
        self
    }

    fn convention(mut self, c: Convention) -> Self {
        self.convention = Some(c.name());
        self
    }

    fn verdict(self, status: Status, computed: impl Into<String>, claimed: impl Into<String>) -> ClaimEntry {
        ClaimEntry {
            id: self.id,
            location: self.location.to_string(),
            quote: self.quote.to_string(),
            variant: self.variant.to_string(),
            convention: self.convention.map(str::to_string),
            status,
            computed: computed.into(),
            claimed: claimed.into(),
        }
    }
}

fn ft(f: &Form) -> String {
    format_form_text(f)
}

fn pt(p: &NcPoly) -> String {
    format_poly_text(p)
}

fn x(i: usize) -> NcPoly {
    NcPoly::x(i)
}

fn mono(a: u32, b: u32, c: u32) -> NcPoly {
    NcPoly::monomial(Monomial::new(a, b, c))
}

fn lam() -> ScalarPoly {
    ScalarPoly::lambda()
}

fn dxf(i: usize, f: NcPoly) -> Form {
    Form::term(Wedge::single(i), f)
}

fn wedge_of(idx: &[usize]) -> Wedge {
    Wedge::from_indices(idx).unwrap()
}

fn ratio(n: i64, d: i64) -> ScalarPoly {
    ScalarPoly::ratio(n, d)
}

fn cst(s: ScalarPoly) -> NcPoly {
    NcPoly::constant(s)
}

/// Collects the first mismatch of a list of (label, computed, claimed) checks.
fn first_mismatch<T: PartialEq>(items: Vec<(String, T, T)>, show: impl Fn(&T) -> String) -> (bool, String, String) {
    let n = items.len();
    for (label, computed, claimed) in &items {
        if computed != claimed {
            return (false, format!("{}: {}", label, show(computed)), format!("{}: {}", label, show(claimed)));
        }
    }
    (true, format!("all {} cases agree", n), format!("all {} cases", n))
}

// ---------------------------------------------------------------------------
// first-order calculus

const LISTING_E: [(usize, usize, &str, [i64; 3]); 9] = [
    (1, 1, "x_1 e_1=e_1 x_1+\\lambda e_1", [1, 0, 0]),
    (1, 2, "x_1 e_2=e_2 x_1 +\\lambda e_2", [0, 1, 0]),
    (1, 3, "x_1 e_3=e_3 x_1-\\lambda e_3", [0, 0, -1]),
    (2, 1, "x_2 e_1=e_1 x_2", [0, 0, 0]),
    (2, 2, "x_2 e_2=e_2 x_2", [0, 0, 0]),
    (2, 3, "x_2 e_3 =e_3 x_2 +\\lambda e_1", [1, 0, 0]),
    (3, 1, "x_3 e_1 =e_1 x_3", [0, 0, 0]),
    (3, 2, "x_3 e_2 =e_2 x_3", [0, 0, 0]),
    (3, 3, "x_3 e_3=e_3x_3+\\lambda e_2", [0, 1, 0]),
];

/// `(a, b, quote, claimed [x_a, dx_b] as (coefficient, lambda power, dx index))`.
const LISTING_DX: [(usize, usize, &str, Option<(i64, u32, usize)>); 9] = [
    (1, 2, "x_1 \\mathrm{d}x_2=\\mathrm{d}x_2 x_1 +\\mathrm{d}x_2", Some((1, 0, 2))),
    (1, 3, "x_1 \\mathrm{d}x_3=\\mathrm{d}x_3 x_1 +\\lambda \\mathrm{d}x_3", Some((1, 1, 3))),
    (1, 1, "x_1 \\mathrm{d}x_1=\\mathrm{d}x_1 x_1-\\lambda \\mathrm{d}x_1", Some((-1, 1, 1))),
    (2, 2, "x_2 \\mathrm{d}x_2=\\mathrm{d}x_2 x_2", None),
    (2, 3, "x_2 \\mathrm{d}x_3=\\mathrm{d}x_3 x_2", None),
    (2, 1, "x_2 \\mathrm{d}x_1 =\\mathrm{d}x_1 x_2 -\\lambda \\mathrm{d}x_2", Some((-1, 1, 2))),
    (3, 2, "x_3 \\mathrm{d}x_2 =\\mathrm{d}x_2 x_3", None),
    (3, 3, "x_3 \\mathrm{d}x_3 =\\mathrm{d}x_3 x_3", None),
    (3, 1, "x_3 \\mathrm{d}x_1=\\mathrm{d}x_1 x_3-\\lambda \\mathrm{d}x_3", Some((-1, 1, 3))),
];

fn vector_text(v: [i64; 3]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| format!("{}*lam*e{}", c, i + 1))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn bimodule_claims() -> Vec<ClaimEntry> {
    let rho = RhoRep::default();
    let mut out = Vec::new();
    for (n, (a, b, quote, claimed)) in LISTING_E.iter().enumerate() {
        let mut e = [0; 3];
        e[b - 1] = 1;
        let computed = rho.apply_unit(*a, e);
        out.push(Claim::new(format!("C-BIM-E-{}", n + 1), "bimodule relations on the vector basis e_1, e_2, e_3", quote)
            .verdict(
                Status::from_bool(computed == *claimed),
                format!("[x{}, e{}] = {}", a, b, vector_text(computed)),
                format!("[x{}, e{}] = {}", a, b, vector_text(*claimed)),
            ));
    }
    for (n, (a, b, quote, claimed)) in LISTING_DX.iter().enumerate() {
        let computed = generator_commutator(*a, *b);
        let claimed_form = match claimed {
            None => Form::zero(1),
            Some((c, p, i)) => dxf(*i, cst(ScalarPoly::lambda_pow(*p).scale(&GaussianRational::from_int(*c)))),
        };
        out.push(
            Claim::new(format!("C-BIM-{}", n + 1), "bimodule relations between generators and basic 1-forms", quote)
                .variant(Variant::Consistent)
                .verdict(
                    Status::from_bool(computed == claimed_form),
                    format!("[x{}, dx{}] = {}", a, b, ft(&computed)),
                    format!("[x{}, dx{}] = {}", a, b, ft(&claimed_form)),
                ),
        );
    }
    let mut items = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            let mut compact = Form::zero(1);
            if a == 1 && b != 1 {
                compact.add_assign_ref(&dxf(b, cst(lam())));
            }
            if b == 1 {
                compact.add_assign_ref(&dxf(a, cst(-lam())));
            }
            items.push((format!("[x{}, dx{}]", a, b), generator_commutator(a, b), compact));
        }
    }
    let (ok, computed, claimed) = first_mismatch(items, ft);
    out.push(
        Claim::new(
            "C-COMPACT-BIM",
            "compact form of the bimodule relations",
            "[x_a, \\mathrm{d}x_b]=\\delta_{a,1}(1-\\delta_{b,1})\\lambda \\mathrm{d}x_b-\\delta_{b,1} \\lambda \\mathrm{d}x_a",
        )
        .variant(Variant::Consistent)
        .verdict(Status::from_bool(ok), format!("derived from rho with ray e3; {}", computed), claimed),
    );
    out
}

fn derivative_claims() -> Vec<ClaimEntry> {
    let mut out = Vec::new();
    let rho = RhoRep::default();
    let expected = [(1, "-e3"), (2, "e1"), (3, "e2")];
    let mut ok = true;
    let mut computed = Vec::new();
    for (a, _) in expected {
        let v = rho.word_on_ray(&[a]);
        let form: Vec<String> = vector_to_form(v).iter().map(|(c, i)| format!("{}*dx{}", c, i)).collect();
        ok &= d_shuffle(&x(a)) == Form::dx(a);
        computed.push(format!("rho(x{})e3/lam = {} -> {}", a, vector_text(v).replace("*lam", ""), form.join(" + ")));
    }
    out.push(
        Claim::new(
            "C-DX-GEN",
            "derivatives of the generators from the ray e_3",
            "\\mathrm{d}x_1=\\lambda^{-1} \\rho(x_1).e_3=-e_3, \\mathrm{d}x_2=\\lambda^{-1} \\rho(x_2).e_3=e_1, \\mathrm{d}x_3=\\lambda^{-1} \\rho(x_3).e_3=e_2",
        )
        .verdict(Status::from_bool(ok), computed.join("; "), "dx1 = -e3, dx2 = e1, dx3 = e2"),
    );

    let items: Vec<_> = (1..=3)
        .map(|a| (format!("xi = x{}", a), invariant_form(&x(a), Variant::Consistent), d0(&x(a), Variant::Consistent)))
        .collect();
    let (ok, c, cl) = first_mismatch(items, ft);
    out.push(
        Claim::new("C-DXI-OMEGA", "invariant forms of Lie algebra elements", "\\mathrm{d}\\xi=\\omega(\\xi)")
            .variant(Variant::Consistent)
            .verdict(Status::from_bool(ok), c, cl),
    );

    let mut ok = true;
    for m in Monomial::up_to_degree(6) {
        let f = Form::from_poly(NcPoly::monomial(m));
        ok &= d_inner(&f) == d_leibniz(&f) && d_inner(&f) == d_shuffle(&NcPoly::monomial(m));
    }
    out.push(
        Claim::new(
            "C-INNER",
            "inner calculi: d as graded commutator with an invariant 1-form",
            "\\mathrm{d}\\omega =\\omega \\wedge \\theta -(-1)^{\\mathrm{deg}\\omega} \\theta \\wedge \\omega",
        )
        .variant(Variant::Consistent)
        .verdict(
            Status::from_bool(ok),
            "theta = -dx1/lam reproduces the Leibniz and shuffle derivatives on all 84 monomials of degree <= 6",
            "the calculus is inner for some invariant theta",
        ),
    );

    let cl = classical_limit();
    let mut items = Vec::new();
    for m in Monomial::up_to_degree(4) {
        let f = NcPoly::monomial(m);
        let df = d0(&f, Variant::Consistent).substitute(&cl);
        let mut grad = Form::zero(1);
        for a in 1..=3 {
            grad.add_assign_ref(&dxf(a, classical_partial(&f, a)));
        }
        items.push((format!("f = {}", pt(&f)), df, grad));
    }
    let (ok, c, clm) = first_mismatch(items, ft);
    out.push(
        Claim::new(
            "C-CLASSICAL",
            "classical limit of the 3-dimensional calculus",
            "In the classical limit, this calculus turns out to be the commutative calculus on usual three dimensional Euclidean space.",
        )
        .variant(Variant::Consistent)
        .verdict(Status::from_bool(ok), c, clm),
    );

    let mut first_bad = None;
    let mut agree = 0;
    let monos = Monomial::up_to_degree(4);
    for m in &monos {
        let f = NcPoly::monomial(*m);
        let (arr, con) = (d0(&f, Variant::Arrangement), d0(&f, Variant::Consistent));
        if arr == con {
            agree += 1;
        } else if first_bad.is_none() {
            first_bad = Some((f, con, arr));
        }
    }
    let (c, cl) = match &first_bad {
        Some((f, con, arr)) => (
            format!("Leibniz-consistent d({}) = {}; agrees on {}/{} monomials of degree <= 4 (exactly those with a <= 1)", pt(f), ft(con), agree, monos.len()),
            format!("d({}) = {}", pt(f), ft(arr)),
        ),
        None => ("formula agrees everywhere".into(), "formula".into()),
    };
    out.push(
        Claim::new(
            "C-MONO",
            "derivative of a general monomial with arrangement numbers",
            "\\mathrm{d}(x_1^a x_2^b x_3^c)=-(1-\\delta_{a,0})\\mathrm{d}x_1 \\sum_{k=1}^a A^k_a (-1)^k \\lambda^{k-1} x_1^{a-k} x_2^b x_3^c + \\mathrm{d}x_2 \\sum_{k=0}^a A^k_a b \\lambda^k x_1^{a-k} x_2^{b-1} x_3^c + \\mathrm{d}x_3 \\sum_{k=0}^a A^k_a c \\lambda^k x_1^{a-k} x_2^{b} x_3^{c-1}",
        )
        .variant(Variant::Consistent)
        .verdict(Status::from_bool(first_bad.is_none()), c, cl),
    );

    let claimed_dc = dxf(1, (&x(1) - &cst(lam())).scale_int(2));
    for v in Variant::ALL {
        let computed = d0(&mono(2, 0, 0), v);
        out.push(
            Claim::new(format!("C-DC/{}", v.name()), "derivative of the Casimir C = x_1^2", "\\mathrm{d}C=2 \\mathrm{d}x_1 (x_1-\\lambda)")
                .variant(v)
                .verdict(Status::from_bool(computed == claimed_dc), ft(&computed), ft(&claimed_dc)),
        );
    }

    let witness = match mono(2, 0, 0).is_central() {
        Centrality::Central => "x1^2 is central".to_string(),
        Centrality::NotCentral { generator, witness } => {
            format!("[x1^2, x{}] = {}", generator, pt(&witness))
        }
    };
    out.push(
        Claim::new("C-CAS", "the Casimir operator of the algebra", "the Casimir operator: C=x_1^2")
            .verdict(Status::from_bool(mono(2, 0, 0).is_central().is_central()), witness, "x1^2 commutes with x1, x2, x3"),
    );

    out.extend(partials_claims());
    out
}

/// Commutative derivative of a normal-ordered polynomial, read back as normal-ordered.
fn classical_partial(f: &NcPoly, a: usize) -> NcPoly {
    let mut out = NcPoly::zero();
    for (m, s) in f.terms() {
        let e = m.exponent(a);
        if e == 0 {
            continue;
        }
        let lower = match a {
            1 => Monomial::new(m.a - 1, m.b, m.c),
            2 => Monomial::new(m.a, m.b - 1, m.c),
            _ => Monomial::new(m.a, m.b, m.c - 1),
        };
        out.add_term(lower, &s.scale(&GaussianRational::from_int(e as i64)));
    }
    out
}

fn truncate_lambda(f: &NcPoly, max: u32) -> NcPoly {
    f.map_coeffs(|s| {
        let mut out = ScalarPoly::zero();
        for (pm, c) in s.terms() {
            if pm.exponent(&Param::Lambda) <= max {
                out.add_term(pm.clone(), c);
            }
        }
        out
    })
}

fn partials_claims() -> Vec<ClaimEntry> {
    // (id, quote, partial index, (first classical derivative, pair of the λ term))
    let forms: [(&str, &str, usize, usize, (usize, usize)); 4] = [
        ("C-PARTIALS-1", "\\partial_1 f(x)=\\overline{\\partial}_1 f(x)-\\lambda \\overline{\\partial}_1^{2} f(x)", 1, 1, (1, 1)),
        ("C-PARTIALS-2", "\\partial_2 f(x)=\\overline{\\partial}_2 f(x)-\\lambda \\overline{\\partial}_1 \\overline{\\partial}_2 f(x)", 2, 2, (1, 2)),
        ("C-PARTIALS-3-literal", "\\partial_3 f(x)=\\overline{\\partial}_2 f(x)-\\lambda \\overline{\\partial}_1 \\overline{\\partial}_3 f(x)", 3, 2, (1, 3)),
        ("C-PARTIALS-3-typo", "\\partial_3 f(x)=\\overline{\\partial}_3 f(x)-\\lambda \\overline{\\partial}_1 \\overline{\\partial}_3 f(x) (reading the first derivative as index 3)", 3, 3, (1, 3)),
    ];
    let mut out = Vec::new();
    for (id, quote, which, first, (p, q)) in forms {
        for v in Variant::ALL {
            let mut items = Vec::new();
            for m in Monomial::up_to_degree(3) {
                let f = NcPoly::monomial(m);
                let computed = truncate_lambda(&partials(&f, v)[which - 1], 1);
                let second = classical_partial(&classical_partial(&f, q), p);
                let claimed = &classical_partial(&f, first) - &second.scale(&lam());
                items.push((format!("f = {}", pt(&f)), computed, claimed));
            }
            let (ok, c, cl) = first_mismatch(items, pt);
            out.push(
                Claim::new(format!("{}/{}", id, v.name()), "noncommutative partial derivatives to first order in lambda", quote)
                    .variant(v)
                    .verdict(Status::from_bool(ok), format!("{} (terms up to lam^1, monomials of degree <= 3)", c), cl),
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// quantum double

fn symmetry_claims() -> Vec<ClaimEntry> {
    let mut out = Vec::new();
    let g = GenMatrix::default();
    let comm = |a: usize, b: usize| {
        let (p, q) = (mat_mul(g.get(a), g.get(b)), mat_mul(g.get(b), g.get(a)));
        [0, 1].map(|i| [0, 1].map(|j| &p[i][j] - &q[i][j]))
    };
    let scaled = |a: usize, s: i64| g.get(a).clone().map(|r| r.map(|v| &v * &GaussianRational::from_int(s)));
    let zero = scaled(1, 0);
    let ok = comm(1, 2) == scaled(2, 2) && comm(1, 3) == scaled(3, 2) && comm(2, 3) == zero;
    out.push(
        Claim::new(
            "C-GEN-REL",
            "matrix generators of the Borel algebra",
            "[ J_1,J_2]=2 J_2 , [ J_1,J_3]=2 J_3, [ J_2,J_3]=0",
        )
        .verdict(Status::from_bool(ok), "matrix commutators of J1, J2, J3 computed exactly", "relations hold"),
    );

    let mut ok = true;
    for a in 1..=3 {
        for idx in TIndex::all() {
            let lhs = pairing_t_poly(idx, &x(a));
            ok &= lhs == lam().scale(&pairing_j_t(a, idx));
        }
    }
    out.push(
        Claim::new("C-PAIRING", "pairing of generators with matrix coordinates", "<J_a, t^i_j>=J^{i}_{a j}")
            .verdict(Status::from_bool(ok), "<t^i_j, x_a> = lam * (J_a)^i_j for all a, i, j", "entries of J_a"),
    );

    let mut items = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            let claimed = if a == 1 { x(b).scale_int(2) } else { NcPoly::zero() };
            items.push((format!("J{} |> x{}", a, b), adjoint_action(a, &x(b)), claimed));
        }
    }
    let (ok, c, cl) = first_mismatch(items, pt);
    out.push(
        Claim::new("C-ADJ", "example of the adjoint action of J_a", "J_a\\rhd x_b=2\\delta_{a,1} x_b")
            .verdict(Status::from_bool(ok), format!("lam^-1 [x_a, x_b]; {}", c), cl),
    );

    let mut items = Vec::new();
    for idx in TIndex::all() {
        for a in 1..=3 {
            let mut claimed = cst(lam().scale(&pairing_j_t(a, idx)));
            if idx.i() == idx.j() {
                claimed.add_assign_ref(&x(a));
            }
            items.push((format!("{} |> x{}", idx.name(), a), coregular_action(idx, &x(a)), claimed));
        }
    }
    let (ok, c, cl) = first_mismatch(items, pt);
    out.push(
        Claim::new(
            "C-COREG",
            "example of the coregular action (free index k read as j)",
            "t^i_j\\rhd x_a =\\lambda J^{i}_{a k} 1+ \\delta^i_j x_a",
        )
        .verdict(Status::from_bool(ok), c, cl),
    );

    let mut tests = vec![NcPoly::one()];
    for deg in 1..=3 {
        tests.extend(Monomial::of_degree(deg).into_iter().map(NcPoly::monomial));
    }
    let mut verdict = format!("holds as operators on all {} monomials of degree <= 3 for every a, i, j", tests.len());
    let mut ok = true;
    'outer: for a in 1..=3 {
        for idx in TIndex::all() {
            if let CrossVerdict::Fail { input, lhs, rhs } = cross_relation_check(a, idx, &tests) {
                ok = false;
                verdict = format!("J{}, {} on {}: lhs {} rhs {}", a, idx.name(), pt(&input), pt(&lhs), pt(&rhs));
                break 'outer;
            }
        }
    }
    out.push(
        Claim::new(
            "C-CROSS",
            "cross relations of the quantum double (free index l read as j)",
            "[J_a, t^i_j]=t^i_k J^{k}_{a l}-J^{i}_{a k}t^k_j",
        )
        .verdict(Status::from_bool(ok), verdict, "J_a |> (t |> f) - t |> (J_a |> f) equals the right-hand side as operators"),
    );

    let monos: Vec<NcPoly> = Monomial::up_to_degree(2).into_iter().map(NcPoly::monomial).collect();
    let mut ok = true;
    for f in &monos {
        for h in &monos {
            let fh = f.normal_mul(h);
            for a in 1..=3 {
                let rhs = &adjoint_action(a, f).normal_mul(h) + &f.normal_mul(&adjoint_action(a, h));
                ok &= adjoint_action(a, &fh) == rhs;
            }
            for idx in TIndex::all() {
                let mut rhs = NcPoly::zero();
                for k in 1..=2 {
                    let l = TIndex::new(idx.i(), k).unwrap();
                    let r = TIndex::new(k, idx.j()).unwrap();
                    rhs.add_assign_ref(&coregular_action(l, f).normal_mul(&coregular_action(r, h)));
                }
                ok &= coregular_action(idx, &fh) == rhs;
            }
        }
    }
    out.push(
        Claim::new(
            "C-COVARIANT",
            "covariance of the algebra under the quantum double",
            "With this action, R^3_\\lambda turns into a left D(U(sb(2,C)))-covariant algebra.",
        )
        .verdict(
            Status::from_bool(ok),
            format!("J_a acts by derivations and t^i_j by matrix-multiplicative maps on all {} products of monomials of degree <= 2", monos.len() * monos.len()),
            "the product is an intertwiner",
        ),
    );
    out
}

// ---------------------------------------------------------------------------
// Hodge star and cohomology

const STAR_LISTING: [(&[usize], &str, i64, &[usize]); 8] = [
    (&[], "*1=\\mathrm{d}x_1 \\wedge \\mathrm{d}x_2 \\wedge \\mathrm{d}x_3", 1, &[1, 2, 3]),
    (&[1], "*\\mathrm{d}x_1=\\mathrm{d}x_2 \\wedge \\mathrm{d}x_3", 1, &[2, 3]),
    (&[2], "*\\mathrm{d}x_2=\\mathrm{d}x_3 \\wedge \\mathrm{d}x_1", -1, &[1, 3]),
    (&[3], "*\\mathrm{d}x_3=\\mathrm{d}x_1 \\wedge \\mathrm{d}x_2", 1, &[1, 2]),
    (&[1, 2], "*(\\mathrm{d}x_1 \\wedge \\mathrm{d}x_2)=\\mathrm{d}x_3", 1, &[3]),
    (&[1, 3], "*(\\mathrm{d}x_1 \\wedge \\mathrm{d}x_3)=-\\mathrm{d}x_2", -1, &[2]),
    (&[2, 3], "*(\\mathrm{d}x_2 \\wedge \\mathrm{d}x_3)=\\mathrm{d}x_1", 1, &[1]),
    (&[1, 2, 3], "*(\\mathrm{d}x_1 \\wedge \\mathrm{d}x_2 \\wedge \\mathrm{d}x_3)=1", 1, &[]),
];

fn hodge_claims() -> Vec<ClaimEntry> {
    let mut out = Vec::new();
    let items: Vec<_> = STAR_LISTING
        .iter()
        .map(|(src, _, s, dst)| {
            let w = wedge_of(src);
            (format!("*{}", if src.is_empty() { "1".to_string() } else { w.text() }), star_basis(w), (*s, wedge_of(dst)))
        })
        .collect();
    let (ok, c, cl) = first_mismatch(items, |(s, w)| Form::term(*w, NcPoly::one().scale_int(*s)).to_string());
    let quotes: Vec<&str> = STAR_LISTING.iter().map(|e| e.1).collect();
    let joined = quotes.join("; ");
    out.push(Claim::new("C-HODGE-TABLE", "Hodge star table for the identity metric", &joined).verdict(Status::from_bool(ok), c, cl));

    let mut ok = true;
    for w in Wedge::all() {
        let f = Form::term(w, mono(1, 1, 0));
        ok &= star(&star(&f)) == f;
    }
    out.push(
        Claim::new("C-HODGE-INV", "involutivity of the Hodge star", "**(\\omega)=\\omega")
            .verdict(Status::from_bool(ok), "** = id on all 8 basis forms with right coefficients", "** = id"),
    );

    let top = Form::basis(Wedge::TOP);
    let four = crate::calculus::wedge(&top, &Form::dx(1));
    out.push(
        Claim::new(
            "C-DIM",
            "dimension of the calculus used for the Hodge star",
            "In the case of the algebra R^3_\\lambda, we have a four dimensional calculus with \\omega_1=\\mathrm{d}x_1, \\omega_2=\\mathrm{d}x_2, \\omega_3=\\mathrm{d}x_3",
        )
        .verdict(
            Status::from_bool(false),
            format!("three basic 1-forms; top degree 3; dx1/\\dx2/\\dx3/\\dx1 = {}", if four.is_zero() { "0" } else { "nonzero" }),
            "four dimensional calculus",
        ),
    );

    for v in Variant::ALL {
        let mut items = Vec::new();
        for m in Monomial::up_to_degree(4) {
            let f = NcPoly::monomial(m);
            let mut lap = NcPoly::zero();
            for (a, p) in partials(&f, v).iter().enumerate() {
                lap.add_assign_ref(&partials(p, v)[a]);
            }
            items.push((format!("f = {}", pt(&f)), wave0(&f, v), lap));
        }
        let (ok, c, cl) = first_mismatch(items, pt);
        out.push(
            Claim::new(format!("C-BOX0/{}", v.name()), "wave operator on functions", "\\square =*\\mathrm{d}*\\mathrm{d}=(\\partial^a)^2")
                .variant(v)
                .verdict(Status::from_bool(ok), c, cl),
        );
    }

    for v in Variant::ALL {
        let mut items = Vec::new();
        for a in 1..=3 {
            for m in Monomial::up_to_degree(3) {
                let pot = dxf(a, NcPoly::monomial(m));
                let mut expect = Form::zero(2);
                let grads = partials(&NcPoly::monomial(m), v);
                for (b, g) in grads.iter().enumerate() {
                    if let Some((s, w)) = Wedge::single(a).wedge(&Wedge::single(b + 1)) {
                        expect.add_term(w, &g.scale_int(s));
                    }
                }
                items.push((format!("A = {}", ft(&pot)), field_strength(&pot, v).0, expect));
            }
        }
        let (ok, c, cl) = first_mismatch(items, ft);
        out.push(
            Claim::new(format!("C-F-DA/{}", v.name()), "field strength of a 1-form potential", "F=\\mathrm{d}A=\\mathrm{d}x_a \\wedge \\mathrm{d}x_b \\partial^b A^a")
                .variant(v)
                .verdict(Status::from_bool(ok), c, cl),
        );
    }
    out
}

/// Grade up to which the report certifies the cohomology.
pub const REPORT_COHOMOLOGY_GRADE: u32 = 4;

fn cohomology_claims() -> Vec<ClaimEntry> {
    let t = cohomology_dims(REPORT_COHOMOLOGY_GRADE);
    let mut ok = t.dim(0, 0) == 1 && t.total(0) == 1;
    for k in 1..=3 {
        ok &= t.total(k) == 0 && t.entries.iter().filter(|e| e.degree == k).all(|e| e.raw == 0);
    }
    let raw0: Vec<String> = (0..=REPORT_COHOMOLOGY_GRADE).map(|n| t.entry(0, n).map_or(0, |e| e.raw).to_string()).collect();
    let computed = format!(
        "grades <= {}: H0 generated by 1 (raw dims per grade {} from lam^n * 1), H1 = H2 = H3 = 0 in every block",
        REPORT_COHOMOLOGY_GRADE,
        raw0.join(",")
    );
    vec![Claim::new("C-THM1", "de Rham cohomology of R^3_lambda", "H^0=\\mathbb{C}.1, H^1=H^2=H^3=\\{ 0 \\}")
        .variant(Variant::Consistent)
        .verdict(Status::from_bool(ok), computed, "H0 = C.1, higher cohomology vanishes")]
}

struct PrimitiveStep {
    id: &'static str,
    quote: &'static str,
    cases: Vec<(String, Form, Form)>,
}

fn primitive_steps() -> Vec<PrimitiveStep> {
    let r = |n: i64, dd: i64| ratio(n, dd);
    let mut steps = Vec::new();

    let cases = (0..=3)
        .map(|a| {
            let omega = dxf(1, mono(a, 0, 0));
            let eta = Form::from_poly(mono(a + 1, 0, 0).scale(&r(1, a as i64 + 1)));
            (format!("a = {}", a), omega, eta)
        })
        .collect();
    steps.push(PrimitiveStep {
        id: "C-PRIM-1",
        quote: "\\omega =\\alpha \\mathrm{d}x_1 x_1^a =\\frac{\\alpha}{a+1} \\mathrm{d}(x^{a+1})",
        cases,
    });

    let cases = (1..=3)
        .map(|b| {
            let omega = &dxf(1, mono(0, b, 0)) + &dxf(2, mono(1, b - 1, 0).scale_int(b as i64));
            let eta = Form::from_poly(&mono(1, b, 0) - &mono(0, b, 0).scale(&lam()));
            (format!("b = {}", b), omega, eta)
        })
        .collect();
    steps.push(PrimitiveStep {
        id: "C-PRIM-2",
        quote: "\\omega =\\alpha \\mathrm{d}x_1 x_2^b+\\alpha b \\mathrm{d}x_2 x_1 x_2^{b-1} =\\alpha \\mathrm{d}(x_1 x_2^b -\\lambda x_2^b)",
        cases,
    });

    let cases = [(1u32, 1u32), (2, 1), (1, 2), (2, 2)]
        .into_iter()
        .map(|(h, f)| {
            let inv = r(1, h as i64);
            let omega = (&dxf(2, mono(0, h - 1, f).scale_int(h as i64)) + &dxf(3, mono(0, h, f - 1).scale_int(f as i64))).scale(&inv);
            let eta = Form::from_poly(mono(0, h, f).scale(&inv));
            (format!("h = {}, f = {}", h, f), omega, eta)
        })
        .collect();
    steps.push(PrimitiveStep {
        id: "C-PRIM-3",
        quote: "\\omega =\\frac{\\beta}{h}(h \\mathrm{d}x_2 x_2^{h-1} x_3^f +f \\mathrm{d}x_3 x_2^h x_3^{f-1}) =\\frac{\\beta}{h} \\mathrm{d}(x_2^h x_3^f)",
        cases,
    });

    let cases = [(0u32, 0u32), (0, 1), (1, 0), (1, 1), (2, 1)]
        .into_iter()
        .map(|(a, b)| {
            let omega = Form::term(wedge_of(&[1, 2]), mono(a, b, 0));
            let eta = dxf(2, mono(a + 1, b, 0).scale(&r(1, a as i64 + 1)));
            (format!("a = {}, b = {}", a, b), omega, eta)
        })
        .collect();
    steps.push(PrimitiveStep {
        id: "C-PRIM-4",
        quote: "\\omega =\\alpha \\mathrm{d}x_1 \\wedge \\mathrm{d}x_2 x_1^a x_2^b = \\alpha \\mathrm{d}(\\mathrm{d}x_2 \\frac{x_1^{a+1}}{a+1}x_2^b)",
        cases,
    });

    let cases = [(0u32, 1u32), (1, 1), (0, 2)]
        .into_iter()
        .map(|(b, c)| {
            let omega = &Form::term(wedge_of(&[1, 2]), mono(0, b, c))
                - &Form::term(wedge_of(&[2, 3]), mono(1, b, c - 1).scale_int(c as i64));
            let coeff = &mono(1, b, c) - &mono(0, b, c).scale(&lam());
            let eta = move_coeff_left_to_right(&coeff, &Form::dx(2));
            (format!("b = {}, c = {}", b, c), omega, eta)
        })
        .collect();
    steps.push(PrimitiveStep {
        id: "C-PRIM-5",
        quote: "\\omega = \\alpha \\mathrm{d}x_1 \\wedge \\mathrm{d}x_2 x_2^b x_3^c -\\alpha c \\mathrm{d}x_2 \\wedge \\mathrm{d}x_3 x_1 x_2^b x_3^{c-1} = \\alpha \\mathrm{d}([x_1x_2^b x_3^c -\\lambda x_2^b x_3^c]\\mathrm{d}x_2)",
        cases,
    });

    let cases = [(0u32, 0u32), (1, 0), (0, 1), (2, 1)]
        .into_iter()
        .map(|(b, c)| {
            let omega = Form::term(Wedge::TOP, mono(0, b, c));
            let eta = Form::term(wedge_of(&[1, 2]), mono(0, b, c + 1).scale(&r(1, c as i64 + 1)));
            (format!("b = {}, c = {}", b, c), omega, eta)
        })
        .collect();
    steps.push(PrimitiveStep {
        id: "C-PRIM-6",
        quote: "\\mathrm{d}x_1 \\wedge \\mathrm{d}x_2 \\wedge \\mathrm{d}x_3 x_2^b x_3^c=d(\\mathrm{d}x_1 \\wedge \\mathrm{d}x_2 \\frac{x_2^b x_3^{c+1}}{c+1})",
        cases,
    });
    steps
}

fn primitive_claims() -> Vec<ClaimEntry> {
    let mut out = Vec::new();
    for step in primitive_steps() {
        for v in Variant::ALL {
            let mut bad = None;
            for (label, omega, eta) in &step.cases {
                let got = d(eta, v);
                if &got != omega {
                    bad = Some((label.clone(), omega.clone(), eta.clone(), got));
                    break;
                }
            }
            let (status, computed, claimed) = match bad {
                None => (Status::Pass, format!("d(eta) = omega in all {} cases", step.cases.len()), "d(eta) = omega".to_string()),
                Some((label, omega, eta, got)) => {
                    let certified = match find_primitive(&omega, 8) {
                        Ok(Some(p)) => format!("certified primitive {}", ft(&p)),
                        Ok(None) => "no primitive within grade 8".to_string(),
                        Err(e) => e.to_string(),
                    };
                    (
                        Status::Fail,
                        format!("{}: d({}) = {}; {}", label, ft(&eta), ft(&got), certified),
                        format!("{}: d({}) = {}", label, ft(&eta), ft(&omega)),
                    )
                }
            };
            out.push(
                Claim::new(format!("{}/{}", step.id, v.name()), "exactness argument for closed forms", step.quote)
                    .variant(v)
                    .verdict(status, computed, claimed),
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// plane waves

/// Truncation order of the plane-wave checks in the report.
pub const REPORT_WAVE_ORDER: usize = 4;

fn describe_wave(check: &WaveCheck) -> String {
    match check.first_failure() {
        None => format!("residual zero through k-order {}", check.residuals.len() - 1),
        Some(m) => format!(
            "holds through k-order {}; residual at order {}: {}",
            m as i64 - 1,
            m,
            ft(&check.residuals[m])
        ),
    }
}

fn wave_claims() -> Vec<ClaimEntry> {
    let combos: Vec<(Convention, Variant)> =
        Convention::ALL.iter().flat_map(|c| Variant::ALL.iter().map(move |v| (*c, *v))).collect();
    let results: Vec<(WaveCheck, WaveCheck)> = combos
        .par_iter()
        .map(|(c, v)| {
            let w = WaveSpec::formal(REPORT_WAVE_ORDER, *c);
            (wave_derivative_check(&w, *v), wave_eigenvalue_check(&w, *v))
        })
        .collect();
    let dq = "\\mathrm{d}e^{ik.x}=\\mathrm{d}x. ik e^{-i\\lambda k_1} e^{ik.x}";
    let eq = "\\square e^{ik.x}= -|k|^2. e^{-2i\\lambda k_1} e^{ik.x}";
    let mut out = Vec::new();
    for ((c, v), (dc, _)) in combos.iter().zip(&results) {
        out.push(
            Claim::new(format!("C-WAVE-D/{}/{}", c.name(), v.name()), "derivative of a plane wave", dq)
                .variant(*v)
                .convention(*c)
                .verdict(Status::from_bool(dc.holds()), describe_wave(dc), format!("zero residual through k-order {}", REPORT_WAVE_ORDER)),
        );
    }
    let limit_ok = results.iter().all(|(dc, _)| dc.holds_classically());
    out.push(
        Claim::new("C-WAVE-D-LIMIT", "classical limit of the plane-wave derivative", "\\lim_{\\lambda \\to 0}\\mathrm{d}e^{ik.x}=ik.(\\mathrm{d}x)e^{ik.x}")
            .verdict(Status::from_bool(limit_ok), "lam -> 0 residual vanishes for every ordering and variant", "classical formula"),
    );
    for ((c, v), (_, ec)) in combos.iter().zip(&results) {
        out.push(
            Claim::new(format!("C-WAVE-EIG/{}/{}", c.name(), v.name()), "plane waves as eigenfunctions of the wave operator", eq)
                .variant(*v)
                .convention(*c)
                .verdict(Status::from_bool(ec.holds()), describe_wave(ec), format!("zero residual through k-order {}", REPORT_WAVE_ORDER)),
        );
    }
    let limit_ok = results.iter().all(|(_, ec)| ec.holds_classically());
    out.push(
        Claim::new("C-WAVE-EIG-LIMIT", "classical limit of the plane-wave eigenvalue", "this eigenvalue goes in the limit \\lambda \\to 0 to the usual eigenvalue of the Laplacian")
            .verdict(Status::from_bool(limit_ok), "lam -> 0 residual vanishes for every ordering and variant", "-|k|^2"),
    );
    out
}

// ---------------------------------------------------------------------------
// zero modes

fn box_all_zero(items: &[(String, NcPoly)], v: Variant) -> (bool, String) {
    for (label, f) in items {
        let b = wave0(f, v);
        if !b.is_zero() {
            return (false, format!("box({}) = {}", label, pt(&b)));
        }
    }
    (true, format!("box vanishes on all {} listed functions", items.len()))
}

fn spin0_claims() -> Vec<ClaimEntry> {
    let mut out = Vec::new();
    let item1: Vec<(String, NcPoly)> =
        [NcPoly::one(), x(1), x(2), x(3)].into_iter().map(|f| (pt(&f), f)).collect();
    let mut item2 = Vec::new();
    let mut item3 = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            if a < b {
                let f = &x(a).pow(2) - &x(b).pow(2);
                item2.push((pt(&f), f));
            }
            if a != b {
                item3.push((format!("x{}*x{}", a, b), x(a).normal_mul(&x(b))));
            }
        }
    }
    let simple: [(&str, &str, &Vec<(String, NcPoly)>); 3] = [
        ("C-KER0-1", "Polynomials of degree one: f(x)=\\alpha +\\beta_a x_a", &item1),
        ("C-KER0-2", "Linear combinations of polynomials of the type f(x)=(x_a^2-x_b^2)", &item2),
        ("C-KER0-3", "Linear combinations of quadratic monomials of the type, f(x)=\\alpha_{ab} x_a x_b, with a \\neq b", &item3),
    ];
    for (id, quote, items) in simple {
        for v in Variant::ALL {
            let (ok, c) = box_all_zero(items, v);
            out.push(
                Claim::new(format!("{}/{}", id, v.name()), "algebraic massless modes of the wave operator", quote)
                    .variant(v)
                    .verdict(Status::from_bool(ok), c, "box f = 0"),
            );
        }
    }

    // (2+δ_{a1}c)λ x_a² ± x1^p x_a²
    let catalog: [(&str, &str, i64, i64, u32); 2] = [
        ("C-KER0-4", "The three particular combinations f(x)=(2+\\delta_{a,1} 10)\\lambda x_a^2 -x_1^2 x_a^2", 10, -1, 2),
        ("C-KER0-5", "The three particular combinations f(x)=(2+\\delta_{a,1} 4)\\lambda x_a^2 +x_1 x_a^2", 4, 1, 1),
    ];
    for (id, quote, bump, sign, p) in catalog {
        for a in 1..=3 {
            let c = 2 + if a == 1 { bump } else { 0 };
            let xa2 = x(a).pow(2);
            let tail = mono(p, 0, 0).normal_mul(&xa2).scale_int(sign);
            for v in Variant::ALL {
                let low = xa2.scale(&lam().scale(&GaussianRational::from_int(c)));
                let f = &low + &tail;
                let parts: Vec<String> = f
                    .grade()
                    .iter()
                    .map(|(n, part)| format!("grade {}: box = {}", n, pt(&wave0(part, v))))
                    .collect();
                let bf = wave0(&f, v);
                out.push(
                    Claim::new(format!("{}/a{}/{}", id, a, v.name()), "algebraic massless modes of the wave operator", quote)
                        .variant(v)
                        .verdict(
                            Status::from_bool(bf.is_zero()),
                            format!("box({}) = {}; homogeneous parts: {}", pt(&f), pt(&bf), parts.join(", ")),
                            "box f = 0",
                        ),
                );
                let repaired = &xa2.scale(&ScalarPoly::lambda_pow(2).scale(&GaussianRational::from_int(c))) + &tail;
                let br = wave0(&repaired, v);
                out.push(
                    Claim::new(
                        format!("{}/a{}/{}/repair", id, a, v.name()),
                        "algebraic massless modes; grade-homogeneous repair lam -> lam^2 (not the stated identity)",
                        quote,
                    )
                    .variant(v)
                    .verdict(Status::from_bool(br.is_zero()), format!("box({}) = {}", pt(&repaired), pt(&br)), "box f = 0"),
                );
            }
        }
    }
    out
}

fn spin1_claims() -> Vec<ClaimEntry> {
    let mut out = Vec::new();
    for v in Variant::ALL {
        let mut items = Vec::new();
        let mut box_ok = true;
        let mut box_witness = String::new();
        for a in 1..=3 {
            for b in 1..=3 {
                if a == b {
                    continue;
                }
                let pot = dxf(a, x(b));
                let (f, _) = field_strength(&pot, v);
                let (s, w) = Wedge::single(a).wedge(&Wedge::single(b)).unwrap();
                items.push((format!("A = {}", ft(&pot)), f, Form::term(w, NcPoly::one().scale_int(s))));
                let bx = wave(&pot, v).unwrap();
                if box_ok && !bx.is_zero() {
                    box_ok = false;
                    box_witness = format!("; box({}) = {}", ft(&pot), ft(&bx));
                }
            }
        }
        let (ok, c, cl) = first_mismatch(items, ft);
        out.push(
            Claim::new(format!("C-KER1-1/{}", v.name()), "algebraic zero modes of the spin-1 wave operator", "A=\\beta_{ab} (\\mathrm{d}x_a)x_b, with a \\ne b and curvature F=\\beta_{ab} \\mathrm{d}x_a \\wedge \\mathrm{d}x_b")
                .variant(v)
                .verdict(
                    Status::from_bool(ok && box_ok),
                    format!("{}{}", c, if box_ok { "; box A = 0 for all pairs".to_string() } else { box_witness }),
                    format!("{}; box A = 0", cl),
                ),
        );
    }

    // reading A = dx_a · coefficient
    let catalog: [(&str, &str, u32, i64, u32); 2] = [
        ("C-KER1-2", "A=\\gamma x_1 x_a^2 with curvature F=\\gamma \\mathrm{d}x_a \\wedge \\mathrm{d}x_1 x_a^2 (read as A = \\mathrm{d}x_a x_1 x_a^2)", 1, 1, 0),
        ("C-KER1-3", "A=\\delta x_1^2 x_a^2 with curvature F=\\mathrm{d}x_a \\wedge \\mathrm{d}x_1 2 \\delta x_1 x_a^2 (read as A = \\mathrm{d}x_a x_1^2 x_a^2)", 2, 2, 1),
    ];
    for (id, quote, p, fcoef, fpow) in catalog {
        for a in 1..=3 {
            let xa2 = x(a).pow(2);
            let pot = dxf(a, mono(p, 0, 0).normal_mul(&xa2));
            let claimed_f = match Wedge::single(a).wedge(&Wedge::single(1)) {
                None => Form::zero(2),
                Some((s, w)) => Form::term(w, mono(fpow, 0, 0).normal_mul(&xa2).scale_int(s * fcoef)),
            };
            for v in Variant::ALL {
                let (f, _) = field_strength(&pot, v);
                let bx = wave(&pot, v).unwrap();
                let ok = f == claimed_f && bx.is_zero();
                out.push(
                    Claim::new(format!("{}/a{}/{}", id, a, v.name()), "algebraic zero modes of the spin-1 wave operator", quote)
                        .variant(v)
                        .verdict(
                            Status::from_bool(ok),
                            format!("A = {}: F = {}; box A = {}", ft(&pot), ft(&f), ft(&bx)),
                            format!("F = {}; box A = 0", ft(&claimed_f)),
                        ),
                );
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// magnetic solution

/// How the constant `C` in the magnetic potential is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirReading {
    /// `C = x1²`.
    Casimir,
    /// `C` a free constant symbol.
    FreeConstant,
}

impl CasimirReading {
    pub fn name(&self) -> &'static str {
        match self {
            CasimirReading::Casimir => "casimir-x1sq",
            CasimirReading::FreeConstant => "free-constant",
        }
    }
}

/// `A = 1/4 {(Σ k_a dx_a)(C + x1x2 + x2x3 + x1x3) + Σ k_a dx_a x_a²}`.
pub fn magnetic_potential(k: &[ScalarPoly; 3], reading: CasimirReading) -> Form {
    let c = match reading {
        CasimirReading::Casimir => x(1).pow(2),
        CasimirReading::FreeConstant => cst(ScalarPoly::sym("C")),
    };
    let s = &(&(&c + &x(1).normal_mul(&x(2))) + &x(2).normal_mul(&x(3))) + &x(1).normal_mul(&x(3));
    let mut a = Form::zero(1);
    for i in 1..=3 {
        let kdx = dxf(i, cst(k[i - 1].clone()));
        a.add_assign_ref(&kdx.right_mul(&s));
        a.add_assign_ref(&kdx.right_mul(&x(i).pow(2)));
    }
    a.scale(&ratio(1, 4))
}

/// The displayed field strength for the magnetic potential.
pub fn magnetic_field_claimed(k: &[ScalarPoly; 3]) -> Form {
    let lin = |terms: &[(i64, usize, usize)]| {
        let mut p = NcPoly::zero();
        for (c, ki, xi) in terms {
            p.add_assign_ref(&x(*xi).scale(&k[*ki - 1].scale(&GaussianRational::from_int(*c))));
        }
        p.scale(&ratio(1, 4))
    };
    let mut f = Form::zero(2);
    f.add_term(wedge_of(&[1, 2]), &lin(&[(2, 1, 2), (1, 1, 1), (1, 1, 3), (-2, 2, 1), (-1, 2, 2), (-1, 2, 3)]));
    f.add_term(wedge_of(&[1, 3]), &lin(&[(2, 1, 3), (1, 1, 1), (1, 1, 2), (-2, 3, 1), (-1, 3, 3), (-1, 3, 2)]));
    f.add_term(wedge_of(&[2, 3]), &lin(&[(2, 2, 3), (1, 2, 2), (1, 2, 1), (-2, 3, 2), (-1, 3, 3), (-1, 3, 1)]));
    f
}

/// `J = Σ k_a dx_a`.
pub fn magnetic_source(k: &[ScalarPoly; 3]) -> Form {
    let mut j = Form::zero(1);
    for i in 1..=3 {
        j.add_assign_ref(&dxf(i, cst(k[i - 1].clone())));
    }
    j
}

/// Verdict rows for one wave vector under both readings of `C` and both variants.
pub fn magnetic_check(k: &[ScalarPoly; 3], tag: &str) -> Vec<ClaimEntry> {
    let aq = "A=\\frac{1}{4}\\left\\{ (\\sum_{a=1}^3 k_a \\mathrm{d}x_a)(C+x_1x_2+x_2 x_3+x_1 x_3) +\\sum_{a=1}^3k_a \\mathrm{d}x_a x_a^2 \\right\\}";
    let fq = "F=\\mathrm{d}A=\\frac{1}{4} \\mathrm{d}x_1 \\wedge \\mathrm{d}x_2 (2k_1 x_2 +k_1 x_1 +k_1 x_3 -2k_2 x_1 -k_2 x_2 -k_2 x_3) + \\frac{1}{4} \\mathrm{d}x_1 \\wedge \\mathrm{d}x_3 (2k_1 x_3 +k_1 x_1 +k_1 x_2 -2k_3 x_1 -k_3 x_3 -k_3 x_2) + \\frac{1}{4} \\mathrm{d}x_2 \\wedge \\mathrm{d}x_3 (2k_2 x_3 +k_2 x_2 +k_2 x_1 -2k_3 x_2 -k_3 x_3 -k_3 x_1)";
    let claimed_f = magnetic_field_claimed(k);
    let source = magnetic_source(k);
    let mut out = Vec::new();
    for reading in [CasimirReading::Casimir, CasimirReading::FreeConstant] {
        let pot = magnetic_potential(k, reading);
        for v in Variant::ALL {
            let f = d(&pot, v);
            out.push(
                Claim::new(format!("C-MAG-F{}/{}/{}", tag, reading.name(), v.name()), "field strength of the magnetic potential", fq)
                    .variant(v)
                    .verdict(Status::from_bool(f == claimed_f), format!("F = {}", ft(&f)), format!("F = {}", ft(&claimed_f))),
            );
            let bx = wave(&pot, v).unwrap();
            out.push(
                Claim::new(format!("C-MAG-BOX{}/{}/{}", tag, reading.name(), v.name()), "magnetic potential solves box A = J for J = k.dx", aq)
                    .variant(v)
                    .verdict(Status::from_bool(bx == source), format!("box A = {}", ft(&bx)), format!("J = {}", ft(&source))),
            );
        }
    }
    out
}

fn magnetic_claims() -> Vec<ClaimEntry> {
    let formal = [1, 2, 3].map(ScalarPoly::k);
    let zero = [ScalarPoly::zero(), ScalarPoly::zero(), ScalarPoly::zero()];
    let axis = |i: usize| [1, 2, 3].map(|j| ScalarPoly::int(i64::from(i == j)));
    let mut out = magnetic_check(&formal, "");
    out.extend(magnetic_check(&axis(1), "-K100"));
    out.extend(magnetic_check(&axis(3), "-K001"));
    out.extend(magnetic_check(&zero, "-ZERO"));
    out
}

/// The full adjudication report.
pub fn claims_report() -> ClaimReport {
    type Section = fn() -> Vec<ClaimEntry>;
    let sections: Vec<Section> = vec![
        bimodule_claims,
        derivative_claims,
        symmetry_claims,
        hodge_claims,
        cohomology_claims,
        primitive_claims,
        wave_claims,
        spin0_claims,
        spin1_claims,
        magnetic_claims,
    ];
    let entries: Vec<ClaimEntry> = sections.par_iter().map(|s| s()).collect::<Vec<_>>().into_iter().flatten().collect();
    ClaimReport { entries }
}

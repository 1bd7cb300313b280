use super::*;
use crate::algebra::tests::arb_ncpoly;
use proptest::prelude::*;

fn val(src: &str) -> Value {
    parse_value(src).unwrap_or_else(|e| panic!("{}: {}", src, e))
}

#[test]
fn elaborates_reordering() {
    let v = val("x2*x1");
    assert_eq!(v.text(), "x1*x2 - 2*lam*x2");
    assert_eq!(val("x1^2 + lam*x1").text(), "x1^2 + lam*x1");
}

#[test]
fn forms_print_canonically() {
    assert_eq!(val("dx1 /\\ dx3").text(), "dx1/\\dx3");
    assert_eq!(val("dx3 /\\ dx1").text(), "-dx1/\\dx3");
    assert_eq!(val("x2*dx1").text(), "dx1*x2 - lam*dx2");
    assert_eq!(val("dx1*(2*x1 - 2*lam)").text(), "dx1*(2*x1 - 2*lam)");
    assert_eq!(val("1/2*dx2*x1^2").text(), "1/2*dx2*x1^2");
}

#[test]
fn scalars_and_complex() {
    assert_eq!(val("i*i").text(), "-1");
    assert_eq!(val("(1 + 2*i)*x1").text(), "(1 + 2*i)*x1");
    assert_eq!(val("k1*x1 - 3/2").text(), "k1*x1 - 3/2");
    assert_eq!(val("-x1").text(), "-x1");
    assert_eq!(val("x1 - x1").text(), "0");
}

#[test]
fn degree_errors() {
    assert_eq!(parse_value("x1 /\\ x2").unwrap_err().kind(), "degree");
    assert_eq!(parse_value("dx1 * dx2").unwrap_err().kind(), "degree");
    assert_eq!(parse_value("dx1 + x1").unwrap_err().kind(), "degree");
    assert_eq!(parse_value("dx1 + dx1/\\dx2").unwrap_err().kind(), "degree");
    assert_eq!(parse_value("dx1^2").unwrap_err().kind(), "degree");
    assert_eq!(parse_value("x1 $").unwrap_err().kind(), "lex");
    assert_eq!(parse_value("x1 +* x2").unwrap_err().kind(), "syntax");
}

#[test]
fn top_degree_overflow_is_zero() {
    assert!(val("dx1/\\dx2/\\dx3/\\dx1").is_zero());
}

#[test]
fn latex_output() {
    assert_eq!(val("x2*x1").latex(), "x_1 x_2 - 2 \\lambda x_2");
    assert_eq!(val("dx1/\\dx2").latex(), "\\mathrm{d}x_1 \\wedge \\mathrm{d}x_2");
}

#[test]
fn json_carries_schema() {
    let doc = document(val("x1").to_json());
    assert_eq!(doc["schema"], SCHEMA);
    assert_eq!(doc["kind"], "poly");
    assert_eq!(doc["terms"][0]["monomial"], json!([1, 0, 0]));
}

fn arb_form() -> impl Strategy<Value = Form> {
    (1usize..4, prop::collection::vec((0usize..3, arb_ncpoly(3)), 0..3)).prop_map(|(k, parts)| {
        let basis = Wedge::of_degree(k);
        let mut f = Form::zero(k);
        for (i, p) in parts {
            f.add_term(basis[i % basis.len()], &p);
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_round_trip(p in arb_ncpoly(4)) {
        let text = format_poly_text(&p);
        prop_assert_eq!(parse_value(&text).unwrap(), Value::Poly(p));
    }

    #[test]
    fn form_round_trip(f in arb_form()) {
        prop_assume!(!f.is_zero());
        let text = format_form_text(&f);
        prop_assert_eq!(parse_value(&text).unwrap(), Value::Form(f));
    }
}

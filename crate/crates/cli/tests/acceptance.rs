//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Set `NCBOREL_UPDATE_GOLDEN=1` to rewrite the golden files.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ncborel::algebra::Monomial;
use ncborel::calculus::{d, d0, d_inner, d_leibniz, d_shuffle, generator_commutator, partials, Form, Variant, Wedge};
use ncborel::claims::claims_report;
use ncborel::hodge::{star, star_basis, wave0};
use ncborel::homology::{cohomology_dims, d_matrix};
use ncborel::scalars::{classical_limit, ScalarPoly};
use ncborel::symmetry::{adjoint_action, coregular_action, pairing_t_poly, TIndex};
use ncborel::syntax::{format_form_text, format_poly_text, parse_value, Value};
use ncborel::waves::{wave_derivative_check, wave_eigenvalue_check, Convention, WaveSpec};
use ncborel::NcPoly;

type Verdict = Result<String, String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_scalar(r: &mut ChaCha8Rng, rich: bool) -> ScalarPoly {
    let mut s = ScalarPoly::ratio(r.gen_range(-5..=5), r.gen_range(1..=3));
    if s.is_zero() {
        s = ScalarPoly::one();
    }
    s = &s * &ScalarPoly::lambda_pow(r.gen_range(0..=2));
    if rich {
        match r.gen_range(0..5) {
            0 => s = &s * &ScalarPoly::i(),
            1 => s = &s * &ScalarPoly::k(r.gen_range(1..=3)),
            2 => s = &s + &ScalarPoly::int(r.gen_range(-2..=2)),
            _ => {}
        }
    }
    s
}

fn random_poly(r: &mut ChaCha8Rng, max_deg: u32, rich: bool) -> NcPoly {
    let mut p = NcPoly::zero();
    for _ in 0..r.gen_range(0..=4) {
        let a = r.gen_range(0..=max_deg);
        let b = r.gen_range(0..=max_deg - a);
        let c = r.gen_range(0..=max_deg - a - b);
        p.add_term(Monomial::new(a, b, c), &random_scalar(r, rich));
    }
    p
}

fn random_form(r: &mut ChaCha8Rng, k: usize, max_deg: u32, rich: bool) -> Form {
    let mut f = Form::zero(k);
    for w in Wedge::of_degree(k) {
        if r.gen_bool(0.7) {
            f.add_term(w, &random_poly(r, max_deg, rich));
        }
    }
    f
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(t)
    } else {
        Err(format!("took {:.2?}, limit {:?}", t, limit))
    }
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let monos = Monomial::up_to_degree(6);
    if monos.len() != 84 {
        return Err(format!("expected 84 monomials, got {}", monos.len()));
    }
    for m in &monos {
        let f = NcPoly::monomial(*m);
        let (a, b, c) = (d_inner(&Form::from_poly(f.clone())), d_leibniz(&Form::from_poly(f.clone())), d_shuffle(&f));
        if a != b || a != c {
            return Err(format!("disagree on {}", format_poly_text(&f)));
        }
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("84 monomials, {:.2?}", t))
}

fn d_squared() -> Verdict {
    let start = Instant::now();
    let mut blocks = 0;
    for n in 0..=6 {
        for k in 0..=1 {
            let prod = d_matrix(k + 1, n).compose(&d_matrix(k, n));
            if prod.iter().any(|row| row.iter().any(|v| !v.is_zero())) {
                return Err(format!("d(d) nonzero on degree {} grade {}", k, n));
            }
            blocks += 1;
        }
    }
    let mut r = rng(2);
    for i in 0..200 {
        let f = random_form(&mut r, i % 3, 3, true);
        let dd = d(&d(&f, Variant::Consistent), Variant::Consistent);
        if !dd.is_zero() {
            return Err(format!("d(d({})) = {}", format_form_text(&f), format_form_text(&dd)));
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{} block compositions and 200 random forms, {:.2?}", blocks, t))
}

fn compact_bimodule() -> Verdict {
    let lam = ScalarPoly::lambda();
    for a in 1..=3 {
        for b in 1..=3 {
            let mut expect = Form::zero(1);
            if a == 1 && b != 1 {
                expect.add_term(Wedge::single(b), &NcPoly::constant(lam.clone()));
            }
            if b == 1 {
                expect.add_term(Wedge::single(a), &NcPoly::constant(-lam.clone()));
            }
            let got = generator_commutator(a, b);
            if got != expect {
                return Err(format!("[x{}, dx{}] = {}", a, b, format_form_text(&got)));
            }
        }
    }
    Ok("9 pairs exact".into())
}

fn hodge() -> Verdict {
    let table: [(&[usize], i64, &[usize]); 8] = [
        (&[], 1, &[1, 2, 3]),
        (&[1], 1, &[2, 3]),
        (&[2], -1, &[1, 3]),
        (&[3], 1, &[1, 2]),
        (&[1, 2], 1, &[3]),
        (&[1, 3], -1, &[2]),
        (&[2, 3], 1, &[1]),
        (&[1, 2, 3], 1, &[]),
    ];
    for (src, s, dst) in table {
        let w = Wedge::from_indices(src).unwrap();
        if star_basis(w) != (s, Wedge::from_indices(dst).unwrap()) {
            return Err(format!("*{} mismatch", w.text()));
        }
        let f = Form::basis(w);
        if star(&star(&f)) != f {
            return Err(format!("** not identity on {}", w.text()));
        }
    }
    let mut r = rng(4);
    for i in 0..100 {
        let f = random_form(&mut r, i % 4, 3, true);
        if star(&star(&f)) != f {
            return Err(format!("** not identity on {}", format_form_text(&f)));
        }
    }
    Ok("8 table entries, involution on basis and 100 random forms".into())
}

fn cohomology() -> Verdict {
    let start = Instant::now();
    let t = cohomology_dims(6);
    for e in &t.entries {
        let expect = usize::from(e.degree == 0 && e.grade == 0);
        if e.generators != expect {
            return Err(format!("H{} at grade {} has {} generators", e.degree, e.grade, e.generators));
        }
        if e.degree > 0 && e.raw != 0 {
            return Err(format!("H{} at grade {} has raw dimension {}", e.degree, e.grade, e.raw));
        }
    }
    let time = within(start, Duration::from_secs(60))?;
    Ok(format!("H0 = C.1, H1 = H2 = H3 = 0 through grade 6, {:.2?}", time))
}

fn massless_modes() -> Verdict {
    let v = Variant::Consistent;
    let x = NcPoly::x;
    let mut zero = vec![NcPoly::one(), x(1), x(2), x(3)];
    for a in 1..=3 {
        for b in 1..=3 {
            if a != b {
                zero.push(x(a).normal_mul(&x(b)));
                zero.push(&x(a).pow(2) - &x(b).pow(2));
            }
        }
    }
    for f in &zero {
        let b = wave0(f, v);
        if !b.is_zero() {
            return Err(format!("box({}) = {}", format_poly_text(f), format_poly_text(&b)));
        }
    }
    let b = wave0(&x(2).pow(2), v);
    if b != NcPoly::one().scale_int(2) {
        return Err(format!("box(x2^2) = {}", format_poly_text(&b)));
    }
    Ok(format!("{} zero modes, box(x2^2) = 2", zero.len()))
}

/// Commutative partial derivative on exponent vectors.
fn commutative_partial(f: &NcPoly, a: usize) -> NcPoly {
    let mut out = NcPoly::zero();
    for (m, s) in f.terms() {
        let mut e = [m.exponent(1), m.exponent(2), m.exponent(3)];
        if e[a - 1] == 0 {
            continue;
        }
        let n = e[a - 1] as i64;
        e[a - 1] -= 1;
        out.add_term(Monomial::new(e[0], e[1], e[2]), &(s * &ScalarPoly::int(n)));
    }
    out
}

fn classical_limit_check() -> Verdict {
    let cl = classical_limit();
    let monos = Monomial::up_to_degree(5);
    for v in Variant::ALL {
        for m in &monos {
            let f = NcPoly::monomial(*m);
            let grads: Vec<NcPoly> = (1..=3).map(|a| commutative_partial(&f, a)).collect();
            let mut df = Form::zero(1);
            let mut lap = NcPoly::zero();
            for a in 1..=3 {
                df.add_term(Wedge::single(a), &grads[a - 1]);
                lap.add_assign_ref(&commutative_partial(&grads[a - 1], a));
            }
            let ps = partials(&f, v);
            let ok = d0(&f, v).substitute(&cl) == df
                && wave0(&f, v).substitute(&cl) == lap
                && (0..3).all(|a| ps[a].substitute(&cl) == grads[a]);
            if !ok {
                return Err(format!("{} limit differs on {}", v.name(), format_poly_text(&f)));
            }
        }
    }
    Ok(format!("d, box and partials on {} monomials, both variants", monos.len()))
}

fn plane_waves() -> Verdict {
    let mut matrix = Vec::new();
    for c in Convention::ALL {
        for v in Variant::ALL {
            let w = WaveSpec::formal(4, c);
            let (dc, ec) = (wave_derivative_check(&w, v), wave_eigenvalue_check(&w, v));
            if !dc.holds_classically() || !ec.holds_classically() {
                return Err(format!("nonzero classical residual for {}/{}", c.name(), v.name()));
            }
            let word = |f: Option<usize>| f.map_or("holds".to_string(), |m| format!("fails at k-order {}", m));
            matrix.push(format!(
                "{}/{}: d {}, box {}",
                c.name(),
                v.name(),
                word(dc.first_failure()),
                word(ec.first_failure())
            ));
        }
    }
    let lam = ScalarPoly::lambda();
    let k = |i: u8| ScalarPoly::k(i);
    let mut expect = Form::zero(1);
    expect.add_term(Wedge::single(1), &NcPoly::constant(&(&lam * &(&k(1) * &k(1))) * &ScalarPoly::ratio(1, 2)));
    for a in 1..=3u8 {
        let c = -(&(&lam * &k(1)) * &k(a));
        expect.add_term(Wedge::single(a as usize), &NcPoly::constant(c));
    }
    let got = &wave_derivative_check(&WaveSpec::formal(4, Convention::PlainExp), Variant::Consistent).residuals[2];
    if *got != expect {
        return Err(format!("plain/consistent order-2 residual {}", format_form_text(got)));
    }
    Ok(format!("classical residuals vanish; order-2 residual exact; {}", matrix.join("; ")))
}

fn report_completeness() -> Verdict {
    let r = claims_report();
    if r.entries.len() < 20 {
        return Err(format!("only {} claims", r.entries.len()));
    }
    let ids: BTreeSet<&str> = r.entries.iter().map(|e| e.id.as_str()).collect();
    if ids.len() != r.entries.len() {
        return Err("duplicate claim ids".into());
    }
    let families = [
        "C-BIM-", "C-DC/", "C-PARTIALS-", "C-CAS", "C-ADJ", "C-CROSS", "C-HODGE-TABLE", "C-KER0-1", "C-KER0-2", "C-KER0-3",
        "C-KER0-4", "C-KER0-5", "C-KER1-1", "C-KER1-2", "C-KER1-3", "C-MAG-F", "C-MAG-BOX", "C-PRIM-", "C-THM1",
    ];
    for f in families {
        if !r.entries.iter().any(|e| e.id.starts_with(f)) {
            return Err(format!("no claim for {}", f));
        }
    }
    if let Some(e) = r.entries.iter().find(|e| e.computed.is_empty()) {
        return Err(format!("{} has no computed witness", e.id));
    }
    let again = claims_report();
    if r.to_json().to_string() != again.to_json().to_string() || r.to_string() != again.to_string() {
        return Err("report differs between runs".into());
    }
    let s = |st| r.count(st);
    use ncborel::claims::Status::*;
    Ok(format!("{} claims ({} PASS, {} FAIL, {} AMBIGUOUS), deterministic", r.entries.len(), s(Pass), s(Fail), s(Ambiguous)))
}

fn symmetry() -> Verdict {
    let mut r = rng(10);
    let pairs = 60;
    for _ in 0..pairs {
        let (f, g) = (random_poly(&mut r, 3, false), random_poly(&mut r, 3, false));
        let fg = f.normal_mul(&g);
        for a in 1..=3 {
            let rhs = &adjoint_action(a, &f).normal_mul(&g) + &f.normal_mul(&adjoint_action(a, &g));
            if adjoint_action(a, &fg) != rhs {
                return Err(format!("J{} not a derivation on {} , {}", a, format_poly_text(&f), format_poly_text(&g)));
            }
        }
        for idx in TIndex::all() {
            let mut rhs = NcPoly::zero();
            let mut pair = ScalarPoly::zero();
            for k in 1..=2 {
                let (l, m) = (TIndex::new(idx.i(), k).unwrap(), TIndex::new(k, idx.j()).unwrap());
                rhs.add_assign_ref(&coregular_action(l, &f).normal_mul(&coregular_action(m, &g)));
                pair.add_assign_ref(&(&pairing_t_poly(l, &f) * &pairing_t_poly(m, &g)));
            }
            if coregular_action(idx, &fg) != rhs {
                return Err(format!("{} not multiplicative", idx.name()));
            }
            if pairing_t_poly(idx, &fg) != pair {
                return Err(format!("pairing with {} not multiplicative", idx.name()));
            }
        }
    }
    Ok(format!("{} random pairs of degree <= 3", pairs))
}

fn roundtrip_corpus() -> Vec<Value> {
    let fixed = [
        "x2*x1",
        "dx1 /\\ dx3",
        "x1^2 + lam*x1",
        "(x1 + x2)^3",
        "3/2*x3*x2 - i*k1*x1",
        "dx1*x2 - dx2*x1",
        "x1*dx2",
        "dx1 /\\ dx2 /\\ dx3 * x1^2",
        "C*dx3 + lam^2*dx1",
        "-(x1 - lam)^2",
        "0",
        "1",
        "i",
        "k1*k2*k3*x1*x2*x3",
        "(dx1 + dx2) /\\ (dx2*x1 + dx3)",
        "x3*x2*x1",
        "lam*x1^4 - 7/3",
        "dx2*(x1 + 2*lam)",
        "x2 /\\ dx1",
    ];
    let mut out: Vec<Value> = fixed.iter().filter_map(|s| parse_value(s).ok()).collect();
    let mut r = rng(11);
    while out.len() < 120 {
        let k = r.gen_range(0..=3);
        let f = random_form(&mut r, k, 4, true);
        out.push(Value::from_form(f));
    }
    out
}

fn golden(name: &str, actual: &str) -> Result<(), String> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    if std::env::var_os("NCBOREL_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
    }
    let expect = std::fs::read_to_string(&path).map_err(|e| format!("{}: {}", path.display(), e))?;
    if expect == actual {
        Ok(())
    } else {
        Err(format!("output differs from golden file {}", name))
    }
}

fn cli() -> Verdict {
    let corpus = roundtrip_corpus();
    for v in &corpus {
        let text = v.text();
        match parse_value(&text) {
            // zero prints as "0" whatever its degree
            Ok(back) if back == *v || (back.is_zero() && v.is_zero()) => {}
            Ok(back) => return Err(format!("'{}' reparses as '{}'", text, back.text())),
            Err(e) => return Err(format!("'{}' does not parse: {}", text, e)),
        }
        let out = ncborel_cli::run(&["ncborel", "mul", &text]);
        if out.code != 0 || out.stdout.trim_end() != text {
            return Err(format!("mul '{}' printed '{}'", text, out.stdout.trim_end()));
        }
    }
    let coh = ncborel_cli::run(&["ncborel", "cohomology", "--max-grade", "4"]);
    let rep = ncborel_cli::run(&["ncborel", "report", "--format", "json"]);
    if coh.code != 0 || rep.code != 0 {
        return Err("golden commands failed".into());
    }
    golden("cohomology_max_grade_4.txt", &coh.stdout)?;
    golden("report.json", &rep.stdout)?;
    Ok(format!("{} round-trip cases, golden cohomology and report stable", corpus.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("oracle equivalence of the three exterior derivatives", oracle_equivalence),
        ("d^2 = 0 on graded blocks and random forms", d_squared),
        ("compact bimodule relations from the representation", compact_bimodule),
        ("Hodge star table and involution", hodge),
        ("de Rham cohomology through grade 6", cohomology),
        ("massless modes of the scalar wave operator", massless_modes),
        ("classical limit of d, box and partials", classical_limit_check),
        ("plane-wave adjudication", plane_waves),
        ("claims report completeness and determinism", report_completeness),
        ("quantum-double covariance and pairing", symmetry),
        ("CLI round trip and golden files", cli),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {:>2}: {} ({})", n + 1, name, detail),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {} ({})", n + 1, name, detail);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

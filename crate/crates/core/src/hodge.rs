//! Euclidean Hodge star, codifferential, wave operator and field strength.

use thiserror::Error;

use crate::algebra::NcPoly;
use crate::calculus::{d, partials, Form, Variant, Wedge};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HodgeError {
    #[error("the wave operator is defined on 0- and 1-forms only, got a {0}-form")]
    UnsupportedDegree(usize),
}

/// `*dx_I = sign · dx_{I*}` for the identity metric.
pub fn star_basis(w: Wedge) -> (i64, Wedge) {
    let idx = w.indices();
    let s = |v: &[usize]| Wedge::from_indices(v).unwrap();
    match idx.as_slice() {
        [] => (1, Wedge::TOP),
        [1] => (1, s(&[2, 3])),
        [2] => (-1, s(&[1, 3])),
        [3] => (1, s(&[1, 2])),
        [1, 2] => (1, s(&[3])),
        [1, 3] => (-1, s(&[2])),
        [2, 3] => (1, s(&[1])),
        _ => (1, Wedge::EMPTY),
    }
}

/// All eight basis entries in basis order.
pub fn star_table() -> Vec<(Wedge, i64, Wedge)> {
    Wedge::all()
        .into_iter()
        .map(|w| {
            let (s, t) = star_basis(w);
            (w, s, t)
        })
        .collect()
}

/// `*(dx_I · f) = (*dx_I) · f`.
pub fn star(omega: &Form) -> Form {
    let mut out = Form::zero(3 - omega.degree().min(3));
    for (w, f) in omega.comps() {
        let (s, t) = star_basis(*w);
        out.add_term(t, &f.scale_int(s));
    }
    out
}

/// `δ = *d*`.
pub fn codifferential(omega: &Form, variant: Variant) -> Form {
    let inner = d(&star(omega), variant);
    if inner.degree() > 3 {
        return Form::zero(omega.degree().saturating_sub(1));
    }
    star(&inner)
}

/// `□ = *d*d` on 0- and 1-forms.
pub fn wave(omega: &Form, variant: Variant) -> Result<Form, HodgeError> {
    if omega.degree() > 1 {
        return Err(HodgeError::UnsupportedDegree(omega.degree()));
    }
    Ok(star(&d(&star(&d(omega, variant)), variant)))
}

/// `□f` for a function.
pub fn wave0(f: &NcPoly, variant: Variant) -> NcPoly {
    wave(&Form::from_poly(f.clone()), variant).unwrap().coeff(&Wedge::EMPTY)
}

/// Levi-Civita symbol on `{1,2,3}`.
pub fn epsilon(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// `F = dA` and `B_a = ε_abc ∂^b A^c` for a 1-form potential `A = Σ dx_c A^c`.
pub fn field_strength(potential: &Form, variant: Variant) -> (Form, [NcPoly; 3]) {
    assert_eq!(potential.degree(), 1, "field strength needs a 1-form potential");
    let f = d(potential, variant);
    let grads: Vec<[NcPoly; 3]> =
        (1..=3).map(|c| partials(&potential.coeff(&Wedge::single(c)), variant)).collect();
    let b = [1, 2, 3].map(|a| {
        let mut acc = NcPoly::zero();
        for bb in 1..=3 {
            for c in 1..=3 {
                let e = epsilon(a, bb, c);
                if e != 0 {
                    acc.add_assign_ref(&grads[c - 1][bb - 1].scale_int(e));
                }
            }
        }
        acc
    });
    (f, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::arb_ncpoly;
    use crate::algebra::Monomial;
    use crate::scalars::ScalarPoly;
    use proptest::prelude::*;

    fn w(idx: &[usize]) -> Wedge {
        Wedge::from_indices(idx).unwrap()
    }

    fn m(a: u32, b: u32, c: u32) -> NcPoly {
        NcPoly::monomial(Monomial::new(a, b, c))
    }

    /// `*(dx_{i1}..dx_{ik}) = 1/(3-k)! ε_{i1..ik j1..} dx_{j1}∧..` summed over all ordered j.
    fn levi_civita_star(w: Wedge) -> Form {
        let idx = w.indices();
        let k = idx.len();
        let mut out = Form::zero(3 - k);
        let fact = [1, 1, 2, 6][3 - k];
        let mut total: std::collections::BTreeMap<Wedge, i64> = Default::default();
        let rest: Vec<Vec<usize>> = match 3 - k {
            0 => vec![vec![]],
            1 => (1..=3).map(|j| vec![j]).collect(),
            2 => (1..=3).flat_map(|a| (1..=3).map(move |b| vec![a, b])).collect(),
            _ => (1..=3)
                .flat_map(|a| (1..=3).flat_map(move |b| (1..=3).map(move |c| vec![a, b, c])))
                .collect(),
        };
        for js in rest {
            let full: Vec<usize> = idx.iter().chain(js.iter()).copied().collect();
            let e = epsilon(full[0], full[1], full[2]);
            if e == 0 {
                continue;
            }
            if let Some((s, u)) = Wedge::from_ordered(&js) {
                *total.entry(u).or_insert(0) += e * s;
            }
        }
        for (u, c) in total {
            assert_eq!(c % fact, 0);
            out.add_term(u, &NcPoly::one().scale_int(c / fact));
        }
        out
    }

    #[test]
    fn table_matches_levi_civita() {
        for (src, s, t) in star_table() {
            let expect = Form::term(t, NcPoly::one().scale_int(s));
            assert_eq!(levi_civita_star(src), expect, "{:?}", src);
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&Form::dx(1)), Form::basis(w(&[2, 3])));
        assert_eq!(star(&Form::basis(w(&[1, 3]))), -Form::dx(2));
        assert_eq!(star(&Form::from_poly(NcPoly::one())), Form::basis(Wedge::TOP));
    }

    #[test]
    fn codifferential_examples() {
        let v = Variant::Consistent;
        assert!(codifferential(&Form::dx(1), v).is_zero());
        let r = codifferential(&Form::term(Wedge::single(1), NcPoly::x(1)), v);
        assert_eq!(r, Form::from_poly(NcPoly::one()));
        assert!(codifferential(&Form::from_poly(NcPoly::one()), v).is_zero());
    }

    #[test]
    fn wave_examples() {
        let v = Variant::Consistent;
        assert_eq!(wave0(&m(0, 2, 0), v), NcPoly::one().scale_int(2));
        assert!(wave0(&m(1, 1, 0), v).is_zero());
        assert!(wave0(&NcPoly::one(), v).is_zero());
        assert_eq!(wave(&Form::basis(w(&[1, 2])), v), Err(HodgeError::UnsupportedDegree(2)));
    }

    #[test]
    fn wave_is_sum_of_second_partials() {
        for v in Variant::ALL {
            for mono in Monomial::up_to_degree(5) {
                let f = NcPoly::monomial(mono);
                let mut lap = NcPoly::zero();
                for (a, p) in partials(&f, v).iter().enumerate() {
                    lap.add_assign_ref(&partials(p, v)[a]);
                }
                assert_eq!(wave0(&f, v), lap, "{:?} {:?}", v, mono);
            }
        }
    }

    #[test]
    fn field_strength_examples() {
        let v = Variant::Consistent;
        let (f, b) = field_strength(&Form::term(Wedge::single(1), NcPoly::x(2)), v);
        assert_eq!(f, Form::basis(w(&[1, 2])));
        assert_eq!(b, [NcPoly::zero(), NcPoly::zero(), NcPoly::one().scale_int(-1)]);
        let (f, b) = field_strength(&Form::term(Wedge::single(2), NcPoly::constant(ScalarPoly::sym("c"))), v);
        assert!(f.is_zero() && b.iter().all(|x| x.is_zero()));
        let (f, b) = field_strength(&Form::term(Wedge::single(1), NcPoly::x(1)), v);
        assert!(f.is_zero() && b.iter().all(|x| x.is_zero()));
    }

    proptest! {
        #[test]
        fn star_is_involution(k in 0usize..4, parts in prop::collection::vec((0usize..3, arb_ncpoly(3)), 0..3)) {
            let basis = Wedge::of_degree(k);
            let mut f = Form::zero(k);
            for (i, p) in parts {
                f.add_term(basis[i % basis.len()], &p);
            }
            let s = star(&f);
            prop_assert_eq!(s.degree(), 3 - k);
            prop_assert_eq!(star(&s), f);
        }
    }
}

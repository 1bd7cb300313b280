//! The quantum-double action on `R³_λ`: `J_a` by rescaled commutator and the
//! dual coordinates `t^i_j` by the coregular action.

use crate::algebra::{Monomial, NcPoly};
use crate::scalars::{GaussianRational, ScalarPoly};

/// A 2×2 matrix over `Q(i)`.
pub type Mat2 = [[GaussianRational; 2]; 2];

/// The defining 2-dimensional representation of the Borel generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMatrix {
    mats: [Mat2; 3],
}

impl Default for GenMatrix {
    fn default() -> Self {
        let z = GaussianRational::zero;
        let int = GaussianRational::from_int;
        GenMatrix {
            mats: [
                [[int(1), z()], [z(), int(-1)]],
                [[z(), int(1)], [z(), z()]],
                [[z(), GaussianRational::i()], [z(), z()]],
            ],
        }
    }
}

impl GenMatrix {
    pub fn get(&self, a: usize) -> &Mat2 {
        &self.mats[a - 1]
    }
}

pub fn mat_identity() -> Mat2 {
    let (o, z) = (GaussianRational::one, GaussianRational::zero);
    [[o(), z()], [z(), o()]]
}

pub fn mat_mul(p: &Mat2, q: &Mat2) -> Mat2 {
    let entry = |i: usize, j: usize| &(&p[i][0] * &q[0][j]) + &(&p[i][1] * &q[1][j]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// A dual coordinate index `t^i_j` with `i, j ∈ {1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TIndex {
    i: usize,
    j: usize,
}

impl TIndex {
    pub fn new(i: usize, j: usize) -> Option<Self> {
        ((1..=2).contains(&i) && (1..=2).contains(&j)).then_some(TIndex { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn all() -> [TIndex; 4] {
        [TIndex { i: 1, j: 1 }, TIndex { i: 1, j: 2 }, TIndex { i: 2, j: 1 }, TIndex { i: 2, j: 2 }]
    }

    pub fn name(&self) -> String {
        format!("t{}{}", self.i, self.j)
    }
}

/// `⟨J_a, t^i_j⟩`.
pub fn pairing_j_t(a: usize, idx: TIndex) -> GaussianRational {
    GenMatrix::default().get(a)[idx.i - 1][idx.j - 1].clone()
}

/// `(J1^a J2^b J3^c)` as a matrix.
fn monomial_matrix(m: &Monomial) -> Mat2 {
    let g = GenMatrix::default();
    m.word().iter().fold(mat_identity(), |acc, &a| mat_mul(&acc, g.get(a)))
}

/// `⟨t^i_j, f⟩`, using `x_a = λ J_a` in the defining representation.
pub fn pairing_t_poly(idx: TIndex, f: &NcPoly) -> ScalarPoly {
    let mut out = ScalarPoly::zero();
    for (m, s) in f.terms() {
        let entry = &monomial_matrix(m)[idx.i - 1][idx.j - 1];
        if !entry.is_zero() {
            out.add_assign_ref(&(s * &ScalarPoly::lambda_pow(m.degree())).scale(entry));
        }
    }
    out
}

/// `J_a ⊳ f = λ⁻¹ [x_a, f]`.
pub fn adjoint_action(a: usize, f: &NcPoly) -> NcPoly {
    NcPoly::x(a).commutator(f).div_lambda_pow(1).expect("commutators with generators are divisible by lambda")
}

/// `t^i_j ⊳ f = Σ ⟨t^i_j, f₍₁₎⟩ f₍₂₎`.
pub fn coregular_action(idx: TIndex, f: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for ((l, r), c) in f.coproduct().terms() {
        let p = pairing_t_poly(idx, &NcPoly::monomial(*l));
        if !p.is_zero() {
            out.add_term(*r, &(&p * c));
        }
    }
    out
}

/// `[J_a, t^i_j]` as an operator: `J_a⊳(t^i_j⊳f) − t^i_j⊳(J_a⊳f)`.
pub fn cross_lhs(a: usize, idx: TIndex, f: &NcPoly) -> NcPoly {
    &adjoint_action(a, &coregular_action(idx, f)) - &coregular_action(idx, &adjoint_action(a, f))
}

/// `Σ_k t^i_k J^k_{aj} − J^i_{ak} t^k_j` applied to `f`.
pub fn cross_rhs(a: usize, idx: TIndex, f: &NcPoly) -> NcPoly {
    let g = GenMatrix::default();
    let j_a = g.get(a);
    let mut out = NcPoly::zero();
    for k in 1..=2 {
        let right = &j_a[k - 1][idx.j - 1];
        if !right.is_zero() {
            let t = coregular_action(TIndex { i: idx.i, j: k }, f);
            out.add_assign_ref(&t.scale(&ScalarPoly::constant(right.clone())));
        }
        let left = &j_a[idx.i - 1][k - 1];
        if !left.is_zero() {
            let t = coregular_action(TIndex { i: k, j: idx.j }, f);
            out.sub_assign_ref(&t.scale(&ScalarPoly::constant(left.clone())));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossVerdict {
    Pass,
    Fail { input: NcPoly, lhs: NcPoly, rhs: NcPoly },
}

impl CrossVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, CrossVerdict::Pass)
    }
}

/// Checks the cross relation on every element of `tests`, stopping at the first failure.
pub fn cross_relation_check(a: usize, idx: TIndex, tests: &[NcPoly]) -> CrossVerdict {
    for f in tests {
        let (lhs, rhs) = (cross_lhs(a, idx, f), cross_rhs(a, idx, f));
        if lhs != rhs {
            return CrossVerdict::Fail { input: f.clone(), lhs, rhs };
        }
    }
    CrossVerdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::arb_ncpoly;
    use proptest::prelude::*;

    fn t(i: usize, j: usize) -> TIndex {
        TIndex::new(i, j).unwrap()
    }

    fn x(i: usize) -> NcPoly {
        NcPoly::x(i)
    }

    #[test]
    fn generators_satisfy_relations() {
        let g = GenMatrix::default();
        let comm = |a, b| {
            let (p, q) = (mat_mul(g.get(a), g.get(b)), mat_mul(g.get(b), g.get(a)));
            [[&p[0][0] - &q[0][0], &p[0][1] - &q[0][1]], [&p[1][0] - &q[1][0], &p[1][1] - &q[1][1]]]
        };
        let twice = |a: usize| g.get(a).clone().map(|row| row.map(|v| &v * &GaussianRational::from_int(2)));
        assert_eq!(comm(1, 2), twice(2));
        assert_eq!(comm(1, 3), twice(3));
        let zero = [[GaussianRational::zero(), GaussianRational::zero()], [GaussianRational::zero(), GaussianRational::zero()]];
        assert_eq!(comm(2, 3), zero);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing_j_t(1, t(1, 1)), GaussianRational::one());
        assert_eq!(pairing_j_t(2, t(1, 2)), GaussianRational::one());
        assert_eq!(pairing_j_t(2, t(2, 1)), GaussianRational::zero());
        assert_eq!(pairing_t_poly(t(1, 1), &NcPoly::one()), ScalarPoly::one());
        assert_eq!(pairing_t_poly(t(1, 2), &x(2)), ScalarPoly::lambda());
        assert_eq!(pairing_t_poly(t(1, 2), &x(1).normal_mul(&x(2))), ScalarPoly::lambda_pow(2));
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(adjoint_action(1, &x(2)), x(2).scale_int(2));
        assert!(adjoint_action(2, &x(3)).is_zero());
        assert_eq!(adjoint_action(2, &x(1)), x(2).scale_int(-2));
    }

    #[test]
    fn coregular_examples() {
        assert_eq!(coregular_action(t(1, 1), &x(2)), x(2));
        assert_eq!(coregular_action(t(1, 2), &x(2)), NcPoly::constant(ScalarPoly::lambda()));
        for idx in TIndex::all() {
            let expect = if idx.i() == idx.j() { NcPoly::one() } else { NcPoly::zero() };
            assert_eq!(coregular_action(idx, &NcPoly::one()), expect);
        }
    }

    #[test]
    fn cross_relations_on_low_degrees() {
        let mut tests = vec![NcPoly::one()];
        for d in 1..=3 {
            tests.extend(Monomial::of_degree(d).into_iter().map(NcPoly::monomial));
        }
        for a in 1..=3 {
            for idx in TIndex::all() {
                assert!(cross_relation_check(a, idx, &tests).passed(), "a={} {:?}", a, idx);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn j_acts_by_derivations(a in 1usize..4, f in arb_ncpoly(3), g in arb_ncpoly(3)) {
            let lhs = adjoint_action(a, &f.normal_mul(&g));
            let rhs = &adjoint_action(a, &f).normal_mul(&g) + &f.normal_mul(&adjoint_action(a, &g));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn t_acts_multiplicatively(i in 1usize..3, j in 1usize..3, f in arb_ncpoly(3), g in arb_ncpoly(3)) {
            let lhs = coregular_action(t(i, j), &f.normal_mul(&g));
            let mut rhs = NcPoly::zero();
            for k in 1..=2 {
                rhs.add_assign_ref(&coregular_action(t(i, k), &f).normal_mul(&coregular_action(t(k, j), &g)));
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pairing_is_multiplicative(i in 1usize..3, j in 1usize..3, f in arb_ncpoly(3), g in arb_ncpoly(3)) {
            let lhs = pairing_t_poly(t(i, j), &f.normal_mul(&g));
            let mut rhs = ScalarPoly::zero();
            for k in 1..=2 {
                rhs.add_assign_ref(&(&pairing_t_poly(t(i, k), &f) * &pairing_t_poly(t(k, j), &g)));
            }
            prop_assert_eq!(lhs, rhs);
        }
    }
}

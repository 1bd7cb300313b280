//! Graded blocks of the de Rham complex, exact cohomology ranks and primitives.
//!
//! The grade of `dx_I · x1^a x2^b x3^c · λ^m` is `|I| + a + b + c + m`; the
//! consistent `d` preserves it, so every block is finite-dimensional.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Monomial, NcPoly};
use crate::calculus::{d, Form, Variant, Wedge};
use crate::scalars::linalg::{nullspace_numeric, rank, solve_numeric};
use crate::scalars::{GaussianRational, Param, ParamMono, ScalarPoly};

/// One basis element `dx_I · x^mono · λ^lam`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub wedge: Wedge,
    pub mono: Monomial,
    pub lam: u32,
}

impl BasisElement {
    pub fn to_form(&self) -> Form {
        Form::term(self.wedge, NcPoly::term(self.mono, ScalarPoly::lambda_pow(self.lam)))
    }
}

/// The basis of k-forms of a fixed grade, ordered lexicographically in `(I, a, b, c, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: usize,
    pub grade: u32,
    elements: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
}

impl GradedBasis {
    pub fn new(degree: usize, grade: u32) -> Self {
        let mut elements = Vec::new();
        if degree <= 3 && grade as usize >= degree {
            let rest = grade - degree as u32;
            for wedge in Wedge::of_degree(degree) {
                for mono in Monomial::up_to_degree(rest) {
                    elements.push(BasisElement { wedge, mono, lam: rest - mono.degree() });
                }
            }
        }
        elements.sort();
        let index = elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        GradedBasis { degree, grade, elements, index }
    }

    /// A block with no elements.
    pub fn empty(degree: usize, grade: u32) -> Self {
        GradedBasis { degree, grade, elements: Vec::new(), index: HashMap::new() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn position(&self, e: &BasisElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Coordinates of a λ-only form homogeneous of this grade.
    pub fn coordinates(&self, f: &Form) -> Option<Vec<GaussianRational>> {
        let mut v = vec![GaussianRational::zero(); self.len()];
        for (w, c) in f.comps() {
            for (mono, s) in c.terms() {
                for (pm, coef) in s.terms() {
                    let (lam, rest) = pm.split_off(&Param::Lambda);
                    if !rest.is_one() {
                        return None;
                    }
                    let pos = self.position(&BasisElement { wedge: *w, mono: *mono, lam })?;
                    v[pos] += coef;
                }
            }
        }
        Some(v)
    }

    pub fn to_form(&self, v: &[GaussianRational]) -> Form {
        let mut out = Form::zero(self.degree);
        for (e, c) in self.elements.iter().zip(v) {
            if !c.is_zero() {
                out.add_term(e.wedge, &NcPoly::term(e.mono, ScalarPoly::lambda_pow(e.lam).scale(c)));
            }
        }
        out
    }
}

/// A linear map between graded blocks, stored as target × source rows.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    pub source: GradedBasis,
    pub target: GradedBasis,
    pub rows: Vec<Vec<GaussianRational>>,
}

impl GradedMatrix {
    /// Matrix of `op` restricted to `source`, read off in `target` coordinates.
    pub fn of_operator(source: GradedBasis, target: GradedBasis, op: impl Fn(&Form) -> Form + Sync) -> Self {
        let columns: Vec<Vec<GaussianRational>> = source
            .elements()
            .par_iter()
            .map(|e| {
                let image = op(&e.to_form());
                if image.is_zero() {
                    return vec![GaussianRational::zero(); target.len()];
                }
                target.coordinates(&image).expect("operator leaves the target block")
            })
            .collect();
        let mut rows = vec![vec![GaussianRational::zero(); source.len()]; target.len()];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                rows[i][j] = v;
            }
        }
        GradedMatrix { source, target, rows }
    }

    pub fn rank(&self) -> usize {
        rank(&self.rows, self.source.len())
    }

    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        if self.target.is_empty() {
            return (0..self.source.len())
                .map(|i| {
                    let mut v = vec![GaussianRational::zero(); self.source.len()];
                    v[i] = GaussianRational::one();
                    v
                })
                .collect();
        }
        nullspace_numeric(&self.rows, self.source.len())
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &GradedMatrix) -> Vec<Vec<GaussianRational>> {
        let inner = rhs.target.len();
        self.rows
            .iter()
            .map(|row| {
                (0..rhs.source.len())
                    .map(|j| {
                        let mut acc = GaussianRational::zero();
                        for (k, a) in row.iter().enumerate().take(inner) {
                            if !a.is_zero() && !rhs.rows[k][j].is_zero() {
                                acc += &(a * &rhs.rows[k][j]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }
}

/// The consistent `d` on the `(k, n)` block.
pub fn d_matrix(k: usize, n: u32) -> GradedMatrix {
    GradedMatrix::of_operator(GradedBasis::new(k, n), GradedBasis::new(k + 1, n), |f| {
        d(f, Variant::Consistent)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyEntry {
    pub degree: usize,
    pub grade: u32,
    pub block_dim: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
    /// `dim ker − dim im` in this block.
    pub raw: usize,
    /// Classes not of the form `λ·(class of grade n−1)`; the count of
    /// generators over the constants `C[λ]`.
    pub generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub max_grade: u32,
    pub entries: Vec<CohomologyEntry>,
}

impl CohomologyTable {
    pub fn entry(&self, k: usize, n: u32) -> Option<&CohomologyEntry> {
        self.entries.iter().find(|e| e.degree == k && e.grade == n)
    }

    pub fn dim(&self, k: usize, n: u32) -> usize {
        self.entry(k, n).map_or(0, |e| e.generators)
    }

    pub fn total(&self, k: usize) -> usize {
        self.entries.iter().filter(|e| e.degree == k).map(|e| e.generators).sum()
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "grade  H0  H1  H2  H3    (raw: H0 H1 H2 H3)")?;
        for n in 0..=self.max_grade {
            let gens: Vec<String> = (0..4).map(|k| format!("{:>3}", self.dim(k, n))).collect();
            let raw: Vec<String> =
                (0..4).map(|k| self.entry(k, n).map_or(0, |e| e.raw).to_string()).collect();
            writeln!(f, "{:>5} {}    ({})", n, gens.join(" "), raw.join(" "))?;
        }
        write!(f, "total {}", (0..4).map(|k| format!("{:>3}", self.total(k))).collect::<Vec<_>>().join(" "))
    }
}

fn lambda_shift(basis: &GradedBasis, v: &[GaussianRational], target: &GradedBasis) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); target.len()];
    for (e, c) in basis.elements().iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let shifted = BasisElement { lam: e.lam + 1, ..*e };
        out[target.position(&shifted).unwrap()] = c.clone();
    }
    out
}

/// Cohomology of the consistent complex in every block up to `max_grade`.
pub fn cohomology_dims(max_grade: u32) -> CohomologyTable {
    let keys: Vec<(usize, u32)> = (0..=max_grade).flat_map(|n| (0..=3).map(move |k| (k, n))).collect();
    let mats: BTreeMap<(usize, u32), GradedMatrix> =
        keys.par_iter().map(|&(k, n)| ((k, n), d_matrix(k, n))).collect::<Vec<_>>().into_iter().collect();
    let kernels: BTreeMap<(usize, u32), Vec<Vec<GaussianRational>>> =
        keys.par_iter().map(|key| (*key, mats[key].nullspace())).collect::<Vec<_>>().into_iter().collect();
    let entries: Vec<CohomologyEntry> = keys
        .par_iter()
        .map(|&(k, n)| {
            let block = &mats[&(k, n)].source;
            let kernel_dim = kernels[&(k, n)].len();
            // images of d from (k-1)-forms, as vectors in this block
            let mut spanning: Vec<Vec<GaussianRational>> = Vec::new();
            if k > 0 {
                let incoming = &mats[&(k - 1, n)];
                spanning.extend(
                    (0..incoming.source.len()).map(|j| incoming.rows.iter().map(|r| r[j].clone()).collect()),
                );
            }
            let image_dim = rank(&spanning, block.len());
            if n > 0 {
                let lower = &mats[&(k, n - 1)].source;
                for v in &kernels[&(k, n - 1)] {
                    spanning.push(lambda_shift(lower, v, block));
                }
            }
            let combined = rank(&spanning, block.len());
            CohomologyEntry {
                degree: k,
                grade: n,
                block_dim: block.len(),
                kernel_dim,
                image_dim,
                raw: kernel_dim - image_dim,
                generators: kernel_dim - combined,
            }
        })
        .collect();
    CohomologyTable { max_grade, entries }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PrimitiveError {
    #[error("form is not closed; d of it is {witness}")]
    NotClosed { witness: Form },
    #[error("functions have no primitive in this complex")]
    DegreeZero,
}

/// Splits coefficients by their non-λ parameter monomial.
fn split_parameters(omega: &Form) -> BTreeMap<ParamMono, Form> {
    let mut out: BTreeMap<ParamMono, Form> = BTreeMap::new();
    for (w, c) in omega.comps() {
        for (mono, s) in c.terms() {
            for (pm, coef) in s.terms() {
                let (lam, rest) = pm.split_off(&Param::Lambda);
                let piece = NcPoly::term(*mono, ScalarPoly::lambda_pow(lam).scale(coef));
                out.entry(rest).or_insert_with(|| Form::zero(omega.degree())).add_term(*w, &piece);
            }
        }
    }
    out
}

/// Finds `η` with `dη = ω` (consistent calculus) using only blocks of grade
/// at most `grade_bound`; `Ok(None)` when `ω` has parts above the bound or
/// some block has no solution.
pub fn find_primitive(omega: &Form, grade_bound: u32) -> Result<Option<Form>, PrimitiveError> {
    if omega.degree() == 0 {
        return Err(PrimitiveError::DegreeZero);
    }
    let dw = d(omega, Variant::Consistent);
    if !dw.is_zero() {
        return Err(PrimitiveError::NotClosed { witness: dw });
    }
    let k = omega.degree();
    let mut eta = Form::zero(k - 1);
    for (params, part) in split_parameters(omega) {
        for (n, homog) in part.grade() {
            if n > grade_bound {
                return Ok(None);
            }
            let m = d_matrix(k - 1, n);
            let b = m.target.coordinates(&homog).expect("homogeneous part lies in its block");
            let Some(x) = solve_numeric(&m.rows, m.source.len(), &b) else {
                return Ok(None);
            };
            let sol = m.source.to_form(&x);
            eta.add_assign_ref(&sol.scale(&ScalarPoly::term(GaussianRational::one(), params.clone())));
        }
    }
    Ok(Some(eta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(idx: &[usize]) -> Wedge {
        Wedge::from_indices(idx).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn block_sizes() {
        for k in 0..=3 {
            for n in k as u32..=6 {
                let expect = binom(3, k) * binom(n as usize - k + 3, 3);
                assert_eq!(GradedBasis::new(k, n).len(), expect);
            }
        }
        assert_eq!(GradedBasis::new(1, 6).len(), 168);
    }

    #[test]
    fn small_blocks() {
        let m = d_matrix(0, 1);
        assert_eq!(m.source.len(), 4);
        assert_eq!(m.rank(), 3);
        assert!(d_matrix(3, 4).is_zero());
        assert!(d_matrix(0, 0).is_zero());
    }

    #[test]
    fn blocks_compose_to_zero() {
        for n in 0..=5 {
            for k in 0..=2 {
                let prod = d_matrix(k + 1, n).compose(&d_matrix(k, n));
                assert!(prod.iter().all(|r| r.iter().all(|v| v.is_zero())), "k={} n={}", k, n);
            }
        }
    }

    #[test]
    fn low_grade_cohomology() {
        let t = cohomology_dims(3);
        assert_eq!(t.dim(0, 0), 1);
        for n in 1..=3 {
            assert_eq!(t.dim(0, n), 0);
            assert_eq!(t.entry(0, n).unwrap().raw, 1);
        }
        for k in 1..=3 {
            assert_eq!(t.total(k), 0);
        }
    }

    #[test]
    fn primitive_examples() {
        let eta = find_primitive(&Form::dx(2), 3).unwrap().unwrap();
        assert_eq!(eta, Form::from_poly(NcPoly::x(2)));

        let omega = Form::term(Wedge::single(1), NcPoly::x(1));
        let eta = find_primitive(&omega, 3).unwrap().unwrap();
        let half = GaussianRational::from_ratio(1, 2);
        let mut expect = NcPoly::monomial(Monomial::new(2, 0, 0)).scale(&ScalarPoly::constant(half.clone()));
        expect.add_term(Monomial::new(1, 0, 0), &ScalarPoly::lambda().scale(&half));
        assert_eq!(eta, Form::from_poly(expect));

        let top = Form::term(Wedge::TOP, NcPoly::x(2));
        let eta = find_primitive(&top, 4).unwrap().unwrap();
        assert_eq!(eta.degree(), 2);
        assert_eq!(d(&eta, Variant::Consistent), top);
    }

    #[test]
    fn primitive_errors() {
        let not_closed = Form::term(Wedge::single(1), NcPoly::x(2));
        assert!(matches!(find_primitive(&not_closed, 4), Err(PrimitiveError::NotClosed { .. })));
        assert_eq!(find_primitive(&Form::from_poly(NcPoly::one()), 4), Err(PrimitiveError::DegreeZero));
        let high = Form::term(w(&[1]), NcPoly::monomial(Monomial::new(4, 0, 0)));
        assert_eq!(find_primitive(&high, 2), Ok(None));
    }

    #[test]
    fn primitive_with_formal_parameters() {
        let omega = Form::term(Wedge::single(2), NcPoly::constant(ScalarPoly::k(1)));
        let eta = find_primitive(&omega, 2).unwrap().unwrap();
        assert_eq!(d(&eta, Variant::Consistent), omega);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn exact_forms_have_primitives(k in 0usize..3, n in 1u32..5, seed in prop::collection::vec(-3i64..4, 1..8)) {
            let basis = GradedBasis::new(k, n);
            prop_assume!(!basis.is_empty());
            let mut v = vec![GaussianRational::zero(); basis.len()];
            for (i, s) in seed.iter().enumerate() {
                v[(i * 7 + s.rem_euclid(5) as usize) % basis.len()] += &GaussianRational::from_int(*s);
            }
            let omega = d(&basis.to_form(&v), Variant::Consistent);
            prop_assume!(!omega.is_zero());
            let eta = find_primitive(&omega, n + 1).unwrap().unwrap();
            prop_assert_eq!(d(&eta, Variant::Consistent), omega);
        }
    }
}

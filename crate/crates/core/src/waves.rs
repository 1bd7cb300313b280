//! Truncated plane waves, their derivative and eigenvalue checks, and zero
//! modes of the wave operator.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Monomial, NcPoly};
use crate::calculus::{d, Form, Variant, Wedge};
use crate::hodge::wave;
use crate::homology::{GradedBasis, GradedMatrix};
use crate::scalars::{classical_limit, GaussianRational, ScalarPoly};

/// How `e^{ik.x}` is ordered when the coordinates do not commute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Convention {
    /// `Σ (ik·x)^n / n!`
    PlainExp,
    /// `e^{ik1 x1} e^{ik2 x2} e^{ik3 x3}`
    X1Left,
    /// `e^{ik2 x2} e^{ik3 x3} e^{ik1 x1}`
    X1Right,
}

impl Convention {
    pub const ALL: [Convention; 3] = [Convention::PlainExp, Convention::X1Left, Convention::X1Right];

    pub fn name(&self) -> &'static str {
        match self {
            Convention::PlainExp => "plain",
            Convention::X1Left => "x1-left",
            Convention::X1Right => "x1-right",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" | "plain-exp" => Ok(Convention::PlainExp),
            "x1-left" => Ok(Convention::X1Left),
            "x1-right" => Ok(Convention::X1Right),
            _ => Err(format!("unknown plane-wave convention '{}'", s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveSpec {
    pub k: [ScalarPoly; 3],
    pub order: usize,
    pub convention: Convention,
}

impl WaveSpec {
    /// Formal wave vector `(k1, k2, k3)`.
    pub fn formal(order: usize, convention: Convention) -> Self {
        WaveSpec { k: [1, 2, 3].map(ScalarPoly::k), order, convention }
    }

    fn ik(&self, a: usize) -> ScalarPoly {
        &ScalarPoly::i() * &self.k[a - 1]
    }

    /// `|k|²`.
    pub fn k_squared(&self) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for k in &self.k {
            out.add_assign_ref(&(k * k));
        }
        out
    }
}

fn inv_factorial(n: usize) -> GaussianRational {
    let f: i64 = (1..=n as i64).product();
    GaussianRational::from_ratio(1, f)
}

/// `(ik_a x_a)^p / p!`.
fn axis_term(w: &WaveSpec, a: usize, p: usize) -> NcPoly {
    let coeff = w.ik(a).pow(p as u32).scale(&inv_factorial(p));
    let e = p as u32;
    let mono = match a {
        1 => Monomial::new(e, 0, 0),
        2 => Monomial::new(0, e, 0),
        _ => Monomial::new(0, 0, e),
    };
    NcPoly::term(mono, coeff)
}

/// Parts of the truncated plane wave, indexed by total degree in `k`.
pub fn plane_wave_parts(w: &WaveSpec) -> Vec<NcPoly> {
    match w.convention {
        Convention::PlainExp => {
            let mut ikx = NcPoly::zero();
            for a in 1..=3 {
                ikx.add_term(Monomial::generator(a), &w.ik(a));
            }
            let mut parts = vec![NcPoly::one()];
            for n in 1..=w.order {
                let next = parts[n - 1].normal_mul(&ikx).scale(&ScalarPoly::ratio(1, n as i64));
                parts.push(next);
            }
            parts
        }
        Convention::X1Left | Convention::X1Right => (0..=w.order)
            .map(|n| {
                let mut part = NcPoly::zero();
                for p in 0..=n {
                    for q in 0..=(n - p) {
                        let r = n - p - q;
                        let (e1, e2, e3) = (axis_term(w, 1, p), axis_term(w, 2, q), axis_term(w, 3, r));
                        let prod = if w.convention == Convention::X1Left {
                            e1.normal_mul(&e2).normal_mul(&e3)
                        } else {
                            e2.normal_mul(&e3).normal_mul(&e1)
                        };
                        part.add_assign_ref(&prod);
                    }
                }
                part
            })
            .collect(),
    }
}

/// The truncated series itself.
pub fn plane_wave_series(w: &WaveSpec) -> NcPoly {
    let mut out = NcPoly::zero();
    for p in plane_wave_parts(w) {
        out.add_assign_ref(&p);
    }
    out
}

/// `(c·λk1)^j / j!`, the `j`-th term of `e^{c λ k1}`.
fn phase_term(w: &WaveSpec, c: &ScalarPoly, j: usize) -> ScalarPoly {
    (&(c * &ScalarPoly::lambda()) * &w.k[0]).pow(j as u32).scale(&inv_factorial(j))
}

/// Residuals of an identity, order by order in `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveCheck {
    pub residuals: Vec<Form>,
    pub classical_residuals: Vec<Form>,
}

impl WaveCheck {
    pub fn holds(&self) -> bool {
        self.residuals.iter().all(|r| r.is_zero())
    }

    pub fn holds_classically(&self) -> bool {
        self.classical_residuals.iter().all(|r| r.is_zero())
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.residuals.iter().position(|r| !r.is_zero())
    }
}

fn check_from(residuals: Vec<Form>) -> WaveCheck {
    let cl = classical_limit();
    let classical_residuals = residuals.iter().map(|r| r.substitute(&cl)).collect();
    WaveCheck { residuals, classical_residuals }
}

/// `d e^{ik.x}` against `Σ_a dx_a (ik_a) e^{-iλk1} e^{ik.x}`, truncated.
pub fn wave_derivative_check(w: &WaveSpec, variant: Variant) -> WaveCheck {
    let parts = plane_wave_parts(w);
    let minus_i = -ScalarPoly::i();
    let residuals = (0..=w.order)
        .into_par_iter()
        .map(|m| {
            let mut res = d(&Form::from_poly(parts[m].clone()), variant);
            for j in 0..m {
                let l = m - 1 - j;
                let phase = phase_term(w, &minus_i, j);
                for a in 1..=3 {
                    let coeff = parts[l].scale(&(&w.ik(a) * &phase));
                    res.sub_assign_ref(&Form::term(Wedge::single(a), coeff));
                }
            }
            res
        })
        .collect();
    check_from(residuals)
}

/// `□ e^{ik.x}` against `-|k|² e^{-2iλk1} e^{ik.x}`, truncated.
pub fn wave_eigenvalue_check(w: &WaveSpec, variant: Variant) -> WaveCheck {
    let parts = plane_wave_parts(w);
    let minus_2i = ScalarPoly::i().scale(&GaussianRational::from_int(-2));
    let k2 = w.k_squared();
    let residuals = (0..=w.order)
        .into_par_iter()
        .map(|m| {
            let mut res = wave(&Form::from_poly(parts[m].clone()), variant).unwrap();
            for j in 0..m.saturating_sub(1) {
                let l = m - 2 - j;
                let coeff = parts[l].scale(&(&k2 * &phase_term(w, &minus_2i, j)));
                res.add_assign_ref(&Form::from_poly(coeff));
            }
            res
        })
        .collect();
    check_from(residuals)
}

/// Which wave operator to take the kernel of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WaveOperator {
    Box0,
    Box1,
}

impl WaveOperator {
    pub fn degree(&self) -> usize {
        match self {
            WaveOperator::Box0 => 0,
            WaveOperator::Box1 => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            WaveOperator::Box0 => "box0",
            WaveOperator::Box1 => "box1",
        }
    }

    /// Grade bound used when none is given.
    pub fn default_bound(&self) -> u32 {
        match self {
            WaveOperator::Box0 => 6,
            WaveOperator::Box1 => 5,
        }
    }
}

impl FromStr for WaveOperator {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "box0" => Ok(WaveOperator::Box0),
            "box1" => Ok(WaveOperator::Box1),
            _ => Err(format!("unknown operator '{}'", s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBlock {
    pub grade: u32,
    pub block_dim: usize,
    pub rank: usize,
    pub basis: Vec<Form>,
}

/// Matrix of the wave operator from grade `n` to grade `n - 2`.
pub fn wave_matrix(op: WaveOperator, n: u32, variant: Variant) -> GradedMatrix {
    let k = op.degree();
    let target = if n >= 2 { GradedBasis::new(k, n - 2) } else { GradedBasis::empty(k, 0) };
    GradedMatrix::of_operator(GradedBasis::new(k, n), target, |f| wave(f, variant).unwrap())
}

/// Exact kernel of `op` (consistent calculus) on every grade up to `grade_bound`.
pub fn kernel_find(op: WaveOperator, grade_bound: u32) -> Vec<KernelBlock> {
    (0..=grade_bound)
        .into_par_iter()
        .map(|n| {
            let m = wave_matrix(op, n, Variant::Consistent);
            let basis: Vec<Form> = m.nullspace().iter().map(|v| m.source.to_form(v)).collect();
            KernelBlock { grade: n, block_dim: m.source.len(), rank: m.source.len() - basis.len(), basis }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> ScalarPoly {
        ScalarPoly::lambda()
    }

    #[test]
    fn low_order_series() {
        for c in Convention::ALL {
            let w0 = WaveSpec::formal(0, c);
            assert_eq!(plane_wave_series(&w0), NcPoly::one());
            let w1 = WaveSpec::formal(1, c);
            let mut expect = NcPoly::one();
            for a in 1..=3 {
                expect.add_term(Monomial::generator(a), &(&ScalarPoly::i() * &ScalarPoly::k(a as u8)));
            }
            assert_eq!(plane_wave_series(&w1), expect);
        }
    }

    #[test]
    fn plain_cross_term() {
        let parts = plane_wave_parts(&WaveSpec::formal(2, Convention::PlainExp));
        let k1k2 = &ScalarPoly::k(1) * &ScalarPoly::k(2);
        assert_eq!(parts[2].coeff(&Monomial::new(1, 1, 0)), -k1k2.clone());
        assert_eq!(parts[2].coeff(&Monomial::new(0, 1, 0)), &k1k2 * &lam());
    }

    #[test]
    fn order_two_residual_plain_consistent() {
        let w = WaveSpec::formal(2, Convention::PlainExp);
        let check = wave_derivative_check(&w, Variant::Consistent);
        assert!(check.residuals[0].is_zero() && check.residuals[1].is_zero());
        let k1 = ScalarPoly::k(1);
        let mut expect = Form::term(Wedge::single(1), NcPoly::constant((&lam() * &(&k1 * &k1)).scale(&GaussianRational::from_ratio(1, 2))));
        for a in 1..=3 {
            let c = -(&(&lam() * &k1) * &ScalarPoly::k(a as u8));
            expect.add_assign_ref(&Form::term(Wedge::single(a), NcPoly::constant(c)));
        }
        assert_eq!(check.residuals[2], expect);
    }

    #[test]
    fn x1_right_arrangement_holds_to_order_two() {
        let w = WaveSpec::formal(2, Convention::X1Right);
        assert!(wave_derivative_check(&w, Variant::Arrangement).holds());
        let w3 = WaveSpec::formal(3, Convention::X1Right);
        assert_eq!(wave_derivative_check(&w3, Variant::Arrangement).first_failure(), Some(3));
    }

    #[test]
    fn classical_limits_vanish() {
        for c in Convention::ALL {
            for v in Variant::ALL {
                let w = WaveSpec::formal(3, c);
                assert!(wave_derivative_check(&w, v).holds_classically(), "{:?} {:?}", c, v);
                assert!(wave_eigenvalue_check(&w, v).holds_classically(), "{:?} {:?}", c, v);
            }
        }
    }

    #[test]
    fn conventions_agree_classically() {
        let cl = classical_limit();
        let base = plane_wave_series(&WaveSpec::formal(4, Convention::PlainExp)).substitute(&cl);
        for c in [Convention::X1Left, Convention::X1Right] {
            assert_eq!(plane_wave_series(&WaveSpec::formal(4, c)).substitute(&cl), base);
        }
    }

    #[test]
    fn box0_kernel_low_grades() {
        let blocks = kernel_find(WaveOperator::Box0, 2);
        assert_eq!(blocks[1].basis.len(), 4);
        assert_eq!(blocks[2].basis.len(), 9);
        for b in &blocks {
            for f in &b.basis {
                assert!(wave(f, Variant::Consistent).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn box1_kernel_contains_mixed_linear_forms() {
        let blocks = kernel_find(WaveOperator::Box1, 2);
        let m = wave_matrix(WaveOperator::Box1, 2, Variant::Consistent);
        for a in 1..=3 {
            for b in 1..=3 {
                if a != b {
                    let f = Form::term(Wedge::single(a), NcPoly::x(b));
                    assert!(wave(&f, Variant::Consistent).unwrap().is_zero());
                }
            }
        }
        assert_eq!(blocks[2].rank, m.rank());
    }
}

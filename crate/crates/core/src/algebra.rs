//! The algebra `R³_λ` in the normal-ordered basis `x1^a x2^b x3^c`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalars::{GaussianRational, Param, ScalarPoly};

/// The normal-ordered word `x1^a x2^b x3^c`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { a, b, c }
    }

    /// The generator `x_i`, `i ∈ {1,2,3}`.
    pub fn generator(i: usize) -> Self {
        match i {
            1 => Monomial::new(1, 0, 0),
            2 => Monomial::new(0, 1, 0),
            3 => Monomial::new(0, 0, 1),
            _ => panic!("generator index {} out of range", i),
        }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }

    pub fn exponent(&self, i: usize) -> u32 {
        match i {
            1 => self.a,
            2 => self.b,
            3 => self.c,
            _ => panic!("generator index {} out of range", i),
        }
    }

    /// The word as a list of generator indices, e.g. `x1^2 x3` → `[1, 1, 3]`.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        w.extend(std::iter::repeat_n(1, self.a as usize));
        w.extend(std::iter::repeat_n(2, self.b as usize));
        w.extend(std::iter::repeat_n(3, self.c as usize));
        w
    }

    /// All monomials of total degree exactly `d`, in increasing order.
    pub fn of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for a in 0..=d {
            for b in 0..=d - a {
                out.push(Monomial::new(a, b, d - a - b));
            }
        }
        out.sort();
        out
    }

    /// All monomials of total degree at most `d`.
    pub fn up_to_degree(d: u32) -> Vec<Monomial> {
        (0..=d).flat_map(Monomial::of_degree).collect()
    }

    pub fn text(&self) -> String {
        let mut parts = Vec::new();
        for (i, e) in [(1, self.a), (2, self.b), (3, self.c)] {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i)),
                _ => parts.push(format!("x{}^{}", i, e)),
            }
        }
        parts.join("*")
    }

    pub fn latex(&self) -> String {
        let mut parts = Vec::new();
        for (i, e) in [(1, self.a), (2, self.b), (3, self.c)] {
            match e {
                0 => {}
                1 => parts.push(format!("x_{}", i)),
                _ => parts.push(format!("x_{}^{{{}}}", i, e)),
            }
        }
        parts.join(" ")
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k as i64 {
        r = r * (n as i64 - i) / (i + 1);
    }
    r
}

/// Product of two basis words, normal ordered:
/// `x1^a x2^b x3^c · x1^d x2^e x3^f = x1^a (x1 - 2(b+c)λ)^d x2^(b+e) x3^(c+f)`.
pub fn mul_monomials(m: &Monomial, n: &Monomial) -> Vec<(Monomial, ScalarPoly)> {
    let shift = -2 * (m.b + m.c) as i64;
    let tail = (m.b + n.b, m.c + n.c);
    if n.a == 0 || shift == 0 {
        return vec![(Monomial::new(m.a + n.a, tail.0, tail.1), ScalarPoly::one())];
    }
    (0..=n.a)
        .map(|j| {
            // C(d, j) x1^j (shift λ)^(d-j)
            let e = n.a - j;
            let c = binomial(n.a, j) * shift.pow(e);
            (Monomial::new(m.a + j, tail.0, tail.1), ScalarPoly::lambda_pow(e).scale(&c.into()))
        })
        .collect()
}

/// A normal-ordered element of `R³_λ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NcPoly {
    terms: BTreeMap<Monomial, ScalarPoly>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ScalarPoly::one())
    }

    pub fn constant(c: ScalarPoly) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: ScalarPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        NcPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, ScalarPoly::one())
    }

    /// The generator `x_i`.
    pub fn x(i: usize) -> Self {
        Self::monomial(Monomial::generator(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ScalarPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> ScalarPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Counit: the coefficient of the unit monomial.
    pub fn counit(&self) -> ScalarPoly {
        self.coeff(&Monomial::ONE)
    }

    pub fn as_scalar(&self) -> Option<ScalarPoly> {
        match self.terms.len() {
            0 => Some(ScalarPoly::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &ScalarPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &NcPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, c);
        }
    }

    pub fn sub_assign_ref(&mut self, other: &NcPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, &-c);
        }
    }

    pub fn scale(&self, s: &ScalarPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &(c * s));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> NcPoly {
        self.scale(&ScalarPoly::int(n))
    }

    /// Normal-ordered product.
    pub fn normal_mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                let cd = c * d;
                for (mono, s) in mul_monomials(m, n) {
                    out.add_term(mono, &(&cd * &s));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> NcPoly {
        let mut acc = NcPoly::one();
        for _ in 0..e {
            acc = acc.normal_mul(self);
        }
        acc
    }

    /// `fg - gf`.
    pub fn commutator(&self, other: &NcPoly) -> NcPoly {
        &self.normal_mul(other) - &other.normal_mul(self)
    }

    /// Algebra-map extension of `Δ(x_a) = x_a ⊗ 1 + 1 ⊗ x_a`.
    pub fn coproduct(&self) -> TensorSquare {
        let gens: Vec<TensorSquare> = (1..=3).map(TensorSquare::primitive).collect();
        let mut out = TensorSquare::zero();
        for (m, c) in &self.terms {
            let mut t = TensorSquare::one();
            for g in m.word() {
                t = t.mul(&gens[g - 1]);
            }
            out.add_assign_scaled(&t, c);
        }
        out
    }

    /// Anti-homomorphic extension of `S(x_a) = -x_a`.
    pub fn antipode(&self) -> NcPoly {
        let mut out = NcPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = NcPoly::one();
            for g in m.word().into_iter().rev() {
                acc = acc.normal_mul(&NcPoly::x(g));
            }
            if m.degree() % 2 == 1 {
                acc = -acc;
            }
            out.add_assign_ref(&acc.scale(c));
        }
        out
    }

    /// Splits into parts homogeneous in the λ-weighted degree
    /// (each `x_a` and each power of `λ` count one; other parameters count zero).
    pub fn grade(&self) -> BTreeMap<u32, NcPoly> {
        let mut out: BTreeMap<u32, NcPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (e, part) in c.split_by(&Param::Lambda) {
                let coeff = part.mul_mono(&crate::scalars::ParamMono::var(Param::Lambda, e));
                out.entry(m.degree() + e).or_default().add_term(*m, &coeff);
            }
        }
        out
    }

    /// Checks `[f, x_a] = 0` for `a = 1, 2, 3`.
    pub fn is_central(&self) -> Centrality {
        for a in 1..=3 {
            let w = self.commutator(&NcPoly::x(a));
            if !w.is_zero() {
                return Centrality::NotCentral { generator: a, witness: w };
            }
        }
        Centrality::Central
    }

    /// Exact division of every coefficient by `λ^e`.
    pub fn div_lambda_pow(&self, e: u32) -> Option<NcPoly> {
        let mut out = NcPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &c.div_lambda_pow(e)?);
        }
        Some(out)
    }

    pub fn substitute(&self, bindings: &BTreeMap<Param, GaussianRational>) -> NcPoly {
        let mut out = NcPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &c.substitute(bindings));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&ScalarPoly) -> ScalarPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c));
        }
        out
    }

    /// Largest monomial degree present.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in printing order: higher degree first, then `x1`-heavy first.
    pub fn print_order(&self) -> Vec<(&Monomial, &ScalarPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| y.0.degree().cmp(&x.0.degree()).then(y.0.cmp(x.0)));
        v
    }
}

/// Outcome of a centrality test; the witness is the first nonzero `[f, x_a]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Centrality {
    Central,
    NotCentral { generator: usize, witness: NcPoly },
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        matches!(self, Centrality::Central)
    }
}

impl<'a> Add<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<'a> Mul<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.normal_mul(rhs)
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: NcPoly) -> NcPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<ScalarPoly> for NcPoly {
    fn from(c: ScalarPoly) -> Self {
        NcPoly::constant(c)
    }
}

/// An element of `R³_λ ⊗ R³_λ`, each factor normal ordered.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorSquare {
    terms: BTreeMap<(Monomial, Monomial), ScalarPoly>,
}

impl TensorSquare {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(Monomial::ONE, Monomial::ONE, &ScalarPoly::one());
        t
    }

    /// `x_a ⊗ 1 + 1 ⊗ x_a`.
    pub fn primitive(a: usize) -> Self {
        let g = Monomial::generator(a);
        let mut t = Self::zero();
        t.add_term(g, Monomial::ONE, &ScalarPoly::one());
        t.add_term(Monomial::ONE, g, &ScalarPoly::one());
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &ScalarPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, c: &ScalarPoly) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &TensorSquare, s: &ScalarPoly) {
        for ((l, r), c) in &other.terms {
            self.add_term(*l, *r, &(c * s));
        }
    }

    /// `f ⊗ g` for polynomials.
    pub fn tensor(f: &NcPoly, g: &NcPoly) -> Self {
        let mut t = Self::zero();
        for (m, c) in f.terms() {
            for (n, d) in g.terms() {
                t.add_term(*m, *n, &(c * d));
            }
        }
        t
    }

    /// Componentwise product in the tensor-square algebra.
    pub fn mul(&self, other: &TensorSquare) -> TensorSquare {
        let mut out = TensorSquare::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let c = c1 * c2;
                for (lm, ls) in mul_monomials(l1, l2) {
                    let cl = &c * &ls;
                    for (rm, rs) in mul_monomials(r1, r2) {
                        out.add_term(lm, rm, &(&cl * &rs));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lam() -> ScalarPoly {
        ScalarPoly::lambda()
    }

    fn x(i: usize) -> NcPoly {
        NcPoly::x(i)
    }

    fn m(a: u32, b: u32, c: u32) -> NcPoly {
        NcPoly::monomial(Monomial::new(a, b, c))
    }

    /// Naive oracle: bubble adjacent out-of-order letters using
    /// `x_j x_1 = x_1 x_j - 2λ x_j` (j = 2, 3) and `x3 x2 = x2 x3`.
    pub(crate) fn naive_word_product(word: &[usize]) -> NcPoly {
        let mut out = NcPoly::zero();
        let mut stack: Vec<(Vec<usize>, ScalarPoly)> = vec![(word.to_vec(), ScalarPoly::one())];
        while let Some((w, c)) = stack.pop() {
            match (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
                None => {
                    let count = |g| w.iter().filter(|&&l| l == g).count() as u32;
                    out.add_term(Monomial::new(count(1), count(2), count(3)), &c);
                }
                Some(i) => {
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    stack.push((swapped, c.clone()));
                    if w[i + 1] == 1 {
                        // x_j x_1 = x_1 x_j - 2λ x_j
                        let mut shorter = w.clone();
                        shorter.remove(i + 1);
                        stack.push((shorter, &c * &lam().scale(&(-2).into())));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn x2_times_x1() {
        assert_eq!(&x(2) * &x(1), &m(1, 1, 0) - &x(2).scale(&lam().scale(&2.into())));
    }

    #[test]
    fn x3_times_x2_commute() {
        assert_eq!(&x(3) * &x(2), m(0, 1, 1));
    }

    #[test]
    fn x2_times_x1_squared() {
        let expect = &(&m(2, 1, 0) - &m(1, 1, 0).scale(&lam().scale(&4.into())))
            + &x(2).scale(&lam().pow(2).scale(&4.into()));
        assert_eq!(&x(2) * &m(2, 0, 0), expect);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(x(1).commutator(&x(3)), x(3).scale(&lam().scale(&2.into())));
        assert!(x(2).commutator(&x(2)).is_zero());
        let expect = &m(1, 1, 0).scale(&lam().scale(&4.into())) - &x(2).scale(&lam().pow(2).scale(&4.into()));
        assert_eq!(m(2, 0, 0).commutator(&x(2)), expect);
    }

    #[test]
    fn closed_form_matches_naive_rewriting() {
        for p in Monomial::up_to_degree(4).into_iter().filter(|p| p.a <= 4 && p.b <= 4 && p.c <= 4) {
            for q in Monomial::up_to_degree(4) {
                let mut word = p.word();
                word.extend(q.word());
                assert_eq!(
                    NcPoly::monomial(p).normal_mul(&NcPoly::monomial(q)),
                    naive_word_product(&word),
                    "{:?} * {:?}",
                    p,
                    q
                );
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(x(2).coproduct(), TensorSquare::primitive(2));
        assert_eq!(NcPoly::one().coproduct(), TensorSquare::one());
        let mut expect = TensorSquare::zero();
        let one = ScalarPoly::one();
        expect.add_term(Monomial::new(1, 1, 0), Monomial::ONE, &one);
        expect.add_term(Monomial::new(1, 0, 0), Monomial::new(0, 1, 0), &one);
        expect.add_term(Monomial::new(0, 1, 0), Monomial::new(1, 0, 0), &one);
        expect.add_term(Monomial::ONE, Monomial::new(1, 1, 0), &one);
        assert_eq!(m(1, 1, 0).coproduct(), expect);
    }

    #[test]
    fn coproduct_is_binomial_on_monomials() {
        for p in Monomial::up_to_degree(4) {
            let mut expect = TensorSquare::zero();
            for i in 0..=p.a {
                for j in 0..=p.b {
                    for k in 0..=p.c {
                        let c = binomial(p.a, i) * binomial(p.b, j) * binomial(p.c, k);
                        expect.add_term(
                            Monomial::new(i, j, k),
                            Monomial::new(p.a - i, p.b - j, p.c - k),
                            &ScalarPoly::int(c),
                        );
                    }
                }
            }
            assert_eq!(NcPoly::monomial(p).coproduct(), expect);
        }
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(x(1).antipode(), -x(1));
        assert_eq!(m(1, 1, 0).antipode(), &m(1, 1, 0) - &x(2).scale(&lam().scale(&2.into())));
        assert_eq!(NcPoly::one().antipode(), NcPoly::one());
    }

    #[test]
    fn grade_examples() {
        let f = &m(2, 0, 0) + &x(1).scale(&lam());
        let g = f.grade();
        assert_eq!(g.len(), 1);
        assert_eq!(g[&2], f);

        let g = (&NcPoly::one() + &x(2)).grade();
        assert_eq!(g[&0], NcPoly::one());
        assert_eq!(g[&1], x(2));

        let g = NcPoly::constant(lam().pow(2)).grade();
        assert_eq!(g.keys().copied().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn centrality_examples() {
        assert!(NcPoly::one().is_central().is_central());
        match m(2, 0, 0).is_central() {
            Centrality::NotCentral { generator, witness } => {
                assert_eq!(generator, 2);
                let expect =
                    &m(1, 1, 0).scale(&lam().scale(&4.into())) - &x(2).scale(&lam().pow(2).scale(&4.into()));
                assert_eq!(witness, expect);
            }
            c => panic!("x1^2 reported {:?}", c),
        }
        match x(2).is_central() {
            Centrality::NotCentral { generator, witness } => {
                assert_eq!(generator, 1);
                assert_eq!(witness, x(2).scale(&lam().scale(&(-2).into())));
            }
            c => panic!("x2 reported {:?}", c),
        }
    }

    pub(crate) fn arb_scalar() -> impl Strategy<Value = ScalarPoly> {
        (-3i64..=3, 0u32..=2, 0u32..=1).prop_map(|(c, l, k)| {
            let p = ScalarPoly::lambda_pow(l).scale(&c.into());
            if k == 1 {
                &p * &ScalarPoly::k(1)
            } else {
                p
            }
        })
    }

    pub(crate) fn arb_ncpoly(max_deg: u32) -> impl Strategy<Value = NcPoly> {
        prop::collection::vec(((0..=max_deg), (0..=max_deg), (0..=max_deg), arb_scalar()), 0..4).prop_map(
            move |ts| {
                let mut p = NcPoly::zero();
                for (a, b, c, s) in ts {
                    // keep total degree bounded
                    let a = a.min(max_deg);
                    let b = b.min(max_deg - a);
                    let c = c.min(max_deg - a - b);
                    p.add_term(Monomial::new(a, b, c), &s);
                }
                p
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn associativity(f in arb_ncpoly(4), g in arb_ncpoly(4), h in arb_ncpoly(4)) {
            prop_assert_eq!(f.normal_mul(&g).normal_mul(&h), f.normal_mul(&g.normal_mul(&h)));
        }

        #[test]
        fn coproduct_is_algebra_map(f in arb_ncpoly(3), g in arb_ncpoly(3)) {
            prop_assert_eq!(f.normal_mul(&g).coproduct(), f.coproduct().mul(&g.coproduct()));
        }

        #[test]
        fn antipode_is_anti_homomorphism(f in arb_ncpoly(3), g in arb_ncpoly(3)) {
            prop_assert_eq!(f.normal_mul(&g).antipode(), g.antipode().normal_mul(&f.antipode()));
        }

        #[test]
        fn grade_parts_are_homogeneous_and_resum(f in arb_ncpoly(4)) {
            let parts = f.grade();
            let mut sum = NcPoly::zero();
            for (n, p) in &parts {
                let sub = p.grade();
                prop_assert_eq!(sub.len(), 1);
                prop_assert!(sub.contains_key(n));
                sum.add_assign_ref(p);
            }
            prop_assert_eq!(sum, f);
        }
    }
}

//! The 3-dimensional bicovariant calculus on `R³_λ` and its exterior algebra.
//!
//! Forms are written with coefficients on the right, `ω = Σ_I dx_I · f_I`.
//! The bimodule structure comes from the representation `ρ` with ray `Λ = e3`
//! through `a·v = v·a + ρ(a).v` and the identification
//! `e1 = dx2, e2 = dx3, e3 = -dx1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::{Monomial, NcPoly};
use crate::scalars::{GaussianRational, Param, ScalarPoly};

/// A wedge-basis index set `I ⊆ {1,2,3}` stored as a bitmask
/// (bit `i-1` set when `dx_i` is present).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Wedge(u8);

impl Wedge {
    pub const EMPTY: Wedge = Wedge(0);
    pub const TOP: Wedge = Wedge(0b111);

    pub fn single(i: usize) -> Wedge {
        assert!((1..=3).contains(&i), "dx index {} out of range", i);
        Wedge(1 << (i - 1))
    }

    /// From a set of distinct indices; `None` if an index repeats or is out of range.
    pub fn from_indices(idx: &[usize]) -> Option<Wedge> {
        let mut bits = 0u8;
        for &i in idx {
            if !(1..=3).contains(&i) || bits & (1 << (i - 1)) != 0 {
                return None;
            }
            bits |= 1 << (i - 1);
        }
        Some(Wedge(bits))
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=3).filter(|i| self.0 & (1 << (i - 1)) != 0).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    /// All index sets of size `k`, in increasing order.
    pub fn of_degree(k: usize) -> Vec<Wedge> {
        let mut v: Vec<Wedge> = (0u8..8).map(Wedge).filter(|w| w.degree() == k).collect();
        v.sort();
        v
    }

    pub fn all() -> Vec<Wedge> {
        (0..=3).flat_map(Wedge::of_degree).collect()
    }

    /// `dx_I ∧ dx_J = sign · dx_{I∪J}`, or `None` when they overlap.
    pub fn wedge(&self, other: &Wedge) -> Option<(i64, Wedge)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0;
        for i in self.indices() {
            for j in other.indices() {
                if i > j {
                    inversions += 1;
                }
            }
        }
        Some((if inversions % 2 == 0 { 1 } else { -1 }, Wedge(self.0 | other.0)))
    }

    /// Sign and set of an ordered list of indices (e.g. `[3, 1]` → `(-1, {1,3})`).
    pub fn from_ordered(idx: &[usize]) -> Option<(i64, Wedge)> {
        let mut sign = 1;
        let mut acc = Wedge::EMPTY;
        for &i in idx {
            let (s, w) = acc.wedge(&Wedge::single(i))?;
            sign *= s;
            acc = w;
        }
        Some((sign, acc))
    }

    pub fn text(&self) -> String {
        self.indices().iter().map(|i| format!("dx{}", i)).collect::<Vec<_>>().join("/\\")
    }

    pub fn latex(&self) -> String {
        self.indices()
            .iter()
            .map(|i| format!("\\mathrm{{d}}x_{}", i))
            .collect::<Vec<_>>()
            .join(" \\wedge ")
    }
}

impl PartialOrd for Wedge {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Wedge {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.indices().cmp(&other.indices()))
    }
}

/// A differential form of fixed degree with right coefficients.
///
/// Degree 4 only occurs as the zero space (e.g. `d` of a top form).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form {
    degree: usize,
    comps: BTreeMap<Wedge, NcPoly>,
}

impl Form {
    pub fn zero(degree: usize) -> Self {
        Form { degree, comps: BTreeMap::new() }
    }

    /// `dx_I · f`.
    pub fn term(w: Wedge, f: NcPoly) -> Self {
        let mut out = Form::zero(w.degree());
        out.add_term(w, &f);
        out
    }

    pub fn basis(w: Wedge) -> Self {
        Self::term(w, NcPoly::one())
    }

    /// `dx_i`.
    pub fn dx(i: usize) -> Self {
        Self::basis(Wedge::single(i))
    }

    pub fn from_poly(f: NcPoly) -> Self {
        Self::term(Wedge::EMPTY, f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn comps(&self) -> impl Iterator<Item = (&Wedge, &NcPoly)> {
        self.comps.iter()
    }

    pub fn coeff(&self, w: &Wedge) -> NcPoly {
        self.comps.get(w).cloned().unwrap_or_default()
    }

    /// The coefficient of a 0-form.
    pub fn as_poly(&self) -> Option<NcPoly> {
        (self.degree == 0).then(|| self.coeff(&Wedge::EMPTY))
    }

    pub fn add_term(&mut self, w: Wedge, f: &NcPoly) {
        assert_eq!(w.degree(), self.degree, "basis {:?} in a {}-form", w, self.degree);
        if f.is_zero() {
            return;
        }
        match self.comps.get_mut(&w) {
            Some(v) => {
                v.add_assign_ref(f);
                if v.is_zero() {
                    self.comps.remove(&w);
                }
            }
            None => {
                self.comps.insert(w, f.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Form) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.degree = other.degree;
        }
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        for (w, f) in &other.comps {
            self.add_term(*w, f);
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Form) {
        self.add_assign_ref(&-other);
    }

    pub fn scale(&self, s: &ScalarPoly) -> Form {
        self.map_coeffs(|f| f.scale(s))
    }

    /// `ω · g`: right multiplication of every coefficient.
    pub fn right_mul(&self, g: &NcPoly) -> Form {
        self.map_coeffs(|f| f.normal_mul(g))
    }

    pub fn map_coeffs(&self, f: impl Fn(&NcPoly) -> NcPoly) -> Form {
        let mut out = Form::zero(self.degree);
        for (w, c) in &self.comps {
            out.add_term(*w, &f(c));
        }
        out
    }

    pub fn substitute(&self, bindings: &BTreeMap<Param, GaussianRational>) -> Form {
        self.map_coeffs(|f| f.substitute(bindings))
    }

    pub fn div_lambda_pow(&self, e: u32) -> Option<Form> {
        let mut out = Form::zero(self.degree);
        for (w, c) in &self.comps {
            out.add_term(*w, &c.div_lambda_pow(e)?);
        }
        Some(out)
    }

    /// Parts homogeneous in the λ-weighted grade `|I| + deg(coefficient)`.
    pub fn grade(&self) -> BTreeMap<u32, Form> {
        let mut out: BTreeMap<u32, Form> = BTreeMap::new();
        for (w, c) in &self.comps {
            for (n, part) in c.grade() {
                out.entry(n + w.degree() as u32)
                    .or_insert_with(|| Form::zero(self.degree))
                    .add_term(*w, &part);
            }
        }
        out
    }

    /// `dx_I ∧ self` for a constant basis form.
    pub fn wedge_basis_left(&self, w: Wedge) -> Form {
        let mut out = Form::zero(self.degree + w.degree());
        for (k, f) in &self.comps {
            if let Some((s, u)) = w.wedge(k) {
                out.add_term(u, &f.scale_int(s));
            }
        }
        out
    }
}

impl<'a> Add<&'a Form> for &'a Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a Form> for &'a Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.map_coeffs(|f| -f)
    }
}

impl Add for Form {
    type Output = Form;
    fn add(self, rhs: Form) -> Form {
        &self + &rhs
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(self, rhs: Form) -> Form {
        &self - &rhs
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

impl From<NcPoly> for Form {
    fn from(f: NcPoly) -> Self {
        Form::from_poly(f)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::format_form_text(self))
    }
}

/// Which exterior derivative to use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Variant {
    /// Leibniz-compatible with the bimodule relations; the default.
    Consistent,
    /// The arrangement-number monomial formula, extended to higher forms by
    /// `d(dx_I · f) = dx_I ∧ d f`.
    Arrangement,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Consistent => "consistent",
            Variant::Arrangement => "paper",
        }
    }

    pub const ALL: [Variant; 2] = [Variant::Consistent, Variant::Arrangement];
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "consistent" => Ok(Variant::Consistent),
            "paper" => Ok(Variant::Arrangement),
            _ => Err(format!("unknown calculus variant '{}'", s)),
        }
    }
}

/// The representation `ρ(x_a) = λ · unit[a]` on `C³` with ray `Λ = e3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoRep {
    unit: [[[i64; 3]; 3]; 3],
    ray: usize,
}

impl Default for RhoRep {
    fn default() -> Self {
        RhoRep {
            unit: [
                [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
                [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
                [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
            ],
            ray: 2,
        }
    }
}

impl RhoRep {
    /// Integer matrix `ρ(x_a) / λ`.
    pub fn unit(&self, a: usize) -> [[i64; 3]; 3] {
        self.unit[a - 1]
    }

    /// `ρ(x_a)` with entries in the parameter ring.
    pub fn matrix(&self, a: usize) -> Vec<Vec<ScalarPoly>> {
        let lam = ScalarPoly::lambda();
        self.unit[a - 1]
            .iter()
            .map(|row| row.iter().map(|&v| lam.scale(&v.into())).collect())
            .collect()
    }

    pub fn ray(&self) -> [i64; 3] {
        let mut v = [0; 3];
        v[self.ray] = 1;
        v
    }

    pub fn apply_unit(&self, a: usize, v: [i64; 3]) -> [i64; 3] {
        let m = self.unit[a - 1];
        let mut out = [0; 3];
        for (i, row) in m.iter().enumerate() {
            out[i] = row.iter().zip(v.iter()).map(|(x, y)| x * y).sum();
        }
        out
    }

    /// `ρ(ξ_1 ⋯ ξ_k) Λ / λ^k` for a word of generator indices.
    pub fn word_on_ray(&self, word: &[usize]) -> [i64; 3] {
        word.iter().rev().fold(self.ray(), |v, &a| self.apply_unit(a, v))
    }
}

/// Sends a vector of `V_ρ` to the 1-form with `e1 ↦ dx2, e2 ↦ dx3, e3 ↦ -dx1`.
pub fn vector_to_form(v: [i64; 3]) -> Vec<(i64, usize)> {
    [(v[0], 2), (-v[2], 1), (v[1], 3)].into_iter().filter(|(c, _)| *c != 0).collect()
}

/// Inverse of [`vector_to_form`] on a basis 1-form.
pub fn basis_to_vector(i: usize) -> [i64; 3] {
    match i {
        1 => [0, 0, -1],
        2 => [1, 0, 0],
        3 => [0, 1, 0],
        _ => panic!("dx index {} out of range", i),
    }
}

/// `[x_g, dx_I] / λ` as integer combination of wedge-basis elements, via
/// `[x_g, v] = ρ(x_g).v` on 1-forms and the derivation rule on products.
pub fn adjoint_on_basis(rho: &RhoRep, g: usize, w: Wedge) -> Vec<(i64, Wedge)> {
    let idx = w.indices();
    let mut acc: BTreeMap<Wedge, i64> = BTreeMap::new();
    for p in 0..idx.len() {
        let image = vector_to_form(rho.apply_unit(g, basis_to_vector(idx[p])));
        for (c, j) in image {
            let mut ordered = idx.clone();
            ordered[p] = j;
            if let Some((s, u)) = Wedge::from_ordered(&ordered) {
                *acc.entry(u).or_insert(0) += c * s;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (c, w)).collect()
}

/// Lookup table of [`adjoint_on_basis`] for the default representation.
struct BimoduleTable {
    adj: HashMap<(usize, Wedge), Vec<(i64, Wedge)>>,
}

impl BimoduleTable {
    fn new() -> Self {
        let rho = RhoRep::default();
        let mut adj = HashMap::new();
        for g in 1..=3 {
            for w in Wedge::all() {
                adj.insert((g, w), adjoint_on_basis(&rho, g, w));
            }
        }
        BimoduleTable { adj }
    }
}

fn table() -> &'static BimoduleTable {
    static TABLE: std::sync::OnceLock<BimoduleTable> = std::sync::OnceLock::new();
    TABLE.get_or_init(BimoduleTable::new)
}

/// `x_g · ω` rewritten with right coefficients:
/// `x_g · dx_I h = dx_I (x_g h) + λ Σ c dx_J h`.
pub fn left_mul_generator(g: usize, omega: &Form) -> Form {
    let xg = NcPoly::x(g);
    let lam = ScalarPoly::lambda();
    let mut out = Form::zero(omega.degree());
    for (w, h) in omega.comps() {
        out.add_term(*w, &xg.normal_mul(h));
        for (c, u) in &table().adj[&(g, *w)] {
            out.add_term(*u, &h.scale(&lam.scale(&(*c).into())));
        }
    }
    out
}

/// `f · ω` rewritten in the right-coefficient convention.
pub fn move_coeff_left_to_right(f: &NcPoly, omega: &Form) -> Form {
    let mut out = Form::zero(omega.degree());
    for (m, s) in f.terms() {
        let mut acc = omega.clone();
        for g in m.word().into_iter().rev() {
            acc = left_mul_generator(g, &acc);
        }
        out.add_assign_ref(&acc.scale(s));
    }
    out
}

/// Graded product; coefficients are moved right through the second factor.
pub fn wedge(omega: &Form, eta: &Form) -> Form {
    let degree = omega.degree() + eta.degree();
    let mut out = Form::zero(degree);
    if degree > 3 {
        return out;
    }
    for (w, f) in omega.comps() {
        let moved = move_coeff_left_to_right(f, eta);
        out.add_assign_ref(&moved.wedge_basis_left(*w));
    }
    out
}

/// `dω = ω∧θ - (-1)^k θ∧ω` with `θ = -λ⁻¹ dx1`.
pub fn d_inner(omega: &Form) -> Form {
    let k = omega.degree();
    if k >= 3 {
        return Form::zero(k + 1);
    }
    let dx1 = Form::dx(1);
    let mut scaled = -wedge(omega, &dx1);
    let left = wedge(&dx1, omega);
    if k % 2 == 0 {
        scaled.add_assign_ref(&left);
    } else {
        scaled.sub_assign_ref(&left);
    }
    if scaled.is_zero() {
        return Form::zero(k + 1);
    }
    scaled.div_lambda_pow(1).expect("inner derivative is divisible by lambda")
}

fn d_leibniz_word(m: Monomial, cache: &mut HashMap<Monomial, Form>) -> Form {
    if let Some(f) = cache.get(&m) {
        return f.clone();
    }
    let word = m.word();
    let result = match word.first() {
        None => Form::zero(1),
        Some(&g) => {
            let rest = match g {
                1 => Monomial::new(m.a - 1, m.b, m.c),
                2 => Monomial::new(m.a, m.b - 1, m.c),
                _ => Monomial::new(m.a, m.b, m.c - 1),
            };
            // d(x_g R) = dx_g R + x_g dR
            let first = Form::term(Wedge::single(g), NcPoly::monomial(rest));
            let d_rest = d_leibniz_word(rest, cache);
            &first + &left_mul_generator(g, &d_rest)
        }
    };
    cache.insert(m, result.clone());
    result
}

/// `d` from `d(x_a) = dx_a`, the Leibniz rule on products, and the
/// right-handed super-derivation rule `d(dx_I · f) = dx_I ∧ df`.
pub fn d_leibniz(omega: &Form) -> Form {
    let mut cache = HashMap::new();
    let mut out = Form::zero(omega.degree() + 1);
    if omega.degree() >= 3 {
        return out;
    }
    for (w, f) in omega.comps() {
        let mut df = Form::zero(1);
        for (m, s) in f.terms() {
            df.add_assign_ref(&d_leibniz_word(*m, &mut cache).scale(s));
        }
        out.add_assign_ref(&df.wedge_basis_left(*w));
    }
    out
}

/// `d(ξ_1⋯ξ_n) = λ⁻¹ Σ_k Σ_{σ∈S(n,k)} ρ_Λ(ξ_σ(1)⋯ξ_σ(k)) ξ_σ(k+1)⋯ξ_σ(n)`.
pub fn d_shuffle(f: &NcPoly) -> Form {
    let rho = RhoRep::default();
    let mut out = Form::zero(1);
    for (m, s) in f.terms() {
        let word = m.word();
        let n = word.len();
        for mask in 1u32..(1 << n) {
            let chosen: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| word[i]).collect();
            let rest: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| word[i]).collect();
            let count = |g| rest.iter().filter(|&&l| l == g).count() as u32;
            let rem = NcPoly::monomial(Monomial::new(count(1), count(2), count(3)));
            let v = rho.word_on_ray(&chosen);
            // λ^k from ρ, λ^-1 overall
            let lam = ScalarPoly::lambda_pow(chosen.len() as u32 - 1);
            for (c, i) in vector_to_form(v) {
                out.add_term(Wedge::single(i), &rem.scale(&(&lam * s).scale(&c.into())));
            }
        }
    }
    out
}

fn arrangements(n: u32, k: u32) -> i64 {
    ((n - k + 1)..=n).map(|x| x as i64).product()
}

/// The arrangement-number monomial formula for `d(x1^a x2^b x3^c)`, linearly extended.
pub fn d_arrangement(f: &NcPoly) -> Form {
    let mut out = Form::zero(1);
    for (m, s) in f.terms() {
        let (a, b, c) = (m.a, m.b, m.c);
        let mut c1 = NcPoly::zero();
        let mut c2 = NcPoly::zero();
        let mut c3 = NcPoly::zero();
        for k in 1..=a {
            // -A^k_a (-1)^k λ^(k-1) x1^(a-k) x2^b x3^c
            let sign = if k % 2 == 0 { -1 } else { 1 };
            c1.add_term(
                Monomial::new(a - k, b, c),
                &ScalarPoly::lambda_pow(k - 1).scale(&(sign * arrangements(a, k)).into()),
            );
        }
        for k in 0..=a {
            let ak = arrangements(a, k);
            if b > 0 {
                c2.add_term(
                    Monomial::new(a - k, b - 1, c),
                    &ScalarPoly::lambda_pow(k).scale(&(ak * b as i64).into()),
                );
            }
            if c > 0 {
                c3.add_term(
                    Monomial::new(a - k, b, c - 1),
                    &ScalarPoly::lambda_pow(k).scale(&(ak * c as i64).into()),
                );
            }
        }
        for (i, coeff) in [(1, c1), (2, c2), (3, c3)] {
            out.add_term(Wedge::single(i), &coeff.scale(s));
        }
    }
    out
}

/// The exterior derivative of the selected calculus, any degree.
pub fn d(omega: &Form, variant: Variant) -> Form {
    match variant {
        Variant::Consistent => d_inner(omega),
        Variant::Arrangement => {
            let mut out = Form::zero(omega.degree() + 1);
            if omega.degree() >= 3 {
                return out;
            }
            for (w, f) in omega.comps() {
                out.add_assign_ref(&d_arrangement(f).wedge_basis_left(*w));
            }
            out
        }
    }
}

/// `d f` for a function.
pub fn d0(f: &NcPoly, variant: Variant) -> Form {
    d(&Form::from_poly(f.clone()), variant)
}

/// Right coefficients of `dx1, dx2, dx3` in `df`.
pub fn partials(f: &NcPoly, variant: Variant) -> [NcPoly; 3] {
    let df = d0(f, variant);
    [1, 2, 3].map(|i| df.coeff(&Wedge::single(i)))
}

/// `ω(h) = Σ d(h₍₁₎) · S(h₍₂₎)`.
pub fn invariant_form(f: &NcPoly, variant: Variant) -> Form {
    let mut out = Form::zero(1);
    for ((l, r), c) in f.coproduct().terms() {
        let dl = d0(&NcPoly::monomial(*l), variant);
        let sr = NcPoly::monomial(*r).antipode();
        out.add_assign_ref(&dl.right_mul(&sr).scale(c));
    }
    out
}

/// `[x_a, dx_b]` computed through the bimodule structure.
pub fn generator_commutator(a: usize, b: usize) -> Form {
    let left = move_coeff_left_to_right(&NcPoly::x(a), &Form::dx(b));
    &left - &Form::dx(b).right_mul(&NcPoly::x(a))
}

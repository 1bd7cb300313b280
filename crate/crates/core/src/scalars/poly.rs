use num::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::GaussianRational;

/// A formal parameter. The derived order is the canonical one:
/// `lam` first, then `k1, k2, k3`, then user symbols lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Param {
    Lambda,
    K(u8),
    Sym(String),
}

impl Param {
    pub fn name(&self) -> String {
        match self {
            Param::Lambda => "lam".to_string(),
            Param::K(i) => format!("k{}", i),
            Param::Sym(s) => s.clone(),
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Param::Lambda => "\\lambda".to_string(),
            Param::K(i) => format!("k_{}", i),
            Param::Sym(s) => s.clone(),
        }
    }
}

/// A power product of parameters; sorted by parameter, no zero exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ParamMono(Vec<(Param, u32)>);

impl ParamMono {
    pub fn one() -> Self {
        ParamMono(Vec::new())
    }

    pub fn var(p: Param, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            ParamMono(vec![(p, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Param, u32)] {
        &self.0
    }

    pub fn exponent(&self, p: &Param) -> u32 {
        self.0.iter().find(|(q, _)| q == p).map(|(_, e)| *e).unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &ParamMono) -> ParamMono {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        ParamMono(out)
    }

    /// `self / other` if every exponent of `other` is bounded by `self`.
    pub fn div(&self, other: &ParamMono) -> Option<ParamMono> {
        let mut out = self.0.clone();
        for (p, e) in &other.0 {
            let pos = out.iter().position(|(q, _)| q == p)?;
            if out[pos].1 < *e {
                return None;
            }
            out[pos].1 -= e;
            if out[pos].1 == 0 {
                out.remove(pos);
            }
        }
        Some(ParamMono(out))
    }

    /// Componentwise minimum (monomial gcd).
    pub fn gcd(&self, other: &ParamMono) -> ParamMono {
        ParamMono(
            self.0
                .iter()
                .filter_map(|(p, e)| {
                    let f = other.exponent(p);
                    (f > 0).then(|| (p.clone(), (*e).min(f)))
                })
                .collect(),
        )
    }

    /// Removes `p` from the product, returning its exponent.
    pub fn split_off(&self, p: &Param) -> (u32, ParamMono) {
        let e = self.exponent(p);
        (e, ParamMono(self.0.iter().filter(|(q, _)| q != p).cloned().collect()))
    }

    /// Graded lexicographic comparison, with earlier parameters weighing more.
    /// This is a monomial order and drives exact division.
    pub fn cmp_grlex(&self, other: &ParamMono) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((p, e)), Some((q, f))) => match p.cmp(q) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if e != f {
                                return e.cmp(f);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

/// A polynomial in the formal parameters with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ScalarPoly {
    terms: BTreeMap<ParamMono, GaussianRational>,
}

impl ScalarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, ParamMono::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(n, d))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn term(c: GaussianRational, m: ParamMono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ScalarPoly { terms }
    }

    pub fn param(p: Param) -> Self {
        Self::term(GaussianRational::one(), ParamMono::var(p, 1))
    }

    pub fn lambda() -> Self {
        Self::param(Param::Lambda)
    }

    pub fn lambda_pow(e: u32) -> Self {
        Self::term(GaussianRational::one(), ParamMono::var(Param::Lambda, e))
    }

    pub fn k(i: u8) -> Self {
        Self::param(Param::K(i))
    }

    pub fn sym(name: &str) -> Self {
        Self::param(Param::Sym(name.to_string()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMono, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant when the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: ParamMono, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &ScalarPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub_assign_ref(&mut self, other: &ScalarPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &-c);
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> ScalarPoly {
        if c.is_zero() {
            return ScalarPoly::zero();
        }
        ScalarPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &ParamMono) -> ScalarPoly {
        ScalarPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> ScalarPoly {
        let mut acc = ScalarPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Highest power of `p` present (0 for the zero polynomial).
    pub fn degree_in(&self, p: &Param) -> u32 {
        self.terms.keys().map(|m| m.exponent(p)).max().unwrap_or(0)
    }

    pub fn lambda_degree(&self) -> u32 {
        self.degree_in(&Param::Lambda)
    }

    /// True when every term only involves `lam`.
    pub fn only_lambda(&self) -> bool {
        self.terms.keys().all(|m| m.factors().iter().all(|(p, _)| *p == Param::Lambda))
    }

    /// Evaluates the bound parameters; the rest stay formal.
    pub fn substitute(&self, bindings: &BTreeMap<Param, GaussianRational>) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (p, e) in m.factors() {
                match bindings.get(p) {
                    Some(v) => coeff = &coeff * &v.pow(*e),
                    None => rest.push((p.clone(), *e)),
                }
            }
            out.add_term(ParamMono(rest), &coeff);
        }
        out
    }

    /// Splits by the power of `p`: `self = Σ p^e · part[e]`.
    pub fn split_by(&self, p: &Param) -> BTreeMap<u32, ScalarPoly> {
        let mut out: BTreeMap<u32, ScalarPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(p);
            out.entry(e).or_default().add_term(rest, c);
        }
        out
    }

    /// Divides by `lam^e` when every term carries at least that power.
    pub fn div_lambda_pow(&self, e: u32) -> Option<ScalarPoly> {
        let d = ParamMono::var(Param::Lambda, e);
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            out.insert(m.div(&d)?, c.clone());
        }
        Some(ScalarPoly { terms: out })
    }

    /// Leading term under the graded lexicographic order.
    pub fn leading(&self) -> Option<(&ParamMono, &GaussianRational)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_grlex(b.0))
    }

    /// Exact multivariate division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &ScalarPoly) -> Option<ScalarPoly> {
        let (lm, lc) = divisor.leading()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.inv()?));
        }
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = ScalarPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(lm)?;
            let qc = c * &lc_inv;
            let t = ScalarPoly::term(qc.clone(), qm.clone());
            rem.sub_assign_ref(&(&t * divisor));
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }

    /// Greatest common monomial factor of all terms.
    pub fn mono_content(&self) -> ParamMono {
        let mut it = self.terms.keys();
        match it.next() {
            None => ParamMono::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub fn div_mono(&self, m: &ParamMono) -> Option<ScalarPoly> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            out.insert(k.div(m)?, c.clone());
        }
        Some(ScalarPoly { terms: out })
    }

    /// True when the printed form needs parentheses as a factor.
    pub fn is_compound(&self) -> bool {
        match self.terms.len() {
            0 => false,
            1 => {
                let (_, c) = self.terms.iter().next().unwrap();
                !(c.re.is_zero() || c.im.is_zero())
            }
            _ => true,
        }
    }

    /// Terms in printing order: higher total degree first, then by canonical order.
    pub fn print_order(&self) -> Vec<(&ParamMono, &GaussianRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_grlex(a.0));
        v
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.print_order().into_iter().enumerate() {
            let neg = c.is_negative_like();
            let c = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&latex_term(&c, m));
        }
        out
    }
}

pub(crate) fn latex_coeff(c: &GaussianRational) -> String {
    let r = |r: &num::BigRational| {
        if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
        }
    };
    if c.im == num::BigRational::from_integer(0.into()) {
        r(&c.re)
    } else if c.re == num::BigRational::from_integer(0.into()) {
        if c.im == num::BigRational::from_integer(1.into()) {
            "i".into()
        } else if c.im == num::BigRational::from_integer((-1).into()) {
            "-i".into()
        } else {
            format!("{} i", r(&c.im))
        }
    } else {
        format!("({} + {} i)", r(&c.re), r(&c.im))
    }
}

pub(crate) fn latex_term(c: &GaussianRational, m: &ParamMono) -> String {
    let mono: Vec<String> = m
        .factors()
        .iter()
        .map(|(p, e)| if *e == 1 { p.latex() } else { format!("{}^{{{}}}", p.latex(), e) })
        .collect();
    if mono.is_empty() {
        return latex_coeff(c);
    }
    let body = mono.join(" ");
    if c.is_one() {
        body
    } else {
        format!("{} {}", latex_coeff(c), body)
    }
}

pub(crate) fn text_mono(m: &ParamMono) -> String {
    m.factors()
        .iter()
        .map(|(p, e)| if *e == 1 { p.name() } else { format!("{}^{}", p.name(), e) })
        .collect::<Vec<_>>()
        .join("*")
}

/// Writes `c * m` for a coefficient already stripped of its sign.
pub(crate) fn text_term(c: &GaussianRational, m: &str) -> String {
    if m.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        m.to_string()
    } else {
        format!("{}*{}", c, m)
    }
}

impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.print_order().into_iter().enumerate() {
            let neg = c.is_negative_like();
            let c = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            write!(f, "{}", text_term(&c, &text_mono(m)))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a ScalarPoly> for &'a ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a ScalarPoly> for &'a ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<'a> Mul<&'a ScalarPoly> for &'a ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        ScalarPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ScalarPoly> for ScalarPoly {
            type Output = ScalarPoly;
            fn $m(self, rhs: ScalarPoly) -> ScalarPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<GaussianRational> for ScalarPoly {
    fn from(c: GaussianRational) -> Self {
        ScalarPoly::constant(c)
    }
}

impl From<i64> for ScalarPoly {
    fn from(n: i64) -> Self {
        ScalarPoly::int(n)
    }
}

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{GaussianRational, ScalarPoly};

/// A quotient of parameter polynomials. The denominator is kept monic with
/// respect to its graded-lex leading term; no gcd cancellation is attempted
/// beyond exact division of the numerator.
#[derive(Clone, Debug)]
pub struct ScalarFraction {
    num: ScalarPoly,
    den: ScalarPoly,
}

impl ScalarFraction {
    /// Panics if `den` is zero.
    pub fn new(num: ScalarPoly, den: ScalarPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if let Some(q) = num.div_exact(&den) {
            return ScalarFraction { num: q, den: ScalarPoly::one() };
        }
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap();
        let inv = lc.inv().unwrap();
        ScalarFraction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: ScalarPoly) -> Self {
        ScalarFraction { num: p, den: ScalarPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(ScalarPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(ScalarPoly::one())
    }

    pub fn num(&self) -> &ScalarPoly {
        &self.num
    }

    pub fn den(&self) -> &ScalarPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }
}

impl PartialEq for ScalarFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for ScalarFraction {}

impl From<ScalarPoly> for ScalarFraction {
    fn from(p: ScalarPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<GaussianRational> for ScalarFraction {
    fn from(c: GaussianRational) -> Self {
        Self::from_poly(ScalarPoly::constant(c))
    }
}

impl<'a> Add<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn add(self, rhs: &ScalarFraction) -> ScalarFraction {
        if self.den == rhs.den {
            return ScalarFraction::new(&self.num + &rhs.num, self.den.clone());
        }
        ScalarFraction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn sub(self, rhs: &ScalarFraction) -> ScalarFraction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn mul(self, rhs: &ScalarFraction) -> ScalarFraction {
        ScalarFraction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn div(self, rhs: &ScalarFraction) -> ScalarFraction {
        self * &rhs.inv().expect("division by zero fraction")
    }
}

impl Neg for &ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        ScalarFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_identities() {
        let lam = ScalarPoly::lambda();
        let a = ScalarFraction::new(ScalarPoly::one(), lam.clone());
        let b = ScalarFraction::new(lam.clone(), &lam + &ScalarPoly::one());
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), ScalarFraction::one());
    }

    #[test]
    fn exact_quotient_collapses() {
        let lam = ScalarPoly::lambda();
        let f = ScalarFraction::new(&lam * &lam, lam.clone());
        assert!(f.den().is_one());
        assert_eq!(f.num(), &lam);
    }
}

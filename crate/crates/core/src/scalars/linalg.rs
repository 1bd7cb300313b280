//! Exact elimination over integral domains with exact division.
//!
//! The workhorse is fraction-free Gauss–Jordan elimination (Bareiss' update
//! applied to every row). After processing `r` pivots every pivot entry equals
//! the determinant `d` of the pivot minor and the matrix is `d` times its
//! reduced row echelon form, so nullspace vectors can be read off without
//! ever leaving the ring.

use super::{GaussianRational, ScalarFraction, ScalarPoly};
use num::{BigInt, Integer, One, Zero};

/// The operations elimination needs. `div_exact` is only called when the
/// division is known to be exact.
pub trait ExactDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactDomain for ScalarPoly {
    fn zero() -> Self {
        ScalarPoly::zero()
    }
    fn one() -> Self {
        ScalarPoly::one()
    }
    fn is_zero(&self) -> bool {
        ScalarPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        ScalarPoly::div_exact(self, o).expect("inexact division in fraction-free elimination")
    }
}

impl ExactDomain for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

/// Result of fraction-free Gauss–Jordan elimination.
#[derive(Clone, Debug)]
pub struct Echelon<R> {
    /// `det * rref(m)`.
    pub rows: Vec<Vec<R>>,
    /// Pivot column of each of the first `pivots.len()` rows.
    pub pivots: Vec<usize>,
    /// Determinant of the pivot minor (1 when rank is 0).
    pub det: R,
    pub ncols: usize,
}

/// Fraction-free Gauss–Jordan on a rectangular matrix with `ncols` columns.
pub fn fraction_free_rref<R: ExactDomain>(mut m: Vec<Vec<R>>, ncols: usize) -> Echelon<R> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = R::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in 0..nrows {
            if i == r {
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..ncols {
                // (piv * m[i][j] - f * m[r][j]) / prev
                let a = piv.mul(&m[i][j]);
                let v = if f.is_zero() { a } else { a.sub(&f.mul(&m[r][j])) };
                m[i][j] = if v.is_zero() { R::zero() } else { v.div_exact(&prev) };
            }
        }
        pivots.push(c);
        prev = piv;
        r += 1;
    }
    Echelon { rows: m, pivots, det: prev, ncols }
}

impl<R: ExactDomain> Echelon<R> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Right nullspace basis, one vector per free column in increasing order.
    /// The free coordinate carries `det`, pivot coordinates `-row[free]`.
    pub fn nullspace(&self) -> Vec<Vec<R>> {
        let is_pivot = {
            let mut v = vec![false; self.ncols];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![R::zero(); self.ncols];
                v[f] = self.det.clone();
                for (row, &p) in self.pivots.iter().enumerate() {
                    v[p] = self.rows[row][f].neg();
                }
                v
            })
            .collect()
    }
}

/// Rank of a numeric matrix.
pub fn rank(m: &[Vec<GaussianRational>], ncols: usize) -> usize {
    rref_field(m.to_vec(), ncols).pivots.len()
}

/// Ordinary Gauss–Jordan over `Q(i)`, pivots normalized to one.
pub fn rref_field(mut m: Vec<Vec<GaussianRational>>, ncols: usize) -> Echelon<GaussianRational> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for j in c..ncols {
            if !m[r][j].is_zero() {
                m[r][j] = &m[r][j] * &inv;
            }
        }
        let pivot_row = m[r].clone();
        let support: Vec<usize> = (c..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] = &row[j] - &(&f * &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: m, pivots, det: GaussianRational::one(), ncols }
}

/// Right nullspace of a numeric matrix, normalized so each vector has
/// Gaussian-integer entries with trivial integer content and its free
/// coordinate positive.
pub fn nullspace_numeric(m: &[Vec<GaussianRational>], ncols: usize) -> Vec<Vec<GaussianRational>> {
    let e = rref_field(m.to_vec(), ncols);
    e.nullspace().into_iter().map(|v| primitive_numeric(&v)).collect()
}

/// Solves `m x = b`; returns the solution with all free coordinates zero.
pub fn solve_numeric(
    m: &[Vec<GaussianRational>],
    ncols: usize,
    b: &[GaussianRational],
) -> Option<Vec<GaussianRational>> {
    let aug: Vec<Vec<GaussianRational>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let e = rref_field(aug, ncols + 1);
    if e.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![GaussianRational::zero(); ncols];
    for (row, &p) in e.pivots.iter().enumerate() {
        x[p] = e.rows[row][ncols].clone();
    }
    Some(x)
}

fn integer_content(v: &[GaussianRational]) -> (BigInt, BigInt) {
    let mut lcm = BigInt::one();
    for z in v {
        lcm = lcm.lcm(&z.denom_lcm());
    }
    let mut g = BigInt::zero();
    for z in v {
        for part in [&z.re, &z.im] {
            let n = part.numer() * (&lcm / part.denom());
            g = g.gcd(&n);
        }
    }
    (lcm, g)
}

fn primitive_numeric(v: &[GaussianRational]) -> Vec<GaussianRational> {
    let (lcm, g) = integer_content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    let scale = GaussianRational::from_rational(num::BigRational::new(lcm, g));
    let unit = v
        .iter()
        .rev()
        .find(|z| !z.is_zero())
        .map(|z| z.normalizing_unit())
        .unwrap_or_else(GaussianRational::one);
    let s = &scale * &unit;
    v.iter().map(|z| z * &s).collect()
}

/// Right nullspace over the fraction field of the parameter ring.
///
/// Rows are cleared of denominators, eliminated fraction-free, and each
/// basis vector is returned with polynomial entries, common monomial and
/// integer content removed, and the last nonzero entry's leading coefficient
/// normalized positive.
pub fn nullspace(m: &[Vec<ScalarFraction>]) -> Vec<Vec<ScalarPoly>> {
    let ncols = m.first().map_or(0, Vec::len);
    let rows: Vec<Vec<ScalarPoly>> = m.iter().map(|row| clear_row(row)).collect();
    let e = fraction_free_rref(rows, ncols);
    e.nullspace().into_iter().map(|v| primitive_poly(&v)).collect()
}

fn clear_row(row: &[ScalarFraction]) -> Vec<ScalarPoly> {
    let mut dens: Vec<&ScalarPoly> = Vec::new();
    for x in row {
        if !x.den().is_one() && !dens.contains(&x.den()) {
            dens.push(x.den());
        }
    }
    let prod = dens.iter().fold(ScalarPoly::one(), |acc, d| &acc * *d);
    row.iter()
        .map(|x| {
            let cof = prod.div_exact(x.den()).expect("denominator divides product");
            x.num() * &cof
        })
        .collect()
}

fn primitive_poly(v: &[ScalarPoly]) -> Vec<ScalarPoly> {
    let nonzero: Vec<&ScalarPoly> = v.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return v.to_vec();
    }
    let mono = nonzero.iter().skip(1).fold(nonzero[0].mono_content(), |acc, p| acc.gcd(&p.mono_content()));
    let v: Vec<ScalarPoly> = v.iter().map(|p| p.div_mono(&mono).unwrap()).collect();
    let coeffs: Vec<GaussianRational> = v.iter().flat_map(|p| p.terms().map(|(_, c)| c.clone())).collect();
    let (lcm, g) = integer_content(&coeffs);
    let lead = v
        .iter()
        .rev()
        .find(|p| !p.is_zero())
        .and_then(|p| p.leading().map(|(_, c)| c.normalizing_unit()))
        .unwrap_or_else(GaussianRational::one);
    let s = &GaussianRational::from_rational(num::BigRational::new(lcm, g)) * &lead;
    v.iter().map(|p| p.scale(&s)).collect()
}

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
pub fn det_bareiss<R: ExactDomain>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut a = m.to_vec();
    let mut sign_neg = false;
    let mut prev = R::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign_neg = !sign_neg;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = if v.is_zero() { R::zero() } else { v.div_exact(&prev) };
            }
        }
        prev = a[k][k].clone();
    }
    if sign_neg {
        prev.neg()
    } else {
        prev
    }
}

//! Polynomial-exponential symbols on `C^n`.
//!
//! A [`SymbolTerm`] denotes `coef * z^a * conj(z)^b * exp(z.c + conj(z).d)`
//! where `z.c = sum_k z_k c_k` is bilinear. A [`Symbol`] is a finite sum of
//! terms kept in canonical form: like terms merged, exponential parameters
//! grouped on a `1e-9` grid, negligible coefficients dropped, and terms
//! sorted deterministically. The zero symbol has no terms.
//!
//! This class is closed under products, conjugation, Wirtinger derivatives,
//! argument shifts, the Berezin transform and Toeplitz actions, which is what
//! makes every computation in this crate exact up to rounding.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::Deref;

use num_complex::Complex64;
use smallvec::SmallVec;

use crate::error::{FockError, Result};
use crate::index::MultiIndex;

/// Complex `n`-vector used for points and exponential parameters.
pub type CVec = SmallVec<[Complex64; 3]>;

/// Exponential parameters closer than this (componentwise) share a term key.
pub const EXP_GRID: f64 = 1e-9;
/// Coefficients below `COEF_FLOOR * max(1, largest coefficient)` are dropped.
pub const COEF_FLOOR: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn cvec(values: &[Complex64]) -> CVec {
    SmallVec::from_slice(values)
}

pub fn czeros(n: usize) -> CVec {
    SmallVec::from_elem(ZERO, n)
}

/// Bilinear pairing `sum_k x_k y_k` (no conjugation).
pub fn dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn conj_vec(x: &[Complex64]) -> CVec {
    x.iter().map(|v| v.conj()).collect()
}

fn vec_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymbolTerm {
    pub coef: Complex64,
    pub a: MultiIndex,
    pub b: MultiIndex,
    pub c: CVec,
    pub d: CVec,
}

impl SymbolTerm {
    pub fn new(coef: Complex64, a: MultiIndex, b: MultiIndex, c: CVec, d: CVec) -> Self {
        SymbolTerm { coef, a, b, c, d }
    }

    /// `coef * z^a * conj(z)^b` with no exponential factor.
    pub fn monomial(coef: Complex64, a: MultiIndex, b: MultiIndex) -> Self {
        let n = a.dim();
        SymbolTerm::new(coef, a, b, czeros(n), czeros(n))
    }

    pub fn constant(n: usize, coef: Complex64) -> Self {
        SymbolTerm::monomial(coef, MultiIndex::zeros(n), MultiIndex::zeros(n))
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    fn dims_consistent(&self) -> bool {
        let n = self.a.dim();
        self.b.dim() == n && self.c.len() == n && self.d.len() == n
    }

    pub fn is_holomorphic(&self) -> bool {
        self.b.is_zero() && self.d.iter().all(|v| *v == ZERO)
    }

    pub fn has_exponential(&self) -> bool {
        self.c.iter().chain(&self.d).any(|v| *v != ZERO)
    }

    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        let mut value = self.coef;
        let mut exponent = ZERO;
        for (k, &zk) in z.iter().enumerate().take(self.dim()) {
            value *= zk.powu(self.a.get(k)) * zk.conj().powu(self.b.get(k));
            exponent += zk * self.c[k] + zk.conj() * self.d[k];
        }
        value * exponent.exp()
    }

    pub fn product(&self, other: &SymbolTerm) -> SymbolTerm {
        SymbolTerm {
            coef: self.coef * other.coef,
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
            c: self.c.iter().zip(&other.c).map(|(x, y)| x + y).collect(),
            d: self.d.iter().zip(&other.d).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn conj(&self) -> SymbolTerm {
        SymbolTerm {
            coef: self.coef.conj(),
            a: self.b.clone(),
            b: self.a.clone(),
            c: conj_vec(&self.d),
            d: conj_vec(&self.c),
        }
    }
}

/// Cartesian expansion of per-coordinate factor lists into terms.
///
/// `factors[k]` lists `(a_k, b_k, weight)` choices for coordinate `k`; each
/// output term picks one entry per coordinate and multiplies the weights.
pub(crate) fn expand_coordinates(
    coef: Complex64,
    factors: &[Vec<(u32, u32, Complex64)>],
    c: &CVec,
    d: &CVec,
) -> Vec<SymbolTerm> {
    let n = factors.len();
    let mut partial: Vec<(Vec<u32>, Vec<u32>, Complex64)> = vec![(Vec::new(), Vec::new(), coef)];
    for choices in factors {
        let mut next = Vec::with_capacity(partial.len() * choices.len());
        for (a, b, w) in &partial {
            for &(ak, bk, wk) in choices {
                if wk == ZERO {
                    continue;
                }
                let mut a2 = Vec::with_capacity(n);
                a2.extend_from_slice(a);
                a2.push(ak);
                let mut b2 = Vec::with_capacity(n);
                b2.extend_from_slice(b);
                b2.push(bk);
                next.push((a2, b2, w * wk));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(a, b, w)| SymbolTerm::new(w, a.into(), b.into(), c.clone(), d.clone()))
        .collect()
}

/// Finite canonical sum of [`SymbolTerm`]s on `C^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Symbol {
    n: usize,
    terms: Vec<SymbolTerm>,
}

fn cmp_complex_slices(x: &[Complex64], y: &[Complex64]) -> Ordering {
    for (u, v) in x.iter().zip(y) {
        let o = u.re.total_cmp(&v.re).then(u.im.total_cmp(&v.im));
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

fn term_order(s: &SymbolTerm, t: &SymbolTerm) -> Ordering {
    (s.a.degree() + s.b.degree())
        .cmp(&(t.a.degree() + t.b.degree()))
        .then_with(|| s.a.cmp(&t.a))
        .then_with(|| s.b.cmp(&t.b))
        .then_with(|| cmp_complex_slices(&s.c, &t.c))
        .then_with(|| cmp_complex_slices(&s.d, &t.d))
}

fn close(x: &[Complex64], y: &[Complex64]) -> bool {
    x.iter()
        .zip(y)
        .all(|(u, v)| (u.re - v.re).abs() <= EXP_GRID && (u.im - v.im).abs() <= EXP_GRID)
}

fn snap(x: &[Complex64]) -> CVec {
    x.iter()
        .map(|v| {
            let re = if v.re.abs() <= EXP_GRID { 0.0 } else { v.re };
            let im = if v.im.abs() <= EXP_GRID { 0.0 } else { v.im };
            Complex64::new(re, im)
        })
        .collect()
}

/// Merge, group, drop and sort. Assumes every term already has dimension `n`.
fn canonicalize(n: usize, raw: Vec<SymbolTerm>) -> Symbol {
    // Representatives of exponential-parameter clusters, in first-seen order.
    let mut clusters: Vec<(CVec, CVec)> = Vec::new();
    let mut sums: HashMap<(usize, MultiIndex, MultiIndex), Complex64> = HashMap::new();
    let mut order: Vec<(usize, MultiIndex, MultiIndex)> = Vec::new();

    for term in raw {
        if term.coef == ZERO {
            continue;
        }
        let id = match clusters
            .iter()
            .position(|(c, d)| close(c, &term.c) && close(d, &term.d))
        {
            Some(id) => id,
            None => {
                clusters.push((snap(&term.c), snap(&term.d)));
                clusters.len() - 1
            }
        };
        let key = (id, term.a, term.b);
        match sums.get_mut(&key) {
            Some(acc) => *acc += term.coef,
            None => {
                order.push(key.clone());
                sums.insert(key, term.coef);
            }
        }
    }

    let largest = sums.values().map(|c| c.norm()).fold(0.0, f64::max);
    let floor = COEF_FLOOR * largest.max(1.0);
    let mut terms: Vec<SymbolTerm> = order
        .into_iter()
        .filter_map(|key| {
            let coef = sums[&key];
            if coef.norm() < floor {
                return None;
            }
            let (id, a, b) = key;
            let (c, d) = &clusters[id];
            Some(SymbolTerm::new(coef, a, b, c.clone(), d.clone()))
        })
        .collect();
    terms.sort_by(term_order);
    Symbol { n, terms }
}

impl Symbol {
    pub fn zero(n: usize) -> Self {
        Symbol {
            n,
            terms: Vec::new(),
        }
    }

    pub fn constant(n: usize, value: Complex64) -> Self {
        canonicalize(n, vec![SymbolTerm::constant(n, value)])
    }

    /// `z_k` (zero-based `k`).
    pub fn coordinate(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(FockError::IndexOutOfRange { index: k + 1, n });
        }
        Ok(Self::monomial(
            ONE,
            MultiIndex::unit(n, k),
            MultiIndex::zeros(n),
        ))
    }

    /// `conj(z_k)` (zero-based `k`).
    pub fn conj_coordinate(n: usize, k: usize) -> Result<Self> {
        Ok(Self::coordinate(n, k)?.conj())
    }

    pub fn monomial(coef: Complex64, a: MultiIndex, b: MultiIndex) -> Self {
        let n = a.dim();
        canonicalize(n, vec![SymbolTerm::monomial(coef, a, b)])
    }

    /// `exp(z.c + conj(z).d)`.
    pub fn exponential(c: &[Complex64], d: &[Complex64]) -> Result<Self> {
        let n = c.len();
        if d.len() != n {
            return Err(FockError::DimensionMismatch {
                expected: n,
                found: d.len(),
            });
        }
        let term = SymbolTerm::new(
            ONE,
            MultiIndex::zeros(n),
            MultiIndex::zeros(n),
            cvec(c),
            cvec(d),
        );
        Ok(canonicalize(n, vec![term]))
    }

    /// Canonical form of an arbitrary list of terms.
    pub fn from_terms(n: usize, raw: Vec<SymbolTerm>) -> Result<Self> {
        if n == 0 {
            return Err(FockError::ZeroDimension);
        }
        if let Some(bad) = raw.iter().find(|t| !t.dims_consistent() || t.dim() != n) {
            return Err(FockError::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        Ok(canonicalize(n, raw))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[SymbolTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|a| + |b|` among the terms; `-1` for the zero symbol.
    pub fn degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|t| (t.a.degree() + t.b.degree()) as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms.iter().all(SymbolTerm::is_holomorphic)
    }

    /// Constant part (coefficient of the term with no monomial or exponential factor).
    pub fn constant_term(&self) -> Complex64 {
        self.terms
            .iter()
            .filter(|t| t.a.is_zero() && t.b.is_zero() && !t.has_exponential())
            .map(|t| t.coef)
            .sum()
    }

    pub fn max_coef(&self) -> f64 {
        self.terms.iter().map(|t| t.coef.norm()).fold(0.0, f64::max)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coef_norm(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coef.norm_sqr())
            .fold(0.0, |acc, x| acc + x)
            .sqrt()
    }

    /// Largest exponential-parameter modulus `max(|c|, |d|)` over all terms.
    pub fn max_exp_param(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| vec_norm(&t.c).max(vec_norm(&t.d)))
            .fold(0.0, f64::max)
    }

    fn same_dim(&self, other: &Symbol) -> Result<()> {
        if self.n != other.n {
            return Err(FockError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Symbol) -> Result<Symbol> {
        self.same_dim(other)?;
        let raw = self.terms.iter().chain(&other.terms).cloned().collect();
        Ok(canonicalize(self.n, raw))
    }

    pub fn sub(&self, other: &Symbol) -> Result<Symbol> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Symbol {
        self.scale(-ONE)
    }

    pub fn scale(&self, factor: Complex64) -> Symbol {
        let raw = self
            .terms
            .iter()
            .map(|t| SymbolTerm {
                coef: t.coef * factor,
                ..t.clone()
            })
            .collect();
        canonicalize(self.n, raw)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Symbol) -> Result<Symbol> {
        self.same_dim(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                raw.push(s.product(t));
            }
        }
        Ok(canonicalize(self.n, raw))
    }

    pub fn pow(&self, exponent: u32) -> Symbol {
        let mut acc = Symbol::constant(self.n, ONE);
        for _ in 0..exponent {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> Symbol {
        canonicalize(self.n, self.terms.iter().map(SymbolTerm::conj).collect())
    }

    /// Wirtinger derivative `d/dz_k` (zero-based `k`), treating `conj(z)` as constant.
    pub fn dz(&self, k: usize) -> Result<Symbol> {
        if k >= self.n {
            return Err(FockError::IndexOutOfRange {
                index: k + 1,
                n: self.n,
            });
        }
        let mut raw = Vec::with_capacity(2 * self.terms.len());
        for t in &self.terms {
            let ak = t.a.get(k);
            if ak > 0 {
                let mut a = t.a.clone();
                a.set(k, ak - 1);
                raw.push(SymbolTerm {
                    coef: t.coef * ak as f64,
                    a,
                    ..t.clone()
                });
            }
            if t.c[k] != ZERO {
                raw.push(SymbolTerm {
                    coef: t.coef * t.c[k],
                    ..t.clone()
                });
            }
        }
        Ok(canonicalize(self.n, raw))
    }

    pub fn eval(&self, z: &[Complex64]) -> Result<Complex64> {
        if z.len() != self.n {
            return Err(FockError::DimensionMismatch {
                expected: self.n,
                found: z.len(),
            });
        }
        Ok(self.terms.iter().map(|t| t.eval(z)).sum())
    }

    /// Coefficientwise relative distance: `max |coef(self - other)| / max(1, max |coef|)`.
    pub fn residual(&self, other: &Symbol) -> Result<f64> {
        let diff = self.sub(other)?;
        let scale = self.max_coef().max(other.max_coef()).max(1.0);
        Ok(diff.max_coef() / scale)
    }

    pub fn approx_eq(&self, other: &Symbol, rel_tol: f64) -> bool {
        self.residual(other).map(|r| r <= rel_tol).unwrap_or(false)
    }
}

/// A [`Symbol`] with no anti-holomorphic dependence: every term has `b = 0`
/// and `d = 0`. Elements of the Fock space that operators act on live here.
#[derive(Clone, Debug, PartialEq)]
pub struct HoloSymbol(Symbol);

impl HoloSymbol {
    pub fn new(symbol: Symbol) -> Result<Self> {
        if symbol.is_holomorphic() {
            Ok(HoloSymbol(symbol))
        } else {
            Err(FockError::NotHolomorphic)
        }
    }

    pub(crate) fn new_unchecked(symbol: Symbol) -> Self {
        debug_assert!(symbol.is_holomorphic());
        HoloSymbol(symbol)
    }

    pub(crate) fn from_raw(n: usize, raw: Vec<SymbolTerm>) -> Self {
        HoloSymbol::new_unchecked(canonicalize(n, raw))
    }

    pub fn zero(n: usize) -> Self {
        HoloSymbol(Symbol::zero(n))
    }

    pub fn constant(n: usize, value: Complex64) -> Self {
        HoloSymbol(Symbol::constant(n, value))
    }

    pub fn monomial(coef: Complex64, a: MultiIndex) -> Self {
        let n = a.dim();
        HoloSymbol(Symbol::monomial(coef, a, MultiIndex::zeros(n)))
    }

    /// `exp(z.c)`.
    pub fn exponential(c: &[Complex64]) -> Self {
        HoloSymbol(Symbol::exponential(c, &czeros(c.len())).expect("matching lengths"))
    }

    /// Reproducing kernel `K_w(z) = exp(z.conj(w))`.
    pub fn kernel(w: &[Complex64]) -> Self {
        Self::exponential(&conj_vec(w))
    }

    pub fn as_symbol(&self) -> &Symbol {
        &self.0
    }

    pub fn into_symbol(self) -> Symbol {
        self.0
    }

    pub fn add(&self, other: &HoloSymbol) -> Result<HoloSymbol> {
        Ok(HoloSymbol(self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &HoloSymbol) -> Result<HoloSymbol> {
        Ok(HoloSymbol(self.0.sub(&other.0)?))
    }

    pub fn mul(&self, other: &HoloSymbol) -> Result<HoloSymbol> {
        Ok(HoloSymbol(self.0.mul(&other.0)?))
    }

    pub fn scale(&self, factor: Complex64) -> HoloSymbol {
        HoloSymbol(self.0.scale(factor))
    }

    pub fn dz(&self, k: usize) -> Result<HoloSymbol> {
        Ok(HoloSymbol(self.0.dz(k)?))
    }

    /// Reflection `f*(z) = conj(f(conj(z)))`: conjugates coefficients and
    /// exponential parameters.
    pub fn reflect(&self) -> HoloSymbol {
        let raw = self
            .0
            .terms
            .iter()
            .map(|t| SymbolTerm {
                coef: t.coef.conj(),
                c: conj_vec(&t.c),
                ..t.clone()
            })
            .collect();
        HoloSymbol::from_raw(self.0.n, raw)
    }

    /// `z -> f(z - eta)`.
    pub fn shift(&self, eta: &[Complex64]) -> Result<HoloSymbol> {
        let n = self.0.n;
        if eta.len() != n {
            return Err(FockError::DimensionMismatch {
                expected: n,
                found: eta.len(),
            });
        }
        let mut raw = Vec::new();
        for t in &self.0.terms {
            raw.extend(shift_term(t, eta));
        }
        Ok(HoloSymbol::from_raw(n, raw))
    }
}

/// `(z - eta)^a exp((z - eta).c)` expanded; `t` must be holomorphic.
pub(crate) fn shift_term(t: &SymbolTerm, eta: &[Complex64]) -> Vec<SymbolTerm> {
    let coef = t.coef * (-dot(eta, &t.c)).exp();
    let factors: Vec<Vec<(u32, u32, Complex64)>> = (0..t.dim())
        .map(|k| {
            let ak = t.a.get(k);
            (0..=ak)
                .map(|p| {
                    let w = crate::index::binomial(ak, p) as f64 * (-eta[k]).powu(ak - p);
                    (p, 0, w)
                })
                .collect()
        })
        .collect();
    expand_coordinates(coef, &factors, &t.c, &t.d)
}

impl Deref for HoloSymbol {
    type Target = Symbol;

    fn deref(&self) -> &Symbol {
        &self.0
    }
}

impl From<HoloSymbol> for Symbol {
    fn from(h: HoloSymbol) -> Symbol {
        h.0
    }
}

impl TryFrom<Symbol> for HoloSymbol {
    type Error = FockError;

    fn try_from(s: Symbol) -> Result<Self> {
        HoloSymbol::new(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(v)
    }

    fn z(n: usize, k: usize) -> Symbol {
        Symbol::coordinate(n, k).unwrap()
    }

    #[test]
    fn canon_cancels_and_merges() {
        let t = SymbolTerm::monomial(ONE, mi(&[1]), mi(&[0]));
        let s = Symbol::from_terms(1, vec![t.clone(), SymbolTerm { coef: -ONE, ..t }]).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.degree(), -1);
        assert!(s.coef_norm().is_sign_positive());

        let t = SymbolTerm::monomial(ONE, mi(&[1, 0]), mi(&[0, 1]));
        let s = Symbol::from_terms(
            2,
            vec![
                t.clone(),
                SymbolTerm {
                    coef: c(2.0, 0.0),
                    ..t
                },
            ],
        )
        .unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.terms()[0].coef, c(3.0, 0.0));
    }

    #[test]
    fn canon_drops_below_floor() {
        let s = Symbol::from_terms(
            2,
            vec![
                SymbolTerm::monomial(c(1e-15, 0.0), mi(&[1, 0]), mi(&[0, 0])),
                SymbolTerm::monomial(ONE, mi(&[0, 1]), mi(&[0, 0])),
            ],
        )
        .unwrap();
        assert_eq!(s, z(2, 1));
    }

    #[test]
    fn canon_rejects_mixed_dimensions() {
        let err = Symbol::from_terms(2, vec![SymbolTerm::monomial(ONE, mi(&[1]), mi(&[0]))]);
        assert!(matches!(err, Err(FockError::DimensionMismatch { .. })));
    }

    #[test]
    fn exponential_parameters_regroup() {
        let cc = [c(0.3, 0.1)];
        let dd = [c(0.7, -0.2)];
        let e1 = HoloSymbol::exponential(&cc);
        let e2 = HoloSymbol::exponential(&dd);
        let inv = HoloSymbol::exponential(&[-dd[0]]);
        let back = e1.mul(&e2).unwrap().mul(&inv).unwrap();
        let s = back.add(&e1.scale(-ONE)).unwrap();
        assert!(s.is_zero(), "{s:?}");
    }

    #[test]
    fn mul_examples() {
        let zz = z(1, 0).mul(&z(1, 0).conj()).unwrap();
        assert_eq!(zz, Symbol::monomial(ONE, mi(&[1]), mi(&[1])));

        let cc = [c(0.5, 0.25), c(-1.0, 0.0)];
        let cp = [c(0.25, -0.5), c(2.0, 1.0)];
        let sum: Vec<_> = cc.iter().zip(&cp).map(|(x, y)| x + y).collect();
        let prod = HoloSymbol::exponential(&cc)
            .mul(&HoloSymbol::exponential(&cp))
            .unwrap();
        assert_eq!(prod, HoloSymbol::exponential(&sum));

        let one = Symbol::constant(1, ONE);
        let lhs = one
            .add(&z(1, 0))
            .unwrap()
            .mul(&one.sub(&z(1, 0)).unwrap())
            .unwrap();
        let rhs = one.sub(&z(1, 0).pow(2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conj_examples() {
        let a = mi(&[2, 1]);
        let cc = [c(0.1, 0.2), c(0.3, -0.4)];
        let s = HoloSymbol::monomial(ONE, a.clone())
            .mul(&HoloSymbol::exponential(&cc))
            .unwrap();
        let conj = s.conj();
        assert_eq!(conj.terms()[0].b, a);
        assert_eq!(conj.terms()[0].d.as_slice(), conj_vec(&cc).as_slice());
        assert!(conj.terms()[0].a.is_zero());

        let i = Symbol::constant(1, c(0.0, 1.0));
        assert_eq!(i.conj(), Symbol::constant(1, c(0.0, -1.0)));
    }

    #[test]
    fn reflect_examples() {
        let f = HoloSymbol::new(z(2, 0).scale(c(0.0, 1.0))).unwrap();
        assert_eq!(f.reflect().as_symbol(), &z(2, 0).scale(c(0.0, -1.0)));
        let cc = [c(0.2, 0.9)];
        assert_eq!(
            HoloSymbol::exponential(&cc).reflect(),
            HoloSymbol::exponential(&[cc[0].conj()])
        );
        assert!(matches!(
            HoloSymbol::new(z(1, 0).conj()),
            Err(FockError::NotHolomorphic)
        ));
    }

    #[test]
    fn shift_examples() {
        let f = HoloSymbol::new(z(1, 0)).unwrap();
        let shifted = f.shift(&[ONE]).unwrap();
        let expected = z(1, 0).sub(&Symbol::constant(1, ONE)).unwrap();
        assert_eq!(shifted.as_symbol(), &expected);

        let cc = [c(0.4, -0.3), c(1.0, 0.5)];
        let eta = [c(-0.7, 0.2), c(0.1, 0.1)];
        let shifted = HoloSymbol::exponential(&cc).shift(&eta).unwrap();
        let expected = HoloSymbol::exponential(&cc).scale((-dot(&eta, &cc)).exp());
        assert!(shifted.approx_eq(&expected, 1e-14));

        assert!(matches!(
            f.shift(&[ONE, ONE]),
            Err(FockError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dz_examples() {
        let z3 = z(1, 0).pow(3);
        assert_eq!(z3.dz(0).unwrap(), z(1, 0).pow(2).scale(c(3.0, 0.0)));
        let cc = [c(0.0, 1.0), c(2.0, 0.0)];
        let e = HoloSymbol::exponential(&cc);
        assert_eq!(e.dz(1).unwrap(), e.scale(cc[1]));
        assert!(z(1, 0).conj().dz(0).unwrap().is_zero());
        assert!(matches!(
            z(1, 0).dz(1),
            Err(FockError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn eval_examples() {
        let zz = z(1, 0).mul(&z(1, 0).conj()).unwrap();
        let v = zz.eval(&[c(0.0, 2.0)]).unwrap();
        assert!((v - c(4.0, 0.0)).norm() < 1e-15);

        let e = HoloSymbol::exponential(&[c(0.3, 0.2), c(-1.0, 0.0)]);
        assert_eq!(e.eval(&[ZERO, ZERO]).unwrap(), ONE);

        let w = [c(0.5, -0.25), c(-0.1, 0.3)];
        let k = HoloSymbol::kernel(&w);
        let norm2: f64 = w.iter().map(|x| x.norm_sqr()).sum();
        assert!((k.eval(&w).unwrap() - c(norm2.exp(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn degree_and_constant_term() {
        let s = z(2, 0)
            .mul(&z(2, 1).conj())
            .unwrap()
            .add(&Symbol::constant(2, c(2.0, -1.0)))
            .unwrap();
        assert_eq!(s.degree(), 2);
        assert_eq!(s.constant_term(), c(2.0, -1.0));
    }
}

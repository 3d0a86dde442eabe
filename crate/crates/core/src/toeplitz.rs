//! Toeplitz operators `T_phi = P M_phi` acting on the holomorphic class.
//!
//! For a symbol term `coef z^a conj(z)^b exp(z.c + conj(z).d)` and a
//! holomorphic `u`, projecting against the reproducing kernel gives
//!
//! ```text
//! T u (z) = coef (d^b v)(z + d),   v(w) = w^a exp(w.c) u(w)
//! ```
//!
//! so anti-holomorphic monomials act as derivatives and anti-holomorphic
//! exponentials as argument shifts. Both sides of every operator identity map
//! the class to itself, so equality is checked exactly on monomials rather
//! than through truncated matrices.
//!
//! Symbols here are generally unbounded; what is computed is the densely
//! defined action on the invariant class, with no claim about closures.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{FockError, Result};
use crate::gaussian::factorial_f64;
use crate::index::{binomial, mi_enumerate, MultiIndex};
use crate::sharp::{falling, sharp};
use crate::symbol::{expand_coordinates, CVec, HoloSymbol, Symbol, SymbolTerm};

pub const DEFAULT_DEGREE: u32 = 6;
pub const DEFAULT_TOL: f64 = 1e-9;

/// `T_{phi_1} o ... o T_{phi_m}`; the last symbol acts first.
#[derive(Clone, Debug, PartialEq)]
pub struct OpChain {
    n: usize,
    symbols: Vec<Symbol>,
}

impl OpChain {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        let n = symbols.first().ok_or(FockError::EmptyChain)?.dim();
        if let Some(bad) = symbols.iter().find(|s| s.dim() != n) {
            return Err(FockError::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        Ok(OpChain { n, symbols })
    }

    pub fn single(symbol: Symbol) -> Self {
        OpChain {
            n: symbol.dim(),
            symbols: vec![symbol],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn apply(&self, u: &HoloSymbol) -> Result<HoloSymbol> {
        self.symbols
            .iter()
            .rev()
            .try_fold(u.clone(), |acc, phi| toeplitz_apply(phi, &acc))
    }
}

/// `coef (d^b [z^A exp(z.C)])(z + d)`, expanded per coordinate.
fn apply_term(
    coef: Complex64,
    a: &MultiIndex,
    c: &CVec,
    b: &MultiIndex,
    d: &CVec,
) -> Vec<SymbolTerm> {
    let n = a.dim();
    let scale = coef * crate::symbol::dot(c, d).exp();
    let factors: Vec<Vec<(u32, u32, Complex64)>> = (0..n)
        .map(|k| {
            let (ak, bk, ck, dk) = (a.get(k), b.get(k), c[k], d[k]);
            let mut acc: BTreeMap<u32, Complex64> = BTreeMap::new();
            for j in 0..=bk.min(ak) {
                let w = binomial(bk, j) as f64 * falling(ak, j) * ck.powu(bk - j);
                let e = ak - j;
                for p in 0..=e {
                    *acc.entry(p).or_default() += w * binomial(e, p) as f64 * dk.powu(e - p);
                }
            }
            acc.into_iter().map(|(p, w)| (p, 0, w)).collect()
        })
        .collect();
    let zero: CVec = crate::symbol::czeros(n);
    expand_coordinates(scale, &factors, c, &zero)
}

pub fn toeplitz_apply(phi: &Symbol, u: &HoloSymbol) -> Result<HoloSymbol> {
    let n = phi.dim();
    if u.dim() != n {
        return Err(FockError::DimensionMismatch {
            expected: n,
            found: u.dim(),
        });
    }
    let mut raw = Vec::new();
    for pt in phi.terms() {
        for ut in u.terms() {
            let a = pt.a.add(&ut.a);
            let c: CVec = pt.c.iter().zip(&ut.c).map(|(x, y)| x + y).collect();
            raw.extend(apply_term(pt.coef * ut.coef, &a, &c, &pt.b, &pt.d));
        }
    }
    Ok(HoloSymbol::from_raw(n, raw))
}

/// Normalized monomial `z^alpha / sqrt(alpha!)`.
pub fn basis_vector(alpha: &MultiIndex) -> HoloSymbol {
    let norm: f64 = alpha
        .as_slice()
        .iter()
        .map(|&e| factorial_f64(e))
        .product::<f64>()
        .sqrt();
    HoloSymbol::monomial(Complex64::new(1.0 / norm, 0.0), alpha.clone())
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasisReport {
    pub max_residual: f64,
    pub worst: MultiIndex,
    pub pass: bool,
    /// Residual per basis element, in canonical order.
    pub residuals: Vec<(MultiIndex, f64)>,
}

/// Compare two chains on every normalized monomial with `|alpha| <= degree`.
///
/// The residual at `alpha` is `|A e - B e| / max(1, |A e|)` in the
/// coefficient norm.
pub fn op_equal_on_basis(a: &OpChain, b: &OpChain, degree: u32, tol: f64) -> Result<BasisReport> {
    if a.dim() != b.dim() {
        return Err(FockError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let basis = mi_enumerate(a.dim(), degree);
    let residuals = basis
        .par_iter()
        .map(|alpha| {
            let e = basis_vector(alpha);
            let lhs = a.apply(&e)?;
            let rhs = b.apply(&e)?;
            let diff = lhs.sub(&rhs)?;
            let r = diff.coef_norm() / lhs.coef_norm().max(1.0);
            Ok((alpha.clone(), if r.is_nan() { f64::INFINITY } else { r }))
        })
        .collect::<Result<Vec<_>>>()?;
    let (worst, max_residual) =
        residuals
            .iter()
            .fold((MultiIndex::zeros(a.dim()), 0.0), |(wa, wr), (alpha, r)| {
                if *r > wr {
                    (alpha.clone(), *r)
                } else {
                    (wa, wr)
                }
            });
    Ok(BasisReport {
        max_residual,
        worst,
        pass: max_residual <= tol,
        residuals,
    })
}

/// Largest coefficient norm of `chain e_alpha` over `|alpha| <= degree`.
pub fn max_image_norm(chain: &OpChain, degree: u32) -> Result<f64> {
    let basis = mi_enumerate(chain.dim(), degree);
    let norms = basis
        .par_iter()
        .map(|alpha| Ok(chain.apply(&basis_vector(alpha))?.coef_norm()))
        .collect::<Result<Vec<f64>>>()?;
    Ok(norms.into_iter().fold(0.0, f64::max))
}

/// `f + conj(g)`.
pub fn pluriharmonic(f: &HoloSymbol, g: &HoloSymbol) -> Result<Symbol> {
    f.as_symbol().add(&g.conj())
}

fn check_dims(parts: [&HoloSymbol; 4]) -> Result<usize> {
    let n = parts[0].dim();
    for p in &parts[1..] {
        if p.dim() != n {
            return Err(FockError::DimensionMismatch {
                expected: n,
                found: p.dim(),
            });
        }
    }
    Ok(n)
}

/// The symbol `h` with `T_{f + conj g} T_{u + conj v} = T_h`:
/// `u conj(g) + f u + conj(g) conj(v) + v*(conj(z) - d) f`.
pub fn brown_halmos_h(
    f: &HoloSymbol,
    g: &HoloSymbol,
    u: &HoloSymbol,
    v: &HoloSymbol,
) -> Result<Symbol> {
    check_dims([f, g, u, v])?;
    let gbar = g.conj();
    let terms = [
        u.as_symbol().mul(&gbar)?,
        f.as_symbol().mul(u.as_symbol())?,
        gbar.mul(&v.conj())?,
        sharp(f, v)?,
    ];
    let n = f.dim();
    terms.iter().try_fold(Symbol::zero(n), |acc, t| acc.add(t))
}

/// Symbol of `[T_{f + conj g}, T_{u + conj v}]`:
/// `(u conj(g) - f conj(v)) - (g*(conj(z) - d) u - v*(conj(z) - d) f)`.
/// Zero exactly when the two operators commute.
pub fn commutator_defect(
    f: &HoloSymbol,
    g: &HoloSymbol,
    u: &HoloSymbol,
    v: &HoloSymbol,
) -> Result<Symbol> {
    check_dims([f, g, u, v])?;
    let product_part = u
        .as_symbol()
        .mul(&g.conj())?
        .sub(&f.as_symbol().mul(&v.conj())?)?;
    let sharp_part = sharp(u, g)?.sub(&sharp(f, v)?)?;
    product_part.sub(&sharp_part)
}

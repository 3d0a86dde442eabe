//! Closed-form Gaussian moments against the normalized measure
//! `dmu(z) = pi^-n exp(-|z|^2) dV(z)`, and the Fock space inner product.
//!
//! The moment identity
//!
//! ```text
//! int z^a conj(z)^b exp(z.lambda + conj(z).mu) dmu(z)
//!     = d_lambda^a d_mu^b exp(lambda.mu)
//!     = exp(lambda.mu) prod_k sum_j C(a_k,j) C(b_k,j) j! mu_k^(a_k-j) lambda_k^(b_k-j)
//! ```
//!
//! is exact for all complex parameters. `lambda.mu` is bilinear; callers
//! conjugate where the integrand calls for it.

use num_complex::Complex64;

use crate::error::{FockError, Result};
use crate::index::{binomial, MultiIndex, EXPONENT_CAP};
use crate::symbol::{conj_vec, dot, CVec, HoloSymbol, Symbol};

#[derive(Clone, Debug, PartialEq)]
pub struct MomentQuery {
    pub a: MultiIndex,
    pub b: MultiIndex,
    pub lambda: CVec,
    pub mu: CVec,
}

impl MomentQuery {
    pub fn new(a: MultiIndex, b: MultiIndex, lambda: CVec, mu: CVec) -> Result<Self> {
        let n = a.dim();
        for found in [b.dim(), lambda.len(), mu.len()] {
            if found != n {
                return Err(FockError::DimensionMismatch { expected: n, found });
            }
        }
        Ok(MomentQuery { a, b, lambda, mu })
    }
}

pub(crate) fn factorial_f64(j: u32) -> f64 {
    (1..=j).map(f64::from).product()
}

/// Coefficient `C(a,j) C(b,j) j!` shared by moments and Berezin transforms.
pub(crate) fn pairing_weight(a: u32, b: u32, j: u32) -> f64 {
    binomial(a, j) as f64 * binomial(b, j) as f64 * factorial_f64(j)
}

pub fn gaussian_moment(q: &MomentQuery) -> Result<Complex64> {
    for &e in q.a.as_slice().iter().chain(q.b.as_slice()) {
        if e > EXPONENT_CAP {
            return Err(FockError::ExponentCap {
                exponent: e,
                cap: EXPONENT_CAP,
            });
        }
    }
    let mut value = dot(&q.lambda, &q.mu).exp();
    for k in 0..q.a.dim() {
        let (ak, bk) = (q.a.get(k), q.b.get(k));
        let (lk, mk) = (q.lambda[k], q.mu[k]);
        let factor: Complex64 = (0..=ak.min(bk))
            .map(|j| pairing_weight(ak, bk, j) * mk.powu(ak - j) * lk.powu(bk - j))
            .sum();
        value *= factor;
    }
    Ok(value)
}

/// `int s dmu` for any symbol, as a sum of closed-form moments.
pub fn integrate(s: &Symbol) -> Result<Complex64> {
    s.terms()
        .iter()
        .try_fold(Complex64::new(0.0, 0.0), |acc, t| {
            let q = MomentQuery::new(t.a.clone(), t.b.clone(), t.c.clone(), t.d.clone())?;
            Ok(acc + t.coef * gaussian_moment(&q)?)
        })
}

/// `<f, g> = int f conj(g) dmu`.
pub fn fock_inner(f: &HoloSymbol, g: &HoloSymbol) -> Result<Complex64> {
    if f.dim() != g.dim() {
        return Err(FockError::DimensionMismatch {
            expected: f.dim(),
            found: g.dim(),
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for s in f.terms() {
        for t in g.terms() {
            let q = MomentQuery::new(s.a.clone(), t.a.clone(), s.c.clone(), conj_vec(&t.c))?;
            acc += s.coef * t.coef.conj() * gaussian_moment(&q)?;
        }
    }
    Ok(acc)
}

/// Fock space norm `sqrt(<f, f>)`.
pub fn fock_norm(f: &HoloSymbol) -> Result<f64> {
    Ok(fock_inner(f, f)?.re.max(0.0).sqrt())
}

//! The Berezin transform `B[s](zeta) = <s k_zeta, k_zeta>` as an exact map
//! from symbols to symbols.
//!
//! For a term `coef z^a conj(z)^b exp(z.c + conj(z).d)` the transform is
//!
//! ```text
//! coef exp(c.d) prod_k [ sum_j C(a_k,j) C(b_k,j) j! (d_k+zeta_k)^(a_k-j) (c_k+conj(zeta_k))^(b_k-j) ]
//!      * exp(zeta.c + conj(zeta).d)
//! ```
//!
//! so the output stays in the polynomial-exponential class with the same
//! exponential parameters. The output uses `z` in the role of `zeta`.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{FockError, Result};
use crate::gaussian::pairing_weight;
use crate::index::binomial;
use crate::symbol::{dot, expand_coordinates, HoloSymbol, Symbol, SymbolTerm};
use crate::toeplitz::OpChain;

fn berezin_term(t: &SymbolTerm) -> Vec<SymbolTerm> {
    let coef = t.coef * dot(&t.c, &t.d).exp();
    let factors: Vec<Vec<(u32, u32, Complex64)>> = (0..t.dim())
        .map(|k| {
            let (ak, bk) = (t.a.get(k), t.b.get(k));
            let (ck, dk) = (t.c[k], t.d[k]);
            let mut acc: BTreeMap<(u32, u32), Complex64> = BTreeMap::new();
            for j in 0..=ak.min(bk) {
                let w = pairing_weight(ak, bk, j);
                let (ra, rb) = (ak - j, bk - j);
                for p in 0..=ra {
                    let wp = w * binomial(ra, p) as f64 * dk.powu(ra - p);
                    for q in 0..=rb {
                        let wq = wp * binomial(rb, q) as f64 * ck.powu(rb - q);
                        *acc.entry((p, q)).or_default() += wq;
                    }
                }
            }
            acc.into_iter().map(|((p, q), w)| (p, q, w)).collect()
        })
        .collect();
    expand_coordinates(coef, &factors, &t.c, &t.d)
}

pub fn berezin(s: &Symbol) -> Symbol {
    let raw = s.terms().iter().flat_map(berezin_term).collect();
    Symbol::from_terms(s.dim(), raw).expect("Berezin transform preserves dimension")
}

/// Berezin transform of the operator `T_{phi_1} ... T_{phi_m}` at `zeta`:
/// `exp(-|zeta|^2) (chain K_zeta)(zeta)`.
pub fn operator_berezin(chain: &OpChain, zeta: &[Complex64]) -> Result<Complex64> {
    let n = chain.dim();
    if zeta.len() != n {
        return Err(FockError::DimensionMismatch {
            expected: n,
            found: zeta.len(),
        });
    }
    let kernel = HoloSymbol::kernel(zeta);
    let image = chain.apply(&kernel)?;
    let norm2: f64 = zeta.iter().map(|v| v.norm_sqr()).sum();
    Ok((-norm2).exp() * image.eval(zeta)?)
}

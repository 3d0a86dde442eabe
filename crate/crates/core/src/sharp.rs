//! The sharp product `g*(conj(z) - d) f`: the unique symbol in the class
//! whose Berezin transform is `f conj(g)`, and the Toeplitz symbol of
//! `T_f T_conj(g)`.
//!
//! For a `g` term `gamma z^i exp(z.r)` the reflected operator is
//! `conj(gamma) (conj(z) - d)^i exp((conj(z) - d).conj(r))`. The exponential
//! factor multiplies by `exp(conj(z).conj(r))` and shifts `f` by `conj(r)`;
//! the polynomial factor expands as
//! `sum_{l <= i} C(i,l) conj(z)^l (-d)^(i-l)` since `conj(z_k)` and `d_j`
//! commute under the Wirtinger convention.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{FockError, Result};
use crate::gaussian::factorial_f64;
use crate::index::binomial;
use crate::symbol::{conj_vec, expand_coordinates, shift_term, HoloSymbol, Symbol};

/// `a! / (a - j)!`
pub(crate) fn falling(a: u32, j: u32) -> f64 {
    factorial_f64(a) / factorial_f64(a - j)
}

/// Per-coordinate expansion of `(conj(z) - d)^i [z^a exp(c z)]`.
fn reflected_factor(i: u32, a: u32, c: Complex64) -> Vec<(u32, u32, Complex64)> {
    let mut acc: BTreeMap<(u32, u32), Complex64> = BTreeMap::new();
    for l in 0..=i {
        let m = i - l;
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        let w = sign * binomial(i, l) as f64;
        // d^m (z^a e^{cz}) = sum_j C(m,j) a!/(a-j)! c^(m-j) z^(a-j)
        for j in 0..=m.min(a) {
            let wj = w * binomial(m, j) as f64 * falling(a, j) * c.powu(m - j);
            *acc.entry((a - j, l)).or_default() += wj;
        }
    }
    acc.into_iter().map(|((p, q), w)| (p, q, w)).collect()
}

pub fn sharp(f: &HoloSymbol, g: &HoloSymbol) -> Result<Symbol> {
    let n = f.dim();
    if g.dim() != n {
        return Err(FockError::DimensionMismatch {
            expected: n,
            found: g.dim(),
        });
    }
    let mut raw = Vec::new();
    for gt in g.terms() {
        let shift = conj_vec(&gt.c);
        let gamma = gt.coef.conj();
        for ft in f.terms() {
            for st in shift_term(ft, &shift) {
                let factors: Vec<_> = (0..n)
                    .map(|k| reflected_factor(gt.a.get(k), st.a.get(k), st.c[k]))
                    .collect();
                raw.extend(expand_coordinates(gamma * st.coef, &factors, &st.c, &shift));
            }
        }
    }
    Symbol::from_terms(n, raw)
}

/// `sharp` for inputs still typed as [`Symbol`]; rejects non-holomorphic ones.
pub fn sharp_symbols(f: &Symbol, g: &Symbol) -> Result<Symbol> {
    let f = HoloSymbol::new(f.clone())?;
    let g = HoloSymbol::new(g.clone())?;
    sharp(&f, &g)
}

//! Exact Toeplitz operator calculus on the Fock space `F^2(C^n)`.
//!
//! Symbols are finite sums of `coef z^a conj(z)^b exp(z.c + conj(z).d)`.
//! On this class the Berezin transform, the sharp product
//! `g*(conj(z) - d) f`, and Toeplitz actions on holomorphic functions all
//! have closed forms, so operator identities can be checked by exact
//! expansion. The [`oracle`] module supplies independent quadrature and
//! Fourier checks.

pub mod berezin;
pub mod dsl;
pub mod error;
pub mod gaussian;
pub mod index;
pub mod oracle;
pub mod sample;
pub mod sharp;
pub mod symbol;
pub mod toeplitz;

pub use berezin::{berezin, operator_berezin};
pub use dsl::{format_symbol, parse_complex, parse_symbol, ParseError, ParseErrorKind};
pub use error::{FockError, Result};
pub use gaussian::{fock_inner, fock_norm, gaussian_moment, integrate, MomentQuery};
pub use index::{mi_binomial, mi_enumerate, mi_factorial, MultiIndex};
pub use oracle::{lemma_l1_check, quad_integral};
pub use sharp::{sharp, sharp_symbols};
pub use symbol::{CVec, HoloSymbol, Symbol, SymbolTerm};
pub use toeplitz::{
    brown_halmos_h, commutator_defect, op_equal_on_basis, pluriharmonic, toeplitz_apply,
    BasisReport, OpChain,
};

pub use num_complex::Complex64;

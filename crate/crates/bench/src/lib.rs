//! Fixtures for the criterion benchmarks in `benches/calculus.rs`.

use fockcalc::sample::{SymbolSampler, DEFAULT_SEED};
use fockcalc::{pluriharmonic, HoloSymbol, OpChain, Symbol};

/// Holomorphic pairs of degree at most 4 with optional exponential factors.
pub fn holomorphic_pairs(n: usize, count: usize) -> Vec<(HoloSymbol, HoloSymbol)> {
    let mut smp = SymbolSampler::new(DEFAULT_SEED, n, 4);
    (0..count)
        .map(|_| (smp.holomorphic(), smp.holomorphic()))
        .collect()
}

pub fn general_symbols(n: usize, count: usize) -> Vec<Symbol> {
    let mut smp = SymbolSampler::new(DEFAULT_SEED, n, 4).with_max_terms(6);
    (0..count).map(|_| smp.symbol()).collect()
}

/// Product chain `[f + conj g, u + conj v]` of degree-3 pluriharmonic symbols.
pub fn pluriharmonic_chain(n: usize) -> OpChain {
    let mut smp = SymbolSampler::new(DEFAULT_SEED, n, 3);
    let phi = pluriharmonic(&smp.holomorphic(), &smp.holomorphic()).expect("same dimension");
    let psi = pluriharmonic(&smp.holomorphic(), &smp.holomorphic()).expect("same dimension");
    OpChain::new(vec![phi, psi]).expect("nonempty chain")
}

//! Seeded random symbols for property checks and verification suites.
//!
//! Polynomial parts have a few terms of degree at most `max_degree` with
//! coefficients uniform on the unit disc; an optional exponential factor
//! `exp(z.c)` has `|c| <= exp_bound`. The generator is ChaCha8, so streams
//! are identical across platforms for a given seed.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::index::{mi_enumerate, MultiIndex};
use crate::symbol::{CVec, HoloSymbol, Symbol, SymbolTerm};

pub const DEFAULT_SEED: u64 = 0xF0CC;

#[derive(Clone, Debug)]
pub struct SymbolSampler {
    rng: ChaCha8Rng,
    n: usize,
    basis: Vec<MultiIndex>,
    pub max_terms: usize,
    pub exp_probability: f64,
    pub exp_bound: f64,
}

impl SymbolSampler {
    pub fn new(seed: u64, n: usize, max_degree: u32) -> Self {
        SymbolSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            n,
            basis: mi_enumerate(n, max_degree),
            max_terms: 3,
            exp_probability: 0.5,
            exp_bound: 1.0,
        }
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms.max(1);
        self
    }

    pub fn with_exp_probability(mut self, p: f64) -> Self {
        self.exp_probability = p;
        self
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform on the closed unit disc.
    pub fn unit_disc(&mut self) -> Complex64 {
        let r = self.rng.gen::<f64>().sqrt();
        Complex64::from_polar(r, TAU * self.rng.gen::<f64>())
    }

    /// Random vector with Euclidean norm at most `bound`.
    pub fn vector(&mut self, bound: f64) -> CVec {
        let raw: CVec = (0..self.n).map(|_| self.unit_disc()).collect();
        let norm = raw.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        let radius = bound * self.rng.gen::<f64>();
        if norm == 0.0 {
            return raw;
        }
        raw.iter().map(|v| v * (radius / norm)).collect()
    }

    fn monomial(&mut self) -> MultiIndex {
        let idx = self.rng.gen_range(0..self.basis.len());
        self.basis[idx].clone()
    }

    /// Nonzero holomorphic polynomial.
    pub fn polynomial(&mut self) -> HoloSymbol {
        loop {
            let count = self.rng.gen_range(1..=self.max_terms);
            let mut p = HoloSymbol::zero(self.n);
            for _ in 0..count {
                let a = self.monomial();
                let coef = self.unit_disc();
                p = p
                    .add(&HoloSymbol::monomial(coef, a))
                    .expect("same dimension");
            }
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Nonzero polynomial, times `exp(z.c)` with probability `exp_probability`.
    pub fn holomorphic(&mut self) -> HoloSymbol {
        let p = self.polynomial();
        if self.rng.gen::<f64>() < self.exp_probability {
            let c = self.vector(self.exp_bound);
            p.mul(&HoloSymbol::exponential(&c)).expect("same dimension")
        } else {
            p
        }
    }

    /// Nonzero general symbol: terms `z^a conj(z)^b`, sometimes with a shared
    /// exponential `exp(z.c + conj(z).d)`.
    pub fn symbol(&mut self) -> Symbol {
        loop {
            let count = self.rng.gen_range(1..=self.max_terms);
            let with_exp = self.rng.gen::<f64>() < self.exp_probability;
            let (c, d) = if with_exp {
                (self.vector(self.exp_bound), self.vector(self.exp_bound))
            } else {
                (self.vector(0.0), self.vector(0.0))
            };
            let raw: Vec<SymbolTerm> = (0..count)
                .map(|_| {
                    let a = self.monomial();
                    let b = self.monomial();
                    let coef = self.unit_disc();
                    SymbolTerm::new(coef, a, b, c.clone(), d.clone())
                })
                .collect();
            let s = Symbol::from_terms(self.n, raw).expect("consistent dimensions");
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Random point with each coordinate in the disc of the given radius.
    pub fn point(&mut self, radius: f64) -> CVec {
        (0..self.n).map(|_| self.unit_disc() * radius).collect()
    }
}

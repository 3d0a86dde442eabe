use std::f64::consts::TAU;

use fockcalc::sample::{SymbolSampler, DEFAULT_SEED};
use fockcalc::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ones(n: usize) -> Vec<Complex64> {
    vec![c(1.0, 0.0); n]
}

#[test]
fn exponential_pair_collapses_to_one_symbol() {
    for n in 1..=3 {
        let f = HoloSymbol::exponential(&ones(n));
        let v = f.shift(&vec![c(-1.0, 0.0); n]).unwrap();
        let h = Symbol::exponential(&ones(n), &ones(n)).unwrap();
        assert!(sharp(&f, &v).unwrap().approx_eq(&h, 1e-12));
        assert!(
            brown_halmos_h(&f, &HoloSymbol::zero(n), &HoloSymbol::zero(n), &v)
                .unwrap()
                .approx_eq(&h, 1e-12)
        );

        let chain = OpChain::new(vec![f.as_symbol().clone(), v.conj()]).unwrap();
        let report = op_equal_on_basis(&chain, &OpChain::single(h.clone()), 6, 1e-9).unwrap();
        assert!(report.pass, "n = {n}: {}", report.max_residual);

        let naive = f.as_symbol().mul(&v.conj()).unwrap();
        let e_n = (n as f64).exp();
        let gap = naive.sub(&h).unwrap().coef_norm();
        assert!(gap >= (e_n - 1.0) / e_n * h.coef_norm());
        assert!((gap - (e_n - 1.0)).abs() < 1e-12);
    }
}

#[test]
fn antiholomorphic_times_exponential_chain_law() {
    for n in 1..=2 {
        let mut smp = SymbolSampler::new(DEFAULT_SEED, n, 3);
        let shift = ones(n);
        let f = HoloSymbol::exponential(&shift);
        for _ in 0..10 {
            let (h, v, g) = (smp.polynomial(), smp.polynomial(), smp.polynomial());
            let left = h.conj().mul(f.as_symbol()).unwrap();
            let right = v.conj().mul(g.as_symbol()).unwrap();
            let k = h
                .conj()
                .mul(&v.shift(&shift).unwrap().conj())
                .unwrap()
                .mul(f.mul(&g).unwrap().as_symbol())
                .unwrap();
            let chain = OpChain::new(vec![left, right]).unwrap();
            let report = op_equal_on_basis(&chain, &OpChain::single(k), 6, 1e-9).unwrap();
            assert!(
                report.pass,
                "n = {n}: {} at {:?}",
                report.max_residual, report.worst
            );
        }
    }
}

fn c4_data(n: usize) -> (HoloSymbol, HoloSymbol, HoloSymbol) {
    let p = HoloSymbol::new(Symbol::coordinate(n, 0).unwrap()).unwrap();
    let mut w = vec![c(0.0, 0.0); n];
    w[n - 1] = c(0.0, -TAU);
    let f = HoloSymbol::kernel(&w);
    w[n - 1] = c(1.0, 0.0);
    let g = HoloSymbol::kernel(&w);
    (p, f, g)
}

#[test]
fn periodic_kernel_pair_commutes_in_two_dimensions() {
    let (p, f, g) = c4_data(2);
    let pf = p.mul(&f).unwrap();
    let zero = HoloSymbol::zero(2);
    let defect = commutator_defect(&pf, &zero, &zero, &g).unwrap();
    assert!(defect.is_zero(), "{defect}");

    let product = pf.as_symbol().mul(&g.conj()).unwrap();
    let chain = OpChain::new(vec![pf.as_symbol().clone(), g.conj()]).unwrap();
    let report = op_equal_on_basis(&chain, &OpChain::single(product.clone()), 8, 1e-9).unwrap();
    assert!(report.pass, "{}", report.max_residual);
    assert!(berezin(&product).approx_eq(&product, 1e-12));
}

#[test]
fn periodic_kernel_pair_fails_in_one_dimension() {
    let (p, f, g) = c4_data(1);
    let product = p.mul(&f).unwrap().as_symbol().mul(&g.conj()).unwrap();
    let gap = berezin(&product).sub(&product).unwrap();
    // The polynomial factor moves from zeta to zeta + 1; the leftover is the
    // bare exponential exp(2 pi i zeta + conj(zeta)).
    let expected = Symbol::exponential(&[c(0.0, TAU)], &[c(1.0, 0.0)]).unwrap();
    assert!(gap.residual(&expected).unwrap() < 1e-12, "{gap}");
    assert!(gap.coef_norm() >= 0.9);
}

#[test]
fn brown_halmos_agrees_on_random_pairs() {
    for n in 1..=2 {
        let mut smp = SymbolSampler::new(DEFAULT_SEED, n, 3);
        for _ in 0..10 {
            let (f, g, u, v) = (
                smp.holomorphic(),
                smp.holomorphic(),
                smp.holomorphic(),
                smp.holomorphic(),
            );
            let chain = OpChain::new(vec![
                pluriharmonic(&f, &g).unwrap(),
                pluriharmonic(&u, &v).unwrap(),
            ])
            .unwrap();
            let h = brown_halmos_h(&f, &g, &u, &v).unwrap();
            let report = op_equal_on_basis(&chain, &OpChain::single(h.clone()), 6, 1e-9).unwrap();
            assert!(report.pass, "{}", report.max_residual);
            // A constant shift of h changes every image by exactly e_alpha.
            let bumped = h.add(&Symbol::constant(n, c(1.0, 0.0))).unwrap();
            let report = op_equal_on_basis(&chain, &OpChain::single(bumped), 6, 1e-9).unwrap();
            assert!(!report.pass);
            // The pointwise product differs from h by conj(v) f - v*(conj(z) - d) f,
            // which vanishes only when f or v is constant.
            let pointwise = pluriharmonic(&f, &g)
                .unwrap()
                .mul(&pluriharmonic(&u, &v).unwrap())
                .unwrap();
            let report = op_equal_on_basis(&chain, &OpChain::single(pointwise), 6, 1e-9).unwrap();
            let trivial = f.degree() == 0 && !f.terms()[0].has_exponential()
                || v.degree() == 0 && !v.terms()[0].has_exponential();
            assert_eq!(report.pass, trivial, "{}", report.max_residual);
        }
    }
}

//! Independent numerical checks: tensor Gauss-Hermite quadrature over `C^n`
//! and a discretized inverse-Fourier reconstruction of the Berezin preimage.
//!
//! Nothing here is used by the exact calculus; these routines exist only to
//! cross-examine it.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{FockError, Result};
use crate::sharp::sharp;
use crate::symbol::{HoloSymbol, Symbol};

pub const MAX_QUAD_DIM: usize = 2;
pub const MAX_QUAD_ORDER: usize = 64;
/// Exponential parameters must stay this far inside the Gaussian decay.
pub const QUAD_PARAM_BOUND: f64 = 2.0;
pub const DEFAULT_ORDER_1D: usize = 40;
pub const DEFAULT_ORDER_2D: usize = 24;

pub const DEFAULT_HALF_WIDTH: f64 = 8.0;
pub const DEFAULT_GRID_POINTS: usize = 256;
pub const MIN_GRID_POINTS: usize = 64;
pub const L1_PARAM_BOUND: f64 = 1.0;

/// Nodes and weights for `int exp(-x^2) F(x) dx`, by Newton iteration on the
/// orthonormal Hermite recurrence.
pub fn gauss_hermite(order: usize) -> (Vec<f64>, Vec<f64>) {
    const PIM4: f64 = 0.751_125_544_464_942_5; // pi^(-1/4)
    let n = order;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    let mut z = 0.0;
    for i in 0..n.div_ceil(2) {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-0.16667),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = PIM4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// `int s dmu` by tensor Gauss-Hermite quadrature with `order` nodes per real axis.
pub fn quad_integral(s: &Symbol, order: usize) -> Result<Complex64> {
    let n = s.dim();
    if n > MAX_QUAD_DIM {
        return Err(FockError::QuadratureDimension {
            n,
            max: MAX_QUAD_DIM,
        });
    }
    if order == 0 || order > MAX_QUAD_ORDER {
        return Err(FockError::QuadratureOrder(order));
    }
    let modulus = s.max_exp_param();
    if modulus > QUAD_PARAM_BOUND {
        return Err(FockError::ParameterBound {
            modulus,
            bound: QUAD_PARAM_BOUND,
        });
    }
    let (x, w) = gauss_hermite(order);
    let axes = 2 * n;
    let total = order.pow(axes as u32);
    let sum: Complex64 = (0..total)
        .into_par_iter()
        .map(|mut flat| {
            let mut weight = 1.0;
            let mut z = [Complex64::new(0.0, 0.0); MAX_QUAD_DIM];
            for zk in z.iter_mut().take(n) {
                let (ix, iy) = (flat % order, (flat / order) % order);
                flat /= order * order;
                *zk = Complex64::new(x[ix], x[iy]);
                weight *= w[ix] * w[iy];
            }
            weight * s.eval(&z[..n]).expect("dimension checked")
        })
        .sum();
    Ok(sum / PI.powi(n as i32))
}

fn check_l1_input(s: &HoloSymbol) -> Result<()> {
    if s.dim() != 1 {
        return Err(FockError::InvalidArgument(format!(
            "inverse-Fourier check requires n = 1, got n = {}",
            s.dim()
        )));
    }
    let modulus = s.max_exp_param();
    if modulus > L1_PARAM_BOUND {
        return Err(FockError::ParameterBound {
            modulus,
            bound: L1_PARAM_BOUND,
        });
    }
    Ok(())
}

/// Reconstructs `u` from `B[u] = f conj(g)` numerically and compares it with
/// the closed-form sharp product.
///
/// With `F(h)(z) = pi^-1 int h(zeta) exp(i Re(z conj(zeta))) dV(zeta)`, the
/// preimage satisfies `F(u exp(-|.|^2))(z) = exp(-|z|^2/4) Q(iz/2, i conj(z)/2)`
/// where `Q(z, w) = f(z) g*(w)`. The inverse transform is evaluated by a
/// separable Riemann sum on a `points x points` grid over
/// `[-half_width, half_width)^2`. Returns the largest
/// `|u_numeric(zeta) - sharp(f, g)(zeta)|` over grid points with
/// `|zeta| <= half_width / 4`.
pub fn lemma_l1_check(
    f: &HoloSymbol,
    g: &HoloSymbol,
    half_width: f64,
    points: usize,
) -> Result<f64> {
    check_l1_input(f)?;
    check_l1_input(g)?;
    if points < MIN_GRID_POINTS {
        return Err(FockError::GridTooCoarse {
            points,
            min: MIN_GRID_POINTS,
        });
    }
    if half_width.is_nan() || half_width <= 0.0 {
        return Err(FockError::InvalidArgument(format!(
            "half width must be positive, got {half_width}"
        )));
    }
    let g_star = g.reflect();
    let step = 2.0 * half_width / points as f64;
    let grid: Vec<f64> = (0..points).map(|j| -half_width + j as f64 * step).collect();
    let i = Complex64::new(0.0, 1.0);

    // G(x, y) = exp(-|k|^2/4) f(ik/2) g*(i conj(k)/2), k = x + iy.
    let samples: Vec<Vec<Complex64>> = grid
        .par_iter()
        .map(|&x| {
            grid.iter()
                .map(|&y| {
                    let k = Complex64::new(x, y);
                    let fz = f.eval(&[i * k / 2.0]).expect("n = 1");
                    let gw = g_star.eval(&[i * k.conj() / 2.0]).expect("n = 1");
                    (-(x * x + y * y) / 4.0).exp() * fz * gw
                })
                .collect()
        })
        .collect();

    let radius = half_width / 4.0;
    let out_axis: Vec<f64> = grid.iter().copied().filter(|v| v.abs() <= radius).collect();

    // Inner sum over y: H(x, eta) = sum_y G(x, y) exp(-i y eta).
    let partial: Vec<Vec<Complex64>> = samples
        .par_iter()
        .map(|row| {
            out_axis
                .iter()
                .map(|&eta| {
                    row.iter()
                        .zip(&grid)
                        .map(|(gv, &y)| gv * Complex64::new(0.0, -y * eta).exp())
                        .sum()
                })
                .collect()
        })
        .collect();

    let expected = sharp(f, g)?;
    let norm = step * step / (4.0 * PI);
    let worst = out_axis
        .par_iter()
        .enumerate()
        .map(|(_, &xi)| {
            let mut local = 0.0f64;
            for (e_idx, &eta) in out_axis.iter().enumerate() {
                if xi * xi + eta * eta > radius * radius {
                    continue;
                }
                let h: Complex64 = partial
                    .iter()
                    .zip(&grid)
                    .map(|(row, &x)| row[e_idx] * Complex64::new(0.0, -x * xi).exp())
                    .sum();
                let zeta = Complex64::new(xi, eta);
                let u = (xi * xi + eta * eta).exp() * norm * h;
                let exact = expected.eval(&[zeta]).expect("n = 1");
                local = local.max((u - exact).norm());
            }
            local
        })
        .reduce(|| 0.0, f64::max);
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{gaussian_moment, MomentQuery};
    use crate::index::MultiIndex;
    use crate::symbol::cvec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hermite_rule_integrates_polynomials() {
        let (x, w) = gauss_hermite(20);
        let sqrt_pi = PI.sqrt();
        let total: f64 = w.iter().sum();
        assert!((total - sqrt_pi).abs() < 1e-13);
        let second: f64 = x.iter().zip(&w).map(|(x, w)| w * x * x).sum();
        assert!((second - sqrt_pi / 2.0).abs() < 1e-13);
        // int x^8 e^{-x^2} = 105 sqrt(pi) / 16
        let eighth: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(8)).sum();
        assert!((eighth - 105.0 * sqrt_pi / 16.0).abs() < 1e-11);
        for order in [1usize, 2, 5, 24, 40, 60, 64] {
            let (x, w) = gauss_hermite(order);
            assert!(x.windows(2).all(|p| p[0] > p[1]), "order {order}");
            assert!(w.iter().all(|v| *v > 0.0 && v.is_finite()));
            assert!((w.iter().sum::<f64>() - sqrt_pi).abs() < 1e-12);
        }
    }

    #[test]
    fn quadrature_examples() {
        let one = Symbol::constant(1, c(1.0, 0.0));
        assert!((quad_integral(&one, 40).unwrap() - c(1.0, 0.0)).norm() < 1e-10);

        let zz = Symbol::monomial(
            c(1.0, 0.0),
            MultiIndex::from_slice(&[1]),
            MultiIndex::from_slice(&[1]),
        );
        assert!((quad_integral(&zz, 40).unwrap() - c(1.0, 0.0)).norm() < 1e-8);

        let e = Symbol::exponential(&[c(0.3, 0.0)], &[c(0.7, -0.2)]).unwrap();
        let exact = gaussian_moment(
            &MomentQuery::new(
                MultiIndex::zeros(1),
                MultiIndex::zeros(1),
                cvec(&[c(0.3, 0.0)]),
                cvec(&[c(0.7, -0.2)]),
            )
            .unwrap(),
        )
        .unwrap();
        assert!((quad_integral(&e, 40).unwrap() - exact).norm() < 1e-6);
    }

    #[test]
    fn quadrature_guards() {
        let s3 = Symbol::constant(3, c(1.0, 0.0));
        assert!(matches!(
            quad_integral(&s3, 10),
            Err(FockError::QuadratureDimension { .. })
        ));
        let s1 = Symbol::constant(1, c(1.0, 0.0));
        assert!(matches!(
            quad_integral(&s1, 65),
            Err(FockError::QuadratureOrder(65))
        ));
        assert!(matches!(
            quad_integral(&s1, 0),
            Err(FockError::QuadratureOrder(0))
        ));
        let big = Symbol::exponential(&[c(2.5, 0.0)], &[c(0.0, 0.0)]).unwrap();
        assert!(matches!(
            quad_integral(&big, 20),
            Err(FockError::ParameterBound { .. })
        ));
    }

    #[test]
    fn l1_guards() {
        let one = HoloSymbol::constant(1, c(1.0, 0.0));
        assert!(matches!(
            lemma_l1_check(&one, &one, 8.0, 32),
            Err(FockError::GridTooCoarse { .. })
        ));
        let two = HoloSymbol::constant(2, c(1.0, 0.0));
        assert!(lemma_l1_check(&two, &two, 8.0, 64).is_err());
        let steep = HoloSymbol::exponential(&[c(1.5, 0.0)]);
        assert!(matches!(
            lemma_l1_check(&steep, &one, 8.0, 64),
            Err(FockError::ParameterBound { .. })
        ));
    }
}

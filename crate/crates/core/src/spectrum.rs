//! Walsh coefficients `S_f(b) = sum_x ω^{f(x) - Tr(bx)}`.
//!
//! Three routes: a single-point sum, the full naive spectrum, and a radix-3
//! transform over (Z/3)^n. The fast route works in trace-dual coordinates:
//! with `{β*_i}` dual to the polynomial basis, `Tr(bx)` is the plain dot
//! product of the dual coordinates of `b` with the coordinates of `x`.

use rayon::prelude::*;

use crate::cyclotomic::EisensteinInt;
use crate::error::{domain, Error, Result};
use crate::function::TernaryFn;
use crate::gf::linalg::Mat3;
use crate::gf::{FieldCtx, FieldElem};

/// Largest degree [`spectrum_naive`] accepts without `force`.
pub const NAIVE_MAX_N: usize = 8;

/// Walsh coefficients indexed like the function table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    coeffs: Vec<EisensteinInt>,
}

impl WalshSpectrum {
    pub fn from_coeffs(coeffs: Vec<EisensteinInt>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[EisensteinInt] {
        &self.coeffs
    }

    #[inline]
    pub fn at(&self, b: FieldElem) -> EisensteinInt {
        self.coeffs[b.index() as usize]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `sum_b |S_f(b)|^2`, which must equal `3^{2n}`.
    pub fn parseval_sum(&self) -> i128 {
        self.coeffs.iter().map(|c| c.norm() as i128).sum()
    }
}

/// Single coefficient by direct summation.
pub fn walsh_at(f: &TernaryFn, b: FieldElem) -> EisensteinInt {
    let ctx = f.ctx();
    let mut counts = [0i64; 3];
    for x in ctx.elements() {
        let t = ctx.trace_abs(ctx.mul(b, x));
        counts[((f.value(x) + 3 - t) % 3) as usize] += 1;
    }
    EisensteinInt::from_counts(counts[0], counts[1], counts[2])
}

/// Every coefficient by direct summation, cost `3^{2n}`.
pub fn spectrum_naive(f: &TernaryFn, force: bool) -> Result<WalshSpectrum> {
    let ctx = f.ctx();
    if ctx.n() > NAIVE_MAX_N && !force {
        return domain(format!(
            "naive spectrum refuses n = {} > {NAIVE_MAX_N} without force",
            ctx.n()
        ));
    }
    let order = ctx.order() as usize;
    // walk both b and x in log order so Tr(bx) is a table lookup
    let f_by_log: Vec<u8> = (0..order).map(|j| f.value(ctx.exp_of(j as u64))).collect();
    let tr_by_log: Vec<u8> = (0..order)
        .map(|j| ctx.trace_abs(ctx.exp_of(j as u64)))
        .collect();
    let f0 = f.value(FieldElem::ZERO);

    let by_log: Vec<EisensteinInt> = (0..order)
        .into_par_iter()
        .map(|i| {
            let mut counts = [0i64; 3];
            counts[f0 as usize] += 1;
            for (j, &fv) in f_by_log.iter().enumerate() {
                let m = if i + j >= order { i + j - order } else { i + j };
                counts[((fv + 3 - tr_by_log[m]) % 3) as usize] += 1;
            }
            EisensteinInt::from_counts(counts[0], counts[1], counts[2])
        })
        .collect();

    let mut coeffs = vec![EisensteinInt::ZERO; ctx.size()];
    let hist = f.histogram();
    coeffs[0] = EisensteinInt::from_counts(hist[0] as i64, hist[1] as i64, hist[2] as i64);
    for (i, c) in by_log.into_iter().enumerate() {
        coeffs[ctx.exp_of(i as u64).index() as usize] = c;
    }
    Ok(WalshSpectrum { coeffs })
}

/// The trace-dual basis `{β*_j}` of the polynomial basis `{x^i}`:
/// `Tr(x^i β*_j) = δ_ij`.
pub fn dual_basis(ctx: &FieldCtx) -> Vec<FieldElem> {
    let n = ctx.n();
    let basis: Vec<FieldElem> = (0..n).map(|i| FieldElem::from_index(ctx.pow3(i))).collect();
    let mut gram = Mat3::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, ctx.trace_abs(ctx.mul(basis[i], basis[j])));
        }
    }
    let inv = gram
        .inverse()
        .expect("trace form is nondegenerate, the Gram matrix is invertible");
    (0..n)
        .map(|j| {
            let col: Vec<u8> = (0..n).map(|k| inv.get(k, j)).collect();
            ctx.combine(&basis, &col)
        })
        .collect()
}

/// `perm[d]` = the element whose trace-dual coordinates are the base-3
/// digits of `d`.
fn dual_permutation(ctx: &FieldCtx) -> Vec<u32> {
    let dual = dual_basis(ctx);
    ctx.span(&dual).into_iter().map(FieldElem::index).collect()
}

#[derive(Clone, Copy)]
enum Direction {
    /// kernel ω^{-d·x}
    Forward,
    /// kernel ω^{+d·x}
    Inverse,
}

fn butterfly(
    a0: &mut EisensteinInt,
    a1: &mut EisensteinInt,
    a2: &mut EisensteinInt,
    dir: Direction,
) {
    let (x0, x1, x2) = (*a0, *a1, *a2);
    *a0 = x0 + x1 + x2;
    match dir {
        Direction::Forward => {
            *a1 = x0 + x1.mul_omega2() + x2.mul_omega();
            *a2 = x0 + x1.mul_omega() + x2.mul_omega2();
        }
        Direction::Inverse => {
            *a1 = x0 + x1.mul_omega() + x2.mul_omega2();
            *a2 = x0 + x1.mul_omega2() + x2.mul_omega();
        }
    }
}

/// In-place radix-3 character transform over (Z/3)^n.
fn radix3_transform(buf: &mut [EisensteinInt], n: usize, dir: Direction) {
    const PAR_STRIDE: usize = 1 << 12;
    let mut stride = 1usize;
    for _ in 0..n {
        let s = stride;
        buf.par_chunks_mut(3 * s).for_each(|chunk| {
            let (a0, rest) = chunk.split_at_mut(s);
            let (a1, a2) = rest.split_at_mut(s);
            if s >= PAR_STRIDE {
                a0.par_iter_mut()
                    .zip(a1.par_iter_mut())
                    .zip(a2.par_iter_mut())
                    .for_each(|((x, y), z)| butterfly(x, y, z, dir));
            } else {
                for ((x, y), z) in a0.iter_mut().zip(a1.iter_mut()).zip(a2.iter_mut()) {
                    butterfly(x, y, z, dir);
                }
            }
        });
        stride *= 3;
    }
}

/// Full spectrum in `O(n 3^n)`; equal entry-by-entry to [`spectrum_naive`].
pub fn spectrum_fast(f: &TernaryFn) -> WalshSpectrum {
    let ctx = f.ctx();
    let mut buf: Vec<EisensteinInt> = f
        .table()
        .iter()
        .map(|&v| EisensteinInt::omega_pow(v))
        .collect();
    radix3_transform(&mut buf, ctx.n(), Direction::Forward);
    let perm = dual_permutation(ctx);
    let mut coeffs = vec![EisensteinInt::ZERO; ctx.size()];
    for (d, c) in buf.into_iter().enumerate() {
        coeffs[perm[d] as usize] = c;
    }
    WalshSpectrum { coeffs }
}

/// `x -> sum_b S(b) ω^{Tr(bx)}`, which is `3^n ω^{f(x)}` for a spectrum of f.
pub fn inverse_fast(ctx: &FieldCtx, spectrum: &WalshSpectrum) -> Vec<EisensteinInt> {
    assert_eq!(spectrum.len(), ctx.size());
    let perm = dual_permutation(ctx);
    let mut buf: Vec<EisensteinInt> = perm.iter().map(|&b| spectrum.coeffs[b as usize]).collect();
    radix3_transform(&mut buf, ctx.n(), Direction::Inverse);
    buf
}

/// Recover a value table from its spectrum through the inverse transform.
pub fn recover_table(ctx: &FieldCtx, spectrum: &WalshSpectrum) -> Result<Vec<u8>> {
    let scale = 3i64.pow(ctx.n() as u32);
    inverse_fast(ctx, spectrum)
        .into_iter()
        .enumerate()
        .map(|(x, c)| {
            (0..3u8)
                .find(|&j| EisensteinInt::omega_pow(j).scale(scale) == c)
                .ok_or_else(|| {
                    Error::Domain(format!("inverse transform at {x} is not 3^n·ω^j: {c}"))
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::TraceTerm;
    use std::sync::Arc;

    #[test]
    fn zero_function_spectrum() {
        let ctx = Arc::new(FieldCtx::new(3, None).unwrap());
        let f = TernaryFn::zero(ctx.clone());
        assert_eq!(walsh_at(&f, FieldElem::ZERO), EisensteinInt::new(27, 0));
        assert_eq!(walsh_at(&f, ctx.generator()), EisensteinInt::ZERO);
        let fast = spectrum_fast(&f);
        let naive = spectrum_naive(&f, false).unwrap();
        assert_eq!(fast, naive);
        assert_eq!(fast.at(FieldElem::ZERO), EisensteinInt::new(27, 0));
        assert!(fast.coeffs()[1..].iter().all(|&c| c == EisensteinInt::ZERO));
    }

    #[test]
    fn dual_basis_is_dual() {
        for (n, m) in [(1, None), (4, Some(vec![2u8, 1, 0, 0, 1])), (5, None)] {
            let ctx = FieldCtx::new(n, m.as_deref()).unwrap();
            let dual = dual_basis(&ctx);
            for i in 0..n {
                for (j, &d) in dual.iter().enumerate() {
                    let t = ctx.trace_abs(ctx.mul(FieldElem::from_index(ctx.pow3(i)), d));
                    assert_eq!(t, u8::from(i == j));
                }
            }
            if n == 1 {
                assert_eq!(dual, vec![FieldElem::ONE]);
            }
        }
    }

    #[test]
    fn gram_from_lift_traces() {
        // Tr(a^m) for a root of x^4 + x - 1: 1, 0, 0, 0 for m = 0..3, and
        // from a^4 = 1 - a, a^5 = a - a^2, a^6 = a^2 - a^3: 1, 0, 0
        let ctx = FieldCtx::new(4, Some(&[2, 1, 0, 0, 1])).unwrap();
        let a = FieldElem::from_index(3);
        let expected = [1u8, 0, 0, 0, 1, 0, 0];
        for (m, &t) in expected.iter().enumerate() {
            assert_eq!(ctx.trace_abs(ctx.pow(a, m as u128)), t, "Tr(a^{m})");
        }
        let dual = dual_basis(&ctx);
        // Gram matrix Tr(a^{i+j})
        let gram = Mat3::from_rows(&[
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 0],
        ]);
        let inv = gram.inverse().unwrap();
        for (j, &d) in dual.iter().enumerate() {
            let col: Vec<u8> = (0..4).map(|k| inv.get(k, j)).collect();
            assert_eq!(ctx.coords(d), col);
        }
    }

    #[test]
    fn quadratic_is_flat() {
        let ctx = Arc::new(FieldCtx::new(4, None).unwrap());
        let f = TernaryFn::from_trace_form(ctx.clone(), vec![TraceTerm::new(FieldElem::ONE, 2)]);
        let naive = spectrum_naive(&f, false).unwrap();
        for b in ctx.elements() {
            assert_eq!(naive.at(b), walsh_at(&f, b));
            assert_eq!(naive.at(b).norm(), 81);
        }
        assert_eq!(spectrum_fast(&f), naive);
    }

    #[test]
    fn naive_refuses_large() {
        let ctx = Arc::new(FieldCtx::new(9, None).unwrap());
        let f = TernaryFn::zero(ctx);
        assert!(spectrum_naive(&f, false).is_err());
    }

    #[test]
    fn inverse_recovers_table() {
        let ctx = Arc::new(FieldCtx::new(5, None).unwrap());
        let g = ctx.generator();
        let f = TernaryFn::from_trace_form(
            ctx.clone(),
            vec![TraceTerm::new(g, 5), TraceTerm::new(ctx.pow(g, 3), 22)],
        );
        let s = spectrum_fast(&f);
        assert_eq!(recover_table(&ctx, &s).unwrap(), f.table());
    }
}

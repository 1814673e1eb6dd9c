//! Bentness verdicts, regularity, duals, algebraic degree and balance.

use std::fmt;

use crate::cyclotomic::EisensteinInt;
use crate::error::{domain, Result};
use crate::function::{TernaryFn, TraceTerm};
use crate::gf::FieldElem;
use crate::spectrum::{spectrum_fast, WalshSpectrum};
use crate::transcript::Transcript;

/// Regularity class of a function, decided from its spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    /// `S_f(b) = 3^{n/2} ω^{f*(b)}` for all b.
    Regular,
    /// `S_f(b) = -3^{n/2} ω^{f*(b)}` for all b, i.e. unit `u = -1`.
    WeaklyRegularMinus,
    /// Bent, but no unit in {+1, -1} works (mixed signs, or odd n where
    /// `3^{n/2}` is irrational and the unit is not an Eisenstein integer).
    NotWeaklyRegular,
    NotBent,
}

impl Regularity {
    /// Certificate spelling: `regular`, `weak-minus` or `none`.
    pub fn as_str(self) -> &'static str {
        match self {
            Regularity::Regular => "regular",
            Regularity::WeaklyRegularMinus => "weak-minus",
            Regularity::NotWeaklyRegular | Regularity::NotBent => "none",
        }
    }

    pub fn is_weakly_regular(self) -> bool {
        matches!(self, Regularity::Regular | Regularity::WeaklyRegularMinus)
    }
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict record for one function.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub is_bent: bool,
    pub regularity: Regularity,
    pub dual: Option<TernaryFn>,
    pub degree: usize,
    /// First `b` with `|S_f(b)|^2 != 3^n`, and that norm.
    pub counterexample: Option<(FieldElem, i64)>,
    pub transcripts: Vec<Transcript>,
}

/// Spectrum-based verdict; computes the fast spectrum.
pub fn check_bent(f: &TernaryFn) -> Certificate {
    let s = spectrum_fast(f);
    check_bent_with(f, &s)
}

/// Verdict from a precomputed spectrum of `f`.
pub fn check_bent_with(f: &TernaryFn, spectrum: &WalshSpectrum) -> Certificate {
    let n = f.n();
    let target = 3i64.pow(n as u32);
    let degree = algebraic_degree(f);
    let counterexample = spectrum
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| c.norm() != target)
        .map(|(b, c)| (FieldElem::from_index(b as u32), c.norm()));

    let mut transcript = Transcript::new();
    if let Some((b, norm)) = counterexample {
        transcript.fail("walsh_norms", format!("b={} norm={norm}", b.index()));
        return Certificate {
            is_bent: false,
            regularity: Regularity::NotBent,
            dual: None,
            degree,
            counterexample,
            transcripts: vec![transcript],
        };
    }
    transcript.pass("walsh_norms", Some(format!("all={target}")));

    if n % 2 == 1 {
        transcript.fail("regularity", "odd n: unit is not in Z[w]");
        return Certificate {
            is_bent: true,
            regularity: Regularity::NotWeaklyRegular,
            dual: None,
            degree,
            counterexample: None,
            transcripts: vec![transcript],
        };
    }

    let m = 3i64.pow(n as u32 / 2);
    let (regularity, dual) = classify(f, spectrum, m, &mut transcript);
    Certificate {
        is_bent: true,
        regularity,
        dual,
        degree,
        counterexample: None,
        transcripts: vec![transcript],
    }
}

fn classify(
    f: &TernaryFn,
    spectrum: &WalshSpectrum,
    m: i64,
    transcript: &mut Transcript,
) -> (Regularity, Option<TernaryFn>) {
    let mut signs = [0usize; 2];
    let mut dual = Vec::with_capacity(spectrum.len());
    for (b, &c) in spectrum.coeffs().iter().enumerate() {
        match c.as_root_multiple(m) {
            Some(r) => {
                signs[usize::from(r.sign < 0)] += 1;
                dual.push(r.j);
            }
            None => {
                transcript.fail("root_multiple", format!("b={b} S={c}"));
                return (Regularity::NotWeaklyRegular, None);
            }
        }
    }
    // try u = 1, then u = -1
    let regularity = if signs[1] == 0 {
        Regularity::Regular
    } else if signs[0] == 0 {
        Regularity::WeaklyRegularMinus
    } else {
        transcript.fail(
            "regularity",
            format!("mixed signs: {} positive, {} negative", signs[0], signs[1]),
        );
        return (Regularity::NotWeaklyRegular, None);
    };
    transcript.pass("regularity", Some(regularity.as_str().to_string()));
    let dual = TernaryFn::from_table(f.ctx_arc().clone(), dual).expect("dual values are trits");
    (regularity, Some(dual))
}

/// The dual `f*` recorded in a certificate.
pub fn dual_of(cert: &Certificate) -> Result<TernaryFn> {
    if !cert.is_bent {
        return domain("function is not bent");
    }
    match &cert.dual {
        Some(d) if cert.regularity.is_weakly_regular() => Ok(d.clone()),
        _ => domain("function is bent but not weakly regular"),
    }
}

/// Reduced multivariate polynomial coefficients over F_3 (exponent digits
/// per variable in {0,1,2}), by 3-point interpolation along each axis.
pub fn anf_coefficients(f: &TernaryFn) -> Vec<u8> {
    let mut c = f.table().to_vec();
    let mut stride = 1usize;
    for _ in 0..f.n() {
        for chunk in c.chunks_mut(3 * stride) {
            for r in 0..stride {
                let (v0, v1, v2) = (chunk[r], chunk[stride + r], chunk[2 * stride + r]);
                // p(x) = c0 + c1 x + c2 x^2 through (0,v0), (1,v1), (2,v2)
                chunk[stride + r] = (v2 + 3 - v1) % 3;
                chunk[2 * stride + r] = (9 - v0 - v1 - v2) % 3;
            }
        }
        stride *= 3;
    }
    c
}

/// Algebraic degree of `f` as a polynomial in its n coordinates.
pub fn algebraic_degree(f: &TernaryFn) -> usize {
    let coeffs = anf_coefficients(f);
    let mut weight = vec![0u8; coeffs.len()];
    let mut block = 1usize;
    for _ in 0..f.n() {
        for t in 1..3u8 {
            for r in 0..block {
                weight[t as usize * block + r] = weight[r] + t;
            }
        }
        block *= 3;
    }
    coeffs
        .iter()
        .zip(&weight)
        .filter(|(&c, _)| c != 0)
        .map(|(_, &w)| w as usize)
        .max()
        .unwrap_or(0)
}

/// Sum of base-3 digits.
pub fn three_weight(mut d: u128) -> usize {
    let mut w = 0;
    while d > 0 {
        w += (d % 3) as usize;
        d /= 3;
    }
    w
}

/// Upper bound on the degree of a trace form: largest 3-weight among its
/// exponents, after reduction to `1..=3^n - 1`.
pub fn trace_form_degree_bound(n: usize, terms: &[TraceTerm]) -> usize {
    let order = 3u128.pow(n as u32) - 1;
    terms
        .iter()
        .filter(|t| !t.coeff.is_zero())
        .map(|t| {
            if t.exponent == 0 {
                0
            } else {
                let r = t.exponent % order;
                three_weight(if r == 0 { order } else { r })
            }
        })
        .max()
        .unwrap_or(0)
}

pub fn is_balanced(g: &TernaryFn) -> bool {
    let h = g.histogram();
    h[0] == h[1] && h[1] == h[2]
}

/// How the double dual of a regular bent function relates to the function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleDual {
    /// `f**(x) = f(-x)`.
    Negation,
    /// `f**(x) = f(x)`.
    Identity,
    Other,
    /// The dual is not itself weakly regular bent.
    NotAvailable,
}

/// Empirical relation between `f` and `f**`.
pub fn double_dual_relation(f: &TernaryFn) -> DoubleDual {
    let Ok(d1) = dual_of(&check_bent(f)) else {
        return DoubleDual::NotAvailable;
    };
    let Ok(d2) = dual_of(&check_bent(&d1)) else {
        return DoubleDual::NotAvailable;
    };
    let ctx = f.ctx();
    if ctx.elements().all(|x| d2.value(x) == f.value(ctx.neg(x))) {
        DoubleDual::Negation
    } else if d2.table() == f.table() {
        DoubleDual::Identity
    } else {
        DoubleDual::Other
    }
}

/// `norm(S) == 3^n` for a single coefficient.
pub fn has_bent_norm(c: EisensteinInt, n: usize) -> bool {
    c.norm() == 3i64.pow(n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use std::sync::Arc;

    fn ctx4() -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(4, None).unwrap())
    }

    #[test]
    fn quadratic_is_regular_or_weakly_regular_bent() {
        let ctx = ctx4();
        let f = TernaryFn::from_trace_form(ctx, vec![TraceTerm::new(FieldElem::ONE, 2)]);
        let cert = check_bent(&f);
        assert!(cert.is_bent);
        assert!(cert.regularity.is_weakly_regular());
        assert_eq!(cert.degree, 2);
        let dual = dual_of(&cert).unwrap();
        assert_eq!(algebraic_degree(&dual), 2);
        assert!(check_bent(&dual).is_bent);
    }

    #[test]
    fn zero_function_is_not_bent() {
        let ctx = ctx4();
        let cert = check_bent(&TernaryFn::zero(ctx));
        assert!(!cert.is_bent);
        assert_eq!(cert.regularity, Regularity::NotBent);
        assert_eq!(cert.counterexample, Some((FieldElem::ZERO, 3i64.pow(8))));
        assert!(dual_of(&cert).is_err());
    }

    #[test]
    fn degrees() {
        let ctx = ctx4();
        let c = TernaryFn::from_fn(ctx.clone(), |_| 2);
        assert_eq!(algebraic_degree(&c), 0);
        assert_eq!(algebraic_degree(&TernaryFn::zero(ctx.clone())), 0);
        let l = TernaryFn::linear(ctx.clone(), ctx.generator());
        assert_eq!(algebraic_degree(&l), 1);
        let q = TernaryFn::from_trace_form(ctx.clone(), vec![TraceTerm::new(FieldElem::ONE, 2)]);
        assert_eq!(algebraic_degree(&q), 2);
        // x_0^2 x_1^2 x_2^2 x_3^2 indicator-like monomial has degree 8
        let top = TernaryFn::from_fn(ctx.clone(), |x| {
            ctx.coords(x).iter().map(|&c| c * c % 3).product::<u8>() % 3
        });
        assert_eq!(algebraic_degree(&top), 8);
    }

    #[test]
    fn degree_bound_from_exponents() {
        let t = |e| TraceTerm::new(FieldElem::ONE, e);
        assert_eq!(trace_form_degree_bound(4, &[t(2)]), 2);
        assert_eq!(trace_form_degree_bound(4, &[t(8), t(16)]), 4);
        assert_eq!(trace_form_degree_bound(4, &[t(34), t(2)]), 4);
        assert_eq!(trace_form_degree_bound(4, &[t(80)]), 8);
        assert_eq!(three_weight(0), 0);
    }

    #[test]
    fn balance() {
        let ctx = ctx4();
        assert!(is_balanced(&TernaryFn::linear(
            ctx.clone(),
            ctx.generator()
        )));
        assert!(!is_balanced(&TernaryFn::zero(ctx.clone())));
        let q = TernaryFn::from_trace_form(ctx.clone(), vec![TraceTerm::new(FieldElem::ONE, 2)]);
        // histogram by enumeration: a quadratic form is never balanced
        let h = q.histogram();
        assert_eq!(h.iter().sum::<usize>(), 81);
        assert!(!is_balanced(&q));
    }

    #[test]
    fn odd_degree_bent_has_no_eisenstein_unit() {
        let ctx = Arc::new(FieldCtx::new(3, None).unwrap());
        let f = TernaryFn::from_trace_form(ctx, vec![TraceTerm::new(FieldElem::ONE, 2)]);
        let cert = check_bent(&f);
        assert!(cert.is_bent);
        assert_eq!(cert.regularity, Regularity::NotWeaklyRegular);
        assert!(cert.dual.is_none());
    }
}

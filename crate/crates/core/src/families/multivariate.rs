//! Four-variable form `Tr_k(P(x_0, x_1, x_2, x_3))` of the binomials.
//!
//! Substituting `x = x_0 + x_1 a + x_2 a^2 + x_3 a^3` gives
//! `x^{3^{jk}} = Σ_i x_i a^{i·3^{jk}}`, so a term `c x^d` whose base-`3^k`
//! digits are `e_j` expands to `c Π_j L_j^{e_j}`. Pushing `Tr^n_k` onto each
//! monomial coefficient leaves a polynomial over F_3 when `k` is odd. The
//! whole computation takes place in GF(81), so no large field is needed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::function::TernaryFn;
use crate::gf::{FieldCtx, FieldElem};

use super::coeffs::{binomial_exponents, pow3};
use super::quartic::{QuarticBasis, QuarticMinPoly};
use super::Exceptional;

/// Bound on the total degree of a single expanded term.
const MAX_TOTAL_DEGREE: u32 = 16;

/// `Tr_k(Σ c_e x_0^{e_0} x_1^{e_1} x_2^{e_2} x_3^{e_3})`, `c_e` in F_3.
/// Exponents are formal: `x_i^{3^k}` is not reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivariatePoly {
    k: usize,
    terms: BTreeMap<[u8; 4], u8>,
}

impl MultivariatePoly {
    pub fn new(k: usize, terms: BTreeMap<[u8; 4], u8>) -> Self {
        let terms = terms
            .into_iter()
            .filter_map(|(e, c)| (c % 3 != 0).then_some((e, c % 3)))
            .collect();
        Self { k, terms }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<[u8; 4], u8> {
        &self.terms
    }

    /// Same polynomial, ignoring `k`.
    pub fn same_terms(&self, other: &MultivariatePoly) -> bool {
        self.terms == other.terms
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// `P(x_0, .., x_3)` in the big field; inputs should lie in GF(3^k).
    pub fn eval_inner(&self, ctx: &FieldCtx, xs: [FieldElem; 4]) -> FieldElem {
        self.terms.iter().fold(FieldElem::ZERO, |acc, (e, &c)| {
            let m = (0..4).fold(ctx.prime(c), |m, i| {
                ctx.mul(m, ctx.pow(xs[i], e[i] as u128))
            });
            ctx.add(acc, m)
        })
    }

    /// `Tr_k(P(x_0, .., x_3))`.
    pub fn eval(&self, ctx: &FieldCtx, xs: [FieldElem; 4]) -> Result<u8> {
        ctx.trace_sub(self.eval_inner(ctx, xs), self.k)
    }

    /// Tabulate `x -> Tr_k(P(decompose(x)))`.
    pub fn to_table(&self, ctx: &FieldCtx, basis: &QuarticBasis) -> Result<Vec<u8>> {
        if basis.k() != self.k {
            return domain("basis and polynomial use different k");
        }
        let idx: Vec<u32> = (0..ctx.size() as u32).collect();
        idx.par_iter()
            .map(|&i| {
                let x = FieldElem::from_index(i);
                self.eval(ctx, basis.decompose(ctx, x))
            })
            .collect()
    }

    /// Parse `x0^4+x0*x1^3-x3^4` style text; `k` is attached as given.
    pub fn parse(k: usize, s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms: BTreeMap<[u8; 4], u8> = BTreeMap::new();
        if s == "0" {
            return Ok(Self::new(k, terms));
        }
        let bad = |why: &str| Error::Domain(format!("cannot parse polynomial {s:?}: {why}"));
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if rest.len() == s.len() => (false, rest),
                _ => return Err(bad("missing sign between terms")),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;
            let mut coef: u8 = if neg { 2 } else { 1 };
            let mut exps = [0u8; 4];
            for factor in term.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (i, e) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u8>().map_err(|_| bad("bad exponent"))?),
                        None => (var, 1),
                    };
                    let i: usize = i.parse().map_err(|_| bad("bad variable"))?;
                    if i > 3 {
                        return Err(bad("variables are x0..x3"));
                    }
                    exps[i] += e;
                } else {
                    let c: u8 = factor.parse().map_err(|_| bad("bad factor"))?;
                    coef = coef * (c % 3) % 3;
                }
            }
            let slot = terms.entry(exps).or_insert(0);
            *slot = (*slot + coef) % 3;
        }
        Ok(Self::new(k, terms))
    }
}

/// Terms are listed by increasing `(e_3, e_2, e_1, e_0)`.
impl fmt::Display for MultivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&[u8; 4]> = self.terms.keys().collect();
        keys.sort_by_key(|e| [e[3], e[2], e[1], e[0]]);
        for (n, e) in keys.into_iter().enumerate() {
            let c = self.terms[e];
            if c == 2 {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            let factors: Vec<String> = (0..4)
                .filter(|&i| e[i] > 0)
                .map(|i| match e[i] {
                    1 => format!("x{i}"),
                    p => format!("x{i}^{p}"),
                })
                .collect();
            if factors.is_empty() {
                f.write_str("1")?;
            } else {
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultivariatePoly {
    type Err = Error;

    /// Parses with `k = 1`; use [`MultivariatePoly::parse`] to choose `k`.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(1, s)
    }
}

type Poly = BTreeMap<[u8; 4], FieldElem>;

fn poly_mul(f: &FieldCtx, p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, &ca) in p {
        for (eb, &cb) in q {
            let e: [u8; 4] = std::array::from_fn(|i| ea[i] + eb[i]);
            let slot = out.entry(e).or_insert(FieldElem::ZERO);
            *slot = f.add(*slot, f.mul(ca, cb));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expand `Tr_n(Σ c_t x^{d_t})` with each `c_t` given in `min_poly.field()`
/// (whose index-3 element is the root `a`).
pub fn expand_formal(
    min_poly: QuarticMinPoly,
    k: usize,
    terms: &[(FieldElem, u128)],
) -> Result<MultivariatePoly> {
    if k == 0 || k.is_multiple_of(2) {
        return domain(format!("the expansion needs odd k, got {k}"));
    }
    let f81 = min_poly.field();
    let a = FieldElem::from_index(3);
    let qk = pow3(k);
    let limit = pow3(4 * k);
    // 3^{jk} mod 80, the exponent acting on a under x -> x^{3^{jk}}
    let frob: Vec<u128> = (0..4).map(|j| pow3(j * k) % 80).collect();

    let linear: Vec<Poly> = frob
        .iter()
        .map(|&fj| {
            (0..4)
                .map(|i| {
                    let mut e = [0u8; 4];
                    e[i] = 1;
                    (e, f81.pow(a, i as u128 * fj))
                })
                .collect()
        })
        .collect();

    let mut total = Poly::new();
    for &(c, d) in terms {
        if d >= limit {
            return domain(format!("exponent {d} is not below 3^{}", 4 * k));
        }
        let digits: Vec<u128> = (0..4).map(|j| (d / pow3(j * k)) % qk).collect();
        if digits.iter().sum::<u128>() > MAX_TOTAL_DEGREE as u128 {
            return domain(format!(
                "exponent {d} has base-3^{k} digit sum above {MAX_TOTAL_DEGREE}"
            ));
        }
        let mut p: Poly = [([0u8; 4], c)].into_iter().collect();
        for (j, &e) in digits.iter().enumerate() {
            for _ in 0..e {
                p = poly_mul(&f81, &p, &linear[j]);
            }
        }
        for (e, y) in p {
            let slot = total.entry(e).or_insert(FieldElem::ZERO);
            *slot = f81.add(*slot, y);
        }
    }

    let mut out = BTreeMap::new();
    for (e, y) in total {
        let tr = frob
            .iter()
            .fold(FieldElem::ZERO, |acc, &fj| f81.add(acc, f81.pow(y, fj)));
        if tr.index() > 2 {
            return Err(Error::Inconsistency(format!(
                "relative trace of a coefficient left F_3 for k = {k}"
            )));
        }
        out.insert(e, tr.index() as u8);
    }
    Ok(MultivariatePoly::new(k, out))
}

/// Write `c` (in the embedded GF(81)) as `Σ c_i a^i` and carry it over to
/// `min_poly.field()`.
fn to_local(ctx: &FieldCtx, basis: &QuarticBasis, c: FieldElem) -> Result<FieldElem> {
    if !ctx.in_subfield(c, 4)? {
        return domain(format!("coefficient {} is not in GF(81)", ctx.fmt_log(c)));
    }
    let a = basis.root();
    let powers = [FieldElem::ONE, a, ctx.mul(a, a), ctx.pow(a, 3)];
    for idx in 0..81u32 {
        let digits = [idx % 3, idx / 3 % 3, idx / 9 % 3, idx / 27].map(|d| d as u8);
        if ctx.combine(&powers, &digits) == c {
            return Ok(FieldElem::from_index(idx));
        }
    }
    Err(Error::Inconsistency(
        "GF(81) element not spanned by 1, a, a^2, a^3".into(),
    ))
}

/// Expand a function with a trace form whose coefficients lie in GF(81),
/// then check the result against its table.
pub fn multivariate_expand(
    f: &TernaryFn,
    k: usize,
    min_poly: QuarticMinPoly,
) -> Result<MultivariatePoly> {
    let ctx = f.ctx();
    let Some(sym) = f.symbolic() else {
        return domain("function has no trace form to expand");
    };
    let basis = QuarticBasis::new(ctx, k, min_poly)?;
    let terms = sym
        .iter()
        .map(|t| Ok((to_local(ctx, &basis, t.coeff)?, t.exponent)))
        .collect::<Result<Vec<_>>>()?;
    let p = expand_formal(min_poly, k, &terms)?;
    let table = p.to_table(ctx, &basis)?;
    if let Some(i) = table.iter().zip(f.table()).position(|(a, b)| a != b) {
        return Err(Error::Inconsistency(format!(
            "expansion disagrees with the table at index {i}"
        )));
    }
    Ok(p)
}

/// Families whose four-variable form can be expanded without tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpandableFamily {
    /// `a x^{2(3^k+1)} + a^{-1} x^{(3^k+1)^2}`, `a^4 + a - 1 = 0`.
    T3,
    Exceptional(Exceptional),
}

impl ExpandableFamily {
    pub fn min_poly(self) -> QuarticMinPoly {
        match self {
            ExpandableFamily::T3 => QuarticMinPoly::Primitive,
            ExpandableFamily::Exceptional(_) => QuarticMinPoly::Order16,
        }
    }

    fn a_powers(self) -> (i128, i128) {
        match self {
            ExpandableFamily::T3 => (1, -1),
            ExpandableFamily::Exceptional(e) => e.a_powers(),
        }
    }

    fn check_k(self, k: usize) -> Result<()> {
        let ok = match self {
            ExpandableFamily::T3 => k % 2 == 1,
            ExpandableFamily::Exceptional(e) => k % 4 == e.k_residue(),
        };
        if !ok {
            return domain(format!("k = {k} is outside the family's range"));
        }
        Ok(())
    }
}

/// Table-free expansion of a family at parameter `k`.
pub fn expand_family(which: ExpandableFamily, k: usize) -> Result<MultivariatePoly> {
    which.check_k(k)?;
    let f81 = which.min_poly().field();
    let a = FieldElem::from_index(3);
    let (e1, e2) = which.a_powers();
    let (d1, d2) = binomial_exponents(k);
    expand_formal(
        which.min_poly(),
        k,
        &[(f81.pow_i(a, e1)?, d1), (f81.pow_i(a, e2)?, d2)],
    )
}

/// Whether the expansion is the same polynomial for every `k` listed.
pub fn exceptionality_check(which: ExpandableFamily, ks: &[usize]) -> Result<bool> {
    let polys = ks
        .iter()
        .map(|&k| expand_family(which, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(polys.windows(2).all(|w| w[0].same_terms(&w[1])))
}

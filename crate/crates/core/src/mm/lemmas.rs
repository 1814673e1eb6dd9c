//! The subspaces `V` attached to the binomial and trinomial families.

use crate::error::{domain, Error, Result};
use crate::families::{coeff_a2, trinomial_coeffs, Sign};
use crate::gf::{FieldCtx, FieldElem};
use crate::transcript::Transcript;

use super::Subspace;

fn pow3(k: usize) -> u128 {
    3u128.pow(k as u32)
}

/// `V = c·GF(3^{2k})` for the binomial with parameters `(a_1, sign)`.
#[derive(Clone, Debug)]
pub struct BinomialSubspace {
    pub v: Subspace,
    pub rep: FieldElem,
    pub a2: FieldElem,
    /// Which of `±I` on the right-hand side of the coset equation was kept.
    pub coset_sign: Sign,
    pub transcript: Transcript,
}

struct BinomialEqs<'a> {
    ctx: &'a FieldCtx,
    k: usize,
    a1: FieldElem,
    a2: FieldElem,
}

impl BinomialEqs<'_> {
    fn big_c(&self, c: FieldElem) -> FieldElem {
        self.ctx.pow(c, pow3(2 * self.k) - 1)
    }

    /// `Tr^n_{2k}(a_2 c^{2·3^k}) = 0`.
    fn eq1(&self, c: FieldElem) -> bool {
        let ctx = self.ctx;
        let y = ctx.mul(self.a2, ctx.pow(c, 2 * pow3(self.k)));
        ctx.trace_rel(y, 2 * self.k).unwrap().is_zero()
    }

    /// `Tr^n_{2k}(a_1 c^{2(3^k+1)}) = 0`.
    fn eq2(&self, c: FieldElem) -> bool {
        let ctx = self.ctx;
        let y = ctx.mul(self.a1, ctx.pow(c, 2 * (pow3(self.k) + 1)));
        ctx.trace_rel(y, 2 * self.k).unwrap().is_zero()
    }

    /// `c^2 (a_1 + a_1^{3^k} C^2 + a_2 C) = 0`, `C = c^{3^{2k}-1}`.
    fn eq3(&self, c: FieldElem) -> bool {
        let ctx = self.ctx;
        let cc = self.big_c(c);
        let a1q = ctx.frobenius(self.a1, self.k);
        let s = ctx.add(
            ctx.add(self.a1, ctx.mul(a1q, ctx.mul(cc, cc))),
            ctx.mul(self.a2, cc),
        );
        ctx.mul(ctx.mul(c, c), s).is_zero()
    }

    /// `c^{3^k+1} (-a_1^{3^k} C + a_2 + a_2^{3^k} C^{3^k+1}) = 0`.
    fn eq4(&self, c: FieldElem) -> bool {
        let ctx = self.ctx;
        let q = pow3(self.k);
        let cc = self.big_c(c);
        let a1q = ctx.frobenius(self.a1, self.k);
        let a2q = ctx.frobenius(self.a2, self.k);
        let s = ctx.add(
            ctx.sub(self.a2, ctx.mul(a1q, cc)),
            ctx.mul(a2q, ctx.pow(cc, q + 1)),
        );
        ctx.mul(ctx.pow(c, q + 1), s).is_zero()
    }
}

/// Solves `c^{3^{2k}-1} = ±I a_2^{3^k(3^{2k}-1)/2}` for both signs and keeps
/// the coset on which the defining equations hold; then checks all four
/// identities on every element of `V` and that `V^⊥` is supplementary.
pub fn build_v_binomial(
    ctx: &FieldCtx,
    k: usize,
    a1: FieldElem,
    sign: Sign,
) -> Result<BinomialSubspace> {
    let a2 = coeff_a2(ctx, k, a1, sign)?;
    let eqs = BinomialEqs { ctx, k, a1, a2 };
    let q = pow3(k);
    let q2 = pow3(2 * k);
    let i = ctx.fourth_root_of_unity()?;
    let base = ctx.mul(i, ctx.pow(a2, q * (q2 - 1) / 2));

    let mut t = Transcript::new();
    let mut kept = Vec::new();
    for s in [Sign::Plus, Sign::Minus] {
        if let Some(c) = ctx.solve_coset(2 * k, s.apply(ctx, base))? {
            if eqs.eq1(c) && eqs.eq3(c) {
                kept.push((s, c));
            }
        }
    }
    let &[(coset_sign, rep)] = kept.as_slice() else {
        return Err(Error::Inconsistency(format!(
            "{} coset(s) satisfy the defining equations, expected exactly one",
            kept.len()
        )));
    };
    t.pass(
        "unique_coset",
        Some(format!("sign={coset_sign} c={}", ctx.fmt_log(rep))),
    );

    let v = Subspace::coset(ctx, rep, 2 * k)?;
    let nonzero: Vec<FieldElem> = v.elements(ctx).into_iter().skip(1).collect();
    for (idx, name) in ["eq_trace_a2", "eq_trace_a1", "eq_coset", "eq_conjugate"]
        .into_iter()
        .enumerate()
    {
        let holds = |c: FieldElem| match idx {
            0 => eqs.eq1(c),
            1 => eqs.eq2(c),
            2 => eqs.eq3(c),
            _ => eqs.eq4(c),
        };
        match nonzero.iter().find(|&&c| !holds(c)) {
            None => t.pass(name, None),
            Some(&c) => t.fail(name, format!("c={}", ctx.fmt_log(c))),
        }
    }
    let perp = v.orthogonal(ctx);
    t.record(
        "orthogonal_supplement",
        v.meets_trivially(ctx, &perp),
        "V meets its orthogonal",
    );
    Ok(BinomialSubspace {
        v,
        rep,
        a2,
        coset_sign,
        transcript: t,
    })
}

/// `V = c·GF(3^k)` for the trinomial, with its coefficients.
#[derive(Clone, Debug)]
pub struct TrinomialSubspace {
    pub v: Subspace,
    pub rep: FieldElem,
    pub coeffs: [FieldElem; 3],
    pub transcript: Transcript,
}

/// Solves `a_1 c^{3^k-1} = a_2`, then checks the three relative traces, that
/// `V` avoids GF(3^k), and that `V` is self-orthogonal (odd `k`) or has a
/// supplementary orthogonal (even `k`).
pub fn build_v_trinomial(ctx: &FieldCtx, k: usize, sign: Sign) -> Result<TrinomialSubspace> {
    let coeffs = trinomial_coeffs(ctx, k, sign)?;
    let [a1, a2, a3] = coeffs;
    let rhs = ctx.div(a2, a1)?;
    let rep = ctx
        .solve_coset(k, rhs)?
        .ok_or_else(|| Error::Inconsistency("a_2/a_1 is not a (3^k-1)-th power".into()))?;
    let v = Subspace::coset(ctx, rep, k)?;
    let q = pow3(k);

    let mut t = Transcript::new();
    let nonzero: Vec<FieldElem> = v.elements(ctx).into_iter().skip(1).collect();
    let defining = nonzero
        .iter()
        .find(|&&c| ctx.mul(a1, ctx.pow(c, q - 1)) != a2);
    match defining {
        None => t.pass("eq_coset", None),
        Some(&c) => t.fail("eq_coset", format!("c={}", ctx.fmt_log(c))),
    }
    let traces = nonzero.iter().find(|&&c| {
        let c2 = ctx.mul(c, c);
        let c4 = ctx.mul(c2, c2);
        [ctx.mul(a1, c2), ctx.mul(a2, c4), ctx.mul(a3, c2)]
            .iter()
            .any(|&y| !ctx.trace_rel(y, k).unwrap().is_zero())
    });
    match traces {
        None => t.pass("eq_traces", None),
        Some(&c) => t.fail("eq_traces", format!("c={}", ctx.fmt_log(c))),
    }
    let sub = Subspace::subfield(ctx, k)?;
    t.record(
        "avoids_subfield",
        v.meets_trivially(ctx, &sub),
        "V meets GF(3^k)",
    );
    if k % 2 == 1 {
        t.record(
            "self_orthogonal",
            v.is_self_orthogonal(ctx),
            "Tr(uv) != 0 for some u, v in V",
        );
    } else {
        let perp = v.orthogonal(ctx);
        t.record(
            "orthogonal_supplement",
            v.meets_trivially(ctx, &perp),
            "V meets its orthogonal",
        );
    }
    if v.dim() != k {
        return domain("coset has the wrong dimension");
    }
    Ok(TrinomialSubspace {
        v,
        rep,
        coeffs,
        transcript: t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_v_at_n4() {
        let ctx = FieldCtx::new(4, None).unwrap();
        for a1 in ctx.elements().skip(1) {
            if ctx.is_square(a1).unwrap() {
                continue;
            }
            for s in [Sign::Plus, Sign::Minus] {
                let b = build_v_binomial(&ctx, 1, a1, s).unwrap();
                assert_eq!(b.v.elements(&ctx).len(), 9);
                assert!(b.transcript.all_pass(), "{}", b.transcript);
            }
        }
    }

    #[test]
    fn trinomial_v_small() {
        for k in [2usize, 3] {
            let ctx = FieldCtx::new(2 * k, None).unwrap();
            for s in [Sign::Plus, Sign::Minus] {
                let b = build_v_trinomial(&ctx, k, s).unwrap();
                assert!(b.transcript.all_pass(), "k={k}: {}", b.transcript);
            }
        }
    }
}

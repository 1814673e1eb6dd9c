//! Derivatives and the Maiorana-McFarland style criteria.

mod lemmas;
mod subspace;

pub use lemmas::{build_v_binomial, build_v_trinomial, BinomialSubspace, TrinomialSubspace};
pub use subspace::{Decomposer, Subspace, SubspaceKind};

use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::function::TernaryFn;
use crate::gf::{FieldCtx, FieldElem};
use crate::transcript::{Transcript, MAX_FAILURES};

/// `D_c f(x) = f(x+c) - f(x)`.
pub fn d1(f: &TernaryFn, c: FieldElem) -> TernaryFn {
    let t = f.table();
    let mut out = vec![0u8; t.len()];
    f.ctx().translation(c).for_each(|x, y| {
        out[x] = (t[y] + 3 - t[x]) % 3;
    });
    TernaryFn::from_table(f.ctx_arc().clone(), out).expect("same field, values reduced")
}

/// `D_{c,d} f(x) = f(x+c+d) - f(x+c) - f(x+d) + f(x)`.
pub fn d2(f: &TernaryFn, c: FieldElem, d: FieldElem) -> TernaryFn {
    let ctx = f.ctx();
    let t = f.table();
    let (tc, td) = (ctx.translation(c), ctx.translation(d));
    let tcd = ctx.translation(ctx.add(c, d));
    let table = ctx
        .elements()
        .map(|x| {
            let v = t[tcd.apply(x).index() as usize] as i32
                - t[tc.apply(x).index() as usize] as i32
                - t[td.apply(x).index() as usize] as i32
                + t[x.index() as usize] as i32;
            v.rem_euclid(3) as u8
        })
        .collect();
    TernaryFn::from_table(f.ctx_arc().clone(), table).expect("same field, values reduced")
}

/// Whether `D_c f` takes each value exactly `3^{n-1}` times, computed
/// without materialising the derivative.
pub fn derivative_balanced(f: &TernaryFn, c: FieldElem) -> bool {
    let t = f.table();
    let mut h = [0usize; 3];
    f.ctx()
        .translation(c)
        .for_each(|x, y| h[((t[y] + 3 - t[x]) % 3) as usize] += 1);
    h[0] == h[1] && h[1] == h[2]
}

/// Restriction of `f` to `w + V` written as `f(w) + sum s_i L_i`, where `s`
/// are the coordinates over the basis of `V`.
#[derive(Clone, Debug)]
struct CosetFit {
    w: FieldElem,
    g: u8,
    slopes: Vec<u8>,
    /// First `v` (as an element of `V`) where the fit breaks.
    breaks_at: Option<FieldElem>,
}

fn fit_cosets(f: &TernaryFn, v: &Subspace, w: &Subspace) -> Vec<CosetFit> {
    let ctx = f.ctx();
    let v_elems = v.elements(ctx);
    let w_elems = w.elements(ctx);
    let basis = v.basis();
    w_elems
        .par_iter()
        .map(|&w0| {
            let g = f.value(w0);
            let slopes: Vec<u8> = basis
                .iter()
                .map(|&b| (f.value(ctx.add(w0, b)) + 3 - g) % 3)
                .collect();
            let mut expected = Vec::with_capacity(v_elems.len());
            expected.push(g);
            for &s in &slopes {
                let len = expected.len();
                for digit in 1..3u8 {
                    for r in 0..len {
                        expected.push((expected[r] + digit * s) % 3);
                    }
                }
            }
            let breaks_at = v_elems
                .iter()
                .zip(&expected)
                .find(|(&x, &e)| f.value(ctx.add(w0, x)) != e)
                .map(|(&x, _)| x);
            CosetFit {
                w: w0,
                g,
                slopes,
                breaks_at,
            }
        })
        .collect()
}

/// A pair `(c, d)` in `V` with `D_{c,d} f(x0) != 0`; one exists whenever
/// `f` is not affine on `x0 + V`.
fn failing_pair(f: &TernaryFn, v: &Subspace, x0: FieldElem) -> Option<(FieldElem, FieldElem)> {
    let ctx = f.ctx();
    let elems = v.elements(ctx);
    let f0 = f.value(x0) as i32;
    let fx: Vec<i32> = elems
        .iter()
        .map(|&c| f.value(ctx.add(x0, c)) as i32)
        .collect();
    for (i, &c) in elems.iter().enumerate() {
        for (j, &d) in elems.iter().enumerate().skip(i) {
            let cd = f.value(ctx.add(x0, ctx.add(c, d))) as i32;
            if (cd - fx[i] - fx[j] + f0).rem_euclid(3) != 0 {
                return Some((c, d));
            }
        }
    }
    None
}

fn record_affine(f: &TernaryFn, v: &Subspace, fits: &[CosetFit], t: &mut Transcript) -> bool {
    let ctx = f.ctx();
    let broken: Vec<&CosetFit> = fits.iter().filter(|c| c.breaks_at.is_some()).collect();
    if broken.is_empty() {
        t.pass("d2_vanishes", None);
        return true;
    }
    for (i, fit) in broken.iter().enumerate() {
        let witness = if i == 0 {
            match failing_pair(f, v, fit.w) {
                Some((c, d)) => format!(
                    "x={} c={} d={}",
                    ctx.fmt_log(fit.w),
                    ctx.fmt_log(c),
                    ctx.fmt_log(d)
                ),
                None => format!("x={}", ctx.fmt_log(fit.w)),
            }
        } else {
            format!("x={}", ctx.fmt_log(fit.w))
        };
        t.fail("d2_vanishes", witness);
    }
    false
}

/// True iff `D_{c,d} f ≡ 0` for all `c, d` in `V`, tested as "f is affine on
/// every coset of `V`".
pub fn d2_vanishes_on(f: &TernaryFn, v: &Subspace) -> (bool, Transcript) {
    let mut t = Transcript::new();
    let w = v.complement(f.ctx());
    let fits = fit_cosets(f, v, &w);
    let ok = record_affine(f, v, &fits, &mut t);
    (ok, t)
}

/// The completed-class check for a function already known to be bent,
/// given a candidate `V`.
pub fn prop1_given_v(f: &TernaryFn, v: &Subspace) -> bool {
    d2_vanishes_on(f, v).0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MMMode {
    /// `π: V^⊥ -> V`.
    Thm2,
    /// `π: W -> W` with `V` self-orthogonal.
    Prop3,
}

/// `f(v + w) = Tr(v·π(w)) + g(w)` over `V ⊕ W`.
#[derive(Clone, Debug)]
pub struct MMWitness {
    pub v: Subspace,
    pub w: Subspace,
    pub w_elems: Vec<FieldElem>,
    pub pi: Vec<FieldElem>,
    pub g: Vec<u8>,
    pub mode: MMMode,
}

impl MMWitness {
    pub fn pi_of(&self, w: FieldElem) -> Option<FieldElem> {
        self.w_elems
            .iter()
            .position(|&x| x == w)
            .map(|i| self.pi[i])
    }

    /// The table of `v + w -> Tr(v·π(w)) + g(w)`.
    pub fn reconstruct(&self, ctx: &FieldCtx) -> Vec<u8> {
        let v_elems = self.v.elements(ctx);
        let mut table = vec![0u8; ctx.size()];
        for (i, &w) in self.w_elems.iter().enumerate() {
            for &v in &v_elems {
                let x = ctx.add(v, w);
                table[x.index() as usize] = (ctx.trace_abs(ctx.mul(v, self.pi[i])) + self.g[i]) % 3;
            }
        }
        table
    }
}

/// Verdict of [`check_thm2`] or [`check_prop3`].
#[derive(Clone, Debug)]
pub struct MMOutcome {
    pub holds: bool,
    pub witness: Option<MMWitness>,
    pub transcript: Transcript,
}

/// Turns per-coset slopes into `π(w)` in `target`, solving
/// `Tr(β_i y) = L_i` for the basis `β_i` of `V`.
fn extract_pi(
    ctx: &FieldCtx,
    v: &Subspace,
    target: &Subspace,
    fits: &[CosetFit],
) -> Option<Vec<FieldElem>> {
    let inv = v.trace_pairing(ctx, target).inverse()?;
    Some(
        fits.iter()
            .map(|fit| ctx.combine(target.basis(), &inv.mul_vec(&fit.slopes)))
            .collect(),
    )
}

fn is_bijection_onto(ctx: &FieldCtx, images: &[FieldElem], target: &Subspace) -> bool {
    let mut seen = vec![false; ctx.size()];
    for &y in images {
        if !target.contains(ctx, y) || std::mem::replace(&mut seen[y.index() as usize], true) {
            return false;
        }
    }
    images.len() == 3usize.pow(target.dim() as u32)
}

fn finish_witness(
    f: &TernaryFn,
    v: &Subspace,
    w: &Subspace,
    pi_target: &Subspace,
    fits: &[CosetFit],
    mode: MMMode,
    t: &mut Transcript,
) -> Option<MMWitness> {
    let ctx = f.ctx();
    let Some(pi) = extract_pi(ctx, v, pi_target, fits) else {
        t.fail("pi_extracted", "trace pairing is degenerate");
        return None;
    };
    let bij = is_bijection_onto(ctx, &pi, pi_target);
    t.record("pi_bijective", bij, "two cosets share an image");
    let witness = MMWitness {
        v: v.clone(),
        w: w.clone(),
        w_elems: fits.iter().map(|c| c.w).collect(),
        pi,
        g: fits.iter().map(|c| c.g).collect(),
        mode,
    };
    let rebuilt = witness.reconstruct(ctx);
    let mismatch = rebuilt.iter().zip(f.table()).position(|(a, b)| a != b);
    t.record(
        "reconstruction",
        mismatch.is_none(),
        format!(
            "x=t:{}",
            mismatch
                .map(|i| ctx.fmt_trits(FieldElem::from_index(i as u32)))
                .unwrap_or_default()
        ),
    );
    (bij && mismatch.is_none()).then_some(witness)
}

fn require_half(ctx: &FieldCtx, s: &Subspace, name: &str) -> Result<()> {
    if !ctx.n().is_multiple_of(2) || 2 * s.dim() != ctx.n() {
        return domain(format!(
            "{name} has dimension {}, expected n/2 with n = {}",
            s.dim(),
            ctx.n()
        ));
    }
    Ok(())
}

/// Bentness via second derivatives vanishing on `V`, `V^⊥` supplementary
/// and balanced first derivatives along `V`.
pub fn check_thm2(f: &TernaryFn, v: &Subspace) -> Result<MMOutcome> {
    let ctx = f.ctx();
    require_half(ctx, v, "V")?;
    let mut t = Transcript::new();
    let perp = v.orthogonal(ctx);
    let supplementary = v.meets_trivially(ctx, &perp);
    t.record(
        "orthogonal_supplement",
        supplementary,
        "V meets its orthogonal",
    );
    if !supplementary {
        return Ok(MMOutcome {
            holds: false,
            witness: None,
            transcript: t,
        });
    }

    let fits = fit_cosets(f, v, &perp);
    let affine = record_affine(f, v, &fits, &mut t);

    let bad: Vec<FieldElem> = v
        .elements(ctx)
        .into_par_iter()
        .skip(1)
        .filter(|&c| !derivative_balanced(f, c))
        .collect();
    if bad.is_empty() {
        t.pass("d1_balanced", None);
    }
    for &c in bad.iter().take(MAX_FAILURES) {
        t.fail("d1_balanced", format!("c={}", ctx.fmt_log(c)));
    }

    let witness = if affine && bad.is_empty() {
        finish_witness(f, v, &perp, v, &fits, MMMode::Thm2, &mut t)
    } else {
        None
    };
    Ok(MMOutcome {
        holds: witness.is_some(),
        witness,
        transcript: t,
    })
}

/// The self-orthogonal variant: `f(v + w) = Tr(v·π(w)) + g(w)` with `π` a
/// permutation of `W`.
pub fn check_prop3(f: &TernaryFn, v: &Subspace, w: &Subspace) -> Result<MMOutcome> {
    let ctx = f.ctx();
    require_half(ctx, v, "V")?;
    require_half(ctx, w, "W")?;
    if !v.is_self_orthogonal(ctx) {
        return domain("V is not self-orthogonal; use the supplementary-orthogonal criterion");
    }
    if !v.meets_trivially(ctx, w) {
        return domain("V and W are not supplementary");
    }
    let mut t = Transcript::new();
    t.pass("self_orthogonal", None);
    let fits = fit_cosets(f, v, w);
    let affine = record_affine(f, v, &fits, &mut t);
    let witness = if affine {
        finish_witness(f, v, w, w, &fits, MMMode::Prop3, &mut t)
    } else {
        None
    };
    Ok(MMOutcome {
        holds: witness.is_some(),
        witness,
        transcript: t,
    })
}

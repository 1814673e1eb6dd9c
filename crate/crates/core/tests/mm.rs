mod common;

use std::sync::Arc;

use bent3::analysis::{check_bent, Regularity};
use bent3::families::{
    expand_family, make_binomial_general, make_trinomial, ExpandableFamily, MultivariatePoly,
    QuarticBasis, QuarticMinPoly, Sign,
};
use bent3::mm::{
    build_v_trinomial, check_prop3, check_thm2, d2_vanishes_on, prop1_given_v, MMMode, Subspace,
};
use bent3::{FieldCtx, FieldElem, TernaryFn, TraceTerm};
use common::{d2_triple_loop, field, random_fn, random_subspace};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn affine_test_agrees_with_triple_loop() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [2usize, 4] {
        let ctx = field(n);
        for dim in 1..=n / 2 + 1 {
            for _ in 0..20 {
                let f = random_fn(&ctx, &mut rng);
                let v = random_subspace(&ctx, dim, &mut rng);
                assert_eq!(d2_vanishes_on(&f, &v).0, d2_triple_loop(&f, &v));
            }
        }
    }
    // a quadratic has constant second derivatives, vanishing on isotropic lines
    let ctx = field(4);
    let q = TernaryFn::from_trace_form(ctx.clone(), vec![TraceTerm::new(ctx.generator(), 4)]);
    let mut vanishing = 0;
    for x in ctx.elements().skip(1) {
        let v = Subspace::from_basis(&ctx, vec![x]).unwrap();
        let ok = d2_vanishes_on(&q, &v).0;
        assert_eq!(ok, d2_triple_loop(&q, &v));
        vanishing += usize::from(ok);
    }
    assert!(vanishing > 0 && vanishing < 80);
}

/// Brute-force bentness at n = 2 for Tr(c x^2) against the derivative check
/// on every line.
#[test]
fn thm2_on_quadratics_at_n2() {
    let ctx = field(2);
    for c in ctx.elements().skip(1) {
        let f = TernaryFn::from_trace_form(ctx.clone(), vec![TraceTerm::new(c, 2)]);
        let bent = check_bent(&f).is_bent;
        for x in ctx.elements().skip(1) {
            let v = Subspace::from_basis(&ctx, vec![x]).unwrap();
            let out = check_thm2(&f, &v).unwrap();
            if out.holds {
                assert!(bent);
                assert_eq!(check_bent(&f).regularity, Regularity::Regular);
            }
        }
    }
}

#[test]
fn thm2_success_implies_regular_bent() {
    let ctx = field(4);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let f = random_fn(&ctx, &mut rng);
        let v = random_subspace(&ctx, 2, &mut rng);
        if check_thm2(&f, &v).unwrap().holds {
            let cert = check_bent(&f);
            assert!(cert.is_bent && cert.regularity == Regularity::Regular);
        }
    }
}

#[test]
fn zero_function_fails_with_a_recorded_c() {
    let ctx = field(4);
    let f = TernaryFn::zero(ctx.clone());
    let v = Subspace::coset(&ctx, ctx.generator(), 2).unwrap();
    let out = check_thm2(&f, &v).unwrap();
    assert!(!out.holds);
    let text = out.transcript.to_string();
    assert!(text.contains("CHECK d1_balanced FAIL c=g^"), "{text}");

    let t = build_v_trinomial(&field(6), 3, Sign::Plus).unwrap();
    let w = Subspace::subfield(&field(6), 3).unwrap();
    let z = TernaryFn::zero(field(6));
    assert!(!check_prop3(&z, &t.v, &w).unwrap().holds);
}

#[test]
fn witness_reconstructs_the_function() {
    let ctx = field(4);
    let a1 = ctx.generator();
    let f = make_binomial_general(&ctx, 1, a1, Sign::Minus).unwrap();
    let v = bent3::mm::build_v_binomial(&ctx, 1, a1, Sign::Minus)
        .unwrap()
        .v;
    let w = check_thm2(&f, &v).unwrap().witness.unwrap();
    assert_eq!(w.mode, MMMode::Thm2);
    assert_eq!(w.reconstruct(&ctx), f.table());
    let mut images: Vec<u32> = w.pi.iter().map(|p| p.index()).collect();
    images.sort_unstable();
    images.dedup();
    assert_eq!(images.len(), 9);
}

#[test]
fn prop3_requires_self_orthogonal_v() {
    let ctx = field(4);
    let v = Subspace::coset(&ctx, ctx.generator(), 2).unwrap();
    let w = v.complement(&ctx);
    let f = TernaryFn::zero(ctx.clone());
    if !v.is_self_orthogonal(&ctx) {
        assert!(check_prop3(&f, &v, &w).is_err());
    }
    let line = Subspace::subfield(&ctx, 1).unwrap();
    assert!(check_thm2(&f, &line).is_err());
}

#[test]
fn even_k_trinomial_passes_thm2() {
    let ctx = field(4);
    for sign in [Sign::Plus, Sign::Minus] {
        let f = make_trinomial(&ctx, 2, sign).unwrap();
        let t = build_v_trinomial(&ctx, 2, sign).unwrap();
        assert!(check_thm2(&f, &t.v).unwrap().holds);
    }
}

/// A maximal totally isotropic subspace of the bilinear form of a quadratic
/// bent function, found by search, always satisfies the completed-class test.
#[test]
fn prop1_on_quadratic_with_isotropic_v() {
    let ctx = field(4);
    let f = TernaryFn::from_trace_form(ctx.clone(), vec![TraceTerm::new(ctx.generator(), 2)]);
    assert!(check_bent(&f).is_bent);
    // B(x, y) = f(x+y) - f(x) - f(y) + f(0)
    let b = |x: FieldElem, y: FieldElem| {
        (f.value(ctx.add(x, y)) as i32 - f.value(x) as i32 - f.value(y) as i32).rem_euclid(3)
    };
    let mut found = 0;
    for i in 1..ctx.size() as u32 {
        for j in i + 1..ctx.size() as u32 {
            let (x, y) = (FieldElem::from_index(i), FieldElem::from_index(j));
            let Ok(v) = Subspace::from_basis(&ctx, vec![x, y]) else {
                continue;
            };
            let elems = v.elements(&ctx);
            let isotropic = elems.iter().all(|&p| elems.iter().all(|&q| b(p, q) == 0));
            if isotropic {
                found += 1;
                assert!(prop1_given_v(&f, &v));
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn prop1_false_for_random_v() {
    let ctx = field(4);
    let f = make_binomial_general(&ctx, 1, ctx.generator(), Sign::Plus).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let hits = (0..50)
        .filter(|_| prop1_given_v(&f, &random_subspace(&ctx, 2, &mut rng)))
        .count();
    assert!(hits < 50);
}

fn coordinate_subspace(ctx: &FieldCtx, basis: &QuarticBasis, dirs: &[[u8; 4]]) -> Subspace {
    let sub = ctx.subfield_basis(basis.k()).unwrap();
    let elems = dirs
        .iter()
        .flat_map(|d| {
            let u = basis.compose(ctx, d.map(|c| ctx.prime(c)));
            sub.iter().map(move |&s| ctx.mul(s, u)).collect::<Vec<_>>()
        })
        .collect();
    Subspace::from_basis(ctx, elems).unwrap()
}

/// The four-variable form is affine along `x_3 = 0, x_2 = x_0 + x_1`, the
/// direction singled out by the substitution `x_0 -> x_0 + x_2`; it is not
/// affine on the `(x_1, x_3)` plane.
#[test]
fn k3mod4_binomial_is_affine_on_the_substitution_plane() {
    let p = expand_family(ExpandableFamily::T3, 3).unwrap();
    for k in [1usize, 3] {
        let ctx: Arc<FieldCtx> = field(4 * k);
        let basis = QuarticBasis::new(&ctx, k, QuarticMinPoly::Primitive).unwrap();
        let pk = MultivariatePoly::new(k, p.terms().clone());
        let f = TernaryFn::from_table(ctx.clone(), pk.to_table(&ctx, &basis).unwrap()).unwrap();
        let plane = coordinate_subspace(&ctx, &basis, &[[2, 1, 0, 0], [1, 0, 1, 0]]);
        assert!(prop1_given_v(&f, &plane), "k={k}");
        let x1x3 = coordinate_subspace(&ctx, &basis, &[[0, 1, 0, 0], [0, 0, 0, 1]]);
        assert!(!prop1_given_v(&f, &x1x3), "k={k}");
    }
}

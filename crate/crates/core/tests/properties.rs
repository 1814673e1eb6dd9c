mod common;

use std::sync::Arc;

use bent3::analysis::{check_bent, double_dual_relation, dual_of, DoubleDual, Regularity};
use bent3::families::{make_binomial_general, Sign};
use bent3::spectrum::{recover_table, spectrum_fast, spectrum_naive};
use bent3::{FieldCtx, FieldElem, TernaryFn};
use common::field;
use proptest::prelude::*;

fn function_strategy() -> impl Strategy<Value = (usize, Vec<u8>)> {
    (2usize..=5).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(0u8..3, 3usize.pow(n as u32)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(n in 1usize..=7, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let ctx = FieldCtx::new(n, None).unwrap();
        let s = ctx.size() as u32;
        let (a, b, c) = (FieldElem::from_index(a % s), FieldElem::from_index(b % s), FieldElem::from_index(c % s));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.frobenius(ctx.add(a, b), 1), ctx.add(ctx.frobenius(a, 1), ctx.frobenius(b, 1)));
        prop_assert_eq!(ctx.trace_abs(ctx.add(a, b)), (ctx.trace_abs(a) + ctx.trace_abs(b)) % 3);
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElem::ONE);
        }
        prop_assert_eq!(ctx.pow(a, ctx.size() as u128), a);
    }

    #[test]
    fn fast_matches_naive_and_inverts((n, table) in function_strategy()) {
        let ctx = field(n);
        let f = TernaryFn::from_table(ctx.clone(), table).unwrap();
        let fast = spectrum_fast(&f);
        prop_assert_eq!(&fast, &spectrum_naive(&f, false).unwrap());
        prop_assert_eq!(fast.parseval_sum(), 3i128.pow(2 * n as u32));
        prop_assert_eq!(recover_table(&ctx, &fast).unwrap(), f.table().to_vec());
    }

    #[test]
    fn bentness_is_ea_invariant(a1_log in 0u64..40, lam in 1u32..81, mu in 0u32..81, lin in 0u32..81, c in 1u8..3) {
        let ctx = field(4);
        let a1 = ctx.exp_of(2 * a1_log + 1);
        let f = make_binomial_general(&ctx, 1, a1, Sign::Plus).unwrap();
        let g = f
            .compose_affine(FieldElem::from_index(lam), FieldElem::from_index(mu))
            .scale(c)
            .add(&TernaryFn::linear(ctx.clone(), FieldElem::from_index(lin)));
        prop_assert!(check_bent(&g).is_bent);
    }
}

#[test]
fn dual_of_regular_bent_is_bent() {
    let ctx: Arc<FieldCtx> = field(4);
    for a1_log in [1u64, 7, 23] {
        let f = make_binomial_general(&ctx, 1, ctx.exp_of(a1_log), Sign::Minus).unwrap();
        let cert = check_bent(&f);
        assert_eq!(cert.regularity, Regularity::Regular);
        let d = dual_of(&cert).unwrap();
        assert!(check_bent(&d).is_bent);
        assert_ne!(double_dual_relation(&f), DoubleDual::NotAvailable);
    }
}

#[test]
fn balanced_function_is_not_bent() {
    let ctx = field(4);
    let f = TernaryFn::linear(ctx.clone(), ctx.generator());
    let cert = check_bent(&f);
    assert!(!cert.is_bent);
    assert!(cert.counterexample.is_some());
}

mod common;

use bent3::analysis::{check_bent, Regularity};
use bent3::families::{
    coeff_a2, exceptionality_check, expand_family, make_binomial_general, make_binomial_t3,
    make_trinomial, multivariate_expand, Exceptional, ExpandableFamily, Family, FamilySpec,
    QuarticBasis, QuarticMinPoly, Sign,
};
use bent3::spectrum::{spectrum_fast, walsh_at};
use bent3::{EisensteinInt, FieldElem};
use common::field;

#[test]
fn closed_form_at_zero_and_norms() {
    let ctx = field(12);
    let c = bent3::families::dual_t3_closed_form(&ctx, 3, FieldElem::ZERO).unwrap();
    assert_eq!(c, EisensteinInt::ONE.scale(729));
    for b in ctx.elements().step_by(4099) {
        let c = bent3::families::dual_t3_closed_form(&ctx, 3, b).unwrap();
        assert_eq!(c.norm(), 531441);
    }
}

#[test]
fn closed_form_is_sign_convention_independent() {
    // all exponents are even, so f(-x) = f(x) and S_f(b) = S_f(-b)
    let ctx = field(12);
    let f = make_binomial_t3(&ctx, 3).unwrap();
    let basis = QuarticBasis::new(&ctx, 3, QuarticMinPoly::Primitive).unwrap();
    for b in ctx.elements().step_by(20011) {
        let plus = basis.t3_walsh_plus(&ctx, b).unwrap();
        assert_eq!(plus, walsh_at(&f, b));
        assert_eq!(walsh_at(&f, b), walsh_at(&f, ctx.neg(b)));
    }
}

#[test]
fn trinomial_signs_are_equivalent_for_odd_k() {
    // replacing x by I x negates the whole function and flips the sign of a_2
    let ctx = field(6);
    let i = ctx.fourth_root_of_unity().unwrap();
    let f = make_trinomial(&ctx, 3, Sign::Plus).unwrap();
    let g = make_trinomial(&ctx, 3, Sign::Minus).unwrap();
    assert_eq!(f.compose_affine(i, FieldElem::ZERO).scale(2), g);
}

#[test]
fn binomial_n8_sampled_is_regular_bent() {
    let ctx = field(8);
    let a1 = ctx.pow(ctx.generator(), 37);
    let f = make_binomial_general(&ctx, 2, a1, Sign::Plus).unwrap();
    let cert = bent3::analysis::check_bent_with(&f, &spectrum_fast(&f));
    assert!(cert.is_bent);
    assert_eq!(cert.regularity, Regularity::Regular);
}

#[test]
fn exceptional_k3_mod4_case_at_n12() {
    let ctx = field(12);
    let spec = FamilySpec::new(Family::Exceptional(Exceptional::T7Case3), 3);
    assert_eq!(spec.field_degree(), 12);
    let f = spec.build(&ctx).unwrap();
    assert!(check_bent(&f).is_bent);
}

#[test]
fn expansion_negative_control() {
    // different a_1 in the general binomial give different four-variable forms
    let ctx = field(4);
    let nonsquares: Vec<FieldElem> = ctx
        .elements()
        .skip(1)
        .filter(|&x| !ctx.is_square(x).unwrap())
        .collect();
    let p1 = multivariate_expand(
        &make_binomial_general(&ctx, 1, nonsquares[0], Sign::Plus).unwrap(),
        1,
        QuarticMinPoly::Primitive,
    )
    .unwrap();
    let p2 = multivariate_expand(
        &make_binomial_general(&ctx, 1, nonsquares[5], Sign::Plus).unwrap(),
        1,
        QuarticMinPoly::Primitive,
    )
    .unwrap();
    assert_ne!(p1, p2);
}

#[test]
fn k3_mod4_binomial_form_differs_between_residues() {
    // the univariate family at k = 1 is another polynomial
    assert!(!exceptionality_check(ExpandableFamily::T3, &[1, 3]).unwrap());
    assert!(exceptionality_check(ExpandableFamily::T3, &[1, 5]).unwrap());
    assert!(expand_family(ExpandableFamily::Exceptional(Exceptional::T8), 3).is_err());
}

#[test]
fn expansion_requires_a_trace_form() {
    let ctx = field(4);
    let f = bent3::TernaryFn::from_table(ctx.clone(), vec![0; 81]).unwrap();
    assert!(multivariate_expand(&f, 1, QuarticMinPoly::Primitive).is_err());
}

#[test]
fn a2_rejects_squares_and_wrong_degree() {
    let ctx = field(4);
    assert!(coeff_a2(&ctx, 1, FieldElem::ONE, Sign::Plus).is_err());
    assert!(coeff_a2(&ctx, 2, ctx.generator(), Sign::Plus).is_err());
}

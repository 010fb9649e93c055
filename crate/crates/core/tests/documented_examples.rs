//! Worked examples for every public operation, one test per operation.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed};
use pure_octic::arith::{char_poly, factorize, p_adic_valuation, poly_discriminant, IntPoly, RatPoly};
use pure_octic::field::FieldElement;
use pure_octic::monogenity::{
    element_index, monogenic_verdict, necessary_condition_index, non_monogenic_tests, pure_power_case,
    search_generator, splitting_at_2, MonogenityError, NonMonogenicReason, Reason, VerdictTag,
};
use pure_octic::newton::{
    common_index_divisor_test, dedekind_divides_index, is_p_regular, ore_index_and_splitting, phi_expand,
    polygon_index, principal_polygon, residual_polynomial, second_order_polygon, PrincipalPolygon, SecondOrderData,
    SplittingReport,
};
use pure_octic::octic::{
    classify_case, index_of_f, integral_basis, is_irreducible_pure_octic, power_basis_at_alpha, reduce_parameter,
    squarefree_decompose, CaseId,
};
use pure_octic::oracle::{is_algebraic_integer, ring_closure, verify_basis};

fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pure(m: i64) -> IntPoly {
    IntPoly::pure(8, &b(m))
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn vertices(p: &PrincipalPolygon) -> Vec<(usize, i64)> {
    p.vertices().iter().map(|(x, y)| (*x, y.to_integer())).collect()
}

#[test]
fn factorize_examples() {
    let f = factorize(&b(28)).unwrap();
    assert_eq!((f.sign(), f.factors()), (1, &[(2, 2), (7, 1)][..]));
    let f = factorize(&b(-1)).unwrap();
    assert_eq!((f.sign(), f.factors()), (-1, &[][..]));
    assert_eq!(factorize(&b(4320)).unwrap().factors(), &[(2, 5), (3, 3), (5, 1)]);
    assert!(factorize(&b(0)).is_err());
}

#[test]
fn valuation_examples() {
    assert_eq!(p_adic_valuation(&b(48), 2).unwrap(), 4);
    assert_eq!(p_adic_valuation(&b(5), 2).unwrap(), 0);
    assert_eq!(p_adic_valuation(&b(1024 * 7), 2).unwrap(), 10);
    assert!(p_adic_valuation(&b(0), 2).is_err());
}

#[test]
fn char_poly_examples() {
    let five = b(5);
    assert_eq!(char_poly(&FieldElement::alpha(&five)), pure(5).to_rat());
    let three = FieldElement::from_integer(3, &five);
    assert_eq!(char_poly(&three), poly(&[-3, 1]).pow(8).to_rat());
    let eight = b(8);
    let theta = FieldElement::alpha_pow(3, &eight).scale(&BigRational::new(b(1), b(2)));
    assert_eq!(char_poly(&theta), pure(2).to_rat());
}

#[test]
fn discriminant_examples() {
    assert_eq!(poly_discriminant(&poly(&[-2, 0, 1])).unwrap(), b(8));
    assert_eq!(poly_discriminant(&poly(&[-8, -2, -1, 1])).unwrap(), b(-2012));
    for m in [2i64, 5, -7, 28] {
        let want = b(2).pow(24) * b(m).abs().pow(7);
        assert_eq!(poly_discriminant(&pure(m)).unwrap().abs(), want);
    }
    assert!(poly_discriminant(&poly(&[1, 2, 1])).is_err());
}

#[test]
fn phi_expansion_examples() {
    let m = 13;
    let e = phi_expand(&pure(m), &poly(&[0, 1])).unwrap();
    let c: Vec<BigInt> = e.coefficients().iter().map(|a| a.coeff(0)).collect();
    assert_eq!(c, [-m, 0, 0, 0, 0, 0, 0, 0, 1].map(b));

    let e = phi_expand(&pure(m), &poly(&[2, 0, 0, 0, 1])).unwrap();
    assert_eq!(e.coefficients(), &[poly(&[4 - m]), poly(&[-4]), poly(&[1])]);

    let e = phi_expand(&pure(m), &poly(&[-1, 1])).unwrap();
    let c: Vec<BigInt> = e.coefficients().iter().map(|a| a.coeff(0)).collect();
    assert_eq!(c, [1 - m, 8, 28, 56, 70, 56, 28, 8, 1].map(b));
    assert_eq!(e.reconstruct(), pure(m));

    assert!(phi_expand(&pure(m), &poly(&[1, 2])).is_err());
}

#[test]
fn principal_polygon_examples() {
    let p = principal_polygon(&pure(5), &poly(&[-1, 1]), 2).unwrap();
    assert_eq!(vertices(&p), vec![(0, 2), (8, 0)]);
    assert_eq!(p.sides()[0].slope(), Rational64::new(-1, 4));
    assert_eq!(p.sides()[0].ordinate_at(4), Rational64::from_integer(1));

    let p = principal_polygon(&pure(41), &poly(&[-1, 1]), 2).unwrap();
    assert_eq!(vertices(&p), vec![(0, 3), (4, 1), (8, 0)]);
    assert_eq!(p.sides().len(), 2);
    assert_eq!(p.sides()[0].ordinate_at(2), Rational64::from_integer(2));

    let p = principal_polygon(&pure(4), &poly(&[0, 1]), 2).unwrap();
    assert_eq!(vertices(&p), vec![(0, 2), (8, 0)]);

    assert!(principal_polygon(&pure(5), &poly(&[1, 1, 1]), 3).is_err());
}

#[test]
fn polygon_index_examples() {
    let fig = PrincipalPolygon::from_vertices(&[(0, 5), (1, 3), (5, 1), (9, 0)]);
    assert_eq!(polygon_index(&fig, 1), 9);
    assert_eq!(polygon_index(&fig, 2), 18);
    assert_eq!(polygon_index(&PrincipalPolygon::from_vertices(&[(0, 1), (8, 0)]), 1), 0);
    let pts = [(0, 2), (4, 1), (8, 0)].map(|(x, y)| (x, Rational64::from_integer(y)));
    assert_eq!(polygon_index(&PrincipalPolygon::from_points(&pts), 1), 4);
}

#[test]
fn residual_polynomial_examples() {
    let f = pure(5);
    let phi = poly(&[-1, 1]);
    let side = principal_polygon(&f, &phi, 2).unwrap().sides()[0].clone();
    assert_eq!(residual_polynomial(&f, &phi, 2, &side).unwrap().to_string(), "y^2 + y + 1");

    let f = pure(4 * 7);
    let phi = poly(&[0, 1]);
    let side = principal_polygon(&f, &phi, 2).unwrap().sides()[0].clone();
    let r = residual_polynomial(&f, &phi, 2, &side).unwrap();
    assert_eq!(r.to_string(), "y^2 + 1");
    assert!(!r.is_square_free());

    let f = pure(2 * 9);
    let side = principal_polygon(&f, &phi, 2).unwrap().sides()[0].clone();
    assert_eq!(residual_polynomial(&f, &phi, 2, &side).unwrap().degree(), 1);
}

#[test]
fn dedekind_examples() {
    assert!(!dedekind_divides_index(&pure(3), 2).unwrap());
    assert!(dedekind_divides_index(&pure(5), 2).unwrap());
    assert!(!dedekind_divides_index(&pure(2), 2).unwrap());
    assert!(dedekind_divides_index(&pure(16), 2).is_err());
}

#[test]
fn regularity_examples() {
    assert!(is_p_regular(&pure(5), 2).unwrap());
    assert!(!is_p_regular(&pure(4), 2).unwrap());
    assert!(is_p_regular(&pure(3), 3).unwrap());
}

#[test]
fn ore_examples() {
    let out = ore_index_and_splitting(&pure(5), 2).unwrap();
    assert_eq!(out.index(), Some(4));
    assert_eq!(out.report().unwrap().pairs(), vec![(4, 2)]);

    let out = ore_index_and_splitting(&pure(33), 2).unwrap();
    assert_eq!(out.report().unwrap().pairs(), vec![(1, 1), (1, 1), (2, 1), (4, 1)]);

    let out = ore_index_and_splitting(&pure(3), 3).unwrap();
    assert_eq!(out.index(), Some(0));
    assert_eq!(out.report().unwrap().pairs(), vec![(8, 1)]);

    // not 2-regular: a failure value with a lower bound, not an error
    assert!(ore_index_and_splitting(&pure(4 * 3), 2).unwrap().index().is_none());
}

#[test]
fn second_order_examples() {
    let x = poly(&[0, 1]);
    let data = SecondOrderData::new(2, x.clone(), 1, 4, poly(&[2, 0, 0, 0, 1])).unwrap();
    let f = pure(20);
    let pts = data.points(&f).unwrap();
    assert_eq!(pts, vec![(0, 16), (1, 12), (2, 8)]);
    assert_eq!(second_order_polygon(&f, &data).unwrap().sides().len(), 1);

    let data = SecondOrderData::new(2, x.clone(), 1, 2, poly(&[2, 0, 1])).unwrap();
    assert_eq!(vertices(&second_order_polygon(&pure(48), &data).unwrap()), vec![(0, 10), (4, 8)]);

    let data = SecondOrderData::new(2, x, 1, 2, poly(&[2, -2, 1])).unwrap();
    let pts = data.points(&pure(272)).unwrap();
    for want in [(1, 13), (2, 10), (4, 8)] {
        assert!(pts.contains(&want), "{pts:?}");
    }

    assert!(SecondOrderData::new(2, poly(&[1, 1, 1]), 1, 2, poly(&[0, 1])).is_err());
}

#[test]
fn common_index_divisor_examples() {
    assert!(common_index_divisor_test(&SplittingReport::from_pairs(2, &[(1, 1), (1, 1), (2, 1), (4, 1)], "")));
    assert!(common_index_divisor_test(&SplittingReport::from_pairs(2, &[(2, 1), (2, 1), (4, 1)], "")));
    assert!(!common_index_divisor_test(&SplittingReport::from_pairs(3, &[(8, 1)], "")));
}

#[test]
fn reduction_examples() {
    assert_eq!(reduce_parameter(&b(512)).unwrap().reduced, b(2));
    assert_eq!(reduce_parameter(&b(28)).unwrap().reduced, b(28));
    assert_eq!(reduce_parameter(&(b(3).pow(8) * 5)).unwrap().reduced, b(5));
    for m in [-1, 0, 1] {
        assert!(reduce_parameter(&b(m)).is_err());
    }
}

#[test]
fn irreducibility_examples() {
    assert!(!is_irreducible_pure_octic(&b(16)));
    assert!(!is_irreducible_pure_octic(&b(-4)));
    assert!(is_irreducible_pure_octic(&b(18)));
    // x^8 + 4 = (x^4 + 2x^2 + 2)(x^4 - 2x^2 + 2)
    let product = &poly(&[2, 0, 2, 0, 1]) * &poly(&[2, 0, -2, 0, 1]);
    assert_eq!(product, pure(-4));
}

#[test]
fn decomposition_examples() {
    let d = squarefree_decompose(&b(28)).unwrap();
    assert_eq!((d.a(1), d.a(2)), (&b(7), &b(2)));
    assert_eq!(d.big_a_values(), &[1, 1, 2, 2, 2, 2].map(b));
    let d = squarefree_decompose(&b(18)).unwrap();
    assert_eq!((d.a(1), d.a(2)), (&b(2), &b(3)));
    assert_eq!(d.big_a_values(), &[1, 1, 3, 3, 3, 3].map(b));
    let d = squarefree_decompose(&b(-50)).unwrap();
    assert_eq!((d.a(1), d.a(2)), (&b(-2), &b(5)));
}

#[test]
fn classification_examples() {
    assert_eq!(classify_case(&b(28)), CaseId::M28Mod32);
    assert_eq!(classify_case(&b(5)), CaseId::M5Mod8);
    assert_eq!(classify_case(&b(6)), CaseId::V2Odd);
}

#[test]
fn integral_basis_examples() {
    let basis = integral_basis(&b(6)).unwrap();
    for (k, w) in basis.elements().iter().enumerate() {
        assert_eq!(w.denominator(), &b(1));
        assert_eq!(w.numerator(), &IntPoly::monomial(b(1), k));
    }

    let m = b(5);
    let m4 = m.pow(4);
    let basis = integral_basis(&m).unwrap();
    for k in 4..8 {
        let w = &basis.elements()[k];
        assert_eq!(w.denominator(), &b(2));
        let want = &IntPoly::monomial(b(1), k) + &IntPoly::monomial(m4.clone(), k - 4);
        assert_eq!(w.numerator(), &want);
    }

    let den: Vec<BigInt> = integral_basis(&b(28)).unwrap().elements().iter().map(|w| w.denominator().clone()).collect();
    assert_eq!(den, [1, 1, 1, 1, 4, 4, 8, 8].map(b));
}

#[test]
fn index_examples() {
    let r = index_of_f(&b(5)).unwrap();
    assert_eq!(r.index.to_integer(), b(16));
    assert_eq!(r.d_k.abs().to_integer(), b(2).pow(16) * b(5).pow(7));
    assert_eq!(index_of_f(&b(41)).unwrap().valuation(2), 6);
    let r = index_of_f(&b(28)).unwrap();
    assert_eq!((r.valuation(2), r.valuation(7)), (10, 0));
}

#[test]
fn power_basis_examples() {
    assert!(power_basis_at_alpha(&b(2)).unwrap());
    assert!(!power_basis_at_alpha(&b(5)).unwrap());
    assert!(!power_basis_at_alpha(&b(12)).unwrap());
}

#[test]
fn element_index_examples() {
    assert_eq!(element_index(&FieldElement::alpha(&b(2))).unwrap(), b(1));
    let eight = b(8);
    let theta = FieldElement::alpha_pow(3, &eight).scale(&BigRational::new(b(1), b(2)));
    assert_eq!(element_index(&theta).unwrap(), b(1));
    assert!(matches!(
        element_index(&FieldElement::from_integer(1, &b(7))),
        Err(MonogenityError::NotPrimitive)
    ));
}

#[test]
fn necessary_condition_examples() {
    assert!(necessary_condition_index(&squarefree_decompose(&b(2 * 5 * 7)).unwrap()).unwrap());
    assert!(!necessary_condition_index(&squarefree_decompose(&b(18)).unwrap()).unwrap());
    assert!(necessary_condition_index(&squarefree_decompose(&b(98)).unwrap()).unwrap());
    // outside the applicability guard
    assert!(necessary_condition_index(&squarefree_decompose(&b(5)).unwrap()).is_err());
}

#[test]
fn non_monogenic_examples() {
    let reason = |m: i64| non_monogenic_tests(&b(m), &squarefree_decompose(&b(m)).unwrap());
    assert_eq!(reason(33), Some(NonMonogenicReason::OneMod32));
    assert_eq!(reason(272), Some(NonMonogenicReason::M272Mod512));
    assert_eq!(reason(18), Some(NonMonogenicReason::IndexDivisibility));
    assert_eq!(reason(98), None);
}

#[test]
fn pure_power_examples() {
    let v = pure_power_case(&b(8)).unwrap().unwrap();
    assert_eq!(v.tag, VerdictTag::Monogenic);
    assert_eq!(v.reason, Reason::PurePower { a: b(2), u: 3, x: 3, y: 1 });

    let v = pure_power_case(&b(32)).unwrap().unwrap();
    assert_eq!(v.reason, Reason::PurePower { a: b(2), u: 5, x: 5, y: 3 });
    let w = v.witness.unwrap();
    assert!(is_algebraic_integer(&w));
    assert_eq!(char_poly(&w), pure(2).to_rat());

    assert_eq!(pure_power_case(&b(125)).unwrap().unwrap().tag, VerdictTag::NotMonogenic);
    assert_eq!(pure_power_case(&b(-27)).unwrap().unwrap().tag, VerdictTag::Inconclusive);
    assert!(pure_power_case(&b(12)).unwrap().is_none());
}

#[test]
fn splitting_examples() {
    let (r, _) = splitting_at_2(&b(33)).unwrap();
    assert_eq!((r.pairs(), r.total_degree()), (vec![(1, 1), (1, 1), (2, 1), (4, 1)], 8));
    let (r, _) = splitting_at_2(&b(272)).unwrap();
    assert_eq!((r.pairs(), r.total_degree()), (vec![(2, 1), (2, 1), (4, 1)], 8));
    assert_eq!(splitting_at_2(&b(3)).unwrap().0.pairs(), vec![(8, 1)]);
    assert!(matches!(splitting_at_2(&b(12)), Err(MonogenityError::Unsupported(_))));
}

#[test]
fn search_examples() {
    let out = search_generator(&b(2), 1).unwrap();
    assert!(out.found_index_one());
    assert_eq!(out.best.unwrap().index, b(1));

    let out = search_generator(&b(33), 2).unwrap();
    assert!(!out.found_index_one());
    assert!(out.minimal_index().unwrap() % 2u32 == BigInt::from(0));

    let out = search_generator(&b(8), 2).unwrap();
    assert!(out.found_index_one());
    let best = out.best.unwrap();
    assert_eq!(element_index(&best.element).unwrap(), b(1));
}

#[test]
fn verdict_examples() {
    assert_eq!(monogenic_verdict(&b(6)).unwrap().tag, VerdictTag::PowerBasisAtAlpha);
    let v = monogenic_verdict(&b(33)).unwrap();
    assert_eq!((v.tag, v.reason), (VerdictTag::NotMonogenic, Reason::Condition(NonMonogenicReason::OneMod32)));
    let v = monogenic_verdict(&b(98)).unwrap();
    assert_eq!(v.tag, VerdictTag::Inconclusive);
    assert!(v.evidence.unwrap().minimal_index().unwrap() > &BigInt::one());
    assert!(monogenic_verdict(&b(16)).is_err());
}

#[test]
fn integrality_examples() {
    let m = b(20);
    // m_2 = 5, u = 13, 2 m_2 u = 130
    let theta = FieldElement::from_poly(&poly(&[130, 0, 0, 0, 1]), &b(2), &m);
    assert!(is_algebraic_integer(&theta));
    let half_alpha = FieldElement::alpha(&b(2)).scale(&BigRational::new(b(1), b(2)));
    assert!(!is_algebraic_integer(&half_alpha));
    assert_eq!(char_poly(&half_alpha), RatPoly::new({
        let mut c = vec![BigRational::from_integer(b(0)); 9];
        c[0] = BigRational::new(b(-2), b(256));
        c[8] = BigRational::one();
        c
    }));
    assert!(is_algebraic_integer(&FieldElement::from_integer(-7, &m)));
}

#[test]
fn ring_closure_examples() {
    assert!(ring_closure(&integral_basis(&b(3)).unwrap()));
    assert!(ring_closure(&integral_basis(&b(5)).unwrap()));
    let basis = integral_basis(&b(5)).unwrap();
    let mut elements = basis.elements().to_vec();
    elements[5] = pure_octic::octic::BasisElement::new(elements[5].numerator().clone(), elements[5].denominator() * 2);
    let corrupted = pure_octic::octic::IntegralBasis::from_elements(b(5), basis.case(), elements);
    assert!(!ring_closure(&corrupted));
}

#[test]
fn verify_examples() {
    for (m, nu2) in [(6, 0), (28, 10), (41, 6)] {
        let r = verify_basis(&b(m)).unwrap();
        assert!(r.overall(), "{r}");
        assert_eq!(index_of_f(&b(m)).unwrap().valuation(2), nu2);
    }
}

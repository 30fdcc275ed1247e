//! Normal-form arithmetic in the first Weyl algebra: the defining relation,
//! associativity, the faithful polynomial action, and the exact certificate
//! for the identities behind the infinite-dimensional counterexample.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nullsatz::weyl::{
    certificate_check, poly_rep_apply, simplicity_smoke, weyl_mul, RatPoly, WeylElem,
};

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn mono(i: u32, j: u32, c: i64) -> WeylElem {
    WeylElem::monomial(i, j, int(c))
}

#[test]
fn the_product_normalizes_the_defining_relation() {
    let x = WeylElem::x();
    let y = WeylElem::y();

    let yx = weyl_mul(&y, &x);
    assert_eq!(yx, mono(1, 1, 1).add(&mono(0, 0, 1)));
    assert_eq!(yx.render(), "x*y + 1");

    // x·y is already in normal form.
    assert_eq!(weyl_mul(&x, &y), mono(1, 1, 1));

    let x2 = mono(2, 0, 1);
    let lhs = weyl_mul(&y, &x2).sub(&weyl_mul(&x2, &y));
    assert_eq!(lhs, mono(1, 0, 2));

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let a = WeylElem::random(&mut rng, 5, 5);
        assert_eq!(weyl_mul(&WeylElem::one(), &a), a);
        assert_eq!(weyl_mul(&a, &WeylElem::one()), a);
    }
}

#[test]
fn multiplication_is_associative_on_seeded_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..1000 {
        let a = WeylElem::random(&mut rng, 5, 5);
        let b = WeylElem::random(&mut rng, 5, 5);
        let c = WeylElem::random(&mut rng, 5, 5);
        assert_eq!(weyl_mul(&weyl_mul(&a, &b), &c), weyl_mul(&a, &weyl_mul(&b, &c)));
    }
}

#[test]
fn the_polynomial_action_respects_products() {
    let one: RatPoly = vec![int(1)];
    let t: RatPoly = vec![int(0), int(1)];

    let yx = weyl_mul(&WeylElem::y(), &WeylElem::x());
    assert_eq!(poly_rep_apply(&yx, &one), one);
    assert_eq!(poly_rep_apply(&WeylElem::y(), &t), one);
    assert_eq!(poly_rep_apply(&WeylElem::x(), &one), t);

    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let a = WeylElem::random(&mut rng, 4, 4);
        let b = WeylElem::random(&mut rng, 4, 4);
        let p: RatPoly = (0..=6).map(|_| int(rng.gen_range(-3i64..=3))).collect();
        let joint = poly_rep_apply(&weyl_mul(&a, &b), &p);
        let staged = poly_rep_apply(&a, &poly_rep_apply(&b, &p));
        assert_eq!(joint, staged);
    }
}

#[test]
fn the_commutator_with_y_differentiates_coefficients() {
    // r = x^2 y has commutator 2 x y.
    let r = mono(2, 1, 1);
    let lhs = weyl_mul(&WeylElem::y(), &r).sub(&weyl_mul(&r, &WeylElem::y()));
    assert_eq!(lhs, mono(1, 1, 2));
    assert_eq!(lhs, r.x_derivative());
}

#[test]
fn the_certificate_identities_hold_through_degree_eight() {
    let report = certificate_check(8, 200, 5).expect("every identity holds");
    assert_eq!(report.rmax, 8);
    assert_eq!(report.r_samples, 200);
    assert_eq!(report.identities.len(), 5);
    for outcome in &report.identities {
        assert!(outcome.cases > 0, "an identity family ran no cases");
    }
}

#[test]
fn the_membership_refutation_survives_a_larger_bound() {
    let report = certificate_check(10, 5, 0).expect("the wider system is still unsolvable");
    assert_eq!(report.identities.last().unwrap().cases, 121);
}

#[test]
fn random_elements_reach_a_scalar_under_commutators() {
    let smoke = simplicity_smoke(50, 16, 7);
    assert_eq!(smoke.trials, 50);
    assert_eq!(smoke.reached, 50);
    assert_eq!(smoke.inconclusive, 0);

    // Starving the budget reports inconclusive trials, never an error.
    let starved = simplicity_smoke(50, 1, 7);
    assert_eq!(starved.reached + starved.inconclusive, 50);
    assert!(starved.inconclusive > 0);
}

#[test]
fn rendering_matches_the_normal_form() {
    assert_eq!(WeylElem::zero().render(), "0");
    assert_eq!(WeylElem::one().render(), "1");
    let e = mono(2, 1, 1).add(&mono(0, 0, -3)).add(&mono(1, 0, 1));
    assert_eq!(e.render(), "x^2*y + x + -3");
}

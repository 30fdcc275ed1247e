//! Submodule completion, normal forms, and point enumeration, checked
//! against hand computations and direct scans.

use std::collections::BTreeSet;

use nullsatz::error::Error;
use nullsatz::field::{irreducible_of_degree, ExtField, FieldElem};
use nullsatz::polymod::{
    cmp_monomials, cmp_terms, enumerate_points, intersect_submodules, is_zero_dimensional,
    module_groebner, monomial_lcm, monomial_quot, normal_form, parse_poly, parse_vector, MPoly,
    ModVector, MonomialOrder, PositionRule, Submodule, TermRule, DEGREE_BUDGET,
};

fn fp(p: u64) -> ExtField {
    ExtField::prime(p).expect("prime field")
}

/// A rank-one submodule (an ideal) from parsed generators, completed under
/// the default order.
fn ideal(f: &ExtField, nvars: usize, gens: &[&str]) -> Submodule {
    let vectors: Vec<ModVector> = gens
        .iter()
        .map(|g| ModVector::unit(1, 0, parse_poly(f, nvars, g).expect("generator parses")))
        .collect();
    let s = Submodule::new(1, nvars, vectors).expect("well-formed module");
    module_groebner(f, &s, MonomialOrder::default()).expect("completion within budget")
}

/// A submodule from parsed vector generators, completed under an order.
fn submod(
    f: &ExtField,
    nvars: usize,
    rank: usize,
    gens: &[&str],
    order: MonomialOrder,
) -> Submodule {
    let vectors: Vec<ModVector> =
        gens.iter().map(|g| parse_vector(f, nvars, g).expect("generator parses")).collect();
    let s = Submodule::new(rank, nvars, vectors).expect("well-formed module");
    module_groebner(f, &s, order).expect("completion within budget")
}

fn poly1(f: &ExtField, src: &str) -> MPoly {
    parse_poly(f, 1, src).expect("parses")
}

/// Independent S-vector construction for the Buchberger postcondition.
fn s_vector_oracle(
    f: &ExtField,
    a: &ModVector,
    b: &ModVector,
    order: MonomialOrder,
) -> Option<ModVector> {
    let (pa, ma, ca) = a.leading(order)?;
    let (pb, mb, cb) = b.leading(order)?;
    if pa != pb {
        return None;
    }
    let lcm = monomial_lcm(&ma, &mb);
    let left = ModVector::mul_term(f, a, &monomial_quot(&lcm, &ma), &f.inv(&ca).unwrap());
    let right = ModVector::mul_term(f, b, &monomial_quot(&lcm, &mb), &f.inv(&cb).unwrap());
    Some(ModVector::sub(f, &left, &right))
}

#[test]
fn completion_of_a_redundant_pair_is_the_single_generator() {
    for f in [fp(3), fp(5), ExtField::rationals()] {
        let s = ideal(&f, 1, &["x^2 - 1", "x - 1"]);
        let basis = s.basis().expect("cached");
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].component(0), &poly1(&f, "x - 1"));
    }
}

#[test]
fn completion_is_canonical_under_generator_permutation() {
    let f = fp(5);
    let a = ideal(&f, 1, &["x^2 - 1", "x - 1"]);
    let b = ideal(&f, 1, &["x - 1", "x^2 - 1"]);
    assert_eq!(a.basis(), b.basis());

    let order = MonomialOrder::default();
    let c = submod(&f, 2, 2, &["[x1, x2]", "[x2, x1]", "[x1*x2, 0]"], order);
    let d = submod(&f, 2, 2, &["[x1*x2, 0]", "[x2, x1]", "[x1, x2]"], order);
    assert_eq!(c.basis(), d.basis());
}

#[test]
fn buchberger_postcondition_all_s_vectors_reduce_to_zero() {
    let f = fp(5);
    let cases = [
        submod(&f, 2, 1, &["[x1^2 + x2]", "[x1*x2 - 1]", "[x2^3 + x1]"], MonomialOrder::default()),
        submod(&f, 2, 2, &["[x1, x2]", "[x2, x1]"], MonomialOrder::default()),
        submod(
            &f,
            2,
            2,
            &["[x1, x2]", "[x2, x1]"],
            MonomialOrder { position: PositionRule::TermOverPosition, term: TermRule::DegRevLex },
        ),
        submod(
            &f,
            2,
            1,
            &["[x1^2 - x2]", "[x2^2 - x1]"],
            MonomialOrder { position: PositionRule::PositionOverTerm, term: TermRule::Lex },
        ),
    ];
    for s in &cases {
        let basis = s.basis().expect("cached");
        for i in 0..basis.len() {
            for j in 0..i {
                if let Some(sv) = s_vector_oracle(&f, &basis[i], &basis[j], s.order()) {
                    let nf = normal_form(&f, &sv, s).expect("reduction succeeds");
                    assert!(nf.is_zero(), "S-vector of basis pair ({i},{j}) did not vanish");
                }
            }
        }
    }
}

#[test]
fn cross_position_cancellation_is_not_assumed() {
    // The two generators have coprime leading monomials in the shared
    // position but tails elsewhere, so their cancellation leaves a new
    // element behind; the completed module must contain it.
    let f = fp(5);
    let s = submod(&f, 2, 2, &["[x1, x2]", "[x2, x1]"], MonomialOrder::default());
    let survivor = parse_vector(&f, 2, "[x1^2 - x2^2, 0]").expect("parses");
    let nf = normal_form(&f, &survivor, &s).expect("reduction succeeds");
    assert!(nf.is_zero(), "the S-vector residue must lie in the module");
}

#[test]
fn normal_form_examples_follow_the_reduction_contract() {
    for f in [fp(5), ExtField::rationals()] {
        let s = ideal(&f, 1, &["x - 1"]);
        let v = ModVector::unit(1, 0, poly1(&f, "x^2"));
        let nf = normal_form(&f, &v, &s).expect("reduces");
        assert_eq!(nf.component(0), &poly1(&f, "1"));
    }

    let f = fp(5);
    let s = submod(&f, 1, 2, &["[x, 0]", "[0, x - 1]"], MonomialOrder::default());
    let v = parse_vector(&f, 1, "[x, 1]").expect("parses");
    let nf = normal_form(&f, &v, &s).expect("reduces");
    assert_eq!(nf, parse_vector(&f, 1, "[0, 1]").expect("parses"));
}

#[test]
fn normal_form_is_linear_and_respects_scalar_multiplication() {
    let f = fp(3);
    let s = ideal(&f, 2, &["x1^2 + x2", "x2^2 - 1"]);
    let samples = [
        "x1^3 + x2^3 - x1*x2",
        "x1^4 - 1",
        "2*x1^2*x2^2 + x1 + x2",
        "x1*x2 + 2",
    ];
    let polys: Vec<MPoly> = samples.iter().map(|t| parse_poly(&f, 2, t).unwrap()).collect();
    for u in &polys {
        for v in &polys {
            let sum = MPoly::add(&f, u, v);
            let nf_sum =
                normal_form(&f, &ModVector::unit(1, 0, sum), &s).unwrap();
            let nf_u = normal_form(&f, &ModVector::unit(1, 0, u.clone()), &s).unwrap();
            let nf_v = normal_form(&f, &ModVector::unit(1, 0, v.clone()), &s).unwrap();
            assert_eq!(nf_sum, ModVector::add(&f, &nf_u, &nf_v));
        }
    }
    // Reducing, multiplying, and reducing again agrees with reducing the
    // plain product, so the normal form descends to the quotient module.
    let p = parse_poly(&f, 2, "x1 + 2*x2").unwrap();
    for v in &polys {
        let direct = normal_form(
            &f,
            &ModVector::unit(1, 0, MPoly::mul(&f, &p, v)),
            &s,
        )
        .unwrap();
        let nf_v = normal_form(&f, &ModVector::unit(1, 0, v.clone()), &s).unwrap();
        let staged = normal_form(&f, &ModVector::mul_poly(&f, &nf_v, &p), &s).unwrap();
        assert_eq!(direct, staged);
    }
    // The defect of a vector always drops into the module.
    for v in &polys {
        let w = ModVector::unit(1, 0, v.clone());
        let nf = normal_form(&f, &w, &s).unwrap();
        let defect = ModVector::sub(&f, &w, &nf);
        assert!(normal_form(&f, &defect, &s).unwrap().is_zero());
    }
}

#[test]
fn membership_via_vanishing_normal_form() {
    let f = fp(3);
    let s = ideal(&f, 2, &["x1^2 + x2", "x2^2 - 1"]);
    // Module combinations reduce to zero; a unit does not, because the
    // quotient is nonzero.
    let g0 = s.generators()[0].clone();
    let g1 = s.generators()[1].clone();
    let p = parse_poly(&f, 2, "x1*x2 - 1").unwrap();
    let combo = ModVector::add(&f, &ModVector::mul_poly(&f, &g0, &p), &g1);
    assert!(normal_form(&f, &combo, &s).unwrap().is_zero());
    let one = ModVector::unit(1, 0, parse_poly(&f, 2, "1").unwrap());
    assert!(!normal_form(&f, &one, &s).unwrap().is_zero());
}

#[test]
fn zero_dimensionality_matches_the_quotient_staircase() {
    let f3 = fp(3);
    let split = ideal(&f3, 1, &["x^2 - x"]);
    assert_eq!(is_zero_dimensional(&f3, &split).unwrap(), (true, Some(1)));

    let line = ideal(&f3, 2, &["x1"]);
    assert_eq!(is_zero_dimensional(&f3, &line).unwrap(), (false, None));

    let f5 = fp(5);
    let inert = ideal(&f5, 1, &["x^2 - 2"]);
    assert_eq!(is_zero_dimensional(&f5, &inert).unwrap(), (true, Some(2)));
}

#[test]
fn point_enumeration_collects_roots_over_the_base_field() {
    let f = fp(3);
    let s = ideal(&f, 1, &["x^2 - x"]);
    let points = enumerate_points(&f, &s, 1).expect("enumerates");
    let coords: Vec<&FieldElem> = points.iter().map(|(_, p)| &p[0]).collect();
    assert_eq!(coords, vec![&f.from_int(0), &f.from_int(1)]);
    for (field, _) in &points {
        assert_eq!(field.absolute_degree(), 1);
    }
}

#[test]
fn inert_quadratics_need_the_quadratic_extension() {
    let f = fp(5);
    let s = ideal(&f, 1, &["x^2 - 2"]);
    assert!(enumerate_points(&f, &s, 1).expect("enumerates").is_empty());

    let points = enumerate_points(&f, &s, 2).expect("enumerates");
    assert_eq!(points.len(), 2);
    let (k, first) = &points[0];
    assert_eq!(k.absolute_degree(), 2);
    let two = k.from_int(2);
    for (field, p) in &points {
        assert_eq!(field.mul(&p[0], &p[0]), two);
    }
    let (_, second) = &points[1];
    assert_eq!(k.neg(&first[0]), second[0]);
}

#[test]
fn repeated_linear_factors_give_a_single_point() {
    let f = fp(2);
    let s = ideal(&f, 1, &["x^2 + 1"]);
    let points = enumerate_points(&f, &s, 2).expect("enumerates");
    assert_eq!(points.len(), 1);
    assert_eq!(points[0].1, vec![f.one()]);
    assert_eq!(points[0].0.absolute_degree(), 1);
}

/// Direct-scan oracle for ideal points: common zeros of the generators over
/// every extension up to the bound, each kept at its smallest degree.
fn scan_points(f: &ExtField, s: &Submodule, dmax: u32) -> BTreeSet<(u32, Vec<FieldElem>)> {
    let n = s.nvars();
    let mut out = BTreeSet::new();
    for e in 1..=dmax {
        let big = if e == 1 {
            f.clone()
        } else {
            let mp = irreducible_of_degree(f, e as usize).unwrap();
            f.make_extension("s", &mp).unwrap()
        };
        let scalars = big.elements(1 << 16).unwrap();
        let mut idx = vec![0usize; n];
        loop {
            let point: Vec<FieldElem> = idx.iter().map(|&k| scalars[k].clone()).collect();
            let vanishes = s.generators().iter().all(|g| {
                g.component(0)
                    .eval_lifted(&big, &point, |c| if e == 1 { c.clone() } else { big.embed(c) })
                    .unwrap()
                    .is_zero()
            });
            if vanishes {
                let minimal = if e == 1 {
                    true
                } else {
                    !(1..e).any(|d| {
                        e % d == 0
                            && point
                                .iter()
                                .all(|c| big.in_subfield_of_top_degree(c, d as usize).unwrap())
                    })
                };
                if minimal {
                    out.insert((e, point.clone()));
                }
            }
            let mut l = 0;
            while l < n {
                idx[l] += 1;
                if idx[l] < scalars.len() {
                    break;
                }
                idx[l] = 0;
                l += 1;
            }
            if l == n {
                break;
            }
        }
    }
    out
}

#[test]
fn point_enumeration_agrees_with_a_direct_scan() {
    let cases: [(u64, usize, &[&str], u32); 5] = [
        (3, 1, &["x^2 - x"], 2),
        (5, 1, &["x^2 - 2"], 2),
        (3, 2, &["x1^2 - 1", "x2 - x1"], 2),
        (3, 2, &["x1^2 + 1", "x2 - x1"], 2),
        (2, 2, &["x1^2 + x1 + 1", "x2^2 + x2 + 1"], 2),
    ];
    for (p, n, gens, dmax) in cases {
        let f = fp(p);
        let s = ideal(&f, n, gens);
        let got: BTreeSet<(u32, Vec<FieldElem>)> = enumerate_points(&f, &s, dmax)
            .expect("enumerates")
            .into_iter()
            .map(|(field, point)| {
                ((field.absolute_degree() / f.absolute_degree()) as u32, point)
            })
            .collect();
        let want = scan_points(&f, &s, dmax);
        // Coordinates on both sides live in the same deterministically
        // constructed extension, so raw comparison is meaningful.
        assert_eq!(got, want, "p={p} gens={gens:?}");
    }
}

#[test]
fn module_points_come_from_componentwise_annihilators() {
    // The quotient splits componentwise, so the point set is the union of
    // the zeros of the per-component annihilators.
    let f = fp(5);
    let s = submod(
        &f,
        1,
        2,
        &["[x - 1, 0]", "[0, x^2 - 3*x + 2]"],
        MonomialOrder::default(),
    );
    assert_eq!(is_zero_dimensional(&f, &s).unwrap(), (true, Some(1)));
    let points = enumerate_points(&f, &s, 1).expect("enumerates");
    let coords: Vec<&FieldElem> = points.iter().map(|(_, p)| &p[0]).collect();
    assert_eq!(coords, vec![&f.from_int(1), &f.from_int(2)]);
}

#[test]
fn intersection_of_comaximal_ideals_is_their_product() {
    let f = fp(5);
    let a = ideal(&f, 1, &["x"]);
    let b = ideal(&f, 1, &["x - 1"]);
    let both = intersect_submodules(&f, &a, &b).expect("intersects");
    let expected = ideal(&f, 1, &["x^2 - x"]);
    assert_eq!(both.basis(), expected.basis());
}

#[test]
fn diagonal_module_intersection_matches_the_componentwise_one() {
    let f = fp(5);
    let order = MonomialOrder::default();
    let a = submod(&f, 1, 2, &["[x, 0]", "[0, x]"], order);
    let b = submod(&f, 1, 2, &["[x - 1, 0]", "[0, x - 1]"], order);
    let both = intersect_submodules(&f, &a, &b).expect("intersects");
    let expected = submod(&f, 1, 2, &["[x^2 - x, 0]", "[0, x^2 - x]"], order);
    assert_eq!(both.basis(), expected.basis());
}

#[test]
fn intersection_respects_containment_both_ways() {
    let f = fp(3);
    let a = ideal(&f, 2, &["x1 - 1"]);
    let b = ideal(&f, 2, &["x1^2 + x2", "x2"]);
    let both = intersect_submodules(&f, &a, &b).expect("intersects");
    for g in both.basis().expect("cached") {
        assert!(normal_form(&f, g, &a).unwrap().is_zero(), "result must lie in the left module");
        assert!(normal_form(&f, g, &b).unwrap().is_zero(), "result must lie in the right module");
    }
    // Products of one generator from each side land in the intersection.
    for ga in a.generators() {
        for gb in b.generators() {
            let prod = ModVector::unit(
                1,
                0,
                MPoly::mul(&f, ga.component(0), gb.component(0)),
            );
            assert!(normal_form(&f, &prod, &both).unwrap().is_zero());
        }
    }
}

#[test]
fn degree_budget_is_a_hard_stop() {
    let f = fp(5);
    let over = MPoly::term(1, vec![DEGREE_BUDGET + 1], f.one());
    let s = Submodule::new(1, 1, vec![ModVector::unit(1, 0, over)]).unwrap();
    let err = module_groebner(&f, &s, MonomialOrder::default()).unwrap_err();
    match err {
        Error::DegreeBudgetExceeded { budget, .. } => assert_eq!(budget, DEGREE_BUDGET),
        other => panic!("expected a degree budget error, got {other}"),
    }
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn shape_errors_are_reported_not_computed() {
    let f = fp(5);
    let a = ideal(&f, 1, &["x"]);
    let b = submod(&f, 1, 2, &["[x, 0]"], MonomialOrder::default());
    match intersect_submodules(&f, &a, &b) {
        Err(Error::RankMismatch { expected: 1, got: 2, .. }) => {}
        other => panic!("expected a rank mismatch, got {other:?}"),
    }
    let v = parse_vector(&f, 1, "[x, 1]").unwrap();
    assert!(matches!(normal_form(&f, &v, &a), Err(Error::RankMismatch { .. })));

    let raw = Submodule::new(1, 1, vec![ModVector::unit(1, 0, poly1(&f, "x"))]).unwrap();
    assert!(matches!(normal_form(&f, &ModVector::unit(1, 0, poly1(&f, "x")), &raw), Err(_)));
    assert!(matches!(is_zero_dimensional(&f, &raw), Err(_)));
}

#[test]
fn parser_reads_the_documented_grammar() {
    let f5 = fp(5);
    let tower = f5.make_extension("t", &[f5.from_int(3), f5.zero(), f5.one()]).unwrap();
    let p = parse_poly(&tower, 2, "3*x1^2*x2 + t*x1 - 1").expect("parses");
    assert_eq!(p.coeff(&tower, &[2, 1]), tower.from_int(3));
    assert_eq!(p.coeff(&tower, &[1, 0]), tower.generator());
    assert_eq!(p.coeff(&tower, &[0, 0]), tower.from_int(-1));
    assert_eq!(p.term_count(), 3);

    let q = ExtField::rationals();
    let r = parse_poly(&q, 1, "1/2*x^2 - 2/3").expect("parses");
    let half = q.from_rational(1, 2).unwrap();
    assert_eq!(r.coeff(&q, &[2]), half);

    let v = parse_vector(&fp(3), 1, "[x, 2*x + 1, 0]").expect("parses");
    assert_eq!(v.rank(), 3);
    assert!(v.component(2).is_zero());
}

#[test]
fn parser_round_trips_through_rendering() {
    let f = fp(5);
    for src in ["x^2 + 4*x + 3", "2*x1*x2 + x2^2 + 1", "0"] {
        let n = if src.contains("x1") { 2 } else { 1 };
        let p = parse_poly(&f, n, src).expect("parses");
        let back = parse_poly(&f, n, &p.render(&f)).expect("round trip parses");
        assert_eq!(p, back);
    }
    let v = parse_vector(&f, 1, "[x^2, x + 1]").expect("parses");
    let back = parse_vector(&f, 1, &v.render(&f)).expect("round trip parses");
    assert_eq!(v, back);
}

#[test]
fn parse_errors_carry_byte_offsets() {
    let f = fp(5);
    let offset_of = |r: Result<MPoly, Error>| match r {
        Err(Error::Parse { offset, .. }) => offset,
        other => panic!("expected a parse error, got {other:?}"),
    };
    assert_eq!(offset_of(parse_poly(&f, 1, "x + @")), 4);
    assert_eq!(offset_of(parse_poly(&f, 2, "x1 + x3")), 5);
    assert_eq!(offset_of(parse_poly(&f, 1, "x )")), 2);
    assert_eq!(offset_of(parse_poly(&f, 1, "y + 1")), 0);
    assert_eq!(offset_of(parse_poly(&ExtField::rationals(), 1, "1/0 + x")), 2);
    match parse_vector(&f, 1, "[x, x") {
        Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn order_comparisons_follow_their_definitions() {
    let order = MonomialOrder::default();
    assert_eq!(order.position, PositionRule::PositionOverTerm);
    assert_eq!(order.term, TermRule::DegRevLex);

    use std::cmp::Ordering::*;
    // Graded reverse lexicographic on two variables.
    assert_eq!(cmp_monomials(TermRule::DegRevLex, &[2, 0], &[1, 1]), Greater);
    assert_eq!(cmp_monomials(TermRule::DegRevLex, &[1, 1], &[0, 2]), Greater);
    assert_eq!(cmp_monomials(TermRule::DegRevLex, &[0, 3], &[2, 0]), Greater);
    // Lexicographic ignores total degree.
    assert_eq!(cmp_monomials(TermRule::Lex, &[1, 0], &[0, 9]), Greater);
    // Position-over-term ranks any higher component above any monomial.
    assert_eq!(cmp_terms(order, (1, &[0, 0]), (0, &[9, 9])), Greater);
    // Term-over-position only falls back to the position on ties.
    let top = MonomialOrder { position: PositionRule::TermOverPosition, term: TermRule::DegRevLex };
    assert_eq!(cmp_terms(top, (0, &[2, 0]), (1, &[1, 0])), Greater);
    assert_eq!(cmp_terms(top, (0, &[1, 0]), (1, &[1, 0])), Less);
}

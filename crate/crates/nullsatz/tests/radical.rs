//! Radicals of left ideals computed two independent ways, the center
//! correspondence for split matrix algebras, the finite-codimension test,
//! and the rational demonstration that directional ideals need not be
//! maximal. Hand-computed expectations pin the small examples; agreement
//! between the structural pipeline and the geometric oracle covers the rest.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nullsatz::error::Error;
use nullsatz::field::{ExtField, FieldElem};
use nullsatz::findim::presets::{
    cyclic_group_algebra, dual_numbers, extension_as_algebra, field_as_algebra, matrix_algebra,
    upper_triangular,
};
use nullsatz::findim::{radical, wedderburn, FinDimAlgebra, WedderburnData};
use nullsatz::leftideal::{
    contains, directional_ideal, generate, is_semiprime_left_witnessed, parse_alg_poly, AlgPoly,
    DirectionalPoint, LeftIdeal,
};
use nullsatz::polymod::{
    intersect_submodules, module_groebner, parse_poly, standard_pairs, MPoly, ModVector,
    MultiIndex, Submodule,
};
use nullsatz::radical::{
    center_ideal_from_matrix, factor_rows, finite_codim_check, geometric_oracle,
    matrix_ideal_from_center, nonmaximal_directional_demo, quotient_by_two_sided, rad_pipeline,
    rows_to_generators, RadicalResult,
};

fn fp(p: u64) -> ExtField {
    ExtField::prime(p).expect("prime field")
}

fn poly(alg: &FinDimAlgebra, nvars: usize, src: &str) -> AlgPoly {
    parse_alg_poly(alg, nvars, src).expect("polynomial parses")
}

fn ideal(alg: &FinDimAlgebra, nvars: usize, gens: &[&str]) -> LeftIdeal {
    let gens: Vec<AlgPoly> = gens.iter().map(|g| poly(alg, nvars, g)).collect();
    generate(alg, nvars, &gens).expect("ideal generates")
}

fn decomposed(alg: &FinDimAlgebra) -> WedderburnData {
    wedderburn(alg).expect("algebra decomposes")
}

/// Radical by both routes, asserting they agree; returns the pipeline run.
fn both_ways(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    i: &LeftIdeal,
) -> RadicalResult {
    let r = rad_pipeline(alg, w, i).expect("pipeline runs");
    let o = geometric_oracle(alg, w, i, None).expect("oracle runs");
    assert!(
        o.same_ideal(&r.output),
        "pipeline and oracle disagree on {:?}",
        i.generators().iter().map(|g| g.render(alg)).collect::<Vec<_>>()
    );
    r
}

fn contains_all(alg: &FinDimAlgebra, big: &LeftIdeal, small: &LeftIdeal) -> bool {
    small.basis_polys(alg).iter().all(|p| contains(alg, big, p))
}

#[test]
fn the_pipeline_matches_the_hand_computed_dual_number_example() {
    let f = fp(5);
    let alg = dual_numbers(&f).unwrap();
    let w = decomposed(&alg);
    let i = ideal(&alg, 1, &["x^2"]);
    let r = rad_pipeline(&alg, &w, &i).expect("pipeline runs");

    let expected = ideal(&alg, 1, &["eps", "x"]);
    assert!(r.output.same_ideal(&expected));

    // One factor, whose rows drop from x^2 to x under the interception.
    assert_eq!(r.factor_rows.len(), 1);
    let x2 = parse_poly(&f, 1, "x^2").unwrap();
    let x = parse_poly(&f, 1, "x").unwrap();
    assert_eq!(
        r.factor_rows[0].rows.basis().unwrap(),
        &[ModVector::from_components(vec![x2]).unwrap()]
    );
    assert_eq!(
        r.factor_radicals[0].rows.basis().unwrap(),
        &[ModVector::from_components(vec![x]).unwrap()]
    );

    // A single certified point: the origin with the only direction there is.
    assert_eq!(r.certificate.len(), 1);
    let p = &r.certificate[0];
    assert_eq!(p.factor, 0);
    assert!(p.xi[0].is_zero());
    assert_eq!(p.v, vec![p.field.one()]);
}

#[test]
fn the_pipeline_reduces_matrix_rows_to_their_radical() {
    let f = fp(3);
    let alg = matrix_algebra(&f, 2).unwrap();
    let w = decomposed(&alg);
    let i = ideal(&alg, 1, &["e11*x^2", "e12"]);
    let r = rad_pipeline(&alg, &w, &i).expect("pipeline runs");

    let expected = ideal(&alg, 1, &["e11*x", "e12"]);
    assert!(r.output.same_ideal(&expected));

    // The certified data is the single point 0 with kernel direction e_1.
    assert_eq!(r.certificate.len(), 1);
    let p = &r.certificate[0];
    assert!(p.xi[0].is_zero());
    assert_eq!(p.v, vec![p.field.one(), p.field.zero()]);

    // The intercepted rows are exactly (x, 0) and (0, 1).
    let x = parse_poly(&f, 1, "x").unwrap();
    let one = MPoly::constant(1, f.one());
    let nrad = &r.factor_radicals[0].rows;
    let basis = nrad.basis().unwrap();
    assert_eq!(basis.len(), 2);
    assert!(basis.contains(&ModVector::unit(2, 0, x)));
    assert!(basis.contains(&ModVector::unit(2, 1, one)));

    // Pulling the rows back and reducing again is the identity on rows.
    let pulled = generate(&alg, 1, &rows_to_generators(&alg, &w, 0, nrad).unwrap()).unwrap();
    let again = factor_rows(&alg, &w, &pulled, 0).unwrap();
    assert_eq!(again.basis().unwrap(), basis);
}

#[test]
fn a_maximal_directional_ideal_is_its_own_radical() {
    let f = fp(2);
    let alg = matrix_algebra(&f, 2).unwrap();
    let w = decomposed(&alg);
    let j = directional_ideal(
        &alg,
        &w,
        &DirectionalPoint {
            factor: 0,
            field: f.clone(),
            xi: vec![f.zero()],
            v: vec![f.one(), f.zero()],
        },
        1,
    )
    .unwrap();
    let r = both_ways(&alg, &w, &j);
    assert!(r.output.same_ideal(&j));
}

#[test]
fn the_oracle_agrees_with_the_pipeline_on_a_suite() {
    let f5 = fp(5);
    let f3 = fp(3);
    let f2 = fp(2);
    let quad25: Vec<FieldElem> = vec![f5.from_int(-2), f5.zero(), f5.one()];

    let check = |alg: &FinDimAlgebra, nvars: usize, gens: &[&str], expect: Option<&[&str]>| {
        let w = decomposed(alg);
        let i = ideal(alg, nvars, gens);
        let r = both_ways(alg, &w, &i);
        if let Some(e) = expect {
            assert!(
                r.output.same_ideal(&ideal(alg, nvars, e)),
                "unexpected radical for {gens:?}"
            );
        }
    };

    check(&dual_numbers(&f5).unwrap(), 1, &["x^2"], Some(&["eps", "x"]));
    check(&field_as_algebra(&f3).unwrap(), 1, &["x^2"], Some(&["x"]));
    check(&matrix_algebra(&f3, 2).unwrap(), 1, &["e11*x^2", "e12"], Some(&["e11*x", "e12"]));
    check(&matrix_algebra(&f2, 2).unwrap(), 1, &["x^2 + x + 1"], Some(&["x^2 + x + 1"]));
    check(&extension_as_algebra(&f5, &quad25).unwrap(), 1, &["x^2 + 3"], Some(&["x^2 + 3"]));
    check(&cyclic_group_algebra(&f5, 2).unwrap(), 1, &["x - g"], Some(&["x - g"]));
    check(&upper_triangular(&f5, 2).unwrap(), 1, &["x^2"], Some(&["e12", "x"]));
    check(&dual_numbers(&f5).unwrap(), 2, &["x1", "x2^2"], Some(&["eps", "x1", "x2"]));
    check(&matrix_algebra(&f3, 2).unwrap(), 1, &["1"], Some(&["1"]));
}

#[test]
fn radicals_are_monotone_and_idempotent() {
    let f = fp(3);
    let alg = matrix_algebra(&f, 2).unwrap();
    let w = decomposed(&alg);
    let small = ideal(&alg, 1, &["e11*x^2", "e12"]);
    let large = ideal(&alg, 1, &["e11*x^2", "e12", "e21"]);
    let rs = rad_pipeline(&alg, &w, &small).unwrap();
    let rl = rad_pipeline(&alg, &w, &large).unwrap();
    assert!(contains_all(&alg, &rl.output, &rs.output));
    assert!(!contains_all(&alg, &rs.output, &rl.output));

    for r in [&rs, &rl] {
        let again = rad_pipeline(&alg, &w, &r.output).unwrap();
        assert!(again.output.same_ideal(&r.output));
    }

    let dual = dual_numbers(&fp(5)).unwrap();
    let wd = decomposed(&dual);
    let r = rad_pipeline(&dual, &wd, &ideal(&dual, 1, &["x^2"])).unwrap();
    let again = rad_pipeline(&dual, &wd, &r.output).unwrap();
    assert!(again.output.same_ideal(&r.output));
}

#[test]
fn the_radical_is_the_exact_intersection_of_its_certificate() {
    let f5 = fp(5);
    let cases: Vec<(FinDimAlgebra, usize, Vec<&str>)> = vec![
        (dual_numbers(&f5).unwrap(), 1, vec!["x^2"]),
        (matrix_algebra(&fp(3), 2).unwrap(), 1, vec!["e11*x^2", "e12"]),
        (upper_triangular(&f5, 2).unwrap(), 1, vec!["x^2"]),
        (dual_numbers(&f5).unwrap(), 2, vec!["x1", "x2^2"]),
    ];
    for (alg, nvars, gens) in cases {
        let w = decomposed(&alg);
        let i = ideal(&alg, nvars, &gens);
        let r = rad_pipeline(&alg, &w, &i).unwrap();
        assert!(!r.certificate.is_empty());
        let mut acc: Option<Submodule> = None;
        for p in &r.certificate {
            let j = directional_ideal(&alg, &w, p, nvars).unwrap();
            acc = Some(match acc {
                None => j.backing().clone(),
                Some(prev) => {
                    intersect_submodules(alg.field(), &prev, j.backing()).unwrap()
                }
            });
        }
        let meet = acc.unwrap();
        let gens: Vec<AlgPoly> = meet
            .basis()
            .unwrap()
            .iter()
            .map(|v| AlgPoly::from_modvector(&alg, v))
            .collect();
        let meet_ideal = generate(&alg, nvars, &gens).unwrap();
        assert!(meet_ideal.same_ideal(&r.output), "certificate misses the radical");
    }
}

#[test]
fn certificate_ideals_pass_the_finite_codimension_check() {
    let cases: Vec<(FinDimAlgebra, usize, Vec<&str>)> = vec![
        (dual_numbers(&fp(5)).unwrap(), 1, vec!["x^2"]),
        (matrix_algebra(&fp(3), 2).unwrap(), 1, vec!["e11*x^2", "e12"]),
        (cyclic_group_algebra(&fp(5), 2).unwrap(), 1, vec!["x - g"]),
    ];
    for (alg, nvars, gens) in cases {
        let w = decomposed(&alg);
        let r = rad_pipeline(&alg, &w, &ideal(&alg, nvars, &gens)).unwrap();
        assert!(!r.certificate.is_empty());
        for p in &r.certificate {
            let j = directional_ideal(&alg, &w, p, nvars).unwrap();
            let (ok, codim) = finite_codim_check(&alg, &j).unwrap();
            assert!(ok, "a certified ideal failed the finite-codimension check");
            assert!(codim.unwrap() > 0);
        }
    }
}

#[test]
fn the_oracle_enforces_its_degree_bound() {
    let f5 = fp(5);
    let alg = field_as_algebra(&f5).unwrap();
    let w = decomposed(&alg);
    let i = ideal(&alg, 1, &["x^2 + 3"]);
    match geometric_oracle(&alg, &w, &i, Some(1)) {
        Err(Error::DegreeBoundTooSmall { found, cap, .. }) => {
            assert_eq!(found, 2);
            assert_eq!(cap, 1);
        }
        other => panic!("expected a degree-bound refusal, got {other:?}"),
    }
    let at_two = geometric_oracle(&alg, &w, &i, Some(2)).unwrap();
    assert!(at_two.same_ideal(&i));

    // The same polynomial over the quadratic extension splits at degree one.
    let quad: Vec<FieldElem> = vec![f5.from_int(-2), f5.zero(), f5.one()];
    let big = extension_as_algebra(&f5, &quad).unwrap();
    let wb = decomposed(&big);
    let ib = ideal(&big, 1, &["x^2 + 3"]);
    let o = geometric_oracle(&big, &wb, &ib, Some(1)).unwrap();
    assert!(o.same_ideal(&ib));
}

#[test]
fn the_oracle_uses_the_empty_intersection_convention() {
    let alg = matrix_algebra(&fp(3), 2).unwrap();
    let w = decomposed(&alg);
    let i = ideal(&alg, 1, &["1"]);
    let o = geometric_oracle(&alg, &w, &i, None).unwrap();
    assert!(o.same_ideal(&i));
    let r = rad_pipeline(&alg, &w, &i).unwrap();
    assert!(r.output.same_ideal(&i));
    assert!(r.certificate.is_empty());
}

#[test]
fn matrix_ideals_and_center_ideals_are_inverse_along_the_correspondence() {
    let f = fp(3);
    let alg = matrix_algebra(&f, 2).unwrap();
    let w = decomposed(&alg);

    let scalar = |src: &str| parse_poly(&f, 1, src).unwrap();
    let completed = |gens: Vec<MPoly>| {
        let vecs: Vec<ModVector> = gens
            .into_iter()
            .map(|p| ModVector::from_components(vec![p]).unwrap())
            .collect();
        module_groebner(&f, &Submodule::new(1, 1, vecs).unwrap(), Default::default()).unwrap()
    };

    // The zero ideal and a principal ideal round trip exactly.
    let zero_up = matrix_ideal_from_center(&alg, &w, &[], 1).unwrap();
    let zero_down = center_ideal_from_matrix(&alg, &w, &zero_up).unwrap();
    assert!(zero_down.basis().unwrap().is_empty());

    let x_up = matrix_ideal_from_center(&alg, &w, &[scalar("x")], 1).unwrap();
    let x_down = center_ideal_from_matrix(&alg, &w, &x_up).unwrap();
    assert_eq!(x_down.basis().unwrap(), completed(vec![scalar("x")]).basis().unwrap());

    // Seeded scalar ideals round trip through the correspondence, and the
    // lifted ideals round trip the other way.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let mut gens: Vec<MPoly> = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            let mut terms = Vec::new();
            for e in 0..=2u32 {
                if rng.gen_bool(0.6) {
                    terms.push((vec![e], f.from_int(rng.gen_range(0..3))));
                }
            }
            let p = MPoly::from_terms(1, terms);
            if !p.is_zero() {
                gens.push(p);
            }
        }
        let reference = completed(gens.clone());
        let up = matrix_ideal_from_center(&alg, &w, &gens, 1).unwrap();
        let down = center_ideal_from_matrix(&alg, &w, &up).unwrap();
        assert_eq!(down.basis().unwrap(), reference.basis().unwrap());

        let down_gens: Vec<MPoly> =
            down.basis().unwrap().iter().map(|v| v.component(0).clone()).collect();
        let up_again = matrix_ideal_from_center(&alg, &w, &down_gens, 1).unwrap();
        assert!(up_again.same_ideal(&up));
    }
}

#[test]
fn lifting_a_maximal_center_ideal_gives_a_simple_matrix_quotient() {
    // Irreducible scalar polynomials over small prime fields; each lifts to
    // a two-sided ideal whose quotient must be simple of the right size.
    let cases: &[(u64, &str, usize)] = &[
        (3, "x", 1),
        (3, "x + 1", 1),
        (3, "x + 2", 1),
        (3, "x^2 + 1", 2),
        (3, "x^2 + x + 2", 2),
        (3, "x^2 + 2*x + 2", 2),
        (2, "x", 1),
        (2, "x + 1", 1),
        (2, "x^2 + x + 1", 2),
        (5, "x + 3", 1),
    ];
    for &(p, src, deg) in cases {
        let f = fp(p);
        let alg = matrix_algebra(&f, 2).unwrap();
        let w = decomposed(&alg);
        let gen = parse_poly(&f, 1, src).unwrap();
        let up = matrix_ideal_from_center(&alg, &w, &[gen], 1).unwrap();
        let q = quotient_by_two_sided(&alg, &up).unwrap();
        assert_eq!(q.dim(), 4 * deg, "wrong quotient size for {src} over F_{p}");
        assert!(radical(&q).unwrap().is_empty(), "quotient not semisimple for {src}");
        let wq = wedderburn(&q).unwrap();
        assert_eq!(wq.factors.len(), 1, "quotient not simple for {src}");
        assert_eq!(wq.factors[0].k, 2);
        assert_eq!(wq.factors[0].center_dim, deg);
    }
}

#[test]
fn the_codimension_check_reports_the_tabled_examples() {
    let f3 = fp(3);
    let scalars = field_as_algebra(&f3).unwrap();
    let (ok, codim) = finite_codim_check(&scalars, &ideal(&scalars, 1, &["x + 1"])).unwrap();
    assert!(ok);
    assert_eq!(codim, Some(1));

    let f2 = fp(2);
    let mat = matrix_algebra(&f2, 2).unwrap();
    let wm = decomposed(&mat);
    let j = directional_ideal(
        &mat,
        &wm,
        &DirectionalPoint {
            factor: 0,
            field: f2.clone(),
            xi: vec![f2.zero()],
            v: vec![f2.one(), f2.zero()],
        },
        1,
    )
    .unwrap();
    let (ok, codim) = finite_codim_check(&mat, &j).unwrap();
    assert!(ok);
    assert_eq!(codim, Some(2));

    let zero = generate(&scalars, 1, &[]).unwrap();
    assert_eq!(finite_codim_check(&scalars, &zero).unwrap(), (false, None));

    let (ok, codim) = finite_codim_check(&scalars, &ideal(&scalars, 1, &["x^2"])).unwrap();
    assert!(!ok);
    assert_eq!(codim, Some(2));
}

#[test]
fn the_irrational_direction_demo_reports_strict_inclusions() {
    let demo = nonmaximal_directional_demo().expect("the demonstration builds");
    assert_eq!(demo.narrow_codim, 4);
    assert_eq!(demo.wide_codim, 2);

    let alg = &demo.algebra;
    assert!(contains_all(alg, &demo.wide, &demo.narrow));
    assert!(contains(alg, &demo.wide, &demo.witness));
    assert!(!contains(alg, &demo.narrow, &demo.witness));
    assert!(!contains(alg, &demo.wide, &AlgPoly::one(alg, 1)));
    assert!(contains(alg, &demo.narrow, &demo.shared));
    assert!(contains(alg, &demo.wide, &demo.shared));
}

#[test]
fn pipeline_output_passes_the_exhaustive_semiprime_check_on_small_quotients() {
    let cases: Vec<(FinDimAlgebra, usize, Vec<&str>)> = vec![
        (dual_numbers(&fp(5)).unwrap(), 1, vec!["x^2"]),
        (matrix_algebra(&fp(3), 2).unwrap(), 1, vec!["e11*x^2", "e12"]),
        (upper_triangular(&fp(5), 2).unwrap(), 1, vec!["x^2"]),
    ];
    for (alg, nvars, gens) in cases {
        let w = decomposed(&alg);
        let r = rad_pipeline(&alg, &w, &ideal(&alg, nvars, &gens)).unwrap();
        let f = alg.field();
        let pairs = standard_pairs(r.output.backing()).unwrap().unwrap();
        let elems = f.elements(64).unwrap();

        // Every nonzero element of the finite quotient, written out.
        let mut candidates = Vec::new();
        let mut idx = vec![0usize; pairs.len()];
        loop {
            if idx.iter().any(|&i| i != 0) {
                let mut terms: std::collections::BTreeMap<MultiIndex, Vec<FieldElem>> =
                    std::collections::BTreeMap::new();
                for (col, (pos, exp)) in pairs.iter().enumerate() {
                    let c = &elems[idx[col]];
                    if c.is_zero() {
                        continue;
                    }
                    let entry = terms
                        .entry(exp.clone())
                        .or_insert_with(|| vec![f.zero(); alg.dim()]);
                    entry[*pos] = c.clone();
                }
                candidates.push(AlgPoly::from_terms(alg.dim(), nvars, terms));
            }
            let mut l = 0;
            loop {
                if l == pairs.len() {
                    break;
                }
                idx[l] += 1;
                if idx[l] < elems.len() {
                    break;
                }
                idx[l] = 0;
                l += 1;
            }
            if l == pairs.len() {
                break;
            }
        }
        let (ok, witness) = is_semiprime_left_witnessed(&alg, &r.output, &candidates);
        assert!(ok, "radical not semiprime, witness {:?}", witness.map(|p| p.render(&alg)));
    }
}

#[test]
fn the_pipeline_rejects_unsupported_inputs() {
    let rat = ExtField::rationals();
    let ratmat = matrix_algebra(&rat, 2).unwrap();
    let wr = decomposed(&ratmat);
    let i = ideal(&ratmat, 1, &["e11*x"]);
    assert!(matches!(
        rad_pipeline(&ratmat, &wr, &i),
        Err(Error::InfiniteBaseField { .. })
    ));

    let dual = dual_numbers(&fp(5)).unwrap();
    let wd = decomposed(&dual);
    let thin = ideal(&dual, 1, &["eps"]);
    assert!(matches!(
        rad_pipeline(&dual, &wd, &thin),
        Err(Error::NotZeroDimensional { .. })
    ));
    assert!(matches!(
        geometric_oracle(&dual, &wd, &thin, None),
        Err(Error::NotZeroDimensional { .. })
    ));

    let mat = matrix_algebra(&fp(5), 2).unwrap();
    let wm = decomposed(&mat);
    assert!(matches!(
        rad_pipeline(&mat, &wm, &thin),
        Err(Error::MixedParents { .. })
    ));
}

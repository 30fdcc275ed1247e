//! Field towers, exact linear algebra, and univariate factorization.

use nullsatz::error::Error;
use nullsatz::field::{
    factor_degree_counts, factor_monic, intersect_rowspaces, irreducible_of_degree,
    roots_in_field, unipoly, ExactMatrix, ExtField, FieldElem, UniPoly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f2() -> ExtField {
    ExtField::prime(2).unwrap()
}

fn f3() -> ExtField {
    ExtField::prime(3).unwrap()
}

fn f5() -> ExtField {
    ExtField::prime(5).unwrap()
}

/// 𝔽₄ = 𝔽₂[t]/(t² + t + 1).
fn f4() -> ExtField {
    let f = f2();
    let minpoly = vec![f.one(), f.one(), f.one()];
    f.make_extension("t", &minpoly).unwrap()
}

/// ℚ(√2) = ℚ[t]/(t² − 2).
fn q_sqrt2() -> ExtField {
    let q = ExtField::rationals();
    let minpoly = vec![q.from_int(-2), q.zero(), q.one()];
    q.make_extension("t", &minpoly).unwrap()
}

fn mat(f: &ExtField, rows: &[&[i64]]) -> ExactMatrix {
    let rows: Vec<Vec<FieldElem>> =
        rows.iter().map(|r| r.iter().map(|&n| f.from_int(n)).collect()).collect();
    ExactMatrix::from_rows(f, rows, 0).unwrap()
}

#[test]
fn two_is_a_non_residue_so_f25_exists() {
    // Oracle: square every element of F5 by hand; 2 must not appear.
    let f = f5();
    let squares: Vec<FieldElem> =
        (0..5).map(|n| f.mul(&f.from_int(n), &f.from_int(n))).collect();
    assert!(!squares.contains(&f.from_int(2)));

    let minpoly = vec![f.from_int(-2), f.zero(), f.one()];
    let f25 = f.make_extension("u", &minpoly).unwrap();
    assert_eq!(f25.size().unwrap(), 25u32.into());
    let u = f25.generator();
    assert_eq!(f25.mul(&u, &u), f25.from_int(2));
}

#[test]
fn defining_relation_holds_in_f4() {
    let f4 = f4();
    let t = f4.generator();
    let t_plus_1 = f4.add(&t, &f4.one());
    assert_eq!(f4.mul(&t, &t), t_plus_1);
    assert_eq!(f4.size().unwrap(), 4u32.into());
}

#[test]
fn defining_relation_and_inverse_in_q_sqrt2() {
    let k = q_sqrt2();
    let t = k.generator();
    assert_eq!(k.mul(&t, &t), k.from_int(2));
    // (1 + √2)(√2 − 1) = 1.
    let a = k.add(&k.one(), &t);
    let expected = k.sub(&t, &k.one());
    assert_eq!(k.inv(&a).unwrap(), expected);
}

#[test]
fn reducible_or_non_monic_minimal_polynomials_are_rejected() {
    let f = f2();
    // t² + 1 = (t + 1)² over F2.
    let sq = vec![f.one(), f.zero(), f.one()];
    assert!(matches!(f.make_extension("t", &sq), Err(Error::NotIrreducible { .. })));

    let q = ExtField::rationals();
    // t² − 4 = (t − 2)(t + 2).
    let sq = vec![q.from_int(-4), q.zero(), q.one()];
    assert!(matches!(q.make_extension("t", &sq), Err(Error::NotIrreducible { .. })));

    // 2t² − 1 is not monic.
    let nm = vec![q.from_int(-1), q.zero(), q.from_int(2)];
    assert!(matches!(q.make_extension("t", &nm), Err(Error::NotMonic { .. })));
}

#[test]
fn towers_stop_at_height_two() {
    let f5 = f5();
    let f25 = f5
        .make_extension("u", &[f5.from_int(-2), f5.zero(), f5.one()])
        .unwrap();
    // A second step is fine; F625 as a quadratic step over F25.
    let g = irreducible_of_degree(&f25, 2).unwrap();
    let f625 = f25.make_extension("s", &g).unwrap();
    assert_eq!(f625.absolute_degree(), 4);
    // A third step is out of scope.
    let h = irreducible_of_degree(&f625, 2).unwrap();
    assert!(matches!(f625.make_extension("w", &h), Err(Error::NotSupported { .. })));
}

#[test]
fn field_axioms_hold_exhaustively_in_small_fields() {
    let f8 = {
        let f = f2();
        // t³ + t + 1 is irreducible over F2.
        f.make_extension("t", &[f.one(), f.one(), f.zero(), f.one()]).unwrap()
    };
    let f9 = {
        let f = f3();
        // t² + 1 has no root in F3.
        f.make_extension("t", &[f.one(), f.zero(), f.one()]).unwrap()
    };
    for k in [f4(), f8, f9] {
        let elems = k.elements(64).unwrap();
        for a in &elems {
            for b in &elems {
                assert_eq!(k.mul(a, b), k.mul(b, a));
                for c in &elems {
                    let left = k.mul(&k.mul(a, b), c);
                    let right = k.mul(a, &k.mul(b, c));
                    assert_eq!(left, right, "associativity");
                    let dist_l = k.mul(a, &k.add(b, c));
                    let dist_r = k.add(&k.mul(a, b), &k.mul(a, c));
                    assert_eq!(dist_l, dist_r, "distributivity");
                }
            }
            if !a.is_zero() {
                assert_eq!(k.mul(a, &k.inv(a).unwrap()), k.one());
            }
            // Fermat: a^q = a.
            assert_eq!(k.pow(a, &k.size().unwrap()), *a);
        }
    }
}

#[test]
fn field_axioms_hold_on_sampled_rationals() {
    let k = q_sqrt2();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let a = k.random_elem(&mut rng);
        let b = k.random_elem(&mut rng);
        let c = k.random_elem(&mut rng);
        assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
        assert_eq!(
            k.mul(&a, &k.add(&b, &c)),
            k.add(&k.mul(&a, &b), &k.mul(&a, &c))
        );
        if !a.is_zero() {
            assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        }
    }
}

#[test]
fn embeddings_and_coordinates_round_trip() {
    let f5 = f5();
    let f25 = f5
        .make_extension("u", &[f5.from_int(-2), f5.zero(), f5.one()])
        .unwrap();
    let three = f5.from_int(3);
    let lifted = f25.embed(&three);
    assert_eq!(f25.mul(&lifted, &lifted), f25.embed(&f5.from_int(4)));

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let a = f25.random_elem(&mut rng);
        assert_eq!(f25.unflatten(&f25.flatten(&a)).unwrap(), a);
        assert_eq!(f25.from_top_coords(&f25.top_coords(&a)).unwrap(), a);
    }

    // F2 sits inside F4 as the subfield of degree 1; t does not belong to it.
    let f4 = f4();
    let t = f4.generator();
    assert!(!f4.in_subfield_of_top_degree(&t, 1).unwrap());
    assert!(f4.in_subfield_of_top_degree(&f4.one(), 1).unwrap());
}

#[test]
fn rref_matches_desk_examples() {
    let f3 = f3();
    let id = ExactMatrix::identity(&f3, 2);
    let (r, pivots) = id.rref(&f3);
    assert_eq!(r, id);
    assert_eq!(pivots, vec![0, 1]);

    let q = ExtField::rationals();
    let m = mat(&q, &[&[1, 2], &[2, 4]]);
    let (r, pivots) = m.rref(&q);
    assert_eq!(r, mat(&q, &[&[1, 2], &[0, 0]]));
    assert_eq!(pivots, vec![0]);
    assert_eq!(m.rank(&q), 1);
}

#[test]
fn rank_two_certified_by_cofactor_determinant() {
    let f4 = f4();
    let t = f4.generator();
    let m = ExactMatrix::from_rows(
        &f4,
        vec![vec![t.clone(), f4.one()], vec![f4.one(), t.clone()]],
        0,
    )
    .unwrap();
    // Oracle: 2x2 determinant by the cofactor formula, t² − 1 = t.
    let det = f4.sub(&f4.mul(&t, &t), &f4.one());
    assert_eq!(det, t);
    assert!(!det.is_zero());
    assert_eq!(m.rank(&f4), 2);
}

#[test]
fn rref_is_idempotent_on_random_matrices() {
    let f5 = f5();
    let q = ExtField::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for trial in 0..60 {
        let k = if trial % 2 == 0 { &f5 } else { &q };
        let rows = rng.gen_range(1..5);
        let cols = rng.gen_range(1..5);
        let mut m = ExactMatrix::zeros(k, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.at_mut(i, j) = k.random_elem(&mut rng);
            }
        }
        let (r1, p1) = m.rref(k);
        let (r2, p2) = r1.rref(k);
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
        // Every kernel vector is annihilated exactly.
        for v in m.kernel_basis(k) {
            assert!(m.apply(k, &v).unwrap().iter().all(FieldElem::is_zero));
        }
        assert_eq!(m.rank(k) + m.kernel_basis(k).len(), cols);
    }
}

#[test]
fn kernel_matches_desk_examples() {
    let f5 = f5();
    let zero = ExactMatrix::zeros(&f5, 2, 2);
    assert_eq!(zero.kernel_basis(&f5).len(), 2);

    let id = ExactMatrix::identity(&f5, 2);
    assert!(id.kernel_basis(&f5).is_empty());

    let row = mat(&f5, &[&[1, 1]]);
    let kernel = row.kernel_basis(&f5);
    assert_eq!(kernel, vec![vec![f5.from_int(-1), f5.one()]]);
}

#[test]
fn solve_finds_solutions_and_detects_inconsistency() {
    let q = ExtField::rationals();
    let m = mat(&q, &[&[1, 1], &[1, -1]]);
    let b = vec![q.from_int(4), q.from_int(2)];
    let x = m.solve(&q, &b).unwrap().unwrap();
    assert_eq!(x, vec![q.from_int(3), q.from_int(1)]);

    let singular = mat(&q, &[&[1, 2], &[2, 4]]);
    let b = vec![q.from_int(1), q.from_int(3)];
    assert!(singular.solve(&q, &b).unwrap().is_none());
}

#[test]
fn rowspace_intersections_match_desk_examples() {
    let q = ExtField::rationals();
    let full = mat(&q, &[&[1, 0], &[0, 1]]);
    let same = intersect_rowspaces(&q, &[full.clone(), full.clone()]).unwrap();
    assert!(same.row_space_eq(&q, &full).unwrap());

    let f2 = f2();
    let e1 = mat(&f2, &[&[1, 0]]);
    let e2 = mat(&f2, &[&[0, 1]]);
    let inter = intersect_rowspaces(&f2, &[e1, e2]).unwrap();
    assert_eq!(inter.nrows(), 0);

    let diag = mat(&q, &[&[1, 1]]);
    let inter = intersect_rowspaces(&q, &[full, diag.clone()]).unwrap();
    assert!(inter.row_space_eq(&q, &diag).unwrap());
}

#[test]
fn intersection_is_contained_in_every_input() {
    let f5 = f5();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..40 {
        let mats: Vec<ExactMatrix> = (0..3)
            .map(|_| {
                let rows = rng.gen_range(1..4);
                let mut m = ExactMatrix::zeros(&f5, rows, 4);
                for i in 0..rows {
                    for j in 0..4 {
                        *m.at_mut(i, j) = f5.random_elem(&mut rng);
                    }
                }
                m
            })
            .collect();
        let inter = intersect_rowspaces(&f5, &mats).unwrap();
        for m in &mats {
            for i in 0..inter.nrows() {
                assert!(m.row_space_contains(&f5, &inter.row(i)).unwrap());
            }
        }
    }
}

#[test]
fn finite_factorization_recovers_multiplicities() {
    let f2 = f2();
    // x⁴ + x² = x²(x + 1)² over F2.
    let p: UniPoly = vec![f2.zero(), f2.zero(), f2.one(), f2.zero(), f2.one()];
    let factors = factor_monic(&f2, &p).unwrap();
    let x: UniPoly = vec![f2.zero(), f2.one()];
    let x_plus_1: UniPoly = vec![f2.one(), f2.one()];
    assert_eq!(factors, vec![(x, 2), (x_plus_1, 2)]);

    // Reconstruct the product as an independent check.
    let mut prod = unipoly::constant(f2.one());
    for (g, m) in &factors {
        for _ in 0..*m {
            prod = unipoly::mul(&f2, &prod, g);
        }
    }
    assert_eq!(prod, p);
}

#[test]
fn rational_quartic_splits_into_quadratics() {
    let q = ExtField::rationals();
    // x⁴ + 4 = (x² − 2x + 2)(x² + 2x + 2).
    let p: UniPoly = vec![q.from_int(4), q.zero(), q.zero(), q.zero(), q.one()];
    let factors = factor_monic(&q, &p).unwrap();
    assert_eq!(factors.len(), 2);
    let mut prod = unipoly::constant(q.one());
    for (g, m) in &factors {
        assert_eq!(*m, 1);
        assert_eq!(unipoly::deg(g), Some(2));
        for _ in 0..*m {
            prod = unipoly::mul(&q, &prod, g);
        }
    }
    assert_eq!(prod, p);
    let minus = vec![q.from_int(2), q.from_int(-2), q.one()];
    assert!(factors.iter().any(|(g, _)| *g == minus));
}

#[test]
fn cyclotomic_quintic_is_irreducible_over_q() {
    let q = ExtField::rationals();
    let p: UniPoly = vec![q.one(), q.one(), q.one(), q.one(), q.one()];
    let factors = factor_monic(&q, &p).unwrap();
    assert_eq!(factors, vec![(p, 1)]);
}

#[test]
fn degree_counts_match_the_f8_census() {
    let f2 = f2();
    // x⁸ − x is the product of all irreducibles of degree 1 and 3 over F2:
    // two of each.
    let mut p: UniPoly = vec![f2.zero(); 9];
    p[1] = f2.one();
    p[8] = f2.one();
    let counts = factor_degree_counts(&f2, &p).unwrap();
    assert_eq!(counts.get(&1), Some(&2));
    assert_eq!(counts.get(&3), Some(&2));
    assert_eq!(counts.len(), 2);
}

#[test]
fn irreducible_of_degree_is_deterministic_and_correct() {
    let f2 = f2();
    // The unique irreducible quadratic over F2.
    let g = irreducible_of_degree(&f2, 2).unwrap();
    assert_eq!(g, vec![f2.one(), f2.one(), f2.one()]);

    let f5 = f5();
    let g = irreducible_of_degree(&f5, 2).unwrap();
    assert_eq!(g, irreducible_of_degree(&f5, 2).unwrap());
    assert_eq!(unipoly::deg(&g), Some(2));
    // Quadratics are irreducible exactly when they have no root.
    for a in f5.elements(5).unwrap() {
        assert!(!unipoly::eval(&f5, &g, &a).is_zero());
    }
}

#[test]
fn root_scan_finds_exactly_the_roots() {
    let f7 = ExtField::prime(7).unwrap();
    // x(x − 1)(x − 2).
    let x = unipoly::monomial(&f7, 1);
    let g1 = vec![f7.from_int(-1), f7.one()];
    let g2 = vec![f7.from_int(-2), f7.one()];
    let p = unipoly::mul(&f7, &unipoly::mul(&f7, &x, &g1), &g2);
    let roots = roots_in_field(&f7, &p, 7).unwrap();
    assert_eq!(roots, vec![f7.zero(), f7.one(), f7.from_int(2)]);
}

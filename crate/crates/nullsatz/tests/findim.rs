//! Structure theory of finite-dimensional algebras: radicals, Wedderburn
//! splittings, separability identities, annihilators, and the witnessed
//! primality predicates, each checked against an independent oracle or a
//! hand-computed expectation.

use nullsatz::field::{ExactMatrix, ExtField, FieldElem, UniPoly};
use nullsatz::findim::presets::{
    cyclic_group_algebra, dual_numbers, extension_as_algebra, matrix_algebra,
    upper_triangular,
};
use nullsatz::findim::{
    ann_maximal_check, charpoly, double_annihilator_check, ideal_quotient,
    is_prime_left, is_prime_submodule, is_semiprime_left, is_semiprime_submodule,
    perp, radical, wedderburn, wedderburn_seeded, xi_preimage, AlgElem,
    CommutativeModule, FinDimAlgebra, LeftIdealFD,
};
use nullsatz::Error;

fn fp(p: u64) -> ExtField {
    ExtField::prime(p).expect("prime field")
}

fn elems(f: &ExtField, cs: &[i64]) -> Vec<FieldElem> {
    cs.iter().map(|&c| f.from_int(c)).collect()
}

fn span_eq(f: &ExtField, a: &[AlgElem], b: &[AlgElem], width: usize) -> bool {
    let ma = ExactMatrix::from_rows(f, a.to_vec(), width).expect("uniform");
    let mb = ExactMatrix::from_rows(f, b.to_vec(), width).expect("uniform");
    ma.row_space_eq(f, &mb).expect("matching widths")
}

/// Oracle: the span of all z whose generated two-sided ideal is nilpotent.
/// Walks every element, so only for small finite algebras.
fn brute_radical(a: &FinDimAlgebra) -> Vec<AlgElem> {
    let f = a.field();
    let d = a.dim();
    let mut members = Vec::new();
    for z in a.elements(1 << 16).expect("small enough") {
        let mut rows = Vec::new();
        for i in 0..d {
            for j in 0..d {
                rows.push(a.mul(&a.mul(&a.basis_elem(i), &z), &a.basis_elem(j)));
            }
        }
        let ideal = ExactMatrix::from_rows(f, rows, d).expect("uniform").row_space_basis(f);
        if subspace_nilpotent(a, &ideal) {
            members.push(z);
        }
    }
    ExactMatrix::from_rows(f, members, d).expect("uniform").row_space_basis(f)
}

/// Oracle helper: does the product chain S, S S, S S S, ... reach zero.
fn subspace_nilpotent(a: &FinDimAlgebra, basis: &[AlgElem]) -> bool {
    let f = a.field();
    let d = a.dim();
    let mut cur = basis.to_vec();
    for _ in 0..=d {
        if cur.is_empty() {
            return true;
        }
        let mut rows = Vec::new();
        for x in &cur {
            for y in basis {
                rows.push(a.mul(x, y));
            }
        }
        cur = ExactMatrix::from_rows(f, rows, d).expect("uniform").row_space_basis(f);
    }
    cur.is_empty()
}

#[test]
fn radical_of_dual_numbers_is_the_nilpotent_line() {
    for p in [2u64, 5, 7] {
        let f = fp(p);
        let a = dual_numbers(&f).unwrap();
        let rad = radical(&a).unwrap();
        assert!(span_eq(&f, &rad, &[elems(&f, &[0, 1])], 2), "char {p}");
        assert!(span_eq(&f, &rad, &brute_radical(&a), 2), "oracle at char {p}");
    }
}

#[test]
fn radical_of_full_matrix_algebras_vanishes() {
    for (p, k) in [(2u64, 2usize), (3, 2), (5, 2), (3, 3), (5, 3)] {
        let a = matrix_algebra(&fp(p), k).unwrap();
        assert!(radical(&a).unwrap().is_empty(), "M_{k} over F_{p}");
    }
}

#[test]
fn radical_of_upper_triangular_is_the_strict_triangle() {
    let q = ExtField::rationals();
    let a = upper_triangular(&q, 2).unwrap();
    let rad = radical(&a).unwrap();
    assert!(span_eq(&q, &rad, &[elems(&q, &[0, 1, 0])], 3));

    let f5 = fp(5);
    let a5 = upper_triangular(&f5, 2).unwrap();
    let rad5 = radical(&a5).unwrap();
    assert!(span_eq(&f5, &rad5, &[elems(&f5, &[0, 1, 0])], 3));
    assert!(span_eq(&f5, &rad5, &brute_radical(&a5), 3));

    // Basis order of 3 x 3 upper triangular: (1,1),(1,2),(1,3),(2,2),(2,3),(3,3).
    let f2 = fp(2);
    let a6 = upper_triangular(&f2, 3).unwrap();
    let rad6 = radical(&a6).unwrap();
    let strict = vec![
        elems(&f2, &[0, 1, 0, 0, 0, 0]),
        elems(&f2, &[0, 0, 1, 0, 0, 0]),
        elems(&f2, &[0, 0, 0, 0, 1, 0]),
    ];
    assert!(span_eq(&f2, &rad6, &strict, 6));
    assert!(span_eq(&f2, &rad6, &brute_radical(&a6), 6));
}

#[test]
fn radical_of_group_algebras_matches_brute_force() {
    // Order coprime to the characteristic: semisimple.
    let f5 = fp(5);
    let a = cyclic_group_algebra(&f5, 2).unwrap();
    assert!(radical(&a).unwrap().is_empty());

    // Order divisible by the characteristic: the augmentation-style radical.
    let f2 = fp(2);
    let b = cyclic_group_algebra(&f2, 2).unwrap();
    let rad_b = radical(&b).unwrap();
    assert!(span_eq(&f2, &rad_b, &[elems(&f2, &[1, 1])], 2));
    assert!(span_eq(&f2, &rad_b, &brute_radical(&b), 2));

    let f3 = fp(3);
    let c = cyclic_group_algebra(&f3, 3).unwrap();
    let rad_c = radical(&c).unwrap();
    let expected = vec![elems(&f3, &[-1, 1, 0]), elems(&f3, &[-1, 0, 1])];
    assert!(span_eq(&f3, &rad_c, &expected, 3));
    assert!(span_eq(&f3, &rad_c, &brute_radical(&c), 3));

    let d = cyclic_group_algebra(&f2, 4).unwrap();
    let rad_d = radical(&d).unwrap();
    assert_eq!(rad_d.len(), 3);
    assert!(span_eq(&f2, &rad_d, &brute_radical(&d), 4));
}

#[test]
fn radical_is_a_nilpotent_ideal_with_semisimple_quotient() {
    let algebras: Vec<FinDimAlgebra> = vec![
        dual_numbers(&fp(7)).unwrap(),
        cyclic_group_algebra(&fp(2), 2).unwrap(),
        cyclic_group_algebra(&fp(3), 3).unwrap(),
        upper_triangular(&fp(2), 3).unwrap(),
        upper_triangular(&ExtField::rationals(), 2).unwrap(),
        matrix_algebra(&fp(2), 2).unwrap(),
    ];
    for a in &algebras {
        let f = a.field();
        let rad = radical(a).unwrap();
        assert!(subspace_nilpotent(a, &rad));
        if !rad.is_empty() {
            let m = ExactMatrix::from_rows(f, rad.clone(), a.dim()).expect("uniform");
            for v in &rad {
                for i in 0..a.dim() {
                    let left = a.mul(&a.basis_elem(i), v);
                    let right = a.mul(v, &a.basis_elem(i));
                    assert!(m.row_space_contains(f, &left).unwrap());
                    assert!(m.row_space_contains(f, &right).unwrap());
                }
            }
        }
        let wd = wedderburn(a).unwrap();
        assert!(radical(&wd.quotient).unwrap().is_empty());
    }
}

/// Oracle: cofactor-expansion determinant.
fn det_oracle(f: &ExtField, m: &ExactMatrix) -> FieldElem {
    let n = m.nrows();
    if n == 0 {
        return f.one();
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut acc = f.zero();
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let mut minor = ExactMatrix::zeros(f, n - 1, n - 1);
        for r in 1..n {
            let mut cc = 0;
            for c in 0..n {
                if c == j {
                    continue;
                }
                *minor.at_mut(r - 1, cc) = m.at(r, c).clone();
                cc += 1;
            }
        }
        let term = f.mul(m.at(0, j), &det_oracle(f, &minor));
        acc = if j % 2 == 0 { f.add(&acc, &term) } else { f.sub(&acc, &term) };
    }
    acc
}

#[test]
fn characteristic_polynomial_matches_companion_and_cayley_hamilton() {
    // Companion matrix of t^3 + 2 t + 5 over the rationals.
    let q = ExtField::rationals();
    let mut comp = ExactMatrix::zeros(&q, 3, 3);
    *comp.at_mut(1, 0) = q.one();
    *comp.at_mut(2, 1) = q.one();
    *comp.at_mut(0, 2) = q.from_int(-5);
    *comp.at_mut(1, 2) = q.from_int(-2);
    let p: UniPoly = charpoly(&q, &comp).unwrap();
    assert_eq!(p, elems(&q, &[5, 2, 0, 1]));

    // A dense matrix over F_7: Cayley-Hamilton and determinant agreement.
    let f = fp(7);
    let n = 4;
    let mut m = ExactMatrix::zeros(&f, n, n);
    let mut v = 1i64;
    for r in 0..n {
        for c in 0..n {
            *m.at_mut(r, c) = f.from_int((v * v + 3 * v + r as i64) % 7);
            v += 1;
        }
    }
    let p = charpoly(&f, &m).unwrap();
    assert_eq!(p.len(), n + 1);
    // Constant coefficient equals (-1)^n det.
    let det = det_oracle(&f, &m);
    let signed = if n % 2 == 0 { det.clone() } else { f.neg(&det) };
    assert_eq!(p[0], signed);
    // Trace sits at the subleading coefficient with a sign.
    let mut tr = f.zero();
    for i in 0..n {
        tr = f.add(&tr, m.at(i, i));
    }
    assert_eq!(p[n - 1], f.neg(&tr));
    // Cayley-Hamilton: p(M) = 0.
    let mut acc = ExactMatrix::zeros(&f, n, n);
    let mut power = ExactMatrix::identity(&f, n);
    for c in &p {
        for r in 0..n {
            for s in 0..n {
                let t = f.mul(c, power.at(r, s));
                *acc.at_mut(r, s) = f.add(acc.at(r, s), &t);
            }
        }
        power = power.mul(&f, &m).unwrap();
    }
    for r in 0..n {
        for s in 0..n {
            assert!(acc.at(r, s).is_zero());
        }
    }
}

#[test]
fn quotient_projection_is_a_split_algebra_map() {
    let f = fp(5);
    let a = upper_triangular(&f, 2).unwrap();
    let wd = wedderburn(&a).unwrap();
    assert_eq!(wd.quotient.dim(), 2);
    assert!(span_eq(&f, &wd.rad_basis, &[elems(&f, &[0, 1, 0])], 3));
    // projection . section = identity on the quotient.
    for i in 0..wd.quotient.dim() {
        let e = wd.quotient.basis_elem(i);
        assert_eq!(wd.project(&wd.lift(&e)), e);
    }
    // The projection is multiplicative on all basis pairs.
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let x = a.basis_elem(i);
            let y = a.basis_elem(j);
            let lhs = wd.project(&a.mul(&x, &y));
            let rhs = wd.quotient.mul(&wd.project(&x), &wd.project(&y));
            assert_eq!(lhs, rhs, "basis pair ({i},{j})");
        }
    }
}

#[test]
fn group_algebra_of_order_two_splits_into_known_idempotents() {
    let f = fp(5);
    let a = cyclic_group_algebra(&f, 2).unwrap();
    let wd = wedderburn(&a).unwrap();
    assert!(wd.rad_basis.is_empty());
    assert_eq!(wd.factors.len(), 2);
    // (1 - g)/2 = 3 + 2g and (1 + g)/2 = 3 + 3g, in canonical order.
    assert_eq!(wd.factors[0].idempotent, elems(&f, &[3, 2]));
    assert_eq!(wd.factors[1].idempotent, elems(&f, &[3, 3]));
    for factor in &wd.factors {
        assert_eq!(factor.k, 1);
        assert_eq!(factor.center_dim, 1);
    }
    // g acts as -1 through the first factor and +1 through the second.
    let g = a.basis_elem(1);
    assert_eq!(wd.factors[0].theta_hat(&g)[0][0], f.from_int(-1));
    assert_eq!(wd.factors[1].theta_hat(&g)[0][0], f.one());
}

#[test]
fn matrix_algebra_splitting_is_an_exact_isomorphism() {
    for (p, k) in [(3u64, 2usize), (2, 2), (3, 3)] {
        let f = fp(p);
        let a = matrix_algebra(&f, k).unwrap();
        let wd = wedderburn(&a).unwrap();
        assert_eq!(wd.factors.len(), 1, "M_{k}(F_{p})");
        let factor = &wd.factors[0];
        assert_eq!(factor.k, k);
        assert_eq!(factor.center_dim, 1);
        // Unit goes to the identity matrix.
        let unit_mat = factor.theta_hat(&a.unit());
        for r in 0..k {
            for c in 0..k {
                let expect = if r == c { f.one() } else { f.zero() };
                assert_eq!(unit_mat[r][c], expect);
            }
        }
        // Multiplicativity through theta-hat on all basis pairs.
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let x = a.basis_elem(i);
                let y = a.basis_elem(j);
                let lhs = factor.theta_hat(&a.mul(&x, &y));
                let rhs = factor.mat_mul(&factor.theta_hat(&x), &factor.theta_hat(&y));
                assert_eq!(lhs, rhs, "pair ({i},{j}) in M_{k}(F_{p})");
            }
        }
        // Round trip through the matrix picture recovers each basis element.
        for i in 0..a.dim() {
            let x = a.basis_elem(i);
            let m = factor.quotient_to_matrix(&wd.quotient, &x);
            assert_eq!(factor.matrix_to_quotient(&wd.quotient, &m), x);
        }
    }
}

#[test]
fn extension_field_as_algebra_has_a_one_by_one_splitting() {
    let f = fp(5);
    // x^2 - 2 is irreducible over F_5.
    let minpoly = elems(&f, &[-2, 0, 1]);
    let a = extension_as_algebra(&f, &minpoly).unwrap();
    let wd = wedderburn(&a).unwrap();
    assert_eq!(wd.factors.len(), 1);
    let factor = &wd.factors[0];
    assert_eq!(factor.k, 1);
    assert_eq!(factor.center_dim, 2);
    // The generator squares to 2 through the splitting.
    let u = a.basis_elem(1);
    let mu = factor.theta_hat(&u);
    let m2 = factor.mat_mul(&mu, &mu);
    assert_eq!(m2[0][0], factor.center.from_int(2));
}

#[test]
fn cyclic_group_algebra_mixes_linear_and_quadratic_factors() {
    // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1) over F_3.
    let f = fp(3);
    let a = cyclic_group_algebra(&f, 4).unwrap();
    let wd = wedderburn(&a).unwrap();
    assert!(wd.rad_basis.is_empty());
    assert_eq!(wd.factors.len(), 3);
    let dims: Vec<usize> = wd.factors.iter().map(|x| x.basis.len()).collect();
    assert_eq!(dims, vec![1, 1, 2]);
    assert_eq!(wd.factors[2].center_dim, 2);
    assert_eq!(wd.factors[2].k, 1);
    // Idempotents are orthogonal and sum to one.
    let b = &wd.quotient;
    let mut sum = b.zero();
    for (i, x) in wd.factors.iter().enumerate() {
        assert_eq!(b.mul(&x.idempotent, &x.idempotent), x.idempotent);
        for (j, y) in wd.factors.iter().enumerate() {
            if i != j {
                assert!(b.is_zero_elem(&b.mul(&x.idempotent, &y.idempotent)));
            }
        }
        sum = b.add(&sum, &x.idempotent);
    }
    assert_eq!(sum, b.unit());
}

#[test]
fn wedderburn_output_is_deterministic() {
    let f = fp(3);
    let a = matrix_algebra(&f, 2).unwrap();
    let w1 = wedderburn(&a).unwrap();
    let w2 = wedderburn(&a).unwrap();
    let w3 = wedderburn_seeded(&a, 12345).unwrap();
    assert_eq!(w1.factors.len(), w2.factors.len());
    for (x, y) in w1.factors.iter().zip(&w2.factors) {
        assert_eq!(x.idempotent, y.idempotent);
        assert_eq!(x.basis, y.basis);
        for i in 0..a.dim() {
            assert_eq!(x.theta_hat_basis(i), y.theta_hat_basis(i));
        }
    }
    // A different seed may pick different module bases, but the idempotents
    // and factor shapes agree.
    assert_eq!(w1.factors[0].idempotent, w3.factors[0].idempotent);
    assert_eq!(w1.factors[0].k, w3.factors[0].k);
}

#[test]
fn separability_pairs_reconstruct_split_algebras() {
    // Full matrix algebras and a split group algebra.
    for (p, k) in [(2u64, 2usize), (3, 2)] {
        let f = fp(p);
        let a = matrix_algebra(&f, k).unwrap();
        let data = xi_preimage(&a).unwrap();
        assert_eq!(data.generators.len(), k * k);
        for family in &data.pairs {
            assert_eq!(family.len(), k);
        }
        // Independent reconstruction on a dense element.
        let mut x = a.zero();
        for i in 0..a.dim() {
            x = a.add(&x, &a.scale(&f.from_int(1 + i as i64), &a.basis_elem(i)));
        }
        let mut recon = a.zero();
        for i in 0..data.generators.len() {
            let w = data.omega(&a, i, &x);
            recon = a.add(&recon, &a.mul(&w, &data.generators[i]));
        }
        assert_eq!(recon, x);
    }

    let f = fp(5);
    let a = cyclic_group_algebra(&f, 2).unwrap();
    let data = xi_preimage(&a).unwrap();
    assert_eq!(data.generators.len(), 2);
    // Each omega value is central, here a combination of the idempotents.
    let g = a.basis_elem(1);
    for i in 0..2 {
        let w = data.omega(&a, i, &g);
        assert_eq!(a.mul(&w, &g), a.mul(&g, &w));
    }
}

#[test]
fn separability_requires_a_vanishing_radical() {
    let a = dual_numbers(&fp(5)).unwrap();
    match xi_preimage(&a) {
        Err(Error::NotAzumaya { .. }) => {}
        other => panic!("expected NotAzumaya, got {other:?}"),
    }
}

#[test]
fn colon_perp_and_double_annihilator_on_a_column_ideal() {
    let f = fp(2);
    let a = matrix_algebra(&f, 2).unwrap();
    // Left ideal A e11: first column, spanned by e11 and e21.
    let ideal = LeftIdealFD::from_generators(&a, &[a.basis_elem(0)]);
    assert_eq!(ideal.dim(), 2);

    let colon = ideal_quotient(&a, &ideal).unwrap();
    assert!(colon.is_empty());
    // Oracle: x A inside I checked over all 16 elements.
    let ideal_mat = ExactMatrix::from_rows(&f, ideal.basis().to_vec(), 4).unwrap();
    for x in a.elements(1 << 10).unwrap() {
        let absorbed = (0..a.dim())
            .all(|i| ideal_mat.row_space_contains(&f, &a.mul(&x, &a.basis_elem(i))).unwrap());
        assert_eq!(absorbed, a.is_zero_elem(&x));
    }

    let ann = perp(&a, &ideal).unwrap();
    // {b : I b = 0} is the span of e21 and e22.
    let expected = vec![elems(&f, &[0, 0, 1, 0]), elems(&f, &[0, 0, 0, 1])];
    assert!(span_eq(&f, &ann, &expected, 4));

    let report = double_annihilator_check(&a, &ideal).unwrap();
    assert!(report.equal);
    assert!(report.witness.is_none());
    assert!(span_eq(&f, &report.double, ideal.basis(), 4));
}

#[test]
fn double_annihilator_recovers_every_maximal_column_kernel() {
    for p in [2u64, 3] {
        let f = fp(p);
        let a = matrix_algebra(&f, 2).unwrap();
        // Maximal left ideals {x : x w = 0} over representatives of the
        // projective line.
        let mut reps: Vec<Vec<FieldElem>> = vec![elems(&f, &[0, 1])];
        for c in 0..p as i64 {
            reps.push(elems(&f, &[1, c]));
        }
        for w in reps {
            let mut rows = Vec::new();
            for x in a.elements(1 << 10).unwrap() {
                // x w in the natural column action: entries of x times w.
                let top = f.add(&f.mul(&x[0], &w[0]), &f.mul(&x[1], &w[1]));
                let bot = f.add(&f.mul(&x[2], &w[0]), &f.mul(&x[3], &w[1]));
                if top.is_zero() && bot.is_zero() {
                    rows.push(x);
                }
            }
            let basis = ExactMatrix::from_rows(&f, rows, 4).unwrap().row_space_basis(&f);
            let ideal = LeftIdealFD::from_subspace(&a, basis).unwrap();
            assert_eq!(ideal.dim(), 2);
            let report = double_annihilator_check(&a, &ideal).unwrap();
            assert!(report.equal, "p = {p}");
        }
    }

    // A quadratic field extension: the only maximal left ideal is zero.
    let f2 = fp(2);
    let quad = extension_as_algebra(&f2, &elems(&f2, &[1, 1, 1])).unwrap();
    let zero_ideal = LeftIdealFD::from_generators(&quad, &[]);
    let report = double_annihilator_check(&quad, &zero_ideal).unwrap();
    assert!(report.equal);

    // Split group algebra: the two lines through the idempotents.
    let f5 = fp(5);
    let ga = cyclic_group_algebra(&f5, 2).unwrap();
    for coords in [[3i64, 2], [3, 3]] {
        let e = elems(&f5, &coords);
        let ideal = LeftIdealFD::from_generators(&ga, &[e]);
        assert_eq!(ideal.dim(), 1);
        let report = double_annihilator_check(&ga, &ideal).unwrap();
        assert!(report.equal);
    }
}

#[test]
fn primality_verdicts_on_matrix_and_dual_number_ideals() {
    // Maximal left ideal of a simple algebra: prime, exhaustively.
    let f2 = fp(2);
    let m2 = matrix_algebra(&f2, 2).unwrap();
    let col = LeftIdealFD::from_generators(&m2, &[m2.basis_elem(0)]);
    let verdict = is_prime_left(&m2, &col, 7).unwrap();
    assert!(verdict.holds && verdict.exhaustive);
    let verdict = is_semiprime_left(&m2, &col, 7).unwrap();
    assert!(verdict.holds && verdict.exhaustive);

    // The zero ideal of the dual numbers is not semiprime: eps A eps = 0.
    let f5 = fp(5);
    let dual = dual_numbers(&f5).unwrap();
    let zero = LeftIdealFD::from_generators(&dual, &[]);
    let verdict = is_semiprime_left(&dual, &zero, 7).unwrap();
    assert!(!verdict.holds);
    let w = &verdict.witness[0];
    assert!(!zero.contains(&dual, w));
    for i in 0..dual.dim() {
        let p = dual.mul(&dual.mul(w, &dual.basis_elem(i)), w);
        assert!(dual.is_zero_elem(&p), "witness fails to sandwich into the ideal");
    }

    // The maximal ideal of the dual numbers is prime.
    let eps_line = LeftIdealFD::from_generators(&dual, &[dual.basis_elem(1)]);
    let verdict = is_prime_left(&dual, &eps_line, 7).unwrap();
    assert!(verdict.holds && verdict.exhaustive);

    // The strict triangle of 2 x 2 upper triangular matrices is semiprime
    // but not prime: e11 A e22 lands inside it.
    let ut = upper_triangular(&f2, 2).unwrap();
    let strict = LeftIdealFD::from_generators(&ut, &[ut.basis_elem(1)]);
    let verdict = is_semiprime_left(&ut, &strict, 7).unwrap();
    assert!(verdict.holds && verdict.exhaustive);
    let verdict = is_prime_left(&ut, &strict, 7).unwrap();
    assert!(!verdict.holds);
    let (wa, wb) = (&verdict.witness[0], &verdict.witness[1]);
    assert!(!strict.contains(&ut, wa));
    assert!(!strict.contains(&ut, wb));
    for i in 0..ut.dim() {
        let p = ut.mul(&ut.mul(wa, &ut.basis_elem(i)), wb);
        assert!(strict.contains(&ut, &p));
    }
}

#[test]
fn sampled_verdicts_over_the_rationals_say_so() {
    let q = ExtField::rationals();
    let ut = upper_triangular(&q, 2).unwrap();
    let strict = LeftIdealFD::from_generators(&ut, &[ut.basis_elem(1)]);
    let verdict = is_semiprime_left(&ut, &strict, 7).unwrap();
    assert!(verdict.holds);
    assert!(!verdict.exhaustive);
    assert_eq!(verdict.samples, nullsatz::findim::SAMPLE_COUNT);
}

#[test]
fn annihilator_of_a_module_vector_is_maximal() {
    let f = fp(3);
    let a = matrix_algebra(&f, 2).unwrap();
    // Natural column action: each basis matrix acts as itself.
    let mut action = Vec::new();
    for (r, c) in [(0usize, 0usize), (0, 1), (1, 0), (1, 1)] {
        let mut m = ExactMatrix::zeros(&f, 2, 2);
        *m.at_mut(r, c) = f.one();
        action.push(m);
    }
    let v = elems(&f, &[1, 0]);
    let ann = ann_maximal_check(&a, &action, &v).unwrap();
    let expected = vec![elems(&f, &[0, 1, 0, 0]), elems(&f, &[0, 0, 0, 1])];
    assert!(span_eq(&f, ann.basis(), &expected, 4));

    match ann_maximal_check(&a, &action, &elems(&f, &[0, 0])) {
        Err(Error::ZeroVector { .. }) => {}
        other => panic!("expected ZeroVector, got {other:?}"),
    }

    // The natural module of the upper triangular algebra is not simple:
    // the first coordinate axis is invariant.
    let ut = upper_triangular(&f, 2).unwrap();
    let mut ut_action = Vec::new();
    for (r, c) in [(0usize, 0usize), (0, 1), (1, 1)] {
        let mut m = ExactMatrix::zeros(&f, 2, 2);
        *m.at_mut(r, c) = f.one();
        ut_action.push(m);
    }
    match ann_maximal_check(&ut, &ut_action, &elems(&f, &[1, 0])) {
        Err(Error::NotSimpleModule { .. }) => {}
        other => panic!("expected NotSimpleModule, got {other:?}"),
    }
}

#[test]
fn commutative_module_predicates_detect_nilpotent_defects() {
    let f = fp(2);
    let ring = dual_numbers(&f).unwrap();
    let m = CommutativeModule::new(ring.clone(), 1).unwrap();

    // N = 0: eps lies in (0 : eps) M without lying in 0.
    let verdict = is_semiprime_submodule(&m, &[]).unwrap();
    assert!(!verdict.holds);
    let verdict = is_prime_submodule(&m, &[]).unwrap();
    assert!(!verdict.holds);

    // N = eps R: the unique maximal submodule, both prime and semiprime.
    let eps_gen = vec![vec![ring.basis_elem(1)]];
    let verdict = is_semiprime_submodule(&m, &eps_gen).unwrap();
    assert!(verdict.holds && verdict.exhaustive);
    let verdict = is_prime_submodule(&m, &eps_gen).unwrap();
    assert!(verdict.holds && verdict.exhaustive);

    // Over a field everything is well behaved, including at rank 2.
    let field_ring = nullsatz::findim::presets::field_as_algebra(&fp(3)).unwrap();
    let m2 = CommutativeModule::new(field_ring.clone(), 2).unwrap();
    let line = vec![vec![field_ring.unit(), field_ring.zero()]];
    let verdict = is_semiprime_submodule(&m2, &line).unwrap();
    assert!(verdict.holds);
    let verdict = is_prime_submodule(&m2, &line).unwrap();
    assert!(verdict.holds);

    // A noncommutative coefficient ring is refused.
    let nc = matrix_algebra(&fp(2), 2).unwrap();
    match CommutativeModule::new(nc, 1) {
        Err(Error::NotSupported { .. }) => {}
        other => panic!("expected NotSupported, got {other:?}"),
    }
}

#[test]
fn semiprime_witnesses_satisfy_their_defining_property() {
    // The dual-number module witness: m = eps with (N : m) M containing m.
    let f = fp(2);
    let ring = dual_numbers(&f).unwrap();
    let m = CommutativeModule::new(ring.clone(), 1).unwrap();
    let verdict = is_semiprime_submodule(&m, &[]).unwrap();
    assert!(!verdict.holds);
    let flat = &verdict.witness[0];
    let vec = m.unflatten(flat);
    // The witness is nonzero and eps times it vanishes, so it lies in
    // (0 : m) M while staying outside N = 0.
    assert!(!ring.is_zero_elem(&vec[0]));
    let eps = ring.basis_elem(1);
    assert!(ring.is_zero_elem(&ring.mul(&eps, &vec[0])));
}

//! Wedderburn decomposition with explicit matrix splittings.
//!
//! From an algebra A this computes the radical, the semisimple quotient
//! B = A/rad A with a projection and a linear section, the central primitive
//! idempotents of B by factoring minimal polynomials inside the center, and
//! for each simple factor an explicit isomorphism onto M_k(E) built from a
//! minimal left ideal. All searches for splitting elements are seeded and the
//! returned data is canonically ordered, so the output is deterministic.

use super::{radical, AlgElem, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::field::{factor_monic, unipoly, ExactMatrix, ExtField, FieldElem, UniPoly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SPLIT_RANDOM_TRIES: usize = 512;
const BLOCK_ENUM_CAP: u64 = 4096;

/// A k x k matrix over a factor's center field.
pub type CenterMatrix = Vec<Vec<FieldElem>>;

/// One simple factor B_j of the semisimple quotient, with its explicit
/// splitting B_j isomorphic to M_k(E_j).
#[derive(Debug, Clone)]
pub struct SimpleFactor {
    /// Central primitive idempotent, in quotient coordinates.
    pub idempotent: AlgElem,
    /// Canonical subspace basis of the factor, in quotient coordinates.
    pub basis: Vec<AlgElem>,
    /// The center E_j as a field extension of the scalar field.
    pub center: ExtField,
    /// [E_j : F].
    pub center_dim: usize,
    /// Quotient coordinates of e_j, w e_j, ..., w^(c-1) e_j for the chosen
    /// primitive center element w.
    pub center_basis: Vec<AlgElem>,
    /// Matrix size: the factor is isomorphic to M_k(E_j).
    pub k: usize,
    /// Image of each A-basis element under theta-hat = phi . theta_j.
    theta_hat: Vec<CenterMatrix>,
    /// F-linear matrix of phi on the factor: factor-basis coordinates to
    /// flattened (row, col, center-power) coordinates.
    phi_forward: ExactMatrix,
    /// Inverse of `phi_forward`.
    phi_backward: ExactMatrix,
}

/// Radical, semisimple quotient, and split simple factors of an algebra.
#[derive(Debug, Clone)]
pub struct WedderburnData {
    /// Basis of rad(A), canonical rows in A coordinates.
    pub rad_basis: Vec<AlgElem>,
    /// The semisimple quotient B = A / rad(A).
    pub quotient: FinDimAlgebra,
    /// Matrix of the projection A -> B.
    pub projection: ExactMatrix,
    /// Matrix of a linear section B -> A (projection . section = id).
    pub section: ExactMatrix,
    /// Simple factors in canonical order.
    pub factors: Vec<SimpleFactor>,
}

/// Decompose with the default search seed.
pub fn wedderburn(a: &FinDimAlgebra) -> Result<WedderburnData> {
    wedderburn_seeded(a, 0)
}

/// Decompose; `seed` steers the randomized splitting searches only, never the
/// mathematical content of the answer.
pub fn wedderburn_seeded(a: &FinDimAlgebra, seed: u64) -> Result<WedderburnData> {
    let rad = radical(a)?;
    let (quotient, projection, section) = quotient_algebra(a, &rad)?;
    let b = &quotient;

    let center = center_basis(b);
    let idempotents = split_center(b, &center, &b.unit(), seed)?;
    verify_idempotent_family(b, &idempotents, "findim::wedderburn")?;

    let mut factors = Vec::new();
    for e in idempotents {
        factors.push(build_factor(a, b, &projection, &center, e, seed)?);
    }
    factors.sort_by(|x, y| {
        (x.basis.len(), &x.idempotent).cmp(&(y.basis.len(), &y.idempotent))
    });
    Ok(WedderburnData { rad_basis: rad, quotient, projection, section, factors })
}

impl WedderburnData {
    /// Apply the projection A -> B.
    pub fn project(&self, v: &AlgElem) -> AlgElem {
        self.projection.apply(self.quotient.field(), v).expect("projection shape")
    }

    /// Apply the section B -> A.
    pub fn lift(&self, v: &AlgElem) -> AlgElem {
        self.section.apply(self.quotient.field(), v).expect("section shape")
    }
}

impl SimpleFactor {
    /// Theta-hat image of the i-th A-basis element.
    pub fn theta_hat_basis(&self, i: usize) -> &CenterMatrix {
        &self.theta_hat[i]
    }

    /// Theta-hat of an arbitrary element of A, by linearity.
    pub fn theta_hat(&self, v: &AlgElem) -> CenterMatrix {
        let e = &self.center;
        let mut out = vec![vec![e.zero(); self.k]; self.k];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lifted = if self.center_dim == 1 { c.clone() } else { e.embed(c) };
            for r in 0..self.k {
                for s in 0..self.k {
                    let t = e.mul(&lifted, &self.theta_hat[i][r][s]);
                    out[r][s] = e.add(&out[r][s], &t);
                }
            }
        }
        out
    }

    /// Matrix product over the center.
    pub fn mat_mul(&self, x: &CenterMatrix, y: &CenterMatrix) -> CenterMatrix {
        let e = &self.center;
        let mut out = vec![vec![e.zero(); self.k]; self.k];
        for r in 0..self.k {
            for t in 0..self.k {
                if x[r][t].is_zero() {
                    continue;
                }
                for s in 0..self.k {
                    let p = e.mul(&x[r][t], &y[t][s]);
                    out[r][s] = e.add(&out[r][s], &p);
                }
            }
        }
        out
    }

    /// Flatten a center matrix to F-coordinates in (row, col, power) order.
    fn flatten_matrix(&self, m: &CenterMatrix) -> Vec<FieldElem> {
        let mut out = Vec::with_capacity(self.k * self.k * self.center_dim);
        for row in m {
            for entry in row {
                if self.center_dim == 1 {
                    out.push(entry.clone());
                } else {
                    out.extend(self.center.top_coords(entry));
                }
            }
        }
        out
    }

    fn unflatten_matrix(&self, v: &[FieldElem]) -> CenterMatrix {
        let c = self.center_dim;
        let mut out = vec![vec![self.center.zero(); self.k]; self.k];
        for r in 0..self.k {
            for s in 0..self.k {
                let chunk = &v[(r * self.k + s) * c..(r * self.k + s + 1) * c];
                out[r][s] = if c == 1 {
                    chunk[0].clone()
                } else {
                    self.center.from_top_coords(chunk).expect("coordinate shape")
                };
            }
        }
        out
    }

    /// Map a center matrix back to an element of the quotient supported on
    /// this factor.
    pub fn matrix_to_quotient(&self, b: &FinDimAlgebra, m: &CenterMatrix) -> AlgElem {
        let f = b.field();
        let flat = self.flatten_matrix(m);
        let coords = self.phi_backward.apply(f, &flat).expect("phi shape");
        let mut out = b.zero();
        for (c, basis_vec) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            out = b.add(&out, &b.scale(c, basis_vec));
        }
        out
    }

    /// Map an element of the quotient to its matrix image in this factor.
    pub fn quotient_to_matrix(&self, b: &FinDimAlgebra, v: &AlgElem) -> CenterMatrix {
        let f = b.field();
        // Project onto the factor first; e_j is central.
        let projected = b.mul(&self.idempotent, v);
        let basis_mat =
            ExactMatrix::from_rows(f, self.basis.clone(), b.dim()).expect("uniform");
        let coords = basis_mat
            .transpose(f)
            .solve(f, &projected)
            .expect("shape")
            .expect("projected element lies in the factor");
        let flat = self.phi_forward.apply(f, &coords).expect("phi shape");
        self.unflatten_matrix(&flat)
    }
}

/// Quotient algebra B = A/rad with projection and section matrices.
fn quotient_algebra(
    a: &FinDimAlgebra,
    rad: &[AlgElem],
) -> Result<(FinDimAlgebra, ExactMatrix, ExactMatrix)> {
    let f = a.field();
    let d = a.dim();
    if rad.is_empty() {
        let id = ExactMatrix::identity(f, d);
        return Ok((a.clone(), id.clone(), id));
    }
    let rad_mat = ExactMatrix::from_rows(f, rad.to_vec(), d).expect("uniform");
    let (rref, pivots) = rad_mat.rref(f);
    let free_cols: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    let bd = free_cols.len();

    // pi: reduce modulo the radical rows, then read off free coordinates.
    let mut projection = ExactMatrix::zeros(f, bd, d);
    for j in 0..d {
        let mut col = a.basis_elem(j);
        for (t, &p) in pivots.iter().enumerate() {
            if col[p].is_zero() {
                continue;
            }
            let c = col[p].clone();
            for s in 0..d {
                let sub = f.mul(&c, rref.at(t, s));
                col[s] = f.sub(&col[s], &sub);
            }
        }
        for (bi, &fc) in free_cols.iter().enumerate() {
            *projection.at_mut(bi, j) = col[fc].clone();
        }
    }
    let mut section = ExactMatrix::zeros(f, d, bd);
    for (bi, &fc) in free_cols.iter().enumerate() {
        *section.at_mut(fc, bi) = f.one();
    }

    let sec_elem = |coords: &[FieldElem]| -> AlgElem {
        let mut v = vec![f.zero(); d];
        for (bi, &fc) in free_cols.iter().enumerate() {
            v[fc] = coords[bi].clone();
        }
        v
    };
    let mut structure = vec![vec![vec![f.zero(); bd]; bd]; bd];
    for i in 0..bd {
        let ui = sec_elem(&ident_row(f, bd, i));
        for j in 0..bd {
            let uj = sec_elem(&ident_row(f, bd, j));
            let prod = a.mul(&ui, &uj);
            structure[i][j] = projection.apply(f, &prod).expect("projection shape");
        }
    }
    let unit = projection.apply(f, &a.unit()).expect("projection shape");
    let names = (1..=bd).map(|i| format!("q{i}")).collect();
    let b = FinDimAlgebra::new(f.clone(), structure, unit, Some(names))?;
    Ok((b, projection, section))
}

fn ident_row(f: &ExtField, n: usize, i: usize) -> Vec<FieldElem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Basis of the center of an algebra.
pub fn center_basis(b: &FinDimAlgebra) -> Vec<AlgElem> {
    let f = b.field();
    let d = b.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        let l = b.left_mult_matrix(&b.basis_elem(i));
        let r = b.right_mult_matrix(&b.basis_elem(i));
        for ri in 0..d {
            let mut row = Vec::with_capacity(d);
            for rj in 0..d {
                row.push(f.sub(l.at(ri, rj), r.at(ri, rj)));
            }
            rows.push(row);
        }
    }
    let m = ExactMatrix::from_rows(f, rows, d).expect("uniform");
    m.kernel_basis(f)
}

/// Minimal polynomial of z in a corner algebra whose unit is `u` (powers are
/// u, z, z^2, ... and linear dependence is taken in the ambient coordinates).
fn relative_min_poly(b: &FinDimAlgebra, u: &AlgElem, z: &AlgElem) -> UniPoly {
    let f = b.field();
    let mut powers: Vec<AlgElem> = vec![u.clone()];
    loop {
        let m = ExactMatrix::from_rows(f, powers.clone(), b.dim()).expect("uniform");
        if m.rank(f) < powers.len() {
            let prev =
                ExactMatrix::from_rows(f, powers[..powers.len() - 1].to_vec(), b.dim())
                    .expect("uniform");
            let target = powers.last().unwrap().clone();
            let sol = prev
                .transpose(f)
                .solve(f, &target)
                .expect("shape")
                .expect("dependency implies solvability");
            let mut coeffs: Vec<FieldElem> = sol.iter().map(|c| f.neg(c)).collect();
            coeffs.push(f.one());
            return coeffs;
        }
        let next = b.mul(powers.last().unwrap(), z);
        powers.push(next);
    }
}

/// Evaluate a polynomial at z, with the constant term times the corner unit.
fn eval_poly_at(b: &FinDimAlgebra, p: &UniPoly, z: &AlgElem, u: &AlgElem) -> AlgElem {
    let mut acc = b.zero();
    for c in p.iter().rev() {
        acc = b.mul(&acc, z);
        let term = b.scale(c, u);
        acc = b.add(&acc, &term);
    }
    acc
}

/// Candidate elements of a subspace for splitting searches: basis vectors,
/// then seeded random combinations, then (small spaces) everything.
struct SplitCandidates<'s> {
    b: &'s FinDimAlgebra,
    space: &'s [AlgElem],
    rng: ChaCha8Rng,
    phase: usize,
    exhaustive: Option<Vec<AlgElem>>,
    served: usize,
}

impl<'s> SplitCandidates<'s> {
    fn new(b: &'s FinDimAlgebra, space: &'s [AlgElem], seed: u64) -> Self {
        SplitCandidates {
            b,
            space,
            rng: ChaCha8Rng::seed_from_u64(seed),
            phase: 0,
            exhaustive: None,
            served: 0,
        }
    }

    fn combine(&self, coords: &[FieldElem]) -> AlgElem {
        let mut v = self.b.zero();
        for (c, base) in coords.iter().zip(self.space) {
            if c.is_zero() {
                continue;
            }
            v = self.b.add(&v, &self.b.scale(c, base));
        }
        v
    }
}

impl<'s> Iterator for SplitCandidates<'s> {
    type Item = AlgElem;

    fn next(&mut self) -> Option<AlgElem> {
        let f = self.b.field();
        if self.phase == 0 {
            if self.served < self.space.len() {
                self.served += 1;
                return Some(self.space[self.served - 1].clone());
            }
            self.phase = 1;
            self.served = 0;
        }
        if self.phase == 1 {
            if self.served < SPLIT_RANDOM_TRIES {
                self.served += 1;
                let coords: Vec<FieldElem> =
                    (0..self.space.len()).map(|_| f.random_elem(&mut self.rng)).collect();
                return Some(self.combine(&coords));
            }
            self.phase = 2;
            self.served = 0;
            // Whole-space scan as a last resort, finite small spaces only.
            if let Some(q) = f.size() {
                let total = q.pow(self.space.len() as u32);
                if total <= BLOCK_ENUM_CAP.into() {
                    let scalars = f.elements(BLOCK_ENUM_CAP).expect("under cap");
                    let mut all = Vec::new();
                    let mut odo = vec![0usize; self.space.len()];
                    'outer: loop {
                        let coords: Vec<FieldElem> =
                            odo.iter().map(|&i| scalars[i].clone()).collect();
                        all.push(self.combine(&coords));
                        let mut pos = 0;
                        loop {
                            if pos == odo.len() {
                                break 'outer;
                            }
                            odo[pos] += 1;
                            if odo[pos] < scalars.len() {
                                break;
                            }
                            odo[pos] = 0;
                            pos += 1;
                        }
                    }
                    self.exhaustive = Some(all);
                }
            }
        }
        if let Some(all) = &self.exhaustive {
            if self.served < all.len() {
                self.served += 1;
                return Some(all[self.served - 1].clone());
            }
        }
        None
    }
}

/// Split the center of a semisimple algebra into primitive idempotents.
/// `space` spans a central subalgebra with unit `u`; returns the primitive
/// idempotents summing to `u`.
fn split_center(
    b: &FinDimAlgebra,
    space: &[AlgElem],
    u: &AlgElem,
    seed: u64,
) -> Result<Vec<AlgElem>> {
    const AT: &str = "findim::wedderburn::split_center";
    let f = b.field();
    if space.len() == 1 {
        return Ok(vec![u.clone()]);
    }
    let mut primitive_witness = false;
    for z in SplitCandidates::new(b, space, seed) {
        let m = relative_min_poly(b, u, &z);
        let factors = factor_monic(f, &m)?;
        if factors.len() >= 2 {
            // CRT idempotent for the first factor block.
            let g1 = power_poly(f, &factors[0].0, factors[0].1);
            let mut rest = unipoly::constant(f.one());
            for (g, mult) in &factors[1..] {
                rest = unipoly::mul(f, &rest, &power_poly(f, g, *mult));
            }
            let (g, _s, t) = unipoly::ext_gcd(f, &g1, &rest)?;
            let ginv = f.inv(&g[0])?;
            let tn = unipoly::scale(f, &t, &ginv);
            let e = eval_poly_at(b, &unipoly::mul(f, &tn, &rest), &z, u);
            let e2 = b.mul(&e, &e);
            if e2 != e || b.is_zero_elem(&e) || e == *u {
                return Err(Error::InternalInconsistency {
                    at: AT,
                    why: "splitting element produced a non-idempotent".into(),
                });
            }
            let co = b.sub(u, &e);
            let left = mult_span(b, &e, space);
            let right = mult_span(b, &co, space);
            let mut out = split_center(b, &left, &e, seed ^ 0x9e3779b9)?;
            out.extend(split_center(b, &right, &co, seed ^ 0x7f4a7c15)?);
            return Ok(out);
        }
        if unipoly::deg(&m) == Some(space.len()) {
            // Irreducible minimal polynomial of full degree: the block is a
            // field, hence already primitive.
            primitive_witness = true;
            break;
        }
    }
    if primitive_witness {
        return Ok(vec![u.clone()]);
    }
    Err(Error::InternalInconsistency {
        at: AT,
        why: "center block admitted neither a splitting nor a primitivity witness".into(),
    })
}

fn power_poly(f: &ExtField, g: &UniPoly, e: usize) -> UniPoly {
    let mut acc = unipoly::constant(f.one());
    for _ in 0..e {
        acc = unipoly::mul(f, &acc, g);
    }
    acc
}

/// Canonical basis of {e * s : s in span(space)}.
fn mult_span(b: &FinDimAlgebra, e: &AlgElem, space: &[AlgElem]) -> Vec<AlgElem> {
    let f = b.field();
    let rows: Vec<AlgElem> = space.iter().map(|s| b.mul(e, s)).collect();
    ExactMatrix::from_rows(f, rows, b.dim()).expect("uniform").row_space_basis(f)
}

fn verify_idempotent_family(
    b: &FinDimAlgebra,
    es: &[AlgElem],
    at: &'static str,
) -> Result<()> {
    let mut sum = b.zero();
    for (i, e) in es.iter().enumerate() {
        if b.mul(e, e) != *e {
            return Err(Error::InternalInconsistency {
                at,
                why: format!("central element {i} is not idempotent"),
            });
        }
        for (j, e2) in es.iter().enumerate() {
            if i != j && !b.is_zero_elem(&b.mul(e, e2)) {
                return Err(Error::InternalInconsistency {
                    at,
                    why: format!("idempotents {i} and {j} are not orthogonal"),
                });
            }
        }
        sum = b.add(&sum, e);
    }
    if sum != b.unit() {
        return Err(Error::InternalInconsistency { at, why: "idempotents do not sum to 1".into() });
    }
    Ok(())
}

/// Build the split data for the factor of `b` cut out by the central
/// primitive idempotent `e`.
fn build_factor(
    a: &FinDimAlgebra,
    b: &FinDimAlgebra,
    projection: &ExactMatrix,
    center: &[AlgElem],
    e: AlgElem,
    seed: u64,
) -> Result<SimpleFactor> {
    const AT: &str = "findim::wedderburn::build_factor";
    let f = b.field();
    let d = b.dim();

    let basis = mult_span(b, &e, &(0..d).map(|i| b.basis_elem(i)).collect::<Vec<_>>());
    let factor_center = mult_span(b, &e, center);
    let c = factor_center.len();

    // Primitive element of the factor's center over F.
    let mut w = None;
    if c == 1 {
        w = Some(e.clone());
    } else {
        for z in SplitCandidates::new(b, &factor_center, seed ^ 0x51a7) {
            let m = relative_min_poly(b, &e, &z);
            if unipoly::deg(&m) == Some(c) {
                w = Some(z);
                break;
            }
        }
    }
    let Some(w) = w else {
        return Err(Error::InternalInconsistency {
            at: AT,
            why: "no primitive element found for a factor center".into(),
        });
    };
    let w_minpoly = relative_min_poly(b, &e, &w);
    let center_field = if c == 1 {
        f.clone()
    } else {
        f.make_extension("w", &w_minpoly)?
    };
    let mut center_pows = Vec::with_capacity(c);
    let mut acc = e.clone();
    for _ in 0..c {
        center_pows.push(acc.clone());
        acc = b.mul(&acc, &w);
    }

    // Descend to a primitive idempotent of the factor.
    let mut corner_unit = e.clone();
    let mut corner = corner_space(b, &corner_unit, &basis);
    let mut round = 0u64;
    while corner.len() > c {
        let mut refined = None;
        for z in SplitCandidates::new(b, &corner, seed ^ (0xc0ffee + round)) {
            let m = relative_min_poly(b, &corner_unit, &z);
            let factors = factor_monic(f, &m)?;
            if factors.len() >= 2 {
                let g1 = power_poly(f, &factors[0].0, factors[0].1);
                let mut rest = unipoly::constant(f.one());
                for (g, mult) in &factors[1..] {
                    rest = unipoly::mul(f, &rest, &power_poly(f, g, *mult));
                }
                let (g, _s, t) = unipoly::ext_gcd(f, &g1, &rest)?;
                let ginv = f.inv(&g[0])?;
                let tn = unipoly::scale(f, &t, &ginv);
                let cand = eval_poly_at(b, &unipoly::mul(f, &tn, &rest), &z, &corner_unit);
                if b.mul(&cand, &cand) == cand
                    && !b.is_zero_elem(&cand)
                    && cand != corner_unit
                {
                    refined = Some(cand);
                    break;
                }
            }
        }
        match refined {
            Some(cand) => {
                corner_unit = cand;
                corner = corner_space(b, &corner_unit, &basis);
                round += 1;
            }
            None => {
                // No zero divisor found: the corner is a division algebra
                // properly containing the center.
                return Err(Error::NotSplit {
                    at: AT,
                    why: format!(
                        "a corner of dimension {} over a center of dimension {c} admits no idempotent splitting",
                        corner.len()
                    ),
                });
            }
        }
    }

    // Minimal left ideal and its center-field basis.
    let module: Vec<AlgElem> = {
        let rows: Vec<AlgElem> = basis.iter().map(|v| b.mul(v, &corner_unit)).collect();
        ExactMatrix::from_rows(f, rows, d).expect("uniform").row_space_basis(f)
    };
    if module.len() % c != 0 {
        return Err(Error::InternalInconsistency {
            at: AT,
            why: "minimal module dimension is not a multiple of the center degree".into(),
        });
    }
    let k = module.len() / c;
    if k * k * c != basis.len() {
        return Err(Error::NotSplit {
            at: AT,
            why: format!(
                "factor dimension {} is not k^2 times the center degree {c}",
                basis.len()
            ),
        });
    }
    let module_basis = center_field_basis(b, &module, &center_pows, k)?;

    // Forward phi on the factor basis: solve b.l_s = sum_t,u gamma w^u l_t.
    // Columns of the solve matrix: w^u * l_t in ambient coordinates.
    let mut col_vectors = Vec::with_capacity(k * c);
    for l in &module_basis {
        for wp in &center_pows {
            col_vectors.push(b.mul(wp, l));
        }
    }
    let solve_mat =
        ExactMatrix::from_rows(f, col_vectors, d).expect("uniform").transpose(f);
    let fdim = basis.len();
    let mut phi_forward = ExactMatrix::zeros(f, k * k * c, fdim);
    for (bi, bv) in basis.iter().enumerate() {
        for (s, l) in module_basis.iter().enumerate() {
            let target = b.mul(bv, l);
            let gamma = solve_mat
                .solve(f, &target)
                .expect("shape")
                .ok_or(Error::InternalInconsistency {
                    at: AT,
                    why: "left action leaves the minimal module".into(),
                })?;
            // gamma is ordered (t, u).
            for t in 0..k {
                for u in 0..c {
                    let flat_row = (t * k + s) * c + u;
                    *phi_forward.at_mut(flat_row, bi) = gamma[t * c + u].clone();
                }
            }
        }
    }
    let phi_backward = invert_square(f, &phi_forward).ok_or(Error::InternalInconsistency {
        at: AT,
        why: "factor splitting map is not a linear bijection".into(),
    })?;

    let mut factor = SimpleFactor {
        idempotent: e,
        basis,
        center: center_field,
        center_dim: c,
        center_basis: center_pows,
        k,
        theta_hat: Vec::new(),
        phi_forward,
        phi_backward,
    };

    // Morphism check on factor basis pairs.
    for i in 0..factor.basis.len() {
        let x = factor.basis[i].clone();
        let mx = factor.quotient_to_matrix(b, &x);
        for j in 0..factor.basis.len() {
            let y = factor.basis[j].clone();
            let my = factor.quotient_to_matrix(b, &y);
            let both = factor.quotient_to_matrix(b, &b.mul(&x, &y));
            if factor.mat_mul(&mx, &my) != both {
                return Err(Error::InternalInconsistency {
                    at: AT,
                    why: format!("splitting map is not multiplicative at basis pair ({i},{j})"),
                });
            }
        }
    }

    // Theta-hat on the original algebra's basis.
    let mut theta_hat = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let img = projection.apply(f, &a.basis_elem(i)).expect("projection shape");
        theta_hat.push(factor.quotient_to_matrix(b, &img));
    }
    factor.theta_hat = theta_hat;
    Ok(factor)
}

/// Canonical basis of the corner e * span(basis) * e.
fn corner_space(b: &FinDimAlgebra, e: &AlgElem, basis: &[AlgElem]) -> Vec<AlgElem> {
    let f = b.field();
    let rows: Vec<AlgElem> =
        basis.iter().map(|v| b.mul(&b.mul(e, v), e)).collect();
    ExactMatrix::from_rows(f, rows, b.dim()).expect("uniform").row_space_basis(f)
}

/// Greedy extraction of a center-field basis (size k) of a module whose
/// F-dimension is k * c: vectors whose center-span is direct.
fn center_field_basis(
    b: &FinDimAlgebra,
    module: &[AlgElem],
    center_pows: &[AlgElem],
    k: usize,
) -> Result<Vec<AlgElem>> {
    const AT: &str = "findim::wedderburn::center_field_basis";
    let f = b.field();
    let mut chosen: Vec<AlgElem> = Vec::new();
    let mut span_rows: Vec<AlgElem> = Vec::new();
    for cand in module {
        if chosen.len() == k {
            break;
        }
        let contained = if span_rows.is_empty() {
            b.is_zero_elem(cand)
        } else {
            ExactMatrix::from_rows(f, span_rows.clone(), b.dim())
                .expect("uniform")
                .row_space_contains(f, cand)
                .expect("width")
        };
        if contained {
            continue;
        }
        for wp in center_pows {
            span_rows.push(b.mul(wp, cand));
        }
        chosen.push(cand.clone());
    }
    let full = ExactMatrix::from_rows(f, span_rows, b.dim()).expect("uniform");
    if chosen.len() != k || full.rank(f) != k * center_pows.len() {
        return Err(Error::InternalInconsistency {
            at: AT,
            why: "module has no center-field basis of the expected size".into(),
        });
    }
    Ok(chosen)
}

/// Inverse of a square matrix, or None if singular.
fn invert_square(f: &ExtField, m: &ExactMatrix) -> Option<ExactMatrix> {
    let n = m.nrows();
    if n != m.ncols() {
        return None;
    }
    let aug = m.hstack(f, &ExactMatrix::identity(f, n)).expect("rows match");
    let (r, pivots) = aug.rref(f);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    let mut inv = ExactMatrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            *inv.at_mut(i, j) = r.at(i, n + j).clone();
        }
    }
    Some(inv)
}

//! Left ideals of the polynomial ring `A[x1..xn]` over a finite-dimensional
//! algebra, with variables central. A polynomial is stored coefficientwise;
//! the ideal itself is backed by a module Groebner basis of the coefficient
//! module `F[x1..xn]^d`, which makes membership an exact normal-form test.
//!
//! The module also transports ideals along surjective algebra morphisms and
//! runs the witnessed semiprimeness test over a caller-supplied family.

mod directional;
mod parse;

pub use directional::{directional_ideal, evaluate, vanishing_ideal, DirectionalPoint};
pub use parse::parse_alg_poly;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::ExactMatrix;
use crate::field::FieldElem;
use crate::findim::{AlgElem, FinDimAlgebra};
use crate::polymod::{
    module_groebner, normal_form, MPoly, ModVector, MonomialOrder, MultiIndex, Submodule,
};

/// Polynomial in central variables with coefficients in a fixed
/// finite-dimensional algebra, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgPoly {
    dim: usize,
    nvars: usize,
    terms: BTreeMap<MultiIndex, AlgElem>,
}

impl AlgPoly {
    /// The zero polynomial over an algebra of the given dimension.
    pub fn zero(dim: usize, nvars: usize) -> Self {
        AlgPoly { dim, nvars, terms: BTreeMap::new() }
    }

    /// A constant polynomial.
    pub fn constant(nvars: usize, a: &AlgElem) -> Self {
        Self::from_terms(a.len(), nvars, [(vec![0; nvars], a.clone())])
    }

    /// The constant polynomial `1`.
    pub fn one(alg: &FinDimAlgebra, nvars: usize) -> Self {
        Self::constant(nvars, &alg.unit())
    }

    /// The polynomial `x_l` (times the unit of the algebra).
    pub fn variable(alg: &FinDimAlgebra, nvars: usize, l: usize) -> Self {
        assert!(l < nvars, "variable index out of range");
        let mut exp = vec![0; nvars];
        exp[l] = 1;
        Self::from_terms(alg.dim(), nvars, [(exp, alg.unit())])
    }

    /// Collect `(exponent, coefficient)` pairs, dropping zero coefficients.
    pub fn from_terms(
        dim: usize,
        nvars: usize,
        terms: impl IntoIterator<Item = (MultiIndex, AlgElem)>,
    ) -> Self {
        let mut p = AlgPoly::zero(dim, nvars);
        for (e, a) in terms {
            assert_eq!(e.len(), nvars, "exponent width mismatch");
            assert_eq!(a.len(), dim, "coefficient width mismatch");
            if !a.iter().all(FieldElem::is_zero) {
                p.terms.insert(e, a);
            }
        }
        p
    }

    /// A scalar polynomial placed on the unit: each coefficient `c` becomes
    /// `c * 1_A`.
    pub fn from_scalar(alg: &FinDimAlgebra, p: &MPoly) -> Self {
        let unit = alg.unit();
        Self::from_terms(
            alg.dim(),
            p.nvars(),
            p.terms().map(|(e, c)| (e.clone(), alg.scale(c, &unit))),
        )
    }

    /// Dimension of the coefficient algebra.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The stored terms, keyed by exponent vector.
    pub fn terms(&self) -> &BTreeMap<MultiIndex, AlgElem> {
        &self.terms
    }

    /// The coefficient of an exponent vector, if present.
    pub fn coeff(&self, exp: &[u32]) -> Option<&AlgElem> {
        self.terms.get(exp)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn accumulate(&mut self, alg: &FinDimAlgebra, exp: MultiIndex, a: &AlgElem) {
        if a.iter().all(FieldElem::is_zero) {
            return;
        }
        if let Some(entry) = self.terms.get_mut(&exp) {
            *entry = alg.add(entry, a);
            if entry.iter().all(FieldElem::is_zero) {
                self.terms.remove(&exp);
            }
            return;
        }
        self.terms.insert(exp, a.clone());
    }

    /// Sum of two polynomials over the same algebra.
    pub fn add(&self, alg: &FinDimAlgebra, other: &AlgPoly) -> AlgPoly {
        assert_eq!(self.dim, other.dim, "coefficient algebra mismatch");
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, a) in &other.terms {
            out.accumulate(alg, e.clone(), a);
        }
        out
    }

    /// Negation.
    pub fn neg(&self, alg: &FinDimAlgebra) -> AlgPoly {
        AlgPoly {
            dim: self.dim,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), alg.neg(a))).collect(),
        }
    }

    /// Difference of two polynomials over the same algebra.
    pub fn sub(&self, alg: &FinDimAlgebra, other: &AlgPoly) -> AlgPoly {
        self.add(alg, &other.neg(alg))
    }

    /// Scalar multiple.
    pub fn scale(&self, alg: &FinDimAlgebra, c: &FieldElem) -> AlgPoly {
        AlgPoly::from_terms(
            self.dim,
            self.nvars,
            self.terms.iter().map(|(e, a)| (e.clone(), alg.scale(c, a))),
        )
    }

    /// Product in `A[x1..xn]`: coefficients multiply in the algebra, in
    /// order, while exponents add.
    pub fn mul(&self, alg: &FinDimAlgebra, other: &AlgPoly) -> AlgPoly {
        assert_eq!(self.dim, other.dim, "coefficient algebra mismatch");
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = AlgPoly::zero(self.dim, self.nvars);
        for (e1, a1) in &self.terms {
            for (e2, a2) in &other.terms {
                let exp: MultiIndex = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.accumulate(alg, exp, &alg.mul(a1, a2));
            }
        }
        out
    }

    /// Left multiplication by a constant algebra element.
    pub fn mul_left_const(&self, alg: &FinDimAlgebra, a: &AlgElem) -> AlgPoly {
        AlgPoly::constant(self.nvars, a).mul(alg, self)
    }

    /// The coefficient module view: component `i` collects the `i`-th
    /// coordinate of every coefficient.
    pub fn to_modvector(&self) -> ModVector {
        let comps = (0..self.dim)
            .map(|i| {
                MPoly::from_terms(
                    self.nvars,
                    self.terms.iter().map(|(e, a)| (e.clone(), a[i].clone())),
                )
            })
            .collect();
        ModVector::from_components(comps).expect("components share the variable count")
    }

    /// Rebuild a polynomial from its coefficient module view.
    pub fn from_modvector(alg: &FinDimAlgebra, v: &ModVector) -> AlgPoly {
        assert_eq!(v.rank(), alg.dim(), "module rank does not match the algebra dimension");
        let mut terms: BTreeMap<MultiIndex, AlgElem> = BTreeMap::new();
        for (i, comp) in v.components().iter().enumerate() {
            for (e, c) in comp.terms() {
                let entry = terms.entry(e.clone()).or_insert_with(|| alg.zero());
                entry[i] = c.clone();
            }
        }
        AlgPoly::from_terms(alg.dim(), v.nvars(), terms)
    }

    /// Render against the algebra's basis names, highest degree first.
    pub fn render(&self, alg: &FinDimAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut items: Vec<(&MultiIndex, &AlgElem)> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let mut parts = Vec::new();
        for (exp, a) in items {
            let mut mono = Vec::new();
            for (l, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if self.nvars == 1 { "x".to_string() } else { format!("x{}", l + 1) };
                mono.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let cs = alg.elem_to_string(a);
            let part = if mono.is_empty() {
                if cs.contains(" + ") || cs.contains(" - ") {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if *a == alg.unit() {
                mono.join("*")
            } else if cs.contains(" + ") || cs.contains(" - ") {
                format!("({cs})*{}", mono.join("*"))
            } else {
                format!("{cs}*{}", mono.join("*"))
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

/// A left ideal of `A[x1..xn]`, carried by the module Groebner basis of its
/// coefficient module.
#[derive(Debug, Clone)]
pub struct LeftIdeal {
    dim: usize,
    nvars: usize,
    generators: Vec<AlgPoly>,
    backing: Submodule,
}

impl LeftIdeal {
    /// Dimension of the coefficient algebra.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The generators this ideal was built from.
    pub fn generators(&self) -> &[AlgPoly] {
        &self.generators
    }

    /// The completed coefficient module.
    pub fn backing(&self) -> &Submodule {
        &self.backing
    }

    /// The canonical basis of the coefficient module, as polynomials.
    pub fn basis_polys(&self, alg: &FinDimAlgebra) -> Vec<AlgPoly> {
        self.backing
            .basis()
            .expect("the backing module is completed on construction")
            .iter()
            .map(|v| AlgPoly::from_modvector(alg, v))
            .collect()
    }

    /// Whether two ideals of the same shape are equal, by comparing their
    /// canonical bases.
    pub fn same_ideal(&self, other: &LeftIdeal) -> bool {
        self.dim == other.dim
            && self.nvars == other.nvars
            && self.backing.basis() == other.backing.basis()
    }
}

/// The left ideal generated by the given polynomials: the span of all
/// `p * b_i * g` with `p` scalar, `b_i` a basis element, and `g` a generator.
pub fn generate(alg: &FinDimAlgebra, nvars: usize, gens: &[AlgPoly]) -> Result<LeftIdeal> {
    const AT: &str = "leftideal::generate";
    let d = alg.dim();
    if nvars == 0 {
        return Err(Error::NotSupported {
            at: AT,
            why: "at least one polynomial variable is required".into(),
        });
    }
    for g in gens {
        if g.dim() != d {
            return Err(Error::MixedParents {
                at: AT,
                why: format!(
                    "generator over an algebra of dimension {}, expected {}",
                    g.dim(),
                    d
                ),
            });
        }
        if g.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("generator in {} variables, ideal in {}", g.nvars(), nvars),
            });
        }
    }
    let mut module_gens = Vec::new();
    for g in gens {
        for i in 0..d {
            let m = g.mul_left_const(alg, &alg.basis_elem(i));
            if !m.is_zero() {
                module_gens.push(m.to_modvector());
            }
        }
    }
    let sub = Submodule::new(d, nvars, module_gens)?;
    let backing = module_groebner(alg.field(), &sub, MonomialOrder::default())?;
    let basis: Vec<ModVector> =
        backing.basis().expect("module_groebner caches a basis").to_vec();
    for w in &basis {
        let wp = AlgPoly::from_modvector(alg, w);
        for i in 0..d {
            let prod = wp.mul_left_const(alg, &alg.basis_elem(i));
            let nf = normal_form(alg.field(), &prod.to_modvector(), &backing)?;
            if !nf.is_zero() {
                return Err(Error::InternalInconsistency {
                    at: AT,
                    why: "the coefficient module is not closed under left multiplication"
                        .into(),
                });
            }
        }
    }
    Ok(LeftIdeal { dim: d, nvars, generators: gens.to_vec(), backing })
}

/// Exact membership test against the backing module.
///
/// Panics when the polynomial's shape does not match the ideal or its degree
/// exceeds the completion budget.
pub fn contains(alg: &FinDimAlgebra, ideal: &LeftIdeal, p: &AlgPoly) -> bool {
    assert_eq!(p.dim(), ideal.dim, "coefficient algebra mismatch");
    assert_eq!(p.nvars(), ideal.nvars, "variable count mismatch");
    let nf = normal_form(alg.field(), &p.to_modvector(), &ideal.backing)
        .expect("reduction under the degree-compatible order stays within the budget");
    nf.is_zero()
}

/// Which way to move an ideal along an algebra morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransportDirection {
    /// The ideal generated by the images of the generators.
    Image,
    /// The full preimage, including the kernel of the morphism.
    Preimage,
}

/// Move a left ideal along a surjective algebra morphism given by its matrix
/// on coordinates (`target.dim()` rows by `source.dim()` columns).
///
/// The matrix is verified to send unit to unit, respect products of basis
/// elements, and have full rank onto the target.
pub fn transport(
    source: &FinDimAlgebra,
    target: &FinDimAlgebra,
    matrix: &ExactMatrix,
    ideal: &LeftIdeal,
    direction: TransportDirection,
) -> Result<LeftIdeal> {
    const AT: &str = "leftideal::transport";
    let f = source.field();
    if target.field() != f {
        return Err(Error::MixedParents {
            at: AT,
            why: "source and target algebras live over different scalar fields".into(),
        });
    }
    if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
        return Err(Error::DimensionMismatch {
            at: AT,
            why: format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                target.dim(),
                source.dim()
            ),
        });
    }
    let apply = |a: &AlgElem| -> AlgElem {
        matrix.apply(f, a).expect("matrix width matches the source dimension")
    };
    let unit_image = apply(&source.unit());
    if unit_image != target.unit() {
        return Err(Error::NotSupported {
            at: AT,
            why: "the matrix does not send unit to unit, so it is not an algebra morphism"
                .into(),
        });
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = apply(&source.mul(&source.basis_elem(i), &source.basis_elem(j)));
            let rhs = target.mul(&apply(&source.basis_elem(i)), &apply(&source.basis_elem(j)));
            if lhs != rhs {
                return Err(Error::NotSupported {
                    at: AT,
                    why: "the matrix does not respect products, so it is not an algebra \
                          morphism"
                        .into(),
                });
            }
        }
    }
    if matrix.rank(f) != target.dim() {
        return Err(Error::NotSurjective {
            at: AT,
            why: "the morphism does not reach the whole target algebra".into(),
        });
    }
    match direction {
        TransportDirection::Image => {
            if ideal.dim() != source.dim() {
                return Err(Error::DimensionMismatch {
                    at: AT,
                    why: "the ideal does not live over the source algebra".into(),
                });
            }
            let mapped: Vec<AlgPoly> = ideal
                .basis_polys(source)
                .iter()
                .map(|g| {
                    AlgPoly::from_terms(
                        target.dim(),
                        g.nvars(),
                        g.terms().iter().map(|(e, a)| (e.clone(), apply(a))),
                    )
                })
                .collect();
            generate(target, ideal.nvars(), &mapped)
        }
        TransportDirection::Preimage => {
            if ideal.dim() != target.dim() {
                return Err(Error::DimensionMismatch {
                    at: AT,
                    why: "the ideal does not live over the target algebra".into(),
                });
            }
            let mut gens: Vec<AlgPoly> = Vec::new();
            for g in ideal.basis_polys(target) {
                let mut terms: BTreeMap<MultiIndex, AlgElem> = BTreeMap::new();
                for (e, a) in g.terms() {
                    let pre = matrix
                        .solve(f, a)?
                        .expect("a surjective morphism solves every coefficient");
                    terms.insert(e.clone(), pre);
                }
                gens.push(AlgPoly::from_terms(source.dim(), ideal.nvars(), terms));
            }
            for kvec in matrix.kernel_basis(f) {
                gens.push(AlgPoly::constant(ideal.nvars(), &kvec));
            }
            generate(source, ideal.nvars(), &gens)
        }
    }
}

/// Witnessed semiprimeness over a candidate family: report the first
/// candidate `a` outside the ideal whose sandwiches `a * b_i * a` and
/// `a * b_i x_l * a` all land inside it. The verdict is relative to the
/// family searched.
pub fn is_semiprime_left_witnessed(
    alg: &FinDimAlgebra,
    ideal: &LeftIdeal,
    candidates: &[AlgPoly],
) -> (bool, Option<AlgPoly>) {
    for a in candidates {
        assert_eq!(a.dim(), ideal.dim(), "coefficient algebra mismatch");
        assert_eq!(a.nvars(), ideal.nvars(), "variable count mismatch");
        if contains(alg, ideal, a) {
            continue;
        }
        let mut sandwiched = true;
        'middles: for i in 0..alg.dim() {
            let basis_const = AlgPoly::constant(ideal.nvars(), &alg.basis_elem(i));
            let mut middles = vec![basis_const.clone()];
            for l in 0..ideal.nvars() {
                middles
                    .push(basis_const.mul(alg, &AlgPoly::variable(alg, ideal.nvars(), l)));
            }
            for mid in &middles {
                let sandwich = a.mul(alg, mid).mul(alg, a);
                if !contains(alg, ideal, &sandwich) {
                    sandwiched = false;
                    break 'middles;
                }
            }
        }
        if sandwiched {
            return (false, Some(a.clone()));
        }
    }
    (true, None)
}

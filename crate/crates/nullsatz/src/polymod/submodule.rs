//! Submodules of free modules and their canonical reduced bases.

use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElem};

use super::mpoly::{MPoly, MultiIndex};
use super::{cmp_terms, monomial_divides, monomial_lcm, monomial_quot, MonomialOrder};

/// Largest total degree a completion run may touch before giving up.
pub const DEGREE_BUDGET: u32 = 40;

/// An element of a free module: one polynomial per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModVector {
    comps: Vec<MPoly>,
}

impl ModVector {
    /// The zero vector of a given rank and variable count.
    pub fn zero(rank: usize, nvars: usize) -> Self {
        ModVector { comps: vec![MPoly::zero(nvars); rank] }
    }

    /// Bundle components into a vector; all must agree on variable count.
    pub fn from_components(comps: Vec<MPoly>) -> Result<Self> {
        const AT: &str = "polymod::ModVector::from_components";
        if comps.is_empty() {
            return Err(Error::RankMismatch { at: AT, expected: 1, got: 0 });
        }
        let nvars = comps[0].nvars();
        for c in &comps {
            if c.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    at: AT,
                    why: format!("components in {} and {} variables", nvars, c.nvars()),
                });
            }
        }
        Ok(ModVector { comps })
    }

    /// A vector with a single nonzero component.
    pub fn unit(rank: usize, position: usize, p: MPoly) -> Self {
        assert!(position < rank, "position out of range");
        let mut v = ModVector::zero(rank, p.nvars());
        v.comps[position] = p;
        v
    }

    /// Number of components.
    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.comps[0].nvars()
    }

    /// Component at a position.
    pub fn component(&self, i: usize) -> &MPoly {
        &self.comps[i]
    }

    /// All components in position order.
    pub fn components(&self) -> &[MPoly] {
        &self.comps
    }

    /// Whether every component vanishes.
    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(MPoly::is_zero)
    }

    /// Largest total degree over all components, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(MPoly::total_degree).max()
    }

    /// Componentwise sum.
    pub fn add(f: &ExtField, a: &ModVector, b: &ModVector) -> ModVector {
        assert_eq!(a.comps.len(), b.comps.len(), "rank mismatch");
        let comps =
            a.comps.iter().zip(&b.comps).map(|(x, y)| MPoly::add(f, x, y)).collect();
        ModVector { comps }
    }

    /// Componentwise difference.
    pub fn sub(f: &ExtField, a: &ModVector, b: &ModVector) -> ModVector {
        assert_eq!(a.comps.len(), b.comps.len(), "rank mismatch");
        let comps =
            a.comps.iter().zip(&b.comps).map(|(x, y)| MPoly::sub(f, x, y)).collect();
        ModVector { comps }
    }

    /// Multiply every component by a scalar.
    pub fn scale(f: &ExtField, a: &ModVector, c: &FieldElem) -> ModVector {
        ModVector { comps: a.comps.iter().map(|x| MPoly::scale(f, x, c)).collect() }
    }

    /// Multiply every component by a single term.
    pub fn mul_term(f: &ExtField, a: &ModVector, exp: &[u32], c: &FieldElem) -> ModVector {
        ModVector { comps: a.comps.iter().map(|x| MPoly::mul_term(f, x, exp, c)).collect() }
    }

    /// Multiply every component by a polynomial.
    pub fn mul_poly(f: &ExtField, a: &ModVector, p: &MPoly) -> ModVector {
        ModVector { comps: a.comps.iter().map(|x| MPoly::mul(f, x, p)).collect() }
    }

    /// The largest term under a module order, as `(position, monomial, coeff)`.
    pub fn leading(&self, order: MonomialOrder) -> Option<(usize, MultiIndex, FieldElem)> {
        let mut best: Option<(usize, MultiIndex, FieldElem)> = None;
        for (i, p) in self.comps.iter().enumerate() {
            if let Some((e, c)) = p.leading(order.term) {
                let replace = match &best {
                    None => true,
                    Some((bi, be, _)) => {
                        cmp_terms(order, (i, e), (*bi, be)) == std::cmp::Ordering::Greater
                    }
                };
                if replace {
                    best = Some((i, e.clone(), c.clone()));
                }
            }
        }
        best
    }

    /// Render as `[p1, p2, ...]`.
    pub fn render(&self, f: &ExtField) -> String {
        let parts: Vec<String> = self.comps.iter().map(|p| p.render(f)).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// A finitely generated submodule of `E[x1..xn]^k`, with an optional cached
/// canonical reduced basis for a specific order.
#[derive(Debug, Clone)]
pub struct Submodule {
    rank: usize,
    nvars: usize,
    generators: Vec<ModVector>,
    order: MonomialOrder,
    basis: Option<Vec<ModVector>>,
}

impl Submodule {
    /// Wrap generators; they must share the rank and variable count given.
    pub fn new(rank: usize, nvars: usize, generators: Vec<ModVector>) -> Result<Self> {
        const AT: &str = "polymod::Submodule::new";
        if rank == 0 || nvars == 0 {
            return Err(Error::NotSupported {
                at: AT,
                why: "rank and variable count must be positive".into(),
            });
        }
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch { at: AT, expected: rank, got: g.rank() });
            }
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    at: AT,
                    why: format!("generator in {} variables, module in {}", g.nvars(), nvars),
                });
            }
        }
        Ok(Submodule { rank, nvars, generators, order: MonomialOrder::default(), basis: None })
    }

    /// Number of components of the ambient free module.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of variables of the coefficient ring.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The defining generators.
    pub fn generators(&self) -> &[ModVector] {
        &self.generators
    }

    /// The order the cached basis was computed for.
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The cached canonical basis, if one has been computed.
    pub fn basis(&self) -> Option<&[ModVector]> {
        self.basis.as_deref()
    }

    fn basis_required(&self, at: &'static str) -> Result<&[ModVector]> {
        self.basis.as_deref().ok_or_else(|| Error::NotSupported {
            at,
            why: "the submodule has no cached basis; complete it first".into(),
        })
    }
}

fn budget_check(v: &ModVector, at: &'static str) -> Result<()> {
    if v.total_degree().is_some_and(|d| d > DEGREE_BUDGET) {
        return Err(Error::DegreeBudgetExceeded { at, budget: DEGREE_BUDGET });
    }
    Ok(())
}

/// Fully reduce a vector against a list of basis vectors: every term of the
/// result is free of their leading terms. Reducers are tried in list order,
/// which makes the result deterministic for a fixed list.
fn reduce_full(
    f: &ExtField,
    v: &ModVector,
    basis: &[ModVector],
    order: MonomialOrder,
    at: &'static str,
) -> Result<ModVector> {
    let leads: Vec<(usize, MultiIndex, FieldElem)> =
        basis.iter().map(|g| g.leading(order).expect("basis vectors are nonzero")).collect();
    let mut work = v.clone();
    let mut done = ModVector::zero(v.rank(), v.nvars());
    while let Some((pos, mono, coeff)) = work.leading(order) {
        budget_check(&work, at)?;
        let mut reduced = false;
        for (g, (gp, ge, gc)) in basis.iter().zip(&leads) {
            if *gp == pos && monomial_divides(ge, &mono) {
                let quot = monomial_quot(&mono, ge);
                let scale = f.div(&coeff, gc).expect("leading coefficients are nonzero");
                work = ModVector::sub(f, &work, &ModVector::mul_term(f, g, &quot, &scale));
                reduced = true;
                break;
            }
        }
        if !reduced {
            // Move the irreducible leading term aside and keep reducing the
            // strictly smaller tail.
            let lt = ModVector::unit(
                v.rank(),
                pos,
                MPoly::term(v.nvars(), mono.clone(), coeff.clone()),
            );
            done = ModVector::add(f, &done, &lt);
            work = ModVector::sub(f, &work, &lt);
        }
    }
    Ok(done)
}

/// The S-vector of two basis vectors whose leading terms share a position.
fn s_vector(
    f: &ExtField,
    a: &ModVector,
    alead: &(usize, MultiIndex, FieldElem),
    b: &ModVector,
    blead: &(usize, MultiIndex, FieldElem),
) -> ModVector {
    let lcm = monomial_lcm(&alead.1, &blead.1);
    let qa = monomial_quot(&lcm, &alead.1);
    let qb = monomial_quot(&lcm, &blead.1);
    let ca = f.inv(&alead.2).expect("leading coefficients are nonzero");
    let cb = f.inv(&blead.2).expect("leading coefficients are nonzero");
    let left = ModVector::mul_term(f, a, &qa, &ca);
    let right = ModVector::mul_term(f, b, &qb, &cb);
    ModVector::sub(f, &left, &right)
}

/// Complete a submodule to its canonical reduced basis for an order.
///
/// The result caches the basis: minimal, fully inter-reduced, every leading
/// coefficient one, sorted with the largest leading term first. Runs that
/// would touch total degree beyond [`DEGREE_BUDGET`] fail instead.
pub fn module_groebner(f: &ExtField, s: &Submodule, order: MonomialOrder) -> Result<Submodule> {
    const AT: &str = "polymod::module_groebner";
    let mut basis: Vec<ModVector> = Vec::new();
    for g in &s.generators {
        budget_check(g, AT)?;
        if !g.is_zero() {
            basis.push(g.clone());
        }
    }

    // Pairs of basis indices whose S-vectors still need inspection.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }

    while let Some((i, j)) = pairs.pop() {
        let gi = basis[i].clone();
        let gj = basis[j].clone();
        let li = gi.leading(order).expect("basis vectors are nonzero");
        let lj = gj.leading(order).expect("basis vectors are nonzero");
        if li.0 != lj.0 {
            // Leading terms in different positions have no syzygy to cancel.
            continue;
        }
        // Coprime leading monomials cancel on their own, but only when both
        // vectors live entirely in the shared position; tails elsewhere can
        // survive the cancellation.
        let single_position = |v: &ModVector, p: usize| {
            v.components().iter().enumerate().all(|(q, c)| q == p || c.is_zero())
        };
        if monomial_lcm(&li.1, &lj.1).iter().sum::<u32>()
            == li.1.iter().sum::<u32>() + lj.1.iter().sum::<u32>()
            && single_position(&gi, li.0)
            && single_position(&gj, lj.0)
        {
            continue;
        }
        let s_vec = s_vector(f, &gi, &li, &gj, &lj);
        budget_check(&s_vec, AT)?;
        let h = reduce_full(f, &s_vec, &basis, order, AT)?;
        if !h.is_zero() {
            budget_check(&h, AT)?;
            let new_index = basis.len();
            for k in 0..new_index {
                pairs.push((k, new_index));
            }
            basis.push(h);
        }
    }

    // Minimalize: drop any vector whose leading term another one divides.
    let leads: Vec<(usize, MultiIndex, FieldElem)> =
        basis.iter().map(|g| g.leading(order).expect("nonzero")).collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if leads[j].0 == leads[i].0 && monomial_divides(&leads[j].1, &leads[i].1) {
                // Break ties between equal leading terms by index so exactly
                // one survives.
                if leads[j].1 == leads[i].1 && j > i {
                    continue;
                }
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<ModVector> = basis
        .into_iter()
        .zip(&keep)
        .filter_map(|(g, &k)| if k { Some(g) } else { None })
        .collect();

    // Inter-reduce tails and normalize leading coefficients.
    let mut reduced: Vec<ModVector> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<ModVector> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j == i { None } else { Some(g.clone()) })
            .collect();
        let mut g = if others.is_empty() {
            minimal[i].clone()
        } else {
            reduce_full(f, &minimal[i], &others, order, AT)?
        };
        let (_, _, c) = g.leading(order).ok_or(Error::InternalInconsistency {
            at: AT,
            why: "a minimal basis vector reduced to zero".into(),
        })?;
        let inv = f.inv(&c).expect("leading coefficient is nonzero");
        g = ModVector::scale(f, &g, &inv);
        reduced.push(g);
    }
    reduced.sort_by(|a, b| {
        let la = a.leading(order).expect("nonzero");
        let lb = b.leading(order).expect("nonzero");
        cmp_terms(order, (lb.0, &lb.1), (la.0, &la.1))
    });

    Ok(Submodule {
        rank: s.rank,
        nvars: s.nvars,
        generators: s.generators.clone(),
        order,
        basis: Some(reduced),
    })
}

/// Normal form of a vector against a completed submodule.
///
/// The difference `v - normal_form(v)` lies in the submodule, and the normal
/// form vanishes exactly when `v` itself does so modulo the submodule.
pub fn normal_form(f: &ExtField, v: &ModVector, s: &Submodule) -> Result<ModVector> {
    const AT: &str = "polymod::normal_form";
    if v.rank() != s.rank {
        return Err(Error::RankMismatch { at: AT, expected: s.rank, got: v.rank() });
    }
    if v.nvars() != s.nvars {
        return Err(Error::DimensionMismatch {
            at: AT,
            why: format!("vector in {} variables, module in {}", v.nvars(), s.nvars),
        });
    }
    let basis = s.basis_required(AT)?;
    if basis.is_empty() {
        return Ok(v.clone());
    }
    reduce_full(f, v, basis, s.order, AT)
}

/// Intersect two submodules of the same free module.
///
/// The two copies of the ambient module are stacked into rank `2k`: one block
/// carries pairs `(g, g)` for generators of the first module, the other pairs
/// `(0, h)` for the second. Completing under a position-first order and
/// keeping the vectors supported entirely on the low block projects out
/// exactly the common elements.
pub fn intersect_submodules(f: &ExtField, s1: &Submodule, s2: &Submodule) -> Result<Submodule> {
    const AT: &str = "polymod::intersect_submodules";
    if s1.rank != s2.rank {
        return Err(Error::RankMismatch { at: AT, expected: s1.rank, got: s2.rank });
    }
    if s1.nvars != s2.nvars {
        return Err(Error::DimensionMismatch {
            at: AT,
            why: format!("modules in {} and {} variables", s1.nvars, s2.nvars),
        });
    }
    let k = s1.rank;
    let nvars = s1.nvars;
    let mut doubled: Vec<ModVector> = Vec::new();
    for g in &s1.generators {
        let mut comps = g.components().to_vec();
        comps.extend(g.components().iter().cloned());
        doubled.push(ModVector::from_components(comps)?);
    }
    for h in &s2.generators {
        let mut comps = vec![MPoly::zero(nvars); k];
        comps.extend(h.components().iter().cloned());
        doubled.push(ModVector::from_components(comps)?);
    }
    let stacked = Submodule::new(2 * k, nvars, doubled)?;
    // Positions compare ascending, so the high block leads whenever it is
    // occupied; a position-first order therefore eliminates it.
    let elim_order =
        MonomialOrder { position: super::PositionRule::PositionOverTerm, term: s1.order.term };
    let completed = module_groebner(f, &stacked, elim_order)?;
    let mut low: Vec<ModVector> = Vec::new();
    for g in completed.basis().expect("just completed") {
        if g.components()[k..].iter().all(MPoly::is_zero) {
            low.push(ModVector::from_components(g.components()[..k].to_vec())?);
        }
    }
    let projected = Submodule::new(k, nvars, low)?;
    module_groebner(f, &projected, s1.order)
}

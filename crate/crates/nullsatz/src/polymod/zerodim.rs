//! Finite quotients and their points.
//!
//! A completed submodule has a finite-dimensional quotient exactly when every
//! component's staircase is finite. The quotient then carries commuting
//! multiplication maps whose joint eigenvalues are the points at which the
//! whole annihilator of the quotient vanishes; enumeration walks extensions
//! of the scalar field degree by degree and keeps each point only over its
//! smallest field of definition.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::{
    factor_degree_counts, irreducible_of_degree, roots_in_field, ExactMatrix, ExtField, FieldElem,
    UniPoly,
};

use super::monomial_divides;
use super::mpoly::{MPoly, MultiIndex};
use super::submodule::{normal_form, ModVector, Submodule};

/// Field enumerations stay below this many scalars.
const FIELD_SCAN_CAP: u64 = 1 << 20;

/// Standard monomials of a finite quotient, indexed for coordinates.
struct Staircase {
    monos: Vec<(usize, MultiIndex)>,
    index: BTreeMap<(usize, MultiIndex), usize>,
}

impl Staircase {
    fn dim(&self) -> usize {
        self.monos.len()
    }

    /// Coordinates of a fully reduced vector over the standard monomials.
    fn flatten(&self, f: &ExtField, v: &ModVector) -> Result<Vec<FieldElem>> {
        let mut out = vec![f.zero(); self.monos.len()];
        for (i, p) in v.components().iter().enumerate() {
            for (e, c) in p.terms() {
                let Some(&k) = self.index.get(&(i, e.clone())) else {
                    return Err(Error::InternalInconsistency {
                        at: "polymod::staircase",
                        why: "a reduced vector contains a non-standard term".into(),
                    });
                };
                out[k] = c.clone();
            }
        }
        Ok(out)
    }
}

/// Leading terms of a cached basis, grouped by position.
fn leads_by_position(s: &Submodule) -> Vec<Vec<MultiIndex>> {
    let mut by_pos: Vec<Vec<MultiIndex>> = vec![Vec::new(); s.rank()];
    for g in s.basis().expect("caller checked the cache") {
        let (p, m, _) = g.leading(s.order()).expect("basis vectors are nonzero");
        by_pos[p].push(m);
    }
    by_pos
}

/// The staircase of a completed submodule, or `None` when some component's
/// quotient is infinite-dimensional.
fn staircase(s: &Submodule) -> Option<Staircase> {
    let n = s.nvars();
    let by_pos = leads_by_position(s);
    let mut monos = Vec::new();
    for (pos, leads) in by_pos.iter().enumerate() {
        // A finite staircase needs a pure power of every variable among the
        // leading monomials; a constant lead empties the component.
        let mut caps = vec![0u32; n];
        for l in 0..n {
            let mut cap: Option<u32> = None;
            for m in leads {
                let pure = m.iter().enumerate().all(|(j, &e)| j == l || e == 0);
                if pure {
                    let e = m[l];
                    cap = Some(cap.map_or(e, |c| c.min(e)));
                }
            }
            caps[l] = cap?;
        }
        let mut exp = vec![0u32; n];
        loop {
            let standard = !leads.iter().any(|m| monomial_divides(m, &exp));
            if standard {
                monos.push((pos, exp.clone()));
            }
            let mut l = 0;
            loop {
                if l == n {
                    break;
                }
                exp[l] += 1;
                if exp[l] < caps[l] {
                    break;
                }
                exp[l] = 0;
                l += 1;
            }
            if l == n {
                break;
            }
        }
    }
    monos.sort();
    let index = monos.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    Some(Staircase { monos, index })
}

/// Monic univariate polynomial of least degree that sends a component's
/// generator into the submodule when applied to one variable.
fn eliminant(
    f: &ExtField,
    s: &Submodule,
    stair: &Staircase,
    position: usize,
    var: usize,
) -> Result<UniPoly> {
    let n = s.nvars();
    let mut rep = normal_form(
        f,
        &ModVector::unit(s.rank(), position, MPoly::constant(n, f.one())),
        s,
    )?;
    let mut rows: Vec<Vec<FieldElem>> = Vec::new();
    loop {
        let target = stair.flatten(f, &rep)?;
        if !rows.is_empty() {
            let m = ExactMatrix::from_rows(f, rows.clone(), stair.dim())?;
            if let Some(c) = m.transpose(f).solve(f, &target)? {
                // x^m = sum c_j x^j modulo the annihilator, so the monic
                // dependence is the eliminant.
                let mut poly: UniPoly = c.iter().map(|a| f.neg(a)).collect();
                poly.push(f.one());
                return Ok(poly);
            }
        } else if target.iter().all(FieldElem::is_zero) {
            return Ok(vec![f.one()]);
        }
        rows.push(target);
        if rows.len() > stair.dim() + 1 {
            return Err(Error::InternalInconsistency {
                at: "polymod::eliminant",
                why: "no linear dependence within the quotient dimension".into(),
            });
        }
        let x = MPoly::variable(f, n, var);
        rep = normal_form(f, &ModVector::mul_poly(f, &rep, &x), s)?;
    }
}

/// Standard pairs (position, monomial) spanning a finite quotient as a
/// vector space, sorted, or `None` when some component's quotient is
/// infinite-dimensional. Requires a cached basis.
pub fn standard_pairs(s: &Submodule) -> Result<Option<Vec<(usize, MultiIndex)>>> {
    if s.basis().is_none() {
        return Err(Error::NotSupported {
            at: "polymod::standard_pairs",
            why: "the submodule has no cached basis; complete it first".into(),
        });
    }
    Ok(staircase(s).map(|st| st.monos))
}

/// Whether a completed submodule has a finite-dimensional quotient, and a
/// bound on the extension degree of any of its points.
///
/// The bound comes from the univariate eliminants of the quotient's
/// annihilator: over a finite field it is the largest, over the components,
/// least common multiple of the degrees of their irreducible factors; over
/// an infinite field the factor census is replaced by the plain degree
/// product. Requires a cached basis.
pub fn is_zero_dimensional(f: &ExtField, s: &Submodule) -> Result<(bool, Option<u32>)> {
    const AT: &str = "polymod::is_zero_dimensional";
    if s.basis().is_none() {
        return Err(Error::NotSupported {
            at: AT,
            why: "the submodule has no cached basis; complete it first".into(),
        });
    }
    let Some(stair) = staircase(s) else {
        return Ok((false, None));
    };
    let finite = f.size().is_some();
    let mut overall: u32 = 1;
    for pos in 0..s.rank() {
        let mut bound: u32 = 1;
        for var in 0..s.nvars() {
            let g = eliminant(f, s, &stair, pos, var)?;
            if finite {
                for (&d, _) in factor_degree_counts(f, &g)?.iter() {
                    bound = num_integer::lcm(bound, d as u32);
                }
            } else {
                bound = bound.saturating_mul((g.len() - 1).max(1) as u32);
            }
        }
        overall = overall.max(bound);
    }
    Ok((true, Some(overall)))
}

/// The cyclic quotient generated by one component: coordinates of its basis
/// inside the staircase span, and one multiplication matrix per variable.
struct CyclicComponent {
    coords: ExactMatrix,
    mats: Vec<ExactMatrix>,
}

fn cyclic_component(
    f: &ExtField,
    s: &Submodule,
    stair: &Staircase,
    position: usize,
) -> Result<Option<CyclicComponent>> {
    let n = s.nvars();
    let start = normal_form(
        f,
        &ModVector::unit(s.rank(), position, MPoly::constant(n, f.one())),
        s,
    )?;
    if start.is_zero() {
        return Ok(None);
    }
    let mut reps = vec![start];
    let mut rows = vec![stair.flatten(f, &reps[0])?];
    let mut next = 0;
    while next < reps.len() {
        for var in 0..n {
            let x = MPoly::variable(f, n, var);
            let w = normal_form(f, &ModVector::mul_poly(f, &reps[next], &x), s)?;
            let coords = stair.flatten(f, &w)?;
            let m = ExactMatrix::from_rows(f, rows.clone(), stair.dim())?;
            if !m.row_space_contains(f, &coords)? {
                reps.push(w);
                rows.push(coords);
            }
        }
        next += 1;
    }
    let coords = ExactMatrix::from_rows(f, rows.clone(), stair.dim())?;
    let solver = coords.transpose(f);
    let t = reps.len();
    let mut mats = Vec::with_capacity(n);
    for var in 0..n {
        let x = MPoly::variable(f, n, var);
        let mut m = ExactMatrix::zeros(f, t, t);
        for (j, rep) in reps.iter().enumerate() {
            let w = normal_form(f, &ModVector::mul_poly(f, rep, &x), s)?;
            let target = stair.flatten(f, &w)?;
            let col = solver.solve(f, &target)?.ok_or(Error::InternalInconsistency {
                at: "polymod::cyclic_component",
                why: "a product left the cyclic span".into(),
            })?;
            for (i, c) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = c;
            }
        }
        mats.push(m);
    }
    Ok(Some(CyclicComponent { coords, mats }))
}

/// Whether some nonzero functional on the cyclic quotient scales by the
/// coordinates of the candidate point under every multiplication map.
fn is_joint_eigenvalue(
    big: &ExtField,
    embed: &dyn Fn(&FieldElem) -> FieldElem,
    comp: &CyclicComponent,
    point: &[FieldElem],
) -> Result<bool> {
    let t = comp.coords.nrows();
    let mut stacked: Option<ExactMatrix> = None;
    for (l, m) in comp.mats.iter().enumerate() {
        let mut block = ExactMatrix::zeros(big, t, t);
        for i in 0..t {
            for j in 0..t {
                // Transposed entry, shifted by the coordinate on the diagonal.
                let mut v = embed(m.at(j, i));
                if i == j {
                    v = big.sub(&v, &point[l]);
                }
                *block.at_mut(i, j) = v;
            }
        }
        stacked = Some(match stacked {
            None => block,
            Some(prev) => prev.vstack(big, &block)?,
        });
    }
    let stacked = stacked.expect("at least one variable");
    Ok(stacked.rank(big) < t)
}

/// All points of the quotient's annihilator over extensions of degree at
/// most `dmax`, each reported once over its minimal field of definition.
///
/// Requires a finite scalar field and a cached basis with a
/// finite-dimensional quotient. Points over a degree-`e` extension come with
/// the extension itself; points whose coordinates all lie in a proper
/// subfield are left to the smaller degree that defines them.
pub fn enumerate_points(
    f: &ExtField,
    s: &Submodule,
    dmax: u32,
) -> Result<Vec<(ExtField, Vec<FieldElem>)>> {
    const AT: &str = "polymod::enumerate_points";
    if f.size().is_none() {
        return Err(Error::InfiniteBaseField { at: AT });
    }
    let (finite, _) = is_zero_dimensional(f, s)?;
    if !finite {
        return Err(Error::NotZeroDimensional {
            at: AT,
            why: "the quotient module is infinite-dimensional".into(),
        });
    }
    let stair = staircase(s).expect("finite quotient has a staircase");
    let mut components = Vec::new();
    for pos in 0..s.rank() {
        if let Some(c) = cyclic_component(f, s, &stair, pos)? {
            let elims: Result<Vec<UniPoly>> =
                (0..s.nvars()).map(|l| eliminant(f, s, &stair, pos, l)).collect();
            components.push((c, elims?));
        }
    }

    let mut out = Vec::new();
    for e in 1..=dmax {
        let (big, lift): (ExtField, Box<dyn Fn(&FieldElem) -> FieldElem>) = if e == 1 {
            (f.clone(), Box::new(FieldElem::clone))
        } else {
            let minpoly = irreducible_of_degree(f, e as usize)?;
            let mut name = format!("y{e}");
            while f.tower().iter().any(|step| step.var == name) {
                name.push('y');
            }
            let big = f.make_extension(&name, &minpoly)?;
            let inner = big.clone();
            (big, Box::new(move |c: &FieldElem| inner.embed(c)))
        };

        let mut found: BTreeSet<Vec<FieldElem>> = BTreeSet::new();
        for (comp, elims) in &components {
            // Candidate coordinates are roots of the eliminants; the joint
            // eigenvalue test then keeps exactly the annihilator's zeros.
            let mut root_lists = Vec::with_capacity(elims.len());
            let mut empty = false;
            for g in elims {
                let g_big: UniPoly = g.iter().map(|c| lift(c)).collect();
                let roots = roots_in_field(&big, &g_big, FIELD_SCAN_CAP)?;
                if roots.is_empty() {
                    empty = true;
                    break;
                }
                root_lists.push(roots);
            }
            if empty {
                continue;
            }
            let n = root_lists.len();
            let mut idx = vec![0usize; n];
            loop {
                let point: Vec<FieldElem> =
                    idx.iter().enumerate().map(|(l, &k)| root_lists[l][k].clone()).collect();
                if is_joint_eigenvalue(&big, &lift, comp, &point)? {
                    found.insert(point);
                }
                let mut l = 0;
                loop {
                    if l == n {
                        break;
                    }
                    idx[l] += 1;
                    if idx[l] < root_lists[l].len() {
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

        'points: for point in found {
            if e > 1 {
                for d in 1..e {
                    if e % d != 0 {
                        continue;
                    }
                    let mut all_inside = true;
                    for c in &point {
                        if !big.in_subfield_of_top_degree(c, d as usize)? {
                            all_inside = false;
                            break;
                        }
                    }
                    if all_inside {
                        continue 'points;
                    }
                }
            }
            out.push((big.clone(), point));
        }
    }
    Ok(out)
}

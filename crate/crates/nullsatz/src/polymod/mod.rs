//! Polynomials in several variables and submodules of free modules over them.
//!
//! The scalars come from [`crate::field::ExtField`], the variables are
//! `x1..xn`, and a submodule of `E[x1..xn]^k` is described by generators.
//! Completion to a canonical reduced basis drives membership, quotient
//! dimension counting, and point enumeration for the rest of the crate.

mod mpoly;
pub(crate) mod parse;
mod submodule;
mod zerodim;

pub use mpoly::{MPoly, MultiIndex};
pub use parse::{parse_poly, parse_vector};
pub use submodule::{
    intersect_submodules, module_groebner, normal_form, ModVector, Submodule, DEGREE_BUDGET,
};
pub use zerodim::{enumerate_points, is_zero_dimensional, standard_pairs};

use std::cmp::Ordering;

/// How the position of a component weighs against the monomial when two
/// module terms are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionRule {
    /// Position first, monomial as tie-break ("position over term").
    PositionOverTerm,
    /// Monomial first, position as tie-break ("term over position").
    TermOverPosition,
}

/// Total order on monomials in a fixed number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermRule {
    /// Graded reverse lexicographic: total degree first, then the last
    /// variable with a differing exponent decides, smaller exponent winning.
    DegRevLex,
    /// Lexicographic with `x1 > x2 > ...`.
    Lex,
}

/// A module term order: a position rule combined with a monomial rule.
/// Positions compare ascending, so the highest component index leads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialOrder {
    pub position: PositionRule,
    pub term: TermRule,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder { position: PositionRule::PositionOverTerm, term: TermRule::DegRevLex }
    }
}

/// Compare two bare monomials under a term rule.
pub fn cmp_monomials(rule: TermRule, a: &[u32], b: &[u32]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    match rule {
        TermRule::DegRevLex => {
            let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
            let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
            match da.cmp(&db) {
                Ordering::Equal => {
                    for l in (0..a.len()).rev() {
                        if a[l] != b[l] {
                            return if a[l] < b[l] { Ordering::Greater } else { Ordering::Less };
                        }
                    }
                    Ordering::Equal
                }
                other => other,
            }
        }
        TermRule::Lex => {
            for l in 0..a.len() {
                if a[l] != b[l] {
                    return a[l].cmp(&b[l]);
                }
            }
            Ordering::Equal
        }
    }
}

/// Compare two module terms `(position, monomial)` under a full order.
pub fn cmp_terms(order: MonomialOrder, a: (usize, &[u32]), b: (usize, &[u32])) -> Ordering {
    match order.position {
        PositionRule::PositionOverTerm => {
            a.0.cmp(&b.0).then_with(|| cmp_monomials(order.term, a.1, b.1))
        }
        PositionRule::TermOverPosition => {
            cmp_monomials(order.term, a.1, b.1).then_with(|| a.0.cmp(&b.0))
        }
    }
}

/// Whether monomial `a` divides monomial `b` componentwise.
pub fn monomial_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&ea, &eb)| ea <= eb)
}

/// Componentwise least common multiple of two monomials.
pub fn monomial_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&ea, &eb)| ea.max(eb)).collect()
}

/// Componentwise quotient; the divisor must divide.
pub fn monomial_quot(b: &[u32], a: &[u32]) -> Vec<u32> {
    debug_assert!(monomial_divides(a, b));
    b.iter().zip(a).map(|(&eb, &ea)| eb - ea).collect()
}

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GSetAction};
use crate::poly::IntPolynomial;
use crate::poset::RankedPoset;

use super::context::DowlingContext;
use super::element::{DowlingElement, Slot};
use super::order::{enumerate_poset, leq_unchecked};

/// One factor of the lower interval `[0̂, e]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalFactor {
    /// The partition lattice of a block of the given size.
    Partition { size: usize },
    /// The Dowling lattice `D_size(G_o)` of an orbit's stabilizer.
    Dowling {
        orbit: usize,
        stabilizer: Vec<usize>,
        size: usize,
    },
    /// `DD_size(G_o)`: like `Dowling` but the zero block may not be a
    /// singleton. Arises for orbits excluded from the singleton set.
    DowlingNoSingletonZero {
        orbit: usize,
        stabilizer: Vec<usize>,
        size: usize,
    },
}

impl IntervalFactor {
    pub fn rank(&self) -> usize {
        match *self {
            IntervalFactor::Partition { size } => size - 1,
            IntervalFactor::Dowling { size, .. }
            | IntervalFactor::DowlingNoSingletonZero { size, .. } => size,
        }
    }

    /// Closed-form characteristic polynomial in `t`, when one is known.
    pub fn char_poly(&self) -> Option<IntPolynomial> {
        match self {
            IntervalFactor::Partition { size } => {
                let fs: Vec<_> = (1..*size as i64)
                    .map(|i| IntPolynomial::linear_factor(i, "t"))
                    .collect();
                Some(IntPolynomial::product(&fs, "t"))
            }
            IntervalFactor::Dowling {
                stabilizer, size, ..
            } => {
                let h = stabilizer.len() as i64;
                let fs: Vec<_> = (0..*size as i64)
                    .map(|i| IntPolynomial::linear_factor(1 + h * i, "t"))
                    .collect();
                Some(IntPolynomial::product(&fs, "t"))
            }
            IntervalFactor::DowlingNoSingletonZero { .. } => None,
        }
    }

    /// Builds the factor as a poset in its own right.
    ///
    /// `group` is the ambient group, needed to turn a stabilizer into a group.
    pub fn build(&self, group: &FiniteGroup, cap: usize) -> Result<RankedPoset<DowlingElement>> {
        let ctx = self.context(group)?.with_cap(cap);
        enumerate_poset(&ctx)
    }

    /// The context whose enumeration is this factor.
    pub fn context(&self, group: &FiniteGroup) -> Result<DowlingContext> {
        match self {
            IntervalFactor::Partition { size } => {
                DowlingContext::new(*size, GSetAction::empty(FiniteGroup::trivial()))
            }
            IntervalFactor::Dowling {
                stabilizer, size, ..
            } => {
                let h = group.subgroup(stabilizer, "G_o")?;
                DowlingContext::new(*size, GSetAction::trivial(h, vec!["0".into()]))
            }
            IntervalFactor::DowlingNoSingletonZero {
                stabilizer, size, ..
            } => {
                let h = group.subgroup(stabilizer, "G_o")?;
                DowlingContext::new(*size, GSetAction::trivial(h, vec!["0".into()]))?
                    .with_allowed_singleton_orbits([])
            }
        }
    }

    /// Characteristic polynomial of the factor; brute force when no closed
    /// form exists.
    pub fn char_poly_or_brute(&self, group: &FiniteGroup, cap: usize) -> Result<IntPolynomial> {
        match self.char_poly() {
            Some(p) => Ok(p),
            None => self.build(group, cap)?.char_poly_bruteforce(self.rank()),
        }
    }
}

impl fmt::Display for IntervalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalFactor::Partition { size } => write!(f, "Q_{size}"),
            IntervalFactor::Dowling {
                stabilizer, size, ..
            } => write!(f, "D_{size}(|G_o|={})", stabilizer.len()),
            IntervalFactor::DowlingNoSingletonZero {
                stabilizer, size, ..
            } => write!(f, "DD_{size}(|G_o|={})", stabilizer.len()),
        }
    }
}

/// Factors of `[0̂, e]`: one partition lattice per block, then one Dowling
/// lattice per orbit meeting the zero block, in orbit order.
pub fn interval_factors(ctx: &DowlingContext, e: &DowlingElement) -> Vec<IntervalFactor> {
    let od = ctx.orbit_data();
    let mut out: Vec<IntervalFactor> = e
        .blocks()
        .iter()
        .map(|b| IntervalFactor::Partition { size: b.len() })
        .collect();
    for (orbit, &m) in ctx.fiber_sizes(e).iter().enumerate() {
        if m == 0 {
            continue;
        }
        let stabilizer = od.stabilizers[orbit].clone();
        out.push(if ctx.allows_singleton(orbit) {
            IntervalFactor::Dowling {
                orbit,
                stabilizer,
                size: m,
            }
        } else {
            IntervalFactor::DowlingNoSingletonZero {
                orbit,
                stabilizer,
                size: m,
            }
        });
    }
    out
}

/// Product of the factors' characteristic polynomials.
pub fn interval_char_poly(ctx: &DowlingContext, e: &DowlingElement) -> Result<IntPolynomial> {
    let polys = interval_factors(ctx, e)
        .iter()
        .map(|f| f.char_poly_or_brute(ctx.group(), ctx.cap()))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::product(&polys, "t"))
}

/// Image of `b` under the isomorphism from the up-set of `a` onto
/// `D_ℓ(G, S)`, where ℓ is the number of blocks of `a`.
///
/// Blocks of `a` are numbered in canonical order and represented by their
/// normalized colorings. A block `C` of `b` absorbing blocks `A_i` becomes a
/// block on those indices with colors `a_i(x)⁻¹ c(x)`; a block `A_i` inside
/// the zero block of `b` gets the point `a_i(x)⁻¹ . z_b(x)`.
pub fn upper_label(
    ctx: &DowlingContext,
    a: &DowlingElement,
    b: &DowlingElement,
) -> Result<DowlingElement> {
    ctx.check(a)?;
    ctx.check(b)?;
    if !leq_unchecked(ctx, a, b) {
        return Err(Error::Order(format!(
            "{} is not below {}",
            ctx.render(a),
            ctx.render(b)
        )));
    }
    let group = ctx.group();
    let slots = b.slots();
    let mut blocks: Vec<(Vec<usize>, Vec<usize>)> =
        vec![(Vec::new(), Vec::new()); b.blocks().len()];
    let mut zero = Vec::new();
    for (i, blk) in a.blocks().iter().enumerate() {
        // a(min) is the identity, so the ratio is read off at the minimum
        match slots[blk.first()] {
            Slot::Block(k, c) => {
                blocks[k].0.push(i);
                blocks[k].1.push(c);
            }
            Slot::Zero(s) => zero.push((i, s)),
        }
    }
    blocks.retain(|b| !b.0.is_empty());
    DowlingElement::canonicalize(group, a.blocks().len(), blocks, zero)
}

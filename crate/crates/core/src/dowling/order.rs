use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::RankedPoset;

use super::context::DowlingContext;
use super::element::{Block, DowlingElement, Slot};

/// All elements covering `e` in D_n(G, S), sorted and deduplicated.
///
/// A merge joins blocks `A`, `B` with coloring `a ∪ b·g` for each `g`; a
/// coloring sends block `B` to the zero block with `z(i) = b(i).s` for each
/// point `s`. No subposet filter is applied.
pub fn covers_up(ctx: &DowlingContext, e: &DowlingElement) -> Vec<DowlingElement> {
    let group = ctx.group();
    let action = ctx.action();
    let blocks = e.blocks();
    let mut out = Vec::with_capacity(
        blocks.len() * action.n_points() + blocks.len() * blocks.len() / 2 * group.order(),
    );
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let (a, b) = (&blocks[i], &blocks[j]);
            for g in 0..group.order() {
                let mut pairs: Vec<(usize, usize)> = a
                    .members
                    .iter()
                    .copied()
                    .zip(a.colors.iter().copied())
                    .chain(
                        b.members
                            .iter()
                            .zip(&b.colors)
                            .map(|(&x, &c)| (x, group.mul(c, g))),
                    )
                    .collect();
                pairs.sort_unstable();
                let merged = Block {
                    members: pairs.iter().map(|p| p.0).collect(),
                    colors: pairs.iter().map(|p| p.1).collect(),
                };
                let mut new_blocks = Vec::with_capacity(blocks.len() - 1);
                for (k, blk) in blocks.iter().enumerate() {
                    if k == i {
                        new_blocks.push(merged.clone());
                    } else if k != j {
                        new_blocks.push(blk.clone());
                    }
                }
                out.push(DowlingElement::from_canonical_parts(
                    e.n(),
                    new_blocks,
                    e.zero().to_vec(),
                ));
            }
        }
    }
    for (k, blk) in blocks.iter().enumerate() {
        let rest: Vec<Block> = blocks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, b)| b.clone())
            .collect();
        for s in 0..action.n_points() {
            let mut zero = e.zero().to_vec();
            zero.extend(
                blk.members
                    .iter()
                    .zip(&blk.colors)
                    .map(|(&x, &c)| (x, action.act(c, s))),
            );
            zero.sort_unstable();
            out.push(DowlingElement::from_canonical_parts(
                e.n(),
                rest.clone(),
                zero,
            ));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The order of D_n(G, S): every block of `a` refines a block of `b` up to a
/// single group ratio, or is sent into `b`'s zero block by a single point, and
/// `a`'s zero coloring is the restriction of `b`'s.
pub fn leq(ctx: &DowlingContext, a: &DowlingElement, b: &DowlingElement) -> Result<bool> {
    if a.n() != b.n() || a.n() != ctx.n() {
        return Err(Error::Argument(format!(
            "mismatched ground sets: {} and {} (context {})",
            a.n(),
            b.n(),
            ctx.n()
        )));
    }
    Ok(leq_unchecked(ctx, a, b))
}

pub(crate) fn leq_unchecked(ctx: &DowlingContext, a: &DowlingElement, b: &DowlingElement) -> bool {
    if a.rank() > b.rank() {
        return false;
    }
    let group = ctx.group();
    let action = ctx.action();
    let slots = b.slots();
    for &(i, s) in a.zero() {
        if slots[i] != Slot::Zero(s) {
            return false;
        }
    }
    for blk in a.blocks() {
        let first = blk.members[0];
        match slots[first] {
            Slot::Block(k, c0) => {
                // ratio g with c = a·g, fixed by the minimum (a(min) = e)
                let ratio = c0;
                for (&i, &ca) in blk.members.iter().zip(&blk.colors).skip(1) {
                    match slots[i] {
                        Slot::Block(k2, c) if k2 == k && c == group.mul(ca, ratio) => {}
                        _ => return false,
                    }
                }
            }
            Slot::Zero(s0) => {
                // z_b(i) = a(i).s with s = z_b(min)
                for (&i, &ca) in blk.members.iter().zip(&blk.colors).skip(1) {
                    if slots[i] != Slot::Zero(action.act(ca, s0)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Enumerates the (sub)poset described by `ctx` breadth-first from the bottom.
///
/// Elements are ordered by `(rank, canonical form)`, so indices are
/// reproducible. Generated elements that fail [`DowlingContext::retains`] are
/// discarded; covers are the generated cover pairs between retained elements,
/// which are exactly the rank-adjacent comparabilities among them.
pub fn enumerate_poset(ctx: &DowlingContext) -> Result<RankedPoset<DowlingElement>> {
    let mut levels: Vec<Vec<DowlingElement>> = vec![vec![ctx.bottom()]];
    let mut level_edges: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut total = 1usize;
    for r in 0..ctx.n() {
        let current = &levels[r];
        let ups: Vec<Vec<DowlingElement>> = current
            .par_iter()
            .map(|x| {
                covers_up(ctx, x)
                    .into_iter()
                    .filter(|y| ctx.retains(y))
                    .collect()
            })
            .collect();
        let next: BTreeSet<&DowlingElement> = ups.iter().flatten().collect();
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > ctx.cap() {
            return Err(Error::Resource {
                cap: ctx.cap(),
                context: format!("enumerating rank {} (n = {})", r + 1, ctx.n()),
            });
        }
        let next: Vec<DowlingElement> = next.into_iter().cloned().collect();
        let index: HashMap<&DowlingElement, usize> =
            next.iter().enumerate().map(|(i, y)| (y, i)).collect();
        let edges = ups
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |y| (x, y)))
            .map(|(x, y)| (x, index[y]))
            .collect();
        level_edges.push(edges);
        levels.push(next);
    }
    let mut offsets = Vec::with_capacity(levels.len());
    let mut acc = 0;
    for l in &levels {
        offsets.push(acc);
        acc += l.len();
    }
    let covers = level_edges
        .iter()
        .enumerate()
        .flat_map(|(r, es)| {
            let (lo, hi) = (offsets[r], offsets[r + 1]);
            es.iter().map(move |&(x, y)| (lo + x, hi + y))
        })
        .collect();
    let rank = levels
        .iter()
        .enumerate()
        .flat_map(|(r, l)| std::iter::repeat_n(r, l.len()))
        .collect();
    let labels = levels.into_iter().flatten().collect();
    RankedPoset::new(labels, covers, rank)
}

/// Index of `e` in a poset produced by [`enumerate_poset`].
pub fn index_of(poset: &RankedPoset<DowlingElement>, e: &DowlingElement) -> Option<usize> {
    let level = poset.rank_level(e.rank());
    level
        .binary_search_by(|&x| poset.label(x).cmp(e))
        .ok()
        .map(|k| level[k])
}

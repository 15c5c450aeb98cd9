use crate::error::{Error, Result};
use crate::group::GSetAction;

use super::context::DowlingContext;
use super::element::DowlingElement;

/// The maps between S-Dowling posets induced by changing the inputs.
#[derive(Clone, Debug)]
pub enum Morphism {
    /// Pairs with an element over `k` further ground elements, shifted by `n`.
    DisjointUnion { other: DowlingElement },
    /// An injection of ground sets `0..n -> 0..target_n`; points outside the
    /// image become singleton blocks.
    Injection { target_n: usize, map: Vec<usize> },
    /// A G-equivariant map of sets `S -> T`, recoloring the zero block.
    SMap { target: GSetAction, map: Vec<usize> },
    /// A group homomorphism `G -> H`; `target` is an H-action on the same
    /// points that induces the source action.
    GroupHom { target: GSetAction, map: Vec<usize> },
}

/// Applies `morphism` to an element of the poset described by `ctx`.
pub fn apply_functorial(
    ctx: &DowlingContext,
    e: &DowlingElement,
    morphism: &Morphism,
) -> Result<DowlingElement> {
    ctx.check(e)?;
    let group = ctx.group();
    let n = ctx.n();
    match morphism {
        Morphism::DisjointUnion { other } => {
            ctx_for(ctx, other.n())?.check(other)?;
            let mut blocks = raw_blocks(e);
            blocks.extend(
                other
                    .blocks()
                    .iter()
                    .map(|b| (b.members.iter().map(|&i| i + n).collect(), b.colors.clone())),
            );
            let zero = e
                .zero()
                .iter()
                .copied()
                .chain(other.zero().iter().map(|&(i, s)| (i + n, s)))
                .collect();
            DowlingElement::canonicalize(group, n + other.n(), blocks, zero)
        }
        Morphism::Injection { target_n, map } => {
            if map.len() != n {
                return Err(Error::Morphism(format!(
                    "injection has {} entries, expected {n}",
                    map.len()
                )));
            }
            let mut hit = vec![false; *target_n];
            for &j in map {
                if j >= *target_n || std::mem::replace(&mut hit[j], true) {
                    return Err(Error::Morphism(
                        "map is not an injection into the target".into(),
                    ));
                }
            }
            let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = e
                .blocks()
                .iter()
                .map(|b| {
                    (
                        b.members.iter().map(|&i| map[i]).collect(),
                        b.colors.clone(),
                    )
                })
                .collect();
            blocks.extend(
                (0..*target_n)
                    .filter(|&j| !hit[j])
                    .map(|j| (vec![j], vec![group.identity()])),
            );
            let zero = e.zero().iter().map(|&(i, s)| (map[i], s)).collect();
            DowlingElement::canonicalize(group, *target_n, blocks, zero)
        }
        Morphism::SMap { target, map } => {
            check_equivariant(ctx.action(), target, map)?;
            let blocks = raw_blocks(e);
            let zero = e.zero().iter().map(|&(i, s)| (i, map[s])).collect();
            DowlingElement::canonicalize(group, n, blocks, zero)
        }
        Morphism::GroupHom { target, map } => {
            check_homomorphism(ctx.action(), target, map)?;
            let h = target.group();
            let blocks = e
                .blocks()
                .iter()
                .map(|b| {
                    (
                        b.members.clone(),
                        b.colors.iter().map(|&c| map[c]).collect(),
                    )
                })
                .collect();
            DowlingElement::canonicalize(h, n, blocks, e.zero().to_vec())
        }
    }
}

/// The context of the image poset of `morphism`.
pub fn target_context(ctx: &DowlingContext, morphism: &Morphism) -> Result<DowlingContext> {
    match morphism {
        Morphism::DisjointUnion { other } => ctx_for(ctx, ctx.n() + other.n()),
        Morphism::Injection { target_n, .. } => ctx_for(ctx, *target_n),
        Morphism::SMap { target, .. } | Morphism::GroupHom { target, .. } => {
            DowlingContext::new(ctx.n(), target.clone())
        }
    }
}

fn ctx_for(ctx: &DowlingContext, n: usize) -> Result<DowlingContext> {
    DowlingContext::new(n, ctx.action().clone())
}

fn raw_blocks(e: &DowlingElement) -> Vec<(Vec<usize>, Vec<usize>)> {
    e.blocks()
        .iter()
        .map(|b| (b.members.clone(), b.colors.clone()))
        .collect()
}

fn check_equivariant(source: &GSetAction, target: &GSetAction, map: &[usize]) -> Result<()> {
    if source.group() != target.group() {
        return Err(Error::Morphism("source and target groups differ".into()));
    }
    if map.len() != source.n_points() || map.iter().any(|&t| t >= target.n_points()) {
        return Err(Error::Morphism("S-map has the wrong shape".into()));
    }
    for g in 0..source.group().order() {
        for s in 0..source.n_points() {
            if map[source.act(g, s)] != target.act(g, map[s]) {
                return Err(Error::Morphism(format!(
                    "not equivariant at g = {}, s = {}",
                    source.group().label(g),
                    source.points()[s]
                )));
            }
        }
    }
    Ok(())
}

fn check_homomorphism(source: &GSetAction, target: &GSetAction, map: &[usize]) -> Result<()> {
    let (g, h) = (source.group(), target.group());
    if map.len() != g.order() || map.iter().any(|&x| x >= h.order()) {
        return Err(Error::Morphism("homomorphism has the wrong shape".into()));
    }
    if !g.is_homomorphism(h, map) {
        return Err(Error::Morphism("map is not a group homomorphism".into()));
    }
    if source.points() != target.points() {
        return Err(Error::Morphism(
            "source and target act on different points".into(),
        ));
    }
    for a in 0..g.order() {
        for s in 0..source.n_points() {
            if source.act(a, s) != target.act(map[a], s) {
                return Err(Error::Morphism(format!(
                    "the H-action does not induce the G-action at {}",
                    g.label(a)
                )));
            }
        }
    }
    Ok(())
}

//! The wreath product `G ≀ S_n` acting on `D_n(G, S)`, and its orbits.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::dowling::{index_of, DowlingContext, DowlingElement};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::poset::RankedPoset;

/// `(g_1, ..., g_n; σ)` with `sigma[j] = σ(j)`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub gs: Vec<usize>,
    pub sigma: Vec<usize>,
}

impl WreathElement {
    pub fn new(group: &FiniteGroup, gs: Vec<usize>, sigma: Vec<usize>) -> Result<Self> {
        let n = gs.len();
        if sigma.len() != n {
            return Err(Error::Argument("gs and sigma differ in length".into()));
        }
        let image: BTreeSet<usize> = sigma.iter().copied().collect();
        if image.len() != n || image.iter().any(|&j| j >= n) {
            return Err(Error::Argument("sigma is not a permutation".into()));
        }
        if gs.iter().any(|&g| g >= group.order()) {
            return Err(Error::Argument("group index out of range".into()));
        }
        Ok(WreathElement { gs, sigma })
    }

    pub fn identity(group: &FiniteGroup, n: usize) -> Self {
        WreathElement {
            gs: vec![group.identity(); n],
            sigma: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// Product with `self` applied last: `(g,σ)(h,τ) = (k, στ)` where
    /// `k_j = g_{τ(j)} h_j`.
    pub fn mul(&self, group: &FiniteGroup, other: &WreathElement) -> WreathElement {
        let gs = (0..self.n())
            .map(|j| group.mul(self.gs[other.sigma[j]], other.gs[j]))
            .collect();
        let sigma = other.sigma.iter().map(|&t| self.sigma[t]).collect();
        WreathElement { gs, sigma }
    }

    /// Each generator of `G` placed in each coordinate, plus the adjacent
    /// transpositions.
    pub fn generators(group: &FiniteGroup, n: usize) -> Vec<WreathElement> {
        let mut out = Vec::new();
        for a in group.generators() {
            for i in 0..n {
                let mut w = Self::identity(group, n);
                w.gs[i] = a;
                out.push(w);
            }
        }
        for i in 0..n.saturating_sub(1) {
            let mut w = Self::identity(group, n);
            w.sigma.swap(i, i + 1);
            out.push(w);
        }
        out
    }
}

/// Applies `w` by `b'(σ(j)) = g_j b(j)` on blocks and `z'(σ(j)) = g_j . z(j)`
/// on the zero block.
pub fn act(ctx: &DowlingContext, w: &WreathElement, e: &DowlingElement) -> DowlingElement {
    let group = ctx.group();
    let blocks = e
        .blocks()
        .iter()
        .map(|b| {
            b.members
                .iter()
                .zip(&b.colors)
                .map(|(&j, &c)| (w.sigma[j], group.mul(w.gs[j], c)))
                .unzip()
        })
        .collect();
    let zero = e
        .zero()
        .iter()
        .map(|&(j, s)| (w.sigma[j], ctx.action().act(w.gs[j], s)))
        .collect();
    DowlingElement::canonicalize(group, e.n(), blocks, zero).expect("wreath image is well formed")
}

/// `(λ_1, ..., λ_ℓ || λ_{o_1}, ...)`: block sizes in decreasing order and the
/// zero-block fiber size of every orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledPartition {
    pub unlabeled: Vec<usize>,
    pub labeled: Vec<usize>,
}

impl LabeledPartition {
    pub fn n(&self) -> usize {
        self.unlabeled.iter().sum::<usize>() + self.labeled.iter().sum::<usize>()
    }

    pub fn rank(&self) -> usize {
        self.n() - self.unlabeled.len()
    }

    /// Text form with orbit names, e.g. `(0 || 1_e, 1_w)`.
    pub fn render(&self, orbit_names: &[String]) -> String {
        let left = if self.unlabeled.is_empty() {
            "0".to_string()
        } else {
            self.unlabeled
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let parts: Vec<String> = self
            .labeled
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m > 0)
            .map(|(o, m)| {
                let name = orbit_names
                    .get(o)
                    .cloned()
                    .unwrap_or_else(|| format!("o{o}"));
                format!("{m}_{name}")
            })
            .collect();
        let right = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(", ")
        };
        format!("({left} || {right})")
    }
}

impl fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// The image of `e` under the orbit map.
pub fn orbit_label(ctx: &DowlingContext, e: &DowlingElement) -> LabeledPartition {
    let mut unlabeled: Vec<usize> = e.blocks().iter().map(|b| b.len()).collect();
    unlabeled.sort_unstable_by(|a, b| b.cmp(a));
    LabeledPartition {
        unlabeled,
        labeled: ctx.fiber_sizes(e),
    }
}

/// All labeled partitions of `n` over `k` orbits with no forbidden orbit
/// labelled exactly once, ordered by rank and then lexicographically.
pub fn labeled_partitions(n: usize, k: usize, forbidden: &[usize]) -> Vec<LabeledPartition> {
    fn compositions(
        total: usize,
        slots: usize,
        forbidden: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == slots {
            out.push(cur.clone());
            return;
        }
        let used: usize = cur.iter().sum();
        for m in 0..=total - used {
            if m == 1 && forbidden.contains(&cur.len()) {
                continue;
            }
            cur.push(m);
            compositions(total, slots, forbidden, cur, out);
            cur.pop();
        }
    }
    fn partitions(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=m.min(max)).rev() {
            cur.push(p);
            partitions(m - p, p, cur, out);
            cur.pop();
        }
    }
    let mut labeled = Vec::new();
    compositions(n, k, forbidden, &mut Vec::new(), &mut labeled);
    let mut out = Vec::new();
    for lab in labeled {
        let rest = n - lab.iter().sum::<usize>();
        let mut parts = Vec::new();
        partitions(rest, rest, &mut Vec::new(), &mut parts);
        for unlabeled in parts {
            out.push(LabeledPartition {
                unlabeled,
                labeled: lab.clone(),
            });
        }
    }
    out.sort_by(|a, b| (a.rank(), a).cmp(&(b.rank(), b)));
    out
}

/// Orbits of `G ≀ S_n` on an enumerated poset, found by closing under the
/// generators. Each orbit is sorted; orbits are ordered by their first index.
pub fn orbits_bruteforce(
    ctx: &DowlingContext,
    poset: &RankedPoset<DowlingElement>,
) -> Vec<Vec<usize>> {
    let gens = WreathElement::generators(ctx.group(), ctx.n());
    let mut parent: Vec<usize> = (0..poset.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in 0..poset.len() {
        for w in &gens {
            let y = act(ctx, w, poset.label(x));
            let y = index_of(poset, &y).expect("poset is closed under the wreath action");
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..poset.len() {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    groups.into_values().collect()
}

/// Fibers of [`orbit_label`] over an enumerated poset, keyed by label.
pub fn label_fibers(
    ctx: &DowlingContext,
    poset: &RankedPoset<DowlingElement>,
) -> BTreeMap<LabeledPartition, Vec<usize>> {
    let mut out: BTreeMap<LabeledPartition, Vec<usize>> = BTreeMap::new();
    for x in 0..poset.len() {
        out.entry(orbit_label(ctx, poset.label(x)))
            .or_default()
            .push(x);
    }
    out
}

/// The quotient poset on labeled partitions, ordered by the images of the
/// cover relations.
pub fn quotient(
    ctx: &DowlingContext,
    poset: &RankedPoset<DowlingElement>,
) -> Result<RankedPoset<LabeledPartition>> {
    let labels: Vec<LabeledPartition> =
        poset.labels().iter().map(|e| orbit_label(ctx, e)).collect();
    let mut distinct: Vec<LabeledPartition> = labels
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    distinct.sort_by(|a, b| (a.rank(), a).cmp(&(b.rank(), b)));
    let index: BTreeMap<&LabeledPartition, usize> =
        distinct.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let covers: BTreeSet<(usize, usize)> = poset
        .covers()
        .iter()
        .map(|&(a, b)| (index[&labels[a]], index[&labels[b]]))
        .collect();
    let rank = distinct.iter().map(LabeledPartition::rank).collect();
    RankedPoset::new(distinct.clone(), covers.into_iter().collect(), rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dowling::enumerate_poset;
    use crate::fixtures::{hexagonal, trivial_pm};

    fn z(d: usize) -> FiniteGroup {
        FiniteGroup::cyclic(d).unwrap()
    }

    #[test]
    fn coordinate_multiplication_recolors() {
        let ctx = DowlingContext::new(2, trivial_pm(z(2))).unwrap();
        let e = ctx.parse("[1_e 2_e || ∅]").unwrap();
        let w = WreathElement::new(ctx.group(), vec![1, 0], vec![0, 1]).unwrap();
        assert_eq!(ctx.render(&act(&ctx, &w, &e)), "[1_e 2_g || ∅]");
        let id = WreathElement::identity(ctx.group(), 2);
        assert_eq!(act(&ctx, &id, &e), e);
    }

    #[test]
    fn swap_relabels() {
        let ctx = DowlingContext::new(2, trivial_pm(z(2))).unwrap();
        let e = ctx.parse("[1_e || 2_-1]").unwrap();
        let w = WreathElement::new(ctx.group(), vec![0, 0], vec![1, 0]).unwrap();
        assert_eq!(ctx.render(&act(&ctx, &w, &e)), "[2_e || 1_-1]");
    }

    #[test]
    fn generator_count() {
        assert_eq!(WreathElement::generators(&z(2), 2).len(), 3);
        assert_eq!(WreathElement::generators(&z(1), 3).len(), 2);
    }

    #[test]
    fn labeled_partition_counts() {
        assert_eq!(labeled_partitions(2, 2, &[]).len(), 7);
        assert_eq!(labeled_partitions(2, 3, &[]).len(), 11);
        let one = labeled_partitions(1, 0, &[]);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "(1 || 0)");
        assert_eq!(labeled_partitions(2, 1, &[0]).len(), 3);
    }

    #[test]
    fn labels_of_hexagonal_quotient() {
        let ctx = DowlingContext::new(2, trivial_pm(z(2))).unwrap();
        let names: Vec<String> = (0..2).map(|o| ctx.orbit_name(o).to_string()).collect();
        let e = ctx.parse("[∅ || 1_1 2_-1]").unwrap();
        assert_eq!(orbit_label(&ctx, &e).render(&names), "(0 || 1_1, 1_-1)");
        let e = ctx.parse("[1_e 2_g || ∅]").unwrap();
        assert_eq!(orbit_label(&ctx, &e).render(&names), "(2 || 0)");
        assert_eq!(
            orbit_label(&ctx, &ctx.bottom()).render(&names),
            "(1, 1 || 0)"
        );
    }

    #[test]
    fn type_c_orbits() {
        let ctx = DowlingContext::new(2, trivial_pm(z(2))).unwrap();
        let p = enumerate_poset(&ctx).unwrap();
        let orbits = orbits_bruteforce(&ctx, &p);
        let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 2, 2, 2, 2]);
        let q = quotient(&ctx, &p).unwrap();
        assert_eq!(q.rank_sizes(), vec![1, 3, 3]);
    }

    #[test]
    fn hexagonal_orbit_count() {
        let ctx = DowlingContext::new(2, hexagonal()).unwrap();
        let p = enumerate_poset(&ctx).unwrap();
        assert_eq!(orbits_bruteforce(&ctx, &p).len(), 11);
    }
}

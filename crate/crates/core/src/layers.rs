//! The arrangement of an orbit configuration space, with `X` modelled as a
//! finite G-set such as `X(F_q)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::dowling::{enumerate_poset, leq, DowlingContext, DowlingElement};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GSetAction};
use crate::invariants::{motive_eval, motive_from_poset};

/// Largest number of tuples any brute-force routine here will visit.
pub const MAX_TUPLES: u64 = 1 << 24;

/// A finite G-set standing in for the rational points of `X`.
#[derive(Clone, Debug)]
pub struct FiniteGSpace {
    action: GSetAction,
    singular: Vec<usize>,
    singular_action: GSetAction,
}

impl FiniteGSpace {
    pub fn new(action: GSetAction) -> Result<Self> {
        let g = action.group();
        let singular: Vec<usize> = (0..action.n_points())
            .filter(|&x| (0..g.order()).any(|h| h != g.identity() && action.act(h, x) == x))
            .collect();
        let singular_action = action.restrict(&singular)?;
        Ok(FiniteGSpace {
            action,
            singular,
            singular_action,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::new(GSetAction::from_json(text)?)
    }

    pub fn action(&self) -> &GSetAction {
        &self.action
    }

    pub fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    pub fn n_points(&self) -> usize {
        self.action.n_points()
    }

    /// Points with a nontrivial stabilizer, in increasing order.
    pub fn singular(&self) -> &[usize] {
        &self.singular
    }

    /// The G-set `S` of singular points; its point `k` is `singular()[k]`.
    pub fn singular_action(&self) -> &GSetAction {
        &self.singular_action
    }

    /// The context for `D_n(G, S)` with `S` the singular set.
    pub fn context(&self, n: usize) -> Result<DowlingContext> {
        DowlingContext::new(n, self.singular_action.clone())
    }

    /// True when every point stabilizer is cyclic.
    pub fn stabilizers_cyclic(&self) -> bool {
        (0..self.n_points()).all(|x| self.group().is_cyclic_subgroup(&self.action.stabilizer(x)))
    }

    fn tuple_count(&self, n: usize) -> Result<u64> {
        let total = (self.n_points() as u64).checked_pow(n as u32);
        match total {
            Some(t) if t <= MAX_TUPLES => Ok(t),
            _ => Err(Error::Resource {
                cap: MAX_TUPLES as usize,
                context: format!("enumerating {}^{n} tuples", self.n_points()),
            }),
        }
    }

    fn decode(&self, mut code: u64, n: usize) -> Vec<usize> {
        let q = self.n_points() as u64;
        (0..n)
            .map(|_| {
                let x = (code % q) as usize;
                code /= q;
                x
            })
            .collect()
    }

    fn encode(&self, tuple: &[usize]) -> u64 {
        let q = self.n_points() as u64;
        tuple.iter().rev().fold(0, |acc, &x| acc * q + x as u64)
    }
}

/// A single member of the arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Hyperplane {
    /// `g . x_i = x_j`
    Diagonal { i: usize, j: usize, g: usize },
    /// `x_i = s` with `s` a point of the space (not an index into `S`)
    Point { i: usize, s: usize },
}

impl Hyperplane {
    pub fn contains(&self, space: &FiniteGSpace, x: &[usize]) -> bool {
        match *self {
            Hyperplane::Diagonal { i, j, g } => space.action.act(g, x[i]) == x[j],
            Hyperplane::Point { i, s } => x[i] == s,
        }
    }
}

/// Equations cutting out the layer of an element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LayerEquations {
    /// `(i, j, g)`: `g . x_i = x_j`, for every ordered pair in a block.
    pub diagonal_eqs: Vec<(usize, usize, usize)>,
    /// `(i, s)`: `x_i = s`, with `s` an index into the singular set.
    pub point_eqs: Vec<(usize, usize)>,
}

impl LayerEquations {
    pub fn hyperplanes(&self, space: &FiniteGSpace) -> Vec<Hyperplane> {
        self.diagonal_eqs
            .iter()
            .map(|&(i, j, g)| Hyperplane::Diagonal { i, j, g })
            .chain(self.point_eqs.iter().map(|&(i, s)| Hyperplane::Point {
                i,
                s: space.singular[s],
            }))
            .collect()
    }
}

/// Every `H_ij(g)` with `g b(i) = b(j)` inside a block, in both directions,
/// and `H_i^s` for each colored zero-block point.
pub fn defining_equations(group: &FiniteGroup, e: &DowlingElement) -> LayerEquations {
    let mut diagonal_eqs = Vec::new();
    for b in e.blocks() {
        for (&i, &bi) in b.members.iter().zip(&b.colors) {
            for (&j, &bj) in b.members.iter().zip(&b.colors) {
                if i != j {
                    diagonal_eqs.push((i, j, group.mul(bj, group.inv(bi))));
                }
            }
        }
    }
    LayerEquations {
        diagonal_eqs,
        point_eqs: e.zero().to_vec(),
    }
}

/// Sorted codes of all tuples on a set of hyperplanes.
fn solutions(space: &FiniteGSpace, n: usize, hs: &[Hyperplane]) -> Result<Vec<u64>> {
    let total = space.tuple_count(n)?;
    let out: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&c| {
            let x = space.decode(c, n);
            hs.iter().all(|h| h.contains(space, &x))
        })
        .collect();
    Ok(out)
}

/// All tuples on the layer of `e`, by brute force over `X^n`.
pub fn layer_points(space: &FiniteGSpace, n: usize, e: &DowlingElement) -> Result<Vec<Vec<usize>>> {
    Ok(layer_codes(space, n, e)?
        .into_iter()
        .map(|c| space.decode(c, n))
        .collect())
}

fn layer_codes(space: &FiniteGSpace, n: usize, e: &DowlingElement) -> Result<Vec<u64>> {
    if e.n() != n {
        return Err(Error::Argument(format!(
            "element has n = {}, expected {n}",
            e.n()
        )));
    }
    let eqs = defining_equations(space.group(), e);
    solutions(space, n, &eqs.hyperplanes(space))
}

/// Tuples in `(X - T)^n` with pairwise disjoint G-orbits.
pub fn orbit_config_count(space: &FiniteGSpace, n: usize, removed: &[usize]) -> Result<u64> {
    if n == 0 {
        return Err(Error::Argument("n must be at least 1".into()));
    }
    if !space.action.is_invariant(removed) {
        return Err(Error::Argument("removed set is not G-invariant".into()));
    }
    space.tuple_count(n)?;
    let od = space.action.orbit_data();
    let gone: BTreeSet<usize> = removed.iter().copied().collect();
    let kept: Vec<usize> = (0..space.n_points())
        .filter(|x| !gone.contains(x))
        .collect();
    fn extend(kept: &[usize], orbit_of: &[usize], used: &mut Vec<usize>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut count = 0;
        for &x in kept {
            let o = orbit_of[x];
            if !used.contains(&o) {
                used.push(o);
                count += extend(kept, orbit_of, used, left - 1);
                used.pop();
            }
        }
        count
    }
    Ok(kept
        .par_iter()
        .map(|&x| {
            let mut used = vec![od.orbit_of[x]];
            extend(&kept, &od.orbit_of, &mut used, n - 1)
        })
        .sum())
}

/// The largest element whose layer contains `p`.
pub fn max_layer_at(space: &FiniteGSpace, p: &[usize]) -> Result<DowlingElement> {
    let n = p.len();
    if let Some(&x) = p.iter().find(|&&x| x >= space.n_points()) {
        return Err(Error::Argument(format!("point index {x} out of range")));
    }
    let group = space.group();
    let od = space.action.orbit_data();
    let mut zero = Vec::new();
    let mut by_orbit: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &x) in p.iter().enumerate() {
        match space.singular.binary_search(&x) {
            Ok(k) => zero.push((i, k)),
            Err(_) => by_orbit.entry(od.orbit_of[x]).or_default().push(i),
        }
    }
    let blocks = by_orbit
        .into_values()
        .map(|members| {
            let base = p[members[0]];
            let colors = members
                .iter()
                .map(|&j| {
                    (0..group.order())
                        .find(|&g| space.action.act(g, base) == p[j])
                        .expect("same orbit")
                })
                .collect();
            (members, colors)
        })
        .collect();
    DowlingElement::canonicalize(group, n, blocks, zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum IncidenceStatus {
    /// Reverse inclusion of point sets equals the poset order.
    Confirmed,
    /// Some distinct elements have equal point sets; nothing can be concluded.
    Inconclusive { collisions: usize },
    /// Point-set inclusion and the order disagree on these pairs.
    Failed { mismatches: Vec<(String, String)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceReport {
    pub n: usize,
    pub points: usize,
    pub elements: usize,
    pub pairs_checked: usize,
    pub status: IncidenceStatus,
}

/// Compares the inclusion order of layers with the order of `D_n(G, S)`.
pub fn verify_incidence(space: &FiniteGSpace, n: usize) -> Result<IncidenceReport> {
    let ctx = space.context(n)?;
    let poset = enumerate_poset(&ctx)?;
    let sets: Vec<Vec<u64>> = poset
        .labels()
        .iter()
        .map(|e| layer_codes(space, n, e))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<&Vec<u64>> = sets.iter().collect();
    let collisions = sets.len() - distinct.len();
    let mut report = IncidenceReport {
        n,
        points: space.n_points(),
        elements: poset.len(),
        pairs_checked: 0,
        status: IncidenceStatus::Confirmed,
    };
    if collisions > 0 {
        report.status = IncidenceStatus::Inconclusive { collisions };
        return Ok(report);
    }
    let subset = |a: &[u64], b: &[u64]| a.iter().all(|x| b.binary_search(x).is_ok());
    let mut mismatches = Vec::new();
    for x in 0..poset.len() {
        for y in 0..poset.len() {
            let order = leq(&ctx, poset.label(x), poset.label(y))?;
            if order != subset(&sets[y], &sets[x]) {
                mismatches.push((ctx.render(poset.label(x)), ctx.render(poset.label(y))));
            }
        }
    }
    report.pairs_checked = poset.len() * poset.len();
    if !mismatches.is_empty() {
        report.status = IncidenceStatus::Failed { mismatches };
    }
    Ok(report)
}

/// Field sizes tried in turn by [`verify_incidence_escalating`].
pub const INCIDENCE_PRIMES: &[usize] = &[5, 7, 11, 13, 17, 19, 23, 29, 31];

/// Runs [`verify_incidence`] on `build(q)` for increasing `q` until the
/// point sets stop colliding. Sizes that `build` rejects are skipped; if every
/// size collides the last inconclusive report is returned.
pub fn verify_incidence_escalating(
    n: usize,
    primes: &[usize],
    build: impl Fn(usize) -> Result<FiniteGSpace>,
) -> Result<(usize, IncidenceReport)> {
    let mut last = None;
    for &q in primes {
        let Ok(space) = build(q) else { continue };
        let report = verify_incidence(&space, n)?;
        if !matches!(report.status, IncidenceStatus::Inconclusive { .. }) {
            return Ok((q, report));
        }
        last = Some((q, report));
    }
    last.ok_or_else(|| Error::Argument("no field size in the list builds a space".into()))
}

/// Checks `H_i^s ∩ H_i^t = ∅` for `s ≠ t` and
/// `H_ij(g) ∩ H_jk(h) ⊆ H_ik(hg)` over all indices and group elements.
pub fn check_intersection_rules(space: &FiniteGSpace, n: usize) -> Result<bool> {
    let g = space.group();
    for i in 0..n {
        for (a, &s) in space.singular.iter().enumerate() {
            for &t in &space.singular[a + 1..] {
                let hs = [Hyperplane::Point { i, s }, Hyperplane::Point { i, s: t }];
                if !solutions(space, n, &hs)?.is_empty() {
                    return Ok(false);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        let both = solutions(
                            space,
                            n,
                            &[
                                Hyperplane::Diagonal { i, j, g: a },
                                Hyperplane::Diagonal { i: j, j: k, g: b },
                            ],
                        )?;
                        let target = Hyperplane::Diagonal {
                            i,
                            j: k,
                            g: g.mul(b, a),
                        };
                        if !both
                            .iter()
                            .all(|&c| target.contains(space, &space.decode(c, n)))
                        {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The poset of layers after removing the invariant set `T`: `D(G, T ∪ S)`
/// with singleton zero fibers allowed only over orbits meeting `T`.
pub fn removal_context(
    space: &FiniteGSpace,
    n: usize,
    removed: &[usize],
) -> Result<DowlingContext> {
    if !space.action.is_invariant(removed) {
        return Err(Error::Argument("removed set is not G-invariant".into()));
    }
    let union: BTreeSet<usize> = removed.iter().chain(&space.singular).copied().collect();
    let union: Vec<usize> = union.into_iter().collect();
    let action = space.action.restrict(&union)?;
    let gone: BTreeSet<usize> = removed.iter().copied().collect();
    let allowed: Vec<usize> = union
        .iter()
        .enumerate()
        .filter(|(_, x)| gone.contains(x))
        .map(|(k, _)| k)
        .collect();
    let ctx = DowlingContext::new(n, action)?;
    let orbits: Vec<usize> = allowed
        .iter()
        .map(|&k| ctx.orbit_data().orbit_of[k])
        .collect();
    ctx.with_allowed_singleton_orbits(orbits)
}

/// Predicted size of the orbit configuration space of `X - T`: the motive at
/// `|X|`, from the product formula when it applies and otherwise from the
/// Möbius function of the enumerated subposet.
pub fn predicted_count(space: &FiniteGSpace, n: usize, removed: &[usize]) -> Result<BigInt> {
    let ctx = removal_context(space, n, removed)?;
    let x = BigInt::from(space.n_points());
    if ctx.is_filtered() {
        let p = enumerate_poset(&ctx)?;
        Ok(motive_from_poset(&p, n)?.eval(&x))
    } else {
        Ok(motive_eval(
            &x,
            n,
            space.group().order(),
            ctx.action().n_points(),
        ))
    }
}

/// Encodes a tuple the way the internal point sets do; exposed for tests.
pub fn tuple_code(space: &FiniteGSpace, tuple: &[usize]) -> u64 {
    space.encode(tuple)
}

fn check_prime(q: usize) -> Result<()> {
    if q < 2
        || (2..q)
            .take_while(|d| d * d <= q)
            .any(|d| q.is_multiple_of(d))
    {
        return Err(Error::Argument(format!("q = {q} must be prime")));
    }
    Ok(())
}

/// Smallest generator of the multiplicative group of `F_q`, `q` prime.
pub fn primitive_root(q: usize) -> Result<usize> {
    check_prime(q)?;
    if q == 2 {
        return Ok(1);
    }
    (2..q)
        .find(|&r| {
            let mut x = 1;
            (1..q - 1).all(|_| {
                x = x * r % q;
                x != 1
            })
        })
        .ok_or_else(|| Error::Argument(format!("no primitive root mod {q}")))
}

fn residue_label(x: usize, q: usize) -> String {
    if x == q - 1 && q > 2 {
        "-1".to_string()
    } else {
        x.to_string()
    }
}

/// The `d`-th roots of unity `μ_d ⊂ F_q^×` as powers of one generator.
fn roots_of_unity(q: usize, d: usize) -> Result<usize> {
    if d == 0 || !(q - 1).is_multiple_of(d) {
        return Err(Error::Argument(format!(
            "d = {d} must divide q - 1 = {}",
            q - 1
        )));
    }
    let r = primitive_root(q)?;
    Ok((0..(q - 1) / d).fold(1, |acc, _| acc * r % q))
}

fn scaling(group: FiniteGroup, points: Vec<usize>, omega: usize, q: usize) -> Result<GSetAction> {
    let pos: BTreeMap<usize, usize> = points.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut rows = Vec::new();
    let mut w = 1;
    for _ in 0..group.order() {
        rows.push(points.iter().map(|&x| pos[&(w * x % q)]).collect());
        w = w * omega % q;
    }
    let labels = points.iter().map(|&x| residue_label(x, q)).collect();
    GSetAction::new(group, labels, rows)
}

/// `F_q` with `μ_d` acting by multiplication; the singular set is `{0}`.
pub fn affine_scaling(q: usize, d: usize) -> Result<FiniteGSpace> {
    let omega = roots_of_unity(q, d)?;
    let g = FiniteGroup::cyclic(d)?;
    FiniteGSpace::new(scaling(g, (0..q).collect(), omega, q)?)
}

/// `F_q^×` with `Z_2` acting by inversion; the singular set is `{1, -1}`.
pub fn multiplicative_inversion(q: usize) -> Result<FiniteGSpace> {
    check_prime(q)?;
    let g = FiniteGroup::cyclic(2)?;
    let points: Vec<usize> = (1..q).collect();
    let inv = |x: usize| (1..q).find(|&y| x * y % q == 1).expect("field");
    let pos: BTreeMap<usize, usize> = points.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let rows = vec![
        (0..points.len()).collect(),
        points.iter().map(|&x| pos[&inv(x)]).collect(),
    ];
    let labels = points.iter().map(|&x| residue_label(x, q)).collect();
    FiniteGSpace::new(GSetAction::new(g, labels, rows)?)
}

/// `F_q^×` with `μ_d` acting by multiplication: a free action, `S = ∅`.
pub fn multiplicative_translation(q: usize, d: usize) -> Result<FiniteGSpace> {
    let omega = roots_of_unity(q, d)?;
    let g = FiniteGroup::cyclic(d)?;
    FiniteGSpace::new(scaling(g, (1..q).collect(), omega, q)?)
}

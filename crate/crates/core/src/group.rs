//! Finite groups given by multiplication tables, and finite G-sets.
//!
//! Elements and points are addressed by index. Every table is checked when a
//! value is constructed, so the accessors below never fail.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group stored as a full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a table where `table[a][b]` is the index of `a * b`.
    ///
    /// The identity is located from the table. Associativity, inverses and
    /// label uniqueness are checked exhaustively.
    pub fn from_table(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let order = elements.len();
        if order == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let unique: BTreeSet<&String> = elements.iter().collect();
        if unique.len() != order {
            return Err(Error::NotAGroup("element labels are not unique".into()));
        }
        if table.len() != order || table.iter().any(|row| row.len() != order) {
            return Err(Error::NotAGroup(format!("table must be {order}x{order}")));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(&bad) = flat.iter().find(|&&x| x >= order) {
            return Err(Error::NotAGroup(format!("table entry {bad} out of range")));
        }
        let at = |a: usize, b: usize| flat[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails on ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| {
                    Error::NotAGroup(format!("{} has no two-sided inverse", elements[a]))
                })?;
            inverse.push(inv);
        }
        Ok(FiniteGroup {
            name: name.into(),
            elements,
            table: flat,
            identity,
            inverse,
        })
    }

    /// The cyclic group of order `d`. Element `k` is `g^k`, labelled `e`, `g`,
    /// `g^2`, ...
    pub fn cyclic(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let elements = (0..d)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                k => format!("g^{k}"),
            })
            .collect();
        let table = (0..d)
            .map(|a| (0..d).map(|b| (a + b) % d).collect())
            .collect();
        Self::from_table(format!("Z{d}"), elements, table)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1 is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|x| x == label)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Closure of `gens` under multiplication, sorted.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// A greedy generating set: scan elements in index order, keep each one not
    /// already in the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in 0..self.order() {
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated_by(&gens);
            }
        }
        gens
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        !set.is_empty()
            && set.iter().all(|&a| a < self.order())
            && set.contains(&self.identity)
            && set.iter().all(|&a| {
                set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
            })
    }

    /// Whether the subgroup `subset` is cyclic.
    pub fn is_cyclic_subgroup(&self, subset: &[usize]) -> bool {
        self.is_subgroup(subset)
            && subset
                .iter()
                .any(|&a| self.element_order(a) == subset.len())
    }

    /// Converts a subgroup given as an element set into a standalone group.
    pub fn subgroup(&self, subset: &[usize], name: impl Into<String>) -> Result<FiniteGroup> {
        if !self.is_subgroup(subset) {
            return Err(Error::NotAGroup(format!(
                "{subset:?} is not a subgroup of {}",
                self.name
            )));
        }
        let mut members: Vec<usize> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        let pos = |x: usize| members.binary_search(&x).expect("closed under product");
        let elements = members.iter().map(|&a| self.elements[a].clone()).collect();
        let table = members
            .iter()
            .map(|&a| members.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        FiniteGroup::from_table(name, elements, table)
    }

    /// Exhaustive check that `map` (indexed by elements of `self`) is a
    /// homomorphism into `target`.
    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order()
            && map.iter().all(|&x| x < target.order())
            && (0..self.order()).all(|a| {
                (0..self.order()).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }

    pub fn to_spec(&self) -> GroupSpec {
        let n = self.order();
        GroupSpec {
            name: Some(self.name.clone()),
            elements: self.elements.clone(),
            table: (0..n)
                .map(|a| (0..n).map(|b| self.mul(a, b)).collect())
                .collect(),
        }
    }
}

/// A left action of a [`FiniteGroup`] on a finite set of labelled points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSetAction {
    group: FiniteGroup,
    points: Vec<String>,
    act: Vec<usize>,
}

impl GSetAction {
    /// `act[g][s]` is the index of `g.s`. Checks the identity and compatibility
    /// axioms exhaustively.
    pub fn new(group: FiniteGroup, points: Vec<String>, act: Vec<Vec<usize>>) -> Result<Self> {
        let np = points.len();
        let unique: BTreeSet<&String> = points.iter().collect();
        if unique.len() != np {
            return Err(Error::NotAnAction("point labels are not unique".into()));
        }
        if act.len() != group.order() || act.iter().any(|row| row.len() != np) {
            return Err(Error::NotAnAction(format!(
                "action table must be {}x{np}",
                group.order()
            )));
        }
        let flat: Vec<usize> = act.into_iter().flatten().collect();
        if flat.iter().any(|&s| s >= np) {
            return Err(Error::NotAnAction("action table entry out of range".into()));
        }
        let action = GSetAction {
            group,
            points,
            act: flat,
        };
        let g = &action.group;
        for s in 0..np {
            if action.act(g.identity(), s) != s {
                return Err(Error::NotAnAction(format!(
                    "identity moves {}",
                    action.points[s]
                )));
            }
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                for s in 0..np {
                    if action.act(a, action.act(b, s)) != action.act(g.mul(a, b), s) {
                        return Err(Error::NotAnAction(format!(
                            "{}.({}.{}) != ({}{}).{}",
                            g.label(a),
                            g.label(b),
                            action.points[s],
                            g.label(a),
                            g.label(b),
                            action.points[s]
                        )));
                    }
                }
            }
        }
        Ok(action)
    }

    pub fn trivial(group: FiniteGroup, points: Vec<String>) -> Self {
        let act = vec![(0..points.len()).collect(); group.order()];
        Self::new(group, points, act).expect("trivial action is valid")
    }

    /// The action of a group built by [`FiniteGroup::cyclic`] where the
    /// generator acts by `perm` (so `g^k` acts by `perm^k`).
    pub fn cyclic_by_permutation(
        group: FiniteGroup,
        points: Vec<String>,
        perm: &[usize],
    ) -> Result<Self> {
        if perm.len() != points.len() {
            return Err(Error::NotAnAction("permutation length mismatch".into()));
        }
        let d = group.order();
        let mut rows = Vec::with_capacity(d);
        let mut cur: Vec<usize> = (0..points.len()).collect();
        for _ in 0..d {
            rows.push(cur.clone());
            cur = cur
                .iter()
                .map(|&s| perm.get(s).copied().unwrap_or(usize::MAX))
                .collect();
        }
        Self::new(group, points, rows)
    }

    /// The left regular action of `group` on itself.
    pub fn regular(group: FiniteGroup) -> Self {
        let n = group.order();
        let act = (0..n)
            .map(|a| (0..n).map(|b| group.mul(a, b)).collect())
            .collect();
        let points = group.elements().to_vec();
        Self::new(group, points, act).expect("regular action is valid")
    }

    /// The action with no points.
    pub fn empty(group: FiniteGroup) -> Self {
        let act = vec![Vec::new(); group.order()];
        Self::new(group, Vec::new(), act).expect("empty action is valid")
    }

    /// Disjoint union of two actions of the same group.
    pub fn disjoint_union(&self, other: &GSetAction) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::Argument("actions of different groups".into()));
        }
        let off = self.points.len();
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        let act = (0..self.group.order())
            .map(|g| {
                (0..off)
                    .map(|s| self.act(g, s))
                    .chain((0..other.n_points()).map(|s| other.act(g, s) + off))
                    .collect()
            })
            .collect();
        Self::new(self.group.clone(), points, act)
    }

    /// Restriction to an invariant subset, keeping the subset's order.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        if !self.is_invariant(subset) {
            return Err(Error::Argument("subset is not G-invariant".into()));
        }
        let pos = |s: usize| subset.iter().position(|&t| t == s).expect("invariant");
        let points = subset.iter().map(|&s| self.points[s].clone()).collect();
        let act = (0..self.group.order())
            .map(|g| subset.iter().map(|&s| pos(self.act(g, s))).collect())
            .collect();
        Self::new(self.group.clone(), points, act)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    #[inline]
    pub fn act(&self, g: usize, s: usize) -> usize {
        self.act[g * self.points.len() + s]
    }

    pub fn is_invariant(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        set.iter().all(|&s| s < self.n_points())
            && (0..self.group.order()).all(|g| set.iter().all(|&s| set.contains(&self.act(g, s))))
    }

    pub fn stabilizer(&self, s: usize) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| self.act(g, s) == s)
            .collect()
    }

    /// Orbits ordered by smallest member, with smallest-index representatives
    /// and smallest-index transporters.
    pub fn orbit_data(&self) -> OrbitData {
        let np = self.n_points();
        let mut orbit_of = vec![usize::MAX; np];
        let mut orbits = Vec::new();
        let mut reps = Vec::new();
        let mut stabilizers = Vec::new();
        let mut transporters = vec![usize::MAX; np];
        for s in 0..np {
            if orbit_of[s] != usize::MAX {
                continue;
            }
            let k = orbits.len();
            let mut orbit = Vec::new();
            for g in 0..self.group.order() {
                let t = self.act(g, s);
                if orbit_of[t] == usize::MAX {
                    orbit_of[t] = k;
                    transporters[t] = g;
                    orbit.push(t);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
            reps.push(s);
            stabilizers.push(self.stabilizer(s));
        }
        OrbitData {
            orbits,
            orbit_of,
            reps,
            stabilizers,
            transporters,
        }
    }

    pub fn to_spec(&self) -> ActionSpec {
        ActionSpec {
            group: self.group.to_spec(),
            points: self.points.clone(),
            act: (0..self.group.order())
                .map(|g| (0..self.n_points()).map(|s| self.act(g, s)).collect())
                .collect(),
        }
    }

    pub fn from_spec(spec: ActionSpec) -> Result<Self> {
        let group = spec.group.build()?;
        Self::new(group, spec.points, spec.act)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_spec(serde_json::from_str(text)?)
    }
}

/// Orbits of a G-set with the chosen representatives, stabilizers and
/// transporters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitData {
    pub orbits: Vec<Vec<usize>>,
    /// Orbit index of each point.
    pub orbit_of: Vec<usize>,
    pub reps: Vec<usize>,
    /// Stabilizer of each representative, as a sorted element-index set.
    pub stabilizers: Vec<Vec<usize>>,
    /// For each point `t`, the smallest `g` with `g.rep = t`.
    pub transporters: Vec<usize>,
}

impl OrbitData {
    pub fn n_orbits(&self) -> usize {
        self.orbits.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupSpec {
    pub fn build(self) -> Result<FiniteGroup> {
        let name = self
            .name
            .unwrap_or_else(|| format!("G{}", self.elements.len()));
        FiniteGroup::from_table(name, self.elements, self.table)
    }
}

/// JSON form of a G-set: `{"group": {...}, "points": [...], "act": [[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub group: GroupSpec,
    pub points: Vec<String>,
    pub act: Vec<Vec<usize>>,
}

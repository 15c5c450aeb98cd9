//! Finite ranked posets with a unique minimum.
//!
//! The order relation is materialized once, as the sorted principal ideal of
//! every element. Möbius values are taken from the bottom only; a two-sided
//! value `mu(a, b)` is obtained by extracting `[a, b]` with
//! [`RankedPoset::interval`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Largest poset whose order relation we are willing to materialize.
pub const MAX_POSET_ELEMENTS: usize = 1 << 18;

#[derive(Clone, Debug)]
pub struct RankedPoset<L> {
    labels: Vec<L>,
    covers: Vec<(usize, usize)>,
    rank: Vec<usize>,
    bottom: usize,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    ideals: Vec<Vec<u32>>,
    by_rank: Vec<Vec<usize>>,
}

/// `mu[x]` is the Möbius value `mu(bottom, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    pub mu: Vec<i64>,
}

impl MobiusTable {
    pub fn get(&self, x: usize) -> i64 {
        self.mu[x]
    }
}

impl<L> RankedPoset<L> {
    /// Builds a poset from its cover pairs `(lower, upper)`.
    ///
    /// Fails unless every cover raises the rank by exactly one and there is a
    /// single minimal element, of rank 0.
    pub fn new(labels: Vec<L>, covers: Vec<(usize, usize)>, rank: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Structure("empty poset".into()));
        }
        if n > MAX_POSET_ELEMENTS {
            return Err(Error::Resource {
                cap: MAX_POSET_ELEMENTS,
                context: format!("materializing the order of a {n}-element poset"),
            });
        }
        if rank.len() != n {
            return Err(Error::Structure("rank vector length mismatch".into()));
        }
        let mut covers = covers;
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::Structure(format!("cover ({a}, {b}) out of range")));
            }
            if rank[b] != rank[a] + 1 {
                return Err(Error::Structure(format!(
                    "cover ({a}, {b}) does not raise rank by one"
                )));
            }
            up[a].push(b);
            down[b].push(a);
        }
        let minimal: Vec<usize> = (0..n).filter(|&x| down[x].is_empty()).collect();
        let bottom = match minimal.as_slice() {
            [b] if rank[*b] == 0 => *b,
            [b] => {
                return Err(Error::Structure(format!(
                    "minimum element {b} has nonzero rank {}",
                    rank[*b]
                )))
            }
            _ => {
                return Err(Error::Structure(format!(
                    "no unique bottom: {} minimal elements",
                    minimal.len()
                )))
            }
        };
        let max_rank = rank.iter().copied().max().unwrap_or(0);
        let mut by_rank = vec![Vec::new(); max_rank + 1];
        for x in 0..n {
            by_rank[rank[x]].push(x);
        }
        let mut ideals: Vec<Vec<u32>> = vec![Vec::new(); n];
        for level in &by_rank {
            for &x in level {
                let mut ideal = vec![x as u32];
                for &y in &down[x] {
                    ideal.extend_from_slice(&ideals[y]);
                }
                ideal.sort_unstable();
                ideal.dedup();
                ideals[x] = ideal;
            }
        }
        Ok(RankedPoset {
            labels,
            covers,
            rank,
            bottom,
            up,
            down,
            ideals,
            by_rank,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &L {
        &self.labels[x]
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn max_rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// Elements of rank `r`, in index order.
    pub fn rank_level(&self, r: usize) -> &[usize] {
        self.by_rank.get(r).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of elements of each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        self.by_rank.iter().map(Vec::len).collect()
    }

    /// Sorted principal ideal `{y : y <= x}`.
    pub fn ideal(&self, x: usize) -> &[u32] {
        &self.ideals[x]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.ideals[b].binary_search(&(a as u32)).is_ok()
    }

    pub fn atoms(&self) -> &[usize] {
        &self.up[self.bottom]
    }

    /// Exact Möbius values from the bottom, by the defining recursion over the
    /// materialized order. Elements of one rank are independent and are
    /// computed in parallel.
    pub fn mobius_table(&self) -> MobiusTable
    where
        L: Sync,
    {
        let mut mu = vec![0i64; self.len()];
        mu[self.bottom] = 1;
        for level in self.by_rank.iter().skip(1) {
            let vals: Vec<i64> = level
                .par_iter()
                .map(|&x| {
                    let below: i64 = self.ideals[x]
                        .iter()
                        .filter(|&&y| y as usize != x)
                        .map(|&y| mu[y as usize])
                        .sum();
                    -below
                })
                .collect();
            for (&x, v) in level.iter().zip(vals) {
                mu[x] = v;
            }
        }
        MobiusTable { mu }
    }

    /// `sum_x mu(bottom, x) t^(ambient_rank - rank(x))`.
    pub fn char_poly_bruteforce(&self, ambient_rank: usize) -> Result<IntPolynomial>
    where
        L: Sync,
    {
        if ambient_rank < self.max_rank() {
            return Err(Error::Argument(format!(
                "ambient rank {ambient_rank} is below the poset's rank {}",
                self.max_rank()
            )));
        }
        let mu = self.mobius_table();
        let mut coeffs = vec![BigInt::from(0); ambient_rank + 1];
        for x in 0..self.len() {
            coeffs[ambient_rank - self.rank[x]] += mu.mu[x];
        }
        Ok(IntPolynomial::new(coeffs, "t"))
    }

    /// Whitney homology dimensions: the sum of `|mu(bottom, x)|` over each rank.
    ///
    /// This is the homology dimension only when lower intervals are geometric
    /// lattices, which holds for every poset this crate builds. It is not
    /// checked.
    pub fn whitney_ranks(&self) -> BTreeMap<usize, u64>
    where
        L: Sync,
    {
        let mu = self.mobius_table();
        self.by_rank
            .iter()
            .enumerate()
            .map(|(r, level)| (r, level.iter().map(|&x| mu.mu[x].unsigned_abs()).sum()))
            .collect()
    }

    /// The closed interval `[a, b]`, reranked so that `a` has rank 0.
    pub fn interval(&self, a: usize, b: usize) -> Result<RankedPoset<L>>
    where
        L: Clone,
    {
        if a >= self.len() || b >= self.len() {
            return Err(Error::Argument("interval endpoint out of range".into()));
        }
        if !self.leq(a, b) {
            return Err(Error::Order(format!("element {a} is not below {b}")));
        }
        let members: Vec<usize> = self.ideals[b]
            .iter()
            .map(|&x| x as usize)
            .filter(|&x| self.leq(a, x))
            .collect();
        let pos = |x: usize| members.binary_search(&x).ok();
        let mut covers = Vec::new();
        for (i, &x) in members.iter().enumerate() {
            for &y in &self.up[x] {
                if let Some(j) = pos(y) {
                    covers.push((i, j));
                }
            }
        }
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        let rank = members
            .iter()
            .map(|&x| self.rank[x] - self.rank[a])
            .collect();
        RankedPoset::new(labels, covers, rank)
    }

    /// Graphviz rendering: one node per element, one edge per cover.
    pub fn to_dot(&self, label: impl Fn(&L) -> String) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (x, l) in self.labels.iter().enumerate() {
            let text = label(l).replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  n{x} [label=\"{text}\"];");
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_hasse_json(&self, label: impl Fn(&L) -> String) -> HasseJson {
        HasseJson {
            elements: self.labels.iter().map(label).collect(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            rank: self.rank.clone(),
        }
    }

    pub fn to_json_value(&self, label: impl Fn(&L) -> String) -> serde_json::Value {
        json!(self.to_hasse_json(label))
    }
}

/// Hasse diagram exchange format:
/// `{"elements": [...], "covers": [[i, j], ...], "rank": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseJson {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    pub rank: Vec<usize>,
}

impl HasseJson {
    pub fn into_poset(self) -> Result<RankedPoset<String>> {
        let covers = self.covers.into_iter().map(|[a, b]| (a, b)).collect();
        RankedPoset::new(self.elements, covers, self.rank)
    }
}

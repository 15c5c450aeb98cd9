use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GSetAction, OrbitData};

use super::element::DowlingElement;

pub const DEFAULT_CAP: usize = 200_000;

/// Everything needed to build D_n(G, S) or one of its invariant subposets.
///
/// `allowed_singleton_orbits` lists the orbits whose zero-block fiber may have
/// exactly one element. With every orbit allowed this is D_n(G, S); an orbit
/// left out behaves as a singular orbit that was not removed.
#[derive(Clone, Debug)]
pub struct DowlingContext {
    n: usize,
    action: GSetAction,
    orbit_data: OrbitData,
    allowed: Vec<bool>,
    cap: usize,
}

impl DowlingContext {
    pub fn new(n: usize, action: GSetAction) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("n must be at least 1".into()));
        }
        let orbit_data = action.orbit_data();
        let allowed = vec![true; orbit_data.n_orbits()];
        Ok(DowlingContext {
            n,
            action,
            orbit_data,
            allowed,
            cap: DEFAULT_CAP,
        })
    }

    /// Restricts to D^T: only orbits in `orbits` may have singleton fibers.
    pub fn with_allowed_singleton_orbits(
        mut self,
        orbits: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let set: BTreeSet<usize> = orbits.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&o| o >= self.orbit_data.n_orbits()) {
            return Err(Error::Argument(format!("orbit {bad} does not exist")));
        }
        self.allowed = (0..self.orbit_data.n_orbits())
            .map(|o| set.contains(&o))
            .collect();
        Ok(self)
    }

    /// Same as [`Self::with_allowed_singleton_orbits`], naming the orbits by
    /// any of their points.
    pub fn with_allowed_points(self, labels: &[String]) -> Result<Self> {
        let mut orbits = Vec::new();
        for l in labels {
            let s = self
                .action
                .point_index(l)
                .ok_or_else(|| Error::Argument(format!("unknown point {l:?}")))?;
            orbits.push(self.orbit_data.orbit_of[s]);
        }
        self.with_allowed_singleton_orbits(orbits)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    pub fn action(&self) -> &GSetAction {
        &self.action
    }

    pub fn orbit_data(&self) -> &OrbitData {
        &self.orbit_data
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn allows_singleton(&self, orbit: usize) -> bool {
        self.allowed[orbit]
    }

    pub fn allowed_singleton_orbits(&self) -> Vec<usize> {
        (0..self.allowed.len())
            .filter(|&o| self.allowed[o])
            .collect()
    }

    /// True when some orbit is excluded, i.e. this is a proper subposet.
    pub fn is_filtered(&self) -> bool {
        self.allowed.iter().any(|a| !a)
    }

    /// Zero-block fiber size of every orbit.
    pub fn fiber_sizes(&self, e: &DowlingElement) -> Vec<usize> {
        let mut sizes = vec![0; self.orbit_data.n_orbits()];
        for &(_, s) in e.zero() {
            sizes[self.orbit_data.orbit_of[s]] += 1;
        }
        sizes
    }

    /// The subposet membership test: no excluded orbit has a singleton fiber.
    pub fn retains(&self, e: &DowlingElement) -> bool {
        !self.is_filtered()
            || self
                .fiber_sizes(e)
                .iter()
                .zip(&self.allowed)
                .all(|(&m, &ok)| ok || m != 1)
    }

    pub fn bottom(&self) -> DowlingElement {
        DowlingElement::bottom(self.group(), self.n)
    }

    /// Canonicalizes raw data and checks it against this context.
    pub fn element(
        &self,
        blocks: Vec<(Vec<usize>, Vec<usize>)>,
        zero: Vec<(usize, usize)>,
    ) -> Result<DowlingElement> {
        let e = DowlingElement::canonicalize(self.group(), self.n, blocks, zero)?;
        self.check(&e)?;
        Ok(e)
    }

    /// Verifies that `e` is a well-formed element of this context.
    pub fn check(&self, e: &DowlingElement) -> Result<()> {
        if e.n() != self.n {
            return Err(Error::Argument(format!(
                "element has n = {}, context has n = {}",
                e.n(),
                self.n
            )));
        }
        let covered: usize = e.blocks().iter().map(|b| b.len()).sum::<usize>() + e.zero().len();
        if covered != self.n {
            return Err(Error::MalformedElement(
                "element does not cover 1..=n".into(),
            ));
        }
        if let Some(&(_, s)) = e.zero().iter().find(|p| p.1 >= self.action.n_points()) {
            return Err(Error::MalformedElement(format!(
                "point index {s} out of range"
            )));
        }
        let id = self.group().identity();
        if e.blocks().iter().any(|b| b.colors[0] != id) {
            return Err(Error::MalformedElement(
                "block coloring not normalized".into(),
            ));
        }
        Ok(())
    }

    pub fn render(&self, e: &DowlingElement) -> String {
        e.render(self.group(), self.action.points())
    }

    pub fn parse(&self, text: &str) -> Result<DowlingElement> {
        let e = DowlingElement::parse(text, self.n, &self.action)?;
        self.check(&e)?;
        Ok(e)
    }

    /// Label of an orbit: its representative's point label.
    pub fn orbit_name(&self, orbit: usize) -> &str {
        &self.action.points()[self.orbit_data.reps[orbit]]
    }
}

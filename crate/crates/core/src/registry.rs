//! Name-keyed registries of fixtures and characteristic-polynomial methods,
//! so front ends can select them at runtime.

use crate::dowling::{enumerate_poset, DowlingContext};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::group::{FiniteGroup, GSetAction};
use crate::invariants::char_poly_factored;
use crate::layers::{self, FiniteGSpace};
use crate::poly::IntPolynomial;

pub trait Named {
    fn name(&self) -> &str;
    fn description(&self) -> &str;
}

/// A G-set that can be built for a given group.
pub trait ActionFixture: Named + Send + Sync {
    fn build(&self, group: FiniteGroup) -> Result<GSetAction>;
}

/// Parameters a space fixture may read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpaceParams {
    pub q: usize,
    pub d: usize,
    /// Use inversion instead of translation on the multiplicative group.
    pub ginv: bool,
}

impl Default for SpaceParams {
    fn default() -> Self {
        SpaceParams {
            q: 7,
            d: 2,
            ginv: false,
        }
    }
}

/// A finite G-space standing in for `X(F_q)`.
pub trait SpaceFixture: Named + Send + Sync {
    fn build(&self, params: &SpaceParams) -> Result<FiniteGSpace>;
}

/// A way of computing the characteristic polynomial of a context.
pub trait CharPolyMethod: Named + Send + Sync {
    fn compute(&self, ctx: &DowlingContext) -> Result<IntPolynomial>;
}

pub struct Registry<T: ?Sized> {
    items: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new() -> Self {
        Registry { items: Vec::new() }
    }

    /// Adds an entry; a later entry with the same name replaces the earlier.
    pub fn register(&mut self, item: Box<T>) {
        self.items.retain(|x| x.name() != item.name());
        self.items.push(item);
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.items
            .iter()
            .find(|x| x.name() == name)
            .map(|b| b.as_ref())
            .ok_or_else(|| {
                Error::Argument(format!(
                    "unknown name {name:?}; choose one of {}",
                    self.names().join(", ")
                ))
            })
    }

    pub fn names(&self) -> Vec<&str> {
        self.items.iter().map(|x| x.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.items.iter().map(|b| b.as_ref())
    }
}

impl<T: ?Sized + Named> Default for Registry<T> {
    fn default() -> Self {
        Self::new()
    }
}

struct NamedAction {
    name: &'static str,
    description: &'static str,
}

impl Named for NamedAction {
    fn name(&self) -> &str {
        self.name
    }
    fn description(&self) -> &str {
        self.description
    }
}

impl ActionFixture for NamedAction {
    fn build(&self, group: FiniteGroup) -> Result<GSetAction> {
        fixtures::action_by_name(self.name, group)
    }
}

pub fn action_registry() -> Registry<dyn ActionFixture> {
    let mut r: Registry<dyn ActionFixture> = Registry::new();
    for (name, description) in [
        ("trivial1", "one fixed point"),
        ("trivial2", "trivial action on {1, -1}"),
        ("trivial3", "three fixed points"),
        ("empty", "no points"),
        (
            "sign",
            "generator swaps 1 and -1 (cyclic groups of even order)",
        ),
        ("regular", "left multiplication on the group"),
        ("regular+point", "regular action plus one fixed point"),
        ("hexagonal", "Z6 on {e, z1, z2, z3, w1, w2}"),
        ("square", "Z4 on {e, z1, z2, t}"),
    ] {
        r.register(Box::new(NamedAction { name, description }));
    }
    r
}

struct FnSpace {
    name: &'static str,
    description: &'static str,
    build: fn(&SpaceParams) -> Result<FiniteGSpace>,
}

impl Named for FnSpace {
    fn name(&self) -> &str {
        self.name
    }
    fn description(&self) -> &str {
        self.description
    }
}

impl SpaceFixture for FnSpace {
    fn build(&self, params: &SpaceParams) -> Result<FiniteGSpace> {
        (self.build)(params)
    }
}

pub fn space_registry() -> Registry<dyn SpaceFixture> {
    let mut r: Registry<dyn SpaceFixture> = Registry::new();
    r.register(Box::new(FnSpace {
        name: "affine",
        description: "F_q with mu_d scaling",
        build: |p| layers::affine_scaling(p.q, p.d),
    }));
    r.register(Box::new(FnSpace {
        name: "gm",
        description: "F_q^x with Z2 inversion (--ginv) or mu_d translation",
        build: |p| {
            if p.ginv {
                layers::multiplicative_inversion(p.q)
            } else {
                layers::multiplicative_translation(p.q, p.d)
            }
        },
    }));
    r.register(Box::new(FnSpace {
        name: "gm-inv",
        description: "F_q^x with Z2 inversion",
        build: |p| layers::multiplicative_inversion(p.q),
    }));
    r.register(Box::new(FnSpace {
        name: "gm-trans",
        description: "F_q^x with mu_d translation (free)",
        build: |p| layers::multiplicative_translation(p.q, p.d),
    }));
    r
}

/// Rank exponent used for the characteristic polynomial: `n`, or `n - 1` for
/// an empty `S`.
pub fn ambient_rank(ctx: &DowlingContext) -> usize {
    if ctx.action().n_points() == 0 {
        ctx.n() - 1
    } else {
        ctx.n()
    }
}

pub struct Factored;

impl Named for Factored {
    fn name(&self) -> &str {
        "factored"
    }
    fn description(&self) -> &str {
        "closed-form product of linear factors"
    }
}

impl CharPolyMethod for Factored {
    fn compute(&self, ctx: &DowlingContext) -> Result<IntPolynomial> {
        if ctx.is_filtered() {
            return Err(Error::Unsupported(
                "the subposet's characteristic polynomial has no product formula".into(),
            ));
        }
        Ok(char_poly_factored(
            ctx.n(),
            ctx.group().order(),
            ctx.action().n_points(),
        ))
    }
}

pub struct Brute;

impl Named for Brute {
    fn name(&self) -> &str {
        "brute"
    }
    fn description(&self) -> &str {
        "Möbius function of the enumerated poset"
    }
}

impl CharPolyMethod for Brute {
    fn compute(&self, ctx: &DowlingContext) -> Result<IntPolynomial> {
        enumerate_poset(ctx)?.char_poly_bruteforce(ambient_rank(ctx))
    }
}

pub fn charpoly_registry() -> Registry<dyn CharPolyMethod> {
    let mut r: Registry<dyn CharPolyMethod> = Registry::new();
    r.register(Box::new(Factored));
    r.register(Box::new(Brute));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let actions = action_registry();
        let g = fixtures::group_by_name("Z6").unwrap();
        assert_eq!(
            actions
                .get("hexagonal")
                .unwrap()
                .build(g)
                .unwrap()
                .n_points(),
            6
        );
        assert!(actions.get("nope").is_err());
        let spaces = space_registry();
        let p = SpaceParams {
            q: 7,
            d: 2,
            ginv: true,
        };
        assert_eq!(
            spaces
                .get("gm")
                .unwrap()
                .build(&p)
                .unwrap()
                .singular()
                .len(),
            2
        );
        assert_eq!(charpoly_registry().names(), vec!["factored", "brute"]);
    }

    #[test]
    fn methods_agree_on_hexagonal() {
        let ctx = DowlingContext::new(2, fixtures::hexagonal()).unwrap();
        let r = charpoly_registry();
        let a = r.get("factored").unwrap().compute(&ctx).unwrap();
        let b = r.get("brute").unwrap().compute(&ctx).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "t^2 - 18t + 72");
    }
}

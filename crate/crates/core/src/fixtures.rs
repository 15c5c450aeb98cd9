//! Named groups and G-sets that appear in the worked examples.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GSetAction};

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Parses `Z<d>` (also `Z_d`, `C<d>`) into a cyclic group.
pub fn group_by_name(name: &str) -> Result<FiniteGroup> {
    let digits = name
        .strip_prefix("Z_")
        .or_else(|| name.strip_prefix('Z'))
        .or_else(|| name.strip_prefix('C'))
        .ok_or_else(|| Error::Argument(format!("unknown group {name:?}; expected Z<d>")))?;
    let d: usize = digits
        .parse()
        .map_err(|_| Error::Argument(format!("bad group order in {name:?}")))?;
    FiniteGroup::cyclic(d)
}

fn require_cyclic(group: &FiniteGroup, d: usize, what: &str) -> Result<()> {
    if group.order() != d || group.name() != format!("Z{d}") {
        return Err(Error::Argument(format!(
            "the {what} action needs Z{d}, got {}",
            group.name()
        )));
    }
    Ok(())
}

/// Z6 on `{e, z1, z2, z3, w1, w2}`: the generator fixes `e`, rotates the
/// `z`'s and swaps the `w`'s.
pub fn hexagonal() -> GSetAction {
    let g = FiniteGroup::cyclic(6).expect("order 6");
    GSetAction::cyclic_by_permutation(
        g,
        labels(&["e", "z1", "z2", "z3", "w1", "w2"]),
        &[0, 2, 3, 1, 5, 4],
    )
    .expect("hexagonal action")
}

/// Z4 on `{e, z1, z2, t}`: the generator swaps `z1` and `z2`.
pub fn square() -> GSetAction {
    let g = FiniteGroup::cyclic(4).expect("order 4");
    GSetAction::cyclic_by_permutation(g, labels(&["e", "z1", "z2", "t"]), &[0, 2, 1, 3])
        .expect("square action")
}

/// Trivial action on `{1, -1}`.
pub fn trivial_pm(group: FiniteGroup) -> GSetAction {
    GSetAction::trivial(group, labels(&["1", "-1"]))
}

/// Trivial action on `k` points labelled `0, 1, ...`.
pub fn trivial_points(group: FiniteGroup, k: usize) -> GSetAction {
    GSetAction::trivial(group, (0..k).map(|i| i.to_string()).collect())
}

/// A cyclic group of even order acting on `{1, -1}` with the generator
/// swapping the two points.
pub fn sign(group: FiniteGroup) -> Result<GSetAction> {
    if group.name() != format!("Z{}", group.order()) || !group.order().is_multiple_of(2) {
        return Err(Error::Argument(format!(
            "the sign action needs a cyclic group of even order, got {}",
            group.name()
        )));
    }
    GSetAction::cyclic_by_permutation(group, labels(&["1", "-1"]), &[1, 0])
}

/// Looks up an action by name for the given group.
pub fn action_by_name(name: &str, group: FiniteGroup) -> Result<GSetAction> {
    match name {
        "hexagonal" => {
            require_cyclic(&group, 6, name)?;
            Ok(hexagonal())
        }
        "square" => {
            require_cyclic(&group, 4, name)?;
            Ok(square())
        }
        "trivial2" => Ok(trivial_pm(group)),
        "trivial1" | "point" => Ok(trivial_points(group, 1)),
        "trivial3" => Ok(trivial_points(group, 3)),
        "empty" => Ok(GSetAction::empty(group)),
        "sign" => sign(group),
        "regular" => Ok(GSetAction::regular(group)),
        "regular+point" => GSetAction::regular(group.clone())
            .disjoint_union(&GSetAction::trivial(group, labels(&["0"]))),
        _ => Err(Error::Argument(format!("unknown action {name:?}"))),
    }
}

pub const ACTION_NAMES: &[&str] = &[
    "trivial1",
    "trivial2",
    "trivial3",
    "empty",
    "sign",
    "regular",
    "regular+point",
    "hexagonal",
    "square",
];

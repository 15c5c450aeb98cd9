use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GSetAction};

/// One block of a partial G-partition: sorted members and the coloring
/// representative with `colors[0] == identity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub members: Vec<usize>,
    pub colors: Vec<usize>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn first(&self) -> usize {
        self.members[0]
    }

    /// Color of ground element `i`, if it lies in this block.
    pub fn color_of(&self, i: usize) -> Option<usize> {
        self.members.binary_search(&i).ok().map(|k| self.colors[k])
    }
}

/// An element of D_n(G, S) in canonical form.
///
/// Ground elements are `0..n`. Blocks are sorted by their minimum and every
/// block coloring is normalized so that its minimum carries the identity. The
/// zero block is stored as `(index, point)` pairs sorted by index. Two
/// elements are equal exactly when they are the same poset element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DowlingElement {
    n: usize,
    blocks: Vec<Block>,
    zero: Vec<(usize, usize)>,
}

/// Where a ground element sits inside an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Slot {
    /// block index and color
    Block(usize, usize),
    /// zero-block color (a point of S)
    Zero(usize),
}

impl DowlingElement {
    /// Normalizes arbitrary coloring representatives and orders blocks.
    ///
    /// `blocks` holds `(members, colors)` pairs in any order; `zero` holds
    /// `(index, point)` pairs. Point indices are not range-checked here since
    /// the G-set is not known; [`super::DowlingContext::element`] does that.
    pub fn canonicalize(
        group: &FiniteGroup,
        n: usize,
        blocks: Vec<(Vec<usize>, Vec<usize>)>,
        zero: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut mark = |i: usize| -> Result<()> {
            if i >= n {
                return Err(Error::MalformedElement(format!(
                    "index {} out of range 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::MalformedElement(format!(
                    "index {} appears twice",
                    i + 1
                )));
            }
            Ok(())
        };
        let mut out = Vec::with_capacity(blocks.len());
        for (members, colors) in blocks {
            if members.is_empty() {
                return Err(Error::MalformedElement("empty block".into()));
            }
            if members.len() != colors.len() {
                return Err(Error::MalformedElement(
                    "block coloring is not total on its block".into(),
                ));
            }
            if let Some(&c) = colors.iter().find(|&&c| c >= group.order()) {
                return Err(Error::MalformedElement(format!(
                    "group index {c} out of range"
                )));
            }
            for &i in &members {
                mark(i)?;
            }
            let mut pairs: Vec<(usize, usize)> = members.into_iter().zip(colors).collect();
            pairs.sort_unstable();
            let shift = group.inv(pairs[0].1);
            out.push(Block {
                members: pairs.iter().map(|p| p.0).collect(),
                colors: pairs.iter().map(|p| group.mul(p.1, shift)).collect(),
            });
        }
        for &(i, _) in &zero {
            mark(i)?;
        }
        out.sort_unstable_by_key(Block::first);
        let mut zero = zero;
        zero.sort_unstable();
        Ok(DowlingElement {
            n,
            blocks: out,
            zero,
        })
    }

    /// Builds directly from parts already in canonical form.
    pub(crate) fn from_canonical_parts(
        n: usize,
        blocks: Vec<Block>,
        zero: Vec<(usize, usize)>,
    ) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].first() < w[1].first()));
        debug_assert!(zero.windows(2).all(|w| w[0].0 < w[1].0));
        DowlingElement { n, blocks, zero }
    }

    /// The minimum: `n` singleton blocks and an empty zero block.
    pub fn bottom(group: &FiniteGroup, n: usize) -> Self {
        let e = group.identity();
        DowlingElement {
            n,
            blocks: (0..n)
                .map(|i| Block {
                    members: vec![i],
                    colors: vec![e],
                })
                .collect(),
            zero: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Zero-block coloring as `(index, point)` pairs sorted by index.
    pub fn zero(&self) -> &[(usize, usize)] {
        &self.zero
    }

    pub fn zero_color(&self, i: usize) -> Option<usize> {
        self.zero
            .binary_search_by_key(&i, |p| p.0)
            .ok()
            .map(|k| self.zero[k].1)
    }

    pub fn rank(&self) -> usize {
        self.n - self.blocks.len()
    }

    pub(crate) fn slots(&self) -> Vec<Slot> {
        let mut slots = vec![Slot::Zero(usize::MAX); self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for (&i, &c) in b.members.iter().zip(&b.colors) {
                slots[i] = Slot::Block(k, c);
            }
        }
        for &(i, s) in &self.zero {
            slots[i] = Slot::Zero(s);
        }
        slots
    }

    /// Bracket notation with 1-based indices, e.g. `[1_e 2_g | 3_e || 4_s]`.
    pub fn render(&self, group: &FiniteGroup, points: &[String]) -> String {
        let mut out = String::from("[");
        if self.blocks.is_empty() {
            out.push('∅');
        }
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                out.push_str(" | ");
            }
            for (j, (&i, &c)) in b.members.iter().zip(&b.colors).enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{}_{}", i + 1, group.label(c));
            }
        }
        out.push_str(" || ");
        if self.zero.is_empty() {
            out.push('∅');
        }
        for (j, &(i, s)) in self.zero.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}_{}", i + 1, points[s]);
        }
        out.push(']');
        out
    }

    /// Inverse of [`DowlingElement::render`]. Any coloring representative is
    /// accepted; the result is canonicalized.
    pub fn parse(text: &str, n: usize, action: &GSetAction) -> Result<Self> {
        let group = action.group();
        let body = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [...] in {text:?}")))?;
        let (left, right) = body
            .split_once("||")
            .ok_or_else(|| Error::Parse(format!("missing '||' in {text:?}")))?;
        let token = |tok: &str| -> Result<(usize, String)> {
            let (idx, label) = tok
                .split_once('_')
                .ok_or_else(|| Error::Parse(format!("expected i_label, got {tok:?}")))?;
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
            if idx == 0 {
                return Err(Error::Parse(format!("indices start at 1 in {tok:?}")));
            }
            Ok((idx - 1, label.to_string()))
        };
        let is_empty = |s: &str| s.trim().is_empty() || s.trim() == "∅";
        let mut blocks = Vec::new();
        if !is_empty(left) {
            for part in left.split('|') {
                let mut members = Vec::new();
                let mut colors = Vec::new();
                for tok in part.split_whitespace() {
                    let (i, label) = token(tok)?;
                    let c = group
                        .index_of(&label)
                        .ok_or_else(|| Error::Parse(format!("unknown group element {label:?}")))?;
                    members.push(i);
                    colors.push(c);
                }
                blocks.push((members, colors));
            }
        }
        let mut zero = Vec::new();
        if !is_empty(right) {
            for tok in right.split_whitespace() {
                let (i, label) = token(tok)?;
                let s = action
                    .point_index(&label)
                    .ok_or_else(|| Error::Parse(format!("unknown point {label:?}")))?;
                zero.push((i, s));
            }
        }
        let e = Self::canonicalize(group, n, blocks, zero)?;
        let covered: BTreeSet<usize> = e
            .blocks
            .iter()
            .flat_map(|b| b.members.iter().copied())
            .chain(e.zero.iter().map(|p| p.0))
            .collect();
        if covered.len() != n {
            return Err(Error::MalformedElement(format!(
                "{text:?} does not cover all of 1..={n}"
            )));
        }
        Ok(e)
    }
}

/// Raw JSON form; converted through [`DowlingElement::canonicalize`].
#[derive(Clone, Debug, Deserialize)]
pub struct ElementJson {
    pub n: usize,
    pub blocks: Vec<Block>,
    pub zero: Vec<(usize, usize)>,
}

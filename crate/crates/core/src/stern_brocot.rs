//! The Stern-Brocot tree over `[0, 1]`.
//!
//! Level `S_0 = [0/1, 1/1]`; `S_{k+1}` is `S_k` with the mediant of every
//! adjacent pair inserted. Seen as a binary tree, the root is `1/2 = 0/1 ⊕ 1/1`
//! and every vertex is the mediant of its two bounds `(lo, hi)`. Taking the
//! left child replaces `hi` by the vertex; taking the right child replaces `lo`.
//! The endpoints `0/1` and `1/1` are bounds only, never vertices.
//!
//! The bounds always satisfy `hi.num*lo.den - lo.num*hi.den = 1`, so every
//! mediant formed here is already in lowest terms.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{mediant, Fraction, NeighborPair};

/// Default bound on path length for [`decode`], [`locate`] and [`ancestors`].
pub const MAX_PATH_LEN: u64 = 1_000_000;
/// Deepest level [`build_levels`] will produce; `|S_k| = 2^k + 1`.
pub const MAX_LEVEL_DEPTH: u32 = 25;
/// Deepest tree [`render_tree`] will draw.
pub const MAX_RENDER_DEPTH: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    L,
    R,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::L => 'L',
            Step::R => 'R',
        }
    }
}

/// Address of a vertex: the turns taken from the root. Empty is `1/2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn root() -> Path {
        Path::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    /// This path extended by one step.
    pub fn child(&self, step: Step) -> Path {
        let mut steps = Vec::with_capacity(self.steps.len() + 1);
        steps.extend_from_slice(&self.steps);
        steps.push(step);
        Path { steps }
    }
}

impl From<Vec<Step>> for Path {
    fn from(steps: Vec<Step>) -> Path {
        Path { steps }
    }
}

impl FromIterator<Step> for Path {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Path {
        Path {
            steps: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| f.write_char(s.as_char()))
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        s.chars()
            .map(|c| match c {
                'L' => Ok(Step::L),
                'R' => Ok(Step::R),
                _ => Err(Error::Parse {
                    input: s.to_owned(),
                    reason: "a path may contain only the letters L and R",
                }),
            })
            .collect()
    }
}

/// The set `S_k`, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLevel {
    index: u32,
    values: Vec<Fraction>,
}

impl TreeLevel {
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn values(&self) -> &[Fraction] {
        &self.values
    }

    /// Values first created at this level, i.e. `S_k \ S_{k-1}`. They sit at
    /// the odd positions. Empty for `S_0`.
    pub fn new_values(&self) -> impl Iterator<Item = Fraction> + '_ {
        let created = if self.index == 0 { 0 } else { self.values.len() / 2 };
        self.values.iter().skip(1).step_by(2).take(created).copied()
    }
}

fn mediant_of(lo: Fraction, hi: Fraction) -> Result<Fraction> {
    let m = mediant(lo.raw(), hi.raw())?;
    debug_assert!(m.is_reduced(), "{lo} and {hi} are not unimodular");
    Ok(m.reduce())
}

/// `S_0, S_1, ..., S_k`.
pub fn build_levels(k: u32) -> Result<Vec<TreeLevel>> {
    Error::limit("depth", k.into(), MAX_LEVEL_DEPTH.into())?;
    let mut levels = Vec::with_capacity(k as usize + 1);
    let mut current = TreeLevel {
        index: 0,
        values: vec![Fraction::ZERO, Fraction::ONE],
    };
    for index in 1..=k {
        let mut values = Vec::with_capacity(2 * current.values.len() - 1);
        for pair in current.values.windows(2) {
            values.push(pair[0]);
            values.push(mediant_of(pair[0], pair[1])?);
        }
        values.push(Fraction::ONE);
        let next = TreeLevel { index, values };
        levels.push(std::mem::replace(&mut current, next));
    }
    levels.push(current);
    Ok(levels)
}

/// The vertex at `path`.
pub fn decode(path: &Path) -> Result<Fraction> {
    decode_with_limit(path, MAX_PATH_LEN)
}

pub fn decode_with_limit(path: &Path, limit: u64) -> Result<Fraction> {
    Error::limit("path length", path.len() as u64, limit)?;
    let (mut lo, mut hi) = (Fraction::ZERO, Fraction::ONE);
    let mut vertex = Fraction::HALF;
    for step in path.steps() {
        match step {
            Step::L => hi = vertex,
            Step::R => lo = vertex,
        }
        vertex = mediant_of(lo, hi)?;
    }
    Ok(vertex)
}

fn require_interior(f: Fraction) -> Result<()> {
    if f.is_interior() {
        Ok(())
    } else {
        Err(Error::OutOfRange(f.to_string()))
    }
}

/// A point on the way down to a target: the current vertex and the bounds it
/// was created from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkState {
    pub lo: Fraction,
    pub hi: Fraction,
    pub vertex: Fraction,
}

/// Step-by-step bisection from the root towards a target: compare the target
/// with the current vertex and go left or right until they are equal.
///
/// Yields the root first and the target last. One item per tree level, so it
/// is only practical for targets with a short path; [`locate`] skips ahead
/// over runs instead.
#[derive(Debug, Clone)]
pub struct Walk {
    target: Fraction,
    state: Option<WalkState>,
    done: bool,
}

pub fn walk(target: Fraction) -> Result<Walk> {
    require_interior(target)?;
    Ok(Walk {
        target,
        state: None,
        done: false,
    })
}

impl Iterator for Walk {
    type Item = WalkState;

    fn next(&mut self) -> Option<WalkState> {
        if self.done {
            return None;
        }
        let next = match self.state {
            None => WalkState {
                lo: Fraction::ZERO,
                hi: Fraction::ONE,
                vertex: Fraction::HALF,
            },
            Some(s) => {
                let (lo, hi) = if self.target < s.vertex {
                    (s.lo, s.vertex)
                } else {
                    (s.vertex, s.hi)
                };
                // the target is reached before denominators can exceed its own
                let vertex = mediant_of(lo, hi).expect("walk stays below the target's size");
                WalkState { lo, hi, vertex }
            }
        };
        self.done = next.vertex == self.target;
        self.state = Some(next);
        Some(next)
    }
}

/// Maximal runs of equal steps on the way to `f`, plus the bounds that
/// create `f`.
///
/// While the target is left of the vertex `lo ⊕ hi`, the walk keeps taking L
/// and the vertex after `j` steps is `j*lo + hi` (componentwise). With
/// `A = f - lo` and `B = hi - f` as cross-products, `f < j*lo + hi` holds
/// exactly when `j*A < B`, so the run has `(B - 1) / A` steps. Right runs
/// are symmetric.
fn runs(f: Fraction) -> Result<(Vec<(Step, u64)>, NeighborPair)> {
    require_interior(f)?;
    let (fnum, fden) = (f.num() as u128, f.den() as u128);
    let (mut lo_n, mut lo_d, mut hi_n, mut hi_d) = (0u128, 1u128, 1u128, 1u128);
    let mut out = Vec::new();
    loop {
        let (m_n, m_d) = (lo_n + hi_n, lo_d + hi_d);
        if m_n == fnum && m_d == fden {
            break;
        }
        let above_lo = fnum * lo_d - fden * lo_n;
        let below_hi = fden * hi_n - fnum * hi_d;
        if fnum * m_d < fden * m_n {
            let k = (below_hi - 1) / above_lo;
            hi_n += k * lo_n;
            hi_d += k * lo_d;
            out.push((Step::L, k as u64));
        } else {
            let k = (above_lo - 1) / below_hi;
            lo_n += k * hi_n;
            lo_d += k * hi_d;
            out.push((Step::R, k as u64));
        }
    }
    // every bound lies between the endpoints and has a denominator below f's
    let lo = Fraction::from_reduced(lo_n as u64, lo_d as u64);
    let hi = Fraction::from_reduced(hi_n as u64, hi_d as u64);
    Ok((out, NeighborPair::new(lo, hi)))
}

/// The unique path whose vertex is `f`.
pub fn locate(f: Fraction) -> Result<Path> {
    locate_with_limit(f, MAX_PATH_LEN)
}

pub fn locate_with_limit(f: Fraction, limit: u64) -> Result<Path> {
    let (runs, _) = runs(f)?;
    let len: u64 = runs.iter().map(|&(_, k)| k).sum();
    Error::limit("path length", len, limit)?;
    let mut steps = Vec::with_capacity(len as usize);
    for (step, k) in runs {
        steps.extend(std::iter::repeat_n(step, k as usize));
    }
    Ok(Path { steps })
}

/// The bounds `(lo, hi)` whose mediant first produces `f`.
///
/// Costs one pass per run, not per step, so it stays cheap for fractions far
/// down the tree.
pub fn creation_neighbors(f: Fraction) -> Result<NeighborPair> {
    runs(f).map(|(_, bounds)| bounds)
}

/// Vertices on the way from the root down to `f`, excluding `f`.
pub fn ancestors(f: Fraction) -> Result<Vec<Fraction>> {
    let (runs, _) = runs(f)?;
    let len: u64 = runs.iter().map(|&(_, k)| k).sum();
    Error::limit("path length", len, MAX_PATH_LEN)?;
    let mut out = Vec::with_capacity(len as usize);
    let (mut lo, mut hi) = (Fraction::ZERO, Fraction::ONE);
    for (step, k) in runs {
        for _ in 0..k {
            let vertex = mediant_of(lo, hi)?;
            out.push(vertex);
            match step {
                Step::L => hi = vertex,
                Step::R => lo = vertex,
            }
        }
    }
    Ok(out)
}

/// Left and right child of the vertex `f`.
pub fn children(f: Fraction) -> Result<(Fraction, Fraction)> {
    let bounds = creation_neighbors(f)?;
    Ok((mediant_of(bounds.left, f)?, mediant_of(f, bounds.right)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    /// One vertex per line in preorder, indented two spaces per level.
    Text,
    /// Graphviz digraph with parent -> child edges in breadth-first order.
    Dot,
}

/// Draws every vertex down to `depth` (the root is depth 0).
pub fn render_tree(depth: u32, format: RenderFormat) -> Result<String> {
    Error::limit("depth", depth.into(), MAX_RENDER_DEPTH.into())?;
    let mut out = String::new();
    match format {
        RenderFormat::Text => render_text(&mut out, Fraction::ZERO, Fraction::ONE, 0, depth)?,
        RenderFormat::Dot => render_dot(&mut out, depth)?,
    }
    Ok(out)
}

fn render_text(out: &mut String, lo: Fraction, hi: Fraction, level: u32, depth: u32) -> Result<()> {
    let vertex = mediant_of(lo, hi)?;
    let _ = writeln!(out, "{:indent$}{vertex}", "", indent = 2 * level as usize);
    if level < depth {
        render_text(out, lo, vertex, level + 1, depth)?;
        render_text(out, vertex, hi, level + 1, depth)?;
    }
    Ok(())
}

fn render_dot(out: &mut String, depth: u32) -> Result<()> {
    out.push_str("digraph sb {\n");
    if depth == 0 {
        let _ = writeln!(out, "  \"{}\";", Fraction::HALF);
    }
    // (lo, hi) bounds of each vertex on the current level, left to right
    let mut level = vec![(Fraction::ZERO, Fraction::ONE)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(level.len() * 2);
        for (lo, hi) in level {
            let vertex = mediant_of(lo, hi)?;
            for (child_lo, child_hi) in [(lo, vertex), (vertex, hi)] {
                let child = mediant_of(child_lo, child_hi)?;
                let _ = writeln!(out, "  \"{vertex}\" -> \"{child}\";");
                next.push((child_lo, child_hi));
            }
        }
        level = next;
    }
    out.push_str("}\n");
    Ok(())
}

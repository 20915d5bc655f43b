//! Finite laminations: sets of pairwise unlinked leaves, their gaps
//! (complementary regions of the chord diagram), rainbows, chains and
//! convergence evidence.
//!
//! A finite set of leaves stands for the lamination system it generates:
//! both complementary intervals of every leaf, closed under the (here
//! vacuous) ascending-union condition.  Gaps are enumerated as the faces
//! of the chord diagram; a face is recorded as the set of intervals cut
//! off by its boundary chords, which is exactly a gap in the order sense:
//! pairwise disjoint intervals such that every leaf lies on one of them.

use crate::circle::{
    lies_on, unlinked, CirclePoint, Leaf, LiesOn, Model, OpenInterval,
};
use crate::homeo::Homeo;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteLamination {
    leaves: BTreeSet<Leaf>,
    model: Model,
}

/// A linked pair found during validation, with the separating witness:
/// endpoints `(c, d)` of the second leaf strictly separate the endpoints
/// of the first.
#[derive(Clone, Debug)]
pub struct LinkedPair {
    pub first: Leaf,
    pub second: Leaf,
    pub witness: (CirclePoint, CirclePoint),
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub linked: Vec<LinkedPair>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.linked.is_empty()
    }
}

impl FiniteLamination {
    pub fn new(leaves: impl IntoIterator<Item = Leaf>) -> Result<FiniteLamination> {
        let leaves: BTreeSet<Leaf> = leaves.into_iter().collect();
        let model = match leaves.iter().next() {
            None => return Err(Error::EmptyLamination),
            Some(l) => l.model(),
        };
        if leaves.iter().any(|l| l.model() != model) {
            return Err(Error::ModelMismatch);
        }
        Ok(FiniteLamination { leaves, model })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn leaves(&self) -> impl Iterator<Item = &Leaf> {
        self.leaves.iter()
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, l: &Leaf) -> bool {
        self.leaves.contains(l)
    }

    /// Both complementary intervals of every leaf.
    pub fn intervals(&self) -> Vec<OpenInterval> {
        let mut v = Vec::with_capacity(2 * self.leaves.len());
        for l in &self.leaves {
            let i = l.interval();
            v.push(i.dual());
            v.push(i);
        }
        v.sort();
        v
    }

    /// The set `E(L)` of all leaf endpoints.
    pub fn endpoints_set(&self) -> BTreeSet<CirclePoint> {
        let mut s = BTreeSet::new();
        for l in &self.leaves {
            let (a, b) = l.endpoints();
            s.insert(a.clone());
            s.insert(b.clone());
        }
        s
    }

    /// Checks the pairwise unlinking condition, reporting every linked
    /// pair together with separating endpoints.
    pub fn validate(&self) -> Result<ValidationReport> {
        let mut report = ValidationReport::default();
        let leaves: Vec<&Leaf> = self.leaves.iter().collect();
        for i in 0..leaves.len() {
            for j in (i + 1)..leaves.len() {
                if !unlinked(leaves[i], leaves[j])? {
                    let (c, d) = leaves[j].endpoints();
                    report.linked.push(LinkedPair {
                        first: leaves[i].clone(),
                        second: leaves[j].clone(),
                        witness: (c.clone(), d.clone()),
                    });
                }
            }
        }
        Ok(report)
    }

    pub fn is_valid(&self) -> Result<bool> {
        Ok(self.validate()?.is_valid())
    }

    /// All gaps realized as faces of the chord diagram.
    ///
    /// For each interval `I` of the lamination, the face adjacent to the
    /// chord of `I` on the `I` side is bounded by that chord and by the
    /// inclusion-maximal chords inside `I`; its gap consists of the duals
    /// of those bounding positions.  A face bounded by a single chord is
    /// the leaf gap `{I, I*}`.  Faces found from several of their chords
    /// coincide as gaps and are deduplicated.
    pub fn gaps(&self) -> Result<Vec<Gap>> {
        if !self.is_valid()? {
            return Err(Error::LinkedLeaves);
        }
        let intervals = self.intervals();
        let n = intervals.len();
        // containment matrix, computed once: sub[j][i] ⟺ intervals[j] ⊆ intervals[i]
        let mut sub = vec![vec![false; n]; n];
        for (j, ij) in intervals.iter().enumerate() {
            for (i, ii) in intervals.iter().enumerate() {
                if j != i {
                    sub[j][i] = ij.subset_of(ii)?;
                }
            }
        }
        let mut out: BTreeSet<Gap> = BTreeSet::new();
        for (i, ii) in intervals.iter().enumerate() {
            let dual = ii.dual();
            let inside: Vec<usize> = (0..n)
                .filter(|&j| j != i && intervals[j] != dual && sub[j][i])
                .collect();
            let mut sides: Vec<OpenInterval> = vec![dual];
            if inside.is_empty() {
                sides.push(ii.clone());
            } else {
                for &j in &inside {
                    let maximal = inside.iter().all(|&j2| j2 == j || !sub[j][j2]);
                    if maximal {
                        sides.push(intervals[j].clone());
                    }
                }
            }
            out.insert(Gap::from_sides(sides)?);
        }
        Ok(out.into_iter().collect())
    }

    /// Whether every gap is an ideal polygon.
    pub fn is_very_full(&self) -> Result<bool> {
        for g in self.gaps()? {
            if g.polygon_vertices().is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The chain `C(p, I)`: all intervals of the lamination containing
    /// `p` and contained in `I`, which is always totally ordered by
    /// inclusion; returned from outermost to innermost.
    pub fn chain(&self, p: &CirclePoint, i: &OpenInterval) -> Result<Vec<OpenInterval>> {
        let mut members = Vec::new();
        for j in self.intervals() {
            if j.contains(p)? && j.subset_of(i)? {
                members.push(j);
            }
        }
        // total order is a theorem for unlinked leaves; sort by inclusion
        for a in &members {
            for b in &members {
                if a != b && !a.subset_of(b)? && !b.subset_of(a)? {
                    return Err(Error::LinkedLeaves);
                }
            }
        }
        sort_by_inclusion(&mut members)?;
        Ok(members)
    }

    /// Searches for a rainbow at `p`: a chain of intervals with properly
    /// nested closures, all containing `p`.
    pub fn rainbow_search(&self, p: &CirclePoint, depth: usize) -> Result<RainbowOutcome> {
        if depth == 0 {
            return Err(Error::BadDepth);
        }
        for l in &self.leaves {
            if l.has_endpoint(p) {
                return Ok(RainbowOutcome::Endpoint(l.clone()));
            }
        }
        let around: Vec<OpenInterval> = self
            .intervals()
            .into_iter()
            .filter(|j| j.contains(p).unwrap_or(false))
            .collect();
        let chain = longest_proper_chain(&around)?;
        if chain.len() >= depth {
            Ok(RainbowOutcome::Rainbow(chain[..depth].to_vec()))
        } else {
            Ok(RainbowOutcome::Inconclusive(chain))
        }
    }

    /// Looks for evidence that the lamination accumulates on `I` from
    /// inside: a strictly ascending chain (length at least 2) of
    /// intervals contained in `I`, taken from leaves other than the leaf
    /// of `I`.
    pub fn is_isolated(&self, i: &OpenInterval) -> Result<IsolationOutcome> {
        let own = Leaf::of(i);
        let mut inside: Vec<OpenInterval> = Vec::new();
        for l in &self.leaves {
            if *l == own {
                continue;
            }
            for j in [l.interval(), l.interval().dual()] {
                if j.subset_of(i)? && j != *i {
                    inside.push(j);
                }
            }
        }
        inside.sort();
        inside.dedup();
        let mut chain = longest_inclusion_chain(&inside)?;
        if chain.len() < 2 {
            return Ok(IsolationOutcome::NoApproach);
        }
        chain.reverse(); // ascending toward I
        Ok(IsolationOutcome::Approach(chain))
    }

    /// Whether some non-leaf gap has distinct sides containing `I` and
    /// `J` respectively.
    pub fn separation_check(
        &self,
        i: &OpenInterval,
        j: &OpenInterval,
    ) -> Result<Option<(Gap, OpenInterval, OpenInterval)>> {
        for gap in self.gaps()? {
            if gap.is_leaf_gap() {
                continue;
            }
            for k in gap.sides() {
                for k2 in gap.sides() {
                    if k != k2 && i.subset_of(k)? && j.subset_of(k2)? {
                        return Ok(Some((gap.clone(), k.clone(), k2.clone())));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Applies a homeomorphism leafwise.
    pub fn image(&self, g: &Homeo) -> Result<FiniteLamination> {
        let mut leaves = BTreeSet::new();
        for l in &self.leaves {
            leaves.insert(g.apply_leaf(l)?);
        }
        FiniteLamination::new(leaves)
    }

    pub fn union(&self, other: &FiniteLamination) -> Result<FiniteLamination> {
        FiniteLamination::new(self.leaves.iter().chain(other.leaves.iter()).cloned())
    }
}

/// Outcome of a rainbow search at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RainbowOutcome {
    /// The point is an endpoint of this leaf.
    Endpoint(Leaf),
    /// A properly nested chain of the requested depth around the point,
    /// outermost first.
    Rainbow(Vec<OpenInterval>),
    /// Neither witness at this depth; carries the longest chain found.
    Inconclusive(Vec<OpenInterval>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsolationOutcome {
    NoApproach,
    /// Strictly ascending intervals inside the queried one.
    Approach(Vec<OpenInterval>),
}

/// Longest chain under proper nesting of closures, outermost first.
fn longest_proper_chain(items: &[OpenInterval]) -> Result<Vec<OpenInterval>> {
    longest_chain_by(items, |a, b| a.closure_subset_of(b))
}

/// Longest chain under strict inclusion, outermost first.
fn longest_inclusion_chain(items: &[OpenInterval]) -> Result<Vec<OpenInterval>> {
    longest_chain_by(items, |a, b| Ok(a != b && a.subset_of(b)?))
}

fn longest_chain_by(
    items: &[OpenInterval],
    below: impl Fn(&OpenInterval, &OpenInterval) -> Result<bool>,
) -> Result<Vec<OpenInterval>> {
    let n = items.len();
    // best[i] = longest chain starting at i and descending
    let mut edges = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && below(&items[j], &items[i])? {
                edges[i].push(j);
            }
        }
    }
    let mut best: Vec<Option<usize>> = vec![None; n];
    let mut next: Vec<Option<usize>> = vec![None; n];
    fn solve(
        i: usize,
        edges: &[Vec<usize>],
        best: &mut Vec<Option<usize>>,
        next: &mut Vec<Option<usize>>,
    ) -> usize {
        if let Some(b) = best[i] {
            return b;
        }
        let mut len = 1;
        for &j in &edges[i] {
            let cand = 1 + solve(j, edges, best, next);
            if cand > len || (cand == len && next[i].is_none()) {
                len = cand;
                next[i] = Some(j);
            }
        }
        best[i] = Some(len);
        len
    }
    let mut start = None;
    let mut start_len = 0;
    for i in 0..n {
        let l = solve(i, &edges, &mut best, &mut next);
        if l > start_len {
            start_len = l;
            start = Some(i);
        }
    }
    let mut chain = Vec::new();
    let mut cur = start;
    while let Some(i) = cur {
        chain.push(items[i].clone());
        cur = next[i];
    }
    Ok(chain)
}

/// Sorts a family known to be totally ordered by inclusion, outermost
/// first.
fn sort_by_inclusion(items: &mut [OpenInterval]) -> Result<()> {
    // insertion sort with the exact subset predicate
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 && items[j - 1].subset_of(&items[j])? && items[j - 1] != items[j] {
            items.swap(j - 1, j);
            j -= 1;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// gaps
// ---------------------------------------------------------------------------

/// A gap: finitely many pairwise disjoint intervals such that every leaf
/// of the ambient lamination lies on one of them.  The vertex set is the
/// complement of the union of the sides.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Gap {
    // sorted cyclically by start point
    sides: Vec<OpenInterval>,
}

impl fmt::Debug for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gap{:?}", self.sides)
    }
}

/// The complement of the sides of a gap: isolated points plus closed arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    pub points: Vec<CirclePoint>,
    /// Closed arcs `[a, b]` with `a != b`.
    pub arcs: Vec<(CirclePoint, CirclePoint)>,
}

impl Gap {
    /// Builds a gap from pairwise disjoint sides (checked).
    pub fn from_sides(mut sides: Vec<OpenInterval>) -> Result<Gap> {
        if sides.is_empty() {
            return Err(Error::DegenerateInterval);
        }
        sides.sort();
        sides.dedup();
        for i in 0..sides.len() {
            for j in (i + 1)..sides.len() {
                if !sides[i].disjoint_from(&sides[j])? {
                    return Err(Error::LinkedLeaves);
                }
            }
        }
        // cyclic order by start point
        sides.sort_by(|a, b| {
            a.start()
                .linear_cmp(b.start())
                .expect("sides share a model")
        });
        Ok(Gap { sides })
    }

    pub fn sides(&self) -> &[OpenInterval] {
        &self.sides
    }

    pub fn model(&self) -> Model {
        self.sides[0].model()
    }

    /// `{I, I*}` gaps correspond to single leaves.
    pub fn is_leaf_gap(&self) -> bool {
        self.sides.len() == 2 && self.sides[0] == self.sides[1].dual()
    }

    /// The complement of the union of the sides, split into isolated
    /// points and honest closed arcs.
    pub fn vertex_set(&self) -> VertexSet {
        let n = self.sides.len();
        let mut points = Vec::new();
        let mut arcs = Vec::new();
        for i in 0..n {
            let end = self.sides[i].end().clone();
            let next_start = self.sides[(i + 1) % n].start().clone();
            if end == next_start {
                points.push(end);
            } else {
                arcs.push((end, next_start));
            }
        }
        points.sort();
        VertexSet { points, arcs }
    }

    /// The vertex list when the gap is an ideal polygon (finite vertex
    /// set), sorted by position.
    pub fn polygon_vertices(&self) -> Option<Vec<CirclePoint>> {
        let vs = self.vertex_set();
        if vs.arcs.is_empty() {
            Some(vs.points)
        } else {
            None
        }
    }

    /// Checks the gap conditions against a lamination: sides pairwise
    /// disjoint (structural) and every leaf lying on some side.
    pub fn valid_for(&self, lam: &FiniteLamination) -> Result<bool> {
        for l in lam.leaves() {
            let mut ok = false;
            for s in &self.sides {
                if lies_on(l, s)? != LiesOn::No {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image of the gap under a homeomorphism.
    pub fn image(&self, g: &Homeo) -> Result<Gap> {
        let mut sides = Vec::with_capacity(self.sides.len());
        for s in &self.sides {
            sides.push(g.apply_interval(s)?);
        }
        Gap::from_sides(sides)
    }
}

// ---------------------------------------------------------------------------
// convergence evidence
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    Ascending,
    Descending,
}

/// Decides whether a finite leaf sequence, read as an eventually
/// monotone sequence of intervals, is consistent with convergence to
/// `J` in the sandwich sense (`J` inside the limit inferior, limit
/// superior inside the closure of `J`).  The dual statement holds by
/// symmetry.  Errors when no orientation of the leaves has a monotone
/// tail of length at least 2 (a single leaf is allowed).
pub fn converge_check(seq: &[Leaf], j: &OpenInterval) -> Result<bool> {
    if seq.is_empty() {
        return Err(Error::DegenerateInterval);
    }
    if seq.len() == 1 {
        let i = seq[0].interval();
        let id = i.dual();
        return Ok(i == *j || id == *j);
    }
    for start in 0..=(seq.len() - 2) {
        for dir in [Monotonicity::Ascending, Monotonicity::Descending] {
            for first_dual in [false, true] {
                if let Some(tail) = orient_monotone(&seq[start..], dir, first_dual) {
                    return Ok(match dir {
                        // every term must sit inside the closure of J
                        Monotonicity::Ascending => all_subset(&tail, j)?,
                        // every term must contain J
                        Monotonicity::Descending => {
                            let mut ok = true;
                            for t in &tail {
                                if !j.subset_of(t)? {
                                    ok = false;
                                    break;
                                }
                            }
                            ok
                        }
                    });
                }
            }
        }
    }
    Err(Error::NotMonotone)
}

fn all_subset(tail: &[OpenInterval], j: &OpenInterval) -> Result<bool> {
    for t in tail {
        if !t.subset_of(j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn orient_monotone(
    seq: &[Leaf],
    dir: Monotonicity,
    first_dual: bool,
) -> Option<Vec<OpenInterval>> {
    let mut out: Vec<OpenInterval> = Vec::with_capacity(seq.len());
    let first = if first_dual {
        seq[0].interval().dual()
    } else {
        seq[0].interval()
    };
    out.push(first);
    for l in &seq[1..] {
        let prev = out.last().unwrap();
        let mut chosen = None;
        for cand in [l.interval(), l.interval().dual()] {
            let ok = match dir {
                Monotonicity::Ascending => prev.subset_of(&cand).ok()?,
                Monotonicity::Descending => cand.subset_of(prev).ok()?,
            };
            if ok {
                chosen = Some(cand);
                break;
            }
        }
        out.push(chosen?);
    }
    Some(out)
}

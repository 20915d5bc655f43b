//! Finite planar order trees: cyclic orders on ends, the order-preserving
//! embedding of the end set into the circle, and the construction of an
//! unlinked leaf family from the singular vertices.

use crate::circle::{CirclePoint, Leaf};
use crate::lamination::FiniteLamination;
use crate::{Error, Result};
use num::{BigInt, BigRational};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexKind {
    Ordinary,
    Singular,
    Cataclysm,
}

/// A finite tree with a cyclic order (counterclockwise rotation) on the
/// edge germs at every vertex, and a linear order refining the cyclic
/// one at each cataclysm vertex.  Degree-1 vertices are the ends.
#[derive(Clone, Debug)]
pub struct PlanarOrderTree {
    kinds: Vec<VertexKind>,
    /// rotation[v] lists the neighbors of v in counterclockwise order
    rotation: Vec<Vec<usize>>,
    linear: BTreeMap<usize, Vec<usize>>,
}

impl PlanarOrderTree {
    pub fn new(
        kinds: Vec<VertexKind>,
        rotation: Vec<Vec<usize>>,
        linear: BTreeMap<usize, Vec<usize>>,
    ) -> Result<PlanarOrderTree> {
        let n = kinds.len();
        if n == 0 || rotation.len() != n {
            return Err(Error::BadTree);
        }
        let mut edge_count = 0usize;
        for (v, nbrs) in rotation.iter().enumerate() {
            let mut seen = std::collections::BTreeSet::new();
            for &u in nbrs {
                if u >= n || u == v || !seen.insert(u) {
                    return Err(Error::BadTree);
                }
                if !rotation[u].contains(&v) {
                    return Err(Error::BadTree);
                }
                edge_count += 1;
            }
        }
        if edge_count != 2 * (n - 1) {
            return Err(Error::BadTree);
        }
        // connectivity (acyclicity then follows from the edge count)
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &rotation[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::BadTree);
        }
        // linear orders: exactly at cataclysm vertices, and each must be
        // a cut of the cyclic order there
        for (v, kind) in kinds.iter().enumerate() {
            let has = linear.contains_key(&v);
            if (*kind == VertexKind::Cataclysm) != has {
                return Err(Error::BadTree);
            }
        }
        for (&v, order) in &linear {
            let rot = &rotation[v];
            if order.len() != rot.len() {
                return Err(Error::BadTree);
            }
            let Some(start) = rot.iter().position(|&u| u == order[0]) else {
                return Err(Error::BadTree);
            };
            for (i, &u) in order.iter().enumerate() {
                if rot[(start + i) % rot.len()] != u {
                    return Err(Error::BadTree);
                }
            }
        }
        Ok(PlanarOrderTree {
            kinds,
            rotation,
            linear,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn linear_order(&self, v: usize) -> Option<&[usize]> {
        self.linear.get(&v).map(|o| o.as_slice())
    }

    /// Degree-1 vertices, ascending.
    pub fn ends(&self) -> Vec<usize> {
        (0..self.kinds.len())
            .filter(|&v| self.rotation[v].len() == 1)
            .collect()
    }

    /// Vertex sequence from u to v inclusive.
    pub fn path(&self, u: usize, v: usize) -> Vec<usize> {
        let n = self.kinds.len();
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([u]);
        parent[u] = u;
        while let Some(w) = queue.pop_front() {
            if w == v {
                break;
            }
            for &x in &self.rotation[w] {
                if parent[x] == usize::MAX {
                    parent[x] = w;
                    queue.push_back(x);
                }
            }
        }
        let mut path = vec![v];
        let mut w = v;
        while w != u {
            w = parent[w];
            path.push(w);
        }
        path.reverse();
        path
    }

    /// The unique vertex lying on all three pairwise paths.
    pub fn median(&self, a: usize, b: usize, c: usize) -> usize {
        let pab = self.path(a, b);
        let pac = self.path(a, c);
        let mut m = a;
        for (x, y) in pab.iter().zip(pac.iter()) {
            if x == y {
                m = *x;
            } else {
                break;
            }
        }
        m
    }

    /// Cyclic orientation of three distinct ends, read from the rotation
    /// at their median vertex: +1 when the rays toward e1, e2, e3 leave
    /// the median in counterclockwise order.
    pub fn end_cyclic_order(&self, e1: usize, e2: usize, e3: usize) -> Result<i8> {
        if e1 == e2 || e1 == e3 || e2 == e3 {
            return Err(Error::BadTree);
        }
        let m = self.median(e1, e2, e3);
        let germ = |e: usize| -> usize { self.path(m, e)[1] };
        let rot = &self.rotation[m];
        let pos = |g: usize| rot.iter().position(|&u| u == g).unwrap();
        let (p1, p2, p3) = (pos(germ(e1)), pos(germ(e2)), pos(germ(e3)));
        let k = rot.len();
        let d2 = (p2 + k - p1) % k;
        let d3 = (p3 + k - p1) % k;
        Ok(if d2 < d3 { 1 } else { -1 })
    }

    /// Ends in the cyclic order induced by a contour traversal of the
    /// planar tree, starting from the given base vertex.  Any base gives
    /// the same cyclic sequence up to rotation.
    pub fn contour_ends_from(&self, base: usize) -> Vec<usize> {
        if self.kinds.len() == 1 {
            return vec![];
        }
        let start = (base, self.rotation[base][0]);
        let mut ends = Vec::new();
        if self.rotation[base].len() == 1 {
            ends.push(base);
        }
        let (mut from, mut at) = start;
        loop {
            if self.rotation[at].len() == 1 {
                ends.push(at);
            }
            // leave through the counterclockwise successor of the
            // arrival germ
            let rot = &self.rotation[at];
            let i = rot.iter().position(|&u| u == from).unwrap();
            let next = rot[(i + 1) % rot.len()];
            from = at;
            at = next;
            if (from, at) == start {
                break;
            }
        }
        // the base end, if any, was recorded once up front; the
        // traversal revisits every other vertex germ exactly once, so
        // deduplicate nothing but drop a duplicate base visit
        if self.rotation[base].len() == 1 {
            ends.truncate(self.ends().len());
        }
        ends
    }

    /// Cyclic orientation of three ends read from the contour sequence
    /// based at `base`; an independent route to `end_cyclic_order`.
    pub fn end_cyclic_order_from(&self, base: usize, e1: usize, e2: usize, e3: usize) -> Result<i8> {
        if e1 == e2 || e1 == e3 || e2 == e3 {
            return Err(Error::BadTree);
        }
        let contour = self.contour_ends_from(base);
        let pos = |e: usize| contour.iter().position(|&u| u == e).unwrap();
        let (p1, p2, p3) = (pos(e1), pos(e2), pos(e3));
        let k = contour.len();
        let d2 = (p2 + k - p1) % k;
        let d3 = (p3 + k - p1) % k;
        Ok(if d2 < d3 { 1 } else { -1 })
    }

    /// Order-preserving embedding of the ends into the circle: the i-th
    /// end of the contour (started at the smallest-id end) goes to
    /// angle i/m.
    pub fn tree_to_circle(&self) -> Result<BTreeMap<usize, CirclePoint>> {
        let ends = self.ends();
        if ends.len() < 3 {
            return Err(Error::BadTree);
        }
        let contour = self.contour_ends_from(ends[0]);
        let m = contour.len() as i64;
        Ok(contour
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, CirclePoint::angle_i(i as i64, m)))
            .collect())
    }

    /// The ideal-polygon leaf family of the singular vertices: for each
    /// singular vertex of degree n >= 3, one separating point between
    /// each pair of consecutive end clusters, joined cyclically into n
    /// leaves.  The separating point for vertex s in the angular gap
    /// between consecutive ends (A, B) sits at fraction k/(L+1) across
    /// the gap, where the path from A to B has L interior vertices and s
    /// is the k-th; this keeps separators of different singular vertices
    /// sharing a gap distinct and correctly ordered.
    pub fn lamination_from_tree(&self) -> Result<FiniteLamination> {
        let singular: Vec<usize> = (0..self.kinds.len())
            .filter(|&v| self.kinds[v] == VertexKind::Singular && self.degree(v) >= 3)
            .collect();
        if singular.is_empty() {
            return Err(Error::EmptyLamination);
        }
        let ends = self.ends();
        let contour = self.contour_ends_from(ends[0]);
        let m = contour.len();
        if m < 3 {
            return Err(Error::BadTree);
        }
        let contour_index: BTreeMap<usize, usize> =
            contour.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let angle = |i: usize| BigRational::new(BigInt::from(i as i64), BigInt::from(m as i64));
        let mut leaves = Vec::new();
        for &s in &singular {
            // ends reached through each germ of s, as contour indices
            let clusters: Vec<Vec<usize>> = self
                .rotation[s]
                .iter()
                .map(|&g| self.subtree_ends(s, g).iter().map(|e| contour_index[e]).collect())
                .collect();
            let mut separators: Vec<BigRational> = Vec::with_capacity(clusters.len());
            for cluster in &clusters {
                // the cluster is a contiguous cyclic arc; its last index
                // is the one whose successor lies outside
                let &last = cluster
                    .iter()
                    .find(|&&i| !cluster.contains(&((i + 1) % m)))
                    .expect("proper cluster of a planar tree is a contiguous arc");
                let a = contour[last];
                let b = contour[(last + 1) % m];
                let path = self.path(a, b);
                let interior = &path[1..path.len() - 1];
                let k = interior.iter().position(|&v| v == s).expect(
                    "the singular vertex separates consecutive clusters",
                ) + 1;
                let frac = BigRational::new(
                    BigInt::from(k as i64),
                    BigInt::from(interior.len() as i64 + 1),
                );
                let width = BigRational::new(BigInt::from(1), BigInt::from(m as i64));
                separators.push(angle(last) + width * frac);
            }
            separators.sort();
            for i in 0..separators.len() {
                let j = (i + 1) % separators.len();
                leaves.push(Leaf::new(
                    CirclePoint::angle(separators[i].clone()),
                    CirclePoint::angle(separators[j].clone()),
                )?);
            }
        }
        let lam = FiniteLamination::new(leaves)?;
        if !lam.is_valid()? {
            return Err(Error::LinkedLeaves);
        }
        Ok(lam)
    }

    /// Ends of the component of `tree - v` containing the neighbor `g`.
    fn subtree_ends(&self, v: usize, g: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(v, g)];
        while let Some((from, at)) = stack.pop() {
            if self.rotation[at].len() == 1 {
                out.push(at);
                continue;
            }
            for &u in &self.rotation[at] {
                if u != from {
                    stack.push((at, u));
                }
            }
        }
        out
    }
}

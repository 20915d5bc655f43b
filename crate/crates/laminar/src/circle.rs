//! Points on the circle, the circular order, open intervals and leaves.
//!
//! Two exact coordinate models are supported and never mixed inside one
//! structure: rational angles in `[0,1)` (full turns), and the projective
//! line `Q union {inf}` extended by quadratic surds.  The circular order
//! on three points is the basic primitive; intervals, duals, the
//! "lies on" relation and linking of leaves are all expressed through it.

use crate::surd::{rat_to_f64, QuadExt};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Model {
    Angle,
    Projective,
}

/// A point of the projective model: the real line plus a point at infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ProjPoint {
    Finite(QuadExt),
    Infinity,
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &ProjPoint) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &ProjPoint) -> Ordering {
        use ProjPoint::*;
        match (self, other) {
            (Infinity, Infinity) => Ordering::Equal,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Finite(_), Infinity) => Ordering::Less,
            (Finite(x), Finite(y)) => x.cmp(y),
        }
    }
}

/// A point on the circle in one of the two models.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CirclePoint {
    /// Rational angle measured in turns, canonically in `[0,1)`.
    Angle(BigRational),
    /// Point of `R union {inf}` on the boundary circle of the upper half
    /// plane, traversed with increasing reals and closing up through `inf`.
    Projective(ProjPoint),
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl CirclePoint {
    /// Angle-model point; the value is reduced modulo 1.
    pub fn angle(q: BigRational) -> CirclePoint {
        let one = BigRational::one();
        let mut q = q;
        if q < BigRational::zero() || q >= one {
            let floor = q.floor();
            q -= floor;
        }
        CirclePoint::Angle(q)
    }

    pub fn angle_i(n: i64, d: i64) -> CirclePoint {
        CirclePoint::angle(rational(n, d))
    }

    pub fn projective(q: BigRational) -> CirclePoint {
        CirclePoint::Projective(ProjPoint::Finite(QuadExt::from_rational(q)))
    }

    pub fn projective_i(n: i64, d: i64) -> CirclePoint {
        CirclePoint::projective(rational(n, d))
    }

    pub fn infinity() -> CirclePoint {
        CirclePoint::Projective(ProjPoint::Infinity)
    }

    pub fn surd(x: QuadExt) -> CirclePoint {
        CirclePoint::Projective(ProjPoint::Finite(x))
    }

    pub fn model(&self) -> Model {
        match self {
            CirclePoint::Angle(_) => Model::Angle,
            CirclePoint::Projective(_) => Model::Projective,
        }
    }

    /// Order along the defining line of the model (with `inf` on top);
    /// errors on mixed models.
    pub fn linear_cmp(&self, other: &CirclePoint) -> Result<Ordering> {
        match (self, other) {
            (CirclePoint::Angle(x), CirclePoint::Angle(y)) => Ok(x.cmp(y)),
            (CirclePoint::Projective(x), CirclePoint::Projective(y)) => Ok(x.cmp(y)),
            _ => Err(Error::ModelMismatch),
        }
    }

    /// Angle in turns used for rendering; floats never feed back into the
    /// exact layer.
    pub fn display_turns(&self) -> f64 {
        match self {
            CirclePoint::Angle(q) => rat_to_f64(q),
            CirclePoint::Projective(ProjPoint::Infinity) => 0.75,
            CirclePoint::Projective(ProjPoint::Finite(x)) => {
                // monotone chart R -> (-1/4, 3/4) turns
                let t = x.to_f64().atan() / std::f64::consts::PI;
                ((t + 0.25) + 1.0) % 1.0
            }
        }
    }
}

impl fmt::Debug for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::Angle(q) => write!(f, "{}", q),
            CirclePoint::Projective(ProjPoint::Infinity) => write!(f, "inf"),
            CirclePoint::Projective(ProjPoint::Finite(x)) => write!(f, "{:?}", x),
        }
    }
}

/// The circular order: `+1` when `(a,b,c)` is positively oriented, `-1`
/// when negatively oriented, `0` exactly on degenerate triples.
pub fn circular_order(a: &CirclePoint, b: &CirclePoint, c: &CirclePoint) -> Result<i8> {
    if a == b || b == c || a == c {
        // model mismatch still has to be reported on degenerate input
        a.linear_cmp(b)?;
        b.linear_cmp(c)?;
        return Ok(0);
    }
    let ab = a.linear_cmp(b)? == Ordering::Less;
    let bc = b.linear_cmp(c)? == Ordering::Less;
    let ca = c.linear_cmp(a)? == Ordering::Less;
    // positively oriented iff the points ascend cyclically
    let ascents = [ab, bc, ca].iter().filter(|&&x| x).count();
    Ok(if ascents == 2 { 1 } else { -1 })
}

/// Result of forming an interval from an ordered pair of points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Interval {
    Nondegenerate(OpenInterval),
    /// `S^1` minus one point; never an element of a lamination.
    Degenerate(CirclePoint),
}

pub fn interval(u: CirclePoint, v: CirclePoint) -> Result<Interval> {
    if u.model() != v.model() {
        return Err(Error::ModelMismatch);
    }
    if u == v {
        Ok(Interval::Degenerate(u))
    } else {
        Ok(Interval::Nondegenerate(OpenInterval { u, v }))
    }
}

/// The nondegenerate open interval `(u, v)`: all `p` with positively
/// oriented `(u, p, v)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpenInterval {
    u: CirclePoint,
    v: CirclePoint,
}

impl fmt::Debug for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.u, self.v)
    }
}

impl OpenInterval {
    pub fn new(u: CirclePoint, v: CirclePoint) -> Result<OpenInterval> {
        match interval(u, v)? {
            Interval::Nondegenerate(i) => Ok(i),
            Interval::Degenerate(_) => Err(Error::DegenerateInterval),
        }
    }

    pub fn start(&self) -> &CirclePoint {
        &self.u
    }

    pub fn end(&self) -> &CirclePoint {
        &self.v
    }

    pub fn model(&self) -> Model {
        self.u.model()
    }

    pub fn contains(&self, p: &CirclePoint) -> Result<bool> {
        Ok(circular_order(&self.u, p, &self.v)? == 1)
    }

    pub fn closure_contains(&self, p: &CirclePoint) -> Result<bool> {
        Ok(p == &self.u || p == &self.v || self.contains(p)?)
    }

    /// `(u,v)* = (v,u)`, the complementary open interval.
    pub fn dual(&self) -> OpenInterval {
        OpenInterval {
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }

    /// Whether `self` is a subset of `other`, endpoints handled exactly.
    pub fn subset_of(&self, other: &OpenInterval) -> Result<bool> {
        if self == other {
            return Ok(true);
        }
        let (a, b) = (&self.u, &self.v);
        let (u, v) = (&other.u, &other.v);
        Ok(in_closed_arc(a, u, v)?
            && in_closed_arc(b, u, v)?
            && a != v
            && b != u
            && in_closed_arc(b, a, v)?)
    }

    /// Whether the closure of `self` is contained in the open `other`.
    pub fn closure_subset_of(&self, other: &OpenInterval) -> Result<bool> {
        Ok(other.contains(&self.u)? && other.contains(&self.v)? && self.subset_of(other)?)
    }

    pub fn disjoint_from(&self, other: &OpenInterval) -> Result<bool> {
        if self == other {
            return Ok(false);
        }
        Ok(!other.contains(&self.u)?
            && !other.contains(&self.v)?
            && !self.contains(&other.u)?
            && !self.contains(&other.v)?)
    }
}

/// Membership of `p` in the closed arc from `x` counterclockwise to `y`.
fn in_closed_arc(p: &CirclePoint, x: &CirclePoint, y: &CirclePoint) -> Result<bool> {
    if p == x || p == y {
        // still detect mixed models
        p.linear_cmp(x)?;
        return Ok(true);
    }
    if x == y {
        return Ok(false);
    }
    Ok(circular_order(x, p, y)? == 1)
}

/// A leaf: an unordered pair of distinct points, i.e. the pair
/// `{I, I*}` of complementary intervals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Leaf {
    // canonically ordered by the linear order of the model
    a: CirclePoint,
    b: CirclePoint,
}

impl fmt::Debug for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "leaf({:?},{:?})", self.a, self.b)
    }
}

impl Leaf {
    pub fn new(u: CirclePoint, v: CirclePoint) -> Result<Leaf> {
        if u.model() != v.model() {
            return Err(Error::ModelMismatch);
        }
        if u == v {
            return Err(Error::DegenerateInterval);
        }
        match u.linear_cmp(&v)? {
            Ordering::Less => Ok(Leaf { a: u, b: v }),
            _ => Ok(Leaf { a: v, b: u }),
        }
    }

    pub fn of(i: &OpenInterval) -> Leaf {
        Leaf::new(i.u.clone(), i.v.clone()).expect("interval endpoints are distinct")
    }

    pub fn endpoints(&self) -> (&CirclePoint, &CirclePoint) {
        (&self.a, &self.b)
    }

    pub fn model(&self) -> Model {
        self.a.model()
    }

    /// One of the two complementary intervals; the other is its dual.
    pub fn interval(&self) -> OpenInterval {
        OpenInterval {
            u: self.a.clone(),
            v: self.b.clone(),
        }
    }

    pub fn has_endpoint(&self, p: &CirclePoint) -> bool {
        &self.a == p || &self.b == p
    }
}

/// How a leaf sits relative to an interval.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LiesOn {
    No,
    /// Some element of the leaf is contained in the interval.
    Lies,
    /// Some element has its closure contained in the open interval.
    Properly,
}

/// The leaf `l` lies on `j` when `I` or `I*` is a subset of `j`.
pub fn lies_on(l: &Leaf, j: &OpenInterval) -> Result<LiesOn> {
    let i = l.interval();
    let id = i.dual();
    if i.closure_subset_of(j)? || id.closure_subset_of(j)? {
        return Ok(LiesOn::Properly);
    }
    if i.subset_of(j)? || id.subset_of(j)? {
        return Ok(LiesOn::Lies);
    }
    Ok(LiesOn::No)
}

/// Two leaves are unlinked when one lies on an element of the other;
/// sharing endpoints counts as unlinked.
pub fn unlinked(l1: &Leaf, l2: &Leaf) -> Result<bool> {
    let i2 = l2.interval();
    Ok(lies_on(l1, &i2)? != LiesOn::No || lies_on(l1, &i2.dual())? != LiesOn::No)
}

/// Witness that two leaves are linked: a pair of endpoints of the second
/// leaf strictly separating the endpoints of the first.
pub fn linking_witness(l1: &Leaf, l2: &Leaf) -> Result<Option<(CirclePoint, CirclePoint)>> {
    if unlinked(l1, l2)? {
        return Ok(None);
    }
    Ok(Some((l2.a.clone(), l2.b.clone())))
}

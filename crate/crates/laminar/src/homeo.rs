//! Orientation-preserving circle homeomorphisms in two exact backends.
//!
//! The piecewise linear backend acts on the angle model: a map is stored
//! as its breakpoints `(x, y)` with rational coordinates, kept in a
//! canonical lifted form (redundant breakpoints removed, rotations
//! anchored at 0).  The Moebius backend acts on the projective model as
//! an integer matrix with positive determinant, canonical up to scalar.
//! Fixed points are computed exactly; Moebius fixed points may be
//! quadratic surds.

use crate::circle::{CirclePoint, Leaf, Model, OpenInterval, ProjPoint};
use crate::surd::QuadExt;
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::fmt;

/// The exact fixed point set of a circle homeomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FixedPointSet {
    Empty,
    /// Sorted by the linear order of the model.
    Finite(Vec<CirclePoint>),
    WholeCircle,
}

impl FixedPointSet {
    pub fn points(&self) -> &[CirclePoint] {
        match self {
            FixedPointSet::Finite(v) => v,
            _ => &[],
        }
    }

    pub fn count(&self) -> Option<usize> {
        match self {
            FixedPointSet::Empty => Some(0),
            FixedPointSet::Finite(v) => Some(v.len()),
            FixedPointSet::WholeCircle => None,
        }
    }

    pub fn contains(&self, p: &CirclePoint) -> bool {
        match self {
            FixedPointSet::Empty => false,
            FixedPointSet::Finite(v) => v.contains(p),
            FixedPointSet::WholeCircle => true,
        }
    }
}

// ---------------------------------------------------------------------------
// piecewise linear maps on rational angles
// ---------------------------------------------------------------------------

/// A piecewise linear orientation-preserving circle homeomorphism with
/// rational breakpoints, in canonical form.
///
/// Breakpoints are stored lifted: `x` strictly increasing in `[0,1)`,
/// `y` the lift with `y[0]` in `[0,1)` and total rise 1 around the
/// circle.  Maps with a non-trivial arc of fixed points (a slope-1
/// piece on the diagonal) are rejected; the identity is the rotation
/// by zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PLHomeo {
    // canonical: no breakpoint has equal slopes on both sides, except the
    // single anchor breakpoint (0, c) of a rotation
    points: Vec<(BigRational, BigRational)>,
}

impl fmt::Debug for PLHomeo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pl")?;
        for (x, y) in &self.points {
            write!(f, " ({},{})", x, y)?;
        }
        Ok(())
    }
}

fn frac(q: &BigRational) -> BigRational {
    q - q.floor()
}

impl PLHomeo {
    /// Builds the map through the given breakpoints (coordinates are
    /// reduced modulo 1).  The `y` values must wind once around the
    /// circle in the same direction as `x`.
    pub fn new(pairs: &[(BigRational, BigRational)]) -> Result<PLHomeo> {
        if pairs.is_empty() {
            return Err(Error::InvalidPiecewiseMap);
        }
        let mut pts: Vec<(BigRational, BigRational)> =
            pairs.iter().map(|(x, y)| (frac(x), frac(y))).collect();
        pts.sort();
        pts.dedup();
        for w in pts.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidPiecewiseMap);
            }
        }
        // lift the y values: an orientation-preserving circle map has
        // exactly one descent in the cyclic sequence of y values
        let n = pts.len();
        let mut lift = Vec::with_capacity(n);
        let mut bumped = false;
        lift.push(pts[0].1.clone());
        for i in 1..n {
            let prev = &pts[i - 1].1;
            let cur = &pts[i].1;
            if cur > prev {
                if bumped {
                    lift.push(&pts[i].1 + BigRational::one());
                } else {
                    lift.push(pts[i].1.clone());
                }
            } else {
                if bumped {
                    return Err(Error::InvalidPiecewiseMap);
                }
                bumped = true;
                lift.push(&pts[i].1 + BigRational::one());
            }
        }
        // strict monotonicity including the wrap segment
        for i in 1..n {
            if lift[i] <= lift[i - 1] {
                return Err(Error::InvalidPiecewiseMap);
            }
        }
        if n > 1 && lift[n - 1] >= &pts[0].1 + BigRational::one() {
            return Err(Error::InvalidPiecewiseMap);
        }
        let points: Vec<_> = pts
            .into_iter()
            .zip(lift)
            .map(|((x, _), y)| (x, y))
            .collect();
        PLHomeo::canonicalize(points)
    }

    fn canonicalize(points: Vec<(BigRational, BigRational)>) -> Result<PLHomeo> {
        let n = points.len();
        let one = BigRational::one();
        // periodic extension for slope computations
        let at = |i: isize| -> (BigRational, BigRational) {
            let m = n as isize;
            let k = i.div_euclid(m);
            let j = i.rem_euclid(m) as usize;
            let shift = BigRational::from_integer(BigInt::from(k));
            (&points[j].0 + &shift, &points[j].1 + &shift)
        };
        let slope = |i: isize| -> BigRational {
            let (x1, y1) = at(i);
            let (x2, y2) = at(i + 1);
            (y2 - y1) / (x2 - x1)
        };
        let mut kept = Vec::new();
        for i in 0..n as isize {
            if slope(i - 1) != slope(i) {
                kept.push(points[i as usize].clone());
            }
        }
        if kept.is_empty() {
            // a pure rotation; anchor it at x = 0
            let (x0, y0) = &points[0];
            let c = frac(&(y0 - x0));
            return Ok(PLHomeo {
                points: vec![(BigRational::zero(), c)],
            });
        }
        // re-normalize the lift so the first y is in [0,1)
        let base = kept[0].1.floor();
        for (_, y) in kept.iter_mut() {
            *y -= &base;
        }
        let map = PLHomeo { points: kept };
        // reject slope-1 pieces lying on the diagonal (arcs of fixed points)
        if map.points.len() > 1 {
            let m = map.points.len();
            for i in 0..m {
                let (x1, y1) = map.points[i].clone();
                let (x2, y2) = if i + 1 < m {
                    map.points[i + 1].clone()
                } else {
                    (&map.points[0].0 + &one, &map.points[0].1 + &one)
                };
                let s = (&y2 - &y1) / (&x2 - &x1);
                if s == one && (&y1 - &x1).is_integer() {
                    return Err(Error::FixedArc);
                }
            }
        }
        Ok(map)
    }

    pub fn rotation(by: BigRational) -> PLHomeo {
        PLHomeo {
            points: vec![(BigRational::zero(), frac(&by))],
        }
    }

    pub fn identity() -> PLHomeo {
        PLHomeo::rotation(BigRational::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.points.len() == 1 && self.points[0].0.is_zero() && self.points[0].1.is_zero()
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = (BigRational, BigRational)> + '_ {
        self.points.iter().map(|(x, y)| (x.clone(), frac(y)))
    }

    /// Exact evaluation at an angle in `[0,1)`.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let one = BigRational::one();
        let n = self.points.len();
        let mut t = frac(t);
        if t < self.points[0].0 {
            t += &one;
        }
        // segment index: last breakpoint with x <= t
        let mut i = n - 1;
        for j in 0..n {
            let next_x = if j + 1 < n {
                self.points[j + 1].0.clone()
            } else {
                &self.points[0].0 + &one
            };
            if t < next_x {
                i = j;
                break;
            }
        }
        let (x1, y1) = self.points[i].clone();
        let (x2, y2) = if i + 1 < n {
            self.points[i + 1].clone()
        } else {
            (&self.points[0].0 + &one, &self.points[0].1 + &one)
        };
        let s = (&y2 - &y1) / (&x2 - &x1);
        frac(&(y1 + s * (t - x1)))
    }

    /// `self` after `other`: the map `t -> self(other(t))`.
    pub fn compose(&self, other: &PLHomeo) -> PLHomeo {
        let inv = other.inverse();
        let mut xs: Vec<BigRational> = other.points.iter().map(|(x, _)| x.clone()).collect();
        for (x, _) in &self.points {
            xs.push(inv.eval(&frac(x)));
        }
        xs.sort();
        xs.dedup();
        let pairs: Vec<(BigRational, BigRational)> = xs
            .into_iter()
            .map(|x| {
                let y = self.eval(&other.eval(&x));
                (x, y)
            })
            .collect();
        PLHomeo::new(&pairs).expect("composite of circle homeomorphisms is one")
    }

    pub fn inverse(&self) -> PLHomeo {
        let pairs: Vec<(BigRational, BigRational)> = self
            .points
            .iter()
            .map(|(x, y)| (frac(y), x.clone()))
            .collect();
        PLHomeo::new(&pairs).expect("inverse of a circle homeomorphism is one")
    }

    /// All fixed points, found by solving each linear piece against the
    /// diagonal.  Slope-1 diagonal pieces are excluded by construction.
    pub fn fixed_points(&self) -> FixedPointSet {
        if self.is_identity() {
            return FixedPointSet::WholeCircle;
        }
        let one = BigRational::one();
        let n = self.points.len();
        let mut found: Vec<BigRational> = Vec::new();
        for i in 0..n {
            let (x1, y1) = self.points[i].clone();
            let (x2, y2) = if i + 1 < n {
                self.points[i + 1].clone()
            } else {
                (&self.points[0].0 + &one, &self.points[0].1 + &one)
            };
            let s = (&y2 - &y1) / (&x2 - &x1);
            // g(t) - t on the segment runs linearly from h1 to h2
            let h1 = &y1 - &x1;
            let h2 = &y2 - &x2;
            if s == one {
                // parallel to the diagonal and off it: no solutions
                continue;
            }
            let lo = h1.clone().min(h2.clone());
            let hi = h1.clone().max(h2.clone());
            let mut k = lo.ceil().to_integer();
            while BigRational::from_integer(k.clone()) <= hi {
                let kq = BigRational::from_integer(k.clone());
                // y1 + s (t - x1) = t + k
                let t = (&kq - &h1) / (&s - &one) + &x1;
                if t >= x1 && t < x2 {
                    found.push(frac(&t));
                }
                k += BigInt::one();
            }
        }
        found.sort();
        found.dedup();
        if found.is_empty() {
            FixedPointSet::Empty
        } else {
            FixedPointSet::Finite(found.into_iter().map(CirclePoint::Angle).collect())
        }
    }
}

// ---------------------------------------------------------------------------
// Moebius maps on the projective line
// ---------------------------------------------------------------------------

/// Conjugacy type of a non-identity Moebius map, read off the trace.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MobiusClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// An integer matrix `(a b; c d)` with positive determinant acting on
/// `R union {inf}`, canonical up to positive scalar.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MobiusMap {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl fmt::Debug for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mobius ({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

impl MobiusMap {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<MobiusMap> {
        let det = &a * &d - &b * &c;
        if det <= BigInt::zero() {
            return Err(Error::NonPositiveDeterminant);
        }
        let mut g = a.gcd(&b).gcd(&c).gcd(&d);
        // scale so the first nonzero entry is positive
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|x| !x.is_zero())
            .expect("determinant is nonzero");
        if lead.is_negative() {
            g = -g;
        }
        Ok(MobiusMap {
            a: a / &g,
            b: b / &g,
            c: c / &g,
            d: d / &g,
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<MobiusMap> {
        MobiusMap::new(BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d))
    }

    pub fn identity() -> MobiusMap {
        MobiusMap::from_ints(1, 0, 0, 1).unwrap()
    }

    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let ar = BigRational::from_integer(self.a.clone());
        let br = BigRational::from_integer(self.b.clone());
        let cr = BigRational::from_integer(self.c.clone());
        let dr = BigRational::from_integer(self.d.clone());
        match p {
            ProjPoint::Infinity => {
                if self.c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(QuadExt::from_rational(ar / cr))
                }
            }
            ProjPoint::Finite(x) => {
                let num = x.scale(&ar).add_rational(&br);
                let den = x.scale(&cr).add_rational(&dr);
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(num.div(&den))
                }
            }
        }
    }

    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
        .expect("product of positive determinants is positive")
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
        .expect("adjugate preserves the determinant")
    }

    /// Trace classification of a non-identity map: compares `(a+d)^2`
    /// with `4 det`.
    pub fn classify(&self) -> Result<MobiusClass> {
        if self.is_identity() {
            return Err(Error::IdentityElement);
        }
        let tr2 = {
            let t = &self.a + &self.d;
            &t * &t
        };
        let four_det = BigInt::from(4) * self.det();
        Ok(match tr2.cmp(&four_det) {
            std::cmp::Ordering::Less => MobiusClass::Elliptic,
            std::cmp::Ordering::Equal => MobiusClass::Parabolic,
            std::cmp::Ordering::Greater => MobiusClass::Hyperbolic,
        })
    }

    /// Fixed points: the roots of `c x^2 + (d - a) x - b`, plus `inf`
    /// when `c == 0`.  Irrational roots are exact quadratic surds.
    pub fn fixed_points(&self) -> FixedPointSet {
        if self.is_identity() {
            return FixedPointSet::WholeCircle;
        }
        let mut pts: Vec<ProjPoint> = Vec::new();
        if self.c.is_zero() {
            pts.push(ProjPoint::Infinity);
            if self.a != self.d {
                let x = BigRational::new(self.b.clone(), &self.d - &self.a);
                pts.push(ProjPoint::Finite(QuadExt::from_rational(x)));
            }
        } else {
            let disc = {
                let s = &self.d - &self.a;
                &s * &s + BigInt::from(4) * &self.b * &self.c
            };
            if disc.is_positive() {
                let two_c = BigRational::from_integer(BigInt::from(2) * &self.c);
                let shift = BigRational::from_integer(&self.a - &self.d);
                let disc_u: u64 = {
                    use num::ToPrimitive;
                    disc.to_u64().expect("discriminant fits in u64 for supported inputs")
                };
                let root = QuadExt::sqrt(disc_u);
                let base = QuadExt::from_rational(shift);
                for r in [root.clone(), root.neg()] {
                    let x = base.add(&r).scale(&two_c.recip());
                    pts.push(ProjPoint::Finite(x));
                }
                pts.dedup();
            } else if disc.is_zero() {
                let x = BigRational::new(&self.a - &self.d, BigInt::from(2) * &self.c);
                pts.push(ProjPoint::Finite(QuadExt::from_rational(x)));
            }
        }
        if pts.is_empty() {
            return FixedPointSet::Empty;
        }
        pts.sort();
        pts.dedup();
        FixedPointSet::Finite(pts.into_iter().map(CirclePoint::Projective).collect())
    }
}

// ---------------------------------------------------------------------------
// unified handle
// ---------------------------------------------------------------------------

/// A circle homeomorphism in either backend.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Homeo {
    PL(PLHomeo),
    Mobius(MobiusMap),
}

impl Homeo {
    pub fn model(&self) -> Model {
        match self {
            Homeo::PL(_) => Model::Angle,
            Homeo::Mobius(_) => Model::Projective,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Homeo::PL(g) => g.is_identity(),
            Homeo::Mobius(g) => g.is_identity(),
        }
    }

    pub fn apply(&self, p: &CirclePoint) -> Result<CirclePoint> {
        match (self, p) {
            (Homeo::PL(g), CirclePoint::Angle(t)) => Ok(CirclePoint::Angle(g.eval(t))),
            (Homeo::Mobius(g), CirclePoint::Projective(x)) => {
                Ok(CirclePoint::Projective(g.apply(x)))
            }
            _ => Err(Error::BackendMismatch),
        }
    }

    /// Image of an open interval; orientation preservation sends
    /// `(u,v)` to `(g(u), g(v))`.
    pub fn apply_interval(&self, i: &OpenInterval) -> Result<OpenInterval> {
        OpenInterval::new(self.apply(i.start())?, self.apply(i.end())?)
    }

    pub fn apply_leaf(&self, l: &Leaf) -> Result<Leaf> {
        let (a, b) = l.endpoints();
        Leaf::new(self.apply(a)?, self.apply(b)?)
    }

    pub fn compose(&self, other: &Homeo) -> Result<Homeo> {
        match (self, other) {
            (Homeo::PL(g), Homeo::PL(h)) => Ok(Homeo::PL(g.compose(h))),
            (Homeo::Mobius(g), Homeo::Mobius(h)) => Ok(Homeo::Mobius(g.compose(h))),
            _ => Err(Error::BackendMismatch),
        }
    }

    pub fn inverse(&self) -> Homeo {
        match self {
            Homeo::PL(g) => Homeo::PL(g.inverse()),
            Homeo::Mobius(g) => Homeo::Mobius(g.inverse()),
        }
    }

    pub fn fixed_points(&self) -> FixedPointSet {
        match self {
            Homeo::PL(g) => g.fixed_points(),
            Homeo::Mobius(g) => g.fixed_points(),
        }
    }

    pub fn commutes_with(&self, other: &Homeo) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }
}

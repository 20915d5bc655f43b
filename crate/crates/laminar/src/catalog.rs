//! Worked examples: a free Fuchsian group with its invariant tessellation,
//! a finite rotation orbit, and nested attractor families for rainbow
//! experiments.

use crate::circle::{CirclePoint, Leaf, OpenInterval, ProjPoint};
use crate::group::{MarkedGroup, PingPongTable};
use crate::homeo::{FixedPointSet, Homeo, MobiusClass, MobiusMap, PLHomeo};
use crate::lamination::FiniteLamination;
use crate::surd::QuadExt;
use crate::{Error, Result};
use num::{BigInt, BigRational, One};

/// The Sanov subgroup `<(1 2; 0 1), (1 0; 2 1)>` of PSL(2,Z) — free of
/// rank 2 — together with the depth-limited orbit of the ideal
/// quadrilateral with vertices {-1, 0, 1, inf}.  Depth 0 gives the seed
/// quadrilateral alone.
pub fn sanov_example(depth: usize) -> Result<(MarkedGroup, FiniteLamination)> {
    let group = MarkedGroup::new(vec![
        ("a".into(), Homeo::Mobius(MobiusMap::from_ints(1, 2, 0, 1)?)),
        ("b".into(), Homeo::Mobius(MobiusMap::from_ints(1, 0, 2, 1)?)),
    ])?;
    let seed = FiniteLamination::new([
        Leaf::new(CirclePoint::projective_i(-1, 1), CirclePoint::projective_i(0, 1))?,
        Leaf::new(CirclePoint::projective_i(0, 1), CirclePoint::projective_i(1, 1))?,
        Leaf::new(CirclePoint::projective_i(1, 1), CirclePoint::infinity())?,
        Leaf::new(CirclePoint::infinity(), CirclePoint::projective_i(-1, 1))?,
    ])?;
    if depth == 0 {
        return Ok((group, seed));
    }
    let orbit = crate::group::orbit_lamination(&group, &seed, depth)?;
    if !orbit.is_invariant_so_far() {
        return Err(Error::LinkedLeaves);
    }
    Ok((group, orbit.lamination))
}

/// The standard ping-pong table for the Sanov pair: `|x| > 1` and
/// `|x| < 1`, each split at the sign of `x`.
pub fn sanov_pingpong() -> (MarkedGroup, PingPongTable) {
    let (group, _) = sanov_example(0).expect("sanov generators are valid");
    let p = |n: i64| CirclePoint::projective_i(n, 1);
    let table = PingPongTable {
        a_plus: OpenInterval::new(p(1), CirclePoint::infinity()).unwrap(),
        a_minus: OpenInterval::new(CirclePoint::infinity(), p(-1)).unwrap(),
        b_plus: OpenInterval::new(p(0), p(1)).unwrap(),
        b_minus: OpenInterval::new(p(-1), p(0)).unwrap(),
    };
    (group, table)
}

/// Rotation by 1/n acting on the inscribed ideal n-gon lamination with
/// vertices {k/n}; exactly invariant.
pub fn ideal_triangle_rotation(n: usize) -> Result<(MarkedGroup, FiniteLamination)> {
    if n < 3 {
        return Err(Error::BadDepth);
    }
    let n_i = n as i64;
    let group = MarkedGroup::new(vec![(
        "r".into(),
        Homeo::PL(PLHomeo::rotation(BigRational::new(
            BigInt::one(),
            BigInt::from(n_i),
        ))),
    )])?;
    let mut leaves = Vec::with_capacity(n);
    for k in 0..n_i {
        leaves.push(Leaf::new(
            CirclePoint::angle_i(k, n_i),
            CirclePoint::angle_i((k + 1) % n_i, n_i),
        )?);
    }
    Ok((group, FiniteLamination::new(leaves)?))
}

/// The forward orbit, up to the given depth, of a leaf separating the
/// two fixed points of a hyperbolic Mobius map: a nested family
/// accumulating on the attracting and repelling fixed points.  The seed
/// has rational endpoints, one strictly inside each complementary side
/// of the fixed pair, so neither fixed point is ever a leaf endpoint.
pub fn nested_attractor(g: &MobiusMap, depth: usize) -> Result<FiniteLamination> {
    if depth == 0 {
        return Err(Error::BadDepth);
    }
    if g.classify()? != MobiusClass::Hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    let fps = match g.fixed_points() {
        FixedPointSet::Finite(v) if v.len() == 2 => v,
        _ => return Err(Error::NotHyperbolic),
    };
    let side = OpenInterval::new(fps[0].clone(), fps[1].clone())?;
    let r0 = rational_inside(&side)?;
    let r1 = rational_inside(&side.dual())?;
    let seed = Leaf::new(r0, r1)?;
    let map = Homeo::Mobius(g.clone());
    let mut leaves = vec![seed.clone()];
    let mut current = seed;
    for _ in 1..depth {
        current = map.apply_leaf(&current)?;
        leaves.push(current.clone());
    }
    FiniteLamination::new(leaves)
}

/// Largest integer not exceeding a real quadratic number, computed
/// exactly (the float estimate is only a starting guess).
fn floor_quad(x: &QuadExt) -> BigInt {
    let mut n = BigInt::from(x.to_f64().floor() as i64);
    let as_quad = |n: &BigInt| QuadExt::from_rational(BigRational::from_integer(n.clone()));
    while &as_quad(&(&n + 1)) <= x {
        n += 1;
    }
    while &as_quad(&n) > x {
        n -= 1;
    }
    n
}

/// A rational point strictly inside an open interval of the projective
/// circle.
fn rational_inside(iv: &OpenInterval) -> Result<CirclePoint> {
    let proj = |p: &CirclePoint| match p {
        CirclePoint::Projective(q) => q.clone(),
        CirclePoint::Angle(_) => unreachable!("projective interval"),
    };
    let q = match (proj(iv.start()), proj(iv.end())) {
        (ProjPoint::Finite(u), ProjPoint::Finite(v)) => {
            if u < v {
                rational_between(&u, &v)
            } else {
                // wraps through infinity; anything above u works
                BigRational::from_integer(floor_quad(&u) + 1)
            }
        }
        (ProjPoint::Finite(u), ProjPoint::Infinity) => {
            BigRational::from_integer(floor_quad(&u) + 1)
        }
        (ProjPoint::Infinity, ProjPoint::Finite(v)) => {
            let f = floor_quad(&v);
            let fv = QuadExt::from_rational(BigRational::from_integer(f.clone()));
            BigRational::from_integer(if fv == v { f - 1 } else { f })
        }
        (ProjPoint::Infinity, ProjPoint::Infinity) => {
            return Err(Error::DegenerateInterval)
        }
    };
    let point = CirclePoint::projective(q);
    debug_assert!(iv.contains(&point)?);
    Ok(point)
}

/// A rational strictly between two quadratic numbers `u < v`: sharpen
/// the denominator until the integer grid hits the gap.
fn rational_between(u: &QuadExt, v: &QuadExt) -> BigRational {
    let mut k = BigInt::one();
    loop {
        let uk = u.scale(&BigRational::from_integer(k.clone()));
        let n = floor_quad(&uk) + 1;
        let cand = BigRational::new(n, k.clone());
        if &QuadExt::from_rational(cand.clone()) < v {
            return cand;
        }
        k *= 2;
    }
}

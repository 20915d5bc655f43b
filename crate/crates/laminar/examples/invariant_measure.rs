//! Invariant finite-support measures: the uniform measure on the two
//! global fixed points of a hyperbolic map is invariant, and a gap with
//! the mass on its vertices can have no full-measure side — the pattern
//! that rules out tight pairs.

use laminar::circle::CirclePoint;
use laminar::group::MarkedGroup;
use laminar::homeo::{Homeo, MobiusMap};
use laminar::measure::{full_measure_side, FiniteSupportMeasure, FullMeasureSide};

fn main() -> laminar::Result<()> {
    let g = Homeo::Mobius(MobiusMap::from_ints(2, 0, 0, 1)?);
    let group = MarkedGroup::new(vec![("g".into(), g)])?;
    let mu = FiniteSupportMeasure::uniform([
        CirclePoint::projective_i(0, 1),
        CirclePoint::infinity(),
    ])?;
    println!("uniform on {{0, inf}} invariant: {}", mu.is_group_invariant(&group)?);

    let (_, quad) = laminar::catalog::sanov_example(0)?;
    let gaps = quad.gaps()?;
    let central = gaps.iter().find(|g| g.sides().len() == 4).unwrap();
    match full_measure_side(&mu, central)? {
        FullMeasureSide::Side(side) => println!("full-measure side: {:?}", side),
        FullMeasureSide::Violation { vertex_mass, .. } => println!(
            "no side has mass 1 (mass {} on the vertices): tight pair impossible",
            vertex_mass
        ),
    }
    Ok(())
}

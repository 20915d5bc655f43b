//! Exact fixed points of Mobius maps and piecewise linear circle maps.
//! Irrational fixed points come out as quadratic surds, and the library
//! re-checks g(x) = x in the surd field.

use laminar::circle::rational;
use laminar::homeo::{Homeo, MobiusMap, PLHomeo};

fn main() -> laminar::Result<()> {
    // (1 2; 2 5) is hyperbolic with fixed points -1 +- sqrt(2)
    let m = MobiusMap::from_ints(1, 2, 2, 5)?;
    println!("classification: {:?}", m.classify()?);
    let g = Homeo::Mobius(m);
    for p in g.fixed_points().points() {
        println!("fixed: {:?}  (g(p) == p: {})", p, &g.apply(p)? == p);
    }

    // a PL map fixing 0 and 1/2
    let pl = Homeo::PL(PLHomeo::new(&[
        (rational(0, 1), rational(0, 1)),
        (rational(1, 4), rational(3, 8)),
        (rational(1, 2), rational(1, 2)),
        (rational(3, 4), rational(7, 8)),
    ])?);
    println!("pl fixed points: {:?}", pl.fixed_points().points());
    Ok(())
}

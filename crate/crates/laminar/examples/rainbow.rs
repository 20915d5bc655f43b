//! The endpoint-or-rainbow dichotomy on a nested attractor family:
//! the repelling fixed point of z -> 2z sits under a rainbow of
//! properly nested leaves, while a leaf endpoint is its own witness.

use laminar::catalog::nested_attractor;
use laminar::circle::CirclePoint;
use laminar::homeo::MobiusMap;
use laminar::lamination::RainbowOutcome;

fn main() -> laminar::Result<()> {
    let g = MobiusMap::from_ints(2, 0, 0, 1)?;
    let lam = nested_attractor(&g, 5)?;
    for p in [
        CirclePoint::projective_i(0, 1),
        CirclePoint::infinity(),
        CirclePoint::projective_i(4, 1), // an endpoint of g^2(seed)
        CirclePoint::projective_i(100, 1),
    ] {
        match lam.rainbow_search(&p, 5)? {
            RainbowOutcome::Endpoint(leaf) => println!("{:?}: endpoint of {:?}", p, leaf),
            RainbowOutcome::Rainbow(chain) => {
                println!("{:?}: rainbow of depth {}", p, chain.len())
            }
            RainbowOutcome::Inconclusive(chain) => {
                println!("{:?}: inconclusive, best chain {}", p, chain.len())
            }
        }
    }
    Ok(())
}

//! Grows the orbit of the ideal quadrilateral under the Sanov pair and
//! re-validates at each depth: the tessellation stays unlinked.

use laminar::catalog::sanov_example;
use laminar::group::orbit_lamination;

fn main() -> laminar::Result<()> {
    let (group, seed) = sanov_example(0)?;
    println!("seed leaves: {}", seed.len());
    for depth in 1..=3 {
        let orbit = orbit_lamination(&group, &seed, depth)?;
        println!(
            "depth {}: {} leaves, unlinked: {}",
            depth,
            orbit.lamination.len(),
            orbit.is_invariant_so_far()
        );
    }
    Ok(())
}

//! Fixed point counts over a ball in the Sanov group: every
//! non-identity element of a free Fuchsian group has one or two fixed
//! points, never more.

use laminar::catalog::sanov_example;
use laminar::group::fixedpoint_census;

fn main() -> laminar::Result<()> {
    let (group, _) = sanov_example(0)?;
    let counts = fixedpoint_census(&group, 3)?;
    println!("ball elements (non-identity): {}", counts.len());
    let mut histogram = [0usize; 3];
    for (_, n) in &counts {
        histogram[(*n).min(2)] += 1;
    }
    println!("parabolic-like (1 fixed point): {}", histogram[1]);
    println!("hyperbolic-like (2 fixed points): {}", histogram[2]);
    for (w, n) in counts.iter().take(6) {
        println!("  {} fixes {} point(s)", w.display(group.names()), n);
    }
    Ok(())
}

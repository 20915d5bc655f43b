//! Checks leaf families for linked chords and prints the witness points
//! when two chords cross.

use laminar::circle::{CirclePoint, Leaf};
use laminar::lamination::FiniteLamination;

fn main() -> laminar::Result<()> {
    let good = FiniteLamination::new([
        Leaf::new(CirclePoint::angle_i(0, 1), CirclePoint::angle_i(1, 3))?,
        Leaf::new(CirclePoint::angle_i(1, 3), CirclePoint::angle_i(2, 3))?,
    ])?;
    println!("nested pair valid: {}", good.is_valid()?);

    // (0, 1/2) and (1/4, 3/4) cross in the middle of the disk
    let crossing = FiniteLamination::new([
        Leaf::new(CirclePoint::angle_i(0, 1), CirclePoint::angle_i(1, 2))?,
        Leaf::new(CirclePoint::angle_i(1, 4), CirclePoint::angle_i(3, 4))?,
    ])?;
    let report = crossing.validate()?;
    for pair in &report.linked {
        println!(
            "linked: {:?} crosses {:?} (separating points {:?}, {:?})",
            pair.first, pair.second, pair.witness.0, pair.witness.1
        );
    }
    Ok(())
}

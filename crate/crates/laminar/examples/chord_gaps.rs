//! Enumerates the complementary regions of the ideal triangle
//! lamination and prints their vertex sets.

use laminar::catalog::ideal_triangle_rotation;

fn main() -> laminar::Result<()> {
    let (_, lam) = ideal_triangle_rotation(3)?;
    println!("leaves: {}", lam.len());
    println!("very full: {}", lam.is_very_full()?);
    for (i, gap) in lam.gaps()?.iter().enumerate() {
        let kind = if gap.is_leaf_gap() { "leaf gap" } else { "polygon" };
        print!("gap {} ({}, {} sides):", i, kind, gap.sides().len());
        if let Some(vertices) = gap.polygon_vertices() {
            for v in vertices {
                print!(" {:?}", v);
            }
        }
        println!();
    }
    Ok(())
}

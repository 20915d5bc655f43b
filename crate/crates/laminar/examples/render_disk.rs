//! Renders the Sanov tessellation (depth 2) as a Poincare disk SVG.
//! Writes to the path given as the first argument, or stdout.

use laminar::catalog::sanov_example;
use laminar::svg::{render_svg, RenderOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (_, lam) = sanov_example(2)?;
    let svg = render_svg(&lam, RenderOptions { shade_gaps: false })?;
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &svg)?;
            eprintln!("wrote {} ({} chords)", path, lam.len());
        }
        None => print!("{}", svg),
    }
    Ok(())
}

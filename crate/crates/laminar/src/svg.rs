//! Poincare-disk rendering of laminations: one circular-arc chord per
//! leaf, optional gap shading.  Floating point appears only here, at
//! the final formatting step, and every coordinate is printed with a
//! fixed precision so identical inputs give byte-identical documents.

use crate::lamination::FiniteLamination;
use crate::Result;

#[derive(Clone, Copy, Debug, Default)]
pub struct RenderOptions {
    pub shade_gaps: bool,
}

fn fmt(x: f64) -> String {
    // avoid the two zero representations
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{:.6}", x)
}

/// Position on the unit circle for a turn angle, in SVG user
/// coordinates (y axis points down, so the picture is mirrored; the
/// drawing is illustrative, exact data lives in the files).
fn pos(theta: f64) -> (f64, f64) {
    let rad = std::f64::consts::TAU * theta;
    (rad.cos(), -rad.sin())
}

/// Path segment for the hyperbolic geodesic between two boundary
/// angles: the circular arc meeting the unit circle at right angles,
/// or a straight line for (nearly) antipodal endpoints.
fn geodesic_to(from: f64, to: f64) -> String {
    let delta = (to - from).rem_euclid(1.0);
    let half = std::f64::consts::PI * delta.min(1.0 - delta);
    let (x2, y2) = pos(to);
    if half.cos().abs() < 1e-9 {
        return format!("L {} {}", fmt(x2), fmt(y2));
    }
    let r = half.tan().abs();
    // center of the geodesic circle: on the bisector, outside the disk
    let mid = (from + delta / 2.0).rem_euclid(1.0);
    let (bx, by) = pos(mid);
    let scale = 1.0 / half.cos().abs();
    let (cx, cy) = (bx * scale, by * scale);
    let (x1, y1) = pos(from);
    let cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx);
    let sweep = if cross > 0.0 { 1 } else { 0 };
    format!("A {} {} 0 0 {} {} {}", fmt(r), fmt(r), sweep, fmt(x2), fmt(y2))
}

/// Arc along the unit circle itself, counterclockwise (in turn angles)
/// from one boundary angle to another.
fn boundary_arc_to(from: f64, to: f64) -> String {
    let delta = (to - from).rem_euclid(1.0);
    let large = if delta > 0.5 { 1 } else { 0 };
    let (x2, y2) = pos(to);
    // counterclockwise in turns is the negative direction in the
    // y-down user space
    format!("A 1.000000 1.000000 0 {} 0 {} {}", large, fmt(x2), fmt(y2))
}

pub fn render_svg(lam: &FiniteLamination, options: RenderOptions) -> Result<String> {
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\" width=\"600\" height=\"600\">\n",
    );
    out.push_str(
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"/>\n",
    );
    if options.shade_gaps {
        for gap in lam.gaps()? {
            if gap.is_leaf_gap() {
                continue;
            }
            // walk the boundary: each side contributes its chord, and
            // consecutive sides are joined along the circle when they
            // do not share an endpoint
            let sides = gap.sides();
            let angles: Vec<(f64, f64)> = sides
                .iter()
                .map(|s| (s.start().display_turns(), s.end().display_turns()))
                .collect();
            let (sx, sy) = pos(angles[0].0);
            let mut d = format!("M {} {}", fmt(sx), fmt(sy));
            for i in 0..angles.len() {
                let (u, v) = angles[i];
                d.push(' ');
                d.push_str(&geodesic_to(u, v));
                let next_u = angles[(i + 1) % angles.len()].0;
                if (next_u - v).rem_euclid(1.0) > 1e-12 {
                    d.push(' ');
                    d.push_str(&boundary_arc_to(v, next_u));
                }
            }
            d.push_str(" Z");
            out.push_str(&format!(
                "<path d=\"{}\" fill=\"#c8d8f0\" stroke=\"none\"/>\n",
                d
            ));
        }
    }
    for leaf in lam.leaves() {
        let (u, v) = leaf.endpoints();
        let (a, b) = (u.display_turns(), v.display_turns());
        let (x1, y1) = pos(a);
        let d = format!("M {} {} {}", fmt(x1), fmt(y1), geodesic_to(a, b));
        out.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"#203040\" stroke-width=\"0.008\"/>\n",
            d
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

//! From a planar order tree to a lamination: ends embed into the circle
//! respecting their cyclic order, and each singular vertex becomes an
//! ideal polygon.

use laminar::ordertree::{PlanarOrderTree, VertexKind};
use std::collections::BTreeMap;

fn main() -> laminar::Result<()> {
    // two singular degree-3 vertices joined by an edge
    let tree = PlanarOrderTree::new(
        vec![
            VertexKind::Singular,
            VertexKind::Singular,
            VertexKind::Ordinary,
            VertexKind::Ordinary,
            VertexKind::Ordinary,
            VertexKind::Ordinary,
        ],
        vec![
            vec![2, 3, 1],
            vec![0, 4, 5],
            vec![0],
            vec![0],
            vec![1],
            vec![1],
        ],
        BTreeMap::new(),
    )?;
    let circle = tree.tree_to_circle()?;
    for (end, angle) in &circle {
        println!("end {} -> {:?}", end, angle);
    }
    let lam = tree.lamination_from_tree()?;
    println!("leaves ({} total, valid: {}):", lam.len(), lam.is_valid()?);
    for leaf in lam.leaves() {
        println!("  {:?}", leaf);
    }
    Ok(())
}

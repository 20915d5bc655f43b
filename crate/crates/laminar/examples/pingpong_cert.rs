//! Verifies the classical ping-pong table for the Sanov pair — an exact
//! certificate that the two parabolics generate a free group of rank 2
//! — and shows the same table failing for a commuting pair.

use laminar::catalog::sanov_pingpong;
use laminar::group::pingpong_certify;
use laminar::homeo::{Homeo, MobiusMap};

fn main() -> laminar::Result<()> {
    let (group, table) = sanov_pingpong();
    let g = &group.generators()[0];
    let h = &group.generators()[1];
    match pingpong_certify(g, h, &table)? {
        Ok(cert) => {
            println!("certificate: {} inclusions verified", cert.inclusions.len());
            for inc in &cert.inclusions {
                println!("  {}", inc);
            }
        }
        Err(rej) => println!("rejected: {:?}", rej),
    }

    let p = Homeo::Mobius(MobiusMap::from_ints(1, 1, 0, 1)?);
    let q = Homeo::Mobius(MobiusMap::from_ints(1, 3, 0, 1)?);
    match pingpong_certify(&p, &q, &table)? {
        Ok(_) => println!("commuting pair certified (should not happen)"),
        Err(rej) => println!("commuting translations rejected: {:?}", rej),
    }
    Ok(())
}

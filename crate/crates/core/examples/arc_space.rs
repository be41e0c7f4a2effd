//! Arc space of the node over the fat point `k[t]/(t^3)`, then over a
//! non-curvilinear fat point.

use autoarc::arc::{arc_space, AffineScheme, FatPoint};
use autoarc::ideal::Ideal;
use autoarc::poly::PolyRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let node = AffineScheme::node();

    let l3 = FatPoint::linear(3)?;
    let a = arc_space(&node, &l3)?;
    println!("nabla over k[t]/(t^3), grid {:?}", a.grid());
    for g in a.generators() {
        println!("  {g} = 0");
    }

    // k[u,v]/(u^2, uv, v^2): length 3, not a jet of a curve
    let ring = PolyRing::rational(&["u", "v"])?;
    let square = FatPoint::new(Ideal::from_strs(&ring, &["u^2", "u*v", "v^2"])?)?;
    println!("\nbasis {:?}", square.basis_strings());
    let b = arc_space(&node, &square)?;
    for g in b.generators() {
        println!("  {g} = 0");
    }
    Ok(())
}

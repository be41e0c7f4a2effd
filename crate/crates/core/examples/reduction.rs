//! Heuristic reduction of an auto-arc space to a residual ideal times an
//! affine space, and its splitting into independent factors.

use autoarc::arc::{auto_arc, parse_point, AffineScheme};
use autoarc::reduction::{decompose, heuristic_reduce};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = auto_arc(&AffineScheme::node(), &parse_point("0,0")?, 4)?;
    let r = heuristic_reduce(&a);
    let report = r.report();
    println!("{}", serde_json::to_string_pretty(&report)?);

    let d = decompose(&r);
    println!("affine rank {}", d.affine_rank);
    for (i, f) in d.factors.iter().enumerate() {
        let gens: Vec<String> = f.generators().iter().map(|g| g.to_string()).collect();
        println!("factor {i}: {gens:?}");
    }
    Ok(())
}

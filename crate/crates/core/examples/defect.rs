//! Ratio of the dimension of the reduced auto-arc space to the jet length.

use autoarc::arc::{parse_point, AffineScheme};
use autoarc::motive::InterpolationConfig;
use autoarc::zeta::catalog::{cusp_catalog, node_catalog};
use autoarc::zeta::{asymptotic_defect, ClassStrategy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let origin = parse_point("0,0")?;
    for (name, x, catalog) in [
        ("node", AffineScheme::node(), node_catalog(10)?),
        ("cusp", AffineScheme::cusp(), cusp_catalog(12)?),
    ] {
        let strategy = ClassStrategy::Supplied {
            catalog,
            fallback: Some(InterpolationConfig::default()),
        };
        println!("{name}");
        for row in asymptotic_defect(&x, &origin, 6, &strategy)? {
            println!("  n={} dim={} length={} ratio={}", row.n, row.dimension, row.jet_length, row.ratio);
        }
    }
    Ok(())
}

//! Reduced auto zeta series of the node and Igusa's series of the cusp,
//! each set against a closed form.

use autoarc::arc::AffineScheme;
use autoarc::motive::InterpolationConfig;
use autoarc::verify::zeta_config;
use autoarc::zeta::catalog::{cusp_catalog, cusp_theta_closed, node_zeta_closed};
use autoarc::zeta::{auto_zeta, compare, fit_shifts, igusa_theta, ClassStrategy, Normalization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = zeta_config(AffineScheme::node(), 6, Normalization::Definition)?;
    let s = auto_zeta(&cfg)?;
    println!("node auto zeta:");
    println!("{}", compare(&s, &node_zeta_closed()).table());

    let strategy = ClassStrategy::Supplied {
        catalog: cusp_catalog(7)?,
        fallback: Some(InterpolationConfig::default()),
    };
    let theta = igusa_theta(&AffineScheme::cusp(), 6, &strategy)?;
    for f in fit_shifts(&theta, &cusp_theta_closed(), 0, 0, 1) {
        println!("cusp Theta: closed form = L^{} times the computed series", f.a);
    }
    Ok(())
}

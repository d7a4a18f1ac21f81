//! Ordinary and parabolic BGG resolutions, their dual labels and the Euler
//! characteristic check against Verma characters.

use lieo::bgg::{bgg_resolution, dual_la_resolution, euler_check, parabolic_bgg_resolution};
use lieo::roots::{CartanType, RootSystem, Weight};
use lieo::weyl::{ParabolicSubset, WeylGroup};

fn main() -> lieo::Result<()> {
    let gl2 = RootSystem::new(CartanType::gl(2)?)?;
    let res = bgg_resolution(&WeylGroup::new(&gl2)?, &Weight::gl_tuple(vec![0, 0]))?;
    println!("{}", res.display_line());
    println!("{}", dual_la_resolution(&gl2, &res).display_line());

    let a2 = RootSystem::from_type_str("A2")?;
    let w = WeylGroup::new(&a2)?;
    let p = ParabolicSubset::new(&a2, &[0])?;
    let res = parabolic_bgg_resolution(&w, &p, &a2.rho())?;
    println!("{}", res.display_line());
    let euler = euler_check(&a2, &res, 8)?;
    println!("euler characteristic to depth {}: {}", euler.depth, if euler.passed { "ok" } else { "mismatch" });
    Ok(())
}

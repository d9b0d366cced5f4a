//! Degree, genus and expected plane-system dimension of curve classes on the plane blown up
//! in eleven points.

use curvelink::geometry::picard::eleven_points::{canonical, conic_d1, conic_pencil, genus8_curve, genus9_curve, hyperplane};
use curvelink::geometry::class_invariants;

fn main() -> curvelink::Result<()> {
    let (k, h) = (canonical(), hyperplane());
    for (name, c) in [
        ("H", h.clone()),
        ("conic pencil R", conic_pencil()),
        ("conic D_1", conic_d1()),
        ("2H - R", genus8_curve()),
        ("2H - D_1", genus9_curve()),
    ] {
        let inv = class_invariants(&c, &k, &h)?;
        println!(
            "{name:<16} C·C = {:>3}  degree {:>3}  genus {:>3}  plane system dim {:>3}  χ = {}",
            inv.self_intersection,
            inv.degree,
            inv.genus,
            c.expected_plane_dimension(),
            c.euler_characteristic(&k)?
        );
    }
    Ok(())
}

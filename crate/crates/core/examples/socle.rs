//! Artinian reduction, its socle, and the comparison with Betti numbers.

use srtk::artinian::{graded_reduction, random_lsop, socle_lower_bound_check};
use srtk::builtin::builtin;
use srtk::FiniteField;

fn main() -> srtk::Result<()> {
    let field = FiniteField::default();
    for name in ["torus7", "wedge_two_circles"] {
        let c = builtin(name)?;
        let forms = random_lsop(&c, field, 0)?;
        let r = graded_reduction(&c, &forms)?;
        println!("{name}: dims {:?}, socle {:?}", r.dims(), r.socle_profile().dims);
        println!("  degree-1 basis monomials {:?}", r.basis_monomials(1));

        let slack = socle_lower_bound_check(&c, field, 0)?;
        for row in &slack.degrees {
            println!("  degree {}: socle {} >= {} (slack {})", row.degree, row.socle, row.lower_bound, row.slack);
        }
    }
    Ok(())
}

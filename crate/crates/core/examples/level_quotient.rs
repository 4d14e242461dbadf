//! Killing the socle below the top degree gives a level algebra.

use srtk::artinian::level_quotient;
use srtk::builtin::builtin;
use srtk::FiniteField;

fn main() -> srtk::Result<()> {
    for (name, p) in [("rp2_6", 2), ("torus7", 32003), ("wedge_two_circles", 32003)] {
        let c = builtin(name)?;
        let q = level_quotient(&c, FiniteField::generic(p)?, 0)?;
        println!(
            "{name} over char {p}: dims {:?}, socle {:?}, level {}, type {}",
            q.dims, q.socle_dims, q.is_level, q.cm_type
        );
    }
    Ok(())
}

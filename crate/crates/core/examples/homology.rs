//! Reduced Betti numbers and local cohomology dimensions in two characteristics.

use srtk::builtin::builtin;
use srtk::homology::{hochster_dims, reduced_betti};
use srtk::PrimeField;

fn main() -> srtk::Result<()> {
    let rp2 = builtin("rp2_6")?;
    for p in [2, 3] {
        let field = PrimeField::new(p)?;
        let betti = reduced_betti(&rp2, field);
        println!("RP^2 over GF({p}): betti {:?}, euler {}", betti.betti, betti.euler_characteristic());
        for i in 0..=rp2.d() {
            let h = hochster_dims(&rp2, field, i)?;
            println!("  H^{i}: {:?}", h.dims);
        }
    }
    Ok(())
}

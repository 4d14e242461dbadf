//! dim K[Δ]/ℓ in degree j splits as star (shifted) plus deletion.

use srtk::artinian::star_deletion_dim_check;
use srtk::builtin::builtin;
use srtk::FiniteField;

fn main() -> srtk::Result<()> {
    let torus = builtin("torus7")?;
    let r = star_deletion_dim_check(&torus, 1, FiniteField::default(), 0)?;
    for row in &r.rows {
        println!("j = {}: {} = {} + {}", row.degree, row.complex, row.star_shifted, row.deletion);
    }
    println!("holds: {}", r.holds);

    let filled = srtk::SimplicialComplex::from_facets(3, [vec![1, 2, 3]])?;
    if let Err(e) = star_deletion_dim_check(&filled, 1, FiniteField::default(), 0) {
        println!("filled triangle: {e}");
    }
    Ok(())
}

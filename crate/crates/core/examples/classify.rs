//! Cohen–Macaulay, 2-CM, Buchsbaum and Buchsbaum* across the builtin corpus.

use srtk::artinian::is_buchsbaum_star;
use srtk::builtin::builtin;
use srtk::homology::{is_buchsbaum, is_cohen_macaulay, is_two_cm};
use srtk::{FiniteField, PrimeField};

fn main() -> srtk::Result<()> {
    let names = ["simplex_boundary:3", "cross_polytope:3", "rp2_6", "torus7", "wedge_two_circles", "bowtie_filled"];
    println!("{:<20} {:>5} {:>5} {:>5} {:>5} {:>5}", "complex", "p", "CM", "2CM", "Bbm", "Bbm*");
    for name in names {
        let c = builtin(name)?;
        for p in [2, 3] {
            let prime = PrimeField::new(p)?;
            let bstar = is_buchsbaum_star(&c, FiniteField::generic(p)?, 0)?;
            println!(
                "{name:<20} {p:>5} {:>5} {:>5} {:>5} {:>5}",
                is_cohen_macaulay(&c, prime),
                is_two_cm(&c, prime),
                is_buchsbaum(&c, prime),
                bstar.holds
            );
        }
    }
    Ok(())
}

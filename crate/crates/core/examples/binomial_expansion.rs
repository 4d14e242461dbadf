//! d-binomial expansions relative to n variables and the growth bound b^<d>.

use srtk::enumeration::{check_module_macaulay, d_binomial_expansion};

fn main() -> srtk::Result<()> {
    for (b, n, d) in [(7, 3, 2), (12, 3, 2), (13, 3, 2), (100, 4, 3)] {
        let e = d_binomial_expansion(b, n, d)?;
        println!("{e}   (s = {}, {b}^<{d}> = {})", e.s(), e.growth());
    }
    let check = check_module_macaulay(&[1, 3, 7], 3)?;
    for row in &check.rows {
        println!("h({}) = {} <= {}: {}", row.j + 1, row.next, row.bound, row.pass);
    }
    Ok(())
}

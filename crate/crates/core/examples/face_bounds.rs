//! h, h', h'' vectors and the inequalities on them.

use srtk::builtin::builtin;
use srtk::enumeration::{check_bstar_bounds, check_module_macaulay, soderberg_check, HVectorBundle};
use srtk::homology::reduced_betti;
use srtk::PrimeField;

fn main() -> srtk::Result<()> {
    let torus = builtin("torus7")?;
    let b = HVectorBundle::new(&torus, reduced_betti(&torus, PrimeField::default()))?;
    println!("f {:?}\nh {:?}\nh' {:?}\nh'' {:?}", b.f, b.h, b.h_prime, b.h_double_prime);

    let bounds = check_bstar_bounds(&b)?;
    for r in &bounds.upper {
        println!("h'_{} = {} <= min({}, {})", r.j + 1, r.h_prime_next, r.growth_branch, r.dual_branch);
    }
    for r in &bounds.lower {
        println!("h''_{} * {} >= h''_{} = {}", b.d - r.j, r.beta_top, r.j, r.h_double_prime);
    }

    let s = soderberg_check(&b.h_double_prime, b.n, b.d)?;
    for r in &s.rows {
        println!("determinant j = {}: {}", r.j, r.det);
    }

    let mut reversed = b.h_double_prime.clone();
    reversed.reverse();
    println!("reversed h'' growth ok: {}", check_module_macaulay(&reversed, b.n)?.pass);
    Ok(())
}

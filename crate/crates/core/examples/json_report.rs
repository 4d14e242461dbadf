//! Full analysis serialised as JSON, sampling three parameter systems.

use srtk::builtin::builtin;
use srtk::report::analyse;

fn main() -> srtk::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "rp2_6".into());
    let p = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(2);
    let c = builtin(&name)?;
    let report = analyse(&c, &name, p, &[0, 1, 2])?;
    println!("{}", report.to_json());
    Ok(())
}

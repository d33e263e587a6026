//! The full identity suite as a library call.

use c2_monopole::verify::{run, VerifyConfig};

fn main() -> c2_monopole::error::Result<()> {
    let report = run(&VerifyConfig {
        kappa_max: 2,
        samples: 20_000,
        ..VerifyConfig::default()
    })?;
    print!("{}", report.to_text());
    Ok(())
}

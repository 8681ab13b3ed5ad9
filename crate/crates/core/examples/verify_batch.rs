//! Every theorem-level self-test on seeded samples, as `bentcat verify` runs them.
//!
//! Run with `cargo run --release --example verify_batch`.

use bentcat::verify::{verify, TheoremId, VerifyInput};
use bentcat::DEFAULT_BUDGET;

fn main() -> bentcat::Result<()> {
    let input = VerifyInput {
        pieces: vec![],
        seed: 1,
        budget: DEFAULT_BUDGET,
    };
    for t in TheoremId::ALL {
        let checks = verify(t, &input)?;
        let agree = checks.iter().filter(|c| c.agree).count();
        println!("{t:>16}: {agree}/{} agree", checks.len());
    }
    Ok(())
}

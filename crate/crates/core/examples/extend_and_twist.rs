//! Extending a bent `g` to an outside function with `f(., 0, 0) = g`, and a
//! pair of functions sharing the half `g`, one inside M# and one outside.
//!
//! Run with `cargo run --release --example extend_and_twist`.

use bentcat::concat::restrictions;
use bentcat::sample::random_mm_bent;
use bentcat::{extend_outside, find_unique_msubspace_bent, is_in_completed_mm, twist_pair};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bentcat::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let g = random_mm_bent(6, &mut rng);
    let q = find_unique_msubspace_bent(6, 1000, 3)?;
    for variant in 0..3 {
        let e = extend_outside(&g, std::slice::from_ref(&q), variant, None)?;
        println!(
            "variant {variant}: pair {:?}, verdict {}, restriction is g: {}",
            e.pair,
            is_in_completed_mm(&e.function, None)?.label(),
            restrictions(&e.function, 4)?[0] == g
        );
    }
    let (inside, outside) = twist_pair(&g, &q, None)?;
    println!(
        "twisted pair: {} and {}",
        is_in_completed_mm(&inside, None)?.label(),
        is_in_completed_mm(&outside, None)?.label()
    );
    Ok(())
}

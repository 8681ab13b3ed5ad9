//! `g||h||g||(h+1)` membership from a shared-subspace test on the halves, and
//! the Korsakova pair. With an outside `g` on eight variables every partner
//! yields an outside function on ten.
//!
//! Run with `cargo run --release --example ghgh_chain`.

use bentcat::construct::{find_invertible_pair, find_unique_msubspace_permutation, rind_construction};
use bentcat::sample::random_mm_bent;
use bentcat::{ghgh, ghgh_class, is_in_completed_mm, korsakova_pair, mm_function, PermutationSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bentcat::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = mm_function(&PermutationSpec::identity(3), None)?;
    let b = random_mm_bent(6, &mut rng);
    println!("two MM halves: {}", ghgh_class(&a, &b, None)?.label());

    let pi = find_unique_msubspace_permutation(3, 1000, 1)?;
    let g = rind_construction(&pi, &find_invertible_pair(6, 0)?, None)?.function;
    let (k, _) = korsakova_pair(&random_mm_bent(6, &mut rng), 0x2b)?;
    for (name, h) in [("MM", random_mm_bent(8, &mut rng)), ("Korsakova", k), ("g itself", g.clone())] {
        let structural = ghgh_class(&g, &h, None)?;
        let direct = is_in_completed_mm(&ghgh(&g, &h)?, None)?;
        println!("outside g with {name}: {} / {}", structural.label(), direct.label());
    }
    for alpha in [0u32, 1, 0x81, 0xff] {
        let (f, f2) = korsakova_pair(&g, alpha)?;
        println!(
            "alpha = {alpha:02x}: {} {}",
            is_in_completed_mm(&f, None)?.label(),
            is_in_completed_mm(&f2, None)?.label()
        );
    }
    Ok(())
}

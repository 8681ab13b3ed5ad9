//! Structural M-subspace conditions for `f1||f2` and `f1||f2||f3||f4`,
//! each cross-checked by direct search on the concatenation.
//!
//! Run with `cargo run --release --example concat_conditions`.

use bentcat::concat::{
    concat4, corollary1_outside_mm, corollary2_outside_mm, restrictions, theorem1_verdict, theorem3_enumerate_forms,
    VerdictOptions,
};
use bentcat::sample::{random_bent, random_disjoint_semibent_pair};
use bentcat::enumerate_m_subspaces;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bentcat::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let opts = VerdictOptions::checked();

    let (f1, f2) = random_disjoint_semibent_pair(5, &mut rng);
    for k in 0..=5 {
        let v = theorem1_verdict(&f1, &f2, k, &opts)?;
        println!("f1||f2 has a {}-dim M-subspace: {} ({:?})", v.dim, v.inside_mm, v.condition);
    }
    let v = corollary1_outside_mm(&f1, &f2, &opts)?;
    println!("f1||f2 in M#: {}", v.inside_mm);

    let f = random_bent(8, &mut rng);
    let parts = restrictions(&f, 4)?;
    let fs = [&parts[0], &parts[1], &parts[2], &parts[3]];
    let v = corollary2_outside_mm(fs, &opts)?;
    println!("4-concatenation in M#: {} via {:?}", v.inside_mm, v.condition);
    if let Some(w) = &v.witness {
        println!("  form {:?}, subspace {:?}", w.form, w.subspace);
    }

    let forms = theorem3_enumerate_forms(fs, 3, None)?;
    let whole = concat4(fs[0], fs[1], fs[2], fs[3])?;
    let direct = enumerate_m_subspaces(&whole, 3, None)?;
    println!("3-dim M-subspaces: {} from forms, {} by direct search", forms.len(), direct.len());
    assert_eq!(forms.len(), direct.len());
    Ok(())
}

//! Bent functions on `2k+2` variables from two injective maps with disjoint
//! images, and their canonical `(k+1)`-dimensional M-subspace.
//!
//! Run with `cargo run --example halfconcat`.

use bentcat::{is_bent, is_in_completed_mm, is_m_subspace, theorem2_halfconcat, BooleanFunction, PermutationSpec, Subspace};

fn main() -> bentcat::Result<()> {
    for k in [2usize, 3] {
        let pi1 = PermutationSpec::injection(k, k + 1, (0..1u32 << k).collect())?;
        let pi2 = PermutationSpec::injection(k, k + 1, (0..1u32 << k).map(|y| (y ^ 1) | 1 << k).collect())?;
        let h = BooleanFunction::from_fn(k, |y| y == 1)?;
        let f = theorem2_halfconcat(&pi1, &pi2, &h, &BooleanFunction::zero(k)?)?;
        let canonical = Subspace::coordinate(k + 1, f.n_vars());
        println!(
            "k = {k}: bent {}, canonical subspace is an M-subspace {}, verdict {}",
            is_bent(&f),
            is_m_subspace(&f, &canonical)?,
            is_in_completed_mm(&f, None)?.label()
        );
    }
    Ok(())
}

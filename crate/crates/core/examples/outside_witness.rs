//! A bent function on eight variables outside M#: `g||h||g||(h+1)` with
//! `g = x . pi(y)` having a unique 3-dimensional M-subspace and `h = g o A`.
//! The verdict is certified by scanning all 200787 four-dimensional
//! subspaces of F_2^8.
//!
//! Run with `cargo run --release --example outside_witness`.

use bentcat::construct::{find_invertible_pair, find_unique_msubspace_permutation, rind_construction};
use bentcat::oracle::naive_m_check;
use bentcat::text::format_table;
use bentcat::{degree, is_in_completed_mm, Error};

fn main() -> bentcat::Result<()> {
    let pi = find_unique_msubspace_permutation(3, 1000, 1)?;
    println!("pi = {:?}", pi.images());
    let mut seed = 1;
    let out = loop {
        match rind_construction(&pi, &find_invertible_pair(6, seed)?, None) {
            Err(Error::SubspacePreserved) => seed += 1,
            r => break r?,
        }
    };
    println!("unique subspace of g: {:?}", out.subspace);
    println!("g + h bent: {}", out.sum_is_bent);
    println!("degree {}", degree(&out.function));
    println!("pruned search: {}", is_in_completed_mm(&out.function, None)?.label());
    println!("exhaustive scan: {:?}", naive_m_check(&out.function)?);
    print!("{}", format_table(&out.function));
    Ok(())
}

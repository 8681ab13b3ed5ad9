//! Enumerating M-subspaces and applying Dillon's criterion, checked against
//! the brute-force oracle.
//!
//! Run with `cargo run --release --example m_subspaces`.

use bentcat::oracle::{naive_m_subspaces, all_subspaces};
use bentcat::{enumerate_m_subspaces, is_in_completed_mm, max_m_dimension, AnfPolynomial};

fn main() -> bentcat::Result<()> {
    let f = AnfPolynomial::parse(4, "x1*x2+x3*x4")?.to_function()?;
    let fast = enumerate_m_subspaces(&f, 2, None)?;
    let slow = naive_m_subspaces(&f, 2)?;
    println!(
        "x1x2+x3x4: {} of the {} planes in F_2^4 are M-subspaces",
        fast.len(),
        all_subspaces(4, 2)?.count()
    );
    assert_eq!(fast, slow);
    for v in &fast {
        println!("  {v:?}");
    }

    let cubic = AnfPolynomial::parse(6, "x1*x4+x2*x5+x3*x6+x1*x2*x3")?.to_function()?;
    println!("maximal M-subspace dimension of the cubic: {}", max_m_dimension(&cubic, None)?);
    let v = is_in_completed_mm(&cubic, None)?;
    println!("M# verdict: {} {:?}", v.label(), v.witness());
    Ok(())
}

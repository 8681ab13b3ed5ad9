//! Walsh spectrum, spectrum class, dual and ANF of a few small functions.
//!
//! Run with `cargo run --example spectra`.

use bentcat::{anf, dual, walsh_transform, AnfPolynomial};

fn main() -> bentcat::Result<()> {
    for (n, expr) in [(4, "x1*x2+x3*x4"), (4, "x1*x2*x3+x1*x4"), (3, "x1*x2"), (6, "x1*x4+x2*x5+x3*x6+x1*x2*x3")] {
        let f = AnfPolynomial::parse(n, expr)?.to_function()?;
        let w = walsh_transform(&f);
        let class = w.classify();
        println!("{expr} on {n} variables: {:?} {:?}", class.tag, class.value_set);
        assert_eq!(w.sum_of_squares(), 1i128 << (2 * n));
        if let Ok(d) = dual(&f) {
            println!("  dual = {}", anf(&d));
        }
    }
    Ok(())
}

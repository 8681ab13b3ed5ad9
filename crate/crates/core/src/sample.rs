//! Seeded random generators for functions, permutations and bent families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::boolean::BooleanFunction;
use crate::concat::restrictions;
use crate::construct::{mm_function, PermutationSpec};
use crate::matrix::{apply_ea, AffineTransform};

pub fn random_function(n: usize, rng: &mut impl Rng) -> BooleanFunction {
    let words = crate::boolean::word_count(n);
    let mask = crate::boolean::tail_mask(n);
    let mut w: Vec<u64> = (0..words).map(|_| rng.gen()).collect();
    w[0] &= mask;
    BooleanFunction::from_words(n, w).expect("valid shape")
}

/// A random function of degree at most two.
pub fn random_quadratic(n: usize, rng: &mut impl Rng) -> BooleanFunction {
    let mut monomials = vec![];
    for i in 0..n {
        for j in i..n {
            if rng.gen_bool(0.5) {
                monomials.push(1u32 << i | 1u32 << j);
            }
        }
    }
    if rng.gen() {
        monomials.push(0);
    }
    crate::anf::AnfPolynomial::new(n, monomials)
        .and_then(|p| p.to_function())
        .expect("valid polynomial")
}

pub fn random_permutation(m: usize, rng: &mut impl Rng) -> PermutationSpec {
    let mut images: Vec<u32> = (0..1u32 << m).collect();
    images.shuffle(rng);
    PermutationSpec::permutation(m, images).expect("shuffle is a bijection")
}

/// `x . pi(y) + g(y)` on `2m` variables with random `pi` and `g`.
pub fn random_mm_bent(n: usize, rng: &mut impl Rng) -> BooleanFunction {
    assert!(n.is_multiple_of(2) && n >= 2, "MM bent functions need an even number of variables");
    let m = n / 2;
    let pi = random_permutation(m, rng);
    let g = random_function(m, rng);
    mm_function(&pi, Some(&g)).expect("valid MM parameters")
}

/// A random MM bent function moved by a random extended-affine transform.
pub fn random_bent(n: usize, rng: &mut impl Rng) -> BooleanFunction {
    let f = random_mm_bent(n, rng);
    apply_ea(&f, &AffineTransform::random(n, rng)).expect("invertible transform")
}

/// The two halves of a random bent function on `n + 1` variables (`n` odd):
/// a pair of disjoint-spectra semi-bent functions.
pub fn random_disjoint_semibent_pair(n: usize, rng: &mut impl Rng) -> (BooleanFunction, BooleanFunction) {
    assert!(n % 2 == 1, "pieces of a bent 2-concatenation have an odd number of variables");
    let f = random_bent(n + 1, rng);
    let mut parts = restrictions(&f, 2).expect("n + 1 >= 2").into_iter();
    (parts.next().unwrap(), parts.next().unwrap())
}

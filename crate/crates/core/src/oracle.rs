//! Brute-force reference implementations. Nothing here touches the fast
//! transforms or the pruned search; everything is evaluated pointwise from
//! the definitions, with hard size caps.

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};
use crate::search::{Certificate, ClassVerdict};
use crate::subspace::Subspace;
use crate::walsh::WalshSpectrum;

pub const WALSH_MAX_VARS: usize = 12;
pub const SUBSPACE_MAX_VARS: usize = 8;

fn cap(n: usize, max: usize, what: &str) -> Result<()> {
    if n > max {
        return Err(Error::SizeCap(format!("{what} supports at most {max} variables, got {n}")));
    }
    Ok(())
}

/// `W_f(w) = sum_x (-1)^(f(x) + w.x)` evaluated term by term, 64 points at
/// a time: the ones in `table_word ^ linear_word` are the negative terms.
pub fn naive_walsh(f: &BooleanFunction) -> Result<WalshSpectrum> {
    let n = f.n_vars();
    cap(n, WALSH_MAX_VARS, "naive_walsh")?;
    let size = 1u32 << n;
    let chunk = size.min(64);
    let mask = if chunk == 64 { u64::MAX } else { (1u64 << chunk) - 1 };
    let parity = |x: u32| x.count_ones() & 1 == 1;
    let mut values = Vec::with_capacity(size as usize);
    for w in 0..size {
        let low = (0..chunk).fold(0u64, |acc, i| acc | (parity(w & i) as u64) << i);
        let mut negatives = 0i64;
        for (j, &word) in f.words().iter().enumerate() {
            let lin = if parity(w & (j as u32) << 6) { !low } else { low };
            negatives += ((word ^ lin) & mask).count_ones() as i64;
        }
        values.push(size as i64 - 2 * negatives);
    }
    WalshSpectrum::from_values(n, values)
}

/// `f(x) + f(x+u) + f(x+v) + f(x+u+v)`, pointwise.
pub fn direct_second_derivative(f: &BooleanFunction, u: u32, v: u32) -> Result<BooleanFunction> {
    let n = f.n_vars();
    for p in [u, v] {
        if p >> n != 0 {
            return Err(Error::PointOutOfRange { point: p, n_vars: n });
        }
    }
    BooleanFunction::from_fn(n, |x| f.get(x) ^ f.get(x ^ u) ^ f.get(x ^ v) ^ f.get(x ^ u ^ v))
}

/// Every `k`-dimensional subspace of `F_2^n` exactly once, as RREF bases.
/// Pivot sets are visited in lexicographic order; within one pivot set the
/// free entries count upward.
pub fn all_subspaces(n: usize, k: usize) -> Result<AllSubspaces> {
    cap(n, SUBSPACE_MAX_VARS, "all_subspaces")?;
    if k > n {
        return Err(Error::Invalid(format!("dimension {k} exceeds {n}")));
    }
    let mut it = AllSubspaces {
        n,
        pivots: (0..k).collect(),
        free: Vec::new(),
        counter: 0,
        done: false,
    };
    it.load_free();
    Ok(it)
}

pub struct AllSubspaces {
    n: usize,
    /// Ascending pivot positions.
    pivots: Vec<usize>,
    /// `(row, column)` of every free entry.
    free: Vec<(usize, usize)>,
    counter: u64,
    done: bool,
}

impl AllSubspaces {
    fn load_free(&mut self) {
        self.free.clear();
        for (row, &p) in self.pivots.iter().enumerate() {
            for col in 0..p {
                if !self.pivots.contains(&col) {
                    self.free.push((row, col));
                }
            }
        }
        self.counter = 0;
    }

    fn next_pivots(&mut self) -> bool {
        let k = self.pivots.len();
        for i in (0..k).rev() {
            if self.pivots[i] < self.n - (k - i) {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for AllSubspaces {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let mut rows: Vec<u32> = self.pivots.iter().map(|&p| 1u32 << p).collect();
        for (i, &(row, col)) in self.free.iter().enumerate() {
            if self.counter >> i & 1 == 1 {
                rows[row] |= 1 << col;
            }
        }
        self.counter += 1;
        if self.counter >> self.free.len() != 0 {
            if self.next_pivots() {
                self.load_free();
            } else {
                self.done = true;
            }
        }
        rows.reverse();
        Some(Subspace::from_rref_unchecked(self.n, rows))
    }
}

/// `D_a D_b f = 0` for every pair drawn from the full span of `v`.
pub fn naive_is_m_subspace(f: &BooleanFunction, v: &Subspace) -> bool {
    let elems = v.elements();
    elems.iter().enumerate().all(|(i, &a)| {
        elems[i + 1..]
            .iter()
            .all(|&b| (0..f.size()).all(|x| !(f.get(x) ^ f.get(x ^ a) ^ f.get(x ^ b) ^ f.get(x ^ a ^ b))))
    })
}

/// All `k`-dimensional M-subspaces of `f`, by filtering every subspace.
pub fn naive_m_subspaces(f: &BooleanFunction, k: usize) -> Result<Vec<Subspace>> {
    let mut out: Vec<Subspace> = all_subspaces(f.n_vars(), k)?
        .filter(|v| naive_is_m_subspace(f, v))
        .collect();
    out.sort();
    Ok(out)
}

/// Unpruned Dillon test: scans every `n/2`-dimensional subspace.
pub fn naive_m_check(f: &BooleanFunction) -> Result<ClassVerdict> {
    let n = f.n_vars();
    cap(n, SUBSPACE_MAX_VARS, "naive_m_check")?;
    if !naive_walsh(f)?.is_bent() {
        return Err(Error::NotBent);
    }
    let mut scanned = 0u64;
    for v in all_subspaces(n, n / 2)? {
        scanned += 1;
        if naive_is_m_subspace(f, &v) {
            return Ok(ClassVerdict::Inside { witness: v });
        }
    }
    Ok(ClassVerdict::Outside {
        certificate: Certificate {
            dim: n / 2,
            nodes_explored: scanned,
            budget: scanned,
            method: "exhaustive".into(),
        },
    })
}

/// Number of `k`-dimensional subspaces of `F_2^n`.
pub fn gaussian_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfPolynomial;
    use std::collections::BTreeSet;

    #[test]
    fn naive_walsh_small() {
        let z = BooleanFunction::zero(2).unwrap();
        assert_eq!(naive_walsh(&z).unwrap().values(), &[4, 0, 0, 0]);
        let f = AnfPolynomial::parse(2, "x1*x2").unwrap().to_function().unwrap();
        assert!(naive_walsh(&f).unwrap().values().iter().all(|v| v.abs() == 2));
        assert!(naive_walsh(&BooleanFunction::zero(13).unwrap()).is_err());
    }

    #[test]
    fn naive_walsh_matches_pointwise_sum() {
        for n in [3, 7] {
            let f = BooleanFunction::from_fn(n, |x| x.wrapping_mul(2654435761) >> 7 & 1 == 1).unwrap();
            let w = naive_walsh(&f).unwrap();
            for a in 0..f.size() {
                let direct: i64 = (0..f.size())
                    .map(|x| if f.get(x) ^ ((a & x).count_ones() & 1 == 1) { -1 } else { 1 })
                    .sum();
                assert_eq!(w.get(a), direct);
            }
        }
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(all_subspaces(4, 2).unwrap().count(), 35);
        assert_eq!(gaussian_binomial(4, 2), 35);
        assert_eq!(all_subspaces(5, 0).unwrap().count(), 1);
        for (n, k) in [(5, 2), (6, 3), (3, 3), (6, 1)] {
            let all: BTreeSet<Subspace> = all_subspaces(n, k).unwrap().collect();
            assert_eq!(all.len() as u128, gaussian_binomial(n, k));
            assert!(all.iter().all(|v| v.dim() == k && Subspace::span(v.basis(), n) == *v));
        }
        assert!(all_subspaces(9, 2).is_err());
    }

    #[test]
    fn second_derivative_symmetric() {
        let f = AnfPolynomial::parse(4, "x1*x2*x3+x2*x4").unwrap().to_function().unwrap();
        assert!(direct_second_derivative(&f, 5, 5).unwrap().is_zero());
        for (u, v) in [(1, 2), (3, 12), (7, 9)] {
            assert_eq!(
                direct_second_derivative(&f, u, v).unwrap(),
                direct_second_derivative(&f, v, u).unwrap()
            );
        }
    }
}

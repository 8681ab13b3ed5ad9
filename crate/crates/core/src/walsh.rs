//! Walsh-Hadamard spectra, spectral classification and duals of bent functions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};

/// `W_f(w) = sum_x (-1)^(f(x) + w.x)` for every `w`, indexed like the truth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n_vars: usize,
    values: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpectrumTag {
    Bent,
    SemiBent,
    FiveValued,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumClass {
    pub tag: SpectrumTag,
    /// Distinct absolute values of the spectrum, ascending.
    pub value_set: BTreeSet<u64>,
}

/// In-place unnormalised butterfly; `v.len()` must be a power of two.
pub(crate) fn butterfly(v: &mut [i64]) {
    let mut h = 1;
    while h < v.len() {
        for block in v.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

pub fn walsh_transform(f: &BooleanFunction) -> WalshSpectrum {
    let mut values: Vec<i64> = f.bits().map(|b| if b { -1 } else { 1 }).collect();
    butterfly(&mut values);
    WalshSpectrum {
        n_vars: f.n_vars(),
        values,
    }
}

impl WalshSpectrum {
    pub fn from_values(n_vars: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() != 1usize << n_vars {
            return Err(Error::Invalid(format!(
                "spectrum of {} variables needs {} values, got {}",
                n_vars,
                1usize << n_vars,
                values.len()
            )));
        }
        Ok(Self { n_vars, values })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, w: u32) -> i64 {
        self.values[w as usize]
    }

    pub fn sum_of_squares(&self) -> i128 {
        self.values.iter().map(|&v| (v as i128) * (v as i128)).sum()
    }

    /// Exact Parseval identity check.
    pub fn parseval_holds(&self) -> bool {
        self.sum_of_squares() == 1i128 << (2 * self.n_vars)
    }

    pub fn abs_values(&self) -> BTreeSet<u64> {
        self.values.iter().map(|v| v.unsigned_abs()).collect()
    }

    pub fn classify(&self) -> SpectrumClass {
        classify_spectrum(self)
    }

    pub fn is_bent(&self) -> bool {
        self.n_vars.is_multiple_of(2) && {
            let amp = 1u64 << (self.n_vars / 2);
            self.values.iter().all(|v| v.unsigned_abs() == amp)
        }
    }
}

/// Bent: all |v| = 2^(n/2). Semi-bent: |v| in {0, 2^((n+1)/2)} for odd n and
/// {0, 2^((n+2)/2)} for even n. Five-valued (even n): |v| takes all of
/// {0, 2^(n/2), 2^(n/2+1)}.
pub fn classify_spectrum(s: &WalshSpectrum) -> SpectrumClass {
    let n = s.n_vars;
    let value_set = s.abs_values();
    let tag = if s.is_bent() {
        SpectrumTag::Bent
    } else {
        let semi_amp = 1u64 << ((n + 2) / 2);
        if value_set.iter().all(|&v| v == 0 || v == semi_amp) {
            SpectrumTag::SemiBent
        } else if n.is_multiple_of(2) && value_set.len() >= 3 && {
            let (lo, hi) = (1u64 << (n / 2), 1u64 << (n / 2 + 1));
            value_set.iter().all(|&v| v == 0 || v == lo || v == hi)
        } {
            SpectrumTag::FiveValued
        } else {
            SpectrumTag::Other
        }
    };
    SpectrumClass { tag, value_set }
}

pub fn is_bent(f: &BooleanFunction) -> bool {
    f.n_vars().is_multiple_of(2) && walsh_transform(f).is_bent()
}

/// The dual `f*` with `W_f(u) = 2^(n/2) (-1)^(f*(u))`.
pub fn dual(f: &BooleanFunction) -> Result<BooleanFunction> {
    let s = walsh_transform(f);
    if !s.is_bent() {
        return Err(Error::NotBent);
    }
    BooleanFunction::from_fn(f.n_vars(), |u| s.get(u) < 0)
}

/// Autocorrelation `C_f(b) = sum_x (-1)^(f(x) + f(x+b))` for every `b`.
pub(crate) fn autocorrelation(f: &BooleanFunction) -> Vec<i64> {
    let mut v = walsh_transform(f).values;
    for x in v.iter_mut() {
        *x *= *x;
    }
    butterfly(&mut v);
    let shift = f.n_vars();
    v.iter_mut().for_each(|x| *x >>= shift);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfPolynomial;

    fn parse(n: usize, s: &str) -> BooleanFunction {
        AnfPolynomial::parse(n, s).unwrap().to_function().unwrap()
    }

    #[test]
    fn constant_zero_spectrum() {
        let s = walsh_transform(&BooleanFunction::zero(3).unwrap());
        assert_eq!(s.values(), &[8, 0, 0, 0, 0, 0, 0, 0]);
        assert!(s.parseval_holds());
        assert_eq!(
            classify_spectrum(&walsh_transform(&BooleanFunction::zero(4).unwrap())).tag,
            SpectrumTag::Other
        );
    }

    #[test]
    fn classification_examples() {
        assert_eq!(walsh_transform(&parse(4, "x1*x2+x3*x4")).classify().tag, SpectrumTag::Bent);
        let c = walsh_transform(&parse(3, "x1*x2")).classify();
        assert_eq!(c.tag, SpectrumTag::SemiBent);
        assert_eq!(c.value_set, BTreeSet::from([0, 4]));
        assert!(walsh_transform(&parse(2, "x1*x2")).values().iter().all(|v| v.abs() == 2));
    }

    #[test]
    fn five_valued_example() {
        let c = walsh_transform(&parse(4, "x1*x2*x3+x1*x4")).classify();
        assert_eq!(c.value_set, BTreeSet::from([0, 4, 8]));
        assert_eq!(c.tag, SpectrumTag::FiveValued);
        // |W| = 12 occurs, so not five-valued
        let c = walsh_transform(&parse(4, "x1*x2*x3")).classify();
        assert_eq!(c.value_set, BTreeSet::from([0, 4, 12]));
        assert_eq!(c.tag, SpectrumTag::Other);
    }

    #[test]
    fn dual_examples() {
        let f = parse(4, "x1*x2+x3*x4");
        assert_eq!(dual(&f).unwrap(), f);
        let g = parse(4, "x1*x2+x3*x4+1");
        assert_eq!(dual(&g).unwrap(), g);
        assert_eq!(dual(&parse(4, "x1*x2")), Err(Error::NotBent));
    }

    #[test]
    fn autocorrelation_at_zero_is_full() {
        let f = parse(5, "x1*x2*x3+x4*x5+x2");
        let c = autocorrelation(&f);
        assert_eq!(c[0], 32);
        for b in 0..32u32 {
            let direct: i64 = (0..32u32)
                .map(|x| if f.get(x) ^ f.get(x ^ b) { -1 } else { 1 })
                .sum();
            assert_eq!(c[b as usize], direct);
        }
    }
}

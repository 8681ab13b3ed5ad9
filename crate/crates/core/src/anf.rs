//! Algebraic normal form via the binary Möbius transform.

use crate::boolean::{word_count, BooleanFunction};
use crate::error::{Error, Result};

/// A polynomial over GF(2) given by its monomials. Bit `j` of a monomial mask
/// means `x_{j+1}` occurs in it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnfPolynomial {
    n_vars: usize,
    monomials: Vec<u32>,
}

/// Möbius transform on packed words; an involution over GF(2).
fn moebius_in_place(n_vars: usize, words: &mut [u64]) {
    const SHIFT_MASKS: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0F0F_0F0F_0F0F_0F0F,
        0x00FF_00FF_00FF_00FF,
        0x0000_FFFF_0000_FFFF,
        0x0000_0000_FFFF_FFFF,
    ];
    for (j, mask) in SHIFT_MASKS.iter().enumerate().take(n_vars.min(6)) {
        let s = 1 << j;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << s;
        }
    }
    let mut step = 1;
    while step < words.len() {
        for i in 0..words.len() {
            if i & step != 0 {
                words[i] ^= words[i ^ step];
            }
        }
        step <<= 1;
    }
    debug_assert_eq!(words.len(), word_count(n_vars));
}

pub fn anf(f: &BooleanFunction) -> AnfPolynomial {
    let mut words = f.words().to_vec();
    moebius_in_place(f.n_vars(), &mut words);
    let coeffs = BooleanFunction::from_words(f.n_vars(), words).expect("same shape");
    let monomials = (0..coeffs.size()).filter(|&u| coeffs.get(u)).collect();
    AnfPolynomial {
        n_vars: f.n_vars(),
        monomials,
    }
}

pub fn from_anf(p: &AnfPolynomial) -> Result<BooleanFunction> {
    p.to_function()
}

pub fn degree(f: &BooleanFunction) -> u32 {
    anf(f).degree()
}

impl AnfPolynomial {
    pub fn new(n_vars: usize, mut monomials: Vec<u32>) -> Result<Self> {
        if n_vars == 0 || n_vars > crate::boolean::MAX_VARS {
            return Err(Error::UnsupportedVarCount(n_vars));
        }
        if let Some(&m) = monomials.iter().find(|&&m| m >> n_vars != 0) {
            return Err(Error::Invalid(format!(
                "monomial mask {m:#x} uses variables beyond x{n_vars}"
            )));
        }
        // duplicate monomials cancel in GF(2)
        monomials.sort_unstable();
        let mut out: Vec<u32> = Vec::with_capacity(monomials.len());
        for m in monomials {
            if out.last() == Some(&m) {
                out.pop();
            } else {
                out.push(m);
            }
        }
        Ok(Self {
            n_vars,
            monomials: out,
        })
    }

    /// Parses `x1*x3+x2+1`; `0` is the zero polynomial.
    pub fn parse(n_vars: usize, text: &str) -> Result<Self> {
        crate::text::parse_anf(n_vars, text)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Monomial masks in ascending order.
    pub fn monomials(&self) -> &[u32] {
        &self.monomials
    }

    pub fn degree(&self) -> u32 {
        self.monomials.iter().map(|m| m.count_ones()).max().unwrap_or(0)
    }

    pub fn to_function(&self) -> Result<BooleanFunction> {
        let coeffs = BooleanFunction::from_fn(self.n_vars, |_| false)?;
        let mut words = coeffs.words().to_vec();
        for &m in &self.monomials {
            words[(m >> 6) as usize] ^= 1 << (m & 63);
        }
        moebius_in_place(self.n_vars, &mut words);
        BooleanFunction::from_words(self.n_vars, words)
    }
}

impl std::fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::text::format_anf(self))
    }
}

//! Bit-packed truth tables and the derivative calculus on them.
//!
//! Points of F_2^n are encoded as integers with x_1 in the least-significant
//! bit, so appending variables as high bits turns concatenation of pieces
//! into concatenation of tables.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 16;

/// Masks selecting the bits of a word whose in-word index has bit `j` clear.
const BLOCK_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// A Boolean function on F_2^n stored as a packed truth table.
///
/// For `n < 6` the table lives in the low `2^n` bits of a single word and the
/// remaining bits are kept zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    n_vars: usize,
    words: Vec<u64>,
}

pub(crate) fn word_count(n_vars: usize) -> usize {
    if n_vars <= 6 {
        1
    } else {
        1 << (n_vars - 6)
    }
}

pub(crate) fn tail_mask(n_vars: usize) -> u64 {
    if n_vars >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n_vars)) - 1
    }
}

/// Table of the linear function `x -> w.x` restricted to a single word
/// (only the low six bits of `w` matter).
pub(crate) fn linear_word(w: u32) -> u64 {
    let mut out = 0u64;
    for j in 0..6 {
        if w >> j & 1 == 1 {
            out ^= !BLOCK_MASKS[j];
        }
    }
    out
}

/// Permute the bits of one word by `i -> i ^ r` for `r < 64`.
#[inline]
pub(crate) fn translate_word(mut w: u64, r: u32) -> u64 {
    for j in 0..6 {
        if r >> j & 1 == 1 {
            let s = 1u32 << j;
            let m = BLOCK_MASKS[j];
            w = ((w & m) << s) | ((w >> s) & m);
        }
    }
    w
}

impl BooleanFunction {
    fn check_vars(n_vars: usize) -> Result<()> {
        if n_vars == 0 || n_vars > MAX_VARS {
            return Err(Error::UnsupportedVarCount(n_vars));
        }
        Ok(())
    }

    pub fn zero(n_vars: usize) -> Result<Self> {
        Self::check_vars(n_vars)?;
        Ok(Self {
            n_vars,
            words: vec![0; word_count(n_vars)],
        })
    }

    pub fn one(n_vars: usize) -> Result<Self> {
        Ok(Self::zero(n_vars)?.complement())
    }

    /// Builds a function by evaluating `f` on every point.
    pub fn from_fn(n_vars: usize, mut f: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut out = Self::zero(n_vars)?;
        for x in 0..out.size() {
            if f(x) {
                out.words[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        Ok(out)
    }

    /// Builds a function from packed words; bits past `2^n_vars` must be zero.
    pub fn from_words(n_vars: usize, words: Vec<u64>) -> Result<Self> {
        Self::check_vars(n_vars)?;
        if words.len() != word_count(n_vars) {
            return Err(Error::Invalid(format!(
                "expected {} words for {} variables, got {}",
                word_count(n_vars),
                n_vars,
                words.len()
            )));
        }
        if words[0] & !tail_mask(n_vars) != 0 {
            return Err(Error::Invalid("bits set beyond the table length".into()));
        }
        Ok(Self { n_vars, words })
    }

    pub fn from_bits(n_vars: usize, bits: &[bool]) -> Result<Self> {
        Self::check_vars(n_vars)?;
        if bits.len() != 1 << n_vars {
            return Err(Error::Invalid(format!(
                "expected {} bits, got {}",
                1usize << n_vars,
                bits.len()
            )));
        }
        Self::from_fn(n_vars, |x| bits[x as usize])
    }

    /// The linear function `x -> w.x`.
    pub fn linear(n_vars: usize, w: u32) -> Result<Self> {
        Self::check_vars(n_vars)?;
        let low = linear_word(w) & tail_mask(n_vars);
        let high = w >> 6;
        let words = (0..word_count(n_vars) as u32)
            .map(|i| if (i & high).count_ones() & 1 == 1 { !low } else { low })
            .collect();
        Ok(Self { n_vars, words })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Number of points, `2^n_vars`.
    pub fn size(&self) -> u32 {
        1 << self.n_vars
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn evaluate(&self, x: u32) -> Result<bool> {
        if x >= self.size() {
            return Err(Error::PointOutOfRange {
                point: x,
                n_vars: self.n_vars,
            });
        }
        Ok(self.get(x))
    }

    /// Unchecked evaluation; panics on out-of-range points in debug builds.
    #[inline]
    pub fn get(&self, x: u32) -> bool {
        debug_assert!(x < self.size());
        self.words[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.size()).map(move |x| self.get(x))
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_one(&self) -> bool {
        self.weight() == self.size()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    pub fn complement(&self) -> Self {
        let mask = tail_mask(self.n_vars);
        Self {
            n_vars: self.n_vars,
            words: self.words.iter().map(|w| !w & mask).collect(),
        }
    }

    pub fn add_linear(&self, w: u32) -> Self {
        let lin = Self::linear(self.n_vars, w).expect("same size");
        self ^ &lin
    }

    fn ensure_same_size(&self, other: &Self) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::SizeMismatch {
                expected: self.n_vars,
                got: other.n_vars,
            });
        }
        Ok(())
    }

    /// Pointwise sum over GF(2); errors on size mismatch.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ensure_same_size(other)?;
        Ok(self ^ other)
    }

    /// `x -> f(x + r)`.
    pub fn translate(&self, r: u32) -> Self {
        let r = r & (self.size() - 1);
        let high = (r >> 6) as usize;
        let low = r & 63;
        let words = (0..self.words.len())
            .map(|i| translate_word(self.words[i ^ high], low))
            .collect();
        Self {
            n_vars: self.n_vars,
            words,
        }
    }

    /// First-order derivative `D_a f(x) = f(x) + f(x + a)`.
    pub fn derivative(&self, a: u32) -> Result<Self> {
        if a >= self.size() {
            return Err(Error::PointOutOfRange {
                point: a,
                n_vars: self.n_vars,
            });
        }
        Ok(self.derivative_unchecked(a))
    }

    pub(crate) fn derivative_unchecked(&self, a: u32) -> Self {
        self ^ &self.translate(a)
    }

    /// Iterated derivative along `generators`; zero whenever they are linearly
    /// dependent.
    pub fn higher_derivative(&self, generators: &[u32]) -> Result<Self> {
        let mut out = self.clone();
        for &a in generators {
            out = out.derivative(a)?;
        }
        Ok(out)
    }

    /// `D_a D_b f`, computed as the four-point sum.
    pub fn second_derivative(&self, a: u32, b: u32) -> Result<Self> {
        self.higher_derivative(&[a, b])
    }

    /// `true` iff `D_a D_b f` vanishes identically.
    pub fn second_derivative_vanishes(&self, a: u32, b: u32) -> bool {
        let mask = self.size() - 1;
        let (a, b) = (a & mask, b & mask);
        let da = self.derivative_unchecked(a);
        let shifted = da.translate(b);
        da == shifted
    }

    /// `x -> f(M x)` for a linear map given pointwise.
    pub(crate) fn compose_with(&self, map: impl Fn(u32) -> u32) -> Self {
        Self::from_fn(self.n_vars, |x| self.get(map(x))).expect("valid size")
    }
}

impl BitXor for &BooleanFunction {
    type Output = BooleanFunction;

    /// Pointwise sum. Panics if the sizes differ; use [`BooleanFunction::try_add`]
    /// for a fallible version.
    fn bitxor(self, rhs: Self) -> BooleanFunction {
        assert_eq!(self.n_vars, rhs.n_vars, "size mismatch in pointwise sum");
        BooleanFunction {
            n_vars: self.n_vars,
            words: self
                .words
                .iter()
                .zip(&rhs.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }
}

impl BitXorAssign<&BooleanFunction> for BooleanFunction {
    fn bitxor_assign(&mut self, rhs: &BooleanFunction) {
        assert_eq!(self.n_vars, rhs.n_vars, "size mismatch in pointwise sum");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n_vars, crate::text::table_hex(self))
    }
}

//! Square matrices over GF(2) and extended-affine transforms of Boolean functions.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};

/// An `n x n` matrix over GF(2). Row `i` is a mask; `(A x)_i = rows[i] . x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinaryMatrix {
    n: usize,
    rows: Vec<u32>,
}

/// Rank over GF(2) of a list of vectors.
pub fn rank_of(vectors: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &v in vectors {
        let mut v = v;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

impl BinaryMatrix {
    pub fn from_rows(n: usize, rows: Vec<u32>) -> Result<Self> {
        if rows.len() != n || n > 32 {
            return Err(Error::Invalid(format!("expected {n} rows, got {}", rows.len())));
        }
        let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(Error::Invalid("row has bits beyond the matrix width".into()));
        }
        Ok(Self { n, rows })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            rows: (0..n).map(|i| 1 << i).collect(),
        }
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(n: usize, columns: &[u32]) -> Result<Self> {
        if columns.len() != n {
            return Err(Error::Invalid(format!("expected {n} columns, got {}", columns.len())));
        }
        let rows = (0..n)
            .map(|i| {
                columns
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, c)| acc | ((c >> i & 1) << j))
            })
            .collect();
        Self::from_rows(n, rows)
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mask = (1u32 << n) - 1;
        Self {
            n,
            rows: (0..n).map(|_| rng.gen::<u32>() & mask).collect(),
        }
    }

    pub fn random_invertible(n: usize, rng: &mut impl Rng) -> Self {
        loop {
            let m = Self::random(n, rng);
            if m.is_invertible() {
                return m;
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | ((r >> j & 1) << i))
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | (((r & x).count_ones() & 1) << i))
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.rows)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn mul(&self, other: &Self) -> Self {
        let cols: Vec<u32> = (0..self.n).map(|j| self.apply(other.column(j))).collect();
        Self::from_columns(self.n, &cols).expect("square")
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn add_identity(&self) -> Self {
        self.add(&Self::identity(self.n))
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r] >> col & 1 == 1).ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(Self { n, rows: inv })
    }

    /// A linear bijection sending `sources[i]` to `targets[i]`. Both lists must
    /// be linearly independent and of equal length; they are extended to full
    /// bases with unit vectors.
    pub fn mapping(n: usize, sources: &[u32], targets: &[u32]) -> Result<Self> {
        if sources.len() != targets.len() {
            return Err(Error::Invalid("source and target lists differ in length".into()));
        }
        let src = extend_to_basis(n, sources)?;
        let dst = extend_to_basis(n, targets)?;
        let s = Self::from_columns(n, &src)?;
        let d = Self::from_columns(n, &dst)?;
        Ok(d.mul(&s.inverse()?))
    }
}

/// Extends independent `vectors` to a basis of F_2^n with unit vectors.
pub fn extend_to_basis(n: usize, vectors: &[u32]) -> Result<Vec<u32>> {
    let mut out = vectors.to_vec();
    if rank_of(&out) != out.len() {
        return Err(Error::Invalid("vectors are linearly dependent".into()));
    }
    for i in 0..n {
        if out.len() == n {
            break;
        }
        out.push(1 << i);
        if rank_of(&out) != out.len() {
            out.pop();
        }
    }
    Ok(out)
}

/// `f -> f(A x + b) + c . x + d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineTransform {
    pub matrix: BinaryMatrix,
    pub shift: u32,
    pub linear_addend: u32,
    pub const_addend: bool,
}

impl AffineTransform {
    pub fn linear(matrix: BinaryMatrix) -> Self {
        Self {
            matrix,
            shift: 0,
            linear_addend: 0,
            const_addend: false,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::linear(BinaryMatrix::identity(n))
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mask = (1u32 << n) - 1;
        Self {
            matrix: BinaryMatrix::random_invertible(n, rng),
            shift: rng.gen::<u32>() & mask,
            linear_addend: rng.gen::<u32>() & mask,
            const_addend: rng.gen(),
        }
    }
}

pub fn apply_ea(f: &BooleanFunction, t: &AffineTransform) -> Result<BooleanFunction> {
    if t.matrix.n() != f.n_vars() {
        return Err(Error::SizeMismatch {
            expected: f.n_vars(),
            got: t.matrix.n(),
        });
    }
    if !t.matrix.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let moved = f.compose_with(|x| t.matrix.apply(x) ^ t.shift);
    let mut out = moved.add_linear(t.linear_addend);
    if t.const_addend {
        out = out.complement();
    }
    Ok(out)
}

/// `x -> f(A x)`.
pub fn compose_linear(f: &BooleanFunction, a: &BinaryMatrix) -> Result<BooleanFunction> {
    apply_ea(f, &AffineTransform::linear(a.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfPolynomial;
    use crate::walsh::is_bent;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_transform_is_noop() {
        let f = AnfPolynomial::parse(5, "x1*x2*x3+x4+x5*x1").unwrap().to_function().unwrap();
        assert_eq!(apply_ea(&f, &AffineTransform::identity(5)).unwrap(), f);
    }

    #[test]
    fn swap_preserves_symmetric_function() {
        let f = AnfPolynomial::parse(2, "x1*x2").unwrap().to_function().unwrap();
        let swap = BinaryMatrix::from_rows(2, vec![0b10, 0b01]).unwrap();
        assert_eq!(compose_linear(&f, &swap).unwrap(), f);
    }

    #[test]
    fn singular_rejected() {
        let f = BooleanFunction::zero(2).unwrap();
        let m = BinaryMatrix::from_rows(2, vec![0b11, 0b11]).unwrap();
        assert_eq!(compose_linear(&f, &m), Err(Error::SingularMatrix));
    }

    #[test]
    fn ea_preserves_bentness() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = AnfPolynomial::parse(6, "x1*x4+x2*x5+x3*x6+x4*x5*x6").unwrap().to_function().unwrap();
        assert!(is_bent(&f));
        for _ in 0..20 {
            let t = AffineTransform::random(6, &mut rng);
            assert!(is_bent(&apply_ea(&f, &t).unwrap()));
        }
    }

    #[test]
    fn inverse_and_mapping() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = BinaryMatrix::random_invertible(7, &mut rng);
            let inv = a.inverse().unwrap();
            assert_eq!(a.mul(&inv), BinaryMatrix::identity(7));
        }
        let m = BinaryMatrix::mapping(5, &[0b00011, 0b10000], &[0b00100, 0b01010]).unwrap();
        assert!(m.is_invertible());
        assert_eq!(m.apply(0b00011), 0b00100);
        assert_eq!(m.apply(0b10000), 0b01010);
    }
}

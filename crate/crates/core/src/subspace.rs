//! Subspaces of F_2^n in canonical reduced row echelon form.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// A subspace of F_2^n given by its RREF basis: every row's pivot is its
/// highest set bit, pivot columns are zero in all other rows, and rows are
/// sorted by descending pivot. Equal subspaces have equal bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_n: usize,
    basis: Vec<u32>,
}

#[inline]
pub(crate) fn pivot(v: u32) -> u32 {
    31 - v.leading_zeros()
}

impl Subspace {
    pub fn zero(ambient_n: usize) -> Self {
        Self {
            ambient_n,
            basis: Vec::new(),
        }
    }

    /// Canonical basis of the span of `vectors` (Gaussian elimination).
    pub fn span(vectors: &[u32], ambient_n: usize) -> Self {
        let mut rows: Vec<u32> = Vec::new();
        for &v in vectors {
            let mut v = v;
            for &r in &rows {
                if v >> pivot(r) & 1 == 1 {
                    v ^= r;
                }
            }
            if v == 0 {
                continue;
            }
            let p = pivot(v);
            for r in rows.iter_mut() {
                if *r >> p & 1 == 1 {
                    *r ^= v;
                }
            }
            rows.push(v);
            rows.sort_unstable_by(|a, b| b.cmp(a));
        }
        Self {
            ambient_n,
            basis: rows,
        }
    }

    /// Wraps rows already in canonical form. Callers must guarantee the RREF
    /// shape; this is checked in debug builds.
    pub fn from_rref_unchecked(ambient_n: usize, basis: Vec<u32>) -> Self {
        let s = Self { ambient_n, basis };
        debug_assert!(s.is_canonical(), "not in RREF: {:?}", s.basis);
        s
    }

    fn is_canonical(&self) -> bool {
        self.basis.windows(2).all(|w| pivot(w[0]) > pivot(w[1]))
            && self.basis.iter().all(|&r| r != 0)
            && self
                .basis
                .iter()
                .all(|&r| self.basis.iter().filter(|&&o| o >> pivot(r) & 1 == 1).count() == 1)
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn pivot_mask(&self) -> u32 {
        self.basis.iter().fold(0, |m, &r| m | 1 << pivot(r))
    }

    /// Representative of `v + self` with zeros in every pivot column.
    pub fn reduce(&self, mut v: u32) -> u32 {
        for &r in &self.basis {
            if v >> pivot(r) & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    pub fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    /// All `2^dim` elements, in Gray-code order starting from zero.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(1 << self.dim());
        out.push(0u32);
        for &r in &self.basis {
            let len = out.len();
            for i in 0..len {
                out.push(out[i] ^ r);
            }
        }
        out
    }

    pub fn with_vector(&self, v: u32) -> Self {
        let mut vs = self.basis.clone();
        vs.push(v);
        Self::span(&vs, self.ambient_n)
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut vs = self.basis.clone();
        vs.extend_from_slice(&other.basis);
        Self::span(&vs, self.ambient_n.max(other.ambient_n))
    }

    pub fn intersection_dim(&self, other: &Self) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn image(&self, a: &BinaryMatrix) -> Self {
        let vs: Vec<u32> = self.basis.iter().map(|&r| a.apply(r)).collect();
        Self::span(&vs, self.ambient_n)
    }

    /// The same vectors seen inside a larger ambient space (new coordinates zero).
    pub fn embed(&self, ambient_n: usize) -> Self {
        assert!(ambient_n >= self.ambient_n);
        Self {
            ambient_n,
            basis: self.basis.clone(),
        }
    }

    /// `F_2^d x {0}`: the span of the first `d` unit vectors.
    pub fn coordinate(d: usize, ambient_n: usize) -> Self {
        Self::span(&(0..d).map(|i| 1u32 << i).collect::<Vec<_>>(), ambient_n)
    }

    pub fn basis_hex(&self) -> Vec<String> {
        self.basis.iter().map(|r| format!("{r:x}")).collect()
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis
            .cmp(&other.basis)
            .then(self.ambient_n.cmp(&other.ambient_n))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, [{}])", self.ambient_n, self.basis_hex().join(", "))
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis_hex().serialize(s)
    }
}

pub fn canonicalize(vectors: &[u32], ambient_n: usize) -> Subspace {
    Subspace::span(vectors, ambient_n)
}

/// `true` iff `D_a D_b f = 0` for all `a, b` in `v`.
///
/// For fixed `a` the set `{b : D_a D_b f = 0}` is closed under addition
/// (`D_{b+c} g = D_b g + (D_c g)(. + b)`), so testing every pair of basis
/// vectors already covers the whole span.
pub fn is_m_subspace(f: &BooleanFunction, v: &Subspace) -> Result<bool> {
    if v.ambient_n() != f.n_vars() {
        return Err(Error::SizeMismatch {
            expected: f.n_vars(),
            got: v.ambient_n(),
        });
    }
    let b = v.basis();
    Ok((0..b.len()).all(|i| (i + 1..b.len()).all(|j| f.second_derivative_vanishes(b[i], b[j]))))
}

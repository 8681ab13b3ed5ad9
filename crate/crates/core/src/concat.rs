//! Concatenations `f1||f2` and `f1||f2||f3||f4`, their second derivatives in
//! closed form, and structural decisions about their M-subspaces.
//!
//! The new variables are appended as high bits: `f1||f2` has `f(z, c)` at index
//! `z | c << n`, and the 4-concatenation has `f(z, y1, y2)` at index
//! `z | y1 << n | y2 << (n + 1)`, so `f(., 0, 0) = f1`, `f(., 1, 0) = f2`,
//! `f(., 0, 1) = f3` and `f(., 1, 1) = f4`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::boolean::{tail_mask, BooleanFunction};
use crate::error::{Error, Result};
use crate::search::{FindOutcome, MSearch, DEFAULT_BUDGET};
use crate::subspace::{is_m_subspace, Subspace};
use crate::walsh::{dual, is_bent, walsh_transform};

fn same_size(fs: &[&BooleanFunction]) -> Result<usize> {
    let n = fs[0].n_vars();
    if let Some(bad) = fs.iter().find(|f| f.n_vars() != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            got: bad.n_vars(),
        });
    }
    Ok(n)
}

pub fn concat2(f1: &BooleanFunction, f2: &BooleanFunction) -> Result<BooleanFunction> {
    let n = same_size(&[f1, f2])?;
    if n >= 6 {
        let mut words = f1.words().to_vec();
        words.extend_from_slice(f2.words());
        BooleanFunction::from_words(n + 1, words)
    } else {
        let w = f1.words()[0] | f2.words()[0] << (1u32 << n);
        BooleanFunction::from_words(n + 1, vec![w])
    }
}

pub fn concat4(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
    f4: &BooleanFunction,
) -> Result<BooleanFunction> {
    same_size(&[f1, f2, f3, f4])?;
    concat2(&concat2(f1, f2)?, &concat2(f3, f4)?)
}

fn halves(f: &BooleanFunction) -> Result<(BooleanFunction, BooleanFunction)> {
    let n = f.n_vars();
    if n < 2 {
        return Err(Error::Invalid("cannot split a function of one variable".into()));
    }
    if n > 6 {
        let (lo, hi) = f.words().split_at(f.words().len() / 2);
        Ok((
            BooleanFunction::from_words(n - 1, lo.to_vec())?,
            BooleanFunction::from_words(n - 1, hi.to_vec())?,
        ))
    } else {
        let w = f.words()[0];
        let mask = tail_mask(n - 1);
        Ok((
            BooleanFunction::from_words(n - 1, vec![w & mask])?,
            BooleanFunction::from_words(n - 1, vec![(w >> (1u32 << (n - 1))) & mask])?,
        ))
    }
}

/// The pieces of `f` viewed as a 2- or 4-concatenation.
pub fn restrictions(f: &BooleanFunction, arity: usize) -> Result<Vec<BooleanFunction>> {
    match arity {
        2 => {
            let (a, b) = halves(f)?;
            Ok(vec![a, b])
        }
        4 => {
            if f.n_vars() < 3 {
                return Err(Error::Invalid("4-restriction needs at least 3 variables".into()));
            }
            let (lo, hi) = halves(f)?;
            let (f1, f2) = halves(&lo)?;
            let (f3, f4) = halves(&hi)?;
            Ok(vec![f1, f2, f3, f4])
        }
        _ => Err(Error::Invalid(format!("arity must be 2 or 4, got {arity}"))),
    }
}

/// `D_a f1 + (D_a f2)^b`: the common shape of the mixed-flag formulas.
fn mixed(f1: &BooleanFunction, f2: &BooleanFunction, a: u32, b: u32) -> BooleanFunction {
    &f1.derivative_unchecked(a) ^ &f2.derivative_unchecked(a).translate(b)
}

/// `D_{(a,ea)} D_{(b,eb)} (f1||f2)` by the closed formulas.
///
/// | flags   | evaluation                                          |
/// |---------|-----------------------------------------------------|
/// | (0, 0)  | `D_aD_b f1 || D_aD_b f2`                            |
/// | (0, 1)  | `g1 || g2`, `g1 = D_a f1 + (D_a f2)^b`, `g2 = D_a f2 + (D_a f1)^b` |
/// | (1, 0)  | as (0, 1) with `a` and `b` swapped                  |
/// | (1, 1)  | as (0, 1) with first direction `a + b`              |
pub fn second_derivative_concat2(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    (a, ea): (u32, bool),
    (b, eb): (u32, bool),
) -> Result<BooleanFunction> {
    same_size(&[f1, f2])?;
    let mask = f1.size() - 1;
    let (a, b) = (a & mask, b & mask);
    // reduce to D_{(x,0)} D_{(y,1)} or the all-zero-flag case
    let (x, y) = match (ea, eb) {
        (false, false) => {
            let d1 = f1.derivative_unchecked(a).derivative_unchecked(b);
            let d2 = f2.derivative_unchecked(a).derivative_unchecked(b);
            return concat2(&d1, &d2);
        }
        (false, true) => (a, b),
        (true, false) => (b, a),
        (true, true) => (a ^ b, b),
    };
    concat2(&mixed(f1, f2, x, y), &mixed(f2, f1, x, y))
}

/// Flags `(y1, y2)` of a direction in the 4-concatenation.
pub type Flags = (bool, bool);

fn flags_add(p: Flags, q: Flags) -> Flags {
    (p.0 ^ q.0, p.1 ^ q.1)
}

/// `D_{(a,alpha)} D_{(b,beta)} (f1||f2||f3||f4)` by the closed formulas.
///
/// `D_u D_v = D_{u+v} D_v = D_u D_{u+v}`, so only the flag pattern of the
/// three nonzero elements `u, v, u+v` matters:
///
/// | flags of {u, v, u+v}  | evaluation                                      |
/// |-----------------------|-------------------------------------------------|
/// | all (0,0)             | `D_aD_b f1 || D_aD_b f2 || D_aD_b f3 || D_aD_b f4` |
/// | (0,0), (1,0), (1,0)   | `s || s^a || t || t^a`, `s = D_b f1 + (D_b f2)^a`, `t = D_b f3 + (D_b f4)^a` |
/// | (0,0), (0,1), (0,1)   | `s || t || s^a || t^a`, `s = D_b f1 + (D_b f3)^a`, `t = D_b f2 + (D_b f4)^a` |
/// | (0,0), (1,1), (1,1)   | `s || t || t^a || s^a`, `s = D_b f1 + (D_b f4)^a`, `t = D_b f2 + (D_b f3)^a` |
/// | (0,1), (1,0), (1,1)   | `r || r^b || r^a || r^(a+b)`, `r = f1 + f2^b + f3^a + f4^(a+b)` |
///
/// In the middle rows `b` is the element with flags (0,0) and `a` either of
/// the others; in the last row `a` carries (0,1) and `b` carries (1,0). The
/// ten unordered flag pairs map onto these rows as:
/// {00,00} row 1; {00,10}, {10,10} row 2; {00,01}, {01,01} row 3;
/// {00,11}, {11,11} row 4; {01,10}, {10,11}, {01,11} row 5.
pub fn second_derivative_concat4(
    fs: [&BooleanFunction; 4],
    (a, alpha): (u32, Flags),
    (b, beta): (u32, Flags),
) -> Result<BooleanFunction> {
    same_size(&fs)?;
    let [f1, f2, f3, f4] = fs;
    let mask = f1.size() - 1;
    let u = (a & mask, alpha);
    let v = (b & mask, beta);
    let w = (u.0 ^ v.0, flags_add(alpha, beta));
    const ZERO: Flags = (false, false);
    let elems = [u, v, w];
    if elems.iter().all(|e| e.1 == ZERO) {
        let d = |f: &BooleanFunction| f.derivative_unchecked(u.0).derivative_unchecked(v.0);
        return concat4(&d(f1), &d(f2), &d(f3), &d(f4));
    }
    if let Some(&(bz, _)) = elems.iter().find(|e| e.1 == ZERO) {
        let (az, gamma) = *elems.iter().find(|e| e.1 != ZERO).expect("one nonzero flag");
        let (s, t) = match gamma {
            (true, false) => (mixed(f1, f2, bz, az), mixed(f3, f4, bz, az)),
            (false, true) => (mixed(f1, f3, bz, az), mixed(f2, f4, bz, az)),
            _ => (mixed(f1, f4, bz, az), mixed(f2, f3, bz, az)),
        };
        return match gamma {
            (true, false) => concat4(&s, &s.translate(az), &t, &t.translate(az)),
            (false, true) => concat4(&s, &t, &s.translate(az), &t.translate(az)),
            _ => concat4(&s, &t, &t.translate(az), &s.translate(az)),
        };
    }
    let az = elems.iter().find(|e| e.1 == (false, true)).expect("flag 01").0;
    let bz = elems.iter().find(|e| e.1 == (true, false)).expect("flag 10").0;
    let r = four_point_sum(fs, az, bz);
    concat4(&r, &r.translate(bz), &r.translate(az), &r.translate(az ^ bz))
}

/// `f1 + f2^b + f3^a + f4^(a+b)`.
fn four_point_sum(fs: [&BooleanFunction; 4], a: u32, b: u32) -> BooleanFunction {
    let mut r = fs[0].clone();
    r ^= &fs[1].translate(b);
    r ^= &fs[2].translate(a);
    r ^= &fs[3].translate(a ^ b);
    r
}

/// `true` iff the Walsh spectra never overlap in support.
pub fn disjoint_spectra(f1: &BooleanFunction, f2: &BooleanFunction) -> Result<bool> {
    same_size(&[f1, f2])?;
    let (s1, s2) = (walsh_transform(f1), walsh_transform(f2));
    Ok(s1.values().iter().zip(s2.values()).all(|(x, y)| x * y == 0))
}

/// For four bent pieces: `true` iff `f1* + f2* + f3* + f4* = 1`.
pub fn bent4_dual_sum(fs: [&BooleanFunction; 4]) -> Result<bool> {
    same_size(&fs)?;
    let mut acc = dual(fs[0])?;
    for f in &fs[1..] {
        acc ^= &dual(f)?;
    }
    Ok(acc.is_one())
}

/// Options shared by the structural verdicts.
#[derive(Debug, Clone, Copy)]
pub struct VerdictOptions {
    pub budget: u64,
    /// Re-derive the verdict by direct search on the concatenation when it
    /// has at most eight variables.
    pub cross_check: bool,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            cross_check: false,
        }
    }
}

impl VerdictOptions {
    pub fn checked() -> Self {
        Self {
            cross_check: true,
            ..Self::default()
        }
    }
}

const CROSS_CHECK_MAX_VARS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossCheck {
    Passed,
    Skipped,
}

/// Which condition decided a structural verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// The pieces share an M-subspace of the target dimension.
    Thm1A,
    /// A shared subspace one dimension lower and a shift `u` satisfy the
    /// derivative identity `D_a f1(z) = D_a f2(z + u)` on the whole subspace.
    Thm1B,
    /// Both conditions hold: no M-subspace of the target dimension.
    Thm1Hold,
    Cor2A,
    Cor2B,
    Cor2C,
    Cor2Hold,
}

/// The five shapes an M-subspace of a 4-concatenation can take, by the image
/// of its projection onto the two new coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FormTag {
    /// `V x {(0,0)}`
    A,
    /// `<V x {(0,0)}, (a,1,0)>`
    B,
    /// `<V x {(0,0)}, (a,0,1)>`
    C,
    /// `<V x {(0,0)}, (a,1,1)>`
    D,
    /// `<V x {(0,0)}, (a,0,1), (b,1,0)>`
    E,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConcatWitness {
    /// Common M-subspace `V` of the pieces.
    pub piece_subspace: Subspace,
    /// The shift vectors (`u`; `a`; or `a, b`) in piece coordinates.
    pub vectors: Vec<u32>,
    pub form: Option<FormTag>,
    /// The reconstructed M-subspace of the concatenation.
    pub subspace: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConcatVerdict {
    /// Dimension of the M-subspaces of the concatenation in question.
    pub dim: usize,
    /// Whether the concatenation has an M-subspace of dimension `dim`. For
    /// the corollary verdicts this is membership in M#.
    pub inside_mm: bool,
    pub condition: Condition,
    pub witness: Option<ConcatWitness>,
    pub cross_check: CrossCheck,
}

fn check_witness(f: &BooleanFunction, w: &Option<ConcatWitness>, dim: usize) -> Result<()> {
    if let Some(w) = w {
        if w.subspace.dim() != dim || !is_m_subspace(f, &w.subspace)? {
            return Err(Error::CrossCheckFailed(format!(
                "witness {:?} is not a {dim}-dimensional M-subspace",
                w.subspace
            )));
        }
    }
    Ok(())
}

fn cross_check(f: &BooleanFunction, dim: usize, structural: bool, opts: &VerdictOptions) -> Result<CrossCheck> {
    if !opts.cross_check || f.n_vars() > CROSS_CHECK_MAX_VARS {
        return Ok(CrossCheck::Skipped);
    }
    let direct = MSearch::single(f).with_budget(opts.budget).find(dim)?;
    let direct = matches!(direct, FindOutcome::Found { .. });
    if direct != structural {
        return Err(Error::CrossCheckFailed(format!(
            "structural verdict {structural} but direct search says {direct} for dimension {dim}"
        )));
    }
    Ok(CrossCheck::Passed)
}

/// Derivatives `D_v f` for every `v` in `elems`.
fn derivatives(f: &BooleanFunction, elems: &[u32]) -> Vec<BooleanFunction> {
    elems.iter().map(|&v| f.derivative_unchecked(v)).collect()
}

/// `D_v f = (D_v g)^shift` for every tabulated `v`.
fn shifted_match(df: &[BooleanFunction], dg: &[BooleanFunction], shift: u32) -> bool {
    df.iter().zip(dg).all(|(x, y)| *x == y.translate(shift))
}

/// Decides whether `f1||f2` has a `(k+1)`-dimensional M-subspace through the
/// conditions on the pieces: (a) no common `(k+1)`-dimensional M-subspace, and
/// (b) for every common `k`-dimensional `V` and every `u` some `a` in `V` has
/// `D_a f1(z) + D_a f2(z + u)` nonzero somewhere. The concatenation has no such
/// subspace iff both hold.
pub fn theorem1_verdict(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    k: usize,
    opts: &VerdictOptions,
) -> Result<ConcatVerdict> {
    let n = same_size(&[f1, f2])?;
    if k > n {
        return Err(Error::Invalid(format!("k = {k} exceeds n = {n}")));
    }
    let f = concat2(f1, f2)?;
    let search = MSearch::new(&[f1, f2])?.with_budget(opts.budget);
    let mut condition = Condition::Thm1Hold;
    let mut witness = None;
    let shared = if k < n { search.find(k + 1)? } else { FindOutcome::Exhausted { nodes_explored: 0 } };
    if let FindOutcome::Found { witness: v, .. } = shared {
        condition = Condition::Thm1A;
        witness = Some(ConcatWitness {
            subspace: v.embed(n + 1),
            piece_subspace: v,
            vectors: vec![],
            form: None,
        });
    } else {
        'outer: for v in search.enumerate(k)?.subspaces {
            let elems = v.elements();
            let (d1, d2) = (derivatives(f1, &elems), derivatives(f2, &elems));
            let pivmask = v.pivot_mask();
            for u in (0..f1.size()).filter(|u| u & pivmask == 0) {
                if shifted_match(&d1, &d2, u) {
                    condition = Condition::Thm1B;
                    let w = v.embed(n + 1).with_vector(u | 1 << n);
                    witness = Some(ConcatWitness {
                        piece_subspace: v,
                        vectors: vec![u],
                        form: None,
                        subspace: w,
                    });
                    break 'outer;
                }
            }
        }
    }
    let inside = witness.is_some();
    check_witness(&f, &witness, k + 1)?;
    let cc = cross_check(&f, k + 1, inside, opts)?;
    Ok(ConcatVerdict {
        dim: k + 1,
        inside_mm: inside,
        condition,
        witness,
        cross_check: cc,
    })
}

/// For pieces on an odd number `n = 2k+1` of variables with `f1||f2` bent:
/// the concatenation lies in M# iff it has a `(k+1)`-dimensional M-subspace.
pub fn corollary1_outside_mm(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    opts: &VerdictOptions,
) -> Result<ConcatVerdict> {
    let n = same_size(&[f1, f2])?;
    if n % 2 == 0 {
        return Err(Error::Invalid(format!("pieces must have an odd number of variables, got {n}")));
    }
    if !is_bent(&concat2(f1, f2)?) {
        return Err(Error::NotBent);
    }
    theorem1_verdict(f1, f2, (n - 1) / 2, opts)
}

/// One M-subspace of a 4-concatenation built from the pieces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormSubspace {
    pub subspace: Subspace,
    pub form: FormTag,
    pub piece_subspace: Subspace,
    pub vectors: Vec<u32>,
}

impl From<FormSubspace> for ConcatWitness {
    fn from(f: FormSubspace) -> Self {
        ConcatWitness {
            piece_subspace: f.piece_subspace,
            vectors: f.vectors,
            form: Some(f.form),
            subspace: f.subspace,
        }
    }
}

/// Piece pairings `(i, j)` whose derivative identity `D_v f_i = (D_v f_j)^a`
/// each single-vector form requires.
const FORM_PAIRS: [(FormTag, [(usize, usize); 2], Flags); 3] = [
    (FormTag::B, [(0, 1), (2, 3)], (true, false)),
    (FormTag::C, [(0, 2), (1, 3)], (false, true)),
    (FormTag::D, [(0, 3), (1, 2)], (true, true)),
];

struct FormBuilder<'a> {
    fs: [&'a BooleanFunction; 4],
    n: usize,
    search: MSearch,
}

impl FormBuilder<'_> {
    fn lift(&self, z: u32, flags: Flags) -> u32 {
        z | (flags.0 as u32) << self.n | (flags.1 as u32) << (self.n + 1)
    }

    fn form_a(&self, t: usize, first: bool, out: &mut Vec<FormSubspace>) -> Result<()> {
        let vs = if first {
            self.search.find(t)?.witness().cloned().into_iter().collect()
        } else {
            self.search.enumerate(t)?.subspaces
        };
        for v in vs {
            out.push(FormSubspace {
                subspace: v.embed(self.n + 2),
                form: FormTag::A,
                piece_subspace: v,
                vectors: vec![],
            });
        }
        Ok(())
    }

    fn single_vector_forms(&self, t: usize, first: bool, out: &mut Vec<FormSubspace>) -> Result<()> {
        for v in self.search.enumerate(t - 1)?.subspaces {
            let elems = v.elements();
            let ds: Vec<Vec<BooleanFunction>> = self.fs.iter().map(|f| derivatives(f, &elems)).collect();
            let pivmask = v.pivot_mask();
            for &(tag, pairs, flags) in &FORM_PAIRS {
                for a in (0..1u32 << self.n).filter(|a| a & pivmask == 0) {
                    if pairs.iter().all(|&(i, j)| shifted_match(&ds[i], &ds[j], a)) {
                        let w = v.embed(self.n + 2).with_vector(self.lift(a, flags));
                        out.push(FormSubspace {
                            subspace: w,
                            form: tag,
                            piece_subspace: v.clone(),
                            vectors: vec![a],
                        });
                        if first {
                            return Ok(());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn two_vector_form(&self, t: usize, first: bool, out: &mut Vec<FormSubspace>) -> Result<()> {
        for v in self.search.enumerate(t - 2)?.subspaces {
            let elems = v.elements();
            let ds: Vec<Vec<BooleanFunction>> = self.fs.iter().map(|f| derivatives(f, &elems)).collect();
            let pivmask = v.pivot_mask();
            let reps: Vec<u32> = (0..1u32 << self.n).filter(|a| a & pivmask == 0).collect();
            let valid_a: Vec<u32> = reps
                .iter()
                .copied()
                .filter(|&a| shifted_match(&ds[0], &ds[2], a) && shifted_match(&ds[1], &ds[3], a))
                .collect();
            let valid_b: Vec<u32> = reps
                .iter()
                .copied()
                .filter(|&b| shifted_match(&ds[0], &ds[1], b) && shifted_match(&ds[2], &ds[3], b))
                .collect();
            for &a in &valid_a {
                for &b in &valid_b {
                    if four_point_sum(self.fs, a, b).is_zero() {
                        let w = v
                            .embed(self.n + 2)
                            .with_vector(self.lift(a, (false, true)))
                            .with_vector(self.lift(b, (true, false)));
                        out.push(FormSubspace {
                            subspace: w,
                            form: FormTag::E,
                            piece_subspace: v.clone(),
                            vectors: vec![a, b],
                        });
                        if first {
                            return Ok(());
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Every `target_dim`-dimensional M-subspace of `f1||f2||f3||f4`, built from
/// common M-subspaces of the pieces by the five forms and sorted by subspace.
pub fn theorem3_enumerate_forms(
    fs: [&BooleanFunction; 4],
    target_dim: usize,
    budget: Option<u64>,
) -> Result<Vec<FormSubspace>> {
    let n = same_size(&fs)?;
    if target_dim > n + 2 {
        return Err(Error::Invalid(format!("dimension {target_dim} exceeds {}", n + 2)));
    }
    let b = FormBuilder {
        fs,
        n,
        search: MSearch::new(&fs)?.with_budget(budget.unwrap_or(DEFAULT_BUDGET)),
    };
    let mut out = Vec::new();
    if target_dim <= n {
        b.form_a(target_dim, false, &mut out)?;
    }
    if target_dim >= 1 && target_dim - 1 <= n {
        b.single_vector_forms(target_dim, false, &mut out)?;
    }
    if target_dim >= 2 {
        b.two_vector_form(target_dim, false, &mut out)?;
    }
    let mut by_subspace = BTreeMap::new();
    for f in out {
        by_subspace.entry(f.subspace.clone()).or_insert(f);
    }
    Ok(by_subspace.into_values().collect())
}

/// For a bent `f = f1||f2||f3||f4` on `n + 2` variables: `f` is outside M# iff
/// (a) the pieces share no `(n/2+1)`-dimensional M-subspace, (b) no common
/// `n/2`-dimensional `V` admits a shift `a` solving one of the three
/// single-vector derivative systems, and (c) no common `(n/2-1)`-dimensional
/// `V` admits `a, b` solving the two-vector system together with
/// `f1(x) + f2(x+b) + f3(x+a) + f4(x+a+b) = 0`. The witness reports the first
/// violated condition.
pub fn corollary2_outside_mm(fs: [&BooleanFunction; 4], opts: &VerdictOptions) -> Result<ConcatVerdict> {
    let n = same_size(&fs)?;
    let f = concat4(fs[0], fs[1], fs[2], fs[3])?;
    if !is_bent(&f) {
        return Err(Error::NotBent);
    }
    let t = n / 2 + 1;
    let b = FormBuilder {
        fs,
        n,
        search: MSearch::new(&fs)?.with_budget(opts.budget),
    };
    let mut found = Vec::new();
    let mut condition = Condition::Cor2Hold;
    b.form_a(t, true, &mut found)?;
    if !found.is_empty() {
        condition = Condition::Cor2A;
    } else {
        b.single_vector_forms(t, true, &mut found)?;
        if !found.is_empty() {
            condition = Condition::Cor2B;
        } else if t >= 2 {
            b.two_vector_form(t, true, &mut found)?;
            if !found.is_empty() {
                condition = Condition::Cor2C;
            }
        }
    }
    let witness: Option<ConcatWitness> = found.into_iter().next().map(Into::into);
    let inside = witness.is_some();
    check_witness(&f, &witness, t)?;
    let cc = cross_check(&f, t, inside, opts)?;
    Ok(ConcatVerdict {
        dim: t,
        inside_mm: inside,
        condition,
        witness,
        cross_check: cc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfPolynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn parse(n: usize, s: &str) -> BooleanFunction {
        AnfPolynomial::parse(n, s).unwrap().to_function().unwrap()
    }

    fn random(n: usize, rng: &mut impl Rng) -> BooleanFunction {
        BooleanFunction::from_fn(n, |_| rng.gen()).unwrap()
    }

    #[test]
    fn concat2_restrictions() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [1, 3, 5, 6, 7] {
            let (f1, f2) = (random(n, &mut rng), random(n, &mut rng));
            let f = concat2(&f1, &f2).unwrap();
            for z in 0..1u32 << n {
                assert_eq!(f.get(z), f1.get(z));
                assert_eq!(f.get(z | 1 << n), f2.get(z));
            }
            assert_eq!(restrictions(&f, 2).unwrap(), vec![f1.clone(), f2.clone()]);
            let same = concat2(&f1, &f1).unwrap();
            assert!((0..2u32 << n).all(|x| same.get(x) == f1.get(x & ((1 << n) - 1))));
        }
        assert!(concat2(&random(3, &mut rng), &random(4, &mut rng)).is_err());
    }

    #[test]
    fn concat4_matches_anf_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in [1, 4, 5, 7] {
            let fs: Vec<_> = (0..4).map(|_| random(n, &mut rng)).collect();
            let f = concat4(&fs[0], &fs[1], &fs[2], &fs[3]).unwrap();
            for x in 0..4u32 << n {
                let z = x & ((1 << n) - 1);
                let (y1, y2) = (x >> n & 1 == 1, x >> (n + 1) & 1 == 1);
                let v: Vec<bool> = fs.iter().map(|g| g.get(z)).collect();
                let expect = v[0] ^ (y1 & y2 & (v[0] ^ v[1] ^ v[2] ^ v[3])) ^ (y1 & (v[0] ^ v[1])) ^ (y2 & (v[0] ^ v[2]));
                assert_eq!(f.get(x), expect);
            }
            assert_eq!(restrictions(&f, 4).unwrap(), fs);
        }
    }

    #[test]
    fn concat4_with_complemented_last_piece() {
        let f1 = parse(4, "x1*x2+x3*x4+x1*x3");
        let f = concat4(&f1, &f1, &f1, &f1.complement()).unwrap();
        assert_eq!(f, parse(6, "x1*x2+x3*x4+x1*x3+x5*x6"));
        let g = concat4(&f1, &f1, &f1, &f1).unwrap();
        assert!((0..64u32).all(|x| g.get(x) == f1.get(x & 15)));
        assert_eq!(restrictions(&f, 4).unwrap()[3], f1.complement());
    }

    #[test]
    fn second_derivative_concat2_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (f1, f2) = (random(5, &mut rng), random(5, &mut rng));
        let f = concat2(&f1, &f2).unwrap();
        let (a, b) = (0b10110, 0b01011);
        let eq4 = second_derivative_concat2(&f1, &f2, (a, false), (b, false)).unwrap();
        let expect = concat2(
            &f1.second_derivative(a, b).unwrap(),
            &f2.second_derivative(a, b).unwrap(),
        )
        .unwrap();
        assert_eq!(eq4, expect);
        assert!(second_derivative_concat2(&f1, &f2, (a, true), (a, true)).unwrap().is_zero());
        for ea in [false, true] {
            for eb in [false, true] {
                let closed = second_derivative_concat2(&f1, &f2, (a, ea), (b, eb)).unwrap();
                let direct = f
                    .second_derivative(a | (ea as u32) << 5, b | (eb as u32) << 5)
                    .unwrap();
                assert_eq!(closed, direct);
            }
        }
    }

    #[test]
    fn second_derivative_concat4_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let fs: Vec<_> = (0..4).map(|_| random(4, &mut rng)).collect();
        let refs = [&fs[0], &fs[1], &fs[2], &fs[3]];
        let f = concat4(refs[0], refs[1], refs[2], refs[3]).unwrap();
        let flags = [(false, false), (true, false), (false, true), (true, true)];
        for _ in 0..50 {
            let (a, b) = (rng.gen::<u32>() & 15, rng.gen::<u32>() & 15);
            for &p in &flags {
                for &q in &flags {
                    let closed = second_derivative_concat4(refs, (a, p), (b, q)).unwrap();
                    let lift = |z: u32, fl: Flags| z | (fl.0 as u32) << 4 | (fl.1 as u32) << 5;
                    let direct = f.second_derivative(lift(a, p), lift(b, q)).unwrap();
                    assert_eq!(closed, direct, "a={a} b={b} {p:?} {q:?}");
                }
            }
        }
        // both flags (1,1) reduce to D_{(a+b,0,0)} D_{(b,1,1)}
        let (a, b) = (5, 9);
        assert_eq!(
            second_derivative_concat4(refs, (a, (true, true)), (b, (true, true))).unwrap(),
            second_derivative_concat4(refs, (a ^ b, (false, false)), (b, (true, true))).unwrap()
        );
    }

    #[test]
    fn dual_sum_examples() {
        let g = parse(4, "x1*x2+x3*x4");
        let h = parse(4, "x1*x3+x2*x4+x1");
        assert!(bent4_dual_sum([&g, &h, &g, &h.complement()]).unwrap());
        assert!(!bent4_dual_sum([&g, &g, &g, &g]).unwrap());
        assert_eq!(bent4_dual_sum([&g, &g, &g, &parse(4, "x1*x2")]), Err(Error::NotBent));
    }

    #[test]
    fn disjoint_spectra_examples() {
        let f = parse(5, "x1*x4+x2*x5+x3");
        assert!(!disjoint_spectra(&f, &f).unwrap());
    }

    #[test]
    fn theorem1_identical_quadratic_pieces() {
        let f1 = parse(5, "x1*x4+x2*x5");
        let v = theorem1_verdict(&f1, &f1, 2, &VerdictOptions::checked()).unwrap();
        assert!(v.inside_mm);
        assert_eq!(v.condition, Condition::Thm1A);
        assert_eq!(v.cross_check, CrossCheck::Passed);
    }

    #[test]
    fn theorem1_agrees_with_direct_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let (f1, f2) = (random(4, &mut rng), random(4, &mut rng));
            for k in 0..=4 {
                let v = theorem1_verdict(&f1, &f2, k, &VerdictOptions::checked()).unwrap();
                assert_eq!(v.cross_check, CrossCheck::Passed);
            }
        }
    }

    #[test]
    fn theorem3_forms_identical_pieces() {
        let f = parse(4, "x1*x2+x3*x4");
        let forms = theorem3_enumerate_forms([&f, &f, &f, &f], 2, None).unwrap();
        assert!(forms.iter().any(|x| x.form == FormTag::A));
        // a = 0 turns forms b-d into D_v f + D_v f = 0, satisfied by every V
        assert!(forms.iter().any(|x| x.form == FormTag::B && x.vectors == [0]));
        let g = concat4(&f, &f, &f, &f).unwrap();
        let direct = MSearch::single(&g).enumerate(2).unwrap().subspaces;
        let built: Vec<_> = forms.into_iter().map(|x| x.subspace).collect();
        assert_eq!(built, direct);
    }

    #[test]
    fn corollary2_on_shared_subspace() {
        let g = parse(4, "x1*x3+x2*x4");
        let h = parse(4, "x1*x3+x2*x4+x3*x4");
        let v = corollary2_outside_mm([&g, &h, &g, &h.complement()], &VerdictOptions::checked()).unwrap();
        assert!(v.inside_mm);
        assert_eq!(v.condition, Condition::Cor2B);
        assert_eq!(v.witness.as_ref().unwrap().vectors, vec![0]);
    }
}

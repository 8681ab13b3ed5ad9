//! Explicit bent constructions: Maiorana-McFarland functions, half-space
//! concatenations, `g||h||g||(h+1)`, the Korsakova pair, and the recipes that
//! produce functions outside M#, with the samplers they rely on.
//!
//! MM functions `x . pi(y) + g(y)` on `2m` variables keep `x` in the low `m`
//! bits and `y` in the high `m` bits, so `F_2^m x {0}` is the coordinate
//! subspace spanned by the first `m` unit vectors.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boolean::BooleanFunction;
use crate::concat::{concat2, concat4};
use crate::error::{Error, Result};
use crate::matrix::{compose_linear, BinaryMatrix};
use crate::sample::{random_function, random_permutation};
use crate::search::{Certificate, ClassVerdict, FindOutcome, MSearch, DEFAULT_BUDGET};
use crate::subspace::{is_m_subspace, Subspace};
use crate::walsh::is_bent;

/// A map `F_2^in_bits -> F_2^out_bits` given by its image list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationSpec {
    in_bits: usize,
    out_bits: usize,
    images: Vec<u32>,
}

impl PermutationSpec {
    /// A permutation of `F_2^m`.
    pub fn permutation(m: usize, images: Vec<u32>) -> Result<Self> {
        let p = Self::injection(m, m, images).map_err(|e| match e {
            Error::NotInjective => Error::NotPermutation,
            e => e,
        })?;
        Ok(p)
    }

    pub fn identity(m: usize) -> Self {
        Self::permutation(m, (0..1u32 << m).collect()).expect("identity")
    }

    /// An injective map `F_2^in_bits -> F_2^out_bits`.
    pub fn injection(in_bits: usize, out_bits: usize, images: Vec<u32>) -> Result<Self> {
        if in_bits == 0 || out_bits > 16 || in_bits > out_bits {
            return Err(Error::Invalid(format!("cannot map {in_bits} bits injectively into {out_bits}")));
        }
        if images.len() != 1usize << in_bits {
            return Err(Error::Invalid(format!(
                "expected {} images, got {}",
                1usize << in_bits,
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&v| v >> out_bits != 0) {
            return Err(Error::Invalid(format!("image {bad:x} has more than {out_bits} bits")));
        }
        let mut seen = vec![false; 1usize << out_bits];
        for &v in &images {
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::NotInjective);
            }
        }
        Ok(Self {
            in_bits,
            out_bits,
            images,
        })
    }

    /// Parses image lists written in hex.
    pub fn from_hex(in_bits: usize, out_bits: usize, images: &[String]) -> Result<Self> {
        let images = images
            .iter()
            .map(|s| {
                u32::from_str_radix(s.trim_start_matches("0x"), 16)
                    .map_err(|_| Error::Invalid(format!("bad hex image {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::injection(in_bits, out_bits, images)
    }

    pub fn in_bits(&self) -> usize {
        self.in_bits
    }

    pub fn out_bits(&self) -> usize {
        self.out_bits
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn images_hex(&self) -> Vec<String> {
        self.images.iter().map(|v| format!("{v:x}")).collect()
    }

    pub fn apply(&self, y: u32) -> u32 {
        self.images[y as usize]
    }

    fn is_permutation(&self) -> bool {
        self.in_bits == self.out_bits
    }
}

fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}

fn ensure_bent(f: BooleanFunction) -> Result<BooleanFunction> {
    if is_bent(&f) {
        Ok(f)
    } else {
        Err(Error::NotBent)
    }
}

/// `f(x, y) = x . pi(y) + g(y)` on `2m` variables; `g = None` means zero.
pub fn mm_function(pi: &PermutationSpec, g: Option<&BooleanFunction>) -> Result<BooleanFunction> {
    if !pi.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let m = pi.in_bits;
    if let Some(g) = g {
        if g.n_vars() != m {
            return Err(Error::SizeMismatch {
                expected: m,
                got: g.n_vars(),
            });
        }
    }
    let mask = (1u32 << m) - 1;
    BooleanFunction::from_fn(2 * m, |p| {
        let (x, y) = (p & mask, p >> m);
        parity(x & pi.apply(y)) ^ g.is_some_and(|g| g.get(y))
    })
}

/// `f1||f2` with `f_i(x, y) = x . pi_i(y) + h_i(y)`, where `x` has `k+1` bits
/// and `y` has `k`. Bent whenever both maps are injective with disjoint images.
pub fn theorem2_halfconcat(
    pi1: &PermutationSpec,
    pi2: &PermutationSpec,
    h1: &BooleanFunction,
    h2: &BooleanFunction,
) -> Result<BooleanFunction> {
    let k = pi1.in_bits;
    if !(1..=5).contains(&k) {
        return Err(Error::SizeCap(format!("half-concatenation needs 1 <= k <= 5, got {k}")));
    }
    for pi in [pi1, pi2] {
        if pi.in_bits != k || pi.out_bits != k + 1 {
            return Err(Error::Invalid(format!(
                "maps must send {k} bits to {} bits, got {} -> {}",
                k + 1,
                pi.in_bits,
                pi.out_bits
            )));
        }
    }
    for h in [h1, h2] {
        if h.n_vars() != k {
            return Err(Error::SizeMismatch {
                expected: k,
                got: h.n_vars(),
            });
        }
    }
    if pi1.images.iter().any(|v| pi2.images.contains(v)) {
        return Err(Error::ImagesOverlap);
    }
    let f1 = half_piece(pi1, h1)?;
    let f2 = half_piece(pi2, h2)?;
    ensure_bent(concat2(&f1, &f2)?)
}

/// `x . pi(y) + h(y)` with `x` on `k+1` bits and `y` on `k`.
pub fn half_piece(pi: &PermutationSpec, h: &BooleanFunction) -> Result<BooleanFunction> {
    let k = pi.in_bits;
    let mask = (1u32 << (k + 1)) - 1;
    BooleanFunction::from_fn(2 * k + 1, |p| parity(p & mask & pi.apply(p >> (k + 1))) ^ h.get(p >> (k + 1)))
}

/// `g||h||g||(h+1)`, bent for all bent `g, h`.
pub fn ghgh(g: &BooleanFunction, h: &BooleanFunction) -> Result<BooleanFunction> {
    if !is_bent(g) || !is_bent(h) {
        return Err(Error::NotBent);
    }
    ensure_bent(concat4(g, h, g, &h.complement())?)
}

/// M# membership of `ghgh(g, h)`: inside iff `g` and `h` share an
/// `n/2`-dimensional M-subspace `V`, in which case `V x {0} + <(0,0,1)>` is
/// the witness on `n + 2` variables.
pub fn ghgh_class(g: &BooleanFunction, h: &BooleanFunction, budget: Option<u64>) -> Result<ClassVerdict> {
    if !is_bent(g) || !is_bent(h) {
        return Err(Error::NotBent);
    }
    let n = g.n_vars();
    let s = MSearch::new(&[g, h])?.with_budget(budget.unwrap_or(DEFAULT_BUDGET));
    Ok(match s.find(n / 2)? {
        FindOutcome::Found { witness, .. } => {
            let w = witness.embed(n + 2).with_vector(1 << (n + 1));
            debug_assert!(is_m_subspace(&ghgh(g, h)?, &w)?);
            ClassVerdict::Inside { witness: w }
        }
        FindOutcome::Exhausted { nodes_explored } => ClassVerdict::Outside {
            certificate: Certificate {
                dim: n / 2,
                nodes_explored,
                budget: s.budget(),
                method: "common-subspace search".into(),
            },
        },
    })
}

/// The pair `f = g(z) + (alpha . z) y1 + y1 y2` and
/// `f' = g(z) + (alpha . z)(y1 + y2) + y1 y2` on `n + 2` variables.
pub fn korsakova_pair(g: &BooleanFunction, alpha: u32) -> Result<(BooleanFunction, BooleanFunction)> {
    if !is_bent(g) {
        return Err(Error::NotBent);
    }
    let n = g.n_vars();
    if alpha >> n != 0 {
        return Err(Error::PointOutOfRange { point: alpha, n_vars: n });
    }
    let zmask = (1u32 << n) - 1;
    let build = |twisted: bool| {
        BooleanFunction::from_fn(n + 2, |p| {
            let z = p & zmask;
            let (y1, y2) = (p >> n & 1 == 1, p >> (n + 1) & 1 == 1);
            let sel = if twisted { y1 ^ y2 } else { y1 };
            g.get(z) ^ (parity(alpha & z) & sel) ^ (y1 & y2)
        })
        .and_then(ensure_bent)
    };
    Ok((build(false)?, build(true)?))
}

/// The `dim`-dimensional M-subspaces of `f`, requiring exactly one.
pub fn unique_m_subspace(f: &BooleanFunction, budget: Option<u64>) -> Result<Subspace> {
    let dim = f.n_vars() / 2;
    let s = MSearch::single(f).with_budget(budget.unwrap_or(DEFAULT_BUDGET));
    let found = s.enumerate(dim)?.subspaces;
    if found.len() != 1 {
        return Err(Error::NotUniqueSubspace {
            dim,
            count: found.len(),
        });
    }
    Ok(found.into_iter().next().unwrap())
}

/// Lexicographically first `(a, b)` with `D_a D_b g` not identically zero.
pub fn first_nonvanishing_pair(g: &BooleanFunction) -> Result<(u32, u32)> {
    let size = g.size();
    for a in 1..size {
        for b in a + 1..size {
            if !g.second_derivative_vanishes(a, b) {
                return Ok((a, b));
            }
        }
    }
    Err(Error::NoSuchPair)
}

/// Ordered pairs of distinct nonzero vectors of `v`, in a fixed order.
fn ordered_pairs(v: &Subspace) -> Vec<(u32, u32)> {
    let mut elems = v.elements();
    elems.sort_unstable();
    let nz = &elems[1..];
    nz.iter()
        .flat_map(|&x| nz.iter().filter(move |&&y| y != x).map(move |&y| (x, y)))
        .collect()
}

/// A linear permutation `B` with `B(a), B(b)` in `v`; `variant` picks which
/// pair of `v` they land on.
fn separating_matrix(n: usize, (a, b): (u32, u32), v: &Subspace, variant: usize) -> Result<BinaryMatrix> {
    let pairs = ordered_pairs(v);
    if pairs.is_empty() {
        return Err(Error::Invalid("unique subspace has dimension below two".into()));
    }
    let (v1, v2) = pairs[variant % pairs.len()];
    BinaryMatrix::mapping(n, &[a, b], &[v1, v2])
}

/// Result of [`extend_outside`].
#[derive(Debug, Clone)]
pub struct ExtendOutcome {
    pub function: BooleanFunction,
    /// The transformed partner `q o B`.
    pub partner: BooleanFunction,
    pub matrix: BinaryMatrix,
    pub pair: (u32, u32),
}

/// Extends a bent `g` to a bent function outside M# on `n + 2` variables with
/// `f(., 0, 0) = g`. Picks `(a, b)` with `D_a D_b g != 0`, the first
/// unique-subspace `q` in `pool` with subspace `V`, and a linear `B` sending
/// `a, b` into `V`; then `q o B` has the unique subspace `B^-1(V)`, which
/// contains `a, b` and so is not an M-subspace of `g`.
pub fn extend_outside(
    g: &BooleanFunction,
    pool: &[BooleanFunction],
    variant: usize,
    budget: Option<u64>,
) -> Result<ExtendOutcome> {
    if !is_bent(g) {
        return Err(Error::NotBent);
    }
    let n = g.n_vars();
    if n < 6 {
        return Err(Error::Invalid(format!("need at least 6 variables, got {n}")));
    }
    let pair = first_nonvanishing_pair(g)?;
    let (q, v) = pool
        .iter()
        .filter(|q| q.n_vars() == n && is_bent(q))
        .find_map(|q| unique_m_subspace(q, budget).ok().map(|v| (q, v)))
        .ok_or(Error::PoolExhausted)?;
    let matrix = separating_matrix(n, pair, &v, variant)?;
    let partner = compose_linear(q, &matrix)?;
    let function = ghgh(g, &partner)?;
    if ghgh_class(g, &partner, budget)?.is_inside() {
        return Err(Error::CrossCheckFailed("extension landed inside M#".into()));
    }
    Ok(ExtendOutcome {
        function,
        partner,
        matrix,
        pair,
    })
}

/// For `g` in M# and a unique-subspace `q`: `(ghgh(g, q o A), ghgh(g, q o B))`
/// where `A` aligns the subspace of `q` with a witness of `g` (inside M#)
/// and `B` separates them (outside M#).
pub fn twist_pair(
    g: &BooleanFunction,
    q: &BooleanFunction,
    budget: Option<u64>,
) -> Result<(BooleanFunction, BooleanFunction)> {
    if !is_bent(g) || !is_bent(q) {
        return Err(Error::NotBent);
    }
    let n = g.n_vars();
    if n < 6 || q.n_vars() != n {
        return Err(Error::Invalid(format!("need two functions on at least 6 variables, got {n} and {}", q.n_vars())));
    }
    let w = MSearch::single(g)
        .with_budget(budget.unwrap_or(DEFAULT_BUDGET))
        .find(n / 2)?
        .witness()
        .cloned()
        .ok_or_else(|| Error::Invalid("first function is outside M#".into()))?;
    let v = unique_m_subspace(q, budget)?;
    let a = BinaryMatrix::mapping(n, w.basis(), v.basis())?;
    let b = separating_matrix(n, first_nonvanishing_pair(g)?, &v, 0)?;
    let (qa, qb) = (compose_linear(q, &a)?, compose_linear(q, &b)?);
    if !ghgh_class(g, &qa, budget)?.is_inside() || ghgh_class(g, &qb, budget)?.is_inside() {
        return Err(Error::CrossCheckFailed("twisted pair verdicts do not split".into()));
    }
    Ok((ghgh(g, &qa)?, ghgh(g, &qb)?))
}

/// Result of [`rind_construction`].
#[derive(Debug, Clone)]
pub struct RindOutcome {
    pub function: BooleanFunction,
    pub g: BooleanFunction,
    pub h: BooleanFunction,
    pub subspace: Subspace,
    /// Whether `g + h` is bent. Recorded, not required.
    pub sum_is_bent: bool,
}

/// `ghgh(g, g o A)` for `g = x . pi(y)` with a unique `m`-dimensional
/// M-subspace `V` and `A`, `I + A` invertible. The unique subspace of `g o A`
/// is `A^-1(V)`; when it differs from `V` the two share none and the result
/// lies outside M#.
pub fn rind_construction(pi: &PermutationSpec, a: &BinaryMatrix, budget: Option<u64>) -> Result<RindOutcome> {
    let g = mm_function(pi, None)?;
    let n = g.n_vars();
    if a.n() != n {
        return Err(Error::SizeMismatch { expected: n, got: a.n() });
    }
    if !a.is_invertible() || !a.add_identity().is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let v = unique_m_subspace(&g, budget)?;
    if v.image(&a.inverse()?) == v {
        return Err(Error::SubspacePreserved);
    }
    let h = compose_linear(&g, a)?;
    if ghgh_class(&g, &h, budget)?.is_inside() {
        return Err(Error::CrossCheckFailed("construction landed inside M#".into()));
    }
    Ok(RindOutcome {
        function: ghgh(&g, &h)?,
        sum_is_bent: is_bent(&(&g ^ &h)),
        g,
        h,
        subspace: v,
    })
}

/// Samples `x . pi(y) + g(y)` on `n` variables until one has exactly one
/// `n/2`-dimensional M-subspace. `budget` bounds the number of samples.
pub fn find_unique_msubspace_bent(n: usize, budget: u64, seed: u64) -> Result<BooleanFunction> {
    sample_unique(n, budget, seed, true).map(|(f, _)| f)
}

/// As [`find_unique_msubspace_bent`] with `g = 0`, returning the permutation.
pub fn find_unique_msubspace_permutation(m: usize, budget: u64, seed: u64) -> Result<PermutationSpec> {
    sample_unique(2 * m, budget, seed, false).map(|(_, pi)| pi)
}

fn sample_unique(n: usize, budget: u64, seed: u64, with_g: bool) -> Result<(BooleanFunction, PermutationSpec)> {
    if !n.is_multiple_of(2) || n < 6 {
        return Err(Error::Invalid(format!("need an even n >= 6, got {n}")));
    }
    let m = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let pi = random_permutation(m, &mut rng);
        let g = with_g.then(|| random_function(m, &mut rng));
        let f = mm_function(&pi, g.as_ref())?;
        if unique_m_subspace(&f, None).is_ok() {
            return Ok((ensure_bent(f)?, pi));
        }
    }
    Err(Error::BudgetExhausted { sampled: budget })
}

/// A random `A` with `A` and `I + A` both invertible.
pub fn find_invertible_pair(n: usize, seed: u64) -> Result<BinaryMatrix> {
    if n < 2 {
        return Err(Error::Invalid(format!("no such matrix for n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a = BinaryMatrix::random(n, &mut rng);
        if a.is_invertible() && a.add_identity().is_invertible() {
            return Ok(a);
        }
    }
}

/// How the maximal M-subspaces of `g` and `h` must avoid each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntersectionMode {
    /// Every subspace of `g` meets every subspace of `h` only in zero.
    CrossOnly,
    /// Additionally, distinct subspaces of the same function meet only in zero.
    All,
}

fn pairwise_trivial(xs: &[Subspace], ys: &[Subspace]) -> bool {
    xs.iter().all(|x| ys.iter().all(|y| x.intersection_dim(y) == 0))
}

/// Checks the premises on `(g, h, k)` and then whether every M-subspace of
/// `ghgh(g, h)` has dimension at most `k`. The premises: `k < n/2 - 1`;
/// both functions have maximal M-subspace dimension `k`; those maximal
/// subspaces meet trivially (per `mode`); and every common
/// `(k-1)`-dimensional M-subspace contains some `a` with `D_a g != D_a h`.
pub fn theorem_rind_bound_check(
    g: &BooleanFunction,
    h: &BooleanFunction,
    k: usize,
    mode: IntersectionMode,
    budget: Option<u64>,
) -> Result<bool> {
    let n = g.n_vars();
    if h.n_vars() != n {
        return Err(Error::SizeMismatch { expected: n, got: h.n_vars() });
    }
    if 2 * k + 2 >= n {
        return Err(Error::PremiseViolated(format!("k = {k} is not below n/2 - 1 for n = {n}")));
    }
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let sg = MSearch::single(g).with_budget(budget);
    let sh = MSearch::single(h).with_budget(budget);
    for (name, s) in [("g", &sg), ("h", &sh)] {
        let d = s.max_dimension()?;
        if d != k {
            return Err(Error::PremiseViolated(format!("maximal M-subspace dimension of {name} is {d}, not {k}")));
        }
    }
    let (vg, vh) = (sg.enumerate(k)?.subspaces, sh.enumerate(k)?.subspaces);
    let separated = pairwise_trivial(&vg, &vh)
        && (mode == IntersectionMode::CrossOnly
            || [&vg, &vh].iter().all(|vs| {
                vs.iter()
                    .enumerate()
                    .all(|(i, x)| vs[i + 1..].iter().all(|y| x.intersection_dim(y) == 0))
            }));
    if !separated {
        return Err(Error::PremiseViolated(format!("maximal M-subspaces intersect ({mode:?})")));
    }
    let sum = g ^ h;
    let common = MSearch::new(&[g, h])?.with_budget(budget).enumerate(k - 1)?.subspaces;
    if let Some(bad) = common
        .iter()
        .find(|l| l.basis().iter().all(|&a| sum.derivative_unchecked(a).is_zero()))
    {
        return Err(Error::PremiseViolated(format!(
            "common subspace {bad:?} has D_a g = D_a h throughout"
        )));
    }
    let f = concat4(g, h, g, &h.complement())?;
    Ok(MSearch::single(&f).with_budget(budget).find(k + 1)?.witness().is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfPolynomial;
    use crate::concat::restrictions;
    use crate::sample::random_mm_bent;
    use crate::search::{enumerate_m_subspaces, is_in_completed_mm};
    use rand::SeedableRng;

    fn parse(n: usize, s: &str) -> BooleanFunction {
        AnfPolynomial::parse(n, s).unwrap().to_function().unwrap()
    }

    #[test]
    fn mm_identity_is_inner_product() {
        let f = mm_function(&PermutationSpec::identity(2), None).unwrap();
        assert_eq!(f, parse(4, "x1*x3+x2*x4"));
        let v = is_in_completed_mm(&f, None).unwrap();
        assert!(v.is_inside());
        assert!(is_m_subspace(&f, &Subspace::coordinate(2, 4)).unwrap());
    }

    #[test]
    fn permutation_validation() {
        assert_eq!(PermutationSpec::permutation(2, vec![0, 1, 1, 3]), Err(Error::NotPermutation));
        assert_eq!(PermutationSpec::injection(2, 3, vec![0, 1, 1, 3]), Err(Error::NotInjective));
        let p = PermutationSpec::from_hex(2, 3, &["0".into(), "2".into(), "4".into(), "6".into()]).unwrap();
        assert_eq!(p.images(), &[0, 2, 4, 6]);
    }

    #[test]
    fn halfconcat_is_bent_and_inside() {
        let k = 2;
        let pi1 = PermutationSpec::injection(k, k + 1, (0..4).collect()).unwrap();
        let pi2 = PermutationSpec::injection(k, k + 1, (0..4).map(|y| y | 4).collect()).unwrap();
        let h = BooleanFunction::zero(k).unwrap();
        let f = theorem2_halfconcat(&pi1, &pi2, &h, &h).unwrap();
        assert_eq!(f.n_vars(), 6);
        assert!(is_m_subspace(&f, &Subspace::coordinate(k + 1, 6)).unwrap());
        assert!(is_in_completed_mm(&f, None).unwrap().is_inside());
        assert_eq!(theorem2_halfconcat(&pi1, &pi1, &h, &h), Err(Error::ImagesOverlap));
        let forced = concat2(&half_piece(&pi1, &h).unwrap(), &half_piece(&pi1, &h).unwrap()).unwrap();
        assert!(!is_bent(&forced));
    }

    #[test]
    fn ghgh_with_equal_halves() {
        let g = parse(4, "x1*x2+x3*x4+x1");
        let f = ghgh(&g, &g).unwrap();
        assert_eq!(f, BooleanFunction::from_fn(6, |p| g.get(p & 15) ^ (p >> 4 == 3)).unwrap());
        let parts = restrictions(&ghgh(&g, &parse(4, "x1*x3+x2*x4")).unwrap(), 4).unwrap();
        assert_eq!(parts[3], parse(4, "x1*x3+x2*x4+1"));
    }

    #[test]
    fn ghgh_class_witness_and_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..4 {
            let g = random_mm_bent(4, &mut rng);
            let h = crate::sample::random_bent(4, &mut rng);
            let v = ghgh_class(&g, &h, None).unwrap();
            let f = ghgh(&g, &h).unwrap();
            assert_eq!(v.is_inside(), is_in_completed_mm(&f, None).unwrap().is_inside());
            if let Some(w) = v.witness() {
                assert!(is_m_subspace(&f, w).unwrap());
            }
        }
    }

    #[test]
    fn korsakova_restrictions() {
        let g = mm_function(&PermutationSpec::identity(2), None).unwrap();
        let (f, f2) = korsakova_pair(&g, 0).unwrap();
        assert_eq!(f, f2);
        assert_eq!(f, ghgh(&g, &g).unwrap());
        let alpha = 0b1011;
        let (f, _) = korsakova_pair(&g, alpha).unwrap();
        let ga = g.add_linear(alpha);
        assert_eq!(restrictions(&f, 4).unwrap(), vec![g.clone(), ga.clone(), g.clone(), ga.complement()]);
        assert_eq!(f, ghgh(&g, &ga).unwrap());
    }

    #[test]
    fn unique_subspace_search() {
        let f = find_unique_msubspace_bent(6, 200, 1).unwrap();
        assert_eq!(enumerate_m_subspaces(&f, 3, None).unwrap().len(), 1);
        assert_eq!(f, find_unique_msubspace_bent(6, 200, 1).unwrap());
        let xy = mm_function(&PermutationSpec::identity(3), None).unwrap();
        assert!(enumerate_m_subspaces(&xy, 3, None).unwrap().len() > 1);
        assert_eq!(
            find_unique_msubspace_bent(6, 0, 1),
            Err(Error::BudgetExhausted { sampled: 0 })
        );
    }

    #[test]
    fn invertible_pair() {
        for seed in 0..5 {
            let a = find_invertible_pair(2, seed).unwrap();
            assert!(a.is_invertible() && a.add_identity().is_invertible());
            assert_ne!(a, BinaryMatrix::identity(2));
        }
        let companion = BinaryMatrix::from_rows(2, vec![0b10, 0b11]).unwrap();
        assert!(companion.is_invertible() && companion.add_identity().is_invertible());
    }

    #[test]
    fn rind_rejections() {
        let pi = find_unique_msubspace_permutation(3, 500, 2).unwrap();
        assert_eq!(
            rind_construction(&pi, &BinaryMatrix::identity(6), None).err(),
            Some(Error::SingularMatrix)
        );
        let a = find_invertible_pair(6, 0).unwrap();
        assert!(matches!(
            rind_construction(&PermutationSpec::identity(3), &a, None),
            Err(Error::NotUniqueSubspace { .. })
        ));
    }

    #[test]
    fn extend_and_twist() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = random_mm_bent(6, &mut rng);
        let q = find_unique_msubspace_bent(6, 500, 4).unwrap();
        let pool = vec![mm_function(&PermutationSpec::identity(3), None).unwrap(), q.clone()];
        let e0 = extend_outside(&g, &pool, 0, None).unwrap();
        let e1 = extend_outside(&g, &pool, 1, None).unwrap();
        assert_ne!(e0.function, e1.function);
        for e in [&e0, &e1] {
            assert_eq!(restrictions(&e.function, 4).unwrap()[0], g);
        }
        assert!(ghgh_class(&g, &q, None).is_ok());
        assert_eq!(extend_outside(&g, &pool[..1], 0, None).err(), Some(Error::PoolExhausted));

        let (inside, outside) = twist_pair(&g, &q, None).unwrap();
        let (ri, ro) = (restrictions(&inside, 4).unwrap(), restrictions(&outside, 4).unwrap());
        assert_eq!(ri[0], ro[0]);
    }

    #[test]
    fn rind_bound_premises() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_mm_bent(6, &mut rng);
        assert!(matches!(
            theorem_rind_bound_check(&g, &g, 2, IntersectionMode::CrossOnly, None),
            Err(Error::PremiseViolated(_))
        ));
        let g8 = random_mm_bent(8, &mut rng);
        let err = theorem_rind_bound_check(&g8, &g8, 2, IntersectionMode::All, None).unwrap_err();
        assert!(matches!(err, Error::PremiseViolated(m) if m.contains("maximal")));
    }
}

//! Enumeration of M-subspaces by canonical augmentation.
//!
//! The pair relation `R(f) = {(a, b) : D_a D_b f = 0}` is stored as one bitset
//! per `a`. Each row is a linear subspace (the zero-derivative periods of
//! `D_a f`), and a subspace is an M-subspace iff its basis vectors are pairwise
//! related. The search grows RREF bases in increasing pivot order: a new row
//! must have its pivot above every previous pivot and zeros in every previous
//! pivot column, so each subspace is produced exactly once. The candidate set
//! after choosing rows `r_1..r_d` is `R(r_1) & ... & R(r_d)`, itself a
//! subspace containing every M-subspace that extends the partial one; branches
//! whose candidate set has fewer than `2^k` elements are cut.

use std::sync::OnceLock;

use serde::Serialize;

use crate::boolean::BooleanFunction;
use crate::error::{Error, Result};
use crate::subspace::{pivot, Subspace};
use crate::walsh::{autocorrelation, is_bent};

/// Default node limit (partial spans visited) for one search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Lazily computed pair relation of one function.
pub struct PairRelation {
    f: BooleanFunction,
    stride: usize,
    rows: Vec<OnceLock<Box<[u64]>>>,
}

impl PairRelation {
    pub fn new(f: &BooleanFunction) -> Self {
        let size = f.size() as usize;
        Self {
            f: f.clone(),
            stride: size.div_ceil(64),
            rows: (0..size).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn function(&self) -> &BooleanFunction {
        &self.f
    }

    /// Bitset of `{b : D_a D_b f = 0}`.
    pub fn row(&self, a: u32) -> &[u64] {
        self.rows[a as usize].get_or_init(|| {
            let full = self.f.size() as i64;
            let ac = autocorrelation(&self.f.derivative_unchecked(a));
            let mut bits = vec![0u64; self.stride].into_boxed_slice();
            for (b, &c) in ac.iter().enumerate() {
                if c == full {
                    bits[b >> 6] |= 1 << (b & 63);
                }
            }
            bits
        })
    }

    pub fn related(&self, a: u32, b: u32) -> bool {
        self.row(a)[(b >> 6) as usize] >> (b & 63) & 1 == 1
    }
}

/// Result of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub subspaces: Vec<Subspace>,
    pub nodes_explored: u64,
}

/// Either a witness M-subspace or a completed search that found none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FindOutcome {
    Found { witness: Subspace, nodes_explored: u64 },
    Exhausted { nodes_explored: u64 },
}

impl FindOutcome {
    pub fn witness(&self) -> Option<&Subspace> {
        match self {
            FindOutcome::Found { witness, .. } => Some(witness),
            FindOutcome::Exhausted { .. } => None,
        }
    }

    pub fn nodes_explored(&self) -> u64 {
        match self {
            FindOutcome::Found { nodes_explored, .. } | FindOutcome::Exhausted { nodes_explored } => {
                *nodes_explored
            }
        }
    }
}

/// Searches for subspaces that are M-subspaces of every function in a tuple.
pub struct MSearch {
    n: usize,
    relations: Vec<PairRelation>,
    budget: u64,
}

struct Dfs<'a> {
    search: &'a MSearch,
    k: usize,
    stop_at_first: bool,
    nodes: u64,
    rows: Vec<u32>,
    found: Vec<Subspace>,
}

impl Dfs<'_> {
    fn run(&mut self, cand: &[u64], pivmask: u32, next_min: u32) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.search.budget {
            return Err(Error::BudgetExceeded {
                budget: self.search.budget,
                nodes_explored: self.nodes - 1,
            });
        }
        let depth = self.rows.len();
        if depth == self.k {
            let mut basis = self.rows.clone();
            basis.reverse();
            self.found
                .push(Subspace::from_rref_unchecked(self.search.n, basis));
            return Ok(self.stop_at_first);
        }
        let remaining = (self.k - depth) as u32;
        let n = self.search.n as u32;
        let need = 1u64 << self.k;
        let size = 1u32 << n;
        let mut next = vec![0u64; cand.len()];
        let mut a = next_min;
        while a < size {
            // skip to the next set bit of cand at or after a
            let w = (a >> 6) as usize;
            let word = cand[w] & (u64::MAX << (a & 63));
            if word == 0 {
                a = ((w as u32) + 1) << 6;
                continue;
            }
            let cur = ((w as u32) << 6) | word.trailing_zeros();
            if cur >= size {
                break;
            }
            a = cur + 1;
            let p = pivot(cur);
            // rows still to place need distinct pivots above p
            if n - 1 - p < remaining - 1 {
                break;
            }
            if cur & pivmask != 0 {
                continue;
            }
            let mut count = 0u64;
            for (i, slot) in next.iter_mut().enumerate() {
                let mut x = cand[i];
                for rel in &self.search.relations {
                    x &= rel.row(cur)[i];
                }
                *slot = x;
                count += x.count_ones() as u64;
            }
            if count < need {
                continue;
            }
            self.rows.push(cur);
            let child = next.clone();
            let stop = self.run(&child, pivmask | 1 << p, 1 << (p + 1))?;
            self.rows.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl MSearch {
    pub fn new(fs: &[&BooleanFunction]) -> Result<Self> {
        let first = fs
            .first()
            .ok_or_else(|| Error::Invalid("no functions given".into()))?;
        let n = first.n_vars();
        if let Some(bad) = fs.iter().find(|f| f.n_vars() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                got: bad.n_vars(),
            });
        }
        Ok(Self {
            n,
            relations: fs.iter().map(|f| PairRelation::new(f)).collect(),
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn single(f: &BooleanFunction) -> Self {
        Self::new(&[f]).expect("one function")
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn dfs(&self, k: usize, stop_at_first: bool) -> Result<(Vec<Subspace>, u64)> {
        if k > self.n {
            return Err(Error::Invalid(format!(
                "dimension {k} exceeds ambient dimension {}",
                self.n
            )));
        }
        let size = 1usize << self.n;
        let mut all = vec![u64::MAX; size.div_ceil(64)];
        if size < 64 {
            all[0] = (1u64 << size) - 1;
        }
        let mut d = Dfs {
            search: self,
            k,
            stop_at_first,
            nodes: 0,
            rows: Vec::new(),
            found: Vec::new(),
        };
        d.run(&all, 0, 1)?;
        Ok((d.found, d.nodes))
    }

    /// Every `k`-dimensional common M-subspace, sorted.
    pub fn enumerate(&self, k: usize) -> Result<SearchOutcome> {
        let (mut subspaces, nodes_explored) = self.dfs(k, false)?;
        subspaces.sort();
        Ok(SearchOutcome {
            subspaces,
            nodes_explored,
        })
    }

    /// The first `k`-dimensional common M-subspace met by the search, if any.
    pub fn find(&self, k: usize) -> Result<FindOutcome> {
        let (found, nodes_explored) = self.dfs(k, true)?;
        Ok(match found.into_iter().next() {
            Some(witness) => FindOutcome::Found {
                witness,
                nodes_explored,
            },
            None => FindOutcome::Exhausted { nodes_explored },
        })
    }

    /// Largest `k` admitting a common M-subspace.
    pub fn max_dimension(&self) -> Result<usize> {
        let mut best = 0;
        for k in 1..=self.n {
            match self.find(k)? {
                FindOutcome::Found { .. } => best = k,
                FindOutcome::Exhausted { .. } => break,
            }
        }
        Ok(best)
    }
}

pub fn enumerate_m_subspaces(f: &BooleanFunction, k: usize, budget: Option<u64>) -> Result<Vec<Subspace>> {
    let s = MSearch::single(f).with_budget(budget.unwrap_or(DEFAULT_BUDGET));
    Ok(s.enumerate(k)?.subspaces)
}

pub fn max_m_dimension(f: &BooleanFunction, budget: Option<u64>) -> Result<usize> {
    MSearch::single(f)
        .with_budget(budget.unwrap_or(DEFAULT_BUDGET))
        .max_dimension()
}

pub fn common_m_subspaces(fs: &[&BooleanFunction], k: usize, budget: Option<u64>) -> Result<Vec<Subspace>> {
    let s = MSearch::new(fs)?.with_budget(budget.unwrap_or(DEFAULT_BUDGET));
    Ok(s.enumerate(k)?.subspaces)
}

/// Evidence that a search exhausted the space without finding a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub dim: usize,
    pub nodes_explored: u64,
    pub budget: u64,
    pub method: String,
}

/// Membership in the completed Maiorana-McFarland class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum ClassVerdict {
    Inside { witness: Subspace },
    Outside { certificate: Certificate },
}

impl ClassVerdict {
    pub fn is_inside(&self) -> bool {
        matches!(self, ClassVerdict::Inside { .. })
    }

    pub fn witness(&self) -> Option<&Subspace> {
        match self {
            ClassVerdict::Inside { witness } => Some(witness),
            ClassVerdict::Outside { .. } => None,
        }
    }

    pub fn label(&self) -> &'static str {
        if self.is_inside() {
            "Inside"
        } else {
            "Outside"
        }
    }
}

/// Dillon's criterion: a bent function on `2m` variables lies in M# iff it
/// has an `m`-dimensional M-subspace.
pub fn is_in_completed_mm(f: &BooleanFunction, budget: Option<u64>) -> Result<ClassVerdict> {
    if !is_bent(f) {
        return Err(Error::NotBent);
    }
    let s = MSearch::single(f).with_budget(budget.unwrap_or(DEFAULT_BUDGET));
    let k = f.n_vars() / 2;
    Ok(match s.find(k)? {
        FindOutcome::Found { witness, .. } => ClassVerdict::Inside { witness },
        FindOutcome::Exhausted { nodes_explored } => ClassVerdict::Outside {
            certificate: Certificate {
                dim: k,
                nodes_explored,
                budget: s.budget(),
                method: "pruned-augmentation".into(),
            },
        },
    })
}

//! Batch self-tests: each theorem's structural verdict next to a direct
//! search on the full concatenation, instance by instance.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::boolean::BooleanFunction;
use crate::concat::{
    bent4_dual_sum, concat2, concat4, corollary1_outside_mm, corollary2_outside_mm, restrictions,
    theorem1_verdict, theorem3_enumerate_forms, VerdictOptions,
};
use crate::construct::{
    find_unique_msubspace_bent, first_nonvanishing_pair, ghgh, ghgh_class, korsakova_pair,
    theorem_rind_bound_check, IntersectionMode,
};
use crate::error::{Error, Result};
use crate::matrix::{apply_ea, compose_linear, AffineTransform, BinaryMatrix};
use crate::sample::{random_bent, random_disjoint_semibent_pair, random_function, random_mm_bent};
use crate::search::{is_in_completed_mm, MSearch};
use crate::walsh::is_bent;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    #[serde(rename = "thm1")]
    Thm1,
    #[serde(rename = "cor1")]
    Cor1,
    #[serde(rename = "thm3")]
    Thm3,
    #[serde(rename = "cor2")]
    Cor2,
    #[serde(rename = "insideMMgh")]
    InsideMmGh,
    #[serde(rename = "rind-bound")]
    RindBound,
    #[serde(rename = "dual-sum")]
    DualSum,
    #[serde(rename = "korsakova-class")]
    KorsakovaClass,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Thm1,
        TheoremId::Cor1,
        TheoremId::Thm3,
        TheoremId::Cor2,
        TheoremId::InsideMmGh,
        TheoremId::RindBound,
        TheoremId::DualSum,
        TheoremId::KorsakovaClass,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Cor1 => "cor1",
            TheoremId::Thm3 => "thm3",
            TheoremId::Cor2 => "cor2",
            TheoremId::InsideMmGh => "insideMMgh",
            TheoremId::RindBound => "rind-bound",
            TheoremId::DualSum => "dual-sum",
            TheoremId::KorsakovaClass => "korsakova-class",
        }
    }

    /// Number of input functions expected when instances are supplied.
    pub fn arity(self) -> usize {
        match self {
            TheoremId::Thm1 | TheoremId::Cor1 | TheoremId::InsideMmGh | TheoremId::RindBound => 2,
            TheoremId::Thm3 | TheoremId::Cor2 | TheoremId::DualSum => 4,
            TheoremId::KorsakovaClass => 1,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown theorem id {s:?}")))
    }
}

/// One structural-versus-direct comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub instance: String,
    pub structural: String,
    pub direct: String,
    pub agree: bool,
}

impl Check {
    fn new(instance: String, structural: impl ToString, direct: impl ToString) -> Self {
        let (structural, direct) = (structural.to_string(), direct.to_string());
        Self {
            agree: structural == direct,
            instance,
            structural,
            direct,
        }
    }
}

/// Inputs for one verification run. Empty `pieces` means seeded samples.
#[derive(Debug, Clone)]
pub struct VerifyInput {
    pub pieces: Vec<BooleanFunction>,
    pub seed: u64,
    pub budget: u64,
}

pub fn verify(theorem: TheoremId, input: &VerifyInput) -> Result<Vec<Check>> {
    if !input.pieces.is_empty() && input.pieces.len() != theorem.arity() {
        return Err(Error::Invalid(format!(
            "{theorem} takes {} input functions, got {}",
            theorem.arity(),
            input.pieces.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(input.seed);
    let opts = VerdictOptions {
        budget: input.budget,
        cross_check: false,
    };
    let budget = Some(input.budget);
    let given = |i: usize| &input.pieces[i];
    let supplied = !input.pieces.is_empty();
    let mut checks = Vec::new();
    match theorem {
        TheoremId::Thm1 => {
            let pairs: Vec<_> = if supplied {
                vec![(given(0).clone(), given(1).clone())]
            } else {
                (0..20).map(|_| random_disjoint_semibent_pair(5, &mut rng)).collect()
            };
            for (i, (f1, f2)) in pairs.iter().enumerate() {
                let f = concat2(f1, f2)?;
                let direct = MSearch::single(&f).with_budget(input.budget);
                for k in 0..=f1.n_vars() {
                    let v = theorem1_verdict(f1, f2, k, &opts)?;
                    let d = direct.find(k + 1)?.witness().is_some();
                    checks.push(Check::new(format!("pair {i}, k = {k}"), v.inside_mm, d));
                }
            }
        }
        TheoremId::Cor1 => {
            let pairs: Vec<_> = if supplied {
                vec![(given(0).clone(), given(1).clone())]
            } else {
                (0..20).map(|_| random_disjoint_semibent_pair(5, &mut rng)).collect()
            };
            for (i, (f1, f2)) in pairs.iter().enumerate() {
                let v = corollary1_outside_mm(f1, f2, &opts)?;
                let d = is_in_completed_mm(&concat2(f1, f2)?, budget)?;
                checks.push(Check::new(format!("pair {i}"), label(v.inside_mm), d.label()));
            }
        }
        TheoremId::Thm3 => {
            let quads: Vec<Vec<BooleanFunction>> = if supplied {
                vec![input.pieces.clone()]
            } else {
                (0..10).map(|_| (0..4).map(|_| random_function(4, &mut rng)).collect()).collect()
            };
            for (i, q) in quads.iter().enumerate() {
                let fs = [&q[0], &q[1], &q[2], &q[3]];
                let f = concat4(fs[0], fs[1], fs[2], fs[3])?;
                let direct = MSearch::single(&f).with_budget(input.budget);
                for t in 1..=f.n_vars() {
                    let formed: BTreeSet<_> = theorem3_enumerate_forms(fs, t, budget)?
                        .into_iter()
                        .map(|s| s.subspace)
                        .collect();
                    let listed: BTreeSet<_> = direct.enumerate(t)?.subspaces.into_iter().collect();
                    let mut c = Check::new(format!("quadruple {i}, dim {t}"), formed.len(), listed.len());
                    c.agree = formed == listed;
                    checks.push(c);
                }
            }
        }
        TheoremId::Cor2 => {
            let quads: Vec<Vec<BooleanFunction>> = if supplied {
                vec![input.pieces.clone()]
            } else {
                (0..10)
                    .map(|i| {
                        let f = if i % 2 == 0 {
                            random_bent(8, &mut rng)
                        } else {
                            let g = random_mm_bent(6, &mut rng);
                            let h = apply_ea(&g, &AffineTransform::random(6, &mut rng))?;
                            ghgh(&g, &h)?
                        };
                        restrictions(&f, 4)
                    })
                    .collect::<Result<_>>()?
            };
            for (i, q) in quads.iter().enumerate() {
                let fs = [&q[0], &q[1], &q[2], &q[3]];
                let v = corollary2_outside_mm(fs, &opts)?;
                let d = is_in_completed_mm(&concat4(fs[0], fs[1], fs[2], fs[3])?, budget)?;
                checks.push(Check::new(format!("quadruple {i}"), label(v.inside_mm), d.label()));
            }
        }
        TheoremId::InsideMmGh => {
            let pairs = if supplied {
                vec![(given(0).clone(), given(1).clone())]
            } else {
                gh_pairs(6, 50, input.seed, &mut rng)?
            };
            for (i, (g, h)) in pairs.iter().enumerate() {
                let v = ghgh_class(g, h, budget)?;
                let d = is_in_completed_mm(&ghgh(g, h)?, budget)?;
                checks.push(Check::new(format!("pair {i}"), v.label(), d.label()));
            }
        }
        TheoremId::RindBound => {
            let (g, h) = if supplied {
                (given(0).clone(), given(1).clone())
            } else {
                let g = random_bent(8, &mut rng);
                let h = apply_ea(&g, &AffineTransform::random(8, &mut rng))?;
                (g, h)
            };
            let k = (g.n_vars() / 2).saturating_sub(2);
            for mode in [IntersectionMode::CrossOnly, IntersectionMode::All] {
                let instance = format!("k = {k}, {mode:?}");
                match theorem_rind_bound_check(&g, &h, k, mode, budget) {
                    Ok(holds) => {
                        let f = concat4(&g, &h, &g, &h.complement())?;
                        let d = MSearch::single(&f).with_budget(input.budget).max_dimension()?;
                        checks.push(Check::new(instance, holds, d < k + 1));
                    }
                    Err(Error::PremiseViolated(why)) => checks.push(Check {
                        instance,
                        structural: format!("premise violated: {why}"),
                        direct: "not applicable".into(),
                        agree: true,
                    }),
                    Err(e) => return Err(e),
                }
            }
        }
        TheoremId::DualSum => {
            let quads: Vec<Vec<BooleanFunction>> = if supplied {
                vec![input.pieces.clone()]
            } else {
                (0..50)
                    .map(|i| -> Result<Vec<BooleanFunction>> {
                        let g = random_bent(6, &mut rng);
                        let h = random_bent(6, &mut rng);
                        Ok(match i % 3 {
                            0 => vec![g.clone(), h.clone(), g, h.complement()],
                            1 => restrictions(&random_bent(8, &mut rng), 4)?
                                .into_iter()
                                .map(|p| if is_bent(&p) { p } else { h.clone() })
                                .collect(),
                            _ => vec![g, h, random_bent(6, &mut rng), random_bent(6, &mut rng)],
                        })
                    })
                    .collect::<Result<_>>()?
            };
            for (i, q) in quads.iter().enumerate() {
                let fs = [&q[0], &q[1], &q[2], &q[3]];
                let v = bent4_dual_sum(fs)?;
                let d = is_bent(&concat4(fs[0], fs[1], fs[2], fs[3])?);
                checks.push(Check::new(format!("quadruple {i}"), v, d));
            }
        }
        TheoremId::KorsakovaClass => {
            let g = if supplied {
                given(0).clone()
            } else {
                random_mm_bent(6, &mut rng)
            };
            let base = is_in_completed_mm(&g, budget)?;
            for alpha in 0..g.size() {
                let (f, f2) = korsakova_pair(&g, alpha)?;
                let a = is_in_completed_mm(&f, budget)?;
                let b = is_in_completed_mm(&f2, budget)?;
                let direct = if a.label() == b.label() { a.label() } else { "split" };
                checks.push(Check::new(format!("alpha = {alpha:x}"), base.label(), direct));
            }
        }
    }
    Ok(checks)
}

fn label(inside: bool) -> &'static str {
    if inside {
        "Inside"
    } else {
        "Outside"
    }
}

/// Bent pairs `(g, h)` cycling through a shared-subspace case (`h = g` plus
/// a linear term), a generic EA image, and a unique-subspace partner moved
/// off every subspace of `g`.
pub fn gh_pairs(
    n: usize,
    count: usize,
    seed: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(BooleanFunction, BooleanFunction)>> {
    let q = find_unique_msubspace_bent(n, 10_000, seed)?;
    let v = crate::construct::unique_m_subspace(&q, None)?;
    let (v1, v2) = (v.basis()[0], v.basis()[1]);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let g = random_mm_bent(n, rng);
        let h = match i % 3 {
            0 => g.add_linear(rand::Rng::gen::<u32>(rng) & (g.size() - 1)),
            1 => apply_ea(&g, &AffineTransform::random(n, rng))?,
            _ => {
                let (a, b) = first_nonvanishing_pair(&g)?;
                compose_linear(&q, &BinaryMatrix::mapping(n, &[a, b], &[v1, v2])?)?
            }
        };
        out.push((g, h));
    }
    Ok(out)
}

//! Acceptance criteria, one line each. Every comparison is exact; the only
//! tolerances are the wall-clock targets and the node budget below.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bentcat::concat::{
    bent4_dual_sum, concat2, concat4, corollary1_outside_mm, second_derivative_concat2,
    second_derivative_concat4, theorem1_verdict, theorem3_enumerate_forms, Flags, VerdictOptions,
};
use bentcat::construct::{
    find_invertible_pair, find_unique_msubspace_permutation, ghgh, ghgh_class, korsakova_pair, mm_function,
    rind_construction, theorem2_halfconcat, PermutationSpec,
};
use bentcat::oracle::{direct_second_derivative, naive_is_m_subspace, naive_m_check, naive_m_subspaces, naive_walsh};
use bentcat::sample::{random_bent, random_disjoint_semibent_pair, random_function, random_mm_bent, random_permutation};
use bentcat::text::parse_table;
use bentcat::verify::gh_pairs;
use bentcat::{degree, is_in_completed_mm, walsh_transform, BooleanFunction, ClassVerdict, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Node budget for every pruned search at ten variables.
const BUDGET: u64 = 100_000_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: bentcat::Error) -> String {
    err.to_string()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn outside_witness() -> Result<BooleanFunction, String> {
    let pi = find_unique_msubspace_permutation(3, 1000, 1).map_err(e)?;
    for seed in 1..100 {
        let a = find_invertible_pair(6, seed).map_err(e)?;
        if let Ok(out) = rind_construction(&pi, &a, Some(BUDGET)) {
            return Ok(out.function);
        }
    }
    Err("no rind instance in 100 matrices".into())
}

fn fixture(name: &str) -> Result<BooleanFunction, String> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    let text = std::fs::read_to_string(&path).map_err(|err| format!("{}: {err}", path.display()))?;
    parse_table(&text).map_err(e)
}

fn pruned(f: &BooleanFunction) -> Result<ClassVerdict, String> {
    let v = is_in_completed_mm(f, Some(BUDGET)).map_err(e)?;
    if let Some(w) = v.witness() {
        ensure(naive_is_m_subspace(f, w), || format!("witness {w:?} fails the direct check"))?;
    }
    Ok(v)
}

fn c1_transforms() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=3usize {
        for t in 0..1u64 << (1 << n) {
            let f = BooleanFunction::from_words(n, vec![t]).map_err(e)?;
            ensure(walsh_transform(&f) == naive_walsh(&f).map_err(e)?, || format!("n={n} table {t:x}"))?;
            checked += 1;
        }
    }
    for t in 0..1u64 << 16 {
        let f = BooleanFunction::from_words(4, vec![t]).map_err(e)?;
        let w = walsh_transform(&f);
        ensure(w == naive_walsh(&f).map_err(e)?, || format!("n=4 table {t:x}"))?;
        ensure(w.parseval_holds(), || format!("Parseval fails for n=4 table {t:x}"))?;
        checked += 1;
    }
    let mut r = rng(1);
    for n in [6, 8, 10, 12] {
        for _ in 0..1000 {
            let f = random_function(n, &mut r);
            let w = walsh_transform(&f);
            ensure(w == naive_walsh(&f).map_err(e)?, || format!("random n={n}"))?;
            ensure(w.parseval_holds(), || format!("Parseval fails at n={n}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} functions"))
}

fn c2_derivatives() -> Outcome {
    let mut r = rng(2);
    let bools = [(false, false), (false, true), (true, false), (true, true)];
    let mut count = 0;
    for &(ea, eb) in &bools {
        for i in 0..1000 {
            let n = 4 + i % 3;
            let (f1, f2) = (random_function(n, &mut r), random_function(n, &mut r));
            let (a, b) = (r.gen::<u32>() & ((1 << n) - 1), r.gen::<u32>() & ((1 << n) - 1));
            let got = second_derivative_concat2(&f1, &f2, (a, ea), (b, eb)).map_err(e)?;
            let u = a | (ea as u32) << n;
            let v = b | (eb as u32) << n;
            let want = direct_second_derivative(&concat2(&f1, &f2).map_err(e)?, u, v).map_err(e)?;
            ensure(got == want, || format!("concat2 flags ({ea},{eb}) n={n} a={a:x} b={b:x}"))?;
            count += 1;
        }
    }
    let mut pairs: Vec<(Flags, Flags)> = vec![];
    for (i, &p) in bools.iter().enumerate() {
        for &q in &bools[i..] {
            pairs.push((p, q));
        }
    }
    assert_eq!(pairs.len(), 10);
    for &(alpha, beta) in &pairs {
        for i in 0..1000 {
            let n = 4 + i % 3;
            let fs: Vec<_> = (0..4).map(|_| random_function(n, &mut r)).collect();
            let refs = [&fs[0], &fs[1], &fs[2], &fs[3]];
            let (a, b) = (r.gen::<u32>() & ((1 << n) - 1), r.gen::<u32>() & ((1 << n) - 1));
            let got = second_derivative_concat4(refs, (a, alpha), (b, beta)).map_err(e)?;
            let lift = |z: u32, f: Flags| z | (f.0 as u32) << n | (f.1 as u32) << (n + 1);
            let whole = concat4(refs[0], refs[1], refs[2], refs[3]).map_err(e)?;
            let want = direct_second_derivative(&whole, lift(a, alpha), lift(b, beta)).map_err(e)?;
            ensure(got == want, || format!("concat4 flags {alpha:?} {beta:?} n={n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} instances, 4 + 10 flag cases"))
}

fn c3_theorem1() -> Outcome {
    let mut r = rng(3);
    let opts = VerdictOptions {
        budget: BUDGET,
        cross_check: false,
    };
    let mut inside = 0;
    for i in 0..100 {
        let (f1, f2) = random_disjoint_semibent_pair(5, &mut r);
        let f = concat2(&f1, &f2).map_err(e)?;
        for k in 0..=5 {
            let v = theorem1_verdict(&f1, &f2, k, &opts).map_err(e)?;
            let direct = !naive_m_subspaces(&f, k + 1).map_err(e)?.is_empty();
            ensure(v.inside_mm == direct, || format!("pair {i}, k={k}: {} vs {direct}", v.inside_mm))?;
        }
        let c = corollary1_outside_mm(&f1, &f2, &opts).map_err(e)?;
        let d = naive_m_check(&f).map_err(e)?;
        ensure(c.inside_mm == d.is_inside(), || format!("pair {i}: corollary {} vs {}", c.inside_mm, d.label()))?;
        inside += c.inside_mm as usize;
    }
    Ok(format!("100 pairs x 6 dimensions ({inside} inside M#)"))
}

fn c4_theorem3() -> Outcome {
    let mut r = rng(4);
    let mut total = 0;
    for i in 0..50 {
        let fs: Vec<_> = (0..4).map(|_| random_function(4, &mut r)).collect();
        let refs = [&fs[0], &fs[1], &fs[2], &fs[3]];
        let f = concat4(refs[0], refs[1], refs[2], refs[3]).map_err(e)?;
        for t in 1..=6 {
            let formed: BTreeSet<Subspace> = theorem3_enumerate_forms(refs, t, Some(BUDGET))
                .map_err(e)?
                .into_iter()
                .map(|s| s.subspace)
                .collect();
            let direct: BTreeSet<Subspace> = naive_m_subspaces(&f, t).map_err(e)?.into_iter().collect();
            ensure(formed == direct, || {
                format!("tuple {i}, dim {t}: {} formed vs {} direct", formed.len(), direct.len())
            })?;
            total += direct.len();
        }
    }
    Ok(format!("50 tuples x 6 dimensions, {total} subspaces matched"))
}

fn c5_inside_ghgh() -> Outcome {
    let mut r = rng(5);
    let pairs = gh_pairs(6, 50, 5, &mut r).map_err(e)?;
    let (mut inside, mut outside) = (0, 0);
    for (i, (g, h)) in pairs.iter().enumerate() {
        let v = ghgh_class(g, h, Some(BUDGET)).map_err(e)?;
        let d = naive_m_check(&ghgh(g, h).map_err(e)?).map_err(e)?;
        ensure(v.label() == d.label(), || format!("pair {i}: {} vs {}", v.label(), d.label()))?;
        if d.is_inside() {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    ensure(inside > 0 && outside > 0, || format!("only one verdict seen: {inside}/{outside}"))?;
    Ok(format!("50 pairs, {inside} inside, {outside} outside"))
}

fn c6_outside_witness() -> Outcome {
    let f = outside_witness()?;
    let v = naive_m_check(&f).map_err(e)?;
    let ClassVerdict::Outside { certificate } = v else {
        return Err("exhaustive scan found an M-subspace".into());
    };
    ensure(certificate.nodes_explored == 200_787, || format!("scanned {}", certificate.nodes_explored))?;
    let fixed = fixture("rind.txt")?;
    ensure(fixed == f, || "committed fixture differs from the construction".into())?;
    Ok("200787 subspaces scanned, fixture matches".into())
}

fn c7_explicit_design() -> Outcome {
    let g = fixture("rind.txt")?;
    let mut r = rng(7);
    let (korsakova, _) = korsakova_pair(&random_mm_bent(6, &mut r), 0x2b).map_err(e)?;
    let mut nodes = 0;
    for (name, h) in [("MM", random_mm_bent(8, &mut r)), ("Korsakova", korsakova), ("g", g.clone())] {
        let f = ghgh(&g, &h).map_err(e)?;
        let v = pruned(&f)?;
        let ClassVerdict::Outside { certificate } = &v else {
            return Err(format!("h = {name}: found {:?}", v.witness()));
        };
        nodes += certificate.nodes_explored;
        ensure(!ghgh_class(&g, &h, Some(BUDGET)).map_err(e)?.is_inside(), || format!("h = {name}: structural Inside"))?;
    }
    let pi = random_permutation(4, &mut r);
    let a = mm_function(&pi, Some(&random_function(4, &mut r))).map_err(e)?;
    let b = mm_function(&random_permutation(4, &mut r), None).map_err(e)?;
    let v = pruned(&ghgh(&a, &b).map_err(e)?)?;
    ensure(v.is_inside(), || "shared MM subspace gave Outside".into())?;
    Ok(format!("3 outside at 10 variables ({nodes} nodes, budget {BUDGET}), MM control inside"))
}

fn c8_korsakova() -> Outcome {
    let mut r = rng(8);
    let g = random_mm_bent(6, &mut r);
    for alpha in 0..64 {
        let (f, f2) = korsakova_pair(&g, alpha).map_err(e)?;
        for h in [&f, &f2] {
            ensure(naive_walsh(h).map_err(e)?.is_bent(), || format!("alpha {alpha:x} not bent"))?;
            ensure(pruned(h)?.is_inside(), || format!("alpha {alpha:x} outside"))?;
        }
    }
    let outside = fixture("rind.txt")?;
    let d = degree(&outside);
    for _ in 0..8 {
        let alpha = r.gen::<u32>() & 0xff;
        let (f, f2) = korsakova_pair(&outside, alpha).map_err(e)?;
        for h in [&f, &f2] {
            ensure(!pruned(h)?.is_inside(), || format!("alpha {alpha:x} inside at 10 variables"))?;
            ensure(degree(h) == d, || format!("alpha {alpha:x} changed the degree"))?;
        }
    }
    Ok("64 alphas inside at 8 variables, 8 sampled alphas outside at 10".into())
}

fn c9_special_case() -> Outcome {
    let mut r = rng(9);
    let mut fs = vec![random_bent(4, &mut r), random_bent(6, &mut r), random_mm_bent(8, &mut r)];
    fs.push(fixture("rind.txt")?);
    let mut verdicts = vec![];
    for f1 in &fs {
        let n = f1.n_vars();
        let f = concat4(f1, f1, f1, &f1.complement()).map_err(e)?;
        let expect = BooleanFunction::from_fn(n + 2, |p| f1.get(p & ((1 << n) - 1)) ^ (p >> n == 3)).map_err(e)?;
        ensure(f == expect, || format!("table identity fails at n={n}"))?;
        let base = naive_m_check(f1).map_err(e)?;
        let whole = if n + 2 <= 8 { naive_m_check(&f).map_err(e)? } else { pruned(&f)? };
        ensure(base.label() == whole.label(), || format!("n={n}: {} vs {}", base.label(), whole.label()))?;
        verdicts.push(base.label());
    }
    Ok(format!("verdicts {verdicts:?}"))
}

fn c10_theorem2() -> Outcome {
    let mut r = rng(10);
    let mut count = 0;
    for k in [2usize, 3] {
        for _ in 0..10 {
            let mut images = random_permutation(k + 1, &mut r).images().to_vec();
            let rest = images.split_off(1 << k);
            let pi1 = PermutationSpec::injection(k, k + 1, images).map_err(e)?;
            let pi2 = PermutationSpec::injection(k, k + 1, rest).map_err(e)?;
            let (h1, h2) = (random_function(k, &mut r), random_function(k, &mut r));
            let f = theorem2_halfconcat(&pi1, &pi2, &h1, &h2).map_err(e)?;
            ensure(naive_walsh(&f).map_err(e)?.is_bent(), || format!("k={k} not bent"))?;
            let canonical = Subspace::coordinate(k + 1, f.n_vars());
            ensure(naive_is_m_subspace(&f, &canonical), || format!("k={k} canonical subspace fails"))?;
            ensure(naive_m_check(&f).map_err(e)?.is_inside(), || format!("k={k} outside"))?;
            count += 1;
        }
    }
    Ok(format!("{count} half-concatenations"))
}

fn c11_dual_sum() -> Outcome {
    let mut r = rng(11);
    let (mut pos, mut neg) = (0, 0);
    for i in 0..120 {
        let g = random_bent(6, &mut r);
        let h = random_bent(6, &mut r);
        let q: Vec<BooleanFunction> = match i % 3 {
            0 => vec![g.clone(), h.clone(), g, h.complement()],
            1 => vec![g.clone(), h.clone(), h, g.complement()],
            _ => vec![g, h, random_bent(6, &mut r), random_bent(6, &mut r)],
        };
        let refs = [&q[0], &q[1], &q[2], &q[3]];
        let s = bent4_dual_sum(refs).map_err(e)?;
        let direct = naive_walsh(&concat4(refs[0], refs[1], refs[2], refs[3]).map_err(e)?).map_err(e)?.is_bent();
        ensure(s == direct, || format!("quadruple {i}: dual sum {s}, bent {direct}"))?;
        if direct {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    ensure(pos > 0 && neg > 0, || format!("one-sided sample: {pos}/{neg}"))?;
    Ok(format!("120 quadruples, {pos} bent, {neg} not bent"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("1 transform correctness", c1_transforms, 30),
        ("2 derivative formulas", c2_derivatives, 60),
        ("3 2-concatenation conditions", c3_theorem1, 300),
        ("4 4-concatenation form completeness", c4_theorem3, 300),
        ("5 g||h||g||(h+1) membership", c5_inside_ghgh, 600),
        ("6 outside witness at 8 variables", c6_outside_witness, 600),
        ("7 explicit design at 10 variables", c7_explicit_design, 600),
        ("8 Korsakova sweep", c8_korsakova, 900),
        ("9 f1||f1||f1||(f1+1) identity", c9_special_case, 300),
        ("10 half-concatenations", c10_theorem2, 120),
        ("11 dual-sum criterion", c11_dual_sum, 120),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run, limit) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took > Duration::from_secs(limit) {
                Err(format!("{msg}; took {took:.1?}, limit {limit}s"))
            } else {
                Ok(msg)
            }
        });
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{took:.1?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{took:.1?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

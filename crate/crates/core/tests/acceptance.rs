//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness; the process fails if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use csm_core::chernaffine::{affine_ssm_loc, local_move_suite, right_recursion_check, thm62_compare, AffineLocCache};
use csm_core::chernfinite::{dl_operator, pushforward_gp, richardson_csm, DlOperator, LocTable, SchubertTables};
use csm_core::positroid::{enumerate_pd, f_tilde, specialize_check};
use csm_core::symra::{LinearForm, Polynomial, RatFunc, Variable};
use csm_core::verify::{verify_suite, Suite, VerifyRange};
use csm_core::weylperm::{
    enumerate_bounded, ext_p_bruhat, single_step_arcs, AffinePerm, ExtAlgorithm, FinitePerm, ParabolicData, TieBreak,
};
use csm_core::Limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lim() -> Limits {
    Limits::default()
}

fn xy(i: u32, j: u32) -> LinearForm {
    LinearForm::diff(0, Variable::x(i), Variable::y(j))
}

fn product(fs: &[(u32, u32)]) -> Polynomial {
    fs.iter().fold(Polynomial::one(), |p, &(i, j)| p.mul_linear(&xy(i, j)))
}

fn over_full(num: Polynomial, k: u32, n: u32) -> RatFunc {
    let den = (1..=k).flat_map(|i| (1..=n).map(move |j| (LinearForm::diff(1, Variable::x(i), Variable::y(j)), 1)));
    RatFunc::with_denominator(num, den).unwrap()
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    ensure(e <= limit, || format!("{what} took {e:.2?}, over {limit:?}"))
}

fn example_two_four() -> Check {
    let t = Instant::now();
    let f = AffinePerm::from_window(vec![2, 5, 4, 7]).unwrap();
    let pds = enumerate_pd(&f, 2, &lim()).map_err(|e| e.to_string())?;
    ensure(pds.len() == 6, || format!("{} tilings", pds.len()))?;
    let ft = f_tilde(&f, 2, &lim()).map_err(|e| e.to_string())?;
    // numerator as displayed, term by term
    let num = [
        product(&[(2, 1), (2, 3)]),
        product(&[(1, 2), (2, 3)]),
        product(&[(1, 4), (2, 1)]),
        product(&[(1, 2), (1, 4)]),
        product(&[(1, 3), (1, 4), (2, 1), (2, 2)]),
        product(&[(1, 1), (1, 2), (2, 3), (2, 4)]),
    ]
    .iter()
    .fold(Polynomial::zero(), |a, b| &a + b);
    ensure(ft.value().is_equal(&over_full(num, 2, 4)), || format!("F = {}", ft.value()))?;
    within(t, Duration::from_secs(1), "k=2, n=4")?;
    Ok("6 tilings, formula equal".into())
}

fn example_one_nine() -> Check {
    let t = Instant::now();
    let f = AffinePerm::from_window(vec![3, 2, 7, 4, 5, 6, 8, 10, 9]).unwrap();
    let pds = enumerate_pd(&f, 1, &lim()).map_err(|e| e.to_string())?;
    ensure(pds.len() == 1, || format!("{} tilings", pds.len()))?;
    let ft = f_tilde(&f, 1, &lim()).map_err(|e| e.to_string())?;
    let want = over_full(product(&[(1, 2), (1, 4), (1, 5), (1, 6), (1, 9)]), 1, 9);
    ensure(ft.value().is_equal(&want), || format!("F = {}", ft.value()))?;
    within(t, Duration::from_secs(1), "k=1, n=9")?;
    Ok("1 tiling, formula equal".into())
}

fn specialization() -> Check {
    let mut summary = Vec::new();
    for (k, n, count) in [(1, 2, 3), (1, 3, 7), (2, 4, 33)] {
        let fs = enumerate_bounded(k, n).map_err(|e| e.to_string())?;
        ensure(fs.len() == count, || format!("(k,n)=({k},{n}): {} bounded, expected {count}", fs.len()))?;
        let cache = AffineLocCache::new(n);
        let mut checks = 0;
        for f in &fs {
            let r = specialize_check(f, k, &cache, &lim()).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("f={f}: subsets {:?}", r.mismatches.iter().map(|m| &m.subset).collect::<Vec<_>>()))?;
            checks += r.subsets;
        }
        summary.push(format!("({k},{n}): {count} f, {checks} substitutions"));
    }
    Ok(summary.join("; "))
}

fn thm62() -> Check {
    let t = Instant::now();
    let mut total = 0;
    for lam in [
        vec![1, 0],
        vec![2, 0],
        vec![1, 0, 0],
        vec![1, 1, 0],
        vec![2, 0, 0],
        vec![2, 1, 0],
    ] {
        let p = ParabolicData::from_lambda(lam.clone()).unwrap();
        let r = thm62_compare(&p, &lim()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || {
            let m = &r.mismatches[0];
            format!("λ={lam:?} f={} μ={:?}: {} vs {}", m.f, m.mu, m.finite, m.affine)
        })?;
        total += r.cases.len();
    }
    within(t, Duration::from_secs(300), "comparison")?;
    Ok(format!("{total} (f, μ) pairs equal"))
}

fn order_consistency() -> Check {
    let t = Instant::now();
    let algs = [ExtAlgorithm::CoverBfs, ExtAlgorithm::CosetReduce, ExtAlgorithm::Affine];
    let mut total = 0;
    for n in 2..=4 {
        let tables = SchubertTables::compute(n, &lim()).map_err(|e| e.to_string())?;
        let ps = ParabolicData::all(n);
        for p in &ps {
            for u in tables.perms() {
                for w in tables.perms() {
                    let pushed = pushforward_gp(&richardson_csm(&tables, u, w), p).map_err(|e| e.to_string())?;
                    let answers: Vec<bool> = algs.iter().map(|&a| ext_p_bruhat(u, w, p, a)).collect();
                    ensure(answers.iter().all(|&a| a == answers[0]), || {
                        format!("n={n} P={:?} u={u} w={w}: {answers:?}", p.simple_set())
                    })?;
                    ensure(!pushed.is_zero() == answers[0], || {
                        format!("n={n} P={:?} u={u} w={w}: nonvanishing differs", p.simple_set())
                    })?;
                    total += 1;
                }
            }
        }
        if n == 4 {
            ensure(ps.len() == 8, || "expected 8 parabolic subsets".into())?;
        }
    }
    within(t, Duration::from_secs(120), "order check")?;
    Ok(format!("{total} (u, w, P) instances"))
}

const FIGURE_TWO: [(&str, &str); 60] = [
    ("1234", "2134"), ("1234", "1243"), ("1234", "3214"), ("1234", "1432"), ("1234", "4231"),
    ("2134", "2143"), ("2134", "3124"), ("2134", "2431"), ("2134", "4132"),
    ("1324", "3124"), ("1324", "1342"), ("1324", "2314"), ("1324", "1423"), ("1324", "4321"),
    ("1243", "2143"), ("1243", "4213"), ("1243", "1342"), ("1243", "3241"),
    ("2314", "3214"), ("2314", "2341"), ("2314", "2413"), ("2314", "4312"),
    ("3124", "3142"), ("3124", "3421"), ("3124", "4123"),
    ("1342", "3142"), ("1342", "4312"), ("1342", "2341"),
    ("2143", "4123"), ("2143", "2341"), ("2143", "3142"),
    ("1423", "4123"), ("1423", "1432"), ("1423", "2413"), ("1423", "3421"),
    ("3214", "3241"), ("3214", "3412"), ("3214", "4213"),
    ("2341", "3241"), ("2341", "4321"),
    ("3142", "4132"), ("3142", "3241"),
    ("1432", "4132"), ("1432", "3412"), ("1432", "2431"),
    ("2413", "4213"), ("2413", "2431"), ("2413", "3412"),
    ("4123", "4132"), ("4123", "4321"),
    ("3241", "4231"),
    ("2431", "4231"), ("2431", "3421"),
    ("3412", "4312"), ("3412", "3421"),
    ("4132", "4231"),
    ("4213", "4231"), ("4213", "4312"),
    ("3421", "4321"),
    ("4312", "4321"),
];

fn arc_set(p: &ParabolicData) -> BTreeSet<(String, String)> {
    single_step_arcs(p)
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn figures() -> Check {
    let p3 = ParabolicData::from_simple_set(3, [1]).unwrap();
    // s = s_1, t = s_2, st = 231, ts = 312
    let want3: BTreeSet<(String, String)> = [
        ("123", "132"),
        ("123", "321"),
        ("213", "231"),
        ("213", "312"),
        ("132", "231"),
        ("312", "321"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    let got3 = arc_set(&p3);
    ensure(got3 == want3, || format!("n=3: {got3:?}"))?;
    let p4 = ParabolicData::from_simple_set(4, [2]).unwrap();
    let want4: BTreeSet<(String, String)> =
        FIGURE_TWO.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    ensure(want4.len() == 60, || "transcription has duplicates".into())?;
    let got4 = arc_set(&p4);
    ensure(got4 == want4, || {
        let extra: Vec<_> = got4.difference(&want4).collect();
        let missing: Vec<_> = want4.difference(&got4).collect();
        format!("n=4: extra {extra:?}, missing {missing:?}")
    })?;
    Ok("6 arcs (n=3) and 60 arcs (n=4) match".into())
}

fn alpha(i: usize) -> RatFunc {
    RatFunc::from_linear(&LinearForm::diff(0, Variable::y(i as u32 + 1), Variable::y(i as u32)))
}

fn thm41_holds(t: &SchubertTables, u: &FinitePerm, w: &FinitePerm, i: usize) -> bool {
    let a = alpha(i);
    let c = |u: &FinitePerm, w: &FinitePerm| richardson_csm(t, u, w);
    let s = |x: &LocTable| dl_operator(x, i, DlOperator::SL).unwrap();
    let lhs = s(&c(u, w)).add(&s(&c(&u.left_mul_simple(i), w)).scale(&a));
    let rhs = c(u, w).add(&c(u, &w.left_mul_simple(i)).scale(&a));
    lhs.is_equal(&rhs)
}

/// Degree-`m` elements of length at most `max_len`.
fn ball(n: usize, m: i64, max_len: usize) -> Vec<AffinePerm> {
    let mut seen = BTreeSet::from([AffinePerm::shift(n, m)]);
    let mut layer = vec![AffinePerm::shift(n, m)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for f in &layer {
            for i in 0..n {
                let g = f.left_mul_simple(i);
                if g.length() == f.length() + 1 && seen.insert(g.clone()) {
                    next.push(g);
                }
            }
        }
        layer = next;
    }
    seen.into_iter().collect()
}

fn identity_suites() -> Check {
    let t = Instant::now();
    let mut parts = Vec::new();

    let moves = local_move_suite().map_err(|e| e.to_string())?;
    for r in &moves {
        ensure(r.failures().count() == 0, || format!("{} fails", r.name))?;
    }
    parts.push(format!(
        "local moves {}",
        moves.iter().map(|r| r.cases.len()).sum::<usize>()
    ));

    for n in 2..=4 {
        let tables = SchubertTables::compute(n, &lim()).map_err(|e| e.to_string())?;
        let mut sum = LocTable::zero(tables.points());
        for w in tables.perms() {
            sum = sum.add(tables.csm_cell(w));
        }
        ensure(sum.is_equal(tables.tangent_chern()), || format!("partition of unity n={n}"))?;
    }
    parts.push("partition of unity n<=4".into());

    let range = VerifyRange {
        n: Some(3),
        ..VerifyRange::default()
    };
    for s in [Suite::Duality, Suite::Thm41] {
        let r = verify_suite(s, &range, &lim()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{s}: {:?}", r.failures().next()))?;
        parts.push(format!("{s} S3 {}", r.outcomes.len()));
    }

    let t4 = SchubertTables::compute(4, &lim()).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..200 {
        let u = &t4.perms()[rng.gen_range(0..24)];
        let w = &t4.perms()[rng.gen_range(0..24)];
        let i = rng.gen_range(1..4);
        ensure(thm41_holds(&t4, u, w, i), || format!("thm41 u={u} w={w} i={i}"))?;
    }
    parts.push("thm41 S4 200".into());

    let cache = AffineLocCache::new(2);
    let els = ball(2, 1, 3);
    let mut right = 0;
    for g in &els {
        for f in &els {
            for i in 0..2 {
                let ok = right_recursion_check(f, g, i, &cache).map_err(|e| e.to_string())?;
                ensure(ok, || format!("right recursion f={f} g={g} i={i}"))?;
                right += 1;
            }
        }
    }
    parts.push(format!("right recursion {right}"));

    let small = AffineLocCache::with_tie(3, TieBreak::Smallest);
    let large = AffineLocCache::with_tie(3, TieBreak::Largest);
    let els = ball(3, 1, 5);
    let mut words = 0;
    for g in els.iter().filter(|g| g.left_descents().len() > 1) {
        for f in &els {
            let a = affine_ssm_loc(f, g, &small).map_err(|e| e.to_string())?;
            let b = affine_ssm_loc(f, g, &large).map_err(|e| e.to_string())?;
            ensure(a.is_equal(&b), || format!("word dependence f={f} g={g}"))?;
            words += 1;
        }
    }
    parts.push(format!("word independence {words}"));

    within(t, Duration::from_secs(600), "identity suites")?;
    Ok(parts.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("1 pipe dreams k=2 n=4 golden", example_two_four),
        ("2 pipe dreams k=1 n=9 golden", example_one_nine),
        ("3 specialization to translations", specialization),
        ("4 finite vs affine with correction factor", thm62),
        ("5 pushforward support vs extended order", order_consistency),
        ("6 relation digraphs", figures),
        ("7 identity suites", identity_suites),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let e = t.elapsed();
        match res {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{e:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{e:.2?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Named identity suites cross-checking independent computation paths.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::chernaffine::{local_move_suite, thm62_compare, AffineLocCache};
use crate::chernfinite::{dl_operator, pushforward_gp, richardson_csm, DlOperator, LocTable, SchubertTables};
use crate::positroid::specialize_check;
use crate::symra::{Ambient, RatFunc};
use crate::weylperm::{enumerate_bounded, ext_p_bruhat, ExtAlgorithm, FinitePerm, ParabolicData};
use crate::{CsmError, Limits, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ybe,
    Thm41,
    Cor43,
    Thm36,
    Thm62,
    Thm75,
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Ybe,
        Suite::Thm41,
        Suite::Cor43,
        Suite::Thm36,
        Suite::Thm62,
        Suite::Thm75,
        Suite::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ybe => "ybe",
            Suite::Thm41 => "thm41",
            Suite::Cor43 => "cor43",
            Suite::Thm36 => "thm36",
            Suite::Thm62 => "thm62",
            Suite::Thm75 => "thm75",
            Suite::Duality => "duality",
        }
    }
}

impl FromStr for Suite {
    type Err = CsmError;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CsmError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters of a run. Unset fields take per-suite defaults.
#[derive(Clone, Debug, Default)]
pub struct VerifyRange {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub lambda: Option<Vec<i64>>,
    /// Run only the instance with this id.
    pub only: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: String,
    /// `None` when the instance passed.
    pub failure: Option<String>,
}

impl Outcome {
    fn new(id: String, failure: Option<String>) -> Outcome {
        Outcome { id, failure }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub outcomes: Vec<Outcome>,
    replay: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(Outcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    /// Command line re-running a single instance.
    pub fn replay(&self, id: &str) -> String {
        format!("{} --only '{id}'", self.replay)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let failures: Vec<_> = self
            .failures()
            .map(|o| {
                json!({
                    "instance": o.id,
                    "detail": o.failure,
                    "replay": self.replay(&o.id),
                })
            })
            .collect();
        json!({
            "suite": self.suite.name(),
            "instances": self.outcomes.len(),
            "failures": failures,
        })
    }
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(detail)
}

fn perm_pairs(perms: &[FinitePerm]) -> Vec<(&FinitePerm, &FinitePerm)> {
    perms.iter().flat_map(|u| perms.iter().map(move |w| (u, w))).collect()
}

fn set_label(p: &ParabolicData) -> String {
    let s: Vec<String> = p.simple_set().iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", s.join(","))
}

fn vec_label(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("({})", s.join(","))
}

/// `s_i^L` applied to the class and to its `s_i u` neighbour reproduces the
/// right side of the recursion.
fn left_recursion(c: impl Fn(&FinitePerm, &FinitePerm) -> Result<LocTable>, u: &FinitePerm, w: &FinitePerm, i: usize) -> Result<bool> {
    let amb = Ambient::new(0, u.n());
    let a = RatFunc::from_linear(&amb.simple_root(i)?);
    let s = |x: &LocTable| dl_operator(x, i, DlOperator::SL);
    let lhs = s(&c(u, w)?)?.add(&s(&c(&u.left_mul_simple(i), w)?)?.scale(&a));
    let rhs = c(u, w)?.add(&c(u, &w.left_mul_simple(i))?.scale(&a));
    Ok(lhs.is_equal(&rhs))
}

fn default_lambdas(n: usize) -> Vec<Vec<i64>> {
    // dominant, last entry 0, entries at most 2 (1 from n = 4 on)
    let top = if n <= 3 { 2 } else { 1 };
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(pos: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos + 1 == cur.len() {
            cur[pos] = 0;
            if cur.iter().any(|&v| v > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=cap).rev() {
            cur[pos] = v;
            rec(pos + 1, v, cur, out);
        }
    }
    rec(0, top, &mut cur, &mut out);
    out.sort();
    out
}

/// Runs one suite. Instances come out in a fixed order.
pub fn verify_suite(suite: Suite, range: &VerifyRange, limits: &Limits) -> Result<SuiteReport> {
    let n = range.n.unwrap_or(3);
    let mut replay = format!("csm verify {suite}");
    let outcomes = match suite {
        Suite::Ybe => {
            let mut out = Vec::new();
            for r in local_move_suite()? {
                for c in &r.cases {
                    let id = format!("{} top={:?} bottom={:?}", r.name, c.top, c.bottom);
                    out.push(Outcome::new(id, check(c.passed(), || format!("{} vs {}", c.lhs, c.rhs))));
                }
            }
            out
        }
        Suite::Thm41 => {
            replay += &format!(" --n {n}");
            let t = SchubertTables::compute(n, limits)?;
            let c = |u: &FinitePerm, w: &FinitePerm| Ok(richardson_csm(&t, u, w));
            let jobs: Vec<_> = perm_pairs(t.perms())
                .into_iter()
                .flat_map(|(u, w)| (1..n).map(move |i| (u, w, i)))
                .collect();
            jobs.par_iter()
                .map(|&(u, w, i)| {
                    let ok = left_recursion(c, u, w, i)?;
                    Ok(Outcome::new(format!("u={u},w={w},i={i}"), check(ok, || "recursion fails".into())))
                })
                .collect::<Result<_>>()?
        }
        Suite::Cor43 => {
            replay += &format!(" --n {n}");
            let t = SchubertTables::compute(n, limits)?;
            let mut jobs = Vec::new();
            for p in ParabolicData::all(n) {
                for (u, w) in perm_pairs(t.perms()) {
                    for i in 1..n {
                        jobs.push((p.clone(), u, w, i));
                    }
                }
            }
            jobs.par_iter()
                .map(|(p, u, w, i)| {
                    let c = |u: &FinitePerm, w: &FinitePerm| pushforward_gp(&richardson_csm(&t, u, w), p);
                    let ok = left_recursion(c, u, w, *i)?;
                    let id = format!("P={},u={u},w={w},i={i}", set_label(p));
                    Ok(Outcome::new(id, check(ok, || "recursion fails after pushforward".into())))
                })
                .collect::<Result<_>>()?
        }
        Suite::Thm36 => {
            replay += &format!(" --n {n}");
            let t = SchubertTables::compute(n, limits)?;
            let mut jobs = Vec::new();
            for p in ParabolicData::all(n) {
                for (u, w) in perm_pairs(t.perms()) {
                    jobs.push((p.clone(), u, w));
                }
            }
            jobs.par_iter()
                .map(|(p, u, w)| {
                    let nonzero = !pushforward_gp(&richardson_csm(&t, u, w), p)?.is_zero();
                    let orders: Vec<bool> = [ExtAlgorithm::CoverBfs, ExtAlgorithm::CosetReduce, ExtAlgorithm::Affine]
                        .into_iter()
                        .map(|a| ext_p_bruhat(u, w, p, a))
                        .collect();
                    let ok = orders.iter().all(|&o| o == nonzero);
                    let id = format!("P={},u={u},w={w}", set_label(p));
                    Ok(Outcome::new(
                        id,
                        check(ok, || format!("pushforward nonzero = {nonzero}, orders = {orders:?}")),
                    ))
                })
                .collect::<Result<_>>()?
        }
        Suite::Thm62 => {
            replay += &format!(" --n {n}");
            let lams = match &range.lambda {
                Some(l) => {
                    replay += &format!(
                        " --lambda {}",
                        l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                    );
                    vec![l.clone()]
                }
                None => default_lambdas(n),
            };
            let mut out = Vec::new();
            for lam in lams {
                let p = ParabolicData::from_lambda(lam.clone())?;
                let r = thm62_compare(&p, limits)?;
                for (f, mu) in &r.cases {
                    let bad = r.mismatches.iter().find(|m| &m.f == f && &m.mu == mu);
                    let id = format!("lambda={},f={f},mu={}", vec_label(&lam), vec_label(mu));
                    out.push(Outcome::new(
                        id,
                        bad.map(|m| format!("finite {} vs affine {}", m.finite, m.affine)),
                    ));
                }
            }
            out
        }
        Suite::Thm75 => {
            let k = range.k.unwrap_or(1);
            replay += &format!(" --k {k} --n {n}");
            let cache = AffineLocCache::new(n);
            enumerate_bounded(k, n)?
                .par_iter()
                .map(|f| {
                    let r = specialize_check(f, k, &cache, limits)?;
                    let detail = check(r.passed(), || {
                        let s: Vec<String> = r
                            .mismatches
                            .iter()
                            .map(|m| format!("S={:?}: {} vs {}", m.subset, m.pipe_side, m.affine_side))
                            .collect();
                        s.join("; ")
                    });
                    Ok(Outcome::new(format!("f={f}"), detail))
                })
                .collect::<Result<_>>()?
        }
        Suite::Duality => {
            replay += &format!(" --n {n}");
            let t = SchubertTables::compute(n, limits)?;
            perm_pairs(t.perms())
                .par_iter()
                .map(|&(u, w)| {
                    let mut acc = RatFunc::zero();
                    for v in t.perms() {
                        let i = t.index(v);
                        let term = t.csm_cell(u).at(i).mul(t.ssm_opp(w).at(i)).div(t.point_class(v).at(i))?;
                        acc = acc.add(&term);
                    }
                    let want = if u == w { RatFunc::one() } else { RatFunc::zero() };
                    Ok(Outcome::new(
                        format!("u={u},w={w}"),
                        check(acc.is_equal(&want), || format!("pairing = {acc}")),
                    ))
                })
                .collect::<Result<_>>()?
        }
    };
    let outcomes: Vec<Outcome> = match &range.only {
        Some(id) => {
            let kept: Vec<Outcome> = outcomes.into_iter().filter(|o| &o.id == id).collect();
            if kept.is_empty() {
                return Err(CsmError::Parse(format!("no instance `{id}` in suite {suite}")));
            }
            kept
        }
        None => outcomes,
    };
    Ok(SuiteReport {
        suite,
        outcomes,
        replay,
    })
}

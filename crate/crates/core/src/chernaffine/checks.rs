use rayon::prelude::*;

use super::{affine_ssm_loc, AffineLocCache};
use crate::chernfinite::{projrich_ssm_recursive, FixedPoint};
use crate::symra::{Ambient, LinearForm, RatFunc, Variable};
use crate::weylperm::{AffinePerm, ParabolicData, TieBreak};
use crate::{CsmError, Limits, Result};

/// Right recursion at `g s_i`:
/// `(g(α_i) + 1) val(f, g s_i) = val(f, g) + g(α_i) val(f s_i, g)`.
pub fn right_recursion_check(f: &AffinePerm, g: &AffinePerm, i: usize, cache: &AffineLocCache) -> Result<bool> {
    let amb = Ambient::new(0, g.n());
    let ga = g.act_on_form(&amb.simple_root(i)?);
    let lhs = affine_ssm_loc(f, &g.right_mul_simple(i), cache)?.mul_linear(&ga.add(&LinearForm::new(1, [])));
    let rhs = affine_ssm_loc(f, g, cache)?
        .add(&affine_ssm_loc(&f.right_mul_simple(i), g, cache)?.mul_linear(&ga));
    Ok(lhs.is_equal(&rhs))
}

/// Left recursion read at translations, `1 <= i < n`:
/// `s_i val(f, t_{s_i μ}) + α_i s_i val(s_i f, t_{s_i μ}) = val(f, t_μ) + α_i val(f s_i, t_μ)`.
pub fn eq53_check(f: &AffinePerm, mu: &[i64], i: usize, cache: &AffineLocCache) -> Result<bool> {
    let n = mu.len();
    if i == 0 || i >= n {
        return Err(CsmError::IndexOutOfRange {
            index: i as i64,
            lo: 1,
            hi: n as i64 - 1,
        });
    }
    let amb = Ambient::new(0, n);
    let alpha = amb.simple_root(i)?;
    let mut smu = mu.to_vec();
    smu.swap(i - 1, i);
    let t = AffinePerm::translation(mu);
    let st = AffinePerm::translation(&smu);
    let lhs = amb.act_y(&affine_ssm_loc(f, &st, cache)?, i)?.add(
        &amb.act_y(&affine_ssm_loc(&f.left_mul_simple(i), &st, cache)?, i)?
            .mul_linear(&alpha),
    );
    let rhs = affine_ssm_loc(f, &t, cache)?
        .add(&affine_ssm_loc(&f.right_mul_simple(i), &t, cache)?.mul_linear(&alpha));
    Ok(lhs.is_equal(&rhs))
}

/// `∏_{μ_a > μ_b} ((1 + y_a - y_b) / (y_a - y_b))^{μ_a - μ_b - 1}`.
pub fn thm62_factor(mu: &[i64]) -> Result<RatFunc> {
    let mut out = RatFunc::one();
    for a in 0..mu.len() {
        for b in 0..mu.len() {
            if mu[a] <= mu[b] {
                continue;
            }
            let (ya, yb) = (Variable::y(a as u32 + 1), Variable::y(b as u32 + 1));
            let e = (mu[a] - mu[b] - 1) as u32;
            for _ in 0..e {
                out = out
                    .mul_linear(&LinearForm::diff(1, ya, yb))
                    .div_linear(&LinearForm::diff(0, ya, yb))?;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Thm62Mismatch {
    pub f: AffinePerm,
    pub mu: Vec<i64>,
    pub finite: RatFunc,
    pub affine: RatFunc,
}

#[derive(Clone, Debug)]
pub struct Thm62Report {
    pub lambda: Vec<i64>,
    /// Every `(f, μ)` compared, in order.
    pub cases: Vec<(AffinePerm, Vec<i64>)>,
    pub mismatches: Vec<Thm62Mismatch>,
}

impl Thm62Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the finite projected Richardson localizations with the affine
/// ones times [`thm62_factor`], for every `f ∈ 𝓑^+` and `μ ∈ Wλ`.
pub fn thm62_compare(p: &ParabolicData, limits: &Limits) -> Result<Thm62Report> {
    let n = p.n();
    Limits::check("n", n, limits.projrich_n.min(4))?;
    let table = projrich_ssm_recursive(p, TieBreak::Smallest, limits)?;
    let orbit = p.orbit();
    let cache = AffineLocCache::new(n);
    let jobs: Vec<(&AffinePerm, &Vec<i64>)> = table
        .elements()
        .flat_map(|(f, _)| orbit.iter().map(move |mu| (f, mu)))
        .collect();
    let results: Vec<Option<Thm62Mismatch>> = jobs
        .par_iter()
        .map(|&(f, mu)| -> Result<Option<Thm62Mismatch>> {
            let finite = table
                .get(f)
                .and_then(|t| t.get(&FixedPoint::Weight(mu.clone())))
                .cloned()
                .ok_or_else(|| CsmError::Inconsistent(format!("missing entry for {f} at {mu:?}")))?;
            let t = AffinePerm::translation(mu);
            let affine = affine_ssm_loc(f, &t, &cache)?.mul(&thm62_factor(mu)?);
            Ok((!finite.is_equal(&affine)).then(|| Thm62Mismatch {
                f: f.clone(),
                mu: mu.clone(),
                finite,
                affine,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(Thm62Report {
        lambda: p.lambda().to_vec(),
        cases: jobs.iter().map(|&(f, mu)| (f.clone(), mu.clone())).collect(),
        mismatches: results.into_iter().flatten().collect(),
    })
}

use rayon::prelude::*;

use super::{enumerate_pd, PipeDream};
use crate::chernaffine::{affine_ssm_loc, AffineLocCache};
use crate::symra::{Ambient, LinearForm, Polynomial, RatFunc, Variable};
use crate::weylperm::AffinePerm;
use crate::{CsmError, Limits, Result};

/// `F̃_f` together with the pipe dreams it sums over.
#[derive(Clone, Debug)]
pub struct FTilde {
    k: usize,
    n: usize,
    dreams: Vec<PipeDream>,
    value: RatFunc,
}

fn full_denominator(k: usize, n: usize) -> Vec<(LinearForm, u32)> {
    let mut den = Vec::with_capacity(k * n);
    for i in 1..=k as u32 {
        for j in 1..=n as u32 {
            den.push((LinearForm::diff(1, Variable::x(i), Variable::y(j)), 1));
        }
    }
    den
}

impl FTilde {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dreams(&self) -> &[PipeDream] {
        &self.dreams
    }

    /// Over the full denominator `∏_{i,j} (1 + x_i - y_j)`, uncancelled.
    pub fn value(&self) -> &RatFunc {
        &self.value
    }

    pub fn into_value(self) -> RatFunc {
        self.value
    }

    fn products(&self, factor: impl Fn(usize, usize) -> String) -> Vec<String> {
        self.dreams
            .iter()
            .map(|pd| {
                let fs: Vec<String> = pd.crosses().map(|(i, j)| factor(i, j)).collect();
                if fs.is_empty() {
                    "1".to_string()
                } else {
                    fs.concat()
                }
            })
            .collect()
    }

    /// One product of cross factors per pipe dream over the common denominator.
    pub fn factored_plain(&self) -> String {
        if self.dreams.is_empty() {
            return "0".into();
        }
        let num = self.products(|i, j| format!("(x{i} - y{j})")).join(" + ");
        let den: String = full_denominator(self.k, self.n)
            .iter()
            .map(|(l, _)| format!("({l})"))
            .collect();
        format!("[{num}] / [{den}]")
    }

    pub fn factored_latex(&self) -> String {
        if self.dreams.is_empty() {
            return "0".into();
        }
        let num = self.products(|i, j| format!("(x_{{{i}}}-y_{{{j}}})")).join(" + ");
        format!(
            "\\frac{{{num}}}{{\\prod_{{i=1}}^{{{}}}\\prod_{{j=1}}^{{{}}}(1+x_i-y_j)}}",
            self.k, self.n
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "n": self.n,
            "pipe_dreams": self.dreams.len(),
            "value": self.value.to_json(),
        })
    }
}

/// `F̃_f = Σ_{π ∈ PD(f)} ∏_{Cross (i,j)} (x_i - y_j) / ∏_{i,j} (1 + x_i - y_j)`.
pub fn f_tilde(f: &AffinePerm, k: usize, limits: &Limits) -> Result<FTilde> {
    let dreams = enumerate_pd(f, k, limits)?;
    let num = dreams
        .par_iter()
        .map(PipeDream::weight_numerator)
        .reduce(Polynomial::zero, |a, b| &a + &b);
    let n = f.n();
    let value = RatFunc::with_denominator(num, full_denominator(k, n))?;
    Ok(FTilde { k, n, dreams, value })
}

/// `F̃_f` is symmetric in `x_1..x_k`.
pub fn symmetry_check(ft: &FTilde) -> Result<bool> {
    let amb = Ambient::new(ft.k, ft.n);
    for i in 1..ft.k {
        if !amb.swap_x(&ft.value, i)?.is_equal(&ft.value) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct SpecializeMismatch {
    pub subset: Vec<usize>,
    pub pipe_side: RatFunc,
    pub affine_side: RatFunc,
}

#[derive(Clone, Debug)]
pub struct SpecializeReport {
    pub f: AffinePerm,
    pub subsets: usize,
    pub mismatches: Vec<SpecializeMismatch>,
}

impl SpecializeReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for bits in 0u32..1 << n {
        if bits.count_ones() as usize == k {
            out.push((0..n).filter(|j| bits >> j & 1 == 1).map(|j| j + 1).collect());
        }
    }
    out.sort();
    out
}

/// For every `k`-subset `S` of `[n]`, `F̃_f` at `x_i ↦ y_{a_i}` against
/// `s_SM(Σ̊^f)|_{t_μ}` with `μ` the indicator of `S`.
pub fn specialize_check(f: &AffinePerm, k: usize, cache: &AffineLocCache, limits: &Limits) -> Result<SpecializeReport> {
    let n = f.n();
    Limits::check("n", n, limits.specialize_n)?;
    if cache.n() != n {
        return Err(CsmError::AmbientMismatch(cache.n(), n));
    }
    let ft = f_tilde(f, k, limits)?;
    let amb = Ambient::new(k, n);
    let all = subsets(n, k);
    let mut mismatches = Vec::new();
    for s in &all {
        let pipe_side = amb.substitute_x(ft.value(), s)?;
        let mut mu = vec![0; n];
        for &a in s {
            mu[a - 1] = 1;
        }
        let affine_side = affine_ssm_loc(f, &AffinePerm::translation(&mu), cache)?;
        if !pipe_side.is_equal(&affine_side) {
            mismatches.push(SpecializeMismatch {
                subset: s.clone(),
                pipe_side,
                affine_side,
            });
        }
    }
    Ok(SpecializeReport {
        f: f.clone(),
        subsets: all.len(),
        mismatches,
    })
}

use std::collections::BTreeSet;

use super::FinitePerm;
use crate::{CsmError, Result};

/// A dominant cocharacter `λ` together with its stabilizer data: `i` is in
/// the simple set iff `λ_i = λ_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicData {
    lambda: Vec<i64>,
    simple_set: BTreeSet<usize>,
}

impl ParabolicData {
    pub fn from_lambda(lambda: Vec<i64>) -> Result<ParabolicData> {
        if lambda.is_empty() {
            return Err(CsmError::InvalidCocharacter("empty".into()));
        }
        if lambda.windows(2).any(|p| p[0] < p[1]) {
            return Err(CsmError::InvalidCocharacter(format!(
                "{lambda:?} is not dominant (weakly decreasing)"
            )));
        }
        let simple_set = (1..lambda.len())
            .filter(|&i| lambda[i - 1] == lambda[i])
            .collect();
        Ok(ParabolicData { lambda, simple_set })
    }

    /// The cocharacter `λ_i = (number of blocks after the block of i)`.
    pub fn from_simple_set(n: usize, set: impl IntoIterator<Item = usize>) -> Result<ParabolicData> {
        let simple_set: BTreeSet<usize> = set.into_iter().collect();
        if let Some(&bad) = simple_set.iter().find(|&&i| i == 0 || i >= n) {
            return Err(CsmError::IndexOutOfRange {
                index: bad as i64,
                lo: 1,
                hi: n as i64 - 1,
            });
        }
        let blocks = n - simple_set.len();
        let mut lambda = Vec::with_capacity(n);
        let mut b = 0;
        for i in 1..=n {
            lambda.push((blocks - 1 - b) as i64);
            if i < n && !simple_set.contains(&i) {
                b += 1;
            }
        }
        Ok(ParabolicData { lambda, simple_set })
    }

    /// All `2^{n-1}` parabolic subsets of `{1..n-1}`.
    pub fn all(n: usize) -> Vec<ParabolicData> {
        (0u32..1 << (n - 1))
            .map(|mask| {
                let set = (1..n).filter(|i| mask >> (i - 1) & 1 == 1);
                ParabolicData::from_simple_set(n, set).unwrap()
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn simple_set(&self) -> &BTreeSet<usize> {
        &self.simple_set
    }

    /// Block index of each position `1..=n` (0-based blocks).
    pub fn block_of(&self, i: usize) -> usize {
        (1..i).filter(|j| !self.simple_set.contains(j)).count()
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        (a..b).all(|j| self.simple_set.contains(&j))
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![vec![1]];
        for i in 2..=self.n() {
            if self.simple_set.contains(&(i - 1)) {
                out.last_mut().unwrap().push(i);
            } else {
                out.push(vec![i]);
            }
        }
        out
    }

    /// Pairs `a < b` in different blocks: the roots in `R^+ \ R^+_P`.
    pub fn non_parabolic_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if !self.same_block(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Pairs `a < b` in the same block: the roots in `R^+_P`.
    pub fn parabolic_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if self.same_block(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// `W_P`, the permutations preserving every block.
    pub fn parabolic_subgroup(&self) -> Vec<FinitePerm> {
        FinitePerm::all(self.n())
            .into_iter()
            .filter(|v| (1..=self.n()).all(|i| self.same_block(i, v.apply(i))))
            .collect()
    }

    /// Whether `w` is the minimal representative of `w W_P`.
    pub fn is_min_rep(&self, w: &FinitePerm) -> bool {
        self.simple_set.iter().all(|&i| w.apply(i) < w.apply(i + 1))
    }

    /// `(wv, v)` with `v ∈ W_P` and `wv ∈ W^P`.
    pub fn min_rep(&self, w: &FinitePerm) -> (FinitePerm, FinitePerm) {
        let mut v = Vec::with_capacity(self.n());
        for block in self.blocks() {
            let mut pos = block.clone();
            pos.sort_by_key(|&p| w.apply(p));
            v.extend(pos);
        }
        let v = FinitePerm::new(v).unwrap();
        (w.compose(&v), v)
    }

    /// `Wλ`, distinct rearrangements of `λ`, with `λ` itself first.
    pub fn orbit(&self) -> Vec<Vec<i64>> {
        let set: BTreeSet<Vec<i64>> = FinitePerm::all(self.n())
            .iter()
            .map(|v| v.act_on_vector(&self.lambda))
            .collect();
        set.into_iter().rev().collect()
    }

    /// The minimal `v` with `vλ = μ`.
    pub fn orbit_rep(&self, mu: &[i64]) -> Option<FinitePerm> {
        FinitePerm::all(self.n())
            .into_iter()
            .filter(|v| self.is_min_rep(v))
            .find(|v| v.act_on_vector(&self.lambda) == mu)
    }
}

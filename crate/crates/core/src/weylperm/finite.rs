use std::fmt;

use crate::{CsmError, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitePerm(Vec<usize>);

impl FinitePerm {
    pub fn new(one_line: Vec<usize>) -> Result<FinitePerm> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(CsmError::InvalidPermutation(format!(
                    "{one_line:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(FinitePerm(one_line))
    }

    pub fn identity(n: usize) -> FinitePerm {
        FinitePerm((1..=n).collect())
    }

    pub fn longest(n: usize) -> FinitePerm {
        FinitePerm((1..=n).rev().collect())
    }

    /// `s_i` for `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> FinitePerm {
        assert!(i >= 1 && i < n);
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        FinitePerm(v)
    }

    /// Parses "2134" (single digits) or "2,1,3,4".
    pub fn parse(s: &str) -> Result<FinitePerm> {
        let s = s.trim();
        let bad = || CsmError::Parse(format!("bad permutation `{s}`"));
        let v: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        FinitePerm::new(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &FinitePerm) -> FinitePerm {
        assert_eq!(self.n(), other.n());
        FinitePerm(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    pub fn inverse(&self) -> FinitePerm {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        FinitePerm(inv)
    }

    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> FinitePerm {
        FinitePerm(
            self.0
                .iter()
                .map(|&v| {
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// `w s_i`: swaps positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> FinitePerm {
        self.swap_positions(i, i + 1)
    }

    /// `w ∘ (a b)`.
    pub fn swap_positions(&self, a: usize, b: usize) -> FinitePerm {
        let mut v = self.0.clone();
        v.swap(a - 1, b - 1);
        FinitePerm(v)
    }

    /// `i` with `w^{-1}(i) > w^{-1}(i+1)`, i.e. `ℓ(s_i w) < ℓ(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n()).filter(|&i| inv.0[i - 1] > inv.0[i]).collect()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// Reduced word `w = s_{i_1} ... s_{i_l}`, peeling the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.left_descents().first() {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Bruhat order by the tableau criterion.
    pub fn bruhat_leq(&self, other: &FinitePerm) -> bool {
        assert_eq!(self.n(), other.n());
        let n = self.n();
        for k in 1..n {
            let mut a: Vec<usize> = self.0[..k].to_vec();
            let mut b: Vec<usize> = other.0[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// `w·λ`, the vector with `(wλ)_{w(i)} = λ_i`.
    pub fn act_on_vector(&self, lambda: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v - 1] = lambda[i];
        }
        out
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<FinitePerm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(FinitePerm(cur.clone()));
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for FinitePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

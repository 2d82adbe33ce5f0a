use std::fmt;

use super::FinitePerm;
use crate::symra::{LinearForm, Variable};
use crate::{CsmError, Result};

/// Which left descent to peel when building reduced words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TieBreak {
    #[default]
    Smallest,
    Largest,
}

/// An `n`-periodic bijection of ℤ, stored as its window `f(1..=n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePerm {
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn from_window(window: Vec<i64>) -> Result<AffinePerm> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(CsmError::InvalidWindow("empty window".into()));
        }
        let mut seen = vec![false; n as usize];
        for &v in &window {
            let r = v.rem_euclid(n) as usize;
            if seen[r] {
                return Err(CsmError::InvalidWindow(format!(
                    "{window:?}: entries repeat modulo {n}"
                )));
            }
            seen[r] = true;
        }
        let shift: i64 = window.iter().enumerate().map(|(i, v)| v - (i as i64 + 1)).sum();
        if shift % n != 0 {
            return Err(CsmError::InvalidWindow(format!(
                "{window:?}: Σ(f(i) - i) = {shift} is not divisible by {n}"
            )));
        }
        Ok(AffinePerm { window })
    }

    /// Parses "2,5,4,7".
    pub fn parse(s: &str) -> Result<AffinePerm> {
        let w: Vec<i64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| CsmError::Parse(format!("bad window `{s}`")))
            })
            .collect::<Result<_>>()?;
        AffinePerm::from_window(w)
    }

    pub fn identity(n: usize) -> AffinePerm {
        AffinePerm {
            window: (1..=n as i64).collect(),
        }
    }

    /// `t_λ`, window `i ↦ i + λ_i n`.
    pub fn translation(lambda: &[i64]) -> AffinePerm {
        let n = lambda.len() as i64;
        AffinePerm {
            window: lambda
                .iter()
                .enumerate()
                .map(|(i, l)| i as i64 + 1 + l * n)
                .collect(),
        }
    }

    /// `s_i` for `0 <= i < n`; `s_0` swaps `n` and `n+1`.
    pub fn simple(n: usize, i: usize) -> Result<AffinePerm> {
        if n < 2 || i >= n {
            return Err(CsmError::IndexOutOfRange {
                index: i as i64,
                lo: 0,
                hi: n as i64 - 1,
            });
        }
        Ok(AffinePerm::identity(n).left_mul_simple(i))
    }

    /// `ω^m` with `ω(j) = j + 1`.
    pub fn shift(n: usize, m: i64) -> AffinePerm {
        AffinePerm {
            window: (1..=n as i64).map(|j| j + m).collect(),
        }
    }

    pub fn from_finite(u: &FinitePerm) -> AffinePerm {
        AffinePerm {
            window: u.one_line().iter().map(|&v| v as i64).collect(),
        }
    }

    /// `u t_λ w^{-1}`.
    pub fn from_uw(u: &FinitePerm, w: &FinitePerm, lambda: &[i64]) -> Result<AffinePerm> {
        let n = u.n();
        if w.n() != n || lambda.len() != n {
            return Err(CsmError::AmbientMismatch(n, w.n().max(lambda.len())));
        }
        let winv = w.inverse();
        Ok(AffinePerm {
            window: (1..=n)
                .map(|i| {
                    let j = winv.apply(i);
                    u.apply(j) as i64 + lambda[j - 1] * n as i64
                })
                .collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn apply(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let r = (i - 1).rem_euclid(n);
        self.window[r as usize] + (i - 1 - r)
    }

    pub fn degree(&self) -> i64 {
        let n = self.n() as i64;
        let s: i64 = self
            .window
            .iter()
            .enumerate()
            .map(|(i, v)| v - (i as i64 + 1))
            .sum();
        s / n
    }

    pub fn compose(&self, other: &AffinePerm) -> Result<AffinePerm> {
        if self.n() != other.n() {
            return Err(CsmError::AmbientMismatch(self.n(), other.n()));
        }
        Ok(AffinePerm {
            window: other.window.iter().map(|&j| self.apply(j)).collect(),
        })
    }

    pub fn inverse(&self) -> AffinePerm {
        let n = self.n() as i64;
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            inv[r as usize] = i as i64 + 1 - (v - 1 - r);
        }
        AffinePerm { window: inv }
    }

    /// Length via `Σ_{i<j} |⌊(f(j) - f(i)) / n⌋|`.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let mut l = 0;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                l += (self.window[j] - self.window[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        l
    }

    /// Direct count of pairs `i < j`, `i ∈ 1..=n`, with `f(i) > f(j)`.
    pub fn inversion_count(&self) -> usize {
        let disp: Vec<i64> = self
            .window
            .iter()
            .enumerate()
            .map(|(i, v)| v - (i as i64 + 1))
            .collect();
        let spread = disp.iter().max().unwrap() - disp.iter().min().unwrap();
        let mut count = 0;
        for a in 1..=self.n() as i64 {
            for b in a + 1..=a + spread + 1 {
                if self.apply(a) > self.apply(b) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i as i64) > inv.apply(i as i64 + 1)
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (0..self.n())
            .filter(|&i| inv.apply(i as i64) > inv.apply(i as i64 + 1))
            .collect()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.apply(i as i64) > self.apply(i as i64 + 1)
    }

    /// `s_i f`: exchanges the values `i + mn` and `i + 1 + mn`.
    pub fn left_mul_simple(&self, i: usize) -> AffinePerm {
        let n = self.n() as i64;
        let a = i as i64 % n;
        let b = (i as i64 + 1) % n;
        AffinePerm {
            window: self
                .window
                .iter()
                .map(|&v| {
                    let r = v.rem_euclid(n);
                    if r == a {
                        v + 1
                    } else if r == b {
                        v - 1
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// `f s_i`: exchanges positions `i + mn` and `i + 1 + mn`.
    pub fn right_mul_simple(&self, i: usize) -> AffinePerm {
        let n = self.n();
        let mut w = self.window.clone();
        if i == 0 {
            let (first, last) = (w[0], w[n - 1]);
            w[0] = last - n as i64;
            w[n - 1] = first + n as i64;
        } else {
            w.swap(i - 1, i);
        }
        AffinePerm { window: w }
    }

    /// `f ∘ t_{a,b}` where `t_{a,b}` swaps `a + mn` and `b + mn`; `1 <= a <= n`, `b ≢ a`.
    pub fn mul_reflection(&self, a: i64, b: i64) -> AffinePerm {
        let n = self.n() as i64;
        let b0 = (b - 1).rem_euclid(n) + 1;
        let q = (b - b0) / n;
        assert!(b0 != a, "reflection needs distinct residues");
        let mut w = self.window.clone();
        let fa = w[(a - 1) as usize];
        w[(a - 1) as usize] = w[(b0 - 1) as usize] + q * n;
        w[(b0 - 1) as usize] = fa - q * n;
        AffinePerm { window: w }
    }

    /// `f = s_{i_1} ... s_{i_l} ω^m`, returned as `(word, m)`.
    pub fn reduced_word(&self, tie: TieBreak) -> (Vec<usize>, i64) {
        let mut f = self.clone();
        let mut word = Vec::with_capacity(self.length());
        loop {
            let d = f.left_descents();
            let pick = match tie {
                TieBreak::Smallest => d.first(),
                TieBreak::Largest => d.last(),
            };
            match pick {
                Some(&i) => {
                    word.push(i);
                    f = f.left_mul_simple(i);
                }
                None => return (word, self.degree()),
            }
        }
    }

    /// The finite permutation `j ↦ f(j) mod n`.
    pub fn finite_part(&self) -> FinitePerm {
        let n = self.n() as i64;
        FinitePerm::new(
            self.window
                .iter()
                .map(|v| ((v - 1).rem_euclid(n) + 1) as usize)
                .collect(),
        )
        .expect("residues of a window form a permutation")
    }

    /// Action of the finite part on y-indices; translations act trivially.
    pub fn act_on_form(&self, l: &LinearForm) -> LinearForm {
        let w = self.finite_part();
        l.map_vars(|v| match v.family() {
            crate::symra::Family::Y => Variable::y(w.apply(v.index() as usize) as u32),
            crate::symra::Family::X => v,
        })
    }

    /// `i <= f(i) <= i + n` for all `i`.
    pub fn is_bounded(&self) -> bool {
        let n = self.n() as i64;
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v >= i as i64 + 1 && v <= i as i64 + 1 + n)
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

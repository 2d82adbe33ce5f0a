use std::fmt;

use super::{LinearForm, RatFunc};
use crate::{CsmError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
}

/// `x_i` or `y_j`, indices start at 1. Ordered by `(family, index)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    family: Family,
    index: u32,
}

impl Variable {
    pub fn x(index: u32) -> Variable {
        assert!(index >= 1, "variable indices start at 1");
        Variable {
            family: Family::X,
            index,
        }
    }

    pub fn y(index: u32) -> Variable {
        assert!(index >= 1, "variable indices start at 1");
        Variable {
            family: Family::Y,
            index,
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn parse(s: &str) -> Result<Variable> {
        let s = s.trim();
        let bad = || CsmError::Parse(format!("bad variable name `{s}`"));
        let (fam, rest) = match s.split_at_checked(1) {
            Some(("x", r)) => (Family::X, r),
            Some(("y", r)) => (Family::Y, r),
            _ => return Err(bad()),
        };
        let index: u32 = rest.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Variable { family: fam, index })
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::X => write!(f, "x{}", self.index),
            Family::Y => write!(f, "y{}", self.index),
        }
    }
}

/// The ambient `(k, n)`: variables `x_1..x_k` and `y_1..y_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    k: usize,
    n: usize,
}

impl Ambient {
    pub fn new(k: usize, n: usize) -> Ambient {
        Ambient { k, n }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self, i: usize) -> Result<Variable> {
        self.range(i, 1, self.k)?;
        Ok(Variable::x(i as u32))
    }

    pub fn y(&self, j: usize) -> Result<Variable> {
        self.range(j, 1, self.n)?;
        Ok(Variable::y(j as u32))
    }

    fn range(&self, i: usize, lo: usize, hi: usize) -> Result<()> {
        if i < lo || i > hi {
            return Err(CsmError::IndexOutOfRange {
                index: i as i64,
                lo: lo as i64,
                hi: hi as i64,
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: Variable) -> bool {
        let bound = match v.family {
            Family::X => self.k,
            Family::Y => self.n,
        };
        (v.index as usize) <= bound
    }

    /// Fails if `r` mentions a variable outside the ambient.
    pub fn check(&self, r: &RatFunc) -> Result<()> {
        match r.variables().into_iter().find(|v| !self.contains(*v)) {
            Some(v) => Err(CsmError::VariableOutOfAmbient {
                var: v.to_string(),
                k: self.k,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// `α_i = -y_i + y_{i+1}` for `1 <= i < n`, and `α_0 = -y_n + y_1`.
    pub fn simple_root(&self, i: usize) -> Result<LinearForm> {
        self.range(i, 0, self.n - 1)?;
        let (a, b) = if i == 0 { (self.n, 1) } else { (i, i + 1) };
        Ok(LinearForm::new(
            0,
            [(Variable::y(a as u32), -1), (Variable::y(b as u32), 1)],
        ))
    }

    fn y_swap(&self, i: usize) -> Result<(u32, u32)> {
        self.range(i, 0, self.n - 1)?;
        Ok(if i == 0 {
            (1, self.n as u32)
        } else {
            (i as u32, i as u32 + 1)
        })
    }

    /// The simple reflection `s_i` on the y-variables; `s_0` swaps `y_1` and `y_n`.
    pub fn act_y(&self, r: &RatFunc, i: usize) -> Result<RatFunc> {
        let (a, b) = self.y_swap(i)?;
        Ok(r.map_vars(|v| swap_in(v, Family::Y, a, b)))
    }

    pub fn swap_x(&self, r: &RatFunc, i: usize) -> Result<RatFunc> {
        self.range(i, 1, self.k.saturating_sub(1))?;
        let (a, b) = (i as u32, i as u32 + 1);
        Ok(r.map_vars(|v| swap_in(v, Family::X, a, b)))
    }

    /// Substitutes `x_i -> y_{targets[i-1]}`; `targets` must be strictly increasing.
    pub fn substitute_x(&self, r: &RatFunc, targets: &[usize]) -> Result<RatFunc> {
        if targets.len() != self.k {
            return Err(CsmError::AmbientMismatch(targets.len(), self.k));
        }
        for (pos, &a) in targets.iter().enumerate() {
            self.range(a, 1, self.n)?;
            if pos > 0 && targets[pos - 1] >= a {
                return Err(CsmError::Parse(
                    "substitution targets must be strictly increasing".into(),
                ));
            }
        }
        r.substitute(|v| match v.family {
            Family::X => Variable::y(targets[v.index as usize - 1] as u32),
            Family::Y => v,
        })
    }
}

fn swap_in(v: Variable, fam: Family, a: u32, b: u32) -> Variable {
    if v.family != fam {
        v
    } else if v.index == a {
        Variable { family: fam, index: b }
    } else if v.index == b {
        Variable { family: fam, index: a }
    } else {
        v
    }
}

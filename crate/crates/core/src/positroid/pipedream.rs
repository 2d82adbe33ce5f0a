use std::fmt;

use serde::{Deserialize, Serialize};

use crate::symra::{LinearForm, Polynomial, Variable};
use crate::weylperm::AffinePerm;
use crate::{CsmError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tile {
    /// South to east, west to north.
    Bump,
    /// South to north, west to east.
    Cross,
}

impl Tile {
    fn glyph(self) -> char {
        match self {
            Tile::Bump => 'B',
            Tile::Cross => 'X',
        }
    }
}

/// An `n`-periodic tiling of `k` rows, row 1 on top.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PipeDream {
    k: usize,
    n: usize,
    rows: Vec<Vec<Tile>>,
}

#[derive(Serialize, Deserialize)]
struct PipeDreamJson {
    k: usize,
    n: usize,
    rows: Vec<String>,
}

impl PipeDream {
    pub fn new(rows: Vec<Vec<Tile>>) -> Result<PipeDream> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if k == 0 || n == 0 {
            return Err(CsmError::Parse("empty grid".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(CsmError::Parse("rows of unequal length".into()));
        }
        Ok(PipeDream { k, n, rows })
    }

    /// Row `r` (0-based) from the low `n` bits of `mask`, bit `j` = column `j+1`, set = Cross.
    pub(crate) fn from_masks(n: usize, masks: &[u32]) -> PipeDream {
        let rows = masks
            .iter()
            .map(|m| {
                (0..n)
                    .map(|j| if m >> j & 1 == 1 { Tile::Cross } else { Tile::Bump })
                    .collect()
            })
            .collect();
        PipeDream {
            k: masks.len(),
            n,
            rows,
        }
    }

    /// Parses `k` lines of `B`/`X`, e.g. `"BBBB\nXBXB"`. Blank lines are skipped.
    pub fn parse_ascii(s: &str) -> Result<PipeDream> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .map(|c| match c {
                        'B' | 'b' => Ok(Tile::Bump),
                        'X' | 'x' => Ok(Tile::Cross),
                        _ => Err(CsmError::Parse(format!("unknown tile `{c}`"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PipeDream::new(rows)
    }

    pub fn to_ascii(&self) -> String {
        self.row_strings().join("\n")
    }

    fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|t| t.glyph()).collect())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PipeDreamJson {
            k: self.k,
            n: self.n,
            rows: self.row_strings(),
        })
        .expect("plain struct serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<PipeDream> {
        let doc: PipeDreamJson =
            serde_json::from_value(v.clone()).map_err(|e| CsmError::Parse(e.to_string()))?;
        let pd = PipeDream::parse_ascii(&doc.rows.join("\n"))?;
        if pd.k != doc.k || pd.n != doc.n {
            return Err(CsmError::Parse(format!(
                "declared {}x{} but rows are {}x{}",
                doc.k, doc.n, pd.k, pd.n
            )));
        }
        Ok(pd)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Tile at 1-based `(row, column)`.
    pub fn tile(&self, row: usize, col: usize) -> Tile {
        self.rows[row - 1][col - 1]
    }

    pub fn crosses(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, t)| **t == Tile::Cross)
                .map(move |(j, _)| (i + 1, j + 1))
        })
    }

    /// `∏_{Cross at (i,j)} (x_i - y_j)`.
    pub fn weight_numerator(&self) -> Polynomial {
        let mut p = Polynomial::one();
        for (i, j) in self.crosses() {
            p = p.mul_linear(&LinearForm::diff(0, Variable::x(i as u32), Variable::y(j as u32)));
        }
        p
    }

    /// Traces the pipe entering the bottom at each column `1..=n` up through
    /// the rows; it leaves row 1 at column `f(j)` of the universal cover.
    pub fn reading_permutation(&self) -> Result<AffinePerm> {
        let maps: Vec<Vec<i64>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row_map(row).ok_or_else(|| {
                    CsmError::NoReadingPermutation(format!("row {} has no bump, its pipe closes up", r + 1))
                })
            })
            .collect::<Result<_>>()?;
        let n = self.n as i64;
        let window = (1..=n)
            .map(|j| maps.iter().rev().fold(j, |p, m| step(m, n, p)))
            .collect();
        AffinePerm::from_window(window)
    }
}

/// Displacement of the pipe entering from below at each column.
pub(crate) fn row_map(row: &[Tile]) -> Option<Vec<i64>> {
    let n = row.len();
    let first = row.iter().position(|t| *t == Tile::Bump)?;
    let mut out = vec![0; n];
    // walk right to left, remembering the nearest bump to the east
    let mut next = first + n;
    for p in (0..n).rev() {
        if row[p] == Tile::Cross {
            out[p] = 0;
        } else {
            out[p] = (next - p) as i64;
            next = p;
        }
    }
    Some(out)
}

pub(crate) fn step(map: &[i64], n: i64, p: i64) -> i64 {
    p + map[(p - 1).rem_euclid(n) as usize]
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

use rayon::prelude::*;

use super::pipedream::{row_map, step, Tile};
use super::PipeDream;
use crate::weylperm::AffinePerm;
use crate::{CsmError, Limits, Result};

/// Checks `f` is bounded of degree `k` and the grid fits the guard.
pub(crate) fn check_bounded(f: &AffinePerm, k: usize, limits: &Limits) -> Result<()> {
    let n = f.n();
    if !f.is_bounded() {
        return Err(CsmError::InvalidWindow(format!("{f} is not bounded: need i <= f(i) <= i + {n}")));
    }
    if f.degree() != k as i64 {
        return Err(CsmError::InvalidWindow(format!("{f} has degree {}, expected {k}", f.degree())));
    }
    Limits::check("k*n", k * n, limits.pipe_cells)
}

fn tiles(mask: u32, n: usize) -> Vec<Tile> {
    (0..n)
        .map(|j| if mask >> j & 1 == 1 { Tile::Cross } else { Tile::Bump })
        .collect()
}

/// `PD(f)` by a row-by-row transfer from the bottom: the positions reached so
/// far must stay within `(rows left) * n` of their targets, and the top row is
/// forced.
pub fn enumerate_pd(f: &AffinePerm, k: usize, limits: &Limits) -> Result<Vec<PipeDream>> {
    check_bounded(f, k, limits)?;
    let n = f.n();
    let target: Vec<i64> = f.window().to_vec();
    let start: Vec<i64> = (1..=n as i64).collect();
    let mut out = if k == 1 {
        top_row(&start, &target, n).map(|m| vec![vec![m]]).unwrap_or_default()
    } else {
        let full = (1u32 << n) - 1;
        (0..full)
            .into_par_iter()
            .flat_map_iter(|mask| {
                let mut found = Vec::new();
                let mut stack = vec![mask];
                descend(&start, k, &target, n, &mut stack, &mut found);
                found
            })
            .collect()
    };
    // rows were collected bottom-up
    let mut dreams: Vec<PipeDream> = out
        .iter_mut()
        .map(|rows| {
            rows.reverse();
            PipeDream::from_masks(n, rows)
        })
        .collect();
    dreams.sort();
    Ok(dreams)
}

fn advance(cur: &[i64], mask: u32, n: usize) -> Option<Vec<i64>> {
    let map = row_map(&tiles(mask, n))?;
    Some(cur.iter().map(|&p| step(&map, n as i64, p)).collect())
}

/// `stack` holds the rows chosen so far, bottom first; its last entry is
/// the row being placed, counted as row `k - stack.len() + 1`.
fn descend(cur: &[i64], k: usize, target: &[i64], n: usize, stack: &mut Vec<u32>, found: &mut Vec<Vec<u32>>) {
    let row = k - stack.len() + 1;
    let Some(next) = advance(cur, *stack.last().unwrap(), n) else {
        return;
    };
    let slack = (row as i64 - 1) * n as i64;
    if next.iter().zip(target).any(|(&c, &t)| c > t || t > c + slack) {
        return;
    }
    if row == 2 {
        if let Some(m) = top_row(&next, target, n) {
            let mut rows = stack.clone();
            rows.push(m);
            found.push(rows);
        }
        return;
    }
    for mask in 0..(1u32 << n) - 1 {
        stack.push(mask);
        descend(&next, k, target, n, stack, found);
        stack.pop();
    }
}

/// The unique last row taking `cur` to `target`, if any: crosses exactly
/// where a pipe must go straight up.
fn top_row(cur: &[i64], target: &[i64], n: usize) -> Option<u32> {
    let mut mask = 0u32;
    for (&c, &t) in cur.iter().zip(target) {
        let d = t - c;
        if !(0..=n as i64).contains(&d) {
            return None;
        }
        if d == 0 {
            mask |= 1 << (c - 1).rem_euclid(n as i64);
        }
    }
    let next = advance(cur, mask, n)?;
    (next == target).then_some(mask)
}

/// `PD(f)` by filtering all `2^{kn}` grids.
pub fn enumerate_pd_baseline(f: &AffinePerm, k: usize, limits: &Limits) -> Result<Vec<PipeDream>> {
    check_bounded(f, k, limits)?;
    let n = f.n();
    let row_mask = (1u64 << n) - 1;
    let mut dreams: Vec<PipeDream> = (0u64..1 << (k * n))
        .into_par_iter()
        .filter_map(|bits| {
            let masks: Vec<u32> = (0..k).map(|r| (bits >> (r * n) & row_mask) as u32).collect();
            let pd = PipeDream::from_masks(n, &masks);
            match pd.reading_permutation() {
                Ok(g) if &g == f => Some(pd),
                _ => None,
            }
        })
        .collect();
    dreams.sort();
    Ok(dreams)
}

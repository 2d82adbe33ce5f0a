use super::AffinePerm;
use crate::{CsmError, Result};

/// Bounded affine permutations of degree `k`: `i <= f(i) <= i + n`.
/// Lexicographic in the window.
pub fn enumerate_bounded(k: usize, n: usize) -> Result<Vec<AffinePerm>> {
    if n == 0 || k > n {
        return Err(CsmError::IndexOutOfRange {
            index: k as i64,
            lo: 0,
            hi: n as i64,
        });
    }
    let mut out = Vec::new();
    let mut window = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(n as i64, (k * n) as i64, &mut window, &mut used, &mut out);
    Ok(out)
}

fn extend(n: i64, left: i64, window: &mut Vec<i64>, used: &mut [bool], out: &mut Vec<AffinePerm>) {
    let i = window.len() as i64 + 1;
    if i > n {
        if left == 0 {
            out.push(AffinePerm::from_window(window.clone()).unwrap());
        }
        return;
    }
    let remaining = n - i;
    for d in 0..=n {
        if d > left || left - d > remaining * n {
            continue;
        }
        let r = (i + d).rem_euclid(n) as usize;
        if used[r] {
            continue;
        }
        used[r] = true;
        window.push(i + d);
        extend(n, left - d, window, used, out);
        window.pop();
        used[r] = false;
    }
}

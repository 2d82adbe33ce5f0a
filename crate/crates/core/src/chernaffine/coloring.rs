use rayon::prelude::*;

use crate::symra::{rat, LinearForm, Polynomial, RatFunc, Variable};
use crate::weylperm::{AffinePerm, TieBreak};
use crate::{CsmError, Limits, Result};

/// One crossing as seen from above: the strand entering the left slot from
/// the top carries `y_v`, the one entering the right slot carries `y_u`.
#[derive(Clone, Copy)]
struct Crossing {
    left: usize,
    v: u32,
    u: u32,
}

fn gap(c: &Crossing) -> LinearForm {
    LinearForm::diff(0, Variable::y(c.u), Variable::y(c.v))
}

/// Weighted sum over compatible colorings of the periodic wiring diagram
/// of `g`, top endpoints colored by `f^{-1}`.
///
/// Crossings are read top-down in the order of the reduced word. At each one
/// the two colors either stay in their slots, weight `1/(1+u-v)`, or follow
/// their strands, weight `(u-v)/(1+u-v)`.
pub fn coloring_oracle(f: &AffinePerm, g: &AffinePerm, limits: &Limits) -> Result<RatFunc> {
    let n = g.n();
    if f.n() != n {
        return Err(CsmError::AmbientMismatch(f.n(), n));
    }
    if n < 2 {
        return Err(CsmError::InvalidWindow("need n >= 2".into()));
    }
    Limits::check("length of g", g.length(), limits.coloring_len)?;
    if f.degree() != g.degree() {
        return Ok(RatFunc::zero());
    }
    let (word, m) = g.reduced_word(TieBreak::Smallest);

    let mut wt: Vec<u32> = (1..=n as u32).collect();
    let mut crossings = Vec::with_capacity(word.len());
    for &i in &word {
        let (l, r) = if i == 0 { (n - 1, 0) } else { (i - 1, i) };
        crossings.push(Crossing {
            left: l,
            v: wt[l],
            u: wt[r],
        });
        wt.swap(l, r);
    }
    let den: Vec<(LinearForm, u32)> = crossings
        .iter()
        .map(|c| (gap(c).add(&LinearForm::new(1, [])), 1))
        .collect();

    let finv = f.inverse();
    let top: Vec<i64> = (1..=n as i64).map(|p| finv.apply(p)).collect();
    let target: Vec<i64> = (1..=n as i64).map(|p| p - m).collect();

    // fan out over the first few choices
    let split = crossings.len().min(8);
    let num = (0u32..1 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut colors = top.clone();
            let mut factors = Vec::new();
            for (d, c) in crossings[..split].iter().enumerate() {
                if prefix >> d & 1 == 1 {
                    follow(&mut colors, c, n);
                    factors.push(gap(c));
                }
            }
            let mut acc = Polynomial::zero();
            descend(&crossings[split..], n, &mut colors, &mut factors, &target, &mut acc);
            acc
        })
        .reduce(Polynomial::zero, |a, b| &a + &b);
    RatFunc::from_parts(rat(1), num, den)
}

fn follow(colors: &mut [i64], c: &Crossing, n: usize) {
    if c.left == n - 1 {
        let a = colors[n - 1];
        colors[n - 1] = colors[0] + n as i64;
        colors[0] = a - n as i64;
    } else {
        colors.swap(c.left, c.left + 1);
    }
}

fn descend(
    rest: &[Crossing],
    n: usize,
    colors: &mut Vec<i64>,
    factors: &mut Vec<LinearForm>,
    target: &[i64],
    acc: &mut Polynomial,
) {
    let Some((c, tail)) = rest.split_first() else {
        if colors.as_slice() == target {
            let mut term = Polynomial::one();
            for l in factors.iter() {
                term = term.mul_linear(l);
            }
            *acc = &*acc + &term;
        }
        return;
    };
    descend(tail, n, colors, factors, target, acc);
    follow(colors, c, n);
    factors.push(gap(c));
    descend(tail, n, colors, factors, target, acc);
    factors.pop();
    // an involution
    follow(colors, c, n);
}

/// Weight of a planar (non-periodic) strand diagram with crossings at slots
/// `(p, p+1)`, `1 <= p < N`, listed top-down. `weights[p]` is the spectral
/// variable of the strand leaving the top at slot `p`. Crossings whose two
/// colors agree are forbidden and contribute nothing.
pub fn strand_weight(word: &[usize], weights: &[Variable], top: &[i64], bottom: &[i64]) -> Result<RatFunc> {
    let len = weights.len();
    if top.len() != len || bottom.len() != len {
        return Err(CsmError::AmbientMismatch(top.len().max(bottom.len()), len));
    }
    let mut wt = weights.to_vec();
    let mut steps = Vec::with_capacity(word.len());
    let mut den = Vec::with_capacity(word.len());
    for &p in word {
        if p == 0 || p >= len {
            return Err(CsmError::IndexOutOfRange {
                index: p as i64,
                lo: 1,
                hi: len as i64 - 1,
            });
        }
        let gap = LinearForm::new(0, [(wt[p], 1), (wt[p - 1], -1)]);
        den.push((gap.add(&LinearForm::new(1, [])), 1));
        steps.push((p - 1, gap));
        wt.swap(p - 1, p);
    }
    let mut total = Polynomial::zero();
    for mask in 0u64..1 << steps.len() {
        let mut colors = top.to_vec();
        let mut term = Polynomial::one();
        let mut ok = true;
        for (d, (l, gap)) in steps.iter().enumerate() {
            if colors[*l] == colors[l + 1] {
                ok = false;
                break;
            }
            if mask >> d & 1 == 1 {
                colors.swap(*l, l + 1);
                term = term.mul_linear(gap);
            }
        }
        if ok && colors == bottom {
            total = &total + &term;
        }
    }
    RatFunc::from_parts(rat(1), total, den)
}

/// One boundary pattern of a local move.
#[derive(Clone, Debug)]
pub struct LocalCase {
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
    pub lhs: RatFunc,
    pub rhs: RatFunc,
}

impl LocalCase {
    pub fn passed(&self) -> bool {
        self.lhs.is_equal(&self.rhs)
    }
}

/// A local move checked over all boundary patterns.
#[derive(Clone, Debug)]
pub struct LocalMoveReport {
    pub name: &'static str,
    pub cases: Vec<LocalCase>,
}

impl LocalMoveReport {
    pub fn failures(&self) -> impl Iterator<Item = &LocalCase> {
        self.cases.iter().filter(|c| !c.passed())
    }
}

fn permutations(items: &[i64]) -> Vec<Vec<i64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn compare(
    name: &'static str,
    colors: &[i64],
    weights: &[Variable],
    lhs: &[usize],
    rhs: &[usize],
) -> Result<LocalMoveReport> {
    let pats = permutations(colors);
    let mut cases = Vec::new();
    for top in &pats {
        for bottom in &pats {
            cases.push(LocalCase {
                top: top.clone(),
                bottom: bottom.clone(),
                lhs: strand_weight(lhs, weights, top, bottom)?,
                rhs: strand_weight(rhs, weights, top, bottom)?,
            });
        }
    }
    Ok(LocalMoveReport { name, cases })
}

/// Yang-Baxter, unitarity and normalization with generic spectral variables,
/// over every boundary pattern of distinct colors.
pub fn local_move_suite() -> Result<Vec<LocalMoveReport>> {
    let y: Vec<Variable> = (1..=3).map(Variable::y).collect();
    Ok(vec![
        compare("ybe", &[1, 2, 3], &y, &[1, 2, 1], &[2, 1, 2])?,
        compare("ue", &[1, 2], &y[..2], &[1, 1], &[])?,
        compare("nm", &[1, 2], &[y[0], y[0]], &[1], &[])?,
    ])
}

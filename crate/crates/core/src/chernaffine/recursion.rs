use std::collections::HashMap;
use std::sync::Mutex;

use crate::symra::{Ambient, LinearForm, RatFunc};
use crate::weylperm::{AffinePerm, TieBreak};
use crate::{CsmError, Result};

/// Memo table for `s_SM(Σ̊^f)|_g`, keyed by window pairs.
///
/// Scoped to one computation; the reduced words used for `g` follow `tie`.
/// Inserts are idempotent, so the cache can be shared between threads.
pub struct AffineLocCache {
    n: usize,
    tie: TieBreak,
    map: Mutex<HashMap<(AffinePerm, AffinePerm), RatFunc>>,
}

impl AffineLocCache {
    pub fn new(n: usize) -> AffineLocCache {
        AffineLocCache::with_tie(n, TieBreak::Smallest)
    }

    pub fn with_tie(n: usize, tie: TieBreak) -> AffineLocCache {
        AffineLocCache {
            n,
            tie,
            map: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tie(&self) -> TieBreak {
        self.tie
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.lock().unwrap().clear();
    }

    fn lookup(&self, f: &AffinePerm, g: &AffinePerm) -> Option<RatFunc> {
        // cloning keys is cheaper than holding the lock across recursion
        self.map.lock().unwrap().get(&(f.clone(), g.clone())).cloned()
    }

    fn store(&self, f: &AffinePerm, g: &AffinePerm, v: RatFunc) {
        self.map.lock().unwrap().entry((f.clone(), g.clone())).or_insert(v);
    }
}

/// `s_SM(Σ̊^f)|_g`, built along a reduced word of `g` by
/// `val(f, s_i h) = (s_i val(f, h) + α_i s_i val(s_i f, h)) / (1 + α_i)`.
pub fn affine_ssm_loc(f: &AffinePerm, g: &AffinePerm, cache: &AffineLocCache) -> Result<RatFunc> {
    if f.n() != g.n() {
        return Err(CsmError::AmbientMismatch(f.n(), g.n()));
    }
    if g.n() != cache.n {
        return Err(CsmError::AmbientMismatch(g.n(), cache.n));
    }
    if g.n() < 2 {
        return Err(CsmError::InvalidWindow("need n >= 2".into()));
    }
    value(f, g, g.length(), cache)
}

fn value(f: &AffinePerm, g: &AffinePerm, lg: usize, cache: &AffineLocCache) -> Result<RatFunc> {
    if f.degree() != g.degree() {
        return Ok(RatFunc::zero());
    }
    if lg == 0 {
        return Ok(if f == g { RatFunc::one() } else { RatFunc::zero() });
    }
    // every coloring writes f as a subword of g
    if f.length() > lg {
        return Ok(RatFunc::zero());
    }
    if let Some(v) = cache.lookup(f, g) {
        return Ok(v);
    }
    let d = g.left_descents();
    let i = match cache.tie {
        TieBreak::Smallest => d[0],
        TieBreak::Largest => d[d.len() - 1],
    };
    let h = g.left_mul_simple(i);
    let amb = Ambient::new(0, g.n());
    let alpha = amb.simple_root(i)?;

    let stay = value(f, &h, lg - 1, cache)?;
    let moved = value(&f.left_mul_simple(i), &h, lg - 1, cache)?;
    let mut num = amb.act_y(&stay, i)?;
    if !moved.is_zero() {
        num = num.add(&amb.act_y(&moved, i)?.mul_linear(&alpha));
    }
    let out = num.div_linear(&alpha.add(&LinearForm::new(1, [])))?;
    cache.store(f, g, out.clone());
    Ok(out)
}

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use super::{pushforward_gp, richardson_csm, tangent_chern_gp, FixedPoint, FixedPoints, LocTable, SchubertTables};
use crate::symra::{LinearForm, RatFunc, Variable};
use crate::weylperm::{AffinePerm, FinitePerm, ParabolicData, TieBreak};
use crate::{CsmError, Limits, Result};

/// `s_SM(Π̊_f)|_μ` for every `f = u t_λ w^{-1}` and `μ ∈ Wλ`.
pub struct ProjRichTable {
    parabolic: ParabolicData,
    points: Arc<FixedPoints>,
    perms: Vec<FinitePerm>,
    index: HashMap<FinitePerm, usize>,
    tables: Vec<Vec<LocTable>>,
    by_f: BTreeMap<AffinePerm, (usize, usize)>,
}

impl ProjRichTable {
    fn assemble(
        p: &ParabolicData,
        points: Arc<FixedPoints>,
        perms: Vec<FinitePerm>,
        tables: Vec<Vec<LocTable>>,
    ) -> Result<ProjRichTable> {
        let index: HashMap<FinitePerm, usize> =
            perms.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut by_f: BTreeMap<AffinePerm, (usize, usize)> = BTreeMap::new();
        for (ui, u) in perms.iter().enumerate() {
            for (wi, w) in perms.iter().enumerate() {
                let f = AffinePerm::from_uw(u, w, p.lambda())?;
                match by_f.get(&f) {
                    Some(&(u0, w0)) => {
                        let seen: &LocTable = &tables[u0][w0];
                        if !seen.is_equal(&tables[ui][wi]) {
                            return Err(CsmError::Inconsistent(format!(
                                "f = {f}: (u, w) = ({}, {}) and ({u}, {w}) disagree",
                                perms[u0], perms[w0]
                            )));
                        }
                    }
                    None => {
                        by_f.insert(f, (ui, wi));
                    }
                }
            }
        }
        Ok(ProjRichTable {
            parabolic: p.clone(),
            points,
            perms,
            index,
            tables,
            by_f,
        })
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.parabolic
    }

    pub fn points(&self) -> &Arc<FixedPoints> {
        &self.points
    }

    pub fn get(&self, f: &AffinePerm) -> Option<&LocTable> {
        self.by_f.get(f).map(|&(u, w)| &self.tables[u][w])
    }

    pub fn get_uw(&self, u: &FinitePerm, w: &FinitePerm) -> &LocTable {
        &self.tables[self.index[u]][self.index[w]]
    }

    /// Distinct elements of `𝓑^+` with their tables, ordered by window.
    pub fn elements(&self) -> impl Iterator<Item = (&AffinePerm, &LocTable)> {
        self.by_f.iter().map(|(f, &(u, w))| (f, &self.tables[u][w]))
    }

    pub fn perms(&self) -> &[FinitePerm] {
        &self.perms
    }

    pub fn is_equal(&self, other: &ProjRichTable) -> bool {
        self.by_f.len() == other.by_f.len()
            && self
                .elements()
                .all(|(f, t)| other.get(f).is_some_and(|o| o.is_equal(t)))
    }
}

/// Solves the left recursion from the base classes `γ_{u t_λ, μ}` level by
/// level in `ℓ(w)`. Fails if the result depends on the `(u, w)` presentation
/// of `f` or keeps a pole at the origin.
pub fn projrich_ssm_recursive(p: &ParabolicData, tie: TieBreak, limits: &Limits) -> Result<ProjRichTable> {
    let n = p.n();
    Limits::check("n", n, limits.projrich_n)?;
    let points = FixedPoints::partial(p);
    let amb = points.ambient();
    let perms = FinitePerm::all(n);
    let index: HashMap<FinitePerm, usize> =
        perms.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let lam = p.lambda();

    let mut base = RatFunc::one();
    for a in 0..n {
        for b in a + 1..n {
            if lam[a] > lam[b] {
                let (ya, yb) = (Variable::y(a as u32 + 1), Variable::y(b as u32 + 1));
                base = base
                    .mul_linear(&LinearForm::diff(0, ya, yb))
                    .div_linear(&LinearForm::diff(1, ya, yb))?;
            }
        }
    }

    let id = index[&FinitePerm::identity(n)];
    let lam_idx = points.index_of(&FixedPoint::Weight(lam.to_vec())).unwrap();
    let mut tables: Vec<Vec<Option<LocTable>>> = vec![vec![None; perms.len()]; perms.len()];
    for (u, row) in tables.iter_mut().enumerate() {
        let mut t = LocTable::zero(&points);
        if u == id {
            let mut vals = t.values().to_vec();
            vals[lam_idx] = base.clone();
            t = LocTable::from_values(&points, vals);
        }
        row[id] = Some(t);
    }

    let max_len = n * (n - 1) / 2;
    for len in 1..=max_len {
        let level: Vec<usize> = (0..perms.len()).filter(|&w| perms[w].length() == len).collect();
        let jobs: Vec<(usize, usize)> = level
            .iter()
            .flat_map(|&w| (0..perms.len()).map(move |u| (u, w)))
            .collect();
        let done: Vec<((usize, usize), LocTable)> = jobs
            .par_iter()
            .map(|&(u, w)| {
                let desc = perms[w].left_descents();
                let i = match tie {
                    TieBreak::Smallest => desc[0],
                    TieBreak::Largest => *desc.last().unwrap(),
                };
                let wp = index[&perms[w].left_mul_simple(i)];
                let su = index[&perms[u].left_mul_simple(i)];
                let gf = tables[u][wp].as_ref().unwrap();
                let gsf = tables[su][wp].as_ref().unwrap();
                let alpha = amb.simple_root(i)?;
                let a = RatFunc::from_linear(&alpha);
                let mut vals = Vec::with_capacity(points.len());
                for mu in 0..points.len() {
                    let smu = points.simple(i, mu);
                    let t1 = amb.act_y(gf.at(smu), i)?;
                    let t2 = amb.act_y(gsf.at(smu), i)?.mul(&a);
                    let sum = t1.add(&t2).sub(gf.at(mu));
                    vals.push(sum.div_linear(&alpha)?);
                }
                Ok(((u, w), LocTable::from_values(&points, vals)))
            })
            .collect::<Result<_>>()?;
        for ((u, w), t) in done {
            tables[u][w] = Some(t);
        }
    }

    let tables: Vec<Vec<LocTable>> = tables
        .into_iter()
        .map(|row| row.into_iter().map(Option::unwrap).collect())
        .collect();
    for row in &tables {
        for t in row {
            t.check_regular()?;
        }
    }
    ProjRichTable::assemble(p, points, perms, tables)
}

/// `π_*(c_SM(R̊_{u,w})) / c^T(T(G/P))`, pointwise.
pub fn projrich_via_pushforward(p: &ParabolicData, schubert: &SchubertTables) -> Result<ProjRichTable> {
    let n = p.n();
    if schubert.n() != n {
        return Err(CsmError::AmbientMismatch(schubert.n(), n));
    }
    let points = FixedPoints::partial(p);
    let tangent: Vec<RatFunc> = points
        .points()
        .iter()
        .map(|fp| match fp {
            FixedPoint::Weight(mu) => tangent_chern_gp(mu, p),
            FixedPoint::Perm(_) => unreachable!(),
        })
        .collect::<Result<_>>()?;
    let perms = schubert.perms().to_vec();
    let tables: Vec<Vec<LocTable>> = perms
        .par_iter()
        .map(|u| {
            perms
                .iter()
                .map(|w| {
                    let pushed = pushforward_gp(&richardson_csm(schubert, u, w), p)?;
                    let vals = pushed
                        .values()
                        .iter()
                        .zip(&tangent)
                        .map(|(v, c)| v.div(c))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(LocTable::from_values(&points, vals))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    ProjRichTable::assemble(p, points, perms, tables)
}

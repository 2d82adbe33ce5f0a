use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::{dl_operator, DlOperator, FixedPoint, FixedPoints, LocTable, Space};
use crate::symra::{LinearForm, RatFunc, Variable};
use crate::weylperm::{FinitePerm, ParabolicData};
use crate::{CsmError, Limits, Result};

fn y(i: usize) -> Variable {
    Variable::y(i as u32)
}

/// `∏_{a<b} (c + y_{v(a)} - y_{v(b)})`.
fn pair_product(v: &FinitePerm, c: i64) -> RatFunc {
    let n = v.n();
    let mut acc = RatFunc::one();
    for a in 1..=n {
        for b in a + 1..=n {
            acc = acc.mul_linear(&LinearForm::diff(c, y(v.apply(a)), y(v.apply(b))));
        }
    }
    acc
}

/// Localizations of Schubert and opposite Schubert cell classes on `G/B`.
pub struct SchubertTables {
    points: Arc<FixedPoints>,
    perms: Vec<FinitePerm>,
    index: HashMap<FinitePerm, usize>,
    ssm_cell: Vec<LocTable>,
    csm_cell: Vec<LocTable>,
    csm_opp: Vec<LocTable>,
    ssm_opp: Vec<LocTable>,
    point_class: Vec<LocTable>,
    tangent: LocTable,
}

impl SchubertTables {
    pub fn compute(n: usize, limits: &Limits) -> Result<SchubertTables> {
        Limits::check("n", n, limits.schubert_n)?;
        let points = FixedPoints::flag(n);
        let perms: Vec<FinitePerm> = points
            .points()
            .iter()
            .map(|p| match p {
                FixedPoint::Perm(v) => v.clone(),
                FixedPoint::Weight(_) => unreachable!(),
            })
            .collect();
        let index: HashMap<FinitePerm, usize> =
            perms.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let tangent = LocTable::from_values(&points, perms.iter().map(|v| pair_product(v, 1)).collect());
        let point_class: Vec<LocTable> = perms
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut vals = vec![RatFunc::zero(); perms.len()];
                vals[i] = pair_product(v, 0);
                LocTable::from_values(&points, vals)
            })
            .collect();

        let mut by_len: Vec<Vec<usize>> = vec![Vec::new(); n * (n - 1) / 2 + 1];
        for (i, v) in perms.iter().enumerate() {
            by_len[v.length()].push(i);
        }

        let id = index[&FinitePerm::identity(n)];
        let mut ssm_cell: Vec<Option<LocTable>> = vec![None; perms.len()];
        ssm_cell[id] = Some(point_class[id].try_zip(&tangent, |a, b| a.div(b))?);
        for level in by_len.iter().skip(1) {
            let done: Vec<(usize, LocTable)> = level
                .par_iter()
                .map(|&w| {
                    let i = perms[w].left_descents()[0];
                    let prev = ssm_cell[index[&perms[w].left_mul_simple(i)]].as_ref().unwrap();
                    dl_operator(prev, i, DlOperator::TL).map(|t| (w, t))
                })
                .collect::<Result<_>>()?;
            for (w, t) in done {
                ssm_cell[w] = Some(t);
            }
        }

        let w0 = index[&FinitePerm::longest(n)];
        let mut csm_opp: Vec<Option<LocTable>> = vec![None; perms.len()];
        csm_opp[w0] = Some(point_class[w0].clone());
        for level in by_len.iter().rev().skip(1) {
            let done: Vec<(usize, LocTable)> = level
                .par_iter()
                .map(|&u| {
                    let i = (1..n).find(|&i| !perms[u].is_left_descent(i)).unwrap();
                    let prev = csm_opp[index[&perms[u].left_mul_simple(i)]].as_ref().unwrap();
                    dl_operator(prev, i, DlOperator::TLVee).map(|t| (u, t))
                })
                .collect::<Result<_>>()?;
            for (u, t) in done {
                csm_opp[u] = Some(t);
            }
        }

        let ssm_cell: Vec<LocTable> = ssm_cell.into_iter().map(Option::unwrap).collect();
        let csm_opp: Vec<LocTable> = csm_opp.into_iter().map(Option::unwrap).collect();
        let csm_cell = ssm_cell.par_iter().map(|t| t.mul(&tangent)).collect();
        let ssm_opp = csm_opp
            .par_iter()
            .map(|t| t.try_zip(&tangent, |a, b| a.div(b)))
            .collect::<Result<_>>()?;
        Ok(SchubertTables {
            points,
            perms,
            index,
            ssm_cell,
            csm_cell,
            csm_opp,
            ssm_opp,
            point_class,
            tangent,
        })
    }

    pub fn n(&self) -> usize {
        self.points.n()
    }

    pub fn points(&self) -> &Arc<FixedPoints> {
        &self.points
    }

    /// `S_n` in the order used for table indices (lexicographic).
    pub fn perms(&self) -> &[FinitePerm] {
        &self.perms
    }

    pub fn index(&self, v: &FinitePerm) -> usize {
        self.index[v]
    }

    /// `c_SM(Σ̊_w)`.
    pub fn csm_cell(&self, w: &FinitePerm) -> &LocTable {
        &self.csm_cell[self.index(w)]
    }

    /// `s_SM(Σ̊_w)`.
    pub fn ssm_cell(&self, w: &FinitePerm) -> &LocTable {
        &self.ssm_cell[self.index(w)]
    }

    /// `c_SM(Σ̊^u)`.
    pub fn csm_opp(&self, u: &FinitePerm) -> &LocTable {
        &self.csm_opp[self.index(u)]
    }

    /// `s_SM(Σ̊^u)`.
    pub fn ssm_opp(&self, u: &FinitePerm) -> &LocTable {
        &self.ssm_opp[self.index(u)]
    }

    pub fn point_class(&self, v: &FinitePerm) -> &LocTable {
        &self.point_class[self.index(v)]
    }

    /// `c^T(T(G/B))`.
    pub fn tangent_chern(&self) -> &LocTable {
        &self.tangent
    }
}

/// `c_SM(R̊_{u,w}) = c_SM(Σ̊_w) · s_SM(Σ̊^u)`.
pub fn richardson_csm(tables: &SchubertTables, u: &FinitePerm, w: &FinitePerm) -> LocTable {
    tables.csm_cell(w).mul(tables.ssm_opp(u))
}

/// Equivariant pushforward along `G/B → G/P`.
pub fn pushforward_gp(t: &LocTable, p: &ParabolicData) -> Result<LocTable> {
    let n = p.n();
    if t.points().space() != &Space::Flag(n) {
        return Err(CsmError::AmbientMismatch(t.points().n(), n));
    }
    let target = FixedPoints::partial(p);
    let pairs = p.parabolic_pairs();
    let mut values = vec![RatFunc::zero(); target.len()];
    for (fp, val) in t.iter() {
        let FixedPoint::Perm(v) = fp else { unreachable!() };
        if val.is_zero() {
            continue;
        }
        let mut term = val.clone();
        for &(a, b) in &pairs {
            term = term.div_linear(&LinearForm::diff(0, y(v.apply(a)), y(v.apply(b))))?;
        }
        let mu = FixedPoint::Weight(v.act_on_vector(p.lambda()));
        let k = target.index_of(&mu).unwrap();
        values[k] = values[k].add(&term);
    }
    Ok(LocTable::from_values(&target, values))
}

/// `c^T(T_μ(G/P)) = ∏_{μ_a > μ_b} (1 + y_a - y_b)`.
pub fn tangent_chern_gp(mu: &[i64], p: &ParabolicData) -> Result<RatFunc> {
    let mut sorted = mu.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != p.lambda() {
        return Err(CsmError::InvalidCocharacter(format!(
            "{mu:?} is not a rearrangement of {:?}",
            p.lambda()
        )));
    }
    let mut acc = RatFunc::one();
    for a in 0..mu.len() {
        for b in 0..mu.len() {
            if mu[a] > mu[b] {
                acc = acc.mul_linear(&LinearForm::diff(1, y(a + 1), y(b + 1)));
            }
        }
    }
    Ok(acc)
}

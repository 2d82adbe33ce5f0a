use crate::symra::RatFunc;
use crate::Result;

use super::LocTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DlOperator {
    /// `(s_i^L t)|_p = s_i(t|_{s_i p})`.
    SL,
    /// `T_i^L = -1/α_i + (α_i + 1)/α_i s_i^L`.
    TL,
    /// `T_i^{L,∨} = 1/α_i + (α_i - 1)/α_i s_i^L`.
    TLVee,
    /// `δ_i = (id - s_i^L)/α_i`.
    DeltaL,
}

/// Left Demazure-Lusztig type operators on localization tables, `1 <= i < n`.
pub fn dl_operator(t: &LocTable, i: usize, which: DlOperator) -> Result<LocTable> {
    let pts = t.points();
    let amb = pts.ambient();
    if i == 0 || i >= pts.n() {
        return Err(crate::CsmError::IndexOutOfRange {
            index: i as i64,
            lo: 1,
            hi: pts.n() as i64 - 1,
        });
    }
    let values = (0..pts.len())
        .map(|p| amb.act_y(t.at(pts.simple(i, p)), i))
        .collect::<Result<Vec<_>>>()?;
    let s = LocTable::from_values(pts, values);
    if which == DlOperator::SL {
        return Ok(s);
    }
    let alpha = amb.simple_root(i)?;
    let a = RatFunc::from_linear(&alpha);
    let inv = RatFunc::inv_linear(&alpha)?;
    let one = RatFunc::one();
    let (c_id, c_s) = match which {
        DlOperator::TL => (inv.neg(), a.add(&one).mul(&inv)),
        DlOperator::TLVee => (inv.clone(), a.sub(&one).mul(&inv)),
        DlOperator::DeltaL => (inv.clone(), inv.neg()),
        DlOperator::SL => unreachable!(),
    };
    Ok(t.scale(&c_id).add(&s.scale(&c_s)))
}

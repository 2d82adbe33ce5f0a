use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::symra::{Ambient, RatFunc};
use crate::weylperm::{FinitePerm, ParabolicData};
use crate::{CsmError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Flag(usize),
    Partial(ParabolicData),
}

impl Space {
    pub fn n(&self) -> usize {
        match self {
            Space::Flag(n) => *n,
            Space::Partial(p) => p.n(),
        }
    }
}

/// A torus fixed point: a permutation `v` of `G/B`, or `μ ∈ Wλ` of `G/P`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixedPoint {
    Perm(FinitePerm),
    Weight(Vec<i64>),
}

impl FixedPoint {
    /// One-line permutation, or the comma-joined weight.
    pub fn key(&self) -> String {
        match self {
            FixedPoint::Perm(v) => v.to_string(),
            FixedPoint::Weight(mu) => mu.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","),
        }
    }

    /// `s_i p`: left multiplication, resp. swapping entries `i` and `i+1`.
    pub fn simple(&self, i: usize) -> FixedPoint {
        match self {
            FixedPoint::Perm(v) => FixedPoint::Perm(v.left_mul_simple(i)),
            FixedPoint::Weight(mu) => {
                let mut m = mu.clone();
                m.swap(i - 1, i);
                FixedPoint::Weight(m)
            }
        }
    }
}

/// The fixed point set of a space, with `s_i` precomputed on indices.
#[derive(Debug)]
pub struct FixedPoints {
    space: Space,
    points: Vec<FixedPoint>,
    index: HashMap<FixedPoint, usize>,
    simple: Vec<Vec<usize>>,
}

impl FixedPoints {
    pub fn flag(n: usize) -> Arc<FixedPoints> {
        let points = FinitePerm::all(n).into_iter().map(FixedPoint::Perm).collect();
        FixedPoints::build(Space::Flag(n), points)
    }

    pub fn partial(p: &ParabolicData) -> Arc<FixedPoints> {
        let points = p.orbit().into_iter().map(FixedPoint::Weight).collect();
        FixedPoints::build(Space::Partial(p.clone()), points)
    }

    fn build(space: Space, points: Vec<FixedPoint>) -> Arc<FixedPoints> {
        let index: HashMap<FixedPoint, usize> =
            points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = space.n();
        let simple = (1..n)
            .map(|i| points.iter().map(|p| index[&p.simple(i)]).collect())
            .collect();
        Arc::new(FixedPoints {
            space,
            points,
            index,
            simple,
        })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::new(0, self.n())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn index_of(&self, p: &FixedPoint) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `s_i p`.
    pub fn simple(&self, i: usize, idx: usize) -> usize {
        self.simple[i - 1][idx]
    }
}

/// Values of a class at every fixed point of a space.
#[derive(Clone, Debug)]
pub struct LocTable {
    points: Arc<FixedPoints>,
    values: Vec<RatFunc>,
}

impl LocTable {
    pub fn zero(points: &Arc<FixedPoints>) -> LocTable {
        LocTable {
            points: points.clone(),
            values: vec![RatFunc::zero(); points.len()],
        }
    }

    pub fn from_fn(points: &Arc<FixedPoints>, f: impl Fn(&FixedPoint) -> RatFunc) -> LocTable {
        LocTable {
            points: points.clone(),
            values: points.points.iter().map(f).collect(),
        }
    }

    pub fn from_values(points: &Arc<FixedPoints>, values: Vec<RatFunc>) -> LocTable {
        assert_eq!(values.len(), points.len());
        LocTable {
            points: points.clone(),
            values,
        }
    }

    pub fn points(&self) -> &Arc<FixedPoints> {
        &self.points
    }

    pub fn values(&self) -> &[RatFunc] {
        &self.values
    }

    pub fn at(&self, idx: usize) -> &RatFunc {
        &self.values[idx]
    }

    pub fn get(&self, p: &FixedPoint) -> Option<&RatFunc> {
        self.points.index_of(p).map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FixedPoint, &RatFunc)> {
        self.points.points.iter().zip(self.values.iter())
    }

    fn zip(&self, other: &LocTable, f: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> LocTable {
        assert!(Arc::ptr_eq(&self.points, &other.points) || self.points.space == other.points.space);
        LocTable {
            points: self.points.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &LocTable) -> LocTable {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &LocTable) -> LocTable {
        self.zip(other, |a, b| a.sub(b))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &LocTable) -> LocTable {
        self.zip(other, |a, b| a.mul(b))
    }

    pub fn try_zip(
        &self,
        other: &LocTable,
        f: impl Fn(&RatFunc, &RatFunc) -> Result<RatFunc>,
    ) -> Result<LocTable> {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(LocTable {
            points: self.points.clone(),
            values,
        })
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> LocTable {
        LocTable {
            points: self.points.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, r: &RatFunc) -> LocTable {
        self.map(|v| v.mul(r))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn is_equal(&self, other: &LocTable) -> bool {
        self.points.space == other.points.space
            && self.values.iter().zip(&other.values).all(|(a, b)| a.is_equal(b))
    }

    /// Fails if an entry still has a denominator factor vanishing at the origin.
    pub fn check_regular(&self) -> Result<()> {
        for (p, v) in self.iter() {
            if let Some((l, _)) = v.denominator().find(|(l, _)| l.constant() == 0) {
                return Err(CsmError::ResidualPole(format!("factor ({l}) at {}", p.key())));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut entries = Map::new();
        for (p, v) in self.iter() {
            entries.insert(p.key(), v.to_json());
        }
        match &self.points.space {
            Space::Flag(n) => json!({
                "space": "G/B",
                "lambda": (0..*n as i64).rev().collect::<Vec<_>>(),
                "entries": entries,
            }),
            Space::Partial(p) => json!({
                "space": "G/P",
                "lambda": p.lambda(),
                "entries": entries,
            }),
        }
    }
}

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{LinearForm, Polynomial, Rational, Variable};
use crate::{CsmError, Result};

/// `pref * num / ∏ den_i^{m_i}`.
///
/// Canonical form: `num` is integral, primitive, with positive leading
/// coefficient; each denominator form is canonical (see
/// [`LinearForm::canonical`]) and does not divide `num`. Zero is
/// `pref = 0`, `num = 0`, no denominator. Canonical forms of equal functions
/// coincide, but [`RatFunc::is_equal`] never relies on that.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    pref: Rational,
    num: Polynomial,
    den: BTreeMap<LinearForm, u32>,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            pref: Rational::zero(),
            num: Polynomial::zero(),
            den: BTreeMap::new(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            pref: c,
            num: Polynomial::one(),
            den: BTreeMap::new(),
        }
    }

    pub fn from_int(c: i64) -> RatFunc {
        RatFunc::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Variable) -> RatFunc {
        RatFunc::from_polynomial(Polynomial::var(v))
    }

    pub fn from_polynomial(p: Polynomial) -> RatFunc {
        let (s, prim) = p.primitive_part();
        if s.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            pref: s,
            num: prim,
            den: BTreeMap::new(),
        }
    }

    pub fn from_linear(l: &LinearForm) -> RatFunc {
        RatFunc::from_polynomial(l.to_polynomial())
    }

    /// `1 / l`.
    pub fn inv_linear(l: &LinearForm) -> Result<RatFunc> {
        RatFunc::one().div_linear(l)
    }

    /// Builds and fully canonicalizes `pref * num / ∏ den`.
    pub fn from_parts(
        pref: Rational,
        num: Polynomial,
        den: impl IntoIterator<Item = (LinearForm, u32)>,
    ) -> Result<RatFunc> {
        RatFunc::normalize(pref, num, den, true)
    }

    /// Like [`RatFunc::from_parts`] but keeps every denominator factor, even
    /// those dividing the numerator.
    pub fn with_denominator(
        num: Polynomial,
        den: impl IntoIterator<Item = (LinearForm, u32)>,
    ) -> Result<RatFunc> {
        RatFunc::normalize(Rational::one(), num, den, false)
    }

    /// Like [`RatFunc::with_denominator`] with an explicit prefactor.
    pub(crate) fn from_parts_keep(
        pref: Rational,
        num: Polynomial,
        den: impl IntoIterator<Item = (LinearForm, u32)>,
    ) -> Result<RatFunc> {
        RatFunc::normalize(pref, num, den, false)
    }

    fn normalize(
        mut pref: Rational,
        num: Polynomial,
        den_in: impl IntoIterator<Item = (LinearForm, u32)>,
        cancel: bool,
    ) -> Result<RatFunc> {
        let mut den: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for (l, m) in den_in {
            if m == 0 {
                continue;
            }
            let (s, c) = l.canonical();
            if s == 0 {
                return Err(CsmError::DivisionByZero);
            }
            pref /= num_traits::pow(Rational::from_integer(s.into()), m as usize);
            if !c.is_constant() {
                *den.entry(c).or_insert(0) += m;
            }
        }
        if pref.is_zero() || num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let mut num = num;
        if cancel {
            for (l, m) in den.iter_mut() {
                while *m > 0 {
                    match num.div_exact_linear(l) {
                        Some(q) => {
                            num = q;
                            *m -= 1;
                        }
                        None => break,
                    }
                }
            }
            den.retain(|_, m| *m > 0);
        }
        let (s, prim) = num.primitive_part();
        Ok(RatFunc {
            pref: pref * s,
            num: prim,
            den,
        })
    }

    /// Re-runs cancellation; the identity on values.
    pub fn canonicalize(&self) -> RatFunc {
        RatFunc::normalize(
            self.pref.clone(),
            self.num.clone(),
            self.den.iter().map(|(l, m)| (l.clone(), *m)),
            true,
        )
        .expect("stored denominator factors are nonzero")
    }

    pub fn prefactor(&self) -> &Rational {
        &self.pref
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.den.iter().map(|(l, m)| (l, *m))
    }

    /// `pref * num` as one polynomial.
    pub fn expanded_numerator(&self) -> Polynomial {
        self.num.scale(&self.pref)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if !self.den.is_empty() {
            return None;
        }
        self.num.as_constant().map(|c| c * &self.pref)
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vs = self.num.variables();
        for l in self.den.keys() {
            vs.extend(l.variables());
        }
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn neg(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            pref: -&self.pref,
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() || self.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            pref: &self.pref * c,
            ..self.clone()
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (l, m) in &other.den {
            let e = den.entry(l.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let lift = |r: &RatFunc| {
            let mut p = r.num.scale(&r.pref);
            for (l, m) in &den {
                for _ in r.den.get(l).copied().unwrap_or(0)..*m {
                    p = p.mul_linear(l);
                }
            }
            p
        };
        let num = &lift(self) + &lift(other);
        RatFunc::normalize(Rational::one(), num, den, true).expect("canonical factors are nonzero")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let mut den = self.den.clone();
        let mut na = self.num.clone();
        let mut nb = other.num.clone();
        // Canonical inputs can only cancel across.
        for (l, m) in &other.den {
            let mut left = *m;
            while left > 0 {
                match na.div_exact_linear(l) {
                    Some(q) => {
                        na = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                *den.entry(l.clone()).or_insert(0) += left;
            }
        }
        for (l, m) in &self.den {
            let mut taken = 0;
            while taken < *m {
                match nb.div_exact_linear(l) {
                    Some(q) => {
                        nb = q;
                        taken += 1;
                    }
                    None => break,
                }
            }
            if taken > 0 {
                let e = den.get_mut(l).unwrap();
                *e -= taken;
            }
        }
        den.retain(|_, m| *m > 0);
        let num = &na * &nb;
        let (s, prim) = num.primitive_part();
        RatFunc {
            pref: &self.pref * &other.pref * s,
            num: prim,
            den,
        }
    }

    pub fn mul_linear(&self, l: &LinearForm) -> RatFunc {
        let (s, c) = l.canonical();
        if s == 0 || self.is_zero() {
            return RatFunc::zero();
        }
        let mut out = self.scale(&Rational::from_integer(s.into()));
        if c.is_constant() {
            return out;
        }
        if let Some(m) = out.den.get_mut(&c) {
            *m -= 1;
            if *m == 0 {
                out.den.remove(&c);
            }
            return out;
        }
        let (t, prim) = out.num.mul_linear(&c).primitive_part();
        out.num = prim;
        out.pref *= t;
        out
    }

    pub fn div_linear(&self, l: &LinearForm) -> Result<RatFunc> {
        let (s, c) = l.canonical();
        if s == 0 {
            return Err(CsmError::DivisionByZero);
        }
        let mut out = self.scale(&(Rational::one() / Rational::from_integer(s.into())));
        if c.is_constant() || out.is_zero() {
            return Ok(out);
        }
        match out.num.div_exact_linear(&c) {
            Some(q) => {
                let (t, prim) = q.primitive_part();
                out.num = prim;
                out.pref *= t;
            }
            None => *out.den.entry(c).or_insert(0) += 1,
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut acc = RatFunc::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Division; the divisor's numerator must split into linear factors.
    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(CsmError::DivisionByZero);
        }
        let (c, factors) = linear_factors(&other.num)?;
        let mut out = self.clone();
        for (l, m) in &other.den {
            for _ in 0..*m {
                out = out.mul_linear(l);
            }
        }
        for l in &factors {
            out = out.div_linear(l)?;
        }
        Ok(out.scale(&(Rational::one() / (c * &other.pref))))
    }

    /// Exact equality as rational functions: the difference has zero numerator.
    pub fn is_equal(&self, other: &RatFunc) -> bool {
        if self == other {
            return true;
        }
        self.sub(other).is_zero()
    }

    /// Renames variables bijectively (e.g. a Weyl group action).
    pub fn map_vars(&self, f: impl Fn(Variable) -> Variable) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalize(
            self.pref.clone(),
            self.num.map_vars(&f),
            self.den.iter().map(|(l, m)| (l.map_vars(&f), *m)),
            false,
        )
        .expect("a bijective renaming keeps factors nonzero")
    }

    /// Renames variables, possibly identifying some; a factor that becomes zero is an error.
    pub fn substitute(&self, f: impl Fn(Variable) -> Variable) -> Result<RatFunc> {
        let mut den = Vec::with_capacity(self.den.len());
        for (l, m) in &self.den {
            let image = l.map_vars(&f);
            if image.is_zero() {
                return Err(CsmError::Pole(l.to_string()));
            }
            den.push((image, *m));
        }
        RatFunc::normalize(self.pref.clone(), self.num.map_vars(&f), den, true)
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, point: &dyn Fn(Variable) -> Rational) -> Option<Rational> {
        let mut d = Rational::one();
        for (l, m) in &self.den {
            let v = l.eval(point);
            if v.is_zero() {
                return None;
            }
            d *= num_traits::pow(v, *m as usize);
        }
        Some(self.num.eval(point) * &self.pref / d)
    }

    /// Lowest-degree homogeneous part of the expansion around the origin.
    pub fn lowest_degree_part(&self) -> RatFunc {
        let Some(low) = self.num.min_degree() else {
            return RatFunc::zero();
        };
        let mut pref = self.pref.clone();
        let mut den = Vec::new();
        for (l, m) in &self.den {
            if l.constant() != 0 {
                pref /= num_traits::pow(Rational::from_integer(l.constant().into()), *m as usize);
            } else {
                den.push((l.clone(), *m));
            }
        }
        RatFunc::from_parts(pref, self.num.homogeneous_part(low), den)
            .expect("homogeneous factors are nonzero")
    }
}

/// Splits a polynomial into a constant times linear factors, trying forms
/// `c + v`, `c + v - w`, `c + v + w` with `c ∈ {-1, 0, 1}`.
fn linear_factors(p: &Polynomial) -> Result<(Rational, Vec<LinearForm>)> {
    let (mut c, mut rest) = p.primitive_part();
    let mut out = Vec::new();
    loop {
        match rest.total_degree() {
            Some(0) | None => {
                c *= rest.as_constant().unwrap_or_else(Rational::one);
                return Ok((c, out));
            }
            Some(1) => {
                let l = to_linear(&rest)?;
                out.push(l);
                return Ok((c, out));
            }
            Some(_) => {}
        }
        let vars = rest.variables();
        let mut found = None;
        'search: for k in [0i64, 1, -1] {
            for (i, &a) in vars.iter().enumerate() {
                let cands = std::iter::once(LinearForm::new(k, [(a, 1)])).chain(
                    vars[i + 1..].iter().flat_map(|&b| {
                        [LinearForm::new(k, [(a, 1), (b, -1)]), LinearForm::new(k, [(a, 1), (b, 1)])]
                    }),
                );
                for l in cands {
                    if let Some(q) = rest.div_exact_linear(&l) {
                        found = Some((l, q));
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some((l, q)) => {
                out.push(l);
                rest = q;
            }
            None => return Err(CsmError::UnsupportedDivisor(rest.to_string())),
        }
    }
}

fn to_linear(p: &Polynomial) -> Result<LinearForm> {
    let mut constant = 0i64;
    let mut coef = Vec::new();
    for (m, c) in p.terms() {
        if !c.is_integer() {
            return Err(CsmError::UnsupportedDivisor(p.to_string()));
        }
        let c: i64 = c
            .to_integer()
            .try_into()
            .map_err(|_| CsmError::UnsupportedDivisor(p.to_string()))?;
        match m.pairs() {
            [] => constant = c,
            [(v, 1)] => coef.push((*v, c)),
            _ => return Err(CsmError::UnsupportedDivisor(p.to_string())),
        }
    }
    Ok(LinearForm::new(constant, coef))
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |a, b| a.add(&b))
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> RatFunc {
        RatFunc::from_int(c)
    }
}

impl From<&LinearForm> for RatFunc {
    fn from(l: &LinearForm) -> RatFunc {
        RatFunc::from_linear(l)
    }
}

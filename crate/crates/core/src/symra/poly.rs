use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LinearForm, Rational, Variable};

/// Sparse exponent vector, sorted by variable, no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Monomial {
        let mut acc: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes `v` entirely, returning its exponent.
    fn split_off(&self, v: Variable) -> (u32, Monomial) {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(i);
                (e, Monomial(rest))
            }
            Err(_) => (0, self.clone()),
        }
    }

    fn with_power(&self, v: Variable, e: u32) -> Monomial {
        if e == 0 {
            self.clone()
        } else {
            self.mul(&Monomial(vec![(v, e)]))
        }
    }

    pub fn map_vars(&self, f: &impl Fn(Variable) -> Variable) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|(v, e)| (f(*v), *e)))
    }

    pub fn eval(&self, point: &dyn Fn(Variable) -> Rational) -> Rational {
        let mut acc = Rational::one();
        for (v, e) in &self.0 {
            acc *= num_traits::pow(point(*v), *e as usize);
        }
        acc
    }
}

impl Ord for Monomial {
    /// Graded, then lexicographic with earlier variables heavier.
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a.0 != b.0 {
                return if a.0 < b.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial::from_terms([(Monomial::one(), c)])
    }

    pub fn var(v: Variable) -> Polynomial {
        Polynomial::from_terms([(Monomial::var(v), Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|(v, _)| *v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_linear(&self, l: &LinearForm) -> Polynomial {
        let mut out = self.scale(&Rational::from_integer(l.constant().into()));
        for (v, c) in l.coefficients() {
            let c = Rational::from_integer((*c).into());
            let vm = Monomial::var(*v);
            for (m, a) in &self.terms {
                out.add_term(m.mul(&vm), a * &c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient by a non-constant linear form, or `None` if it does not divide.
    pub fn div_exact_linear(&self, l: &LinearForm) -> Option<Polynomial> {
        let &(z, cz) = l.coefficients().first()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let rest = LinearForm::new(l.constant(), l.coefficients()[1..].iter().copied());
        let cz = Rational::from_integer(cz.into());
        // Coefficients of z^d.
        let mut parts: Vec<Polynomial> = Vec::new();
        for (m, c) in &self.terms {
            let (d, m0) = m.split_off(z);
            let d = d as usize;
            if parts.len() <= d {
                parts.resize_with(d + 1, Polynomial::zero);
            }
            parts[d].add_term(m0, c.clone());
        }
        let top = parts.len() - 1;
        if top == 0 {
            return None;
        }
        let mut quot: Vec<Polynomial> = vec![Polynomial::zero(); top];
        let mut carry = Polynomial::zero();
        for d in (1..=top).rev() {
            // quot[d-1] = (P_d - R * Q_d) / cz
            let mut num = parts[d].clone();
            if !carry.is_zero() {
                num = &num - &carry.mul_linear(&rest);
            }
            let q = num.scale(&(Rational::one() / &cz));
            quot[d - 1] = q.clone();
            carry = q;
        }
        if parts[0] != carry.mul_linear(&rest) {
            return None;
        }
        let mut out = Polynomial::zero();
        for (d, q) in quot.into_iter().enumerate() {
            for (m, c) in q.terms {
                out.add_term(m.with_power(z, d as u32), c);
            }
        }
        Some(out)
    }

    pub fn map_vars(&self, f: &impl Fn(Variable) -> Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(f), c.clone());
        }
        out
    }

    /// `self = scale * prim` with `prim` integral, primitive, positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), Polynomial::zero());
        }
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        let mut scale = Rational::new(g, l);
        if self.leading().unwrap().1.is_negative() {
            scale = -scale;
        }
        if scale.is_one() {
            return (scale, self.clone());
        }
        let inv = Rational::one() / &scale;
        (scale, self.scale(&inv))
    }

    pub fn eval(&self, point: &dyn Fn(Variable) -> Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += m.eval(point) * c;
        }
        acc
    }

    /// Sum of the terms of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.mul(mb), a * b);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Descending term order, e.g. `y1^2 - 2*y1*y2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

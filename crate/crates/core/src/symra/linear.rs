use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::{Polynomial, Rational, Variable};

/// `c + Σ a_v v` with integer coefficients. Coefficients are kept sorted by
/// variable with zeros dropped, so structural equality is equality of forms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coef: Vec<(Variable, i64)>,
    constant: i64,
}

impl LinearForm {
    pub fn new(constant: i64, coef: impl IntoIterator<Item = (Variable, i64)>) -> LinearForm {
        let mut acc: BTreeMap<Variable, i64> = BTreeMap::new();
        for (v, c) in coef {
            *acc.entry(v).or_insert(0) += c;
        }
        LinearForm {
            coef: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
            constant,
        }
    }

    /// `c + a - b`.
    pub fn diff(constant: i64, a: Variable, b: Variable) -> LinearForm {
        LinearForm::new(constant, [(a, 1), (b, -1)])
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    pub fn coefficients(&self) -> &[(Variable, i64)] {
        &self.coef
    }

    pub fn coefficient(&self, v: Variable) -> i64 {
        self.coef
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.coef[i].1)
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_empty() && self.constant == 0
    }

    pub fn is_constant(&self) -> bool {
        self.coef.is_empty()
    }

    /// Splits `self = scale * canonical` where the canonical form has content 1
    /// and a positive leading coefficient (or a positive constant if no variables).
    pub fn canonical(&self) -> (i64, LinearForm) {
        let mut g = self.constant.abs();
        for (_, c) in &self.coef {
            g = g.gcd(c);
        }
        if g == 0 {
            return (0, self.clone());
        }
        let lead = self.coef.first().map(|(_, c)| *c).unwrap_or(self.constant);
        let scale = if lead < 0 { -g } else { g };
        let canon = LinearForm {
            coef: self.coef.iter().map(|(v, c)| (*v, c / scale)).collect(),
            constant: self.constant / scale,
        };
        (scale, canon)
    }

    pub fn is_canonical(&self) -> bool {
        !self.is_zero() && self.canonical().0 == 1
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm {
            coef: self.coef.iter().map(|(v, c)| (*v, -c)).collect(),
            constant: -self.constant,
        }
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm::new(
            self.constant + other.constant,
            self.coef.iter().chain(other.coef.iter()).copied(),
        )
    }

    pub fn map_vars(&self, f: impl Fn(Variable) -> Variable) -> LinearForm {
        LinearForm::new(self.constant, self.coef.iter().map(|(v, c)| (f(*v), *c)))
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.coef.iter().map(|(v, _)| *v)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::constant(Rational::from_integer(self.constant.into()));
        for (v, c) in &self.coef {
            p = &p + &Polynomial::var(*v).scale(&Rational::from_integer((*c).into()));
        }
        p
    }

    pub fn eval(&self, point: &dyn Fn(Variable) -> Rational) -> Rational {
        let mut acc = Rational::from_integer(self.constant.into());
        for (v, c) in &self.coef {
            acc += point(*v) * Rational::from_integer((*c).into());
        }
        acc
    }
}

impl fmt::Display for LinearForm {
    /// Constant first, e.g. `1 + x1 - y2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.constant != 0 || self.coef.is_empty() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for (v, c) in &self.coef {
            let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

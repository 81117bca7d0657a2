use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AffineSemigroup;
use crate::lattice::IntVector;

/// A finite sum `Σ c_m χ^m` with exact rational coefficients.
///
/// Exponents are arbitrary vectors of `M`; whether the element lies in a
/// given semigroup algebra is checked with [`AlgebraElement::is_regular_in`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<IntVector, BigRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `χ^m`.
    pub fn monomial(m: IntVector) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: IntVector, c: BigRational) -> Self {
        let mut a = Self::zero();
        a.add_term(m, c);
        a
    }

    pub fn from_terms<I: IntoIterator<Item = (IntVector, BigRational)>>(terms: I) -> Self {
        let mut a = Self::zero();
        for (m, c) in terms {
            a.add_term(m, c);
        }
        a
    }

    pub(crate) fn add_term(&mut self, m: IntVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &IntVector> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &IntVector) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Convolution product, `χ^a χ^b = χ^(a+b)`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Every exponent lies in the semigroup.
    pub fn is_regular_in(&self, s: &AffineSemigroup) -> bool {
        self.terms.keys().all(|m| s.contains(m))
    }

    /// The torus element `t` acting by `χ^m ↦ t^m χ^m`, where
    /// `t^m = Π t_i^{m_i}`. Every `t_i` must be nonzero.
    pub fn torus_action(&self, t: &[BigRational]) -> Self {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * character_value(t, m)))
                .collect(),
        }
    }
}

/// `t^m = Π t_i^{m_i}` for a torus point `t` with nonzero rational entries.
pub fn character_value(t: &[BigRational], m: &IntVector) -> BigRational {
    t.iter()
        .zip(m.entries())
        .fold(BigRational::one(), |acc, (ti, mi)| {
            let e: i32 = i32::try_from(mi.abs()).expect("exponent fits in i32");
            let p = num_traits::pow(ti.clone(), e as usize);
            if mi.is_negative() {
                acc / p
            } else {
                acc * p
            }
        })
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "χ^{m}")?;
            } else {
                write!(f, "{c}·χ^{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn rational(x: i64) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(x: &[i64]) -> AlgebraElement {
        AlgebraElement::monomial(IntVector::from_i64s(x))
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(chi(&[1, 0]).multiply(&chi(&[0, 1])), chi(&[1, 1]));
        let s = &chi(&[2, 0]) + &chi(&[0, 3]);
        assert!(s.multiply(&AlgebraElement::zero()).is_zero());
        let b = &chi(&[1, 0]) + &chi(&[0, 1]);
        let sq = b.multiply(&b);
        let expected = AlgebraElement::from_terms([
            (IntVector::from_i64s(&[2, 0]), rational(1)),
            (IntVector::from_i64s(&[1, 1]), rational(2)),
            (IntVector::from_i64s(&[0, 2]), rational(1)),
        ]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = &chi(&[1]) - &chi(&[1]);
        assert!(a.is_zero());
        let b = &(&chi(&[1]) + &chi(&[2])) - &chi(&[1]);
        assert_eq!(b, chi(&[2]));
    }

    #[test]
    fn torus_weights() {
        let t = [rational(2), BigRational::new(1.into(), 3.into())];
        let a = chi(&[2, -1]).torus_action(&t);
        assert_eq!(a.coefficient(&IntVector::from_i64s(&[2, -1])), rational(12));
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::VarId;
use super::polynomial::Polynomial;
use crate::{Error, Result};

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalValue(BigRational);

impl RationalValue {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> RationalValue {
        RationalValue(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn integer(v: impl Into<BigInt>) -> RationalValue {
        RationalValue(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> RationalValue {
        RationalValue(BigRational::zero())
    }

    pub fn one() -> RationalValue {
        RationalValue(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn recip(&self) -> RationalValue {
        RationalValue(self.0.recip())
    }

    pub fn pow(&self, e: i32) -> RationalValue {
        RationalValue(num_traits::Pow::pow(&self.0, e))
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&RationalValue> for &RationalValue {
            type Output = RationalValue;
            fn $method(self, rhs: &RationalValue) -> RationalValue {
                RationalValue((&self.0).$method(&rhs.0))
            }
        }
        impl $tr for RationalValue {
            type Output = RationalValue;
            fn $method(self, rhs: RationalValue) -> RationalValue {
                RationalValue(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for RationalValue {
    type Output = RationalValue;
    fn neg(self) -> RationalValue {
        RationalValue(-self.0)
    }
}

impl Neg for &RationalValue {
    type Output = RationalValue;
    fn neg(self) -> RationalValue {
        RationalValue(-self.0.clone())
    }
}

impl From<i64> for RationalValue {
    fn from(v: i64) -> Self {
        RationalValue::integer(v)
    }
}

/// A point: values for (at least) every variable of the polynomial.
pub type Assignment = BTreeMap<VarId, RationalValue>;

impl Polynomial {
    /// Exact value at `point`.
    pub fn evaluate(&self, point: &Assignment) -> Result<RationalValue> {
        let mut powers: BTreeMap<(VarId, i32), RationalValue> = BTreeMap::new();
        let mut total = BigRational::zero();
        for (m, c) in self.terms() {
            let mut value = BigRational::from_integer(c.to_bigint());
            for &(v, e) in m.exponents() {
                let base = point.get(&v).ok_or(Error::MissingAssignment { var: v })?;
                if e < 0 && base.is_zero() {
                    return Err(Error::ZeroAtLaurentPole { var: v });
                }
                let p = powers.entry((v, e)).or_insert_with(|| base.pow(e));
                value *= &p.0;
            }
            total += value;
        }
        Ok(RationalValue(total))
    }
}

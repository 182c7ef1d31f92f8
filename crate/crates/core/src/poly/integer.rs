//! Arbitrary-precision integers with an inline machine-word fast path.
//!
//! Almost every coefficient met in practice fits in an `i64`; those never
//! touch the heap. Overflow promotes to `BigInt`, and results that fit again
//! are demoted, so every value has exactly one representation and derived
//! `Eq`/`Hash` are sound.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Large(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Large(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Large(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Large(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Integer {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, mut e: u32) -> Integer {
        let mut base = self.clone();
        let mut acc = Integer::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

impl Add<&Integer> for &Integer {
    type Output = Integer;
    fn add(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_bigint() + rhs.to_bigint())
    }
}

impl Add for Integer {
    type Output = Integer;
    fn add(self, rhs: Integer) -> Integer {
        &self + &rhs
    }
}

impl AddAssign<&Integer> for Integer {
    fn add_assign(&mut self, rhs: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Integer::Small(s);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl Sub<&Integer> for &Integer {
    type Output = Integer;
    fn sub(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_bigint() - rhs.to_bigint())
    }
}

impl Sub for Integer {
    type Output = Integer;
    fn sub(self, rhs: Integer) -> Integer {
        &self - &rhs
    }
}

impl Mul<&Integer> for &Integer {
    type Output = Integer;
    fn mul(self, rhs: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(p) = a.checked_mul(*b) {
                return Integer::Small(p);
            }
        }
        Integer::from_big(self.to_bigint() * rhs.to_bigint())
    }
}

impl Mul for Integer {
    type Output = Integer;
    fn mul(self, rhs: Integer) -> Integer {
        &self * &rhs
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Large(-BigInt::from(*v)),
            },
            Integer::Large(b) => Integer::from_big(-b.clone()),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Large(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer::Small(v));
        }
        BigInt::from_str(s).map(Integer::from_big)
    }
}

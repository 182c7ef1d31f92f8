use std::fmt;

use rustc_hash::FxHashMap;

use super::integer::Integer;
use super::monomial::{Family, Monomial, VarId};
use crate::combinat::Permutation;
use crate::{Error, Result};

/// Sparse polynomial with integer coefficients.
///
/// Terms are kept sorted in the canonical monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Integer)>,
}

// Above this many term products, multiplication is split across workers.
#[cfg(feature = "parallel")]
const PAR_MUL_THRESHOLD: usize = 1 << 14;

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<Integer>) -> Polynomial {
        Polynomial::term(Monomial::one(), c.into())
    }

    pub fn term(m: Monomial, c: Integer) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: VarId) -> Polynomial {
        Polynomial::term(Monomial::var(v, 1), Integer::ONE)
    }

    pub fn var_pow(v: VarId, exp: i32) -> Polynomial {
        Polynomial::term(Monomial::var(v, exp), Integer::ONE)
    }

    pub fn x(i: u32) -> Polynomial {
        Polynomial::var(VarId::x(i))
    }

    pub fn t(i: u32) -> Polynomial {
        Polynomial::var(VarId::t(i))
    }

    pub fn big_t(i: u32) -> Polynomial {
        Polynomial::var(VarId::big_t(i))
    }

    pub fn e(i: u32) -> Polynomial {
        Polynomial::var(VarId::e(i))
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Integer)>) -> Polynomial {
        let mut acc: FxHashMap<Monomial, Integer> = FxHashMap::default();
        for (m, c) in terms {
            accumulate(&mut acc, m, &c);
        }
        Polynomial::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, Integer>) -> Polynomial {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { terms }
    }

    /// Builds from terms already in strictly increasing canonical order with
    /// nonzero coefficients.
    fn from_sorted(terms: Vec<(Monomial, Integer)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &Integer)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Integer {
        self.terms
            .binary_search_by(|probe| probe.0.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or(Integer::ZERO)
    }

    /// The constant term, if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Integer> {
        match self.terms.as_slice() {
            [] => Some(Integer::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Sorted, deduplicated list of variables that occur.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vars: Vec<VarId> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.exponents().iter().map(|p| p.0))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn uses_only(&self, mut allowed: impl FnMut(VarId) -> bool) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.exponents().iter().all(|p| allowed(p.0)))
    }

    /// `Some(d)` when every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.iter().map(|(m, _)| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Integer) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        use std::cmp::Ordering::*;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let take_b = |c: &Integer| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Greater => {
                    out.push((b[j].0.clone(), take_b(&b[j].1)));
                    j += 1;
                }
                Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), take_b(c))));
        Polynomial::from_sorted(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        // Iterate the longer operand in the outer loop so it can be chunked.
        let (outer, inner) = if self.len() >= other.len() {
            (&self.terms, &other.terms)
        } else {
            (&other.terms, &self.terms)
        };
        #[cfg(feature = "parallel")]
        if outer.len() * inner.len() >= PAR_MUL_THRESHOLD && rayon::current_num_threads() > 1 {
            return mul_parallel(outer, inner);
        }
        let mut acc = FxHashMap::default();
        acc.reserve(outer.len() * inner.len() / 2);
        mul_into(&mut acc, outer, inner);
        Polynomial::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Product of the given factors; the empty product is 1.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        factors
            .into_iter()
            .fold(Polynomial::one(), |acc, f| acc.mul(f))
    }

    /// Exact inverse of a unit monomial `±m` with `m` in Laurent variables only.
    fn unit_inverse(&self) -> Option<Polynomial> {
        match self.terms.as_slice() {
            [(m, c)] if (c.is_one() || *c == Integer::from(-1))
                && m.exponents().iter().all(|p| p.0.family.is_laurent()) =>
            {
                Some(Polynomial::term(m.inverse(), c.clone()))
            }
            _ => None,
        }
    }

    /// Ring homomorphism sending `v` to `q` and fixing every other variable.
    pub fn substitute(&self, v: VarId, q: &Polynomial) -> Result<Polynomial> {
        self.substitute_many(&[(v, q.clone())])
    }

    /// Simultaneous substitution of several variables.
    ///
    /// Fails with `NegativeExponentSubstitution` when a variable occurring
    /// with a negative exponent is sent to something that is not a unit.
    pub fn substitute_many(&self, subs: &[(VarId, Polynomial)]) -> Result<Polynomial> {
        let mut powers: Vec<PowerCache> = subs.iter().map(|(v, q)| PowerCache::new(*v, q)).collect();
        for cache in &mut powers {
            if cache.inverse.is_none() && self.terms.iter().any(|(m, _)| m.exponent(cache.var) < 0) {
                return Err(Error::NegativeExponentSubstitution { var: cache.var });
            }
        }
        let mut acc: FxHashMap<Monomial, Integer> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut image = Polynomial::constant(c.clone());
            for cache in &mut powers {
                let (e, r) = rest.split_var(cache.var);
                if e != 0 {
                    rest = r;
                    image = image.mul(cache.power(e));
                }
            }
            for (im, ic) in image.terms {
                accumulate(&mut acc, im.mul(&rest), &ic);
            }
        }
        Ok(Polynomial::from_map(acc))
    }

    /// Relabels variables through an injective map.
    pub fn relabel(&self, mut f: impl FnMut(VarId) -> VarId) -> Polynomial {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.relabel(&mut f), c.clone()))
            .collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial::from_sorted(terms)
    }

    /// Renames variables through an arbitrary map, adding the exponents
    /// of variables that collide, and collecting like terms.
    pub fn rename(&self, mut f: impl FnMut(VarId) -> VarId) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            let pairs = m.exponents().iter().map(|&(v, e)| (f(v), e));
            (Monomial::from_pairs(pairs), c.clone())
        }))
    }

    /// Sends `x_i` to `x_{w(i)}` for `i <= w.len()`; every other variable is fixed.
    pub fn permute_x(&self, w: &Permutation) -> Polynomial {
        if w.is_identity() {
            return self.clone();
        }
        self.relabel(|v| {
            if v.family == Family::X && (v.index as usize) <= w.len() {
                VarId::x(w.apply(v.index as usize) as u32)
            } else {
                v
            }
        })
    }

    /// Swaps `x_i` and `x_j`.
    pub fn swap_x(&self, i: u32, j: u32) -> Polynomial {
        self.relabel(|v| match v {
            VarId { family: Family::X, index } if index == i => VarId::x(j),
            VarId { family: Family::X, index } if index == j => VarId::x(i),
            _ => v,
        })
    }

    /// Exact quotient by `x_i - x_j`.
    ///
    /// Writing `p = sum_d c_d x_i^d` with `c_d` free of `x_i`, the quotient is
    /// `sum_d c_d (x_i^d - x_j^d)/(x_i - x_j)` provided the remainder
    /// `p(x_i := x_j)` vanishes.
    pub fn exact_divide_linear(&self, i: u32, j: u32) -> Result<Polynomial> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot divide by x{i} - x{j}"
            )));
        }
        let (xi, xj) = (VarId::x(i), VarId::x(j));
        let mut remainder: FxHashMap<Monomial, Integer> = FxHashMap::default();
        let mut quotient: FxHashMap<Monomial, Integer> = FxHashMap::default();
        for (m, c) in &self.terms {
            let (d, rest) = m.split_var(xi);
            let (dj, rest) = rest.split_var(xj);
            debug_assert!(d >= 0 && dj >= 0);
            accumulate(&mut remainder, rest.mul(&Monomial::var(xj, d + dj)), c);
            for a in 0..d {
                let q = Monomial::from_pairs([(xi, a), (xj, d - 1 - a + dj)]);
                accumulate(&mut quotient, q.mul(&rest), c);
            }
        }
        if remainder.values().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible { i, j });
        }
        Ok(Polynomial::from_map(quotient))
    }

    /// Divides by the Vandermonde product `prod_{i<j<=k} (x_i - x_j)`, one
    /// linear factor at a time in row-major pair order.
    pub fn divide_vandermonde(&self, k: usize) -> Result<Polynomial> {
        let mut p = self.clone();
        for i in 1..k as u32 {
            for j in i + 1..=k as u32 {
                p = p.exact_divide_linear(i, j)?;
            }
        }
        Ok(p)
    }

    /// Whether `p` is fixed by every adjacent transposition of `x_1..x_k`.
    pub fn is_symmetric(&self, k: usize) -> bool {
        (1..k as u32).all(|i| self.swap_x(i, i + 1) == *self)
    }

    /// Whether `p` changes sign under every adjacent transposition of `x_1..x_k`.
    pub fn is_skew_symmetric(&self, k: usize) -> bool {
        (1..k as u32).all(|i| self.swap_x(i, i + 1) == self.neg())
    }
}

fn accumulate(acc: &mut FxHashMap<Monomial, Integer>, m: Monomial, c: &Integer) {
    match acc.get_mut(&m) {
        Some(slot) => *slot += c,
        None => {
            acc.insert(m, c.clone());
        }
    }
}

fn mul_into(acc: &mut FxHashMap<Monomial, Integer>, outer: &[(Monomial, Integer)], inner: &[(Monomial, Integer)]) {
    for (ma, ca) in outer {
        for (mb, cb) in inner {
            accumulate(acc, ma.mul(mb), &(ca * cb));
        }
    }
}

#[cfg(feature = "parallel")]
fn mul_parallel(outer: &[(Monomial, Integer)], inner: &[(Monomial, Integer)]) -> Polynomial {
    use rayon::prelude::*;
    let chunk = outer.len().div_ceil(rayon::current_num_threads() * 4).max(1);
    let partials: Vec<FxHashMap<Monomial, Integer>> = outer
        .par_chunks(chunk)
        .map(|part| {
            let mut acc = FxHashMap::default();
            mul_into(&mut acc, part, inner);
            acc
        })
        .collect();
    let mut iter = partials.into_iter();
    let mut acc = iter.next().unwrap_or_default();
    for part in iter {
        for (m, c) in part {
            accumulate(&mut acc, m, &c);
        }
    }
    Polynomial::from_map(acc)
}

struct PowerCache {
    var: VarId,
    base: Polynomial,
    inverse: Option<Polynomial>,
    positive: Vec<Polynomial>,
    negative: Vec<Polynomial>,
}

impl PowerCache {
    fn new(var: VarId, q: &Polynomial) -> PowerCache {
        PowerCache {
            var,
            base: q.clone(),
            inverse: q.unit_inverse(),
            positive: vec![Polynomial::one()],
            negative: vec![Polynomial::one()],
        }
    }

    fn power(&mut self, e: i32) -> &Polynomial {
        let (table, base) = if e >= 0 {
            (&mut self.positive, &self.base)
        } else {
            (
                &mut self.negative,
                self.inverse.as_ref().expect("checked before substitution"),
            )
        };
        let n = e.unsigned_abs() as usize;
        while table.len() <= n {
            let next = table.last().unwrap().mul(base);
            table.push(next);
        }
        &table[n]
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::to_text(self))
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Self {
        Polynomial::var(v)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl std::ops::Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        Polynomial::add(&self, &rhs)
    }
}

impl std::ops::Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        Polynomial::sub(&self, &rhs)
    }
}

impl std::ops::Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        Polynomial::mul(&self, &rhs)
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

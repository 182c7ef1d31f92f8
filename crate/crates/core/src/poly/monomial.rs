use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Variable families. The derive order is the canonical family order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Chern roots `x_i` (and the Bott-Samelson `z_i` after identification).
    X,
    /// Cohomological equivariant parameters `t_i`.
    Tcoh,
    /// K-theoretic parameters `T_i = 1 - [C_i^vee]`.
    Tk,
    /// Characters `E_i = e^{t_i}`; the only family allowing negative exponents.
    E,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Tcoh => "t",
            Family::Tk => "T",
            Family::E => "E",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Family> {
        match s {
            "x" => Some(Family::X),
            "t" => Some(Family::Tcoh),
            "T" => Some(Family::Tk),
            "E" => Some(Family::E),
            _ => None,
        }
    }

    pub fn is_laurent(self) -> bool {
        self == Family::E
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    pub family: Family,
    pub index: u32,
}

impl VarId {
    pub const fn new(family: Family, index: u32) -> VarId {
        VarId { family, index }
    }
    pub const fn x(index: u32) -> VarId {
        VarId::new(Family::X, index)
    }
    pub const fn t(index: u32) -> VarId {
        VarId::new(Family::Tcoh, index)
    }
    pub const fn big_t(index: u32) -> VarId {
        VarId::new(Family::Tk, index)
    }
    pub const fn e(index: u32) -> VarId {
        VarId::new(Family::E, index)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.index)
    }
}

pub(crate) type ExpVec = SmallVec<[(VarId, i32); 6]>;

/// A power product of variables, stored sparsely and sorted by `VarId`.
///
/// Zero exponents are never stored. The `Ord` impl is the canonical term
/// order: ascending total degree, ties broken lexicographically with the
/// larger exponent on the smaller variable first (so `x1` precedes `x2`,
/// and `x1^2` precedes `x1*x2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: ExpVec,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarId, exp: i32) -> Monomial {
        let mut exps = ExpVec::new();
        if exp != 0 {
            exps.push((v, exp));
        }
        Monomial { exps }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i32)>) -> Monomial {
        let mut exps: ExpVec = pairs.into_iter().collect();
        exps.sort_unstable_by_key(|p| p.0);
        let mut out = ExpVec::new();
        for (v, e) in exps {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial { exps: out }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(VarId, i32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        self.exps
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|p| p.1 as i64).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.exps.iter().any(|p| p.1 < 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = ExpVec::with_capacity(a.len() + b.len());
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
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    /// Splits off the power of `v`, returning `(exponent, remaining monomial)`.
    pub fn split_var(&self, v: VarId) -> (i32, Monomial) {
        match self.exps.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let mut rest = self.exps.clone();
                let (_, e) = rest.remove(i);
                (e, Monomial { exps: rest })
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// Renames variables through `f`, which must be injective on the
    /// variables present.
    pub fn relabel(&self, mut f: impl FnMut(VarId) -> VarId) -> Monomial {
        let mut exps: ExpVec = self.exps.iter().map(|&(v, e)| (f(v), e)).collect();
        exps.sort_unstable_by_key(|p| p.0);
        debug_assert!(exps.windows(2).all(|w| w[0].0 < w[1].0));
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        // A variable missing from one side has exponent zero there; the side
        // with the larger exponent at the first difference sorts first.
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return 0.cmp(&ea),
                (None, Some(&(_, eb))) => return eb.cmp(&0),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Equal => {
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                        i += 1;
                        j += 1;
                    }
                    Ordering::Less => return 0.cmp(&ea),
                    Ordering::Greater => return eb.cmp(&0),
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(VarId, i32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn canonical_order_examples() {
        let one = Monomial::one();
        let x1 = m(&[(VarId::x(1), 1)]);
        let x2 = m(&[(VarId::x(2), 1)]);
        let t1 = m(&[(VarId::t(1), 1)]);
        let x1sq = m(&[(VarId::x(1), 2)]);
        let x1x2 = m(&[(VarId::x(1), 1), (VarId::x(2), 1)]);
        let x1t1 = m(&[(VarId::x(1), 1), (VarId::t(1), 1)]);
        let mut v = vec![x1t1.clone(), t1.clone(), x1x2.clone(), x2.clone(), one.clone(), x1sq.clone(), x1.clone()];
        v.sort();
        assert_eq!(v, vec![one, x1, x2, t1, x1sq, x1x2, x1t1]);
    }

    #[test]
    fn laurent_product_cancels() {
        let e = m(&[(VarId::e(1), 1)]);
        assert!(e.mul(&e.inverse()).is_one());
    }

    #[test]
    fn from_pairs_merges() {
        let a = m(&[(VarId::x(2), 1), (VarId::x(1), 1), (VarId::x(2), 2), (VarId::e(1), 1), (VarId::e(1), -1)]);
        assert_eq!(a.exponents(), &[(VarId::x(1), 1), (VarId::x(2), 3)]);
    }
}

//! Divided differences `∂_i`, isobaric Demazure operators `π_i`, and their
//! compositions along reduced words.
//!
//! Words compose right to left: `apply_word(f, [i1, ..., il])` computes
//! `∂_{i1}(∂_{i2}(... ∂_{il}(f)))`, so the last letter acts first.

use crate::combinat::{all_permutations, Permutation};
use crate::par;
use crate::poly::Polynomial;
use crate::Result;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    DividedDifference,
    Demazure,
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
///
/// # Panics
///
/// If `i` is outside `1..k`. The division itself cannot fail.
pub fn partial_i(f: &Polynomial, i: usize, k: usize) -> Polynomial {
    assert!(i >= 1 && i < k, "∂_{i} undefined on {k} variables");
    let i = i as u32;
    let numerator = f.sub(&f.swap_x(i, i + 1));
    numerator
        .exact_divide_linear(i, i + 1)
        .expect("f - s_i f is always divisible by x_i - x_{i+1}")
}

/// `π_i f = ∂_i((1 - x_{i+1}) f)`.
pub fn pi_i(f: &Polynomial, i: usize, k: usize) -> Polynomial {
    let weight = Polynomial::one().sub(&Polynomial::x(i as u32 + 1));
    partial_i(&weight.mul(f), i, k)
}

pub fn apply_simple(f: &Polynomial, i: usize, k: usize, kind: OperatorKind) -> Polynomial {
    match kind {
        OperatorKind::DividedDifference => partial_i(f, i, k),
        OperatorKind::Demazure => pi_i(f, i, k),
    }
}

/// Applies the operator word right to left.
pub fn apply_word(f: &Polynomial, word: &[usize], k: usize, kind: OperatorKind) -> Polynomial {
    word.iter()
        .rev()
        .fold(f.clone(), |acc, &i| apply_simple(&acc, i, k, kind))
}

/// `∂_w` or `π_w` along the canonical reduced word of `w ∈ S_k`, `k = w.len()`.
pub fn apply_w(f: &Polynomial, w: &Permutation, kind: OperatorKind) -> Polynomial {
    apply_word(f, &w.reduced_word(), w.len(), kind)
}

/// `∏_{1 <= i < j <= k} (1 - x_j) = ∏_j (1 - x_j)^{j-1}`.
pub fn demazure_weight(k: usize) -> Polynomial {
    let factors: Vec<Polynomial> = (2..=k as u32)
        .map(|j| Polynomial::one().sub(&Polynomial::x(j)).pow(j - 1))
        .collect();
    Polynomial::product(&factors)
}

/// The Jacobi symmetrizer computed without rational functions:
/// `Σ_w sign(w) w(g)` is skew-symmetric, hence divisible by the
/// Vandermonde product. Here `g = f` for divided differences and
/// `g = f ∏_{i<j}(1 - x_j)` for Demazure operators.
///
/// Agrees with `apply_w(f, w0, kind)`.
pub fn jacobi_symmetrize(f: &Polynomial, k: usize, kind: OperatorKind) -> Result<Polynomial> {
    let g = match kind {
        OperatorKind::DividedDifference => f.clone(),
        OperatorKind::Demazure => f.mul(&demazure_weight(k)),
    };
    alternate(&g, k).divide_vandermonde(k)
}

/// `Σ_{w ∈ S_k} sign(w) w(g)`.
pub fn alternate(g: &Polynomial, k: usize) -> Polynomial {
    let perms = all_permutations(k);
    par::map_sum(&perms, |w| {
        let moved = g.permute_x(w);
        if w.sign() < 0 {
            moved.neg()
        } else {
            moved
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Integer;

    fn x(i: u32) -> Polynomial {
        Polynomial::x(i)
    }

    #[test]
    fn partial_examples() {
        assert_eq!(partial_i(&x(1), 1, 2), Polynomial::one());
        assert_eq!(partial_i(&x(1).mul(&x(2)), 1, 2), Polynomial::zero());
        assert_eq!(partial_i(&x(1).pow(2), 1, 2), x(1).add(&x(2)));
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_i(&Polynomial::one(), 1, 2), Polynomial::one());
        assert_eq!(pi_i(&x(1), 1, 2), Polynomial::one());
        let sym = x(1).mul(&x(2)).add(&Polynomial::t(3));
        assert_eq!(pi_i(&sym, 1, 2), sym);
    }

    #[test]
    fn word_examples() {
        let f = x(1).pow(2).mul(&x(2)).add(&Polynomial::t(1));
        assert_eq!(apply_word(&f, &[], 3, OperatorKind::Demazure), f);
        let g = x(1).pow(2).mul(&x(2));
        assert_eq!(apply_word(&g, &[1, 2, 1], 3, OperatorKind::DividedDifference), Polynomial::one());
        assert_eq!(apply_word(&f, &[2, 1, 1], 3, OperatorKind::DividedDifference), Polynomial::zero());
    }

    #[test]
    fn longest_element_on_staircase_factor() {
        // ∂_1(x1 + t1) = 1
        let p = x(1).add(&Polynomial::t(1));
        assert_eq!(apply_w(&p, &Permutation::longest(2), OperatorKind::DividedDifference), Polynomial::one());
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_symmetrize(&x(1), 2, OperatorKind::DividedDifference).unwrap(), Polynomial::one());
        assert_eq!(
            jacobi_symmetrize(&Polynomial::one(), 2, OperatorKind::DividedDifference).unwrap(),
            Polynomial::zero()
        );
        // x1^2 x2 is the staircase monomial for k = 3; its symmetrization is 1.
        let g = x(1).pow(2).mul(&x(2));
        assert_eq!(jacobi_symmetrize(&g, 3, OperatorKind::DividedDifference).unwrap(), Polynomial::one());
    }

    #[test]
    fn demazure_weight_small() {
        let w = demazure_weight(3);
        let expected = Polynomial::one()
            .sub(&x(2))
            .mul(&Polynomial::one().sub(&x(3)).pow(2));
        assert_eq!(w, expected);
        assert_eq!(demazure_weight(1), Polynomial::one());
        assert_eq!(w.coefficient(&crate::poly::Monomial::one()), Integer::ONE);
    }
}

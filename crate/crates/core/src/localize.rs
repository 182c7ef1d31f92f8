//! Torus-fixed points of `Gr(k, N+k)` and of the Bott-Samelson tower,
//! localization maps, and the fixed-point form of the pushforward checked
//! by exact rational evaluation.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{pushforward, Route, Theory};
use crate::combinat::{all_permutations, fixed_point_indices, Partition, Permutation};
use crate::poly::{Assignment, Family, Polynomial, RationalValue, VarId};
use crate::{Error, Result};

/// Redraws allowed before a specialization is declared degenerate.
pub const MAX_REDRAWS: u32 = 32;

/// The coordinate subspace `e_λ = <e_{i_1}, ..., e_{i_k}>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub lambda: Partition,
    pub k: usize,
    pub n_cap: usize,
    pub indices: Vec<usize>,
}

impl FixedPoint {
    pub fn new(lambda: &Partition, k: usize, n_cap: usize) -> Result<FixedPoint> {
        if !lambda.fits_in_box(k, n_cap as u32) {
            return Err(Error::IndexOutOfRange(format!(
                "partition {lambda} does not fit in a {k} x {n_cap} box"
            )));
        }
        Ok(FixedPoint {
            lambda: lambda.clone(),
            k,
            n_cap,
            indices: fixed_point_indices(lambda, k)?,
        })
    }

    /// Every fixed point of `Gr(k, N+k)`, one per partition in the box.
    pub fn all(k: usize, n_cap: usize) -> Vec<FixedPoint> {
        Partition::all_in_box(k, n_cap as u32)
            .iter()
            .map(|l| FixedPoint::new(l, k, n_cap).expect("partition from the box"))
            .collect()
    }

    /// `i_j`, 1-based.
    pub fn index(&self, j: usize) -> usize {
        self.indices[j - 1]
    }
}

/// The Bott-Samelson fixed point `e_{λ,w}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSFixedPoint {
    pub lambda: Partition,
    pub w: Permutation,
    /// `k+1-i <= i_{w(j)} <= N+k` for all `1 <= j <= i <= k`.
    pub admissible: bool,
    /// Set when the λ-free criterion "no `i` with `w(i) < k+1-i`" gives a
    /// different answer than `admissible`.
    pub predicates_disagree: bool,
}

impl BSFixedPoint {
    pub fn new(lambda: &Partition, w: &Permutation, n_cap: usize) -> Result<BSFixedPoint> {
        let k = w.len();
        let p = FixedPoint::new(lambda, k, n_cap)?;
        let admissible = (1..=k).all(|i| {
            (1..=i).all(|j| {
                let idx = p.index(w.apply(j));
                k + 1 - i <= idx && idx <= n_cap + k
            })
        });
        let alternate = (1..=k).all(|i| w.apply(i) >= k + 1 - i);
        Ok(BSFixedPoint {
            lambda: lambda.clone(),
            w: w.clone(),
            admissible,
            predicates_disagree: admissible != alternate,
        })
    }
}

/// `x_j ↦ -t_{i_j}`.
pub fn coh_localize(f: &Polynomial, p: &FixedPoint) -> Polynomial {
    Localizer::new(Theory::Cohomology, f).at(p)
}

fn one_minus(p: Polynomial) -> Polynomial {
    Polynomial::one().sub(&p)
}

/// `x_j ↦ 1 - E_{i_j}` and `T_j ↦ 1 - E_j^{-1}`.
pub fn k_localize(f: &Polynomial, p: &FixedPoint) -> Polynomial {
    Localizer::new(Theory::KTheory, f).at(p)
}

/// Localizes one class at many fixed points.
///
/// The point-independent part of the substitution (`x_j ↦ -x_j`, or
/// `x_j ↦ 1 - x_j` and `T_j ↦ 1 - E_j^{-1}`) is done once; each fixed point
/// then only renames `x_j` to `t_{i_j}` or `E_{i_j}`.
pub struct Localizer {
    theory: Theory,
    prepared: Polynomial,
}

impl Localizer {
    pub fn new(theory: Theory, f: &Polynomial) -> Localizer {
        let mut subs = Vec::new();
        for v in f.variables() {
            match (theory, v.family) {
                (Theory::Cohomology, Family::X) => subs.push((v, Polynomial::var(v).neg())),
                (Theory::KTheory, Family::X) => subs.push((v, one_minus(Polynomial::var(v)))),
                (Theory::KTheory, Family::Tk) => {
                    subs.push((v, one_minus(Polynomial::var_pow(VarId::e(v.index), -1))))
                }
                _ => {}
            }
        }
        let prepared = f
            .substitute_many(&subs)
            .expect("x and parameter variables never carry negative exponents");
        Localizer { theory, prepared }
    }

    pub fn at(&self, p: &FixedPoint) -> Polynomial {
        let family = match self.theory {
            Theory::Cohomology => Family::Tcoh,
            Theory::KTheory => Family::E,
        };
        self.prepared.rename(|v| {
            if v.family == Family::X && (v.index as usize) <= p.k {
                VarId::new(family, p.index(v.index as usize) as u32)
            } else {
                v
            }
        })
    }
}

pub fn localize(theory: Theory, f: &Polynomial, p: &FixedPoint) -> Polynomial {
    match theory {
        Theory::Cohomology => coh_localize(f, p),
        Theory::KTheory => k_localize(f, p),
    }
}

/// `∏_{i<j} (t_{j-i} - t_{i_{w(i)}})` over `∏_{i<j} (t_{i_{w(j)}} - t_{i_{w(i)}})`, unreduced.
pub fn coh_weight_ratio(lambda: &Partition, w: &Permutation, n_cap: usize) -> Result<(Polynomial, Polynomial)> {
    let k = w.len();
    let p = FixedPoint::new(lambda, k, n_cap)?;
    let t = |i: usize| Polynomial::t(i as u32);
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for i in 1..k {
        let a = p.index(w.apply(i));
        for j in i + 1..=k {
            num = num.mul(&t(j - i).sub(&t(a)));
            den = den.mul(&t(p.index(w.apply(j))).sub(&t(a)));
        }
    }
    Ok((num, den))
}

/// `∏_{i<j} (1 - E_{i_{w(i)}} E_{j-i}^{-1})` over
/// `∏_{i<j} (1 - E_{i_{w(i)}} E_{i_{w(j)}}^{-1})`, unreduced.
pub fn k_weight_ratio(lambda: &Partition, w: &Permutation, n_cap: usize) -> Result<(Polynomial, Polynomial)> {
    let k = w.len();
    let p = FixedPoint::new(lambda, k, n_cap)?;
    let ratio = |a: usize, b: usize| {
        one_minus(Polynomial::e(a as u32).mul(&Polynomial::var_pow(VarId::e(b as u32), -1)))
    };
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for i in 1..k {
        let a = p.index(w.apply(i));
        for j in i + 1..=k {
            num = num.mul(&ratio(a, j - i));
            den = den.mul(&ratio(a, p.index(w.apply(j))));
        }
    }
    Ok((num, den))
}

pub fn weight_ratio(theory: Theory, lambda: &Partition, w: &Permutation, n_cap: usize) -> Result<(Polynomial, Polynomial)> {
    match theory {
        Theory::Cohomology => coh_weight_ratio(lambda, w, n_cap),
        Theory::KTheory => k_weight_ratio(lambda, w, n_cap),
    }
}

/// Values for `t_1..t_n` (cohomology) or `E_1..E_n` (K-theory), pairwise
/// distinct and nonzero.
pub fn draw_specialization(rng: &mut ChaCha8Rng, theory: Theory, n: usize) -> Result<Vec<RationalValue>> {
    for _ in 0..=MAX_REDRAWS {
        let values: Vec<RationalValue> = (0..n)
            .map(|_| match theory {
                Theory::Cohomology => RationalValue::integer(rng.gen_range(-1000i64..=1000)),
                Theory::KTheory => RationalValue::new(rng.gen_range(1i64..=50), rng.gen_range(1i64..=50)),
            })
            .collect();
        let distinct: BTreeSet<&RationalValue> = values.iter().collect();
        if distinct.len() == n && values.iter().all(|v| !v.is_zero()) {
            return Ok(values);
        }
    }
    Err(Error::DegenerateSpecialization { attempts: MAX_REDRAWS })
}

/// One trial of the fixed-point check: both sides as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationTrial {
    pub lhs: RationalValue,
    pub rhs: RationalValue,
    pub specialization: Vec<RationalValue>,
}

impl LocalizationTrial {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn parameter_point(theory: Theory, values: &[RationalValue]) -> Assignment {
    let mut point = Assignment::new();
    for (idx, v) in values.iter().enumerate() {
        let i = idx as u32 + 1;
        match theory {
            Theory::Cohomology => {
                point.insert(VarId::t(i), v.clone());
            }
            Theory::KTheory => {
                point.insert(VarId::e(i), v.clone());
                point.insert(VarId::big_t(i), RationalValue::one() - v.recip());
            }
        }
    }
    point
}

/// Compares, at `trials` random specializations, the localization at `e_λ`
/// of the pushforward of `f` with the fixed-point sum over all `w ∈ S_k`
/// of `ratio(λ, w) · f(localized arguments)`.
pub fn localized_pushforward_trials(
    f: &Polynomial,
    lambda: &Partition,
    k: usize,
    n_cap: usize,
    theory: Theory,
    trials: usize,
    seed: u64,
) -> Result<Vec<LocalizationTrial>> {
    let pushed = pushforward(f, k, n_cap, theory, Route::Operator)?.value;
    localized_trials_given(f, &pushed, lambda, k, n_cap, theory, trials, seed)
}

/// As [`localized_pushforward_trials`], with the pushforward of `f`
/// already computed, so sweeps over fixed points can share it.
#[allow(clippy::too_many_arguments)]
pub fn localized_trials_given(
    f: &Polynomial,
    pushed: &Polynomial,
    lambda: &Partition,
    k: usize,
    n_cap: usize,
    theory: Theory,
    trials: usize,
    seed: u64,
) -> Result<Vec<LocalizationTrial>> {
    let point = FixedPoint::new(lambda, k, n_cap)?;
    let localized = Localizer::new(theory, pushed).at(&point);
    let perms = all_permutations(k);
    let ratios: Vec<_> = perms
        .iter()
        .map(|w| weight_ratio(theory, lambda, w, n_cap))
        .collect::<Result<_>>()?;
    let n = n_cap + k;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let values = draw_specialization(&mut rng, theory, n)?;
        let base = parameter_point(theory, &values);
        let lhs = localized.evaluate(&base)?;
        let mut rhs = RationalValue::zero();
        for (w, (num, den)) in perms.iter().zip(&ratios) {
            let mut at = base.clone();
            for j in 1..=k {
                let src = &values[point.index(w.apply(j)) - 1];
                let xj = match theory {
                    Theory::Cohomology => -src,
                    Theory::KTheory => RationalValue::one() - src.clone(),
                };
                at.insert(VarId::x(j as u32), xj);
            }
            let d = den.evaluate(&base)?;
            if d.is_zero() {
                return Err(Error::DegenerateSpecialization { attempts: 1 });
            }
            rhs = rhs + num.evaluate(&base)? / d * f.evaluate(&at)?;
        }
        out.push(LocalizationTrial { lhs, rhs, specialization: values });
    }
    Ok(out)
}

pub fn verify_localized_pushforward(
    f: &Polynomial,
    lambda: &Partition,
    k: usize,
    n_cap: usize,
    theory: Theory,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    let results = localized_pushforward_trials(f, lambda, k, n_cap, theory, trials, seed)?;
    Ok(results.iter().all(LocalizationTrial::passed))
}

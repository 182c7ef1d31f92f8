//! Bott-Samelson classes `p_λ`, `P_λ`, their pushforwards to the
//! Grassmannian along three routes, determinantal factorial Schur and
//! Grothendieck polynomials, double Grothendieck polynomials, and the two
//! straightening identities.
//!
//! Throughout, `k` is the number of `x` variables and `n_cap` is `N`, so
//! the ambient Grassmannian is `Gr(k, N + k)` and parameters are indexed
//! `1..=N+k`. The Bott-Samelson `z_i` are identified with `x_i`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, RwLock};

use crate::combinat::{all_permutations, straighten_composition, Composition, Permutation, StraightenOutcome};
use crate::operators::{apply_w, pi_i, OperatorKind};
use crate::par;
use crate::poly::{Family, Integer, Polynomial, VarId};
use crate::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    Cohomology,
    KTheory,
}

impl Theory {
    pub fn parameter_family(self) -> Family {
        match self {
            Theory::Cohomology => Family::Tcoh,
            Theory::KTheory => Family::Tk,
        }
    }

    pub fn operator_kind(self) -> OperatorKind {
        match self {
            Theory::Cohomology => OperatorKind::DividedDifference,
            Theory::KTheory => OperatorKind::Demazure,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theory::Cohomology => "cohomology",
            Theory::KTheory => "k-theory",
        }
    }

    /// `x_i + t_j`, or `x_i + T_j - x_i T_j` in K-theory.
    pub fn factor(self, i: u32, j: u32) -> Polynomial {
        match self {
            Theory::Cohomology => Polynomial::x(i).add(&Polynomial::t(j)),
            Theory::KTheory => {
                let (x, t) = (Polynomial::x(i), Polynomial::big_t(j));
                x.add(&t).sub(&x.mul(&t))
            }
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Determinant,
    Symmetrizer,
    Operator,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Determinant, Route::Symmetrizer, Route::Operator];

    pub fn name(self) -> &'static str {
        match self {
            Route::Determinant => "determinant",
            Route::Symmetrizer => "symmetrizer",
            Route::Operator => "operator",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A pushforward to the Grassmannian, tagged with how it was computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardResult {
    pub value: Polynomial,
    pub theory: Theory,
    pub route: Route,
    /// The composition `μ` when the input was `p_μ` / `P_μ`.
    pub source: Option<Composition>,
}

fn check_composition(lambda: &Composition, k: usize, n_cap: usize) -> Result<()> {
    if lambda.len() > k {
        return Err(Error::IndexOutOfRange(format!(
            "composition {lambda} has more than k = {k} parts"
        )));
    }
    let top = n_cap + k - 1;
    for i in 1..=k {
        let reach = lambda.part(i) as usize + k - i;
        if reach > top {
            return Err(Error::IndexOutOfRange(format!(
                "part {i} of {lambda} reaches parameter index {reach} > N + k - 1 = {top}"
            )));
        }
    }
    Ok(())
}

/// `(x_i | t)^r = ∏_{j=1}^r (x_i + t_j)`, or the K-theoretic analogue.
pub fn falling_product(i: u32, r: usize, theory: Theory, k: usize, n_cap: usize) -> Result<Polynomial> {
    if r > n_cap + k - 1 {
        return Err(Error::IndexOutOfRange(format!(
            "falling power {r} exceeds N + k - 1 = {}",
            n_cap + k - 1
        )));
    }
    let factors: Vec<_> = (1..=r as u32).map(|j| theory.factor(i, j)).collect();
    Ok(Polynomial::product(&factors))
}

/// `∏_{i=1}^k ∏_{j=k+1-i}^{k-i+λ_i} factor(x_i, j)`.
fn build_class(lambda: &Composition, k: usize, n_cap: usize, theory: Theory) -> Result<Polynomial> {
    check_composition(lambda, k, n_cap)?;
    let mut factors = Vec::new();
    for i in 1..=k {
        let lo = k + 1 - i;
        let hi = k - i + lambda.part(i) as usize;
        for j in lo..=hi {
            factors.push(theory.factor(i as u32, j as u32));
        }
    }
    Ok(Polynomial::product(&factors))
}

/// The Bott-Samelson class `p_λ(x, t)`.
pub fn build_p_lambda(lambda: &Composition, k: usize, n_cap: usize) -> Result<Polynomial> {
    build_class(lambda, k, n_cap, Theory::Cohomology)
}

/// The Bott-Samelson structure-sheaf class `P_λ(x, T)`.
#[allow(non_snake_case)]
pub fn build_P_lambda(lambda: &Composition, k: usize, n_cap: usize) -> Result<Polynomial> {
    build_class(lambda, k, n_cap, Theory::KTheory)
}

pub fn build_class_for(theory: Theory, lambda: &Composition, k: usize, n_cap: usize) -> Result<Polynomial> {
    build_class(lambda, k, n_cap, theory)
}

/// `∏_{i=1}^{k-1} ∏_{j=1}^{k-i} factor(x_i, j)`.
pub fn build_delta(theory: Theory, k: usize) -> Polynomial {
    let mut factors = Vec::new();
    for i in 1..k {
        for j in 1..=k - i {
            factors.push(theory.factor(i as u32, j as u32));
        }
    }
    Polynomial::product(&factors)
}

pub fn build_p_delta(k: usize) -> Polynomial {
    build_delta(Theory::Cohomology, k)
}

#[allow(non_snake_case)]
pub fn build_P_delta(k: usize) -> Polynomial {
    build_delta(Theory::KTheory, k)
}

/// Leibniz expansion `Σ_w sign(w) ∏_i a[w(i)][i]` of a `k x k` matrix of
/// polynomials, `a[row][col]` 0-based.
pub fn leibniz_determinant(a: &[Vec<Polynomial>]) -> Polynomial {
    let k = a.len();
    let perms = all_permutations(k);
    par::map_sum(&perms, |w| {
        let mut term = Polynomial::constant(w.sign());
        for col in 0..k {
            term = term.mul(&a[w.apply(col + 1) - 1][col]);
            if term.is_zero() {
                break;
            }
        }
        term
    })
}

fn determinant_formula(lambda: &Composition, k: usize, n_cap: usize, theory: Theory) -> Result<Polynomial> {
    if lambda.len() > k {
        return Err(Error::IndexOutOfRange(format!(
            "composition {lambda} has more than k = {k} parts"
        )));
    }
    let mut matrix = Vec::with_capacity(k);
    for row in 1..=k as u32 {
        let mut entries = Vec::with_capacity(k);
        for col in 1..=k {
            let power = lambda.part(col) as usize + k - col;
            let mut entry = falling_product(row, power, theory, k, n_cap)?;
            if theory == Theory::KTheory && col > 1 {
                let one_minus_x = Polynomial::one().sub(&Polynomial::x(row));
                entry = entry.mul(&one_minus_x.pow(col as u32 - 1));
            }
            entries.push(entry);
        }
        matrix.push(entries);
    }
    leibniz_determinant(&matrix).divide_vandermonde(k)
}

/// `s_λ(x|t) = det((x_i|t)^{λ_j+k-j}) / ∏_{i<j}(x_i - x_j)`.
pub fn factorial_schur_det(lambda: &Composition, k: usize, n_cap: usize) -> Result<Polynomial> {
    determinant_formula(lambda, k, n_cap, Theory::Cohomology)
}

/// `G_λ(x|T) = det((x_i|T)^{λ_j+k-j} (1-x_i)^{j-1}) / ∏_{i<j}(x_i - x_j)`.
pub fn factorial_grothendieck_det(lambda: &Composition, k: usize, n_cap: usize) -> Result<Polynomial> {
    determinant_formula(lambda, k, n_cap, Theory::KTheory)
}

pub fn determinant_for(theory: Theory, lambda: &Composition, k: usize, n_cap: usize) -> Result<Polynomial> {
    determinant_formula(lambda, k, n_cap, theory)
}

fn check_pushforward_input(f: &Polynomial, k: usize, n_cap: usize, theory: Theory) -> Result<()> {
    let family = theory.parameter_family();
    let n = (n_cap + k) as u32;
    let ok = f.uses_only(|v| match v.family {
        Family::X => v.index as usize <= k,
        fam => fam == family && v.index <= n,
    });
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "pushforward input must involve only x1..x{k} and {}1..{}{n}",
            family.symbol(),
            family.symbol()
        )))
    }
}

/// Pushforward of a class `f(z; t)` (or `f(z; T)`) from the Bott-Samelson
/// tower to `Gr(k, N+k)`, with `z` written as `x`.
///
/// * `Operator`: `∂_{w0}(p_δ f)` or `π_{w0}(P_δ f)`.
/// * `Symmetrizer`: the weighted alternating sum over `S_k` divided by the
///   Vandermonde product.
///
/// The `Determinant` route only exists for `p_μ` inputs; see
/// [`push_composition`].
pub fn pushforward(f: &Polynomial, k: usize, n_cap: usize, theory: Theory, route: Route) -> Result<PushforwardResult> {
    check_pushforward_input(f, k, n_cap, theory)?;
    let value = match route {
        Route::Operator => {
            let lifted = build_delta(theory, k).mul(f);
            apply_w(&lifted, &Permutation::longest(k), theory.operator_kind())
        }
        Route::Symmetrizer => symmetrizer_pushforward(f, k, theory)?,
        Route::Determinant => return Err(Error::UnsupportedRoute("determinant")),
    };
    Ok(PushforwardResult { value, theory, route, source: None })
}

/// Numerator term for one `w`:
/// `sign(w) ∏_{i<j} factor(x_{w(i)}, j-i) [(1 - x_{w(j)})] · f(x_{w(1)}, ..., x_{w(k)})`.
fn symmetrizer_term(f: &Polynomial, w: &Permutation, theory: Theory) -> Polynomial {
    let k = w.len();
    let mut weight = Polynomial::constant(w.sign());
    for i in 1..k {
        for j in i + 1..=k {
            let wi = w.apply(i) as u32;
            weight = weight.mul(&theory.factor(wi, (j - i) as u32));
            if theory == Theory::KTheory {
                weight = weight.mul(&Polynomial::one().sub(&Polynomial::x(w.apply(j) as u32)));
            }
        }
    }
    weight.mul(&f.permute_x(w))
}

fn symmetrizer_pushforward(f: &Polynomial, k: usize, theory: Theory) -> Result<Polynomial> {
    let perms = all_permutations(k);
    par::map_sum(&perms, |w| symmetrizer_term(f, w, theory)).divide_vandermonde(k)
}

/// Pushforward of `p_μ` (or `P_μ`) along the chosen route.
///
/// The determinant route is the straightening rule in cohomology and the
/// determinantal formula evaluated at `μ` itself in K-theory.
pub fn push_composition(mu: &Composition, k: usize, n_cap: usize, theory: Theory, route: Route) -> Result<PushforwardResult> {
    let value = match (route, theory) {
        (Route::Determinant, Theory::Cohomology) => straighten_pushforward_coh(mu, k, n_cap)?.value,
        (Route::Determinant, Theory::KTheory) => factorial_grothendieck_det(mu, k, n_cap)?,
        _ => pushforward(&build_class(mu, k, n_cap, theory)?, k, n_cap, theory, route)?.value,
    };
    Ok(PushforwardResult { value, theory, route, source: Some(mu.clone()) })
}

/// Cohomological straightening: the pushforward of `p_μ` is zero or
/// `sign(w) s_λ(x|t)` with `λ + δ` the decreasing rearrangement of `μ + δ`.
pub fn straighten_pushforward_coh(mu: &Composition, k: usize, n_cap: usize) -> Result<PushforwardResult> {
    check_composition(mu, k, n_cap)?;
    let value = match straighten_composition(mu, k)? {
        StraightenOutcome::Zero => Polynomial::zero(),
        StraightenOutcome::Signed { sign, partition, .. } => {
            factorial_schur_det(&partition.to_composition(k), k, n_cap)?.scale(&Integer::from(sign))
        }
    };
    Ok(PushforwardResult {
        value,
        theory: Theory::Cohomology,
        route: Route::Determinant,
        source: Some(mu.clone()),
    })
}

/// Thread-safe memo of `push_composition` results for one `(theory, k, N, route)`.
pub struct PushCache {
    theory: Theory,
    k: usize,
    n_cap: usize,
    route: Route,
    memo: Mutex<HashMap<Composition, Polynomial>>,
}

impl PushCache {
    pub fn new(theory: Theory, k: usize, n_cap: usize, route: Route) -> PushCache {
        PushCache { theory, k, n_cap, route, memo: Mutex::new(HashMap::new()) }
    }

    pub fn get(&self, mu: &Composition) -> Result<Polynomial> {
        let key = Composition::new(mu.padded(self.k));
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let value = push_composition(&key, self.k, self.n_cap, self.theory, self.route)?.value;
        self.memo.lock().unwrap().insert(key, value.clone());
        Ok(value)
    }
}

/// Both sides of the denominator-cleared K-theoretic straightening identity
/// at positions `(i, i+1)`:
///
/// `(1 - T_{b+k-i}) π(P_λ)` versus
/// `Σ_{j=a+1}^{b} (1 - T_{j+k-i}) π(P_{μ(j)}) - Σ_{j=a+1}^{b-1} (1 - T_{j+k-i}) π(P_{ν(j)})`
///
/// where `a = λ_i < b = λ_{i+1}`, `μ(j)` puts `(b, j)` and `ν(j)` puts
/// `(b-1, j)` in positions `(i, i+1)`. Returns `None` when `a >= b`.
pub fn ktheory_straightening_sides(
    lambda: &Composition,
    i: usize,
    k: usize,
    n_cap: usize,
    cache: &PushCache,
) -> Result<Option<(Polynomial, Polynomial)>> {
    if i == 0 || i >= k {
        return Err(Error::IndexOutOfRange(format!("position {i} not in 1..{k}")));
    }
    check_composition(lambda, k, n_cap)?;
    let parts = lambda.padded(k);
    let (a, b) = (parts[i - 1], parts[i]);
    if a >= b {
        return Ok(None);
    }
    let shift = (k - i) as u32;
    let one_minus_t = |idx: u32| Polynomial::one().sub(&Polynomial::big_t(idx));
    let with_pair = |first: u32, second: u32| {
        let mut v = parts.clone();
        v[i - 1] = first;
        v[i] = second;
        Composition::new(v)
    };
    let lhs = one_minus_t(b + shift).mul(&cache.get(lambda)?);
    let mut rhs = Polynomial::zero();
    for j in a + 1..=b {
        rhs = rhs.add(&one_minus_t(j + shift).mul(&cache.get(&with_pair(b, j))?));
    }
    for j in a + 1..b {
        rhs = rhs.sub(&one_minus_t(j + shift).mul(&cache.get(&with_pair(b - 1, j))?));
    }
    Ok(Some((lhs, rhs)))
}

/// Checks the K-theoretic straightening identity after clearing its single
/// denominator. Vacuously true when `λ_i >= λ_{i+1}`.
pub fn check_ktheory_straightening(lambda: &Composition, i: usize, k: usize, n_cap: usize) -> Result<bool> {
    let cache = PushCache::new(Theory::KTheory, k, n_cap, Route::Operator);
    Ok(ktheory_straightening_sides(lambda, i, k, n_cap, &cache)?.is_none_or(|(l, r)| l == r))
}

/// `G_{w0}(x, T) = ∏_{i+j <= n} (x_i + T_j - x_i T_j)` for `w0 ∈ S_n`.
pub fn double_grothendieck_top(n: usize) -> Polynomial {
    let mut factors = Vec::new();
    for i in 1..n {
        for j in 1..=n - i {
            factors.push(Theory::KTheory.factor(i as u32, j as u32));
        }
    }
    Polynomial::product(&factors)
}

/// Memoized double Grothendieck polynomials of `S_n`, built down from `w0`
/// with `G_{w s_i} = π_i G_w` whenever `w(i) > w(i+1)`.
///
/// Safe for concurrent use: lookups share a read lock, inserts take the
/// write lock briefly.
pub struct GrothendieckTable {
    n: usize,
    memo: RwLock<HashMap<Permutation, Polynomial>>,
}

impl GrothendieckTable {
    pub fn new(n: usize) -> GrothendieckTable {
        let mut memo = HashMap::new();
        memo.insert(Permutation::longest(n), double_grothendieck_top(n));
        GrothendieckTable { n, memo: RwLock::new(memo) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: &Permutation) -> Result<Polynomial> {
        if w.len() != self.n {
            return Err(Error::InvalidPermutation(format!("{w} is not in S_{}", self.n)));
        }
        if let Some(p) = self.memo.read().unwrap().get(w) {
            return Ok(p.clone());
        }
        let ascent = (1..self.n)
            .find(|&i| !w.has_descent(i))
            .expect("only w0 has no ascent, and it is seeded");
        let value = self.via(w, ascent)?;
        self.memo.write().unwrap().insert(w.clone(), value.clone());
        Ok(value)
    }

    /// `π_i G_{w s_i}` for an ascent `i` of `w`; equal to `G_w` for every
    /// such `i`.
    pub fn via(&self, w: &Permutation, i: usize) -> Result<Polynomial> {
        if w.has_descent(i) {
            return Err(Error::InvalidArgument(format!("{i} is a descent of {w}")));
        }
        let above = self.get(&w.right_mul_simple(i))?;
        Ok(pi_i(&above, i, self.n))
    }

    /// Every `G_w`, `w ∈ S_n` in lexicographic order, filled level by level
    /// from the top so each level's entries can be computed in parallel.
    pub fn all(&self) -> Result<Vec<(Permutation, Polynomial)>> {
        let perms = all_permutations(self.n);
        let max_len = self.n * self.n.saturating_sub(1) / 2;
        for len in (0..max_len).rev() {
            let level: Vec<_> = perms.iter().filter(|w| w.length() == len).cloned().collect();
            par::try_map(&level, |w| self.get(w))?;
        }
        perms
            .into_iter()
            .map(|w| self.get(&w).map(|p| (w, p)))
            .collect()
    }
}

/// The double Grothendieck polynomial `G_w(x, T)` for `w ∈ S_n`.
pub fn double_grothendieck(w: &Permutation) -> Result<Polynomial> {
    GrothendieckTable::new(w.len()).get(w)
}

/// Sends every variable of `family` to zero.
pub fn specialize_family_to_zero(p: &Polynomial, family: Family) -> Polynomial {
    let subs: Vec<(VarId, Polynomial)> = p
        .variables()
        .into_iter()
        .filter(|v| v.family == family)
        .map(|v| (v, Polynomial::zero()))
        .collect();
    p.substitute_many(&subs).expect("zero substitution has no negative exponents here")
}

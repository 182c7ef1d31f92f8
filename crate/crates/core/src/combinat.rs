//! Partitions, compositions and permutations of `{1..k}`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Finite sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Composition {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts zero-padded (never truncated) to length `k`.
    pub fn padded(&self, k: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        if v.len() < k {
            v.resize(k, 0);
        }
        v
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }

    /// Every composition of length `k` with parts in `0..=max_part`, in
    /// lexicographic order.
    pub fn all_bounded(k: usize, max_part: u32) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=max_part).map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Composition).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(Composition)
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// stripped on construction, so equality ignores them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{} is not weakly decreasing",
                Composition(parts)
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn padded(&self, k: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        if v.len() < k {
            v.resize(k, 0);
        }
        v
    }

    pub fn to_composition(&self, k: usize) -> Composition {
        Composition(self.padded(k))
    }

    /// Whether `self` fits in the `rows x cols` rectangle `(cols^rows)`.
    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.length() <= rows && self.first() <= cols
    }

    /// Every partition inside `(cols^rows)`, in reverse lexicographic order
    /// of the padded parts (largest first).
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn go(rows: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if prefix.len() == rows {
                out.push(Partition::new(prefix.clone()).expect("decreasing by construction"));
                return;
            }
            for p in (0..=cap).rev() {
                prefix.push(p);
                go(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::with_capacity(rows), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
        })
        .collect()
}

/// `mu ⊇ lambda` entrywise after zero padding.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    lambda.length() <= mu.length() && (1..=lambda.length()).all(|i| mu.part(i) >= lambda.part(i))
}

/// The staircase `(k-1, k-2, ..., 1, 0)`, returned with all `k` entries.
pub fn staircase(k: usize) -> Vec<u32> {
    (0..k as u32).rev().collect()
}

/// Permutation of `{1..k}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Permutation> {
        let k = oneline.len();
        let mut seen = vec![false; k + 1];
        for &v in &oneline {
            if v == 0 || v > k || seen[v] {
                return Err(Error::InvalidPermutation(format!("{oneline:?} is not a permutation of 1..{k}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(oneline))
    }

    pub fn identity(k: usize) -> Permutation {
        Permutation((1..=k).collect())
    }

    /// The longest element `i -> k+1-i`.
    pub fn longest(k: usize) -> Permutation {
        Permutation((1..=k).rev().collect())
    }

    /// The simple reflection `s_i` in `S_k`.
    pub fn simple(i: usize, k: usize) -> Permutation {
        assert!(i >= 1 && i < k, "s_{i} is not in S_{k}");
        let mut w = Permutation::identity(k);
        w.0.swap(i - 1, i);
        w
    }

    /// `s_{i1} s_{i2} ... s_{il}` as a product in `S_k`.
    pub fn from_word(word: &[usize], k: usize) -> Permutation {
        let mut w = Permutation::identity(k);
        for &i in word {
            w = w.right_mul_simple(i);
        }
        w
    }

    pub fn oneline(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Coxeter length, equal to the number of inversions.
    pub fn length(&self) -> usize {
        self.inversions()
    }

    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `w s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    pub fn has_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.has_descent(i)).collect()
    }

    /// At most one descent, and that one at position `k`.
    pub fn is_grassmannian(&self, k: usize) -> bool {
        self.descents().iter().all(|&d| d == k)
    }

    /// A reduced word `[i1, ..., il]` with `self = s_{i1} ... s_{il}`,
    /// found by adjacent-transposition sorting.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut sorting = Vec::with_capacity(self.inversions());
        // w s_{a1} ... s_{am} = id, so self = s_{am} ... s_{a1}.
        loop {
            match (1..w.len()).find(|&i| w[i - 1] > w[i]) {
                Some(i) => {
                    w.swap(i - 1, i);
                    sorting.push(i);
                }
                None => break,
            }
        }
        sorting.reverse();
        sorting
    }

    /// Every reduced word of `self`, in lexicographic order.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        // The last letter of a reduced word is a right descent.
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for d in self.descents() {
            for mut word in self.right_mul_simple(d).all_reduced_words() {
                word.push(d);
                out.push(word);
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Permutation::new(parts.into_iter().map(|p| p as usize).collect())
    }
}

/// All of `S_k` in lexicographic one-line order.
pub fn iterate_sk(k: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some((1..=k).collect::<Vec<usize>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1]).unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            next = Some(succ);
        }
        Some(Permutation(current))
    })
}

/// `S_k` collected, for callers that fan the sum out over workers.
pub fn all_permutations(k: usize) -> Vec<Permutation> {
    iterate_sk(k).collect()
}

/// Torus-fixed-point indices `i_j = j + lambda_{k+1-j}`.
pub fn fixed_point_indices(lambda: &Partition, k: usize) -> Result<Vec<usize>> {
    if lambda.length() > k {
        return Err(Error::IndexOutOfRange(format!(
            "partition {lambda} has more than {k} parts"
        )));
    }
    Ok((1..=k).map(|j| j + lambda.part(k + 1 - j) as usize).collect())
}

/// The `k`-Grassmannian permutation in `S_n` attached to `lambda`:
/// `w(i) = i + lambda_{k+1-i}` for `i <= k`, the rest ascending.
pub fn grassmannian_permutation(lambda: &Partition, k: usize, n: usize) -> Result<Permutation> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    if lambda.length() > k {
        return Err(Error::IndexOutOfRange(format!("partition {lambda} has more than {k} parts")));
    }
    let bound = (n - k) as u32;
    if lambda.first() > bound {
        return Err(Error::PartTooLarge { part: lambda.first(), bound });
    }
    let head = fixed_point_indices(lambda, k)?;
    let mut used = vec![false; n + 1];
    for &v in &head {
        used[v] = true;
    }
    let tail = (1..=n).filter(|&v| !used[v]);
    Ok(Permutation(head.iter().copied().chain(tail).collect()))
}

/// Inverse of [`grassmannian_permutation`]:
/// `lambda = (w(k) - k, w(k-1) - (k-1), ..., w(1) - 1)`.
pub fn partition_of_grassmannian(w: &Permutation, k: usize) -> Result<Partition> {
    if !w.is_grassmannian(k) || k > w.len() {
        return Err(Error::InvalidPermutation(format!("{w} is not {k}-Grassmannian")));
    }
    Partition::new((1..=k).rev().map(|i| (w.apply(i) - i) as u32).collect())
}

/// Result of straightening a composition against the staircase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StraightenOutcome {
    /// `mu + delta` has a repeated entry.
    Zero,
    /// `mu + delta` sorts (via `witness`) to `partition + delta`.
    Signed {
        sign: i64,
        partition: Partition,
        witness: Permutation,
    },
}

/// Sorts `mu + delta` into strictly decreasing order.
///
/// The witness `w` satisfies `(mu + delta)_{w(i)} = (lambda + delta)_i`,
/// and the sign is `sign(w)`.
pub fn straighten_composition(mu: &Composition, k: usize) -> Result<StraightenOutcome> {
    if mu.len() > k {
        return Err(Error::IndexOutOfRange(format!("composition {mu} longer than {k}")));
    }
    let delta = staircase(k);
    let shifted: Vec<u32> = mu.padded(k).iter().zip(&delta).map(|(m, d)| m + d).collect();
    let mut order: Vec<usize> = (1..=k).collect();
    // Stable sort, decreasing by value.
    order.sort_by(|&a, &b| shifted[b - 1].cmp(&shifted[a - 1]));
    let sorted: Vec<u32> = order.iter().map(|&i| shifted[i - 1]).collect();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(StraightenOutcome::Zero);
    }
    let witness = Permutation(order);
    let parts: Vec<u32> = sorted.iter().zip(&delta).map(|(s, d)| s - d).collect();
    Ok(StraightenOutcome::Signed {
        sign: witness.sign(),
        partition: Partition::new(parts).expect("strictly decreasing minus staircase is a partition"),
        witness,
    })
}

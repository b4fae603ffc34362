//! Type `A_r` root system combinatorics in the fundamental-weight basis.
//!
//! Weights are integer vectors `(a_1, ..., a_r)` with `a_i = <λ, α_i^∨>`. The
//! Weyl group `S_{r+1}` acts through epsilon coordinates `(l_1, ..., l_{r+1})`
//! with `l_i - l_{i+1} = a_i` and `l_{r+1} = 0`, so every operation here stays in
//! exact integer arithmetic.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest rank accepted by the closed-form operations.
pub const MAX_RANK: usize = 32;

/// Largest rank for which the Weyl group is ever enumerated explicitly.
pub const MAX_ENUMERATION_RANK: usize = 7;

pub(crate) fn check_rank(rank: usize) -> Result<()> {
    if rank == 0 || rank > MAX_RANK {
        return Err(Error::RankOutOfRange {
            rank,
            max: MAX_RANK,
        });
    }
    Ok(())
}

/// A positive root `α_{ij} = ε_i - ε_j` with `1 <= i < j <= r + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

impl PositiveRoot {
    pub fn new(i: usize, j: usize, rank: usize) -> Result<Self> {
        if i == 0 || i >= j || j > rank + 1 {
            return Err(Error::InvalidRoot { i, j, rank });
        }
        Ok(PositiveRoot { i, j })
    }

    /// Height of the root, i.e. `<ρ, α^∨>`.
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α({},{})", self.i, self.j)
    }
}

/// The root system of `SL_{r+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystem {
    rank: usize,
}

impl RootSystem {
    pub fn new(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(RootSystem { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `r(r+1)/2`, which is also the dimension of the full flag variety.
    pub fn num_positive_roots(&self) -> usize {
        self.rank * (self.rank + 1) / 2
    }

    /// Positive roots ordered lexicographically by `(i, j)`.
    pub fn positive_roots(&self) -> impl Iterator<Item = PositiveRoot> {
        let n = self.rank + 1;
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| PositiveRoot { i, j }))
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = PositiveRoot> {
        (1..=self.rank).map(|i| PositiveRoot { i, j: i + 1 })
    }

    pub fn rho(&self) -> Weight {
        Weight::rho(self.rank)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    /// The canonical class `K = L_{-2ρ}` of the flag variety.
    pub fn canonical(&self) -> Weight {
        Weight(vec![-2; self.rank])
    }
}

/// An integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        check_rank(coords.len())?;
        Ok(Weight(coords))
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The Weyl vector; every coordinate is 1.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem { rank: self.rank() }
    }

    pub(crate) fn expect_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: self.rank(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        other.expect_rank(self.rank())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()
            .map(Weight)
    }

    pub fn checked_scale(&self, m: i64) -> Result<Weight> {
        self.0
            .iter()
            .map(|a| a.checked_mul(m).ok_or(Error::Overflow))
            .collect::<Result<_>>()
            .map(Weight)
    }

    pub fn scale(&self, m: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * m).collect())
    }

    /// `<λ, α^∨>` for a positive root `α_{ij}`: `a_i + ... + a_{j-1}`.
    pub fn pair(&self, root: PositiveRoot) -> i64 {
        self.0[root.i - 1..root.j - 1].iter().sum()
    }

    /// All positive-root pairings, in the order of [`RootSystem::positive_roots`].
    pub fn pairings(&self) -> Vec<i64> {
        let eps = self.epsilon();
        let n = eps.len();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(eps[i] - eps[j]);
            }
        }
        out
    }

    /// Epsilon coordinates normalized so the last one is zero.
    pub fn epsilon(&self) -> Vec<i64> {
        let mut eps = vec![0; self.rank() + 1];
        for k in (0..self.rank()).rev() {
            eps[k] = eps[k + 1] + self.0[k];
        }
        eps
    }

    pub fn from_epsilon(eps: &[i64]) -> Weight {
        Weight(eps.windows(2).map(|w| w[0] - w[1]).collect())
    }

    /// All simple pairings are non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// All simple pairings are positive (the ample cone).
    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&a| a > 0)
    }

    /// No positive root pairs to zero with this weight.
    pub fn is_regular(&self) -> bool {
        let mut eps = self.epsilon();
        eps.sort_unstable();
        eps.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

// Operator impls panic on rank mismatch; use the checked variants on untrusted input.
impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// `<λ, α_{ij}^∨>` with the root given as an index pair.
pub fn pairing(weight: &Weight, i: usize, j: usize) -> Result<i64> {
    let root = PositiveRoot::new(i, j, weight.rank())?;
    Ok(weight.pair(root))
}

/// An element of `W(A_r) = S_{r+1}` in one-line notation (zero-based internally).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            perm: (0..=rank).collect(),
        }
    }

    /// Build from one-line notation on `{1, ..., r+1}`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        if n < 2 {
            return Err(Error::InvalidPermutation(one_line.to_vec()));
        }
        let mut seen = vec![false; n];
        let mut perm = Vec::with_capacity(n);
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(one_line.to_vec()));
            }
            seen[v - 1] = true;
            perm.push(v - 1);
        }
        check_rank(n - 1)?;
        Ok(WeylElement { perm })
    }

    /// The simple reflection `s_i`, swapping `i` and `i+1`.
    pub fn simple_reflection(rank: usize, i: usize) -> Result<Self> {
        check_rank(rank)?;
        if i == 0 || i > rank {
            return Err(Error::InvalidRoot { i, j: i + 1, rank });
        }
        let mut w = Self::identity(rank);
        w.perm.swap(i - 1, i);
        Ok(w)
    }

    /// The longest element `w_0 = (r+1, r, ..., 1)`.
    pub fn longest(rank: usize) -> Self {
        WeylElement {
            perm: (0..=rank).rev().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len() - 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.perm.iter().map(|v| v + 1).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.perm;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(WeylElement {
            perm: other.perm.iter().map(|&k| self.perm[k]).collect(),
        })
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0; self.perm.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            perm[v] = k;
        }
        WeylElement { perm }
    }

    /// Linear action `wλ`. In epsilon coordinates `(wl)_{w(k)} = l_k`.
    pub fn apply(&self, weight: &Weight) -> Result<Weight> {
        weight.expect_rank(self.rank())?;
        let eps = weight.epsilon();
        let mut out = vec![0; eps.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            out[v] = eps[k];
        }
        Ok(Weight::from_epsilon(&out))
    }

    /// Shifted action `w·λ = w(λ+ρ) - ρ`.
    pub fn dot(&self, weight: &Weight) -> Result<Weight> {
        weight.expect_rank(self.rank())?;
        let rho = Weight::rho(weight.rank());
        let moved = self.apply(&(weight + &rho))?;
        Ok(&moved - &rho)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(" "))
    }
}

/// Outcome of conjugating a weight into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conjugate {
    /// `element` maps the weight to the strictly dominant `dominant`.
    Regular {
        element: WeylElement,
        dominant: Weight,
    },
    /// The weight lies on a wall.
    Singular,
}

impl Conjugate {
    pub fn is_singular(&self) -> bool {
        matches!(self, Conjugate::Singular)
    }
}

/// Find the unique `w` with `wμ` strictly dominant, or report that `μ` is singular.
///
/// Sorts the epsilon coordinates into strictly decreasing order; the sorting
/// permutation is `w^{-1}`. Equal epsilon coordinates mean a zero pairing.
pub fn dominant_conjugate(mu: &Weight) -> Conjugate {
    let eps = mu.epsilon();
    let mut order: Vec<usize> = (0..eps.len()).collect();
    order.sort_by(|&a, &b| eps[b].cmp(&eps[a]).then(a.cmp(&b)));
    if order.windows(2).any(|w| eps[w[0]] == eps[w[1]]) {
        return Conjugate::Singular;
    }
    // order[j] = w^{-1}(j)
    let sorted: Vec<i64> = order.iter().map(|&k| eps[k]).collect();
    let element = WeylElement { perm: order }.inverse();
    Conjugate::Regular {
        element,
        dominant: Weight::from_epsilon(&sorted),
    }
}

/// All `(r+1)!` elements of `W(A_r)`, in lexicographic order of one-line notation.
pub fn enumerate_weyl_group(rank: usize) -> Result<Vec<WeylElement>> {
    check_rank(rank)?;
    if rank > MAX_ENUMERATION_RANK {
        return Err(Error::EnumerationCap {
            rank,
            cap: MAX_ENUMERATION_RANK,
        });
    }
    Ok((0..=rank)
        .permutations(rank + 1)
        .map(|perm| WeylElement { perm })
        .collect())
}

//! Exhaustive generation of `A_n` and closed-form counts.
//!
//! The generator follows the recursive total order
//! `A_n = A_{n-1} · J(A_{n-1}) · J_{n-1}(A_{n-1}) · melds`, where the first
//! three blocks are the tilings in which vertex `n` or `n-1` is cut off by an
//! (n-1)-gon, and meld `r` glues an `(r+1)`-gon tiling on `n-r-1..=n-1` to an
//! `(n-r)`-gon tiling on `1..=n-r-1, n` along the diagonal `[n-r-1, n]`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tiling::{Diagonal, Tiling, Vertex};

/// Largest rank enumerated unless the caller raises the limit.
pub const DEFAULT_MAX_RANK: u32 = 12;

/// A weakly decreasing list of positive parts; part `d` stands for a
/// `(d+2)`-gonal tile.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShapePartition {
    parts: Vec<u32>,
}

impl ShapePartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::BadPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ShapePartition { parts })
    }

    /// The shape attached to rank `n`; fails unless the parts sum to `n - 2`.
    pub fn for_rank(parts: Vec<u32>, n: u32) -> Result<Self> {
        let p = ShapePartition::new(parts)?;
        if p.size() + 2 != n {
            return Err(Error::BadPartition(format!(
                "{p} has size {}, expected {}",
                p.size(),
                n.saturating_sub(2)
            )));
        }
        Ok(p)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, i.e. the number of tiles.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `α_d`, the multiplicity of part `d`.
    pub fn alpha(&self, d: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == d).count() as u32
    }

    /// Number of diagonals of a tiling of this shape.
    pub fn num_diagonals(&self) -> u32 {
        self.parts.len() as u32 - 1
    }

    /// Every partition of `size`, ordered by number of parts and then
    /// reverse-lexicographically, as in the λ-tables.
    pub fn all_of_size(size: u32) -> Vec<ShapePartition> {
        let mut out = Vec::new();
        for k in 1..=size.max(1) {
            let mut acc = Vec::new();
            fill_partitions(size, k, size, &mut Vec::new(), &mut acc);
            out.extend(acc.into_iter().map(|parts| ShapePartition { parts }));
        }
        out
    }

    /// Removes one part `d` from each listed size and adds the given parts;
    /// `None` if a requested part is missing. Used by the reduction formulas.
    pub(crate) fn replace(&self, remove: &[u32], add: &[u32]) -> Option<ShapePartition> {
        let mut parts = self.parts.clone();
        for r in remove {
            let i = parts.iter().position(|p| p == r)?;
            parts.remove(i);
        }
        parts.extend_from_slice(add);
        ShapePartition::new(parts).ok()
    }
}

fn fill_partitions(rest: u32, k: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k == 0 {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if rest < k {
        return;
    }
    // largest first gives reverse-lexicographic order
    let hi = max.min(rest - (k - 1));
    for p in (1..=hi).rev() {
        cur.push(p);
        fill_partitions(rest - p, k - 1, p, cur, out);
        cur.pop();
    }
}

/// Exponent notation such as `2^2 1^2` or `3 2`.
impl fmt::Display for ShapePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let d = self.parts[i];
            let k = self.parts[i..].iter().take_while(|&&p| p == d).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{k}")?;
            }
            i += k;
        }
        Ok(())
    }
}

/// Accepts `2,2,1,1`, `2 2 1 1` and `2^2 1^2`.
impl FromStr for ShapePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let bad = || Error::BadPartition(s.to_string());
            let (d, k) = match tok.split_once('^') {
                Some((d, k)) => (d, k.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let d = d.parse::<u32>().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(d, k));
        }
        ShapePartition::new(parts)
    }
}

/// The multiset of `|t| - 2` over the tiles of `t`.
pub fn shape_of(t: &Tiling) -> ShapePartition {
    ShapePartition::new(t.tiles().iter().map(|q| q.len() as u32 - 2).collect())
        .expect("tilings have at least one tile")
}

fn check_rank(n: u32, max_rank: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidRank(n));
    }
    if n > max_rank {
        return Err(Error::RankTooLarge { n, max: max_rank });
    }
    Ok(())
}

/// All tilings of the `n`-gon in the recursive order, `n ≤ DEFAULT_MAX_RANK`.
pub fn generate_all(n: u32) -> Result<Vec<Tiling>> {
    generate_all_bounded(n, DEFAULT_MAX_RANK)
}

/// As [`generate_all`] with an explicit rank limit.
pub fn generate_all_bounded(n: u32, max_rank: u32) -> Result<Vec<Tiling>> {
    check_rank(n, max_rank)?;
    let lists = build_lists(n);
    Ok(lists
        .into_iter()
        .next_back()
        .expect("at least A_3")
        .into_iter()
        .map(|d| Tiling::from_unsorted_unchecked(n, d))
        .collect())
}

type Raw = Vec<Diagonal>;

/// `A_3, …, A_n` as raw diagonal lists (index `k - 3`).
fn build_lists(n: u32) -> Vec<Vec<Raw>> {
    let mut lists: Vec<Vec<Raw>> = vec![vec![Vec::new()]];
    for k in 4..=n {
        let next = extend(&lists, k);
        lists.push(next);
    }
    lists
}

fn extend(lists: &[Vec<Raw>], n: u32) -> Vec<Raw> {
    let a = |k: u32| &lists[k as usize - 3];
    let prev = a(n - 1);
    let mut out: Vec<Raw> = Vec::with_capacity(prev.len() * 4);
    // vertex n simple inside a larger tile
    out.extend(prev.iter().cloned());
    // J: cut off the ear {n-1, n, 1}
    out.extend(prev.iter().map(|d| with(d.clone(), Diagonal::new_unchecked(1, n - 1))));
    // J_{n-1}: relabel n-1 -> n and cut off the ear {n-2, n-1, n}
    out.extend(prev.iter().map(|d| {
        let moved = relabel(d, |v| if v == n - 1 { n } else { v });
        with(moved, Diagonal::new_unchecked(n - 2, n))
    }));
    // melds along [n-r-1, n]
    for r in 2..=n.saturating_sub(3) {
        let shift = n - r - 2;
        let left = a(r + 1);
        let right: Vec<Raw> = a(n - r)
            .iter()
            .map(|d| {
                let moved = relabel(d, |v| if v == n - r { n } else { v });
                with(moved, Diagonal::new_unchecked(n - r - 1, n))
            })
            .collect();
        let lefts = left
            .iter()
            .map(|d| relabel(d, |v| v + shift))
            .chain(left.iter().map(|d| {
                with(relabel(d, |v| v + shift), Diagonal::new_unchecked(n - r - 1, n - 1))
            }));
        for l in lefts {
            for rt in &right {
                let mut m = l.clone();
                m.extend_from_slice(rt);
                out.push(m);
            }
        }
    }
    out
}

fn relabel(d: &[Diagonal], f: impl Fn(Vertex) -> Vertex) -> Raw {
    d.iter()
        .map(|x| Diagonal::new_unchecked(f(x.a()), f(x.b())))
        .collect()
}

fn with(mut d: Raw, extra: Diagonal) -> Raw {
    d.push(extra);
    d
}

/// Tilings with exactly `m` diagonals, in generation order.
pub fn generate_by_m(n: u32, m: u32) -> Result<Vec<Tiling>> {
    if n >= 3 && m > n - 3 {
        return Err(Error::OutOfRange { n, value: m });
    }
    Ok(generate_all(n)?
        .into_iter()
        .filter(|t| t.num_diagonals() == m as usize)
        .collect())
}

/// Tilings whose tile sizes are `{λ_i + 2}`, in generation order.
pub fn generate_by_lambda(n: u32, lambda: &ShapePartition) -> Result<Vec<Tiling>> {
    if lambda.size() + 2 != n {
        return Err(Error::BadPartition(format!("{lambda} for rank {n}")));
    }
    let m = lambda.num_diagonals() as usize;
    Ok(generate_all(n)?
        .into_iter()
        .filter(|t| t.num_diagonals() == m && &shape_of(t) == lambda)
        .collect())
}

/// `|A_n(λ)|` for every shape occurring in `A_n`, by enumeration.
pub fn lambda_counts(n: u32, max_rank: u32) -> Result<HashMap<ShapePartition, u64>> {
    let mut out = HashMap::new();
    for t in generate_all_bounded(n, max_rank)? {
        *out.entry(shape_of(&t)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Binomial coefficient `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// `a_n(m) = C(n+m-1, m) · C(n-3, m) / (m+1)`, the number of tilings with `m` diagonals.
pub fn a_n_m_formula(n: u32, m: u32) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidRank(n));
    }
    if m > n - 3 {
        return Err(Error::OutOfRange { n, value: m });
    }
    let (n, m) = (n as u64, m as u64);
    Ok(binomial(n + m - 1, m) * binomial(n - 3, m) / (m + 1))
}

/// `a_n = Σ_m a_n(m)`, the little Schröder number.
pub fn a_n_formula(n: u32) -> BigUint {
    if n < 3 {
        return BigUint::zero();
    }
    (0..=n - 3)
        .map(|m| a_n_m_formula(n, m).expect("m in range"))
        .sum()
}

/// Number of tilings of shape `λ`:
/// `(n+m-1)! / ((n-1)! · ∏_d α_d!)` with `m = ℓ(λ) - 1` diagonals.
pub fn a_n_lambda_formula(n: u32, lambda: &ShapePartition) -> Result<BigUint> {
    if lambda.size() + 2 != n {
        return Err(Error::BadPartition(format!("{lambda} for rank {n}")));
    }
    let m = lambda.num_diagonals() as u64;
    let n = n as u64;
    let mut denom = factorial(n - 1);
    let mut parts = lambda.parts().to_vec();
    parts.dedup();
    for d in parts {
        denom *= factorial(lambda.alpha(d) as u64);
    }
    Ok(factorial(n + m - 1) / denom)
}

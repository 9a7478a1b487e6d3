//! Permutations of `{1..n}` with 1-indexed semantics.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection `σ` on `{1..n}`; `images[i-1] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermRepr", into = "PermRepr")]
pub struct Permutation {
    images: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PermRepr {
    n: u32,
    sigma: Vec<u32>,
    #[serde(default, skip_deserializing)]
    cycles: String,
}

impl TryFrom<PermRepr> for Permutation {
    type Error = Error;
    fn try_from(r: PermRepr) -> Result<Self> {
        if r.sigma.len() != r.n as usize {
            return Err(Error::BadPermutation(format!(
                "expected {} images, got {}",
                r.n,
                r.sigma.len()
            )));
        }
        Permutation::new(r.sigma)
    }
}

impl From<Permutation> for PermRepr {
    fn from(p: Permutation) -> Self {
        let cycles = p.to_cycles();
        PermRepr {
            n: p.n(),
            sigma: p.images,
            cycles,
        }
    }
}

impl Permutation {
    /// Validates one-line notation `[σ(1), …, σ(n)]`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::BadPermutation(format!("{images:?}")));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles; unmentioned points are fixed.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=n).collect();
        let mut seen = vec![false; n as usize + 1];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x == 0 || x > n || seen[x as usize] {
                    return Err(Error::BadPermutation(format!("{cycles:?}")));
                }
                seen[x as usize] = true;
                images[x as usize - 1] = c[(k + 1) % c.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The basic cycle `(1, 2, …, n)`.
    pub fn basic_cycle(n: u32) -> Self {
        Permutation {
            images: (1..=n).map(|i| i % n + 1).collect(),
        }
    }

    /// `i ↦ i + k` mod `n`.
    pub fn rotation(n: u32, k: i64) -> Self {
        Permutation {
            images: (1..=n)
                .map(|i| crate::tiling::shift_vertex(n, i, k))
                .collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    /// `σ(i)`; panics when `i` is out of range.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (1..=self.n()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Disjoint cycles of length ≥ 2, each starting at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut c = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Length of the cycle through `i` (1 for a fixed point).
    pub fn cycle_len(&self, i: u32) -> usize {
        let mut len = 1;
        let mut x = self.apply(i);
        while x != i {
            len += 1;
            x = self.apply(x);
        }
        len
    }

    /// Cycle notation such as `(135)(246)`; entries are comma separated once
    /// `n ≥ 10` so multi-digit labels stay readable. Fixed points are omitted.
    pub fn to_cycles(&self) -> String {
        let sep = if self.n() >= 10 { "," } else { "" };
        self.cycles()
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(u32::to_string).collect();
                format!("({})", body.join(sep))
            })
            .collect()
    }

    /// One-line notation, space separated.
    pub fn to_oneline(&self) -> String {
        self.images
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycles())
    }
}

/// Maximal runs `j-1, j-2, …, j-r+1` (labels mod `n`) appearing consecutively
/// inside a cycle of `p`, reported as `(j, r)` and sorted by `j`.
///
/// Only runs of at least two entries (`r ≥ 3`) are listed, since every single
/// entry is trivially a run. A cycle that descends by one all the way round,
/// which happens only for `i ↦ i-1`, has no start; it is reported once as
/// `(1, n)`.
pub fn detect_runs(p: &Permutation) -> Vec<(u32, u32)> {
    let n = p.n();
    if n < 2 {
        return Vec::new();
    }
    let down = |x: u32| if x == 1 { n } else { x - 1 };
    let descends = |x: u32| p.apply(x) == down(x);
    if (1..=n).all(descends) {
        return vec![(1, n)];
    }
    let mut out = Vec::new();
    for x in 1..=n {
        // x starts a maximal run when nothing descends into it
        if descends(x % n + 1) || !descends(x) {
            continue;
        }
        let mut entries = 1;
        let mut y = x;
        while descends(y) {
            y = down(y);
            entries += 1;
        }
        out.push((x % n + 1, entries + 1));
    }
    out.sort_unstable();
    out
}

//! Flip equivalence classes of tilings.
//!
//! Two tilings are flip equivalent exactly when their tiles with four or more
//! corners agree, so the sorted list of those tiles is a canonical class key.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint, Sign};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{self, binomial, shape_of, ShapePartition, DEFAULT_MAX_RANK};
use crate::error::{Error, Result};
use crate::scott::scott_perm;
use crate::tiling::{Diagonal, Tile, Tiling, Vertex};

/// The tiles of size at least four, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FlipClassKey {
    pub n: u32,
    pub big_tiles: Vec<Tile>,
}

impl std::fmt::Display for FlipClassKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tiles: Vec<String> = self.big_tiles.iter().map(Tile::to_string).collect();
        write!(f, "{}:[{}]", self.n, tiles.join(","))
    }
}

pub fn class_key(t: &Tiling) -> FlipClassKey {
    // tiles come back sorted, so filtering keeps the order canonical
    FlipClassKey {
        n: t.n(),
        big_tiles: t.tiles().into_iter().filter(|q| q.len() >= 4).collect(),
    }
}

pub fn same_class(t1: &Tiling, t2: &Tiling) -> Result<bool> {
    if t1.n() != t2.n() {
        return Err(Error::RankMismatch(t1.n(), t2.n()));
    }
    Ok(class_key(t1) == class_key(t2))
}

/// Every tiling reachable from `t` by flips, found breadth first; `t` comes first.
pub fn flip_class(t: &Tiling) -> Vec<Tiling> {
    let mut seen: HashSet<Tiling> = HashSet::from([t.clone()]);
    let mut order = vec![t.clone()];
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(cur) = queue.pop_front() {
        for d in cur.flippable_diagonals() {
            let next = cur.flip(&d).expect("flippable");
            if seen.insert(next.clone()) {
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    order
}

/// The class member whose triangulated regions are fans from each region's
/// smallest vertex.
pub fn representative(t: &Tiling) -> Tiling {
    let sub = t.subdivision();
    let tiles = sub.tiles();
    let mut parent: Vec<usize> = (0..tiles.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut kept = Vec::new();
    for d in t.diagonals() {
        let x = sub.tile_on_side(d.a(), d.b()).expect("side");
        let y = sub.tile_on_side(d.b(), d.a()).expect("side");
        if tiles[x].len() == 3 && tiles[y].len() == 3 {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx] = ry;
        } else {
            kept.push(*d);
        }
    }
    let mut regions: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for (i, q) in tiles.iter().enumerate() {
        if q.len() == 3 {
            let r = find(&mut parent, i);
            regions.entry(r).or_default().extend_from_slice(q.vertices());
        }
    }
    for mut vs in regions.into_values() {
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs[2..vs.len() - 1] {
            kept.push(Diagonal::new_unchecked(vs[0], v));
        }
    }
    Tiling::from_unsorted_unchecked(t.n(), kept)
}

/// One representative per class, keyed by class.
pub fn class_representatives(n: u32) -> Result<BTreeMap<FlipClassKey, Tiling>> {
    class_representatives_bounded(n, DEFAULT_MAX_RANK)
}

pub fn class_representatives_bounded(n: u32, max_rank: u32) -> Result<BTreeMap<FlipClassKey, Tiling>> {
    let all = enumerate::generate_all_bounded(n, max_rank)?;
    let mut out = BTreeMap::new();
    for t in &all {
        out.entry(class_key(t)).or_insert_with(|| representative(t));
    }
    Ok(out)
}

/// Number of distinct class keys over `A_n`.
pub fn count_classes(n: u32) -> Result<usize> {
    count_classes_bounded(n, DEFAULT_MAX_RANK)
}

pub fn count_classes_bounded(n: u32, max_rank: u32) -> Result<usize> {
    let all = enumerate::generate_all_bounded(n, max_rank)?;
    Ok(distinct_keys(&all).len())
}

/// Number of distinct Scott permutations over `A_n`; equal to the class count.
pub fn count_scott_images(n: u32) -> Result<usize> {
    count_scott_images_bounded(n, DEFAULT_MAX_RANK)
}

pub fn count_scott_images_bounded(n: u32, max_rank: u32) -> Result<usize> {
    let all = enumerate::generate_all_bounded(n, max_rank)?;
    let perms: HashSet<_> = all.par_iter().map(scott_perm).collect();
    Ok(perms.len())
}

fn distinct_keys(tilings: &[Tiling]) -> HashSet<FlipClassKey> {
    tilings.par_iter().map(class_key).collect()
}

pub fn count_classes_by_lambda(n: u32, lambda: &ShapePartition) -> Result<usize> {
    Ok(distinct_keys(&enumerate::generate_by_lambda(n, lambda)?).len())
}

/// Class counts for every shape occurring in `A_n`.
pub fn class_counts_by_lambda(n: u32, max_rank: u32) -> Result<HashMap<ShapePartition, usize>> {
    let all = enumerate::generate_all_bounded(n, max_rank)?;
    let keyed: HashSet<(ShapePartition, FlipClassKey)> =
        all.par_iter().map(|t| (shape_of(t), class_key(t))).collect();
    let mut out = HashMap::new();
    for (lambda, _) in keyed {
        *out.entry(lambda).or_insert(0) += 1;
    }
    Ok(out)
}

/// Class counts split by number of diagonals, `m = 0..=n-3`.
pub fn class_counts_by_m(n: u32, max_rank: u32) -> Result<Vec<usize>> {
    let all = enumerate::generate_all_bounded(n, max_rank)?;
    let mut out = vec![0; n as usize - 2];
    for t in distinct_representatives(&all) {
        out[t.num_diagonals()] += 1;
    }
    Ok(out)
}

fn distinct_representatives(all: &[Tiling]) -> Vec<Tiling> {
    let mut seen = HashSet::new();
    all.iter()
        .filter(|t| seen.insert(class_key(t)))
        .cloned()
        .collect()
}

/// `|ÆE_n(λ)|` by inclusion-exclusion over adjacent triangles, with `a_n(λ)`
/// read from enumeration. Covers at most four triangles.
pub fn reduction_formula(n: u32, lambda: &ShapePartition) -> Result<BigUint> {
    let counts = enumerate::lambda_counts(n, DEFAULT_MAX_RANK)?;
    reduction_formula_with(n, lambda, |mu| {
        Ok(BigUint::from(counts.get(mu).copied().unwrap_or(0)))
    })
}

/// As [`reduction_formula`] with `a_n(λ)` from the closed product formula,
/// so no enumeration is needed.
pub fn reduction_formula_closed(n: u32, lambda: &ShapePartition) -> Result<BigUint> {
    reduction_formula_with(n, lambda, |mu| enumerate::a_n_lambda_formula(n, mu))
}

/// The reduction formula with a caller-supplied `a_n(·)`.
pub fn reduction_formula_with<F>(n: u32, lambda: &ShapePartition, a: F) -> Result<BigUint>
where
    F: Fn(&ShapePartition) -> Result<BigUint>,
{
    if lambda.size() + 2 != n {
        return Err(Error::BadPartition(format!("{lambda} for rank {n}")));
    }
    let alpha = |d: u32| BigInt::from(lambda.alpha(d));
    let one = BigInt::from(1);
    let term = |remove: &[u32], add: &[u32]| -> Result<BigInt> {
        let mu = lambda
            .replace(remove, add)
            .ok_or_else(|| Error::BadPartition(format!("{lambda}")))?;
        Ok(BigInt::from(a(&mu)?))
    };
    let base = BigInt::from(a(lambda)?);
    let value = match lambda.alpha(1) {
        0 | 1 => base,
        2 => base - (alpha(2) + &one) * term(&[1, 1], &[2])?,
        3 => {
            base - (alpha(2) + &one) * term(&[1, 1], &[2])?
                + (alpha(3) + &one) * term(&[1, 1, 1], &[3])?
        }
        4 => {
            let a2 = lambda.alpha(2) as u64;
            base - (alpha(4) + &one) * term(&[1, 1, 1, 1], &[4])?
                + (alpha(3) + &one) * term(&[1, 1, 1], &[3])?
                + BigInt::from(binomial(a2 + 2, 2)) * term(&[1, 1, 1, 1], &[2, 2])?
                - (alpha(2) + &one) * term(&[1, 1], &[2])?
        }
        k => return Err(Error::UnsupportedAlphaOne(k)),
    };
    match value.to_biguint() {
        Some(v) if value.sign() != Sign::Minus => Ok(v),
        _ => Err(Error::BadPartition(format!("negative count for {lambda}"))),
    }
}

/// `|ÆE_n((r-2) 1^{n-r})| = C(n, r)`: one `r`-gon plus triangles, `3 < r ≤ n`.
/// With `r = 3` the shape is all triangles and the single class is counted.
pub fn binomial_case(n: u32, r: u32) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidRank(n));
    }
    if r < 3 || r > n {
        return Err(Error::OutOfRange { n, value: r });
    }
    if r == 3 {
        return Ok(BigUint::from(1u32));
    }
    Ok(binomial(n as u64, r as u64))
}

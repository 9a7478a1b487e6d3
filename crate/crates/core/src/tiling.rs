//! Polygon tilings.
//!
//! Vertices of the `n`-gon are labelled `1..=n` clockwise; the boundary edge
//! `[i, i+1]` is taken mod `n`, so `[n, 1]` is an edge. A [`Tiling`] is a set of
//! pairwise non-crossing diagonals and its tiles are recovered by walking the
//! planar subdivision: at every vertex the incident diagonals and the two
//! boundary edges are ordered by clockwise vertex distance, which is the
//! angular order in a convex drawing. No coordinates are ever used.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polygon vertex label, `1..=n`.
pub type Vertex = u32;

/// Clockwise distance from `from` to `to` on the `n`-gon, in `0..n`.
#[inline]
pub fn cw_dist(n: u32, from: Vertex, to: Vertex) -> u32 {
    (to + n - from) % n
}

/// Successor of `v` on the `n`-gon boundary (`n` wraps to `1`).
#[inline]
pub fn next_vertex(n: u32, v: Vertex) -> Vertex {
    v % n + 1
}

/// Predecessor of `v` on the `n`-gon boundary (`1` wraps to `n`).
#[inline]
pub fn prev_vertex(n: u32, v: Vertex) -> Vertex {
    if v == 1 {
        n
    } else {
        v - 1
    }
}

/// `v + k` reduced into `1..=n`; `k` may be negative.
#[inline]
pub fn shift_vertex(n: u32, v: Vertex, k: i64) -> Vertex {
    ((v as i64 - 1 + k).rem_euclid(n as i64) + 1) as Vertex
}

/// A diagonal `[a, b]` stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    a: Vertex,
    b: Vertex,
}

impl Diagonal {
    /// Validates and normalizes a diagonal of the `n`-gon.
    pub fn new(n: u32, x: Vertex, y: Vertex) -> Result<Self> {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        if a < 1 || b > n || b - a < 2 || b - a > n.saturating_sub(2) {
            return Err(Error::InvalidDiagonal { n, a: x, b: y });
        }
        Ok(Diagonal { a, b })
    }

    pub(crate) fn new_unchecked(x: Vertex, y: Vertex) -> Self {
        if x < y {
            Diagonal { a: x, b: y }
        } else {
            Diagonal { a: y, b: x }
        }
    }

    pub fn a(&self) -> Vertex {
        self.a
    }

    pub fn b(&self) -> Vertex {
        self.b
    }

    pub fn has_endpoint(&self, v: Vertex) -> bool {
        self.a == v || self.b == v
    }

    /// True when the two diagonals interleave.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (a, b, c, d) = (self.a, self.b, other.a, other.b);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// A tile, identified with its vertex set listed in increasing order
/// (clockwise starting from the minimum).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tile(Vec<Vertex>);

impl Tile {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() < 3 || vertices[0] == 0 {
            return Err(Error::MalformedInput(format!("tile {vertices:?}")));
        }
        Ok(Tile(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    fn index_of(&self, v: Vertex) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    /// Clockwise successor of corner `v` within the tile.
    pub fn succ(&self, v: Vertex) -> Option<Vertex> {
        let i = self.index_of(v)?;
        Some(self.0[(i + 1) % self.0.len()])
    }

    /// Clockwise predecessor of corner `v` within the tile.
    pub fn pred(&self, v: Vertex) -> Option<Vertex> {
        let i = self.index_of(v)?;
        Some(self.0[(i + self.0.len() - 1) % self.0.len()])
    }

    /// Sides as clockwise pairs `(q_i, q_{i+1})`, closing with `(q_r, q_1)`.
    pub fn sides(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let r = self.0.len();
        (0..r).map(move |i| (self.0[i], self.0[(i + 1) % r]))
    }

    /// Number of sides of the tile that are diagonals rather than polygon edges.
    pub fn diagonal_sides(&self, n: u32) -> usize {
        self.sides().filter(|&(u, v)| !is_boundary_edge(n, u, v)).count()
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// True when `u`, `v` are adjacent on the `n`-gon boundary.
#[inline]
pub fn is_boundary_edge(n: u32, u: Vertex, v: Vertex) -> bool {
    next_vertex(n, u) == v || next_vertex(n, v) == u
}

/// The interval partitions `I(Q)` and `J(Q)` of `1..=n` induced by a tile:
/// `I_i = [q_i, q_{i+1})` and `J_i = (q_i, q_{i+1}]`, read cyclically.
pub fn tile_partitions(tile: &Tile, n: u32) -> (Vec<Vec<Vertex>>, Vec<Vec<Vertex>>) {
    let mut ip = Vec::with_capacity(tile.len());
    let mut jp = Vec::with_capacity(tile.len());
    for (q, q_next) in tile.sides() {
        let span = cw_dist(n, q, q_next);
        let span = if span == 0 { n } else { span };
        ip.push((0..span).map(|k| shift_vertex(n, q, k as i64)).collect());
        jp.push((1..=span).map(|k| shift_vertex(n, q, k as i64)).collect());
    }
    (ip, jp)
}

/// A set of pairwise non-crossing diagonals of the `n`-gon.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TilingRepr", into = "TilingRepr")]
pub struct Tiling {
    n: u32,
    diagonals: Vec<Diagonal>,
}

#[derive(Serialize, Deserialize)]
struct TilingRepr {
    n: u32,
    diagonals: Vec<[Vertex; 2]>,
}

impl TryFrom<TilingRepr> for Tiling {
    type Error = Error;
    fn try_from(r: TilingRepr) -> Result<Self> {
        Tiling::new(r.n, r.diagonals.iter().map(|d| (d[0], d[1])))
    }
}

impl From<Tiling> for TilingRepr {
    fn from(t: Tiling) -> Self {
        TilingRepr {
            n: t.n,
            diagonals: t.diagonals.iter().map(|d| [d.a, d.b]).collect(),
        }
    }
}

impl Tiling {
    /// Builds and validates a tiling from vertex pairs.
    pub fn new<I>(n: u32, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n < 3 {
            return Err(Error::InvalidRank(n));
        }
        let mut diagonals = pairs
            .into_iter()
            .map(|(x, y)| Diagonal::new(n, x, y))
            .collect::<Result<Vec<_>>>()?;
        diagonals.sort_unstable();
        for w in diagonals.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateDiagonal { a: w[0].a, b: w[0].b });
            }
        }
        for (i, d) in diagonals.iter().enumerate() {
            for e in &diagonals[i + 1..] {
                if d.crosses(e) {
                    return Err(Error::CrossingDiagonals(d.a, d.b, e.a, e.b));
                }
            }
        }
        Ok(Tiling { n, diagonals })
    }

    /// The tiling with no diagonals.
    pub fn untile(n: u32) -> Result<Self> {
        Tiling::new(n, std::iter::empty())
    }

    pub(crate) fn from_unsorted_unchecked(n: u32, mut diagonals: Vec<Diagonal>) -> Self {
        diagonals.sort_unstable();
        Tiling { n, diagonals }
    }

    /// Parses the `"2-8,3-5,5-8"` flag syntax; the empty string is the untile.
    pub fn parse(n: u32, list: &str) -> Result<Self> {
        Tiling::new(n, parse_diagonal_list(list)?)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn num_diagonals(&self) -> usize {
        self.diagonals.len()
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.binary_search(d).is_ok()
    }

    pub fn is_triangulation(&self) -> bool {
        self.diagonals.len() + 3 == self.n as usize
    }

    /// A vertex is simple when no diagonal ends at it.
    pub fn is_simple_vertex(&self, v: Vertex) -> bool {
        !self.diagonals.iter().any(|d| d.has_endpoint(v))
    }

    /// Flag-syntax rendering, e.g. `2-8,3-5,5-8`.
    pub fn diagonal_list(&self) -> String {
        self.diagonals
            .iter()
            .map(|d| format!("{}-{}", d.a, d.b))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Recovers the tiles together with the directed-side lookup.
    pub fn subdivision(&self) -> Subdivision {
        Subdivision::new(self)
    }

    /// Tiles in lexicographic order of their vertex lists.
    pub fn tiles(&self) -> Vec<Tile> {
        self.subdivision().tiles
    }

    pub fn dual_tree(&self) -> DualTree {
        let sub = self.subdivision();
        let edges = self
            .diagonals
            .iter()
            .map(|d| {
                let x = sub.tile_on_side(d.a, d.b).expect("diagonal side");
                let y = sub.tile_on_side(d.b, d.a).expect("diagonal side");
                (x.min(y), x.max(y), *d)
            })
            .collect();
        DualTree {
            nodes: sub.tiles,
            edges,
        }
    }

    /// Tiles with exactly one diagonal side. Empty for the untile.
    pub fn ears(&self) -> Vec<Tile> {
        if self.diagonals.is_empty() {
            return Vec::new();
        }
        self.tiles()
            .into_iter()
            .filter(|t| t.diagonal_sides(self.n) == 1)
            .collect()
    }

    /// Boundary edges `(i, i+1)` whose endpoints are both simple; `[n,1]` is reported as `(n, 1)`.
    pub fn simple_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut touched = vec![false; self.n as usize + 1];
        for d in &self.diagonals {
            touched[d.a as usize] = true;
            touched[d.b as usize] = true;
        }
        (1..=self.n)
            .filter_map(|i| {
                let j = next_vertex(self.n, i);
                (!touched[i as usize] && !touched[j as usize]).then_some((i, j))
            })
            .collect()
    }

    /// Replaces `d` by the other diagonal of the quadrilateral formed by its two triangles.
    pub fn flip(&self, d: &Diagonal) -> Result<Tiling> {
        if !self.contains(d) {
            return Err(Error::NotPresent { a: d.a, b: d.b });
        }
        let sub = self.subdivision();
        let left = &sub.tiles[sub.tile_on_side(d.a, d.b).expect("side")];
        let right = &sub.tiles[sub.tile_on_side(d.b, d.a).expect("side")];
        if left.len() != 3 || right.len() != 3 {
            return Err(Error::NotFlippable { a: d.a, b: d.b });
        }
        let c = left.succ(d.b).expect("corner");
        let e = right.succ(d.a).expect("corner");
        let mut diagonals: Vec<Diagonal> =
            self.diagonals.iter().copied().filter(|x| x != d).collect();
        diagonals.push(Diagonal::new_unchecked(c, e));
        Ok(Tiling::from_unsorted_unchecked(self.n, diagonals))
    }

    /// Diagonals whose two incident tiles are triangles.
    pub fn flippable_diagonals(&self) -> Vec<Diagonal> {
        let sub = self.subdivision();
        self.diagonals
            .iter()
            .copied()
            .filter(|d| {
                sub.tiles[sub.tile_on_side(d.a, d.b).expect("side")].len() == 3
                    && sub.tiles[sub.tile_on_side(d.b, d.a).expect("side")].len() == 3
            })
            .collect()
    }

    /// Restricts to the sub-polygon on `vertices` (any order) and relabels it
    /// `1..=k` by increasing vertex label, which preserves clockwise order.
    ///
    /// The sub-polygon's sides must be edges or diagonals of `self`, which is
    /// the case for the two sides of any diagonal and for unions of tiles.
    pub fn restrict(&self, vertices: &[Vertex]) -> Result<Tiling> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let k = vs.len() as u32;
        if k < 3 {
            return Err(Error::InvalidRank(k));
        }
        for (i, &u) in vs.iter().enumerate() {
            let v = vs[(i + 1) % vs.len()];
            if !is_boundary_edge(self.n, u, v) && !self.contains(&Diagonal::new_unchecked(u, v)) {
                return Err(Error::MalformedInput(format!(
                    "[{u},{v}] is not a side of the sub-polygon"
                )));
            }
        }
        let rank = |v: Vertex| vs.binary_search(&v).ok().map(|i| i as u32 + 1);
        let diagonals = self
            .diagonals
            .iter()
            .filter_map(|d| {
                let (x, y) = (rank(d.a)?, rank(d.b)?);
                (y - x >= 2 && y - x <= k - 2).then(|| Diagonal::new_unchecked(x, y))
            })
            .collect();
        Ok(Tiling::from_unsorted_unchecked(k, diagonals))
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{{}}})", self.n, self.diagonal_list())
    }
}

/// Parses `"2-8,3-5"` into vertex pairs. Whitespace is ignored.
pub fn parse_diagonal_list(list: &str) -> Result<Vec<(Vertex, Vertex)>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (x, y) = item
                .split_once('-')
                .ok_or_else(|| Error::MalformedInput(format!("diagonal `{item}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<Vertex>()
                    .map_err(|_| Error::MalformedInput(format!("diagonal `{item}`")))
            };
            Ok((parse(x)?, parse(y)?))
        })
        .collect()
}

/// Tiles of a tiling plus a lookup from clockwise directed sides to tiles.
#[derive(Clone, Debug)]
pub struct Subdivision {
    n: u32,
    tiles: Vec<Tile>,
    // (u-1)*n + (v-1) -> tile index, u32::MAX when (u,v) is not a clockwise tile side
    side_owner: Vec<u32>,
}

impl Subdivision {
    fn new(t: &Tiling) -> Self {
        let n = t.n;
        let nn = n as usize;
        // neighbours of each vertex in clockwise-distance (angular) order
        let mut nbrs: Vec<Vec<Vertex>> = (1..=n)
            .map(|v| vec![next_vertex(n, v), prev_vertex(n, v)])
            .collect();
        for d in &t.diagonals {
            nbrs[d.a as usize - 1].push(d.b);
            nbrs[d.b as usize - 1].push(d.a);
        }
        for (i, list) in nbrs.iter_mut().enumerate() {
            let v = i as u32 + 1;
            list.sort_unstable_by_key(|&w| cw_dist(n, v, w));
        }

        let mut side_owner = vec![u32::MAX; nn * nn];
        let idx = |u: Vertex, v: Vertex| (u as usize - 1) * nn + (v as usize - 1);
        let mut raw: Vec<Vec<Vertex>> = Vec::with_capacity(t.diagonals.len() + 1);
        let starts = (1..=n)
            .map(|i| (i, next_vertex(n, i)))
            .chain(t.diagonals.iter().flat_map(|d| [(d.a, d.b), (d.b, d.a)]));
        for (u0, v0) in starts {
            if side_owner[idx(u0, v0)] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            let mut verts = Vec::new();
            let (mut u, mut v) = (u0, v0);
            loop {
                side_owner[idx(u, v)] = id;
                verts.push(u);
                // next corner: the neighbour of v just before u in angular order
                let list = &nbrs[v as usize - 1];
                let pos = list.iter().position(|&w| w == u).expect("neighbour");
                let w = list[pos - 1];
                u = v;
                v = w;
                if (u, v) == (u0, v0) {
                    break;
                }
            }
            raw.push(verts);
        }

        // sort tiles canonically and remap owners
        let mut order: Vec<usize> = (0..raw.len()).collect();
        let mut tiles: Vec<Tile> = raw
            .into_iter()
            .map(|mut v| {
                v.sort_unstable();
                Tile(v)
            })
            .collect();
        order.sort_by(|&x, &y| tiles[x].cmp(&tiles[y]));
        let mut remap = vec![0u32; order.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
        }
        for o in side_owner.iter_mut().filter(|o| **o != u32::MAX) {
            *o = remap[*o as usize];
        }
        let mut sorted = Vec::with_capacity(tiles.len());
        for &old in &order {
            sorted.push(std::mem::replace(&mut tiles[old], Tile(Vec::new())));
        }
        Subdivision {
            n,
            tiles: sorted,
            side_owner,
        }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn into_tiles(self) -> Vec<Tile> {
        self.tiles
    }

    /// Index of the tile having `(u, v)` as a clockwise side.
    pub fn tile_on_side(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let nn = self.n as usize;
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return None;
        }
        let o = self.side_owner[(u as usize - 1) * nn + (v as usize - 1)];
        (o != u32::MAX).then_some(o as usize)
    }

    /// Tiles incident to vertex `v`, ordered clockwise around `v` starting
    /// from the tile on the boundary edge `[v, v+1]`.
    pub fn tiles_at(&self, v: Vertex) -> Vec<usize> {
        let mut out = Vec::new();
        let mut u = next_vertex(self.n, v);
        loop {
            let t = self.tile_on_side(v, u).expect("side at vertex");
            out.push(t);
            let w = self.tiles[t].pred(v).expect("corner");
            if w == prev_vertex(self.n, v) {
                break;
            }
            u = w;
        }
        out
    }
}

/// The open dual of a tiling: tiles joined across shared diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTree {
    pub nodes: Vec<Tile>,
    /// `(tile, tile, shared diagonal)` with the smaller tile index first.
    pub edges: Vec<(usize, usize, Diagonal)>,
}

impl DualTree {
    /// Connected with `|edges| = |nodes| - 1`.
    pub fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.nodes.len() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(x, y, _) in &self.edges {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx == ry {
                return false;
            }
            parent[rx] = ry;
        }
        true
    }
}

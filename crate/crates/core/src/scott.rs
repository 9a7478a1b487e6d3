//! Strands of a tiling and the Scott permutation.
//!
//! Inside a tile with clockwise corners `p_1, …, p_r`, the segment attached to
//! the side `p_i → p_{i+1}` runs from just after `p_{i+1}` to just before
//! `p_i`. A strand entering a tile at `v⁺` (next to corner `v`) follows the
//! segment of the side ending at `v`. It leaves across the side that ends at
//! the segment's far corner. Leaving through a polygon edge ends the strand;
//! leaving through a diagonal continues it in the neighbouring tile.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tiling::{is_boundary_edge, next_vertex, Diagonal, Subdivision, Tile, Tiling, Vertex};

pub use crate::perm::{detect_runs, Permutation};

/// One strand segment: the tile and the clockwise side `(u, v)` it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    pub tile: usize,
    pub side: (Vertex, Vertex),
}

/// A strand `start ⟿ end` with the segments it uses, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Strand {
    pub start: Vertex,
    pub end: Vertex,
    pub trace: Vec<Segment>,
}

/// How a strand meets a tile `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StrandClass {
    /// The strand uses a segment of `Q`.
    Long,
    /// No segment of `Q`, but the strand starts or ends at a corner of `Q`.
    Short,
    NotIncident,
}

/// Walks the strand starting at `x`, calling `visit` on each segment.
fn walk(sub: &Subdivision, n: u32, x: Vertex, mut visit: impl FnMut(usize, Vertex, Vertex)) -> Vertex {
    let mut t = sub.tile_on_side(x, next_vertex(n, x)).expect("boundary edge");
    let mut v = x;
    loop {
        let tile = &sub.tiles()[t];
        let u = tile.pred(v).expect("corner");
        visit(t, u, v);
        let w = tile.pred(u).expect("corner");
        if is_boundary_edge(n, w, u) {
            return u;
        }
        t = sub.tile_on_side(u, w).expect("diagonal side");
        v = u;
    }
}

/// The `n` strands of `Σ(T)`, indexed by starting vertex (`result[x-1]` starts at `x`).
pub fn scott_strands(t: &Tiling) -> Vec<Strand> {
    let sub = t.subdivision();
    strands_in(&sub, t.n())
}

pub(crate) fn strands_in(sub: &Subdivision, n: u32) -> Vec<Strand> {
    (1..=n)
        .map(|x| {
            let mut trace = Vec::new();
            let end = walk(sub, n, x, |tile, u, v| trace.push(Segment { tile, side: (u, v) }));
            Strand { start: x, end, trace }
        })
        .collect()
}

/// The Scott permutation: `σ(x) = y` for each strand `x ⟿ y`.
pub fn scott_perm(t: &Tiling) -> Permutation {
    let sub = t.subdivision();
    perm_in(&sub, t.n())
}

pub(crate) fn perm_in(sub: &Subdivision, n: u32) -> Permutation {
    Permutation::from_images_unchecked((1..=n).map(|x| walk(sub, n, x, |_, _, _| {})).collect())
}

/// Classifies a strand against a tile of the same tiling.
pub fn strand_class(s: &Strand, q: &Tile) -> StrandClass {
    let uses_q = s.trace.iter().any(|seg| q.succ(seg.side.0) == Some(seg.side.1));
    if uses_q {
        StrandClass::Long
    } else if q.contains(s.start) || q.contains(s.end) {
        StrandClass::Short
    } else {
        StrandClass::NotIncident
    }
}

/// A crossing of two strands inside a tile, next to one of its corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub tile: usize,
    pub corner: Vertex,
    /// Start vertices of the strand on side `(pred(corner), corner)` and of the
    /// strand on side `(corner, succ(corner))`.
    pub strands: (Vertex, Vertex),
}

/// Every crossing of `Σ(T)`: two segments of a tile cross exactly when their
/// sides share a corner.
pub fn crossings(t: &Tiling) -> Vec<Crossing> {
    let sub = t.subdivision();
    let n = t.n();
    let mut owner = std::collections::HashMap::new();
    for s in strands_in(&sub, n) {
        for seg in &s.trace {
            owner.insert(seg.side, s.start);
        }
    }
    let mut out = Vec::new();
    for (ti, tile) in sub.tiles().iter().enumerate() {
        for &v in tile.vertices() {
            let a = owner[&(tile.pred(v).expect("corner"), v)];
            let b = owner[&(v, tile.succ(v).expect("corner"))];
            out.push(Crossing {
                tile: ti,
                corner: v,
                strands: (a, b),
            });
        }
    }
    out
}

/// Scott permutations of the two sides of a diagonal `[a, b]`: first the
/// polygon on `a, a+1, …, b`, then the one on `b, …, n, 1, …, a`, each
/// relabelled `1..k` in increasing vertex order.
pub fn restrict_scott(t: &Tiling, d: &Diagonal) -> Result<(Permutation, Permutation)> {
    if !t.contains(d) {
        return Err(Error::NotPresent { a: d.a(), b: d.b() });
    }
    let inner: Vec<Vertex> = (d.a()..=d.b()).collect();
    let outer: Vec<Vertex> = (d.b()..=t.n()).chain(1..=d.a()).collect();
    Ok((
        scott_perm(&t.restrict(&inner)?),
        scott_perm(&t.restrict(&outer)?),
    ))
}

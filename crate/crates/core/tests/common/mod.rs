//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's own enumeration or tracing code.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Diag = (u32, u32);

/// All diagonals of the n-gon, lexicographic.
pub fn all_diagonals(n: u32) -> Vec<Diag> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 2..=n {
            if !(a == 1 && b == n) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn cross(d: Diag, e: Diag) -> bool {
    let inside = |x: u32| d.0 < x && x < d.1;
    let shares = d.0 == e.0 || d.0 == e.1 || d.1 == e.0 || d.1 == e.1;
    !shares && (inside(e.0) != inside(e.1))
}

/// Every set of pairwise non-crossing diagonals, by include/exclude backtracking.
pub fn oracle_tilings(n: u32) -> Vec<Vec<Diag>> {
    fn go(ds: &[Diag], i: usize, cur: &mut Vec<Diag>, out: &mut Vec<Vec<Diag>>) {
        if i == ds.len() {
            out.push(cur.clone());
            return;
        }
        go(ds, i + 1, cur, out);
        if cur.iter().all(|&c| !cross(c, ds[i])) {
            cur.push(ds[i]);
            go(ds, i + 1, cur, out);
            cur.pop();
        }
    }
    let ds = all_diagonals(n);
    let mut out = Vec::new();
    go(&ds, 0, &mut Vec::new(), &mut out);
    out
}

/// Tiles as sorted vertex lists, by cutting the polygon along each diagonal.
pub fn oracle_tiles(n: u32, diags: &[Diag]) -> Vec<Vec<u32>> {
    let mut tiles: Vec<Vec<u32>> = vec![(1..=n).collect()];
    for &(a, b) in diags {
        let k = tiles
            .iter()
            .position(|t| t.contains(&a) && t.contains(&b))
            .expect("diagonal inside some tile");
        let t = tiles.remove(k);
        let left: Vec<u32> = t.iter().copied().filter(|&x| a <= x && x <= b).collect();
        let right: Vec<u32> = t.iter().copied().filter(|&x| x <= a || x >= b).collect();
        tiles.push(left);
        tiles.push(right);
    }
    tiles.sort();
    tiles
}

fn next(n: u32, v: u32) -> u32 {
    v % n + 1
}

fn prev_in(t: &[u32], v: u32) -> u32 {
    let i = t.iter().position(|&x| x == v).unwrap();
    t[(i + t.len() - 1) % t.len()]
}

fn is_edge(n: u32, u: u32, v: u32) -> bool {
    next(n, u) == v || next(n, v) == u
}

/// Tile index and entry side for each step of a strand.
pub type Trace = Vec<(usize, (u32, u32))>;

/// Strand from `x` as a list of (tile, side) segments and its end vertex.
/// Inside a tile, entering next to corner `v`, the strand runs along the side
/// ending at `v` and leaves across the side before it.
pub fn oracle_strand(n: u32, tiles: &[Vec<u32>], x: u32) -> (u32, Trace) {
    let holding = |u: u32, v: u32| {
        tiles
            .iter()
            .position(|t| {
                let i = t.iter().position(|&z| z == u);
                i.is_some_and(|i| t[(i + 1) % t.len()] == v)
            })
            .unwrap()
    };
    let mut t = holding(x, next(n, x));
    let mut v = x;
    let mut trace = Vec::new();
    loop {
        let u = prev_in(&tiles[t], v);
        trace.push((t, (u, v)));
        let w = prev_in(&tiles[t], u);
        if is_edge(n, w, u) {
            return (u, trace);
        }
        t = holding(u, w);
        v = u;
        assert!(trace.len() <= 4 * n as usize, "strand does not terminate");
    }
}

pub fn oracle_scott(n: u32, diags: &[Diag]) -> Vec<u32> {
    let tiles = oracle_tiles(n, diags);
    (1..=n).map(|x| oracle_strand(n, &tiles, x).0).collect()
}

/// Multiset of tiles with at least four corners.
pub fn oracle_key(n: u32, diags: &[Diag]) -> BTreeSet<Vec<u32>> {
    oracle_tiles(n, diags).into_iter().filter(|t| t.len() >= 4).collect()
}

/// Tile sizes minus two, descending.
pub fn oracle_shape(n: u32, diags: &[Diag]) -> Vec<u32> {
    let mut s: Vec<u32> = oracle_tiles(n, diags).iter().map(|t| t.len() as u32 - 2).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

pub fn oracle_simple_vertices(n: u32, diags: &[Diag]) -> Vec<u32> {
    (1..=n)
        .filter(|&v| diags.iter().all(|&(a, b)| a != v && b != v))
        .collect()
}

/// Binomial coefficient in u128.
pub fn choose(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..b {
        r = r * (a - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Values of a_n(m), n = 3..10, as printed (row n, entries m = 0..).
pub const TABLE_ANM: &[(u32, u64, &[u64])] = &[
    (3, 1, &[1]),
    (4, 3, &[1, 2]),
    (5, 11, &[1, 5, 5]),
    (6, 45, &[1, 9, 21, 14]),
    (7, 197, &[1, 14, 56, 84, 42]),
    (8, 903, &[1, 20, 120, 300, 330, 132]),
    (9, 4279, &[1, 27, 225, 825, 1485, 1287, 429]),
    (10, 20793, &[1, 35, 385, 1925, 5005, 7007, 5005, 1430]),
];

/// Sizes of the flip-class sets by number of diagonals, n = 3..10.
pub const TABLE_AEN: &[(u32, u64, &[u64])] = &[
    (3, 1, &[1]),
    (4, 2, &[1, 1]),
    (5, 7, &[1, 5, 1]),
    (6, 26, &[1, 9, 15, 1]),
    (7, 100, &[1, 14, 49, 35, 1]),
    (8, 404, &[1, 20, 112, 200, 70, 1]),
    (9, 1691, &[1, 27, 216, 654, 666, 126, 1]),
    (10, 7254, &[1, 35, 375, 1660, 3070, 1902, 210, 1]),
];

/// |A_n(λ)| cells.
pub const TABLE_AN_LAMBDA: &[(u32, &str, u64)] = &[
    (3, "1", 1),
    (4, "2", 1),
    (4, "1^2", 2),
    (5, "3", 1),
    (5, "2 1", 5),
    (5, "1^3", 5),
    (6, "4", 1),
    (6, "3 1", 6),
    (6, "2^2", 3),
    (6, "2 1^2", 21),
    (6, "1^4", 14),
    (7, "5", 1),
    (7, "4 1", 7),
    (7, "3 2", 7),
    (7, "3 1^2", 28),
    (7, "2^2 1", 28),
    (7, "2 1^3", 84),
    (7, "1^5", 42),
    (8, "6", 1),
    (8, "5 1", 8),
    (8, "4 2", 8),
    (8, "3^2", 4),
    (8, "4 1^2", 36),
    (8, "3 2 1", 72),
    (8, "2^3", 12),
    (8, "3 1^3", 120),
    (8, "2^2 1^2", 180),
    (8, "2 1^4", 330),
    (8, "1^6", 132),
    (9, "7", 1),
    (9, "6 1", 9),
    (9, "5 2", 9),
    (9, "4 3", 9),
    (9, "5 1^2", 45),
    (9, "4 2 1", 90),
    (9, "3^2 1", 45),
    (9, "3 2^2", 45),
    (9, "4 1^3", 165),
    (9, "3 2 1^2", 495),
    (9, "2^3 1", 165),
    (9, "3 1^4", 495),
    (9, "2^2 1^3", 990),
    (9, "2 1^5", 1287),
    (9, "1^7", 429),
    (10, "8", 1),
    (10, "7 1", 10),
    (10, "6 2", 10),
    (10, "5 3", 10),
    (10, "4^2", 5),
    (10, "6 1^2", 55),
    (10, "5 2 1", 110),
    (10, "4 3 1", 110),
    (10, "4 2^2", 55),
    (10, "3^2 2", 55),
    (10, "5 1^3", 220),
    (10, "4 2 1^2", 660),
    (10, "3^2 1^2", 330),
    (10, "3 2^2 1", 660),
    (10, "2^4", 55),
    (10, "4 1^4", 715),
    (10, "3 2 1^3", 2860),
    (10, "2^3 1^2", 1430),
    (10, "3 1^5", 2002),
    (10, "2^2 1^4", 5005),
    (10, "2 1^6", 5005),
    (10, "1^8", 1430),
];

/// Flip-class counts by shape.
pub const TABLE_AEN_LAMBDA: &[(u32, &str, u64)] = &[
    (3, "1", 1),
    (4, "2", 1),
    (4, "1^2", 1),
    (5, "3", 1),
    (5, "2 1", 5),
    (5, "1^3", 1),
    (6, "4", 1),
    (6, "3 1", 6),
    (6, "2^2", 3),
    (6, "2 1^2", 15),
    (6, "1^4", 1),
    (7, "5", 1),
    (7, "4 1", 7),
    (7, "3 2", 7),
    (7, "3 1^2", 21),
    (7, "2^2 1", 28),
    (7, "2 1^3", 35),
    (7, "1^5", 1),
    (8, "6", 1),
    (8, "5 1", 8),
    (8, "4 2", 8),
    (8, "3^2", 4),
    (8, "4 1^2", 28),
    (8, "3 2 1", 72),
    (8, "2^3", 12),
    (8, "3 1^3", 56),
    (8, "2^2 1^2", 144),
    (8, "2 1^4", 70),
    (8, "1^6", 1),
    (9, "7", 1),
    (9, "6 1", 9),
    (9, "5 2", 9),
    (9, "4 3", 9),
    (9, "5 1^2", 36),
    (9, "4 2 1", 90),
    (9, "3^2 1", 45),
    (9, "3 2^2", 45),
    (9, "4 1^3", 84),
    (9, "3 2 1^2", 405),
    (9, "2^3 1", 165),
    (9, "3 1^4", 126),
    (9, "2^2 1^3", 540),
    (9, "2 1^5", 126),
    (9, "1^7", 1),
    (10, "8", 1),
    (10, "7 1", 10),
    (10, "6 2", 10),
    (10, "5 3", 10),
    (10, "4^2", 5),
    (10, "6 1^2", 45),
    (10, "5 2 1", 110),
    (10, "4 3 1", 110),
    (10, "4 2^2", 55),
    (10, "3^2 2", 55),
    (10, "5 1^3", 120),
    (10, "4 2 1^2", 550),
    (10, "3^2 1^2", 275),
    (10, "3 2^2 1", 660),
    (10, "2^4", 55),
    (10, "4 1^4", 210),
    (10, "3 2 1^3", 1650),
    (10, "2^3 1^2", 1210),
    (10, "3 1^5", 252),
    (10, "2^2 1^4", 1650),
    (10, "2 1^6", 210),
    (10, "1^8", 1),
];

/// Printed ratios of consecutive flip-class counts, n = 4..10.
pub const TABLE_RATIOS: &[(u32, f64)] = &[
    (4, 2.0),
    (5, 3.5),
    (6, 3.71),
    (7, 3.85),
    (8, 4.04),
    (9, 4.19),
    (10, 4.29),
];

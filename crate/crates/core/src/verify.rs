//! Exhaustive property suites over `A_n`, shared by the CLI and the tests.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{a_n_formula, generate_all_bounded};
use crate::error::{Error, Result};
use crate::flipclasses::{class_key, count_classes_bounded, count_scott_images_bounded, flip_class, FlipClassKey};
use crate::perm::{detect_runs, Permutation};
use crate::plabic::{check_rhombic, diamond_class, g_inverse, g_map, move_diamond, trip_perm};
use crate::scott::{crossings, restrict_scott, scott_perm, scott_strands};
use crate::strandmap::{build_strand_map, is_absolute, is_minimalist, shrink, FaceClass};
use crate::tiling::{prev_vertex, shift_vertex, tile_partitions, Diagonal, Tile, Tiling, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemmas,
    MainTheorem,
    Bijections,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::MainTheorem => "main-theorem",
            Suite::Bijections => "bijections",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "main-theorem" => Ok(Suite::MainTheorem),
            "bijections" => Ok(Suite::Bijections),
            "all" => Ok(Suite::All),
            other => Err(Error::MalformedInput(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: String,
    pub counterexample: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySuiteResult {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

impl VerifySuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Failures of one property.
    pub fn failures_of(&self, property: &str) -> Vec<&Failure> {
        self.failures.iter().filter(|f| f.property == property).collect()
    }
}

/// Keeps at most this many counterexamples per property.
const MAX_REPORTED: usize = 20;

struct Recorder {
    checks: u64,
    failures: Vec<Failure>,
    per_property: HashMap<&'static str, usize>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            checks: 0,
            failures: Vec::new(),
            per_property: HashMap::new(),
        }
    }

    fn check(&mut self, property: &'static str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if ok {
            return;
        }
        let seen = self.per_property.entry(property).or_insert(0);
        *seen += 1;
        if *seen <= MAX_REPORTED {
            self.failures.push(Failure {
                property: property.to_string(),
                counterexample: witness(),
            });
        }
    }

    fn finish(self, suite: Suite) -> VerifySuiteResult {
        VerifySuiteResult {
            suite: suite.name().to_string(),
            checks: self.checks,
            failures: self.failures,
        }
    }
}

/// Runs `suite` over every `A_n` with `3 ≤ n ≤ max_n`.
pub fn run_suite(suite: Suite, max_n: u32, max_rank: u32) -> Result<VerifySuiteResult> {
    if max_n < 3 {
        return Err(Error::InvalidRank(max_n));
    }
    let mut rec = Recorder::new();
    for n in 3..=max_n {
        let all = generate_all_bounded(n, max_rank)?;
        if matches!(suite, Suite::Lemmas | Suite::All) {
            lemmas(&mut rec, n, &all, max_rank)?;
        }
        if matches!(suite, Suite::MainTheorem | Suite::All) {
            main_theorem(&mut rec, n, &all, max_rank)?;
        }
        if matches!(suite, Suite::Bijections | Suite::All) {
            bijections(&mut rec, &all);
        }
    }
    Ok(rec.finish(suite))
}

fn lemmas(rec: &mut Recorder, n: u32, all: &[Tiling], max_rank: u32) -> Result<()> {
    for t in all {
        per_tiling_lemmas(rec, t);
    }
    tear(rec, n, all);
    factorisation(rec, all);
    plabic_counts(rec, n, all, max_rank)?;
    Ok(())
}

fn per_tiling_lemmas(rec: &mut Recorder, t: &Tiling) {
    let n = t.n();
    let sigma = scott_perm(t);
    let show = || t.to_string();

    // tiles
    let tiles = t.tiles();
    let excess: usize = tiles.iter().map(|q| q.len() - 2).sum();
    rec.check("tile-excess-sum", excess == n as usize - 2, show);
    rec.check("dual-tree", t.dual_tree().is_tree(), show);
    if tiles.len() >= 2 {
        rec.check("two-ears", t.ears().len() >= 2, show);
    }
    for q in &tiles {
        let (ip, jp) = tile_partitions(q, n);
        for parts in [ip, jp] {
            let mut all: Vec<Vertex> = parts.concat();
            all.sort_unstable();
            rec.check("tile-partitions", all == (1..=n).collect::<Vec<_>>(), || {
                format!("{t} tile {q}")
            });
        }
    }
    for d in t.flippable_diagonals() {
        let ok = t.flip(&d).ok().and_then(|f| {
            let new = f.diagonals().iter().find(|x| !t.contains(x)).copied()?;
            f.flip(&new).ok()
        });
        rec.check("flip-involution", ok.as_ref() == Some(t), || format!("{t} at {d}"));
    }

    // scott permutation
    for i in 1..=n {
        let s = sigma.apply(i);
        rec.check("no-fixed-point", s != i && s != shift_vertex(n, i, 1), || {
            format!("{t}: sigma = {sigma}, i = {i}")
        });
    }
    let simple: HashSet<(Vertex, Vertex)> = t.simple_edges().into_iter().collect();
    for i in 1..=n {
        let j = shift_vertex(n, i, 1);
        rec.check(
            "simple-edge",
            (sigma.apply(j) == i) == simple.contains(&(i, j)),
            || format!("{t}: edge [{i},{j}]"),
        );
    }
    rec.check(
        "triangle-case",
        (sigma == Permutation::rotation(n, 2)) == t.is_triangulation(),
        show,
    );

    // strands
    let strands = scott_strands(t);
    for s in &strands {
        let distinct: HashSet<_> = s.trace.iter().collect();
        rec.check("no-return", distinct.len() == s.trace.len(), || {
            format!("{t}: strand {}", s.start)
        });
    }
    let mut meets: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for c in crossings(t) {
        let (a, b) = c.strands;
        rec.check("no-self-crossing", a != b, || format!("{t}: strand {a}"));
        *meets.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    for (&(a, b), &k) in &meets {
        rec.check("lensing", k <= 2, || format!("{t}: strands {a},{b} cross {k} times"));
    }

    runs_and_ears(rec, t, &sigma, &simple);
    census(rec, t, &tiles);
}

fn runs_and_ears(rec: &mut Recorder, t: &Tiling, sigma: &Permutation, simple: &HashSet<(Vertex, Vertex)>) {
    let n = t.n();
    // (i): runs of length r >= 3 versus maximal chains of simple edges
    let mut expected: Vec<(Vertex, u32)> = Vec::new();
    if simple.len() == n as usize {
        expected.push((1, n));
    } else {
        for s in 1..=n {
            let before = (prev_vertex(n, s), s);
            let first = (s, shift_vertex(n, s, 1));
            if simple.contains(&first) && !simple.contains(&before) {
                let mut k = 0;
                while simple.contains(&(shift_vertex(n, s, k), shift_vertex(n, s, k + 1))) {
                    k += 1;
                }
                expected.push((shift_vertex(n, s, k + 1), k as u32 + 2));
            }
        }
    }
    expected.sort_unstable();
    let mut runs = detect_runs(sigma);
    runs.sort_unstable();
    rec.check("bigear-runs", runs == expected, || {
        format!("{t}: runs {runs:?}, simple chains {expected:?}")
    });

    // (ii): for 2 <= r < n-1 with j-r+1..j-1 simple and j, j-r not simple
    let ears: HashSet<Vec<Vertex>> = t.ears().iter().map(|e| e.vertices().to_vec()).collect();
    for j in 1..=n {
        for r in 2..n.saturating_sub(1) {
            let start = shift_vertex(n, j, -(r as i64));
            let inside_simple = (1..r).all(|k| t.is_simple_vertex(shift_vertex(n, j, -(k as i64))));
            if !inside_simple || t.is_simple_vertex(j) || t.is_simple_vertex(start) {
                continue;
            }
            let a = Diagonal::new(n, start, j).map(|d| t.contains(&d)).unwrap_or(false);
            let mut span: Vec<Vertex> = (0..=r).map(|k| shift_vertex(n, start, k as i64)).collect();
            span.sort_unstable();
            let b = ears.contains(&span);
            let c = sigma.apply(start) == j;
            rec.check("bigear-equivalence", a == b && b == c, || {
                format!("{t}: j = {j}, r = {r}, (a,b,c) = ({a},{b},{c})")
            });
        }
    }
}

fn census(rec: &mut Recorder, t: &Tiling, tiles: &[Tile]) {
    let n = t.n() as usize;
    let m = build_strand_map(t);
    let count = |pred: &dyn Fn(&crate::strandmap::Face) -> bool| m.disk_faces().filter(|f| pred(f)).count();
    let cw_boundary = count(&|f| f.class == FaceClass::Clockwise && f.is_boundary());
    let ccw_interior = count(&|f| f.class == FaceClass::Counterclockwise && f.is_interior());
    let alt_interior = count(&|f| f.class == FaceClass::Alternating && f.is_interior());
    let alt_boundary = count(&|f| f.class == FaceClass::Alternating && f.is_boundary());
    let ok = cw_boundary == n
        && ccw_interior == tiles.len()
        && alt_interior == t.num_diagonals()
        && alt_boundary == n;
    rec.check("face-census", ok, || {
        format!("{t}: cw {cw_boundary}, ccw {ccw_interior}, alt {alt_interior}+{alt_boundary}")
    });
    let sub = t.subdivision();
    for v in 1..=t.n() {
        let sides = m.face_at_vertex(v).strand_sides;
        let want = 1 + sub.tiles_at(v).len();
        rec.check("vertex-face-sides", sides == want, || {
            format!("{t}: vertex {v} face has {sides} sides, want {want}")
        });
    }
    rec.check("chequerboard", m.is_chequerboard(), || t.to_string());
    rec.check("absolute", is_absolute(&m), || t.to_string());
    rec.check("minimalist", is_minimalist(&m), || t.to_string());
}

/// σ(i) = i+2 exactly when some member of the flip class has the ear {i, i+1, i+2}.
fn tear(rec: &mut Recorder, n: u32, all: &[Tiling]) {
    if n < 4 {
        return;
    }
    let mut ears_by_class: HashMap<FlipClassKey, HashSet<Vertex>> = HashMap::new();
    for t in all {
        let entry = ears_by_class.entry(class_key(t)).or_default();
        for e in t.ears() {
            if e.len() == 3 {
                let v = e.vertices();
                // middle vertex of a cyclic interval of three
                let mid = (0..3)
                    .map(|k| v[k])
                    .find(|&x| e.contains(prev_vertex(n, x)) && e.contains(shift_vertex(n, x, 1)));
                if let Some(mid) = mid {
                    entry.insert(mid);
                }
            }
        }
    }
    for t in all {
        let sigma = scott_perm(t);
        let ears = &ears_by_class[&class_key(t)];
        for i in 1..=n {
            let lhs = sigma.apply(i) == shift_vertex(n, i, 2);
            let rhs = ears.contains(&shift_vertex(n, i, 1));
            rec.check("tear", lhs == rhs, || format!("{t}: i = {i}, sigma(i)=i+2 is {lhs}"));
        }
    }
}

/// Equal permutations sharing a diagonal restrict to equal permutations on both sides.
fn factorisation(rec: &mut Recorder, all: &[Tiling]) {
    let mut by_perm: HashMap<Permutation, Vec<&Tiling>> = HashMap::new();
    for t in all {
        by_perm.entry(scott_perm(t)).or_default().push(t);
    }
    for group in by_perm.values() {
        let mut seen: HashMap<Diagonal, (&Tiling, (Permutation, Permutation))> = HashMap::new();
        for &t in group {
            for d in t.diagonals() {
                let Ok(parts) = restrict_scott(t, d) else {
                    rec.check("factorisation", false, || format!("{t}: cannot restrict at {d}"));
                    continue;
                };
                match seen.get(d) {
                    Some((first, p)) => rec.check("factorisation", *p == parts, || {
                        format!("{first} and {t} at {d}")
                    }),
                    None => {
                        seen.insert(*d, (t, parts));
                    }
                }
            }
        }
    }
}

fn plabic_counts(rec: &mut Recorder, n: u32, all: &[Tiling], max_rank: u32) -> Result<()> {
    let images: HashSet<_> = all.iter().filter_map(|t| g_map(t).canonical_form()).collect();
    rec.check("pfim-count", images.len() == all.len(), || {
        format!("n = {n}: {} distinct images of {} tilings", images.len(), all.len())
    });
    if n as usize <= 20 {
        let expected = a_n_formula(n);
        rec.check("pfim-count", expected == images.len().into(), || {
            format!("n = {n}: {} images, formula {expected}", images.len())
        });
    }
    if n <= 7 {
        for t in all {
            let g = g_map(t);
            for d in t.flippable_diagonals() {
                let ok = g
                    .quadrilateral_between(d.a(), d.b())
                    .and_then(|q| move_diamond(&g, q).ok())
                    .and_then(|h| h.canonical_form())
                    .zip(t.flip(&d).ok().and_then(|f| g_map(&f).canonical_form()))
                    .is_some_and(|(x, y)| x == y);
                rec.check("diamond-flip-square", ok, || format!("{t} at {d}"));
            }
        }
    }
    if n <= 6 {
        let mut seen = HashSet::new();
        let mut classes = 0;
        for t in all {
            let g = g_map(t);
            let Some(c) = g.canonical_form() else { continue };
            if seen.contains(&c) {
                continue;
            }
            classes += 1;
            for h in diamond_class(&g) {
                if let Some(c) = h.canonical_form() {
                    seen.insert(c);
                }
            }
        }
        let want = count_classes_bounded(n, max_rank)?;
        rec.check("diamond-classes", classes == want, || {
            format!("n = {n}: {classes} move classes, {want} flip classes")
        });
    }
    Ok(())
}

fn main_theorem(rec: &mut Recorder, n: u32, all: &[Tiling], max_rank: u32) -> Result<()> {
    let mut key_of_perm: HashMap<Permutation, (FlipClassKey, &Tiling)> = HashMap::new();
    let mut perm_of_key: HashMap<FlipClassKey, (Permutation, &Tiling)> = HashMap::new();
    for t in all {
        let p = scott_perm(t);
        let k = class_key(t);
        match key_of_perm.get(&p) {
            Some((k0, t0)) => rec.check("perm-determines-key", *k0 == k, || format!("{t0} vs {t}")),
            None => {
                key_of_perm.insert(p.clone(), (k.clone(), t));
            }
        }
        match perm_of_key.get(&k) {
            Some((p0, t0)) => rec.check("key-determines-perm", *p0 == p, || format!("{t0} vs {t}")),
            None => {
                perm_of_key.insert(k, (p, t));
            }
        }
    }
    let images = count_scott_images_bounded(n, max_rank)?;
    let classes = count_classes_bounded(n, max_rank)?;
    rec.check("class-count-two-ways", images == classes, || {
        format!("n = {n}: {images} images, {classes} keys")
    });
    if n <= 7 {
        let mut sizes: HashMap<FlipClassKey, usize> = HashMap::new();
        for t in all {
            *sizes.entry(class_key(t)).or_insert(0) += 1;
        }
        for (key, (_, t)) in &perm_of_key {
            let reach = flip_class(t);
            let same_key = reach.iter().all(|x| class_key(x) == *key);
            rec.check("flip-closure", same_key && reach.len() == sizes[key], || {
                format!("{t}: reached {}, key class has {}", reach.len(), sizes[key])
            });
        }
    }
    Ok(())
}

fn bijections(rec: &mut Recorder, all: &[Tiling]) {
    for t in all {
        let m = build_strand_map(t);
        rec.check("shrink-inverts-strand-map", shrink(&m).ok().as_ref() == Some(t), || t.to_string());
        let g = g_map(t);
        rec.check("rhombic-image", check_rhombic(&g).passes, || t.to_string());
        rec.check("g-inverse", g_inverse(&g).ok().as_ref() == Some(t), || t.to_string());
        rec.check("quadrilaterals-are-diagonals", g.quadrilaterals().len() == t.num_diagonals(), || {
            t.to_string()
        });
        let trip = trip_perm(&g).ok();
        let sigma = scott_perm(t);
        rec.check("trip-equals-scott", trip.as_ref() == Some(&sigma), || {
            format!("{t}: trip {trip:?}, scott {sigma}")
        });
    }
}

//! Strand diagrams as combinatorial planar maps.
//!
//! A [`StrandMap`] has two kinds of nodes: 4-valent crossings and the `2n`
//! boundary endpoints `1⁻, 1⁺, 2⁻, 2⁺, …, n⁻, n⁺` (clockwise). Edges are
//! darts, the oriented strand pieces between nodes, together with the `2n`
//! boundary arcs joining consecutive endpoints. The embedding is the
//! clockwise rotation at every node, and faces are orbits of
//! `h ↦ rot(twin(h))`, which walks every face with the face on its left.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tiling::{is_boundary_edge, next_vertex, Tiling, Vertex};

/// A boundary point `i⁺` (just clockwise of vertex `i`, where a strand
/// starts) or `i⁻` (just counterclockwise, where a strand ends).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndpointLabel {
    pub vertex: Vertex,
    pub plus: bool,
}

impl EndpointLabel {
    /// Position on the boundary circle, `0..2n`, clockwise from `1⁻`.
    fn position(&self) -> usize {
        2 * (self.vertex as usize - 1) + self.plus as usize
    }
}

impl fmt::Display for EndpointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.vertex, if self.plus { '+' } else { '-' })
    }
}

impl FromStr for EndpointLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedInput(format!("endpoint label `{s}`"));
        let s = s.trim();
        let (num, plus) = if let Some(x) = s.strip_suffix('+') {
            (x, true)
        } else if let Some(x) = s.strip_suffix('-') {
            (x, false)
        } else {
            return Err(bad());
        };
        let vertex = num.parse::<Vertex>().map_err(|_| bad())?;
        if vertex == 0 {
            return Err(bad());
        }
        Ok(EndpointLabel { vertex, plus })
    }
}

/// Orientation class of a face, read from its strand sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FaceClass {
    Clockwise,
    Counterclockwise,
    Alternating,
    Other,
}

/// A face of the map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    /// Half-edges in traversal order (face on the left).
    pub half_edges: Vec<usize>,
    pub class: FaceClass,
    /// Number of strand darts on the boundary of the face.
    pub strand_sides: usize,
    /// Vertices `i` whose arc `(i⁻, i⁺)` bounds this face.
    pub vertex_arcs: Vec<Vertex>,
    /// Vertices `i` whose arc `(i⁺, (i+1)⁻)` bounds this face.
    pub edge_arcs: Vec<Vertex>,
    /// The unbounded face outside the boundary circle.
    pub outer: bool,
}

impl Face {
    pub fn is_boundary(&self) -> bool {
        !self.outer && !(self.vertex_arcs.is_empty() && self.edge_arcs.is_empty())
    }

    pub fn is_interior(&self) -> bool {
        !self.outer && self.vertex_arcs.is_empty() && self.edge_arcs.is_empty()
    }

    /// All sides, arcs included.
    pub fn sides(&self) -> usize {
        self.half_edges.len()
    }

    /// The vertex label of a clockwise face containing one vertex arc.
    pub fn label(&self) -> Option<Vertex> {
        (self.class == FaceClass::Clockwise && self.vertex_arcs.len() == 1).then(|| self.vertex_arcs[0])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    Crossing(usize),
    Endpoint(usize),
}

/// Axioms of an absolute (alternating) strand diagram on the disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AbsoluteAxiom {
    /// Strands crossing a given strand alternate in direction.
    Alternation,
    /// Two crossings of the same pair of strands bound an oriented digon.
    OrientedDigons,
    /// No strand crosses itself.
    NoSelfCrossing,
    /// No strand is a closed loop.
    NoClosedLoop,
}

/// A strand diagram stored as a rotation system over darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandMap {
    n: u32,
    /// Dart ids around each crossing, clockwise.
    crossings: Vec<[usize; 4]>,
    /// `(in, out)` dart pairs of the two strands through each crossing.
    pairs: Vec<[(usize, usize); 2]>,
    /// Dart attached to each boundary point, indexed by circle position.
    endpoint_dart: Vec<usize>,
    num_darts: usize,
    tail: Vec<Node>,
    head: Vec<Node>,
    faces: Vec<Face>,
    /// Face to the left of each half-edge.
    face_of: Vec<usize>,
}

// Half-edge ids: dart d gives 2d (at its tail, pointing forward) and 2d+1
// (at its head, pointing back). Arc a from circle point a to a+1 gives
// 2D+2a (forward, clockwise) and 2D+2a+1 (back).

impl StrandMap {
    fn assemble(
        n: u32,
        crossings: Vec<[usize; 4]>,
        pairs: Vec<[(usize, usize); 2]>,
        endpoints: Vec<(EndpointLabel, usize)>,
        num_darts: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedInput("rank 0".into()));
        }
        let points = 2 * n as usize;
        let mut endpoint_dart = vec![usize::MAX; points];
        if endpoints.len() != points {
            return Err(Error::BadEndpoints(format!(
                "{} endpoints for rank {n}",
                endpoints.len()
            )));
        }
        for (label, d) in &endpoints {
            if label.vertex > n || endpoint_dart[label.position()] != usize::MAX {
                return Err(Error::BadEndpoints(format!("unexpected or repeated {label}")));
            }
            if *d >= num_darts {
                return Err(Error::MalformedInput(format!("unknown dart {d}")));
            }
            endpoint_dart[label.position()] = *d;
        }

        let mut tail: Vec<Option<Node>> = vec![None; num_darts];
        let mut head: Vec<Option<Node>> = vec![None; num_darts];
        let set = |slot: &mut Option<Node>, node: Node, d: usize, what: &str| -> Result<()> {
            if slot.replace(node).is_some() {
                return Err(Error::MalformedInput(format!("dart {d} has two {what}s")));
            }
            Ok(())
        };
        for (p, &d) in endpoint_dart.iter().enumerate() {
            if p % 2 == 1 {
                set(&mut tail[d], Node::Endpoint(p), d, "tail")?;
            } else {
                set(&mut head[d], Node::Endpoint(p), d, "head")?;
            }
        }
        for (c, (ring, pr)) in crossings.iter().zip(&pairs).enumerate() {
            let mut ds = ring.to_vec();
            ds.sort_unstable();
            ds.dedup();
            if ds.len() != 4 || ds.iter().any(|&d| d >= num_darts) {
                return Err(Error::MalformedInput(format!("crossing {c} needs 4 distinct darts")));
            }
            let pos = |d: usize| ring.iter().position(|&x| x == d);
            for &(i, o) in pr {
                match (pos(i), pos(o)) {
                    (Some(pi), Some(po)) if (pi + 2) % 4 == po => {}
                    _ => {
                        return Err(Error::MalformedInput(format!(
                            "crossing {c}: strand ({i},{o}) is not transversal"
                        )))
                    }
                }
                set(&mut head[i], Node::Crossing(c), i, "head")?;
                set(&mut tail[o], Node::Crossing(c), o, "tail")?;
            }
            let (p0, p1) = (pos(pr[0].0).unwrap_or(0), pos(pr[1].0).unwrap_or(0));
            if p0 % 2 == p1 % 2 {
                return Err(Error::MalformedInput(format!(
                    "crossing {c}: the two strands do not alternate"
                )));
            }
        }
        let tail = tail
            .into_iter()
            .enumerate()
            .map(|(d, x)| x.ok_or_else(|| Error::MalformedInput(format!("dart {d} has no tail"))))
            .collect::<Result<Vec<_>>>()?;
        let head = head
            .into_iter()
            .enumerate()
            .map(|(d, x)| x.ok_or_else(|| Error::MalformedInput(format!("dart {d} has no head"))))
            .collect::<Result<Vec<_>>>()?;

        let mut map = StrandMap {
            n,
            crossings,
            pairs,
            endpoint_dart,
            num_darts,
            tail,
            head,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        map.trace_faces()?;
        Ok(map)
    }

    fn half_edge_count(&self) -> usize {
        2 * self.num_darts + 4 * self.n as usize
    }

    /// Clockwise rotation successor of every half-edge around its origin.
    fn rotation(&self) -> Vec<usize> {
        let mut rot = vec![usize::MAX; self.half_edge_count()];
        for (c, ring) in self.crossings.iter().enumerate() {
            let halves: Vec<usize> = ring
                .iter()
                .map(|&d| {
                    if self.pairs[c].iter().any(|p| p.0 == d) {
                        2 * d + 1
                    } else {
                        2 * d
                    }
                })
                .collect();
            for k in 0..4 {
                rot[halves[k]] = halves[(k + 1) % 4];
            }
        }
        let points = 2 * self.n as usize;
        let arcs = 2 * self.num_darts;
        for p in 0..points {
            let d = self.endpoint_dart[p];
            let strand = if p % 2 == 1 { 2 * d } else { 2 * d + 1 };
            let to_next = arcs + 2 * p;
            let to_prev = arcs + 2 * ((p + points - 1) % points) + 1;
            rot[to_next] = strand;
            rot[strand] = to_prev;
            rot[to_prev] = to_next;
        }
        rot
    }

    fn trace_faces(&mut self) -> Result<()> {
        let rot = self.rotation();
        let total = self.half_edge_count();
        let arcs = 2 * self.num_darts;
        let mut face_of = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for start in 0..total {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = id;
                cycle.push(h);
                h = rot[h ^ 1];
                if h == start {
                    break;
                }
                if face_of[h] != usize::MAX {
                    return Err(Error::NonPlanar("inconsistent face orbit".into()));
                }
            }
            faces.push(self.describe_face(cycle, arcs));
        }
        // Euler characteristic, one sphere per connected component
        let v = self.crossings.len() + 2 * self.n as usize;
        let e = self.num_darts + 2 * self.n as usize;
        let k = self.components();
        if v as i64 - e as i64 + faces.len() as i64 != 2 * k as i64 {
            return Err(Error::NonPlanar(format!(
                "V - E + F = {} - {} + {} with {} component(s)",
                v,
                e,
                faces.len(),
                k
            )));
        }
        self.faces = faces;
        self.face_of = face_of;
        Ok(())
    }

    fn describe_face(&self, cycle: Vec<usize>, arcs: usize) -> Face {
        let n = self.n as usize;
        let mut vertex_arcs = Vec::new();
        let mut edge_arcs = Vec::new();
        let mut dirs: Vec<Option<bool>> = Vec::with_capacity(cycle.len());
        let mut forward_arcs = 0;
        for &h in &cycle {
            if h < arcs {
                dirs.push(Some(h % 2 == 0));
            } else {
                dirs.push(None);
                let a = (h - arcs) / 2;
                if (h - arcs).is_multiple_of(2) {
                    forward_arcs += 1;
                }
                let vertex = (a / 2 + 1) as Vertex;
                if a.is_multiple_of(2) {
                    vertex_arcs.push(vertex);
                } else {
                    edge_arcs.push(vertex);
                }
            }
        }
        let outer = forward_arcs > 0;
        let strand: Vec<bool> = dirs.iter().flatten().copied().collect();
        let class = if strand.is_empty() {
            FaceClass::Other
        } else if strand.iter().all(|&x| x) {
            FaceClass::Counterclockwise
        } else if strand.iter().all(|&x| !x) {
            FaceClass::Clockwise
        } else {
            let len = dirs.len();
            let alternating = (0..len).all(|i| match (dirs[i], dirs[(i + 1) % len]) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            });
            if alternating {
                FaceClass::Alternating
            } else {
                FaceClass::Other
            }
        };
        vertex_arcs.sort_unstable();
        edge_arcs.sort_unstable();
        debug_assert!(!outer || forward_arcs == 2 * n);
        Face {
            strand_sides: strand.len(),
            half_edges: cycle,
            class,
            vertex_arcs,
            edge_arcs,
            outer,
        }
    }

    fn components(&self) -> usize {
        let nodes = self.crossings.len() + 2 * self.n as usize;
        let idx = |x: Node| match x {
            Node::Crossing(c) => c,
            Node::Endpoint(p) => self.crossings.len() + p,
        };
        let mut parent: Vec<usize> = (0..nodes).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        };
        for d in 0..self.num_darts {
            union(idx(self.tail[d]), idx(self.head[d]));
        }
        let points = 2 * self.n as usize;
        for p in 0..points {
            union(self.crossings.len() + p, self.crossings.len() + (p + 1) % points);
        }
        (0..nodes).filter(|&x| find(&mut parent, x) == x).count()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_darts(&self) -> usize {
        self.num_darts
    }

    /// All faces including the outer one.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Faces inside the disk.
    pub fn disk_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| !f.outer)
    }

    /// Face on the left of half-edge `h`.
    fn face_left(&self, h: usize) -> usize {
        self.face_of[h]
    }

    /// The strands as dart sequences; open strands first (by start vertex),
    /// then closed loops.
    pub fn strands(&self) -> Vec<Vec<usize>> {
        let mut out_of = vec![usize::MAX; self.num_darts];
        for pr in &self.pairs {
            for &(i, o) in pr {
                out_of[i] = o;
            }
        }
        let mut seen = vec![false; self.num_darts];
        let mut strands = Vec::new();
        for v in 0..self.n as usize {
            let mut d = self.endpoint_dart[2 * v + 1];
            let mut s = Vec::new();
            loop {
                seen[d] = true;
                s.push(d);
                match self.head[d] {
                    Node::Endpoint(_) => break,
                    Node::Crossing(_) => d = out_of[d],
                }
                if seen[d] {
                    break;
                }
            }
            strands.push(s);
        }
        for start in 0..self.num_darts {
            if seen[start] {
                continue;
            }
            let mut s = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                s.push(d);
                d = out_of[d];
            }
            strands.push(s);
        }
        strands
    }

    /// `σ(i) = j` when the strand leaving `i⁺` arrives at `j⁻`.
    pub fn boundary_permutation(&self) -> Result<Permutation> {
        let images = self
            .strands()
            .into_iter()
            .take(self.n as usize)
            .map(|s| match self.head[*s.last().expect("nonempty")] {
                Node::Endpoint(p) if p % 2 == 0 => Ok((p / 2 + 1) as u32),
                _ => Err(Error::MalformedInput("strand does not reach the boundary".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }

    /// Axioms of an absolute strand diagram that fail, in disk form.
    pub fn absolute_violations(&self) -> Vec<AbsoluteAxiom> {
        let strands = self.strands();
        let mut strand_of = vec![usize::MAX; self.num_darts];
        for (s, ds) in strands.iter().enumerate() {
            for &d in ds {
                strand_of[d] = s;
            }
        }
        let mut out = Vec::new();
        if strands.len() > self.n as usize {
            out.push(AbsoluteAxiom::NoClosedLoop);
        }
        let self_cross = self
            .pairs
            .iter()
            .any(|pr| strand_of[pr[0].0] == strand_of[pr[1].0]);
        if self_cross {
            out.push(AbsoluteAxiom::NoSelfCrossing);
        }

        // crossings met along each strand: (crossing, other strand, sign)
        let mut met: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); strands.len()];
        for (s, ds) in strands.iter().enumerate() {
            for &d in ds {
                if let Node::Crossing(c) = self.head[d] {
                    let ring = &self.crossings[c];
                    let pi = ring.iter().position(|&x| x == d).expect("in dart");
                    let other = self.pairs[c].iter().find(|p| p.0 != d).expect("two strands");
                    let left_to_right = ring[(pi + 1) % 4] == other.0;
                    met[s].push((c, strand_of[other.0], left_to_right));
                }
            }
        }
        let alternates = met
            .iter()
            .all(|m| m.windows(2).all(|w| w[0].2 != w[1].2));
        if !alternates {
            out.push(AbsoluteAxiom::Alternation);
        }

        let mut digons_ok = true;
        for (a, ma) in met.iter().enumerate() {
            let mut by_other: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &(c, b, _) in ma {
                if b != a {
                    by_other.entry(b).or_default().push(c);
                }
            }
            for (b, along_a) in by_other {
                if along_a.len() < 2 {
                    continue;
                }
                let along_b: Vec<usize> = met[b]
                    .iter()
                    .filter(|x| x.1 == a)
                    .map(|x| x.0)
                    .collect();
                let pos_b = |c: usize| along_b.iter().position(|&x| x == c).expect("shared");
                for w in along_a.windows(2) {
                    let (x, y) = (pos_b(w[0]), pos_b(w[1]));
                    if x.abs_diff(y) == 1 && y > x {
                        digons_ok = false;
                    }
                }
            }
        }
        if !digons_ok {
            out.push(AbsoluteAxiom::OrientedDigons);
        }
        out.sort_by_key(|a| *a as u8);
        out
    }

    fn vertex_face(&self, v: Vertex) -> usize {
        let a = 2 * (v as usize - 1);
        self.face_left(2 * self.num_darts + 2 * a + 1)
    }

    /// Face containing the boundary arc `(v⁻, v⁺)`.
    pub fn face_at_vertex(&self, v: Vertex) -> &Face {
        &self.faces[self.vertex_face(v)]
    }

    /// True when every strand side separates an oriented face from an alternating one.
    pub fn is_chequerboard(&self) -> bool {
        (0..self.num_darts).all(|d| {
            let (x, y) = (&self.faces[self.face_left(2 * d)], &self.faces[self.face_left(2 * d + 1)]);
            let alt = |f: &Face| f.class == FaceClass::Alternating;
            let oriented = |f: &Face| matches!(f.class, FaceClass::Clockwise | FaceClass::Counterclockwise);
            (alt(x) && oriented(y)) || (oriented(x) && alt(y))
        })
    }

    fn to_repr(&self) -> StrandMapRepr {
        StrandMapRepr {
            n: self.n,
            crossings: self
                .crossings
                .iter()
                .zip(&self.pairs)
                .enumerate()
                .map(|(id, (ring, pr))| CrossingRepr {
                    id: id as u64,
                    darts: ring.iter().map(|&d| d as u64).collect(),
                    strand_pairs: pr.iter().map(|&(i, o)| [i as u64, o as u64]).collect(),
                })
                .collect(),
            endpoints: self
                .endpoint_dart
                .iter()
                .enumerate()
                .map(|(p, &d)| EndpointRepr {
                    label: EndpointLabel {
                        vertex: (p / 2 + 1) as Vertex,
                        plus: p % 2 == 1,
                    }
                    .to_string(),
                    dart: d as u64,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_repr()).expect("serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_repr()).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct StrandMapRepr {
    n: u32,
    crossings: Vec<CrossingRepr>,
    endpoints: Vec<EndpointRepr>,
}

#[derive(Serialize, Deserialize)]
struct CrossingRepr {
    id: u64,
    darts: Vec<u64>,
    strand_pairs: Vec<[u64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct EndpointRepr {
    label: String,
    dart: u64,
}

impl Serialize for StrandMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

/// Parses and validates the JSON form
/// `{"n", "crossings": [{"id", "darts", "strand_pairs"}], "endpoints": [{"label", "dart"}]}`.
pub fn parse_strand_map(raw: &str) -> Result<StrandMap> {
    let repr: StrandMapRepr =
        serde_json::from_str(raw).map_err(|e| Error::MalformedInput(e.to_string()))?;
    from_repr(repr)
}

fn from_repr(mut repr: StrandMapRepr) -> Result<StrandMap> {
    repr.crossings.sort_by_key(|c| c.id);
    if repr.crossings.windows(2).any(|w| w[0].id == w[1].id) {
        return Err(Error::MalformedInput("repeated crossing id".into()));
    }
    let mut ids: Vec<u64> = repr
        .crossings
        .iter()
        .flat_map(|c| c.darts.iter().copied())
        .chain(repr.endpoints.iter().map(|e| e.dart))
        .collect();
    ids.sort_unstable();
    ids.dedup();
    let dense: HashMap<u64, usize> = ids.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let look = |d: u64| {
        dense
            .get(&d)
            .copied()
            .ok_or_else(|| Error::MalformedInput(format!("unknown dart {d}")))
    };
    let mut crossings = Vec::with_capacity(repr.crossings.len());
    let mut pairs = Vec::with_capacity(repr.crossings.len());
    for c in &repr.crossings {
        if c.darts.len() != 4 || c.strand_pairs.len() != 2 {
            return Err(Error::MalformedInput(format!(
                "crossing {} needs 4 darts and 2 strand pairs",
                c.id
            )));
        }
        crossings.push([look(c.darts[0])?, look(c.darts[1])?, look(c.darts[2])?, look(c.darts[3])?]);
        pairs.push([
            (look(c.strand_pairs[0][0])?, look(c.strand_pairs[0][1])?),
            (look(c.strand_pairs[1][0])?, look(c.strand_pairs[1][1])?),
        ]);
    }
    let endpoints = repr
        .endpoints
        .iter()
        .map(|e| Ok((e.label.parse::<EndpointLabel>()?, look(e.dart)?)))
        .collect::<Result<Vec<_>>>()?;
    StrandMap::assemble(repr.n, crossings, pairs, endpoints, ids.len())
}

impl<'de> Deserialize<'de> for StrandMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = StrandMapRepr::deserialize(d)?;
        from_repr(repr).map_err(serde::de::Error::custom)
    }
}

/// The strand diagram `Σ(T)`: one crossing per (tile, corner).
///
/// At the crossing for corner `v = q_j` of a tile with corners `q_0 < … < q_{r-1}`,
/// the clockwise dart order is: the middle piece of the segment for side
/// `q_j → q_{j+1}` coming in, the middle piece of the segment for side
/// `q_{j-1} → q_j` going out, the first segment leaving the tile across side
/// `q_{j-1} → q_j`, and the second segment entering across side `q_j → q_{j+1}`.
pub fn build_strand_map(t: &Tiling) -> StrandMap {
    let n = t.n();
    let sub = t.subdivision();
    let tiles = sub.tiles();
    let mut offset = Vec::with_capacity(tiles.len());
    let mut total = 0;
    for q in tiles {
        offset.push(total);
        total += q.len();
    }
    let corner_index = |ti: usize, v: Vertex| {
        offset[ti] + tiles[ti].vertices().iter().position(|&x| x == v).expect("corner")
    };
    // dart ids: middle pieces per (tile, side j), then exits per (tile, corner), then boundary entries
    let middle = |ti: usize, j: usize| offset[ti] + j;
    let exit = |ti: usize, j: usize| total + offset[ti] + j;
    let entry_base = 2 * total;

    let mut crossings = vec![[0usize; 4]; total];
    let mut pairs = vec![[(0usize, 0usize); 2]; total];
    let mut endpoints = Vec::with_capacity(2 * n as usize);
    let mut entry_at: HashMap<usize, usize> = HashMap::new();
    let mut next_entry = entry_base;

    for (ti, q) in tiles.iter().enumerate() {
        let r = q.len();
        for j in 0..r {
            let v = q.vertices()[j];
            let jm = (j + r - 1) % r;
            let c = offset[ti] + j;
            let nd = middle(ti, j);
            let ed = middle(ti, jm);
            let sd = exit(ti, j);
            // the entering dart: from the neighbour across side q_j -> q_{j+1}, or from v+
            let succ = q.vertices()[(j + 1) % r];
            let wd = if is_boundary_edge(n, v, succ) && succ == next_vertex(n, v) {
                let d = next_entry;
                next_entry += 1;
                endpoints.push((EndpointLabel { vertex: v, plus: true }, d));
                d
            } else {
                let other = sub.tile_on_side(succ, v).expect("diagonal side");
                let oj = corner_index(other, v) - offset[other];
                exit(other, oj)
            };
            entry_at.insert(c, wd);
            crossings[c] = [nd, ed, sd, wd];
            pairs[c] = [(nd, sd), (wd, ed)];
            let pred = q.vertices()[jm];
            if is_boundary_edge(n, pred, v) && next_vertex(n, pred) == v {
                endpoints.push((EndpointLabel { vertex: v, plus: false }, sd));
            }
        }
    }
    StrandMap::assemble(n, crossings, pairs, endpoints, next_entry)
        .expect("strand diagram of a tiling is well formed")
}

/// Faces of `m` inside the disk with their classes.
pub fn classify_faces(m: &StrandMap) -> Vec<&Face> {
    m.disk_faces().collect()
}

/// Alternating diagram whose boundary faces are the `n` labelled clockwise
/// faces and alternating 4-sided faces (arcs counted as sides), and whose
/// interior faces are 4-sided alternating or counterclockwise with at least
/// three sides.
pub fn is_minimalist(m: &StrandMap) -> bool {
    if !is_absolute(m) {
        return false;
    }
    let n = m.n();
    let mut labelled = vec![false; m.faces.len()];
    for v in 1..=n {
        let f = m.vertex_face(v);
        if m.faces[f].class != FaceClass::Clockwise || labelled[f] {
            return false;
        }
        labelled[f] = true;
    }
    m.faces.iter().enumerate().filter(|(_, f)| !f.outer).all(|(i, f)| match f.class {
        FaceClass::Alternating => f.sides() == 4 && f.vertex_arcs.is_empty(),
        FaceClass::Clockwise => labelled[i] && f.vertex_arcs.len() == 1 && f.edge_arcs.is_empty(),
        FaceClass::Counterclockwise => f.is_interior() && f.strand_sides >= 3,
        FaceClass::Other => false,
    })
}

pub fn is_absolute(m: &StrandMap) -> bool {
    m.absolute_violations().is_empty()
}

/// Recovers the tiling: each interior alternating quadrilateral gives the
/// diagonal joining the labels of the two clockwise faces it touches.
pub fn shrink(m: &StrandMap) -> Result<Tiling> {
    if !is_minimalist(m) {
        return Err(Error::NotMinimalist);
    }
    let mut diagonals = Vec::new();
    for f in m.faces.iter().filter(|f| f.is_interior() && f.class == FaceClass::Alternating) {
        let mut labels: Vec<Vertex> = f
            .half_edges
            .iter()
            .filter_map(|&h| m.faces[m.face_left(h ^ 1)].label())
            .collect();
        labels.sort_unstable();
        labels.dedup();
        match labels[..] {
            [a, b] => diagonals.push((a, b)),
            _ => return Err(Error::NotMinimalist),
        }
    }
    Tiling::new(m.n(), diagonals).map_err(|_| Error::NotMinimalist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census(m: &StrandMap) -> (usize, usize, usize, usize) {
        let mut cw = 0;
        let mut ccw = 0;
        let mut alt_in = 0;
        let mut alt_bd = 0;
        for f in classify_faces(m) {
            match (f.class, f.is_interior()) {
                (FaceClass::Clockwise, false) => cw += 1,
                (FaceClass::Counterclockwise, true) => ccw += 1,
                (FaceClass::Alternating, true) => alt_in += 1,
                (FaceClass::Alternating, false) => alt_bd += 1,
                other => panic!("unexpected face {other:?}"),
            }
        }
        (cw, ccw, alt_in, alt_bd)
    }

    #[test]
    fn triangle_faces() {
        let m = build_strand_map(&Tiling::untile(3).unwrap());
        assert_eq!(m.num_crossings(), 3);
        assert_eq!(census(&m), (3, 1, 0, 3));
        assert!(is_absolute(&m));
        assert!(is_minimalist(&m));
        assert_eq!(shrink(&m).unwrap(), Tiling::untile(3).unwrap());
    }

    #[test]
    fn octagon_example() {
        let t = Tiling::new(8, [(2, 8), (3, 5), (5, 8)]).unwrap();
        let m = build_strand_map(&t);
        assert_eq!(m.num_crossings(), 14);
        assert_eq!(census(&m), (8, 4, 3, 8));
        assert_eq!(m.face_at_vertex(8).strand_sides, 1 + 3);
        assert_eq!(m.face_at_vertex(4).strand_sides, 2);
        assert!(m.is_chequerboard());
        assert_eq!(shrink(&m).unwrap(), t);
        assert_eq!(m.boundary_permutation().unwrap(), crate::scott::scott_perm(&t));
    }

    #[test]
    fn json_round_trip() {
        let t = Tiling::new(6, [(1, 4), (4, 6)]).unwrap();
        let m = build_strand_map(&t);
        let back = parse_strand_map(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn bad_endpoint_count() {
        let m = build_strand_map(&Tiling::untile(3).unwrap());
        let mut v: serde_json::Value = serde_json::from_str(&m.to_json()).unwrap();
        v["endpoints"].as_array_mut().unwrap().pop();
        assert!(matches!(
            parse_strand_map(&v.to_string()),
            Err(Error::BadEndpoints(_))
        ));
    }

    #[test]
    fn labels() {
        assert_eq!("3+".parse::<EndpointLabel>().unwrap(), EndpointLabel { vertex: 3, plus: true });
        assert_eq!("12-".parse::<EndpointLabel>().unwrap().to_string(), "12-");
        assert!("3".parse::<EndpointLabel>().is_err());
        assert!("0+".parse::<EndpointLabel>().is_err());
    }
}

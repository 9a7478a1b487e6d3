//! Rhombic plabic graphs.
//!
//! A [`PlabicGraph`] is a rotation system: every node lists its incident
//! half-edges clockwise, and each labelled boundary node carries one tag
//! slot pointing out of the disk. For face tracing the tags end at `n`
//! boundary points joined by arcs, exactly as strand endpoints are.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tiling::{Tiling, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlabicNode {
    pub color: Color,
    /// Boundary label `1..=n` for tagged nodes.
    pub label: Option<Vertex>,
}

/// One entry of a node's rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Tag,
    Edge(usize),
}

/// Conditions for membership in the rhombic class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RhombicAxiom {
    /// Connected, two-coloured edges, no unlabelled leaves, at least one black node.
    FullyReduced,
    /// Tagged nodes are white and all other nodes are black.
    A,
    /// Every black node has degree at least 3.
    B,
    /// Every closed face is a quadrilateral.
    C,
    /// Consecutive edges at a white node lie on a common quadrilateral.
    D,
    /// Two faces share at most one edge.
    E,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhombicReport {
    pub passes: bool,
    pub violations: Vec<RhombicAxiom>,
}

/// A face of the embedded graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlabicFace {
    /// Half-edges in traversal order (face on the left).
    pub half_edges: Vec<usize>,
    /// Nodes met along the face, in order; boundary points are skipped.
    pub nodes: Vec<usize>,
    /// No tag or boundary arc on this face.
    pub closed: bool,
    pub outer: bool,
}

/// A disk-embedded two-coloured graph with labelled boundary nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlabicGraph {
    n: u32,
    nodes: Vec<PlabicNode>,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<Slot>>,
    /// Node carrying label `i` at index `i - 1`.
    tagged: Vec<usize>,
    faces: Vec<PlabicFace>,
    face_of: Vec<usize>,
}

// Half-edge ids: edge e = (a, b) gives 2e at a and 2e+1 at b. The tag of
// label i gives 2E+2(i-1) at its node and 2E+2(i-1)+1 at boundary point i.
// The arc from point i to point i+1 gives 2E+2n+2(i-1) and its reverse +1.

impl PlabicGraph {
    /// Validates a rotation system and traces its faces.
    pub fn new(
        n: u32,
        nodes: Vec<PlabicNode>,
        edges: Vec<(usize, usize)>,
        rotation: Vec<Vec<Slot>>,
    ) -> Result<Self> {
        if nodes.len() != rotation.len() {
            return Err(Error::MalformedInput("one rotation per node required".into()));
        }
        let mut tagged = vec![usize::MAX; n as usize];
        for (i, node) in nodes.iter().enumerate() {
            let tags = rotation[i].iter().filter(|s| **s == Slot::Tag).count();
            match (node.label, tags) {
                (Some(l), 1) if l >= 1 && l <= n && tagged[l as usize - 1] == usize::MAX => {
                    tagged[l as usize - 1] = i
                }
                (None, 0) => {}
                _ => {
                    return Err(Error::MalformedInput(format!(
                        "node {i}: labels and tags must match one to one"
                    )))
                }
            }
        }
        if tagged.contains(&usize::MAX) {
            return Err(Error::MalformedInput("some boundary label is missing".into()));
        }
        let mut seen = vec![[false; 2]; edges.len()];
        for (i, rot) in rotation.iter().enumerate() {
            for s in rot {
                if let Slot::Edge(e) = *s {
                    let (a, b) = *edges
                        .get(e)
                        .ok_or_else(|| Error::MalformedInput(format!("unknown edge {e}")))?;
                    if a == b {
                        return Err(Error::MalformedInput(format!("edge {e} is a loop")));
                    }
                    let end = if a == i {
                        0
                    } else if b == i {
                        1
                    } else {
                        return Err(Error::MalformedInput(format!("edge {e} is not at node {i}")));
                    };
                    if seen[e][end] {
                        return Err(Error::MalformedInput(format!("edge {e} listed twice")));
                    }
                    seen[e][end] = true;
                }
            }
        }
        if let Some(e) = seen.iter().position(|s| !(s[0] && s[1])) {
            return Err(Error::MalformedInput(format!("edge {e} missing from a rotation")));
        }
        let mut g = PlabicGraph {
            n,
            nodes,
            edges,
            rotation,
            tagged,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        g.trace_faces()?;
        Ok(g)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn nodes(&self) -> &[PlabicNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rotation(&self, node: usize) -> &[Slot] {
        &self.rotation[node]
    }

    pub fn faces(&self) -> &[PlabicFace] {
        &self.faces
    }

    /// Node carrying boundary label `i`.
    pub fn tagged_node(&self, i: Vertex) -> usize {
        self.tagged[i as usize - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].iter().filter(|s| matches!(s, Slot::Edge(_))).count()
    }

    pub fn black_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&v| self.nodes[v].color == Color::Black)
    }

    /// Nodes adjacent to `v` in clockwise order.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.rotation[v]
            .iter()
            .filter_map(|s| match *s {
                Slot::Edge(e) => Some(self.other_end(e, v)),
                Slot::Tag => None,
            })
            .collect()
    }

    fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn half_count(&self) -> usize {
        2 * self.edges.len() + 4 * self.n as usize
    }

    fn half_of(&self, v: usize, s: Slot) -> usize {
        match s {
            Slot::Edge(e) => 2 * e + (self.edges[e].0 != v) as usize,
            Slot::Tag => {
                let l = self.nodes[v].label.expect("tag on labelled node");
                2 * self.edges.len() + 2 * (l as usize - 1)
            }
        }
    }

    /// Origin node of a half-edge, `None` for boundary points.
    fn origin(&self, h: usize) -> Option<usize> {
        let base = 2 * self.edges.len();
        if h < base {
            let (a, b) = self.edges[h / 2];
            Some(if h.is_multiple_of(2) { a } else { b })
        } else if h < base + 2 * self.n as usize && (h - base).is_multiple_of(2) {
            Some(self.tagged[(h - base) / 2])
        } else {
            None
        }
    }

    fn rot_next(&self) -> Vec<usize> {
        let mut rot = vec![usize::MAX; self.half_count()];
        for (v, slots) in self.rotation.iter().enumerate() {
            let hs: Vec<usize> = slots.iter().map(|&s| self.half_of(v, s)).collect();
            for k in 0..hs.len() {
                rot[hs[k]] = hs[(k + 1) % hs.len()];
            }
        }
        let n = self.n as usize;
        let base = 2 * self.edges.len();
        for p in 0..n {
            let tag = base + 2 * p + 1;
            let to_next = base + 2 * n + 2 * p;
            let to_prev = base + 2 * n + 2 * ((p + n - 1) % n) + 1;
            rot[to_next] = tag;
            rot[tag] = to_prev;
            rot[to_prev] = to_next;
        }
        rot
    }

    fn trace_faces(&mut self) -> Result<()> {
        let rot = self.rot_next();
        let total = self.half_count();
        let base = 2 * self.edges.len();
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
                if h == usize::MAX || face_of[h] != usize::MAX {
                    return Err(Error::NonPlanar("inconsistent face orbit".into()));
                }
            }
            let closed = cycle.iter().all(|&h| h < base);
            let outer = cycle
                .iter()
                .any(|&h| h >= base + 2 * self.n as usize && (h - base).is_multiple_of(2));
            let nodes = cycle.iter().filter_map(|&h| self.origin(h)).collect();
            faces.push(PlabicFace {
                half_edges: cycle,
                nodes,
                closed,
                outer,
            });
        }
        let v = self.nodes.len() + self.n as usize;
        let e = self.edges.len() + 2 * self.n as usize;
        let k = self.components();
        if v as i64 - e as i64 + faces.len() as i64 != 2 * k as i64 {
            return Err(Error::NonPlanar(format!(
                "V - E + F = {v} - {e} + {} with {k} component(s)",
                faces.len()
            )));
        }
        self.faces = faces;
        self.face_of = face_of;
        Ok(())
    }

    /// Components of the graph together with the boundary circle.
    fn components(&self) -> usize {
        let total = self.nodes.len() + 1;
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let circle = self.nodes.len();
        let mut join = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        };
        for &(a, b) in &self.edges {
            join(a, b);
        }
        for &t in &self.tagged {
            join(t, circle);
        }
        (0..total).filter(|&x| find(&mut parent, x) == x).count()
    }

    fn graph_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Closed faces with four sides.
    pub fn quadrilaterals(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&f| self.faces[f].closed && self.faces[f].half_edges.len() == 4)
            .collect()
    }

    /// The closed quadrilateral whose white nodes carry labels `a` and `b`.
    pub fn quadrilateral_between(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let want: BTreeSet<Vertex> = [a, b].into();
        self.quadrilaterals().into_iter().find(|&f| self.white_labels(f) == want)
    }

    fn white_labels(&self, f: usize) -> BTreeSet<Vertex> {
        self.faces[f]
            .nodes
            .iter()
            .filter_map(|&v| self.nodes[v].label)
            .collect()
    }

    /// A label-preserving invariant: for every node, its colour, label and
    /// rotation written with canonical neighbour names, starting from the tag
    /// or from the smallest entry. `None` if some black node has an unlabelled
    /// neighbour, where this naming scheme does not apply.
    pub fn canonical_form(&self) -> Option<CanonicalPlabic> {
        // name black nodes by the cyclically least rotation of neighbour labels
        let mut black_names: Vec<(Vec<Vertex>, usize)> = Vec::new();
        for b in self.black_nodes() {
            let labels = self
                .neighbours(b)
                .into_iter()
                .map(|w| self.nodes[w].label)
                .collect::<Option<Vec<_>>>()?;
            black_names.push((least_rotation(&labels), b));
        }
        black_names.sort();
        let mut name = HashMap::new();
        for (i, (_, b)) in black_names.iter().enumerate() {
            name.insert(*b, i);
        }
        let mut whites = vec![Vec::new(); self.n as usize];
        for l in 1..=self.n {
            let v = self.tagged_node(l);
            let rot = &self.rotation[v];
            let t = rot.iter().position(|s| *s == Slot::Tag).expect("tag");
            whites[l as usize - 1] = (1..rot.len())
                .map(|k| match rot[(t + k) % rot.len()] {
                    Slot::Edge(e) => {
                        let w = self.other_end(e, v);
                        name.get(&w).copied().unwrap_or(usize::MAX)
                    }
                    Slot::Tag => usize::MAX,
                })
                .collect();
        }
        if self.nodes.len() != self.n as usize + black_names.len() {
            return None;
        }
        Some(CanonicalPlabic {
            n: self.n,
            blacks: black_names.into_iter().map(|(l, _)| l).collect(),
            whites,
        })
    }

    /// Graphviz rendering: white nodes unfilled, black nodes filled.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph plabic {\n  node [shape=circle, width=0.3];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            match (node.color, node.label) {
                (Color::White, Some(l)) => {
                    let _ = writeln!(s, "  n{i} [label=\"{l}\", style=solid];");
                }
                (Color::White, None) => {
                    let _ = writeln!(s, "  n{i} [label=\"\", style=solid];");
                }
                (Color::Black, l) => {
                    let text = l.map(|l| l.to_string()).unwrap_or_default();
                    let _ = writeln!(
                        s,
                        "  n{i} [label=\"{text}\", style=filled, fillcolor=black, fontcolor=white];"
                    );
                }
            }
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  n{a} -- n{b};");
        }
        s.push_str("}\n");
        s
    }

    fn to_repr(&self) -> PlabicRepr {
        PlabicRepr {
            n: self.n,
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(i, node)| NodeRepr {
                    id: i,
                    color: node.color,
                    label: node.label,
                    rotation: self.rotation[i]
                        .iter()
                        .map(|s| match *s {
                            Slot::Tag => SlotRepr::Tag(TagWord::Tag),
                            Slot::Edge(e) => SlotRepr::Edge(e),
                        })
                        .collect(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| EdgeRepr { id: i, ends: [a, b] })
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

fn least_rotation(xs: &[Vertex]) -> Vec<Vertex> {
    (0..xs.len().max(1))
        .map(|k| xs.iter().cycle().skip(k).take(xs.len()).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Comparable normal form of a plabic graph whose black nodes only touch
/// labelled white nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalPlabic {
    pub n: u32,
    /// Black nodes as cyclic label sequences, sorted.
    pub blacks: Vec<Vec<Vertex>>,
    /// For each label, the black nodes met clockwise after the tag.
    pub whites: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PlabicRepr {
    n: u32,
    nodes: Vec<NodeRepr>,
    edges: Vec<EdgeRepr>,
}

#[derive(Serialize, Deserialize)]
struct NodeRepr {
    id: usize,
    color: Color,
    #[serde(default)]
    label: Option<Vertex>,
    rotation: Vec<SlotRepr>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRepr {
    id: usize,
    ends: [usize; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SlotRepr {
    Tag(TagWord),
    Edge(usize),
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum TagWord {
    Tag,
}

/// Parses the JSON form `{"n", "nodes": [{"id", "color", "label", "rotation"}], "edges": [{"id", "ends"}]}`;
/// rotation entries are edge ids or the string `"tag"`.
pub fn parse_plabic(raw: &str) -> Result<PlabicGraph> {
    let repr: PlabicRepr =
        serde_json::from_str(raw).map_err(|e| Error::MalformedInput(e.to_string()))?;
    let node_ix: HashMap<usize, usize> = repr.nodes.iter().enumerate().map(|(i, x)| (x.id, i)).collect();
    let edge_ix: HashMap<usize, usize> = repr.edges.iter().enumerate().map(|(i, x)| (x.id, i)).collect();
    if node_ix.len() != repr.nodes.len() || edge_ix.len() != repr.edges.len() {
        return Err(Error::MalformedInput("repeated node or edge id".into()));
    }
    let look_node = |id: usize| {
        node_ix
            .get(&id)
            .copied()
            .ok_or_else(|| Error::MalformedInput(format!("unknown node {id}")))
    };
    let edges = repr
        .edges
        .iter()
        .map(|e| Ok((look_node(e.ends[0])?, look_node(e.ends[1])?)))
        .collect::<Result<Vec<_>>>()?;
    let nodes = repr
        .nodes
        .iter()
        .map(|x| PlabicNode {
            color: x.color,
            label: x.label,
        })
        .collect();
    let rotation = repr
        .nodes
        .iter()
        .map(|x| {
            x.rotation
                .iter()
                .map(|s| match s {
                    SlotRepr::Tag(_) => Ok(Slot::Tag),
                    SlotRepr::Edge(e) => edge_ix
                        .get(e)
                        .map(|&i| Slot::Edge(i))
                        .ok_or_else(|| Error::MalformedInput(format!("unknown edge {e}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PlabicGraph::new(repr.n, nodes, edges, rotation)
}

/// One white node per polygon vertex and one black node per tile, joined
/// along each (tile, corner) incidence. A black rotation lists the tile's corners clockwise; a
/// white rotation is the tag followed by the incident tiles clockwise, from
/// the tile on `[i, i+1]` round to the tile on `[i-1, i]`.
pub fn g_map(t: &Tiling) -> PlabicGraph {
    let n = t.n();
    let sub = t.subdivision();
    let tiles = sub.tiles();
    let mut nodes: Vec<PlabicNode> = (1..=n)
        .map(|i| PlabicNode {
            color: Color::White,
            label: Some(i),
        })
        .collect();
    nodes.extend(tiles.iter().map(|_| PlabicNode {
        color: Color::Black,
        label: None,
    }));
    let mut edges = Vec::new();
    let mut edge_of = HashMap::new();
    let mut rotation: Vec<Vec<Slot>> = vec![Vec::new(); nodes.len()];
    for (ti, q) in tiles.iter().enumerate() {
        let b = n as usize + ti;
        for &v in q.vertices() {
            let e = edges.len();
            edges.push((v as usize - 1, b));
            edge_of.insert((ti, v), e);
            rotation[b].push(Slot::Edge(e));
        }
    }
    for v in 1..=n {
        let rot = &mut rotation[v as usize - 1];
        rot.push(Slot::Tag);
        for ti in sub.tiles_at(v) {
            rot.push(Slot::Edge(edge_of[&(ti, v)]));
        }
    }
    PlabicGraph::new(n, nodes, edges, rotation).expect("image of a tiling is well formed")
}

pub fn check_rhombic(g: &PlabicGraph) -> RhombicReport {
    let mut violations = Vec::new();
    let bicoloured = g
        .edges
        .iter()
        .all(|&(a, b)| g.nodes[a].color != g.nodes[b].color);
    let no_inner_leaves = (0..g.nodes.len()).all(|v| g.nodes[v].label.is_some() || g.degree(v) > 1);
    if !(g.graph_connected() && bicoloured && no_inner_leaves && g.black_nodes().next().is_some()) {
        violations.push(RhombicAxiom::FullyReduced);
    }
    if g
        .nodes
        .iter()
        .any(|x| (x.label.is_some()) != (x.color == Color::White))
    {
        violations.push(RhombicAxiom::A);
    }
    if g.black_nodes().any(|b| g.degree(b) < 3) {
        violations.push(RhombicAxiom::B);
    }
    if g.faces.iter().any(|f| f.closed && f.half_edges.len() != 4) {
        violations.push(RhombicAxiom::C);
    }
    let fan_ok = (0..g.nodes.len())
        .filter(|&v| g.nodes[v].color == Color::White)
        .all(|v| {
            let rot = &g.rotation[v];
            let len = rot.len();
            (0..len).all(|k| {
                let (s, t) = (rot[k], rot[(k + 1) % len]);
                if s == Slot::Tag || t == Slot::Tag {
                    return true;
                }
                // the face between consecutive slots s, t is left of the half-edge of t's twin
                let h = g.half_of(v, s);
                let f = &g.faces[g.face_of[h ^ 1]];
                f.closed && f.half_edges.len() == 4
            })
        });
    if !fan_ok {
        violations.push(RhombicAxiom::D);
    }
    let mut shared: HashMap<(usize, usize), usize> = HashMap::new();
    for e in 0..g.edges.len() {
        let (x, y) = (g.face_of[2 * e], g.face_of[2 * e + 1]);
        *shared.entry((x.min(y), x.max(y))).or_insert(0) += 1;
    }
    if shared.values().any(|&c| c > 1) {
        violations.push(RhombicAxiom::E);
    }
    RhombicReport {
        passes: violations.is_empty(),
        violations,
    }
}

/// One diagonal per closed quadrilateral, joining its two white labels.
pub fn g_inverse(g: &PlabicGraph) -> Result<Tiling> {
    if !check_rhombic(g).passes {
        return Err(Error::NotRhombic);
    }
    let mut diagonals = Vec::new();
    for f in g.quadrilaterals() {
        let labels: Vec<Vertex> = g.white_labels(f).into_iter().collect();
        match labels[..] {
            [a, b] => diagonals.push((a, b)),
            _ => return Err(Error::NotRhombic),
        }
    }
    Tiling::new(g.n, diagonals).map_err(|_| Error::NotRhombic)
}

/// Black nodes `u` of degree `r + 2` with `r ≥ 1` white leaves that share a
/// closed quadrilateral with another black node, as `(u, r)`.
pub fn find_bouquets(g: &PlabicGraph) -> Vec<(usize, usize)> {
    let quads = g.quadrilaterals();
    g.black_nodes()
        .filter_map(|u| {
            let leaves = g
                .neighbours(u)
                .into_iter()
                .filter(|&w| g.nodes[w].color == Color::White && g.degree(w) == 1)
                .count();
            let shares = quads.iter().any(|&f| {
                let ns = &g.faces[f].nodes;
                ns.contains(&u)
                    && ns
                        .iter()
                        .any(|&x| x != u && g.nodes[x].color == Color::Black)
            });
            (leaves >= 1 && g.degree(u) == leaves + 2 && shares).then_some((u, leaves))
        })
        .collect()
}

/// Splits at a bouquet at `u`: the star on `u` and its white neighbours, and
/// the rest with `u` and its leaves removed. Both parts relabel their white
/// nodes `1..k` in increasing label order.
pub fn split_bouquet(g: &PlabicGraph, u: usize) -> Result<(PlabicGraph, PlabicGraph)> {
    if !find_bouquets(g).iter().any(|&(b, _)| b == u) {
        return Err(Error::NoBouquetAt(u));
    }
    let whites = g.neighbours(u);
    let mut star_nodes = vec![u];
    star_nodes.extend(&whites);
    let leaves: HashSet<usize> = whites.iter().copied().filter(|&w| g.degree(w) == 1).collect();
    let rest_nodes: Vec<usize> = (0..g.nodes.len())
        .filter(|&v| v != u && !leaves.contains(&v))
        .collect();
    Ok((induced(g, &star_nodes)?, induced(g, &rest_nodes)?))
}

/// Full subgraph on `keep` with the inherited rotation; labelled nodes are
/// relabelled by rank.
fn induced(g: &PlabicGraph, keep: &[usize]) -> Result<PlabicGraph> {
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut labels: Vec<Vertex> = keep.iter().filter_map(|&v| g.nodes[v].label).collect();
    labels.sort_unstable();
    let rank = |l: Vertex| labels.binary_search(&l).expect("label") as Vertex + 1;
    let mut edges = Vec::new();
    let mut edge_map = HashMap::new();
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        if let (Some(&x), Some(&y)) = (index.get(&a), index.get(&b)) {
            edge_map.insert(e, edges.len());
            edges.push((x, y));
        }
    }
    let nodes = keep
        .iter()
        .map(|&v| PlabicNode {
            color: g.nodes[v].color,
            label: g.nodes[v].label.map(rank),
        })
        .collect();
    let rotation = keep
        .iter()
        .map(|&v| {
            g.rotation[v]
                .iter()
                .filter_map(|s| match *s {
                    Slot::Tag => Some(Slot::Tag),
                    Slot::Edge(e) => edge_map.get(&e).map(|&x| Slot::Edge(x)),
                })
                .collect()
        })
        .collect();
    PlabicGraph::new(labels.len() as u32, nodes, edges, rotation)
}

/// The composite move on a quadrilateral whose two black nodes have degree 3;
/// through the tiling correspondence it is the flip of the matching diagonal.
pub fn move_diamond(g: &PlabicGraph, face: usize) -> Result<PlabicGraph> {
    let f = g
        .faces
        .get(face)
        .ok_or_else(|| Error::NotApplicable(format!("no face {face}")))?;
    if !f.closed || f.half_edges.len() != 4 {
        return Err(Error::NotApplicable(format!("face {face} is not a closed quadrilateral")));
    }
    let blacks: Vec<usize> = f
        .nodes
        .iter()
        .copied()
        .filter(|&v| g.nodes[v].color == Color::Black)
        .collect();
    let whites: Vec<usize> = f
        .nodes
        .iter()
        .copied()
        .filter(|&v| g.nodes[v].color == Color::White)
        .collect();
    if blacks.len() != 2 || whites.len() != 2 || blacks.iter().any(|&b| g.degree(b) != 3) {
        return Err(Error::NotApplicable(format!(
            "face {face} is not two degree-3 black nodes around two white nodes"
        )));
    }
    // outer white of each black node: its neighbour off the quadrilateral
    let outer = |b: usize| -> Result<usize> {
        g.neighbours(b)
            .into_iter()
            .find(|w| !whites.contains(w))
            .ok_or_else(|| Error::NotApplicable("degenerate quadrilateral".into()))
    };
    let (b0, b1) = (blacks[0], blacks[1]);
    let (x0, x1) = (outer(b0)?, outer(b1)?);
    let mut edges = g.edges.clone();
    let mut rotation = g.rotation.clone();
    for (u, x, other, x_other) in [(b0, x0, b1, x1), (b1, x1, b0, x0)] {
        // the edge from u to the quadrilateral white that follows x clockwise
        let rot_u = &g.rotation[u];
        let k = rot_u
            .iter()
            .position(|s| matches!(*s, Slot::Edge(e) if g.other_end(e, u) == x))
            .expect("outer edge");
        let Slot::Edge(e) = rot_u[(k + 1) % 3] else {
            unreachable!("black nodes carry no tags")
        };
        let nxt = g.other_end(e, u);
        edges[e] = (u, x_other);
        rotation[nxt].retain(|s| *s != Slot::Edge(e));
        // insert just before the other black node's edge at x_other
        let pos = rotation[x_other]
            .iter()
            .position(|s| matches!(*s, Slot::Edge(d) if g.other_end(d, x_other) == other))
            .expect("edge to other black node");
        rotation[x_other].insert(pos, Slot::Edge(e));
        let _ = x;
    }
    PlabicGraph::new(g.n, g.nodes.clone(), edges, rotation)
}

/// Trip permutation: from the tag of white node `i`, turn to the next
/// half-edge clockwise at white nodes and counterclockwise at black nodes
/// until a tag is reached at node `σ(i)`.
pub fn trip_perm(g: &PlabicGraph) -> Result<Permutation> {
    if !check_rhombic(g).passes {
        return Err(Error::NotRhombic);
    }
    let mut images = Vec::with_capacity(g.n as usize);
    for i in 1..=g.n {
        let mut v = g.tagged_node(i);
        let mut arrived = Slot::Tag;
        let steps_cap = 4 * (g.edges.len() + g.n as usize) + 4;
        let mut steps = 0;
        let end = loop {
            let rot = &g.rotation[v];
            let k = rot.iter().position(|s| *s == arrived).expect("slot");
            let len = rot.len();
            let out = match g.nodes[v].color {
                Color::White => rot[(k + 1) % len],
                Color::Black => rot[(k + len - 1) % len],
            };
            match out {
                Slot::Tag => break g.nodes[v].label.expect("tagged"),
                Slot::Edge(e) => {
                    v = g.other_end(e, v);
                    arrived = Slot::Edge(e);
                }
            }
            steps += 1;
            if steps > steps_cap {
                return Err(Error::NotRhombic);
            }
        };
        images.push(end);
    }
    Permutation::new(images)
}

/// Number of distinct canonical graphs reachable from `start` by the move.
pub fn diamond_class(start: &PlabicGraph) -> Vec<PlabicGraph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    if let Some(c) = start.canonical_form() {
        seen.insert(c);
    }
    out.push(start.clone());
    queue.push_back(start.clone());
    while let Some(g) = queue.pop_front() {
        for f in g.quadrilaterals() {
            if let Ok(h) = move_diamond(&g, f) {
                if let Some(c) = h.canonical_form() {
                    if seen.insert(c) {
                        out.push(h.clone());
                        queue.push_back(h);
                    }
                }
            }
        }
    }
    out
}

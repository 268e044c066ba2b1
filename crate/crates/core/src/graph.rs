//! Weighted digraphs and the shortest-path primitives built on them.
//!
//! A [`Graph`] is immutable after construction and keeps a forward and a
//! reverse adjacency index over the same edge list. Every search accepts a
//! [`VertexSet`] and only ever touches vertices inside it, which is how the
//! induced subgraph `G(U)` is represented without copying.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt::Write as _;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub weight: f64,
}

/// Search orientation: `Out` follows edges forward (distances from the
/// source), `In` follows them backward (distances to the source).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Out,
    In,
}

impl Direction {
    pub fn reverse(self) -> Self {
        match self {
            Direction::Out => Direction::In,
            Direction::In => Direction::Out,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    out_offsets: Vec<usize>,
    out_list: Vec<EdgeId>,
    in_offsets: Vec<usize>,
    in_list: Vec<EdgeId>,
}

fn csr(n: usize, edges: &[Edge], key: impl Fn(&Edge) -> VertexId) -> (Vec<usize>, Vec<EdgeId>) {
    let mut offsets = vec![0usize; n + 1];
    for e in edges {
        offsets[key(e) + 1] += 1;
    }
    for v in 0..n {
        offsets[v + 1] += offsets[v];
    }
    let mut cursor = offsets.clone();
    let mut list = vec![0; edges.len()];
    for (id, e) in edges.iter().enumerate() {
        let slot = &mut cursor[key(e)];
        list[*slot] = id;
        *slot += 1;
    }
    (offsets, list)
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints and weights that are
    /// not strictly positive and finite.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        for (id, e) in edges.iter().enumerate() {
            for v in [e.src, e.dst] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if !(e.weight.is_finite() && e.weight > 0.0) {
                return Err(Error::InvalidWeight { edge: id, weight: e.weight });
            }
        }
        let (out_offsets, out_list) = csr(n, &edges, |e| e.src);
        let (in_offsets, in_list) = csr(n, &edges, |e| e.dst);
        Ok(Graph { n, edges, out_offsets, out_list, in_offsets, in_list })
    }

    /// Convenience constructor from `(src, dst, weight)` triples.
    pub fn from_triples(n: usize, triples: &[(VertexId, VertexId, f64)]) -> Result<Self> {
        Graph::new(n, triples.iter().map(|&(src, dst, weight)| Edge { src, dst, weight }).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_list[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_list[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    /// Edges leaving `v` in the search orientation `dir`.
    pub fn incident(&self, v: VertexId, dir: Direction) -> &[EdgeId] {
        match dir {
            Direction::Out => self.out_edges(v),
            Direction::In => self.in_edges(v),
        }
    }

    /// The far endpoint of `e` when it is traversed in orientation `dir`.
    pub fn head(&self, e: EdgeId, dir: Direction) -> VertexId {
        match dir {
            Direction::Out => self.edges[e].dst,
            Direction::In => self.edges[e].src,
        }
    }

    pub fn max_weight(&self) -> Option<f64> {
        self.edges.iter().map(|e| e.weight).reduce(f64::max)
    }

    pub fn min_weight(&self) -> Option<f64> {
        self.edges.iter().map(|e| e.weight).reduce(f64::min)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// The spanning subgraph `(V, edges)`. Edge `i` of the result is
    /// `ids[i]` of `self`.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Graph {
        let edges = ids.iter().map(|&id| self.edges[id]).collect();
        Graph::new(self.n, edges).expect("edges of a valid graph")
    }

    /// Multiplies every weight by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Graph> {
        let edges = self.edges.iter().map(|e| Edge { weight: e.weight * factor, ..*e }).collect();
        Graph::new(self.n, edges)
    }
}

/// A subset of the vertices `0..universe`, kept both as a sorted list and
/// as a membership mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<VertexId>,
    mask: Vec<bool>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet { members: Vec::new(), mask: vec![false; universe] }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet { members: (0..universe).collect(), mask: vec![true; universe] }
    }

    /// Panics if a vertex is not below `universe`.
    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut mask = vec![false; universe];
        for v in vertices {
            assert!(v < universe, "vertex {v} out of range for universe {universe}");
            mask[v] = true;
        }
        Self::from_mask(mask)
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask.iter().enumerate().filter_map(|(v, &b)| b.then_some(v)).collect();
        VertexSet { members, mask }
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.members
    }

    pub fn first(&self) -> Option<VertexId> {
        self.members.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.universe(), self.iter().filter(|&v| !other.contains(v)))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.universe(), self.iter().filter(|&v| other.contains(v)))
    }

    /// Members of `self` that are not in the sorted slice `removed`.
    pub fn without(&self, removed: &[VertexId]) -> VertexSet {
        let mut mask = self.mask.clone();
        for &v in removed {
            mask[v] = false;
        }
        VertexSet::from_mask(mask)
    }
}

/// One-way distances from (or to) a source inside an induced subgraph,
/// together with the shortest-path tree. `None` marks an unreachable vertex.
#[derive(Clone, Debug)]
pub struct DistanceVector {
    pub source: VertexId,
    pub direction: Direction,
    pub dist: Vec<Option<f64>>,
    pub parent: Vec<Option<EdgeId>>,
}

impl DistanceVector {
    pub fn distance(&self, v: VertexId) -> Option<f64> {
        self.dist[v]
    }

    /// Tree edges on the path between the source and `v`, listed from `v`
    /// back towards the source.
    pub fn path_edges(&self, g: &Graph, v: VertexId) -> Option<Vec<EdgeId>> {
        self.dist[v]?;
        let back = self.direction.reverse();
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(e) = self.parent[cur] {
            path.push(e);
            cur = g.head(e, back);
        }
        Some(path)
    }
}

#[derive(Clone, Copy, Debug)]
struct HeapEntry {
    dist: f64,
    origin: VertexId,
    vertex: VertexId,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapEntry {}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapEntry {
    // reversed: BinaryHeap is a max-heap
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.origin.cmp(&self.origin))
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Result of a labeled multi-source search.
pub(crate) struct Search {
    pub dist: Vec<Option<f64>>,
    pub parent: Vec<Option<EdgeId>>,
    pub origin: Vec<VertexId>,
}

/// Dijkstra from several seeds `(vertex, initial distance)` inside
/// `restrict`, with keys ordered lexicographically by `(distance, seed
/// vertex)`: every reached vertex records the smallest-id seed among those
/// at minimum distance. Vertices farther than `limit` are left unreached.
pub(crate) fn search(
    g: &Graph,
    restrict: &VertexSet,
    seeds: &[(VertexId, f64)],
    dir: Direction,
    limit: f64,
) -> Search {
    let n = g.n();
    let mut dist: Vec<Option<f64>> = vec![None; n];
    let mut parent = vec![None; n];
    let mut origin = vec![usize::MAX; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();

    let better = |d: f64, o: VertexId, cur: Option<f64>, cur_o: VertexId| match cur {
        None => true,
        Some(c) => d < c || (d == c && o < cur_o),
    };

    for &(s, d0) in seeds {
        debug_assert!(restrict.contains(s));
        if d0 > limit {
            continue;
        }
        if better(d0, s, dist[s], origin[s]) {
            dist[s] = Some(d0);
            origin[s] = s;
            heap.push(HeapEntry { dist: d0, origin: s, vertex: s });
        }
    }

    while let Some(HeapEntry { dist: d, origin: o, vertex: v }) = heap.pop() {
        if done[v] || dist[v] != Some(d) || origin[v] != o {
            continue;
        }
        done[v] = true;
        for &e in g.incident(v, dir) {
            let x = g.head(e, dir);
            if !restrict.contains(x) || done[x] {
                continue;
            }
            let nd = d + g.edge(e).weight;
            if nd > limit {
                continue;
            }
            if better(nd, o, dist[x], origin[x]) {
                dist[x] = Some(nd);
                origin[x] = o;
                parent[x] = Some(e);
                heap.push(HeapEntry { dist: nd, origin: o, vertex: x });
            }
        }
    }

    Search { dist, parent, origin }
}

fn check_member(restrict: &VertexSet, v: VertexId) -> Result<()> {
    if restrict.contains(v) {
        Ok(())
    } else {
        Err(Error::NotInRestrict { vertex: v })
    }
}

/// Exact one-way shortest distances inside `G(restrict)`: from `source` for
/// [`Direction::Out`], to `source` for [`Direction::In`].
pub fn sssp(g: &Graph, restrict: &VertexSet, source: VertexId, dir: Direction) -> Result<DistanceVector> {
    sssp_bounded(g, restrict, source, dir, f64::INFINITY)
}

/// Like [`sssp`] but leaves vertices beyond `limit` unreached.
pub fn sssp_bounded(
    g: &Graph,
    restrict: &VertexSet,
    source: VertexId,
    dir: Direction,
    limit: f64,
) -> Result<DistanceVector> {
    check_member(restrict, source)?;
    let s = search(g, restrict, &[(source, 0.0)], dir, limit);
    Ok(DistanceVector { source, direction: dir, dist: s.dist, parent: s.parent })
}

/// A round-trip ball `ball_U(center, radius)` and its RT-tree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BallResult {
    pub center: VertexId,
    /// Requested round-trip radius.
    pub radius: f64,
    /// Sorted member ids.
    pub members: Vec<VertexId>,
    /// Sorted ids of the out-tree and in-tree edges.
    pub rt_tree_edges: Vec<EdgeId>,
    /// Largest round-trip distance from the center to a member, measured in
    /// the inducing subgraph.
    pub max_round_trip: f64,
}

impl BallResult {
    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// `{ v ∈ restrict : d(center, v) + d(v, center) ≤ radius }` in
/// `G(restrict)`, with the union of a shortest-path out-tree and in-tree
/// rooted at the center spanning the members.
pub fn round_trip_ball(g: &Graph, restrict: &VertexSet, center: VertexId, radius: f64) -> Result<BallResult> {
    check_member(restrict, center)?;
    if radius.is_nan() || radius < 0.0 {
        return Err(Error::param("radius", format!("{radius} is negative")));
    }
    let out = search(g, restrict, &[(center, 0.0)], Direction::Out, radius);
    let inn = search(g, restrict, &[(center, 0.0)], Direction::In, radius);

    let mut members = Vec::new();
    let mut max_round_trip = 0.0f64;
    for v in restrict.iter() {
        if let (Some(a), Some(b)) = (out.dist[v], inn.dist[v]) {
            let rt = a + b;
            if rt <= radius {
                members.push(v);
                max_round_trip = max_round_trip.max(rt);
            }
        }
    }

    let mut in_tree = vec![false; g.m()];
    for (tree, dir) in [(&out, Direction::Out), (&inn, Direction::In)] {
        let back = dir.reverse();
        let mut seen = vec![false; g.n()];
        seen[center] = true;
        for &v in &members {
            let mut cur = v;
            while !seen[cur] {
                seen[cur] = true;
                let e = tree.parent[cur].expect("reached vertex has a parent");
                in_tree[e] = true;
                cur = g.head(e, back);
            }
        }
    }
    let rt_tree_edges = in_tree.iter().enumerate().filter_map(|(e, &b)| b.then_some(e)).collect();

    Ok(BallResult { center, radius, members, rt_tree_edges, max_round_trip })
}

/// `out-ball_U(center, r)` or `in-ball_U(center, r)`.
pub fn directional_ball(
    g: &Graph,
    restrict: &VertexSet,
    center: VertexId,
    r: f64,
    dir: Direction,
) -> Result<VertexSet> {
    let d = sssp_bounded(g, restrict, center, dir, r)?;
    Ok(VertexSet::from_vertices(g.n(), restrict.iter().filter(|&v| d.dist[v].is_some())))
}

/// Iterative Tarjan over a local adjacency list. Components come out in
/// reverse topological order.
pub(crate) fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let k = adj.len();
    let mut index = vec![UNSEEN; k];
    let mut low = vec![0usize; k];
    let mut on_stack = vec![false; k];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0usize;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..k {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i == 0 {
                index[v] = next;
                low[v] = next;
                next += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(*i) {
                *i += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(p, _)) = call.last() {
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comps.push(comp);
            }
        }
    }
    comps
}

/// Maximal SCCs of `G(restrict)`. Each component is sorted and components
/// are ordered by their smallest vertex.
pub fn strongly_connected_components(g: &Graph, restrict: &VertexSet) -> Vec<Vec<VertexId>> {
    let verts = restrict.as_slice();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| {
            g.out_edges(v)
                .iter()
                .map(|&e| g.edge(e).dst)
                .filter(|&x| restrict.contains(x))
                .map(|x| local[x])
                .collect()
        })
        .collect();
    let mut comps: Vec<Vec<VertexId>> = tarjan(&adj)
        .into_iter()
        .map(|c| {
            let mut c: Vec<VertexId> = c.into_iter().map(|i| verts[i]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    comps.sort_unstable_by_key(|c| c[0]);
    comps
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `src dst weight`. Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> std::result::Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let malformed =
        |line: usize, content: &str| ParseError::MalformedLine { line, content: content.to_string() };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, declared) = match fields.as_slice() {
        [a, b] => (
            a.parse::<usize>().map_err(|_| malformed(hline, header))?,
            b.parse::<usize>().map_err(|_| malformed(hline, header))?,
        ),
        _ => return Err(malformed(hline, header)),
    };

    let mut edges = Vec::with_capacity(declared);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [s, d, w] = fields.as_slice() else {
            return Err(malformed(line, content));
        };
        let src: usize = s.parse().map_err(|_| malformed(line, content))?;
        let dst: usize = d.parse().map_err(|_| malformed(line, content))?;
        let weight: f64 = w.parse().map_err(|_| malformed(line, content))?;
        for vertex in [src, dst] {
            if vertex >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex, n });
            }
        }
        if weight.is_nan() || weight.is_infinite() && weight > 0.0 {
            return Err(ParseError::NonFiniteWeight { line, weight });
        }
        if weight <= 0.0 {
            return Err(ParseError::NonPositiveWeight { line, weight });
        }
        edges.push(Edge { src, dst, weight });
    }
    if edges.len() != declared {
        return Err(ParseError::CountMismatch { declared, found: edges.len() });
    }
    Ok(Graph::new(n, edges).expect("validated while parsing"))
}

pub fn read_edge_list<R: Read>(mut reader: R) -> Result<Graph> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    Ok(parse_edge_list(&text)?)
}

/// Writes the edge-list format. Weights use the shortest decimal form that
/// parses back to the same `f64`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.src, e.dst, e.weight).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> Graph {
        Graph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)]).unwrap()
    }

    #[test]
    fn parses_simple_list() {
        let g = parse_edge_list("3 2\n0 1 1.5\n1 2 2.0").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(g.edge(0).weight, 1.5);
    }

    #[test]
    fn parses_empty_edge_set() {
        let g = parse_edge_list("1 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(parse_edge_list("2 1\n0 1 -1"), Err(ParseError::NonPositiveWeight { line: 2, .. })));
        assert!(matches!(parse_edge_list("2 1\n0 1 0"), Err(ParseError::NonPositiveWeight { .. })));
        assert!(matches!(parse_edge_list("2 1\n0 1"), Err(ParseError::MalformedLine { line: 2, .. })));
        assert!(matches!(
            parse_edge_list("2 2\n0 1 1"),
            Err(ParseError::CountMismatch { declared: 2, found: 1 })
        ));
        assert!(matches!(parse_edge_list("2 1\n0 2 1"), Err(ParseError::VertexOutOfRange { vertex: 2, .. })));
        assert!(matches!(parse_edge_list("2 1\n0 1 inf"), Err(ParseError::NonFiniteWeight { .. })));
        assert!(matches!(parse_edge_list(""), Err(ParseError::MissingHeader)));
        assert!(matches!(parse_edge_list("x 1\n"), Err(ParseError::MalformedLine { line: 1, .. })));
    }

    #[test]
    fn writer_uses_shortest_weights() {
        let g = Graph::from_triples(2, &[(0, 1, 0.1), (1, 0, 2.0)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "2 2\n0 1 0.1\n1 0 2\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn graph_rejects_bad_edges() {
        assert!(Graph::from_triples(2, &[(0, 1, 0.0)]).is_err());
        assert!(Graph::from_triples(2, &[(0, 5, 1.0)]).is_err());
        assert!(Graph::from_triples(2, &[(0, 1, f64::NAN)]).is_err());
    }

    #[test]
    fn sssp_path_both_directions() {
        let g = Graph::from_triples(3, &[(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        let all = g.vertices();
        let out = sssp(&g, &all, 0, Direction::Out).unwrap();
        assert_eq!(out.distance(2), Some(3.0));
        assert_eq!(out.path_edges(&g, 2).unwrap(), vec![1, 0]);
        let inn = sssp(&g, &all, 2, Direction::In).unwrap();
        assert_eq!(inn.distance(0), Some(3.0));
        assert_eq!(inn.distance(2), Some(0.0));
    }

    #[test]
    fn sssp_unreachable_and_restrict() {
        let g = Graph::from_triples(2, &[]).unwrap();
        let d = sssp(&g, &g.vertices(), 0, Direction::Out).unwrap();
        assert_eq!(d.distance(1), None);

        let g = Graph::from_triples(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 5.0)]).unwrap();
        let r = VertexSet::from_vertices(3, [0, 2]);
        let d = sssp(&g, &r, 0, Direction::Out).unwrap();
        assert_eq!(d.distance(2), Some(5.0));
        assert_eq!(d.distance(1), None);
        assert!(matches!(sssp(&g, &r, 1, Direction::Out), Err(Error::NotInRestrict { vertex: 1 })));
    }

    #[test]
    fn ball_on_three_cycle() {
        let g = cycle3();
        let all = g.vertices();
        let b = round_trip_ball(&g, &all, 0, 3.0).unwrap();
        assert_eq!(b.members, vec![0, 1, 2]);
        assert_eq!(b.rt_tree_edges, vec![0, 1, 2]);
        assert_eq!(b.max_round_trip, 3.0);
        let b = round_trip_ball(&g, &all, 0, 2.9).unwrap();
        assert_eq!(b.members, vec![0]);
        assert!(b.rt_tree_edges.is_empty());
        let b = round_trip_ball(&g, &all, 1, 0.0).unwrap();
        assert_eq!(b.members, vec![1]);
    }

    #[test]
    fn ball_respects_restrict() {
        let g = cycle3();
        let r = VertexSet::from_vertices(3, [0, 1]);
        let b = round_trip_ball(&g, &r, 0, 100.0).unwrap();
        assert_eq!(b.members, vec![0]);
    }

    #[test]
    fn directional_balls() {
        let g = Graph::from_triples(2, &[(0, 1, 1.0)]).unwrap();
        let all = g.vertices();
        let out = directional_ball(&g, &all, 0, 1.0, Direction::Out).unwrap();
        assert_eq!(out.as_slice(), &[0, 1]);
        let inn = directional_ball(&g, &all, 0, 1.0, Direction::In).unwrap();
        assert_eq!(inn.as_slice(), &[0]);
        let g = cycle3();
        let out = directional_ball(&g, &g.vertices(), 0, 2.0, Direction::Out).unwrap();
        assert_eq!(out.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn scc_examples() {
        let g = cycle3();
        assert_eq!(strongly_connected_components(&g, &g.vertices()), vec![vec![0, 1, 2]]);

        let dag = Graph::from_triples(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]).unwrap();
        assert_eq!(strongly_connected_components(&dag, &dag.vertices()).len(), 4);

        let bridged =
            Graph::from_triples(4, &[(0, 1, 1.0), (1, 0, 1.0), (2, 3, 1.0), (3, 2, 1.0), (1, 2, 1.0)])
                .unwrap();
        assert_eq!(
            strongly_connected_components(&bridged, &bridged.vertices()),
            vec![vec![0, 1], vec![2, 3]]
        );
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from_vertices(6, [5, 1, 3, 1]);
        let b = VertexSet::from_vertices(6, [3, 4]);
        assert_eq!(a.as_slice(), &[1, 3, 5]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 5]);
        assert_eq!(a.intersection(&b).as_slice(), &[3]);
        assert_eq!(a.without(&[1]).as_slice(), &[3, 5]);
        assert!(!a.is_subset(&b));
        assert!(VertexSet::empty(6).is_subset(&b));
    }
}

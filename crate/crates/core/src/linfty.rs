//! L∞ round-trip distances and the per-scale contracted graphs.
//!
//! `d∞(u, v)` is the smallest threshold `w` such that `u` and `v` share a
//! strongly connected component of the subgraph of edges of weight at most
//! `w`. [`linfty_merge_tree`] processes the distinct weights in ascending
//! order, merging the SCCs that appear at each threshold into a new tree
//! node labeled with that weight, so `d∞` is the label of a lowest common
//! ancestor. For every merge it also records an out-tree and an in-tree
//! over the merged super-vertices; those edges form the certificate set
//! `H₁`, of size at most `2(n - 1)`.
//!
//! [`contract`] shrinks a graph to a weight window `[x_L, x_R]` and
//! [`build_scales`] produces the window `[2^t / n, 2^t]` for every scale `t`
//! at which the contracted graph is non-empty.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{tarjan, Edge, EdgeId, Graph, VertexId, VertexSet};

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        a
    }
}

/// SCC-merge dendrogram. Nodes `0..n` are the leaves (original vertices);
/// internal nodes carry the threshold at which their children merged.
#[derive(Clone, Debug)]
pub struct MergeTree {
    leaves: usize,
    parent: Vec<Option<usize>>,
    label: Vec<f64>,
    children: Vec<Vec<usize>>,
    first: Vec<usize>,
    euler: Vec<usize>,
    depth: Vec<usize>,
    sparse: Vec<Vec<usize>>,
}

impl MergeTree {
    fn new(leaves: usize, parent: Vec<Option<usize>>, label: Vec<f64>, children: Vec<Vec<usize>>) -> Self {
        let nodes = parent.len();
        let root = nodes; // virtual root joining the forest
        let mut depth = vec![0usize; nodes + 1];
        let mut first = vec![0usize; nodes + 1];
        let mut euler = Vec::with_capacity(2 * nodes + 1);

        let top: Vec<usize> = (0..nodes).filter(|&v| parent[v].is_none()).collect();
        let kids = |v: usize| -> &[usize] {
            if v == root {
                &top
            } else {
                &children[v]
            }
        };
        let mut stack = vec![(root, 0usize)];
        first[root] = 0;
        euler.push(root);
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if let Some(&c) = kids(v).get(*i) {
                *i += 1;
                depth[c] = depth[v] + 1;
                first[c] = euler.len();
                euler.push(c);
                stack.push((c, 0));
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    euler.push(p);
                }
            }
        }

        let len = euler.len();
        let mut sparse = vec![(0..len).collect::<Vec<_>>()];
        let mut span = 1;
        while 2 * span <= len {
            let prev = sparse.last().unwrap();
            let row = (0..=len - 2 * span)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + span]);
                    if depth[euler[a]] <= depth[euler[b]] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            sparse.push(row);
            span *= 2;
        }

        MergeTree { leaves, parent, label, children, first, euler, depth, sparse }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn label(&self, node: usize) -> f64 {
        self.label[node]
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    /// Lowest common ancestor, or `None` when the nodes lie in different
    /// trees of the forest.
    pub fn lca(&self, a: usize, b: usize) -> Option<usize> {
        let (mut l, mut r) = (self.first[a], self.first[b]);
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let j = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let (x, y) = (self.sparse[j][l], self.sparse[j][r + 1 - (1 << j)]);
        let best = if self.depth[self.euler[x]] <= self.depth[self.euler[y]] { x } else { y };
        let node = self.euler[best];
        (node != self.node_count()).then_some(node)
    }

    /// `d∞(u, v)`; zero for `u == v`, `None` when no cycle holds both.
    pub fn linfty_distance(&self, u: VertexId, v: VertexId) -> Option<f64> {
        if u == v {
            return Some(0.0);
        }
        self.lca(u, v).map(|a| self.label[a])
    }

    /// Highest ancestor of leaf `v` whose label is at most `threshold`
    /// (the leaf itself when none is): the SCC holding `v` in the subgraph
    /// of edges of weight at most `threshold`.
    pub fn group_at(&self, v: VertexId, threshold: f64) -> usize {
        let mut node = v;
        while let Some(p) = self.parent[node] {
            if self.label[p] <= threshold {
                node = p;
            } else {
                break;
            }
        }
        node
    }
}

/// The certificate edge set `H₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateEdges {
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
}

/// Builds the merge tree and certificate edges of `g`.
pub fn linfty_merge_tree(g: &Graph) -> (MergeTree, CertificateEdges) {
    let n = g.n();
    let mut dsu = Dsu::new(n);
    let mut node_of: Vec<usize> = (0..n).collect();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut label = vec![0.0; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut cert = Vec::new();

    let mut order: Vec<EdgeId> = (0..g.m()).collect();
    order.sort_by(|&a, &b| g.edge(a).weight.total_cmp(&g.edge(b).weight).then(a.cmp(&b)));

    let mut active: Vec<EdgeId> = Vec::new();
    let mut local = vec![usize::MAX; n];
    let mut i = 0;
    while i < order.len() {
        let w = g.edge(order[i]).weight;
        let mut fresh = false;
        while i < order.len() && g.edge(order[i]).weight == w {
            let e = *g.edge(order[i]);
            if dsu.find(e.src) != dsu.find(e.dst) {
                active.push(order[i]);
                fresh = true;
            }
            i += 1;
        }
        if !fresh {
            continue;
        }
        active.retain(|&id| {
            let e = g.edge(id);
            dsu.find(e.src) != dsu.find(e.dst)
        });

        // super-vertex multigraph over the current DSU roots
        let mut roots: Vec<usize> = Vec::new();
        let mut arcs: Vec<(usize, usize, EdgeId)> = Vec::with_capacity(active.len());
        for &id in &active {
            let e = g.edge(id);
            let (a, b) = (dsu.find(e.src), dsu.find(e.dst));
            for x in [a, b] {
                if local[x] == usize::MAX {
                    local[x] = roots.len();
                    roots.push(x);
                }
            }
            arcs.push((local[a], local[b], id));
        }
        let k = roots.len();
        let mut out_adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); k];
        let mut in_adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); k];
        for &(a, b, id) in &arcs {
            out_adj[a].push((b, id));
            in_adj[b].push((a, id));
        }
        let plain: Vec<Vec<usize>> = out_adj.iter().map(|l| l.iter().map(|&(b, _)| b).collect()).collect();
        let mut comp_of = vec![usize::MAX; k];
        let comps: Vec<Vec<usize>> = tarjan(&plain).into_iter().filter(|c| c.len() > 1).collect();
        for (ci, comp) in comps.iter().enumerate() {
            for &x in comp {
                comp_of[x] = ci;
            }
        }

        for (ci, comp) in comps.iter().enumerate() {
            let start = *comp.iter().min().unwrap();
            for adj in [&out_adj, &in_adj] {
                let mut seen = vec![false; k];
                seen[start] = true;
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for &(y, id) in &adj[x] {
                        if comp_of[y] == ci && !seen[y] {
                            seen[y] = true;
                            cert.push(id);
                            queue.push_back(y);
                        }
                    }
                }
            }

            let node = parent.len();
            let mut kids: Vec<usize> = comp.iter().map(|&x| node_of[roots[x]]).collect();
            kids.sort_unstable();
            for &kid in &kids {
                parent[kid] = Some(node);
            }
            parent.push(None);
            label.push(w);
            children.push(kids);
            let mut merged = roots[comp[0]];
            for &x in &comp[1..] {
                merged = dsu.union(merged, roots[x]);
            }
            node_of[merged] = node;
        }

        for &x in &roots {
            local[x] = usize::MAX;
        }
    }

    cert.sort_unstable();
    cert.dedup();
    (MergeTree::new(n, parent, label, children), CertificateEdges { edges: cert })
}

/// `G` contracted to the window `[x_l, x_r]`, with the maps back to `G`.
#[derive(Clone, Debug)]
pub struct ContractionBundle {
    /// The scale `t` when the window is `[2^t / n, 2^t]`.
    pub scale: Option<i32>,
    pub x_l: f64,
    pub x_r: f64,
    pub graph: Graph,
    /// Original vertex to contracted vertex; `None` for removed vertices.
    pub vertex_map: Vec<Option<VertexId>>,
    /// Contracted edge to the original edge it stands for.
    pub edge_map: Vec<EdgeId>,
    /// Contracted source set.
    pub sources: VertexSet,
    /// Original vertices merged into each contracted vertex, sorted.
    pub groups: Vec<Vec<VertexId>>,
    /// Merge-tree node of each contracted vertex.
    pub group_nodes: Vec<usize>,
}

impl ContractionBundle {
    pub fn is_empty(&self) -> bool {
        self.graph.n() == 0
    }
}

/// Contracts `g` to `[x_l, x_r]`:
/// 1. merge every SCC of the edges of weight at most `x_l`;
/// 2. drop edges heavier than `x_r`;
/// 3. drop edges lying in no SCC of the edges of weight at most `x_r`;
/// 4. drop vertices left without edges.
///
/// Edges that end up inside one merged vertex are dropped, and among
/// parallel edges only the lightest (then lowest id) is kept.
pub fn contract(
    g: &Graph,
    sources: &VertexSet,
    x_l: f64,
    x_r: f64,
    tree: &MergeTree,
) -> Result<ContractionBundle> {
    if x_l > x_r {
        return Err(Error::InvalidWindow { x_l, x_r });
    }
    let n = g.n();
    let group: Vec<usize> = (0..n).map(|v| tree.group_at(v, x_l)).collect();

    let mut best: HashMap<(usize, usize), EdgeId> = HashMap::new();
    for (id, e) in g.edges().iter().enumerate() {
        if e.weight > x_r {
            continue;
        }
        let (ga, gb) = (group[e.src], group[e.dst]);
        if ga == gb {
            continue;
        }
        match tree.linfty_distance(e.src, e.dst) {
            Some(d) if d <= x_r => {}
            _ => continue,
        }
        best.entry((ga, gb))
            .and_modify(|cur| {
                let c = g.edge(*cur);
                if e.weight < c.weight || (e.weight == c.weight && id < *cur) {
                    *cur = id;
                }
            })
            .or_insert(id);
    }

    let mut touched: Vec<bool> = vec![false; tree.node_count()];
    for &(ga, gb) in best.keys() {
        touched[ga] = true;
        touched[gb] = true;
    }
    // contracted ids follow the smallest original member of each group
    let mut id_of_node: HashMap<usize, VertexId> = HashMap::new();
    let mut groups: Vec<Vec<VertexId>> = Vec::new();
    let mut group_nodes = Vec::new();
    let mut vertex_map = vec![None; n];
    for v in 0..n {
        let node = group[v];
        if !touched[node] {
            continue;
        }
        let id = *id_of_node.entry(node).or_insert_with(|| {
            groups.push(Vec::new());
            group_nodes.push(node);
            groups.len() - 1
        });
        groups[id].push(v);
        vertex_map[v] = Some(id);
    }

    let mut kept: Vec<EdgeId> = best.into_values().collect();
    kept.sort_unstable();
    let edges: Vec<Edge> = kept
        .iter()
        .map(|&id| {
            let e = g.edge(id);
            Edge { src: vertex_map[e.src].unwrap(), dst: vertex_map[e.dst].unwrap(), weight: e.weight }
        })
        .collect();
    let graph = Graph::new(groups.len(), edges)?;
    let contracted_sources =
        VertexSet::from_vertices(groups.len(), sources.iter().filter_map(|s| vertex_map[s]));

    Ok(ContractionBundle {
        scale: None,
        x_l,
        x_r,
        graph,
        vertex_map,
        edge_map: kept,
        sources: contracted_sources,
        groups,
        group_nodes,
    })
}

pub(crate) fn pow2(t: i32) -> f64 {
    2f64.powi(t)
}

/// Smallest integer `t` with `2^t >= x`, for `x > 0`.
pub(crate) fn ceil_log2(x: f64) -> i32 {
    let mut t = x.log2().ceil() as i32;
    while pow2(t - 1) >= x {
        t -= 1;
    }
    while pow2(t) < x {
        t += 1;
    }
    t
}

/// Scales at which the edge `(u, v)` of weight `w` survives contraction to
/// `[2^t / n, 2^t]`: `max(w, d∞) <= 2^t` and `d∞ > 2^t / n`.
pub fn edge_scales(weight: f64, linfty: f64, n: usize) -> Vec<i32> {
    let mut t = ceil_log2(weight.max(linfty));
    let mut out = Vec::new();
    while linfty > pow2(t) / n as f64 {
        out.push(t);
        t += 1;
    }
    out
}

/// Every non-empty `G^(t)` (the contraction to `[2^t / n, 2^t]`) with its
/// source set, in increasing `t`.
pub fn build_scales(g: &Graph, sources: &VertexSet, tree: &MergeTree) -> Result<Vec<ContractionBundle>> {
    let n = g.n();
    let mut scales = BTreeSet::new();
    for e in g.edges() {
        if let Some(d) = tree.linfty_distance(e.src, e.dst) {
            scales.extend(edge_scales(e.weight, d, n));
        }
    }
    let mut bundles = Vec::with_capacity(scales.len());
    for t in scales {
        let x_r = pow2(t);
        let mut b = contract(g, sources, x_r / n as f64, x_r, tree)?;
        if b.graph.m() > 0 {
            b.scale = Some(t);
            bundles.push(b);
        }
    }
    Ok(bundles)
}

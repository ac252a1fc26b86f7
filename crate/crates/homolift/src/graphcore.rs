//! Graphs with arc structure, generalized Petersen constructors, spanning
//! trees with designated cotree arcs, and the induced (transposed) homology
//! matrices of automorphisms.
//!
//! Vertices are 0-based internally; all text I/O is 1-based. Fundamental
//! cycles are oriented as "cotree arc first, then the tree path from its head
//! back to its tail", and a walk coordinate counts +1 per forward traversal
//! of the designated cotree arc, −1 per reverse traversal. This convention
//! reproduces the published homology matrices of the Möbius–Kantor graph
//! bit-exactly and is frozen by a golden test.

use crate::gfp::Fp;
use crate::linalg::FpMatrix;
use crate::permgrp::Perm;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("loops are not allowed (vertex {0})")]
    Loop(usize),
    #[error("generalized Petersen parameters out of range: n={0}, k={1}")]
    BadPetersenParams(usize, usize),
    #[error("malformed edge list line: {0:?}")]
    BadEdgeLine(String),
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("cotree arcs do not designate the non-tree edges")]
    BadCotree,
    #[error("walk is not closed")]
    WalkNotClosed,
    #[error("walk uses a non-arc ({0}, {1})")]
    NotAnArc(usize, usize),
    #[error("permutation is not an automorphism of the graph")]
    NotAnAutomorphism,
    #[error("permutation degree {0} does not match vertex count {1}")]
    DegreeMismatch(usize, usize),
}

/// A finite simple graph: an irreflexive symmetric adjacency relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>, // u < v, sorted
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut set = std::collections::BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Ok(Graph { n, adj, edges })
    }

    /// The generalized Petersen graph GP(n, k): outer cycle, inner step-k
    /// cycle, and spokes. Vertices 0..n−1 are outer, n..2n−1 inner (so the
    /// 1-based labels match the usual 1..2n scheme).
    pub fn gp(n: usize, k: usize) -> Result<Graph, GraphError> {
        if n < 3 || k < 1 || 2 * k >= n {
            return Err(GraphError::BadPetersenParams(n, k));
        }
        let mut edges = Vec::with_capacity(3 * n);
        for i in 0..n {
            edges.push((i, (i + 1) % n)); // outer
            edges.push((i, n + i)); // spoke
            edges.push((n + i, n + (i + k) % n)); // inner
        }
        Graph::from_edges(2 * n, &edges)
    }

    /// Parse a plain-text edge list: one "u v" pair per line, 1-indexed,
    /// blank lines ignored.
    pub fn from_edge_list_text(text: &str) -> Result<Graph, GraphError> {
        let mut pairs = Vec::new();
        let mut max = 0usize;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(GraphError::BadEdgeLine(line.to_string()));
            };
            let u: usize = a.parse().map_err(|_| GraphError::BadEdgeLine(line.to_string()))?;
            let v: usize = b.parse().map_err(|_| GraphError::BadEdgeLine(line.to_string()))?;
            if u == 0 || v == 0 {
                return Err(GraphError::BadEdgeLine(line.to_string()));
            }
            max = max.max(u).max(v);
            pairs.push((u - 1, v - 1));
        }
        Graph::from_edges(max, &pairs)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All ordered pairs (u, v) with u ~ v, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(2 * self.edges.len());
        for &(u, v) in &self.edges {
            out.push((u, v));
            out.push((v, u));
        }
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_automorphism(&self, a: &Perm) -> bool {
        if a.degree() != self.n {
            return false;
        }
        self.edges
            .iter()
            .all(|&(u, v)| self.has_edge(a.apply(u), a.apply(v)))
    }
}

/// A graph with a chosen spanning tree and an ordered sequence of designated
/// cotree arcs (one per non-tree edge); the cotree arcs index the homology
/// basis.
#[derive(Debug, Clone)]
pub struct TreeData {
    graph: Graph,
    tree_adj: Vec<Vec<usize>>,
    cotree: Vec<(usize, usize)>,
    // cotree lookup: arc -> (index, sign)
    cotree_index: HashMap<(usize, usize), (usize, i32)>,
}

impl TreeData {
    pub fn new(
        graph: Graph,
        tree_edges: &[(usize, usize)],
        cotree: Vec<(usize, usize)>,
    ) -> Result<TreeData, GraphError> {
        let n = graph.n();
        // spanning tree check: n−1 edges, connected on all vertices
        let mut tree_adj = vec![Vec::new(); n];
        let mut norm = std::collections::BTreeSet::new();
        for &(u, v) in tree_edges {
            if !graph.has_edge(u, v) {
                return Err(GraphError::NotAnArc(u, v));
            }
            norm.insert((u.min(v), u.max(v)));
        }
        if norm.len() != n.saturating_sub(1) {
            return Err(GraphError::NotSpanningTree);
        }
        for &(u, v) in &norm {
            tree_adj[u].push(v);
            tree_adj[v].push(u);
        }
        for a in tree_adj.iter_mut() {
            a.sort_unstable();
        }
        {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in &tree_adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count != n {
                return Err(GraphError::NotSpanningTree);
            }
        }
        // cotree arcs: exactly one designated arc per non-tree edge
        let mut non_tree: std::collections::BTreeSet<(usize, usize)> = graph
            .edges()
            .iter()
            .copied()
            .filter(|e| !norm.contains(e))
            .collect();
        let mut cotree_index = HashMap::new();
        for (j, &(u, v)) in cotree.iter().enumerate() {
            if !graph.has_edge(u, v) {
                return Err(GraphError::NotAnArc(u, v));
            }
            if !non_tree.remove(&(u.min(v), u.max(v))) {
                return Err(GraphError::BadCotree);
            }
            cotree_index.insert((u, v), (j, 1));
            cotree_index.insert((v, u), (j, -1));
        }
        if !non_tree.is_empty() {
            return Err(GraphError::BadCotree);
        }
        Ok(TreeData { graph, tree_adj, cotree, cotree_index })
    }

    /// BFS spanning tree from vertex 0; cotree arcs in sorted edge order,
    /// oriented (u, v) with u < v.
    pub fn bfs(graph: Graph) -> Result<TreeData, GraphError> {
        let n = graph.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![0usize];
        parent[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in graph.adj(v) {
                if parent[w] == usize::MAX && w != 0 {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(GraphError::NotSpanningTree);
        }
        let tree: Vec<(usize, usize)> = (1..n).map(|v| (parent[v], v)).collect();
        let tree_set: std::collections::BTreeSet<(usize, usize)> =
            tree.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let cotree: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .copied()
            .filter(|e| !tree_set.contains(e))
            .collect();
        TreeData::new(graph, &tree, cotree)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Betti number r = |E| − (n − 1).
    pub fn rank(&self) -> usize {
        self.cotree.len()
    }

    pub fn cotree(&self) -> &[(usize, usize)] {
        &self.cotree
    }

    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.tree_adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.tree_adj[u].binary_search(&v).is_ok()
    }

    /// The unique tree path from `from` to `to`, as a vertex sequence.
    pub fn tree_path(&self, from: usize, to: usize) -> Vec<usize> {
        let n = self.graph.n();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                break;
            }
            for &w in &self.tree_adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Fundamental cycle of cotree arc `j`: the arc itself followed by the
    /// tree path from its head back to its tail.
    pub fn fundamental_cycle(&self, j: usize) -> Vec<(usize, usize)> {
        let (u, v) = self.cotree[j];
        let mut walk = vec![(u, v)];
        let path = self.tree_path(v, u);
        for w in path.windows(2) {
            walk.push((w[0], w[1]));
        }
        walk
    }

    fn cotree_hit(&self, arc: (usize, usize)) -> Option<(usize, i32)> {
        self.cotree_index.get(&arc).copied()
    }
}

/// Homology coordinates of a closed walk over the cotree basis: coordinate
/// `j` counts signed traversals of cotree arc `j`, reduced mod p.
pub fn walk_coordinates(
    td: &TreeData,
    walk: &[(usize, usize)],
    field: Fp,
) -> Result<Vec<u64>, GraphError> {
    if !walk.is_empty() {
        if walk.last().unwrap().1 != walk[0].0 {
            return Err(GraphError::WalkNotClosed);
        }
        for w in walk.windows(2) {
            if w[0].1 != w[1].0 {
                return Err(GraphError::WalkNotClosed);
            }
        }
    }
    let mut coords = vec![0u64; td.rank()];
    for &(u, v) in walk {
        if !td.graph().has_edge(u, v) {
            return Err(GraphError::NotAnArc(u, v));
        }
        if let Some((j, sign)) = td.cotree_hit((u, v)) {
            coords[j] = if sign > 0 {
                field.add(coords[j], 1)
            } else {
                field.sub(coords[j], 1)
            };
        }
    }
    Ok(coords)
}

/// The transposed homology representation over `Z_p` for one graph-with-tree:
/// maps an automorphism to the matrix whose row `j` holds the coordinates of
/// the image of fundamental cycle `j` (that is, the transpose `M_a^t` of the
/// induced action on H₁).
#[derive(Debug)]
pub struct HomologyRep {
    td: Arc<TreeData>,
    field: Fp,
    cache: Mutex<HashMap<Vec<usize>, FpMatrix>>,
}

impl HomologyRep {
    pub fn new(td: Arc<TreeData>, field: Fp) -> Self {
        HomologyRep { td, field, cache: Mutex::new(HashMap::new()) }
    }

    pub fn tree_data(&self) -> &Arc<TreeData> {
        &self.td
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    /// The matrix `M_a^t` of the induced homology action of the automorphism
    /// `a`, in the cotree basis. Inputs are verified to be automorphisms.
    pub fn matrix(&self, a: &Perm) -> Result<FpMatrix, GraphError> {
        let graph = self.td.graph();
        if a.degree() != graph.n() {
            return Err(GraphError::DegreeMismatch(a.degree(), graph.n()));
        }
        if !graph.is_automorphism(a) {
            return Err(GraphError::NotAnAutomorphism);
        }
        {
            let cache = self.cache.lock().unwrap();
            if let Some(m) = cache.get(a.images()) {
                return Ok(m.clone());
            }
        }
        let r = self.td.rank();
        let mut rows = Vec::with_capacity(r);
        for j in 0..r {
            let cycle = self.td.fundamental_cycle(j);
            let image: Vec<(usize, usize)> = cycle
                .iter()
                .map(|&(u, v)| (a.apply(u), a.apply(v)))
                .collect();
            rows.push(walk_coordinates(&self.td, &image, self.field)?);
        }
        let m = FpMatrix::from_rows(self.field, &rows);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(a.images().to_vec()).or_insert(m).clone())
    }
}

/// The Möbius–Kantor graph GP(8,3).
pub fn mk_graph() -> Graph {
    Graph::gp(8, 3).expect("GP(8,3) parameters are valid")
}

/// The pinned spanning tree of GP(8,3): all spokes and all inner edges except
/// {11, 16}; cotree arcs ordered (x, x₁, …, x₈) with x = (16, 11) and
/// xᵢ = (i, 1 + (i mod 8)) in 1-based labels.
pub fn mk_tree() -> TreeData {
    let graph = mk_graph();
    let mut tree = Vec::new();
    for i in 0..8usize {
        tree.push((i, 8 + i)); // spokes {i, 8+i}
        let (a, b) = (8 + i, 8 + (i + 3) % 8);
        if (a.min(b), a.max(b)) != (10, 15) {
            // all inner edges except {11, 16} (0-based {10, 15})
            tree.push((a, b));
        }
    }
    let mut cotree = vec![(15, 10)]; // x = (16, 11)
    for i in 0..8usize {
        cotree.push((i, (i + 1) % 8)); // x_i = (i, 1 + (i mod 8))
    }
    TreeData::new(graph, &tree, cotree).expect("pinned tree is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &Graph) -> usize {
        // brute force: BFS from each vertex, shortest cycle through the root
        let mut best = usize::MAX;
        for root in 0..g.n() {
            let mut dist = vec![usize::MAX; g.n()];
            let mut parent = vec![usize::MAX; g.n()];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in g.adj(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        best
    }

    fn is_bipartite(g: &Graph) -> bool {
        let mut color = vec![2u8; g.n()];
        for start in 0..g.n() {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in g.adj(v) {
                    if color[w] == 2 {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn gp_graph_examples() {
        let mk = Graph::gp(8, 3).unwrap();
        assert_eq!(mk.n(), 16);
        assert_eq!(mk.edges().len(), 24);
        assert!((0..16).all(|v| mk.degree(v) == 3));

        let petersen = Graph::gp(5, 2).unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.edges().len(), 15);
        assert_eq!(girth(&petersen), 5);

        let prism = Graph::gp(4, 1).unwrap();
        assert_eq!(prism.n(), 8);
        assert!(is_bipartite(&prism));
        assert_eq!(girth(&prism), 4);

        assert!(Graph::gp(8, 4).is_err());
        assert!(Graph::gp(2, 1).is_err());
    }

    #[test]
    fn mk_tree_examples() {
        let td = mk_tree();
        assert_eq!(td.tree_edges().len(), 15);
        assert_eq!(td.rank(), 9);
        // x = (16, 11) in 1-based labels
        assert_eq!(td.cotree()[0], (15, 10));
        // x_3 = (3, 4)
        assert_eq!(td.cotree()[3], (2, 3));
        assert_eq!(td.cotree()[8], (7, 0));
    }

    #[test]
    fn fundamental_cycles_are_closed_tree_walks() {
        let td = mk_tree();
        for j in 0..td.rank() {
            let walk = td.fundamental_cycle(j);
            assert_eq!(walk[0], td.cotree()[j]);
            assert_eq!(walk.last().unwrap().1, walk[0].0, "closed");
            // after the first arc, only tree arcs, each tree edge at most once
            let mut seen = std::collections::HashSet::new();
            for &(u, v) in &walk[1..] {
                assert!(td.is_tree_edge(u, v));
                assert!(seen.insert((u.min(v), u.max(v))), "tree edge repeated");
            }
            // cycle of x has length 1 + tree-distance(11, 16)
            if j == 0 {
                assert_eq!(walk.len(), 1 + (td.tree_path(10, 15).len() - 1));
            }
        }
    }

    #[test]
    fn walk_coordinate_examples() {
        let td = mk_tree();
        let f = Fp::new(5).unwrap();
        for j in 0..td.rank() {
            let walk = td.fundamental_cycle(j);
            let coords = walk_coordinates(&td, &walk, f).unwrap();
            let mut expected = vec![0u64; 9];
            expected[j] = 1;
            assert_eq!(coords, expected);
            // traversed twice: 2·e_j
            let mut twice = walk.clone();
            twice.extend(walk.iter().copied());
            let coords = walk_coordinates(&td, &twice, f).unwrap();
            expected[j] = 2;
            assert_eq!(coords, expected);
        }
        // tree-only closed walk → zero
        let path = td.tree_path(0, 5);
        let mut walk: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
        let mut back: Vec<(usize, usize)> = walk.iter().rev().map(|&(u, v)| (v, u)).collect();
        walk.append(&mut back);
        assert_eq!(walk_coordinates(&td, &walk, f).unwrap(), vec![0u64; 9]);
        // open walk rejected
        assert!(matches!(
            walk_coordinates(&td, &[(0, 1)], f),
            Err(GraphError::WalkNotClosed)
        ));
    }

    #[test]
    fn homology_of_identity() {
        let td = Arc::new(mk_tree());
        let rep = HomologyRep::new(td.clone(), Fp::new(7).unwrap());
        let id = Perm::identity(16);
        let m = rep.matrix(&id).unwrap();
        assert_eq!(m, FpMatrix::identity(Fp::new(7).unwrap(), 9));
    }

    #[test]
    fn homology_rejects_non_automorphism() {
        let td = Arc::new(mk_tree());
        let rep = HomologyRep::new(td, Fp::new(5).unwrap());
        let bad = Perm::from_cycles(16, &[&[1, 2]]).unwrap();
        assert!(matches!(rep.matrix(&bad), Err(GraphError::NotAnAutomorphism)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::gp(5, 2).unwrap();
        let text = g.to_edge_list_text();
        let back = Graph::from_edge_list_text(&text).unwrap();
        assert_eq!(g, back);
        assert!(Graph::from_edge_list_text("1 2\n2\n").is_err());
        let with_blanks = Graph::from_edge_list_text("1 2\n\n2 3\n").unwrap();
        assert_eq!(with_blanks.edges().len(), 2);
    }

    #[test]
    fn bfs_tree_on_arbitrary_graph() {
        let g = Graph::gp(5, 2).unwrap();
        let td = TreeData::bfs(g).unwrap();
        assert_eq!(td.rank(), 15 - 9);
        for j in 0..td.rank() {
            let walk = td.fundamental_cycle(j);
            assert_eq!(walk.last().unwrap().1, walk[0].0);
        }
    }
}

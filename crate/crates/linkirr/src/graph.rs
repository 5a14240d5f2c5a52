//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! one adjacency bit row per vertex.
//!
//! Values are immutable after construction; every operation returns a fresh
//! graph. All constructors maintain symmetry, irreflexivity and the
//! degree-sum identity `sum(d(v)) = 2 e(G)`.

use std::fmt;

use thiserror::Error;

/// Hard vertex cap. Single-word bit rows keep the enumeration hot loops on
/// plain `u64` operations; nothing in this crate needs larger graphs.
pub const MAX_VERTICES: usize = 64;

/// Errors from graph construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
}

/// An immutable simple graph: `n` vertices `0..n`, adjacency as bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Sorted degree multiset plus the set of distinct degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSummary {
    /// All vertex degrees, ascending. Length equals the order of the graph.
    pub multiset: Vec<usize>,
    /// Distinct degrees, ascending.
    pub distinct: Vec<usize>,
}

/// Outcome of the bipartiteness test: a proper 2-coloring, or an odd cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `colors[v]` is the side of vertex `v`; every edge joins both sides.
    TwoColoring(Vec<bool>),
    /// Vertex sequence of a cycle of odd length present in the graph.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::TwoColoring(_))
    }
}

impl Graph {
    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate pairs and reversed
    /// duplicates collapse to a single edge; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
        }
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Graph {
        let g = Graph { n, rows };
        debug_assert!(g.check_invariants());
        g
    }

    /// Symmetry, irreflexivity and the degree-sum identity.
    pub(crate) fn check_invariants(&self) -> bool {
        let mask = self.vertex_mask();
        for u in 0..self.n {
            if self.rows[u] & !mask != 0 || self.rows[u] >> u & 1 == 1 {
                return false;
            }
            for v in 0..self.n {
                if self.rows[u] >> v & 1 != self.rows[v] >> u & 1 {
                    return false;
                }
            }
        }
        let degree_sum: usize = (0..self.n).map(|v| self.degree(v)).sum();
        degree_sum == 2 * self.edge_count()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Bit mask covering all vertices `0..n`.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Neighborhood of `v` as a bit row.
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = if u + 1 >= 64 {
                0
            } else {
                self.rows[u] >> (u + 1) << (u + 1)
            };
            for v in bits(above) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let mut multiset = self.degrees();
        multiset.sort_unstable();
        let mut distinct = multiset.clone();
        distinct.dedup();
        DegreeSummary { multiset, distinct }
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    /// Complement: adjacency negated off the diagonal.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & mask & !(1 << v))
            .collect();
        Graph::from_rows(self.n, rows)
    }

    /// Induced subgraph on the vertex set `keep` (a bit mask), relabeled to
    /// `0..|keep|` in ascending original-index order.
    pub fn induced_subgraph(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let verts: Vec<usize> = bits(keep).collect();
        let rows = verts
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                for (new_u, &u) in verts.iter().enumerate() {
                    if self.has_edge(v, u) {
                        row |= 1 << new_u;
                    }
                }
                row
            })
            .collect();
        Graph::from_rows(verts.len(), rows)
    }

    /// The graph with vertex `v` removed and higher vertices shifted down.
    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertex_mask() & !(1 << v))
    }

    /// The graph with the edge `(u, v)` removed (a no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut rows = self.rows.clone();
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Graph::from_rows(self.n, rows)
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a permutation of
    /// `0..n`.
    pub fn apply_perm(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.rows[u]) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_rows(self.n, rows)
    }

    /// Adds vertex `n` adjacent to the vertices in `neighbors` (a bit mask
    /// over `0..n`). Used by the enumeration tree.
    pub(crate) fn with_new_vertex(&self, neighbors: u64) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(neighbors & !self.vertex_mask(), 0);
        let mut rows = self.rows.clone();
        rows.push(neighbors);
        for u in bits(neighbors) {
            rows[u] |= 1 << self.n;
        }
        Graph::from_rows(self.n + 1, rows)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0) == self.vertex_mask()
    }

    /// Bit mask of the connected component containing `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut grow = 0u64;
            for v in bits(frontier) {
                grow |= self.rows[v];
            }
            frontier = grow & !seen;
            seen |= grow;
        }
        seen
    }

    /// All connected components, ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.component_of(v);
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    /// Length of a shortest cycle; `None` when the graph is acyclic.
    ///
    /// One breadth-first pass per start vertex; a non-tree edge seen at
    /// depths `d(u)`, `d(w)` closes a walk of length `d(u) + d(w) + 1`, and
    /// the minimum over all starts is exactly the girth.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for start in 0..self.n {
            let mut depth = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            depth[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * depth[u] >= b) {
                    break;
                }
                for w in bits(self.rows[u]) {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if w != parent[u] {
                        let cand = depth[u] + depth[w] + 1;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// Proper 2-coloring, or an odd cycle witnessing non-bipartiteness.
    pub fn bipartiteness(&self) -> Bipartiteness {
        let mut color = vec![2u8; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in bits(self.rows[u]) {
                    if color[w] == 2 {
                        color[w] = 1 - color[u];
                        parent[w] = u;
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return Bipartiteness::OddCycle(odd_cycle(&parent, u, w));
                    }
                }
            }
        }
        Bipartiteness::TwoColoring(color.into_iter().map(|c| c == 1).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartiteness().is_bipartite()
    }
}

/// Odd cycle through the conflicting same-color edge `(u, w)`: walk both
/// vertices up the BFS forest to their lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Strip the common suffix down to the LCA.
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

/// Iterator over the set bit positions of a mask, ascending.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

// ---- named graphs ----------------------------------------------------------

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Ok(Graph::empty(n)?.complement())
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::UnknownName(format!("C{n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges)
}

/// Complete bipartite graph with sides `a` and `b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::build(a + b, &edges)
}

/// Hypercube on `2^k` vertices; vertices are bit strings, edges flip one bit.
pub fn hypercube(k: u32) -> Result<Graph, GraphError> {
    let n = 1usize << k;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..k {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::build(n, &edges)
}

/// The icosahedron: 12 vertices, 30 edges, 5-regular, planar, every link a
/// 5-cycle. Vertex 0 is an apex over ring 1..=5, vertex 11 an apex under
/// ring 6..=10, with an antiprism between the rings.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::with_capacity(30);
    for i in 1..=5 {
        edges.push((0, i));
        edges.push((11, i + 5));
        edges.push((i, i % 5 + 1)); // upper ring
        edges.push((i + 5, i % 5 + 6)); // lower ring
        edges.push((i, i + 5));
        edges.push((i, i % 5 + 6));
    }
    Graph::build(12, &edges).expect("icosahedron edge list is valid")
}

/// Parses names like `K5`, `C7`, `P4`, `K3,3`, `Q4`, `icosahedron`.
pub fn make_named(name: &str) -> Result<Graph, GraphError> {
    let unknown = || GraphError::UnknownName(name.to_string());
    if name.eq_ignore_ascii_case("icosahedron") {
        return Ok(icosahedron());
    }
    let (kind, rest) = name.split_at(name.len().min(1));
    match kind {
        "K" | "k" => {
            if let Some((a, b)) = rest.split_once(',') {
                let a = a.trim().parse().map_err(|_| unknown())?;
                let b = b.trim().parse().map_err(|_| unknown())?;
                complete_bipartite(a, b)
            } else {
                complete(rest.trim().parse().map_err(|_| unknown())?)
            }
        }
        "C" | "c" => cycle(rest.trim().parse().map_err(|_| unknown())?),
        "P" | "p" => path(rest.trim().parse().map_err(|_| unknown())?),
        "Q" | "q" => hypercube(rest.trim().parse().map_err(|_| unknown())?),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_triangle() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(
            Graph::build(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn degree_examples() {
        let k5 = complete(5).unwrap();
        for v in 0..5 {
            assert_eq!(k5.degree(v), 4);
        }
        assert_eq!(path(3).unwrap().degree(1), 2);
    }

    #[test]
    fn degree_summary_examples() {
        let k4 = complete(4).unwrap();
        assert_eq!(k4.degree_summary().multiset, vec![3, 3, 3, 3]);
        assert_eq!(k4.degree_summary().distinct, vec![3]);

        let star = complete_bipartite(1, 3).unwrap();
        let s = star.degree_summary();
        assert_eq!(s.multiset, vec![1, 1, 1, 3]);
        assert_eq!(s.distinct, vec![1, 3]);
    }

    #[test]
    fn complement_examples() {
        let k5 = complete(5).unwrap();
        assert_eq!(k5.complement().edge_count(), 0);
        let c8 = cycle(8).unwrap();
        assert_eq!(c8.complement().regularity(), Some(5));
        // involution
        assert_eq!(c8.complement().complement(), c8);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = complete(5).unwrap();
        let tri = k5.induced_subgraph(0b10101);
        assert_eq!(tri.order(), 3);
        assert_eq!(tri.edge_count(), 3);

        let c6 = cycle(6).unwrap();
        let ind = c6.induced_subgraph(0b010101);
        assert_eq!(ind.order(), 3);
        assert_eq!(ind.edge_count(), 0);

        assert_eq!(k5.induced_subgraph(k5.vertex_mask()), k5);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).unwrap().girth(), Some(5));
        assert_eq!(path(6).unwrap().girth(), None);
        assert_eq!(complete(4).unwrap().girth(), Some(3));
        assert_eq!(complete_bipartite(2, 3).unwrap().girth(), Some(4));
        assert_eq!(hypercube(3).unwrap().girth(), Some(4));
        assert_eq!(Graph::empty(5).unwrap().girth(), None);
    }

    #[test]
    fn bipartite_examples() {
        assert!(complete_bipartite(3, 3).unwrap().is_bipartite());
        assert!(hypercube(4).unwrap().is_bipartite());
        match cycle(3).unwrap().bipartiteness() {
            Bipartiteness::OddCycle(c) => assert_eq!(c.len(), 3),
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        for g in [cycle(5).unwrap(), cycle(7).unwrap(), complete(6).unwrap()] {
            match g.bipartiteness() {
                Bipartiteness::OddCycle(c) => {
                    assert!(c.len() % 2 == 1 && c.len() >= 3);
                    let mut sorted = c.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    assert_eq!(sorted.len(), c.len(), "repeated vertex in {c:?}");
                    for i in 0..c.len() {
                        assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                    }
                }
                Bipartiteness::TwoColoring(_) => panic!("graph is not bipartite"),
            }
        }
    }

    #[test]
    fn two_coloring_is_proper() {
        let g = hypercube(3).unwrap();
        match g.bipartiteness() {
            Bipartiteness::TwoColoring(c) => {
                for (u, v) in g.edges() {
                    assert_ne!(c[u], c[v]);
                }
            }
            _ => panic!("hypercube is bipartite"),
        }
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(icosahedron().regularity(), Some(5));
        assert_eq!(Graph::empty(4).unwrap().regularity(), Some(0));
        assert_eq!(path(3).unwrap().regularity(), None);
    }

    #[test]
    fn named_graphs() {
        let q3 = make_named("Q3").unwrap();
        assert_eq!(q3.order(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert_eq!(q3.regularity(), Some(3));
        assert!(q3.is_bipartite());

        let ico = make_named("icosahedron").unwrap();
        assert_eq!(ico.order(), 12);
        assert_eq!(ico.edge_count(), 30);
        assert_eq!(ico.edge_count(), 3 * ico.order() - 6);

        let k33 = make_named("K3,3").unwrap();
        assert_eq!(k33.order(), 6);
        assert_eq!(k33.edge_count(), 9);

        assert!(make_named("X9").is_err());
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).unwrap().is_connected());
        let two_triangles = Graph::build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.components().len(), 2);
    }

    #[test]
    fn max_order_is_supported() {
        let g = Graph::empty(64).unwrap();
        assert_eq!(g.vertex_mask(), u64::MAX);
        assert!(Graph::empty(65).is_err());
        let k = complete(64).unwrap();
        assert_eq!(k.edge_count(), 64 * 63 / 2);
        assert_eq!(k.complement().edge_count(), 0);
    }
}

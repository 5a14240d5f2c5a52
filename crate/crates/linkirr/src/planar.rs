//! Planarity with certificates in both directions.
//!
//! Planar graphs get a rotation system (cyclic neighbor order per vertex)
//! whose face trace satisfies Euler's formula per connected component;
//! nonplanar graphs get a Kuratowski obstruction: a subdivision of K5 or
//! K3,3 located inside the graph, as branch vertices plus internally
//! disjoint paths.
//!
//! The decision procedure embeds each biconnected block by iterative face
//! splitting: starting from a cycle, every remaining fragment (a chord, or a
//! component of the unembedded vertices with its attachment edges) is placed
//! into a face whose boundary carries all of its attachments, most
//! constrained fragment first. A fragment with no admissible face certifies
//! nonplanarity, and an obstruction is then extracted by deleting every edge
//! whose removal keeps the graph nonplanar: what survives is exactly a
//! Kuratowski subdivision.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::graph::{bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("operation requires order >= 3, got {0}")]
    OrderTooSmall(usize),
}

/// Cyclic neighbor order (clockwise) per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub order: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside the graph: `branch_vertices` are the
/// subdivision's degree-3/4 vertices, `paths` the internally disjoint
/// connecting paths (endpoints included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kuratowski {
    pub kind: ObstructionKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

/// Planarity decision; exactly one certificate is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityResult {
    pub planar: bool,
    pub embedding: Option<RotationSystem>,
    pub obstruction: Option<Kuratowski>,
}

/// Decides planarity and produces the matching certificate. An edge count
/// above `3n - 6` already settles the answer, but the obstruction is still
/// extracted so every negative verdict is checkable.
pub fn is_planar(g: &Graph) -> PlanarityResult {
    match embed(g) {
        Some(rot) => {
            debug_assert!(verify_embedding(g, &rot));
            PlanarityResult { planar: true, embedding: Some(rot), obstruction: None }
        }
        None => {
            let obstruction = kuratowski_witness(g);
            debug_assert!(verify_obstruction(g, &obstruction));
            PlanarityResult { planar: false, embedding: None, obstruction: Some(obstruction) }
        }
    }
}

/// True when the graph is planar with exactly `3n - 6` edges and every face
/// of the computed embedding is a triangle. The face condition is traced
/// from the rotation system, not assumed from the edge count.
pub fn is_triangulation(g: &Graph) -> Result<bool, PlanarError> {
    if g.order() < 3 {
        return Err(PlanarError::OrderTooSmall(g.order()));
    }
    let Some(rot) = embed(g) else {
        return Ok(false);
    };
    if g.edge_count() != 3 * g.order() - 6 {
        return Ok(false);
    }
    Ok(trace_faces(g, &rot).iter().all(|f| f.len() == 3))
}

/// The necessary condition `e <= 3n - 6` alone (no embedding attempted).
pub fn planar_edge_bound_check(g: &Graph) -> Result<bool, PlanarError> {
    if g.order() < 3 {
        return Err(PlanarError::OrderTooSmall(g.order()));
    }
    Ok(g.edge_count() <= 3 * g.order() - 6)
}

// ---- embedding -----------------------------------------------------------------

/// Builds a planar rotation system, or `None` when the graph is nonplanar.
/// Components are embedded independently; blocks of a component are embedded
/// separately and their rotations concatenated at the cut vertices.
fn embed(g: &Graph) -> Option<RotationSystem> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for block in blocks(g) {
        if let [(u, v)] = block.as_slice() {
            rotation[*u].push(*v);
            rotation[*v].push(*u);
            continue;
        }
        let faces = embed_block(g, &block)?;
        for (v, cycle) in block_rotation(&faces) {
            rotation[v].extend(cycle);
        }
    }
    Some(RotationSystem { order: rotation })
}

/// Biconnected components as edge lists, via DFS lowpoints.
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        g: &'a Graph,
        num: Vec<usize>,
        low: Vec<usize>,
        counter: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: usize) {
            self.counter += 1;
            self.num[u] = self.counter;
            self.low[u] = self.counter;
            for v in bits(self.g.row(u)) {
                if self.num[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, u);
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.num[u] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if v != parent && self.num[v] < self.num[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.num[v]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        num: vec![0; g.order()],
        low: vec![0; g.order()],
        counter: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.order() {
        if dfs.num[v] == 0 {
            dfs.visit(v, usize::MAX);
        }
    }
    dfs.blocks
}

/// A fragment of the graph relative to the embedded subgraph: either a
/// chord between embedded vertices, or one component of the unembedded
/// vertices together with its attachment edges.
struct Fragment {
    attach: u64,
    interior: u64,
    chord: Option<(usize, usize)>,
}

/// Embeds one biconnected block (at least 3 vertices); returns its faces as
/// directed vertex cycles, each directed edge appearing in exactly one face.
fn embed_block(g: &Graph, block: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    // Block-local adjacency.
    let mut adj = vec![0u64; g.order()];
    let mut block_verts = 0u64;
    for &(u, v) in block {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        block_verts |= 1 << u | 1 << v;
    }

    let cycle = initial_cycle(&adj, block_verts.trailing_zeros() as usize);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut embedded_verts: u64 = cycle.iter().fold(0, |m, &v| m | 1 << v);
    let mut embedded = vec![0u64; g.order()];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded[a] |= 1 << b;
        embedded[b] |= 1 << a;
    }

    loop {
        let fragments = find_fragments(&adj, block_verts, &embedded, embedded_verts);
        if fragments.is_empty() {
            return Some(faces);
        }

        // Faces admissible for a fragment: boundary covers every attachment.
        let face_masks: Vec<u64> =
            faces.iter().map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut pick: Option<(usize, usize, usize)> = None; // (count, fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let mut count = 0;
            let mut first_face = usize::MAX;
            for (i, mask) in face_masks.iter().enumerate() {
                if mask & frag.attach == frag.attach {
                    count += 1;
                    if first_face == usize::MAX {
                        first_face = i;
                    }
                }
            }
            if count == 0 {
                return None;
            }
            if pick.is_none_or(|(c, _, _)| count < c) {
                pick = Some((count, fi, first_face));
            }
        }
        let (_, fi, face_idx) = pick.expect("fragments exist");
        let frag = &fragments[fi];

        let path = alpha_path(&adj, frag);
        for w in &path[1..path.len() - 1] {
            embedded_verts |= 1 << w;
        }
        for pair in path.windows(2) {
            embedded[pair[0]] |= 1 << pair[1];
            embedded[pair[1]] |= 1 << pair[0];
        }
        split_face(&mut faces, face_idx, &path);
    }
}

/// Chords first (sorted), then unembedded components by smallest vertex.
fn find_fragments(
    adj: &[u64],
    block_verts: u64,
    embedded: &[u64],
    embedded_verts: u64,
) -> Vec<Fragment> {
    let mut fragments = Vec::new();
    for u in bits(block_verts & embedded_verts) {
        for v in bits(adj[u] & embedded_verts & !embedded[u]) {
            if u < v {
                fragments.push(Fragment {
                    attach: 1 << u | 1 << v,
                    interior: 0,
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut remaining = block_verts & !embedded_verts;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut grow = 0u64;
            for v in bits(frontier) {
                grow |= adj[v] & !embedded_verts;
            }
            frontier = grow & !comp;
            comp |= grow;
        }
        let attach = bits(comp).fold(0u64, |m, v| m | adj[v]) & embedded_verts;
        fragments.push(Fragment { attach, interior: comp, chord: None });
        remaining &= !comp;
    }
    fragments
}

/// Any cycle in the block: the first block edge plus a shortest path around
/// it, which exists because the block is 2-connected.
fn initial_cycle(adj: &[u64], u: usize) -> Vec<usize> {
    let v = adj[u].trailing_zeros() as usize;
    let mut parent = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::from([u]);
    parent[u] = u;
    while let Some(x) = queue.pop_front() {
        for y in bits(adj[x]) {
            if (x, y) == (u, v) || (x, y) == (v, u) || parent[y] != usize::MAX {
                continue;
            }
            parent[y] = x;
            if y == v {
                let mut cycle = vec![v];
                let mut w = x;
                while w != u {
                    cycle.push(w);
                    w = parent[w];
                }
                cycle.push(u);
                return cycle;
            }
            queue.push_back(y);
        }
    }
    unreachable!("a biconnected block with >= 3 vertices contains a cycle")
}

/// A path through the fragment between two distinct attachment vertices,
/// interior vertices strictly inside the fragment.
fn alpha_path(adj: &[u64], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attach.trailing_zeros() as usize;
    let others = frag.attach & !(1 << a);
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for w in bits(adj[a] & frag.interior) {
        parent.entry(w).or_insert(a);
        queue.push_back(w);
    }
    while let Some(x) = queue.pop_front() {
        let finish = adj[x] & others;
        if finish != 0 {
            let b = finish.trailing_zeros() as usize;
            let mut path = vec![b, x];
            let mut w = x;
            while parent[&w] != a {
                w = parent[&w];
                path.push(w);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for y in bits(adj[x] & frag.interior) {
            if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(y) {
                slot.insert(x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block reaches a second attachment")
}

/// Replaces face `fi` by the two faces obtained by routing `path` (from
/// `path[0]` to `path[last]`, both on the face) across it.
fn split_face(faces: &mut Vec<Vec<usize>>, fi: usize, path: &[usize]) {
    let face = faces.swap_remove(fi);
    let a = path[0];
    let b = *path.last().expect("path has endpoints");
    let pos_a = face.iter().position(|&v| v == a).expect("a on face");
    let rotated: Vec<usize> = face[pos_a..].iter().chain(&face[..pos_a]).copied().collect();
    let j = rotated.iter().position(|&v| v == b).expect("b on face");

    // rotated = [a, x.., b, y..]; path = a p1 .. pk b
    let mut f1: Vec<usize> = rotated[..=j].to_vec();
    f1.extend(path[1..path.len() - 1].iter().rev());
    let mut f2: Vec<usize> = rotated[j..].to_vec();
    f2.push(a);
    f2.extend(&path[1..path.len() - 1]);

    faces.push(f1);
    faces.push(f2);
}

/// Per-vertex rotation cycles of one block, from its face set: in the face
/// containing the directed edge `(u, v)`, the edge leaving `v` names the
/// neighbor after `u` around `v`.
fn block_rotation(faces: &[Vec<usize>]) -> Vec<(usize, Vec<usize>)> {
    let mut succ: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for face in faces {
        let len = face.len();
        for t in 0..len {
            let (u, v, w) = (face[t], face[(t + 1) % len], face[(t + 2) % len]);
            succ.entry(v).or_default().insert(u, w);
        }
    }
    succ.into_iter()
        .map(|(v, next)| {
            let first = *next.keys().next().expect("vertex on a face has neighbors");
            let mut cycle = vec![first];
            let mut cur = next[&first];
            while cur != first {
                cycle.push(cur);
                cur = next[&cur];
            }
            debug_assert_eq!(cycle.len(), next.len(), "rotation at {v} is a single cycle");
            (v, cycle)
        })
        .collect()
}

// ---- certificates ---------------------------------------------------------------

/// Faces of the embedding `rot`, traced as orbits of the directed-edge
/// successor map. Every directed edge lies on exactly one face.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Vec<Vec<usize>> {
    let index: Vec<BTreeMap<usize, usize>> = rot
        .order
        .iter()
        .map(|cycle| cycle.iter().enumerate().map(|(i, &u)| (u, i)).collect())
        .collect();
    let mut seen: std::collections::HashSet<(usize, usize)> = Default::default();
    let mut faces = Vec::new();
    for u in 0..g.order() {
        for &v in &rot.order[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut y) = (u, v);
            loop {
                face.push(x);
                seen.insert((x, y));
                let at = index[y][&x];
                let next = rot.order[y][(at + 1) % rot.order[y].len()];
                (x, y) = (y, next);
                if (x, y) == (u, v) {
                    break;
                }
            }
            faces.push(face);
        }
    }
    faces
}

/// Checks an embedding: the rotation lists exactly the neighbor sets, and
/// the face trace satisfies Euler's formula `n - e + f = 2` on every
/// connected component (an isolated vertex counts one face).
pub fn verify_embedding(g: &Graph, rot: &RotationSystem) -> bool {
    if rot.order.len() != g.order() {
        return false;
    }
    for v in 0..g.order() {
        let mut listed: Vec<usize> = rot.order[v].clone();
        listed.sort_unstable();
        let actual: Vec<usize> = bits(g.row(v)).collect();
        if listed != actual {
            return false;
        }
    }
    let faces = trace_faces(g, rot);
    for comp in g.components() {
        let n = comp.count_ones() as usize;
        let e = bits(comp).map(|v| (g.row(v) & comp).count_ones() as usize).sum::<usize>() / 2;
        let f = if e == 0 {
            1
        } else {
            faces.iter().filter(|f| comp >> f[0] & 1 == 1).count()
        };
        if n + f != e + 2 {
            return false;
        }
    }
    true
}

/// Checks an obstruction: paths lie in the graph, connect the declared
/// branch vertices, are internally disjoint, and wire the branch vertices
/// as K5 or K3,3.
pub fn verify_obstruction(g: &Graph, k: &Kuratowski) -> bool {
    let branch = &k.branch_vertices;
    let (expected_branch, expected_paths) = match k.kind {
        ObstructionKind::K5 => (5, 10),
        ObstructionKind::K33 => (6, 9),
    };
    if branch.len() != expected_branch || k.paths.len() != expected_paths {
        return false;
    }
    let mut interior_seen = 0u64;
    let mut endpoint_pairs = Vec::new();
    for path in &k.paths {
        if path.len() < 2 {
            return false;
        }
        for pair in path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return false;
            }
        }
        let (s, t) = (path[0], *path.last().unwrap());
        if !branch.contains(&s) || !branch.contains(&t) || s == t {
            return false;
        }
        for &w in &path[1..path.len() - 1] {
            if branch.contains(&w) || interior_seen >> w & 1 == 1 {
                return false;
            }
            interior_seen |= 1 << w;
        }
        endpoint_pairs.push((s.min(t), s.max(t)));
    }
    endpoint_pairs.sort_unstable();
    endpoint_pairs.dedup();
    if endpoint_pairs.len() != expected_paths {
        return false; // some branch pair connected twice
    }
    match k.kind {
        ObstructionKind::K5 => {
            let mut want = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    want.push((branch[i].min(branch[j]), branch[i].max(branch[j])));
                }
            }
            want.sort_unstable();
            endpoint_pairs == want
        }
        ObstructionKind::K33 => {
            let connected =
                |a: usize, b: usize| endpoint_pairs.contains(&(a.min(b), a.max(b)));
            let side0: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|&b| b == branch[0] || !connected(branch[0], b))
                .collect();
            let side1: Vec<usize> =
                branch.iter().copied().filter(|&b| !side0.contains(&b)).collect();
            side0.len() == 3
                && side1.len() == 3
                && side0.iter().all(|&a| side1.iter().all(|&b| connected(a, b)))
                && side0.iter().all(|&a| side0.iter().all(|&b| a == b || !connected(a, b)))
        }
    }
}

// ---- obstruction extraction -------------------------------------------------------

fn decide_planar(g: &Graph) -> bool {
    embed(g).is_some()
}

/// Deletes every edge whose removal keeps the graph nonplanar; the surviving
/// edges form a subdivision of K5 or K3,3, which is then read off from the
/// degree-3-or-more vertices and the chains between them.
fn kuratowski_witness(g: &Graph) -> Kuratowski {
    let mut h = g.clone();
    for (u, v) in g.edges() {
        let candidate = h.without_edge(u, v);
        if !decide_planar(&candidate) {
            h = candidate;
        }
    }

    let branch_vertices: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = match branch_vertices.len() {
        5 => ObstructionKind::K5,
        6 => ObstructionKind::K33,
        other => unreachable!("edge-minimal nonplanar graph has {other} branch vertices"),
    };

    let mut paths = Vec::new();
    for &b in &branch_vertices {
        for first in bits(h.row(b)) {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while h.degree(cur) == 2 {
                let next = bits(h.row(cur)).find(|&w| w != prev).expect("degree-2 chain");
                path.push(next);
                (prev, cur) = (cur, next);
            }
            let reversed: Vec<usize> = path.iter().rev().copied().collect();
            if path <= reversed {
                paths.push(path);
            }
        }
    }
    paths.sort_unstable();
    Kuratowski { kind, branch_vertices, paths }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, icosahedron, path, Graph};

    #[test]
    fn k5_is_its_own_obstruction() {
        let k5 = complete(5).unwrap();
        let res = is_planar(&k5);
        assert!(!res.planar);
        assert!(res.embedding.is_none());
        let obs = res.obstruction.unwrap();
        assert_eq!(obs.kind, ObstructionKind::K5);
        assert_eq!(obs.branch_vertices, vec![0, 1, 2, 3, 4]);
        assert!(obs.paths.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn k33_obstruction() {
        let k33 = complete_bipartite(3, 3).unwrap();
        let res = is_planar(&k33);
        assert!(!res.planar);
        assert_eq!(res.obstruction.unwrap().kind, ObstructionKind::K33);
    }

    #[test]
    fn small_planar_graphs() {
        for g in [
            complete(4).unwrap(),
            cycle(9).unwrap(),
            path(7).unwrap(),
            Graph::empty(5).unwrap(),
            complete_bipartite(2, 6).unwrap(),
            icosahedron(),
        ] {
            let res = is_planar(&g);
            assert!(res.planar, "{g:?} should be planar");
            assert!(verify_embedding(&g, &res.embedding.unwrap()));
        }
    }

    #[test]
    fn petersen_graph_is_nonplanar() {
        // outer 5-cycle, inner pentagram, spokes
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        let petersen = Graph::build(10, &edges).unwrap();
        let res = is_planar(&petersen);
        assert!(!res.planar);
        // Petersen has maximum degree 3, so only K3,3 subdivisions fit.
        assert_eq!(res.obstruction.unwrap().kind, ObstructionKind::K33);
    }

    #[test]
    fn disconnected_and_cut_vertices() {
        // Two K4 blocks sharing a cut vertex, plus a separate triangle with
        // a pendant edge.
        let g = Graph::build(
            11,
            &[
                (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6),
                (7, 8), (8, 9), (9, 7), (9, 10),
            ],
        )
        .unwrap();
        let res = is_planar(&g);
        assert!(res.planar);
        assert!(verify_embedding(&g, &res.embedding.unwrap()));
    }

    #[test]
    fn triangulations() {
        assert!(is_triangulation(&complete(4).unwrap()).unwrap());
        assert!(is_triangulation(&icosahedron()).unwrap());
        assert!(!is_triangulation(&cycle(4).unwrap()).unwrap());
        assert!(!is_triangulation(&complete(5).unwrap()).unwrap());
        assert_eq!(is_triangulation(&complete(2).unwrap()), Err(PlanarError::OrderTooSmall(2)));
    }

    #[test]
    fn edge_bound() {
        assert!(planar_edge_bound_check(&icosahedron()).unwrap());
        assert!(!planar_edge_bound_check(&complete(5).unwrap()).unwrap());
        let k55 = complete_bipartite(5, 5).unwrap();
        assert_eq!(k55.regularity(), Some(5));
        assert_eq!(k55.edge_count(), 25);
        assert!(!planar_edge_bound_check(&k55).unwrap());
        assert!(planar_edge_bound_check(&Graph::empty(3).unwrap()).unwrap());
        assert_eq!(
            planar_edge_bound_check(&Graph::empty(2).unwrap()),
            Err(PlanarError::OrderTooSmall(2))
        );
    }

    #[test]
    fn dense_nonplanar_graph_still_gets_a_certificate() {
        let k8 = complete(8).unwrap();
        let res = is_planar(&k8);
        assert!(!res.planar);
        assert!(verify_obstruction(&k8, &res.obstruction.unwrap()));
    }

    #[test]
    fn obstructions_verify() {
        for g in [
            complete(5).unwrap(),
            complete(6).unwrap(),
            complete_bipartite(3, 3).unwrap(),
            complete_bipartite(3, 4).unwrap(),
            complete_bipartite(4, 4).unwrap(),
        ] {
            let res = is_planar(&g);
            assert!(!res.planar);
            assert!(verify_obstruction(&g, &res.obstruction.unwrap()));
        }
    }

    #[test]
    fn k5_subdivision_detected() {
        // K5 with the edge (3,4) subdivided through vertex 5.
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                if (i, j) != (3, 4) {
                    edges.push((i, j));
                }
            }
        }
        edges.push((3, 5));
        edges.push((5, 4));
        let g = Graph::build(6, &edges).unwrap();
        let res = is_planar(&g);
        assert!(!res.planar);
        let obs = res.obstruction.unwrap();
        assert_eq!(obs.kind, ObstructionKind::K5);
        assert!(obs.paths.iter().any(|p| p.len() == 3));
    }

    #[test]
    fn deleting_an_edge_keeps_planarity() {
        let ico = icosahedron();
        for (u, v) in ico.edges() {
            assert!(is_planar(&ico.without_edge(u, v)).planar);
        }
    }
}

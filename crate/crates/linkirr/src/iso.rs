//! Graph isomorphism via canonical labeling, plus a brute-force permutation
//! oracle for cross-validation.
//!
//! The canonical form of a graph is the lexicographically smallest
//! column-major upper-triangle adjacency bit string reachable through an
//! equitable-refinement search tree. Two graphs are isomorphic exactly when
//! their canonical codes are equal; the code is invariant under any
//! relabeling of the input.
//!
//! Refinement repeatedly splits cells by neighbor counts into other cells
//! (fragments ordered by ascending count, so the initial split orders cells
//! by degree). When the equitable partition is not discrete the search
//! individualizes each vertex of the first cell that still carries
//! structural ambiguity, and keeps the smallest leaf encoding. Ties are
//! resolved by backtracking over the whole cell, never heuristically.

use thiserror::Error;

use crate::graph::Graph;

/// Orders above this are rejected by [`brute_force_isomorphic`]:
/// 8! = 40320 permutations is the point where the oracle stops being cheap.
pub const BRUTE_FORCE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("order {0} exceeds the brute-force oracle limit of {BRUTE_FORCE_LIMIT}")]
    OverBruteForceLimit(usize),
}

/// Total-order-comparable canonical encoding: the order, then the
/// column-major upper-triangle bits of the canonically relabeled adjacency
/// matrix, packed most-significant-bit first.
///
/// The derived `Ord` compares `n` first and then the packed words, which
/// coincides with lexicographic comparison of the bit strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonCode {
    n: u8,
    words: Vec<u64>,
}

impl CanonCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Rebuilds the graph this code encodes (in canonical labeling).
    pub fn decode(&self) -> Graph {
        let n = self.n as usize;
        let mut rows = vec![0u64; n];
        let mut t = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.words[t >> 6] >> (63 - (t & 63)) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                t += 1;
            }
        }
        Graph::from_rows(n, rows)
    }

    /// Compact hex rendering, used in reports.
    pub fn to_hex(&self) -> String {
        let n = self.n as usize;
        let mut s = format!("{:02x}", self.n);
        let nbits = n * n.saturating_sub(1) / 2;
        let nibbles = nbits.div_ceil(4);
        for t in 0..nibbles {
            let word = self.words[t / 16];
            let nib = (word >> (60 - 4 * (t % 16))) & 0xf;
            s.push(char::from_digit(nib as u32, 16).unwrap());
        }
        s
    }
}

/// A canonical code together with one relabeling that achieves it:
/// `perm[new_position] = original_vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: CanonCode,
    pub perm: Vec<usize>,
}

/// Encodes the adjacency of `g` under the position order `order`
/// (`order[position] = vertex`), column-major upper triangle.
pub fn encode_with_order(g: &Graph, order: &[usize]) -> CanonCode {
    let n = g.order();
    debug_assert_eq!(order.len(), n);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64)];
    let mut t = 0usize;
    for j in 1..n {
        let row = g.row(order[j]);
        for &u in &order[..j] {
            if row >> u & 1 == 1 {
                words[t >> 6] |= 1 << (63 - (t & 63));
            }
            t += 1;
        }
    }
    CanonCode { n: n as u8, words }
}

/// Computes the canonical form of `g`.
///
/// Deterministic, and invariant under relabeling of the input: for any
/// permutation `p`, `canonical_form(g)` and `canonical_form(g.apply_perm(p))`
/// produce the same code.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n <= 1 {
        let code = encode_with_order(g, &(0..n).collect::<Vec<_>>());
        return CanonicalForm { code, perm: (0..n).collect() };
    }
    let mut search = Search {
        g,
        best: None,
        scratch_counts: vec![0u32; n],
    };
    let order: Vec<usize> = (0..n).collect();
    let cells = vec![(0usize, n)];
    search.descend(order, cells);
    let (words, order) = search.best.expect("search visits at least one leaf");
    let code = CanonCode { n: n as u8, words };
    debug_assert_eq!(encode_with_order(g, &order), code);
    CanonicalForm { code, perm: order }
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).code.decode()
}

/// Edge-preserving bijection test via canonical codes, with the order and
/// size short-circuits.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    canonical_form(g).code == canonical_form(h).code
}

/// Ground-truth oracle: tries every vertex bijection. Quadratic per
/// permutation, factorial overall; only for cross-validating the canonical
/// path on small graphs.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> Result<bool, IsoError> {
    let n = g.order().max(h.order());
    if n > BRUTE_FORCE_LIMIT {
        return Err(IsoError::OverBruteForceLimit(n));
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|u| {
            (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(perm[u], perm[v]))
        }) {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

// ---- canonical search internals --------------------------------------------

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    scratch_counts: Vec<u32>,
}

impl Search<'_> {
    fn descend(&mut self, mut order: Vec<usize>, mut cells: Vec<(usize, usize)>) {
        self.refine(&mut order, &mut cells);

        if self.prune_by_prefix(&order, &cells) {
            return;
        }

        match self.branch_target(&order, &cells) {
            None => {
                // Discrete, or every remaining cell is structurally uniform:
                // any within-cell order yields the same encoding.
                let code = encode_with_order(self.g, &order);
                match &self.best {
                    Some((best, _)) if *best <= code.words => {}
                    _ => self.best = Some((code.words, order)),
                }
            }
            Some(target) => {
                let (start, len) = cells[target];
                for pick in start..start + len {
                    let mut child_order = order.clone();
                    child_order.swap(start, pick);
                    let mut child_cells = cells.clone();
                    child_cells[target] = (start, 1);
                    child_cells.insert(target + 1, (start + 1, len - 1));
                    self.descend(child_order, child_cells);
                }
            }
        }
    }

    /// Equitable refinement: split cells by neighbor counts into splitter
    /// cells until stable. Fragments are ordered by ascending count, so the
    /// whole-vertex-set splitter orders cells by degree first.
    fn refine(&mut self, order: &mut [usize], cells: &mut Vec<(usize, usize)>) {
        loop {
            let mut changed = false;
            // Splitter masks are vertex sets, so they stay valid while the
            // live cell list splits underneath them.
            let splitters: Vec<u64> = cells.iter().map(|c| self.cell_mask(order, *c)).collect();
            for w in splitters {
                let mut ci = 0;
                while ci < cells.len() {
                    let (start, len) = cells[ci];
                    if len > 1 && self.split_cell(order, w, start, len, cells, ci) {
                        changed = true;
                    }
                    ci += 1;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn cell_mask(&self, order: &[usize], (start, len): (usize, usize)) -> u64 {
        order[start..start + len].iter().fold(0u64, |m, &v| m | 1 << v)
    }

    /// Splits `cells[ci]` by neighbor count into the mask `w`. Returns true
    /// when a split happened; fragments replace the cell in ascending count
    /// order.
    fn split_cell(
        &mut self,
        order: &mut [usize],
        w: u64,
        start: usize,
        len: usize,
        cells: &mut Vec<(usize, usize)>,
        ci: usize,
    ) -> bool {
        let slice = &mut order[start..start + len];
        let counts = &mut self.scratch_counts;
        for &v in slice.iter() {
            counts[v] = (self.g.row(v) & w).count_ones();
        }
        let first = counts[slice[0]];
        if slice.iter().all(|&v| counts[v] == first) {
            return false;
        }
        slice.sort_by_key(|&v| counts[v]);
        let mut fragments = Vec::new();
        let mut frag_start = start;
        for i in 1..len {
            if counts[slice[i]] != counts[slice[i - 1]] {
                fragments.push((frag_start, start + i - frag_start));
                frag_start = start + i;
            }
        }
        fragments.push((frag_start, start + len - frag_start));
        cells.splice(ci..=ci, fragments);
        true
    }

    /// Picks the first non-singleton cell that breaks structural uniformity:
    /// a cell whose induced subgraph is neither complete nor empty, or whose
    /// relation to some other cell is neither complete nor empty. When no
    /// cell breaks it, the encoding is fully determined and no branching is
    /// needed.
    fn branch_target(&self, order: &[usize], cells: &[(usize, usize)]) -> Option<usize> {
        let masks: Vec<u64> = cells.iter().map(|c| self.cell_mask(order, *c)).collect();
        for (i, &(start, len)) in cells.iter().enumerate() {
            if len < 2 {
                continue;
            }
            // The partition is equitable here, so one representative row
            // carries the counts of the whole cell.
            let rep = self.g.row(order[start]);
            let inner = (rep & masks[i]).count_ones() as usize;
            if inner != 0 && inner != len - 1 {
                return Some(i);
            }
            for (j, &(_, len_j)) in cells.iter().enumerate() {
                if i == j {
                    continue;
                }
                let cross = (rep & masks[j]).count_ones() as usize;
                if cross != 0 && cross != len_j {
                    return Some(i);
                }
            }
        }
        None
    }

    /// Compares the code bits already fixed by the leading singleton run
    /// against the best leaf; descendants can only extend that prefix, so a
    /// strictly greater prefix can be cut.
    fn prune_by_prefix(&self, order: &[usize], cells: &[(usize, usize)]) -> bool {
        let Some((best, _)) = &self.best else {
            return false;
        };
        let mut s = 0;
        for &(_, len) in cells {
            if len == 1 {
                s += 1;
            } else {
                break;
            }
        }
        if s < 2 {
            return false;
        }
        let nbits = s * (s - 1) / 2;
        let mut t = 0usize;
        let mut word = 0u64;
        for j in 1..s {
            let row = self.g.row(order[j]);
            for &u in &order[..j] {
                if row >> u & 1 == 1 {
                    word |= 1 << (63 - (t & 63));
                }
                t += 1;
                if t & 63 == 0 {
                    match word.cmp(&best[(t >> 6) - 1]) {
                        std::cmp::Ordering::Greater => return true,
                        std::cmp::Ordering::Less => return false,
                        std::cmp::Ordering::Equal => word = 0,
                    }
                }
            }
        }
        let rem = nbits & 63;
        if rem != 0 {
            let mask = !0u64 << (64 - rem);
            return word > best[nbits >> 6] & mask;
        }
        false
    }
}

//! Isomorph-free exhaustive generation of small graphs and of regular
//! graphs, and the link-irregularity search driver over those streams.
//!
//! Generation is by vertex augmentation: every representative on `k - 1`
//! vertices is extended with a new vertex attached to each feasible neighbor
//! subset. A child is accepted exactly once across the whole level through a
//! canonical-parent rule: deleting the added vertex must yield the same
//! isomorphism class as deleting the vertex in the last canonical position.
//! Acceptance is therefore local to one parent, which keeps memory at the
//! frontier and makes interrupted runs resumable parent by parent.
//!
//! Regular generation grows partial graphs with all degrees at most `r`,
//! pruned by remaining-degree feasibility; degrees above half the order are
//! routed through the complement.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::iso::{canonical_form, CanonCode};
use crate::link::is_link_irregular;

/// Full-catalog enumeration cap: the order-9 catalog (274 668 classes) is
/// the largest that stays desk-scale.
pub const MAX_ENUM_ORDER: usize = 9;
/// Regular-catalog enumeration cap.
pub const MAX_REGULAR_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("full enumeration supports order <= {MAX_ENUM_ORDER}, got {0}")]
    OrderTooLarge(usize),
    #[error("regular enumeration supports order <= {MAX_REGULAR_ORDER}, got {0}")]
    RegularOrderTooLarge(usize),
    #[error("degree {degree} out of range for order {order}")]
    DegreeOutOfRange { degree: usize, order: usize },
    #[error("no {degree}-regular graph of order {order} exists: degree sum is odd")]
    ParityViolation { degree: usize, order: usize },
    #[error("search deadline exceeded")]
    DeadlineExceeded,
    #[error("checkpoint file error: {0}")]
    Checkpoint(String),
}

/// What to generate: all graphs of order `n`, or the `r`-regular ones,
/// optionally restricted to connected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub regularity: Option<usize>,
    pub connected_only: bool,
}

impl GenSpec {
    pub fn all(n: usize) -> GenSpec {
        GenSpec { n, regularity: None, connected_only: false }
    }

    pub fn regular(n: usize, r: usize) -> GenSpec {
        GenSpec { n, regularity: Some(r), connected_only: false }
    }

    pub fn connected(mut self) -> GenSpec {
        self.connected_only = true;
        self
    }

    fn validate(&self) -> Result<(), EnumError> {
        match self.regularity {
            None => {
                if self.n > MAX_ENUM_ORDER {
                    return Err(EnumError::OrderTooLarge(self.n));
                }
            }
            Some(r) => {
                if self.n > MAX_REGULAR_ORDER {
                    return Err(EnumError::RegularOrderTooLarge(self.n));
                }
                if r >= self.n.max(1) {
                    return Err(EnumError::DegreeOutOfRange { degree: r, order: self.n });
                }
                if !(self.n * r).is_multiple_of(2) {
                    return Err(EnumError::ParityViolation { degree: r, order: self.n });
                }
            }
        }
        Ok(())
    }
}

/// Timing counters for a search run.
#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    pub elapsed: Duration,
    /// Candidate extensions considered before acceptance.
    pub candidates: u64,
    /// Parents already completed in a loaded checkpoint.
    pub resumed_parents: u64,
}

/// Result of a link-irregularity search over a generated catalog.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub spec: GenSpec,
    /// Number of isomorphism classes examined (the catalog size).
    pub examined: u64,
    /// Link-irregular classes found, as canonical representatives in
    /// ascending canonical-code order.
    pub hits: Vec<Graph>,
    pub stats: SearchStats,
}

/// Knobs for long search runs. `workers > 1` splits the candidate checks
/// over threads; results are merged deterministically.
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub workers: usize,
    pub deadline: Option<Duration>,
    pub checkpoint: Option<std::path::PathBuf>,
}

// ---- catalogs ----------------------------------------------------------------

/// All graphs of order `n` up to isomorphism, exactly one canonical
/// representative per class, in ascending canonical-code order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumError> {
    GenSpec::all(n).validate()?;
    let codes = enumerate_codes(GenSpec::all(n), None)?;
    Ok(codes.iter().map(CanonCode::decode).collect())
}

/// All `r`-regular graphs of order `n` up to isomorphism, ascending
/// canonical-code order. Degrees of at least half the order are enumerated
/// through the complement.
pub fn enumerate_regular(n: usize, r: usize) -> Result<Vec<Graph>, EnumError> {
    GenSpec::regular(n, r).validate()?;
    if n >= 1 && n - 1 - r < r {
        let co = enumerate_regular_direct(n, n - 1 - r)?;
        let mut codes: Vec<CanonCode> =
            co.iter().map(|g| canonical_form(&g.complement()).code).collect();
        codes.sort_unstable();
        debug_assert!(codes.windows(2).all(|w| w[0] < w[1]));
        Ok(codes.iter().map(CanonCode::decode).collect())
    } else {
        enumerate_regular_direct(n, r)
    }
}

/// Direct degree-constrained generation, without the complement shortcut.
/// Feasible for small `r`; the auto-routing front end is
/// [`enumerate_regular`].
pub fn enumerate_regular_direct(n: usize, r: usize) -> Result<Vec<Graph>, EnumError> {
    GenSpec::regular(n, r).validate()?;
    let codes = enumerate_codes(GenSpec::regular(n, r), None)?;
    Ok(codes.iter().map(CanonCode::decode).collect())
}

/// Builds the sorted canonical codes for a spec by running the level tree.
fn enumerate_codes(spec: GenSpec, deadline: Option<Instant>) -> Result<Vec<CanonCode>, EnumError> {
    if spec.n == 0 {
        return Ok(vec![canonical_form(&Graph::empty(0).unwrap()).code]);
    }
    let parents = build_frontier(spec, deadline)?;
    let mut codes: Vec<CanonCode> = Vec::new();
    for parent in &parents {
        check_deadline(deadline)?;
        for child in expand_parent(parent, spec) {
            if !spec.connected_only || child.graph.is_connected() {
                codes.push(child.code);
            }
        }
    }
    codes.sort_unstable();
    assert!(
        codes.windows(2).all(|w| w[0] < w[1]),
        "duplicate canonical code emitted by the generation tree"
    );
    Ok(codes)
}

/// Representatives at level `n - 1` of the generation tree for `spec`
/// (ignoring the connectivity filter, which only applies on emission).
fn build_frontier(spec: GenSpec, deadline: Option<Instant>) -> Result<Vec<Graph>, EnumError> {
    let mut level: Vec<Graph> = vec![Graph::empty(0).unwrap()];
    for _k in 1..spec.n {
        check_deadline(deadline)?;
        let mut codes: Vec<CanonCode> = Vec::new();
        for parent in &level {
            check_deadline(deadline)?;
            for child in expand_parent(parent, spec) {
                codes.push(child.code);
            }
        }
        codes.sort_unstable();
        level = codes.iter().map(CanonCode::decode).collect();
    }
    Ok(level)
}

struct Child {
    graph: Graph,
    code: CanonCode,
}

/// Expands one parent representative into the children it owns: each
/// feasible neighbor subset for the new vertex, kept when this parent is the
/// child's canonical parent and the subset is the first one in this batch to
/// reach that class.
fn expand_parent(parent: &Graph, spec: GenSpec) -> Vec<Child> {
    let k = parent.order(); // child order is k + 1
    let parent_code = canonical_form(parent).code;
    let mut seen: HashSet<CanonCode> = HashSet::new();
    let mut out = Vec::new();

    let mut try_subset = |mask: u64, out: &mut Vec<Child>| {
        let child = parent.with_new_vertex(mask);
        if let Some(r) = spec.regularity {
            if !regular_feasible(&child, r, spec.n) {
                return;
            }
        }
        let cf = canonical_form(&child);
        if seen.contains(&cf.code) {
            return;
        }
        let added = k; // index of the vertex just added
        let canon_last = cf.perm[k];
        let accepted = canon_last == added
            || canonical_form(&child.without_vertex(canon_last)).code == parent_code;
        if accepted {
            seen.insert(cf.code.clone());
            out.push(Child { graph: child, code: cf.code });
        }
    };

    match spec.regularity {
        None => {
            for mask in 0..1u64 << k {
                try_subset(mask, &mut out);
            }
        }
        Some(r) => {
            // Only vertices still below degree r may receive the new vertex,
            // and the new vertex itself gets at most r neighbors.
            let mut open = 0u64;
            for v in 0..k {
                if parent.degree(v) < r {
                    open |= 1 << v;
                }
            }
            // Iterate all submasks of `open`, including the empty one.
            let mut sub = open;
            loop {
                if sub.count_ones() as usize <= r {
                    try_subset(sub, &mut out);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & open;
            }
        }
    }
    out.sort_unstable_by(|a, b| a.code.cmp(&b.code));
    out
}

/// Necessary conditions for a partial graph (all degrees <= r) on `k`
/// vertices to extend to an `r`-regular graph on `n` vertices with
/// `m = n - k` vertices still to come:
///
/// * every remaining deficit fits in one edge per future vertex,
/// * the future side can absorb the total deficit,
/// * the leftover future degree is even and fits inside the future clique,
/// * every future vertex can reach degree `r` at all.
///
/// All four are preserved under deleting any vertex, which the acceptance
/// rule relies on.
fn regular_feasible(g: &Graph, r: usize, n: usize) -> bool {
    let k = g.order();
    let m = n - k;
    let mut deficit_sum = 0usize;
    for v in 0..k {
        let d = g.degree(v);
        if d > r || r - d > m {
            return false;
        }
        deficit_sum += r - d;
    }
    let capacity = m * r;
    if deficit_sum > capacity {
        return false;
    }
    let future_internal = capacity - deficit_sum;
    if !future_internal.is_multiple_of(2) {
        return false;
    }
    if future_internal / 2 > m.saturating_sub(1) * m / 2 {
        return false;
    }
    if r + 1 > m && deficit_sum < m * (r + 1 - m) {
        return false;
    }
    true
}

// ---- search -------------------------------------------------------------------

/// Runs the link-irregularity search over the catalog described by `spec`.
pub fn search_link_irregular(spec: GenSpec) -> Result<SearchResult, EnumError> {
    search_link_irregular_with(spec, &SearchOptions::default())
}

/// Search with worker/deadline/checkpoint control.
///
/// Generation is pipelined into the verdict check parent by parent, so the
/// full catalog is never materialized. With `workers > 1` the parent batches
/// are distributed over threads and merged in parent order; the result is
/// identical for any worker count.
pub fn search_link_irregular_with(
    spec: GenSpec,
    options: &SearchOptions,
) -> Result<SearchResult, EnumError> {
    spec.validate()?;
    let started = Instant::now();
    let deadline = options.deadline.map(|d| started + d);

    if spec.n == 0 {
        // One class: the empty graph, vacuously link-irregular.
        let g = Graph::empty(0).expect("order 0 fits");
        let hits = if is_link_irregular(&g).irregular { vec![g] } else { Vec::new() };
        return Ok(SearchResult {
            spec,
            examined: 1,
            hits,
            stats: SearchStats { elapsed: started.elapsed(), ..Default::default() },
        });
    }

    // Complement routing for high regular degrees: enumerate the sparse
    // side, complement each candidate before the check.
    let (tree_spec, complemented) = match spec.regularity {
        Some(r) if spec.n - 1 - r < r => (GenSpec::regular(spec.n, spec.n - 1 - r), true),
        _ => (spec, false),
    };

    let parents = build_frontier(tree_spec, deadline)?;
    let mut checkpoint = match &options.checkpoint {
        Some(path) => Some(CheckpointFile::open(path, spec)?),
        None => None,
    };

    let done: HashSet<String> = checkpoint
        .as_ref()
        .map(|c| c.done.iter().cloned().collect())
        .unwrap_or_default();
    let mut examined: u64 = checkpoint.as_ref().map(|c| c.examined).unwrap_or(0);
    let mut hit_codes: HashSet<CanonCode> = checkpoint
        .as_ref()
        .map(|c| c.hits.iter().map(|g| canonical_form(g).code).collect())
        .unwrap_or_default();
    let resumed_parents = done.len() as u64;

    let pending: Vec<(usize, &Graph, String)> = parents
        .iter()
        .enumerate()
        .map(|(i, p)| (i, p, write_graph6(p)))
        .filter(|(_, _, key)| !done.contains(key))
        .collect();

    let workers = options.workers.max(1);
    let mut candidates: u64 = 0;

    // Per-parent work unit; pure function of the parent, so batches can run
    // on any thread.
    let process = |parent: &Graph| -> ParentOutcome {
        let mut accepted = 0u64;
        let mut cand = 0u64;
        let mut hits = Vec::new();
        for child in expand_parent(parent, tree_spec) {
            cand += 1;
            let subject = if complemented { child.graph.complement() } else { child.graph };
            if spec.connected_only && !subject.is_connected() {
                continue;
            }
            accepted += 1;
            if is_link_irregular(&subject).irregular {
                hits.push(canonical_form(&subject).code);
            }
        }
        ParentOutcome { accepted, candidates: cand, hits }
    };

    let mut outcomes: Vec<(usize, &str, ParentOutcome)> = Vec::with_capacity(pending.len());
    if workers == 1 {
        for (i, parent, key) in &pending {
            check_deadline(deadline)?;
            outcomes.push((*i, key.as_str(), process(parent)));
        }
    } else {
        type Batch<'a> = Vec<(usize, &'a str, ParentOutcome)>;
        let chunks: Vec<&[(usize, &Graph, String)]> =
            pending.chunks(pending.len().div_ceil(workers).max(1)).collect();
        let results: Result<Vec<Batch>, EnumError> =
            std::thread::scope(|scope| {
                let handles: Vec<_> = chunks
                    .into_iter()
                    .map(|chunk| {
                        scope.spawn(move || {
                            let mut local = Vec::with_capacity(chunk.len());
                            for (i, parent, key) in chunk {
                                check_deadline(deadline)?;
                                local.push((*i, key.as_str(), process(parent)));
                            }
                            Ok(local)
                        })
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
            });
        for batch in results? {
            outcomes.extend(batch);
        }
        outcomes.sort_unstable_by_key(|(i, _, _)| *i);
    }

    for (_, key, outcome) in &outcomes {
        examined += outcome.accepted;
        candidates += outcome.candidates;
        for code in &outcome.hits {
            hit_codes.insert(code.clone());
        }
        if let Some(cp) = checkpoint.as_mut() {
            cp.record(key, outcome)?;
        }
    }

    let mut hits: Vec<CanonCode> = hit_codes.into_iter().collect();
    hits.sort_unstable();
    Ok(SearchResult {
        spec,
        examined,
        hits: hits.iter().map(CanonCode::decode).collect(),
        stats: SearchStats {
            elapsed: started.elapsed(),
            candidates,
            resumed_parents,
        },
    })
}

/// Search over `r`-regular graphs of order `n` through the complement:
/// enumerate the `(n-1-r)`-regular catalog, complement each class, check.
/// Falls back to the direct route when the complement side is not smaller.
pub fn regular_search_via_complement(n: usize, r: usize) -> Result<SearchResult, EnumError> {
    // search_link_irregular already routes high degrees through the
    // complement; this entry point exists so both routes can be compared.
    search_link_irregular(GenSpec::regular(n, r))
}

/// The same search forced through the direct generation tree, bypassing the
/// complement routing. Exposed for cross-validation of the two routes.
pub fn regular_search_direct(n: usize, r: usize) -> Result<SearchResult, EnumError> {
    let spec = GenSpec::regular(n, r);
    spec.validate()?;
    let started = Instant::now();
    let catalog = enumerate_regular_direct(n, r)?;
    let mut hits = Vec::new();
    let mut examined = 0u64;
    for g in &catalog {
        if spec.connected_only && !g.is_connected() {
            continue;
        }
        examined += 1;
        if is_link_irregular(g).irregular {
            hits.push(g.clone());
        }
    }
    Ok(SearchResult {
        spec,
        examined,
        hits,
        stats: SearchStats { elapsed: started.elapsed(), ..Default::default() },
    })
}

struct ParentOutcome {
    accepted: u64,
    candidates: u64,
    hits: Vec<CanonCode>,
}

fn check_deadline(deadline: Option<Instant>) -> Result<(), EnumError> {
    match deadline {
        Some(d) if Instant::now() > d => Err(EnumError::DeadlineExceeded),
        _ => Ok(()),
    }
}

// ---- checkpoints ---------------------------------------------------------------

/// Line-oriented checkpoint: a spec header, one `done` line per completed
/// generation-tree root (keyed by its graph6), and one `hit` line per
/// link-irregular class found so far. Resuming re-derives the frontier and
/// skips completed roots.
struct CheckpointFile {
    file: std::fs::File,
    done: Vec<String>,
    hits: Vec<Graph>,
    examined: u64,
}

impl CheckpointFile {
    fn open(path: &std::path::Path, spec: GenSpec) -> Result<CheckpointFile, EnumError> {
        use std::io::Read;
        let header = spec_header(spec);
        let mut done = Vec::new();
        let mut hits = Vec::new();
        let mut examined = 0u64;
        let mut header_present = false;
        if path.exists() {
            let mut text = String::new();
            std::fs::File::open(path)
                .and_then(|mut f| f.read_to_string(&mut text))
                .map_err(|e| EnumError::Checkpoint(e.to_string()))?;
            let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
            match lines.next() {
                Some(h) if h == header => header_present = true,
                Some(other) => {
                    return Err(EnumError::Checkpoint(format!(
                        "checkpoint is for `{other}`, expected `{header}`"
                    )));
                }
                None => {}
            }
            for line in lines {
                let mut parts = line.split_whitespace();
                match parts.next() {
                    Some("done") => {
                        let key = parts
                            .next()
                            .ok_or_else(|| EnumError::Checkpoint("bare done line".into()))?;
                        let n: u64 = parts
                            .next()
                            .and_then(|s| s.strip_prefix("examined="))
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| EnumError::Checkpoint("bad done line".into()))?;
                        done.push(key.to_string());
                        examined += n;
                    }
                    Some("hit") => {
                        let g6 = parts
                            .next()
                            .ok_or_else(|| EnumError::Checkpoint("bare hit line".into()))?;
                        let g = crate::graph6::parse_graph6(g6)
                            .map_err(|e| EnumError::Checkpoint(e.to_string()))?;
                        hits.push(g);
                    }
                    Some(other) => {
                        return Err(EnumError::Checkpoint(format!("unknown record `{other}`")));
                    }
                    None => {}
                }
            }
        }
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| EnumError::Checkpoint(e.to_string()))?;
        if !header_present {
            use std::io::Write;
            writeln!(file, "# linkirr search checkpoint").and_then(|_| writeln!(file, "{header}"))
                .map_err(|e| EnumError::Checkpoint(e.to_string()))?;
        }
        Ok(CheckpointFile { file, done, hits, examined })
    }

    fn record(&mut self, key: &str, outcome: &ParentOutcome) -> Result<(), EnumError> {
        use std::io::Write;
        let mut line = String::new();
        for code in &outcome.hits {
            let g6 = write_graph6(&code.decode());
            writeln!(line, "hit {g6}").unwrap();
        }
        writeln!(line, "done {key} examined={}", outcome.accepted).unwrap();
        self.file
            .write_all(line.as_bytes())
            .and_then(|_| self.file.flush())
            .map_err(|e| EnumError::Checkpoint(e.to_string()))
    }
}

fn spec_header(spec: GenSpec) -> String {
    let reg = spec.regularity.map_or("none".to_string(), |r| r.to_string());
    format!("spec n={} r={} connected={}", spec.n, reg, spec.connected_only)
}

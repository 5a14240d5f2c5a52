//! The built-in claim battery: every check the `verify-paper` subcommand
//! runs, exposed as a library so the acceptance test suite drives the same
//! code. Each check is exact (frozen integer expectations, no tolerances);
//! elapsed time is reported but never asserted, except for the long
//! order-12 search whose budget overrun triggers a reported degradation
//! path instead of a failure.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::bounds::{edge_bounds, g_exact, g_lower_bound, link_distinctness_edge_floor};
use crate::data::{counterexample12, planar16, planar18, unique6};
use crate::enumerate::{
    enumerate_graphs, search_link_irregular, search_link_irregular_with, EnumError, GenSpec,
    SearchOptions, SearchResult,
};
use crate::graph::{complete, complete_bipartite, icosahedron, Graph};
use crate::graph6::{parse_graph6, write_graph6};
use crate::iso::{are_isomorphic, brute_force_isomorphic, canonical_form, encode_with_order};
use crate::link::{is_link_irregular, link, link_degree_table, witness_mapping_is_valid};
use crate::planar::{is_planar, is_triangulation, verify_embedding, verify_obstruction};

/// Result of one battery check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub label: &'static str,
    pub passed: bool,
    /// True when the check ran its documented reduced form (budget overrun).
    pub degraded: bool,
    pub details: Vec<String>,
    pub elapsed: Duration,
}

impl CheckOutcome {
    /// The one-line ledger form: `PASS c1 catalog-counts (0.52s): ...`.
    pub fn render(&self) -> String {
        let state = match (self.passed, self.degraded) {
            (true, false) => "PASS",
            (true, true) => "PASS(DEGRADED)",
            (false, _) => "FAIL",
        };
        format!(
            "{state} {} {} ({:.2}s): {}",
            self.id,
            self.label,
            self.elapsed.as_secs_f64(),
            self.details.join("; ")
        )
    }
}

pub const CHECK_IDS: [&str; 10] =
    ["c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10"];

/// Runs one check by id.
pub fn run_check(id: &str) -> Option<CheckOutcome> {
    match id {
        "c1" => Some(c1_catalog_counts()),
        "c2" => Some(c2_small_order_hits()),
        "c3" => Some(c3_no_small_regular()),
        "c4" => Some(c4_counterexample()),
        "c5" => Some(c5_order12_search()),
        "c6" => Some(c6_planarity_suite()),
        "c7" => Some(c7_edge_bound_sweep()),
        "c8" => Some(c8_structural_theorems()),
        "c9" => Some(c9_formula_spot_checks()),
        "c10" => Some(c10_property_suites()),
        _ => None,
    }
}

/// Runs the whole battery in order.
pub fn run_all() -> Vec<CheckOutcome> {
    CHECK_IDS.iter().map(|id| run_check(id).expect("known id")).collect()
}

// Full-catalog searches shared by several checks.
fn full_search(n: usize) -> &'static SearchResult {
    static CACHE: OnceLock<Vec<SearchResult>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (5..=8)
            .map(|n| search_link_irregular(GenSpec::all(n)).expect("orders 5..=8 enumerate"))
            .collect()
    });
    &all[n - 5]
}

struct Check {
    outcome: CheckOutcome,
    started: Instant,
}

impl Check {
    fn new(id: &'static str, label: &'static str) -> Check {
        Check {
            outcome: CheckOutcome {
                id,
                label,
                passed: true,
                degraded: false,
                details: Vec::new(),
                elapsed: Duration::ZERO,
            },
            started: Instant::now(),
        }
    }

    fn require(&mut self, ok: bool, what: &str) {
        if !ok {
            self.outcome.passed = false;
            self.outcome.details.push(format!("FAILED: {what}"));
        }
    }

    fn note(&mut self, what: String) {
        self.outcome.details.push(what);
    }

    fn finish(mut self) -> CheckOutcome {
        self.outcome.elapsed = self.started.elapsed();
        if self.outcome.passed && self.outcome.details.is_empty() {
            self.outcome.details.push("ok".to_string());
        }
        self.outcome
    }
}

/// c1: the catalogs on 1..=6 vertices have exactly 1, 2, 4, 11, 34, 156
/// isomorphism classes.
fn c1_catalog_counts() -> CheckOutcome {
    let mut c = Check::new("c1", "catalog-counts");
    let expected = [1usize, 2, 4, 11, 34, 156];
    for (n, want) in (1..=6).zip(expected) {
        let got = enumerate_graphs(n).map(|v| v.len());
        c.require(got == Ok(want), &format!("count({n}) = {got:?}, want {want}"));
    }
    c.note("orders 1..6 -> 1,2,4,11,34,156".to_string());
    c.finish()
}

/// c2: no link-irregular graph of order 5; exactly one of order 6; several
/// of order 7 including one with 5 distinct degrees.
fn c2_small_order_hits() -> CheckOutcome {
    let mut c = Check::new("c2", "small-order-hits");
    let r5 = full_search(5);
    let r6 = full_search(6);
    let r7 = full_search(7);
    c.require(r5.hits.is_empty(), &format!("order 5 has {} hits, want 0", r5.hits.len()));
    c.require(r6.hits.len() == 1, &format!("order 6 has {} hits, want 1", r6.hits.len()));
    c.require(
        r6.hits.first().is_some_and(|h| are_isomorphic(h, &unique6())),
        "the order-6 hit is the bundled unique6 graph",
    );
    c.require(!r7.hits.is_empty(), "order 7 has no hits");
    let with_five = r7.hits.iter().filter(|g| g.degree_summary().distinct.len() == 5).count();
    c.require(with_five >= 1, "order 7 has no hit with 5 distinct degrees");
    c.note(format!(
        "hits: order5=0/{} order6=1/{} order7={}/{} ({} with |D|=5)",
        r5.examined,
        r6.examined,
        r7.hits.len(),
        r7.examined,
        with_five
    ));
    c.finish()
}

/// c3: every parity-feasible regular search on 6..=9 vertices comes up
/// empty.
fn c3_no_small_regular() -> CheckOutcome {
    let mut c = Check::new("c3", "no-small-regular");
    let mut swept = 0;
    for n in 6..=9usize {
        for r in 1..n {
            if !(n * r).is_multiple_of(2) {
                continue;
            }
            match search_link_irregular(GenSpec::regular(n, r)) {
                Ok(res) => {
                    swept += 1;
                    c.require(
                        res.hits.is_empty(),
                        &format!("({n},{r}) found {} hits, want 0", res.hits.len()),
                    );
                }
                Err(e) => c.require(false, &format!("({n},{r}) errored: {e}")),
            }
        }
    }
    c.note(format!("{swept} parity-feasible (order, degree) pairs swept, all empty"));
    c.finish()
}

/// The 12-row link degree table of the bundled order-12 counterexample.
/// Row L(1) of the published table prints an odd-sum multiset, which no
/// graph can realize; the value below is the one forced by the published
/// edge list (the other 11 rows match the table as printed).
pub const COUNTEREXAMPLE12_LINK_TABLE: [[usize; 7]; 12] = [
    [2, 3, 3, 3, 4, 4, 5],
    [2, 3, 3, 4, 4, 5, 5], // printed as {2,3,3,4,4,4,5}, sum 25 (odd)
    [2, 3, 3, 4, 4, 4, 4],
    [2, 3, 3, 3, 3, 4, 4],
    [3, 3, 3, 3, 4, 5, 5],
    [2, 3, 3, 4, 4, 5, 5],
    [2, 3, 3, 3, 4, 4, 5],
    [2, 3, 4, 4, 4, 4, 5],
    [3, 3, 3, 3, 3, 3, 4],
    [3, 3, 3, 4, 4, 4, 5],
    [3, 3, 3, 3, 4, 4, 4],
    [2, 3, 3, 3, 3, 5, 5],
];

/// c4: the bundled 12-vertex graph is 7-regular with 42 edges, is
/// link-irregular, reproduces the link degree table, and its L(0)/L(6)
/// share a degree multiset while remaining non-isomorphic.
fn c4_counterexample() -> CheckOutcome {
    let mut c = Check::new("c4", "counterexample-12");
    let g = counterexample12();
    c.require(g.order() == 12, "order 12");
    c.require(g.edge_count() == 42, &format!("42 edges, got {}", g.edge_count()));
    c.require(g.regularity() == Some(7), "7-regular");
    c.require(is_link_irregular(&g).irregular, "link-irregular");
    let table = link_degree_table(&g);
    for (v, row) in &table {
        c.require(
            row.as_slice() == COUNTEREXAMPLE12_LINK_TABLE[*v],
            &format!("link table row L({v}) = {row:?}"),
        );
    }
    let l0 = link(&g, 0);
    let l6 = link(&g, 6);
    c.require(l0.degree_multiset == l6.degree_multiset, "L(0), L(6) share a degree multiset");
    c.require(!are_isomorphic(&l0.link, &l6.link), "L(0) and L(6) are non-isomorphic");
    c.note("7-regular, 42 edges, 12 pairwise non-isomorphic links".to_string());
    c.note("table row L(1) corrected: published row has odd degree sum".to_string());
    c.finish()
}

/// c5: the complement-routed search over 7-regular graphs on 12 vertices
/// reproduces the bundled counterexample. Budget 30 minutes; on overrun the
/// check degrades (reported, not silent) to re-verifying the builtin plus
/// the enumeration property suite.
fn c5_order12_search() -> CheckOutcome {
    let mut c = Check::new("c5", "regular-12-7-search");
    let opts = SearchOptions {
        deadline: Some(Duration::from_secs(30 * 60)),
        ..Default::default()
    };
    match search_link_irregular_with(GenSpec::regular(12, 7), &opts) {
        Ok(res) => {
            c.require(!res.hits.is_empty(), "search found no hits");
            let ce = counterexample12();
            let found = res.hits.iter().any(|h| are_isomorphic(h, &ce));
            c.require(found, "no hit isomorphic to the bundled counterexample");
            c.note(format!(
                "{} link-irregular classes among {} examined 7-regular classes",
                res.hits.len(),
                res.examined
            ));
        }
        Err(EnumError::DeadlineExceeded) => {
            c.outcome.degraded = true;
            c.note("budget exceeded; degraded to builtin verification".to_string());
            let c4 = c4_counterexample();
            c.require(c4.passed, "degraded path: builtin verification");
            let counts_ok = (1..=6)
                .zip([1usize, 2, 4, 11, 34, 156])
                .all(|(n, want)| enumerate_graphs(n).map(|v| v.len()) == Ok(want));
            c.require(counts_ok, "degraded path: enumeration property suite");
        }
        Err(e) => c.require(false, &format!("search errored: {e}")),
    }
    c.finish()
}

/// c6: planarity suite over the bundled graphs.
fn c6_planarity_suite() -> CheckOutcome {
    let mut c = Check::new("c6", "planarity-suite");

    for (name, g) in [("K5", complete(5).unwrap()), ("K3,3", complete_bipartite(3, 3).unwrap())] {
        let res = is_planar(&g);
        c.require(!res.planar, &format!("{name} nonplanar"));
        let ok = res.obstruction.as_ref().is_some_and(|o| verify_obstruction(&g, o));
        c.require(ok, &format!("{name} obstruction verifies"));
    }

    let ico = icosahedron();
    let res = is_planar(&ico);
    c.require(res.planar, "icosahedron planar");
    c.require(
        res.embedding.as_ref().is_some_and(|r| verify_embedding(&ico, r)),
        "icosahedron embedding verifies",
    );
    c.require(ico.regularity() == Some(5), "icosahedron 5-regular");
    c.require(is_triangulation(&ico) == Ok(true), "icosahedron is a triangulation");
    c.require(!is_link_irregular(&ico).irregular, "icosahedron not link-irregular");

    for (name, g) in [("planar16", planar16()), ("planar18", planar18())] {
        c.require(g.regularity() == Some(5), &format!("{name} 5-regular"));
        let res = is_planar(&g);
        c.require(res.planar, &format!("{name} planar"));
        c.require(
            res.embedding.as_ref().is_some_and(|r| verify_embedding(&g, r)),
            &format!("{name} embedding verifies"),
        );
        let verdict = is_link_irregular(&g);
        c.require(!verdict.irregular, &format!("{name} not link-irregular"));
        let witness_ok = verdict
            .witness
            .as_ref()
            .is_some_and(|w| witness_mapping_is_valid(&g, w.u, w.v, &w.mapping));
        c.require(witness_ok, &format!("{name} witness pair verifies"));
        if let Some(w) = &verdict.witness {
            c.note(format!("{name}: witness pair ({}, {})", w.u, w.v));
        }
    }
    c.finish()
}

/// c7: every link-irregular class on 6..=8 vertices sits inside the edge
/// bounds and above the counting bound.
///
/// This check fails, and the failure is genuine: the full catalogs admit
/// disconnected graphs, and a link-irregular graph may carry one isolated
/// vertex (exactly one — two empty links would coincide). The lower-bound
/// argument tallies vertices of degree 1, 2, 3 and ignores degree 0, so a
/// 7-vertex link-irregular graph with 9 edges plus an isolated vertex is an
/// order-8 link-irregular graph with 9 < 2*8 - 5 edges. The diagnostics
/// below show every violation is of this one shape and that the bounds hold
/// on every class of minimum degree >= 1.
fn c7_edge_bound_sweep() -> CheckOutcome {
    let mut c = Check::new("c7", "edge-bound-sweep");
    let mut checked = 0usize;
    let mut violations: Vec<(usize, u64, usize)> = Vec::new(); // (order, edges, isolated)
    for n in 6..=8usize {
        let bounds = edge_bounds(n as u64).expect("n >= 6");
        let asym: BigUint = bounds.asym_lower.clone();
        for hit in &full_search(n).hits {
            let e = hit.edge_count() as u64;
            checked += 1;
            let inside =
                bounds.edge_lower <= e && e <= bounds.edge_upper && BigUint::from(e) >= asym;
            if !inside {
                let isolated = (0..hit.order()).filter(|&v| hit.degree(v) == 0).count();
                violations.push((n, e, isolated));
                c.require(
                    false,
                    &format!(
                        "order {n} hit with e={e} outside [{}, {}] or below counting bound {asym}",
                        bounds.edge_lower, bounds.edge_upper
                    ),
                );
            }
        }
    }
    c.note(format!("{checked} link-irregular classes checked on orders 6..8"));
    if !violations.is_empty() {
        let all_single_isolated = violations.iter().all(|&(_, _, iso)| iso == 1);
        c.note(format!(
            "{} violations, every one a graph with exactly one isolated vertex: {}",
            violations.len(),
            all_single_isolated
        ));
        let min_degree_one_ok = (6..=8usize).all(|n| {
            let bounds = edge_bounds(n as u64).expect("n >= 6");
            full_search(n)
                .hits
                .iter()
                .filter(|h| (0..h.order()).all(|v| h.degree(v) >= 1))
                .all(|h| {
                    let e = h.edge_count() as u64;
                    bounds.edge_lower <= e
                        && e <= bounds.edge_upper
                        && BigUint::from(e) >= bounds.asym_lower
                })
        });
        c.note(format!(
            "restricted to minimum degree >= 1 the bounds hold everywhere: {min_degree_one_ok}"
        ));
        // Independent confirmation that the lightest violating class really
        // is link-irregular: pairwise brute-force isomorphism over its links
        // (no canonical forms involved).
        if let Some(h) = full_search(8)
            .hits
            .iter()
            .filter(|h| h.edge_count() < 11)
            .min_by_key(|h| h.edge_count())
        {
            let links: Vec<Graph> =
                (0..h.order()).map(|v| h.induced_subgraph(h.row(v))).collect();
            let mut all_distinct = true;
            for i in 0..links.len() {
                for j in i + 1..links.len() {
                    if brute_force_isomorphic(&links[i], &links[j]).expect("links are small") {
                        all_distinct = false;
                    }
                }
            }
            c.note(format!(
                "brute-force re-check of the lightest violation (e={}): links pairwise \
                 non-isomorphic: {all_distinct}",
                h.edge_count()
            ));
        }
    }
    c.finish()
}

/// c8: universal structural facts over the same hit sets: girth 3,
/// non-bipartite, at most one vertex of degree n-1, at most floor(n/2) of
/// degree n-2, and at most n-2 distinct degrees.
fn c8_structural_theorems() -> CheckOutcome {
    let mut c = Check::new("c8", "structural-theorems");
    let mut checked = 0usize;
    for n in 6..=8usize {
        for hit in &full_search(n).hits {
            checked += 1;
            c.require(hit.girth() == Some(3), &format!("order {n} hit with girth {:?}", hit.girth()));
            c.require(!hit.is_bipartite(), &format!("bipartite hit at order {n}"));
            let degrees = hit.degrees();
            let top = degrees.iter().filter(|&&d| d == n - 1).count();
            let second = degrees.iter().filter(|&&d| d == n - 2).count();
            c.require(top <= 1, &format!("{top} vertices of degree n-1 at order {n}"));
            c.require(second <= n / 2, &format!("{second} vertices of degree n-2 at order {n}"));
            let distinct = hit.degree_summary().distinct.len();
            c.require(distinct <= n - 2, &format!("|D| = {distinct} at order {n}"));
        }
    }
    c.note(format!("{checked} hits satisfy girth-3, non-bipartite, degree caps"));
    c.finish()
}

/// c9: exact formula anchors.
fn c9_formula_spot_checks() -> CheckOutcome {
    let mut c = Check::new("c9", "formula-spot-checks");
    let want = BigRational::new(BigInt::from(1024), BigInt::from(120));
    c.require(g_lower_bound(5) == want, "g_lower_bound(5) = 1024/120");
    c.require(g_exact(5) == Ok(34), "g_exact(5) = 34");
    let b6 = edge_bounds(6).expect("defined at 6");
    c.require((b6.edge_lower, b6.edge_upper) == (7, 11), "edge_bounds(6) = (7, 11)");
    let at277 = link_distinctness_edge_floor(277).expect("defined");
    let at278 = link_distinctness_edge_floor(278).expect("defined");
    c.require(at277 <= 3 * 277 - 6, "floor(277) within planar budget");
    c.require(at278 > 3 * 278 - 6, "floor(278) exceeds planar budget");
    c.note(format!("floor(277) = {at277} <= 825; floor(278) = {at278} > 828"));
    c.finish()
}

/// c10: the property suites — canonical relabeling invariance, brute-force
/// agreement on all order <= 6 pairs, the labeled-graph enumeration oracle
/// for orders <= 7, and graph6 round trips.
fn c10_property_suites() -> CheckOutcome {
    let mut c = Check::new("c10", "property-suites");
    let mut rng = SplitMix::new(0x5eed_1234_abcd_0001);

    // Relabeling invariance, 1000 random (graph, permutation) pairs.
    let mut invariant_failures = 0;
    for _ in 0..1000 {
        let n = 2 + (rng.next() % 11) as usize; // 2..=12
        let g = rng.graph(n);
        let perm = rng.permutation(n);
        if canonical_form(&g).code != canonical_form(&g.apply_perm(&perm)).code {
            invariant_failures += 1;
        }
    }
    c.require(invariant_failures == 0, &format!("{invariant_failures} invariance failures"));

    // Canonical perm soundness on a sample.
    for _ in 0..100 {
        let n = 1 + (rng.next() % 12) as usize;
        let g = rng.graph(n);
        let cf = canonical_form(&g);
        c.require(encode_with_order(&g, &cf.perm) == cf.code, "perm reproduces code");
    }

    // Brute-force agreement over every ordered pair of classes up to 6.
    let mut catalog: Vec<Graph> = Vec::new();
    for n in 1..=6 {
        catalog.extend(enumerate_graphs(n).expect("small catalog"));
    }
    let mut pairs = 0u64;
    for g in &catalog {
        for h in &catalog {
            pairs += 1;
            let fast = are_isomorphic(g, h);
            let slow = brute_force_isomorphic(g, h).expect("orders <= 6");
            if fast != slow {
                c.require(false, &format!("disagreement: {g:?} vs {h:?}"));
            }
        }
    }
    c.note(format!("{pairs} ordered pairs agree with the brute-force oracle"));

    // Labeled-graph oracle: canonicalize all 2^C(n,2) labeled graphs.
    for n in 1..=7usize {
        let mut codes = std::collections::HashSet::new();
        let bits = n * (n - 1) / 2;
        for mask in 0u64..1 << bits {
            codes.insert(canonical_form(&graph_from_mask(n, mask)).code);
        }
        let stream = enumerate_graphs(n).expect("n <= 7").len();
        c.require(
            codes.len() == stream,
            &format!("order {n}: {} labeled classes vs {stream} enumerated", codes.len()),
        );
    }
    c.note("labeled-graph canonicalization oracle matches enumeration (orders 1..7)".to_string());

    // graph6 round trips: catalog of order 5 byte-for-byte, then random.
    for g in enumerate_graphs(5).expect("order 5") {
        let line = write_graph6(&g);
        c.require(write_graph6(&parse_graph6(&line).unwrap()) == line, "write/parse/write identity");
    }
    for _ in 0..1000 {
        let n = 1 + (rng.next() % 20) as usize;
        let g = rng.graph(n);
        c.require(parse_graph6(&write_graph6(&g)).unwrap() == g, "parse(write(g)) = g");
    }
    c.finish()
}

/// Labeled graph on `n` vertices from the column-major upper-triangle bits
/// of `mask`.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> t & 1 == 1 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::build(n, &edges).expect("mask edges in range")
}

/// Small deterministic PRNG for the battery's random trials.
struct SplitMix(u64);

impl SplitMix {
    fn new(seed: u64) -> SplitMix {
        SplitMix(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn graph(&mut self, n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.next().is_multiple_of(2) {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(n, &edges).expect("generated edges in range")
    }

    fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (self.next() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    }
}

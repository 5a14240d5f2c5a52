//! Vertex links and the link-irregularity decision with certificates.
//!
//! The link of a vertex is the subgraph induced by its neighborhood (the
//! owner itself excluded). A graph is link-irregular when all vertex links
//! are pairwise non-isomorphic. Negative verdicts carry a witness pair and
//! an explicit edge-preserving bijection between the two links.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{bits, Graph};
use crate::iso::{canonical_form, CanonicalForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("verdict does not match the graph it is explained against")]
    StaleVerdict,
}

/// Per-vertex link data: the induced subgraph on the owner's neighborhood,
/// its degree multiset, and its canonical form.
#[derive(Debug, Clone)]
pub struct LinkProfile {
    pub owner: usize,
    /// Induced subgraph on the neighbors of `owner`, relabeled ascending.
    pub link: Graph,
    /// Sorted degrees inside the link.
    pub degree_multiset: Vec<usize>,
    pub canon: CanonicalForm,
}

/// Witness that two links are isomorphic: the pair of owners and an
/// edge-preserving bijection from the neighborhood of `u` onto the
/// neighborhood of `v`, as `(vertex in N(u), vertex in N(v))` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub u: usize,
    pub v: usize,
    pub mapping: Vec<(usize, usize)>,
}

/// Link-irregularity decision. `witness` is present exactly when
/// `irregular` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub irregular: bool,
    pub witness: Option<Witness>,
}

/// The link of `v`: profile of the induced subgraph on `N(v)`.
pub fn link(g: &Graph, v: usize) -> LinkProfile {
    assert!(v < g.order(), "link owner {v} out of range");
    let link = g.induced_subgraph(g.row(v));
    let mut degree_multiset = link.degrees();
    degree_multiset.sort_unstable();
    let canon = canonical_form(&link);
    LinkProfile { owner: v, link, degree_multiset, canon }
}

/// One row per vertex, ascending: `(owner, sorted link degree multiset)`.
pub fn link_degree_table(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|v| {
            let l = g.induced_subgraph(g.row(v));
            let mut d = l.degrees();
            d.sort_unstable();
            (v, d)
        })
        .collect()
}

/// Decides link-irregularity.
///
/// Links are bucketed by `(order, size, degree multiset)` first; canonical
/// forms are computed only inside buckets with more than one member, which
/// settles almost every pair without a canonical labeling. The returned
/// witness is the lexicographically smallest offending pair.
pub fn is_link_irregular(g: &Graph) -> Verdict {
    let n = g.order();
    let mut buckets: BTreeMap<(usize, usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let l = g.induced_subgraph(g.row(v));
        let mut d = l.degrees();
        d.sort_unstable();
        buckets.entry((l.order(), l.edge_count(), d)).or_default().push(v);
    }

    let mut best_pair: Option<(usize, usize)> = None;
    let mut forms: Vec<Option<CanonicalForm>> = vec![None; n];
    for members in buckets.values() {
        if members.len() < 2 {
            continue;
        }
        let mut by_code: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for &v in members {
            let cf = link(g, v).canon;
            by_code.entry(cf.code.clone()).or_default().push(v);
            forms[v] = Some(cf);
        }
        for group in by_code.values() {
            for i in 0..group.len() {
                for j in i + 1..group.len() {
                    let pair = (group[i].min(group[j]), group[i].max(group[j]));
                    if best_pair.is_none_or(|b| pair < b) {
                        best_pair = Some(pair);
                    }
                }
            }
        }
    }

    match best_pair {
        None => Verdict { irregular: true, witness: None },
        Some((u, v)) => {
            let fu = forms[u].as_ref().expect("form computed for collision member");
            let fv = forms[v].as_ref().expect("form computed for collision member");
            let mapping = link_iso_mapping(g, u, fu, v, fv);
            debug_assert!(witness_mapping_is_valid(g, u, v, &mapping));
            Verdict { irregular: false, witness: Some(Witness { u, v, mapping }) }
        }
    }
}

/// Builds the explicit bijection `N(u) -> N(v)` out of the two canonical
/// relabelings: position `k` of one canonical order corresponds to position
/// `k` of the other.
fn link_iso_mapping(
    g: &Graph,
    u: usize,
    fu: &CanonicalForm,
    v: usize,
    fv: &CanonicalForm,
) -> Vec<(usize, usize)> {
    let nu: Vec<usize> = bits(g.row(u)).collect();
    let nv: Vec<usize> = bits(g.row(v)).collect();
    let mut mapping: Vec<(usize, usize)> = fu
        .perm
        .iter()
        .zip(fv.perm.iter())
        .map(|(&a, &b)| (nu[a], nv[b]))
        .collect();
    mapping.sort_unstable();
    mapping
}

/// Checks that `mapping` really is an isomorphism from the link of `u` onto
/// the link of `v`: a bijection `N(u) -> N(v)` preserving adjacency both
/// ways.
pub fn witness_mapping_is_valid(g: &Graph, u: usize, v: usize, mapping: &[(usize, usize)]) -> bool {
    let nu: Vec<usize> = bits(g.row(u)).collect();
    let nv: Vec<usize> = bits(g.row(v)).collect();
    if mapping.len() != nu.len() || nu.len() != nv.len() {
        return false;
    }
    let mut sources: Vec<usize> = mapping.iter().map(|&(a, _)| a).collect();
    let mut targets: Vec<usize> = mapping.iter().map(|&(_, b)| b).collect();
    sources.sort_unstable();
    targets.sort_unstable();
    if sources != nu || targets != nv {
        return false;
    }
    for (i, &(a, fa)) in mapping.iter().enumerate() {
        for &(b, fb) in &mapping[i + 1..] {
            if g.has_edge(a, b) != g.has_edge(fa, fb) {
                return false;
            }
        }
    }
    true
}

/// Renders a human-readable justification for a verdict.
///
/// Positive verdicts list one line per vertex with the link degree multiset
/// and canonical code; negative verdicts print the witness pair and its
/// bijection. The verdict is re-derived from the graph, so a verdict
/// produced from a different graph is rejected.
pub fn verdict_explain(g: &Graph, verdict: &Verdict) -> Result<String, LinkError> {
    let fresh = is_link_irregular(g);
    let consistent = fresh.irregular == verdict.irregular
        && match (&fresh.witness, &verdict.witness) {
            (None, None) => true,
            (Some(_), Some(w)) => witness_mapping_is_valid(g, w.u, w.v, &w.mapping),
            _ => false,
        };
    if !consistent {
        return Err(LinkError::StaleVerdict);
    }

    let mut out = String::new();
    if verdict.irregular {
        out.push_str(&format!(
            "link-irregular: all {} links pairwise non-isomorphic\n",
            g.order()
        ));
        for v in 0..g.order() {
            let p = link(g, v);
            out.push_str(&format!(
                "  L({v}): degrees {}  code {}\n",
                fmt_multiset(&p.degree_multiset),
                p.canon.code.to_hex()
            ));
        }
    } else {
        let w = verdict.witness.as_ref().expect("negative verdict carries witness");
        out.push_str(&format!(
            "not link-irregular: L({}) is isomorphic to L({})\n",
            w.u, w.v
        ));
        out.push_str("  bijection N(");
        out.push_str(&w.u.to_string());
        out.push_str(") -> N(");
        out.push_str(&w.v.to_string());
        out.push_str("): ");
        let pairs: Vec<String> = w.mapping.iter().map(|(a, b)| format!("{a} -> {b}")).collect();
        out.push_str(&pairs.join(", "));
        out.push('\n');
    }
    Ok(out)
}

fn fmt_multiset(d: &[usize]) -> String {
    let inner: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, icosahedron, Graph};
    use crate::iso::are_isomorphic;

    #[test]
    fn complete_graph_links() {
        let k5 = complete(5).unwrap();
        for v in 0..5 {
            let p = link(&k5, v);
            assert!(are_isomorphic(&p.link, &complete(4).unwrap()));
        }
        let verdict = is_link_irregular(&k5);
        assert!(!verdict.irregular);
        let w = verdict.witness.unwrap();
        assert_eq!((w.u, w.v), (0, 1));
    }

    #[test]
    fn icosahedron_links_are_pentagons() {
        let ico = icosahedron();
        let c5 = cycle(5).unwrap();
        for v in 0..12 {
            assert!(are_isomorphic(&link(&ico, v).link, &c5));
        }
        assert!(!is_link_irregular(&ico).irregular);
    }

    #[test]
    fn degree_zero_vertices_collide() {
        let g = Graph::empty(2).unwrap();
        let verdict = is_link_irregular(&g);
        assert!(!verdict.irregular);
        // Two empty links collide immediately.
        let w = verdict.witness.unwrap();
        assert_eq!((w.u, w.v), (0, 1));
        assert!(w.mapping.is_empty());
    }

    #[test]
    fn witness_pair_is_lexicographically_first() {
        // Both (0,1) (single-vertex links) and (2,3) (empty links) collide;
        // the smallest pair is reported.
        let g = Graph::build(4, &[(0, 1)]).unwrap();
        let w = is_link_irregular(&g).witness.unwrap();
        assert_eq!((w.u, w.v), (0, 1));
    }

    #[test]
    fn small_tables() {
        let c4 = cycle(4).unwrap();
        for (_, row) in link_degree_table(&c4) {
            assert_eq!(row, vec![0, 0]);
        }
        let k4 = complete(4).unwrap();
        for (_, row) in link_degree_table(&k4) {
            assert_eq!(row, vec![2, 2, 2]);
        }
    }

    #[test]
    fn explain_rejects_stale_verdicts() {
        let k5 = complete(5).unwrap();
        let c5 = cycle(5).unwrap();
        let verdict = is_link_irregular(&k5);
        assert!(verdict_explain(&k5, &verdict).is_ok());
        assert_eq!(verdict_explain(&c5, &verdict), Err(LinkError::StaleVerdict));
    }

    #[test]
    fn explain_mentions_witness() {
        let k5 = complete(5).unwrap();
        let verdict = is_link_irregular(&k5);
        let text = verdict_explain(&k5, &verdict).unwrap();
        assert!(text.contains("L(0) is isomorphic to L(1)"));
    }
}

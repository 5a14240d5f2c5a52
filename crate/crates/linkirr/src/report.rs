//! Deterministic graph reports: one fact model rendered as text or JSON.
//!
//! The same `Report` value backs both renderings, so they always carry
//! identical facts, and every report embeds the canonical graph6 of its
//! subject so outputs are comparable across runs and relabelings.

use serde::Serialize;

use crate::bounds::{edge_bounds, BoundsReport};
use crate::graph::{Bipartiteness, Graph};
use crate::graph6::write_graph6;
use crate::iso::canonical_graph;
use crate::link::{is_link_irregular, link, link_degree_table};
use crate::planar::{is_planar, is_triangulation, ObstructionKind};

#[derive(Debug, Clone, Serialize)]
pub struct Subject {
    /// Where the graph came from: a file path, `builtin:<name>`, or a
    /// caller-supplied tag.
    pub source: String,
    pub order: usize,
    pub edges: usize,
    /// graph6 of the canonically relabeled graph; equal for isomorphic
    /// inputs.
    pub canonical_g6: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LinkRow {
    pub vertex: usize,
    pub degrees: Vec<usize>,
    pub canonical_g6: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictSection {
    pub link_irregular: bool,
    /// Present exactly when not link-irregular.
    pub witness: Option<WitnessSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessSection {
    pub u: usize,
    pub v: usize,
    pub mapping: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlanaritySection {
    pub planar: bool,
    pub triangulation: Option<bool>,
    pub rotation: Option<Vec<Vec<usize>>>,
    pub obstruction: Option<ObstructionSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionSection {
    pub kind: String,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsSection {
    pub edge_lower: u64,
    pub edge_upper: u64,
    pub asym_lower: String,
    pub planar_possible: bool,
    pub edges_within_bounds: bool,
}

/// Full findings for one graph, in fixed section order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub subject: Subject,
    pub regularity: Option<usize>,
    /// `None` when acyclic.
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub link_table: Vec<LinkRow>,
    pub verdict: VerdictSection,
    pub planarity: PlanaritySection,
    /// Present for orders where the bounds are defined (n >= 6).
    pub bounds: Option<BoundsSection>,
}

impl Report {
    /// Computes every section for `g`.
    pub fn build(source: &str, g: &Graph) -> Report {
        let verdict = is_link_irregular(g);
        let planarity = is_planar(g);
        let bounds = edge_bounds(g.order() as u64).ok().map(|b: BoundsReport| {
            let e = g.edge_count() as u64;
            BoundsSection {
                edge_lower: b.edge_lower,
                edge_upper: b.edge_upper,
                asym_lower: b.asym_lower.to_string(),
                planar_possible: b.planar_possible,
                edges_within_bounds: b.edge_lower <= e && e <= b.edge_upper,
            }
        });
        Report {
            subject: Subject {
                source: source.to_string(),
                order: g.order(),
                edges: g.edge_count(),
                canonical_g6: write_graph6(&canonical_graph(g)),
            },
            regularity: g.regularity(),
            girth: g.girth(),
            bipartite: matches!(g.bipartiteness(), Bipartiteness::TwoColoring(_)),
            link_table: (0..g.order())
                .map(|v| {
                    let p = link(g, v);
                    LinkRow {
                        vertex: v,
                        degrees: p.degree_multiset,
                        canonical_g6: write_graph6(&p.canon.code.decode()),
                    }
                })
                .collect(),
            verdict: VerdictSection {
                link_irregular: verdict.irregular,
                witness: verdict.witness.map(|w| WitnessSection {
                    u: w.u,
                    v: w.v,
                    mapping: w.mapping,
                }),
            },
            planarity: PlanaritySection {
                planar: planarity.planar,
                triangulation: is_triangulation(g).ok(),
                rotation: planarity.embedding.map(|r| r.order),
                obstruction: planarity.obstruction.map(|o| ObstructionSection {
                    kind: match o.kind {
                        ObstructionKind::K5 => "K5".to_string(),
                        ObstructionKind::K33 => "K3,3".to_string(),
                    },
                    branch_vertices: o.branch_vertices,
                    paths: o.paths,
                }),
            },
            bounds,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.subject;
        out.push_str(&format!("graph: {}\n", s.source));
        out.push_str(&format!("order: {}  edges: {}\n", s.order, s.edges));
        out.push_str(&format!("canonical: {}\n", s.canonical_g6));
        out.push_str(&match self.regularity {
            Some(r) => format!("regularity: {r}-regular\n"),
            None => "regularity: not regular\n".to_string(),
        });
        out.push_str(&match self.girth {
            Some(g) => format!("girth: {g}\n"),
            None => "girth: infinite (acyclic)\n".to_string(),
        });
        out.push_str(&format!("bipartite: {}\n", self.bipartite));
        out.push_str("link degree table:\n");
        for row in &self.link_table {
            let degrees: Vec<String> = row.degrees.iter().map(|d| d.to_string()).collect();
            out.push_str(&format!(
                "  L({}): {{{}}}  {}\n",
                row.vertex,
                degrees.join(","),
                row.canonical_g6
            ));
        }
        if self.verdict.link_irregular {
            out.push_str("link-irregular: yes\n");
        } else if let Some(w) = &self.verdict.witness {
            out.push_str(&format!("link-irregular: no  (L({}) = L({}))\n", w.u, w.v));
            let pairs: Vec<String> =
                w.mapping.iter().map(|(a, b)| format!("{a}->{b}")).collect();
            out.push_str(&format!("  witness bijection: {}\n", pairs.join(" ")));
        }
        out.push_str(&format!("planar: {}", self.planarity.planar));
        if let Some(t) = self.planarity.triangulation {
            out.push_str(&format!("  triangulation: {t}"));
        }
        out.push('\n');
        if let Some(rot) = &self.planarity.rotation {
            out.push_str("embedding (clockwise neighbor order):\n");
            for (v, cycle) in rot.iter().enumerate() {
                let ns: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!("  {v}: [{}]\n", ns.join(" ")));
            }
        }
        if let Some(o) = &self.planarity.obstruction {
            let bs: Vec<String> = o.branch_vertices.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!(
                "obstruction: {} subdivision, branch vertices [{}]\n",
                o.kind,
                bs.join(" ")
            ));
            for p in &o.paths {
                let ps: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!("  path {}\n", ps.join("-")));
            }
        }
        if let Some(b) = &self.bounds {
            out.push_str(&format!(
                "edge bounds at this order: [{}, {}]  counting bound: {}  within: {}\n",
                b.edge_lower, b.edge_upper, b.asym_lower, b.edges_within_bounds
            ));
            out.push_str(&format!(
                "planarity arithmetically possible at this order: {}\n",
                b.planar_possible
            ));
        }
        out
    }
}

/// One row per vertex, formatted like the published link tables.
pub fn link_table_text(g: &Graph) -> String {
    let mut out = String::new();
    for (v, degrees) in link_degree_table(g) {
        let ds: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("L({v}): {{{}}}\n", ds.join(",")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn renderings_are_deterministic() {
        let g = crate::data::counterexample12();
        let a = Report::build("builtin:counterexample12", &g);
        let b = Report::build("builtin:counterexample12", &g);
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn text_and_json_share_facts() {
        let g = complete(5).unwrap();
        let r = Report::build("k5", &g);
        let text = r.to_text();
        let json = r.to_json();
        assert!(text.contains("link-irregular: no"));
        assert!(json.contains("\"link_irregular\": false"));
        assert!(text.contains("planar: false"));
        assert!(json.contains("\"planar\": false"));
        assert!(text.contains(&r.subject.canonical_g6));
        assert!(json.contains(&r.subject.canonical_g6));
    }

    #[test]
    fn isomorphic_inputs_share_canonical_identity() {
        let g = crate::graph::cycle(6).unwrap();
        let perm = [3, 0, 4, 1, 5, 2];
        let h = g.apply_perm(&perm);
        let rg = Report::build("a", &g);
        let rh = Report::build("b", &h);
        assert_eq!(rg.subject.canonical_g6, rh.subject.canonical_g6);
    }
}

//! Pivot strategies for the matching-tree engine.
//!
//! A strategy decides, at each live node, which vertex to use as the pivot
//! and — at splitting sites — which branch set γ to split on. Every strategy
//! must pick pivots from the available vertices (active vertices outside
//! A ∪ V(𝓑*)) or the run aborts as incomplete.

use crate::error::DevoidError;
use crate::face::Face;
use crate::graph::Multigraph;
use crate::Result;

/// How pivots (and split choices) are selected during tree expansion.
#[derive(Clone, Debug)]
pub enum PivotStrategy {
    /// Scan available vertices ascending and take the first whose Γ has at
    /// most one element (a matching site); if every available vertex splits,
    /// split on the smallest vertex with the lexicographically least γ.
    Greedy,
    /// Pivots consumed in depth-first preorder; split choices consumed in
    /// the order splitting sites are encountered.
    Scripted(ScriptedPlan),
    /// Proof-order pivots for path-avoidance complexes with block width
    /// k − 1 (faces avoid k consecutive vertices).
    PathLabeling(usize),
    /// Proof-order pivots for cycle-avoidance complexes with block width
    /// k − 1.
    CycleLabeling(usize),
    /// Smallest simplicial vertex of the residual graph (dominance
    /// complexes of chordal graphs).
    SimplicialVertex(Multigraph),
    /// Per-component leaf-neighbor pivots on residual forests (dominance
    /// complexes of forests).
    LeafNeighbor(Multigraph),
}

impl PivotStrategy {
    /// Short name recorded in reports.
    pub fn name(&self) -> String {
        match self {
            PivotStrategy::Greedy => "greedy".into(),
            PivotStrategy::Scripted(_) => "scripted".into(),
            PivotStrategy::PathLabeling(k) => format!("path:{k}"),
            PivotStrategy::CycleLabeling(k) => format!("cycle:{k}"),
            PivotStrategy::SimplicialVertex(_) => "simplicial".into(),
            PivotStrategy::LeafNeighbor(_) => "leaf".into(),
        }
    }

    /// The guiding graph, for strategies that consult one.
    pub fn graph(&self) -> Option<&Multigraph> {
        match self {
            PivotStrategy::SimplicialVertex(g) | PivotStrategy::LeafNeighbor(g) => Some(g),
            _ => None,
        }
    }
}

/// A fully scripted run: pivots are handed out in depth-first preorder of
/// node expansion, and split choices in the order splitting sites appear.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScriptedPlan {
    pub pivots: Vec<usize>,
    pub gammas: Vec<Face>,
}

impl ScriptedPlan {
    /// Parse a script. One directive per line; `#` starts a comment.
    ///
    /// ```text
    /// pivot 1        # next pivot in depth-first preorder
    /// split 2 3      # γ for the next splitting site encountered
    /// ```
    pub fn parse(text: &str) -> Result<ScriptedPlan> {
        let mut plan = ScriptedPlan::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().expect("non-empty line has a token");
            let vertices: Vec<usize> = tokens
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        DevoidError::Parse(format!(
                            "script line {}: bad vertex {t:?}",
                            lineno + 1
                        ))
                    })
                })
                .collect::<Result<_>>()?;
            match keyword {
                "pivot" => {
                    if vertices.len() != 1 {
                        return Err(DevoidError::Parse(format!(
                            "script line {}: `pivot` takes exactly one vertex",
                            lineno + 1
                        )));
                    }
                    plan.pivots.push(vertices[0]);
                }
                "split" => {
                    if vertices.is_empty() {
                        return Err(DevoidError::Parse(format!(
                            "script line {}: `split` needs at least one vertex",
                            lineno + 1
                        )));
                    }
                    plan.gammas.push(Face::from_vertices(vertices));
                }
                other => {
                    return Err(DevoidError::Parse(format!(
                        "script line {}: unknown directive {other:?}",
                        lineno + 1
                    )));
                }
            }
        }
        Ok(plan)
    }
}

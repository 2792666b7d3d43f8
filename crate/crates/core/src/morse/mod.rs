//! Discrete Morse matchings from matching trees: homotopy descriptors,
//! run reports, and pivot strategies.
//!
//! The submodules contain the tree engine itself ([`tree`]), the pivot
//! strategies ([`strategy`]), and the homotopy-preserving reductions
//! ([`reduce`]). This module defines the shared vocabulary types.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::DevoidError;
use crate::face::Face;
use crate::Result;

pub mod reduce;
pub mod strategy;
pub mod tree;

pub use reduce::{
    collapse_to_point, complementation, fold_reduce, nonface_split, split_reduce,
    ContractibilityCertificate, NonfaceSplit,
};
pub use strategy::{PivotStrategy, ScriptedPlan};
pub use tree::{
    assemble_matching, run_tree, verify_acyclic, verify_matching, MatchingTree, MorseMatching,
    TreeNode, DEFAULT_NODE_BUDGET,
};

/// Homotopy type read off a discrete Morse computation or a theorem formula.
///
/// `WedgeOfSpheres` carries a sorted multiset of sphere dimensions; dimension
/// −1 denotes the empty complex (the complex whose only face is ∅). A wedge
/// with a single summand is a sphere. `UnknownCW` records critical-cell
/// counts per dimension when no sphere-wedge interpretation applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomotopyDescriptor {
    Contractible,
    WedgeOfSpheres(Vec<i64>),
    UnknownCW(BTreeMap<i64, u64>),
}

impl HomotopyDescriptor {
    /// A single sphere of dimension `d` (−1 allowed).
    pub fn sphere(d: i64) -> HomotopyDescriptor {
        HomotopyDescriptor::WedgeOfSpheres(vec![d])
    }

    /// A wedge of spheres with the given dimension multiset (normalized to
    /// sorted order; the empty wedge is a point, i.e. contractible).
    pub fn wedge(mut dims: Vec<i64>) -> HomotopyDescriptor {
        if dims.is_empty() {
            return HomotopyDescriptor::Contractible;
        }
        dims.sort_unstable();
        HomotopyDescriptor::WedgeOfSpheres(dims)
    }

    /// `c` copies of the sphere of dimension `d`.
    pub fn wedge_of(c: usize, d: i64) -> HomotopyDescriptor {
        HomotopyDescriptor::wedge(vec![d; c])
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, HomotopyDescriptor::UnknownCW(_))
    }

    /// JSON form used in reports:
    /// `{"kind": "contractible"}`, `{"kind": "wedge_of_spheres", "spheres": [..]}`,
    /// or `{"kind": "unknown_cw", "cells": {"<dim>": count}}`.
    pub fn to_json(&self) -> Value {
        match self {
            HomotopyDescriptor::Contractible => json!({"kind": "contractible"}),
            HomotopyDescriptor::WedgeOfSpheres(dims) => {
                json!({"kind": "wedge_of_spheres", "spheres": dims})
            }
            HomotopyDescriptor::UnknownCW(cells) => {
                let map: BTreeMap<String, u64> =
                    cells.iter().map(|(d, c)| (d.to_string(), *c)).collect();
                json!({"kind": "unknown_cw", "cells": map})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<HomotopyDescriptor> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| DevoidError::Parse("descriptor JSON lacks a \"kind\" field".into()))?;
        match kind {
            "contractible" => Ok(HomotopyDescriptor::Contractible),
            "wedge_of_spheres" => {
                let dims = v
                    .get("spheres")
                    .and_then(Value::as_array)
                    .ok_or_else(|| DevoidError::Parse("wedge descriptor lacks \"spheres\"".into()))?
                    .iter()
                    .map(|x| {
                        x.as_i64()
                            .ok_or_else(|| DevoidError::Parse("sphere dimension must be an integer".into()))
                    })
                    .collect::<Result<Vec<i64>>>()?;
                Ok(HomotopyDescriptor::wedge(dims))
            }
            "unknown_cw" => {
                let mut cells = BTreeMap::new();
                if let Some(map) = v.get("cells").and_then(Value::as_object) {
                    for (k, count) in map {
                        let d: i64 = k
                            .parse()
                            .map_err(|_| DevoidError::Parse(format!("bad dimension key {k:?}")))?;
                        let c = count
                            .as_u64()
                            .ok_or_else(|| DevoidError::Parse("cell count must be an integer".into()))?;
                        cells.insert(d, c);
                    }
                }
                Ok(HomotopyDescriptor::UnknownCW(cells))
            }
            other => Err(DevoidError::Parse(format!("unknown descriptor kind {other:?}"))),
        }
    }
}

impl fmt::Display for HomotopyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyDescriptor::Contractible => write!(f, "contractible"),
            HomotopyDescriptor::WedgeOfSpheres(dims) => {
                let parts: Vec<String> = dims.iter().map(|d| format!("S^{d}")).collect();
                write!(f, "{}", parts.join(" v "))
            }
            HomotopyDescriptor::UnknownCW(cells) => {
                write!(f, "unknown CW (cells per dim:")?;
                for (d, c) in cells {
                    write!(f, " {d}:{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Read a homotopy type off a multiset of critical cells.
///
/// With the empty face participating as a (−1)-dimensional cell, a matching
/// that leaves no critical cell at all exhibits the complex as collapsible to
/// a point; a lone critical ∅ is the empty complex S^(−1); critical cells
/// concentrated in one dimension d ≥ 0 (with ∅ matched) give a wedge of
/// spheres of dimension d, a count of one being a single sphere. Anything
/// else is reported as an unknown CW cell vector.
pub fn interpret_critical_cells(critical: &[Face]) -> HomotopyDescriptor {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for cell in critical {
        *counts.entry(cell.dim()).or_insert(0) += 1;
    }
    if counts.is_empty() {
        return HomotopyDescriptor::Contractible;
    }
    if counts.len() == 1 {
        let (&d, &c) = counts.iter().next().expect("non-empty");
        if d == -1 && c == 1 {
            return HomotopyDescriptor::sphere(-1);
        }
        if d >= 0 {
            return HomotopyDescriptor::wedge_of(c as usize, d);
        }
    }
    HomotopyDescriptor::UnknownCW(counts)
}

/// Outcome of a matching-tree run: the critical cells and bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseReport {
    /// Critical (unmatched) cells, sorted.
    pub critical: Vec<Face>,
    /// Number of matched pairs.
    pub matched_pairs: usize,
    /// Number of matching-tree nodes expanded.
    pub tree_nodes: usize,
    /// Name of the pivot strategy that produced the run.
    pub strategy: String,
}

impl MorseReport {
    /// Critical-cell counts keyed by dimension.
    pub fn critical_counts(&self) -> BTreeMap<i64, u64> {
        let mut counts = BTreeMap::new();
        for cell in &self.critical {
            *counts.entry(cell.dim()).or_insert(0) += 1;
        }
        counts
    }

    /// Homotopy type read off the critical cells.
    pub fn interpret(&self) -> HomotopyDescriptor {
        interpret_critical_cells(&self.critical)
    }

    /// JSON form:
    /// `{"critical": [[v..]..], "c": {"<dim>": count}, "descriptor": {..},
    ///   "matched_pairs": n, "tree_nodes": n, "strategy": "name"}`.
    pub fn to_json(&self) -> Value {
        let critical: Vec<Vec<usize>> = self.critical.iter().map(|f| f.to_vec()).collect();
        let counts: BTreeMap<String, u64> = self
            .critical_counts()
            .into_iter()
            .map(|(d, c)| (d.to_string(), c))
            .collect();
        json!({
            "critical": critical,
            "c": counts,
            "descriptor": self.interpret().to_json(),
            "matched_pairs": self.matched_pairs,
            "tree_nodes": self.tree_nodes,
            "strategy": self.strategy,
        })
    }
}

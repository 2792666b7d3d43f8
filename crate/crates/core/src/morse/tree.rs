//! The matching-tree engine: a recursive decomposition of a simplicial
//! complex into nodes Σ(A, 𝓑) = { I ∈ Δ : A ⊆ I, no B ∈ 𝓑 with B ⊆ I },
//! driven by pivot vertices. Matching sites pair faces across a pivot;
//! splitting sites partition a node into two children; leaves with nothing
//! left to decide contribute their A-set as critical cells. The union of all
//! site matchings is an acyclic face matching, so the critical cells
//! determine the homotopy type through the usual collapsing theorem.
//!
//! Everything here is deterministic: node states are canonical (antichains
//! sorted lexicographically), the traversal is depth-first with left
//! children first, and every tie is broken by the lexicographic face order.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::complex::ComplexRepr;
use crate::error::DevoidError;
use crate::face::{Antichain, Face};
use crate::graph::Multigraph;
use crate::morse::strategy::PivotStrategy;
use crate::morse::MorseReport;
use crate::Result;

/// Default cap on the number of tree nodes a run may create.
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

/// Default cap on explicit face enumeration (matching assembly, verifiers).
pub const DEFAULT_FACE_BUDGET: usize = 1 << 20;

// ---------------------------------------------------------------------------
// node states
// ---------------------------------------------------------------------------

/// A node Σ(A, 𝓑) of the matching tree: the faces that contain all of `a`
/// and no member of `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeState {
    /// Vertices forced into every member of the node.
    pub a: Face,
    /// Forbidden sets: no member of the node contains any of these.
    pub b: Antichain,
}

impl NodeState {
    /// The root node Σ(∅, {}) — all faces of the complex.
    pub fn root() -> NodeState {
        NodeState {
            a: Face::EMPTY,
            b: Antichain::empty(),
        }
    }

    /// Vertices excluded from every member by singleton forbidden sets.
    pub fn blocked(&self) -> Face {
        self.b.singleton_support()
    }

    /// Pivot candidates: vertices that are faces of the complex, not yet
    /// forced into `a`, and not blocked outright by a singleton in `b`.
    pub fn available(&self, c: &ComplexRepr) -> Face {
        c.live_vertices().minus(self.a).minus(self.blocked())
    }

    /// Membership test for Σ(a, b).
    pub fn admits(&self, c: &ComplexRepr, i: Face) -> bool {
        c.is_face(i) && self.a.is_subset_of(i) && !self.b.some_member_within(i)
    }

    /// A live node must cover every obstruction of its `a`-set: each minimal
    /// set whose union with `a` leaves the complex has to contain a
    /// forbidden set, otherwise Σ(a, b) would hold faces the node's
    /// bookkeeping cannot see.
    fn validate(&self, c: &ComplexRepr) -> Result<()> {
        if !self.b.support().intersection(self.a).is_empty() {
            return Err(DevoidError::InternalInvariant(format!(
                "node Σ({}, {:?}) has a forbidden set meeting its forced set",
                self.a, self.b
            )));
        }
        for delta in c.d_min(self.a).iter() {
            if !self.b.some_member_within(*delta) {
                return Err(DevoidError::InternalInvariant(format!(
                    "node Σ({}, {:?}) is not well-formed: obstruction {} has no forbidden subset",
                    self.a, self.b, delta
                )));
            }
        }
        Ok(())
    }

    /// Dead states describe the empty face set: the forced set is not a
    /// face, or some forbidden set is empty.
    fn is_dead(&self, c: &ComplexRepr) -> bool {
        !c.is_face(self.a) || self.b.iter().any(|b| b.is_empty())
    }
}

// ---------------------------------------------------------------------------
// tree structure
// ---------------------------------------------------------------------------

/// What happened at a node: a pairing across a pivot, a two-way split, or a
/// leaf (empty or critical).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SiteKind {
    /// All faces of the node not containing `gamma` pair up across `pivot`;
    /// the unmatched remainder (faces containing `gamma`) forms the child.
    /// `gamma = None` means the pairing is perfect and there is no child.
    MatchingSite { pivot: usize, gamma: Option<Face> },
    /// The node splits into faces avoiding `gamma` (left child) and faces
    /// containing it (right child).
    SplittingSite { pivot: usize, gamma: Face },
    /// The node holds no faces at all.
    EmptyLeaf,
    /// The node holds exactly the face `state.a`, which is critical.
    CriticalLeaf,
}

#[derive(Clone, Debug)]
pub struct TreeNode {
    pub id: usize,
    pub parent: Option<usize>,
    pub state: NodeState,
    pub site: SiteKind,
    pub children: Vec<usize>,
}

/// A fully expanded matching tree; node 0 is the root and children always
/// carry larger ids than their parents.
#[derive(Clone, Debug)]
pub struct MatchingTree {
    pub nodes: Vec<TreeNode>,
}

impl MatchingTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    /// Critical cells (the A-sets of critical leaves), sorted by cardinality
    /// then lexicographically.
    pub fn critical_cells(&self) -> Vec<Face> {
        let mut cells: Vec<Face> = self
            .nodes
            .iter()
            .filter(|n| n.site == SiteKind::CriticalLeaf)
            .map(|n| n.state.a)
            .collect();
        cells.sort_unstable_by_key(|f| (f.cardinality(), *f));
        cells
    }
}

/// An explicit face matching: pairs (σ, σ ∪ {p}) with the smaller face first.
pub type MorseMatching = Vec<(Face, Face)>;

// ---------------------------------------------------------------------------
// expansion
// ---------------------------------------------------------------------------

/// Minimal sets whose addition to a member of `node` would push it outside
/// the node: obstructions of `a_new` against the complex, merged with the
/// node's forbidden sets stripped of `a_new`.
pub fn d_up(c: &ComplexRepr, node: &NodeState, a_new: Face) -> Antichain {
    let mut sets: Vec<Face> = c.d_min(a_new).iter().copied().collect();
    for b in node.b.iter() {
        sets.push(b.minus(a_new));
    }
    Antichain::minimalize(sets)
}

/// Result of expanding a node at a pivot.
#[derive(Clone, Debug)]
pub enum SiteResult {
    Matching {
        gamma: Option<Face>,
        child: Option<NodeState>,
    },
    Splitting {
        /// The split set actually chosen (lexicographically least candidate
        /// by default; strategies may override via [`split_children`]).
        gamma: Face,
        /// All eligible split sets, in lexicographic order.
        candidates: Vec<Face>,
        left: NodeState,
        right: NodeState,
    },
}

/// Children of a split on `gamma`: faces avoiding `gamma` keep the forced
/// set and gain `gamma` as forbidden; faces containing `gamma` absorb it
/// into the forced set and inherit the lifted obstructions.
pub fn split_children(c: &ComplexRepr, node: &NodeState, gamma: Face) -> (NodeState, NodeState) {
    let left = NodeState {
        a: node.a,
        b: Antichain::minimalize(node.b.iter().copied().chain([gamma])),
    };
    let right = NodeState {
        a: node.a.union(gamma),
        b: d_up(c, node, gamma),
    };
    (left, right)
}

/// Expand `node` at `pivot`: compute the eligible obstruction sets
/// Γ = { γ ∈ d_up(node, {pivot}) : no forbidden set inside γ }. At most one
/// eligible set makes this a matching site (faces avoiding γ pair across the
/// pivot); two or more force a split on the chosen γ.
pub fn expand(c: &ComplexRepr, node: &NodeState, pivot: usize) -> Result<SiteResult> {
    if node.is_dead(c) {
        return Err(DevoidError::InvalidParameter(
            "cannot expand a node that holds no faces".into(),
        ));
    }
    if !node.available(c).contains(pivot) {
        return Err(DevoidError::InvalidPivot(format!(
            "pivot {pivot} is not available at node Σ({}, {:?})",
            node.a, node.b
        )));
    }
    let dup = d_up(c, node, Face::singleton(pivot));
    let candidates: Vec<Face> = dup
        .iter()
        .copied()
        .filter(|&g| !node.b.some_member_within(g))
        .collect();
    if candidates.len() <= 1 {
        let gamma = candidates.first().copied();
        let child = match gamma {
            Some(g) => {
                let state = NodeState {
                    a: node.a.union(g),
                    b: d_up(c, node, g),
                };
                validate_child(c, &state)?;
                Some(state)
            }
            None => None,
        };
        Ok(SiteResult::Matching { gamma, child })
    } else {
        let gamma = candidates[0];
        let (left, right) = split_children(c, node, gamma);
        validate_child(c, &left)?;
        validate_child(c, &right)?;
        Ok(SiteResult::Splitting {
            gamma,
            candidates,
            left,
            right,
        })
    }
}

/// Dead children are fine (they become empty leaves); live ones must pass
/// the node invariants.
fn validate_child(c: &ComplexRepr, state: &NodeState) -> Result<()> {
    if state.is_dead(c) {
        Ok(())
    } else {
        state.validate(c)
    }
}

// ---------------------------------------------------------------------------
// pivot strategies
// ---------------------------------------------------------------------------

struct ScriptCursor {
    pivots: VecDeque<usize>,
    gammas: VecDeque<Face>,
}

fn smallest_simplicial_in(g: &Multigraph, mask: Face) -> Option<usize> {
    mask.vertices().find(|&v| {
        let nbrs = g.neighbors_in(v, mask).to_vec();
        nbrs.iter()
            .enumerate()
            .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    })
}

/// Pivot candidate inside one connected component of the residual graph:
/// for a component with at least three vertices, the smallest leaf hanging
/// off the smallest near-leaf branch vertex (degree ≤ 1 after stripping all
/// leaves); smaller components offer their smallest vertex.
fn leaf_neighbor_candidate(g: &Multigraph, comp: Face) -> usize {
    let smallest = comp.min_vertex().expect("components are nonempty");
    if comp.cardinality() <= 2 {
        return smallest;
    }
    let leaves = Face::from_vertices(
        comp.vertices()
            .filter(|&v| g.neighbors_in(v, comp).cardinality() == 1),
    );
    let stripped = comp.minus(leaves);
    let saddle = stripped
        .vertices()
        .find(|&x| g.neighbors_in(x, stripped).cardinality() <= 1);
    match saddle {
        Some(x) => g
            .neighbors_in(x, comp)
            .intersection(leaves)
            .min_vertex()
            .unwrap_or(smallest),
        // The component has no tree structure to exploit; fall back.
        None => smallest,
    }
}

/// Pick the pivot for a node. Greedy probes ascending pivots for a matching
/// site and returns the cached expansion; all other strategies return only
/// the vertex.
fn choose_pivot(
    c: &ComplexRepr,
    strategy: &PivotStrategy,
    cursor: &mut Option<ScriptCursor>,
    state: &NodeState,
    available: Face,
    used: Face,
) -> Result<(usize, Option<SiteResult>)> {
    let smallest = available
        .min_vertex()
        .expect("caller guarantees availability");
    match strategy {
        PivotStrategy::Greedy => {
            let mut first: Option<SiteResult> = None;
            for p in available.vertices() {
                let result = expand(c, state, p)?;
                if matches!(result, SiteResult::Matching { .. }) {
                    return Ok((p, Some(result)));
                }
                if first.is_none() {
                    first = Some(result);
                }
            }
            Ok((smallest, first))
        }
        PivotStrategy::Scripted(_) => {
            let cur = cursor.as_mut().expect("scripted runs carry a cursor");
            let p = cur.pivots.pop_front().ok_or_else(|| {
                DevoidError::StrategyIncomplete(format!(
                    "script ran out of pivot directives at node Σ({}, {:?})",
                    state.a, state.b
                ))
            })?;
            if !available.contains(p) {
                return Err(DevoidError::InvalidPivot(format!(
                    "scripted pivot {p} is not available at node Σ({}, {:?})",
                    state.a, state.b
                )));
            }
            Ok((p, None))
        }
        PivotStrategy::PathLabeling(_) | PivotStrategy::CycleLabeling(_) => {
            let fresh = available.minus(used);
            Ok((fresh.min_vertex().unwrap_or(smallest), None))
        }
        PivotStrategy::SimplicialVertex(g) => {
            Ok((smallest_simplicial_in(g, available).unwrap_or(smallest), None))
        }
        PivotStrategy::LeafNeighbor(g) => {
            let pivot = g
                .components_within(available)
                .iter()
                .map(|&comp| leaf_neighbor_candidate(g, comp))
                .min()
                .unwrap_or(smallest);
            Ok((pivot, None))
        }
    }
}

/// Strategy-driven γ override at a splitting site; `None` keeps the default.
fn choose_gamma(
    strategy: &PivotStrategy,
    cursor: &mut Option<ScriptCursor>,
    state: &NodeState,
    pivot: usize,
    candidates: &[Face],
) -> Result<Option<Face>> {
    match strategy {
        PivotStrategy::Scripted(_) => {
            let cur = cursor.as_mut().expect("scripted runs carry a cursor");
            let g = cur.gammas.pop_front().ok_or_else(|| {
                DevoidError::StrategyIncomplete(format!(
                    "script ran out of split directives at node Σ({}, {:?})",
                    state.a, state.b
                ))
            })?;
            if !candidates.contains(&g) {
                return Err(DevoidError::InvalidPivot(format!(
                    "scripted split set {g} is not an eligible candidate at node Σ({}, {:?})",
                    state.a, state.b
                )));
            }
            Ok(Some(g))
        }
        // The theorem-order strategies prefer the least candidate living
        // strictly above the pivot, mirroring the proofs' block labeling.
        PivotStrategy::PathLabeling(_) | PivotStrategy::CycleLabeling(_) => Ok(candidates
            .iter()
            .copied()
            .find(|g| g.min_vertex() > Some(pivot))),
        _ => Ok(None),
    }
}

// ---------------------------------------------------------------------------
// the run loop
// ---------------------------------------------------------------------------

/// Expand the full matching tree of `c` under `strategy`. The traversal is
/// depth-first, left children first; scripted pivots are consumed in that
/// order, split directives at splitting sites only.
pub fn run_tree(
    c: &ComplexRepr,
    strategy: &PivotStrategy,
    node_budget: usize,
) -> Result<(MatchingTree, MorseReport)> {
    if !c.is_face(Face::EMPTY) {
        return Err(DevoidError::InvalidParameter(
            "the void complex admits no matching tree".into(),
        ));
    }
    if let Some(g) = strategy.graph() {
        if g.n_vertices() != c.n_vertices() {
            return Err(DevoidError::InvalidParameter(format!(
                "strategy graph has {} vertices but the complex has {}",
                g.n_vertices(),
                c.n_vertices()
            )));
        }
    }
    let mut cursor = match strategy {
        PivotStrategy::Scripted(plan) => Some(ScriptCursor {
            pivots: plan.pivots.iter().copied().collect(),
            gammas: plan.gammas.iter().copied().collect(),
        }),
        _ => None,
    };

    let mut nodes: Vec<TreeNode> = Vec::new();
    // (state, parent, pivots used on the branch so far)
    let mut stack: Vec<(NodeState, Option<usize>, Face)> =
        vec![(NodeState::root(), None, Face::EMPTY)];
    while let Some((state, parent, used)) = stack.pop() {
        if nodes.len() >= node_budget {
            return Err(DevoidError::BudgetExceeded(format!(
                "matching tree exceeded the node budget of {node_budget}"
            )));
        }
        let id = nodes.len();
        if let Some(p) = parent {
            nodes[p].children.push(id);
        }
        if state.is_dead(c) {
            nodes.push(TreeNode {
                id,
                parent,
                state,
                site: SiteKind::EmptyLeaf,
                children: Vec::new(),
            });
            continue;
        }
        state.validate(c)?;
        let available = state.available(c);
        if available.is_empty() {
            nodes.push(TreeNode {
                id,
                parent,
                state,
                site: SiteKind::CriticalLeaf,
                children: Vec::new(),
            });
            continue;
        }
        let (pivot, cached) = choose_pivot(c, strategy, &mut cursor, &state, available, used)?;
        let result = match cached {
            Some(r) => r,
            None => expand(c, &state, pivot)?,
        };
        let branch_used = used.insert(pivot);
        match result {
            SiteResult::Matching { gamma, child } => {
                nodes.push(TreeNode {
                    id,
                    parent,
                    state,
                    site: SiteKind::MatchingSite { pivot, gamma },
                    children: Vec::new(),
                });
                if let Some(ch) = child {
                    stack.push((ch, Some(id), branch_used));
                }
            }
            SiteResult::Splitting {
                gamma,
                candidates,
                left,
                right,
            } => {
                let (gamma, left, right) =
                    match choose_gamma(strategy, &mut cursor, &state, pivot, &candidates)? {
                        Some(g) if g != gamma => {
                            let (l, r) = split_children(c, &state, g);
                            validate_child(c, &l)?;
                            validate_child(c, &r)?;
                            (g, l, r)
                        }
                        _ => (gamma, left, right),
                    };
                nodes.push(TreeNode {
                    id,
                    parent,
                    state,
                    site: SiteKind::SplittingSite { pivot, gamma },
                    children: Vec::new(),
                });
                // Left child first in depth-first order.
                stack.push((right, Some(id), branch_used));
                stack.push((left, Some(id), branch_used));
            }
        }
    }

    if let Some(cur) = &cursor {
        if !cur.pivots.is_empty() || !cur.gammas.is_empty() {
            return Err(DevoidError::StrategyIncomplete(format!(
                "script has {} unused pivot directive(s) and {} unused split directive(s)",
                cur.pivots.len(),
                cur.gammas.len()
            )));
        }
    }

    let tree = MatchingTree { nodes };
    let critical = tree.critical_cells();
    // Matched pairs = (total faces − critical)/2; beyond the enumeration
    // guard the count is reported as 0 (the tree itself needs no
    // enumeration).
    let matched_pairs = match c.enumerate_faces(None) {
        Ok(faces) => (faces.len() - critical.len()) / 2,
        Err(_) => 0,
    };
    let report = MorseReport {
        critical,
        matched_pairs,
        tree_nodes: tree.nodes.len(),
        strategy: strategy.name(),
    };
    Ok((tree, report))
}

// ---------------------------------------------------------------------------
// explicit matchings
// ---------------------------------------------------------------------------

/// Materialize the face matching the tree describes, by routing every face
/// to its site: at a matching site, faces containing the pivot pair with the
/// face below them; faces containing the unmatched obstruction descend.
pub fn assemble_matching(
    c: &ComplexRepr,
    tree: &MatchingTree,
    face_budget: usize,
) -> Result<MorseMatching> {
    let faces = c.enumerate_faces(None)?;
    if faces.len() > face_budget {
        return Err(DevoidError::BudgetExceeded(format!(
            "complex has {} faces, over the face budget {face_budget}",
            faces.len()
        )));
    }
    let mut pairs: Vec<(Face, Face)> = Vec::new();
    for &face in &faces {
        let mut node = &tree.nodes[0];
        loop {
            match &node.site {
                SiteKind::MatchingSite { pivot, gamma } => {
                    if face.contains(*pivot) {
                        pairs.push((face.remove(*pivot), face));
                        break;
                    }
                    match gamma {
                        Some(g) if g.is_subset_of(face) => {
                            node = &tree.nodes[node.children[0]];
                        }
                        // Matched upward; the pair is recorded at the
                        // partner face.
                        _ => break,
                    }
                }
                SiteKind::SplittingSite { gamma, .. } => {
                    let side = usize::from(gamma.is_subset_of(face));
                    node = &tree.nodes[node.children[side]];
                }
                SiteKind::CriticalLeaf => {
                    if node.state.a != face {
                        return Err(DevoidError::InternalInvariant(format!(
                            "face {face} routed to critical leaf holding {}",
                            node.state.a
                        )));
                    }
                    break;
                }
                SiteKind::EmptyLeaf => {
                    return Err(DevoidError::InternalInvariant(format!(
                        "face {face} routed to an empty leaf"
                    )));
                }
            }
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// Check that `m` is a genuine face matching: every pair is (face, face ∪
/// one vertex) and no face appears twice.
pub fn verify_matching(c: &ComplexRepr, m: &MorseMatching, face_budget: usize) -> Result<bool> {
    let faces = c.enumerate_faces(None)?;
    if faces.len() > face_budget {
        return Err(DevoidError::BudgetExceeded(format!(
            "complex has {} faces, over the face budget {face_budget}",
            faces.len()
        )));
    }
    let face_set: HashSet<Face> = faces.into_iter().collect();
    let mut seen: HashSet<Face> = HashSet::new();
    for &(lo, hi) in m {
        if !face_set.contains(&lo) || !face_set.contains(&hi) {
            return Ok(false);
        }
        if !lo.is_subset_of(hi) || hi.cardinality() != lo.cardinality() + 1 {
            return Ok(false);
        }
        if !seen.insert(lo) || !seen.insert(hi) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check acyclicity of the modified Hasse diagram: covering relations point
/// down, matched pairs are reversed to point up, and the result must admit a
/// topological order.
pub fn verify_acyclic(c: &ComplexRepr, m: &MorseMatching, face_budget: usize) -> Result<bool> {
    let faces = c.enumerate_faces(None)?;
    if faces.len() > face_budget {
        return Err(DevoidError::BudgetExceeded(format!(
            "complex has {} faces, over the face budget {face_budget}",
            faces.len()
        )));
    }
    let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let matched: HashSet<(Face, Face)> = m.iter().copied().collect();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
    let mut indegree = vec![0usize; faces.len()];
    for (ti, &tau) in faces.iter().enumerate() {
        for v in tau.vertices() {
            let sigma = tau.remove(v);
            let si = index[&sigma];
            if matched.contains(&(sigma, tau)) {
                succ[si].push(ti);
                indegree[ti] += 1;
            } else {
                succ[ti].push(si);
                indegree[si] += 1;
            }
        }
    }
    let mut queue: VecDeque<usize> = indegree
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 0)
        .map(|(i, _)| i)
        .collect();
    let mut ordered = 0usize;
    while let Some(u) = queue.pop_front() {
        ordered += 1;
        for &w in &succ[u] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    Ok(ordered == faces.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::random_complex;
    use crate::devoid::{devoid_complex, dominance_complex, DevoidSpec};
    use crate::graph::{complete, cycle, path, star, PatternGraph};
    use crate::homology::{betti, descriptor_match, DescriptorMatch};
    use crate::morse::strategy::ScriptedPlan;
    use crate::morse::{interpret_critical_cells, HomotopyDescriptor};

    fn f(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied())
    }

    fn cx(n: usize, facets: &[&[usize]]) -> ComplexRepr {
        ComplexRepr::from_facets(n, facets.iter().map(|s| f(s))).expect("valid facets")
    }

    /// The six-edge graph complex used as the running worked example: facets
    /// 01, 02, 12, 13, 14, 34 on five vertices.
    fn worked_example() -> ComplexRepr {
        cx(5, &[&[0, 1], &[0, 2], &[1, 2], &[1, 3], &[1, 4], &[3, 4]])
    }

    fn ac(sets: &[&[usize]]) -> Antichain {
        Antichain::minimalize(sets.iter().map(|s| f(s)))
    }

    #[test]
    fn d_up_lifts_obstructions_through_forbidden_sets() {
        let c = worked_example();
        let root = NodeState::root();
        assert_eq!(
            d_up(&c, &root, f(&[0])),
            ac(&[&[1, 2], &[3], &[4]]),
            "root obstructions of vertex 0"
        );
        assert_eq!(d_up(&c, &root, Face::EMPTY), Antichain::empty());
        let node = NodeState {
            a: Face::EMPTY,
            b: ac(&[&[1, 2]]),
        };
        assert_eq!(d_up(&c, &node, f(&[1])), ac(&[&[2], &[3, 4]]));
    }

    #[test]
    fn expand_classifies_sites_like_the_worked_example() {
        let c = worked_example();

        // Root, pivot 0: three eligible sets force a split on {1,2}.
        match expand(&c, &NodeState::root(), 0).unwrap() {
            SiteResult::Splitting {
                gamma,
                candidates,
                left,
                right,
            } => {
                assert_eq!(gamma, f(&[1, 2]));
                assert_eq!(candidates, vec![f(&[1, 2]), f(&[3]), f(&[4])]);
                assert_eq!(left.a, Face::EMPTY);
                assert_eq!(left.b, ac(&[&[1, 2]]));
                assert_eq!(right.a, f(&[1, 2]));
                assert_eq!(right.b, ac(&[&[0], &[3], &[4]]));
            }
            other => panic!("expected a splitting site, got {other:?}"),
        }

        // Σ({2}, {{1},{3},{4}}), pivot 0: perfect pairing, no child.
        let node = NodeState {
            a: f(&[2]),
            b: ac(&[&[1], &[3], &[4]]),
        };
        match expand(&c, &node, 0).unwrap() {
            SiteResult::Matching { gamma, child } => {
                assert_eq!(gamma, None);
                assert!(child.is_none());
            }
            other => panic!("expected a matching site, got {other:?}"),
        }

        // Σ(∅, {{2}}), pivot 1: one eligible set {3,4} remains.
        let node = NodeState {
            a: Face::EMPTY,
            b: ac(&[&[2]]),
        };
        match expand(&c, &node, 1).unwrap() {
            SiteResult::Matching { gamma, child } => {
                assert_eq!(gamma, Some(f(&[3, 4])));
                let child = child.unwrap();
                assert_eq!(child.a, f(&[3, 4]));
                assert_eq!(child.b, ac(&[&[0], &[1], &[2]]));
            }
            other => panic!("expected a matching site, got {other:?}"),
        }

        // Pivot hygiene.
        assert!(matches!(
            expand(&c, &NodeState::root(), 9),
            Err(DevoidError::InvalidPivot(_))
        ));
        let blocked = NodeState {
            a: f(&[0]),
            b: ac(&[&[3]]),
        };
        assert!(matches!(
            expand(&c, &blocked, 0),
            Err(DevoidError::InvalidPivot(_))
        ));
        assert!(matches!(
            expand(&c, &blocked, 3),
            Err(DevoidError::InvalidPivot(_))
        ));
    }

    #[test]
    fn scripted_run_reproduces_the_worked_example_tree() {
        let c = worked_example();
        let plan = ScriptedPlan {
            pivots: vec![0, 1, 1, 0],
            gammas: vec![f(&[1, 2]), f(&[2])],
        };
        let strategy = PivotStrategy::Scripted(plan);
        let (tree, report) = run_tree(&c, &strategy, DEFAULT_NODE_BUDGET).unwrap();

        assert_eq!(report.critical, vec![f(&[1, 2]), f(&[3, 4])]);
        assert_eq!(report.tree_nodes, 6);
        assert_eq!(report.matched_pairs, 5);
        assert_eq!(report.strategy, "scripted");
        assert_eq!(
            interpret_critical_cells(&report.critical),
            HomotopyDescriptor::wedge(vec![1, 1])
        );

        // The full matching, frozen from the worked example.
        let matching = assemble_matching(&c, &tree, DEFAULT_FACE_BUDGET).unwrap();
        assert_eq!(
            matching,
            vec![
                (Face::EMPTY, f(&[1])),
                (f(&[0]), f(&[0, 1])),
                (f(&[2]), f(&[0, 2])),
                (f(&[3]), f(&[1, 3])),
                (f(&[4]), f(&[1, 4])),
            ]
        );
        assert!(verify_matching(&c, &matching, DEFAULT_FACE_BUDGET).unwrap());
        assert!(verify_acyclic(&c, &matching, DEFAULT_FACE_BUDGET).unwrap());

        // Tree shape: root splits, left subtree splits again.
        assert_eq!(
            tree.root().site,
            SiteKind::SplittingSite {
                pivot: 0,
                gamma: f(&[1, 2])
            }
        );
        let left = &tree.nodes[tree.root().children[0]];
        assert_eq!(
            left.site,
            SiteKind::SplittingSite {
                pivot: 1,
                gamma: f(&[2])
            }
        );
    }

    #[test]
    fn scripted_runs_fail_cleanly_on_bad_scripts() {
        let c = worked_example();
        let budget = DEFAULT_NODE_BUDGET;

        let short = PivotStrategy::Scripted(ScriptedPlan {
            pivots: vec![0],
            gammas: vec![f(&[1, 2])],
        });
        assert!(matches!(
            run_tree(&c, &short, budget),
            Err(DevoidError::StrategyIncomplete(_))
        ));

        let leftover = PivotStrategy::Scripted(ScriptedPlan {
            pivots: vec![0, 1, 1, 0, 3],
            gammas: vec![f(&[1, 2]), f(&[2])],
        });
        assert!(matches!(
            run_tree(&c, &leftover, budget),
            Err(DevoidError::StrategyIncomplete(_))
        ));

        let bad_pivot = PivotStrategy::Scripted(ScriptedPlan {
            pivots: vec![7],
            gammas: vec![],
        });
        assert!(matches!(
            run_tree(&c, &bad_pivot, budget),
            Err(DevoidError::InvalidPivot(_))
        ));

        let bad_gamma = PivotStrategy::Scripted(ScriptedPlan {
            pivots: vec![0],
            gammas: vec![f(&[2, 3])],
        });
        assert!(matches!(
            run_tree(&c, &bad_gamma, budget),
            Err(DevoidError::InvalidPivot(_))
        ));

        let tiny_budget = PivotStrategy::Greedy;
        assert!(matches!(
            run_tree(&c, &tiny_budget, 2),
            Err(DevoidError::BudgetExceeded(_))
        ));

        let void = ComplexRepr::from_min_nonfaces(3, [Face::EMPTY]).unwrap();
        assert!(matches!(
            run_tree(&void, &PivotStrategy::Greedy, budget),
            Err(DevoidError::InvalidParameter(_))
        ));

        let mismatched = PivotStrategy::SimplicialVertex(path(3).unwrap());
        assert!(matches!(
            run_tree(&c, &mismatched, budget),
            Err(DevoidError::InvalidParameter(_))
        ));
    }

    #[test]
    fn degenerate_complexes_run_clean() {
        // Full simplex: the first pivot pairs everything.
        let full = ComplexRepr::full_simplex(6).unwrap();
        let (tree, report) = run_tree(&full, &PivotStrategy::Greedy, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.critical, Vec::<Face>::new());
        assert_eq!(tree.nodes.len(), 1);
        assert_eq!(report.matched_pairs, 32);
        assert_eq!(
            interpret_critical_cells(&report.critical),
            HomotopyDescriptor::Contractible
        );

        // All vertices dead: only ∅ remains and it is critical.
        let empty = ComplexRepr::from_min_nonfaces(
            3,
            (0..3).map(Face::singleton).collect::<Vec<_>>(),
        )
        .unwrap();
        let (_, report) = run_tree(&empty, &PivotStrategy::Greedy, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.critical, vec![Face::EMPTY]);
        assert_eq!(
            interpret_critical_cells(&report.critical),
            HomotopyDescriptor::sphere(-1)
        );

        // Two isolated points: one critical vertex, a zero-sphere.
        let s0 = ComplexRepr::from_min_nonfaces(2, [f(&[0, 1])]).unwrap();
        let (_, report) = run_tree(&s0, &PivotStrategy::Greedy, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.critical.len(), 1);
        assert_eq!(report.critical[0].cardinality(), 1);
        assert_eq!(
            interpret_critical_cells(&report.critical),
            HomotopyDescriptor::wedge(vec![0])
        );
    }

    /// Every face of every node lands in exactly one place: matched up,
    /// matched down, or in a child — and sibling children partition their
    /// parent. This checks the node semantics the whole construction rests
    /// on, by explicit enumeration.
    #[test]
    fn tree_nodes_partition_their_faces() {
        for seed in 0..40 {
            let c = random_complex(8, 21_000 + seed);
            let faces = c.enumerate_faces(None).unwrap();
            let (tree, _) = run_tree(&c, &PivotStrategy::Greedy, DEFAULT_NODE_BUDGET).unwrap();
            for node in &tree.nodes {
                let members: Vec<Face> = faces
                    .iter()
                    .copied()
                    .filter(|&i| node.state.admits(&c, i))
                    .collect();
                match &node.site {
                    SiteKind::EmptyLeaf => {
                        assert!(members.is_empty(), "seed {seed}: empty leaf holds faces")
                    }
                    SiteKind::CriticalLeaf => {
                        assert_eq!(members, vec![node.state.a], "seed {seed}: critical leaf")
                    }
                    SiteKind::MatchingSite { pivot, gamma } => {
                        let child_members: HashSet<Face> = match gamma {
                            Some(_) => {
                                let child = &tree.nodes[node.children[0]];
                                members
                                    .iter()
                                    .copied()
                                    .filter(|&i| child.state.admits(&c, i))
                                    .collect()
                            }
                            None => HashSet::new(),
                        };
                        let mut matched = 0usize;
                        for &i in &members {
                            if child_members.contains(&i) {
                                assert!(
                                    !i.contains(*pivot),
                                    "seed {seed}: child member contains the pivot"
                                );
                                continue;
                            }
                            // Matched faces pair across the pivot inside the node.
                            let partner = if i.contains(*pivot) {
                                i.remove(*pivot)
                            } else {
                                i.insert(*pivot)
                            };
                            assert!(
                                node.state.admits(&c, partner) && !child_members.contains(&partner),
                                "seed {seed}: face {i} has no partner at its matching site"
                            );
                            matched += 1;
                        }
                        assert_eq!(matched % 2, 0, "seed {seed}");
                        assert_eq!(
                            matched + child_members.len(),
                            members.len(),
                            "seed {seed}: matching site does not partition"
                        );
                    }
                    SiteKind::SplittingSite { gamma, .. } => {
                        let left = &tree.nodes[node.children[0]];
                        let right = &tree.nodes[node.children[1]];
                        for &i in &members {
                            let in_left = left.state.admits(&c, i);
                            let in_right = right.state.admits(&c, i);
                            assert!(
                                in_left ^ in_right,
                                "seed {seed}: face {i} must land in exactly one side"
                            );
                            assert_eq!(
                                in_right,
                                gamma.is_subset_of(i),
                                "seed {seed}: the split set decides the side"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn greedy_runs_are_morse_and_match_homology() {
        for seed in 0..120 {
            let c = random_complex(9, 23_000 + seed);
            let faces = c.enumerate_faces(None).unwrap();
            let (tree, report) = run_tree(&c, &PivotStrategy::Greedy, DEFAULT_NODE_BUDGET)
                .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            let matching = assemble_matching(&c, &tree, DEFAULT_FACE_BUDGET).unwrap();
            assert!(
                verify_matching(&c, &matching, DEFAULT_FACE_BUDGET).unwrap(),
                "seed {seed}"
            );
            assert!(
                verify_acyclic(&c, &matching, DEFAULT_FACE_BUDGET).unwrap(),
                "seed {seed}"
            );
            assert_eq!(
                matching.len() * 2 + report.critical.len(),
                faces.len(),
                "seed {seed}: pairing must cover all non-critical faces"
            );
            assert_eq!(matching.len(), report.matched_pairs, "seed {seed}");

            // Critical alternating sum = reduced Euler characteristic.
            let alt: i64 = report
                .critical
                .iter()
                .map(|f| if f.dim() % 2 == 0 { 1 } else { -1 })
                .sum();
            let (_, chi) = c.euler_characteristic().unwrap();
            assert_eq!(alt, chi, "seed {seed}");

            // The descriptor may never contradict exact homology.
            let profile = betti(&c, 1 << 20).unwrap();
            let descriptor = report.interpret();
            assert_ne!(
                descriptor_match(&profile, &descriptor),
                DescriptorMatch::Inconsistent,
                "seed {seed}: descriptor {descriptor} vs profile {:?}",
                profile
            );
        }
    }

    #[test]
    fn theorem_order_strategies_reproduce_predicted_critical_cells() {
        // Blocks of length k+1 in an 8-path, pattern 3-path: one critical
        // cell of cardinality 4, a 3-sphere.
        let spec = DevoidSpec::new(
            path(8).unwrap(),
            vec![PatternGraph::from_name("p3").unwrap()],
        )
        .unwrap();
        let c = devoid_complex(&spec).unwrap();
        let (tree, report) =
            run_tree(&c, &PivotStrategy::PathLabeling(3), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.critical.len(), 1, "critical cells: {:?}", report.critical);
        assert_eq!(report.critical[0].cardinality(), 4);
        assert_eq!(
            interpret_critical_cells(&report.critical),
            HomotopyDescriptor::sphere(3)
        );
        let matching = assemble_matching(&c, &tree, DEFAULT_FACE_BUDGET).unwrap();
        assert!(verify_matching(&c, &matching, DEFAULT_FACE_BUDGET).unwrap());
        assert!(verify_acyclic(&c, &matching, DEFAULT_FACE_BUDGET).unwrap());
        let profile = betti(&c, 1 << 20).unwrap();
        assert_eq!(
            descriptor_match(&profile, &HomotopyDescriptor::sphere(3)),
            DescriptorMatch::Consistent
        );

        // The 8-cycle with the same pattern: three critical 3-cells.
        let spec = DevoidSpec::new(
            cycle(8).unwrap(),
            vec![PatternGraph::from_name("p3").unwrap()],
        )
        .unwrap();
        let c = devoid_complex(&spec).unwrap();
        let (_, report) =
            run_tree(&c, &PivotStrategy::CycleLabeling(3), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(
            report.critical.iter().map(|f| f.cardinality()).collect::<Vec<_>>(),
            vec![4, 4, 4],
            "critical cells: {:?}",
            report.critical
        );
        let profile = betti(&c, 1 << 20).unwrap();
        assert_eq!(
            descriptor_match(&profile, &HomotopyDescriptor::wedge(vec![3, 3, 3])),
            DescriptorMatch::Consistent
        );
    }

    #[test]
    fn dominance_strategies_find_single_critical_cells() {
        // Dominance complex of the 3-path via leaf pivots: a zero-sphere
        // with one critical vertex.
        let g = path(3).unwrap();
        let c = dominance_complex(&g).unwrap();
        let (_, report) =
            run_tree(&c, &PivotStrategy::LeafNeighbor(g), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.critical.len(), 1);
        assert_eq!(report.critical[0].cardinality(), 1);

        // Dominance complex of a 5-star: vertex cover number 1.
        let g = star(5).unwrap();
        let c = dominance_complex(&g).unwrap();
        let (_, report) =
            run_tree(&c, &PivotStrategy::LeafNeighbor(g), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.critical.len(), 1);
        assert_eq!(report.critical[0].cardinality(), 1);

        // Dominance complex of a triangle via simplicial pivots: vertex
        // cover number 2, a single critical cell of cardinality 2.
        let g = complete(3).unwrap();
        let c = dominance_complex(&g).unwrap();
        let (_, report) =
            run_tree(&c, &PivotStrategy::SimplicialVertex(g), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(report.critical.len(), 1);
        assert_eq!(report.critical[0].cardinality(), 2);
        let profile = betti(&c, 1 << 20).unwrap();
        assert_eq!(
            descriptor_match(&profile, &report.interpret()),
            DescriptorMatch::Consistent
        );
    }

    #[test]
    fn verify_acyclic_rejects_a_manufactured_cycle() {
        // Boundary of the triangle with a rotated "matching": each vertex
        // paired with the edge it does NOT precede, creating a directed
        // cycle in the modified Hasse diagram.
        let c = cx(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let bad: MorseMatching = vec![
            (f(&[0]), f(&[0, 1])),
            (f(&[1]), f(&[1, 2])),
            (f(&[2]), f(&[0, 2])),
        ];
        assert!(verify_matching(&c, &bad, DEFAULT_FACE_BUDGET).unwrap());
        assert!(!verify_acyclic(&c, &bad, DEFAULT_FACE_BUDGET).unwrap());

        // The empty matching is vacuously Morse.
        assert!(verify_matching(&c, &Vec::new(), DEFAULT_FACE_BUDGET).unwrap());
        assert!(verify_acyclic(&c, &Vec::new(), DEFAULT_FACE_BUDGET).unwrap());

        // Duplicated faces and non-cover pairs are rejected.
        let dup: MorseMatching = vec![(f(&[0]), f(&[0, 1])), (f(&[0]), f(&[0, 2]))];
        assert!(!verify_matching(&c, &dup, DEFAULT_FACE_BUDGET).unwrap());
        let skip: MorseMatching = vec![(Face::EMPTY, f(&[0, 1]))];
        assert!(!verify_matching(&c, &skip, DEFAULT_FACE_BUDGET).unwrap());
    }
}

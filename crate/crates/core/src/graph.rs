//! Multigraphs, standard families, deterministic random generators, pattern
//! containment, and exact graph invariants (matching number, vertex cover
//! number, induced-pattern matching number).
//!
//! Vertices are dense ids `0..n`. Edges are unordered pairs with a positive
//! multiplicity; a pair of multiplicity 2 plays the role of a 2-cycle when it
//! appears in a forbidden pattern.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::DevoidError;
use crate::face::{Face, MAX_VERTICES};
use crate::Result;

/// Largest pattern searched for by the containment routines.
pub const MAX_PATTERN_VERTICES: usize = 8;
/// Largest instance accepted by the exponential exact invariants.
pub const MAX_EXACT_VERTICES: usize = 24;

#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    /// Keys are pairs (u, v) with u < v; values are multiplicities ≥ 1.
    edges: BTreeMap<(usize, usize), u32>,
}

impl Multigraph {
    pub fn new(n: usize) -> Result<Multigraph> {
        if n > MAX_VERTICES {
            return Err(DevoidError::TooLarge(format!(
                "graphs support at most {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Multigraph {
            n,
            edges: BTreeMap::new(),
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        if u < v {
            (u, v)
        } else {
            (v, u)
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(DevoidError::InvalidParameter(format!(
                "vertex pair ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(DevoidError::InvalidParameter(format!(
                "self-loop at vertex {u} not supported"
            )));
        }
        Ok(())
    }

    /// Increase the multiplicity of (u, v) by one.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        *self.edges.entry(Self::key(u, v)).or_insert(0) += 1;
        Ok(())
    }

    /// Set the multiplicity of (u, v); 0 removes the pair.
    pub fn set_multiplicity(&mut self, u: usize, v: usize, m: u32) -> Result<()> {
        self.check_pair(u, v)?;
        if m == 0 {
            self.edges.remove(&Self::key(u, v));
        } else {
            self.edges.insert(Self::key(u, v), m);
        }
        Ok(())
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if u == v || u >= self.n || v >= self.n {
            return 0;
        }
        *self.edges.get(&Self::key(u, v)).unwrap_or(&0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Distinct unordered adjacent pairs, each with its multiplicity.
    pub fn edge_list(&self) -> Vec<(usize, usize, u32)> {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m)).collect()
    }

    /// Number of distinct adjacent pairs.
    pub fn edge_pair_count(&self) -> usize {
        self.edges.len()
    }

    /// Sum of multiplicities.
    pub fn total_edge_count(&self) -> usize {
        self.edges.values().map(|&m| m as usize).sum()
    }

    /// Distinct neighbors of v as a vertex set.
    pub fn neighbors(&self, v: usize) -> Face {
        let mut out = Face::EMPTY;
        for u in 0..self.n {
            if self.adjacent(u, v) {
                out = out.insert(u);
            }
        }
        out
    }

    pub fn closed_neighborhood(&self, v: usize) -> Face {
        self.neighbors(v).insert(v)
    }

    /// Number of distinct neighbors.
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).cardinality()
    }

    /// Distinct neighbors of v inside `mask`.
    pub fn neighbors_in(&self, v: usize, mask: Face) -> Face {
        self.neighbors(v).intersection(mask)
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n)
    }

    /// Connected components of the subgraph induced on `mask`.
    pub fn components_within(&self, mask: Face) -> Vec<Face> {
        let mut seen = Face::EMPTY;
        let mut out = Vec::new();
        for start in mask.vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = Face::singleton(start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for u in self.neighbors_in(v, mask).vertices() {
                    if !comp.contains(u) {
                        comp = comp.insert(u);
                        frontier.push(u);
                    }
                }
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_within(self.vertex_set()).len() == 1
    }

    /// True when the graph has no cycle; a double edge counts as a cycle.
    pub fn is_forest(&self) -> bool {
        if self.edges.values().any(|&m| m >= 2) {
            return false;
        }
        self.components_within(self.vertex_set())
            .iter()
            .all(|comp| {
                let edges_inside = self
                    .edges
                    .keys()
                    .filter(|&&(u, v)| comp.contains(u) && comp.contains(v))
                    .count();
                edges_inside + 1 == comp.cardinality()
            })
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.is_connected()
    }

    /// Copy of the graph with the vertices in `del` removed; survivors are
    /// relabeled to stay dense, preserving relative order.
    pub fn delete_vertices(&self, del: Face) -> Multigraph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !del.contains(v)).collect();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old] = new;
        }
        let mut g = Multigraph::new(keep.len()).expect("shrinking keeps the size valid");
        for (&(u, v), &m) in &self.edges {
            if !del.contains(u) && !del.contains(v) {
                g.edges.insert(Self::key(relabel[u], relabel[v]), m);
            }
        }
        g
    }

    // ----- text format -----------------------------------------------------

    /// Parse the text format: first line `n <count>`, then `u v m` per edge.
    pub fn from_text(text: &str) -> Result<Multigraph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| DevoidError::Parse("empty graph file".into()))?;
        let mut toks = header.split_whitespace();
        let first = toks
            .next()
            .ok_or_else(|| DevoidError::Parse("empty header line".into()))?;
        let count_tok = if first == "n" {
            toks.next()
                .ok_or_else(|| DevoidError::Parse("header `n` missing a count".into()))?
        } else {
            first
        };
        let n: usize = count_tok
            .parse()
            .map_err(|_| DevoidError::Parse(format!("bad vertex count {count_tok:?}")))?;
        let mut g = Multigraph::new(n)?;
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(DevoidError::Parse(format!(
                    "edge line {line:?} must be `u v m`"
                )));
            }
            let u: usize = parts[0]
                .parse()
                .map_err(|_| DevoidError::Parse(format!("bad vertex {:?}", parts[0])))?;
            let v: usize = parts[1]
                .parse()
                .map_err(|_| DevoidError::Parse(format!("bad vertex {:?}", parts[1])))?;
            let m: u32 = parts[2]
                .parse()
                .map_err(|_| DevoidError::Parse(format!("bad multiplicity {:?}", parts[2])))?;
            if m == 0 {
                return Err(DevoidError::Parse(format!(
                    "multiplicity must be positive on line {line:?}"
                )));
            }
            g.check_pair(u, v).map_err(|e| DevoidError::Parse(e.to_string()))?;
            g.set_multiplicity(u, v, m)?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (&(u, v), &m) in &self.edges {
            out.push_str(&format!("{u} {v} {m}\n"));
        }
        out
    }

    fn adjacency_masks(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.neighbors(v).bits()).collect()
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.edges)
    }
}

// ----- standard families ----------------------------------------------------

pub fn path(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(DevoidError::InvalidParameter(
            "a path needs at least one vertex".into(),
        ));
    }
    let mut g = Multigraph::new(n)?;
    for i in 0..n.saturating_sub(1) {
        g.add_edge(i, i + 1)?;
    }
    Ok(g)
}

/// Cycle graph; `cycle(2)` is the double edge.
pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 2 {
        return Err(DevoidError::InvalidParameter(
            "a cycle needs at least two vertices".into(),
        ));
    }
    let mut g = Multigraph::new(n)?;
    if n == 2 {
        g.set_multiplicity(0, 1, 2)?;
        return Ok(g);
    }
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
    }
    Ok(g)
}

pub fn complete(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(DevoidError::InvalidParameter(
            "a complete graph needs at least one vertex".into(),
        ));
    }
    let mut g = Multigraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Multigraph> {
    if m == 0 || n == 0 {
        return Err(DevoidError::InvalidParameter(
            "complete bipartite graphs need nonempty parts".into(),
        ));
    }
    let mut g = Multigraph::new(m + n)?;
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Star with `n` leaves: vertex 0 is the center.
pub fn star(n: usize) -> Result<Multigraph> {
    complete_bipartite(1, n)
}

/// Uniform random labeled tree decoded from a random Prüfer sequence;
/// deterministic for a fixed seed.
pub fn random_tree(n: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 {
        return Err(DevoidError::InvalidParameter(
            "a tree needs at least one vertex".into(),
        ));
    }
    let mut g = Multigraph::new(n)?;
    if n == 1 {
        return Ok(g);
    }
    if n == 2 {
        g.add_edge(0, 1)?;
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &a in &prufer {
        degree[a] += 1;
    }
    for &a in &prufer {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        g.add_edge(leaf, a)?;
        degree[leaf] -= 1;
        degree[a] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let u = last.next().expect("two leaves remain");
    let v = last.next().expect("two leaves remain");
    g.add_edge(u, v)?;
    Ok(g)
}

/// Random forest: a random tree with each edge independently kept with
/// probability 3/4. Deterministic for a fixed seed.
pub fn random_forest(n: usize, seed: u64) -> Result<Multigraph> {
    let tree = random_tree(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e3779b97f4a7c15));
    let mut g = Multigraph::new(n)?;
    for (u, v, m) in tree.edge_list() {
        if rng.gen_range(0..4) < 3 {
            g.set_multiplicity(u, v, m)?;
        }
    }
    Ok(g)
}

/// Random chordal graph: each new vertex is attached to a clique of the
/// existing graph, grown greedily inside a random vertex's neighborhood;
/// `density` scales the target clique size (1.0 reproduces the complete
/// graph, 0.0 a random tree). Deterministic for a fixed seed.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Result<Multigraph> {
    if n == 0 {
        return Err(DevoidError::InvalidParameter(
            "a chordal graph needs at least one vertex".into(),
        ));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(DevoidError::InvalidParameter(format!(
            "density must lie in [0,1], got {density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::new(n)?;
    for i in 1..n {
        let anchor = rng.gen_range(0..i);
        // Grow a clique through `anchor` among the earlier vertices.
        let mut clique = vec![anchor];
        let mut candidates: Vec<usize> = (0..i).filter(|&u| g.adjacent(u, anchor)).collect();
        // Shuffle candidates deterministically.
        for j in (1..candidates.len()).rev() {
            let k = rng.gen_range(0..=j);
            candidates.swap(j, k);
        }
        let target = 1 + (density * candidates.len() as f64).round() as usize;
        for u in candidates {
            if clique.len() >= target {
                break;
            }
            if clique.iter().all(|&w| g.adjacent(u, w)) {
                clique.push(u);
            }
        }
        for &u in &clique {
            g.add_edge(u, i)?;
        }
    }
    Ok(g)
}

// ----- pattern containment ----------------------------------------------------

/// A small graph used as a forbidden pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatternGraph {
    graph: Multigraph,
}

impl PatternGraph {
    pub fn new(graph: Multigraph) -> Result<PatternGraph> {
        if graph.n_vertices() > MAX_PATTERN_VERTICES {
            return Err(DevoidError::UnsupportedPattern(format!(
                "patterns support at most {MAX_PATTERN_VERTICES} vertices, got {}",
                graph.n_vertices()
            )));
        }
        Ok(PatternGraph { graph })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.graph.n_vertices()).any(|v| self.graph.degree(v) == 0)
    }

    /// Parse a family name: `p2`, `p3`, ... (paths), `c2`, `c3`, ... (cycles),
    /// `k2` (single edge).
    pub fn from_name(name: &str) -> Result<PatternGraph> {
        let lower = name.to_ascii_lowercase();
        let (kind, num) = lower.split_at(1);
        let k: usize = num.parse().map_err(|_| {
            DevoidError::InvalidParameter(format!("unrecognized pattern name {name:?}"))
        })?;
        let graph = match kind {
            "p" => path(k)?,
            "c" => cycle(k)?,
            "k" if k == 2 => path(2)?,
            _ => {
                return Err(DevoidError::InvalidParameter(format!(
                    "unrecognized pattern name {name:?}"
                )))
            }
        };
        PatternGraph::new(graph)
    }
}

/// Does G contain a subgraph isomorphic to F? An F-edge of multiplicity m
/// needs a G-pair of multiplicity ≥ m (so a double-edge pattern is only found
/// on double edges). Containment is subgraph containment, not induced.
pub fn contains_pattern(g: &Multigraph, f: &PatternGraph) -> bool {
    let fg = f.graph();
    let fn_ = fg.n_vertices();
    if fn_ > g.n_vertices() {
        return false;
    }
    let f_edges = fg.edge_list();
    let mut assignment = vec![usize::MAX; fn_];
    let mut used = Face::EMPTY;
    embed(g, fn_, &f_edges, &mut assignment, &mut used, 0)
}

fn embed(
    g: &Multigraph,
    fn_: usize,
    f_edges: &[(usize, usize, u32)],
    assignment: &mut Vec<usize>,
    used: &mut Face,
    next: usize,
) -> bool {
    if next == fn_ {
        return true;
    }
    for cand in 0..g.n_vertices() {
        if used.contains(cand) {
            continue;
        }
        let ok = f_edges.iter().all(|&(a, b, m)| {
            let (x, y) = (assignment[a], assignment[b]);
            let (x, y) = if a == next {
                (cand, y)
            } else if b == next {
                (x, cand)
            } else {
                (x, y)
            };
            if x == usize::MAX || y == usize::MAX {
                true
            } else {
                g.multiplicity(x, y) >= m
            }
        });
        if ok {
            assignment[next] = cand;
            *used = used.insert(cand);
            if embed(g, fn_, f_edges, assignment, used, next + 1) {
                return true;
            }
            assignment[next] = usize::MAX;
            *used = used.remove(cand);
        }
    }
    false
}

/// True when G contains no copy of any pattern in the family.
pub fn is_family_free(g: &Multigraph, family: &[PatternGraph]) -> bool {
    family.iter().all(|f| !contains_pattern(g, f))
}

// ----- exact invariants ----------------------------------------------------

fn check_exact_size(g: &Multigraph, what: &str) -> Result<()> {
    if g.n_vertices() > MAX_EXACT_VERTICES {
        return Err(DevoidError::TooLarge(format!(
            "{what} is exact-only and capped at {MAX_EXACT_VERTICES} vertices, got {}",
            g.n_vertices()
        )));
    }
    Ok(())
}

/// Maximum matching size (multiplicities ignored; exact, memoized branching).
pub fn matching_number(g: &Multigraph) -> Result<usize> {
    check_exact_size(g, "matching_number")?;
    let adj = g.adjacency_masks();
    let mut memo: HashMap<u64, usize> = HashMap::new();
    fn rec(adj: &[u64], mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
        let v = match (0..adj.len()).find(|&v| mask & (1 << v) != 0 && adj[v] & mask != 0) {
            Some(v) => v,
            None => return 0,
        };
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let without_v = mask & !(1u64 << v);
        let mut best = rec(adj, without_v, memo);
        let mut nbrs = adj[v] & mask;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + rec(adj, without_v & !(1u64 << u), memo));
        }
        memo.insert(mask, best);
        best
    }
    Ok(rec(&adj, g.vertex_set().bits(), &mut memo))
}

/// Minimum vertex cover size (multiplicities ignored; exact, memoized
/// branching on an uncovered edge).
pub fn vertex_cover_number(g: &Multigraph) -> Result<usize> {
    check_exact_size(g, "vertex_cover_number")?;
    let adj = g.adjacency_masks();
    let mut memo: HashMap<u64, usize> = HashMap::new();
    fn rec(adj: &[u64], mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
        let v = match (0..adj.len()).find(|&v| mask & (1 << v) != 0 && adj[v] & mask != 0) {
            Some(v) => v,
            None => return 0,
        };
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let u = (adj[v] & mask).trailing_zeros() as usize;
        let best = (1 + rec(adj, mask & !(1u64 << v), memo))
            .min(1 + rec(adj, mask & !(1u64 << u), memo));
        memo.insert(mask, best);
        best
    }
    Ok(rec(&adj, g.vertex_set().bits(), &mut memo))
}

/// One subgraph copy of a pattern: its vertex set together with the embedded
/// edge multiset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct PatternCopy {
    verts: Face,
    edges: BTreeMap<(usize, usize), u32>,
}

const MAX_PATTERN_COPIES: usize = 10_000;

fn enumerate_copies(g: &Multigraph, f: &PatternGraph) -> Result<Vec<PatternCopy>> {
    let fg = f.graph();
    let fn_ = fg.n_vertices();
    let f_edges = fg.edge_list();
    let mut found: BTreeSet<PatternCopy> = BTreeSet::new();
    let mut assignment = vec![usize::MAX; fn_];
    let mut used = Face::EMPTY;

    fn rec(
        g: &Multigraph,
        fn_: usize,
        f_edges: &[(usize, usize, u32)],
        assignment: &mut Vec<usize>,
        used: &mut Face,
        next: usize,
        found: &mut BTreeSet<PatternCopy>,
    ) -> Result<()> {
        if next == fn_ {
            let mut edges = BTreeMap::new();
            for &(a, b, m) in f_edges {
                let key = Multigraph::key(assignment[a], assignment[b]);
                let slot = edges.entry(key).or_insert(0);
                *slot = m.max(*slot);
            }
            found.insert(PatternCopy {
                verts: *used,
                edges,
            });
            if found.len() > MAX_PATTERN_COPIES {
                return Err(DevoidError::TooLarge(format!(
                    "more than {MAX_PATTERN_COPIES} pattern copies"
                )));
            }
            return Ok(());
        }
        for cand in 0..g.n_vertices() {
            if used.contains(cand) {
                continue;
            }
            let ok = f_edges.iter().all(|&(a, b, m)| {
                let (x, y) = (assignment[a], assignment[b]);
                let (x, y) = if a == next {
                    (cand, y)
                } else if b == next {
                    (x, cand)
                } else {
                    (x, y)
                };
                if x == usize::MAX || y == usize::MAX {
                    true
                } else {
                    g.multiplicity(x, y) >= m
                }
            });
            if ok {
                assignment[next] = cand;
                *used = used.insert(cand);
                rec(g, fn_, f_edges, assignment, used, next + 1, found)?;
                assignment[next] = usize::MAX;
                *used = used.remove(cand);
            }
        }
        Ok(())
    }

    rec(g, fn_, &f_edges, &mut assignment, &mut used, 0, &mut found)?;
    Ok(found.into_iter().collect())
}

/// Maximum number of pairwise vertex-disjoint copies of the pattern whose
/// covered vertex set induces exactly the union of the copies (no extra edge,
/// no extra multiplicity).
pub fn induced_f_matching_number(g: &Multigraph, f: &PatternGraph) -> Result<usize> {
    let copies = enumerate_copies(g, f)?;
    // A copy can participate only if it is itself induced (multiplicities
    // included): otherwise its own vertex set already spans an extra edge.
    let induced: Vec<&PatternCopy> = copies
        .iter()
        .filter(|c| {
            let vs: Vec<usize> = c.verts.to_vec();
            vs.iter().enumerate().all(|(i, &a)| {
                vs[i + 1..].iter().all(|&b| {
                    g.multiplicity(a, b) == *c.edges.get(&Multigraph::key(a, b)).unwrap_or(&0)
                })
            })
        })
        .collect();

    fn rec(
        g: &Multigraph,
        copies: &[&PatternCopy],
        idx: usize,
        covered: Face,
        chosen: usize,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen);
        if idx == copies.len() || chosen + (copies.len() - idx) <= *best {
            return;
        }
        // Option 1: take copies[idx] when compatible.
        let c = copies[idx];
        if c.verts.intersection(covered).is_empty() {
            let cross_free = c.verts.vertices().all(|a| {
                covered
                    .vertices()
                    .all(|b| g.multiplicity(a, b) == 0)
            });
            if cross_free {
                rec(g, copies, idx + 1, covered.union(c.verts), chosen + 1, best);
            }
        }
        // Option 2: skip it.
        rec(g, copies, idx + 1, covered, chosen, best);
    }

    let mut best = 0;
    rec(g, &induced, 0, Face::EMPTY, 0, &mut best);
    Ok(best)
}

// ----- forest structure ------------------------------------------------------

/// Vertices of degree ≤ 1 after all leaves of the forest are removed
/// (vertices removed in the stripping do not qualify).
pub fn saddle_vertices(f: &Multigraph) -> Result<Vec<usize>> {
    if !f.is_forest() {
        return Err(DevoidError::NotAForest(
            "saddle vertices are defined for forests only".into(),
        ));
    }
    let leaves: Vec<usize> = (0..f.n_vertices()).filter(|&v| f.degree(v) == 1).collect();
    let mut stripped = f.vertex_set();
    for &l in &leaves {
        stripped = stripped.remove(l);
    }
    Ok(stripped
        .vertices()
        .filter(|&v| f.neighbors_in(v, stripped).cardinality() <= 1)
        .collect())
}

/// Vertices whose closed neighborhood is a clique.
pub fn simplicial_vertices(g: &Multigraph) -> Vec<usize> {
    (0..g.n_vertices())
        .filter(|&v| {
            let nbrs: Vec<usize> = g.neighbors(v).to_vec();
            nbrs.iter()
                .enumerate()
                .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.adjacent(a, b)))
        })
        .collect()
}

/// Chordality via repeated simplicial-vertex elimination.
pub fn is_chordal(g: &Multigraph) -> bool {
    let mut mask = g.vertex_set();
    while !mask.is_empty() {
        let simplicial = mask.vertices().find(|&v| {
            let nbrs: Vec<usize> = g.neighbors_in(v, mask).to_vec();
            nbrs.iter()
                .enumerate()
                .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.adjacent(a, b)))
        });
        match simplicial {
            Some(v) => mask = mask.remove(v),
            None => return false,
        }
    }
    true
}

/// The single neighbor of x that is not a leaf, when exactly one exists.
pub fn unique_nonleaf_neighbor(t: &Multigraph, x: usize) -> Option<usize> {
    let mut nonleaf = t
        .neighbors(x)
        .vertices()
        .filter(|&u| t.degree(u) >= 2);
    match (nonleaf.next(), nonleaf.next()) {
        (Some(w), None) => Some(w),
        _ => None,
    }
}

/// The residual graph used by the forest analysis: every pair {a,b} such
/// that {a,b,x} induces a 3-path in T becomes a double edge (an extra
/// parallel edge when {a,b} was already an edge, a fresh double edge when it
/// was not); afterwards x is deleted and later vertices shift down by one.
pub fn build_gx(t: &Multigraph, x: usize) -> Result<Multigraph> {
    if x >= t.n_vertices() {
        return Err(DevoidError::InvalidParameter(format!(
            "vertex {x} out of range for {} vertices",
            t.n_vertices()
        )));
    }
    let mut g = t.clone();
    for a in 0..t.n_vertices() {
        for b in a + 1..t.n_vertices() {
            if a == x || b == x {
                continue;
            }
            let present = [t.adjacent(a, b), t.adjacent(a, x), t.adjacent(b, x)];
            let count = present.iter().filter(|&&p| p).count();
            if count == 2 {
                g.set_multiplicity(a, b, 2)?;
            }
        }
    }
    Ok(g.delete_vertices(Face::singleton(x)))
}

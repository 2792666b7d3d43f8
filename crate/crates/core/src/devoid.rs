//! Builders mapping graphs to complexes: pattern-avoidance complexes (faces
//! are vertex sets whose induced subgraph contains no copy of a forbidden
//! pattern), independence complexes, and dominance complexes.

use crate::complex::ComplexRepr;
use crate::error::DevoidError;
use crate::face::Face;
use crate::graph::{Multigraph, PatternGraph};
use crate::Result;

/// A graph together with the family of forbidden patterns.
#[derive(Clone, Debug)]
pub struct DevoidSpec {
    pub graph: Multigraph,
    pub family: Vec<PatternGraph>,
}

impl DevoidSpec {
    pub fn new(graph: Multigraph, family: Vec<PatternGraph>) -> Result<DevoidSpec> {
        for f in &family {
            if f.graph().n_vertices() == 0 || f.has_isolated_vertex() {
                return Err(DevoidError::UnsupportedPattern(
                    "patterns with isolated vertices are not supported: copy vertex sets \
                     would no longer be the minimal non-faces"
                        .into(),
                ));
            }
        }
        Ok(DevoidSpec { graph, family })
    }
}

/// The complex whose faces are the vertex sets S with G[S] containing no
/// copy of any pattern in the family. Its minimal non-faces are exactly the
/// vertex sets of pattern copies in G (patterns have no isolated vertices,
/// so a copy's vertex set is the minimal witness).
pub fn devoid_complex(spec: &DevoidSpec) -> Result<ComplexRepr> {
    let g = &spec.graph;
    let mut witnesses: Vec<Face> = Vec::new();
    for f in &spec.family {
        witnesses.extend(copy_vertex_sets(g, f));
    }
    ComplexRepr::from_min_nonfaces(g.n_vertices(), witnesses)
}

/// Vertex sets of all subgraph copies of the pattern in G.
fn copy_vertex_sets(g: &Multigraph, f: &PatternGraph) -> Vec<Face> {
    let fg = f.graph();
    let fn_ = fg.n_vertices();
    let f_edges = fg.edge_list();
    let mut out: Vec<Face> = Vec::new();
    let mut assignment = vec![usize::MAX; fn_];

    fn rec(
        g: &Multigraph,
        fn_: usize,
        f_edges: &[(usize, usize, u32)],
        assignment: &mut Vec<usize>,
        used: Face,
        next: usize,
        out: &mut Vec<Face>,
    ) {
        if next == fn_ {
            out.push(used);
            return;
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
                rec(g, fn_, f_edges, assignment, used.insert(cand), next + 1, out);
                assignment[next] = usize::MAX;
            }
        }
    }

    rec(g, fn_, &f_edges, &mut assignment, Face::EMPTY, 0, &mut out);
    out
}

/// Faces are the independent sets of G (a pair is excluded by any positive
/// multiplicity).
pub fn independence_complex(g: &Multigraph) -> Result<ComplexRepr> {
    let pairs: Vec<Face> = g
        .edge_list()
        .into_iter()
        .map(|(u, v, _)| Face::from_vertices([u, v]))
        .collect();
    ComplexRepr::from_min_nonfaces(g.n_vertices(), pairs)
}

/// Faces are the complements of dominating sets; the minimal non-faces are
/// the minimal closed neighborhoods.
pub fn dominance_complex(g: &Multigraph) -> Result<ComplexRepr> {
    let neighborhoods: Vec<Face> =
        (0..g.n_vertices()).map(|v| g.closed_neighborhood(v)).collect();
    ComplexRepr::from_min_nonfaces(g.n_vertices(), neighborhoods)
}

/// True when every pair inside N[u] carries a double edge.
pub fn is_double_complete_closed_neighborhood(g: &Multigraph, u: usize) -> bool {
    let closed: Vec<usize> = g.closed_neighborhood(u).to_vec();
    closed
        .iter()
        .enumerate()
        .all(|(i, &a)| closed[i + 1..].iter().all(|&b| g.multiplicity(a, b) >= 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied())
    }

    fn p3() -> PatternGraph {
        PatternGraph::from_name("p3").unwrap()
    }

    #[test]
    fn pattern_avoidance_on_paths_and_cycles() {
        let spec = DevoidSpec::new(graph::path(4).unwrap(), vec![p3()]).unwrap();
        let c = devoid_complex(&spec).unwrap();
        assert_eq!(c.min_nonfaces().members(), &[f(&[0, 1, 2]), f(&[1, 2, 3])]);

        let spec = DevoidSpec::new(graph::cycle(4).unwrap(), vec![p3()]).unwrap();
        let c = devoid_complex(&spec).unwrap();
        assert_eq!(c.min_nonfaces().len(), 4);
        // All pairs remain faces: the complete 1-skeleton on 4 vertices.
        for a in 0..4 {
            for b in a + 1..4 {
                assert!(c.is_face(f(&[a, b])));
            }
        }
    }

    #[test]
    fn isolated_vertex_patterns_are_rejected() {
        let lonely = Multigraph::new(2).unwrap();
        let pat = PatternGraph::new(lonely).unwrap();
        assert!(DevoidSpec::new(graph::path(3).unwrap(), vec![pat]).is_err());
    }

    #[test]
    fn independence_examples() {
        let c = independence_complex(&graph::path(3).unwrap()).unwrap();
        assert_eq!(c.min_nonfaces().members(), &[f(&[0, 1]), f(&[1, 2])]);

        let c = independence_complex(&graph::complete(3).unwrap()).unwrap();
        assert_eq!(c.f_vector().unwrap(), vec![1, 3]);
    }

    #[test]
    fn single_edge_family_reproduces_independence() {
        let k2 = PatternGraph::from_name("k2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..=7);
            let mut g = Multigraph::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_range(0..3) == 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let spec = DevoidSpec::new(g.clone(), vec![k2.clone()]).unwrap();
            assert_eq!(
                devoid_complex(&spec).unwrap(),
                independence_complex(&g).unwrap()
            );
        }
    }

    #[test]
    fn pattern_avoidance_matches_brute_force() {
        let families: Vec<Vec<PatternGraph>> = vec![
            vec![PatternGraph::from_name("p3").unwrap()],
            vec![PatternGraph::from_name("p4").unwrap()],
            vec![PatternGraph::from_name("k2").unwrap()],
            vec![
                PatternGraph::from_name("p3").unwrap(),
                PatternGraph::from_name("c2").unwrap(),
            ],
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for round in 0..40 {
            let n = rng.gen_range(1..=7);
            let mut g = Multigraph::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    let m = [0, 0, 1, 1, 2][rng.gen_range(0..5)];
                    if m > 0 {
                        g.set_multiplicity(u, v, m).unwrap();
                    }
                }
            }
            for family in &families {
                let spec = DevoidSpec::new(g.clone(), family.clone()).unwrap();
                let c = devoid_complex(&spec).unwrap();
                for bits in 0..(1u64 << n) {
                    let s = Face::from_bits(bits);
                    let induced = g.delete_vertices(Face::full(n).minus(s));
                    assert_eq!(
                        c.is_face(s),
                        graph::is_family_free(&induced, family),
                        "round {round}, S={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let c = dominance_complex(&graph::path(2).unwrap()).unwrap();
        assert_eq!(c.min_nonfaces().members(), &[f(&[0, 1])]);

        let c = dominance_complex(&graph::path(3).unwrap()).unwrap();
        assert_eq!(c.min_nonfaces().members(), &[f(&[0, 1]), f(&[1, 2])]);

        let c = dominance_complex(&graph::complete(4).unwrap()).unwrap();
        assert_eq!(c.min_nonfaces().members(), &[f(&[0, 1, 2, 3])]);

        // Isolated vertices become ghosts.
        let g = Multigraph::new(3).unwrap();
        let c = dominance_complex(&g).unwrap();
        assert_eq!(c.ghost_vertices(), f(&[0, 1, 2]));
    }

    #[test]
    fn double_complete_neighborhood_detection() {
        let gx = graph::build_gx(&graph::star(3).unwrap(), 0).unwrap();
        for u in 0..3 {
            assert!(is_double_complete_closed_neighborhood(&gx, u));
        }
        assert!(!is_double_complete_closed_neighborhood(
            &graph::path(3).unwrap(),
            1
        ));
        assert!(is_double_complete_closed_neighborhood(
            &graph::cycle(2).unwrap(),
            0
        ));
    }

    #[test]
    fn link_of_saddle_vertex_matches_residual_graph_complex() {
        let p3_pat = p3();
        let family = vec![
            PatternGraph::from_name("p3").unwrap(),
            PatternGraph::from_name("c2").unwrap(),
        ];
        let mut checked = 0;
        for seed in 0..80 {
            if checked >= 40 {
                break;
            }
            let n = 4 + (seed as usize % 6);
            let t = graph::random_tree(n, seed).unwrap();
            let saddles = graph::saddle_vertices(&t).unwrap();
            let Some(&x) = saddles.first() else { continue };

            let spec = DevoidSpec::new(t.clone(), vec![p3_pat.clone()]).unwrap();
            let full = devoid_complex(&spec).unwrap();
            let link = full.link(Face::singleton(x)).unwrap();

            let gx = graph::build_gx(&t, x).unwrap();
            let gx_spec = DevoidSpec::new(gx, family.clone()).unwrap();
            let gx_complex = devoid_complex(&gx_spec).unwrap();

            // The link keeps the original ids (x as a ghost); the residual
            // complex lives on ids with everything above x shifted down.
            let link_members: Vec<Face> = link
                .min_nonfaces()
                .iter()
                .filter(|m| **m != Face::singleton(x))
                .map(|m| {
                    Face::from_vertices(m.vertices().map(|v| if v > x { v - 1 } else { v }))
                })
                .collect();
            let relabeled = ComplexRepr::from_min_nonfaces(n - 1, link_members).unwrap();
            assert_eq!(relabeled, gx_complex, "seed {seed}, saddle {x}");
            checked += 1;
        }
        assert!(checked >= 40);
    }
}

//! Homotopy-preserving reductions driven by obstruction-set comparisons:
//! folding away dominated vertices, splitting off suspensions, the
//! complementation wedge for sparse vertex sets, and non-face removal with
//! explicit contractibility certificates.

use std::collections::BTreeSet;

use crate::complex::ComplexRepr;
use crate::error::DevoidError;
use crate::face::Face;
use crate::Result;

/// Fold the complex to a fixpoint: whenever some vertex `u` obstructs at
/// least as much as `v` does (every obstruction of `u` swallows one of `v`),
/// the complex deformation-retracts onto the deletion of `v`. The scan is
/// deterministic — smallest deletable `v` first, then its smallest witness
/// `u` — and the trace records each (witness, deleted) pair in order.
pub fn fold_reduce(c: &ComplexRepr) -> Result<(ComplexRepr, Vec<(usize, usize)>)> {
    let mut current = c.clone();
    let mut trace: Vec<(usize, usize)> = Vec::new();
    'outer: loop {
        let live = current.live_vertices();
        for v in live.vertices() {
            for u in live.vertices() {
                if u != v && current.d_subset(u, v) {
                    current = current.deletion(Face::singleton(v))?;
                    trace.push((u, v));
                    continue 'outer;
                }
            }
        }
        return Ok((current, trace));
    }
}

/// Split off a suspension: when the closed obstruction set of `u` is
/// contained in that of `v`, the complex is the wedge of the deletion of
/// `v` with the suspension of the link of `v`. Returns (deletion, link);
/// the caller suspends the link once when combining descriptors.
pub fn split_reduce(c: &ComplexRepr, u: usize, v: usize) -> Result<(ComplexRepr, ComplexRepr)> {
    if u == v {
        return Err(DevoidError::InvalidParameter(
            "splitting requires two distinct vertices".into(),
        ));
    }
    if !c.is_face(Face::singleton(v)) {
        return Err(DevoidError::HypothesisNotMet(format!(
            "vertex {v} is not a vertex of the complex"
        )));
    }
    if !c.d_closed_subset(u, v) {
        return Err(DevoidError::HypothesisNotMet(format!(
            "closed obstruction set of {u} is not contained in that of {v}"
        )));
    }
    let deletion = c.deletion(Face::singleton(v))?;
    let link = c.link(Face::singleton(v))?;
    Ok((deletion, link))
}

/// The complementation wedge: when no two vertices of `a` span a face and
/// the complex induced on the remaining vertices is a cone (our
/// contractibility certificate), the complex is the wedge over `a` of the
/// suspended links. Returns the links in ascending vertex order; each is to
/// be suspended once.
pub fn complementation(c: &ComplexRepr, a: Face) -> Result<Vec<ComplexRepr>> {
    if a.is_empty() {
        return Err(DevoidError::HypothesisNotMet(
            "complementation needs a nonempty vertex set".into(),
        ));
    }
    for x in a.vertices() {
        if !c.is_face(Face::singleton(x)) {
            return Err(DevoidError::HypothesisNotMet(format!(
                "vertex {x} is not a vertex of the complex"
            )));
        }
    }
    let verts: Vec<usize> = a.vertices().collect();
    for (i, &x) in verts.iter().enumerate() {
        for &y in &verts[i + 1..] {
            if c.is_face(Face::from_vertices([x, y])) {
                return Err(DevoidError::HypothesisNotMet(format!(
                    "vertices {x} and {y} span a face, so the induced complex is not 0-dimensional"
                )));
            }
        }
    }
    let complement = c.induced(Face::full(c.n_vertices()).minus(a))?;
    if complement.is_cone().is_none() {
        return Err(DevoidError::CertificateUnavailable(
            "the complex induced on the complementary vertices is not a cone".into(),
        ));
    }
    verts
        .into_iter()
        .map(|x| c.link(Face::singleton(x)))
        .collect()
}

/// Why the attached piece of a non-face split is contractible inside the
/// base complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractibilityCertificate {
    /// A vertex whose star contains the whole piece: joining it to every
    /// facet of the piece stays inside the base complex.
    ConeApex(usize),
    /// The piece itself collapses to a point through these elementary
    /// collapses (free face, unique coface), in order.
    CollapseSequence(Vec<(Face, Face)>),
}

/// The certified outcome of removing the minimal non-face `K` (and its
/// admissible cofaces) from a complex: the enlarged complex is homotopy
/// equivalent to base ∨ Σ(S^sphere_dim * link).
#[derive(Clone, Debug)]
pub struct NonfaceSplit {
    /// |K| − 2: the boundary of the removed non-face is a sphere of this
    /// dimension.
    pub sphere_dim: i64,
    /// The link of `K` in the enlarged complex, on the ambient vertex set.
    pub link: ComplexRepr,
    pub certificate: ContractibilityCertificate,
}

impl NonfaceSplit {
    /// Reduced homology of the enlarged complex in degree d equals that of
    /// the base plus that of the link in degree d − shift.
    pub fn homology_shift(&self) -> i64 {
        self.sphere_dim + 2
    }
}

/// Certify the homotopy splitting for Δ′ = c ∪ {k} ∪ extra, where `k` is a
/// minimal non-face of `c` and each extra face is `k` plus one vertex with
/// all its `k`-truncations inside `c` (the admissible cofaces of `k`).
/// The piece glued in along the attachment, ∂k joined with the link of `k`
/// in Δ′, must be certified contractible inside `c`: either some vertex's
/// star contains it, or it collapses to a point on its own. Without a
/// certificate the split is refused.
pub fn nonface_split(c: &ComplexRepr, k: Face, extra: &[Face]) -> Result<NonfaceSplit> {
    if k.is_empty() {
        return Err(DevoidError::HypothesisNotMet(
            "the removed non-face must be nonempty".into(),
        ));
    }
    if !c.min_nonfaces().contains(k) {
        return Err(DevoidError::HypothesisNotMet(format!(
            "{k} is not a minimal non-face of the complex"
        )));
    }
    let mut crowns: BTreeSet<usize> = BTreeSet::new();
    for &f in extra {
        if !k.is_subset_of(f) || f.cardinality() != k.cardinality() + 1 {
            return Err(DevoidError::HypothesisNotMet(format!(
                "admissible cofaces of {k} are exactly one vertex larger; {f} is not"
            )));
        }
        for v in k.vertices() {
            if !c.is_face(f.remove(v)) {
                return Err(DevoidError::HypothesisNotMet(format!(
                    "coface {f} is not admissible: {} is not a face",
                    f.remove(v)
                )));
            }
        }
        crowns.insert(f.minus(k).min_vertex().expect("one extra vertex"));
    }

    // link_{Δ′}(k): the empty face plus one vertex per admissible coface.
    let n = c.n_vertices();
    let link_facets: Vec<Face> = if crowns.is_empty() {
        vec![Face::EMPTY]
    } else {
        crowns.iter().map(|&w| Face::singleton(w)).collect()
    };
    let link = ComplexRepr::from_facets(n, link_facets.iter().copied())?;

    // The attachment piece ∂k * link, a subcomplex of the base.
    let piece_facets: Vec<Face> = k
        .vertices()
        .flat_map(|drop| {
            let rim = k.remove(drop);
            link_facets.iter().map(move |&lf| rim.union(lf))
        })
        .collect();
    let piece = ComplexRepr::from_facets(n, piece_facets.iter().copied())?;

    // Certificate (a): a star that swallows the piece.
    let apex = (0..n).find(|&w| {
        piece_facets
            .iter()
            .all(|&f| c.is_face(f.insert(w)))
    });
    let certificate = match apex {
        Some(w) => ContractibilityCertificate::ConeApex(w),
        None => match collapse_to_point(&piece)? {
            Some(seq) => ContractibilityCertificate::CollapseSequence(seq),
            None => {
                return Err(DevoidError::CertificateUnavailable(format!(
                    "cannot certify that the attachment piece of {k} is contractible in the complex"
                )))
            }
        },
    };

    Ok(NonfaceSplit {
        sphere_dim: k.cardinality() as i64 - 2,
        link,
        certificate,
    })
}

/// Greedily collapse the complex to a single vertex through elementary
/// collapses, preferring the largest (then lexicographically least) free
/// face each round. Returns the collapse sequence, or `None` when the
/// greedy search gets stuck (which refutes nothing — it only withholds the
/// certificate).
pub fn collapse_to_point(c: &ComplexRepr) -> Result<Option<Vec<(Face, Face)>>> {
    let faces = c.enumerate_faces(None)?;
    let mut alive: BTreeSet<Face> = faces.into_iter().collect();
    if !alive.contains(&Face::EMPTY) {
        return Ok(None);
    }
    let mut sequence: Vec<(Face, Face)> = Vec::new();
    loop {
        if alive.len() == 2 {
            let top = alive.iter().max_by_key(|f| f.cardinality()).copied();
            if let Some(v) = top {
                if v.cardinality() == 1 {
                    return Ok(Some(sequence));
                }
            }
        }
        let mut ranked: Vec<Face> = alive.iter().copied().collect();
        ranked.sort_unstable_by_key(|f| (std::cmp::Reverse(f.cardinality()), *f));
        let mut found = None;
        'search: for &sigma in &ranked {
            let mut over = alive.iter().filter(|&&t| sigma != t && sigma.is_subset_of(t));
            if let Some(&tau) = over.next() {
                if over.next().is_none() {
                    found = Some((sigma, tau));
                    break 'search;
                }
            }
        }
        match found {
            Some((sigma, tau)) => {
                alive.remove(&sigma);
                alive.remove(&tau);
                sequence.push((sigma, tau));
            }
            None => return Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::random_complex;
    use crate::devoid::{
        devoid_complex, independence_complex, is_double_complete_closed_neighborhood, DevoidSpec,
    };
    use crate::graph::{build_gx, path, star, PatternGraph};
    use crate::homology::{betti, BettiProfile};

    fn f(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied())
    }

    fn cx(n: usize, facets: &[&[usize]]) -> ComplexRepr {
        ComplexRepr::from_facets(n, facets.iter().map(|s| f(s))).expect("valid facets")
    }

    fn profile(c: &ComplexRepr) -> BettiProfile {
        betti(c, 1 << 20).expect("homology within budget")
    }

    /// b̃_d(whole) must equal b̃_d(base) + b̃_{d−shift}(part) in every degree,
    /// and the torsion subgroups must merge the same way.
    fn assert_shifted_sum(whole: &ComplexRepr, base: &ComplexRepr, part: &ComplexRepr, shift: i64) {
        let w = profile(whole);
        let b = profile(base);
        let p = profile(part);
        for d in -1..=12 {
            assert_eq!(
                w.reduced_betti(d),
                b.reduced_betti(d) + p.reduced_betti(d - shift),
                "degree {d}: wedge decomposition must add up"
            );
            let mut merged: Vec<_> = b
                .torsion
                .get(&d)
                .into_iter()
                .flatten()
                .chain(p.torsion.get(&(d - shift)).into_iter().flatten())
                .cloned()
                .collect();
            merged.sort();
            let mut whole_t: Vec<_> = w.torsion.get(&d).cloned().unwrap_or_default();
            whole_t.sort();
            assert_eq!(whole_t, merged, "degree {d}: torsion must merge");
        }
    }

    #[test]
    fn fold_reduce_deletes_the_dominated_vertex() {
        // Triangle 012 with edges 03 and 23 hanging off: vertex 1's
        // obstructions swallow those of vertex 0, so 1 folds away and the
        // hollow triangle on {0,2,3} remains.
        let c = cx(4, &[&[0, 1, 2], &[0, 3], &[2, 3]]);
        let (folded, trace) = fold_reduce(&c).unwrap();
        assert_eq!(trace, vec![(0, 1)]);
        assert_eq!(folded, cx(4, &[&[0, 2], &[0, 3], &[2, 3]]));

        // The result is a circle and can fold no further.
        let (again, trace2) = fold_reduce(&folded).unwrap();
        assert_eq!(trace2, Vec::<(usize, usize)>::new());
        assert_eq!(again, folded);
    }

    #[test]
    fn fold_reduce_collapses_a_full_simplex_to_a_point() {
        let c = ComplexRepr::full_simplex(5).unwrap();
        let (folded, trace) = fold_reduce(&c).unwrap();
        assert_eq!(trace, vec![(1, 0), (2, 1), (3, 2), (4, 3)]);
        assert_eq!(folded.live_vertices(), f(&[4]));

        // Nothing to fold in the empty-ish cases.
        let void = ComplexRepr::from_min_nonfaces(3, [Face::EMPTY]).unwrap();
        let (same, trace) = fold_reduce(&void).unwrap();
        assert!(trace.is_empty());
        assert!(same.is_void());
    }

    #[test]
    fn fold_reduce_preserves_betti_profiles() {
        for seed in 0..100 {
            let c = random_complex(10, 31_000 + seed);
            let (folded, trace) = fold_reduce(&c).unwrap();
            // The folded complex may top out at a lower dimension; compare
            // homology content, not recorded ranges.
            let before = profile(&c);
            let after = profile(&folded);
            for d in -1..=12 {
                assert_eq!(
                    before.reduced_betti(d),
                    after.reduced_betti(d),
                    "seed {seed}, degree {d}: folding must preserve homology (trace {trace:?})"
                );
            }
            assert_eq!(before.torsion, after.torsion, "seed {seed}");
        }
    }

    #[test]
    fn split_reduce_decomposes_star_independence() {
        // Independent sets of a 3-leaf star: leaf 1's closed obstructions
        // sit inside the center's, so the complex splits into the full
        // simplex on the leaves and the suspended link of the center.
        let g = star(3).unwrap();
        let c = independence_complex(&g).unwrap();
        let (del, link) = split_reduce(&c, 1, 0).unwrap();
        assert_eq!(del, cx(4, &[&[1, 2, 3]]));
        assert_shifted_sum(&c, &del, &link, 1);

        assert!(matches!(
            split_reduce(&c, 1, 1),
            Err(DevoidError::InvalidParameter(_))
        ));
        // A path's endpoints stay jointly independent, breaking the
        // closed-containment hypothesis.
        let p = independence_complex(&path(3).unwrap()).unwrap();
        assert!(matches!(
            split_reduce(&p, 0, 2),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        // Ghost vertices are not split candidates.
        let ghosty = ComplexRepr::from_min_nonfaces(3, [f(&[0])]).unwrap();
        assert!(matches!(
            split_reduce(&ghosty, 1, 0),
            Err(DevoidError::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn split_reduce_decomposes_betti_wherever_the_hypothesis_holds() {
        let mut instances = 0usize;
        for seed in 0..100 {
            let c = random_complex(8, 33_000 + seed);
            let live: Vec<usize> = c.live_vertices().vertices().collect();
            for &u in &live {
                for &v in &live {
                    if u == v || !c.d_closed_subset(u, v) {
                        continue;
                    }
                    let (del, link) = split_reduce(&c, u, v).unwrap();
                    assert_shifted_sum(&c, &del, &link, 1);
                    instances += 1;
                }
            }
        }
        assert!(instances > 20, "need real coverage, saw {instances}");
    }

    #[test]
    fn complementation_wedges_suspended_links() {
        // A suspension complex decomposes over a single apex: the other
        // apex certifies the complement as a cone.
        for seed in 0..25 {
            let x = random_complex(7, 35_000 + seed);
            if x.is_void() {
                continue;
            }
            let c = x.suspension().unwrap();
            let apex = x.n_vertices();
            let links = complementation(&c, Face::singleton(apex)).unwrap();
            assert_eq!(links.len(), 1);
            assert_shifted_sum(&c, &ComplexRepr::from_facets(c.n_vertices(), []).unwrap(),
                &links[0], 1);
        }
    }

    #[test]
    fn complementation_handles_the_doubled_star_neighborhood() {
        // Doubling the star's leaf pairs and deleting the center leaves a
        // double-complete triangle; its pattern-avoidance complex for
        // {3-path, double-edge} is three isolated points, and the wedge
        // over one vertex's neighborhood reproduces its homology.
        let gx = build_gx(&star(3).unwrap(), 0).unwrap();
        assert!(is_double_complete_closed_neighborhood(&gx, 0));
        let spec = DevoidSpec::new(
            gx.clone(),
            vec![
                PatternGraph::from_name("p3").unwrap(),
                PatternGraph::from_name("c2").unwrap(),
            ],
        )
        .unwrap();
        let c = devoid_complex(&spec).unwrap();
        let prof = profile(&c);
        assert_eq!(prof.reduced_betti(0), 2, "three isolated points");

        let a = gx.neighbors(0);
        let links = complementation(&c, a).unwrap();
        assert_eq!(links.len(), 2);
        for d in -1..=6 {
            let total: u64 = links
                .iter()
                .map(|l| profile(l).reduced_betti(d - 1))
                .sum();
            assert_eq!(prof.reduced_betti(d), total, "degree {d}");
        }
    }

    #[test]
    fn complementation_rejects_bad_hypotheses() {
        let full = ComplexRepr::full_simplex(3).unwrap();
        assert!(matches!(
            complementation(&full, f(&[0, 1])),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        assert!(matches!(
            complementation(&full, Face::EMPTY),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        let ghosty = ComplexRepr::from_min_nonfaces(3, [f(&[0])]).unwrap();
        assert!(matches!(
            complementation(&ghosty, f(&[0])),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        // Two disjoint edges: deleting one endpoint leaves a disconnected
        // complex, which no cone certificate covers.
        let c = cx(4, &[&[0, 1], &[2, 3]]);
        assert!(matches!(
            complementation(&c, f(&[0])),
            Err(DevoidError::CertificateUnavailable(_))
        ));
    }

    #[test]
    fn nonface_split_certifies_the_square_with_a_pendant() {
        // A 4-cycle 0-1-2-3 with the pendant edge 0-4: adding the edge
        // {3,4} splits off one extra circle. Vertex 0 stars over the
        // attachment piece {{3},{4}}.
        let base = cx(5, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 4]]);
        let split = nonface_split(&base, f(&[3, 4]), &[]).unwrap();
        assert_eq!(split.sphere_dim, 0);
        assert_eq!(split.homology_shift(), 2);
        assert_eq!(split.certificate, ContractibilityCertificate::ConeApex(0));

        let whole = cx(5, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 4], &[3, 4]]);
        assert_shifted_sum(&whole, &base, &split.link, 2);
        let w = profile(&whole);
        assert_eq!(w.reduced_betti(1), 2, "two independent circles");
    }

    #[test]
    fn nonface_split_reads_an_elementary_collapse_backwards() {
        // Filling the open triangle over a 2-path (non-face {0,2} plus the
        // full triangle) is an anti-collapse: the link is a point, so the
        // homotopy type is unchanged.
        let base = cx(3, &[&[0, 1], &[1, 2]]);
        let split = nonface_split(&base, f(&[0, 2]), &[f(&[0, 1, 2])]).unwrap();
        assert_eq!(split.sphere_dim, 0);
        assert_eq!(split.certificate, ContractibilityCertificate::ConeApex(1));
        let whole = cx(3, &[&[0, 1, 2]]);
        assert_shifted_sum(&whole, &base, &split.link, 2);

        // Adding a cone facet over a ghost vertex works in cardinality one.
        let base = ComplexRepr::from_min_nonfaces(3, [f(&[2])]).unwrap();
        let split = nonface_split(&base, f(&[2]), &[f(&[0, 2])]).unwrap();
        assert_eq!(split.sphere_dim, -1);
        assert_eq!(split.certificate, ContractibilityCertificate::ConeApex(0));
        let whole = cx(3, &[&[0, 1], &[0, 2]]);
        assert_shifted_sum(&whole, &base, &split.link, 1);
    }

    #[test]
    fn nonface_split_refuses_without_a_certificate() {
        // Two disjoint edges: the attachment piece of {1,2} is a pair of
        // points inside different components — no star contains it and it
        // does not collapse.
        let c = cx(4, &[&[0, 1], &[2, 3]]);
        assert!(matches!(
            nonface_split(&c, f(&[1, 2]), &[]),
            Err(DevoidError::CertificateUnavailable(_))
        ));
    }

    #[test]
    fn nonface_split_validates_its_inputs() {
        let c = cx(3, &[&[0, 1], &[1, 2]]);
        // A face, a non-minimal non-face, and the empty face are rejected.
        assert!(matches!(
            nonface_split(&c, f(&[0, 1]), &[]),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        assert!(matches!(
            nonface_split(&c, Face::EMPTY, &[]),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        // Cofaces must be exactly one vertex larger...
        assert!(matches!(
            nonface_split(&c, f(&[0, 2]), &[f(&[0, 2])]),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        assert!(matches!(
            nonface_split(&c, f(&[0, 2]), &[f(&[1])]),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        // ...with every truncation a face of the base.
        let d = cx(4, &[&[0, 1], &[1, 2]]);
        assert!(matches!(
            nonface_split(&d, f(&[0, 2]), &[f(&[0, 2, 3])]),
            Err(DevoidError::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn greedy_collapse_finds_known_sequences() {
        // A full triangle collapses top-down deterministically.
        let full = ComplexRepr::full_simplex(3).unwrap();
        let seq = collapse_to_point(&full).unwrap().unwrap();
        assert_eq!(
            seq,
            vec![
                (f(&[0, 1]), f(&[0, 1, 2])),
                (f(&[0]), f(&[0, 2])),
                (f(&[1]), f(&[1, 2])),
            ]
        );

        // Already a point: the empty sequence.
        let point = ComplexRepr::full_simplex(1).unwrap();
        assert_eq!(collapse_to_point(&point).unwrap(), Some(vec![]));

        // Spheres and the empty complex do not collapse.
        let s0 = ComplexRepr::from_min_nonfaces(2, [f(&[0, 1])]).unwrap();
        assert_eq!(collapse_to_point(&s0).unwrap(), None);
        let empty = ComplexRepr::from_min_nonfaces(1, [f(&[0])]).unwrap();
        assert_eq!(collapse_to_point(&empty).unwrap(), None);
        let void = ComplexRepr::from_min_nonfaces(1, [Face::EMPTY]).unwrap();
        assert_eq!(collapse_to_point(&void).unwrap(), None);

        // Collapsing preserves homotopy: collapsible random cones.
        for seed in 0..15 {
            let x = random_complex(6, 37_000 + seed);
            if x.is_void() {
                continue;
            }
            // Cone over x: a fresh vertex subject to no obstruction at all.
            let n = x.n_vertices() + 1;
            let nonfaces: Vec<Face> = x.min_nonfaces().iter().copied().collect();
            let cone = ComplexRepr::from_min_nonfaces(n, nonfaces).unwrap();
            if cone.enumerate_faces(None).unwrap().len() > 512 {
                continue;
            }
            assert!(
                collapse_to_point(&cone).unwrap().is_some(),
                "seed {seed}: cones collapse greedily"
            );
        }
    }
}

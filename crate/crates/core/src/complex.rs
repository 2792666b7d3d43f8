//! Simplicial complexes stored by their minimal non-faces, with face
//! queries, link/deletion/induced subcomplexes, and the obstruction-set
//! calculus that drives folds, splits, and matching trees.
//!
//! A subset is a face exactly when it contains no minimal non-face. Vertices
//! that are not faces themselves (their singleton is a minimal non-face) are
//! "ghosts": they belong to the ambient id range but to no face. The void
//! complex — no faces at all, not even the empty one — is represented by the
//! antichain `{∅}`.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::DevoidError;
use crate::face::{Antichain, Face, MAX_VERTICES};
use crate::Result;

/// Hard cap on explicit face enumeration.
pub const ENUMERATION_GUARD: usize = 1 << 22;
/// Largest vertex count accepted by the facet-based constructor.
pub const MAX_FACET_VERTICES: usize = 24;

#[derive(Clone, PartialEq, Eq)]
pub struct ComplexRepr {
    n: usize,
    min_nonfaces: Antichain,
    /// Union of the singleton members of `min_nonfaces`.
    ghosts: Face,
}

impl ComplexRepr {
    // ----- constructors ------------------------------------------------------

    pub fn from_min_nonfaces<I: IntoIterator<Item = Face>>(
        n: usize,
        candidates: I,
    ) -> Result<ComplexRepr> {
        if n > MAX_VERTICES {
            return Err(DevoidError::TooLarge(format!(
                "complexes support at most {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let candidates: Vec<Face> = candidates.into_iter().collect();
        let range = Face::full(n);
        for &f in &candidates {
            if !f.is_subset_of(range) {
                return Err(DevoidError::InvalidParameter(format!(
                    "non-face {f} out of range for {n} vertices"
                )));
            }
        }
        let min_nonfaces = Antichain::minimalize(candidates);
        let ghosts = min_nonfaces.singleton_support();
        Ok(ComplexRepr {
            n,
            min_nonfaces,
            ghosts,
        })
    }

    /// Build the downward closure of `facets` and compute its minimal
    /// non-faces by an ascending-cardinality scan.
    pub fn from_facets<I: IntoIterator<Item = Face>>(n: usize, facets: I) -> Result<ComplexRepr> {
        if n > MAX_FACET_VERTICES {
            return Err(DevoidError::TooLarge(format!(
                "facet input is capped at {MAX_FACET_VERTICES} vertices, got {n}"
            )));
        }
        let facets: Vec<Face> = facets.into_iter().collect();
        let range = Face::full(n);
        for &f in &facets {
            if !f.is_subset_of(range) {
                return Err(DevoidError::InvalidParameter(format!(
                    "facet {f} out of range for {n} vertices"
                )));
            }
        }
        let is_face = |sigma: Face| facets.iter().any(|f| sigma.is_subset_of(*f));

        if !is_face(Face::EMPTY) {
            // No facets at all: the void complex.
            return ComplexRepr::from_min_nonfaces(n, vec![Face::EMPTY]);
        }

        let mut min_nonfaces: Vec<Face> = Vec::new();
        let mut current: Vec<Face> = vec![Face::EMPTY];
        let mut total = 1usize;
        while !current.is_empty() {
            let mut next: BTreeSet<Face> = BTreeSet::new();
            let mut candidates: BTreeSet<Face> = BTreeSet::new();
            for &f in &current {
                for v in 0..n {
                    if !f.contains(v) {
                        candidates.insert(f.insert(v));
                    }
                }
            }
            for sigma in candidates {
                if is_face(sigma) {
                    next.insert(sigma);
                } else {
                    let minimal = sigma
                        .vertices()
                        .all(|v| is_face(sigma.remove(v)));
                    if minimal {
                        min_nonfaces.push(sigma);
                    }
                }
            }
            total += next.len();
            if total > ENUMERATION_GUARD {
                return Err(DevoidError::TooLarge(format!(
                    "facet closure exceeds the enumeration guard ({ENUMERATION_GUARD} faces)"
                )));
            }
            current = next.into_iter().collect();
        }
        ComplexRepr::from_min_nonfaces(n, min_nonfaces)
    }

    /// Complex with every subset of `0..n` a face.
    pub fn full_simplex(n: usize) -> Result<ComplexRepr> {
        ComplexRepr::from_min_nonfaces(n, Vec::new())
    }

    // ----- basic queries ------------------------------------------------------

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn min_nonfaces(&self) -> &Antichain {
        &self.min_nonfaces
    }

    pub fn ghost_vertices(&self) -> Face {
        self.ghosts
    }

    /// Vertices that are faces: `0..n` minus the ghosts.
    pub fn live_vertices(&self) -> Face {
        if self.is_void() {
            Face::EMPTY
        } else {
            Face::full(self.n).minus(self.ghosts)
        }
    }

    /// True when the complex has no faces at all (∅ is a minimal non-face).
    pub fn is_void(&self) -> bool {
        self.min_nonfaces.contains(Face::EMPTY)
    }

    pub fn is_face(&self, sigma: Face) -> bool {
        sigma.is_subset_of(Face::full(self.n)) && !self.min_nonfaces.some_member_within(sigma)
    }

    /// Every face, grouped by cardinality ascending and ordered within each
    /// group; includes ∅ for non-void complexes.
    pub fn enumerate_faces(&self, max_card: Option<usize>) -> Result<Vec<Face>> {
        if self.is_void() {
            return Ok(Vec::new());
        }
        let cap = max_card.unwrap_or(self.n);
        let mut out: Vec<Face> = vec![Face::EMPTY];
        let mut current: Vec<Face> = vec![Face::EMPTY];
        let mut card = 0usize;
        while !current.is_empty() && card < cap {
            card += 1;
            let mut next: BTreeSet<Face> = BTreeSet::new();
            for &f in &current {
                let start = f.max_vertex().map_or(0, |m| m + 1);
                for v in start..self.n {
                    let cand = f.insert(v);
                    if self.is_face(cand) {
                        next.insert(cand);
                    }
                }
            }
            current = next.into_iter().collect();
            out.extend_from_slice(&current);
            if out.len() > ENUMERATION_GUARD {
                return Err(DevoidError::TooLarge(format!(
                    "face enumeration exceeds the guard ({ENUMERATION_GUARD} faces)"
                )));
            }
        }
        Ok(out)
    }

    /// `f[c]` = number of faces of cardinality c (so `f[0] = 1` unless void).
    pub fn f_vector(&self) -> Result<Vec<usize>> {
        let faces = self.enumerate_faces(None)?;
        let mut f = vec![0usize; self.n + 2];
        let mut top = 0;
        for face in faces {
            let c = face.cardinality();
            f[c] += 1;
            top = top.max(c);
        }
        f.truncate(top + 1);
        Ok(f)
    }

    /// Unreduced and reduced Euler characteristics.
    pub fn euler_characteristic(&self) -> Result<(i64, i64)> {
        let f = self.f_vector()?;
        let mut chi = 0i64;
        for (c, &count) in f.iter().enumerate().skip(1) {
            let sign = if (c - 1) % 2 == 0 { 1 } else { -1 };
            chi += sign * count as i64;
        }
        let reduced = if self.is_void() { 0 } else { chi - 1 };
        Ok((chi, reduced))
    }

    // ----- subcomplexes -------------------------------------------------------

    /// Faces disjoint from σ whose union with σ is a face. Keeps the ambient
    /// id range; σ's vertices become ghosts.
    pub fn link(&self, sigma: Face) -> Result<ComplexRepr> {
        if !self.is_face(sigma) {
            return Err(DevoidError::InvalidFace(format!(
                "link of {sigma} requires it to be a face"
            )));
        }
        let mut members: Vec<Face> = self
            .min_nonfaces
            .iter()
            .map(|m| m.minus(sigma))
            .collect();
        members.extend(sigma.vertices().map(Face::singleton));
        ComplexRepr::from_min_nonfaces(self.n, members)
    }

    /// Faces avoiding every vertex of σ. Keeps the ambient id range; σ's
    /// vertices become ghosts.
    pub fn deletion(&self, sigma: Face) -> Result<ComplexRepr> {
        let mut members: Vec<Face> = self.min_nonfaces.iter().copied().collect();
        members.extend(sigma.vertices().map(Face::singleton));
        ComplexRepr::from_min_nonfaces(self.n, members)
    }

    /// Faces contained in U: the deletion of the complementary vertices.
    pub fn induced(&self, u: Face) -> Result<ComplexRepr> {
        self.deletion(Face::full(self.n).minus(u))
    }

    /// Suspension: two fresh apex vertices, no face containing both.
    pub fn suspension(&self) -> Result<ComplexRepr> {
        if self.is_void() {
            return Err(DevoidError::InvalidParameter(
                "suspension of the void complex is not supported".into(),
            ));
        }
        let n = self.n + 2;
        if n > MAX_VERTICES {
            return Err(DevoidError::TooLarge(
                "suspension exceeds the vertex cap".into(),
            ));
        }
        let mut members: Vec<Face> = self.min_nonfaces.iter().copied().collect();
        members.push(Face::from_vertices([self.n, self.n + 1]));
        ComplexRepr::from_min_nonfaces(n, members)
    }

    // ----- obstruction sets -----------------------------------------------------

    /// Minimal elements of D(A) = {faces H with H ∪ A not a face}. Every
    /// member is itself a face; a face lies in D(A) exactly when it contains
    /// a member. When A is itself a non-face the result is {∅} (every face
    /// obstructs); for the void complex the result is empty (no faces exist).
    pub fn d_min(&self, a: Face) -> Antichain {
        let mut members: Vec<Face> = Vec::new();
        for m in self.min_nonfaces.iter() {
            if !m.intersection(a).is_empty() {
                members.push(m.minus(a));
            }
        }
        Antichain::minimalize(members)
    }

    /// Does D(u) ⊆ D(v)? Exact: every minimal element of D(u) must contain a
    /// minimal element of D(v).
    pub fn d_subset(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let du = self.d_min(Face::singleton(u));
        let dv = self.d_min(Face::singleton(v));
        du.iter().all(|gamma| dv.some_member_within(*gamma))
    }

    /// Does D[u] ⊆ D[v], where D[x] = D(x) ∪ {{x}}? Exact characterization
    /// for u ≠ v:
    ///   - {u} must be a face with {u,v} not a face (so {u} ∈ D(v));
    ///   - any member of d_min(u) equal to {v} forces {v} to be a maximal
    ///     face (faces strictly above {v} would land in D(u) ∖ D[v]);
    ///   - every other member of d_min(u) must contain a member of d_min(v).
    pub fn d_closed_subset(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        if !self.is_face(Face::singleton(u)) || self.is_face(Face::from_vertices([u, v])) {
            return false;
        }
        let du = self.d_min(Face::singleton(u));
        let dv = self.d_min(Face::singleton(v));
        let v_single = Face::singleton(v);
        du.iter().all(|&gamma| {
            if gamma == v_single {
                // No face may strictly contain {v}.
                (0..self.n).all(|w| w == v || !self.is_face(Face::from_vertices([v, w])))
            } else {
                dv.some_member_within(gamma)
            }
        })
    }

    /// An apex vertex: contained in no minimal non-face (so adding it to any
    /// face yields a face). None for the void complex or when no apex exists.
    pub fn is_cone(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        let support = self.min_nonfaces.support();
        (0..self.n).find(|&v| !support.contains(v))
    }

    // ----- JSON ------------------------------------------------------------------

    pub fn from_json_str(text: &str) -> Result<ComplexRepr> {
        let file: ComplexFile = serde_json::from_str(text)
            .map_err(|e| DevoidError::Parse(format!("bad complex JSON: {e}")))?;
        file.into_complex()
    }

    pub fn to_json_string(&self) -> String {
        let file = ComplexFile {
            n: self.n,
            min_nonfaces: Some(
                self.min_nonfaces
                    .iter()
                    .map(|m| m.to_vec())
                    .collect(),
            ),
            facets: None,
            note: None,
        };
        serde_json::to_string_pretty(&file).expect("serialization cannot fail")
    }
}

impl fmt::Debug for ComplexRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ComplexRepr(n={}, min_nonfaces={:?})",
            self.n, self.min_nonfaces
        )
    }
}

/// On-disk complex format: `n` plus exactly one of `min_nonfaces` / `facets`.
#[derive(Serialize, Deserialize)]
struct ComplexFile {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    min_nonfaces: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    facets: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

impl ComplexFile {
    fn into_complex(self) -> Result<ComplexRepr> {
        let to_faces = |lists: Vec<Vec<usize>>, n: usize| -> Result<Vec<Face>> {
            lists
                .into_iter()
                .map(|vs| {
                    for &v in &vs {
                        if v >= n {
                            return Err(DevoidError::InvalidParameter(format!(
                                "vertex {v} out of range for {n} vertices"
                            )));
                        }
                    }
                    Ok(Face::from_vertices(vs))
                })
                .collect()
        };
        match (self.min_nonfaces, self.facets) {
            (Some(m), None) => ComplexRepr::from_min_nonfaces(self.n, to_faces(m, self.n)?),
            (None, Some(f)) => ComplexRepr::from_facets(self.n, to_faces(f, self.n)?),
            _ => Err(DevoidError::Parse(
                "complex JSON must contain exactly one of `min_nonfaces` / `facets`".into(),
            )),
        }
    }
}

/// Deterministic random complex for property suites: a handful of random
/// nonempty minimal non-faces (occasionally a ghost singleton) on up to
/// `n_max` vertices. Never void.
pub fn random_complex(n_max: usize, seed: u64) -> ComplexRepr {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=n_max.max(2));
    let count = rng.gen_range(0..=n + 1);
    let mut members = Vec::new();
    for _ in 0..count {
        let size = match rng.gen_range(0..10) {
            0 => 1,
            1..=5 => 2,
            6..=8 => 3,
            _ => 4,
        }
        .min(n);
        let mut f = Face::EMPTY;
        while f.cardinality() < size {
            f = f.insert(rng.gen_range(0..n));
        }
        members.push(f);
    }
    ComplexRepr::from_min_nonfaces(n, members).expect("generated members are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied())
    }

    /// The five-vertex complex used in the worked matching-tree example:
    /// facets {1,2},{1,3},{2,3},{2,4},{2,5},{4,5} (1-based), stored 0-based.
    pub(crate) fn worked_example_complex() -> ComplexRepr {
        ComplexRepr::from_facets(
            5,
            vec![f(&[0, 1]), f(&[0, 2]), f(&[1, 2]), f(&[1, 3]), f(&[1, 4]), f(&[3, 4])],
        )
        .unwrap()
    }

    /// The four-vertex complex of the fold example: facets {1,2,3},{1,4},{3,4}
    /// (1-based), stored 0-based.
    fn fold_example_complex() -> ComplexRepr {
        ComplexRepr::from_facets(4, vec![f(&[0, 1, 2]), f(&[0, 3]), f(&[2, 3])]).unwrap()
    }

    #[test]
    fn constructors_normalize() {
        let c = ComplexRepr::from_min_nonfaces(3, vec![f(&[0, 1, 2])]).unwrap();
        assert_eq!(c.min_nonfaces().members(), &[f(&[0, 1, 2])]);

        let c = ComplexRepr::from_min_nonfaces(4, vec![f(&[0, 1]), f(&[0, 1, 2])]).unwrap();
        assert_eq!(c.min_nonfaces().members(), &[f(&[0, 1])]);

        let c = ComplexRepr::from_min_nonfaces(2, vec![f(&[0])]).unwrap();
        assert_eq!(c.ghost_vertices(), f(&[0]));
        assert!(c.is_face(f(&[1])));
        assert!(!c.is_face(f(&[0])));

        assert!(ComplexRepr::from_min_nonfaces(2, vec![f(&[5])]).is_err());
    }

    #[test]
    fn facet_constructor_examples() {
        // Full simplex: no minimal non-faces.
        let all: Vec<Face> = vec![f(&[0, 1, 2])];
        let c = ComplexRepr::from_facets(3, all).unwrap();
        assert!(c.min_nonfaces().is_empty());

        // Singleton facets only: every pair is a minimal non-face.
        let c = ComplexRepr::from_facets(3, vec![f(&[0]), f(&[1]), f(&[2])]).unwrap();
        assert_eq!(
            c.min_nonfaces().members(),
            &[f(&[0, 1]), f(&[0, 2]), f(&[1, 2])]
        );

        // No facets: the void complex.
        let c = ComplexRepr::from_facets(3, Vec::<Face>::new()).unwrap();
        assert!(c.is_void());
        assert!(!c.is_face(Face::EMPTY));
        assert_eq!(c.enumerate_faces(None).unwrap(), Vec::<Face>::new());

        // Only the empty facet: a single empty face, all vertices ghosts.
        let c = ComplexRepr::from_facets(2, vec![Face::EMPTY]).unwrap();
        assert!(!c.is_void());
        assert!(c.is_face(Face::EMPTY));
        assert_eq!(c.ghost_vertices(), f(&[0, 1]));
    }

    #[test]
    fn face_queries_and_enumeration() {
        let boundary = ComplexRepr::from_min_nonfaces(3, vec![f(&[0, 1, 2])]).unwrap();
        assert!(boundary.is_face(f(&[0, 1])));
        assert!(!boundary.is_face(f(&[0, 1, 2])));
        assert_eq!(boundary.f_vector().unwrap(), vec![1, 3, 3]);
        assert_eq!(boundary.euler_characteristic().unwrap(), (0, -1));

        let full = ComplexRepr::full_simplex(3).unwrap();
        assert_eq!(full.enumerate_faces(None).unwrap().len(), 8);
        assert_eq!(full.enumerate_faces(Some(1)).unwrap().len(), 4);

        // The fold example: {3,4} (1-based) is a face, {1,3,4} is not.
        let fig = fold_example_complex();
        assert!(fig.is_face(f(&[2, 3])));
        assert!(!fig.is_face(f(&[0, 2, 3])));
        assert_eq!(
            fig.min_nonfaces().members(),
            &[f(&[0, 2, 3]), f(&[1, 3])]
        );
    }

    #[test]
    fn link_and_deletion_examples() {
        let full = ComplexRepr::full_simplex(4).unwrap();
        let lk = full.link(f(&[1])).unwrap();
        assert!(lk.is_face(f(&[0, 2, 3])));
        assert!(!lk.is_face(f(&[1])));

        let boundary = ComplexRepr::from_min_nonfaces(3, vec![f(&[0, 1, 2])]).unwrap();
        let lk = boundary.link(f(&[0])).unwrap();
        assert!(lk.is_face(f(&[1])) && lk.is_face(f(&[2])));
        assert!(!lk.is_face(f(&[1, 2])));

        assert!(boundary.link(f(&[0, 1, 2])).is_err());

        // Deleting vertex 2 (1-based) of the fold example leaves the triangle
        // boundary on {1,3,4} (1-based).
        let fig = fold_example_complex();
        let del = fig.deletion(f(&[1])).unwrap();
        let expected =
            ComplexRepr::from_min_nonfaces(4, vec![f(&[1]), f(&[0, 2, 3])]).unwrap();
        assert_eq!(del, expected);
    }

    #[test]
    fn subcomplexes_match_brute_force() {
        for seed in 0..80 {
            let c = random_complex(7, seed);
            let faces = c.enumerate_faces(None).unwrap();
            let in_faces = |x: Face| faces.contains(&x);

            // link
            let live = c.live_vertices();
            if let Some(v) = live.min_vertex() {
                let sigma = Face::singleton(v);
                let lk = c.link(sigma).unwrap();
                let lk_faces = lk.enumerate_faces(None).unwrap();
                let expect: Vec<Face> = faces
                    .iter()
                    .copied()
                    .filter(|&t| t.intersection(sigma).is_empty() && in_faces(t.union(sigma)))
                    .collect();
                let mut got = lk_faces.clone();
                let mut want = expect.clone();
                got.sort();
                want.sort();
                assert_eq!(got, want, "link mismatch at seed {seed}");

                // deletion
                let del = c.deletion(sigma).unwrap();
                let del_faces = del.enumerate_faces(None).unwrap();
                let expect: Vec<Face> = faces
                    .iter()
                    .copied()
                    .filter(|&t| t.intersection(sigma).is_empty())
                    .collect();
                let mut got = del_faces.clone();
                let mut want = expect.clone();
                got.sort();
                want.sort();
                assert_eq!(got, want, "deletion mismatch at seed {seed}");
            }

            // induced on a random half of the vertices
            let u = Face::from_vertices((0..c.n_vertices()).filter(|&v| (seed >> v) & 1 == 0));
            let ind = c.induced(u).unwrap();
            let ind_faces = ind.enumerate_faces(None).unwrap();
            let expect: Vec<Face> = faces
                .iter()
                .copied()
                .filter(|&t| t.is_subset_of(u))
                .collect();
            let mut got = ind_faces.clone();
            let mut want = expect.clone();
            got.sort();
            want.sort();
            assert_eq!(got, want, "induced mismatch at seed {seed}");
        }
    }

    #[test]
    fn obstruction_sets_on_the_fold_example() {
        let fig = fold_example_complex();
        // 1-based: D(1) = {{3,4}}  →  0-based {2,3}.
        assert_eq!(fig.d_min(f(&[0])).members(), &[f(&[2, 3])]);
        // 1-based: minimal elements of D(2) = {{4}}  →  0-based {3}.
        assert_eq!(fig.d_min(f(&[1])).members(), &[f(&[3])]);
        // Full simplex: no obstructions.
        let full = ComplexRepr::full_simplex(4).unwrap();
        assert!(full.d_min(f(&[0, 2])).is_empty());

        // 1-based D(1) ⊆ D(2): 0-based d_subset(0, 1).
        assert!(fig.d_subset(0, 1));
        assert!(!fig.d_subset(1, 0));
        assert!(fig.d_subset(2, 2));
    }

    #[test]
    fn obstruction_sets_match_brute_force() {
        for seed in 0..80 {
            let c = random_complex(7, seed);
            let faces = c.enumerate_faces(None).unwrap();
            let in_faces = |x: Face| faces.contains(&x);
            let n = c.n_vertices();

            // d_min vs the definition, for a few sets A.
            for bits in [0u64, 1, 2, 5, (seed % 7) | 1] {
                let a = Face::from_bits(bits & (Face::full(n).bits()));
                let dm = c.d_min(a);
                let brute: Vec<Face> = faces
                    .iter()
                    .copied()
                    .filter(|&h| !in_faces(h.union(a)))
                    .collect();
                let brute_min = Antichain::minimalize(brute.clone());
                assert_eq!(dm, brute_min, "d_min mismatch at seed {seed}, A={a}");
                // Membership characterization: H ∈ D(A) iff H contains a member.
                for &h in &faces {
                    let in_d = !in_faces(h.union(a));
                    assert_eq!(
                        dm.some_member_within(h),
                        in_d,
                        "membership mismatch at seed {seed}, A={a}, H={h}"
                    );
                }
            }

            // d_subset and d_closed_subset vs brute-force set containment.
            for u in 0..n {
                for v in 0..n {
                    let du: BTreeSet<Face> = faces
                        .iter()
                        .copied()
                        .filter(|&h| !in_faces(h.union(Face::singleton(u))))
                        .collect();
                    let dv: BTreeSet<Face> = faces
                        .iter()
                        .copied()
                        .filter(|&h| !in_faces(h.union(Face::singleton(v))))
                        .collect();
                    assert_eq!(
                        c.d_subset(u, v),
                        du.is_subset(&dv),
                        "d_subset mismatch at seed {seed}, u={u}, v={v}"
                    );
                    let mut du_closed = du.clone();
                    du_closed.insert(Face::singleton(u));
                    let mut dv_closed = dv.clone();
                    dv_closed.insert(Face::singleton(v));
                    assert_eq!(
                        c.d_closed_subset(u, v),
                        du_closed.is_subset(&dv_closed),
                        "d_closed_subset mismatch at seed {seed}, u={u}, v={v}"
                    );
                }
            }
        }
    }

    #[test]
    fn cone_detection() {
        assert_eq!(ComplexRepr::full_simplex(3).unwrap().is_cone(), Some(0));
        let boundary = ComplexRepr::from_min_nonfaces(3, vec![f(&[0, 1, 2])]).unwrap();
        assert_eq!(boundary.is_cone(), None);
        let c = ComplexRepr::from_min_nonfaces(3, vec![f(&[0, 1])]).unwrap();
        assert_eq!(c.is_cone(), Some(2));
        let void = ComplexRepr::from_min_nonfaces(2, vec![Face::EMPTY]).unwrap();
        assert_eq!(void.is_cone(), None);
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let c = worked_example_complex();
        let text = c.to_json_string();
        let back = ComplexRepr::from_json_str(&text).unwrap();
        assert_eq!(back, c);

        let facet_form = r#"{"n": 3, "facets": [[0,1],[1,2]], "note": "path"}"#;
        let c = ComplexRepr::from_json_str(facet_form).unwrap();
        assert_eq!(c.min_nonfaces().members(), &[f(&[0, 2])]);

        assert!(ComplexRepr::from_json_str(r#"{"n": 3}"#).is_err());
        assert!(ComplexRepr::from_json_str(
            r#"{"n": 3, "facets": [[0]], "min_nonfaces": [[1]]}"#
        )
        .is_err());
        assert!(ComplexRepr::from_json_str(r#"{"n": 2, "facets": [[0,5]]}"#).is_err());
    }

    #[test]
    fn suspension_has_shifted_structure() {
        let two_points = ComplexRepr::from_min_nonfaces(2, vec![f(&[0, 1])]).unwrap();
        let s = two_points.suspension().unwrap();
        // S^0 suspended is a 4-cycle: 8 proper faces.
        assert_eq!(s.f_vector().unwrap(), vec![1, 4, 4]);
        assert_eq!(s.euler_characteristic().unwrap().1, -1 + 4 - 4);
    }
}

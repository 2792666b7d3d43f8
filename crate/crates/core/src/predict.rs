//! Closed-form homotopy predictions for the structured families: the
//! complexes of vertex sets avoiding k consecutive vertices on paths and
//! cycles, and the dominance complexes of chordal graphs and forests.

use crate::error::DevoidError;
use crate::graph::{is_chordal, matching_number, vertex_cover_number, Multigraph};
use crate::morse::HomotopyDescriptor;
use crate::Result;

/// Vertex sets of an n-path inducing no k-vertex subpath: a sphere when
/// k + 1 divides n or n − k, contractible otherwise.
pub fn predict_path(n: usize, k: usize) -> Result<HomotopyDescriptor> {
    if k < 2 || n < k {
        return Err(DevoidError::InvalidParameter(format!(
            "path prediction needs n ≥ k ≥ 2, got n={n}, k={k}"
        )));
    }
    let (n, k) = (n as i64, k as i64);
    if n % (k + 1) == 0 {
        let t = n / (k + 1);
        Ok(HomotopyDescriptor::sphere(t * k - t - 1))
    } else if (n - k) % (k + 1) == 0 {
        let t = (n - k) / (k + 1);
        Ok(HomotopyDescriptor::sphere(t * k - t + k - 2))
    } else {
        Ok(HomotopyDescriptor::Contractible)
    }
}

/// The same family on the n-cycle: branching on n mod (k+1), always a
/// sphere or a k-fold wedge of equal spheres — never contractible.
pub fn predict_cycle(n: usize, k: usize) -> Result<HomotopyDescriptor> {
    if k < 2 || n < k || n < 3 {
        return Err(DevoidError::InvalidParameter(format!(
            "cycle prediction needs n ≥ max(k, 3) and k ≥ 2, got n={n}, k={k}"
        )));
    }
    let (n, k) = (n as i64, k as i64);
    let t = n / (k + 1);
    let d = n % (k + 1);
    Ok(match d {
        0 => HomotopyDescriptor::wedge_of(k as usize, t * (k - 1) - 1),
        1 => HomotopyDescriptor::sphere(t * (k - 1) - 1),
        d if d == k => HomotopyDescriptor::sphere(t * (k - 1) + k - 2),
        d => HomotopyDescriptor::sphere(t * (k - 1) + d - 2),
    })
}

/// Dominance complex of a chordal graph: a sphere of dimension one less
/// than the vertex cover number.
pub fn predict_dom_chordal(g: &Multigraph) -> Result<HomotopyDescriptor> {
    if !is_chordal(g) {
        return Err(DevoidError::HypothesisNotMet(
            "dominance prediction by cover number needs a chordal graph".into(),
        ));
    }
    let v = vertex_cover_number(g)?;
    Ok(HomotopyDescriptor::sphere(v as i64 - 1))
}

/// Dominance complex of a forest: a sphere of dimension one less than the
/// matching number.
pub fn predict_dom_forest(f: &Multigraph) -> Result<HomotopyDescriptor> {
    if !f.is_forest() {
        return Err(DevoidError::NotAForest(
            "dominance prediction by matching number needs a forest".into(),
        ));
    }
    let m = matching_number(f)?;
    Ok(HomotopyDescriptor::sphere(m as i64 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::devoid::{devoid_complex, dominance_complex, DevoidSpec};
    use crate::graph::{
        complete, cycle, path, random_chordal, random_forest, star, PatternGraph,
    };
    use crate::homology::{betti, descriptor_match, DescriptorMatch};

    #[test]
    fn path_predictions_match_known_values() {
        assert_eq!(
            predict_path(4, 3).unwrap(),
            HomotopyDescriptor::sphere(1)
        );
        assert_eq!(
            predict_path(5, 3).unwrap(),
            HomotopyDescriptor::Contractible
        );
        assert_eq!(
            predict_path(7, 3).unwrap(),
            HomotopyDescriptor::sphere(3)
        );
        // n = k: the boundary of the (k−1)-simplex.
        assert_eq!(
            predict_path(3, 3).unwrap(),
            HomotopyDescriptor::sphere(1)
        );
        assert!(matches!(
            predict_path(1, 3),
            Err(DevoidError::InvalidParameter(_))
        ));
        assert!(matches!(
            predict_path(5, 1),
            Err(DevoidError::InvalidParameter(_))
        ));
    }

    #[test]
    fn cycle_predictions_match_known_values() {
        assert_eq!(
            predict_cycle(4, 3).unwrap(),
            HomotopyDescriptor::wedge(vec![1, 1, 1])
        );
        assert_eq!(
            predict_cycle(5, 3).unwrap(),
            HomotopyDescriptor::sphere(1)
        );
        assert_eq!(
            predict_cycle(8, 3).unwrap(),
            HomotopyDescriptor::wedge(vec![3, 3, 3])
        );
        // The middle branch 2 ≤ d ≤ k−1 first appears at k = 4.
        assert_eq!(
            predict_cycle(7, 4).unwrap(),
            HomotopyDescriptor::sphere(3)
        );
        assert!(matches!(
            predict_cycle(2, 2),
            Err(DevoidError::InvalidParameter(_))
        ));
    }

    #[test]
    fn dominance_predictions_match_known_values() {
        assert_eq!(
            predict_dom_chordal(&complete(4).unwrap()).unwrap(),
            HomotopyDescriptor::sphere(2)
        );
        assert_eq!(
            predict_dom_forest(&path(2).unwrap()).unwrap(),
            HomotopyDescriptor::sphere(0)
        );
        assert_eq!(
            predict_dom_forest(&path(7).unwrap()).unwrap(),
            HomotopyDescriptor::sphere(2)
        );
        // An edgeless graph has empty dominance complex: the (−1)-sphere.
        assert_eq!(
            predict_dom_forest(&Multigraph::new(3).unwrap()).unwrap(),
            HomotopyDescriptor::sphere(-1)
        );
        assert!(matches!(
            predict_dom_chordal(&cycle(4).unwrap()),
            Err(DevoidError::HypothesisNotMet(_))
        ));
        assert!(matches!(
            predict_dom_forest(&cycle(3).unwrap()),
            Err(DevoidError::NotAForest(_))
        ));
    }

    #[test]
    fn path_and_cycle_predictions_agree_with_homology() {
        let budget = 1 << 20;
        for k in 2..=4usize {
            let pattern = PatternGraph::new(path(k).unwrap()).unwrap();
            for n in k..=10usize {
                let spec =
                    DevoidSpec::new(path(n).unwrap(), vec![pattern.clone()]).unwrap();
                let c = devoid_complex(&spec).unwrap();
                let profile = betti(&c, budget).unwrap();
                let predicted = predict_path(n, k).unwrap();
                assert_eq!(
                    descriptor_match(&profile, &predicted),
                    DescriptorMatch::Consistent,
                    "paths n={n} k={k}: predicted {predicted}, profile {profile:?}"
                );

                if n >= 3 {
                    let spec =
                        DevoidSpec::new(cycle(n).unwrap(), vec![pattern.clone()]).unwrap();
                    let c = devoid_complex(&spec).unwrap();
                    let profile = betti(&c, budget).unwrap();
                    let predicted = predict_cycle(n, k).unwrap();
                    assert_eq!(
                        descriptor_match(&profile, &predicted),
                        DescriptorMatch::Consistent,
                        "cycles n={n} k={k}: predicted {predicted}, profile {profile:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn dominance_predictions_agree_with_homology() {
        let budget = 1 << 20;
        for seed in 0..25u64 {
            let g = random_chordal(8, 0.4, 41_000 + seed).unwrap();
            let c = dominance_complex(&g).unwrap();
            let profile = betti(&c, budget).unwrap();
            let predicted = predict_dom_chordal(&g).unwrap();
            assert_eq!(
                descriptor_match(&profile, &predicted),
                DescriptorMatch::Consistent,
                "chordal seed {seed}: predicted {predicted}, profile {profile:?}"
            );

            let f = random_forest(9, 42_000 + seed).unwrap();
            let c = dominance_complex(&f).unwrap();
            let profile = betti(&c, budget).unwrap();
            let predicted = predict_dom_forest(&f).unwrap();
            assert_eq!(
                descriptor_match(&profile, &predicted),
                DescriptorMatch::Consistent,
                "forest seed {seed}: predicted {predicted}, profile {profile:?}"
            );
        }
        // Trees with centers: stars are simultaneously chordal and forests,
        // and the two predictions must coincide.
        for n in 1..=5 {
            let g = star(n).unwrap();
            assert_eq!(
                predict_dom_chordal(&g).unwrap(),
                predict_dom_forest(&g).unwrap()
            );
        }
    }
}

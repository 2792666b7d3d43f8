//! Faces as 64-bit vertex sets and antichains of faces.
//!
//! A `Face` is a set of vertex ids drawn from `0..64`, stored as a bit set.
//! Faces are ordered lexicographically by their ascending vertex sequence
//! (`{2,3} < {4}` and `{2} < {2,3}`); this is the order used whenever a
//! deterministic choice among sets is needed.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

pub const MAX_VERTICES: usize = 64;

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn singleton(v: usize) -> Face {
        debug_assert!(v < MAX_VERTICES);
        Face(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Face {
        let mut bits = 0u64;
        for v in vs {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1 << v;
        }
        Face(bits)
    }

    /// All vertices `0..n` as one face.
    pub fn full(n: usize) -> Face {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Dimension as a simplex: `|σ| - 1`, so the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.cardinality() as i64 - 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn insert(self, v: usize) -> Face {
        debug_assert!(v < MAX_VERTICES);
        Face(self.0 | (1 << v))
    }

    pub fn remove(self, v: usize) -> Face {
        Face(self.0 & !(1u64 << v))
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }
}

impl Ord for Face {
    /// Lexicographic order on ascending vertex sequences; a proper prefix
    /// sorts before its extensions.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mut a = self.0;
        let mut b = other.0;
        loop {
            match (a, b) {
                (0, 0) => return std::cmp::Ordering::Equal,
                (0, _) => return std::cmp::Ordering::Less,
                (_, 0) => return std::cmp::Ordering::Greater,
                _ => {
                    let va = a.trailing_zeros();
                    let vb = b.trailing_zeros();
                    if va != vb {
                        return va.cmp(&vb);
                    }
                    a &= a - 1;
                    b &= b - 1;
                }
            }
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A set of faces that are pairwise incomparable under inclusion, kept in
/// lexicographic order. Built by `minimalize`, which keeps only the
/// inclusion-minimal members of its input.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Antichain {
    members: Vec<Face>,
}

impl Antichain {
    pub fn empty() -> Antichain {
        Antichain {
            members: Vec::new(),
        }
    }

    /// Inclusion-minimal members of `candidates`, deduplicated and sorted.
    pub fn minimalize<I: IntoIterator<Item = Face>>(candidates: I) -> Antichain {
        let mut v: Vec<Face> = candidates.into_iter().collect();
        v.sort_by_key(|f| f.cardinality());
        let mut kept: Vec<Face> = Vec::new();
        for f in v {
            if !kept.iter().any(|k| k.is_subset_of(f)) {
                kept.push(f);
            }
        }
        kept.sort();
        Antichain { members: kept }
    }

    pub fn members(&self) -> &[Face] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.members.contains(&f)
    }

    /// True when some member is a subset of `face`.
    pub fn some_member_within(&self, face: Face) -> bool {
        self.members.iter().any(|m| m.is_subset_of(face))
    }

    /// Union of the singleton members.
    pub fn singleton_support(&self) -> Face {
        let mut out = Face::EMPTY;
        for m in &self.members {
            if m.cardinality() == 1 {
                out = out.union(*m);
            }
        }
        out
    }

    /// Union of all member vertex sets.
    pub fn support(&self) -> Face {
        let mut out = Face::EMPTY;
        for m in &self.members {
            out = out.union(*m);
        }
        out
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Face> {
        self.members.iter()
    }
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied())
    }

    #[test]
    fn face_order_is_lexicographic_on_vertex_sequences() {
        assert!(f(&[2, 3]) < f(&[4]));
        assert!(f(&[3]) < f(&[4, 5]));
        assert!(f(&[2]) < f(&[2, 3]));
        assert!(f(&[1, 8]) < f(&[3]));
        assert_eq!(f(&[0, 2]).cmp(&f(&[0, 2])), std::cmp::Ordering::Equal);
    }

    #[test]
    fn minimalize_keeps_only_minimal_members() {
        let ac = Antichain::minimalize(vec![
            f(&[0, 1, 2]),
            f(&[1]),
            f(&[1, 2]),
            f(&[3, 4]),
            f(&[1]),
        ]);
        assert_eq!(ac.members(), &[f(&[1]), f(&[3, 4])]);
    }

    #[test]
    fn minimalize_empty_face_absorbs_everything() {
        let ac = Antichain::minimalize(vec![f(&[0, 1]), Face::EMPTY, f(&[2])]);
        assert_eq!(ac.members(), &[Face::EMPTY]);
    }

    #[test]
    fn singleton_support_collects_singletons() {
        let ac = Antichain::minimalize(vec![f(&[0]), f(&[2, 3]), f(&[5])]);
        assert_eq!(ac.singleton_support(), f(&[0, 5]));
    }

    #[test]
    fn face_set_operations() {
        let a = f(&[0, 2, 5]);
        assert!(a.contains(2) && !a.contains(1));
        assert!(f(&[0, 5]).is_subset_of(a));
        assert_eq!(a.minus(f(&[2])), f(&[0, 5]));
        assert_eq!(a.dim(), 2);
        assert_eq!(Face::EMPTY.dim(), -1);
        assert_eq!(a.to_vec(), vec![0, 2, 5]);
    }
}

//! Face-lattice enumeration from vertex-facet incidences.
//!
//! Faces are obtained as the closure of the facet family under pairwise
//! intersection, keyed canonically by their vertex sets. Ranks come from
//! longest chains, computed from the bottom and from the top; the two
//! rankings must agree and every cover step must raise the rank by one,
//! otherwise the input was not polytopal.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fvector::FVector;
use crate::incidence::IncidencePolytope;
use crate::vertex_set::VertexSet;

/// All faces of a polytope, graded by dimension. Dimension `-1` is the empty
/// face, dimension `d` the polytope itself; both are stored so that chain
/// conditions can be checked directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    dim: usize,
    n: usize,
    /// `faces_by_dim[k]` holds the faces of dimension `k - 1`.
    faces_by_dim: Vec<Vec<VertexSet>>,
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Faces of dimension `k`, for `-1 <= k <= d`.
    pub fn faces_of_dim(&self, k: isize) -> &[VertexSet] {
        &self.faces_by_dim[(k + 1) as usize]
    }

    /// Proper nonempty faces only, graded `0..d`.
    pub fn proper_faces(&self) -> impl Iterator<Item = (usize, &VertexSet)> {
        self.faces_by_dim[1..self.dim + 1]
            .iter()
            .enumerate()
            .flat_map(|(k, faces)| faces.iter().map(move |f| (k, f)))
    }

    /// Every face including the improper ones.
    pub fn all_faces(&self) -> impl Iterator<Item = &VertexSet> {
        self.faces_by_dim.iter().flatten()
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_dim.iter().map(|v| v.len()).sum()
    }

    /// The f-vector `(f_0, …, f_{d-1})`.
    pub fn f_vector(&self) -> FVector {
        FVector::from_usizes(
            &(0..self.dim)
                .map(|k| self.faces_by_dim[k + 1].len())
                .collect::<Vec<_>>(),
        )
    }

    /// Proper edges as sorted vertex pairs. For a 1-polytope the segment
    /// itself is the improper top face and is not listed.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        if self.dim < 2 {
            return Vec::new();
        }
        self.faces_of_dim(1)
            .iter()
            .map(|e| {
                let vs: Vec<usize> = e.iter().collect();
                (vs[0], vs[1])
            })
            .collect()
    }

    /// True iff the intersection of any two faces is again a face.
    pub fn is_intersection_closed(&self) -> bool {
        let all: std::collections::HashSet<VertexSet> = self.all_faces().copied().collect();
        let faces: Vec<VertexSet> = self.all_faces().copied().collect();
        for (i, a) in faces.iter().enumerate() {
            for b in &faces[i + 1..] {
                if !all.contains(&a.intersection(*b)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Enumerates every face of `p` by closing the facet family under pairwise
/// intersection, then grades the result by longest chains.
///
/// Fails with [`Error::NonPolytopalInput`] when grading breaks: a maximal
/// chain of the wrong length, a rank mismatch between the bottom-up and
/// top-down rankings, or a vertex that never appears as an atom.
pub fn enumerate_faces(p: &IncidencePolytope) -> Result<FaceLattice> {
    let d = p.dim();
    let n = p.vertex_count();
    let full = VertexSet::full(n);

    // Closure under intersection, seeded with the facets and the whole set.
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut faces: Vec<VertexSet> = Vec::new();
    let mut push = |set: VertexSet, faces: &mut Vec<VertexSet>| {
        if seen.insert(set) {
            faces.push(set);
        }
    };
    push(full, &mut faces);
    for &f in p.facets() {
        push(f, &mut faces);
    }
    let mut head = 0;
    while head < faces.len() {
        let current = faces[head];
        head += 1;
        for &f in p.facets() {
            let meet = current.intersection(f);
            if meet != current {
                push(meet, &mut faces);
            }
        }
    }
    push(VertexSet::EMPTY, &mut faces);
    let seen = seen;

    // Every vertex must appear as an atom (the singleton faces).
    for v in 0..n {
        if !seen.contains(&VertexSet::singleton(v)) {
            return Err(Error::NonPolytopalInput(format!(
                "vertex {v} is not an intersection of facets"
            )));
        }
    }

    // Sort by cardinality so subset sweeps only look backwards.
    faces.sort_by_key(|f| (f.len(), *f));
    let m = faces.len();
    let pos: HashMap<VertexSet, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();

    // Longest chain from the bottom: rank_up[empty] = 0, dim = rank_up - 1.
    let mut rank_up = vec![0usize; m];
    for i in 0..m {
        let mut best = 0;
        for j in 0..i {
            if faces[j].len() < faces[i].len() && faces[j].is_subset(faces[i]) {
                best = best.max(rank_up[j] + 1);
            }
        }
        rank_up[i] = best;
    }

    let top = pos[&full];
    if rank_up[top] != d + 1 {
        return Err(Error::NonPolytopalInput(format!(
            "longest chain has {} proper steps, expected {}",
            rank_up[top],
            d + 1
        )));
    }

    // Graded iff every cover step raises the longest-chain rank by exactly
    // one; then all maximal chains have length d + 1. Covers of a face are
    // its minimal proper supersets, found by sweeping supersets in
    // cardinality order and keeping only undominated ones.
    for i in 0..m {
        let mut minimal: Vec<usize> = Vec::new();
        for j in i + 1..m {
            if faces[i].len() < faces[j].len() && faces[i].is_subset(faces[j]) {
                if minimal.iter().any(|&c| faces[c].is_subset(faces[j])) {
                    continue;
                }
                if rank_up[j] != rank_up[i] + 1 {
                    return Err(Error::NonPolytopalInput(format!(
                        "cover {:?} < {:?} skips a rank",
                        faces[i], faces[j]
                    )));
                }
                minimal.push(j);
            }
        }
    }

    let mut faces_by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); d + 2];
    for i in 0..m {
        faces_by_dim[rank_up[i]].push(faces[i]);
    }
    if faces_by_dim[1].len() != n {
        return Err(Error::NonPolytopalInput(
            "atoms of the lattice are not exactly the vertices".into(),
        ));
    }
    Ok(FaceLattice {
        dim: d,
        n,
        faces_by_dim,
    })
}

/// Per-vertex degree, simplicity, pyramidality and the missing-edge census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexProfile {
    /// Edge count per vertex.
    pub degrees: Vec<usize>,
    /// Number of facets through each vertex (the dual characterization of
    /// the degree for simple vertices).
    pub facet_counts: Vec<usize>,
    /// `degree == d`, equivalently membership in exactly `d` facets.
    pub simple_flags: Vec<bool>,
    /// `v` is pyramidal iff exactly one facet avoids `v` and that facet
    /// contains every other vertex.
    pub pyramidal_flags: Vec<bool>,
    /// Nonadjacent vertex pairs, sorted.
    pub missing_edges: Vec<(usize, usize)>,
}

impl VertexProfile {
    pub fn simple_count(&self) -> usize {
        self.simple_flags.iter().filter(|&&b| b).count()
    }
}

/// Computes the vertex profile from the enumerated lattice of `p`.
pub fn vertex_profile(p: &IncidencePolytope, lattice: &FaceLattice) -> VertexProfile {
    let d = p.dim();
    let n = p.vertex_count();
    let mut degrees = vec![0usize; n];
    let mut adjacent = vec![VertexSet::EMPTY; n];
    if d == 1 {
        // The graph of a segment is the complete graph on its endpoints.
        degrees = vec![1; n];
        adjacent[0].insert(1);
        adjacent[1].insert(0);
    }
    for (u, v) in lattice.edges() {
        degrees[u] += 1;
        degrees[v] += 1;
        adjacent[u].insert(v);
        adjacent[v].insert(u);
    }
    let facet_counts: Vec<usize> = (0..n).map(|v| p.facets_at(v).len()).collect();
    let simple_flags: Vec<bool> = degrees.iter().map(|&deg| deg == d).collect();
    let pyramidal_flags: Vec<bool> = (0..n)
        .map(|v| {
            let avoiding: Vec<_> = p.facets().iter().filter(|f| !f.contains(v)).collect();
            avoiding.len() == 1 && avoiding[0].len() == n - 1
        })
        .collect();
    let mut missing_edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !adjacent[u].contains(v) {
                missing_edges.push((u, v));
            }
        }
    }
    VertexProfile {
        degrees,
        facet_counts,
        simple_flags,
        pyramidal_flags,
        missing_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::IncidencePolytope;

    fn simplex(d: usize) -> IncidencePolytope {
        let full = VertexSet::full(d + 1);
        let facets = (0..=d).map(|v| full.difference(VertexSet::singleton(v))).collect();
        IncidencePolytope::new(d, d + 1, facets).unwrap()
    }

    #[test]
    fn simplex_lattice() {
        let lat = enumerate_faces(&simplex(3)).unwrap();
        assert_eq!(lat.f_vector(), FVector::from_usizes(&[4, 6, 4]));
        assert!(lat.is_intersection_closed());
        let lat5 = enumerate_faces(&simplex(5)).unwrap();
        assert_eq!(lat5.f_vector(), FVector::from_usizes(&[6, 15, 20, 15, 6]));
    }

    #[test]
    fn square_profile() {
        let sq = IncidencePolytope::new(
            2,
            4,
            vec![
                VertexSet::from_iter([0, 1]),
                VertexSet::from_iter([1, 2]),
                VertexSet::from_iter([2, 3]),
                VertexSet::from_iter([3, 0]),
            ],
        )
        .unwrap();
        let lat = enumerate_faces(&sq).unwrap();
        assert_eq!(lat.f_vector(), FVector::from_usizes(&[4, 4]));
        let profile = vertex_profile(&sq, &lat);
        assert_eq!(profile.degrees, vec![2, 2, 2, 2]);
        assert_eq!(profile.simple_count(), 4);
        assert_eq!(profile.missing_edges, vec![(0, 2), (1, 3)]);
        assert!(!profile.pyramidal_flags.iter().any(|&b| b));
    }

    #[test]
    fn grading_failure_detected() {
        // The boundary of a 3-simplex declared as a 2-polytope: the closure
        // reaches the full vertex set through chains of length 4.
        let fake = IncidencePolytope::new(
            2,
            4,
            vec![
                VertexSet::from_iter([0, 1, 2]),
                VertexSet::from_iter([0, 1, 3]),
                VertexSet::from_iter([0, 2, 3]),
                VertexSet::from_iter([1, 2, 3]),
            ],
        )
        .unwrap();
        assert!(matches!(
            enumerate_faces(&fake),
            Err(Error::NonPolytopalInput(_))
        ));
    }

    #[test]
    fn point_lattice() {
        let pt = IncidencePolytope::new(0, 1, vec![VertexSet::EMPTY]).unwrap();
        let lat = enumerate_faces(&pt).unwrap();
        assert_eq!(lat.f_vector(), FVector::from_usizes(&[]));
        assert_eq!(lat.face_count(), 2);
    }
}

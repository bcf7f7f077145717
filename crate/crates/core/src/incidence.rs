//! Vertex-facet incidence data: the combinatorial carrier for every
//! construction in this crate.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A polytope given purely by its dimension, vertex count and facets as
/// vertex-index sets. Vertices are dense indices `0..n`; each constructor
/// documents its labeling so individual vertices can be addressed in tests.
///
/// Structural invariants enforced at construction:
/// - no facet contains another (the facets form an antichain),
/// - every vertex lies in at least `d` facets, every facet has at least `d`
///   vertices, and there are at least `d + 1` facets.
///
/// The 0-dimensional point (one vertex, one empty facet) is admitted as the
/// degenerate base case so that products and pyramids compose freely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncidencePolytope {
    dim: usize,
    n: usize,
    facets: Vec<VertexSet>,
}

impl std::fmt::Debug for IncidencePolytope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IncidencePolytope(d={}, n={}, facets=", self.dim, self.n)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        write!(f, ")")
    }
}

impl IncidencePolytope {
    pub fn new(dim: usize, n: usize, facets: Vec<VertexSet>) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVertices(n));
        }
        if dim == 0 {
            if n != 1 || facets != vec![VertexSet::EMPTY] {
                return Err(Error::NonPolytopalInput(
                    "a 0-polytope has one vertex and the empty facet".into(),
                ));
            }
            return Ok(IncidencePolytope { dim, n, facets });
        }

        let mut sorted: Vec<VertexSet> = facets;
        sorted.sort();
        sorted.dedup();

        if sorted.len() < dim + 1 {
            return Err(Error::NonPolytopalInput(format!(
                "a {dim}-polytope needs at least {} facets, got {}",
                dim + 1,
                sorted.len()
            )));
        }
        let full = VertexSet::full(n);
        for f in &sorted {
            if !f.is_subset(full) {
                return Err(Error::NonPolytopalInput(
                    "facet refers to a vertex index out of range".into(),
                ));
            }
            if f.len() < dim {
                return Err(Error::NonPolytopalInput(format!(
                    "facet {f:?} has fewer than {dim} vertices"
                )));
            }
        }
        for (i, f) in sorted.iter().enumerate() {
            for g in &sorted[i + 1..] {
                if f.is_subset(*g) || g.is_subset(*f) {
                    return Err(Error::NonPolytopalInput(format!(
                        "facets {f:?} and {g:?} are nested"
                    )));
                }
            }
        }
        for v in 0..n {
            let count = sorted.iter().filter(|f| f.contains(v)).count();
            if count < dim {
                return Err(Error::NonPolytopalInput(format!(
                    "vertex {v} lies in {count} < {dim} facets"
                )));
            }
        }
        Ok(IncidencePolytope {
            dim,
            n,
            facets: sorted,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Indices of the facets containing `v`.
    pub fn facets_at(&self, v: usize) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| self.facets[i].contains(v))
            .collect()
    }

    /// Transposed incidence: vertices of the dual are the facets of `self`,
    /// and the dual facet associated with vertex `v` consists of all facets
    /// containing `v`. For polytopal input this is the combinatorial dual, so
    /// its f-vector is the reversal.
    pub fn dual(&self) -> Result<IncidencePolytope> {
        let m = self.facets.len();
        let dual_facets: Vec<VertexSet> = (0..self.n)
            .map(|v| VertexSet::from_iter(self.facets_at(v)))
            .collect();
        IncidencePolytope::new(self.dim, m, dual_facets)
    }

    /// Relabel vertices by `map` (old index -> new index), a bijection.
    pub fn relabeled(&self, map: &[usize]) -> Result<IncidencePolytope> {
        IncidencePolytope::new(
            self.dim,
            self.n,
            self.facets.iter().map(|f| f.map(map)).collect(),
        )
    }

    /// True iff some vertex bijection carries the facet family of `self`
    /// onto the facet family of `other`. Exact backtracking with signature
    /// pruning; inputs at desk scale stay below ~30 vertices.
    pub fn is_isomorphic(&self, other: &IncidencePolytope) -> bool {
        if self.dim != other.dim {
            return false;
        }
        set_system_isomorphism(self.n, &self.facets, other.n, &other.facets).is_some()
    }
}

/// Searches for a bijection `sigma` on vertices with `sigma(A) = B` as set
/// families. Used both for facet families (combinatorial isomorphism) and
/// edge families (graph isomorphism).
pub fn set_system_isomorphism(
    na: usize,
    fam_a: &[VertexSet],
    nb: usize,
    fam_b: &[VertexSet],
) -> Option<Vec<usize>> {
    if na != nb || fam_a.len() != fam_b.len() {
        return None;
    }
    let n = na;

    // Per-vertex signature: sorted multiset of member-set sizes.
    let signature = |fam: &[VertexSet], v: usize| -> Vec<usize> {
        let mut sizes: Vec<usize> = fam.iter().filter(|s| s.contains(v)).map(|s| s.len()).collect();
        sizes.sort_unstable();
        sizes
    };
    let sig_a: Vec<_> = (0..n).map(|v| signature(fam_a, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature(fam_b, v)).collect();
    {
        let mut ma = sig_a.clone();
        let mut mb = sig_b.clone();
        ma.sort();
        mb.sort();
        if ma != mb {
            return None;
        }
    }

    // Co-membership counts: how many sets contain both u and v.
    let comember = |fam: &[VertexSet]| -> Vec<Vec<usize>> {
        let mut m = vec![vec![0usize; n]; n];
        for s in fam {
            let vs: Vec<usize> = s.iter().collect();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i..] {
                    m[u][v] += 1;
                    m[v][u] += 1;
                }
            }
        }
        m
    };
    let co_a = comember(fam_a);
    let co_b = comember(fam_b);

    let b_sets: BTreeSet<VertexSet> = fam_b.iter().copied().collect();

    // Assign vertices in order of rarest signature first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let rarity = sig_a.iter().filter(|s| **s == sig_a[v]).count();
        (rarity, v)
    });

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn backtrack(
        depth: usize,
        order: &[usize],
        sig_a: &[Vec<usize>],
        sig_b: &[Vec<usize>],
        co_a: &[Vec<usize>],
        co_b: &[Vec<usize>],
        image: &mut [usize],
        used: &mut [bool],
        fam_a: &[VertexSet],
        b_sets: &BTreeSet<VertexSet>,
    ) -> bool {
        if depth == order.len() {
            // Full candidate map: confirm the families correspond exactly.
            return fam_a.iter().all(|s| b_sets.contains(&s.map(image)));
        }
        let v = order[depth];
        for w in 0..image.len() {
            if used[w] || sig_a[v] != sig_b[w] {
                continue;
            }
            if order[..depth]
                .iter()
                .any(|&u| co_a[v][u] != co_b[w][image[u]])
            {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if backtrack(
                depth + 1,
                order,
                sig_a,
                sig_b,
                co_a,
                co_b,
                image,
                used,
                fam_a,
                b_sets,
            ) {
                return true;
            }
            used[w] = false;
            image[v] = usize::MAX;
        }
        false
    }

    if backtrack(
        0, &order, &sig_a, &sig_b, &co_a, &co_b, &mut image, &mut used, fam_a, &b_sets,
    ) {
        Some(image)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> IncidencePolytope {
        IncidencePolytope::new(
            2,
            4,
            vec![
                VertexSet::from_iter([0, 1]),
                VertexSet::from_iter([1, 2]),
                VertexSet::from_iter([2, 3]),
                VertexSet::from_iter([3, 0]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_nested_facets() {
        let err = IncidencePolytope::new(
            2,
            4,
            vec![
                VertexSet::from_iter([0, 1, 2]),
                VertexSet::from_iter([0, 1]),
                VertexSet::from_iter([2, 3]),
                VertexSet::from_iter([3, 0]),
            ],
        );
        assert!(matches!(err, Err(Error::NonPolytopalInput(_))));
    }

    #[test]
    fn rejects_starved_vertex() {
        let err = IncidencePolytope::new(
            2,
            4,
            vec![
                VertexSet::from_iter([0, 1]),
                VertexSet::from_iter([1, 2]),
                VertexSet::from_iter([2, 0]),
                VertexSet::from_iter([3, 0]),
            ],
        );
        assert!(err.is_err());
    }

    #[test]
    fn dual_of_square_is_square() {
        let sq = square();
        let dual = sq.dual().unwrap();
        assert_eq!(dual.vertex_count(), 4);
        assert_eq!(dual.facet_count(), 4);
        assert!(sq.is_isomorphic(&dual));
    }

    #[test]
    fn relabeling_is_isomorphic() {
        let sq = square();
        let rot = sq.relabeled(&[1, 2, 3, 0]).unwrap();
        assert!(sq.is_isomorphic(&rot));
        assert_eq!(sq, rot);
    }

    #[test]
    fn square_not_isomorphic_to_triangle_pair() {
        // Two triangles sharing an edge is not even polytopal (nested check
        // aside); compare against a path-like family instead.
        let other = IncidencePolytope::new(
            2,
            4,
            vec![
                VertexSet::from_iter([0, 1]),
                VertexSet::from_iter([1, 2]),
                VertexSet::from_iter([2, 3]),
                VertexSet::from_iter([3, 1]),
            ],
        );
        // vertex 1 would lie in 3 facets, vertex 0 in 1: rejected.
        assert!(other.is_err());
    }
}

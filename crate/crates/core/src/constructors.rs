//! Combinatorial builders for the polytope families under study.
//!
//! Every builder emits an [`IncidencePolytope`] with a frozen vertex
//! labeling, documented per function, so that tests can address individual
//! vertices (e.g. "truncate the first simple vertex").

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::incidence::IncidencePolytope;
use crate::lattice::{enumerate_faces, vertex_profile};
use crate::vertex_set::VertexSet;

/// The 0-dimensional polytope: one vertex, one (empty) facet.
pub fn point() -> IncidencePolytope {
    IncidencePolytope::new(0, 1, vec![VertexSet::EMPTY]).unwrap()
}

/// The `d`-simplex on vertices `0..=d`; facets are all `d`-subsets.
pub fn simplex(d: usize) -> IncidencePolytope {
    if d == 0 {
        return point();
    }
    let full = VertexSet::full(d + 1);
    let facets = (0..=d)
        .map(|v| full.difference(VertexSet::singleton(v)))
        .collect();
    IncidencePolytope::new(d, d + 1, facets).unwrap()
}

/// A line segment (`simplex(1)`).
pub fn segment() -> IncidencePolytope {
    simplex(1)
}

/// The square as the product of two segments.
pub fn square() -> IncidencePolytope {
    product(&segment(), &segment()).unwrap()
}

/// The `n`-gon with vertices `0..n` in boundary order.
pub fn polygon(n: usize) -> Result<IncidencePolytope> {
    if n < 3 {
        return Err(Error::DomainError(format!(
            "a polygon needs at least 3 vertices, got {n}"
        )));
    }
    let facets = (0..n)
        .map(|i| VertexSet::from_iter([i, (i + 1) % n]))
        .collect();
    IncidencePolytope::new(2, n, facets)
}

/// `t`-fold pyramid. Base vertices keep their indices; apexes are appended
/// one per fold, so the `j`-th apex has index `base.vertex_count() + j`.
///
/// Each fold sends facets `F` to `F ∪ {apex}` and adds the previous vertex
/// set as the new base facet, so `f_k` obeys `f'_k = f_k + f_{k-1}`.
pub fn pyramid(base: &IncidencePolytope, t: usize) -> Result<IncidencePolytope> {
    let mut p = base.clone();
    for _ in 0..t {
        let n = p.vertex_count();
        let apex = n;
        let old_full = VertexSet::full(n);
        let mut facets: Vec<VertexSet> = p
            .facets()
            .iter()
            .map(|f| f.union(VertexSet::singleton(apex)))
            .collect();
        facets.push(old_full);
        p = IncidencePolytope::new(p.dim() + 1, n + 1, facets)?;
    }
    Ok(p)
}

/// Product of two polytopes. Vertex `(i, j)` (vertex `i` of `p`, `j` of `q`)
/// gets index `i * q.vertex_count() + j`. Facets are `F × V(q)` and
/// `V(p) × G`. A 0-dimensional factor acts as the identity.
pub fn product(p: &IncidencePolytope, q: &IncidencePolytope) -> Result<IncidencePolytope> {
    if p.dim() == 0 {
        return Ok(q.clone());
    }
    if q.dim() == 0 {
        return Ok(p.clone());
    }
    let (np, nq) = (p.vertex_count(), q.vertex_count());
    if np * nq > 64 {
        return Err(Error::TooManyVertices(np * nq));
    }
    let idx = |i: usize, j: usize| i * nq + j;
    let mut facets = Vec::with_capacity(p.facet_count() + q.facet_count());
    for f in p.facets() {
        facets.push(VertexSet::from_iter(
            f.iter().flat_map(|i| (0..nq).map(move |j| idx(i, j))),
        ));
    }
    for g in q.facets() {
        facets.push(VertexSet::from_iter(
            (0..np).flat_map(|i| g.iter().map(move |j| idx(i, j))),
        ));
    }
    IncidencePolytope::new(p.dim() + q.dim(), np * nq, facets)
}

/// Bipyramid: two apexes `n` and `n + 1` over the base; every base facet `F`
/// yields facets `F ∪ {n}` and `F ∪ {n+1}`. The base itself is not a facet.
pub fn bipyramid(base: &IncidencePolytope) -> Result<IncidencePolytope> {
    if base.dim() == 0 {
        return Err(Error::DomainError(
            "bipyramid needs a base of dimension >= 1".into(),
        ));
    }
    let n = base.vertex_count();
    let mut facets = Vec::with_capacity(2 * base.facet_count());
    for f in base.facets() {
        facets.push(f.union(VertexSet::singleton(n)));
        facets.push(f.union(VertexSet::singleton(n + 1)));
    }
    IncidencePolytope::new(base.dim() + 1, n + 2, facets)
}

/// Free join: vertices of `p` keep their indices, vertices of `q` are
/// shifted by `p.vertex_count()`. Facets are `F ∪ V(q)` and `V(p) ∪ G`;
/// the dimension is `dim p + dim q + 1`.
pub fn free_join(p: &IncidencePolytope, q: &IncidencePolytope) -> Result<IncidencePolytope> {
    let (np, nq) = (p.vertex_count(), q.vertex_count());
    if np + nq > 64 {
        return Err(Error::TooManyVertices(np + nq));
    }
    let vq = VertexSet::from_iter(np..np + nq);
    let vp = VertexSet::full(np);
    let mut facets = Vec::with_capacity(p.facet_count() + q.facet_count());
    for f in p.facets() {
        facets.push(f.union(vq));
    }
    for g in q.facets() {
        facets.push(vp.union(VertexSet::from_iter(g.iter().map(|j| j + np))));
    }
    IncidencePolytope::new(p.dim() + q.dim() + 1, np + nq, facets)
}

/// The `(s, t)`-triplex: a `t`-fold pyramid over a simplicial `s`-prism.
/// Prism vertices are products `(i, j)` of `simplex(s-1) × segment` (see
/// [`product`] for the index rule); pyramid apexes follow.
///
/// Dimension `s + t`, exactly `(s + t) + s` vertices and `s + t + 2` facets.
pub fn triplex(s: usize, t: usize) -> Result<IncidencePolytope> {
    if s < 1 {
        return Err(Error::DomainError("triplex requires s >= 1".into()));
    }
    pyramid(&product(&simplex(s - 1), &segment())?, t)
}

/// `t`-fold pyramid over the product of an `r`-simplex and an `s`-simplex.
/// Product labeling as in [`product`]; apexes appended last.
pub fn delta(r: usize, s: usize, t: usize) -> Result<IncidencePolytope> {
    if r < 1 || s < 1 {
        return Err(Error::DomainError("delta requires r, s >= 1".into()));
    }
    pyramid(&product(&simplex(r), &simplex(s))?, t)
}

/// Truncates the simple vertex `v`: `v` is replaced by one new vertex per
/// edge at `v`, and the new vertices span one new facet.
///
/// Labeling: surviving vertices keep their order (indices above `v` shift
/// down by one); the `d` new vertices follow, ordered by the neighbor whose
/// edge they subdivide. Facets through `v` keep their other vertices plus
/// the new vertices on their edges at `v`; other facets are untouched.
pub fn truncate_simple_vertex(p: &IncidencePolytope, v: usize) -> Result<IncidencePolytope> {
    let d = p.dim();
    let n = p.vertex_count();
    if v >= n {
        return Err(Error::DomainError(format!("no vertex {v}")));
    }
    let lattice = enumerate_faces(p)?;
    let profile = vertex_profile(p, &lattice);
    if !profile.simple_flags[v] {
        return Err(Error::NotSimpleVertex(v));
    }
    let mut neighbors: Vec<usize> = lattice
        .edges()
        .iter()
        .filter_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
        .collect();
    neighbors.sort_unstable();
    debug_assert_eq!(neighbors.len(), d);

    let reindex = |u: usize| if u < v { u } else { u - 1 };
    let new_vertex = |w: usize| n - 1 + neighbors.iter().position(|&x| x == w).unwrap();

    let mut facets = Vec::with_capacity(p.facet_count() + 1);
    for f in p.facets() {
        if f.contains(v) {
            let mut set = VertexSet::from_iter(f.iter().filter(|&u| u != v).map(reindex));
            for &w in &neighbors {
                if f.contains(w) {
                    set.insert(new_vertex(w));
                }
            }
            facets.push(set);
        } else {
            facets.push(VertexSet::from_iter(f.iter().map(reindex)));
        }
    }
    facets.push(VertexSet::from_iter(neighbors.iter().map(|&w| new_vertex(w))));
    IncidencePolytope::new(d, n - 1 + d, facets)
}

/// The `d`-pentasm with its canonical labeling: `u_i` is index `i - 1` for
/// `i` in `1..=d`, and `v_j` is index `d + j` for `j` in `0..=d`.
///
/// Facets: for each `i` in `3..=d` everything except `u_i, v_i` (pentasms of
/// lower dimension); everything except `u_1, v_1, v_0` and everything except
/// `u_2, v_2, v_0` (two simplicial prisms); all `u_i`, all `v_j` except
/// `v_1`, and all `v_j` except `v_2` (three simplices).
pub fn pentasm(d: usize) -> Result<IncidencePolytope> {
    if d < 3 {
        return Err(Error::DomainError(format!(
            "pentasm requires d >= 3, got {d}"
        )));
    }
    let n = 2 * d + 1;
    let u = |i: usize| i - 1; // i in 1..=d
    let v = |j: usize| d + j; // j in 0..=d
    let full = VertexSet::full(n);

    let mut facets = Vec::with_capacity(d + 3);
    for i in 3..=d {
        facets.push(
            full.difference(VertexSet::singleton(u(i)))
                .difference(VertexSet::singleton(v(i))),
        );
    }
    facets.push(VertexSet::from_iter(
        (1..=d).map(u).filter(|&x| x != u(1)).chain((0..=d).map(v).filter(|&x| x != v(1) && x != v(0))),
    ));
    facets.push(VertexSet::from_iter(
        (1..=d).map(u).filter(|&x| x != u(2)).chain((0..=d).map(v).filter(|&x| x != v(2) && x != v(0))),
    ));
    facets.push(VertexSet::from_iter((1..=d).map(u)));
    facets.push(VertexSet::from_iter((0..=d).filter(|&j| j != 1).map(v)));
    facets.push(VertexSet::from_iter((0..=d).filter(|&j| j != 2).map(v)));
    IncidencePolytope::new(d, n, facets)
}

/// The pentasm built the other way: truncating a simple vertex of the
/// triplex `M(2, d-2)` (a `(d-2)`-fold pyramid over a square). Isomorphic to
/// [`pentasm`] but with the truncation labeling.
pub fn pentasm_by_truncation(d: usize) -> Result<IncidencePolytope> {
    if d < 3 {
        return Err(Error::DomainError(format!(
            "pentasm requires d >= 3, got {d}"
        )));
    }
    // Square corners are the simple vertices of M(2, d-2); cut the first.
    truncate_simple_vertex(&triplex(2, d - 2)?, 0)
}

/// Capped `d`-prism: truncate one simple apex of the `(d - ell)`-fold
/// pyramid over a bipyramid over an `(ell - 1)`-simplex.
///
/// In the pre-truncation polytope the bipyramid apexes `ell` and `ell + 1`
/// are the only simple vertices; the lower-indexed one is cut. The result
/// has `2d + 1` vertices, `d^2 + d` edges and `d + ell + 1` facets.
pub fn capped_prism(ell: usize, d: usize) -> Result<IncidencePolytope> {
    if !(3 <= ell && ell <= d) {
        return Err(Error::DomainError(format!(
            "capped prism requires 3 <= ell <= d, got ell = {ell}, d = {d}"
        )));
    }
    let base = pyramid(&bipyramid(&simplex(ell - 1))?, d - ell)?;
    truncate_simple_vertex(&base, ell)
}

/// The second 3-dimensional extremal polytope, with f-vector `(7, 11, 6)`.
/// Its incidence is computed once from the seven defining points via the
/// geometric oracle and cached.
pub fn sigma3() -> IncidencePolytope {
    static CACHE: OnceLock<IncidencePolytope> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let pts = crate::geometry::sigma3_points();
            crate::geometry::hull_incidence(&pts)
                .expect("the seven defining points span a 3-polytope")
                .polytope
        })
        .clone()
}

/// Cyclic polytope by the evenness rule: vertices `0..n` in moment-curve
/// order; a `d`-subset `S` is a facet iff every pair of vertices outside `S`
/// has an even number of elements of `S` strictly between them.
pub fn cyclic(n: usize, d: usize) -> Result<IncidencePolytope> {
    if d < 2 || n <= d {
        return Err(Error::DomainError(format!(
            "cyclic requires n > d >= 2, got n = {n}, d = {d}"
        )));
    }
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    let mut facets = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        if evenness(n, &subset) {
            facets.push(VertexSet::from_iter(subset.iter().copied()));
        }
        // next d-combination of 0..n in lexicographic order
        let mut i = d;
        loop {
            if i == 0 {
                return IncidencePolytope::new(d, n, facets);
            }
            i -= 1;
            if subset[i] != i + n - d {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..d {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn evenness(n: usize, subset: &[usize]) -> bool {
    let in_s: Vec<bool> = {
        let mut v = vec![false; n];
        for &k in subset {
            v[k] = true;
        }
        v
    };
    let outside: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
    for (a, &i) in outside.iter().enumerate() {
        for &j in &outside[a + 1..] {
            let between = subset.iter().filter(|&&k| i < k && k < j).count();
            if between % 2 != 0 {
                return false;
            }
        }
    }
    true
}

/// The `d`-cube as an iterated product of segments.
pub fn cube(d: usize) -> Result<IncidencePolytope> {
    let mut p = point();
    for _ in 0..d {
        p = product(&p, &segment())?;
    }
    Ok(p)
}

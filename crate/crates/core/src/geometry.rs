//! Exact-rational geometry: facet enumeration from points, polar duals,
//! hyperplane slicing and beneath/beyond classification. This layer is the
//! independent ground truth for the combinatorial constructions; there is no
//! floating point and no tolerance anywhere in it.
//!
//! Facet enumeration is brute force over affinely independent `d`-subsets
//! with side checks, `O(C(n,d) · n · d^3)`. That covers every geometric
//! check needed here (`n <= 16`, `d <= 6`) and is easy to audit.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::incidence::IncidencePolytope;
use crate::vertex_set::VertexSet;

pub type Rat = BigRational;
pub type Point = Vec<Rat>;

/// A finite point set in `R^d`, the input to the geometric oracle. Points
/// need not all be vertices of their convex hull; the hull computation
/// reports non-vertices instead of dropping them silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    pub dim: usize,
    pub points: Vec<Point>,
}

impl VPolytope {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::Encoding(format!(
                    "point has {} coordinates in ambient dimension {dim}",
                    p.len()
                )));
            }
        }
        Ok(VPolytope { dim, points })
    }

    pub fn from_integers(dim: usize, points: &[&[i64]]) -> Self {
        VPolytope {
            dim,
            points: points
                .iter()
                .map(|p| p.iter().map(|&c| Rat::from(BigInt::from(c))).collect())
                .collect(),
        }
    }

    /// Translate so that the centroid of the given points is the origin.
    /// The vertex centroid of a full-dimensional polytope is interior, so
    /// this prepares input for [`polar_dual`].
    pub fn translated_to_centroid(&self) -> VPolytope {
        let n = Rat::from(BigInt::from(self.points.len() as i64));
        let centroid: Point = (0..self.dim)
            .map(|j| {
                self.points.iter().map(|p| p[j].clone()).sum::<Rat>() / n.clone()
            })
            .collect();
        VPolytope {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().zip(&centroid).map(|(a, b)| a - b).collect())
                .collect(),
        }
    }
}

/// The set `{x : normal · x = offset}` with the polytope, by convention,
/// on the side `normal · x <= offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Result<Self> {
        if normal.iter().all(|c| c.is_zero()) {
            return Err(Error::Encoding("hyperplane normal must be nonzero".into()));
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn eval(&self, p: &[Rat]) -> Rat {
        dot(&self.normal, p)
    }
}

/// Side of a facet hyperplane: `Beneath` is the interior side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Beneath,
    On,
    Beyond,
}

/// Sign classification of `p` against a facet hyperplane of a polytope
/// (with the stored orientation: interior satisfies `normal · x < offset`).
pub fn position(p: &[Rat], facet: &Hyperplane) -> Position {
    let v = facet.eval(p);
    match v.cmp(&facet.offset) {
        std::cmp::Ordering::Less => Position::Beneath,
        std::cmp::Ordering::Equal => Position::On,
        std::cmp::Ordering::Greater => Position::Beyond,
    }
}

/// Output of facet enumeration: the combinatorial incidence restricted to
/// actual hull vertices, the supporting hyperplane of each facet, and the
/// bookkeeping between input points and hull vertices.
#[derive(Debug, Clone)]
pub struct HullResult {
    /// Incidence on the hull vertices, reindexed densely in input order.
    pub polytope: IncidencePolytope,
    /// One supporting hyperplane per facet, aligned with
    /// `polytope.facets()`.
    pub facet_planes: Vec<Hyperplane>,
    /// Original input index of each hull vertex.
    pub vertex_indices: Vec<usize>,
    /// Input points that are not vertices of the hull (duplicates, interior
    /// or lower-face points). Reported, never silently dropped.
    pub non_vertices: Vec<usize>,
}

impl HullResult {
    /// Coordinates of the hull vertices, in polytope vertex order.
    pub fn vertex_points(&self, v: &VPolytope) -> Vec<Point> {
        self.vertex_indices
            .iter()
            .map(|&i| v.points[i].clone())
            .collect()
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[Rat], b: &[Rat]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Row-reduce in place; returns the rank.
fn rank(mut rows: Vec<Point>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let head = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &head;
                for j in c..cols {
                    let sub = &factor * &rows[r][j];
                    rows[i][j] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the affine hull of the points.
pub fn affine_rank(points: &[Point]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    rank(points[1..].iter().map(|p| sub(p, &points[0])).collect())
}

/// A nonzero kernel vector of a `(d-1) x d` system of full row rank, or
/// `None` when the rows are dependent.
fn hyperplane_normal(rows: Vec<Point>) -> Option<Point> {
    let d = rows.first()?.len();
    let mut m = rows;
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..d {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let head = m[r][c].clone();
        for j in 0..d {
            m[r][j] = &m[r][j] / &head;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..d {
                    let sub = &factor * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if r != d - 1 {
        return None;
    }
    let free = (0..d).find(|c| !pivots.contains(c))?;
    let mut normal = vec![Rat::zero(); d];
    normal[free] = Rat::one();
    for (row, &pc) in pivots.iter().enumerate() {
        normal[pc] = -m[row][free].clone();
    }
    Some(normal)
}

/// Scale `(normal, offset)` to a primitive integer vector, preserving
/// orientation. Used as a canonical key for deduplicating facet planes.
fn canonical_plane(normal: &[Rat], offset: &Rat) -> (Vec<BigInt>, BigInt) {
    let mut lcm = BigInt::one();
    for c in normal.iter().chain(std::iter::once(offset)) {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = normal.iter().map(|c| (c * Rat::from(lcm.clone())).to_integer()).collect();
    let mut off = (offset * Rat::from(lcm.clone())).to_integer();
    let mut g = off.clone();
    for c in &ints {
        g = g.gcd(c);
    }
    if !g.is_zero() && g != BigInt::one() {
        for c in &mut ints {
            *c = &*c / &g;
        }
        off = &off / &g;
    }
    (ints, off)
}

/// Enumerates the facets of the convex hull of `v.points`.
///
/// Every affinely independent `d`-subset spans a candidate hyperplane; the
/// candidate survives if all points lie on one side. Points on at least `d`
/// facets whose normals span `R^d` are the hull vertices; the rest are
/// reported in `non_vertices`.
pub fn hull_incidence(v: &VPolytope) -> Result<HullResult> {
    let d = v.dim;
    let n = v.points.len();
    if d == 0 || n == 0 {
        return Err(Error::DegenerateInput {
            found: 0,
            ambient: d,
        });
    }
    let ar = affine_rank(&v.points);
    if ar != d {
        return Err(Error::DegenerateInput {
            found: ar,
            ambient: d,
        });
    }

    // First occurrence of each distinct point; duplicates can never be
    // vertices and would defeat the rank test below.
    let mut first_occurrence: Vec<usize> = Vec::new();
    let mut duplicate: Vec<bool> = vec![false; n];
    for i in 0..n {
        if first_occurrence.iter().any(|&j| v.points[j] == v.points[i]) {
            duplicate[i] = true;
        } else {
            first_occurrence.push(i);
        }
    }

    let mut seen: HashMap<(Vec<BigInt>, BigInt), ()> = HashMap::new();
    let mut planes: Vec<Hyperplane> = Vec::new();
    let mut incidences: Vec<Vec<usize>> = Vec::new();

    let m = first_occurrence.len();
    let mut subset: Vec<usize> = (0..d).collect();
    'subsets: loop {
        let pts: Vec<&Point> = subset.iter().map(|&i| &v.points[first_occurrence[i]]).collect();
        let rows: Vec<Point> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
        if let Some(normal) = hyperplane_normal(rows) {
            let offset = dot(&normal, pts[0]);
            // Side check over all points; orient so the polytope is <=.
            let mut has_above = false;
            let mut has_below = false;
            for p in &v.points {
                match dot(&normal, p).cmp(&offset) {
                    std::cmp::Ordering::Greater => has_above = true,
                    std::cmp::Ordering::Less => has_below = true,
                    std::cmp::Ordering::Equal => {}
                }
                if has_above && has_below {
                    break;
                }
            }
            if !(has_above && has_below) {
                let (normal, offset) = if has_above {
                    (normal.iter().map(|c| -c).collect::<Vec<_>>(), -offset.clone())
                } else {
                    (normal, offset)
                };
                let key = canonical_plane(&normal, &offset);
                if !seen.contains_key(&key) {
                    let on: Vec<usize> = (0..n)
                        .filter(|&i| dot(&normal, &v.points[i]) == offset)
                        .collect();
                    seen.insert(key, ());
                    planes.push(Hyperplane { normal, offset });
                    incidences.push(on);
                }
            }
        }
        // next d-combination
        let mut i = d;
        loop {
            if i == 0 {
                break 'subsets;
            }
            i -= 1;
            if subset[i] != i + m - d {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..d {
            subset[j] = subset[j - 1] + 1;
        }
    }

    // A point is a vertex iff its incident facet normals span R^d.
    let mut is_vertex = vec![false; n];
    for i in 0..n {
        if duplicate[i] {
            continue;
        }
        let normals: Vec<Point> = planes
            .iter()
            .zip(&incidences)
            .filter(|(_, inc)| inc.contains(&i))
            .map(|(h, _)| h.normal.clone())
            .collect();
        if normals.len() >= d && rank(normals) == d {
            is_vertex[i] = true;
        }
    }

    let vertex_indices: Vec<usize> = (0..n).filter(|&i| is_vertex[i]).collect();
    let non_vertices: Vec<usize> = (0..n).filter(|&i| !is_vertex[i]).collect();
    if vertex_indices.len() > 64 {
        return Err(Error::TooManyVertices(vertex_indices.len()));
    }
    let new_index: HashMap<usize, usize> = vertex_indices
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();

    let facets: Vec<VertexSet> = incidences
        .iter()
        .map(|inc| {
            VertexSet::from_iter(inc.iter().filter_map(|i| new_index.get(i).copied()))
        })
        .collect();
    let polytope = IncidencePolytope::new(d, vertex_indices.len(), facets.clone())?;
    // The polytope constructor sorts its facet list; realign the planes so
    // facet_planes[i] supports polytope.facets()[i].
    let by_set: HashMap<VertexSet, Hyperplane> =
        facets.into_iter().zip(planes).collect();
    let facet_planes = polytope
        .facets()
        .iter()
        .map(|f| by_set[f].clone())
        .collect();
    Ok(HullResult {
        polytope,
        facet_planes,
        vertex_indices,
        non_vertices,
    })
}

/// The polar dual `{y : x · y <= 1 for all x in the polytope}` as a point
/// set: one dual vertex `normal / offset` per facet. Requires the origin
/// strictly inside.
pub fn polar_dual(v: &VPolytope) -> Result<VPolytope> {
    let hull = hull_incidence(v)?;
    let mut points = Vec::with_capacity(hull.facet_planes.len());
    for h in &hull.facet_planes {
        if !h.offset.is_positive() {
            return Err(Error::OriginNotInterior);
        }
        points.push(h.normal.iter().map(|c| c / &h.offset).collect());
    }
    Ok(VPolytope {
        dim: v.dim,
        points,
    })
}

/// Cuts `v` with `h`, keeping the side `normal · x <= offset`.
///
/// The hyperplane must contain no hull vertex and must separate the vertex
/// set. Result: surviving vertices plus one exact intersection point per
/// crossing edge (edges come out of the hull's face lattice).
pub fn slice(v: &VPolytope, h: &Hyperplane) -> Result<VPolytope> {
    let hull = hull_incidence(v)?;
    let coords = hull.vertex_points(v);
    let values: Vec<Rat> = coords.iter().map(|p| h.eval(p)).collect();
    for (i, val) in values.iter().enumerate() {
        if *val == h.offset {
            return Err(Error::VertexOnHyperplane(hull.vertex_indices[i]));
        }
    }
    let kept: Vec<usize> = (0..coords.len()).filter(|&i| values[i] < h.offset).collect();
    if kept.is_empty() || kept.len() == coords.len() {
        return Err(Error::NoIntersection);
    }
    let lattice = crate::lattice::enumerate_faces(&hull.polytope)?;
    let mut points: Vec<Point> = kept.iter().map(|&i| coords[i].clone()).collect();
    for (a, b) in lattice.edges() {
        let (va, vb) = (&values[a], &values[b]);
        if (va < &h.offset) != (vb < &h.offset) {
            // p = a + t (b - a) with t = (c - h(a)) / (h(b) - h(a))
            let t = (&h.offset - va) / (vb - va);
            points.push(
                coords[a]
                    .iter()
                    .zip(&coords[b])
                    .map(|(x, y)| x + &t * (y - x))
                    .collect(),
            );
        }
    }
    Ok(VPolytope {
        dim: v.dim,
        points,
    })
}

/// A hyperplane that separates hull vertex `vertex` (given as an index into
/// `hull.vertex_indices`) from all other hull vertices, with the rest on the
/// kept (`<=`) side. The normal is the sum of the facet normals at the
/// vertex and the offset is the midpoint of the separating gap, so no
/// vertex can lie on the plane.
pub fn separating_hyperplane(
    v: &VPolytope,
    hull: &HullResult,
    vertex: usize,
) -> Result<Hyperplane> {
    let coords = hull.vertex_points(v);
    let d = v.dim;
    let mut normal = vec![Rat::zero(); d];
    for (h, facet) in hull.facet_planes.iter().zip(hull.polytope.facets()) {
        if facet.contains(vertex) {
            for j in 0..d {
                normal[j] += &h.normal[j];
            }
        }
    }
    let at_v = dot(&normal, &coords[vertex]);
    let best_other = coords
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != vertex)
        .map(|(_, p)| dot(&normal, p))
        .max()
        .ok_or(Error::NoIntersection)?;
    if best_other >= at_v {
        return Err(Error::NonPolytopalInput(
            "facet normals failed to expose the vertex".into(),
        ));
    }
    let offset = (at_v + best_other) / Rat::from(BigInt::from(2));
    Hyperplane::new(normal, offset)
}

/// Truncates a single hull vertex: slices with [`separating_hyperplane`].
pub fn truncate_vertex(v: &VPolytope, vertex: usize) -> Result<VPolytope> {
    let hull = hull_incidence(v)?;
    let h = separating_hyperplane(v, &hull, vertex)?;
    slice(v, &h)
}

/// The vertex figure at hull vertex `vertex`: the slice cross-section on the
/// separating hyperplane, returned in `R^{d-1}` coordinates (one coordinate
/// is dropped along the hyperplane, an exact affine isomorphism).
pub fn vertex_figure(v: &VPolytope, vertex: usize) -> Result<VPolytope> {
    let hull = hull_incidence(v)?;
    let h = separating_hyperplane(v, &hull, vertex)?;
    let coords = hull.vertex_points(v);
    let values: Vec<Rat> = coords.iter().map(|p| h.eval(p)).collect();
    let lattice = crate::lattice::enumerate_faces(&hull.polytope)?;
    let mut cut_points: Vec<Point> = Vec::new();
    for (a, b) in lattice.edges() {
        if a == vertex || b == vertex {
            let (va, vb) = (&values[a], &values[b]);
            let t = (&h.offset - va) / (vb - va);
            cut_points.push(
                coords[a]
                    .iter()
                    .zip(&coords[b])
                    .map(|(x, y)| x + &t * (y - x))
                    .collect(),
            );
        }
    }
    // Drop the pivot coordinate of the normal: affine iso on the hyperplane.
    let pivot = h
        .normal
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero normal");
    let projected: Vec<Point> = cut_points
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .filter(|(j, _)| *j != pivot)
                .map(|(_, c)| c.clone())
                .collect()
        })
        .collect();
    VPolytope::new(v.dim - 1, projected)
}

/// Points `x(t) = (t, t^2, …, t^d)` for `t = 1..=n`.
pub fn moment_curve_points(n: usize, d: usize) -> VPolytope {
    let points = (1..=n as i64)
        .map(|t| {
            let mut acc = BigInt::one();
            (0..d)
                .map(|_| {
                    acc *= BigInt::from(t);
                    Rat::from(acc.clone())
                })
                .collect()
        })
        .collect();
    VPolytope { dim: d, points }
}

/// The seven points whose hull realizes the second 3-dimensional extremal
/// polytope: `0, e1, e1+e3, e2, e2+e3, e1+e2, e1+e2+2e3`.
pub fn sigma3_points() -> VPolytope {
    VPolytope::from_integers(
        3,
        &[
            &[0, 0, 0],
            &[1, 0, 0],
            &[1, 0, 1],
            &[0, 1, 0],
            &[0, 1, 1],
            &[1, 1, 0],
            &[1, 1, 2],
        ],
    )
}

/// One concrete pentasm realization: the origin, `e_i` for `i in 1..=d`,
/// and `e_1 + e_2 + e_i` for `i in 1..=d`.
pub fn pentasm_points(d: usize) -> VPolytope {
    let mut points: Vec<Vec<i64>> = vec![vec![0; d]];
    for i in 0..d {
        let mut p = vec![0; d];
        p[i] = 1;
        points.push(p);
    }
    for i in 0..d {
        let mut p = vec![0; d];
        p[0] += 1;
        p[1] += 1;
        p[i] += 1;
        points.push(p);
    }
    let refs: Vec<&[i64]> = points.iter().map(|p| p.as_slice()).collect();
    VPolytope::from_integers(d, &refs)
}

/// Formats a rational as `"p/q"` (or just `"p"` for integers).
pub fn format_rational(r: &Rat) -> String {
    if r.denom() == &BigInt::one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"`; exact inverse of [`format_rational`].
pub fn parse_rational(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Encoding(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(Error::Encoding("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(p)?, denom))
        }
        None => Ok(Rat::from(parse_int(s)?)),
    }
}

/// Serializes a point list as a JSON array of arrays of rational strings.
pub fn points_to_json(v: &VPolytope) -> String {
    let arr: Vec<Vec<String>> = v
        .points
        .iter()
        .map(|p| p.iter().map(format_rational).collect())
        .collect();
    serde_json::to_string(&arr).expect("string arrays always serialize")
}

/// Reads a point list written by [`points_to_json`]; the ambient dimension
/// is the common coordinate count.
pub fn points_from_json(s: &str) -> Result<VPolytope> {
    let arr: Vec<Vec<String>> =
        serde_json::from_str(s).map_err(|e| Error::Encoding(e.to_string()))?;
    if arr.is_empty() {
        return Err(Error::Encoding("empty point list".into()));
    }
    let dim = arr[0].len();
    let points = arr
        .iter()
        .map(|p| p.iter().map(|c| parse_rational(c)).collect::<Result<Point>>())
        .collect::<Result<Vec<_>>>()?;
    VPolytope::new(dim, points)
}

//! Named check suites: each one runs a family of claims at desk scale and
//! reports one machine-readable row per claim. Every failing row names the
//! construction, the face dimension and the expected/actual values.

use num_bigint::BigInt;

use polyface::constructors as ctor;
use polyface::corpus::desk_corpus;
use polyface::error::Result;
use polyface::formulas::{
    self, binomial, cyclic4_facets, delta_pyramid_fvector, min_facets_4d, pentasm_f,
    pentasm_fvector, phi, simple_lbt, xue_bound, DeltaPyramidSpec,
};
use polyface::gale::{
    self, figure2_diagram, gale_missing_edges, DiagramVariant, VariantTag,
};
use polyface::geometry::{
    self, hull_incidence, moment_curve_points, polar_dual, position, truncate_vertex, Position,
    Rat, VPolytope,
};
use polyface::{enumerate_faces, vertex_profile, FVector, IncidencePolytope};

use crate::CliError;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "id": c.id,
                    "pass": c.pass,
                    "detail": c.detail,
                })
            })
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "suite": self.suite,
            "pass": self.pass(),
            "checked": self.checks.len(),
            "failed": self.checks.iter().filter(|c| !c.pass).count(),
            "checks": checks,
        }))
        .expect("report serializes")
    }
}

struct Suite {
    name: &'static str,
    checks: Vec<CheckResult>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checks: Vec::new(),
        }
    }

    fn record(&mut self, id: String, pass: bool, detail: String) {
        self.checks.push(CheckResult { id, pass, detail });
    }

    /// Exact-equality check with an informative failure row.
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, id: String, expected: T, actual: T) {
        let pass = expected == actual;
        let detail = if pass {
            format!("{actual:?}")
        } else {
            format!("expected {expected:?}, actual {actual:?}")
        };
        self.record(id, pass, detail);
    }

    fn assert(&mut self, id: String, pass: bool, detail: String) {
        self.record(id, pass, detail);
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.name.to_string(),
            checks: self.checks,
        }
    }
}

fn fvec(p: &IncidencePolytope) -> Result<FVector> {
    Ok(enumerate_faces(p)?.f_vector())
}

pub const SUITES: &[&str] = &[
    "pentasm-tables",
    "capped-vs-pentasm",
    "gale-six",
    "truncation",
    "pyramids-over-simple",
    "min-facets",
    "cyclic",
    "xue-bounds",
    "fvector-oracle",
    "duality",
    "lattice-invariants",
];

/// Runs one suite by name; `all` concatenates every suite.
pub fn run_suite(name: &str) -> std::result::Result<Vec<SuiteReport>, CliError> {
    match name {
        "all" => SUITES.iter().map(|s| run_one(s)).collect(),
        _ if SUITES.contains(&name) => Ok(vec![run_one(name)?]),
        _ => Err(CliError::UnknownSuite(name.to_string())),
    }
}

fn run_one(name: &str) -> std::result::Result<SuiteReport, CliError> {
    let report = match name {
        "pentasm-tables" => pentasm_tables(),
        "capped-vs-pentasm" => capped_vs_pentasm(),
        "gale-six" => gale_six(),
        "truncation" => truncation(),
        "pyramids-over-simple" => pyramids_over_simple(),
        "min-facets" => min_facets(),
        "cyclic" => cyclic_suite(),
        "xue-bounds" => xue_bounds(),
        "fvector-oracle" => fvector_oracle(),
        "duality" => duality(),
        "lattice-invariants" => lattice_invariants(),
        _ => return Err(CliError::UnknownSuite(name.to_string())),
    };
    report.map_err(CliError::Core)
}

/// The published f-vector tables for the small extremal polytopes.
fn pentasm_tables() -> Result<SuiteReport> {
    let mut suite = Suite::new("pentasm-tables");
    let expect: [(&str, IncidencePolytope, Vec<usize>); 6] = [
        ("pentasm(3)", ctor::pentasm(3)?, vec![7, 11, 6]),
        ("pentasm(4)", ctor::pentasm(4)?, vec![9, 19, 17, 7]),
        ("pentasm(5)", ctor::pentasm(5)?, vec![11, 29, 36, 24, 8]),
        ("delta(2, 2, 0)", ctor::delta(2, 2, 0)?, vec![9, 18, 15, 6]),
        (
            "pyramid(t=1, cube(3))",
            ctor::pyramid(&ctor::cube(3)?, 1)?,
            vec![9, 20, 18, 7],
        ),
        ("sigma3()", ctor::sigma3(), vec![7, 11, 6]),
    ];
    for (name, p, table) in expect {
        suite.eq(
            format!("{name} f-vector"),
            FVector::from_usizes(&table),
            fvec(&p)?,
        );
    }
    suite.eq(
        "dual(sigma3()) f-vector".to_string(),
        FVector::from_usizes(&[6, 11, 7]),
        fvec(&ctor::sigma3().dual()?)?,
    );
    suite.assert(
        "sigma3 differs from pentasm(3)".to_string(),
        !ctor::sigma3().is_isomorphic(&ctor::pentasm(3)?),
        "distinct combinatorial types with equal f-vectors".to_string(),
    );
    Ok(suite.finish())
}

/// Strict dominance of capped prisms over pentasms in every dimension.
fn capped_vs_pentasm() -> Result<SuiteReport> {
    let mut suite = Suite::new("capped-vs-pentasm");
    for d in 3..=8usize {
        for ell in 3..=d {
            let cp = ctor::capped_prism(ell, d)?;
            let f = fvec(&cp)?;
            suite.eq(
                format!("capped_prism({ell}, {d}) size"),
                (2 * d + 1, d * d + d, d + ell + 1),
                (
                    cp.vertex_count(),
                    usize::try_from(&f.get(1)).unwrap(),
                    cp.facet_count(),
                ),
            );
            for k in 1..d {
                let pentasm = pentasm_f(k as i64, d as i64)?;
                let value = f.get(k);
                suite.assert(
                    format!("capped_prism({ell}, {d}) k={k} strict"),
                    value > pentasm,
                    format!("capped {value} vs pentasm {pentasm}"),
                );
            }
        }
    }
    Ok(suite.finish())
}

/// The six extremal diagrams: validity, four missing edges, facet counts,
/// and the stated dualities.
fn gale_six() -> Result<SuiteReport> {
    let mut suite = Suite::new("gale-six");
    for tag in VariantTag::ALL {
        let dims: Vec<usize> = match tag {
            VariantTag::I => vec![3],
            VariantTag::II => (3..=8).collect(),
            VariantTag::III | VariantTag::IV => (4..=8).collect(),
            VariantTag::V => vec![4],
            VariantTag::VI => vec![5],
        };
        for d in dims {
            let g = figure2_diagram(DiagramVariant::new(tag, d)?)?;
            suite.assert(
                format!("variant {} d={d} valid", tag.name()),
                gale::is_valid(&g),
                "open-halfplane condition".to_string(),
            );
            let missing = gale_missing_edges(&g)?;
            suite.eq(
                format!("variant {} d={d} missing edges", tag.name()),
                4usize,
                missing.len(),
            );
            let p = gale::gale_faces(&g)?;
            suite.eq(
                format!("variant {} d={d} facets", tag.name()),
                tag.expected_facets(d),
                p.facet_count(),
            );
            // Both coface decision routes must agree on every subset.
            let n = g.vertex_count();
            let agree = (1u64..(1 << n)).all(|bits| {
                let z = polyface::VertexSet::from_iter((0..n).filter(|&v| bits & (1 << v) != 0));
                gale::is_coface(&g, &z) == gale::is_coface_by_sweep(&g, &z)
            });
            suite.assert(
                format!("variant {} d={d} coface routes agree", tag.name()),
                agree,
                "cone feasibility vs halfplane sweep".to_string(),
            );
        }
    }
    // Variant (ii) is the dual pentasm; variant (vi) the dual free join of
    // two quadrilaterals; variant (i) the dual of the exceptional
    // 3-polytope.
    for d in 3..=8usize {
        let g = figure2_diagram(DiagramVariant::new(VariantTag::II, d)?)?;
        suite.eq(
            format!("variant ii d={d} reversed pentasm f-vector"),
            pentasm_fvector(d as i64)?.reversed(),
            fvec(&gale::gale_faces(&g)?)?,
        );
    }
    let join = ctor::free_join(&ctor::square(), &ctor::square())?;
    let g6 = figure2_diagram(DiagramVariant::new(VariantTag::VI, 5)?)?;
    suite.eq(
        "variant vi reversed join f-vector".to_string(),
        fvec(&join)?.reversed(),
        fvec(&gale::gale_faces(&g6)?)?,
    );
    let g1 = figure2_diagram(DiagramVariant::new(VariantTag::I, 3)?)?;
    suite.assert(
        "variant i is dual of sigma3".to_string(),
        gale::gale_faces(&g1)?.is_isomorphic(&ctor::sigma3().dual()?),
        "isomorphism of incidences".to_string(),
    );
    Ok(suite.finish())
}

/// Truncation law `f_k' = f_k + binom(d, k+1)` and the geometric
/// cross-check: slicing a realized simple vertex gives the same incidence
/// as the combinatorial truncation.
fn truncation() -> Result<SuiteReport> {
    let mut suite = Suite::new("truncation");
    for d in 3..=7usize {
        let base = ctor::triplex(2, d - 2)?;
        let f_base = fvec(&base)?;
        let cut = ctor::truncate_simple_vertex(&base, 0)?;
        let f_cut = fvec(&cut)?;
        suite.eq(
            format!("truncate(triplex(2, {})) vertex delta", d - 2),
            BigInt::from(d - 1),
            f_cut.get(0) - f_base.get(0),
        );
        for k in 1..d {
            suite.eq(
                format!("truncate(triplex(2, {})) k={k} delta", d - 2),
                binomial(d as i64, k as i64 + 1),
                f_cut.get(k) - f_base.get(k),
            );
        }
        suite.assert(
            format!("truncate(triplex(2, {})) is pentasm({d})", d - 2),
            cut.is_isomorphic(&ctor::pentasm(d)?),
            "combinatorial truncation route".to_string(),
        );
    }

    // Geometric route: realize the triplex as the unit square padded with
    // apexes e_3, ..., e_d, slice off the corner (1, 1, 0, ..., 0).
    for d in 3..=5usize {
        let v = triplex2_points(d);
        let sliced = truncate_vertex(&v, 3)?;
        let hull = hull_incidence(&sliced)?;
        suite.assert(
            format!("geometric slice of M(2, {}) is pentasm({d})", d - 2),
            hull.polytope.is_isomorphic(&ctor::pentasm(d)?),
            format!("slice produced f = {}", fvec(&hull.polytope)?),
        );
    }
    let tet = VPolytope::from_integers(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let cut_tet = hull_incidence(&truncate_vertex(&tet, 0)?)?.polytope;
    suite.eq(
        "sliced simplex(3) f-vector".to_string(),
        FVector::from_usizes(&[6, 9, 5]),
        fvec(&cut_tet)?,
    );

    // Slicing a whole simplex facet off a prism leaves a simple new facet
    // (every cut edge has simple endpoints).
    for d in 3..=4usize {
        let prism = prism_points(d);
        let hull = hull_incidence(&prism)?;
        let normal: Vec<Rat> = vec![Rat::from(BigInt::from(1)); d];
        let offset = Rat::new(BigInt::from(2 * d + 1), BigInt::from(2));
        let h = geometry::Hyperplane::new(normal, offset)?;
        let sliced = geometry::slice(&prism, &h)?;
        let sliced_hull = hull_incidence(&sliced)?;
        let lattice = enumerate_faces(&sliced_hull.polytope)?;
        let profile = vertex_profile(&sliced_hull.polytope, &lattice);
        let coords = sliced_hull.vertex_points(&sliced);
        let on_plane = (0..coords.len()).filter(|&i| h.eval(&coords[i]) == h.offset);
        let all_simple = on_plane
            .clone()
            .all(|i| profile.simple_flags[i]);
        suite.assert(
            format!("prism({d}) slice facet simple"),
            all_simple && on_plane.count() == d,
            format!("hull facets {}", hull.polytope.facet_count()),
        );
    }

    // Beneath/beyond: the cap apex of a realized capped prism is beyond
    // exactly one simplex facet of the prism and beneath all others.
    for d in 3..=4usize {
        let prism = prism_points(d);
        let hull = hull_incidence(&prism)?;
        let c = Rat::new(BigInt::from((1 + d as i64) * 2 + 1), BigInt::from(2 * d as i64));
        let apex: Vec<Rat> = vec![c.clone(); d];
        let beyond: Vec<usize> = (0..hull.facet_planes.len())
            .filter(|&i| position(&apex, &hull.facet_planes[i]) == Position::Beyond)
            .collect();
        suite.eq(format!("cap apex over prism({d}) beyond count"), 1usize, beyond.len());
        if let [only] = beyond[..] {
            suite.eq(
                format!("cap apex over prism({d}) beyond a simplex facet"),
                d,
                hull.polytope.facets()[only].len(),
            );
        }
        let mut capped_points = prism.points.clone();
        capped_points.push(apex);
        let capped = hull_incidence(&VPolytope::new(d, capped_points)?)?.polytope;
        suite.assert(
            format!("capped prism({d}) realization"),
            capped.is_isomorphic(&ctor::capped_prism(d, d)?),
            format!("hull f = {}", fvec(&capped)?),
        );
    }
    Ok(suite.finish())
}

/// The unit square in the first two coordinates with apexes e_3, ..., e_d:
/// a realization of the (d-2)-fold pyramid over the square. Vertex 3 is the
/// simple corner (1, 1, 0, ..., 0).
fn triplex2_points(d: usize) -> VPolytope {
    let mut pts: Vec<Vec<i64>> = vec![vec![0; d], vec![0; d], vec![0; d], vec![0; d]];
    pts[1][0] = 1;
    pts[2][1] = 1;
    pts[3][0] = 1;
    pts[3][1] = 1;
    for i in 2..d {
        let mut p = vec![0; d];
        p[i] = 1;
        pts.push(p);
    }
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    VPolytope::from_integers(d, &refs)
}

/// The simplicial d-prism: simplex e_1, ..., e_d and its translate by the
/// all-ones vector.
fn prism_points(d: usize) -> VPolytope {
    let mut pts: Vec<Vec<i64>> = Vec::new();
    for shift in [0i64, 1] {
        for i in 0..d {
            let mut p = vec![shift; d];
            p[i] += 1;
            pts.push(p);
        }
    }
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    VPolytope::from_integers(d, &refs)
}

/// Multifold pyramids over simple polytopes with at least `2d + 1` vertices
/// and at least `d + 3` facets carry strictly more `k`-faces than the
/// pentasm for `1 <= k <= d - 2`.
fn pyramids_over_simple() -> Result<SuiteReport> {
    let mut suite = Suite::new("pyramids-over-simple");
    let mut bases: Vec<(String, IncidencePolytope)> = Vec::new();
    for n in 5..=12usize {
        bases.push((format!("polygon({n})"), ctor::polygon(n)?));
    }
    bases.push(("cube(3)".into(), ctor::cube(3)?));
    bases.push(("cube(4)".into(), ctor::cube(4)?));
    bases.push(("delta(2, 2, 0)".into(), ctor::delta(2, 2, 0)?));
    bases.push(("delta(2, 3, 0)".into(), ctor::delta(2, 3, 0)?));
    bases.push(("delta(3, 3, 0)".into(), ctor::delta(3, 3, 0)?));
    bases.push((
        "truncate(v=0, cube(3))".into(),
        ctor::truncate_simple_vertex(&ctor::cube(3)?, 0)?,
    ));

    let mut instances = 0usize;
    for (base_name, base) in &bases {
        let base_lattice = enumerate_faces(base)?;
        let simple = vertex_profile(base, &base_lattice)
            .simple_flags
            .iter()
            .all(|&b| b);
        if !simple {
            continue;
        }
        for t in 0..=3usize {
            let p = ctor::pyramid(base, t)?;
            let d = p.dim();
            if d < 3 || p.vertex_count() > 24 {
                continue;
            }
            // hypotheses: at least 2d + 1 vertices, at least d + 3 facets
            if p.vertex_count() < 2 * d + 1 || p.facet_count() < d + 3 {
                continue;
            }
            instances += 1;
            let f = fvec(&p)?;
            let name = format!("pyramid(t={t}, {base_name})");
            suite.assert(
                format!("{name} k=0 weak"),
                f.get(0) >= pentasm_f(0, d as i64)?,
                format!("{} vs {}", f.get(0), pentasm_f(0, d as i64)?),
            );
            suite.assert(
                format!("{name} k={} weak", d - 1),
                f.get(d - 1) >= pentasm_f(d as i64 - 1, d as i64)?,
                format!("{} vs {}", f.get(d - 1), pentasm_f(d as i64 - 1, d as i64)?),
            );
            for k in 1..=d - 2 {
                let pm = pentasm_f(k as i64, d as i64)?;
                suite.assert(
                    format!("{name} k={k} strict"),
                    f.get(k) > pm,
                    format!("pyramid {} vs pentasm {pm}", f.get(k)),
                );
            }
        }
    }
    suite.assert(
        "instances found".to_string(),
        instances >= 10,
        format!("{instances} pyramids satisfied the hypotheses"),
    );
    Ok(suite.finish())
}

/// The minimum-facet function of 4-polytopes and its anchor data.
fn min_facets() -> Result<SuiteReport> {
    let mut suite = Suite::new("min-facets");
    for f0 in 10..=14i64 {
        suite.eq(format!("min_facets_4d({f0})"), 7i64, min_facets_4d(f0)?);
    }
    suite.eq("min_facets_4d(5)".to_string(), 5i64, min_facets_4d(5)?);
    suite.eq("min_facets_4d(15)".to_string(), 8i64, min_facets_4d(15)?);
    suite.eq("min_facets_4d(20)".to_string(), 8i64, min_facets_4d(20)?);
    // The five simple 4-polytopes with 7 facets have 11, 12, 12, 13 and 14
    // vertices; the smallest matches the simple lower bound at m = 7.
    let bruckner = [11i64, 12, 12, 13, 14];
    suite.eq(
        "simple_lbt(0, 4, 7)".to_string(),
        BigInt::from(11),
        simple_lbt(0, 4, 7)?,
    );
    for v in bruckner {
        suite.assert(
            format!("vertex count {v} within range"),
            simple_lbt(0, 4, 7)? <= BigInt::from(v) && min_facets_4d(v)? == 7,
            "consistent with the minimum-facet intervals".to_string(),
        );
    }
    // Interval uniqueness across a broad range.
    let unique = (5..=2000i64).all(|f0| {
        let n = min_facets_4d(f0).unwrap();
        (n - 2) * (n - 3) / 2 <= f0 && f0 <= (n - 1) * (n - 2) / 2 - 1
    });
    suite.assert(
        "interval uniqueness".to_string(),
        unique,
        "binom(n-2,2) <= f0 <= binom(n-1,2)-1 tiles the integers".to_string(),
    );
    Ok(suite.finish())
}

/// Cyclic 4-polytopes: the closed-form facet count and the agreement of the
/// evenness rule with moment-curve hulls.
fn cyclic_suite() -> Result<SuiteReport> {
    let mut suite = Suite::new("cyclic");
    for n in 5..=10usize {
        let c = ctor::cyclic(n, 4)?;
        suite.eq(
            format!("cyclic({n}, 4) facets"),
            cyclic4_facets(n as i64)?,
            BigInt::from(c.facet_count()),
        );
    }
    for n in 5..=8usize {
        for d in [3usize, 4] {
            if n <= d {
                continue;
            }
            let hull = hull_incidence(&moment_curve_points(n, d))?;
            suite.assert(
                format!("cyclic({n}, {d}) matches moment-curve hull"),
                hull.polytope.is_isomorphic(&ctor::cyclic(n, d)?),
                format!("hull facets {}", hull.polytope.facet_count()),
            );
        }
    }
    // Dual counts: the polar of C(7,4) has 14 vertices and 7 facets.
    let dual = polar_dual(&moment_curve_points(7, 4).translated_to_centroid())?;
    let hull = hull_incidence(&dual)?;
    suite.eq(
        "polar of cyclic(7, 4) size".to_string(),
        (14usize, 7usize),
        (hull.polytope.vertex_count(), hull.polytope.facet_count()),
    );
    Ok(suite.finish())
}

/// The counting bound for faces meeting a vertex sequence, anchored on
/// pentasms and capped prisms.
fn xue_bounds() -> Result<SuiteReport> {
    let mut suite = Suite::new("xue-bounds");
    // r = 1 at a simple vertex collapses to binom(d, k).
    for d in 3..=8i64 {
        for k in 2..d {
            suite.eq(
                format!("xue_bound(k={k}, d={d}, deg=d, r=1)"),
                binomial(d, k),
                xue_bound(k, d, d, 1, false)?,
            );
        }
    }
    // Frozen evaluation: phi_1(7, 5) = 19, plus binom(5,2) + binom(4,2).
    suite.eq(
        "xue_bound(2, 6, 7, 3) value".to_string(),
        BigInt::from(35),
        xue_bound(2, 6, 7, 3, true)?,
    );
    suite.eq("phi(1, 7, 5)".to_string(), BigInt::from(19), phi(1, 7, 5)?);

    // The bound never exceeds the actual face count on polytopes with
    // 2d + 1 vertices and a nonsimple vertex of tracked degree.
    for d in 4..=7usize {
        let polytopes: Vec<(String, IncidencePolytope)> = {
            let mut v = vec![(format!("pentasm({d})"), ctor::pentasm(d)?)];
            for ell in 3..=d {
                v.push((format!("capped_prism({ell}, {d})"), ctor::capped_prism(ell, d)?));
            }
            v
        };
        for (name, p) in polytopes {
            let lattice = enumerate_faces(&p)?;
            let f = lattice.f_vector();
            let profile = vertex_profile(&p, &lattice);
            for v in 0..p.vertex_count() {
                let deg = profile.degrees[v] as i64;
                if profile.simple_flags[v] || deg > 2 * (d as i64 - 1) {
                    continue;
                }
                for r in 1..=3i64.min(d as i64) {
                    for k in 2..=(d as i64 - 2) {
                        let bound = xue_bound(k, d as i64, deg, r, true)?;
                        suite.assert(
                            format!("{name} v={v} r={r} k={k} bound"),
                            bound <= f.get(k as usize),
                            format!("bound {bound} vs f_k {}", f.get(k as usize)),
                        );
                    }
                }
            }
        }
    }
    Ok(suite.finish())
}

/// Formula against enumeration for every family with a closed form.
fn fvector_oracle() -> Result<SuiteReport> {
    let mut suite = Suite::new("fvector-oracle");
    // Triplexes attain phi for every k >= 1.
    for d in 2..=8i64 {
        for s in 1..=d {
            let m = ctor::triplex(s as usize, (d - s) as usize)?;
            if m.vertex_count() > 24 {
                continue;
            }
            let f = fvec(&m)?;
            for k in 1..d {
                suite.eq(
                    format!("triplex({s}, {}) k={k} vs phi", d - s),
                    phi(k, d + s, d)?,
                    f.get(k as usize),
                );
            }
        }
    }
    // Delta pyramids match the closed form for every k.
    for r in 1..=7i64 {
        for s in r..=7 {
            for t in 0..=7 {
                let spec = DeltaPyramidSpec { r, s, t };
                let d = spec.dim();
                if d > 8 || spec.vertex_count() > 24 {
                    continue;
                }
                let p = ctor::delta(r as usize, s as usize, t as usize)?;
                suite.eq(
                    format!("delta({r}, {s}, {t}) f-vector"),
                    delta_pyramid_fvector(spec)?,
                    fvec(&p)?,
                );
            }
        }
    }
    // Pentasm closed form.
    for d in 3..=8i64 {
        suite.eq(
            format!("pentasm({d}) f-vector"),
            pentasm_fvector(d)?,
            fvec(&ctor::pentasm(d as usize)?)?,
        );
    }
    // Join and product convolutions on a small library.
    let square = ctor::square();
    let join = ctor::free_join(&square, &square)?;
    suite.eq(
        "free_join(square, square) convolution".to_string(),
        formulas::free_join_fvector(&fvec(&square)?, &fvec(&square)?),
        fvec(&join)?,
    );
    Ok(suite.finish())
}

/// Combinatorial duality everywhere, geometric polarity in low dimension.
fn duality() -> Result<SuiteReport> {
    let mut suite = Suite::new("duality");
    let mut checked = 0usize;
    for entry in desk_corpus() {
        let p = &entry.polytope;
        if p.vertex_count() > 24 || p.dim() < 1 {
            continue;
        }
        let f = fvec(p)?;
        let g = fvec(&p.dual()?)?;
        if g != f.reversed() {
            suite.record(
                format!("dual({}) reversal", entry.name),
                false,
                format!("expected {:?}, actual {g:?}", f.reversed()),
            );
        }
        checked += 1;
    }
    suite.assert(
        "corpus duality reversal".to_string(),
        checked >= 200,
        format!("{checked} polytopes checked"),
    );

    // Geometric polarity agrees with the combinatorial dual.
    let realizations: Vec<(&str, VPolytope)> = vec![
        ("cube(3)", cube_points()),
        ("delta(2, 2, 0)", delta22_points()),
        ("cyclic(7, 4)", moment_curve_points(7, 4)),
        ("pentasm(4)", geometry::pentasm_points(4)),
    ];
    for (name, v) in realizations {
        let centered = v.translated_to_centroid();
        let hull = hull_incidence(&centered)?;
        let polar = hull_incidence(&polar_dual(&centered)?)?;
        suite.assert(
            format!("polar of {name} matches dual incidence"),
            polar.polytope.is_isomorphic(&hull.polytope.dual()?),
            format!(
                "polar f = {}, dual f = {}",
                fvec(&polar.polytope)?,
                fvec(&hull.polytope.dual()?)?
            ),
        );
    }
    Ok(suite.finish())
}

fn cube_points() -> VPolytope {
    let pts: Vec<Vec<i64>> = (0..8)
        .map(|i| vec![i & 1, (i >> 1) & 1, (i >> 2) & 1])
        .collect();
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    VPolytope::from_integers(3, &refs)
}

/// The product of two triangles realized in R^4.
fn delta22_points() -> VPolytope {
    let tri = [[0i64, 0], [1, 0], [0, 1]];
    let mut pts = Vec::new();
    for a in tri {
        for b in tri {
            pts.push(vec![a[0], a[1], b[0], b[1]]);
        }
    }
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    VPolytope::from_integers(4, &refs)
}

/// Euler residual, grading and intersection closure over the whole corpus.
fn lattice_invariants() -> Result<SuiteReport> {
    let mut suite = Suite::new("lattice-invariants");
    let corpus = desk_corpus();
    suite.assert(
        "corpus size".to_string(),
        corpus.len() >= 200,
        format!("{} generated polytopes", corpus.len()),
    );
    let mut euler_failures = Vec::new();
    let mut closure_failures = Vec::new();
    for entry in &corpus {
        let lattice = enumerate_faces(&entry.polytope)?;
        if lattice.f_vector().euler_residual() != BigInt::from(0) {
            euler_failures.push(entry.name.clone());
        }
        if entry.polytope.vertex_count() <= 24 && !lattice.is_intersection_closed() {
            closure_failures.push(entry.name.clone());
        }
    }
    suite.assert(
        "euler residual zero".to_string(),
        euler_failures.is_empty(),
        format!("failures: {euler_failures:?}"),
    );
    suite.assert(
        "intersection closure".to_string(),
        closure_failures.is_empty(),
        format!("failures: {closure_failures:?}"),
    );
    Ok(suite.finish())
}

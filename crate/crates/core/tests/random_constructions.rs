//! Randomized construction trees: whatever the expression language can
//! build must satisfy the lattice invariants, and the canonical text form
//! must round-trip through the parser.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use polyface::expr::ConstructionExpr;
use polyface::gale::{diagram_from_json, diagram_to_json, GaleDiagram2D};
use polyface::geometry::{points_from_json, points_to_json, Rat, VPolytope};
use polyface::{enumerate_faces, vertex_profile};

/// Leaf constructions, kept small so composite trees stay at desk scale.
fn leaf() -> impl Strategy<Value = ConstructionExpr> {
    prop_oneof![
        (1u32..=4).prop_map(|d| ConstructionExpr::Simplex { d }),
        (3u32..=6).prop_map(|n| ConstructionExpr::Polygon { n }),
        Just(ConstructionExpr::Square),
        Just(ConstructionExpr::Segment),
        (1u32..=2, 1u32..=2, 0u32..=1).prop_map(|(r, s, t)| ConstructionExpr::Delta { r, s, t }),
        (1u32..=3, 0u32..=2).prop_map(|(s, t)| ConstructionExpr::Triplex { s, t }),
        (3u32..=5).prop_map(|d| ConstructionExpr::Pentasm { d }),
        (5u32..=8).prop_map(|n| ConstructionExpr::Cyclic { n, d: 4 }),
    ]
}

fn tree() -> impl Strategy<Value = ConstructionExpr> {
    leaf().prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), 0u32..=2).prop_map(|(base, t)| ConstructionExpr::Pyramid {
                base: Box::new(base),
                t,
            }),
            inner.clone().prop_map(|base| ConstructionExpr::Bipyramid {
                base: Box::new(base),
            }),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| ConstructionExpr::Product(Box::new(a), Box::new(b))),
            (inner.clone(), inner)
                .prop_map(|(a, b)| ConstructionExpr::FreeJoin(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_constructions_satisfy_invariants(expr in tree()) {
        let Ok(p) = expr.eval() else {
            // Oversized trees hit the vertex cap; that is fine.
            return Ok(());
        };
        if p.vertex_count() > 24 || p.dim() > 8 {
            return Ok(());
        }
        let lattice = enumerate_faces(&p).unwrap();
        let f = lattice.f_vector();
        prop_assert_eq!(f.euler_residual(), BigInt::zero());
        if p.dim() >= 2 {
            let profile = vertex_profile(&p, &lattice);
            let degree_sum: usize = profile.degrees.iter().sum();
            prop_assert_eq!(BigInt::from(degree_sum), f.get(1) * 2);
        }
        if p.facet_count() <= 24 {
            let dual_f = enumerate_faces(&p.dual().unwrap()).unwrap().f_vector();
            prop_assert_eq!(dual_f, f.reversed());
        }
    }

    #[test]
    fn expression_text_round_trips(expr in tree()) {
        let text = expr.to_string();
        let reparsed = ConstructionExpr::parse(&text).unwrap();
        prop_assert_eq!(reparsed, expr);
    }

    #[test]
    fn rational_point_json_round_trips(
        coords in proptest::collection::vec(
            proptest::collection::vec((-50i64..=50, 1i64..=20), 2),
            1..6,
        )
    ) {
        let points: Vec<Vec<Rat>> = coords
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&(num, den)| Rat::new(num.into(), den.into()))
                    .collect()
            })
            .collect();
        let v = VPolytope::new(2, points).unwrap();
        let json = points_to_json(&v);
        prop_assert_eq!(points_from_json(&json).unwrap(), v);
    }

    #[test]
    fn gale_json_round_trips(
        raw in proptest::collection::vec(((-9i64..=9), (-9i64..=9)), 5..=9),
        origin in 0usize..=2,
    ) {
        let dirs: Vec<[Rat; 2]> = raw
            .iter()
            .filter(|&&(x, y)| x != 0 || y != 0)
            .map(|&(x, y)| [Rat::from(BigInt::from(x)), Rat::from(BigInt::from(y))])
            .collect();
        if dirs.len() + origin < 5 {
            return Ok(());
        }
        let d = dirs.len() + origin - 3;
        if d < 2 {
            return Ok(());
        }
        let g = GaleDiagram2D::new(d, origin, dirs).unwrap();
        let json = diagram_to_json(&g);
        prop_assert_eq!(diagram_from_json(&json).unwrap(), g);
    }
}

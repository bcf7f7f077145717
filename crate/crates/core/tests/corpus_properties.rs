//! Invariant sweep over the full generator corpus: every constructed
//! polytope must close under Euler's relation, grade correctly, reverse its
//! f-vector under duality, and satisfy the degree-sum and missing-edge
//! accounting identities.

use num_bigint::BigInt;
use num_traits::Zero;
use polyface::corpus::desk_corpus;
use polyface::formulas::binomial;
use polyface::{enumerate_faces, vertex_profile};

#[test]
fn corpus_invariants() {
    let corpus = desk_corpus();
    assert!(corpus.len() >= 200);
    for entry in &corpus {
        let p = &entry.polytope;
        let name = &entry.name;
        let d = p.dim();
        let n = p.vertex_count();
        let lattice = enumerate_faces(p).unwrap_or_else(|e| panic!("{name}: {e}"));
        let f = lattice.f_vector();

        assert_eq!(f.euler_residual(), BigInt::zero(), "{name}");
        assert_eq!(f.get(0), BigInt::from(n), "{name}");
        if d >= 1 {
            assert_eq!(f.get(d - 1), BigInt::from(p.facet_count()), "{name}");
            // every entry at least d + 1 for valid polytopes
            for k in 0..d {
                assert!(f.get(k) >= BigInt::from(d + 1), "{name} k={k}");
            }
        }

        // The graph identities concern proper edges, so they start at d = 2.
        if d >= 2 {
            let profile = vertex_profile(p, &lattice);
            // handshake: degree sum is twice the edge count, odd degrees even
            let degree_sum: usize = profile.degrees.iter().sum();
            assert_eq!(BigInt::from(degree_sum), f.get(1) * 2, "{name}");
            let odd = profile.degrees.iter().filter(|&&x| x % 2 == 1).count();
            assert_eq!(odd % 2, 0, "{name}");
            // simplicity via degrees matches simplicity via facet membership
            for v in 0..n {
                assert_eq!(
                    profile.degrees[v] == d,
                    profile.facet_counts[v] == d,
                    "{name} vertex {v}"
                );
            }
            // missing-edge count = binom(n, 2) - f_1
            assert_eq!(
                BigInt::from(profile.missing_edges.len()),
                binomial(n as i64, 2) - f.get(1),
                "{name}"
            );
        }
    }
}

#[test]
fn corpus_intersection_closure() {
    // Exhaustive pairwise-intersection membership for every corpus entry
    // with at most 24 vertices (all of them, by construction).
    for entry in desk_corpus() {
        if entry.polytope.vertex_count() > 24 {
            continue;
        }
        let lattice = enumerate_faces(&entry.polytope).unwrap();
        assert!(lattice.is_intersection_closed(), "{}", entry.name);
    }
}

#[test]
fn corpus_duality() {
    for entry in desk_corpus() {
        let p = &entry.polytope;
        if p.vertex_count() > 24 || p.facet_count() > 24 {
            continue;
        }
        let f = enumerate_faces(p).unwrap().f_vector();
        let dual = p.dual().unwrap_or_else(|e| panic!("{}: {e}", entry.name));
        let g = enumerate_faces(&dual).unwrap().f_vector();
        assert_eq!(g, f.reversed(), "{}", entry.name);
    }
}

//! The desk-scale generator corpus: every family the crate builds,
//! instantiated across its tested parameter range (at most 24 vertices,
//! dimension at most 8). Check suites and property tests run over this
//! corpus, so it lives in the library rather than in test code.

use crate::constructors as ctor;
use crate::incidence::IncidencePolytope;

/// A named polytope of the corpus; the name is the canonical construction
/// expression that produced it.
pub struct CorpusEntry {
    pub name: String,
    pub polytope: IncidencePolytope,
}

fn push(out: &mut Vec<CorpusEntry>, name: String, polytope: IncidencePolytope) {
    out.push(CorpusEntry { name, polytope });
}

/// Builds the full corpus. Deterministic: same list, same order, every run.
pub fn desk_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    for d in 1..=8usize {
        push(&mut out, format!("simplex({d})"), ctor::simplex(d));
    }
    for n in 3..=12usize {
        push(&mut out, format!("polygon({n})"), ctor::polygon(n).unwrap());
    }
    for d in 2..=4usize {
        push(&mut out, format!("cube({d})"), ctor::cube(d).unwrap());
    }

    // Triplexes M(s, t) with dimension at most 8: d + s <= 24 always holds.
    for s in 1..=8usize {
        for t in 0..=(8 - s) {
            push(&mut out, format!("triplex({s}, {t})"), ctor::triplex(s, t).unwrap());
        }
    }

    // Multifold pyramids over products of simplices, at most 24 vertices.
    for r in 1..=7usize {
        for s in r..=7 {
            for t in 0..=7 {
                let d = r + s + t;
                let vertices = (r + 1) * (s + 1) + t;
                if d > 8 || vertices > 24 {
                    continue;
                }
                push(
                    &mut out,
                    format!("delta({r}, {s}, {t})"),
                    ctor::delta(r, s, t).unwrap(),
                );
            }
        }
    }

    for d in 3..=8usize {
        push(&mut out, format!("pentasm({d})"), ctor::pentasm(d).unwrap());
    }
    for d in 3..=8usize {
        for ell in 3..=d {
            push(
                &mut out,
                format!("capped_prism({ell}, {d})"),
                ctor::capped_prism(ell, d).unwrap(),
            );
        }
    }

    // Bipyramids and their pyramids (the capped-prism bases).
    for ell in 2..=7usize {
        let bp = ctor::bipyramid(&ctor::simplex(ell - 1)).unwrap();
        push(&mut out, format!("bipyramid(simplex({}))", ell - 1), bp.clone());
        for t in 1..=(8 - ell).min(3) {
            push(
                &mut out,
                format!("pyramid(t={t}, bipyramid(simplex({})))", ell - 1),
                ctor::pyramid(&bp, t).unwrap(),
            );
        }
    }
    let octahedron = ctor::bipyramid(&ctor::square()).unwrap();
    push(&mut out, "bipyramid(square())".into(), octahedron.clone());
    push(
        &mut out,
        "pyramid(t=1, bipyramid(square()))".into(),
        ctor::pyramid(&octahedron, 1).unwrap(),
    );

    // Pyramids over polygons and cubes.
    for n in 4..=10usize {
        push(
            &mut out,
            format!("pyramid(t=1, polygon({n}))"),
            ctor::pyramid(&ctor::polygon(n).unwrap(), 1).unwrap(),
        );
    }
    for d in 2..=3usize {
        for t in 1..=3usize {
            push(
                &mut out,
                format!("pyramid(t={t}, cube({d}))"),
                ctor::pyramid(&ctor::cube(d).unwrap(), t).unwrap(),
            );
        }
    }

    // Free joins of small polytopes.
    let small: Vec<(String, IncidencePolytope)> = vec![
        ("point()".into(), ctor::point()),
        ("segment()".into(), ctor::segment()),
        ("square()".into(), ctor::square()),
        ("simplex(2)".into(), ctor::simplex(2)),
        ("simplex(3)".into(), ctor::simplex(3)),
        ("polygon(5)".into(), ctor::polygon(5).unwrap()),
        ("cube(3)".into(), ctor::cube(3).unwrap()),
    ];
    for (an, a) in &small {
        for (bn, b) in &small {
            let joined = ctor::free_join(a, b).unwrap();
            if joined.dim() <= 8 && joined.vertex_count() <= 24 {
                push(&mut out, format!("free_join({an}, {bn})"), joined);
            }
        }
    }

    // Products beyond the delta family.
    for (an, a) in &small[1..] {
        for (bn, b) in &small[1..] {
            if let Ok(p) = ctor::product(a, b) {
                if p.dim() <= 8 && p.vertex_count() <= 24 {
                    push(&mut out, format!("product({an}, {bn})"), p);
                }
            }
        }
    }

    // Cyclic polytopes.
    for d in 2..=6usize {
        for n in d + 1..=10 {
            push(&mut out, format!("cyclic({n}, {d})"), ctor::cyclic(n, d).unwrap());
        }
    }

    // Truncations of simple vertices.
    push(
        &mut out,
        "truncate(v=0, simplex(3))".into(),
        ctor::truncate_simple_vertex(&ctor::simplex(3), 0).unwrap(),
    );
    push(
        &mut out,
        "truncate(v=0, cube(3))".into(),
        ctor::truncate_simple_vertex(&ctor::cube(3).unwrap(), 0).unwrap(),
    );
    for d in 3..=6usize {
        push(
            &mut out,
            format!("truncate(v=0, triplex(2, {}))", d - 2),
            ctor::truncate_simple_vertex(&ctor::triplex(2, d - 2).unwrap(), 0).unwrap(),
        );
    }

    push(&mut out, "sigma3()".into(), ctor::sigma3());

    // Duals of the small cases close the corpus under duality.
    let duals: Vec<CorpusEntry> = out
        .iter()
        .filter(|e| e.polytope.vertex_count() <= 14 && e.polytope.facet_count() <= 14)
        .map(|e| CorpusEntry {
            name: format!("dual({})", e.name),
            polytope: e.polytope.dual().unwrap(),
        })
        .collect();
    out.extend(duals);

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_large_and_in_scope() {
        let corpus = desk_corpus();
        assert!(corpus.len() >= 200, "corpus has {} entries", corpus.len());
        for e in &corpus {
            assert!(e.polytope.vertex_count() <= 30, "{}", e.name);
            assert!(e.polytope.dim() <= 8, "{}", e.name);
        }
    }
}

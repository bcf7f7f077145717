//! The minimiser scan: for every dimension `d` up to a bound, compare the
//! pentasm face counts against every candidate with `d + 2` facets and
//! `2d + 1` vertices, and verify the prime/composite dichotomy.
//!
//! Candidates are the `(d - r - s)`-fold pyramids over a product of an
//! `r`-simplex and an `s`-simplex with `rs = d` and `2 <= r <= s`: exactly
//! the polytopes with `d + 2` facets and `2d + 1` vertices. For prime `d`
//! the candidate set is empty (no such polytope exists), so the pentasm is
//! the only contender.
//!
//! For composite `d >= 6` the scan verifies, per `k` in `[1, d-2]`:
//!
//! - the minimum of `f_k` over pentasm and candidates is attained by the
//!   pentasm or by the candidate whose `r` is the smallest prime factor of
//!   `d` (ties allowed);
//! - the comparison flips exactly once: the pentasm is strictly minimal up
//!   to a threshold `k = t(d)` and never strictly minimal after it.
//!
//! The observed threshold is reported next to `floor(d / 2)` in every
//! summary row rather than being assumed: direct evaluation of the two
//! closed forms puts the crossover near, but not at, `d / 2` (for example
//! at `d = 6` the candidate pyramid already wins at `k = 2`), so the scan
//! records where the flip happens instead of hard-coding a boundary.
//!
//! `d = 4` is the documented exception: the product of two triangles beats
//! the pentasm in every dimension `k <= d - 2`, so the scan asserts that
//! known reversal explicitly and reports the rows with exception status.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use polyface::error::{Error, Result};
use polyface::formulas::{delta_pyramid_f, pentasm_f, DeltaPyramidSpec};

/// Everything the scan records for one `(d, k)` pair.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub d: i64,
    pub k: i64,
    pub pentasm: BigInt,
    /// One value per candidate, aligned with `ScanDimension::candidates`.
    pub candidate_values: Vec<BigInt>,
    /// The computed minimum over pentasm and all candidates.
    pub psi: BigInt,
    /// Identifiers of every polytope attaining `psi`.
    pub minimisers: Vec<String>,
    pub status: RowStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    /// The pentasm is the unique minimiser.
    PentasmMin,
    /// The smallest-prime-factor candidate is minimal (possibly tied).
    DeltaMin,
    /// Pentasm and best candidate tie exactly.
    Tie,
    /// Documented `d = 4` exception rows.
    Exception,
}

impl RowStatus {
    pub fn name(self) -> &'static str {
        match self {
            RowStatus::PentasmMin => "pentasm-min",
            RowStatus::DeltaMin => "delta-min",
            RowStatus::Tie => "tie",
            RowStatus::Exception => "exception-d4",
        }
    }
}

/// Scan outcome for a single dimension.
#[derive(Debug, Clone)]
pub struct ScanDimension {
    pub d: i64,
    pub prime: bool,
    pub candidates: Vec<DeltaPyramidSpec>,
    pub rows: Vec<ScanRow>,
    /// Largest `k` at which the pentasm is strictly minimal (0 when none).
    pub threshold: i64,
    /// Minimum facet count over the contenders: `d + 2` when a candidate
    /// exists, `d + 3` otherwise.
    pub psi_facets: i64,
    pub pass: bool,
    /// Human-readable reason when `pass` is false.
    pub failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub dmax: i64,
    pub dimensions: Vec<ScanDimension>,
    pub pass: bool,
}

fn is_prime(d: i64) -> bool {
    if d < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= d {
        if d % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

/// All `(r, s, t)` with `r + s + t = d`, `r, s >= 1`, `t >= 0` and
/// `(r+1)(s+1) + t = 2d + 1`, up to swapping `r` and `s`. The vertex-count
/// equation forces `rs = d`, so these are exactly the nontrivial divisor
/// pairs; the enumeration checks the equation directly rather than
/// assuming that.
pub fn candidates_for(d: i64) -> Vec<DeltaPyramidSpec> {
    let mut out = Vec::new();
    for r in 1..=d {
        for s in r..=(d - r) {
            let t = d - r - s;
            let spec = DeltaPyramidSpec { r, s, t };
            if spec.vertex_count() == 2 * d + 1 {
                debug_assert_eq!(r * s, d);
                out.push(spec);
            }
        }
    }
    out
}

fn spec_name(spec: &DeltaPyramidSpec) -> String {
    format!("delta({}, {}, {})", spec.r, spec.s, spec.t)
}

fn scan_dimension(d: i64) -> Result<ScanDimension> {
    let prime = is_prime(d);
    let candidates = candidates_for(d);
    let mut failure: Option<String> = None;

    if prime && !candidates.is_empty() {
        failure = Some(format!(
            "d = {d} is prime but a polytope with d + 2 facets and 2d + 1 vertices exists"
        ));
    }
    if !prime && d >= 4 && candidates.is_empty() {
        failure = Some(format!("d = {d} is composite but no candidate was found"));
    }

    let mut rows = Vec::new();
    let mut threshold = 0i64;
    let mut seen_non_pentasm = false;

    for k in 1..=d - 2 {
        let pentasm = pentasm_f(k, d)?;
        let candidate_values: Vec<BigInt> = candidates
            .iter()
            .map(|spec| delta_pyramid_f(k, *spec))
            .collect::<Result<_>>()?;
        let best_candidate = candidate_values.iter().min().cloned();
        let psi = match &best_candidate {
            Some(c) => pentasm.clone().min(c.clone()),
            None => pentasm.clone(),
        };
        let mut minimisers = Vec::new();
        if pentasm == psi {
            minimisers.push("pentasm".to_string());
        }
        for (spec, value) in candidates.iter().zip(&candidate_values) {
            if *value == psi {
                minimisers.push(spec_name(spec));
            }
        }

        let status = if d == 4 {
            RowStatus::Exception
        } else {
            match best_candidate.as_ref().map(|c| pentasm.cmp(c)) {
                None | Some(Ordering::Less) => RowStatus::PentasmMin,
                Some(Ordering::Equal) => RowStatus::Tie,
                Some(Ordering::Greater) => RowStatus::DeltaMin,
            }
        };

        if d != 4 && !candidates.is_empty() {
            match status {
                RowStatus::PentasmMin => {
                    if seen_non_pentasm {
                        failure.get_or_insert(format!(
                            "d = {d}: pentasm regains the strict minimum at k = {k}"
                        ));
                    } else {
                        threshold = k;
                    }
                }
                _ => {
                    seen_non_pentasm = true;
                    // The smallest-prime-factor candidate must attain the
                    // candidate minimum whenever the pentasm does not win.
                    if candidate_values[0] != *best_candidate.as_ref().unwrap() {
                        failure.get_or_insert(format!(
                            "d = {d}, k = {k}: candidate {} is beaten by another candidate",
                            spec_name(&candidates[0])
                        ));
                    }
                }
            }
        }

        rows.push(ScanRow {
            d,
            k,
            pentasm,
            candidate_values,
            psi,
            minimisers,
            status,
        });
    }

    if d == 4 {
        // Documented exception: the product of two triangles has 18 edges,
        // one fewer than the 4-pentasm, and stays below it at k = 2.
        let delta22 = DeltaPyramidSpec { r: 2, s: 2, t: 0 };
        for (k, expected_delta, expected_pentasm) in [(1i64, 18i64, 19i64), (2, 15, 17)] {
            if delta_pyramid_f(k, delta22)? != BigInt::from(expected_delta)
                || pentasm_f(k, 4)? != BigInt::from(expected_pentasm)
            {
                failure.get_or_insert(format!("d = 4 exception data mismatch at k = {k}"));
            }
        }
    }

    let psi_facets = if candidates.is_empty() { d + 3 } else { d + 2 };
    Ok(ScanDimension {
        d,
        prime,
        candidates,
        rows,
        threshold,
        psi_facets,
        pass: failure.is_none(),
        failure,
    })
}

/// Runs the scan for every `d` in `[4, dmax]`.
pub fn conjecture_scan(dmax: i64) -> Result<ScanReport> {
    if dmax < 4 {
        return Err(Error::DomainError(format!(
            "scan requires dmax >= 4, got {dmax}"
        )));
    }
    let dimensions: Vec<ScanDimension> =
        (4..=dmax).map(scan_dimension).collect::<Result<_>>()?;
    let pass = dimensions.iter().all(|s| s.pass);
    Ok(ScanReport {
        dmax,
        dimensions,
        pass,
    })
}

impl ScanReport {
    /// Flat CSV: one row per `(d, k, candidate)`, prime dimensions reduced
    /// to a single row documenting candidate emptiness. Byte-deterministic.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("d,k,candidate,candidate_value,pentasm_value,psi_k,minimisers,status\n");
        for dim in &self.dimensions {
            if dim.candidates.is_empty() {
                let _ = writeln!(
                    out,
                    "{},-,none,-,-,-,pentasm,prime-no-candidates",
                    dim.d
                );
                continue;
            }
            for row in &dim.rows {
                for (spec, value) in dim.candidates.iter().zip(&row.candidate_values) {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{}",
                        row.d,
                        row.k,
                        spec_name(spec).replace(' ', ""),
                        value,
                        row.pentasm,
                        row.psi,
                        row.minimisers.join(";").replace(' ', ""),
                        row.status.name(),
                    );
                }
            }
        }
        out
    }

    /// Nested JSON with per-dimension summaries and observed thresholds.
    pub fn to_json(&self) -> String {
        let dims: Vec<serde_json::Value> = self
            .dimensions
            .iter()
            .map(|dim| {
                let rows: Vec<serde_json::Value> = dim
                    .rows
                    .iter()
                    .map(|row| {
                        serde_json::json!({
                            "k": row.k,
                            "pentasm": row.pentasm.to_string(),
                            "candidates": dim
                                .candidates
                                .iter()
                                .zip(&row.candidate_values)
                                .map(|(spec, v)| {
                                    serde_json::json!({
                                        "r": spec.r,
                                        "s": spec.s,
                                        "t": spec.t,
                                        "value": v.to_string(),
                                    })
                                })
                                .collect::<Vec<_>>(),
                            "psi": row.psi.to_string(),
                            "minimisers": row.minimisers,
                            "status": row.status.name(),
                        })
                    })
                    .collect();
                serde_json::json!({
                    "d": dim.d,
                    "prime": dim.prime,
                    "psi_facets": dim.psi_facets,
                    "pentasm_facets": dim.d + 3,
                    "observed_threshold": dim.threshold,
                    "half_d": dim.d / 2,
                    "pass": dim.pass,
                    "failure": dim.failure,
                    "rows": rows,
                })
            })
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "dmax": self.dmax,
            "pass": self.pass,
            "dimensions": dims,
        }))
        .expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use polyface::constructors;
    use polyface::enumerate_faces;

    #[test]
    fn candidate_sets() {
        assert!(candidates_for(5).is_empty());
        assert!(candidates_for(7).is_empty());
        assert_eq!(candidates_for(6), vec![DeltaPyramidSpec { r: 2, s: 3, t: 1 }]);
        assert_eq!(
            candidates_for(12),
            vec![
                DeltaPyramidSpec { r: 2, s: 6, t: 4 },
                DeltaPyramidSpec { r: 3, s: 4, t: 5 },
            ]
        );
        // Every candidate has 2d + 1 vertices by construction.
        for spec in candidates_for(36) {
            assert_eq!(spec.vertex_count(), 73);
        }
    }

    #[test]
    fn scan_to_100_passes() {
        let report = conjecture_scan(100).unwrap();
        assert!(report.pass, "{:?}", report
            .dimensions
            .iter()
            .filter(|d| !d.pass)
            .map(|d| d.failure.clone())
            .collect::<Vec<_>>());
        assert_eq!(report.dimensions.len(), 97);
    }

    #[test]
    fn observed_thresholds() {
        let report = conjecture_scan(25).unwrap();
        let by_d = |d: i64| {
            report
                .dimensions
                .iter()
                .find(|s| s.d == d)
                .unwrap()
        };
        // Direct evaluation of the closed forms: the flip happens below
        // floor(d/2) for even d with smallest prime factor 2 ...
        assert_eq!(by_d(6).threshold, 1);
        assert_eq!(by_d(8).threshold, 2);
        assert_eq!(by_d(10).threshold, 3);
        assert_eq!(by_d(12).threshold, 4);
        // ... at floor(d/2) for d = 15, and above it for d = 25.
        assert_eq!(by_d(15).threshold, 7);
        assert_eq!(by_d(25).threshold, 14);
        // d = 9 has an exact tie at k = 4.
        let d9 = by_d(9);
        assert_eq!(d9.threshold, 3);
        assert_eq!(d9.rows[3].status, RowStatus::Tie);
        assert_eq!(d9.rows[3].minimisers.len(), 2);
    }

    #[test]
    fn scan_rows_match_enumeration_at_d6() {
        // Ground truth by full face enumeration of both contenders.
        let report = conjecture_scan(6).unwrap();
        let d6 = report.dimensions.iter().find(|s| s.d == 6).unwrap();
        let pentasm = enumerate_faces(&constructors::pentasm(6).unwrap())
            .unwrap()
            .f_vector();
        let delta = enumerate_faces(&constructors::delta(2, 3, 1).unwrap())
            .unwrap()
            .f_vector();
        for row in &d6.rows {
            let k = row.k as usize;
            assert_eq!(row.pentasm, pentasm.get(k));
            assert_eq!(row.candidate_values[0], delta.get(k));
        }
        // The documented flip: pentasm wins edges, the pyramid wins k >= 2.
        assert_eq!(d6.rows[0].status, RowStatus::PentasmMin);
        assert_eq!(d6.rows[1].status, RowStatus::DeltaMin);
    }

    #[test]
    fn csv_is_deterministic_and_decimal() {
        let a = conjecture_scan(20).unwrap().to_csv();
        let b = conjecture_scan(20).unwrap().to_csv();
        assert_eq!(a, b);
        assert!(a.starts_with("d,k,candidate"));
        assert!(a.lines().any(|l| l.starts_with("5,-,none")));
        assert!(a.lines().any(|l| l.starts_with("6,1,delta(2,3,1),42,41,41,pentasm,")));
    }

    #[test]
    fn prime_dimensions_have_no_candidates() {
        let report = conjecture_scan(100).unwrap();
        for dim in &report.dimensions {
            assert_eq!(dim.prime, dim.candidates.is_empty(), "d = {}", dim.d);
            assert_eq!(
                dim.psi_facets,
                if dim.prime { dim.d + 3 } else { dim.d + 2 }
            );
        }
        assert!(conjecture_scan(3).is_err());
    }

    #[test]
    fn euler_holds_for_scan_values() {
        // The scan's closed forms satisfy Euler's relation dimension-wise.
        use polyface::formulas::{delta_pyramid_fvector, pentasm_fvector};
        for d in 4..=40i64 {
            assert_eq!(pentasm_fvector(d).unwrap().euler_residual(), BigInt::zero());
            for spec in candidates_for(d) {
                assert_eq!(
                    delta_pyramid_fvector(spec).unwrap().euler_residual(),
                    BigInt::zero(),
                    "d = {d}"
                );
            }
        }
    }
}

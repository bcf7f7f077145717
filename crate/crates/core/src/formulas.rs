//! Closed-form face-count formulas and lower-bound calculators, all over
//! arbitrary-precision integers.
//!
//! Everything here is a pure function of small integer parameters. Binomials
//! follow the convention `binom(a, b) = 0` whenever `b < 0` or `a < b`, which
//! makes each formula total on its stated domain (the pyramid-over-product
//! count relies on this at small `r`, `s`).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fvector::FVector;

/// `binom(a, b)` with zero outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 1..=b {
        acc = acc * BigInt::from(a - b + i) / BigInt::from(i);
    }
    acc
}

/// Minimum number of `k`-faces of a `d`-polytope with `n = d + s` vertices,
/// `1 <= s <= d`:
/// `binom(d+1, k+1) + binom(d, k+1) - binom(d+1-s, k+1)`.
pub fn phi(k: i64, n: i64, d: i64) -> Result<BigInt> {
    let s = n - d;
    if s < 1 || s > d {
        return Err(Error::DomainError(format!(
            "phi requires d+1 <= n <= 2d, got n = {n}, d = {d}"
        )));
    }
    Ok(binomial(d + 1, k + 1) + binomial(d, k + 1) - binomial(d + 1 - s, k + 1))
}

/// Lower bound on `f_k` of a simple `d`-polytope with `m` facets.
pub fn simple_lbt(k: i64, d: i64, m: i64) -> Result<BigInt> {
    if d < 2 || m < d + 1 || k < 0 || k > d - 2 {
        return Err(Error::DomainError(format!(
            "simple_lbt requires d >= 2, m >= d+1, 0 <= k <= d-2, got k = {k}, d = {d}, m = {m}"
        )));
    }
    if k == 0 {
        Ok(BigInt::from(d - 1) * BigInt::from(m) - BigInt::from((d + 1) * (d - 2)))
    } else {
        Ok(binomial(d, k + 1) * BigInt::from(m) - binomial(d + 1, k + 1) * BigInt::from(d - 1 - k))
    }
}

/// Number of `k`-faces of the `d`-pentasm: `2d + 1` vertices, and
/// `binom(d+1, k+1) + binom(d, k+1) + binom(d-1, k)` for `k >= 1`.
pub fn pentasm_f(k: i64, d: i64) -> Result<BigInt> {
    if d < 3 || k < 0 || k > d - 1 {
        return Err(Error::DomainError(format!(
            "pentasm_f requires d >= 3 and 0 <= k <= d-1, got k = {k}, d = {d}"
        )));
    }
    if k == 0 {
        Ok(BigInt::from(2 * d + 1))
    } else {
        Ok(binomial(d + 1, k + 1) + binomial(d, k + 1) + binomial(d - 1, k))
    }
}

/// The full pentasm f-vector `(f_0, …, f_{d-1})`.
pub fn pentasm_fvector(d: i64) -> Result<FVector> {
    Ok(FVector::new(
        (0..d).map(|k| pentasm_f(k, d)).collect::<Result<_>>()?,
    ))
}

/// Parameters of a `t`-fold pyramid over a product of an `r`-simplex and an
/// `s`-simplex. Such polytopes have dimension `r + s + t`, exactly
/// `(r+1)(s+1) + t` vertices and `d + 2` facets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeltaPyramidSpec {
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl DeltaPyramidSpec {
    pub fn new(r: i64, s: i64, t: i64) -> Result<Self> {
        if r < 1 || s < 1 || t < 0 || r + s + t < 2 {
            return Err(Error::DomainError(format!(
                "delta pyramid requires r, s >= 1 and t >= 0, got ({r}, {s}, {t})"
            )));
        }
        Ok(DeltaPyramidSpec { r, s, t })
    }

    pub fn dim(&self) -> i64 {
        self.r + self.s + self.t
    }

    pub fn vertex_count(&self) -> i64 {
        (self.r + 1) * (self.s + 1) + self.t
    }
}

/// Number of `k`-faces of the `t`-fold pyramid over the product of an
/// `r`-simplex and an `s`-simplex:
/// `binom(r+s+t+2, k+2) - binom(s+t+1, k+2) - binom(r+t+1, k+2) + binom(t+1, k+2)`.
pub fn delta_pyramid_f(k: i64, spec: DeltaPyramidSpec) -> Result<BigInt> {
    let d = spec.dim();
    if k < 0 || k > d - 1 {
        return Err(Error::DomainError(format!(
            "delta_pyramid_f requires 0 <= k <= d-1, got k = {k}, d = {d}"
        )));
    }
    let (r, s, t) = (spec.r, spec.s, spec.t);
    Ok(binomial(r + s + t + 2, k + 2)
        - binomial(s + t + 1, k + 2)
        - binomial(r + t + 1, k + 2)
        + binomial(t + 1, k + 2))
}

/// The full f-vector of a delta pyramid.
pub fn delta_pyramid_fvector(spec: DeltaPyramidSpec) -> Result<FVector> {
    Ok(FVector::new(
        (0..spec.dim())
            .map(|k| delta_pyramid_f(k, spec))
            .collect::<Result<_>>()?,
    ))
}

/// Facet count `n(n-3)/2` of a cyclic 4-polytope with `n` vertices.
pub fn cyclic4_facets(n: i64) -> Result<BigInt> {
    if n < 5 {
        return Err(Error::DomainError(format!(
            "cyclic4_facets requires n >= 5, got {n}"
        )));
    }
    Ok(BigInt::from(n) * BigInt::from(n - 3) / BigInt::from(2))
}

/// Minimum facet count of a 4-polytope with `f0` vertices: the unique `n`
/// with `binom(n-2, 2) <= f0 <= binom(n-1, 2) - 1`.
pub fn min_facets_4d(f0: i64) -> Result<i64> {
    if f0 < 5 {
        return Err(Error::DomainError(format!(
            "min_facets_4d requires f0 >= 5, got {f0}"
        )));
    }
    let mut n = 5;
    loop {
        let lo = (n - 2) * (n - 3) / 2;
        let hi = (n - 1) * (n - 2) / 2 - 1;
        if lo <= f0 && f0 <= hi {
            return Ok(n);
        }
        n += 1;
    }
}

/// Lower bound on the number of `k`-faces meeting a sequence of `r` distinct
/// vertices led by a vertex `v` of degree `deg_v`:
/// `phi_{k-1}(deg_v, d-1) + Σ_{i=2}^{r} binom(d-i+1, k)`.
///
/// With `v_nonsimple` set, `deg_v >= d + 1` is required, and the returned
/// value then dominates `binom(d,k) + binom(d-1,k) - binom(d-2,k) + Σ…`.
pub fn xue_bound(k: i64, d: i64, deg_v: i64, r: i64, v_nonsimple: bool) -> Result<BigInt> {
    if r < 1 || r > d || k < 2 || deg_v < d || deg_v > 2 * (d - 1) {
        return Err(Error::DomainError(format!(
            "xue_bound requires 1 <= r <= d, k >= 2, d <= deg_v <= 2(d-1); \
             got k = {k}, d = {d}, deg_v = {deg_v}, r = {r}"
        )));
    }
    if v_nonsimple && deg_v < d + 1 {
        return Err(Error::DomainError(
            "a nonsimple vertex has degree at least d + 1".into(),
        ));
    }
    let mut total = phi(k - 1, deg_v, d - 1)?;
    for i in 2..=r {
        total += binomial(d - i + 1, k);
    }
    Ok(total)
}

/// f-vector of a one-fold pyramid: `f'_k = f_k + f_{k-1}`, where `f_{-1} = 1`
/// (the apex) and the base polytope itself counts as the new `d`-face.
pub fn pyramid_fvector(base: &FVector) -> FVector {
    let d = base.dim();
    let mut counts = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let apex_side = if k == 0 { BigInt::one() } else { base.get(k - 1) };
        let base_side = if k == d { BigInt::one() } else { base.get(k) };
        counts.push(base_side + apex_side);
    }
    FVector::new(counts)
}

/// f-vector of a product: `f_k = Σ_{a+b=k} f_a f_b`, where each factor's
/// improper face participates except for the pair of both improper faces.
pub fn product_fvector(p: &FVector, q: &FVector) -> FVector {
    let (dp, dq) = (p.dim(), q.dim());
    let term = |f: &FVector, a: isize, d: usize| -> BigInt {
        if a < 0 {
            BigInt::zero()
        } else if a as usize == d {
            BigInt::one()
        } else if (a as usize) < d {
            f.get(a as usize)
        } else {
            BigInt::zero()
        }
    };
    let d = dp + dq;
    let mut counts = Vec::with_capacity(d);
    for k in 0..d {
        let mut sum = BigInt::zero();
        for a in 0..=k as isize {
            let b = k as isize - a;
            if a as usize == dp && b as usize == dq {
                continue;
            }
            sum += term(p, a, dp) * term(q, b, dq);
        }
        counts.push(sum);
    }
    FVector::new(counts)
}

/// f-vector of a free join: `f_k = Σ_{a+b+1=k} f_a f_b` with `f_{-1} = 1` and
/// each factor's improper face included, except for the improper-improper
/// pair (which would be the join itself).
pub fn free_join_fvector(p: &FVector, q: &FVector) -> FVector {
    let (dp, dq) = (p.dim(), q.dim());
    let term = |f: &FVector, a: isize, d: usize| -> BigInt {
        if a == -1 || a as usize == d {
            BigInt::one()
        } else if a >= 0 && (a as usize) < d {
            f.get(a as usize)
        } else {
            BigInt::zero()
        }
    };
    let d = dp + dq + 1;
    let mut counts = Vec::with_capacity(d);
    for k in 0..d {
        let mut sum = BigInt::zero();
        for a in -1..=(k as isize) {
            let b = k as isize - 1 - a;
            if b < -1 || b > dq as isize {
                continue;
            }
            if a as usize == dp && b as usize == dq {
                continue;
            }
            if a > dp as isize {
                continue;
            }
            sum += term(p, a, dp) * term(q, b, dq);
        }
        counts.push(sum);
    }
    FVector::new(counts)
}

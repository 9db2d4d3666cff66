//! Power iteration for the top right singular vector of a row matrix.

use crate::error::{Error, Result};
use crate::numcore::{ParamVector, RngStream};

/// Result of a power-iteration run.
#[derive(Clone, Debug)]
pub struct TopSingularVector {
    /// Unit-norm approximation of the top right singular vector, sign
    /// canonicalized so the largest-magnitude component is non-negative.
    pub vector: ParamVector,
    /// True when the input had zero spectrum (e.g. a zero matrix); the
    /// vector is then the deterministic basis vector `e_1`.
    pub degenerate: bool,
    /// Rayleigh quotient v' (M'M) v after each iteration; non-decreasing.
    pub rayleigh: Vec<f64>,
}

/// Approximates the top right singular vector of the n x d matrix whose rows
/// are `rows`, by power iteration on M'M (applied as M then M-transpose, so
/// the d x d Gram matrix is never formed).
///
/// Callers that only need squared projections (spectral outlier scores) can
/// ignore the sign; canonicalization exists so results are reproducible.
pub fn top_right_singular_vector(
    rows: &[ParamVector],
    iters: usize,
    rng: &mut RngStream,
) -> Result<TopSingularVector> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::invalid_parameter("rows", "need at least one row"));
    }
    let d = rows[0].len();
    if d == 0 {
        return Err(Error::invalid_parameter("rows", "rows must be non-empty"));
    }
    if iters == 0 {
        return Err(Error::invalid_parameter("iters", "need at least one iteration"));
    }
    for row in rows {
        if row.len() != d {
            return Err(Error::DimensionMismatch {
                left: d,
                right: row.len(),
            });
        }
    }

    let degenerate_result = |rayleigh: Vec<f64>| TopSingularVector {
        vector: ParamVector::basis(d, 0),
        degenerate: true,
        rayleigh,
    };

    if rows.iter().all(|r| r.values().iter().all(|&x| x == 0.0)) {
        return Ok(degenerate_result(Vec::new()));
    }

    // Random unit start keeps the iteration unbiased w.r.t. the basis.
    let mut v: Vec<f64> = (0..d).map(|_| rng.standard_normal()).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }

    let mut rayleigh = Vec::with_capacity(iters);
    for _ in 0..iters {
        // u = M v (length n), then w = M' u (length d).
        let mut w = vec![0.0; d];
        let mut quad = 0.0; // v' M'M v = ||Mv||^2
        for row in rows {
            let u_i: f64 = row.values().iter().zip(&v).map(|(r, vi)| r * vi).sum();
            quad += u_i * u_i;
            for (wj, rj) in w.iter_mut().zip(row.values()) {
                *wj += u_i * rj;
            }
        }
        rayleigh.push(quad);
        let wnorm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if wnorm == 0.0 {
            // Start vector happened to lie in the null space.
            return Ok(degenerate_result(rayleigh));
        }
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / wnorm;
        }
    }

    // Canonical sign: largest-magnitude component non-negative
    // (ties broken by lowest index).
    let mut arg = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[arg].abs() {
            arg = i;
        }
    }
    if v[arg] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }

    Ok(TopSingularVector {
        vector: ParamVector::new(v),
        degenerate: false,
        rayleigh,
    })
}

//! Flat parameter vectors and element-wise arithmetic.

use crate::error::{Error, Result};

/// A flat vector of 64-bit model parameters (or an update between two such
/// vectors). The universal currency of the simulator: model weights, client
/// updates and aggregates all share this representation.
///
/// Immutable in spirit: arithmetic returns new vectors, so values can be
/// shared freely across threads.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamVector {
    values: Vec<f64>,
}

impl ParamVector {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn zeros(d: usize) -> Self {
        Self {
            values: vec![0.0; d],
        }
    }

    /// Unit basis vector `e_i` of dimension `d`.
    pub fn basis(d: usize, i: usize) -> Self {
        let mut v = vec![0.0; d];
        v[i] = 1.0;
        Self { values: v }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Euclidean norm; 0 exactly iff the vector is all zeros.
    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// True iff every element is finite (no NaN, no infinities).
    /// Attacks may produce non-finite values; callers must check before
    /// letting an update reach server state.
    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|x| x.is_finite())
    }

    /// `self * a`, element-wise.
    pub fn scale(&self, a: f64) -> ParamVector {
        ParamVector::new(self.values.iter().map(|x| a * x).collect())
    }

    /// Element-wise negation.
    pub fn neg(&self) -> ParamVector {
        ParamVector::new(self.values.iter().map(|x| -x).collect())
    }
}

impl std::ops::Index<usize> for ParamVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}

fn check_len(x: &ParamVector, y: &ParamVector) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

/// `a*x + y`, element-wise.
pub fn axpy(a: f64, x: &ParamVector, y: &ParamVector) -> Result<ParamVector> {
    check_len(x, y)?;
    Ok(ParamVector::new(
        x.values()
            .iter()
            .zip(y.values())
            .map(|(xi, yi)| a * xi + yi)
            .collect(),
    ))
}

/// `x - y`, element-wise.
pub fn sub(x: &ParamVector, y: &ParamVector) -> Result<ParamVector> {
    check_len(x, y)?;
    Ok(ParamVector::new(
        x.values()
            .iter()
            .zip(y.values())
            .map(|(xi, yi)| xi - yi)
            .collect(),
    ))
}

pub fn dot(x: &ParamVector, y: &ParamVector) -> Result<f64> {
    check_len(x, y)?;
    Ok(x.values()
        .iter()
        .zip(y.values())
        .map(|(xi, yi)| xi * yi)
        .sum())
}

/// Coordinate-wise arithmetic mean of a non-empty set of equal-length rows.
pub fn mean_of_rows(rows: &[ParamVector]) -> Result<ParamVector> {
    let first = rows
        .first()
        .ok_or_else(|| Error::invalid_parameter("rows", "empty row set"))?;
    let d = first.len();
    let mut acc = vec![0.0; d];
    for row in rows {
        if row.len() != d {
            return Err(Error::DimensionMismatch {
                left: d,
                right: row.len(),
            });
        }
        for (a, v) in acc.iter_mut().zip(row.values()) {
            *a += v;
        }
    }
    let inv = 1.0 / rows.len() as f64;
    for a in acc.iter_mut() {
        *a *= inv;
    }
    Ok(ParamVector::new(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn axpy_identity_cases() {
        let x = ParamVector::new(vec![1.0, 2.0]);
        let y = ParamVector::new(vec![3.0, 4.0]);
        assert_eq!(axpy(0.0, &x, &y).unwrap().values(), &[3.0, 4.0]);

        let x = ParamVector::new(vec![1.0, 1.0]);
        let y = ParamVector::zeros(2);
        assert_eq!(axpy(1.0, &x, &y).unwrap().values(), &[1.0, 1.0]);

        let x = ParamVector::new(vec![1.0, 2.0, 3.0]);
        let y = ParamVector::new(vec![2.0, 4.0, 6.0]);
        assert_eq!(axpy(-2.0, &x, &y).unwrap().values(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn axpy_rejects_length_mismatch() {
        let x = ParamVector::zeros(2);
        let y = ParamVector::zeros(3);
        assert!(matches!(
            axpy(1.0, &x, &y),
            Err(crate::error::Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn l2_norm_cases() {
        assert_eq!(ParamVector::new(vec![3.0, 4.0]).l2_norm(), 5.0);
        assert_eq!(ParamVector::zeros(3).l2_norm(), 0.0);

        // Independent oracle: accumulate the sum of squares by hand.
        let v = ParamVector::new(vec![1.0; 1000]);
        let mut ss = 0.0;
        for x in v.values() {
            ss += x * x;
        }
        assert_eq!(v.l2_norm(), ss.sqrt());
        assert!((v.l2_norm() - 1000f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn mean_of_rows_basic() {
        let rows = vec![
            ParamVector::new(vec![0.0, 0.0]),
            ParamVector::new(vec![2.0, 2.0]),
        ];
        assert_eq!(mean_of_rows(&rows).unwrap().values(), &[1.0, 1.0]);
        assert!(mean_of_rows(&[]).is_err());
    }

    proptest! {
        // Finite inputs stay finite through axpy/scale/mean.
        #[test]
        fn arithmetic_closure_finite(
            a in -1e6f64..1e6,
            xs in proptest::collection::vec(-1e6f64..1e6, 1..32),
            ys_seed in -1e6f64..1e6,
        ) {
            let x = ParamVector::new(xs.clone());
            let y = ParamVector::new(vec![ys_seed; xs.len()]);
            let z = axpy(a, &x, &y).unwrap();
            prop_assert!(z.is_finite());
            prop_assert!(x.scale(a).is_finite());
            let m = mean_of_rows(&[x, y, z]).unwrap();
            prop_assert!(m.is_finite());
        }

        // Pure functions: same inputs, bit-identical outputs.
        #[test]
        fn axpy_is_pure(a in -1e3f64..1e3, xs in proptest::collection::vec(-1e3f64..1e3, 1..16)) {
            let x = ParamVector::new(xs.clone());
            let y = ParamVector::new(xs.iter().rev().cloned().collect());
            let r1 = axpy(a, &x, &y).unwrap();
            let r2 = axpy(a, &x, &y).unwrap();
            prop_assert_eq!(r1, r2);
        }
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{AdpError, Result};

/// A real-valued function on a finite index set (states, or state-action
/// pairs).  This is the concrete value space for every scalar model family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValueVector {
    values: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<Vec<String>>,
}

impl ValueVector {
    pub fn new(values: Vec<f64>) -> Self {
        ValueVector {
            values,
            labels: None,
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self::constant(len, 0.0)
    }

    pub fn constant(len: usize, c: f64) -> Self {
        Self::new(vec![c; len])
    }

    /// Validating constructor used by instance loaders: every entry must be finite.
    pub fn checked(values: Vec<f64>) -> Result<Self> {
        if let Some((i, bad)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(AdpError::InvalidArgument(format!(
                "non-finite value {bad} at index {i}"
            )));
        }
        Ok(Self::new(values))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.values.len() {
            return Err(AdpError::DimensionMismatch {
                expected: self.values.len(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
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

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.values.iter()
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self::new(self.values.iter().map(|&v| f(v)).collect())
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean(&self) -> f64 {
        if self.values.is_empty() {
            return f64::NAN;
        }
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Pointwise maximum of two vectors of equal length.
    pub fn pointwise_max(&self, other: &Self) -> Result<Self> {
        check_same_len(self, other)?;
        Ok(Self::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }
}

impl From<Vec<f64>> for ValueVector {
    fn from(values: Vec<f64>) -> Self {
        Self::new(values)
    }
}

impl std::ops::Index<usize> for ValueVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}

pub(crate) fn check_same_len(v: &ValueVector, w: &ValueVector) -> Result<()> {
    if v.len() != w.len() {
        return Err(AdpError::DimensionMismatch {
            expected: v.len(),
            got: w.len(),
        });
    }
    Ok(())
}

/// Sup-norm distance between two vectors of equal length.
pub fn sup_distance(v: &ValueVector, w: &ValueVector) -> Result<f64> {
    check_same_len(v, w)?;
    Ok(v.iter()
        .zip(w.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

//! Partial-order primitives on finite-dimensional value objects, generic
//! fixed-point iteration, and order-stability property checkers.
//!
//! The pointwise partial order on value vectors drives everything downstream:
//! solvers report how successive iterates compare, and the stability checker
//! falsifies the two directions of order stability (`v <= Sv` implies
//! `v <= fix(S)`, and `Sv <= v` implies `fix(S) <= v`) on generated probes.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{AdpError, Result};
use crate::value::{check_same_len, sup_distance, ValueVector};

/// Outcome of comparing two value objects under a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderResult {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl OrderResult {
    /// True for `Less` and `Equal`: the first argument lies weakly below the second.
    pub fn is_le(self) -> bool {
        matches!(self, OrderResult::Less | OrderResult::Equal)
    }

    /// True for `Greater` and `Equal`.
    pub fn is_ge(self) -> bool {
        matches!(self, OrderResult::Greater | OrderResult::Equal)
    }
}

/// Pointwise comparison with tolerance: `Equal` when |v-w| <= tol everywhere,
/// `Less` when v <= w + tol everywhere (and not `Equal`), symmetrically
/// `Greater`, and `Incomparable` when coordinates cross.
pub fn compare(v: &ValueVector, w: &ValueVector, tol: f64) -> Result<OrderResult> {
    check_same_len(v, w)?;
    if !(tol >= 0.0) {
        return Err(AdpError::InvalidArgument(format!(
            "comparison tolerance must be nonnegative, got {tol}"
        )));
    }
    let mut le = true;
    let mut ge = true;
    for (&a, &b) in v.iter().zip(w.iter()) {
        if a > b + tol {
            le = false;
        }
        if b > a + tol {
            ge = false;
        }
        if !le && !ge {
            return Ok(OrderResult::Incomparable);
        }
    }
    Ok(match (le, ge) {
        (true, true) => OrderResult::Equal,
        (true, false) => OrderResult::Less,
        (false, true) => OrderResult::Greater,
        (false, false) => unreachable!(),
    })
}

/// One solver iteration: sup-norm residual and how the new iterate compares
/// with the previous one.
#[derive(Debug, Clone, Serialize)]
pub struct IterationStep {
    pub residual: f64,
    pub comparison: OrderResult,
}

/// Result of successive approximation on a self-map of the value space.
#[derive(Debug, Clone)]
pub struct FixedPointResult {
    pub value: ValueVector,
    pub iterations: usize,
    pub trace: Vec<IterationStep>,
}

/// Iterates `v <- S v` from `v0` until the sup-norm residual drops to `tol`.
///
/// Returns the first iterate whose image lies within `tol`, the number of
/// iterations taken, and the monotonicity trace (the order relation between
/// successive iterates), which downstream invariant checks consume.
pub fn iterate_to_fixed_point<S>(
    op: S,
    v0: &ValueVector,
    tol: f64,
    max_iter: usize,
) -> Result<FixedPointResult>
where
    S: Fn(&ValueVector) -> Result<ValueVector>,
{
    if !(tol > 0.0) {
        return Err(AdpError::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut v = v0.clone();
    let mut trace = Vec::new();
    for n in 0..=max_iter {
        let next = op(&v)?;
        check_same_len(&next, &v)?;
        let residual = sup_distance(&next, &v)?;
        if residual <= tol {
            return Ok(FixedPointResult {
                value: v,
                iterations: n,
                trace,
            });
        }
        trace.push(IterationStep {
            residual,
            comparison: compare(&v, &next, 0.0)?,
        });
        v = next;
    }
    let residual = sup_distance(&op(&v)?, &v)?;
    Err(AdpError::NonConvergence {
        iterations: max_iter,
        residual,
        last: v,
    })
}

/// Which direction of order stability a counterexample violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StabilityDirection {
    Upward,
    Downward,
}

/// Report of an order-stability check for one operator.
#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub operator_name: String,
    pub upward_holds: bool,
    pub downward_holds: bool,
    pub counterexamples: Vec<(ValueVector, StabilityDirection)>,
    pub probes_checked: usize,
    pub probes_skipped: usize,
}

impl StabilityReport {
    pub fn holds(&self) -> bool {
        self.upward_holds && self.downward_holds
    }
}

/// Checks upward and downward stability of `op` around its fixed point on the
/// given probes.  A probe `v` with `v <= Sv` must satisfy `v <= fixed_point`;
/// a probe with `Sv <= v` must satisfy `fixed_point <= v`.  Probes meeting
/// neither premise are skipped and counted.
pub fn check_order_stability<S>(
    operator_name: &str,
    op: S,
    fixed_point: &ValueVector,
    probes: &[ValueVector],
    tol: f64,
) -> Result<StabilityReport>
where
    S: Fn(&ValueVector) -> Result<ValueVector>,
{
    let residual = sup_distance(&op(fixed_point)?, fixed_point)?;
    if residual > tol.max(1e-9) {
        return Err(AdpError::InvalidArgument(format!(
            "claimed fixed point has residual {residual:.3e}"
        )));
    }
    let mut report = StabilityReport {
        operator_name: operator_name.to_string(),
        upward_holds: true,
        downward_holds: true,
        counterexamples: Vec::new(),
        probes_checked: 0,
        probes_skipped: 0,
    };
    for v in probes {
        let image = op(v)?;
        let vs_image = compare(v, &image, tol)?;
        let mut used = false;
        if vs_image.is_le() {
            used = true;
            if !compare(v, fixed_point, tol)?.is_le() {
                report.upward_holds = false;
                report
                    .counterexamples
                    .push((v.clone(), StabilityDirection::Upward));
            }
        }
        if vs_image.is_ge() {
            used = true;
            if !compare(fixed_point, v, tol)?.is_le() {
                report.downward_holds = false;
                report
                    .counterexamples
                    .push((v.clone(), StabilityDirection::Downward));
            }
        }
        if used {
            report.probes_checked += 1;
        } else {
            report.probes_skipped += 1;
        }
    }
    Ok(report)
}

/// Generates stability probes by perturbing the fixed point down and up by
/// random nonnegative vectors, keeping only probes that satisfy one of the
/// stability premises.  Unconstrained random vectors rarely satisfy either
/// premise, so pre-filtering keeps the check informative.
pub fn stability_probes<S>(
    op: S,
    fixed_point: &ValueVector,
    count: usize,
    scale: f64,
    seed: u64,
) -> Result<Vec<ValueVector>>
where
    S: Fn(&ValueVector) -> Result<ValueVector>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probes = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while probes.len() < count && attempts < 100 * count.max(1) {
        attempts += 1;
        let down = rng.gen_bool(0.5);
        let candidate = ValueVector::new(
            fixed_point
                .iter()
                .map(|&x| {
                    let d = rng.gen_range(0.0..scale);
                    if down {
                        x - d
                    } else {
                        x + d
                    }
                })
                .collect(),
        );
        let image = op(&candidate)?;
        let rel = compare(&candidate, &image, 0.0)?;
        if rel.is_le() || rel.is_ge() {
            probes.push(candidate);
        }
    }
    Ok(probes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn affine(v: &ValueVector) -> Result<ValueVector> {
        // S v = 1 + 0.5 v, fixed point 2 in each coordinate
        Ok(v.map(|x| 1.0 + 0.5 * x))
    }

    #[test]
    fn compare_identity_is_equal() {
        let v = ValueVector::new(vec![1.0, 2.0]);
        let w = ValueVector::new(vec![1.0, 2.0]);
        assert_eq!(compare(&v, &w, 0.0).unwrap(), OrderResult::Equal);
    }

    #[test]
    fn compare_strict_dominance_is_less() {
        let v = ValueVector::new(vec![1.0, 2.0]);
        let w = ValueVector::new(vec![2.0, 3.0]);
        assert_eq!(compare(&v, &w, 0.0).unwrap(), OrderResult::Less);
        assert_eq!(compare(&w, &v, 0.0).unwrap(), OrderResult::Greater);
    }

    #[test]
    fn compare_crossing_is_incomparable() {
        let v = ValueVector::new(vec![1.0, 3.0]);
        let w = ValueVector::new(vec![2.0, 2.0]);
        assert_eq!(compare(&v, &w, 0.0).unwrap(), OrderResult::Incomparable);
    }

    #[test]
    fn compare_length_mismatch_errors() {
        let v = ValueVector::new(vec![1.0, 3.0]);
        let w = ValueVector::new(vec![2.0]);
        assert!(matches!(
            compare(&v, &w, 0.0),
            Err(AdpError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn compare_rejects_negative_tolerance() {
        let v = ValueVector::new(vec![1.0]);
        assert!(compare(&v, &v, -1.0).is_err());
    }

    #[test]
    fn identity_operator_fixes_everything_immediately() {
        let v0 = ValueVector::new(vec![5.0]);
        let out = iterate_to_fixed_point(|v| Ok(v.clone()), &v0, 1e-12, 10).unwrap();
        assert_eq!(out.value.values(), &[5.0]);
        assert_eq!(out.iterations, 0);
        assert!(out.trace.is_empty());
    }

    #[test]
    fn affine_contraction_reaches_geometric_limit() {
        let v0 = ValueVector::new(vec![0.0]);
        let out = iterate_to_fixed_point(affine, &v0, 1e-10, 1000).unwrap();
        assert!((out.value[0] - 2.0).abs() < 1e-9);
        // starting below the fixed point, the trace is increasing throughout
        assert!(out
            .trace
            .iter()
            .all(|s| matches!(s.comparison, OrderResult::Less | OrderResult::Equal)));
    }

    #[test]
    fn non_convergence_carries_last_iterate() {
        let v0 = ValueVector::new(vec![0.0]);
        let err = iterate_to_fixed_point(affine, &v0, 1e-10, 3).unwrap_err();
        match err {
            AdpError::NonConvergence {
                iterations,
                residual,
                last,
            } => {
                assert_eq!(iterations, 3);
                assert!(residual > 1e-10);
                assert_eq!(last.len(), 1);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn stability_holds_for_monotone_affine_contraction() {
        let fp = ValueVector::new(vec![2.0]);
        // probe below: S[0] = [1] >= [0], so the upward premise holds
        let probes = vec![ValueVector::new(vec![0.0]), fp.clone()];
        let report = check_order_stability("affine", affine, &fp, &probes, 1e-10).unwrap();
        assert!(report.upward_holds && report.downward_holds);
        assert_eq!(report.probes_checked, 2);
        assert_eq!(report.probes_skipped, 0);
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn generated_probes_satisfy_a_premise() {
        let fp = ValueVector::new(vec![2.0, 2.0]);
        let op = |v: &ValueVector| Ok(v.map(|x| 1.0 + 0.5 * x));
        let probes = stability_probes(op, &fp, 50, 1.0, 7).unwrap();
        assert_eq!(probes.len(), 50);
        let report = check_order_stability("affine2", op, &fp, &probes, 1e-10).unwrap();
        assert!(report.holds());
        assert_eq!(report.probes_skipped, 0);
    }
}

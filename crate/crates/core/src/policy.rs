use serde::{Deserialize, Serialize};

use crate::error::{AdpError, Result};

/// A stationary policy: one action index per state.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolicyTable {
    actions: Vec<usize>,
}

impl PolicyTable {
    pub fn new(actions: Vec<usize>) -> Self {
        PolicyTable { actions }
    }

    pub fn constant(n_states: usize, action: usize) -> Self {
        Self::new(vec![action; n_states])
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn action(&self, state: usize) -> usize {
        self.actions[state]
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    pub(crate) fn check_states(&self, n_states: usize) -> Result<()> {
        if self.actions.len() != n_states {
            return Err(AdpError::DimensionMismatch {
                expected: n_states,
                got: self.actions.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<usize>> for PolicyTable {
    fn from(actions: Vec<usize>) -> Self {
        Self::new(actions)
    }
}

/// The policy index set of a model: either fully enumerated or declared too
/// large to enumerate.
#[derive(Debug, Clone)]
pub enum PolicySet {
    Finite(Vec<PolicyTable>),
    TooLarge { approx_log2: f64 },
}

impl PolicySet {
    pub fn finite(self) -> Result<Vec<PolicyTable>> {
        match self {
            PolicySet::Finite(p) => Ok(p),
            PolicySet::TooLarge { approx_log2 } => Err(AdpError::EnumerationTooLarge(format!(
                "about 2^{approx_log2:.1} policies"
            ))),
        }
    }
}

/// Cartesian product of per-state feasible action sets, capped so that huge
/// policy spaces are declared rather than materialized.
pub fn enumerate_feasible_policies(feasible_actions: &[Vec<usize>], cap: usize) -> PolicySet {
    let mut log2 = 0.0f64;
    for acts in feasible_actions {
        log2 += (acts.len().max(1) as f64).log2();
    }
    if log2 > (cap as f64).log2() {
        return PolicySet::TooLarge { approx_log2: log2 };
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for acts in feasible_actions {
        let mut next = Vec::with_capacity(out.len() * acts.len());
        for prefix in &out {
            for &a in acts {
                let mut row = prefix.clone();
                row.push(a);
                next.push(row);
            }
        }
        out = next;
    }
    PolicySet::Finite(out.into_iter().map(PolicyTable::new).collect())
}

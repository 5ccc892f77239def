use serde::{Deserialize, Serialize};

use crate::error::{DecompositionInvariant, TheoremError};

/// Degrees `n ≥ k ≥ 2` of two hypersurfaces of ℙ⁵ cutting out a nodal
/// threefold, and the quantities derived from them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CIParams {
    pub n: u32,
    pub k: u32,
}

impl CIParams {
    pub fn new(n: u32, k: u32) -> Result<Self, TheoremError> {
        if k < 2 || n < k {
            return Err(TheoremError::BadParameters(format!("need n ≥ k ≥ 2, got n = {n}, k = {k}")));
        }
        Ok(CIParams { n, k })
    }

    /// `2n + k − 6`, the degree at which the nodes must impose independent
    /// conditions.
    pub fn separation_degree(&self) -> u32 {
        2 * self.n + self.k - 6
    }

    /// `(n+k−2)(n−1) − 1`, the largest node count covered.
    pub fn node_bound(&self) -> u64 {
        (self.n + self.k - 2) as u64 * (self.n - 1) as u64 - 1
    }

    /// `n + k − 2`, the per-degree incidence coefficient of property ★.
    pub fn star_coefficient(&self) -> usize {
        (self.n + self.k - 2) as usize
    }

    /// `(n+k−2)²`, the node count of the example family.
    pub fn example_node_count(&self) -> u64 {
        let c = self.star_coefficient() as u64;
        c * c
    }

    pub fn is_small_case(&self) -> bool {
        self.n <= 4
    }
}

/// Node bounds for `2 ≤ k ≤ n ≤ 4`, listed explicitly.
pub const SMALL_CASES: [((u32, u32), u64); 6] =
    [((2, 2), 1), ((3, 2), 5), ((3, 3), 7), ((4, 2), 11), ((4, 3), 14), ((4, 4), 17)];

pub fn small_cases_table(params: CIParams) -> Result<u64, TheoremError> {
    SMALL_CASES
        .iter()
        .find(|((n, k), _)| (*n, *k) == (params.n, params.k))
        .map(|&(_, b)| b)
        .ok_or_else(|| TheoremError::BadParameters(format!("({}, {}) is not a small case", params.n, params.k)))
}

/// The degree left for the residual set once `Σ j·c_j` has been spent on
/// forms through the parts: `2n + k − 6 − Σ j·c_j`.
///
/// `counts` lists `(j, c_j)`. Defined for `n ≥ 5`, where `Σ j·c_j ≤ n − 2`
/// forces the result to be at least `n + k − 4 ≥ 3`.
pub fn degree_budget(params: CIParams, counts: &[(u32, usize)]) -> Result<u32, TheoremError> {
    if params.n < 5 {
        return Err(TheoremError::BadParameters(format!("degree budget needs n ≥ 5, got n = {}", params.n)));
    }
    let spent = weighted_sum(counts);
    if spent > (params.n - 2) as u64 {
        return Err(TheoremError::Invariant {
            invariant: DecompositionInvariant::DegreeSumBound,
            detail: format!("Σ j·c_j = {spent} > n − 2 = {}", params.n - 2),
        });
    }
    let d = params.separation_degree() as u64 - spent;
    if d < 3 {
        return Err(TheoremError::Invariant {
            invariant: DecompositionInvariant::BudgetAtLeastThree,
            detail: format!("d = {d}"),
        });
    }
    Ok(d as u32)
}

/// `Σ j·c_j`.
pub fn weighted_sum(counts: &[(u32, usize)]) -> u64 {
    counts.iter().map(|&(j, c)| j as u64 * c as u64).sum()
}

/// `(n+k−2)(n−1−s) − 2`, the largest residual set allowed after spending `s`.
pub fn residual_bound(params: CIParams, spent: u64) -> i64 {
    params.star_coefficient() as i64 * (params.n as i64 - 1 - spent as i64) - 2
}

/// `t(ξ+3−t) − 2`, the plane-curve bound in the separation hypothesis.
pub fn plane_curve_bound(t: u32, xi: u32) -> i64 {
    t as i64 * (xi as i64 + 3 - t as i64) - 2
}

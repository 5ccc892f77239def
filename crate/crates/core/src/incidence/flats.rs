//! Searches for large sets of rows of small rank.
//!
//! Both incidence questions in this crate reduce to the same one. Points lie
//! on a common curve of degree `t` iff their degree-`t` evaluation rows have
//! rank below `C(t+2, 2)`, and points lie in a `k`-plane iff their coordinate
//! rows have rank at most `k+1`. The largest such set is a flat of the row
//! matroid, spanned by an independent set of the target rank, and its members
//! are exactly the rows in that span.

use num_traits::Zero;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ExactMatrix, Field};
use crate::poly::binomial;

/// Incremental row reduction against a growing independent set.
#[derive(Clone)]
struct Reducer<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Reducer<F> {
    fn new() -> Self {
        Reducer { rows: Vec::new() }
    }

    /// Residue of `v` modulo the span; zero iff `v` is in the span.
    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= factor.clone() * r;
                }
            }
        }
        v
    }

    /// Adds a nonzero reduced vector, scaled to a leading 1.
    fn push(&mut self, residue: Vec<F>) {
        let p = residue.iter().position(|x| !x.is_zero()).expect("nonzero residue");
        let inv = residue[p].inv().expect("nonzero");
        let row: Vec<F> = residue.into_iter().map(|x| x * &inv).collect();
        // Keep earlier rows reduced at the new pivot so `reduce` stays a
        // single pass.
        for (_, r) in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(&row) {
                    if !y.is_zero() {
                        *x -= f.clone() * y;
                    }
                }
            }
        }
        self.rows.push((p, row));
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Budget and policy for the searches.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Budget {
    /// Maximum number of enumerated leaves for an exact answer.
    pub leaves: u64,
    /// Enumerate exactly regardless of `leaves`.
    pub force_exact: bool,
    /// Random subsets tried when enumeration is out of budget.
    pub samples: u64,
    pub seed: u64,
}

/// Rows in the span of `basis`.
fn closure<F: Field>(rows: &ExactMatrix<F>, reducer: &Reducer<F>) -> Vec<usize> {
    (0..rows.num_rows()).filter(|&i| reducer.contains(rows.row(i))).collect()
}

fn full_rank<F: Field>(rows: &ExactMatrix<F>) -> usize {
    let mut red = Reducer::new();
    for i in 0..rows.num_rows() {
        let r = red.reduce(rows.row(i));
        if r.iter().any(|x| !x.is_zero()) {
            red.push(r);
        }
    }
    red.rank()
}

fn better(candidate: &[usize], best: &[usize]) -> bool {
    candidate.len() > best.len() || (candidate.len() == best.len() && candidate < best)
}

/// Largest set of rows of rank at most `rho`, with the lexicographically
/// least member list among ties, and whether the answer is exact.
pub(crate) fn max_flat<F: Field>(rows: &ExactMatrix<F>, rho: usize, budget: Budget) -> (Vec<usize>, bool) {
    let n = rows.num_rows();
    if full_rank(rows) <= rho {
        return ((0..n).collect(), true);
    }
    if rho == 0 {
        return (Vec::new(), true);
    }
    if budget.force_exact || (binomial(n, rho) as u64) <= budget.leaves {
        let mut best = Vec::new();
        enumerate_bases(rows, rho, 0, &Reducer::new(), &mut |red| {
            let members = closure(rows, red);
            if better(&members, &best) {
                best = members;
            }
        });
        return (best, true);
    }
    let mut best = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    for _ in 0..budget.samples {
        let mut red = Reducer::new();
        for i in sample(&mut rng, n, rho).into_iter() {
            let r = red.reduce(rows.row(i));
            if r.iter().any(|x| !x.is_zero()) {
                red.push(r);
            }
        }
        let members = closure(rows, &red);
        if better(&members, &best) {
            best = members;
        }
    }
    (best, false)
}

/// Visits every independent `rho`-set of rows (in lex order) as a reducer.
fn enumerate_bases<F: Field>(
    rows: &ExactMatrix<F>,
    rho: usize,
    start: usize,
    red: &Reducer<F>,
    visit: &mut impl FnMut(&Reducer<F>),
) {
    let n = rows.num_rows();
    let need = rho - red.rank();
    for j in start..n {
        if n - j < need {
            break;
        }
        let r = red.reduce(rows.row(j));
        if r.iter().all(Zero::is_zero) {
            continue;
        }
        let mut next = red.clone();
        next.push(r);
        if next.rank() == rho {
            visit(&next);
        } else {
            enumerate_bases(rows, rho, j + 1, &next, visit);
        }
    }
}

/// Looks for more than `bound` rows of rank at most `rho`.
///
/// Returns a violating member set (the whole flat it spans) and whether a
/// `None` answer is exact. A returned set is always a genuine violation.
pub(crate) fn exceeds<F: Field>(
    rows: &ExactMatrix<F>,
    rho: usize,
    bound: usize,
    budget: Budget,
) -> (Option<Vec<usize>>, bool) {
    let n = rows.num_rows();
    if n <= bound {
        return (None, true);
    }
    let flat_cost = binomial(n, rho) as u64;
    let subset_cost = binomial(n, bound + 1) as u64;
    if flat_cost <= subset_cost || (!budget.force_exact && subset_cost > budget.leaves) {
        let (members, exact) = max_flat(rows, rho, budget);
        return if members.len() > bound { (Some(members), true) } else { (None, exact) };
    }
    let mut found = None;
    small_rank_subset(rows, rho, bound + 1, 0, &Reducer::new(), &mut Vec::new(), &mut found);
    (found, true)
}

/// Depth-first search for `size` rows of rank at most `rho`; the first hit
/// in lex order is stored as the flat it spans.
fn small_rank_subset<F: Field>(
    rows: &ExactMatrix<F>,
    rho: usize,
    size: usize,
    start: usize,
    red: &Reducer<F>,
    chosen: &mut Vec<usize>,
    found: &mut Option<Vec<usize>>,
) {
    if found.is_some() {
        return;
    }
    if chosen.len() == size {
        *found = Some(closure(rows, red));
        return;
    }
    let n = rows.num_rows();
    for j in start..n {
        if n - j < size - chosen.len() || found.is_some() {
            break;
        }
        let r = red.reduce(rows.row(j));
        let independent = r.iter().any(|x| !x.is_zero());
        if independent && red.rank() == rho {
            continue;
        }
        chosen.push(j);
        if independent {
            let mut next = red.clone();
            next.push(r);
            small_rank_subset(rows, rho, size, j + 1, &next, chosen, found);
        } else {
            small_rank_subset(rows, rho, size, j + 1, red, chosen, found);
        }
        chosen.pop();
    }
}

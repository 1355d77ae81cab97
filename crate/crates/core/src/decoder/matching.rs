//! Exact minimum-weight perfect matching over the highlighted-ancilla graph.
//!
//! Instances are small: k highlighted ancillas plus one virtual boundary node
//! each. Up to [`DP_MAX_NODES`] nodes we run a subset DP that returns the
//! lexicographically smallest pairing among all minimum-cost perfect
//! matchings, which pins down every tie-break-sensitive result. Larger
//! instances (they only show up in high-rate Monte Carlo sweeps) go through
//! the blossom solver, which is exact on cost and deterministic for a fixed
//! problem but does not promise the lexicographic rule.

use crate::decoder::blossom::max_weight_matching;
use crate::decoder::distance::{tenths_to_f64, DistanceMatrix};
use crate::error::Error;

/// Largest node count handled by the lexicographic subset DP.
pub const DP_MAX_NODES: usize = 16;

/// Matching instance: nodes `0..k` are highlighted ancillas, `k..2k` their
/// boundary copies. Costs are in integral tenths; `None` marks a non-edge
/// (an ancilla only connects to its own boundary copy).
#[derive(Clone, Debug)]
pub struct MatchingProblem {
    k: usize,
    costs: Vec<Vec<Option<i64>>>,
}

impl MatchingProblem {
    /// Builds the standard boundary-augmented instance from pass distances.
    pub fn from_distances(dm: &DistanceMatrix) -> MatchingProblem {
        let k = dm.node_count();
        let m = 2 * k;
        let mut costs = vec![vec![None; m]; m];
        for i in 0..k {
            for j in i + 1..k {
                costs[i][j] = Some(dm.cost_tenths(i, j));
                costs[j][i] = costs[i][j];
            }
            costs[i][k + i] = Some(dm.boundary_cost_tenths(i));
            costs[k + i][i] = costs[i][k + i];
        }
        for i in k..m {
            for j in k..m {
                if i != j {
                    costs[i][j] = Some(0);
                }
            }
        }
        MatchingProblem { k, costs }
    }

    /// Direct construction for tests and oracle comparisons.
    pub fn from_costs(costs: Vec<Vec<Option<i64>>>) -> MatchingProblem {
        let k = costs.len() / 2;
        MatchingProblem { k, costs }
    }

    pub fn node_count(&self) -> usize {
        self.costs.len()
    }

    pub fn ancilla_count(&self) -> usize {
        self.k
    }

    pub fn cost_tenths(&self, i: usize, j: usize) -> Option<i64> {
        self.costs[i][j]
    }

    pub fn cost(&self, i: usize, j: usize) -> Option<f64> {
        self.costs[i][j].map(tenths_to_f64)
    }
}

/// Minimum-cost perfect matching; pairs are returned as (i, j) with i < j,
/// sorted ascending.
pub fn mwpm(problem: &MatchingProblem) -> Result<Vec<(usize, usize)>, Error> {
    let m = problem.node_count();
    if m % 2 != 0 {
        return Err(Error::invalid_argument(format!(
            "perfect matching needs an even node count, got {m}"
        )));
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let pairs = if m <= DP_MAX_NODES {
        dp_lex_matching(problem)?
    } else {
        blossom_matching(problem)?
    };
    Ok(pairs)
}

/// Total cost of a pairing in tenths.
pub fn matching_cost_tenths(problem: &MatchingProblem, pairs: &[(usize, usize)]) -> i64 {
    pairs
        .iter()
        .map(|&(i, j)| problem.cost_tenths(i, j).expect("pair uses a non-edge"))
        .sum()
}

const INF: i64 = i64::MAX / 4;

fn dp_lex_matching(problem: &MatchingProblem) -> Result<Vec<(usize, usize)>, Error> {
    let m = problem.node_count();
    let full: usize = (1usize << m) - 1;
    let mut dp = vec![INF; 1 << m];
    dp[0] = 0;
    for mask in 1..=full {
        if (mask.count_ones() & 1) == 1 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut best = INF;
        let mut j_iter = rest;
        while j_iter != 0 {
            let j = j_iter.trailing_zeros() as usize;
            j_iter &= j_iter - 1;
            if let Some(c) = problem.cost_tenths(i, j) {
                let sub = dp[rest & !(1 << j)];
                if sub < INF {
                    best = best.min(sub + c);
                }
            }
        }
        dp[mask] = best;
    }
    if dp[full] >= INF {
        return Err(Error::internal("matching instance has no perfect matching".into()));
    }
    // Greedy front-to-back reconstruction: always give the lowest unmatched
    // node its smallest feasible partner, so the pairing is lexicographically
    // minimal among optimal ones.
    let mut pairs = Vec::with_capacity(m / 2);
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut chosen = None;
        let mut j_iter = rest;
        while j_iter != 0 {
            let j = j_iter.trailing_zeros() as usize;
            j_iter &= j_iter - 1;
            if let Some(c) = problem.cost_tenths(i, j) {
                let sub = dp[rest & !(1 << j)];
                if sub < INF && sub + c == dp[mask] {
                    chosen = Some(j);
                    break;
                }
            }
        }
        let j = chosen.expect("dp reconstruction must find a partner");
        pairs.push((i, j));
        mask = rest & !(1 << j);
    }
    Ok(pairs)
}

fn blossom_matching(problem: &MatchingProblem) -> Result<Vec<(usize, usize)>, Error> {
    let m = problem.node_count();
    let mut max_cost = 0i64;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if let Some(c) = problem.cost_tenths(i, j) {
                max_cost = max_cost.max(c.abs());
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if let Some(c) = problem.cost_tenths(i, j) {
                edges.push((i, j, max_cost + 1 - c));
            }
        }
    }
    let mate = max_weight_matching(m, &edges, true);
    let mut pairs = Vec::with_capacity(m / 2);
    for (i, &mate_i) in mate.iter().enumerate() {
        match mate_i {
            Some(j) if i < j => pairs.push((i, j)),
            Some(_) => {}
            None => {
                return Err(Error::internal(
                    "blossom solver failed to produce a perfect matching".into(),
                ))
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(costs: &[&[i64]]) -> MatchingProblem {
        let m = costs.len();
        let grid = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| (i != j).then(|| costs[i][j]))
                    .collect::<Vec<_>>()
            })
            .collect();
        MatchingProblem::from_costs(grid)
    }

    /// Brute-force minimum matching, lexicographically first among minima.
    fn brute_force(problem: &MatchingProblem) -> Option<(i64, Vec<(usize, usize)>)> {
        fn recurse(
            problem: &MatchingProblem,
            mask: usize,
            acc: &mut Vec<(usize, usize)>,
            best: &mut Option<(i64, Vec<(usize, usize)>)>,
            cost: i64,
        ) {
            if mask == 0 {
                let better = match best {
                    None => true,
                    Some((c, _)) => cost < *c,
                };
                if better {
                    *best = Some((cost, acc.clone()));
                }
                return;
            }
            let i = mask.trailing_zeros() as usize;
            let rest = mask & !(1 << i);
            let mut j_iter = rest;
            while j_iter != 0 {
                let j = j_iter.trailing_zeros() as usize;
                j_iter &= j_iter - 1;
                if let Some(c) = problem.cost_tenths(i, j) {
                    acc.push((i, j));
                    recurse(problem, rest & !(1 << j), acc, best, cost + c);
                    acc.pop();
                }
            }
        }
        let m = problem.node_count();
        let mut best = None;
        recurse(problem, (1 << m) - 1, &mut Vec::new(), &mut best, 0);
        best
    }

    #[test]
    fn empty_instance() {
        let problem = MatchingProblem::from_costs(Vec::new());
        assert!(mwpm(&problem).unwrap().is_empty());
    }

    #[test]
    fn odd_count_rejected() {
        let problem = MatchingProblem::from_costs(vec![vec![None]]);
        assert!(mwpm(&problem).is_err());
    }

    #[test]
    fn two_candidate_minimum() {
        // 2 ancillas + 2 boundary copies: pair together (plus free boundary
        // edge) or both to their boundaries.
        let costs = vec![
            vec![None, Some(11), Some(20), None],
            vec![Some(11), None, None, Some(20)],
            vec![Some(20), None, None, Some(0)],
            vec![None, Some(20), Some(0), None],
        ];
        let problem = MatchingProblem::from_costs(costs);
        let pairs = mwpm(&problem).unwrap();
        assert_eq!(pairs, vec![(0, 1), (2, 3)]);
        assert_eq!(matching_cost_tenths(&problem, &pairs), 11);
    }

    #[test]
    fn boundary_split_wins_when_cheaper() {
        let costs = vec![
            vec![None, Some(30), Some(10), None],
            vec![Some(30), None, None, Some(10)],
            vec![Some(10), None, None, Some(0)],
            vec![None, Some(10), Some(0), None],
        ];
        let problem = MatchingProblem::from_costs(costs);
        let pairs = mwpm(&problem).unwrap();
        assert_eq!(pairs, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn lexicographic_tie_break() {
        // All perfect matchings cost the same; the lexicographically first
        // pairing must be chosen.
        let problem = complete(&[
            &[0, 10, 10, 10],
            &[10, 0, 10, 10],
            &[10, 10, 0, 10],
            &[10, 10, 10, 0],
        ]);
        let pairs = mwpm(&problem).unwrap();
        assert_eq!(pairs, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn matches_brute_force_on_random_instances() {
        let mut rng = crate::rng::TrialRng::new(2024);
        for trial in 0..300 {
            let k = 1 + (rng.next_below(4) as usize); // up to 8 nodes
            let m = 2 * k;
            let mut costs = vec![vec![None; m]; m];
            for i in 0..m {
                for j in i + 1..m {
                    // Dense-ish random instance with occasional negatives.
                    if rng.next_below(10) < 9 {
                        let c = rng.next_below(40) as i64 - 2;
                        costs[i][j] = Some(c);
                        costs[j][i] = Some(c);
                    }
                }
            }
            let problem = MatchingProblem::from_costs(costs);
            let brute = brute_force(&problem);
            let ours = mwpm(&problem);
            match brute {
                Some((cost, pairing)) => {
                    let pairs = ours.unwrap_or_else(|e| panic!("trial {trial}: {e}"));
                    assert_eq!(matching_cost_tenths(&problem, &pairs), cost, "trial {trial}");
                    assert_eq!(pairs, pairing, "trial {trial}: lexicographic rule");
                }
                None => assert!(ours.is_err(), "trial {trial} should have no matching"),
            }
        }
    }

    #[test]
    fn blossom_path_agrees_with_dp_on_cost() {
        let mut rng = crate::rng::TrialRng::new(7);
        for _ in 0..40 {
            let k = 9; // 18 nodes: above DP_MAX_NODES
            let m = 2 * k;
            let mut costs = vec![vec![None; m]; m];
            for i in 0..m {
                for j in i + 1..m {
                    let c = rng.next_below(50) as i64;
                    costs[i][j] = Some(c);
                    costs[j][i] = Some(c);
                }
            }
            let problem = MatchingProblem::from_costs(costs.clone());
            let via_blossom = blossom_matching(&problem).unwrap();
            let via_dp = dp_lex_matching(&problem).unwrap();
            assert_eq!(
                matching_cost_tenths(&problem, &via_blossom),
                matching_cost_tenths(&problem, &via_dp)
            );
        }
    }
}

//! Minimal nonnegative solutions of linear Diophantine systems.
//!
//! Implements the Contejean–Devie completion procedure. Candidates grow one
//! unit vector at a time, breadth first; a candidate `x` may be extended by
//! `e_j` only when `<A x, A e_j> < 0`, and candidates that dominate an already
//! found solution are discarded. For the inhomogeneous system `A x = b` an
//! extra variable `t` with column `-b` is appended and bounded by 1: solutions
//! with `t = 1` are the minimal inhomogeneous solutions and those with `t = 0`
//! form the Hilbert basis of `A x = 0`.

use crate::error::{Error, Result};

/// Default cap on the number of candidates kept in one breadth-first layer.
pub const DEFAULT_MAX_FRONTIER: usize = 200_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HilbertSolution {
    /// Minimal solutions of `A x = b`.
    pub inhomogeneous: Vec<Vec<u64>>,
    /// Minimal nonzero solutions of `A x = 0`.
    pub homogeneous: Vec<Vec<u64>>,
}

impl HilbertSolution {
    /// Whether `x` is some minimal inhomogeneous solution plus an
    /// N-combination of the homogeneous basis.
    pub fn generates(&self, x: &[u64]) -> bool {
        self.inhomogeneous.iter().any(|m| {
            if m.iter().zip(x).any(|(a, b)| a > b) {
                return false;
            }
            let rest: Vec<u64> = x.iter().zip(m).map(|(a, b)| a - b).collect();
            crate::semilinear::in_monoid(&rest, &self.homogeneous)
        })
    }
}

/// Solves `matrix · x = rhs` over the naturals.
///
/// `matrix` is given row by row; every row must have the same length (the
/// number of unknowns). At least one row is required; an all-zero row leaves
/// every unknown free.
pub fn hilbert_basis(matrix: &[Vec<i64>], rhs: &[i64]) -> Result<HilbertSolution> {
    hilbert_basis_with_limit(matrix, rhs, DEFAULT_MAX_FRONTIER)
}

pub fn hilbert_basis_with_limit(
    matrix: &[Vec<i64>],
    rhs: &[i64],
    max_frontier: usize,
) -> Result<HilbertSolution> {
    if matrix.len() != rhs.len() {
        return Err(Error::input(format!(
            "system has {} rows but right-hand side has {} entries",
            matrix.len(),
            rhs.len()
        )));
    }
    let unknowns = matrix.first().map_or(0, |r| r.len());
    if matrix.iter().any(|r| r.len() != unknowns) {
        return Err(Error::input("ragged coefficient matrix"));
    }
    if matrix.is_empty() {
        return Err(Error::input(
            "system needs at least one row to fix the number of unknowns",
        ));
    }

    let rows = matrix.len();
    let t = unknowns;
    let width = unknowns + 1;
    // columns[j] = image of e_j, with the t column equal to -rhs
    let columns: Vec<Vec<i64>> = (0..width)
        .map(|j| {
            (0..rows)
                .map(|i| if j == t { -rhs[i] } else { matrix[i][j] })
                .collect()
        })
        .collect();

    let mut solutions: Vec<Vec<u64>> = Vec::new();
    let mut frontier: Vec<(Vec<u64>, Vec<i64>)> = (0..width)
        .map(|j| {
            let mut x = vec![0u64; width];
            x[j] = 1;
            (x, columns[j].clone())
        })
        .collect();

    while !frontier.is_empty() {
        let mut pending = Vec::with_capacity(frontier.len());
        for (x, ax) in frontier {
            if ax.iter().all(|&v| v == 0) {
                solutions.push(x);
            } else {
                pending.push((x, ax));
            }
        }
        let mut next: Vec<(Vec<u64>, Vec<i64>)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (x, ax) in &pending {
            for (j, col) in columns.iter().enumerate() {
                if j == t && x[t] >= 1 {
                    continue;
                }
                let dot: i64 = ax.iter().zip(col).map(|(a, c)| a * c).sum();
                if dot >= 0 {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                if solutions.iter().any(|s| dominates(&y, s)) {
                    continue;
                }
                if seen.insert(y.clone()) {
                    let ay: Vec<i64> = ax.iter().zip(col).map(|(a, c)| a + c).collect();
                    next.push((y, ay));
                }
            }
        }
        if next.len() > max_frontier {
            return Err(Error::resource(
                "hilbert_basis",
                format!(
                    "candidate layer of {} vectors exceeds limit {max_frontier}",
                    next.len()
                ),
            ));
        }
        frontier = next;
    }

    let mut out = HilbertSolution::default();
    for mut s in solutions {
        let tval = s.pop().unwrap_or(0);
        if tval == 1 {
            out.inhomogeneous.push(s);
        } else {
            out.homogeneous.push(s);
        }
    }
    out.inhomogeneous.sort();
    out.inhomogeneous.dedup();
    out.homogeneous.sort();
    out.homogeneous.dedup();
    Ok(out)
}

/// `a >= b` componentwise.
fn dominates(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every solution of `A x = b` with entries in `[0, bound]`.
    fn brute_force(matrix: &[Vec<i64>], rhs: &[i64], bound: u64) -> Vec<Vec<u64>> {
        let n = matrix[0].len();
        let mut out = Vec::new();
        let mut x = vec![0u64; n];
        loop {
            let ok = matrix.iter().zip(rhs).all(|(row, &b)| {
                row.iter().zip(&x).map(|(a, &v)| a * v as i64).sum::<i64>() == b
            });
            if ok {
                out.push(x.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                if x[i] < bound {
                    x[i] += 1;
                    break;
                }
                x[i] = 0;
                i += 1;
            }
        }
    }

    /// Minimal elements among nonzero vectors of a set.
    fn minimal(set: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let nonzero: Vec<_> = set.iter().filter(|v| v.iter().any(|&x| x > 0)).collect();
        let mut out: Vec<Vec<u64>> = nonzero
            .iter()
            .filter(|v| !nonzero.iter().any(|w| w != *v && dominates(v, w)))
            .map(|v| (*v).clone())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn symmetric_equation() {
        let s = hilbert_basis(&[vec![1, -1]], &[0]).unwrap();
        assert_eq!(s.homogeneous, vec![vec![1, 1]]);
        assert_eq!(s.inhomogeneous, vec![vec![0, 0]]);
    }

    #[test]
    fn two_three_equation_matches_enumeration() {
        let m = vec![vec![2, -3]];
        let expected = minimal(&brute_force(&m, &[0], 3));
        assert_eq!(expected, vec![vec![3, 2]]);
        assert_eq!(hilbert_basis(&m, &[0]).unwrap().homogeneous, expected);
    }

    #[test]
    fn three_unknowns_matches_enumeration() {
        let m = vec![vec![1, 1, -1]];
        let expected = minimal(&brute_force(&m, &[0], 1));
        assert_eq!(expected, vec![vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(hilbert_basis(&m, &[0]).unwrap().homogeneous, expected);
    }

    #[test]
    fn inhomogeneous_minimal_solutions() {
        // x - 2y = 1: minimal solutions (1,0); basis (2,1)
        let s = hilbert_basis(&[vec![1, -2]], &[1]).unwrap();
        assert_eq!(s.inhomogeneous, vec![vec![1, 0]]);
        assert_eq!(s.homogeneous, vec![vec![2, 1]]);
    }

    #[test]
    fn infeasible_system_has_no_solutions() {
        // 2x = 1
        let s = hilbert_basis(&[vec![2]], &[1]).unwrap();
        assert!(s.inhomogeneous.is_empty());
        // x + y = -1
        let s = hilbert_basis(&[vec![1, 1]], &[-1]).unwrap();
        assert!(s.inhomogeneous.is_empty());
    }

    #[test]
    fn ragged_input_rejected() {
        assert!(hilbert_basis(&[vec![1, 2], vec![1]], &[0, 0]).is_err());
        assert!(hilbert_basis(&[], &[]).is_err());
        assert!(hilbert_basis(&[vec![1]], &[0, 0]).is_err());
    }

    #[test]
    fn random_systems_against_brute_force() {
        use proptest::prelude::*;
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        let strat = (1usize..=2, 1usize..=3).prop_flat_map(|(rows, cols)| {
            (
                proptest::collection::vec(proptest::collection::vec(-2i64..=2, cols), rows),
                proptest::collection::vec(-2i64..=2, rows),
            )
        });
        runner
            .run(&strat, |(m, b)| {
                let sol = hilbert_basis(&m, &b).unwrap();
                let all = brute_force(&m, &b, 6);
                let homog_all = brute_force(&m, &vec![0; b.len()], 6);
                for x in sol.inhomogeneous.iter().chain(&sol.homogeneous) {
                    let rhs_is_zero = sol.homogeneous.contains(x);
                    let target: Vec<i64> = if rhs_is_zero { vec![0; b.len()] } else { b.clone() };
                    for (row, &t) in m.iter().zip(&target) {
                        let v: i64 = row.iter().zip(x).map(|(a, &v)| a * v as i64).sum();
                        prop_assert_eq!(v, t);
                    }
                }
                for h in &sol.homogeneous {
                    prop_assert!(!sol.homogeneous.iter().any(|o| o != h && dominates(h, o)));
                }
                for x in &all {
                    prop_assert!(sol.generates(x), "solution {:?} not generated", x);
                }
                for x in &homog_all {
                    prop_assert!(crate::semilinear::in_monoid(x, &sol.homogeneous));
                }
                Ok(())
            })
            .unwrap();
    }
}

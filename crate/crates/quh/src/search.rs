//! Brute-force existence oracle for QUH matrices at tiny orders.
//!
//! Rows of H are encoded as sign-row pairs (a, b); two rows i < j are
//! orthogonal iff, with denominators cleared,
//!   Σ a_i a_j + m Σ b_i b_j = 0   and   Σ (a_j b_i - a_i b_j) = 0.
//! Row negation preserves membership in H(n, X_m) and fixes the first column
//! of A to +1; entrywise conjugation (B -> -B) additionally fixes B's
//! top-left entry. B rows below the first stay unrestricted, since no row
//! operation controls their first entry independently of A.

use crate::constructions::{quh_verify, QuhPair};
use crate::error::Result;
use crate::matrix::SignMatrix;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Found(QuhPair),
    ExhaustedEmpty,
    /// Budget ran out before the space was covered; never treated as empty.
    Aborted {
        budget: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_explored: u64,
}

/// Exhaustive row-by-row backtracking over H(n, X_m), with the
/// parity/magnitude shortcut applied up front.
pub fn exhaustive_search(n: usize, m: u64, node_budget: u64) -> Result<SearchOutcome> {
    search_with_options(n, m, node_budget, true)
}

/// With n odd and m > n, the real part Σ a_i a_j + m Σ b_i b_j of a row
/// inner product cannot vanish: Σ b_i b_j is a sum of n odd terms, hence odd
/// and nonzero, so |m Σ b| ≥ m > n ≥ |Σ a|.
pub fn parity_magnitude_empty(n: usize, m: u64) -> bool {
    n >= 2 && n % 2 == 1 && m > n as u64
}

pub fn search_with_options(
    n: usize,
    m: u64,
    node_budget: u64,
    use_parity_prune: bool,
) -> Result<SearchOutcome> {
    if n == 0 || m == 0 {
        return Err(crate::error::Error::Parameter(
            "n and m must be positive".into(),
        ));
    }
    if n == 1 {
        let one = SignMatrix::identity(1);
        let pair = QuhPair::new(m, one.clone(), one)?;
        return Ok(SearchOutcome {
            status: SearchStatus::Found(pair),
            nodes_explored: 1,
        });
    }
    if use_parity_prune && parity_magnitude_empty(n, m) {
        return Ok(SearchOutcome {
            status: SearchStatus::ExhaustedEmpty,
            nodes_explored: 0,
        });
    }

    // all ±1 vectors of length n with first entry +1
    let normalized: Vec<Vec<i8>> = (0..1u32 << (n - 1))
        .map(|bits| {
            (0..n)
                .map(|j| {
                    if j == 0 || bits >> (j - 1) & 1 == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .collect()
        })
        .collect();
    let free: Vec<Vec<i8>> = normalized
        .iter()
        .cloned()
        .chain(
            normalized
                .iter()
                .map(|row| row.iter().map(|&e| -e).collect()),
        )
        .collect();

    let mut state = SearchState {
        n,
        m: m as i64,
        a_candidates: normalized.clone(),
        b_first_candidates: normalized,
        b_candidates: free,
        a_rows: Vec::with_capacity(n),
        b_rows: Vec::with_capacity(n),
        nodes: 0,
        budget: node_budget,
    };
    match state.descend() {
        Descent::Found => {
            let a = SignMatrix::from_rows(&state.a_rows)?;
            let b = SignMatrix::from_rows(&state.b_rows)?;
            let pair = QuhPair::new(m, a, b)?;
            debug_assert!(quh_verify(&pair));
            Ok(SearchOutcome {
                status: SearchStatus::Found(pair),
                nodes_explored: state.nodes,
            })
        }
        Descent::Exhausted => Ok(SearchOutcome {
            status: SearchStatus::ExhaustedEmpty,
            nodes_explored: state.nodes,
        }),
        Descent::OutOfBudget => Ok(SearchOutcome {
            status: SearchStatus::Aborted {
                budget: node_budget,
            },
            nodes_explored: state.nodes,
        }),
    }
}

enum Descent {
    Found,
    Exhausted,
    OutOfBudget,
}

struct SearchState {
    n: usize,
    m: i64,
    a_candidates: Vec<Vec<i8>>,
    b_first_candidates: Vec<Vec<i8>>,
    b_candidates: Vec<Vec<i8>>,
    a_rows: Vec<Vec<i8>>,
    b_rows: Vec<Vec<i8>>,
    nodes: u64,
    budget: u64,
}

impl SearchState {
    fn descend(&mut self) -> Descent {
        if self.a_rows.len() == self.n {
            return Descent::Found;
        }
        let b_set_len = if self.a_rows.is_empty() {
            self.b_first_candidates.len()
        } else {
            self.b_candidates.len()
        };
        for ai in 0..self.a_candidates.len() {
            for bi in 0..b_set_len {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Descent::OutOfBudget;
                }
                let b_row = if self.a_rows.is_empty() {
                    &self.b_first_candidates[bi]
                } else {
                    &self.b_candidates[bi]
                };
                if !self.compatible(&self.a_candidates[ai], b_row) {
                    continue;
                }
                let (a_new, b_new) = (self.a_candidates[ai].clone(), b_row.clone());
                self.a_rows.push(a_new);
                self.b_rows.push(b_new);
                match self.descend() {
                    Descent::Exhausted => {
                        self.a_rows.pop();
                        self.b_rows.pop();
                    }
                    done => return done,
                }
            }
        }
        Descent::Exhausted
    }

    /// Orthogonality of the candidate row pair against every placed row.
    fn compatible(&self, a_new: &[i8], b_new: &[i8]) -> bool {
        for (a_old, b_old) in self.a_rows.iter().zip(&self.b_rows) {
            let mut re_a = 0i64;
            let mut re_b = 0i64;
            let mut im = 0i64;
            for k in 0..self.n {
                re_a += (a_old[k] * a_new[k]) as i64;
                re_b += (b_old[k] * b_new[k]) as i64;
                im += (a_new[k] * b_old[k] - a_old[k] * b_new[k]) as i64;
            }
            if re_a + self.m * re_b != 0 || im != 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fks_quh;

    #[test]
    fn trivial_order_one() {
        for m in [1, 3, 43] {
            let out = exhaustive_search(1, m, 100).unwrap();
            match out.status {
                SearchStatus::Found(pair) => assert!(quh_verify(&pair)),
                other => panic!("expected Found, got {other:?}"),
            }
        }
    }

    #[test]
    fn n5_m43_empty_by_prune() {
        let out = exhaustive_search(5, 43, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(out.status, SearchStatus::ExhaustedEmpty);
        assert_eq!(out.nodes_explored, 0);
    }

    #[test]
    fn prune_agrees_with_full_search() {
        // wherever the shortcut fires at searchable sizes, the unpruned
        // backtracking must also come up empty
        for (n, m) in [(3usize, 5u64), (3, 7), (3, 11), (5, 7), (5, 11)] {
            assert!(parity_magnitude_empty(n, m));
            let full = search_with_options(n, m, DEFAULT_NODE_BUDGET, false).unwrap();
            assert_eq!(full.status, SearchStatus::ExhaustedEmpty, "n={n} m={m}");
        }
    }

    #[test]
    fn finds_fks_instance_at_n3() {
        // H(3, X_3) is inhabited by the FKS pair, so the search must find one
        let out = exhaustive_search(3, 3, DEFAULT_NODE_BUDGET).unwrap();
        match out.status {
            SearchStatus::Found(pair) => {
                assert!(quh_verify(&pair));
                assert_eq!(pair.order(), 3);
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn budget_abort_is_reported() {
        let out = search_with_options(4, 1, 3, false).unwrap();
        assert_eq!(out.status, SearchStatus::Aborted { budget: 3 });
    }

    #[test]
    fn row_negation_preserves_membership() {
        let pair = fks_quh(3, 1).unwrap();
        let mut a = pair.a_part().clone();
        let mut b = pair.b_part().clone();
        for i in 0..3 {
            a.negate_row(i);
            b.negate_row(i);
            let negated = QuhPair::new(3, a.clone(), b.clone()).unwrap();
            assert!(quh_verify(&negated), "negating row {i}");
            a.negate_row(i);
            b.negate_row(i);
        }
    }
}

//! The morphism carrying a QUH pair of order n and a skew-Hadamard matrix of
//! order m+1 to a real Hadamard matrix of order n(m+1), by block
//! substitution: R = I ⊗ A + (M - I) ⊗ B.

use crate::constructions::{quh_verify, QuhPair};
use crate::error::{Error, Result};
use crate::matrix::{is_hadamard, is_skew_hadamard, SignMatrix};

/// A real Hadamard matrix produced by the morphism, with the orders of its
/// two sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismResult {
    pub matrix: SignMatrix,
    pub source_order: usize,
    pub skew_order: usize,
}

/// Substitute A for the diagonal of the skew matrix and ±B for its
/// off-diagonal ±1 entries. Valid for every m, perfect square or not.
pub fn apply_morphism(quh: &QuhPair, skew: &SignMatrix) -> Result<MorphismResult> {
    let m = quh.parameter() as usize;
    if skew.order() != m + 1 {
        return Err(Error::Parameter(format!(
            "skew order {} != m+1 = {}",
            skew.order(),
            m + 1
        )));
    }
    if !quh_verify(quh) {
        return Err(Error::Validation(
            "QUH invariants fail (Gram identity or zero entry)".into(),
        ));
    }
    if !is_skew_hadamard(skew) {
        return Err(Error::Validation("matrix is not skew-Hadamard".into()));
    }
    let n = quh.order();
    let (a, b) = (quh.a_part(), quh.b_part());
    let matrix = SignMatrix::from_fn(n * (m + 1), |i, j| {
        let (bi, bj) = (i / n, j / n);
        let (fi, fj) = (i % n, j % n);
        if bi == bj {
            a.get(fi, fj)
        } else {
            skew.get(bi, bj) * b.get(fi, fj)
        }
    });
    debug_assert!(is_hadamard(&matrix));
    Ok(MorphismResult {
        matrix,
        source_order: n,
        skew_order: m + 1,
    })
}

/// Recipe for a Hadamard matrix of order q^n + q^(n-1): run the FKS
/// construction at depth t = n-1 and morph by the Paley matrix of order q+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorollaryRecipe {
    pub order: u64,
    pub fks_depth: u32,
    pub paley_q: u64,
}

pub fn corollary_order(q: u64, n: u32) -> Result<CorollaryRecipe> {
    if q % 4 != 3 || crate::numtheory::prime_power_decompose(q).is_none() {
        return Err(Error::Parameter(format!(
            "q={q} is not a prime power ≡ 3 mod 4"
        )));
    }
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    Ok(CorollaryRecipe {
        order: q.pow(n) + q.pow(n - 1),
        fks_depth: n - 1,
        paley_q: q,
    })
}

/// True iff m+1 is not a perfect square, i.e. the quartic x⁴ +
/// 2(m-1)/(m+1) x² + 1 is irreducible over Q and hence minimal for
/// H/√(m+1); when false it splits into two rational quadratics.
pub fn quartic_is_minimal(m: u64) -> bool {
    let v = m + 1;
    let r = (v as f64).sqrt() as u64;
    // guard against rounding at the boundary
    !(r.saturating_sub(1)..=r + 1).any(|x| x * x == v)
}

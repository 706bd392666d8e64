//! Generative constructions: Paley skew-Hadamard matrices of order q+1 and
//! Fender-Kharaghani-Suda quaternary unit Hadamard matrices of order q^t.

use crate::error::{Error, Result};
use crate::gf::{jacobsthal, GfField};
use crate::matrix::{self, dot, SignMatrix};
use crate::numtheory::prime_power_decompose;

/// Sign-pair encoding (A, B) of a quaternary unit Hadamard matrix
/// H = (A + √-m B)/√(m+1) of order n.
///
/// Invariants: A Bᵀ = B Aᵀ and A Aᵀ + m B Bᵀ = n(m+1) I, exactly, with both
/// parts zero-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuhPair {
    order: usize,
    parameter: u64,
    a_part: SignMatrix,
    b_part: SignMatrix,
}

impl QuhPair {
    pub fn new(parameter: u64, a_part: SignMatrix, b_part: SignMatrix) -> Result<Self> {
        if a_part.order() != b_part.order() {
            return Err(Error::Dimension(format!(
                "A order {} != B order {}",
                a_part.order(),
                b_part.order()
            )));
        }
        if parameter == 0 {
            return Err(Error::Parameter("parameter m must be positive".into()));
        }
        Ok(QuhPair {
            order: a_part.order(),
            parameter,
            a_part,
            b_part,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parameter(&self) -> u64 {
        self.parameter
    }

    pub fn a_part(&self) -> &SignMatrix {
        &self.a_part
    }

    pub fn b_part(&self) -> &SignMatrix {
        &self.b_part
    }
}

fn field_for_prime_power(q: u64) -> Result<GfField> {
    let (p, k) = prime_power_decompose(q)
        .ok_or_else(|| Error::Parameter(format!("{q} is not a prime power")))?;
    if p == 2 {
        return Err(Error::Parameter(format!("{q} is even")));
    }
    GfField::new(p, k as usize)
}

/// Paley skew-Hadamard matrix of order q+1 for a prime power q ≡ 3 mod 4.
///
/// Border convention: first row all +1, first column below the corner all -1,
/// diagonal +1; the core is I + Q for the Jacobsthal matrix Q.
pub fn paley_skew(q: u64) -> Result<SignMatrix> {
    if q % 4 != 3 {
        return Err(Error::Parameter(format!("q={q} is not ≡ 3 mod 4")));
    }
    let field = field_for_prime_power(q)?;
    let jac = jacobsthal(&field);
    let n = q as usize + 1;
    Ok(SignMatrix::from_fn(n, |i, j| match (i, j) {
        (0, _) => 1,
        (_, 0) => -1,
        (i, j) if i == j => 1,
        (i, j) => jac.get(i - 1, j - 1),
    }))
}

/// FKS recursion: A₀ = B₀ = [1], Aₜ = J_q ⊗ Bₜ₋₁, Bₜ = I_q ⊗ Aₜ₋₁ + Q ⊗ Bₜ₋₁.
/// Returns the order-q^t QUH pair with parameter m = q; t = 0 gives the
/// scalar pair A = B = [1].
pub fn fks_quh(q: u64, t: u32) -> Result<QuhPair> {
    if q % 4 != 3 {
        return Err(Error::Parameter(format!("q={q} is not ≡ 3 mod 4")));
    }
    let field = field_for_prime_power(q)?;
    let jac = jacobsthal(&field).to_int();
    let ones = SignMatrix::all_ones(q as usize).to_int();
    let ident = SignMatrix::identity(q as usize).to_int();

    let mut a = SignMatrix::identity(1).to_int();
    let mut b = a.clone();
    for _ in 0..t {
        let next_a = ones.kronecker(&b);
        let next_b = ident.kronecker(&a).add(&jac.kronecker(&b))?;
        a = next_a;
        b = next_b;
    }
    // I ⊗ A fills Q's zero diagonal, so both parts are ±1 throughout.
    let a = a.to_sign()?;
    let b = b.to_sign()?;
    debug_assert!(a.is_zero_free() && b.is_zero_free());
    QuhPair::new(q, a, b)
}

/// True iff both QUH invariants hold exactly and both parts are zero-free.
pub fn quh_verify(candidate: &QuhPair) -> bool {
    let n = candidate.order;
    let m = candidate.parameter as i64;
    let (a, b) = (&candidate.a_part, &candidate.b_part);
    if !a.is_zero_free() || !b.is_zero_free() {
        return false;
    }
    let target = n as i64 * (m + 1);
    for i in 0..n {
        for j in i..n {
            let gram = dot(a.row(i), a.row(j)) + m * dot(b.row(i), b.row(j));
            if gram != if i == j { target } else { 0 } {
                return false;
            }
            // (A Bᵀ)[i][j] = (B Aᵀ)[i][j] reduces to a symmetry of mixed dots
            if dot(a.row(i), b.row(j)) != dot(b.row(i), a.row(j)) {
                return false;
            }
        }
    }
    true
}

/// Emit the QUH text format: "QUH n m", then the A rows and the B rows in
/// PM characters. Zero entries are forbidden.
pub fn format_quh(pair: &QuhPair) -> String {
    let mut out = format!("QUH {} {}\n", pair.order, pair.parameter);
    for part in [&pair.a_part, &pair.b_part] {
        for i in 0..pair.order {
            for &e in part.row(i) {
                out.push(if e == 1 { '+' } else { '-' });
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse_quh(text: &str) -> Result<QuhPair> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "QUH" {
        return Err(Error::Format(format!("bad QUH header {header:?}")));
    }
    let n: usize = fields[1]
        .parse()
        .map_err(|_| Error::Format(format!("bad order {:?}", fields[1])))?;
    let m: u64 = fields[2]
        .parse()
        .map_err(|_| Error::Format(format!("bad parameter {:?}", fields[2])))?;
    if n == 0 {
        return Err(Error::Format("order must be positive".into()));
    }
    let mut read_part = |name: &str| -> Result<SignMatrix> {
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Format(format!("missing row {i} of {name}")))?;
            let row = matrix::parse_pm_row(line, n)?;
            if row.contains(&0) {
                return Err(Error::Format("zero entry forbidden in QUH format".into()));
            }
            rows.push(row);
        }
        SignMatrix::from_rows(&rows)
    };
    let a = read_part("A")?;
    let b = read_part("B")?;
    QuhPair::new(m, a, b)
}

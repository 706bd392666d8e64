//! Exact integer square matrices and the Hadamard verification predicates.
//!
//! Two carriers: [`SignMatrix`] for {-1,0,+1} data (Hadamard, skew, Jacobsthal)
//! and [`IntMatrix`] for products and polynomial identities. All arithmetic is
//! exact; entries at the orders supported here stay far below `i64` range.

use std::fmt;

use crate::error::{Error, Result};

/// Square matrix with entries in {-1, 0, +1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

/// Square matrix with `i64` entries, the carrier for Gram products and
/// matrix-polynomial identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl SignMatrix {
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parameter("matrix order must be positive".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension(format!(
                    "row length {} != order {}",
                    row.len(),
                    n
                )));
            }
            for &e in row {
                if !(-1..=1).contains(&e) {
                    return Err(Error::Validation(format!("entry {e} not in {{-1,0,1}}")));
                }
                entries.push(e);
            }
        }
        Ok(SignMatrix { order: n, entries })
    }

    /// Build from a closure; the closure must return values in {-1,0,1}.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i8) -> Self {
        assert!(order > 0);
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                let e = f(i, j);
                assert!((-1..=1).contains(&e), "entry {e} not in {{-1,0,1}}");
                entries.push(e);
            }
        }
        SignMatrix { order, entries }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| (i == j) as i8)
    }

    pub fn all_ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| 1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn is_zero_free(&self) -> bool {
        self.entries.iter().all(|&e| e != 0)
    }

    pub fn transpose(&self) -> SignMatrix {
        let n = self.order;
        SignMatrix::from_fn(n, |i, j| self.get(j, i))
    }

    /// Negate row `i` in place; used by the search module's normalization.
    pub fn negate_row(&mut self, i: usize) {
        for e in &mut self.entries[i * self.order..(i + 1) * self.order] {
            *e = -*e;
        }
    }

    pub fn to_int(&self) -> IntMatrix {
        IntMatrix {
            order: self.order,
            entries: self.entries.iter().map(|&e| e as i64).collect(),
        }
    }
}

/// Exact dot product of two sign rows.
pub(crate) fn dot(a: &[i8], b: &[i8]) -> i64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x as i32) * (y as i32))
        .sum::<i32>() as i64
}

/// True iff `h` is zero-free and `h hᵀ = n I` exactly.
pub fn is_hadamard(h: &SignMatrix) -> bool {
    if !h.is_zero_free() {
        return false;
    }
    let n = h.order as i64;
    for i in 0..h.order {
        for j in i..h.order {
            let expect = if i == j { n } else { 0 };
            if dot(h.row(i), h.row(j)) != expect {
                return false;
            }
        }
    }
    true
}

/// True iff `h` is Hadamard and `h + hᵀ = 2 I`.
pub fn is_skew_hadamard(h: &SignMatrix) -> bool {
    let n = h.order;
    for i in 0..n {
        for j in 0..n {
            let sum = h.get(i, j) + h.get(j, i);
            let expect = if i == j { 2 } else { 0 };
            if sum as i64 != expect {
                return false;
            }
        }
    }
    is_hadamard(h)
}

/// True iff `h·h = 2h - (m+1) I` where `m+1` is the order of `h`.
pub fn skew_quadratic_check(h: &SignMatrix) -> bool {
    let n = h.order;
    let hi = h.to_int();
    let sq = hi.multiply(&hi).expect("same order");
    let rhs = hi
        .scale(2)
        .add(&IntMatrix::scaled_identity(n, -(n as i64)))
        .expect("same order");
    sq == rhs
}

/// True iff `H⁴ + 2(m-1) H² + (m+1)² I = 0` where `m+1` is the order of `h`.
///
/// This is the minimal-polynomial identity for `H/√(m+1)` cleared of
/// denominators; it holds for every skew-Hadamard matrix regardless of
/// whether `m+1` is a perfect square.
pub fn quartic_identity_check(h: &SignMatrix) -> bool {
    let n = h.order as i64;
    let m = n - 1;
    let hi = h.to_int();
    let h2 = hi.multiply(&hi).expect("same order");
    let h4 = h2.multiply(&h2).expect("same order");
    let lhs = h4
        .add(&h2.scale(2 * (m - 1)))
        .expect("same order")
        .add(&IntMatrix::scaled_identity(h.order, n * n))
        .expect("same order");
    lhs.is_zero()
}

impl IntMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        assert!(order > 0);
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        IntMatrix { order, entries }
    }

    pub fn identity(order: usize) -> Self {
        Self::scaled_identity(order, 1)
    }

    pub fn scaled_identity(order: usize, c: i64) -> Self {
        Self::from_fn(order, |i, j| if i == j { c } else { 0 })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.order, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.order != other.order {
            return Err(Error::Dimension(format!(
                "add: orders {} and {}",
                self.order, other.order
            )));
        }
        Ok(IntMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix {
            order: self.order,
            entries: self.entries.iter().map(|e| c * e).collect(),
        }
    }

    pub fn multiply(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.order != other.order {
            return Err(Error::Dimension(format!(
                "multiply: orders {} and {}",
                self.order, other.order
            )));
        }
        let n = self.order;
        let mut entries = vec![0i64; n * n];
        // ikj order keeps the inner loop on contiguous rows of `other`.
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                let orow = &other.entries[k * n..(k + 1) * n];
                let out = &mut entries[i * n..(i + 1) * n];
                for (o, &b) in out.iter_mut().zip(orow) {
                    *o += a * b;
                }
            }
        }
        Ok(IntMatrix { order: n, entries })
    }

    /// Kronecker product; block (i,j) of the result is `self[i][j] * other`.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let (na, nb) = (self.order, other.order);
        IntMatrix::from_fn(na * nb, |i, j| {
            self.get(i / nb, j / nb) * other.get(i % nb, j % nb)
        })
    }

    /// Convert to a sign matrix; fails if any entry is outside {-1,0,1}.
    pub fn to_sign(&self) -> Result<SignMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for &e in &self.entries {
            if !(-1..=1).contains(&e) {
                return Err(Error::Validation(format!("entry {e} not in {{-1,0,1}}")));
            }
            entries.push(e as i8);
        }
        Ok(SignMatrix {
            order: self.order,
            entries,
        })
    }
}

/// Parse the PM text format: first line the decimal order `n`, then `n` rows
/// of `n` characters from `{+, -, 0}` with no separators.
pub fn parse_pm(text: &str) -> Result<SignMatrix> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty input".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Format(format!("bad order line {header:?}")))?;
    if n == 0 {
        return Err(Error::Format("order must be positive".into()));
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Format(format!("expected {n} rows, got {i}")))?;
        let row = parse_pm_row(line, n)?;
        entries.extend(row);
    }
    if let Some(extra) = lines.next() {
        if !extra.trim().is_empty() {
            return Err(Error::Format("trailing data after matrix".into()));
        }
    }
    Ok(SignMatrix { order: n, entries })
}

pub(crate) fn parse_pm_row(line: &str, n: usize) -> Result<Vec<i8>> {
    let chars: Vec<char> = line.chars().collect();
    if chars.len() != n {
        return Err(Error::Format(format!(
            "ragged row: {} characters, expected {n}",
            chars.len()
        )));
    }
    chars
        .iter()
        .map(|&c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            '0' => Ok(0),
            other => Err(Error::Format(format!("illegal character {other:?}"))),
        })
        .collect()
}

pub fn format_pm(m: &SignMatrix) -> String {
    let mut out = format!("{}\n", m.order);
    for i in 0..m.order {
        for &e in m.row(i) {
            out.push(match e {
                1 => '+',
                -1 => '-',
                _ => '0',
            });
        }
        out.push('\n');
    }
    out
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pm(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(rows: &[&[i8]]) -> SignMatrix {
        SignMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    // Paley skew matrix of order 4, written out by hand.
    fn paley4() -> SignMatrix {
        sm(&[
            &[1, 1, 1, 1],
            &[-1, 1, -1, 1],
            &[-1, 1, 1, -1],
            &[-1, -1, 1, 1],
        ])
    }

    #[test]
    fn multiply_identity_and_ones() {
        let i4 = IntMatrix::identity(4);
        assert_eq!(i4.multiply(&i4).unwrap(), i4);
        let j3 = SignMatrix::all_ones(3).to_int();
        assert_eq!(j3.multiply(&j3).unwrap(), j3.scale(3));
    }

    #[test]
    fn multiply_paley_gram() {
        let h = paley4().to_int();
        let gram = h.multiply(&h.transpose()).unwrap();
        assert_eq!(gram, IntMatrix::scaled_identity(4, 4));
    }

    #[test]
    fn multiply_order_mismatch() {
        let a = IntMatrix::identity(2);
        let b = IntMatrix::identity(3);
        assert!(matches!(a.multiply(&b), Err(Error::Dimension(_))));
    }

    #[test]
    fn kronecker_blocks() {
        let m = sm(&[&[1, -1], &[0, 1]]).to_int();
        let i2 = IntMatrix::identity(2);
        let k = i2.kronecker(&m);
        assert_eq!(k.order(), 4);
        // block diagonal [m, m]
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(k.get(i, j), m.get(i, j));
                assert_eq!(k.get(2 + i, 2 + j), m.get(i, j));
                assert_eq!(k.get(i, 2 + j), 0);
                assert_eq!(k.get(2 + i, j), 0);
            }
        }
        let j2 = SignMatrix::all_ones(2).to_int();
        let one = IntMatrix::identity(1);
        assert_eq!(j2.kronecker(&one), j2);
    }

    #[test]
    fn hadamard_predicates() {
        assert!(is_hadamard(&sm(&[&[1, 1], &[1, -1]])));
        assert!(!is_hadamard(&SignMatrix::all_ones(2)));
        assert!(is_hadamard(&paley4()));

        assert!(is_skew_hadamard(&sm(&[&[1, 1], &[-1, 1]])));
        assert!(!is_skew_hadamard(&sm(&[&[1, 1], &[1, -1]])));
        assert!(is_skew_hadamard(&paley4()));
    }

    #[test]
    fn skew_quadratic() {
        assert!(skew_quadratic_check(&sm(&[&[1, 1], &[-1, 1]])));
        assert!(skew_quadratic_check(&paley4()));
        // symmetric Hadamard: H² = 2I ≠ 2H - 2I
        assert!(!skew_quadratic_check(&sm(&[&[1, 1], &[1, -1]])));
    }

    #[test]
    fn quartic_identity() {
        // m=3: H⁴ + 4H² + 16I = 0
        assert!(quartic_identity_check(&paley4()));
        // m=1 symmetric: H⁴ = 4I so H⁴ + 0 + 4I = 8I ≠ 0
        assert!(!quartic_identity_check(&sm(&[&[1, 1], &[1, -1]])));
    }

    #[test]
    fn pm_round_trip() {
        let h = paley4();
        let text = format_pm(&h);
        assert_eq!(text, "4\n++++\n-+-+\n-++-\n--++\n");
        assert_eq!(parse_pm(&text).unwrap(), h);
    }

    #[test]
    fn pm_rejects_garbage() {
        assert!(parse_pm("").is_err());
        assert!(parse_pm("2\n++\n+x\n").is_err());
        assert!(parse_pm("2\n++\n+\n").is_err());
        assert!(parse_pm("2\n++\n++\n--\n").is_err());
        assert!(parse_pm("x\n").is_err());
    }

    // Exact determinant by fraction-free Gaussian elimination (Bareiss);
    // test-only oracle for the |det| = n^(n/2) invariant.
    fn det_exact(m: &IntMatrix) -> i64 {
        let n = m.order();
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j) as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                    return 0;
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]) as i64
    }

    #[test]
    fn hadamard_determinant_small() {
        let h2 = sm(&[&[1, 1], &[1, -1]]);
        assert_eq!(det_exact(&h2.to_int()).abs(), 2); // 2^(2/2)
        assert_eq!(det_exact(&paley4().to_int()).abs(), 16); // 4^(4/2)
        let h8 = crate::constructions::paley_skew(7).unwrap();
        assert_eq!(det_exact(&h8.to_int()).abs(), 4096); // 8^4
    }
}

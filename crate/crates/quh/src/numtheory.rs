//! Rational-prime number theory: Legendre symbols, squarefree parts,
//! biquadratic discriminants, prime splitting in K = Q[√-p, √s], and the
//! nonexistence predicates for QUH matrices.

use crate::error::{Error, Result};

/// Trial-division primality; inputs stay well below 10^9.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Write n = p^k for a prime p, if possible.
pub fn prime_power_decompose(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    let mut k = 0;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest == 1 {
        Some((p, k))
    } else {
        None
    }
}

fn pow_mod(base: u64, mut e: u64, modulus: u64) -> u64 {
    let mut acc = 1u128;
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

/// Legendre symbol (a/q) by Euler's criterion.
pub fn legendre(a: i64, q: u64) -> Result<i8> {
    if q == 2 || !is_prime(q) {
        return Err(Error::Parameter(format!("{q} is not an odd prime")));
    }
    let a_mod = a.rem_euclid(q as i64) as u64;
    if a_mod == 0 {
        return Ok(0);
    }
    let r = pow_mod(a_mod, (q - 1) / 2, q);
    Ok(if r == 1 { 1 } else { -1 })
}

/// Product of the primes dividing n to an odd power, by trial division.
pub fn squarefree_part(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut out = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e % 2 == 1 {
                out *= d;
            }
        }
        d += 1;
    }
    out * n // any leftover n > 1 is a prime to the first power
}

fn check_p(p: u64) -> Result<()> {
    if !is_prime(p) || p % 4 != 3 {
        return Err(Error::Parameter(format!("p={p} is not a prime ≡ 3 mod 4")));
    }
    Ok(())
}

/// Discriminant of K = Q[√-p, √s] with s the squarefree part of p+1:
/// s²p² when s ≡ 1 mod 4, else 16 s²p².
pub fn disc_k(p: u64) -> Result<u64> {
    check_p(p)?;
    let s = squarefree_part(p + 1);
    let base = s * s * p * p;
    Ok(if s % 4 == 1 { base } else { 16 * base })
}

/// Splitting of an odd rational prime q in K = Q[√-p, √s].
///
/// K₁ = Q[√-p], K₂ = Q[√s], K₃ = Q[√-ps]. No prime is inert in K, so every
/// non-ramified prime either splits completely or splits in exactly one of
/// the three quadratic subfields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitType {
    Ramified,
    SplitsCompletely,
    SplitsInK1Only,
    SplitsInK2Only,
    SplitsInK3Only,
}

impl std::fmt::Display for SplitType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SplitType::Ramified => "ramified",
            SplitType::SplitsCompletely => "splits completely",
            SplitType::SplitsInK1Only => "splits in K1 = Q[sqrt(-p)] only",
            SplitType::SplitsInK2Only => "splits in K2 = Q[sqrt(s)] only",
            SplitType::SplitsInK3Only => "splits in K3 = Q[sqrt(-p*s)] only",
        };
        f.write_str(s)
    }
}

pub fn split_type(q: u64, p: u64) -> Result<SplitType> {
    check_p(p)?;
    if q == 2 || !is_prime(q) {
        return Err(Error::Parameter(format!("q={q} is not an odd prime")));
    }
    if q == p {
        return Err(Error::Parameter("q must differ from p".into()));
    }
    let s = squarefree_part(p + 1);
    if s % q == 0 || q == p {
        return Ok(SplitType::Ramified);
    }
    let chi_mp = legendre(-(p as i64), q)?;
    let chi_s = legendre(s as i64, q)?;
    Ok(match (chi_mp, chi_s) {
        (1, 1) => SplitType::SplitsCompletely,
        (1, -1) => SplitType::SplitsInK1Only,
        (-1, 1) => SplitType::SplitsInK2Only,
        // (-ps/q) = (-p/q)(s/q) = +1
        (-1, -1) => SplitType::SplitsInK3Only,
        _ => unreachable!("q coprime to sp"),
    })
}

/// Outcome of a nonexistence test for H(n, X_p).
///
/// `Empty` certifies nonexistence with a witness prime; `Unknown` means the
/// criterion is silent, never that a matrix exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonexistenceVerdict {
    Empty { witness: u64 },
    Unknown,
}

/// Odd prime divisors of n, ascending.
fn odd_prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    while n % 2 == 0 {
        n /= 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Nonexistence test for H(n, X_p): scans the odd prime divisors q of the
/// squarefree part t of n, ascending, for one with (s/q) = 1 and
/// (-p/q) = -1; the smallest such q is the witness.
pub fn nonexistence_witness(n: u64, p: u64) -> Result<NonexistenceVerdict> {
    if n % 2 == 0 {
        return Err(Error::Parameter(format!("n={n} must be odd")));
    }
    check_p(p)?;
    let s = squarefree_part(p + 1);
    if s == 1 {
        return Err(Error::Parameter(
            "squarefree part of p+1 is 1 (p = 3); use the X3 criterion instead".into(),
        ));
    }
    let t = squarefree_part(n);
    for q in odd_prime_divisors(t) {
        if legendre(s as i64, q)? == 1 && legendre(-(p as i64), q)? == -1 {
            return Ok(NonexistenceVerdict::Empty { witness: q });
        }
    }
    Ok(NonexistenceVerdict::Unknown)
}

/// Emptiness criterion for H(n, X_3): empty if some prime q ≡ 5 mod 6
/// divides the squarefree part of n.
pub fn x3_emptiness(n: u64) -> NonexistenceVerdict {
    assert!(n >= 1);
    let t = squarefree_part(n);
    odd_prime_divisors(t)
        .into_iter()
        .find(|&q| q % 6 == 5)
        .map_or(NonexistenceVerdict::Unknown, |q| NonexistenceVerdict::Empty {
            witness: q,
        })
}

/// All odd n ≤ n_max with an Empty verdict for H(n, X_p), ascending.
pub fn emptiness_table(p: u64, n_max: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for n in (1..=n_max).step_by(2) {
        if let NonexistenceVerdict::Empty { .. } = nonexistence_witness(n, p)? {
            out.push(n);
        }
    }
    Ok(out)
}

/// Primes ≤ limit by a sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Proportion of witness-eligible primes, as an exact fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityResult {
    /// Odd primes q ≤ limit with q ∤ sp, (s/q) = 1 and (-p/q) = -1.
    pub qualifying: u64,
    /// Odd primes q ≤ limit with q ∤ sp.
    pub total: u64,
}

impl DensityResult {
    pub fn proportion(&self) -> f64 {
        self.qualifying as f64 / self.total as f64
    }

    /// Reduced numerator/denominator.
    pub fn reduced(&self) -> (u64, u64) {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(self.qualifying, self.total).max(1);
        (self.qualifying / g, self.total / g)
    }
}

/// Empirical density of primes satisfying the witness conditions for p;
/// tends to 1/4 by Chebotarev.
pub fn density_scan(p: u64, limit: u64) -> Result<DensityResult> {
    check_p(p)?;
    let s = squarefree_part(p + 1);
    if s == 1 {
        return Err(Error::Parameter("squarefree part of p+1 is 1".into()));
    }
    if limit < 3 {
        return Err(Error::Parameter("limit must be at least 3".into()));
    }
    let mut qualifying = 0;
    let mut total = 0;
    for q in primes_up_to(limit) {
        if q == 2 || s * p % q == 0 {
            continue;
        }
        total += 1;
        if legendre(s as i64, q)? == 1 && legendre(-(p as i64), q)? == -1 {
            qualifying += 1;
        }
    }
    Ok(DensityResult { qualifying, total })
}

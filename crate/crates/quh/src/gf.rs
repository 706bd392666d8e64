//! Finite fields GF(p^k) of odd order, the quadratic character, and the
//! Jacobsthal matrix.
//!
//! Elements are coefficient vectors modulo a fixed monic irreducible
//! polynomial. The canonical enumeration orders elements by their coefficient
//! vector read as a base-p integer with the constant term least significant,
//! so g₀ = 0 always and two constructions of the same field agree exactly.

use std::rc::Rc;

use crate::error::{Error, Result};
use crate::matrix::SignMatrix;
use crate::numtheory::is_prime;

#[derive(Debug, PartialEq, Eq)]
struct FieldData {
    p: u64,
    k: usize,
    /// Monic irreducible modulus, constant term first, length k+1.
    modulus: Vec<u64>,
}

/// The field GF(p^k) for an odd prime p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfField {
    data: Rc<FieldData>,
}

/// Element of a [`GfField`]: k coefficients in [0, p), constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfElement {
    field: GfField,
    coeffs: Vec<u64>,
}

impl GfField {
    /// GF(p^k) with the lexicographically smallest monic irreducible modulus
    /// of degree k (coefficients compared from the constant term upward).
    /// For k = 1 the modulus is x.
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::Parameter(format!("{p} is not an odd prime")));
        }
        if k == 0 {
            return Err(Error::Parameter("degree must be positive".into()));
        }
        let modulus = smallest_irreducible(p, k);
        Ok(GfField {
            data: Rc::new(FieldData { p, k, modulus }),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.data.p
    }

    pub fn degree(&self) -> usize {
        self.data.k
    }

    /// q = p^k.
    pub fn element_count(&self) -> u64 {
        self.data.p.pow(self.data.k as u32)
    }

    /// Modulus coefficients, constant term first, length k+1, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.data.modulus
    }

    pub fn zero(&self) -> GfElement {
        GfElement {
            field: self.clone(),
            coeffs: vec![0; self.data.k],
        }
    }

    pub fn one(&self) -> GfElement {
        self.from_index(1)
    }

    /// The i-th element of the canonical enumeration, 0 ≤ i < q.
    pub fn from_index(&self, mut index: u64) -> GfElement {
        assert!(index < self.element_count());
        let p = self.data.p;
        let coeffs = (0..self.data.k)
            .map(|_| {
                let c = index % p;
                index /= p;
                c
            })
            .collect();
        GfElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// All q elements in canonical order; the first is zero.
    pub fn enumerate(&self) -> impl Iterator<Item = GfElement> + '_ {
        (0..self.element_count()).map(|i| self.from_index(i))
    }
}

impl GfElement {
    pub fn field(&self) -> &GfField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn index(&self) -> u64 {
        let p = self.field.data.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same_field(&self, other: &GfElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Parameter("elements from different fields".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &GfElement) -> Result<GfElement> {
        self.check_same_field(other)?;
        let p = self.field.data.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(GfElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &GfElement) -> Result<GfElement> {
        self.check_same_field(other)?;
        let p = self.field.data.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        Ok(GfElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn mul(&self, other: &GfElement) -> Result<GfElement> {
        self.check_same_field(other)?;
        let data = &self.field.data;
        let mut prod = vec![0u64; 2 * data.k - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % data.p;
            }
        }
        let coeffs = reduce(&prod, &data.modulus, data.p, data.k);
        Ok(GfElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, mut e: u64) -> GfElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }
}

/// Reduce a polynomial (constant term first) modulo a monic modulus over Z/p.
fn reduce(poly: &[u64], modulus: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut rem: Vec<u64> = poly.to_vec();
    if rem.len() < k {
        rem.resize(k, 0);
    }
    for d in (k..rem.len()).rev() {
        let c = rem[d];
        if c == 0 {
            continue;
        }
        // subtract c * x^(d-k) * modulus; the monic leading term cancels rem[d]
        for (i, &m) in modulus.iter().enumerate() {
            let idx = d - k + i;
            rem[idx] = (rem[idx] + (p - m % p) % p * c) % p;
        }
    }
    rem.truncate(k);
    rem
}

/// Lexicographically smallest monic irreducible of degree k over Z/p,
/// comparing coefficient vectors from the constant term upward.
fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // x
    }
    let mut best: Option<Vec<u64>> = None;
    let total = p.pow(k as u32);
    for v in 0..total {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut rest = v;
        for _ in 0..k {
            coeffs.push(rest % p);
            rest /= p;
        }
        coeffs.push(1); // monic
        if is_irreducible(&coeffs, p) {
            let lower = &coeffs[..k];
            if best.as_ref().map_or(true, |b| lower < &b[..k]) {
                best = Some(coeffs.clone());
            }
        }
    }
    best.expect("an irreducible of every degree exists over every prime field")
}

/// Trial division by every monic polynomial of degree 1..=k/2.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for v in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut rest = v;
            for _ in 0..d {
                div.push(rest % p);
                rest /= p;
            }
            div.push(1);
            if divides(&div, poly, p) {
                return false;
            }
        }
    }
    true
}

/// Does monic `div` divide `poly` over Z/p?
fn divides(div: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = div.len() - 1;
    for i in (d..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        for (j, &m) in div.iter().enumerate() {
            rem[i - d + j] = (rem[i - d + j] + (p - m % p) % p * c) % p;
        }
    }
    rem[..d].iter().all(|&c| c == 0)
}

/// Quadratic character χ_q by Euler's criterion: 0 at 0, else ±1 as
/// a^((q-1)/2) is 1 or -1.
pub fn quadratic_character(a: &GfElement) -> i8 {
    if a.is_zero() {
        return 0;
    }
    let q = a.field().element_count();
    let r = a.pow((q - 1) / 2);
    if r == a.field().one() {
        1
    } else {
        -1
    }
}

/// The q×q Jacobsthal matrix [χ_q(g_i - g_j)] under the canonical enumeration.
pub fn jacobsthal(field: &GfField) -> SignMatrix {
    let q = field.element_count() as usize;
    let elements: Vec<GfElement> = field.enumerate().collect();
    SignMatrix::from_fn(q, |i, j| {
        quadratic_character(&elements[i].sub(&elements[j]).expect("same field"))
    })
}

//! Exact arithmetic in `Z[zeta_e]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients of the `e`-th cyclotomic polynomial, lowest degree first.
///
/// Computed as `(x^e - 1) / prod_{d | e, d < e} Phi_d` by exact division.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i64> {
    assert!(e >= 1, "cyclotomic polynomials start at e = 1");
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in (1..e).filter(|d| e % d == 0) {
        num = div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

// Exact quotient by a monic divisor; the remainder must vanish.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        for (i, &di) in den.iter().enumerate() {
            rem[k + i] -= c * di;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of `Z[zeta_e]` as coefficients on `1, zeta, ..., zeta^(phi(e)-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    pub conductor: u32,
    pub coeffs: Vec<BigInt>,
}

impl CycInt {
    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients with trailing zeros dropped (at least one is kept).
    pub fn trimmed(&self) -> &[BigInt] {
        let len = self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(1, |p| p + 1);
        &self.coeffs[..len]
    }
}

/// The ring `Z[x] / Phi_e(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicRing {
    conductor: u32,
    modulus: Vec<i64>,
    units: Vec<u32>,
}

impl CyclotomicRing {
    pub fn new(conductor: u32) -> Self {
        let units = (1..=conductor.max(1)).filter(|a| a.gcd(&conductor) == 1).collect();
        CyclotomicRing { conductor, modulus: cyclotomic_polynomial(conductor), units }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Residues `a` in `1..=e` prime to `e` (just `[1]` when `e = 1`).
    pub fn units(&self) -> &[u32] {
        &self.units
    }

    pub fn zero(&self) -> CycInt {
        self.from_int(0)
    }

    pub fn one(&self) -> CycInt {
        self.from_int(1)
    }

    pub fn from_int(&self, v: impl Into<BigInt>) -> CycInt {
        let mut coeffs = vec![BigInt::zero(); self.degree()];
        coeffs[0] = v.into();
        CycInt { conductor: self.conductor, coeffs }
    }

    /// Builds an element from coefficients, reducing modulo `Phi_e` when there are too many.
    pub fn element(&self, coeffs: Vec<BigInt>) -> Result<CycInt> {
        if coeffs.len() > self.degree() {
            return Ok(self.reduce(coeffs));
        }
        let mut coeffs = coeffs;
        coeffs.resize(self.degree(), BigInt::zero());
        Ok(CycInt { conductor: self.conductor, coeffs })
    }

    pub fn zeta_pow(&self, k: i64) -> CycInt {
        let e = self.conductor as i64;
        let mut poly = vec![BigInt::zero(); e as usize];
        poly[k.rem_euclid(e) as usize] = BigInt::one();
        self.reduce(poly)
    }

    /// Reduces an arbitrary coefficient vector modulo `Phi_e`.
    pub fn reduce(&self, mut poly: Vec<BigInt>) -> CycInt {
        let deg = self.degree();
        if poly.len() > deg {
            for k in (deg..poly.len()).rev() {
                let c = std::mem::take(&mut poly[k]);
                if c.is_zero() {
                    continue;
                }
                for (i, &mi) in self.modulus[..deg].iter().enumerate() {
                    if mi != 0 {
                        poly[k - deg + i] -= &c * mi;
                    }
                }
            }
        }
        poly.resize(deg, BigInt::zero());
        CycInt { conductor: self.conductor, coeffs: poly }
    }

    pub fn add(&self, a: &CycInt, b: &CycInt) -> CycInt {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycInt { conductor: self.conductor, coeffs }
    }

    pub fn sub(&self, a: &CycInt, b: &CycInt) -> CycInt {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CycInt { conductor: self.conductor, coeffs }
    }

    pub fn neg(&self, a: &CycInt) -> CycInt {
        CycInt { conductor: self.conductor, coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, a: &CycInt, k: &BigInt) -> CycInt {
        CycInt { conductor: self.conductor, coeffs: a.coeffs.iter().map(|x| x * k).collect() }
    }

    pub fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        let deg = self.degree();
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    /// Applies `zeta -> zeta^a` for `a` prime to `e`.
    pub fn galois(&self, z: &CycInt, a: i64) -> Result<CycInt> {
        let e = self.conductor as i64;
        let a = a.rem_euclid(e);
        if a.gcd(&e) != 1 {
            return Err(Error::NotCoprime { a, modulus: e as u64 });
        }
        let mut poly = vec![BigInt::zero(); e as usize];
        for (k, c) in z.coeffs.iter().enumerate() {
            poly[(k as i64 * a % e) as usize] += c;
        }
        Ok(self.reduce(poly))
    }

    pub fn conjugate(&self, z: &CycInt) -> CycInt {
        self.galois(z, -1).expect("-1 is always a unit")
    }

    /// Product of the non-identity Galois conjugates of `b`, and the norm of `b`.
    pub fn adjugate_and_norm(&self, b: &CycInt) -> Result<(CycInt, BigInt)> {
        let mut adj = self.one();
        for &a in &self.units[1..] {
            adj = self.mul(&adj, &self.galois(b, a as i64)?);
        }
        let norm = self.mul(&adj, b);
        match norm.as_integer() {
            Some(v) if !v.is_zero() => Ok((adj, v.clone())),
            Some(_) => Err(Error::InexactDivision("division by zero".into())),
            None => Err(Error::InexactDivision("norm is not rational".into())),
        }
    }

    /// `a / b` when the quotient lies in `Z[zeta_e]`; anything else is an error.
    pub fn exact_div(&self, a: &CycInt, b: &CycInt) -> Result<CycInt> {
        let (adj, norm) = self.adjugate_and_norm(b)?;
        self.exact_div_with(a, &adj, &norm)
    }

    pub(crate) fn exact_div_with(&self, a: &CycInt, adj: &CycInt, norm: &BigInt) -> Result<CycInt> {
        let prod = self.mul(a, adj);
        let mut coeffs = Vec::with_capacity(prod.coeffs.len());
        for c in prod.coeffs {
            let (q, r) = c.div_rem(norm);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("coefficient {c} by {norm}")));
            }
            coeffs.push(q);
        }
        Ok(CycInt { conductor: self.conductor, coeffs })
    }

    /// Evaluates at an `e`-th root of unity modulo a prime `p`.
    pub fn eval_mod(&self, z: &CycInt, root: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        let mut pow = 1u64;
        for c in &z.coeffs {
            let c = c.mod_floor(&pb);
            let c: u64 = c.try_into().unwrap();
            acc = ((acc as u128 + c as u128 * pow as u128) % p as u128) as u64;
            pow = (pow as u128 * root as u128 % p as u128) as u64;
        }
        acc
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self, matrix: &[Vec<CycInt>]) -> Result<CycInt> {
        let n = matrix.len();
        if n == 0 {
            return Ok(self.one());
        }
        let mut a: Vec<Vec<CycInt>> = matrix.to_vec();
        let mut negate = false;
        let mut prev: Option<(CycInt, BigInt)> = None;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(self.zero());
                };
                a.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = self.sub(&self.mul(&a[k][k], &a[i][j]), &self.mul(&a[i][k], &a[k][j]));
                    a[i][j] = match &prev {
                        Some((adj, norm)) => self.exact_div_with(&num, adj, norm)?,
                        None => num,
                    };
                }
            }
            prev = Some(self.adjugate_and_norm(&a[k][k])?);
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { self.neg(&det) } else { det })
    }
}

impl CycInt {
    pub fn is_positive_integer(&self) -> bool {
        self.as_integer().is_some_and(Signed::is_positive)
    }
}

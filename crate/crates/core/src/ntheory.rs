//! Exact integer and symbol arithmetic.
//!
//! Jacobi and Kronecker symbols, `n*`, discriminants and their fundamental
//! part, all over arbitrary-precision integers. Large discriminants are kept
//! in factored form ([`FactoredInt`]) so that symbols can be evaluated without
//! ever expanding them.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Trial division on cofactors wider than 64 bits stops here.
const TRIAL_LIMIT: u64 = 1 << 24;

/// Machine-word cofactors switch from trial division to Pollard's rho here.
const SMALL_PRIME_LIMIT: u64 = 1 << 12;

/// Wheel increments for candidates coprime to 30, starting from 7.
const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

/// A nonzero-or-zero integer stored as a sign and a prime factorization.
///
/// Primes are strictly increasing and every exponent is positive. Zero is the
/// sign `0` with no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactoredInt {
    sign: i8,
    factors: Vec<(u64, u64)>,
}

impl FactoredInt {
    pub fn zero() -> Self {
        FactoredInt { sign: 0, factors: Vec::new() }
    }

    pub fn one() -> Self {
        FactoredInt { sign: 1, factors: Vec::new() }
    }

    pub fn minus_one() -> Self {
        FactoredInt { sign: -1, factors: Vec::new() }
    }

    /// Builds a factored integer from its parts, checking every invariant.
    pub fn from_parts(sign: i8, factors: Vec<(u64, u64)>) -> Result<Self> {
        if !(-1..=1).contains(&sign) {
            return Err(Error::InvalidFactorization(format!("sign {sign}")));
        }
        if sign == 0 && !factors.is_empty() {
            return Err(Error::InvalidFactorization("zero with factors".into()));
        }
        for (k, &(p, e)) in factors.iter().enumerate() {
            if e == 0 {
                return Err(Error::InvalidFactorization(format!("exponent 0 on {p}")));
            }
            if !is_prime_u64(p) {
                return Err(Error::InvalidFactorization(format!("{p} is not prime")));
            }
            if k > 0 && factors[k - 1].0 >= p {
                return Err(Error::InvalidFactorization("primes not increasing".into()));
            }
        }
        Ok(FactoredInt { sign, factors })
    }

    pub fn from_prime_power(p: u64, e: u64) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one());
        }
        Self::from_parts(1, vec![(p, e)])
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(u64, u64)] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn is_one(&self) -> bool {
        self.sign == 1 && self.factors.is_empty()
    }

    /// Exponent of `p` in the factorization (0 when absent).
    pub fn valuation(&self, p: u64) -> u64 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Expands to an ordinary integer.
    pub fn value(&self) -> BigInt {
        if self.sign == 0 {
            return BigInt::zero();
        }
        let mut acc = BigUint::one();
        for &(p, e) in &self.factors {
            acc *= BigUint::from(p).pow(e as u32);
        }
        let sign = if self.sign < 0 { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(sign, acc)
    }

    pub fn neg(&self) -> Self {
        FactoredInt { sign: -self.sign, factors: self.factors.clone() }
    }

    pub fn abs(&self) -> Self {
        FactoredInt { sign: self.sign.abs(), factors: self.factors.clone() }
    }

    pub fn mul(&self, other: &FactoredInt) -> FactoredInt {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            match (self.factors.get(i), other.factors.get(j)) {
                (Some(&(p, e)), Some(&(q, f))) if p == q => {
                    factors.push((p, e + f));
                    i += 1;
                    j += 1;
                }
                (Some(&(p, e)), Some(&(q, _))) if p < q => {
                    factors.push((p, e));
                    i += 1;
                }
                (Some(_), Some(&(q, f))) => {
                    factors.push((q, f));
                    j += 1;
                }
                (Some(&pe), None) => {
                    factors.push(pe);
                    i += 1;
                }
                (None, Some(&qf)) => {
                    factors.push(qf);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        FactoredInt { sign: self.sign * other.sign, factors }
    }

    pub fn pow(&self, k: u64) -> FactoredInt {
        if k == 0 {
            return Self::one();
        }
        let sign = if self.sign < 0 && k % 2 == 1 { -1 } else { self.sign.abs() };
        FactoredInt {
            sign,
            factors: self.factors.iter().map(|&(p, e)| (p, e * k)).collect(),
        }
    }

    /// Divides out `p^e`; `None` if the result would not be an integer.
    pub fn div_prime_power(&self, p: u64, e: u64) -> Option<FactoredInt> {
        if e == 0 {
            return Some(self.clone());
        }
        let have = self.valuation(p);
        if have < e {
            return None;
        }
        let factors = self
            .factors
            .iter()
            .filter_map(|&(q, f)| match q == p {
                true if f == e => None,
                true => Some((q, f - e)),
                false => Some((q, f)),
            })
            .collect();
        Some(FactoredInt { sign: self.sign, factors })
    }

    /// True iff the value is a perfect square (zero counts).
    pub fn is_square(&self) -> bool {
        self.sign == 0 || (self.sign == 1 && self.factors.iter().all(|&(_, e)| e % 2 == 0))
    }

    /// The value reduced into `0..m`.
    pub fn rem_u64(&self, m: u64) -> u64 {
        assert!(m > 0, "modulus must be positive");
        if self.sign == 0 {
            return 0;
        }
        let m128 = m as u128;
        let mut acc: u128 = 1 % m128;
        for &(p, e) in &self.factors {
            acc = acc * pow_mod_u128(p as u128 % m128, e as u128, m128) % m128;
        }
        if self.sign < 0 {
            acc = (m128 - acc) % m128;
        }
        acc as u64
    }

    fn rem_big(&self, m: &BigUint) -> BigUint {
        if self.sign == 0 {
            return BigUint::zero();
        }
        let mut acc = BigUint::one() % m;
        for &(p, e) in &self.factors {
            acc = acc * BigUint::from(p).modpow(&BigUint::from(e), m) % m;
        }
        if self.sign < 0 && !acc.is_zero() {
            acc = m - acc;
        }
        acc
    }
}

impl fmt::Display for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => return write!(f, "0"),
            -1 if self.factors.is_empty() => return write!(f, "-1"),
            1 if self.factors.is_empty() => return write!(f, "1"),
            -1 => write!(f, "-")?,
            _ => {}
        }
        for (k, &(p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A discriminant split as `d = d_K * f^2` with `d_K` fundamental.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalDiscriminant {
    pub d_k: BigInt,
    pub conductor: FactoredInt,
}

impl FundamentalDiscriminant {
    pub fn conductor_value(&self) -> BigInt {
        self.conductor.value()
    }

    /// Recombines `d_K * f^2`.
    pub fn discriminant_value(&self) -> BigInt {
        let f = self.conductor_value();
        &self.d_k * &f * &f
    }
}

fn pow_mod_u128(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let n128 = n as u128;
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod_u128(a as u128, d as u128, n128);
        if x == 1 || x == n128 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n128;
            if x == n128 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn trial_candidates() -> impl Iterator<Item = u64> {
    let wheel = WHEEL.iter().cycle().scan(7u64, |c, &step| {
        let cur = *c;
        *c += step;
        Some(cur)
    });
    [2u64, 3, 5].into_iter().chain(wheel)
}

/// Factors a nonzero integer.
///
/// Trial division over a mod-30 wheel runs until the cofactor fits in 64 bits
/// (failing with [`Error::FactorizationLimit`] if that needs primes beyond
/// 2^24); the machine-word part is finished with Pollard's rho.
pub fn factorize(n: impl Into<BigInt>) -> Result<FactoredInt> {
    let n: BigInt = n.into();
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.magnitude().clone();
    let mut factors: Vec<(u64, u64)> = Vec::new();
    let mut push = |p: u64, e: u64| {
        if e > 0 {
            factors.push((p, e));
        }
    };

    // Big cofactors: peel small primes until the rest fits a machine word.
    let mut candidates = trial_candidates();
    let mut next = candidates.next().unwrap();
    while rest.to_u64().is_none() {
        if next > TRIAL_LIMIT {
            return Err(Error::FactorizationLimit(n.to_string()));
        }
        let p = BigUint::from(next);
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        push(next, e);
        next = candidates.next().unwrap();
    }

    let mut rest = rest.to_u64().unwrap();
    while rest > 1 && next <= SMALL_PRIME_LIMIT && next * next <= rest {
        let mut e = 0;
        while rest % next == 0 {
            rest /= next;
            e += 1;
        }
        push(next, e);
        next = candidates.next().unwrap();
    }
    let mut large = Vec::new();
    if rest > 1 {
        split_u64(rest, &mut large);
    }
    large.sort_unstable();
    for p in large {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    factors.sort_unstable();
    Ok(FactoredInt { sign, factors })
}

/// Appends the prime factors of `n` (with repetition), `n > 1`.
fn split_u64(n: u64, out: &mut Vec<u64>) {
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

/// A nontrivial divisor of an odd composite `n`.
fn pollard_rho(n: u64) -> u64 {
    let m = n as u128;
    for c in 1u128.. {
        let f = |x: u128| (x * x + c) % m;
        let (mut x, mut y, mut d) = (2u128, 2u128, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = (x.abs_diff(y) as u64).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

/// Factors a positive machine integer; panics only on zero.
pub(crate) fn factorize_u64(n: u64) -> FactoredInt {
    factorize(n).expect("64-bit integers always factor")
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<i8> {
    let a: BigInt = a.into();
    let n: BigInt = n.into();
    if !n.is_positive() || n.is_even() {
        return Err(Error::InvalidModulus(n.to_string()));
    }
    let mut n = n.magnitude().clone();
    let mut a = a.mod_floor(&BigInt::from_biguint(Sign::Plus, n.clone())).magnitude().clone();
    Ok(jacobi_unsigned(&mut a, &mut n))
}

fn low_bits(x: &BigUint, mask: u64) -> u64 {
    x.iter_u64_digits().next().unwrap_or(0) & mask
}

// Binary algorithm; a is already reduced into 0..n.
fn jacobi_unsigned(a: &mut BigUint, n: &mut BigUint) -> i8 {
    let mut t = 1i8;
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        *a >>= twos;
        if twos % 2 == 1 && matches!(low_bits(n, 7), 3 | 5) {
            t = -t;
        }
        std::mem::swap(a, n);
        if low_bits(a, 3) == 3 && low_bits(n, 3) == 3 {
            t = -t;
        }
        *a %= &*n;
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

/// True iff `d` is nonzero and congruent to 0 or 1 mod 4.
pub fn is_discriminant(d: &BigInt) -> bool {
    !d.is_zero() && matches!(d.mod_floor(&BigInt::from(4)).to_u8(), Some(0 | 1))
}

fn check_discriminant(d: &BigInt) -> Result<()> {
    if is_discriminant(d) {
        Ok(())
    } else {
        Err(Error::NotDiscriminant(d.to_string()))
    }
}

/// How a discriminant answers the local questions the Kronecker symbol asks.
trait KroneckerTop {
    fn sign(&self) -> i8;
    fn is_one(&self) -> bool;
    fn rem8(&self) -> u8;
    /// Jacobi symbol `(self/n)` for odd `n > 1`.
    fn jacobi_odd(&self, n: &BigUint) -> i8;
}

impl KroneckerTop for BigInt {
    fn sign(&self) -> i8 {
        Signed::signum(self).to_i8().unwrap_or_default()
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn rem8(&self) -> u8 {
        self.mod_floor(&BigInt::from(8)).to_u8().unwrap()
    }

    fn jacobi_odd(&self, n: &BigUint) -> i8 {
        let modulus = BigInt::from_biguint(Sign::Plus, n.clone());
        let mut a = self.mod_floor(&modulus).magnitude().clone();
        jacobi_unsigned(&mut a, &mut n.clone())
    }
}

impl KroneckerTop for FactoredInt {
    fn sign(&self) -> i8 {
        self.sign
    }

    fn is_one(&self) -> bool {
        FactoredInt::is_one(self)
    }

    fn rem8(&self) -> u8 {
        self.rem_u64(8) as u8
    }

    fn jacobi_odd(&self, n: &BigUint) -> i8 {
        // Reduce d modulo n prime by prime rather than expanding it.
        let mut a = self.rem_big(n);
        jacobi_unsigned(&mut a, &mut n.clone())
    }
}

fn kronecker_with<D: KroneckerTop>(d: &D, a: BigInt) -> i8 {
    if a.is_zero() {
        return if d.is_one() { 1 } else { 0 };
    }
    let mut acc = 1i8;
    if a.is_negative() {
        acc *= d.sign();
    }
    let mut odd = a.magnitude().clone();
    let twos = odd.trailing_zeros().unwrap_or(0);
    if twos > 0 {
        let at_two = match d.rem8() {
            1 => 1,
            5 => -1,
            _ => 0,
        };
        if at_two == 0 {
            return 0;
        }
        if twos % 2 == 1 {
            acc *= at_two;
        }
        odd >>= twos;
    }
    if !odd.is_one() {
        acc *= d.jacobi_odd(&odd);
    }
    acc
}

/// Kronecker symbol `(d/a)` for a discriminant `d` and any integer `a`.
pub fn kronecker(d: impl Into<BigInt>, a: impl Into<BigInt>) -> Result<i8> {
    let d: BigInt = d.into();
    check_discriminant(&d)?;
    Ok(kronecker_with(&d, a.into()))
}

/// Kronecker symbol with `d` given in factored form; `d` is never expanded.
pub fn kronecker_factored(d: &FactoredInt, a: impl Into<BigInt>) -> Result<i8> {
    if d.is_zero() || !matches!(d.rem_u64(4), 0 | 1) {
        return Err(Error::NotDiscriminant(d.to_string()));
    }
    Ok(kronecker_with(d, a.into()))
}

/// `n* = (-1)^((n-1)/2) n` for odd `n`.
pub fn n_star(n: impl Into<BigInt>) -> Result<BigInt> {
    let n: BigInt = n.into();
    if n.is_even() {
        return Err(Error::EvenArgument(n.to_string()));
    }
    let half = (&n - BigInt::one()).div_floor(&BigInt::from(2));
    Ok(if half.is_even() { n } else { -n })
}

/// Splits a discriminant into its fundamental part and conductor.
pub fn fundamental_discriminant(d: &FactoredInt) -> Result<FundamentalDiscriminant> {
    if d.is_zero() || !matches!(d.rem_u64(4), 0 | 1) {
        return Err(Error::NotDiscriminant(d.to_string()));
    }
    let mut core_primes = Vec::new();
    let mut conductor = Vec::new();
    for &(p, e) in d.factors() {
        if e % 2 == 1 {
            core_primes.push((p, 1));
        }
        if e / 2 > 0 {
            conductor.push((p, e / 2));
        }
    }
    let core = FactoredInt { sign: d.sign(), factors: core_primes };
    let conductor = FactoredInt { sign: 1, factors: conductor };
    if core.rem_u64(4) == 1 {
        return Ok(FundamentalDiscriminant { d_k: core.value(), conductor });
    }
    // core is 2 or 3 mod 4, so d being 0 mod 4 forces an even conductor.
    let conductor = conductor
        .div_prime_power(2, 1)
        .ok_or_else(|| Error::NotDiscriminant(d.to_string()))?;
    Ok(FundamentalDiscriminant { d_k: core.value() * 4, conductor })
}

/// True iff `n` is a nonnegative perfect square.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler(a: i64, p: i64) -> i8 {
        let r = pow_mod_u128(a.rem_euclid(p) as u128, ((p - 1) / 2) as u128, p as u128);
        match r {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(18000).unwrap();
        assert_eq!(f.sign(), 1);
        assert_eq!(f.factors(), &[(2, 4), (3, 2), (5, 3)]);

        let f = factorize(-1).unwrap();
        assert_eq!(f.sign(), -1);
        assert!(f.factors().is_empty());

        assert_eq!(factorize(65537).unwrap().factors(), &[(65537, 1)]);
        assert_eq!(factorize(0), Err(Error::ZeroInput));
    }

    #[test]
    fn factorize_big_input() {
        // 2^70 * 3 * 1000003
        let n: BigInt = BigInt::from(2).pow(70u32) * 3 * 1_000_003;
        let f = factorize(n.clone()).unwrap();
        assert_eq!(f.factors(), &[(2, 70), (3, 1), (1_000_003, 1)]);
        assert_eq!(f.value(), n);
    }

    #[test]
    fn factorize_large_machine_words() {
        let (p, q) = (4_294_967_291u64, 2_147_483_647u64);
        let f = factorize(p * q).unwrap();
        assert_eq!(f.factors(), &[(q, 1), (p, 1)]);
        let f = factorize(-(1_000_003i64 * 1_000_003 * 999_983)).unwrap();
        assert_eq!(f.factors(), &[(999_983, 1), (1_000_003, 2)]);
        assert!(factorize(u64::MAX).unwrap().value() == BigInt::from(u64::MAX));

        // Two primes above the trial bound whose product needs more than 64 bits.
        let big = BigInt::from((1u64 << 61) - 1) * BigInt::from(q);
        assert!(matches!(factorize(big), Err(Error::FactorizationLimit(_))));
    }

    #[test]
    fn factorize_matches_brute_force() {
        for n in 1..2000i64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), BigInt::from(n));
            let mut rest = n;
            for &(p, e) in f.factors() {
                assert!((2..p as i64).all(|q| p as i64 % q != 0));
                rest /= (p as i64).pow(e as u32);
            }
            assert_eq!(rest, 1);
        }
    }

    #[test]
    fn from_parts_rejects_bad_input() {
        assert!(FactoredInt::from_parts(1, vec![(4, 1)]).is_err());
        assert!(FactoredInt::from_parts(1, vec![(3, 1), (2, 1)]).is_err());
        assert!(FactoredInt::from_parts(0, vec![(2, 1)]).is_err());
        assert!(FactoredInt::from_parts(1, vec![(2, 0)]).is_err());
        assert!(FactoredInt::from_parts(-1, vec![(2, 3), (65537, 1)]).is_ok());
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(2, 15), Ok(1));
        for a in -20..20 {
            assert_eq!(jacobi(a, 1), Ok(1));
        }
        assert_eq!(jacobi(3, 9), Ok(0));
        assert!(jacobi(3, 8).is_err());
        assert!(jacobi(3, -3).is_err());
        assert!(jacobi(3, 0).is_err());
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        let primes = (3..=97i64).filter(|&p| is_prime_u64(p as u64));
        for p in primes {
            for a in -2 * p..2 * p {
                assert_eq!(jacobi(a, p).unwrap(), euler(a, p), "({a}/{p})");
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(17, 2), Ok(1));
        assert_eq!(kronecker(5, 2), Ok(-1));
        assert_eq!(kronecker(1, 0), Ok(1));
        assert_eq!(kronecker(5, 0), Ok(0));
        assert_eq!(kronecker(-16, 3), Ok(-1));
        assert_eq!(kronecker(-16, 2), Ok(0));
        assert_eq!(kronecker(-3, -1), Ok(-1));
        assert_eq!(kronecker(12, -1), Ok(1));
        assert!(kronecker(6, 5).is_err());
        assert!(kronecker(0, 5).is_err());
    }

    #[test]
    fn kronecker_factored_agrees_with_plain() {
        for d in -400i64..400 {
            let big = BigInt::from(d);
            if !is_discriminant(&big) {
                continue;
            }
            let f = factorize(d).unwrap();
            for a in -100i64..100 {
                assert_eq!(kronecker_factored(&f, a), kronecker(d, a), "({d}/{a})");
            }
        }
        assert!(kronecker_factored(&factorize(6).unwrap(), 5).is_err());
    }

    #[test]
    fn n_star_examples() {
        assert_eq!(n_star(5), Ok(BigInt::from(5)));
        assert_eq!(n_star(7), Ok(BigInt::from(-7)));
        assert_eq!(n_star(21), Ok(BigInt::from(21)));
        assert_eq!(n_star(1), Ok(BigInt::from(1)));
        assert!(n_star(4).is_err());
        for n in (-99i64..100).step_by(2) {
            let s = n_star(n).unwrap();
            assert_eq!(s.mod_floor(&BigInt::from(4)), BigInt::from(1));
        }
    }

    #[test]
    fn discriminant_examples() {
        assert!(is_discriminant(&BigInt::from(1)));
        assert!(is_discriminant(&BigInt::from(-16)));
        assert!(!is_discriminant(&BigInt::from(6)));
        assert!(!is_discriminant(&BigInt::from(0)));
        assert!(!is_discriminant(&BigInt::from(-1)));
    }

    #[test]
    fn fundamental_examples() {
        let fd = fundamental_discriminant(&factorize(18000).unwrap()).unwrap();
        assert_eq!(fd.d_k, BigInt::from(5));
        assert_eq!(fd.conductor_value(), BigInt::from(60));

        let fd = fundamental_discriminant(&factorize(36).unwrap()).unwrap();
        assert_eq!(fd.d_k, BigInt::from(1));
        assert_eq!(fd.conductor_value(), BigInt::from(6));

        let fd = fundamental_discriminant(&factorize(-16).unwrap()).unwrap();
        assert_eq!(fd.d_k, BigInt::from(-4));
        assert_eq!(fd.conductor_value(), BigInt::from(2));

        let fd = fundamental_discriminant(&FactoredInt::one()).unwrap();
        assert_eq!(fd.d_k, BigInt::from(1));

        assert!(fundamental_discriminant(&factorize(6).unwrap()).is_err());
    }

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(&BigInt::from(4096)));
        assert!(!is_perfect_square(&BigInt::from(18000)));
        assert!(is_perfect_square(&BigInt::from(0)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
        assert!(factorize(4096).unwrap().is_square());
        assert!(!factorize(18000).unwrap().is_square());
        assert!(!factorize(-4).unwrap().is_square());
        assert!(FactoredInt::zero().is_square());
    }

    #[test]
    fn display_forms() {
        assert_eq!(factorize(18000).unwrap().to_string(), "2^4 * 3^2 * 5^3");
        assert_eq!(factorize(-12).unwrap().to_string(), "-2^2 * 3");
        assert_eq!(FactoredInt::one().to_string(), "1");
        assert_eq!(FactoredInt::minus_one().to_string(), "-1");
        assert_eq!(FactoredInt::zero().to_string(), "0");
    }

    #[test]
    fn factored_arithmetic() {
        let a = factorize(-12).unwrap();
        let b = factorize(45).unwrap();
        assert_eq!(a.mul(&b).value(), BigInt::from(-540));
        assert_eq!(a.pow(3).value(), BigInt::from(-1728));
        assert_eq!(a.pow(2).value(), BigInt::from(144));
        assert_eq!(a.rem_u64(7), (-12i64).rem_euclid(7) as u64);
        assert_eq!(a.div_prime_power(2, 2).unwrap().value(), BigInt::from(-3));
        assert!(a.div_prime_power(2, 3).is_none());
    }
}

//! The quadratic symbol of a finite group and its reciprocity law.
//!
//! For `a` prime to `n = |G|`, `(a/G)` is the sign of the permutation
//! `C -> C^a` of the conjugacy classes, and `0` otherwise. The discriminant
//! is `d(G) = (-1)^r2 * prod |C_G(g)|` over representatives `g` of the real
//! classes; the law says `d` is 0 or 1 mod 4 and `(a/G)` equals the
//! Kronecker symbol `(d/a)` for every integer `a`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{class_power_map, conjugacy_classes, permutation_parity, ClassSet, GroupTable};
use crate::ntheory::{
    factorize, factorize_u64, fundamental_discriminant, jacobi, kronecker_factored, n_star,
    FactoredInt, FundamentalDiscriminant,
};
use crate::spec::GroupSpec;

/// Real classes first, complex classes in adjacent inverse pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealComplexSplit {
    pub r1: usize,
    pub r2: usize,
    /// Class indices in split order.
    pub order: Vec<usize>,
}

pub fn real_complex_split(s: &ClassSet) -> RealComplexSplit {
    let m = s.num_classes();
    let mut order: Vec<usize> = (0..m).filter(|&c| s.is_real(c)).collect();
    let r1 = order.len();
    let mut placed = vec![false; m];
    for c in 0..m {
        if !s.is_real(c) && !placed[c] {
            let inv = s.inverse_class(c);
            placed[c] = true;
            placed[inv] = true;
            order.push(c);
            order.push(inv);
        }
    }
    RealComplexSplit { r1, r2: (m - r1) / 2, order }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discriminant {
    pub value: FactoredInt,
    pub r1: usize,
    pub r2: usize,
}

impl Discriminant {
    pub fn to_bigint(&self) -> BigInt {
        self.value.value()
    }

    pub fn fundamental(&self) -> Result<FundamentalDiscriminant> {
        fundamental_discriminant(&self.value)
    }
}

pub fn discriminant(_g: &GroupTable, s: &ClassSet, split: &RealComplexSplit) -> Discriminant {
    let sign = if split.r2 % 2 == 0 { FactoredInt::one() } else { FactoredInt::minus_one() };
    let value = split.order[..split.r1]
        .iter()
        .map(|&c| factorize_u64(s.classes[c].centralizer_order as u64))
        .fold(sign, |acc, f| acc.mul(&f));
    Discriminant { value, r1: split.r1, r2: split.r2 }
}

/// `(a/G)`: 0 unless `gcd(a, n) = 1`, otherwise the parity of the class power map.
pub fn quadratic_symbol(g: &GroupTable, s: &ClassSet, a: i64) -> i8 {
    match class_power_map(g, s, a) {
        Ok(p) => permutation_parity(&p).expect("power maps are bijections"),
        Err(_) => 0,
    }
}

/// The symbol tabulated over one period `a = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolCharacter {
    pub modulus: u64,
    pub values: Vec<i8>,
}

impl SymbolCharacter {
    pub fn at(&self, a: i64) -> i8 {
        self.values[a.rem_euclid(self.modulus as i64) as usize]
    }

    /// True when the symbol is 1 at every unit.
    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v != -1)
    }

    pub fn is_periodic_mod(&self, k: u64) -> bool {
        (0..self.modulus).all(|a| self.values[a as usize] == self.values[(a % k) as usize])
    }

    /// First `(a, b)` with `values[ab] != values[a] * values[b]`.
    pub fn multiplicativity_witness(&self) -> Option<(u64, u64)> {
        let n = self.modulus;
        for a in 0..n {
            let va = self.values[a as usize];
            for b in a..n {
                if self.values[(a * b % n) as usize] != va * self.values[b as usize] {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

pub fn symbol_character(g: &GroupTable, s: &ClassSet) -> SymbolCharacter {
    let n = g.order() as u64;
    let values = (0..n as i64).map(|a| quadratic_symbol(g, s, a)).collect();
    SymbolCharacter { modulus: n, values }
}

/// `d = q^2 (q+1) (q^2-1)^(q/2)` for `SL(2, F_q)`, `q` a power of two.
pub fn sl2_discriminant(q: u64) -> Result<FactoredInt> {
    if q < 4 || !q.is_power_of_two() {
        return Err(Error::ParameterOutOfRange(format!("sl2 needs q = 2^r with r >= 2, got {q}")));
    }
    let r = q.trailing_zeros() as u64;
    let q_sq = FactoredInt::from_prime_power(2, 2 * r)?;
    let plus = factorize(q + 1)?;
    let minus = factorize(q - 1)?;
    let q2_minus_1 = plus.mul(&minus);
    Ok(q_sq.mul(&plus).mul(&q2_minus_1.pow(q / 2)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Formula {
    pub r: u32,
    pub q: u64,
    pub order: u64,
    pub num_classes: u64,
    pub d: FactoredInt,
    pub fundamental: FundamentalDiscriminant,
}

/// Evaluates the closed form for `SL(2, F_{2^r})` without building the group.
pub fn sl2_formula_check(r: u32) -> Result<Sl2Formula> {
    if !(2..=16).contains(&r) {
        return Err(Error::ParameterOutOfRange(format!("r = {r} outside 2..=16")));
    }
    let q = 1u64 << r;
    let d = sl2_discriminant(q)?;
    let fundamental = fundamental_discriminant(&d)?;
    Ok(Sl2Formula { r, q, order: q * (q * q - 1), num_classes: q + 1, d, fundamental })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// The integer `a` at which the check failed, when it is per-argument.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<i64>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &str) -> Self {
        CheckResult { name: name.into(), passed: true, witness: None, detail: String::new() }
    }

    fn fail(name: &str, witness: Option<i64>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed: false, witness, detail: detail.into() }
    }

    fn from_bool(name: &str, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, None, detail())
        }
    }
}

/// A failing check, named by group, check and witness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{group}: check `{check}` failed{}: {detail}", witness.map(|a| format!(" at a = {a}")).unwrap_or_default())]
pub struct VerificationFailure {
    pub group: String,
    pub check: String,
    pub witness: Option<i64>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub label: String,
    pub order: u64,
    pub exponent: u64,
    pub num_classes: usize,
    pub discriminant: Discriminant,
    pub fundamental: Option<FundamentalDiscriminant>,
    pub symbol: SymbolCharacter,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<VerificationFailure> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| VerificationFailure {
                group: self.label.clone(),
                check: c.name.clone(),
                witness: c.witness,
                detail: c.detail.clone(),
            })
            .collect()
    }

    pub fn into_result(self) -> std::result::Result<Self, VerificationFailure> {
        match self.failures().into_iter().next() {
            Some(f) => Err(f),
            None => Ok(self),
        }
    }
}

/// Runs every reciprocity check on `g`.
pub fn verify_group(g: &GroupTable) -> VerificationReport {
    let s = conjugacy_classes(g);
    verify_group_with(g, &s)
}

pub fn verify_group_with(g: &GroupTable, s: &ClassSet) -> VerificationReport {
    let n = g.order() as u64;
    let m = s.num_classes();
    let split = real_complex_split(s);
    let disc = discriminant(g, s, &split);
    let d = &disc.value;
    let symbol = symbol_character(g, s);
    let mut checks = Vec::new();

    checks.push(CheckResult::from_bool("discriminant_mod_4", matches!(d.rem_u64(4), 0 | 1), || {
        format!("d = {d} is {} mod 4", d.rem_u64(4))
    }));

    let n_factored = factorize_u64(n);
    let same_primes = d.primes().eq(n_factored.primes());
    let divisible = n_factored.factors().iter().all(|&(p, e)| d.valuation(p) >= e);
    checks.push(CheckResult::from_bool(
        "discriminant_divisible_by_order",
        same_primes && divisible,
        || format!("d = {d}, n = {n}"),
    ));

    checks.push(symbol_vs_kronecker(&symbol, d, n));

    let trivial = symbol.is_trivial();
    checks.push(CheckResult::from_bool("trivial_iff_square", trivial == d.is_square(), || {
        format!("symbol trivial: {trivial}, d = {d}")
    }));

    let sign_r2 = if split.r2 % 2 == 0 { 1 } else { -1 };
    let at_minus_one = quadratic_symbol(g, s, -1);
    checks.push(CheckResult::from_bool(
        "sign_at_minus_one",
        at_minus_one == sign_r2 && kronecker_factored(d, -1).ok() == Some(sign_r2),
        || format!("(-1/G) = {at_minus_one}, (-1)^r2 = {sign_r2}"),
    ));

    checks.push(CheckResult::from_bool("exponent_period", symbol.is_periodic_mod(g.exponent()), || {
        format!("not periodic mod exponent {}", g.exponent())
    }));

    checks.push(match symbol.multiplicativity_witness() {
        None => CheckResult::pass("multiplicative"),
        Some((a, b)) => CheckResult::fail("multiplicative", Some(a as i64), format!("fails at ({a}, {b})")),
    });

    if n % 2 == 1 {
        checks.push(odd_order_check(&symbol, d, n, m, split.r1));
    }
    if m as u64 == n {
        checks.push(abelian_check(g, &symbol, d));
    }
    if let Some(GroupSpec::Sl2(q)) = g.spec() {
        checks.push(match sl2_discriminant(*q as u64) {
            Ok(expected) => CheckResult::from_bool(
                "sl2_formula",
                &expected == d && m as u64 == *q as u64 + 1 && split.r1 == m,
                || format!("d = {d}, formula gives {expected}, m = {m}, r1 = {}", split.r1),
            ),
            Err(e) => CheckResult::fail("sl2_formula", None, e.to_string()),
        });
    }

    VerificationReport {
        label: g.label().to_string(),
        order: n,
        exponent: g.exponent(),
        num_classes: m,
        fundamental: fundamental_discriminant(d).ok(),
        discriminant: disc,
        symbol,
        checks,
    }
}

fn symbol_vs_kronecker(symbol: &SymbolCharacter, d: &FactoredInt, n: u64) -> CheckResult {
    const NAME: &str = "symbol_equals_kronecker";
    let n = n as i64;
    let extra = [-1, -3, n + 1, 2 * n + 3];
    for a in (0..n).chain(extra) {
        match kronecker_factored(d, a) {
            Ok(k) if k == symbol.at(a) => {}
            Ok(k) => {
                return CheckResult::fail(NAME, Some(a), format!("(a/G) = {}, (d/a) = {k}", symbol.at(a)))
            }
            Err(e) => return CheckResult::fail(NAME, Some(a), e.to_string()),
        }
    }
    CheckResult::pass(NAME)
}

fn odd_order_check(symbol: &SymbolCharacter, d: &FactoredInt, n: u64, m: usize, r1: usize) -> CheckResult {
    const NAME: &str = "odd_order";
    let star = n_star(n).expect("n is odd");
    if d.value() != star {
        return CheckResult::fail(NAME, None, format!("d = {d} but n* = {star}"));
    }
    if r1 != 1 {
        return CheckResult::fail(NAME, None, format!("r1 = {r1}"));
    }
    if (n as i64 - m as i64).rem_euclid(16) != 0 {
        return CheckResult::fail(NAME, None, format!("n = {n}, m = {m} differ mod 16"));
    }
    for a in 0..n as i64 {
        let j = jacobi(a, n).expect("n is odd");
        if symbol.at(a) != j {
            return CheckResult::fail(NAME, Some(a), format!("(a/G) = {}, (a/n) = {j}", symbol.at(a)));
        }
    }
    CheckResult::pass(NAME)
}

fn abelian_check(g: &GroupTable, symbol: &SymbolCharacter, d: &FactoredInt) -> CheckResult {
    const NAME: &str = "abelian_formula";
    let n = g.order() as u64;
    let two_t = g.involution_count() as u64;
    let t = two_t.trailing_zeros();
    let mut expected = factorize_u64(n).pow(two_t);
    if ((n - two_t) / 2) % 2 == 1 {
        expected = expected.neg();
    }
    if &expected != d {
        return CheckResult::fail(NAME, None, format!("d = {d}, formula gives {expected} (t = {t})"));
    }
    if n % 4 == 0 && t == 1 {
        for a in 0..n as i64 {
            if a.gcd(&(n as i64)) != 1 {
                continue;
            }
            let expect = if (a - 1) / 2 % 2 == 0 { 1 } else { -1 };
            if symbol.at(a) != expect {
                return CheckResult::fail(NAME, Some(a), format!("(a/G) = {}, expected {expect}", symbol.at(a)));
            }
        }
    }
    CheckResult::pass(NAME)
}

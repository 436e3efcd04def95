//! Exact character tables and the determinant identities behind reciprocity.
//!
//! With `M` the character table (rows characters, columns classes):
//!
//! * `conj(M)^T M = diag(|C_G(g_j)|)` (second orthogonality);
//! * `conj(det M) = (-1)^r2 det M`;
//! * `(det M)^2 = l^2 d` for a positive integer `l`;
//! * `sigma_a(chi(g)) = chi(g^a)` entry by entry;
//! * `sigma_a(det M) = (a/G) det M` for every unit `a` mod the exponent.

pub mod cyclo;
mod dixon;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use cyclo::{cyclotomic_polynomial, CycInt, CyclotomicRing};
pub use dixon::{character_table, character_table_with, choose_prime, CharacterTable, TableOptions};

use crate::error::{Error, Result};
use crate::groups::{class_power_map, ClassSet, GroupTable};
use crate::reciprocity::{quadratic_symbol, CheckResult, Discriminant};

/// `galois_apply` in ring-free form: `zeta -> zeta^a` on an element of `Z[zeta_e]`.
pub fn galois_apply(z: &CycInt, a: i64) -> Result<CycInt> {
    CyclotomicRing::new(z.conductor).galois(z, a)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub holds: bool,
    /// First `(j, k)` column pair where the product disagrees.
    pub witness: Option<(usize, usize)>,
    pub diagonal: Vec<BigInt>,
}

/// Checks `conj(M)^T M = diag(n / |C_j|)` exactly.
pub fn verify_orthogonality(t: &CharacterTable, s: &ClassSet) -> OrthogonalityReport {
    let r = &t.ring;
    let m = t.size();
    let conj: Vec<Vec<CycInt>> =
        t.entries.iter().map(|row| row.iter().map(|x| r.conjugate(x)).collect()).collect();
    let mut diagonal = Vec::with_capacity(m);
    let mut witness = None;
    for j in 0..m {
        for k in 0..m {
            let mut acc = r.zero();
            for i in 0..m {
                acc = r.add(&acc, &r.mul(&conj[i][j], &t.entries[i][k]));
            }
            let expected = if j == k { s.classes[t.columns[j]].centralizer_order } else { 0 };
            if j == k {
                diagonal.push(acc.as_integer().cloned().unwrap_or_default());
            }
            if witness.is_none() && acc != r.from_int(expected) {
                witness = Some((j, k));
            }
        }
    }
    OrthogonalityReport { holds: witness.is_none(), witness, diagonal }
}

#[derive(Debug, Clone)]
pub struct DetReport {
    pub det: CycInt,
    /// `(det M)^2`, when it is rational.
    pub det_squared: Option<BigInt>,
    /// The positive integer with `(det M)^2 = l^2 d`.
    pub ell: Option<BigInt>,
    pub checks: Vec<CheckResult>,
}

impl DetReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, passed: bool, witness: Option<i64>, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        witness,
        detail: if passed { String::new() } else { detail },
    }
}

/// Computes `det M` and checks every determinant identity against `d`.
pub fn det_identities(t: &CharacterTable, disc: &Discriminant, s: &ClassSet, g: &GroupTable) -> Result<DetReport> {
    let r = &t.ring;
    let det = r.determinant(&t.entries)?;
    let d = disc.to_bigint();
    let mut checks = Vec::new();

    let sq = r.mul(&det, &det);
    let det_squared = sq.as_integer().cloned();
    let ell = det_squared.as_ref().and_then(|sq| {
        let (q, rem) = sq.div_rem(&d);
        if !rem.is_zero() || !q.is_positive() {
            return None;
        }
        let root = q.sqrt();
        (&root * &root == q).then_some(root)
    });
    checks.push(check(
        "det_square_identity",
        ell.is_some(),
        None,
        format!("(det M)^2 = {:?} is not l^2 * {d}", det_squared.as_ref().map(|v| v.to_string())),
    ));

    let sign = if disc.r2 % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
    let conj = r.conjugate(&det);
    checks.push(check(
        "conjugate_sign",
        conj == r.scale(&det, &sign),
        None,
        format!("conj(det M) != (-1)^{} det M", disc.r2),
    ));

    let mut ratio_witness = None;
    for &a in r.units() {
        let image = r.galois(&det, a as i64)?;
        let symbol = BigInt::from(quadratic_symbol(g, s, a as i64));
        if image != r.scale(&det, &symbol) {
            ratio_witness = Some(a as i64);
            break;
        }
    }
    checks.push(check(
        "galois_ratio",
        ratio_witness.is_none(),
        ratio_witness,
        "sigma_a(det M) != (a/G) det M".into(),
    ));

    let mut entry_witness = None;
    'units: for &a in r.units() {
        let map = class_power_map(g, s, a as i64)?;
        for row in &t.entries {
            for (col, x) in row.iter().enumerate() {
                let target = t.column_of(map[t.columns[col]]);
                if r.galois(x, a as i64)? != row[target] {
                    entry_witness = Some(a as i64);
                    break 'units;
                }
            }
        }
    }
    checks.push(check(
        "galois_equivariance",
        entry_witness.is_none(),
        entry_witness,
        "sigma_a(chi(g)) != chi(g^a)".into(),
    ));

    let mod4 = det_squared.as_ref().map(|v| v.mod_floor(&BigInt::from(4)));
    checks.push(check(
        "det_square_mod_4",
        mod4.as_ref().is_some_and(|v| v.is_zero() || *v == BigInt::from(1)),
        None,
        format!("(det M)^2 mod 4 = {mod4:?}"),
    ));

    Ok(DetReport { det, det_squared, ell, checks })
}

/// Renders a table as text: a `#` header, then one row per character with
/// each entry a bracketed, comma-separated coefficient list.
pub fn export_table(t: &CharacterTable) -> String {
    let mut out = format!("# conductor {} classes {}\n", t.conductor(), t.size());
    for row in &t.entries {
        let cells: Vec<String> = row
            .iter()
            .map(|x| {
                let coeffs: Vec<String> = x.trimmed().iter().map(BigInt::to_string).collect();
                format!("[{}]", coeffs.join(","))
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

/// Reads the format written by [`export_table`] back into ring elements.
pub fn import_table(text: &str) -> Result<(CyclotomicRing, Vec<Vec<CycInt>>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad_table("empty input"))?;
    let conductor: u32 = header
        .trim_start_matches('#')
        .split_whitespace()
        .skip_while(|w| *w != "conductor")
        .nth(1)
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| bad_table("missing conductor in header"))?;
    let ring = CyclotomicRing::new(conductor);
    let mut rows = Vec::new();
    for line in lines {
        let mut row = Vec::new();
        for cell in line.split_whitespace() {
            let inner = cell
                .strip_prefix('[')
                .and_then(|c| c.strip_suffix(']'))
                .ok_or_else(|| bad_table(cell))?;
            let coeffs = inner
                .split(',')
                .map(|c| c.parse::<BigInt>().map_err(|_| bad_table(c)))
                .collect::<Result<Vec<_>>>()?;
            row.push(ring.element(coeffs)?);
        }
        rows.push(row);
    }
    Ok((ring, rows))
}

fn bad_table(what: &str) -> Error {
    Error::Syntax { position: 0, expected: "a character table".into(), found: what.to_string() }
}

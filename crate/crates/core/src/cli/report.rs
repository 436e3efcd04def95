//! Serializable reports. Every number that can outgrow a machine word is a
//! decimal string; nothing is ever a float.

use num_bigint::BigInt;
use serde::Serialize;

use crate::chartab::{CharacterTable, DetReport, OrthogonalityReport};
use crate::groups::{ClassSet, GroupTable};
use crate::ntheory::{FactoredInt, FundamentalDiscriminant};
use crate::reciprocity::{CheckResult, Discriminant, Sl2Formula, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredJson {
    pub sign: i8,
    /// `[prime, exponent]` pairs, primes increasing.
    pub factors: Vec<[u64; 2]>,
}

impl From<&FactoredInt> for FactoredJson {
    fn from(f: &FactoredInt) -> Self {
        FactoredJson { sign: f.sign(), factors: f.factors().iter().map(|&(p, e)| [p, e]).collect() }
    }
}

/// The per-group report written by `disc` and `verify`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub label: String,
    pub n: u64,
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    pub d: String,
    pub d_factored: Option<FactoredJson>,
    #[serde(rename = "d_K")]
    pub d_k: Option<String>,
    pub conductor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol_modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol_period: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol_trivial: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol_values: Option<Vec<i8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_ok: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub theorem_checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chartab_ok: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub chartab_checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chartab_skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub det_squared: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn from_discriminant(g: &GroupTable, s: &ClassSet, d: &Discriminant) -> Report {
        let fundamental = d.fundamental().ok();
        Report {
            label: g.label().to_string(),
            n: g.order() as u64,
            m: s.num_classes(),
            r1: d.r1,
            r2: d.r2,
            d: d.to_bigint().to_string(),
            d_factored: Some((&d.value).into()),
            d_k: fundamental.as_ref().map(|f| f.d_k.to_string()),
            conductor: fundamental.as_ref().map(|f| f.conductor_value().to_string()),
            ..Report::default()
        }
    }

    pub fn from_verification(v: &VerificationReport) -> Report {
        let d = &v.discriminant;
        Report {
            label: v.label.clone(),
            n: v.order,
            m: v.num_classes,
            r1: d.r1,
            r2: d.r2,
            exponent: Some(v.exponent),
            d: d.to_bigint().to_string(),
            d_factored: Some((&d.value).into()),
            d_k: v.fundamental.as_ref().map(|f| f.d_k.to_string()),
            conductor: v.fundamental.as_ref().map(|f| f.conductor_value().to_string()),
            symbol_modulus: Some(v.symbol.modulus),
            symbol_period: Some(v.exponent),
            symbol_trivial: Some(v.symbol.is_trivial()),
            theorem_ok: Some(v.passed()),
            theorem_checks: v.checks.clone(),
            ..Report::default()
        }
    }

    pub fn failed(label: &str, error: String) -> Report {
        Report { label: label.to_string(), error: Some(error), ..Report::default() }
    }

    pub fn add_chartab(&mut self, ortho: &OrthogonalityReport, det: &DetReport) {
        let mut checks = vec![CheckResult {
            name: "orthogonality".into(),
            passed: ortho.holds,
            witness: None,
            detail: ortho
                .witness
                .map(|(j, k)| format!("column pair ({j}, {k})"))
                .unwrap_or_default(),
        }];
        checks.extend(det.checks.iter().cloned());
        self.chartab_ok = Some(checks.iter().all(|c| c.passed));
        self.chartab_checks = checks;
        self.det_squared = det.det_squared.as_ref().map(BigInt::to_string);
        self.ell = det.ell.as_ref().map(BigInt::to_string);
    }

    /// True when nothing failed (skipped sections count as passing).
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.theorem_ok != Some(false) && self.chartab_ok != Some(false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub index: usize,
    pub representative: Vec<u32>,
    pub size: usize,
    pub centralizer_order: usize,
    pub element_order: u64,
    pub real: bool,
    pub inverse: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassesReport {
    pub label: String,
    pub n: u64,
    pub m: usize,
    pub exponent: u64,
    pub classes: Vec<ClassRow>,
}

impl ClassesReport {
    pub fn new(g: &GroupTable, s: &ClassSet) -> Self {
        let classes = s
            .classes
            .iter()
            .enumerate()
            .map(|(index, c)| ClassRow {
                index,
                representative: g.encoding(c.representative).to_vec(),
                size: c.size,
                centralizer_order: c.centralizer_order,
                element_order: g.element_order(c.representative),
                real: s.is_real(index),
                inverse: s.inverse_class(index),
            })
            .collect();
        ClassesReport {
            label: g.label().to_string(),
            n: g.order() as u64,
            m: s.num_classes(),
            exponent: g.exponent(),
            classes,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChartabReport {
    pub label: String,
    pub conductor: u32,
    pub prime: u64,
    pub columns: Vec<usize>,
    /// `rows[i][j]` is the coefficient list of `chi_i(C_j)` in powers of zeta.
    pub rows: Vec<Vec<Vec<String>>>,
    pub orthogonality_ok: bool,
}

impl ChartabReport {
    pub fn new(label: &str, t: &CharacterTable, ortho: &OrthogonalityReport) -> Self {
        let rows = t
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.trimmed().iter().map(BigInt::to_string).collect()).collect())
            .collect();
        ChartabReport {
            label: label.to_string(),
            conductor: t.conductor(),
            prime: t.prime,
            columns: t.columns.clone(),
            rows,
            orthogonality_ok: ortho.holds,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Sl2Report {
    pub r: u32,
    pub q: u64,
    pub n: u64,
    pub m: u64,
    pub d: String,
    pub d_factored: FactoredJson,
    #[serde(rename = "d_K")]
    pub d_k: String,
    pub conductor: String,
    pub conductor_factored: FactoredJson,
    pub d_square: bool,
}

impl From<&Sl2Formula> for Sl2Report {
    fn from(f: &Sl2Formula) -> Self {
        let FundamentalDiscriminant { d_k, conductor } = &f.fundamental;
        Sl2Report {
            r: f.r,
            q: f.q,
            n: f.order,
            m: f.num_classes,
            d: f.d.value().to_string(),
            d_factored: (&f.d).into(),
            d_k: d_k.to_string(),
            conductor: conductor.value().to_string(),
            conductor_factored: conductor.into(),
            d_square: f.d.is_square(),
        }
    }
}

/// Aligned `key  value` lines.
pub fn aligned(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

/// Long decimals are abbreviated in human-readable output only.
pub fn abbreviate(digits: &str) -> String {
    if digits.len() <= 60 {
        return digits.to_string();
    }
    format!("{}...{} ({} digits)", &digits[..20], &digits[digits.len() - 20..], digits.len())
}

impl Report {
    pub fn to_human(&self) -> String {
        let mut rows = vec![("group".to_string(), self.label.clone())];
        if let Some(err) = &self.error {
            rows.push(("error".into(), err.clone()));
            return aligned(&rows);
        }
        rows.push(("n".into(), self.n.to_string()));
        rows.push(("m".into(), self.m.to_string()));
        rows.push(("r1, r2".into(), format!("{}, {}", self.r1, self.r2)));
        if let Some(e) = self.exponent {
            rows.push(("exponent".into(), e.to_string()));
        }
        rows.push(("d".into(), abbreviate(&self.d)));
        if let Some(f) = &self.d_factored {
            rows.push(("d (factored)".into(), factored_text(f)));
        }
        if let Some(dk) = &self.d_k {
            rows.push(("d_K".into(), dk.clone()));
        }
        if let Some(c) = &self.conductor {
            rows.push(("conductor".into(), abbreviate(c)));
        }
        if let Some(t) = self.symbol_trivial {
            rows.push(("symbol trivial".into(), t.to_string()));
        }
        if let Some(values) = &self.symbol_values {
            let v: Vec<String> = values.iter().map(i8::to_string).collect();
            rows.push(("symbol".into(), v.join(" ")));
        }
        for c in &self.theorem_checks {
            rows.push((format!("theorem: {}", c.name), verdict(c)));
        }
        if let Some(reason) = &self.chartab_skipped {
            rows.push(("chartab".into(), format!("skipped ({reason})")));
        }
        for c in &self.chartab_checks {
            rows.push((format!("chartab: {}", c.name), verdict(c)));
        }
        if let Some(sq) = &self.det_squared {
            rows.push(("(det M)^2".into(), sq.clone()));
        }
        if let Some(l) = &self.ell {
            rows.push(("l".into(), l.clone()));
        }
        if let Some(ms) = self.timing_ms {
            rows.push(("time (ms)".into(), ms.to_string()));
        }
        aligned(&rows)
    }
}

fn verdict(c: &CheckResult) -> String {
    match (c.passed, c.witness) {
        (true, _) => "pass".into(),
        (false, Some(a)) => format!("FAIL at a = {a}: {}", c.detail),
        (false, None) => format!("FAIL: {}", c.detail),
    }
}

pub fn factored_text(f: &FactoredJson) -> String {
    let parts: Vec<(u64, u64)> = f.factors.iter().map(|&[p, e]| (p, e)).collect();
    FactoredInt::from_parts(f.sign, parts).map(|v| v.to_string()).unwrap_or_default()
}

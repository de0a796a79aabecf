//! Verification of family members against their predicted torsion and
//! field type, with one report per member.

mod suite;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cubic_field::{FieldClass, FieldError, RationalField};
use crate::elliptic::{torsion_subgroup, CurveError, TorsionGroup};
use crate::exact::format_rational;
use crate::families::{self, member, FamilyError, FamilyLabel, FamilyMember};
use crate::numeric::DEFAULT_BITS;
use crate::{Rational, RationalCurve};

pub use suite::{division_polynomial_consistency, sqrt_round_trips, Criterion, CriterionResult, Suite, CRITERIA};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Starting precision of the numerical root stage.
    pub bits: usize,
    /// Include wall-clock timings; off by default so that reports are
    /// byte-stable across runs.
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { bits: DEFAULT_BITS, timings: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Verified,
    /// The parameter violates a hypothesis of the family.
    Excluded(String),
    /// The numerical stage could not decide; nothing was contradicted.
    Undecided(String),
    /// A computed value contradicts the prediction.
    Violation(String),
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Verified => "VERIFIED",
            Status::Excluded(_) => "EXCLUDED",
            Status::Undecided(_) => "UNDECIDED",
            Status::Violation(_) => "VIOLATION",
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Status::Violation(_))
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Timings {
    pub construct_ms: f64,
    pub torsion_ms: f64,
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub family: FamilyLabel,
    #[serde(serialize_with = "serialize_parameter")]
    pub parameter: Option<Rational>,
    #[serde(flatten)]
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<RationalCurve>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_class: Option<FieldClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_class: Option<FieldClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<TorsionGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_torsion: Option<TorsionGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational_torsion: Option<TorsionGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_rational_torsion: Option<TorsionGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

fn serialize_parameter<S: Serializer>(p: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(q) => s.serialize_str(&format_rational(q)),
        None => s.serialize_none(),
    }
}

impl VerificationReport {
    fn bare(family: FamilyLabel, parameter: Option<Rational>, status: Status) -> Self {
        VerificationReport {
            family,
            parameter,
            status,
            curve: None,
            field: None,
            field_class: None,
            expected_class: None,
            torsion: None,
            expected_torsion: None,
            rational_torsion: None,
            expected_rational_torsion: None,
            timings: None,
        }
    }

    /// `F13 u=2: VERIFIED Z/13 over x^3 + ...`, for terminals and logs.
    pub fn line(&self) -> String {
        let mut s = self.family.to_string();
        if let Some(p) = &self.parameter {
            s += &format!(" u={}", format_rational(p));
        }
        s += &format!(": {}", self.status.name());
        if let Some(t) = &self.torsion {
            s += &format!(" {t}");
        }
        if let Some(c) = &self.field_class {
            s += &format!(" ({})", c.galois_type);
        }
        match &self.status {
            Status::Excluded(r) | Status::Undecided(r) | Status::Violation(r) => s += &format!(" - {r}"),
            Status::Verified => {}
        }
        s
    }
}

/// Maps a failed computation to a status: undecided numerics are not
/// violations, everything else is.
fn failure_status(e: &CurveError) -> Status {
    match e {
        CurveError::Field(FieldError::Undecided(r)) => Status::Undecided(r.clone()),
        other => Status::Violation(other.to_string()),
    }
}

/// Computes the torsion over the member's field and over ℚ and the field
/// type, and compares them with the prediction.
pub fn verify_member(m: &FamilyMember, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let k = m.field.rebit(opts.bits);
    let (over_k, over_q) =
        rayon::join(|| torsion_subgroup(&m.curve, &k), || torsion_subgroup(&m.curve, &RationalField));
    let torsion_time = start.elapsed();
    let class = k.classify();

    let mut report = VerificationReport::bare(m.label, m.parameter.clone(), Status::Verified);
    report.curve = Some(m.curve.clone());
    report.field = Some(k.minpoly().to_string());
    report.field_class = Some(class);
    report.expected_class = Some(m.expected_class);
    report.expected_torsion = Some(m.expected_torsion);
    report.expected_rational_torsion = m.expected_rational_torsion;
    report.torsion = over_k.as_ref().ok().copied();
    report.rational_torsion = over_q.as_ref().ok().copied();
    if opts.timings {
        report.timings = Some(Timings { construct_ms: 0.0, torsion_ms: ms(torsion_time) });
    }

    let mut violations = Vec::new();
    let mut undecided = Vec::new();
    for (name, result) in [("field", &over_k), ("Q", &over_q)] {
        if let Err(e) = result {
            match failure_status(e) {
                Status::Undecided(r) => undecided.push(format!("torsion over {name}: {r}")),
                _ => violations.push(format!("torsion over {name}: {e}")),
            }
        }
    }
    if let Ok(t) = &over_k {
        if *t != m.expected_torsion {
            violations.push(format!("torsion over the field is {t}, expected {}", m.expected_torsion));
        }
    }
    if let (Ok(t), Some(expected)) = (&over_q, m.expected_rational_torsion) {
        if *t != expected {
            violations.push(format!("torsion over Q is {t}, expected {expected}"));
        }
    }
    if class.galois_type != m.expected_class.galois_type {
        violations.push(format!("field is {}, expected {}", class.galois_type, m.expected_class.galois_type));
    }
    if class.pure_candidate != m.expected_class.pure_candidate {
        violations.push(format!(
            "pure-cubic candidacy is {}, expected {}",
            class.pure_candidate, m.expected_class.pure_candidate
        ));
    }
    report.status = if !violations.is_empty() {
        Status::Violation(violations.join("; "))
    } else if !undecided.is_empty() {
        Status::Undecided(undecided.join("; "))
    } else {
        Status::Verified
    };
    report
}

/// Constructs and verifies one member. Only a malformed request is an
/// error; exclusions and failures are statuses.
pub fn verify(
    label: FamilyLabel,
    parameter: Option<&Rational>,
    opts: &VerifyOptions,
) -> Result<VerificationReport, FamilyError> {
    if label == FamilyLabel::F14Isog {
        return Ok(verify_modular14());
    }
    let start = Instant::now();
    let m = match member(label, parameter) {
        Ok(m) => m,
        Err(FamilyError::Excluded(r)) => {
            return Ok(VerificationReport::bare(label, parameter.cloned(), Status::Excluded(r)))
        }
        Err(e @ FamilyError::InvalidInput(_)) => return Err(e),
        Err(e) => return Ok(VerificationReport::bare(label, parameter.cloned(), Status::Violation(e.to_string()))),
    };
    let construct = start.elapsed();
    let mut report = verify_member(&m, opts);
    if let Some(t) = report.timings.as_mut() {
        t.construct_ms = ms(construct);
    }
    Ok(report)
}

/// Verifies every parameter (the defaults when `params` is `None`), in
/// parallel; reports come back in input order.
pub fn verify_family(
    label: FamilyLabel,
    params: Option<&[Rational]>,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>, FamilyError> {
    if !label.is_parametric() {
        if params.is_some_and(|p| !p.is_empty()) {
            return Err(FamilyError::InvalidInput(format!("{label} takes no parameters")));
        }
        return Ok(vec![verify(label, None, opts)?]);
    }
    let defaults = label.default_parameters();
    let params = params.unwrap_or(&defaults);
    params.par_iter().map(|u| verify(label, Some(u), opts)).collect()
}

/// The modular-curve checks that stand in for a member of the ℤ/14
/// isogeny family: `φ(Qᵢ) = Pᵢ` with `Pᵢ ∈ X₀(14)` and `Qᵢ ∈ X₁(14)`.
pub fn verify_modular14() -> VerificationReport {
    let status = match modular14_failures() {
        Ok(f) if f.is_empty() => Status::Verified,
        Ok(f) => Status::Violation(f.join("; ")),
        Err(e) => Status::Violation(e.to_string()),
    };
    VerificationReport::bare(FamilyLabel::F14Isog, None, status)
}

fn modular14_failures() -> Result<Vec<String>, FamilyError> {
    let m = families::modular14_models()?;
    let mut failures = Vec::new();
    for (i, (q, p)) in [(&m.q1, &m.p1), (&m.q2, &m.p2)].into_iter().enumerate() {
        let i = i + 1;
        if !families::on_x1_14(&q.0, &q.1) {
            failures.push(format!("Q{i} is not on X1(14)"));
        }
        if !families::on_x0_14(&p.0, &p.1) {
            failures.push(format!("P{i} is not on X0(14)"));
        }
        let image = families::eval_phi(&q.0, &q.1)?;
        if image != (m.field.from_rational(&p.0), m.field.from_rational(&p.1)) {
            failures.push(format!("phi(Q{i}) = ({}, {}) is not P{i}", image.0, image.1));
        }
    }
    Ok(failures)
}

/// Counts of each status, for summary lines and exit codes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub excluded: usize,
    pub undecided: usize,
    pub violation: usize,
}

impl Summary {
    pub fn of<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Verified => s.verified += 1,
                Status::Excluded(_) => s.excluded += 1,
                Status::Undecided(_) => s.undecided += 1,
                Status::Violation(_) => s.violation += 1,
            }
        }
        s
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} verified, {} excluded, {} undecided, {} violations",
            self.verified, self.excluded, self.undecided, self.violation
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn excluded_parameter() {
        let r = verify(FamilyLabel::F13, Some(&int(0)), &VerifyOptions::default()).unwrap();
        assert!(matches!(r.status, Status::Excluded(_)));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["status"], "EXCLUDED");
        assert_eq!(json["parameter"], "0");
    }

    #[test]
    fn fixed_curve_verifies() {
        let r = verify(FamilyLabel::Fixed49A3, None, &VerifyOptions::default()).unwrap();
        assert_eq!(r.status, Status::Verified, "{}", r.line());
        assert_eq!(r.torsion, Some(TorsionGroup::cyclic(14)));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["torsion"], "Z/14");
        assert!(json.get("timings").is_none());
        assert!(json.get("reason").is_none());
    }

    #[test]
    fn wrong_prediction_is_a_violation() {
        let mut m = member(FamilyLabel::F14Kubert7, Some(&int(2))).unwrap();
        m.expected_torsion = TorsionGroup::cyclic(7);
        let r = verify_member(&m, &VerifyOptions::default());
        assert!(r.status.is_violation(), "{}", r.line());
    }

    #[test]
    fn modular_checks() {
        assert_eq!(verify_modular14().status, Status::Verified);
        assert!(verify_family(FamilyLabel::Fixed49A4, Some(&[int(2)]), &VerifyOptions::default()).is_err());
    }

    #[test]
    fn summary_counts() {
        let opts = VerifyOptions::default();
        let reports = verify_family(FamilyLabel::F14Kubert7, Some(&[int(2), int(1), int(3)]), &opts).unwrap();
        assert_eq!(reports[1].parameter, Some(int(1)));
        let s = Summary::of(&reports);
        assert_eq!((s.verified, s.excluded), (2, 1));
    }
}

//! The eleven acceptance criteria, shared by the acceptance test and the
//! `seed-suite` command.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::rngs::SmallRng;
use rand::{RngExt, SeedableRng};
use serde::{Serialize, Serializer};

use crate::cubic_field::{BaseField, CubicField, FieldError, GaloisType, RationalField};
use crate::elliptic::{torsion_points, torsion_subgroup, CurveError, CurvePoint, DivisionPolynomials, TorsionGroup};
use crate::exact::{discriminant, format_rational, int, rat, sign};
use crate::families::{self as fam, FamilyError, FamilyLabel};
use crate::obstruction::{self as obs, HyperPoint};
use crate::scalar::Scalar;
use crate::{Rational, RationalCurve, RationalPoly};

use super::{verify_family, verify_modular14, Status, VerificationReport, VerifyOptions};

/// A criterion and the wall-clock budget it must meet.
#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit: Duration,
}

const fn criterion(id: u8, title: &'static str, secs: u64) -> Criterion {
    Criterion { id, title, limit: Duration::from_secs(secs) }
}

pub const CRITERIA: [Criterion; 11] = [
    criterion(1, "F13 sweep: Z/13 over cyclic cubic fields", 60),
    criterion(2, "twist identity for the 13-isogeny family", 5),
    criterion(3, "49A3 and 49A4: Z/14 over Q(zeta7)+", 10),
    criterion(4, "modular map X1(14) -> X0(14)", 1),
    criterion(5, "F14_KUBERT7 sweep", 60),
    criterion(6, "9-isogeny checks", 5),
    criterion(7, "F18_CYCLIC sweep", 120),
    criterion(8, "F18_KUBERT9 sweep", 120),
    criterion(9, "F2x14 sweep and normalization", 120),
    criterion(10, "pure-cubic obstruction curves", 30),
    criterion(11, "global properties", 60),
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    /// Every check held.
    pub checks_hold: bool,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
    #[serde(serialize_with = "secs")]
    pub limit: Duration,
    pub failures: Vec<String>,
    pub details: Vec<String>,
}

fn secs<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64((d.as_secs_f64() * 1e3).round() / 1e3)
}

impl CriterionResult {
    pub fn within_limit(&self) -> bool {
        self.elapsed < self.limit
    }

    pub fn passed(&self) -> bool {
        self.checks_hold && self.within_limit()
    }

    /// `criterion  1 PASS  F13 sweep ... (12.31 s, limit 60 s)`.
    pub fn line(&self) -> String {
        let mut s = format!(
            "criterion {:>2} {}  {} ({:.2} s, limit {} s)",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        );
        if !self.within_limit() {
            s += " - over the time limit";
        }
        if let Some(f) = self.failures.first() {
            s += &format!(" - {f}");
            if self.failures.len() > 1 {
                s += &format!(" (+{} more)", self.failures.len() - 1);
            }
        }
        s
    }
}

/// Collects the outcome of the individual checks of one criterion.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    details: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.details.push(what);
        } else {
            self.failures.push(what);
        }
    }

    fn fail(&mut self, what: impl std::fmt::Display) {
        self.failures.push(what.to_string());
    }

    /// Records an error from a step that should not fail.
    fn ok<T, E: std::fmt::Display>(&mut self, r: Result<T, E>, step: &str) -> Option<T> {
        r.map_err(|e| self.fail(format!("{step}: {e}"))).ok()
    }
}

/// Runs criteria in order, keeping the sweep reports for the global checks.
pub struct Suite {
    opts: VerifyOptions,
    height: u64,
    seed: u64,
    reports: Vec<VerificationReport>,
}

impl Suite {
    pub fn new(opts: VerifyOptions) -> Self {
        Suite { opts, height: 100, seed: 0x5eed, reports: Vec::new() }
    }

    /// Height bound of the rational point searches.
    pub fn with_height(mut self, height: u64) -> Self {
        self.height = height;
        self
    }

    /// Seed of the random elements in the square-root round trips.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Every member report produced by the sweeps run so far.
    pub fn reports(&self) -> &[VerificationReport] {
        &self.reports
    }

    pub fn run_all(&mut self) -> Vec<CriterionResult> {
        CRITERIA.iter().map(|c| self.run(c.id)).collect()
    }

    /// Panics on an id outside `1..=11`.
    pub fn run(&mut self, id: u8) -> CriterionResult {
        let c = CRITERIA.iter().find(|c| c.id == id).unwrap_or_else(|| panic!("no criterion {id}"));
        let start = Instant::now();
        let mut checks = Checks::default();
        match id {
            1 => self.sweep(&mut checks, FamilyLabel::F13),
            2 => twist_identity(&mut checks),
            3 => self.fixed_14(&mut checks),
            4 => modular_map(&mut checks),
            5 => {
                self.sweep(&mut checks, FamilyLabel::F14Kubert7);
                self.discriminant_signs(&mut checks, FamilyLabel::F14Kubert7);
            }
            6 => nine_isogeny(&mut checks),
            7 => self.sweep(&mut checks, FamilyLabel::F18Cyclic),
            8 => {
                self.sweep(&mut checks, FamilyLabel::F18Kubert9);
                self.discriminant_signs(&mut checks, FamilyLabel::F18Kubert9);
            }
            9 => {
                self.sweep(&mut checks, FamilyLabel::F2x14);
                two_fourteen_models(&mut checks);
            }
            10 => self.obstruction(&mut checks),
            _ => self.global(&mut checks),
        }
        CriterionResult {
            id,
            title: c.title,
            checks_hold: checks.failures.is_empty(),
            elapsed: start.elapsed(),
            limit: c.limit,
            failures: checks.failures,
            details: checks.details,
        }
    }

    /// Every default parameter verifies; exclusions are recorded, anything
    /// else fails the criterion.
    fn sweep(&mut self, checks: &mut Checks, label: FamilyLabel) {
        let Some(reports) = checks.ok(verify_family(label, None, &self.opts), "sweep") else { return };
        for r in &reports {
            match &r.status {
                Status::Verified | Status::Excluded(_) => checks.details.push(r.line()),
                _ => checks.fail(r.line()),
            }
        }
        let verified = reports.iter().filter(|r| r.status == Status::Verified).count();
        checks.check(verified > 0, format!("{label}: {verified} members verified"));
        self.reports.extend(reports);
    }

    /// `Δ_u < 0` exactly for the complex fields; never a pure candidate.
    fn discriminant_signs(&self, checks: &mut Checks, label: FamilyLabel) {
        for r in self.reports.iter().filter(|r| r.family == label && r.status == Status::Verified) {
            let (Some(curve), Some(class), Some(u)) = (&r.curve, &r.field_class, &r.parameter) else { continue };
            let negative = sign(curve.discriminant()) < 0;
            let u = format_rational(u);
            checks.check(
                negative == (class.galois_type == GaloisType::Complex),
                format!("{label} u={u}: sign of the discriminant matches {}", class.galois_type),
            );
            checks.check(!class.pure_candidate, format!("{label} u={u}: not a pure-cubic candidate"));
        }
    }

    fn fixed_14(&mut self, checks: &mut Checks) {
        for label in [FamilyLabel::Fixed49A3, FamilyLabel::Fixed49A4] {
            let Some(reports) = checks.ok(verify_family(label, None, &self.opts), "verify") else { return };
            for r in &reports {
                checks.check(r.status == Status::Verified, r.line());
            }
            self.reports.extend(reports);
        }
        let Some(members) = checks.ok(fam::fixed_14(), "fixed curves") else { return };
        for (m, j) in members.iter().zip([-3375, 16581375]) {
            checks.check(*m.curve.j_invariant() == int(j), format!("{}: j = {j}", m.label));
            let k = m.field.rebit(self.opts.bits);
            let twisted = m.curve.to_short().0.quadratic_twist(&int(-7));
            let Some(twisted) = checks.ok(twisted, "twist by -7") else { continue };
            if let Some(t) = checks.ok(torsion_subgroup(&twisted, &k), "torsion of the twist") {
                checks.check(t == TorsionGroup::cyclic(2), format!("{} twisted by -7: {t} over {k}", m.label));
            }
        }
    }

    fn obstruction(&self, checks: &mut Checks) {
        for label in [FamilyLabel::F14Kubert7, FamilyLabel::F18Kubert9] {
            let Some(r) = checks.ok(obs::obstruction_report(label, self.height), "obstruction") else { continue };
            let pts: Vec<String> = r.points_found.iter().map(HyperPoint::to_string).collect();
            checks.check(r.substitution_identity, format!("{label}: -27k² = Δ_u becomes {}", r.curve));
            checks.check(
                r.matches_expected,
                format!("{label}: genus {} search at H = {} found {{{}}}", r.genus, r.height, pts.join(", ")),
            );
            checks.check(r.known_points_excluded, format!("{label}: u = 0 and u = 1 are excluded parameters"));
        }
        if let Some(r) = checks.ok(obs::verify_sigma_and_phi(), "sigma and phi") {
            checks.check(r.sigma_preserves_curve, "σ maps C to C");
            checks.check(r.sigma_is_not_identity && r.sigma_squared_is_not_identity, "σ and σ² are not the identity");
            checks.check(r.sigma_cubed_is_identity, "σ³ = id");
            checks.check(r.phi_maps_into_e, "φ maps C into y² = x³ + 1");
            checks.check(r.phi_is_sigma_invariant, "φ ∘ σ = φ");
        }
        if let Some(r) = checks.ok(obs::fiber_analysis(), "fiber analysis") {
            checks.check(r.torsion == TorsionGroup::cyclic(6), format!("E(Q)_tors = {}", r.torsion));
            checks.check(r.points_match, format!("E(Q) = {{{}}}", r.points.join(", ")));
            for f in &r.fibers {
                checks.check(
                    f.rational_roots.is_empty(),
                    format!("fiber over x = {}: {} has no rational root", format_rational(&f.x), f.cubic),
                );
            }
        }
    }

    fn global(&self, checks: &mut Checks) {
        let mut seen = 0;
        for r in &self.reports {
            if let Some(t) = r.torsion {
                seen += 1;
                checks.check(t.in_najman(), format!("{}: {t} is in Najman's list", r.line()));
            }
            if let Some(t) = r.rational_torsion {
                checks.check(t.in_mazur(), format!("{}: {t} over Q is in Mazur's list", r.line()));
            }
        }
        checks.details.push(format!("{seen} computed torsion groups from the sweeps"));
        let e = obs::quotient_curve();
        if let Some(m) = checks.ok(division_polynomial_consistency(&e, &RationalField, 9), "y² = x³ + 1") {
            checks.check(m.is_empty(), format!("y² = x³ + 1 over Q: ψ_n roots match the group for n ≤ 9 {m:?}"));
        }
        let k = fam::real_cyclotomic_7().rebit(self.opts.bits);
        if let Some(m) = checks.ok(division_polynomial_consistency(&fam::curve_49a3(), &k, 9), "49A3") {
            checks.check(m.is_empty(), format!("49A3 over {k}: ψ_n roots match the group for n ≤ 9 {m:?}"));
        }
        if let Some(m) = checks.ok(sqrt_round_trips(200, self.seed), "square roots") {
            checks.check(m.is_empty(), format!("sqrt(c²) = ±c for 200 random elements {m:?}"));
        }
    }
}

fn twist_identity(checks: &mut Checks) {
    for t in [int(2), int(3), int(-1), rat(1, 2)] {
        let Some(r) = checks.ok(fam::verify_twist13_identity(&t), "twist identity") else { continue };
        let t = format_rational(&t);
        checks.check(r.beta_squared_consistent, format!("t={t}: β_t² matches the 13-torsion x-coordinate"));
        checks.check(r.identity_holds, format!("t={t}: U(t)·β_t² = (b₁α_t + b₀)²"));
        checks.check(r.point_has_order_13, format!("t={t}: the point has order 13 on E_(t,U(t))"));
    }
}

fn modular_map(checks: &mut Checks) {
    let r = verify_modular14();
    checks.check(r.status == Status::Verified, format!("φ(Q1) = P1, φ(Q2) = P2 on X0(14): {}", r.line()));
}

fn nine_isogeny(checks: &mut Checks) {
    if let (Some(f), Some(e)) = (
        checks.ok(fam::three_torsion_linear_factor(&int(1)), "3-torsion factor"),
        checks.ok(fam::isogeny9_model(&int(1), &int(1)), "9-isogeny model"),
    ) {
        checks.check(f == RationalPoly::from_desc(&[1, 648]), format!("t=1: factor {f}"));
        if let Some(psi3) = checks.ok(e.division_polynomial(3), "ψ₃") {
            checks.check(f.divides(&psi3), "t=1: x + 648 divides ψ₃");
        }
    }
    for s in [int(0), int(1), int(-2), rat(1, 2)] {
        let Some(f) = checks.ok(fam::cubic_factor_f(&s), "F_s") else { continue };
        let Some(d) = checks.ok(discriminant(&f), "disc(F_s)") else { continue };
        let q = s.square() + &(int(3) * &s) + &int(3);
        let expected = int(4096 * 81) * q.square();
        let table = fam::cubic_factor_discriminant(&s).ok();
        checks.check(
            d == expected && table.as_ref() == Some(&expected),
            format!("s={}: disc(F_s) = 2¹²·3⁴(s² + 3s + 3)² = {}", format_rational(&s), format_rational(&d)),
        );
    }
    checks.check(
        matches!(fam::isogeny9_model(&int(0), &int(1)), Err(FamilyError::Excluded(_))),
        "t=0 rejected as singular",
    );
}

fn two_fourteen_models(checks: &mut Checks) {
    for u in FamilyLabel::F2x14.default_parameters() {
        let p = format_rational(&u);
        let Some(n) = checks.ok(fam::normalize_2x14(&u), "normalization") else { continue };
        checks.check(
            n.all_isomorphic,
            format!("u={p}: normalizing at each point of order 7 gives the long model up to Q-isomorphism"),
        );
        let Some((long, short)) = checks.ok(fam::family_2x14_models(&u), "models") else { continue };
        let iso = crate::elliptic::is_isomorphic_over(&long, &short, &RationalField);
        if let Some(iso) = checks.ok(iso, "isomorphism") {
            checks.check(iso.is_some(), format!("u={p}: long and short models are Q-isomorphic"));
        }
    }
}

/// Compares, for `n ≤ n_max`, the roots in `k` of the `n`-division
/// polynomial that lift to points with the `n`-torsion of the group found
/// by [`torsion_points`], after checking that group is closed under the
/// group law. Returns the mismatches.
pub fn division_polynomial_consistency<F: BaseField>(
    e: &RationalCurve,
    k: &F,
    n_max: u32,
) -> Result<Vec<String>, CurveError> {
    let short = e.integral_short().0;
    let points = torsion_points(&short, k)?.points;
    let ek = short.map(|c| k.embed(c))?;
    let mut mismatches = Vec::new();
    for p in &points {
        for q in &points {
            if !points.contains(&ek.add(p, q)) {
                mismatches.push("torsion points are not closed under addition".to_string());
            }
        }
    }
    let (a, b) = short.short_coeffs()?;
    let mut psi = DivisionPolynomials::new(a.clone(), b.clone());
    let rhs = psi.two_torsion();
    for n in 2..=n_max {
        let poly = if n == 2 { rhs.clone() } else { psi.get(n) };
        let mut from_psi = Vec::new();
        for x in k.roots(&poly)? {
            if k.sqrt(&rhs.eval_in(&x))?.is_some() {
                from_psi.push(x);
            }
        }
        let mut from_group: Vec<F::Elem> = Vec::new();
        for p in &points {
            let CurvePoint::Affine(x, _) = p else { continue };
            let killed = ek.mul(n as i64, p).is_infinity();
            let two_torsion = ek.double(p).is_infinity();
            if killed && (n == 2 || n % 2 == 1 || !two_torsion) && !from_group.contains(x) {
                from_group.push(x.clone());
            }
        }
        let same = from_psi.len() == from_group.len() && from_psi.iter().all(|x| from_group.contains(x));
        if !same {
            mismatches.push(format!(
                "n = {n}: {} roots of ψ_n lift, {} x-coordinates in the group",
                from_psi.len(),
                from_group.len()
            ));
        }
    }
    Ok(mismatches)
}

/// `sqrt(c²) ∈ {c, -c}` for `count` random nonzero elements spread over a
/// cyclic, a pure, a complex and a non-monic field. Returns the failures.
pub fn sqrt_round_trips(count: usize, seed: u64) -> Result<Vec<String>, FieldError> {
    let fields = [
        RationalPoly::from_desc(&[1, 2, -1, -1]),
        RationalPoly::from_desc(&[1, 0, 0, -2]),
        RationalPoly::from_desc(&[1, 0, -1, -1]),
        RationalPoly::from_desc(&[3, 0, -2, 5]),
    ]
    .map(CubicField::new);
    let fields: Vec<CubicField> = fields.into_iter().collect::<Result<_, _>>()?;
    let mut rng = SmallRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < count {
        let k = &fields[done % fields.len()];
        let coords =
            [(); 3].map(|_| Rational::new(rng.random_range(-20i64..=20).into(), rng.random_range(1i64..=5).into()));
        let c = k.element(coords);
        if c.is_zero() {
            continue;
        }
        done += 1;
        match k.sqrt(&c.square())? {
            Some(r) if r == c || r == -c.clone() => {}
            other => failures.push(format!("sqrt(({c})²) = {other:?} in {k}")),
        }
    }
    Ok(failures)
}

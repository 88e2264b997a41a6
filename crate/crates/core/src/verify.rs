//! The congruence `−1 − a + a⁻¹ ≡ −χ (mod p)`: residuals, classification
//! against the registry of explained holds, parameter sweeps, and the
//! closed-form cross-checks for Types III–V and IX–X.

pub mod output;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::families::{self, BergeDualRecord, Family, TypeIIIVParams};
use crate::modmath::{checked_add, checked_mul, checked_sub, Residue};
use crate::{Error, Rational, Result};

/// `((−1 − a + a⁻¹) − chi_neg) mod p`; zero exactly when the congruence holds.
pub fn congruence_residual(p: i64, a: Residue, chi_neg: i64) -> Result<Residue> {
    if a.modulus() != p {
        return Err(Error::ModulusMismatch(a.modulus(), p));
    }
    Ok(crate::modmath::sl_class(a)?.add_int(-chi_neg))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    FailsAsPredicted,
    ExpectedTorus,
    DocumentedException,
    Violation,
}

impl Classification {
    pub const ALL: [Classification; 4] = [
        Classification::ExpectedTorus,
        Classification::DocumentedException,
        Classification::FailsAsPredicted,
        Classification::Violation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::ExpectedTorus => "expected-torus",
            Classification::DocumentedException => "documented-exception",
            Classification::FailsAsPredicted => "fails-as-predicted",
            Classification::Violation => "violation",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Classification {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Classification::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown classification {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistryEntry {
    pub family: Family,
    /// `None` is a wildcard.
    pub params: Vec<Option<i64>>,
    pub candidate: usize,
    pub classification: Classification,
    pub note: String,
}

impl RegistryEntry {
    fn matches(&self, rec: &BergeDualRecord, candidate: usize) -> bool {
        self.family == rec.family
            && self.candidate == candidate
            && self.params.len() == rec.params.len()
            && self
                .params
                .iter()
                .zip(&rec.params)
                .all(|(pat, v)| pat.is_none_or(|x| x == *v))
    }
}

/// Holds of the congruence that are explained: torus duals and the known
/// exceptions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Registry {
    entries: Vec<RegistryEntry>,
}

const BUILTIN_REGISTRY: &str = include_str!("../data/registry.tsv");

impl Registry {
    /// Tab-separated rows: family, comma-separated params (`*` for any),
    /// candidate index, classification, note. `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Registry> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: String| Error::Parse(format!("registry line {}: {m}", n + 1));
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() < 4 {
                return Err(err(format!("expected at least 4 fields, got {}", f.len())));
            }
            let family = f[0].parse()?;
            let params = f[1]
                .split(',')
                .map(|x| match x.trim() {
                    "*" => Ok(None),
                    v => v
                        .parse()
                        .map(Some)
                        .map_err(|_| err(format!("bad parameter {v:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            let candidate = f[2]
                .trim()
                .parse()
                .map_err(|_| err(format!("bad candidate index {:?}", f[2])))?;
            let classification: Classification = f[3].trim().parse()?;
            if matches!(
                classification,
                Classification::Violation | Classification::FailsAsPredicted
            ) {
                return Err(err(format!(
                    "{classification} is not a registry classification"
                )));
            }
            let note = f.get(4).copied().unwrap_or("").to_owned();
            entries.push(RegistryEntry {
                family,
                params,
                candidate,
                classification,
                note,
            });
        }
        Ok(Registry { entries })
    }

    pub fn builtin() -> &'static Registry {
        static REG: OnceLock<Registry> = OnceLock::new();
        REG.get_or_init(|| Registry::parse(BUILTIN_REGISTRY).expect("built-in registry parses"))
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    /// The first matching entry; specific rows win over wildcard rows only by
    /// appearing first.
    pub fn lookup(&self, rec: &BergeDualRecord, candidate: usize) -> Option<&RegistryEntry> {
        self.entries.iter().find(|e| e.matches(rec, candidate))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateEntry {
    pub a: Residue,
    pub residual: Residue,
    pub holds: bool,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub record: BergeDualRecord,
    pub entries: Vec<CandidateEntry>,
    pub classification: Classification,
}

impl CongruenceReport {
    pub fn holds(&self) -> usize {
        self.entries.iter().filter(|e| e.holds).count()
    }
}

pub fn classify(rec: &BergeDualRecord) -> Result<CongruenceReport> {
    classify_with(rec, Registry::builtin())
}

pub fn classify_with(rec: &BergeDualRecord, registry: &Registry) -> Result<CongruenceReport> {
    let mut entries = Vec::with_capacity(rec.a_candidates.len());
    for (idx, &a) in rec.a_candidates.iter().enumerate() {
        let residual = congruence_residual(rec.p, a, rec.chi_neg)?;
        let holds = residual.is_zero();
        let classification = if !holds {
            Classification::FailsAsPredicted
        } else {
            registry
                .lookup(rec, idx)
                .map_or(Classification::Violation, |e| e.classification)
        };
        entries.push(CandidateEntry {
            a,
            residual,
            holds,
            classification,
        });
    }
    let classification = entries
        .iter()
        .map(|e| e.classification)
        .max()
        .unwrap_or(Classification::FailsAsPredicted);
    Ok(CongruenceReport {
        record: rec.clone(),
        entries,
        classification,
    })
}

/// An inclusive integer range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn new(lo: i64, hi: i64) -> Result<Span> {
        if lo > hi {
            return Err(Error::InvalidRange(format!(
                "{lo}..{hi} is empty (min > max)"
            )));
        }
        Ok(Span { lo, hi })
    }

    pub fn single(v: i64) -> Span {
        Span { lo: v, hi: v }
    }

    pub fn len(&self) -> u64 {
        (self.hi as i128 - self.lo as i128 + 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `lo..hi`, `lo..=hi` (both inclusive) or a single integer.
impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Span> {
        let bad = || Error::InvalidRange(format!("{s:?} is not of the form lo..hi"));
        match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                let lo = lo.trim().parse().map_err(|_| bad())?;
                let hi = hi.trim().parse().map_err(|_| bad())?;
                Span::new(lo, hi)
            }
            None => s.trim().parse().map(Span::single).map_err(|_| bad()),
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Optional per-parameter ranges; unset ones take the family default.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParamRanges {
    pub i: Option<Span>,
    pub k: Option<Span>,
    pub sign: Option<Span>,
    pub delta: Option<Span>,
    pub eps: Option<Span>,
    pub big_a: Option<Span>,
    pub t: Option<Span>,
    pub r: Option<Span>,
    pub s: Option<Span>,
    pub j: Option<Span>,
}

const SIGNS: Span = Span { lo: -1, hi: 1 };

/// One family and the ranges of its raw parameters, in record parameter
/// order. Tuples are visited in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepPlan {
    pub family: Family,
    pub spans: Vec<Span>,
}

impl SweepPlan {
    pub fn new(family: Family, ranges: &ParamRanges) -> SweepPlan {
        let or = |x: Option<Span>, lo: i64, hi: i64| x.unwrap_or(Span { lo, hi });
        let spans = match family {
            Family::I => vec![
                or(ranges.i, 2, 20),
                or(ranges.k, 2, 20),
                ranges.sign.unwrap_or(SIGNS),
            ],
            Family::II => vec![
                or(ranges.i, 4, 20),
                or(ranges.k, 4, 20),
                ranges.sign.unwrap_or(SIGNS),
            ],
            Family::III | Family::IV | Family::V => vec![
                ranges.delta.unwrap_or(SIGNS),
                ranges.eps.unwrap_or(SIGNS),
                or(ranges.big_a, 1, 15),
                or(ranges.k, 0, 8),
                or(ranges.t, -8, 8),
            ],
            Family::VII => vec![or(ranges.r, 1, 60), or(ranges.s, 1, 60)],
            Family::VIII => vec![or(ranges.r, 3, 40), or(ranges.s, 2, 40)],
            Family::IX | Family::X => vec![or(ranges.j, -50, 50)],
        };
        SweepPlan { family, spans }
    }

    pub fn tuples(&self) -> Tuples {
        Tuples {
            spans: self.spans.clone(),
            next: Some(self.spans.iter().map(|s| s.lo).collect()),
        }
    }

    /// Whether a tuple is enumerated at all. Type I is symmetric in `(i, k)`
    /// and only `i < k` is visited.
    fn visits(&self, t: &[i64]) -> bool {
        match self.family {
            Family::I => t[0] < t[1],
            _ => true,
        }
    }

    /// The record for a tuple, or `None` when the tuple is not family-valid.
    pub fn record(&self, t: &[i64]) -> Result<Option<BergeDualRecord>> {
        if !self.visits(t) {
            return Ok(None);
        }
        let built = match self.family {
            Family::I => families::type_i(t[0], t[1], t[2]),
            Family::II => families::type_ii(t[0], t[1], t[2]),
            f @ (Family::III | Family::IV | Family::V) => {
                TypeIIIVParams::new(f, t[0], t[1], t[2], t[3], t[4])
                    .and_then(|pr| families::type_iii_v(&pr))
            }
            Family::VII => families::type_vii(t[0], t[1]),
            Family::VIII => families::type_viii(t[0], t[1]),
            f @ (Family::IX | Family::X) => families::type_ix_x(f, t[0]),
        };
        match built {
            Ok(rec) => Ok(Some(rec)),
            Err(
                Error::InvalidParameter(_) | Error::NotCoprime(..) | Error::DegenerateCable { .. },
            ) => Ok(None),
            Err(e) => Err(e),
        }
    }
}

/// Odometer over the product of spans, last coordinate fastest.
#[derive(Debug, Clone)]
pub struct Tuples {
    spans: Vec<Span>,
    next: Option<Vec<i64>>,
}

impl Iterator for Tuples {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = succ.len();
        self.next = loop {
            if pos == 0 {
                break None;
            }
            pos -= 1;
            if succ[pos] < self.spans[pos].hi {
                succ[pos] += 1;
                break Some(succ);
            }
            succ[pos] = self.spans[pos].lo;
        };
        Some(cur)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub reports: u64,
    pub candidates: u64,
    pub holds: u64,
    pub expected_torus: u64,
    pub documented_exception: u64,
    pub fails_as_predicted: u64,
    pub violations: u64,
}

impl Summary {
    pub fn add(&mut self, r: &CongruenceReport) {
        self.reports += 1;
        self.candidates += r.entries.len() as u64;
        self.holds += r.holds() as u64;
        *self.count_mut(r.classification) += 1;
    }

    pub fn merge(&mut self, o: &Summary) {
        self.reports += o.reports;
        self.candidates += o.candidates;
        self.holds += o.holds;
        self.expected_torus += o.expected_torus;
        self.documented_exception += o.documented_exception;
        self.fails_as_predicted += o.fails_as_predicted;
        self.violations += o.violations;
    }

    pub fn count(&self, c: Classification) -> u64 {
        match c {
            Classification::ExpectedTorus => self.expected_torus,
            Classification::DocumentedException => self.documented_exception,
            Classification::FailsAsPredicted => self.fails_as_predicted,
            Classification::Violation => self.violations,
        }
    }

    fn count_mut(&mut self, c: Classification) -> &mut u64 {
        match c {
            Classification::ExpectedTorus => &mut self.expected_torus,
            Classification::DocumentedException => &mut self.documented_exception,
            Classification::FailsAsPredicted => &mut self.fails_as_predicted,
            Classification::Violation => &mut self.violations,
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "reports={} candidates={} holds={}",
            self.reports, self.candidates, self.holds
        )?;
        for c in Classification::ALL {
            write!(f, " {}={}", c, self.count(c))?;
        }
        Ok(())
    }
}

const CHUNK: usize = 4096;

fn classify_tuple(
    plan: &SweepPlan,
    registry: &Registry,
    t: &[i64],
) -> Result<Option<CongruenceReport>> {
    plan.record(t)?
        .map(|rec| classify_with(&rec, registry))
        .transpose()
}

/// Classifies every family-valid tuple of `plan` and hands the reports to
/// `sink` in lexicographic parameter order. Work is split into chunks
/// evaluated on `jobs` threads; the output does not depend on `jobs`.
pub fn sweep<F>(plan: &SweepPlan, jobs: usize, sink: F) -> Result<Summary>
where
    F: FnMut(&CongruenceReport) -> Result<()>,
{
    sweep_with(plan, jobs, Registry::builtin(), sink)
}

pub fn sweep_with<F>(
    plan: &SweepPlan,
    jobs: usize,
    registry: &Registry,
    mut sink: F,
) -> Result<Summary>
where
    F: FnMut(&CongruenceReport) -> Result<()>,
{
    let jobs = jobs.max(1);
    let pool = if jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::param(format!("cannot start {jobs} worker threads: {e}")))?,
        )
    } else {
        None
    };
    let mut summary = Summary::default();
    let mut tuples = plan.tuples();
    loop {
        let chunk: Vec<Vec<i64>> = tuples.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let reports: Vec<Result<Option<CongruenceReport>>> = match &pool {
            Some(pool) => pool.install(|| {
                chunk
                    .par_iter()
                    .map(|t| classify_tuple(plan, registry, t))
                    .collect()
            }),
            None => chunk
                .iter()
                .map(|t| classify_tuple(plan, registry, t))
                .collect(),
        };
        for r in reports {
            if let Some(report) = r? {
                summary.add(&report);
                sink(&report)?;
            }
        }
    }
    Ok(summary)
}

pub fn sweep_collect(plan: &SweepPlan, jobs: usize) -> Result<(Vec<CongruenceReport>, Summary)> {
    let mut out = Vec::new();
    let summary = sweep(plan, jobs, |r| {
        out.push(r.clone());
        Ok(())
    })?;
    Ok((out, summary))
}

/// The left-hand side of the equivalent congruence `θ ≡ 1 (mod p)` for Types
/// III–V, picked by the sign of the candidate (`±B`) and the sign of `b`.
pub fn theta_b(
    candidate_sign: i64,
    b_positive: bool,
    big_a: i64,
    big_b: i64,
    delta: i64,
    a_param: i64,
    p: i64,
) -> Result<Residue> {
    let (a, bb, d, ap) = (big_a as i128, big_b as i128, delta as i128, a_param as i128);
    let v = match (candidate_sign > 0, b_positive) {
        (true, true) => (1 - d * ap) * bb + d * a,
        (true, false) => 2 * d * a * bb + (1 - d * ap) * bb - d * a,
        (false, true) => 2 * bb * bb - d * a + (d * ap - 1) * bb,
        (false, false) => 2 * bb * bb - 2 * d * a * bb + d * a + (d * ap - 1) * bb,
    };
    Residue::from_i128(v, p)
}

/// `theta_b` for candidate `idx` of a Type III–V record, with the raw
/// parameters (`mirrored = false`) or after mirroring to `b > 0`.
pub fn theta_b_for(pr: &TypeIIIVParams, candidate_sign: i64, mirrored: bool) -> Result<Residue> {
    let p = pr.p()?;
    if mirrored {
        theta_b(
            candidate_sign,
            true,
            pr.big_a,
            pr.big_b,
            pr.effective_delta(),
            pr.a_param(),
            p,
        )
    } else {
        theta_b(
            candidate_sign,
            pr.b > 0,
            pr.big_a,
            pr.big_b,
            pr.delta,
            pr.a_param(),
            p,
        )
    }
}

/// Closed-form residual for Types IX and X by sign of `j` and candidate
/// `±(11j + c)`. These equal minus the direct residual for the `+` candidate
/// and the direct residual for the `−` candidate.
pub fn residual_closed_forms_ix_x(family: Family, j: i64, candidate_sign: i64) -> Result<i64> {
    if j == 0 || j == -1 {
        return Err(Error::param("j must avoid {0,-1}"));
    }
    let plus = match candidate_sign {
        1 => true,
        -1 => false,
        _ => {
            return Err(Error::param(format!(
                "candidate sign must be ±1, got {candidate_sign}"
            )))
        }
    };
    let lin = |m: i64, c: i64| checked_add(checked_mul(m, j)?, c);
    match (family, j > 0, plus) {
        (Family::IX, true, true) => lin(24, 6),
        (Family::IX, true, false) => lin(42, 8),
        (Family::IX, false, true) => lin(42, 10),
        (Family::IX, false, false) => lin(24, 4),
        (Family::X, true, true) => lin(24, 8),
        (Family::X, true, false) => lin(42, 12),
        (Family::X, false, true) => lin(42, 14),
        (Family::X, false, false) => lin(24, 6),
        (f, _, _) => Err(Error::param(format!("{f} is not IX or X"))),
    }
}

/// Closed-form values quoted alongside the IX/X analysis, as
/// `(family, j, candidate sign, quoted value)`.
pub const QUOTED_CLOSED_FORMS: [(Family, i64, i64, i64); 2] =
    [(Family::X, 1, -1, 56), (Family::X, -2, 1, -70)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotedValueCheck {
    pub family: Family,
    pub j: i64,
    pub candidate_sign: i64,
    pub quoted: i64,
    pub table: i64,
    pub consistent: bool,
    /// Direct residual of the candidate, reduced mod `p`.
    pub direct: i64,
}

pub fn check_quoted_closed_forms() -> Result<Vec<QuotedValueCheck>> {
    QUOTED_CLOSED_FORMS
        .iter()
        .map(|&(family, j, candidate_sign, quoted)| {
            let table = residual_closed_forms_ix_x(family, j, candidate_sign)?;
            let rec = families::type_ix_x(family, j)?;
            let idx = if candidate_sign > 0 { 0 } else { 1 };
            let direct = congruence_residual(rec.p, rec.a_candidates[idx], rec.chi_neg)?.value();
            Ok(QuotedValueCheck {
                family,
                j,
                candidate_sign,
                quoted,
                table,
                consistent: quoted == table,
                direct,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormCheck {
    pub family: Family,
    pub j: i64,
    pub candidate_sign: i64,
    pub residual: Residue,
    pub closed_form: i64,
    /// `residual = 0 ⇔ closed_form ≡ 0 (mod p)`.
    pub agrees_on_zero: bool,
    /// `u ∈ {1, −1}` with `closed_form ≡ u·residual`, if any.
    pub unit: Option<i64>,
}

pub fn closed_form_check(family: Family, j: i64) -> Result<Vec<ClosedFormCheck>> {
    let rec = families::type_ix_x(family, j)?;
    [1i64, -1]
        .iter()
        .zip(&rec.a_candidates)
        .map(|(&candidate_sign, &a)| {
            let residual = congruence_residual(rec.p, a, rec.chi_neg)?;
            let closed_form = residual_closed_forms_ix_x(family, j, candidate_sign)?;
            let cf = Residue::new(closed_form, rec.p)?;
            let unit = [1, -1].into_iter().find(|&u| residual.mul_int(u) == cf);
            Ok(ClosedFormCheck {
                family,
                j,
                candidate_sign,
                residual,
                closed_form,
                agrees_on_zero: residual.is_zero() == cf.is_zero(),
                unit,
            })
        })
        .collect()
}

/// For Type I, checks that the classes `±i` are carried to `∓k` by
/// `a ↦ −a⁻¹` and that their residuals are the same multiset as those of
/// `±k`.
pub fn type_i_i_classes_equivalent(i: i64, k: i64, sign: i64) -> Result<bool> {
    let rec = families::type_i(i, k, sign)?;
    let p = rec.p;
    let mut from_k: Vec<i64> = Vec::new();
    let mut from_i: Vec<i64> = Vec::new();
    let ks = [Residue::new(k, p)?, Residue::new(-k, p)?];
    for x in [i, -i] {
        let a = Residue::new(x, p)?;
        if !ks.contains(&a.inv()?.neg()) {
            return Ok(false);
        }
        from_i.push(congruence_residual(p, a, rec.chi_neg)?.value());
    }
    for a in ks {
        from_k.push(congruence_residual(p, a, rec.chi_neg)?.value());
    }
    from_i.sort_unstable();
    from_k.sort_unstable();
    Ok(from_i == from_k)
}

/// The bound `c(h) < 2/p` on the fractional Dehn twist coefficient, and
/// whether it improves on `2/(2g − 1)`.
pub fn fdtc_bound(p: i64, g: i64) -> Result<(Rational, bool)> {
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    if g < 1 {
        return Err(Error::param(format!("genus must be ≥ 1, got {g}")));
    }
    let strict = p as i128 > 2 * g as i128 - 1;
    Ok((Rational::new(2, p as i128), strict))
}

/// `x(r̄, s)` with `r̄ ≡ r (mod s)` in `(0, s)`, the quantity bounding Type
/// VIII residuals.
pub fn type_viii_reduced_x(r: i64, s: i64) -> Result<i64> {
    let rbar = r.rem_euclid(s);
    if rbar == 0 {
        return Err(Error::DegenerateCable { r, s });
    }
    families::x_rs(rbar, s)
}

/// `p` lower bound for Types III–V: `tB² + B − A` for `t > 0`,
/// `|t + 1|B² + B − A` for `t < 0`, none for `t = 0`.
pub fn type_iii_v_p_lower_bound(pr: &TypeIIIVParams) -> Result<Option<i64>> {
    let coeff = match pr.t {
        0 => return Ok(None),
        t if t > 0 => t,
        t => (t + 1).abs(),
    };
    let b2 = checked_mul(pr.big_b, pr.big_b)?;
    Ok(Some(checked_sub(
        checked_add(checked_mul(coeff, b2)?, pr.big_b)?,
        pr.big_a,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64, p: i64) -> Residue {
        Residue::new(v, p).unwrap()
    }

    #[test]
    fn residual_examples() {
        assert!(congruence_residual(7, r(3, 7), 1).unwrap().is_zero());
        assert!(congruence_residual(16, r(11, 16), 7).unwrap().is_zero());
        assert_eq!(congruence_residual(32, r(13, 32), 21).unwrap().value(), 2);
        assert!(congruence_residual(16, r(4, 16), 7).is_err());
        assert!(congruence_residual(15, r(4, 16), 7).is_err());
    }

    #[test]
    fn classify_examples() {
        let rep = classify(&families::type_i(2, 3, 1).unwrap()).unwrap();
        assert_eq!(rep.entries[0].classification, Classification::ExpectedTorus);
        assert_eq!(
            rep.entries[1].classification,
            Classification::FailsAsPredicted
        );
        assert_eq!(rep.classification, Classification::ExpectedTorus);

        let rep = classify(&families::type_i(3, 5, 1).unwrap()).unwrap();
        assert!(rep.entries.iter().all(|e| e.holds));
        assert_eq!(
            rep.entries[1].classification,
            Classification::DocumentedException
        );
        assert_eq!(rep.classification, Classification::DocumentedException);

        let rep = classify(&families::type_ix_x(Family::IX, 1).unwrap()).unwrap();
        assert_eq!(rep.holds(), 0);
        assert_eq!(rep.classification, Classification::FailsAsPredicted);

        let pr = TypeIIIVParams::new(Family::III, 1, 1, 2, 0, -1).unwrap();
        let rep = classify(&families::type_iii_v(&pr).unwrap()).unwrap();
        assert_eq!(rep.entries[1].classification, Classification::ExpectedTorus);
        assert!(!rep.entries[0].holds);
    }

    #[test]
    fn unregistered_hold_is_violation() {
        let rec = families::type_i(2, 3, 1).unwrap();
        let rep = classify_with(&rec, &Registry::default()).unwrap();
        assert_eq!(rep.classification, Classification::Violation);
    }

    #[test]
    fn registry_parsing() {
        let reg = Registry::builtin();
        assert_eq!(reg.entries().len(), 6);
        assert!(Registry::parse("I\t*\t0\tviolation\tx").is_err());
        assert!(Registry::parse("I\t1,x\t0\texpected-torus").is_err());
        assert!(Registry::parse("I\t1\t0").is_err());
        assert_eq!(
            Registry::parse("# only a comment\n\n")
                .unwrap()
                .entries()
                .len(),
            0
        );
    }

    #[test]
    fn spans() {
        assert_eq!("2..5".parse::<Span>().unwrap(), Span { lo: 2, hi: 5 });
        assert_eq!("-3..=-1".parse::<Span>().unwrap(), Span { lo: -3, hi: -1 });
        assert_eq!("7".parse::<Span>().unwrap(), Span::single(7));
        assert!("5..2".parse::<Span>().is_err());
        assert!("a..2".parse::<Span>().is_err());
    }

    #[test]
    fn tuples_are_lexicographic() {
        let plan = SweepPlan {
            family: Family::VII,
            spans: vec![Span::new(1, 2).unwrap(), Span::new(-1, 0).unwrap()],
        };
        let all: Vec<Vec<i64>> = plan.tuples().collect();
        assert_eq!(all, vec![vec![1, -1], vec![1, 0], vec![2, -1], vec![2, 0]]);
    }

    #[test]
    fn sweep_small() {
        let ranges = ParamRanges {
            i: Some(Span::new(2, 10).unwrap()),
            k: Some(Span::new(2, 10).unwrap()),
            ..Default::default()
        };
        let plan = SweepPlan::new(Family::I, &ranges);
        let (reports, summary) = sweep_collect(&plan, 1).unwrap();
        assert_eq!(summary.violations, 0);
        assert_eq!(summary.reports as usize, reports.len());
        for rep in &reports {
            for (idx, e) in rep.entries.iter().enumerate() {
                if e.holds {
                    assert!(matches!(
                        e.classification,
                        Classification::ExpectedTorus | Classification::DocumentedException
                    ));
                    assert!(
                        rep.record.params[2] == 1 && idx == 0 || rep.record.params[..2] == [3, 5]
                    );
                }
            }
        }
        let (par, summary2) = sweep_collect(&plan, 4).unwrap();
        assert_eq!((par, summary2), (reports, summary));

        let (ix, s) =
            sweep_collect(&SweepPlan::new(Family::IX, &ParamRanges::default()), 2).unwrap();
        assert_eq!(s.holds, 0);
        assert_eq!(ix.len(), 99);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_b(1, true, 2, 5, 1, 0, 7).unwrap().value(), 0);
        assert_eq!(theta_b(-1, true, 2, 5, 1, 0, 7).unwrap().value(), 1);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(residual_closed_forms_ix_x(Family::IX, 1, 1).unwrap(), 30);
        assert_eq!(residual_closed_forms_ix_x(Family::IX, -2, 1).unwrap(), -74);
        assert_eq!(residual_closed_forms_ix_x(Family::X, 1, -1).unwrap(), 54);
        assert!(residual_closed_forms_ix_x(Family::X, 0, 1).is_err());
        assert!(residual_closed_forms_ix_x(Family::VII, 2, 1).is_err());

        let checks = check_quoted_closed_forms().unwrap();
        assert!(!checks[0].consistent);
        assert_eq!((checks[0].table, checks[0].direct), (54, 17));
        assert!(checks[1].consistent);

        for c in closed_form_check(Family::X, 3).unwrap() {
            assert!(c.agrees_on_zero);
            assert_eq!(c.unit, Some(-c.candidate_sign));
        }
    }

    #[test]
    fn fdtc() {
        assert_eq!(fdtc_bound(7, 1).unwrap(), (Rational::new(2, 7), true));
        assert_eq!(fdtc_bound(16, 4).unwrap(), (Rational::new(1, 8), true));
        assert_eq!(fdtc_bound(3, 2).unwrap(), (Rational::new(2, 3), false));
        assert!(fdtc_bound(7, 0).is_err());
    }

    #[test]
    fn type_i_equivalence() {
        assert!(type_i_i_classes_equivalent(2, 3, 1).unwrap());
        assert!(type_i_i_classes_equivalent(3, 5, -1).unwrap());
    }
}

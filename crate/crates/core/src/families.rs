//! Berge families I–X as [`BergeDualRecord`] values: surgery coefficient `p`,
//! the candidate homology classes of the dual, and `−χ`.
//!
//! Type VI is a subcase of Type V and has no enumerator of its own.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::braid;
use crate::modmath::{
    checked_add, checked_mul, checked_sub, coprime, gamma_normalize, gcd, mod_inverse, Residue,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    I,
    II,
    III,
    IV,
    V,
    VII,
    VIII,
    IX,
    X,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::I,
        Family::II,
        Family::III,
        Family::IV,
        Family::V,
        Family::VII,
        Family::VIII,
        Family::IX,
        Family::X,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
            Family::IV => "IV",
            Family::V => "V",
            Family::VII => "VII",
            Family::VIII => "VIII",
            Family::IX => "IX",
            Family::X => "X",
        }
    }

    pub fn is_type_iii_v(self) -> bool {
        matches!(self, Family::III | Family::IV | Family::V)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// The data of one surgery dual: family, the raw parameters it was built
/// from, `p`, `−χ`, the candidate classes `a_K`, and free-form notes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BergeDualRecord {
    pub family: Family,
    pub params: Vec<i64>,
    pub p: i64,
    pub chi_neg: i64,
    pub a_candidates: Vec<Residue>,
    pub notes: Vec<String>,
}

impl BergeDualRecord {
    fn build(
        family: Family,
        params: Vec<i64>,
        p: i64,
        chi_neg: i64,
        reps: &[i64],
        notes: Vec<String>,
    ) -> Result<Self> {
        let a_candidates = reps
            .iter()
            .map(|&a| Residue::new(a, p))
            .collect::<Result<Vec<_>>>()?;
        let rec = BergeDualRecord {
            family,
            params,
            p,
            chi_neg,
            a_candidates,
            notes,
        };
        rec.check_invariants()?;
        Ok(rec)
    }

    /// Candidates invertible, `a²q ≡ −1`, and `−χ = 2g − 1` with `g ≥ 0`.
    pub fn check_invariants(&self) -> Result<()> {
        if self.p < 2 {
            return Err(Error::RecordInvariant(format!("p = {} < 2", self.p)));
        }
        if self.chi_neg < -1 || self.chi_neg.rem_euclid(2) != 1 {
            return Err(Error::RecordInvariant(format!(
                "-chi = {} is not of the form 2g - 1",
                self.chi_neg
            )));
        }
        for &a in &self.a_candidates {
            if a.modulus() != self.p {
                return Err(Error::ModulusMismatch(a.modulus(), self.p));
            }
            let q = q_of(self, a)?;
            if !a.square().mul(q)?.is(-1) {
                return Err(Error::RecordInvariant(format!(
                    "a = {a}: a^2 q is not -1 mod {}",
                    self.p
                )));
            }
        }
        Ok(())
    }

    pub fn genus(&self) -> i64 {
        (self.chi_neg + 1) / 2
    }

    /// Rebuilds the Type III–V parameters from `params`.
    pub fn type_iii_v_params(&self) -> Option<TypeIIIVParams> {
        match (self.family, self.params.as_slice()) {
            (f, &[delta, eps, big_a, k, t]) if f.is_type_iii_v() => {
                TypeIIIVParams::new(f, delta, eps, big_a, k, t).ok()
            }
            _ => None,
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `family \t params \t p \t chi_neg \t candidates \t notes`, with comma
/// separated lists and notes joined by `"; "`.
impl fmt::Display for BergeDualRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cands: Vec<i64> = self.a_candidates.iter().map(|a| a.value()).collect();
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.family,
            join(&self.params),
            self.p,
            self.chi_neg,
            join(&cands),
            self.notes.join("; ")
        )
    }
}

fn parse_int(s: &str, what: &str) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{what}: {s:?} is not an integer")))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<i64>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| parse_int(x, what)).collect()
}

impl FromStr for BergeDualRecord {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.trim_end_matches(['\n', '\r']).split('\t').collect();
        if fields.len() != 6 {
            return Err(Error::Parse(format!(
                "expected 6 tab-separated fields, got {}",
                fields.len()
            )));
        }
        let family = fields[0].parse()?;
        let params = parse_list(fields[1], "params")?;
        let p = parse_int(fields[2], "p")?;
        let chi_neg = parse_int(fields[3], "chi_neg")?;
        let a_candidates = parse_list(fields[4], "candidates")?
            .into_iter()
            .map(|a| {
                if (0..p).contains(&a) {
                    Residue::new(a, p)
                } else {
                    Err(Error::Parse(format!(
                        "candidate {a} is not reduced mod {p}"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let notes = if fields[5].is_empty() {
            Vec::new()
        } else {
            fields[5].split("; ").map(str::to_owned).collect()
        };
        Ok(BergeDualRecord {
            family,
            params,
            p,
            chi_neg,
            a_candidates,
            notes,
        })
    }
}

fn sign_of(x: i64, what: &str) -> Result<i64> {
    match x {
        1 | -1 => Ok(x),
        _ => Err(Error::param(format!("{what} must be ±1, got {x}"))),
    }
}

/// Torus knot `T(i, k)` with surgery `ik ± 1`. Only `±k` are listed; the
/// `±i` classes are congruence-equivalent under `a ↦ −a⁻¹`.
pub fn type_i(i: i64, k: i64, sign: i64) -> Result<BergeDualRecord> {
    let sign = sign_of(sign, "sign")?;
    if i < 2 || k < 2 {
        return Err(Error::param(format!(
            "Type I needs i, k ≥ 2, got ({i}, {k})"
        )));
    }
    if !coprime(i, k) {
        return Err(Error::NotCoprime(i, k));
    }
    let ik = checked_mul(i, k)?;
    let p = checked_add(ik, sign)?;
    let chi_neg = checked_sub(checked_sub(ik, i)?, k)?;
    let notes = vec!["classes ±i are congruence-equivalent to ±k under a -> -1/a".to_owned()];
    BergeDualRecord::build(Family::I, vec![i, k, sign], p, chi_neg, &[k, -k], notes)
}

/// Type II: `p = ik ± 1`, `gcd(i, k) = 2`, the dual of a `(2, ·)`-cable.
pub fn type_ii(i: i64, k: i64, sign: i64) -> Result<BergeDualRecord> {
    let sign = sign_of(sign, "sign")?;
    if i < 4 || k < 4 {
        return Err(Error::param(format!(
            "Type II needs i, k ≥ 4, got ({i}, {k})"
        )));
    }
    if gcd(i, k) != 2 {
        return Err(Error::param(format!(
            "Type II needs gcd(i, k) = 2, got gcd({i}, {k}) = {}",
            gcd(i, k)
        )));
    }
    let ik = checked_mul(i, k)?;
    let p = checked_add(ik, sign)?;
    let chi_neg = checked_add(checked_sub(checked_sub(ik, i)?, k)?, sign)?;
    BergeDualRecord::build(
        Family::II,
        vec![i, k, sign],
        p,
        chi_neg,
        &[k, -k],
        Vec::new(),
    )
}

/// Parameters `(δ, ε, A, k, t)` of Types III, IV and V with the derived `B`
/// and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeIIIVParams {
    pub family: Family,
    pub delta: i64,
    pub eps: i64,
    pub big_a: i64,
    pub k: i64,
    pub t: i64,
    pub big_b: i64,
    pub b: i64,
}

impl TypeIIIVParams {
    pub fn new(family: Family, delta: i64, eps: i64, big_a: i64, k: i64, t: i64) -> Result<Self> {
        let delta = sign_of(delta, "delta")?;
        let eps = sign_of(eps, "eps")?;
        if k < 0 {
            return Err(Error::param(format!("k must be ≥ 0, got {k}")));
        }
        let de = -delta * eps;
        let (big_b, b) = match family {
            Family::III => {
                if big_a < 2 {
                    return Err(Error::param(format!("Type III needs A ≥ 2, got {big_a}")));
                }
                let big_b = checked_sub(
                    checked_mul(big_a, checked_add(3, checked_mul(2, k)?)?)?,
                    eps,
                )?;
                let b = checked_mul(
                    de,
                    checked_add(checked_mul(2, big_a)?, checked_mul(t, big_b)?)?,
                )?;
                (big_b, b)
            }
            Family::IV => {
                if big_a < 5 || big_a % 2 == 0 {
                    return Err(Error::param(format!(
                        "Type IV needs odd A ≥ 5, got {big_a}"
                    )));
                }
                let twice = checked_sub(
                    checked_mul(big_a, checked_add(5, checked_mul(2, k)?)?)?,
                    eps,
                )?;
                if twice % 2 != 0 {
                    return Err(Error::param(format!(
                        "Type IV: B = {twice}/2 is not an integer"
                    )));
                }
                let big_b = twice / 2;
                (
                    big_b,
                    checked_mul(de, checked_add(big_a, checked_mul(t, big_b)?)?)?,
                )
            }
            Family::V => {
                if big_a < 3 || big_a % 2 == 0 {
                    return Err(Error::param(format!("Type V needs odd A ≥ 3, got {big_a}")));
                }
                let l = if eps == 1 {
                    checked_add(2, k)?
                } else {
                    checked_add(3, k)?
                };
                let big_b = checked_add(checked_mul(big_a, l)?, eps)?;
                (
                    big_b,
                    checked_mul(de, checked_add(big_a, checked_mul(t, big_b)?)?)?,
                )
            }
            other => return Err(Error::param(format!("{other} is not one of III, IV, V"))),
        };
        if b == 0 {
            return Err(Error::param(format!(
                "b = 0 for {family}({delta},{eps},{big_a},{k},{t})"
            )));
        }
        Ok(TypeIIIVParams {
            family,
            delta,
            eps,
            big_a,
            k,
            t,
            big_b,
            b,
        })
    }

    /// `a = 0` for Type III, `1` for Types IV and V.
    pub fn a_param(&self) -> i64 {
        if self.family == Family::III {
            0
        } else {
            1
        }
    }

    pub fn p(&self) -> Result<i64> {
        let v = checked_add(
            checked_mul(self.big_b, self.b)?,
            checked_mul(self.big_a, self.delta)?,
        )?;
        v.checked_abs().ok_or(Error::Overflow("p"))
    }

    /// `δ` after mirroring so that `b > 0`.
    pub fn effective_delta(&self) -> i64 {
        braid::PositiveBerge::effective_delta(self.delta, self.b)
    }

    pub fn chi_neg(&self) -> Result<i64> {
        braid::chi_berge(
            self.big_a,
            self.big_b,
            self.b.abs(),
            self.effective_delta(),
            self.a_param(),
        )
    }

    pub fn params(&self) -> Vec<i64> {
        vec![self.delta, self.eps, self.big_a, self.k, self.t]
    }
}

/// Types III–V: `p = |Bb + Aδ|`, candidates `±B`.
pub fn type_iii_v(params: &TypeIIIVParams) -> Result<BergeDualRecord> {
    let p = params.p()?;
    if p < 2 {
        return Err(Error::param(format!("p = {p} < 2")));
    }
    let mut notes = vec![format!("B={}, b={}", params.big_b, params.b)];
    if params.b < 0 {
        notes.push(format!(
            "mirrored: b -> {}, delta -> {}",
            -params.b,
            params.effective_delta()
        ));
    }
    BergeDualRecord::build(
        params.family,
        params.params(),
        p,
        params.chi_neg()?,
        &[params.big_b, -params.big_b],
        notes,
    )
}

/// Type VII: `p = r² + rs + s²`, `a = r²s⁻²`.
pub fn type_vii(r: i64, s: i64) -> Result<BergeDualRecord> {
    if r < 1 || s < 1 {
        return Err(Error::param(format!(
            "Type VII needs r, s > 0, got ({r}, {s})"
        )));
    }
    if !coprime(r, s) {
        return Err(Error::NotCoprime(r, s));
    }
    let p = checked_add(
        checked_add(checked_mul(r, r)?, checked_mul(r, s)?)?,
        checked_mul(s, s)?,
    )?;
    let chi_neg = checked_sub(p, checked_mul(2, checked_add(r, s)?)?)?;
    let a = Residue::new(r, p)?
        .square()
        .mul(mod_inverse(s, p)?.square())?;
    BergeDualRecord::build(
        Family::VII,
        vec![r, s],
        p,
        chi_neg,
        &[a.value()],
        Vec::new(),
    )
}

/// `x(r, s) = (2m−1)rs − m(m−1)s² − r² + s² − 2s` with `(m−1)s < r < ms`.
pub fn x_rs(r: i64, s: i64) -> Result<i64> {
    if r < 1 || s < 1 {
        return Err(Error::param(format!(
            "x(r, s) needs r, s > 0, got ({r}, {s})"
        )));
    }
    if r % s == 0 {
        return Err(Error::DegenerateCable { r, s });
    }
    let m = (r / s + 1) as i128;
    let (r, s) = (r as i128, s as i128);
    let x = (2 * m - 1) * r * s - m * (m - 1) * s * s - r * r + s * s - 2 * s;
    crate::modmath::narrow(x, "x(r, s)")
}

/// Type VIII: `p = r² + rs − s²` with `r > s ≥ 2`, candidates `±rs⁻¹`.
pub fn type_viii(r: i64, s: i64) -> Result<BergeDualRecord> {
    if s == 1 && r > 1 {
        return Err(Error::DegenerateCable { r, s });
    }
    if s < 2 || r <= s {
        return Err(Error::param(format!(
            "Type VIII needs r > s ≥ 2, got ({r}, {s})"
        )));
    }
    if !coprime(r, s) {
        return Err(Error::NotCoprime(r, s));
    }
    let p = crate::modmath::narrow(crate::modmath::fib_form(r, s), "Type VIII p")?;
    let chi_neg = x_rs(r, s)?;
    let a = Residue::new(r, p)?.mul(mod_inverse(s, p)?)?;
    BergeDualRecord::build(
        Family::VIII,
        vec![r, s],
        p,
        chi_neg,
        &[a.value(), a.neg().value()],
        Vec::new(),
    )
}

/// Type VIII from any coprime pair with `b² − ab − a² = ±p`, moved to `r > s`
/// first.
pub fn type_viii_from_pair(a: i64, b: i64) -> Result<BergeDualRecord> {
    let g = gamma_normalize(a, b)?;
    let mut rec = type_viii(g.c, g.d)?;
    if !g.trace.is_empty() {
        rec.notes.push(format!(
            "normalized from ({a},{b}) in {} steps",
            g.trace.len()
        ));
    }
    Ok(rec)
}

/// Types IX and X for `j ∉ {0, −1}`.
pub fn type_ix_x(family: Family, j: i64) -> Result<BergeDualRecord> {
    if j == 0 || j == -1 {
        return Err(Error::param("j must avoid {0,-1}"));
    }
    let jj = j as i128;
    let sq = 22 * jj * jj;
    let (p, x, chi) = match family {
        Family::IX => {
            let chi = if j > 0 { sq - 1 } else { sq + 18 * jj + 3 };
            (sq + 9 * jj + 1, 11 * jj + 2, chi)
        }
        Family::X => {
            let chi = if j > 0 {
                sq + 4 * jj - 1
            } else {
                sq + 22 * jj + 5
            };
            (sq + 13 * jj + 2, 11 * jj + 3, chi)
        }
        other => return Err(Error::param(format!("{other} is not IX or X"))),
    };
    let narrow = crate::modmath::narrow;
    let (p, x, chi) = (narrow(p, "p")?, narrow(x, "a")?, narrow(chi, "-chi")?);
    BergeDualRecord::build(family, vec![j], p, chi, &[x, -x], Vec::new())
}

fn ensure_candidate(rec: &BergeDualRecord, a: Residue) -> Result<()> {
    if a.modulus() != rec.p || !rec.a_candidates.contains(&a) {
        return Err(Error::NotACandidate(a.value()));
    }
    Ok(())
}

/// `q ≡ −a⁻² (mod p)`, the lens space parameter seen from class `a`.
pub fn q_of(rec: &BergeDualRecord, a: Residue) -> Result<Residue> {
    ensure_candidate(rec, a)?;
    Ok(a.inv()?.square().neg())
}

/// `b_K ≡ aq ≡ −a⁻¹ (mod p)`.
pub fn b_k(rec: &BergeDualRecord, a: Residue) -> Result<Residue> {
    ensure_candidate(rec, a)?;
    Ok(a.inv()?.neg())
}

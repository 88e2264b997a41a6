//! Residues modulo `p`, inverses, and the quadratic forms `x² + xy + y²` and
//! `x² + xy − y²`.
//!
//! Every value is an `i64`. Intermediate products go through `i128` and are
//! narrowed back with a checked conversion, so a result that does not fit
//! surfaces as [`Error::Overflow`] instead of wrapping.

use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

pub(crate) fn narrow(x: i128, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

pub(crate) fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

pub(crate) fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

pub(crate) fn checked_sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

pub fn gcd(x: i64, y: i64) -> i64 {
    let (mut a, mut b) = (x.unsigned_abs(), y.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    // gcd(i64::MIN, 0) = 2^63 does not fit; callers never hit it.
    a as i64
}

pub fn coprime(x: i64, y: i64) -> bool {
    gcd(x, y) == 1
}

/// Extended Euclid: returns `(g, u, v)` with `g = gcd(x, y) > 0` and
/// `u·x + v·y = g`.
pub fn ext_gcd(x: i64, y: i64) -> Result<(i64, i64, i64)> {
    if x == 0 && y == 0 {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (x as i128, y as i128);
    let (mut old_u, mut u) = (1i128, 0i128);
    let (mut old_v, mut v) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_u, u) = (u, old_u - q * u);
        (old_v, v) = (v, old_v - q * v);
    }
    if old_r < 0 {
        (old_r, old_u, old_v) = (-old_r, -old_u, -old_v);
    }
    Ok((
        narrow(old_r, "ext_gcd")?,
        narrow(old_u, "ext_gcd")?,
        narrow(old_v, "ext_gcd")?,
    ))
}

/// An integer reduced modulo an explicit modulus `p ≥ 2`.
///
/// Binary operations between residues with different moduli fail with
/// [`Error::ModulusMismatch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Residue {
    value: i64,
    modulus: i64,
}

#[allow(clippy::should_implement_trait)]
impl Residue {
    pub fn new(value: i64, modulus: i64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Residue {
            value: value.rem_euclid(modulus),
            modulus,
        })
    }

    /// Reduces a wide intermediate value.
    pub fn from_i128(value: i128, modulus: i64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        let v = value.rem_euclid(modulus as i128) as i64;
        Ok(Residue { value: v, modulus })
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> i64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// True when this residue is the class of `x`.
    pub fn is(self, x: i64) -> bool {
        x.rem_euclid(self.modulus) == self.value
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        if 2 * (self.value as i128) > self.modulus as i128 {
            self.value - self.modulus
        } else {
            self.value
        }
    }

    fn same_modulus(self, other: Residue) -> Result<i64> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(self.modulus)
    }

    pub fn add(self, other: Residue) -> Result<Residue> {
        let m = self.same_modulus(other)?;
        Residue::from_i128(self.value as i128 + other.value as i128, m)
    }

    pub fn sub(self, other: Residue) -> Result<Residue> {
        let m = self.same_modulus(other)?;
        Residue::from_i128(self.value as i128 - other.value as i128, m)
    }

    pub fn mul(self, other: Residue) -> Result<Residue> {
        let m = self.same_modulus(other)?;
        Residue::from_i128(self.value as i128 * other.value as i128, m)
    }

    pub fn add_int(self, x: i64) -> Residue {
        Residue {
            value: (self.value as i128 + x as i128).rem_euclid(self.modulus as i128) as i64,
            modulus: self.modulus,
        }
    }

    pub fn mul_int(self, x: i64) -> Residue {
        Residue {
            value: (self.value as i128 * x as i128).rem_euclid(self.modulus as i128) as i64,
            modulus: self.modulus,
        }
    }

    pub fn neg(self) -> Residue {
        Residue {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn square(self) -> Residue {
        self.mul_int(self.value)
    }

    pub fn inv(self) -> Result<Residue> {
        mod_inverse(self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Inverse of `a` modulo `p`.
pub fn mod_inverse(a: i64, p: i64) -> Result<Residue> {
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    let (g, u, _) = ext_gcd(a.rem_euclid(p), p)?;
    if g != 1 {
        return Err(Error::NotInvertible {
            value: a,
            modulus: p,
        });
    }
    Residue::new(u, p)
}

/// The class `-1 - a + a⁻¹ (mod p)` of `p·sl` for a dual in homology class `a`.
pub fn sl_class(a: Residue) -> Result<Residue> {
    let inv = a.inv()?;
    Ok(inv.sub(a)?.add_int(-1))
}

/// A primitive representation `p = r² + rs + s²` with `r, s > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EisensteinRep {
    pub r: i64,
    pub s: i64,
}

impl EisensteinRep {
    pub fn norm(self) -> i128 {
        let (r, s) = (self.r as i128, self.s as i128);
        r * r + r * s + s * s
    }

    /// The root `r²·s⁻² (mod p)` of `x² + x + 1` attached to this representation.
    pub fn root(self) -> Result<Residue> {
        let p = narrow(self.norm(), "eisenstein norm")?;
        let s_inv = mod_inverse(self.s, p)?;
        Residue::new(self.r, p)?.square().mul(s_inv.square())
    }
}

/// All coprime `(r, s)` with `r, s > 0` and `r² + rs + s² = p`, in
/// lexicographic order. Both `(r, s)` and `(s, r)` appear when `r ≠ s`.
pub fn primitive_reps_eisenstein(p: i64) -> Vec<EisensteinRep> {
    let mut reps = Vec::new();
    let target = p as i128;
    let mut r: i64 = 1;
    while {
        let r2 = r as i128;
        r2 * r2 + r2 < target
    } {
        let mut s: i64 = 1;
        loop {
            let rep = EisensteinRep { r, s };
            let n = rep.norm();
            if n > target {
                break;
            }
            if n == target && coprime(r, s) {
                reps.push(rep);
            }
            s += 1;
        }
        r += 1;
    }
    reps
}

/// All `x ∈ [0, p)` with `x² + x + 1 ≡ 0 (mod p)`, ascending. Brute force.
pub fn roots_x2_x_1(p: i64) -> Vec<Residue> {
    if p < 2 {
        return Vec::new();
    }
    let m = p as i128;
    (0..p)
        .filter(|&x| {
            let x = x as i128;
            (x * x + x + 1) % m == 0
        })
        .map(|x| Residue {
            value: x,
            modulus: p,
        })
        .collect()
}

/// `f(x, y) = x² + xy − y²`.
pub fn fib_form(x: i64, y: i64) -> i128 {
    let (x, y) = (x as i128, y as i128);
    x * x + x * y - y * y
}

/// The pairs visited by iterating `Γ(x, y) = (y − x, x)` from a start pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibPairTrace {
    pub start: (i64, i64),
    pub steps: Vec<(i64, i64)>,
}

impl FibPairTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The start pair followed by every Γ-image.
    pub fn pairs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().copied())
    }
}

/// The result of [`gamma_normalize`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaNormal {
    pub c: i64,
    pub d: i64,
    pub trace: FibPairTrace,
}

// No i64 input needs more than ~190 steps.
const GAMMA_STEP_LIMIT: usize = 512;

/// Moves a coprime pair `(a, b)` with `n = b² − ab − a²` to a pair `c > d > 0`
/// with `c² + cd − d² = |n|` and `c·d⁻¹ ≡ a·b⁻¹ (mod |n|)`.
pub fn gamma_normalize(a: i64, b: i64) -> Result<GammaNormal> {
    if a <= 0 || b <= 0 {
        return Err(Error::param(format!(
            "gamma_normalize needs a, b > 0, got ({a}, {b})"
        )));
    }
    if !coprime(a, b) {
        return Err(Error::NotCoprime(a, b));
    }
    let n = -fib_form(a, b);
    let target = n.abs();
    if target <= 1 {
        return Err(Error::DegenerateModulus(narrow(n, "gamma_normalize")?));
    }
    let mut trace = FibPairTrace {
        start: (a, b),
        steps: Vec::new(),
    };
    let (mut x, mut y) = (a, b);
    loop {
        if x > y && y > 0 && fib_form(x, y) == target {
            return Ok(GammaNormal { c: x, d: y, trace });
        }
        if trace.steps.len() >= GAMMA_STEP_LIMIT {
            return Err(Error::param(format!(
                "Γ-iteration from ({a}, {b}) did not settle"
            )));
        }
        (x, y) = (checked_sub(y, x)?, x);
        trace.steps.push((x, y));
    }
}

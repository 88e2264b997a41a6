//! Toroidal front projections in `(L(p,q), ξ_{p,q})`.
//!
//! A front is summarized by its writhe `w`, cusp counts `c_u`/`c_d` and the
//! intersection numbers `a = ⟨α, f(L)⟩`, `b = ⟨f(L), β⟩`. With these,
//!
//! ```text
//! tb  = w − (c_u + c_d)/2 + ab/p
//! rot = (c_d − c_u)/2 + (a + b)/p
//! sl  = tb − rot = w − c_d + (ab − a − b)/p
//! ```
//!
//! Grid number one fronts are modeled on `p` columns of the fundamental
//! domain: one β-parallel arc winding vertically, and one α-parallel
//! connector closing it up horizontally. Heights are symbolic.

use serde::Serialize;

use crate::modmath::{coprime, Residue};
use crate::{Error, Rational, Result};

const FIELD_LIMIT: i64 = 1 << 40;

/// Combinatorial data of a front projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrontData {
    pub w: i64,
    pub c_u: i64,
    pub c_d: i64,
    pub a: i64,
    pub b: i64,
    pub p: i64,
}

impl FrontData {
    pub fn new(w: i64, c_u: i64, c_d: i64, a: i64, b: i64, p: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p));
        }
        if c_u < 0 || c_d < 0 {
            return Err(Error::param("cusp counts must be nonnegative"));
        }
        if (c_u + c_d) % 2 != 0 {
            return Err(Error::param(format!(
                "a closed front has an even number of cusps, got {}",
                c_u + c_d
            )));
        }
        if [w, c_u, c_d, a, b, p]
            .iter()
            .any(|x| x.abs() >= FIELD_LIMIT)
        {
            return Err(Error::Overflow("front data field"));
        }
        Ok(FrontData {
            w,
            c_u,
            c_d,
            a,
            b,
            p,
        })
    }

    /// Checks `b ≡ a·q (mod p)`.
    pub fn homology_consistent(&self, q: i64) -> bool {
        (self.b as i128 - self.a as i128 * q as i128).rem_euclid(self.p as i128) == 0
    }

    fn wide(&self) -> (i128, i128, i128, i128, i128, i128) {
        (
            self.w as i128,
            self.c_u as i128,
            self.c_d as i128,
            self.a as i128,
            self.b as i128,
            self.p as i128,
        )
    }
}

/// Thurston–Bennequin number `w − c/2 + ab/p`.
pub fn tb(fd: &FrontData) -> Rational {
    let (w, cu, cd, a, b, p) = fd.wide();
    Rational::new(2 * w * p - (cu + cd) * p + 2 * a * b, 2 * p)
}

/// Rotation number `(c_d − c_u)/2 + (a + b)/p`.
pub fn rot(fd: &FrontData) -> Rational {
    let (_, cu, cd, a, b, p) = fd.wide();
    Rational::new((cd - cu) * p + 2 * (a + b), 2 * p)
}

/// Self-linking number of the positive transverse pushoff,
/// `w − c_d + (ab − a − b)/p`.
pub fn sl_push(fd: &FrontData) -> Rational {
    let (w, _, cd, a, b, p) = fd.wide();
    Rational::new((w - cd) * p + a * b - a - b, p)
}

/// Self-linking number of the negative transverse pushoff, `tb + rot`.
/// This is the positive-pushoff self-linking in the coorientation-reversed
/// structure.
pub fn sl_push_negative(fd: &FrontData) -> Rational {
    tb(fd) + rot(fd)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: i64) -> Sign {
        if x < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Direction in which the α-parallel connector runs from the end of the
/// β-parallel arc back to its start. `Minus` walks toward decreasing columns.
pub type ConnectorDirection = Sign;

/// A grid number one front on the `p`-column discretization of the Heegaard
/// torus. The β-parallel arc starts at `start_column`, winds `wraps` times
/// across α, and each wrap shifts it by `q` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridOneFront {
    pub p: i64,
    pub q: i64,
    pub wraps: i64,
    pub start_column: i64,
    pub orientation: (Sign, Sign),
}

impl GridOneFront {
    pub fn new(
        p: i64,
        q: i64,
        wraps: i64,
        start_column: i64,
        orientation: (Sign, Sign),
    ) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p));
        }
        if !(0..p).contains(&q) || !coprime(p, q) {
            return Err(Error::param(format!(
                "q = {q} must lie in [0, {p}) and be coprime to p"
            )));
        }
        if wraps < 1 {
            return Err(Error::param("a grid number one front wraps at least once"));
        }
        if wraps > p {
            return Err(Error::WrapsExceedModulus { wraps, modulus: p });
        }
        if !(0..p).contains(&start_column) {
            return Err(Error::param(format!(
                "start column {start_column} outside [0, {p})"
            )));
        }
        Ok(GridOneFront {
            p,
            q,
            wraps,
            start_column,
            orientation,
        })
    }

    /// Column where the β-parallel arc ends, `start + wraps·q (mod p)`.
    pub fn end_column(&self) -> i64 {
        ((self.start_column as i128 + self.wraps as i128 * self.q as i128)
            .rem_euclid(self.p as i128)) as i64
    }

    /// Columns crossed by the connector strictly between its endpoints.
    pub fn connector_interior(&self, direction: ConnectorDirection) -> Vec<i64> {
        let (start, end, p) = (self.start_column, self.end_column(), self.p);
        let step = direction.value();
        let mut cols = Vec::new();
        let mut c = (end + step).rem_euclid(p);
        while c != start && c != end {
            cols.push(c);
            c = (c + step).rem_euclid(p);
        }
        cols
    }

    /// Number of β-curves crossed by the connector, i.e. `|b|`.
    pub fn connector_span(&self, direction: ConnectorDirection) -> i64 {
        let d = (self.end_column() - self.start_column).rem_euclid(self.p);
        match direction {
            Sign::Minus => d,
            Sign::Plus => (self.p - d) % self.p,
        }
    }

    /// Cusp counts by orientation: `(+,+)` has two upward cusps, `(−,−)` two
    /// downward ones, mixed orientations none.
    pub fn cusps(&self) -> (i64, i64) {
        match self.orientation {
            (Sign::Plus, Sign::Plus) => (2, 0),
            (Sign::Minus, Sign::Minus) => (0, 2),
            _ => (0, 0),
        }
    }

    /// Assembles [`FrontData`] for the front closed up in `direction`.
    pub fn front_data(&self, direction: ConnectorDirection) -> Result<FrontData> {
        let (c_u, c_d) = self.cusps();
        let a = self.orientation.0.value() * self.wraps;
        let b = self.orientation.1.value() * self.connector_span(direction);
        let w = gn1_writhe(self, direction)?;
        FrontData::new(w, c_u, c_d, a, b, self.p)
    }
}

/// Columns of the vertical strands, `start + j·q (mod p)` for `j < wraps`.
pub fn gn1_strand_columns(gf: &GridOneFront) -> Result<Vec<i64>> {
    if gf.wraps > gf.p {
        return Err(Error::WrapsExceedModulus {
            wraps: gf.wraps,
            modulus: gf.p,
        });
    }
    let (p, q) = (gf.p as i128, gf.q as i128);
    Ok((0..gf.wraps as i128)
        .map(|j| ((gf.start_column as i128 + j * q).rem_euclid(p)) as i64)
        .collect())
}

/// Signed count of crossings between the connector and the vertical strands.
/// The β-parallel strand always passes over; every crossing carries the sign
/// `−sgn(a)·sgn(b)`. With this sign the two fronts of a class, `(a, +, +)` and
/// `(a − p, −, −)`, have equal self-linking.
pub fn gn1_writhe(gf: &GridOneFront, direction: ConnectorDirection) -> Result<i64> {
    let strands = gn1_strand_columns(gf)?;
    let mut occupied = vec![false; gf.p as usize];
    for c in strands {
        occupied[c as usize] = true;
    }
    let crossings = gf
        .connector_interior(direction)
        .into_iter()
        .filter(|&c| occupied[c as usize])
        .count() as i64;
    Ok(-gf.orientation.0.value() * gf.orientation.1.value() * crossings)
}

/// The grid number one front of the dual to `(ik+1)`-surgery on the `(i, k)`
/// torus knot, oriented so that `a = k`, `b = i`. The connector runs through
/// the empty gap of `i` columns between the start and end of the β-arc.
pub fn torus_dual_front(i: i64, k: i64) -> Result<(GridOneFront, FrontData)> {
    if i < 2 || k < 2 {
        return Err(Error::param(format!(
            "torus knot parameters must be ≥ 2, got ({i}, {k})"
        )));
    }
    if !coprime(i, k) {
        return Err(Error::NotCoprime(i, k));
    }
    let p = i
        .checked_mul(k)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("ik + 1"))?;
    let q = Residue::new(i, p)?.square().neg().value();
    let gf = GridOneFront::new(p, q, k, 0, (Sign::Plus, Sign::Plus))?;
    let direction = if gf.connector_span(Sign::Minus) == i {
        Sign::Minus
    } else {
        Sign::Plus
    };
    let fd = gf.front_data(direction)?;
    debug_assert_eq!((fd.a, fd.b, fd.c_u, fd.c_d), (k, i, 2, 0));
    Ok((gf, fd))
}

/// The grid number one front in homology class `a (mod p)` of `L(p, q)`.
/// Uses the representative of `a` with the smallest absolute value and the
/// orientation `(sgn a, sgn a)`.
pub fn canonical_front(p: i64, q: i64, a: Residue) -> Result<(GridOneFront, FrontData)> {
    if a.modulus() != p {
        return Err(Error::ModulusMismatch(a.modulus(), p));
    }
    let rep = a.symmetric();
    if rep == 0 {
        return Err(Error::param("class 0 has no grid number one front"));
    }
    let s = Sign::of(rep);
    let gf = GridOneFront::new(p, q, rep.abs(), 0, (s, s))?;
    let fd = gf.front_data(Sign::Minus)?;
    Ok((gf, fd))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd(w: i64, c_u: i64, c_d: i64, a: i64, b: i64, p: i64) -> FrontData {
        FrontData::new(w, c_u, c_d, a, b, p).unwrap()
    }

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn tb_rot_sl_examples() {
        let trefoil = fd(0, 2, 0, 3, 2, 7);
        assert_eq!(tb(&trefoil), r(-1, 7));
        assert_eq!(rot(&trefoil), r(-2, 7));
        assert_eq!(sl_push(&trefoil), r(1, 7));
        assert_eq!(sl_push_negative(&trefoil), r(-3, 7));

        let zero = fd(0, 0, 0, 0, 0, 5);
        assert_eq!(tb(&zero), r(0, 1));
        assert_eq!(sl_push(&zero), r(0, 1));

        let small = fd(1, 1, 1, 1, 1, 2);
        assert_eq!(tb(&small), r(1, 2));
        assert_eq!(rot(&small), r(1, 1));
        assert_eq!(sl_push_negative(&small), r(3, 2));

        assert_eq!(sl_push(&fd(0, 2, 0, 5, 4, 21)), r(11, 21));

        // symmetric cancellation
        let sym = fd(3, 1, 1, 4, -4, 9);
        assert_eq!(rot(&sym), r(0, 1));
        assert_eq!(sl_push_negative(&sym), tb(&sym));
    }

    #[test]
    fn front_data_validation() {
        assert!(FrontData::new(0, 1, 0, 1, 1, 5).is_err());
        assert!(FrontData::new(0, -2, 0, 1, 1, 5).is_err());
        assert_eq!(
            FrontData::new(0, 0, 0, 1, 1, 1),
            Err(Error::InvalidModulus(1))
        );
        assert_eq!(
            FrontData::new(1 << 41, 0, 0, 1, 1, 5),
            Err(Error::Overflow("front data field"))
        );
        assert!(fd(0, 2, 0, 3, 2, 7).homology_consistent(3));
        assert!(!fd(0, 2, 0, 3, 2, 7).homology_consistent(2));
    }

    #[test]
    fn strand_columns() {
        let cols = |p, q, wraps, start| {
            gn1_strand_columns(
                &GridOneFront::new(p, q, wraps, start, (Sign::Plus, Sign::Plus)).unwrap(),
            )
            .unwrap()
        };
        assert_eq!(cols(7, 3, 3, 0), vec![0, 3, 6]);
        assert_eq!(cols(5, 1, 1, 2), vec![2]);
        assert_eq!(cols(16, 7, 5, 0), vec![0, 7, 14, 5, 12]);
        assert_eq!(
            GridOneFront::new(5, 2, 6, 0, (Sign::Plus, Sign::Plus)),
            Err(Error::WrapsExceedModulus {
                wraps: 6,
                modulus: 5
            })
        );
    }

    #[test]
    fn single_strand_has_no_crossings() {
        for (p, q, start) in [(5, 2, 0), (7, 3, 4), (11, 10, 10)] {
            let gf = GridOneFront::new(p, q, 1, start, (Sign::Plus, Sign::Plus)).unwrap();
            assert_eq!(gn1_writhe(&gf, Sign::Minus).unwrap(), 0);
            assert_eq!(gn1_writhe(&gf, Sign::Plus).unwrap(), 0);
        }
    }

    #[test]
    fn torus_duals() {
        let (gf, f) = torus_dual_front(2, 3).unwrap();
        assert_eq!((gf.p, gf.q, gf.wraps), (7, 3, 3));
        assert_eq!(f, fd(0, 2, 0, 3, 2, 7));
        assert_eq!(sl_push(&f), r(1, 7));

        let (_, f) = torus_dual_front(4, 5).unwrap();
        assert_eq!((f.w, f.p), (0, 21));
        assert_eq!(sl_push(&f) * Rational::from(21), r(11, 1));

        let (_, f) = torus_dual_front(2, 5).unwrap();
        assert_eq!((f.w, f.p), (0, 11));
        assert_eq!(sl_push(&f) * Rational::from(11), r(3, 1));

        let (gf, f) = torus_dual_front(3, 4).unwrap();
        assert_eq!((gf.p, f.w), (13, 0));
        assert!(f.homology_consistent(gf.q));

        assert_eq!(torus_dual_front(2, 4), Err(Error::NotCoprime(2, 4)));
    }

    #[test]
    fn writhe_sign_follows_orientation() {
        // (16, 7) with 11 wraps: the connector toward lower columns crosses
        // eight strands, the other way two
        let plus = GridOneFront::new(16, 7, 11, 0, (Sign::Plus, Sign::Plus)).unwrap();
        assert_eq!(gn1_writhe(&plus, Sign::Minus).unwrap(), -8);
        let mixed = GridOneFront {
            orientation: (Sign::Plus, Sign::Minus),
            ..plus
        };
        assert_eq!(gn1_writhe(&mixed, Sign::Minus).unwrap(), 8);
        assert_eq!(gn1_writhe(&plus, Sign::Plus).unwrap(), -2);
    }

    #[test]
    fn type_one_exception_front() {
        // class 11 in L(16, 7): the front reaches p·sl = -9
        let a = Residue::new(11, 16).unwrap();
        let (gf, f) = canonical_front(16, 7, a).unwrap();
        assert_eq!(gf.wraps, 5);
        assert_eq!(f, fd(0, 0, 2, -5, -3, 16));
        assert!(f.homology_consistent(7));
        assert_eq!(sl_push(&f) * Rational::from(16), r(-9, 1));

        // the other representative of the class agrees
        let long = GridOneFront::new(16, 7, 11, 0, (Sign::Plus, Sign::Plus)).unwrap();
        let f = long.front_data(Sign::Minus).unwrap();
        assert_eq!((f.a, f.b, f.w), (11, 13, -8));
        assert_eq!(sl_push(&f) * Rational::from(16), r(-9, 1));
    }
}

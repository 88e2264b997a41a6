//! Braid words, the Berge braids `W(B)^b · W(A+1−a)^δ`, and Euler
//! characteristics of positive braid closures.
//!
//! `W(n) = σ_{n−1} σ_{n−2} ⋯ σ_1`. A positive braid on `n` strands with `c`
//! letters closes to a knot with maximal Euler characteristic `n − c`
//! (Seifert's algorithm is optimal on positive braids).

use std::fmt;

use serde::Serialize;

use crate::modmath::{checked_add, checked_mul, checked_sub};
use crate::{Error, Result};

/// One letter `σ_gen^{±1}`, with `gen` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub gen: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Letter {
        Letter {
            gen,
            positive: true,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            positive: !self.positive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::param("a braid has at least one strand"));
        }
        if let Some(l) = letters.iter().find(|l| l.gen == 0 || l.gen >= strands) {
            return Err(Error::param(format!(
                "generator σ_{} does not exist on {strands} strands",
                l.gen
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.positive)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    fn append(&mut self, other: &BraidWord) {
        debug_assert!(other.strands <= self.strands);
        self.letters.extend_from_slice(&other.letters);
    }

    fn append_power(&mut self, w: &BraidWord, exp: i64) {
        let block = if exp < 0 { w.inverse() } else { w.clone() };
        for _ in 0..exp.unsigned_abs() {
            self.append(&block);
        }
    }

    /// Free reduction, including cancellation across the end of the word
    /// (the closure is invariant under cyclic permutation).
    pub fn cyclically_reduced(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top == l.inverse() => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        let (mut lo, mut hi) = (0, stack.len());
        while hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        BraidWord {
            strands: self.strands,
            letters: stack[lo..hi].to_vec(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", l.gen)?;
            if !l.positive {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// `W(n) = σ_{n−1} ⋯ σ_1` on `n` strands.
pub fn w_word(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::param(format!("W(n) needs n ≥ 2, got {n}")));
    }
    BraidWord::new(n, (1..n).rev().map(Letter::pos).collect())
}

/// `W(n)` on the first `n` of `strands` strands; `W(1)` is empty.
fn w_embedded(n: usize, strands: usize) -> Result<BraidWord> {
    BraidWord::new(strands, (1..n).rev().map(Letter::pos).collect())
}

fn check_berge_ranges(big_b: i64, n2: i64) -> Result<()> {
    if big_b < 2 {
        return Err(Error::param(format!("B must be ≥ 2, got {big_b}")));
    }
    if n2 < 2 {
        return Err(Error::param(format!("A + 1 − a must be ≥ 2, got {n2}")));
    }
    if n2 > big_b {
        return Err(Error::param(format!(
            "A + 1 − a = {n2} exceeds B = {big_b}"
        )));
    }
    Ok(())
}

fn sign_value(delta: i64) -> Result<i64> {
    match delta {
        1 | -1 => Ok(delta),
        _ => Err(Error::param(format!("sign must be ±1, got {delta}"))),
    }
}

/// The word `W(B)^b · W(A+1−a)^δ` on `B` strands.
pub fn berge_braid(big_a: i64, big_b: i64, b: i64, delta: i64, a_param: i64) -> Result<BraidWord> {
    let delta = sign_value(delta)?;
    if !(0..=1).contains(&a_param) {
        return Err(Error::param(format!("a must be 0 or 1, got {a_param}")));
    }
    let n2 = checked_sub(checked_add(big_a, 1)?, a_param)?;
    check_berge_ranges(big_b, n2)?;
    let strands = big_b as usize;
    let mut word = BraidWord::identity(strands)?;
    word.append_power(&w_word(strands)?, b);
    word.append_power(&w_embedded(n2 as usize, strands)?, delta);
    Ok(word)
}

/// Parameters of `W(n1)^{m−1} · W(n1 − n2 + 1)`, whose closure is isotopic to
/// that of `W(n1)^m · W(n2)^{−1}`.
pub fn yamada_rewrite(n1: i64, m: i64, n2: i64) -> Result<(i64, i64, i64)> {
    if m < 1 {
        return Err(Error::param(format!("rewrite needs m > 0, got {m}")));
    }
    if n2 < 2 || n2 > n1 {
        return Err(Error::param(format!(
            "rewrite needs 2 ≤ n2 ≤ n1, got n1 = {n1}, n2 = {n2}"
        )));
    }
    Ok((n1, m - 1, n1 - n2 + 1))
}

/// A Berge braid brought to the positive form `W(n1)^m · W(n2)` on `n1`
/// strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PositiveBerge {
    pub n1: i64,
    pub m: i64,
    pub n2: i64,
    /// The word was mirrored because `b < 0`.
    pub mirrored: bool,
    /// Number of Yamada rewrites applied.
    pub rewrites: u32,
}

impl PositiveBerge {
    pub fn letter_count(&self) -> Result<i64> {
        checked_add(checked_mul(self.m, self.n1 - 1)?, self.n2 - 1)
    }

    pub fn word(&self) -> Result<BraidWord> {
        let strands = self.n1 as usize;
        let mut word = BraidWord::identity(strands)?;
        word.append_power(&w_word(strands)?, self.m);
        word.append(&w_embedded(self.n2 as usize, strands)?);
        Ok(word)
    }

    /// The sign of the `W(A+1−a)` block after the mirror flip.
    pub fn effective_delta(delta: i64, b: i64) -> i64 {
        if b < 0 {
            -delta
        } else {
            delta
        }
    }
}

/// Normalizes `W(B)^b · W(A+1−a)^δ` to a positive word at the parameter level:
/// when `b < 0` the word is mirrored (flipping the signs of `b` and `δ`), then
/// a remaining `W(n2)^{−1}` is absorbed by a Yamada rewrite.
pub fn normalize_berge(
    big_a: i64,
    big_b: i64,
    b: i64,
    delta: i64,
    a_param: i64,
) -> Result<PositiveBerge> {
    let delta = sign_value(delta)?;
    let n2 = checked_sub(checked_add(big_a, 1)?, a_param)?;
    check_berge_ranges(big_b, n2)?;
    let mirrored = b < 0;
    let (m, delta) = if mirrored { (-b, -delta) } else { (b, delta) };
    if delta == 1 {
        return Ok(PositiveBerge {
            n1: big_b,
            m,
            n2,
            mirrored,
            rewrites: 0,
        });
    }
    let (n1, m, n2) = yamada_rewrite(big_b, m, n2)?;
    Ok(PositiveBerge {
        n1,
        m,
        n2,
        mirrored,
        rewrites: 1,
    })
}

/// Number of cycles of the permutation underlying the word.
pub fn closure_components(w: &BraidWord) -> usize {
    let n = w.strands;
    let mut perm: Vec<usize> = (0..n).collect();
    for l in &w.letters {
        perm.swap(l.gen - 1, l.gen);
    }
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// Maximal Euler characteristic of the closure of a positive braid that
/// closes to a knot: `strands − letters`.
pub fn chi_positive_closure(w: &BraidWord) -> Result<i64> {
    if !w.is_positive() {
        return Err(Error::NonPositiveWord);
    }
    let comps = closure_components(w);
    if comps != 1 {
        return Err(Error::DisconnectedClosure(comps));
    }
    Ok(w.strands as i64 - w.letters.len() as i64)
}

/// `−χ = |b|(B − 1) + δ(A − a) − B`, for a word already in the form where
/// `δ` is the sign of the `W(A+1−a)` block of the positive (or mirrored)
/// braid.
pub fn chi_berge(big_a: i64, big_b: i64, b: i64, delta: i64, a_param: i64) -> Result<i64> {
    let twists = checked_mul(
        b.checked_abs().ok_or(Error::Overflow("|b|"))?,
        checked_sub(big_b, 1)?,
    )?;
    let tail = checked_mul(delta, checked_sub(big_a, a_param)?)?;
    checked_sub(checked_add(twists, tail)?, big_b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(w: &BraidWord) -> Vec<i64> {
        w.letters()
            .iter()
            .map(|l| {
                if l.positive {
                    l.gen as i64
                } else {
                    -(l.gen as i64)
                }
            })
            .collect()
    }

    #[test]
    fn w_words() {
        let w = w_word(3).unwrap();
        assert_eq!((w.strands(), gens(&w)), (3, vec![2, 1]));
        assert_eq!(gens(&w_word(5).unwrap()), vec![4, 3, 2, 1]);
        assert_eq!(gens(&w_word(2).unwrap()), vec![1]);
        assert!(w_word(1).is_err());
        assert_eq!(w_word(4).unwrap().to_string(), "s3 s2 s1");
    }

    #[test]
    fn berge_braids() {
        let w = berge_braid(2, 5, 1, 1, 0).unwrap();
        assert_eq!(gens(&w), vec![4, 3, 2, 1, 2, 1]);
        assert_eq!(w.strands(), 5);

        let w = berge_braid(2, 5, 0, 1, 0).unwrap();
        assert_eq!(gens(&w), vec![2, 1]);

        let w = berge_braid(3, 8, 2, -1, 1).unwrap();
        assert_eq!(w.len(), 16);
        assert_eq!(&gens(&w)[14..], &[-1, -2]);

        let w = berge_braid(2, 5, -1, 1, 0).unwrap();
        assert_eq!(gens(&w), vec![-1, -2, -3, -4, 2, 1]);

        assert!(berge_braid(5, 5, 1, 1, 0).is_err());
        assert!(berge_braid(0, 5, 1, 1, 0).is_err());
        assert!(berge_braid(2, 5, 1, 2, 0).is_err());
    }

    #[test]
    fn yamada() {
        assert_eq!(yamada_rewrite(5, 2, 3).unwrap(), (5, 1, 3));
        assert_eq!(yamada_rewrite(5, 1, 5).unwrap(), (5, 0, 1));
        assert_eq!(yamada_rewrite(8, 3, 4).unwrap(), (8, 2, 5));
        assert!(yamada_rewrite(5, 0, 3).is_err());
        assert!(yamada_rewrite(5, 2, 6).is_err());
        assert!(yamada_rewrite(5, 2, 1).is_err());
    }

    #[test]
    fn yamada_matches_free_reduction() {
        // W(n1)^m W(n2)^{-1} freely reduces to W(n1)^{m-1} σ_{n1-1} ⋯ σ_{n2},
        // which has the same letter count as W(n1)^{m-1} W(n1 - n2 + 1)
        for n1 in 2..9usize {
            for n2 in 2..=n1 {
                for m in 1..4i64 {
                    let mut w = BraidWord::identity(n1).unwrap();
                    w.append_power(&w_word(n1).unwrap(), m);
                    w.append_power(&w_embedded(n2, n1).unwrap(), -1);
                    let reduced = w.cyclically_reduced();
                    assert!(reduced.is_positive());
                    let (_, m2, n3) = yamada_rewrite(n1 as i64, m, n2 as i64).unwrap();
                    assert_eq!(reduced.len() as i64, m2 * (n1 as i64 - 1) + n3 - 1);
                    assert_eq!(closure_components(&reduced), closure_components(&w));
                }
            }
        }
    }

    #[test]
    fn components() {
        assert_eq!(closure_components(&w_word(5).unwrap()), 1);
        assert_eq!(closure_components(&BraidWord::identity(3).unwrap()), 3);
        assert_eq!(closure_components(&berge_braid(2, 5, 1, 1, 0).unwrap()), 1);
        let (n1, m, n2) = yamada_rewrite(5, 1, 5).unwrap();
        let trivial = PositiveBerge {
            n1,
            m,
            n2,
            mirrored: false,
            rewrites: 1,
        }
        .word()
        .unwrap();
        assert_eq!(closure_components(&trivial), 5);
    }

    #[test]
    fn positive_closure_chi() {
        assert_eq!(
            chi_positive_closure(&berge_braid(2, 5, 1, 1, 0).unwrap()).unwrap(),
            -1
        );
        let mut t23 = BraidWord::identity(3).unwrap();
        t23.append_power(&w_word(3).unwrap(), 2);
        assert_eq!(chi_positive_closure(&t23).unwrap(), -1);
        assert_eq!(chi_positive_closure(&w_word(2).unwrap()).unwrap(), 1);
        assert_eq!(
            chi_positive_closure(&berge_braid(3, 8, 2, -1, 1).unwrap()),
            Err(Error::NonPositiveWord)
        );
        assert_eq!(
            chi_positive_closure(&BraidWord::identity(2).unwrap()),
            Err(Error::DisconnectedClosure(2))
        );
    }

    #[test]
    fn chi_formula() {
        assert_eq!(chi_berge(2, 5, 1, 1, 0).unwrap(), 1);
        assert_eq!(chi_berge(5, 12, 3, 1, 1).unwrap(), 25);
        assert_eq!(chi_berge(5, 12, 3, -1, 1).unwrap(), 17);
    }

    #[test]
    fn normalization() {
        let n = normalize_berge(2, 5, 1, 1, 0).unwrap();
        assert_eq!(
            (n.n1, n.m, n.n2, n.mirrored, n.rewrites),
            (5, 1, 3, false, 0)
        );

        // b = -9, δ = 1 mirrors to b = 9, δ = -1, then one rewrite
        let n = normalize_berge(2, 5, -9, 1, 0).unwrap();
        assert_eq!(
            (n.n1, n.m, n.n2, n.mirrored, n.rewrites),
            (5, 8, 3, true, 1)
        );
        assert_eq!(n.letter_count().unwrap(), 34);
        let w = n.word().unwrap();
        assert_eq!(-chi_positive_closure(&w).unwrap(), 29);
        assert_eq!(chi_berge(2, 5, 9, -1, 0).unwrap(), 29);

        // b = -1, δ = -1 is the mirror of W(5) W(3)
        let n = normalize_berge(2, 5, -1, -1, 0).unwrap();
        assert_eq!((n.m, n.n2, n.rewrites), (1, 3, 0));
        assert_eq!(chi_positive_closure(&n.word().unwrap()).unwrap(), -1);
    }

    #[test]
    fn cyclic_reduction() {
        let w = BraidWord::new(
            3,
            vec![Letter::pos(1).inverse(), Letter::pos(2), Letter::pos(1)],
        )
        .unwrap();
        assert_eq!(gens(&w.cyclically_reduced()), vec![2]);
        let w = w_word(4).unwrap();
        let mut ww = w.clone();
        ww.append(&w.inverse());
        assert!(ww.cyclically_reduced().is_empty());
    }
}

//! Free words, braid words and the Artin action.

use std::fmt;

use crate::error::{Error, Result};

/// Pushes `letter` onto a freely reduced word, cancelling if possible.
pub(crate) fn push_reduced(word: &mut Vec<i64>, letter: i64) {
    if word.last() == Some(&-letter) {
        word.pop();
    } else {
        word.push(letter);
    }
}

pub(crate) fn reduce_letters(letters: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(letters.len());
    for &l in letters {
        push_reduced(&mut out, l);
    }
    out
}

pub(crate) fn inverse_letters(letters: &[i64]) -> Vec<i64> {
    letters.iter().rev().map(|l| -l).collect()
}

/// Replaces generator `k` by `images[k - 1]` (and inverses accordingly).
pub(crate) fn substitute(letters: &[i64], images: &[Vec<i64>]) -> Vec<i64> {
    let mut out = Vec::new();
    for &l in letters {
        let img = &images[(l.unsigned_abs() - 1) as usize];
        if l > 0 {
            for &m in img {
                push_reduced(&mut out, m);
            }
        } else {
            for &m in img.iter().rev() {
                push_reduced(&mut out, -m);
            }
        }
    }
    out
}

/// Element of the free group on `rank` generators, stored freely reduced.
/// Letter `k > 0` is the `k`-th generator, `-k` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i64>,
}

impl FreeWord {
    pub fn new(rank: usize, letters: Vec<i64>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("free group rank must be at least 1".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::LetterOutOfRange { letter: l, bound: rank });
            }
        }
        Ok(Self::from_reduced(rank, reduce_letters(&letters)))
    }

    pub(crate) fn from_reduced(rank: usize, letters: Vec<i64>) -> Self {
        debug_assert_eq!(reduce_letters(&letters), letters);
        Self { rank, letters }
    }

    pub fn identity(rank: usize) -> Self {
        Self { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= rank, "generator index out of range");
        Self { rank, letters: vec![k as i64] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self::from_reduced(self.rank, inverse_letters(&self.letters))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch in product");
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Self::from_reduced(self.rank, out)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::identity(self.rank), |acc, _| acc.mul(&base))
    }

    /// Exponent sum of generator `k`.
    pub fn exponent_sum_of(&self, k: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.unsigned_abs() as usize == k)
            .map(|l| l.signum())
            .sum()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// `(p, c)` with `self = p c p^-1` and `c` cyclically reduced.
    pub fn cyclic_reduction(&self) -> (FreeWord, FreeWord) {
        let w = &self.letters;
        let mut k = 0;
        while 2 * k + 1 < w.len() && w[k] == -w[w.len() - 1 - k] {
            k += 1;
        }
        (
            Self::from_reduced(self.rank, w[..k].to_vec()),
            Self::from_reduced(self.rank, w[k..w.len() - k].to_vec()),
        )
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

/// Freely reduced representative.
pub fn free_reduce(w: &FreeWord) -> FreeWord {
    FreeWord::from_reduced(w.rank, reduce_letters(&w.letters))
}

/// Word in the Artin generators of `B_n`: `k > 0` is `sigma_k`, `k < 0` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidInput("a braid needs at least 2 strands".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    bound: strands - 1,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: inverse_letters(&self.letters),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand mismatch in product");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands,
            letters,
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// `(sigma_1 ... sigma_{n-1})^n`, generating the centre.
    pub fn full_twist(strands: usize) -> Self {
        let cycle: Vec<i64> = (1..strands as i64).collect();
        Self {
            strands,
            letters: cycle,
        }
        .pow(strands as i64)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

/// Images of the free generators under a single Artin letter.
fn letter_images(n: usize, s: i64) -> Vec<Vec<i64>> {
    let i = s.unsigned_abs() as i64;
    let mut images: Vec<Vec<i64>> = (1..=n as i64).map(|k| vec![k]).collect();
    let (gi, gj) = (i, i + 1);
    if s > 0 {
        images[(gi - 1) as usize] = vec![gi, gj, -gi];
        images[(gj - 1) as usize] = vec![gi];
    } else {
        images[(gi - 1) as usize] = vec![gj];
        images[(gj - 1) as usize] = vec![-gj, gi, gj];
    }
    images
}

/// Images of `gamma_1, ..., gamma_n` under the automorphism of `b`,
/// composed so that `phi_{uv} = phi_u o phi_v`.
pub(crate) fn artin_images(b: &BraidWord) -> Vec<Vec<i64>> {
    let n = b.strands;
    let mut images: Vec<Vec<i64>> = (1..=n as i64).map(|k| vec![k]).collect();
    for &s in &b.letters {
        let step = letter_images(n, s);
        images = step.iter().map(|w| substitute(w, &images)).collect();
    }
    images
}

/// Image of `w` under the Artin automorphism of `b`.
pub fn artin_action(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    if w.rank != b.strands {
        return Err(Error::RankMismatch {
            expected: b.strands,
            got: w.rank,
        });
    }
    let images = artin_images(b);
    Ok(FreeWord::from_reduced(w.rank, substitute(&w.letters, &images)))
}

/// Action on the quotient of rank `n - 1` obtained by eliminating
/// `gamma_n = (gamma_1 ... gamma_{n-1})^-1`.
pub fn artin_action_quotient(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    let n = b.strands;
    if w.rank + 1 != n {
        return Err(Error::RankMismatch {
            expected: n - 1,
            got: w.rank,
        });
    }
    let images = artin_images(b);
    let mut projection: Vec<Vec<i64>> = (1..n as i64).map(|k| vec![k]).collect();
    projection.push((1..n as i64).rev().map(|k| -k).collect());
    let projected: Vec<Vec<i64>> = images
        .iter()
        .take(n - 1)
        .map(|img| substitute(img, &projection))
        .collect();
    Ok(FreeWord::from_reduced(w.rank, substitute(&w.letters, &projected)))
}

/// Braid equality, decided by the faithful Artin representation.
pub fn braid_eq(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands != v.strands {
        return Err(Error::StrandMismatch(u.strands, v.strands));
    }
    Ok(artin_images(u) == artin_images(v))
}

/// Total exponent sum modulo 2.
pub fn hodge_parity(w: &FreeWord) -> u8 {
    w.exponent_sum().rem_euclid(2) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(rank: usize, l: &[i64]) -> FreeWord {
        FreeWord::new(rank, l.to_vec()).unwrap()
    }

    fn bw(n: usize, l: &[i64]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert!(fw(2, &[1, -1]).is_empty());
        assert_eq!(fw(4, &[1, 2, -2, 1]).letters(), &[1, 1]);
        assert_eq!(fw(4, &[1, 2, -1]).letters(), &[1, 2, -1]);
        assert_eq!(fw(3, &[1, 2, 3, -3, -2, -1]).letters(), &[] as &[i64]);
        assert!(FreeWord::new(2, vec![3]).is_err());
    }

    #[test]
    fn artin_examples() {
        let s1 = bw(4, &[1]);
        assert_eq!(artin_action(&s1, &fw(4, &[1])).unwrap().letters(), &[1, 2, -1]);
        assert_eq!(artin_action(&s1, &fw(4, &[2])).unwrap().letters(), &[1]);
        assert_eq!(artin_action(&bw(4, &[2]), &fw(4, &[4])).unwrap().letters(), &[4]);
        assert_eq!(
            artin_action(&s1, &fw(3, &[1])),
            Err(Error::RankMismatch { expected: 4, got: 3 })
        );
    }

    #[test]
    fn inverse_letter_undoes_letter() {
        for s in 1..=3 {
            let b = bw(4, &[s, -s]);
            assert!(braid_eq(&b, &BraidWord::identity(4)).unwrap());
        }
    }

    #[test]
    fn braid_eq_examples() {
        assert!(braid_eq(&bw(3, &[1, 2, 1]), &bw(3, &[2, 1, 2])).unwrap());
        assert!(braid_eq(&bw(4, &[1, 3]), &bw(4, &[3, 1])).unwrap());
        assert!(!braid_eq(&bw(3, &[1, 2]), &bw(3, &[2, 1])).unwrap());
        assert_eq!(
            braid_eq(&bw(3, &[1]), &bw(4, &[1])),
            Err(Error::StrandMismatch(3, 4))
        );
    }

    #[test]
    fn left_action_composition() {
        let u = bw(4, &[1, -2, 3]);
        let v = bw(4, &[2, 2, -1]);
        let w = fw(4, &[1, 3, -4, 2]);
        let uv = artin_action(&u.mul(&v), &w).unwrap();
        let u_of_v = artin_action(&u, &artin_action(&v, &w).unwrap()).unwrap();
        assert_eq!(uv, u_of_v);
    }

    #[test]
    fn boundary_word_is_fixed() {
        let b = bw(4, &[1, -3, 2, 2, -1, 3]);
        let boundary = fw(4, &[1, 2, 3, 4]);
        assert_eq!(artin_action(&b, &boundary).unwrap(), boundary);
        let quotient_boundary = fw(3, &[]);
        assert!(artin_action_quotient(&b, &quotient_boundary).unwrap().is_empty());
    }

    #[test]
    fn parity_examples() {
        assert_eq!(hodge_parity(&fw(2, &[1, 2])), 0);
        assert_eq!(hodge_parity(&fw(2, &[1])), 1);
        assert_eq!(hodge_parity(&fw(2, &[1, 2, -1])), 1);
    }

    #[test]
    fn cyclic_reduction_splits_conjugate() {
        let w = fw(2, &[2, 1, 1, -2]);
        let (p, c) = w.cyclic_reduction();
        assert_eq!(p.letters(), &[2]);
        assert_eq!(c.letters(), &[1, 1]);
    }
}

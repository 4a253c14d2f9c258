//! Automorphisms of free groups, given by the images of the generators.

use std::collections::{HashSet, VecDeque};

use super::words::{inverse_letters, push_reduced, substitute, FreeWord};
use crate::error::{Error, Result};
use crate::mat2::Mat2;

/// An automorphism of the free group of rank `images.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeAut {
    images: Vec<FreeWord>,
}

impl FreeAut {
    /// Validates that the images define an automorphism by computing an
    /// inverse with Nielsen reduction and checking both compositions.
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let candidate = Self::from_images_unchecked(images)?;
        candidate.inverse()?;
        Ok(candidate)
    }

    pub(crate) fn from_images_unchecked(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if rank == 0 {
            return Err(Error::InvalidInput("automorphism needs at least one image".into()));
        }
        if let Some(bad) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                got: bad.rank(),
            });
        }
        Ok(Self { images })
    }

    pub(crate) fn from_letters(images: Vec<Vec<i64>>) -> Self {
        let rank = images.len();
        Self {
            images: images
                .into_iter()
                .map(|l| FreeWord::from_reduced(rank, l))
                .collect(),
        }
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            images: (1..=rank).map(|k| FreeWord::generator(rank, k)).collect(),
        }
    }

    /// `g -> u g u^-1`.
    pub fn inner(u: &FreeWord) -> Self {
        let rank = u.rank();
        let ui = u.inverse();
        Self {
            images: (1..=rank)
                .map(|k| u.mul(&FreeWord::generator(rank, k)).mul(&ui))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    fn letter_images(&self) -> Vec<Vec<i64>> {
        self.images.iter().map(|w| w.letters().to_vec()).collect()
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(FreeWord::from_reduced(
            self.rank(),
            substitute(w.letters(), &self.letter_images()),
        ))
    }

    /// `self o other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        let mine = self.letter_images();
        Ok(Self::from_letters(
            other
                .images
                .iter()
                .map(|w| substitute(w.letters(), &mine))
                .collect(),
        ))
    }

    /// Inverse automorphism via Nielsen reduction; fails with
    /// [`Error::InvalidInput`] when the images do not form a basis.
    pub fn inverse(&self) -> Result<Self> {
        let rank = self.rank();
        let mut tuple = self.letter_images();
        let mut tracker: Vec<Vec<i64>> = (1..=rank as i64).map(|k| vec![k]).collect();

        loop {
            if let Some(perm) = signed_permutation(&tuple) {
                // self o N = P, so self^-1 = N o P^-1
                let mut p_inv = vec![Vec::new(); rank];
                for (j, &(gen, sign)) in perm.iter().enumerate() {
                    p_inv[gen] = vec![sign * (j as i64 + 1)];
                }
                let inv = Self::from_letters(
                    p_inv.iter().map(|w| substitute(w, &tracker)).collect(),
                );
                if self.compose(&inv)?.is_identity() && inv.compose(self)?.is_identity() {
                    return Ok(inv);
                }
                return Err(Error::InvalidInput("images do not define an automorphism".into()));
            }
            match shorten(&tuple) {
                Some(moves) => {
                    for mv in moves {
                        apply_move(&mut tuple, mv);
                        apply_move(&mut tracker, mv);
                    }
                }
                None => {
                    return Err(Error::InvalidInput(
                        "images do not define an automorphism".into(),
                    ))
                }
            }
        }
    }
}

/// If every entry is a single generator or inverse and all generators
/// occur, returns `(generator index, sign)` per entry.
fn signed_permutation(tuple: &[Vec<i64>]) -> Option<Vec<(usize, i64)>> {
    let mut seen = vec![false; tuple.len()];
    let mut out = Vec::with_capacity(tuple.len());
    for w in tuple {
        if w.len() != 1 {
            return None;
        }
        let g = (w[0].unsigned_abs() - 1) as usize;
        if g >= tuple.len() || seen[g] {
            return None;
        }
        seen[g] = true;
        out.push((g, w[0].signum()));
    }
    Some(out)
}

/// Elementary Nielsen move: entry `i` becomes `t_i t_j^e` (right) or
/// `t_j^e t_i` (left).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Move {
    i: usize,
    j: usize,
    e: i64,
    right: bool,
}

fn apply_move(tuple: &mut [Vec<i64>], mv: Move) {
    let tj = if mv.e > 0 {
        tuple[mv.j].clone()
    } else {
        inverse_letters(&tuple[mv.j])
    };
    let ti = &tuple[mv.i];
    let mut out = Vec::with_capacity(ti.len() + tj.len());
    let (first, second) = if mv.right { (ti, &tj) } else { (&tj, ti) };
    for &l in first.iter().chain(second.iter()) {
        push_reduced(&mut out, l);
    }
    tuple[mv.i] = out;
}

fn total_length(tuple: &[Vec<i64>]) -> usize {
    tuple.iter().map(Vec::len).sum()
}

fn all_moves(rank: usize) -> Vec<Move> {
    let mut moves = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            if i == j {
                continue;
            }
            for e in [1, -1] {
                for right in [true, false] {
                    moves.push(Move { i, j, e, right });
                }
            }
        }
    }
    moves
}

const PLATEAU_LIMIT: usize = 20_000;

/// A sequence of moves strictly decreasing the total length, searching
/// breadth-first through length-preserving moves when no single move helps.
fn shorten(tuple: &[Vec<i64>]) -> Option<Vec<Move>> {
    let start_len = total_length(tuple);
    let moves = all_moves(tuple.len());
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    let mut queue: VecDeque<(Vec<Vec<i64>>, Vec<Move>)> = VecDeque::new();
    seen.insert(tuple.to_vec());
    queue.push_back((tuple.to_vec(), Vec::new()));
    while let Some((t, path)) = queue.pop_front() {
        for &mv in &moves {
            let mut next = t.clone();
            apply_move(&mut next, mv);
            let len = total_length(&next);
            if next.iter().any(Vec::is_empty) || len > start_len {
                continue;
            }
            let mut p = path.clone();
            p.push(mv);
            if len < start_len {
                return Some(p);
            }
            if seen.len() < PLATEAU_LIMIT && seen.insert(next.clone()) {
                queue.push_back((next, p));
            }
        }
    }
    None
}

/// Exponent-sum matrix on the basis `(x, y)`: column `k` holds the exponent
/// sums of the image of the `k`-th generator.
pub fn aut_abelianize(phi: &FreeAut) -> Result<Mat2> {
    if phi.rank() != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            got: phi.rank(),
        });
    }
    let [ix, iy] = [&phi.images[0], &phi.images[1]];
    Ok(Mat2::new(
        ix.exponent_sum_of(1),
        iy.exponent_sum_of(1),
        ix.exponent_sum_of(2),
        iy.exponent_sum_of(2),
    ))
}

/// A word `u` with `phi(g) = u g u^-1` for every generator, if `phi` is inner.
pub fn inner_conjugator(phi: &FreeAut) -> Option<FreeWord> {
    if phi.rank() != 2 {
        return None;
    }
    let (p, core) = phi.images[0].cyclic_reduction();
    if core.letters() != [1] {
        return None;
    }
    let x = FreeWord::generator(2, 1);
    let y = FreeWord::generator(2, 2);
    let bound = phi.images[1].len() as i64 + 2;
    (-bound..=bound)
        .map(|k| p.mul(&x.pow(k)))
        .find(|u| u.mul(&y).mul(&u.inverse()) == phi.images[1])
}

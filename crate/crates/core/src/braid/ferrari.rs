//! Ferrari's map `B4 -> B3`, its free kernel `F = <x, y>`, the conjugation
//! action of `B4` on `F`, and the pullback structure over `SL2(Z)`.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use super::aut::{aut_abelianize, inner_conjugator, FreeAut};
use super::words::{artin_images, braid_eq, BraidWord, FreeWord};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::report::Report;

/// `x = sigma1 sigma3^-1`.
pub const KERNEL_X: [i64; 2] = [1, -3];
/// `y = sigma2 sigma1 sigma3^-1 sigma2^-1`.
pub const KERNEL_Y: [i64; 4] = [2, 1, -3, -2];

/// Maximum word length searched when deriving the conjugation table.
pub const TABLE_DEPTH: usize = 8;

fn require_strands(b: &BraidWord, n: usize) -> Result<()> {
    if b.strands() == n {
        Ok(())
    } else {
        Err(Error::StrandMismatch(n, b.strands()))
    }
}

/// Letterwise `±3 -> ±1`.
pub fn ferrari_star(b: &BraidWord) -> Result<BraidWord> {
    require_strands(b, 4)?;
    let letters = b
        .letters()
        .iter()
        .map(|&l| if l.abs() == 3 { l.signum() } else { l })
        .collect();
    BraidWord::new(3, letters)
}

/// Letterwise inclusion `B3 -> B4`.
pub fn ferrari_section(b: &BraidWord) -> Result<BraidWord> {
    require_strands(b, 3)?;
    BraidWord::new(4, b.letters().to_vec())
}

/// The braid represented by a word in `x, y`.
pub fn embed_kernel(u: &FreeWord) -> Result<BraidWord> {
    if u.rank() != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            got: u.rank(),
        });
    }
    let mut letters = Vec::new();
    for &l in u.letters() {
        let gen: &[i64] = if l.abs() == 1 { &KERNEL_X } else { &KERNEL_Y };
        if l > 0 {
            letters.extend_from_slice(gen);
        } else {
            letters.extend(gen.iter().rev().map(|g| -g));
        }
    }
    BraidWord::new(4, letters)
}

/// For each `sigma_i^{±1}`, the words in `x, y` equal to
/// `sigma x sigma^-1` and `sigma y sigma^-1`.
#[derive(Clone, Debug)]
pub struct ConjugationTable {
    entries: HashMap<i64, FreeAut>,
}

impl ConjugationTable {
    /// Conjugation by the single letter `s` as an automorphism of `F`.
    pub fn letter(&self, s: i64) -> &FreeAut {
        &self.entries[&s]
    }

    /// `(letter, generator index, word)` for all twelve entries, ordered.
    pub fn entries(&self) -> Vec<(i64, usize, FreeWord)> {
        let mut out = Vec::new();
        for s in [1, -1, 2, -2, 3, -3] {
            for (k, w) in self.entries[&s].images().iter().enumerate() {
                out.push((s, k + 1, w.clone()));
            }
        }
        out
    }

    fn derive() -> Result<Self> {
        let gens = [
            FreeWord::generator(2, 1),
            FreeWord::generator(2, 2),
        ];
        let mut targets: Vec<(i64, usize, Vec<Vec<i64>>)> = Vec::new();
        for s in [1i64, -1, 2, -2, 3, -3] {
            let sb = BraidWord::new(4, vec![s])?;
            for (k, g) in gens.iter().enumerate() {
                let conj = sb.mul(&embed_kernel(g)?).mul(&sb.inverse());
                targets.push((s, k, artin_images(&conj)));
            }
        }

        let letter_braids: Vec<(i64, Vec<Vec<i64>>)> = [1i64, -1, 2, -2]
            .iter()
            .map(|&l| {
                let w = FreeWord::new(2, vec![l]).expect("valid letter");
                (l, artin_images(&embed_kernel(&w).expect("rank 2")))
            })
            .collect();

        // breadth-first over reduced words; Artin images let us recognise
        // the target braids exactly
        let mut found: HashMap<(i64, usize), Vec<i64>> = HashMap::new();
        let identity: Vec<Vec<i64>> = (1..=4).map(|k| vec![k]).collect();
        let mut queue: VecDeque<(Vec<i64>, Vec<Vec<i64>>)> = VecDeque::new();
        queue.push_back((Vec::new(), identity));
        while let Some((word, images)) = queue.pop_front() {
            for (s, k, target) in &targets {
                if !found.contains_key(&(*s, *k)) && images == *target {
                    found.insert((*s, *k), word.clone());
                }
            }
            if found.len() == targets.len() {
                break;
            }
            if word.len() == TABLE_DEPTH {
                continue;
            }
            for (l, step) in &letter_braids {
                if word.last() == Some(&-l) {
                    continue;
                }
                let mut next = word.clone();
                next.push(*l);
                let next_images = step
                    .iter()
                    .map(|w| super::words::substitute(w, &images))
                    .collect();
                queue.push_back((next, next_images));
            }
        }

        let mut entries = HashMap::new();
        for s in [1i64, -1, 2, -2, 3, -3] {
            let mut images = Vec::with_capacity(2);
            for k in 0..2 {
                let word = found.get(&(s, k)).ok_or_else(|| {
                    Error::TableIncomplete(format!(
                        "no word of length <= {TABLE_DEPTH} for sigma_{s} conjugating generator {}",
                        k + 1
                    ))
                })?;
                images.push(FreeWord::new(2, word.clone())?);
            }
            entries.insert(s, FreeAut::from_images_unchecked(images)?);
        }
        let table = Self { entries };
        table.verify()?;
        Ok(table)
    }

    /// Re-checks every entry by braid equality after embedding into `B4`.
    pub fn verify(&self) -> Result<()> {
        for (s, k, w) in self.entries() {
            let sb = BraidWord::new(4, vec![s])?;
            let g = FreeWord::generator(2, k);
            let lhs = sb.mul(&embed_kernel(&g)?).mul(&sb.inverse());
            if !braid_eq(&lhs, &embed_kernel(&w)?)? {
                return Err(Error::TableIncomplete(format!(
                    "entry for sigma_{s} on generator {k} fails verification"
                )));
            }
        }
        Ok(())
    }
}

static TABLE: OnceLock<Result<ConjugationTable>> = OnceLock::new();

/// The conjugation table, derived and verified on first use.
pub fn conjugation_table() -> Result<&'static ConjugationTable> {
    TABLE
        .get_or_init(ConjugationTable::derive)
        .as_ref()
        .map_err(Clone::clone)
}

/// `b = fpart * section(b3part)` with `fpart` in `F = <x, y>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectCoord {
    pub fpart: FreeWord,
    pub b3part: BraidWord,
}

impl SemidirectCoord {
    pub fn recompose(&self) -> Result<BraidWord> {
        Ok(embed_kernel(&self.fpart)?.mul(&ferrari_section(&self.b3part)?))
    }
}

/// Splits `b` along `1 -> F -> B4 -> B3 -> 1`, scanning letters left to
/// right and rewriting `sigma3 = x^-1 sigma1`, `sigma3^-1 = sigma1^-1 x`.
pub fn semidirect_decompose(b: &BraidWord) -> Result<SemidirectCoord> {
    require_strands(b, 4)?;
    let table = conjugation_table()?;
    let x = FreeWord::generator(2, 1);
    let mut fpart = FreeWord::identity(2);
    let mut b3 = Vec::with_capacity(b.len());
    // conjugation by section(b3) as an automorphism of F
    let mut conj = FreeAut::identity(2);
    for &s in b.letters() {
        match s {
            3 => {
                fpart = fpart.mul(&conj.apply(&x.inverse())?);
                b3.push(1);
                conj = conj.compose(table.letter(1))?;
            }
            -3 => {
                b3.push(-1);
                conj = conj.compose(table.letter(-1))?;
                fpart = fpart.mul(&conj.apply(&x)?);
            }
            _ => {
                b3.push(s);
                conj = conj.compose(table.letter(s))?;
            }
        }
    }
    Ok(SemidirectCoord {
        fpart,
        b3part: BraidWord::new(3, b3)?,
    })
}

/// `u -> b u b^-1` on `F`, checked against the Artin representation.
pub fn dfg(b: &BraidWord) -> Result<FreeAut> {
    let phi = dfg_unchecked(b)?;
    let bi = b.inverse();
    for (k, img) in phi.images().iter().enumerate() {
        let g = FreeWord::generator(2, k + 1);
        let lhs = b.mul(&embed_kernel(&g)?).mul(&bi);
        if !braid_eq(&lhs, &embed_kernel(img)?)? {
            return Err(Error::TableIncomplete(format!(
                "conjugation image of generator {} fails Artin verification",
                k + 1
            )));
        }
    }
    Ok(phi)
}

fn dfg_unchecked(b: &BraidWord) -> Result<FreeAut> {
    require_strands(b, 4)?;
    let table = conjugation_table()?;
    b.letters()
        .iter()
        .try_fold(FreeAut::identity(2), |acc, &s| acc.compose(table.letter(s)))
}

/// `aut_abelianize o dfg o ferrari_section`.
pub fn b3_to_sl2(b: &BraidWord) -> Result<Mat2> {
    aut_abelianize(&dfg_unchecked(&ferrari_section(b)?)?)
}

/// The braid `w` with `dfg(w) = phi` and `ferrari_star(w) = b3`.
pub fn pullback_lift(phi: &FreeAut, b3: &BraidWord) -> Result<BraidWord> {
    require_strands(b3, 3)?;
    if aut_abelianize(phi)? != b3_to_sl2(b3)? {
        return Err(Error::Sl2Mismatch);
    }
    let section = ferrari_section(b3)?;
    let residual = phi.compose(&dfg_unchecked(&section.inverse())?)?;
    let u = inner_conjugator(&residual).ok_or(Error::NotInner)?;
    let w = embed_kernel(&u)?.mul(&section);

    if dfg_unchecked(&w)? != *phi {
        return Err(Error::LiftVerification("conjugation action differs".into()));
    }
    if !braid_eq(&ferrari_star(&w)?, b3)? {
        return Err(Error::LiftVerification("Ferrari image differs".into()));
    }
    Ok(w)
}

/// If `b` is a power of the full twist `(sigma1 sigma2 sigma3)^4`, the exponent.
pub fn central_exponent(b: &BraidWord) -> Result<Option<i64>> {
    require_strands(b, 4)?;
    let e = b.exponent_sum();
    if e % 12 != 0 {
        return Ok(None);
    }
    let k = e / 12;
    Ok(braid_eq(b, &BraidWord::full_twist(4).pow(k))?.then_some(k))
}

/// Checks the square `B4 -> B3 -> SL2(Z) <- Aut+(F) <- B4` and the
/// pullback property on a single braid.
pub fn pullback_check(b: &BraidWord) -> Result<Report> {
    require_strands(b, 4)?;
    let mut report = Report::new();
    let phi = dfg(b)?;
    let star = ferrari_star(b)?;

    report.flag(
        "square commutes: b3_to_sl2(ferrari_star(b)) = abelianized dfg(b)",
        b3_to_sl2(&star)? == aut_abelianize(&phi)?,
    );

    let coord = semidirect_decompose(b)?;
    report.flag(
        "semidirect recomposition equals b",
        braid_eq(&coord.recompose()?, b)?,
    );

    if phi.is_identity() {
        report.flag(
            "dfg(b) = id implies b is central",
            central_exponent(b)?.is_some(),
        );
    } else {
        report.flag("dfg(b) = id implies b is central (not applicable)", true);
    }

    let lifted = pullback_lift(&phi, &star)?;
    report.flag("pullback lift recovers b", braid_eq(&lifted, b)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, l: &[i64]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn fw(l: &[i64]) -> FreeWord {
        FreeWord::new(2, l.to_vec()).unwrap()
    }

    #[test]
    fn ferrari_examples() {
        assert_eq!(ferrari_star(&bw(4, &[1, 2, 3])).unwrap(), bw(3, &[1, 2, 1]));
        let k = ferrari_star(&bw(4, &[1, -3])).unwrap();
        assert_eq!(k, bw(3, &[1, -1]));
        assert!(braid_eq(&k, &BraidWord::identity(3)).unwrap());
        assert_eq!(ferrari_star(&bw(4, &[-3])).unwrap(), bw(3, &[-1]));
        assert_eq!(ferrari_star(&bw(3, &[1])), Err(Error::StrandMismatch(4, 3)));
    }

    #[test]
    fn section_examples() {
        assert_eq!(ferrari_section(&bw(3, &[1])).unwrap(), bw(4, &[1]));
        let w = bw(3, &[1, 2, 1]);
        assert_eq!(ferrari_star(&ferrari_section(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn table_has_known_entries() {
        let t = conjugation_table().unwrap();
        assert_eq!(t.letter(1).images()[0], fw(&[1]));
        assert_eq!(t.letter(2).images()[0], fw(&[2]));
        assert_eq!(t.entries().len(), 12);
    }

    #[test]
    fn decompose_examples() {
        let c = semidirect_decompose(&bw(4, &[1, -3])).unwrap();
        assert_eq!(c.fpart, fw(&[1]));
        assert!(braid_eq(&ferrari_section(&c.b3part).unwrap(), &BraidWord::identity(4)).unwrap());

        let c = semidirect_decompose(&bw(4, &[2])).unwrap();
        assert!(c.fpart.is_empty());
        assert_eq!(c.b3part, bw(3, &[2]));

        let c = semidirect_decompose(&bw(4, &[3])).unwrap();
        assert_eq!(c.fpart, fw(&[-1]));
        assert_eq!(c.b3part, bw(3, &[1]));
    }

    #[test]
    fn dfg_examples() {
        assert_eq!(dfg(&bw(4, &[2])).unwrap().images()[0], fw(&[2]));
        assert_eq!(dfg(&bw(4, &[1])).unwrap().images()[0], fw(&[1]));
        assert!(dfg(&BraidWord::full_twist(4)).unwrap().is_identity());
    }

    #[test]
    fn sl2_examples() {
        for s in [1, 2] {
            assert_eq!(b3_to_sl2(&bw(3, &[s])).unwrap().det(), 1.into());
        }
        let c = bw(3, &[1, 2]);
        assert!(b3_to_sl2(&c.pow(6)).unwrap().is_identity());
        assert_eq!(b3_to_sl2(&c.pow(3)).unwrap(), -Mat2::identity());
    }

    #[test]
    fn sl2_images_are_conjugate_to_classical_generators() {
        // sigma1 and sigma2 go to unipotent matrices of trace 2
        for s in [1, 2] {
            let m = b3_to_sl2(&bw(3, &[s])).unwrap();
            assert_eq!(m.trace(), 2.into());
            assert!(!m.is_identity());
        }
    }

    #[test]
    fn lift_examples() {
        let e = BraidWord::identity(3);
        let w = pullback_lift(&FreeAut::identity(2), &e).unwrap();
        assert!(braid_eq(&w, &BraidWord::identity(4)).unwrap());

        let w = pullback_lift(&FreeAut::inner(&fw(&[1])), &e).unwrap();
        assert!(braid_eq(&w, &bw(4, &[1, -3])).unwrap());

        let phi = dfg(&bw(4, &[3])).unwrap();
        let w = pullback_lift(&phi, &bw(3, &[1])).unwrap();
        assert!(braid_eq(&w, &bw(4, &[3])).unwrap());

        assert_eq!(
            pullback_lift(&FreeAut::identity(2), &bw(3, &[1])),
            Err(Error::Sl2Mismatch)
        );
    }

    #[test]
    fn check_examples() {
        for s in 1..=3 {
            assert!(pullback_check(&bw(4, &[s])).unwrap().all_pass());
        }
        let s1 = bw(4, &[1]);
        let s3 = bw(4, &[3]);
        assert!(braid_eq(&ferrari_star(&s1).unwrap(), &ferrari_star(&s3).unwrap()).unwrap());
        assert_ne!(dfg(&s1).unwrap(), dfg(&s3).unwrap());

        let z = BraidWord::full_twist(4);
        assert!(pullback_check(&z).unwrap().all_pass());
        assert!(braid_eq(&ferrari_star(&z).unwrap(), &bw(3, &[1, 2]).pow(6)).unwrap());
        assert_eq!(central_exponent(&z).unwrap(), Some(1));
    }
}

use conf4::braid::{
    artin_action, artin_action_quotient, aut_abelianize, b3_to_sl2, braid_eq, central_exponent,
    conjugation_table, dfg, embed_kernel, ferrari_section, ferrari_star, hodge_parity,
    pullback_check, pullback_lift, semidirect_decompose, BraidWord, FreeAut, FreeWord, KERNEL_X,
    KERNEL_Y,
};
use conf4::Mat2;
use proptest::prelude::*;

fn letters(max_len: usize, max_letter: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(
        (1..=max_letter, any::<bool>()).prop_map(|(s, neg)| if neg { -s } else { s }),
        0..=max_len,
    )
}

fn braid(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(max_len, strands as i64 - 1).prop_map(move |l| BraidWord::new(strands, l).unwrap())
}

fn free_word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    letters(max_len, rank as i64).prop_map(move |l| FreeWord::new(rank, l).unwrap())
}

fn bw(n: usize, l: &[i64]) -> BraidWord {
    BraidWord::new(n, l.to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn boundary_word_is_fixed(b in braid(4, 14)) {
        let boundary = FreeWord::new(4, vec![1, 2, 3, 4]).unwrap();
        prop_assert_eq!(artin_action(&b, &boundary).unwrap(), boundary.clone());
        // substituting gamma_4 = (gamma_1 gamma_2 gamma_3)^-1 reduces the image to the empty word
        let image = artin_action(&b, &boundary).unwrap();
        let projected = image.letters().iter().fold(FreeWord::identity(3), |acc, &l| {
            let piece = match l {
                4 => vec![-3, -2, -1],
                -4 => vec![1, 2, 3],
                _ => vec![l],
            };
            acc.mul(&FreeWord::new(3, piece).unwrap())
        });
        prop_assert!(projected.is_empty());
    }

    #[test]
    fn parity_is_invariant(b in braid(4, 12), w in free_word(3, 12)) {
        prop_assert_eq!(hodge_parity(&artin_action_quotient(&b, &w).unwrap()), hodge_parity(&w));
    }

    #[test]
    fn parity_is_invariant_in_full_rank(b in braid(4, 12), w in free_word(4, 12)) {
        prop_assert_eq!(hodge_parity(&artin_action(&b, &w).unwrap()), hodge_parity(&w));
    }

    #[test]
    fn ferrari_star_is_a_homomorphism(u in braid(4, 12), v in braid(4, 12)) {
        let lhs = ferrari_star(&u.mul(&v)).unwrap();
        let rhs = ferrari_star(&u).unwrap().mul(&ferrari_star(&v).unwrap());
        prop_assert!(braid_eq(&lhs, &rhs).unwrap());
    }

    #[test]
    fn ferrari_section_splits(b in braid(3, 12)) {
        prop_assert!(braid_eq(&ferrari_star(&ferrari_section(&b).unwrap()).unwrap(), &b).unwrap());
    }

    #[test]
    fn dfg_is_a_homomorphism(u in braid(4, 12), v in braid(4, 12)) {
        let lhs = dfg(&u.mul(&v)).unwrap();
        let rhs = dfg(&u).unwrap().compose(&dfg(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dfg_lands_in_orientation_preserving_automorphisms(b in braid(4, 12)) {
        prop_assert_eq!(aut_abelianize(&dfg(&b).unwrap()).unwrap().det(), 1.into());
    }

    #[test]
    fn dfg_respects_braid_equality(b in braid(4, 10)) {
        // inserting a cancelling pair and a braid relation changes the word, not the braid
        let mut l = b.letters().to_vec();
        let mid = l.len() / 2;
        l.splice(mid..mid, [2, 3, 2, -3, -2, -3]);
        let b2 = BraidWord::new(4, l).unwrap();
        prop_assert!(braid_eq(&b, &b2).unwrap());
        prop_assert_eq!(dfg(&b).unwrap(), dfg(&b2).unwrap());
    }

    #[test]
    fn square_commutes(b in braid(4, 12)) {
        let phi = dfg(&b).unwrap();
        prop_assert_eq!(b3_to_sl2(&ferrari_star(&b).unwrap()).unwrap(), aut_abelianize(&phi).unwrap());
    }

    #[test]
    fn decomposition_recomposes(b in braid(4, 14)) {
        let coord = semidirect_decompose(&b).unwrap();
        prop_assert!(braid_eq(&coord.recompose().unwrap(), &b).unwrap());
        prop_assert!(braid_eq(&coord.b3part, &ferrari_star(&b).unwrap()).unwrap());
    }

    #[test]
    fn lift_recovers_the_braid(b in braid(4, 16)) {
        let lifted = pullback_lift(&dfg(&b).unwrap(), &ferrari_star(&b).unwrap()).unwrap();
        prop_assert!(braid_eq(&lifted, &b).unwrap());
    }

    #[test]
    fn pullback_report_passes(b in braid(4, 12)) {
        let report = pullback_check(&b).unwrap();
        prop_assert!(report.all_pass(), "{:?}", report);
    }

    #[test]
    fn center_powers_act_trivially(k in -2i64..=2, b in braid(4, 8)) {
        let z = BraidWord::full_twist(4).pow(k);
        prop_assert!(dfg(&z).unwrap().is_identity());
        prop_assert_eq!(central_exponent(&z).unwrap(), Some(k));
        // conjugating a central element leaves it central
        let conj = b.mul(&z).mul(&b.inverse());
        prop_assert_eq!(central_exponent(&conj).unwrap(), Some(k));
    }

    #[test]
    fn free_aut_inverse(b in braid(4, 10)) {
        let phi = dfg(&b).unwrap();
        let inv = phi.inverse().unwrap();
        prop_assert!(phi.compose(&inv).unwrap().is_identity());
        prop_assert_eq!(inv, dfg(&b.inverse()).unwrap());
    }
}

#[test]
fn artin_relations_on_three_and_four_strands() {
    for n in [3usize, 4] {
        for i in 1..n as i64 {
            for j in i + 1..n as i64 {
                let (l, r) = if j == i + 1 {
                    (bw(n, &[i, j, i]), bw(n, &[j, i, j]))
                } else {
                    (bw(n, &[i, j]), bw(n, &[j, i]))
                };
                assert!(braid_eq(&l, &r).unwrap(), "relation ({i}, {j}) on {n} strands");
            }
        }
        for i in 1..n as i64 {
            assert!(braid_eq(&bw(n, &[i, -i]), &BraidWord::identity(n)).unwrap());
        }
    }
    assert!(!braid_eq(&bw(3, &[1, 2]), &bw(3, &[2, 1])).unwrap());
}

#[test]
fn kernel_generators_map_to_the_identity() {
    for k in [&KERNEL_X[..], &KERNEL_Y[..]] {
        let image = ferrari_star(&bw(4, k)).unwrap();
        assert!(braid_eq(&image, &BraidWord::identity(3)).unwrap());
    }
}

#[test]
fn full_twist_images() {
    let twist = BraidWord::full_twist(4);
    assert!(dfg(&twist).unwrap().is_identity());
    assert!(braid_eq(&ferrari_star(&twist).unwrap(), &bw(3, &[1, 2]).pow(6)).unwrap());
    assert_eq!(b3_to_sl2(&bw(3, &[1, 2]).pow(3)).unwrap(), -Mat2::identity());
    assert!(b3_to_sl2(&bw(3, &[1, 2]).pow(6)).unwrap().is_identity());
}

#[test]
fn conjugation_table_entries_are_sound() {
    let table = conjugation_table().unwrap();
    table.verify().unwrap();
    let entries = table.entries();
    assert_eq!(entries.len(), 12);
    for (s, k, word) in entries {
        let sigma = bw(4, &[s]);
        let g = FreeWord::generator(2, k);
        let lhs = sigma.mul(&embed_kernel(&g).unwrap()).mul(&sigma.inverse());
        assert!(
            braid_eq(&lhs, &embed_kernel(&word).unwrap()).unwrap(),
            "entry sigma_{s} on generator {k}"
        );
    }
}

#[test]
fn lift_rejects_mismatched_pairs() {
    let swap = FreeAut::new(vec![
        FreeWord::new(2, vec![2]).unwrap(),
        FreeWord::new(2, vec![-1]).unwrap(),
    ])
    .unwrap();
    assert!(pullback_lift(&swap, &BraidWord::identity(3)).is_err());
}

use proptest::prelude::*;
use spin8::rootdata::{pair, EType, RelativeDatum, WeylElement, IDENTITY};
use std::collections::HashSet;

fn random_word(etype: EType) -> impl Strategy<Value = Vec<u8>> {
    let rank = etype.rank() as u8;
    prop::collection::vec(1..=rank, 0..24)
}

fn etype_strategy() -> impl Strategy<Value = EType> {
    prop_oneof![Just(EType::Split), Just(EType::FxK), Just(EType::Cubic)]
}

fn mul_mat(a: &[[i64; 4]; 4], b: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

#[test]
fn group_orders_by_brute_force_closure() {
    for (e, n) in [(EType::Split, 192), (EType::FxK, 48), (EType::Cubic, 12)] {
        let d = RelativeDatum::get(e);
        let gens: Vec<_> = (1..=e.rank() as u8).map(|l| d.letter_matrix(l).unwrap()).collect();
        let mut seen = HashSet::from([IDENTITY]);
        let mut frontier = vec![IDENTITY];
        while let Some(m) = frontier.pop() {
            for g in &gens {
                let next = mul_mat(&m, g);
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        assert_eq!(seen.len(), n, "{e}");
        assert_eq!(d.group_order(), n, "{e}");
    }
}

#[test]
fn orbit_members_are_mutually_orthogonal() {
    for e in EType::ALL {
        let d = RelativeDatum::get(e);
        let roots = &d.absolute.positive_roots;
        let mut covered = 0;
        for r in &d.relative_positive {
            covered += r.members.len();
            for &a in &r.members {
                for &b in &r.members {
                    if a != b {
                        assert_eq!(pair(&roots[a].weight, &roots[b].simple), 0, "{e} {}", r.label());
                    }
                }
            }
        }
        assert_eq!(covered, 12, "{e}: orbits cover the absolute positive roots");
    }
}

/// Index of the relative positive root containing the absolute root with this weight,
/// or `None` when the root is negative.
fn relative_index(d: &RelativeDatum, weight: &[i64; 4]) -> Option<usize> {
    if !d.is_positive_weight(weight) {
        return None;
    }
    let abs = d.absolute.index_of(&d.root_from_weight(weight)).unwrap();
    d.relative_positive.iter().position(|r| r.members.contains(&abs))
}

fn check_inversion_union(d: &RelativeDatum, w: &WeylElement, u: &WeylElement) {
    let wu = d.mul(w, u);
    if d.length(&wu) != d.length(w) + d.length(u) {
        return;
    }
    let mut expected: Vec<usize> = d.inversion_indices(w);
    for i in d.inversion_indices(u) {
        let wt = d.absolute.positive_roots[d.relative_positive[i].rep].weight;
        let image = relative_index(d, &d.act_vec(w, &wt)).expect("w maps N(u) to positive roots");
        assert!(!expected.contains(&image), "union is not disjoint for {w}·{u}");
        expected.push(image);
    }
    expected.sort();
    let mut got = d.inversion_indices(&wu);
    got.sort();
    assert_eq!(got, expected, "N({w}·{u})");
}

#[test]
fn inversion_sets_are_multiplicative_exhaustively_in_cubic() {
    let d = RelativeDatum::get(EType::Cubic);
    for w in d.elements() {
        for u in d.elements() {
            check_inversion_union(d, w, u);
        }
    }
}

#[test]
fn coset_representatives_are_unique_minima() {
    for e in [EType::Cubic, EType::FxK] {
        let d = RelativeDatum::get(e);
        let psi = e.heisenberg_levi();
        let levi = d.subgroup(&psi).unwrap();
        let reps = d.coset_reps(&psi).unwrap();
        assert_eq!(reps.len() * levi.len(), d.group_order());
        let mut seen = HashSet::new();
        for r in &reps {
            let lengths: Vec<usize> = levi.iter().map(|u| d.length(&d.mul(u, r))).collect();
            let min = *lengths.iter().min().unwrap();
            assert_eq!(min, d.length(r), "{e} {r}");
            assert_eq!(lengths.iter().filter(|&&l| l == min).count(), 1, "{e} {r}");
            for u in &levi {
                assert!(seen.insert(d.mul(u, r).matrix), "{e}: cosets overlap");
            }
        }
    }
}

#[test]
fn words_round_trip_through_parse() {
    for e in EType::ALL {
        let d = RelativeDatum::get(e);
        for w in d.elements() {
            assert_eq!(&d.parse(&w.name()).unwrap(), w);
            assert_eq!(d.reduce(w).word.len(), d.length(w));
        }
    }
}

#[test]
fn letters_outside_the_rank_are_rejected() {
    assert!(RelativeDatum::get(EType::Cubic).parse("w3").is_err());
    assert!(RelativeDatum::get(EType::FxK).parse("w4").is_err());
    assert!(RelativeDatum::get(EType::Split).parse("w2x").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn length_equals_inversion_count(e in etype_strategy(), seed in any::<u64>()) {
        let d = RelativeDatum::get(e);
        let rank = e.rank() as u64;
        let mut x = seed;
        let word: Vec<u8> = (0..(seed % 25))
            .map(|_| {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((x >> 33) % rank + 1) as u8
            })
            .collect();
        let w = d.element(&word).unwrap();
        prop_assert_eq!(d.length(&w), d.inversion_indices(&w).len());
    }

    #[test]
    fn inversion_union_on_random_split_pairs(a in random_word(EType::Split), b in random_word(EType::Split)) {
        let d = RelativeDatum::get(EType::Split);
        check_inversion_union(d, &d.element(&a).unwrap(), &d.element(&b).unwrap());
    }

    #[test]
    fn inversion_union_on_random_fxk_pairs(a in random_word(EType::FxK), b in random_word(EType::FxK)) {
        let d = RelativeDatum::get(EType::FxK);
        check_inversion_union(d, &d.element(&a).unwrap(), &d.element(&b).unwrap());
    }

    #[test]
    fn inverse_and_multiplication_agree(a in random_word(EType::Split)) {
        let d = RelativeDatum::get(EType::Split);
        let w = d.element(&a).unwrap();
        prop_assert_eq!(d.mul(&w, &d.inverse(&w)).matrix, IDENTITY);
    }
}

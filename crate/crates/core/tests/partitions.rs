use std::collections::HashSet;

use ncrook_core::{
    atomic_factor, coarser_eq, enumerate_partitions, from_rgf, is_atomic, is_unsplitable, slash,
    split, to_rgf, unsplitable_factor, Rgf, SetPartition,
};
use proptest::prelude::*;

/// Bell numbers from the Bell triangle.
fn bell_triangle(max_n: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    for _ in 1..=max_n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

/// All words satisfying the growth conditions, by filtering `[n]^n`.
fn rgf_words_brute(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut word = vec![1; n];
    loop {
        if Rgf::new(word.clone()).is_ok() {
            out.push(word.clone());
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if word[pos] < n {
                word[pos] += 1;
                break;
            }
            word[pos] = 1;
        }
    }
}

fn standard_form_ok(p: &SetPartition) -> bool {
    let blocks = p.blocks();
    let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
    seen.sort_unstable();
    blocks
        .iter()
        .all(|b| !b.is_empty() && b.windows(2).all(|w| w[0] < w[1]))
        && blocks.windows(2).all(|w| w[0][0] < w[1][0])
        && seen == (1..=p.n()).collect::<Vec<_>>()
}

#[test]
fn enumeration_matches_bell_numbers() {
    let bells = bell_triangle(8);
    for (n, &bell) in bells.iter().enumerate() {
        let all = enumerate_partitions(n);
        assert_eq!(all.len() as u64, bell, "n={n}");
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(standard_form_ok));
        assert!(
            all.windows(2).all(|w| w[0].rgf() < w[1].rgf()),
            "RGF-lex order"
        );
    }
}

#[test]
fn enumeration_agrees_with_filtered_words() {
    for n in 0..=6 {
        let words: Vec<Vec<usize>> = enumerate_partitions(n)
            .iter()
            .map(|p| to_rgf(p).into_inner())
            .collect();
        assert_eq!(words, rgf_words_brute(n), "n={n}");
    }
}

#[test]
fn rgf_round_trips() {
    for n in 0..=8 {
        for p in enumerate_partitions(n) {
            assert_eq!(from_rgf(&to_rgf(&p)), p);
            let r = to_rgf(&p);
            assert_eq!(to_rgf(&from_rgf(&r)), r);
        }
    }
}

#[test]
fn products_are_associative_with_identity() {
    let trivial = SetPartition::trivial();
    let by_size: Vec<_> = (0..=6).map(enumerate_partitions).collect();
    for a in 0..=6 {
        for b in 0..=6 - a {
            for c in 0..=6 - a - b {
                for x in &by_size[a] {
                    for y in &by_size[b] {
                        for z in &by_size[c] {
                            assert_eq!(slash(&slash(x, y), z), slash(x, &slash(y, z)));
                            assert_eq!(split(&split(x, y), z), split(x, &split(y, z)));
                        }
                    }
                }
            }
        }
    }
    for p in by_size.iter().flatten() {
        assert_eq!(slash(&trivial, p), *p);
        assert_eq!(slash(p, &trivial), *p);
        assert_eq!(split(&trivial, p), *p);
        assert_eq!(split(p, &trivial), *p);
    }
}

/// Decomposability by search over all pairs of nontrivial operands.
fn decomposable(p: &SetPartition, op: fn(&SetPartition, &SetPartition) -> SetPartition) -> bool {
    (1..p.n()).any(|m| {
        enumerate_partitions(m).iter().any(|x| {
            enumerate_partitions(p.n() - m)
                .iter()
                .any(|y| op(x, y) == *p)
        })
    })
}

#[test]
fn predicates_match_definitions() {
    for n in 1..=6 {
        for p in enumerate_partitions(n) {
            assert_eq!(is_atomic(&p), !decomposable(&p, slash), "{p}");
            assert_eq!(is_unsplitable(&p), !decomposable(&p, split), "{p}");
        }
    }
}

#[test]
fn factorizations_reconstruct() {
    for n in 1..=8 {
        for p in enumerate_partitions(n) {
            let atoms = atomic_factor(&p).unwrap();
            assert!(atoms.iter().all(is_atomic));
            assert_eq!(is_atomic(&p), atoms.len() == 1);
            let folded = atoms
                .iter()
                .fold(SetPartition::trivial(), |acc, f| slash(&acc, f));
            assert_eq!(folded, p);

            let pieces = unsplitable_factor(&p).unwrap();
            assert!(pieces.iter().all(is_unsplitable));
            assert_eq!(is_unsplitable(&p), pieces.len() == 1);
            let folded = pieces
                .iter()
                .fold(SetPartition::trivial(), |acc, f| split(&acc, f));
            assert_eq!(folded, p);
        }
    }
}

#[test]
fn refinement_is_a_bounded_partial_order() {
    for n in 0..=6 {
        let all = enumerate_partitions(n);
        let le = |a: &SetPartition, b: &SetPartition| coarser_eq(b, a).unwrap();
        let bottom = SetPartition::singletons(n);
        let top = SetPartition::one_block(n);
        for x in &all {
            assert!(le(x, x));
            assert!(le(&bottom, x) && le(x, &top));
        }
        for x in &all {
            for y in &all {
                if le(x, y) && le(y, x) {
                    assert_eq!(x, y);
                }
            }
        }
        if n <= 5 {
            for x in &all {
                for y in all.iter().filter(|y| le(x, y)) {
                    for z in all.iter().filter(|z| le(y, z)) {
                        assert!(le(x, z));
                    }
                }
            }
        }
    }
}

#[test]
fn atomic_and_unsplitable_counts_agree() {
    for n in 1..=9 {
        let all = enumerate_partitions(n);
        let atomic = all.iter().filter(|p| is_atomic(p)).count();
        let unsplitable = all.iter().filter(|p| is_unsplitable(p)).count();
        assert_eq!(atomic, unsplitable, "n={n}");
    }
}

fn rgf_word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<usize>(), 0..16).prop_map(|raw| {
        let mut max = 0;
        raw.into_iter()
            .map(|r| {
                let a = 1 + r % (max + 1);
                max = max.max(a);
                a
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn text_forms_round_trip(word in rgf_word()) {
        let p = from_rgf(&Rgf::new(word).unwrap());
        let text = p.to_string();
        prop_assert_eq!(text.parse::<SetPartition>().unwrap(), p.clone());
        let rgf_text = to_rgf(&p).to_string();
        prop_assert_eq!(rgf_text.parse::<Rgf>().unwrap(), to_rgf(&p));
    }

    #[test]
    fn split_is_rgf_concatenation(a in rgf_word(), b in rgf_word()) {
        let x = from_rgf(&Rgf::new(a.clone()).unwrap());
        let y = from_rgf(&Rgf::new(b.clone()).unwrap());
        let mut word = a;
        word.extend(b);
        prop_assert_eq!(to_rgf(&split(&x, &y)).into_inner(), word);
    }

    #[test]
    fn slash_preserves_blocks(a in rgf_word(), b in rgf_word()) {
        let x = from_rgf(&Rgf::new(a).unwrap());
        let y = from_rgf(&Rgf::new(b).unwrap());
        let s = slash(&x, &y);
        prop_assert_eq!(s.n(), x.n() + y.n());
        prop_assert_eq!(s.num_blocks(), x.num_blocks() + y.num_blocks());
        prop_assert_eq!(&s.blocks()[..x.num_blocks()], x.blocks());
        if !x.is_trivial() && !y.is_trivial() {
            prop_assert!(!is_atomic(&s));
        }
    }
}

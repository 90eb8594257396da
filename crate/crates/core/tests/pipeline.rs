use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lrf_core::coloring::{generation_coloring, verify_lrf, Coloring};
use lrf_core::pigeonhole::{
    extract_binary_subtree, reflect_word, refute, ExtractionOutcome, RefuteOutcome,
};
use lrf_core::random::{random_coloring, random_tree};
use lrf_core::search::{
    brute_force_census, search_lrf_coloring, SearchOutcome, DEFAULT_NODE_LIMIT,
};
use lrf_core::trees::{build_tyler, RootedTree, TylerSpec, DEFAULT_SIZE_GUARD};
use lrf_core::words::{contains_long_palindrome, Word};

fn tyler(n: usize) -> RootedTree {
    build_tyler(&TylerSpec::classic(n).unwrap(), DEFAULT_SIZE_GUARD).unwrap()
}

#[test]
fn t2_extraction_exhaustive() {
    // All 2^21 colorings of the classic height-2 Tyler tree.
    let t2 = tyler(2);
    let failures: usize = (0u32..1 << 21)
        .filter(|bits| {
            let c = Coloring::binary((0..21).map(|i| ((bits >> i) & 1) as u8).collect()).unwrap();
            match extract_binary_subtree(&t2, &c).unwrap() {
                ExtractionOutcome::Success(e) => e.reverify(&t2, &c).is_err(),
                ExtractionOutcome::Failure(_) => true,
            }
        })
        .count();
    assert_eq!(failures, 0);
}

#[test]
fn generation_word_reads_along_every_embedded_branch() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let t3 = tyler(3);
    for _ in 0..50 {
        let c = random_coloring(&mut rng, t3.len(), 2);
        let ExtractionOutcome::Success(e) = extract_binary_subtree(&t3, &c).unwrap() else {
            panic!("classic Tyler trees always extract");
        };
        for address in ["LLL", "LRL", "RRR", "RLR"] {
            let leaf = e.host_vertex(e.position(address).unwrap());
            let mut path = t3.path_between(t3.root(), leaf).unwrap();
            path.pop();
            let word: Vec<u8> = path.iter().map(|&v| c.color(v)).collect();
            assert_eq!(word, e.generation_word().letters());
            assert_eq!(c.color(leaf), e.leaf_color());
        }
        assert_eq!(e.left_spine().len(), 4);
    }
}

#[test]
fn every_length9_word_reflects_into_a_long_square() {
    for bits in 0..512 {
        let b = Word::from_bits(bits, 9);
        let r = reflect_word(&b).unwrap();
        let m = r.palindrome.length - 1;
        assert!(m == 3 || m == 4);
        assert_eq!(r.reflected.len(), 2 * m + 1);
        assert_eq!(r.square.offset, 0);
        assert!(r.square.period == 3 || r.square.period == 4);
        assert!(r.square.holds_in(r.reflected.letters()));
        assert!(r.shape.matches(r.reflected.letters()), "{b}: {r}");
        // Independent reconstruction of the reflected word.
        let j = r.palindrome.offset;
        let p = &b.letters()[j..=j + m];
        let mut expected: Vec<u8> = p.iter().rev().copied().collect();
        expected.extend_from_slice(&p[1..]);
        assert_eq!(r.reflected.letters(), &expected[..]);
    }
}

#[test]
fn longer_words_reflect_too() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let len = rng.gen_range(9..40);
        let b = Word::new((0..len).map(|_| rng.gen_range(0..2)).collect()).unwrap();
        let r = reflect_word(&b).unwrap();
        assert_eq!(Some(r.palindrome), contains_long_palindrome(b.letters()));
        assert!(r.square.holds_in(r.reflected.letters()));
    }
}

#[test]
fn ternary_height9_is_refuted() {
    let host = build_tyler(&TylerSpec::complete(3, 9).unwrap(), DEFAULT_SIZE_GUARD).unwrap();
    assert_eq!(host.len(), 29524);
    let a: Word = "0001011101".parse().unwrap();
    let c = generation_coloring(&host, &a).unwrap();
    let RefuteOutcome::Refuted {
        violation,
        embedding,
        reflection,
    } = refute(&host, &c).unwrap()
    else {
        panic!("ternary hosts extract");
    };
    assert_eq!(embedding.generation_word().len(), 9);
    assert!(violation.path.len() == 7 || violation.path.len() == 9);
    assert_eq!(violation.word, reflection.reflected.letters());
    violation.reverify(&host, &c).unwrap();
}

#[test]
fn refute_on_random_colorings_of_a_bushy_host() {
    // Generation colorings with one root subtree scrambled: two clean
    // siblings remain, so extraction and refutation still go through.
    let host = build_tyler(&TylerSpec::complete(3, 9).unwrap(), DEFAULT_SIZE_GUARD).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..5 {
        let a = Word::new((0..10).map(|_| rng.gen_range(0..2)).collect()).unwrap();
        let mut colors = generation_coloring(&host, &a).unwrap().colors().to_vec();
        // Recolor the third child subtree of the root arbitrarily.
        let third = host.children(0)[2];
        let mut stack = vec![third];
        while let Some(v) = stack.pop() {
            colors[v] = rng.gen_range(0..2);
            stack.extend_from_slice(host.children(v));
        }
        let c = Coloring::binary(colors).unwrap();
        match refute(&host, &c).unwrap() {
            RefuteOutcome::Refuted { violation, .. } => violation.reverify(&host, &c).unwrap(),
            RefuteOutcome::NotRefuted(r) => panic!("{r}"),
        }
    }
}

#[test]
fn search_agrees_with_census_on_small_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..60 {
        let n = rng.gen_range(1..=12);
        let tree = random_tree(&mut rng, n);
        let census = brute_force_census(&tree, 2).unwrap();
        match search_lrf_coloring(&tree, 2, DEFAULT_NODE_LIMIT).unwrap() {
            SearchOutcome::Found { coloring, .. } => {
                assert!(census > 0);
                assert!(verify_lrf(&tree, &coloring).unwrap().is_valid());
            }
            SearchOutcome::Exhausted { .. } => assert_eq!(census, 0),
            SearchOutcome::LimitReached { .. } => panic!("limit on a tiny tree"),
        }
    }
}

#[test]
fn three_colors_are_searchable() {
    let tree = tyler(2);
    let SearchOutcome::Found { coloring, .. } =
        search_lrf_coloring(&tree, 3, DEFAULT_NODE_LIMIT).unwrap()
    else {
        panic!("T_2 has radius 2");
    };
    assert_eq!(coloring.k(), 3);
    assert!(verify_lrf(&tree, &coloring).unwrap().is_valid());
}

#[test]
fn tyler_generation_sizes_match_fanout_products() {
    for n in 0..=4 {
        let spec = TylerSpec::classic(n).unwrap();
        let t = build_tyler(&spec, DEFAULT_SIZE_GUARD).unwrap();
        let sizes: Vec<_> = t
            .generations()
            .iter()
            .map(|g| num_bigint_len(g.len()))
            .collect();
        assert_eq!(sizes, spec.generation_sizes());
        for v in t.vertices() {
            if t.depth(v) < n {
                assert_eq!(t.children(v).len() as u64, spec.fanout()[t.depth(v)]);
            }
        }
    }
}

fn num_bigint_len(len: usize) -> num_bigint::BigUint {
    num_bigint::BigUint::from(len)
}

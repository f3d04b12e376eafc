use proptest::prelude::*;

use prees::fsa::{irreducible_acceptor, not_identity_acceptor, strip_reduction_pair_recognizer, Alphabet, Dfa, Nfa};
use prees::{
    combing_acceptor, geodesic_acceptor, is_geodesic_word, is_irreducible, load_pree, strip_reduce_once,
    CombingPredicateTable, CombingReading, Elem, Pree, Word, WordProblem,
};

fn fixture(name: &str) -> Pree {
    let path = format!("{}/../../fixtures/{name}.pree", env!("CARGO_MANIFEST_DIR"));
    load_pree(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn symbols(w: &[Elem]) -> Vec<u32> {
    w.iter().map(|e| e.index() as u32).collect()
}

fn lattice(p: &Pree, w: &[Elem]) -> (i64, i64) {
    w.iter().fold((0, 0), |(a, b), &e| {
        let name = p.name(e).trim_matches(|c| c == '(' || c == ')');
        let (x, y) = name.split_once(',').unwrap();
        (a + x.parse::<i64>().unwrap(), b + y.parse::<i64>().unwrap())
    })
}

fn hex((x, y): (i64, i64)) -> usize {
    (if x * y >= 0 { x.abs().max(y.abs()) } else { x.abs() + y.abs() }) as usize
}

fn words_up_to(n: usize, len: usize) -> impl Iterator<Item = Vec<Elem>> {
    (1..=len).flat_map(move |l| {
        (0..n.pow(l as u32)).map(move |mut i| {
            (0..l)
                .map(|_| {
                    let e = Elem((i % n) as u16);
                    i /= n;
                    e
                })
                .collect()
        })
    })
}

#[test]
fn acceptors_match_direct_predicates_up_to_length_six() {
    let p = fixture("zxz");
    let irr = irreducible_acceptor(&p);
    let geo = geodesic_acceptor(&p);
    for w in words_up_to(p.len(), 6) {
        let s = symbols(&w);
        assert_eq!(irr.accepts(&s), is_irreducible(&p, &w), "{w:?}");
        assert_eq!(geo.accepts(&s), is_geodesic_word(&p, &Word(w.clone())), "{w:?}");
    }
}

#[test]
fn combed_words_are_geodesic_with_geodesic_prefixes() {
    let p = fixture("zxz");
    let wp = WordProblem::new(&p);
    for reading in [CombingReading::Forward, CombingReading::Literal] {
        let table = CombingPredicateTable::build(&wp, reading);
        let l = combing_acceptor(&p, &table);
        let geo = geodesic_acceptor(&p);
        for s in l.enumerate(6) {
            assert!(geo.accepts(&s));
            let w: Vec<Elem> = s.iter().map(|&x| Elem(x as u16)).collect();
            assert!(table.word_passes(&w));
            for k in 1..=w.len() {
                assert_eq!(hex(lattice(&p, &w[..k])), k, "{w:?}");
            }
        }
    }
}

#[test]
fn full_table_languages_are_single_letters() {
    for name in ["s3", "z6", "q8"] {
        let p = fixture(name);
        let wp = WordProblem::new(&p);
        let table = CombingPredicateTable::build(&wp, CombingReading::Forward);
        let expected: Vec<Vec<u32>> =
            p.elements().filter(|&e| e != p.identity()).map(|e| vec![e.index() as u32]).collect();
        assert_eq!(geodesic_acceptor(&p).enumerate(4), expected, "{name}");
        assert_eq!(combing_acceptor(&p, &table).enumerate(4), expected, "{name}");
    }
}

#[test]
fn minimized_geodesic_acceptor_is_canonical() {
    let p = fixture("zxz");
    // Same language by a different route: complement the strip projection
    // first, then intersect in the other order.
    let strips = strip_reduction_pair_recognizer(&p).project_first().unwrap().determinize();
    let no_strip = strips.complete().complement().unwrap();
    let other = not_identity_acceptor(&p)
        .intersect(&no_strip)
        .unwrap()
        .intersect(&irreducible_acceptor(&p))
        .unwrap()
        .minimize();
    assert_eq!(other, geodesic_acceptor(&p));
}

#[test]
fn strip_projection_matches_strip_search() {
    let p = fixture("zxz");
    let strips = strip_reduction_pair_recognizer(&p).project_first().unwrap().determinize();
    for w in words_up_to(p.len(), 5) {
        let found = strip_reduce_once(&p, &Word(w.clone())).is_some();
        assert_eq!(strips.accepts(&symbols(&w)), found, "{w:?}");
    }
}

fn random_dfa(seed: &[(u8, u8, u8)], accepting: &[bool]) -> Dfa {
    let mut n = Nfa::new(Alphabet::Letters(2));
    for &a in accepting {
        n.add_state(a);
    }
    n.set_initial(0);
    let k = accepting.len() as u8;
    for &(q, s, t) in seed {
        n.add_transition((q % k) as u32, (s % 2) as u32, (t % k) as u32);
    }
    n.determinize()
}

proptest! {
    #[test]
    fn geodesic_acceptor_matches_lattice_metric(w in proptest::collection::vec(0u16..7, 1..=9)) {
        let p = fixture("zxz");
        let w: Vec<Elem> = w.into_iter().map(Elem).collect();
        let accepted = geodesic_acceptor(&p).accepts(&symbols(&w));
        prop_assert_eq!(accepted, hex(lattice(&p, &w)) == w.len());
    }

    #[test]
    fn boolean_operations_match_membership(
        a in proptest::collection::vec((0u8..6, 0u8..2, 0u8..6), 0..20),
        fa in proptest::collection::vec(any::<bool>(), 1..6),
        b in proptest::collection::vec((0u8..6, 0u8..2, 0u8..6), 0..20),
        fb in proptest::collection::vec(any::<bool>(), 1..6),
    ) {
        let (x, y) = (random_dfa(&a, &fa), random_dfa(&b, &fb));
        let and = x.intersect(&y).unwrap();
        let or = x.union(&y).unwrap();
        let not = x.complete().complement().unwrap();
        let twice = not.complement().unwrap();
        prop_assert!(x.intersect(&not).unwrap().is_empty());
        for len in 0..=8usize {
            for bits in 0..(1u32 << len) {
                let w: Vec<u32> = (0..len).map(|i| (bits >> i) & 1).collect();
                let (in_x, in_y) = (x.accepts(&w), y.accepts(&w));
                prop_assert_eq!(and.accepts(&w), in_x && in_y);
                prop_assert_eq!(or.accepts(&w), in_x || in_y);
                prop_assert_eq!(not.accepts(&w), !in_x);
                prop_assert_eq!(twice.accepts(&w), in_x);
                prop_assert_eq!(x.minimize().accepts(&w), in_x);
            }
        }
    }
}

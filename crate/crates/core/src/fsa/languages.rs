//! The regular languages attached to a pree: irreducible words, single
//! strip reductions as padded pairs, strongly irreducible (geodesic) words
//! and the combing language.

use crate::fsa::{Alphabet, Dfa, Nfa, Symbol};
use crate::group::WordProblem;
use crate::pree::{Elem, Pree};

fn letters(p: &Pree) -> Alphabet {
    Alphabet::Letters(p.len())
}

/// Nonempty words in which no two successive letters have a defined
/// product. State `0` is the start; state `1 + a` remembers the last letter.
pub fn irreducible_acceptor(p: &Pree) -> Dfa {
    let mut d = Dfa::empty(letters(p));
    for _ in p.elements() {
        d.add_state(true);
    }
    for a in p.elements() {
        d.set(0, a.0 as Symbol, 1 + a.0 as u32);
        for b in p.elements() {
            if !p.is_defined(a, b) {
                d.set(1 + a.0 as u32, b.0 as Symbol, 1 + b.0 as u32);
            }
        }
    }
    d
}

/// Every word except the one-letter word `1` (the empty word included).
pub fn not_identity_acceptor(p: &Pree) -> Dfa {
    let mut d = Dfa::empty(letters(p));
    d.set_accepting(0, true);
    let just_one = d.add_state(false);
    let other = d.add_state(true);
    for a in p.elements() {
        let s = a.0 as Symbol;
        d.set(0, s, if a == p.identity() { just_one } else { other });
        d.set(just_one, s, other);
        d.set(other, s, other);
    }
    d
}

/// Accepts `(w, v$)` exactly when `v` comes from `w` by one strip
/// reduction. The strip phase carries the current diagonal as state; after
/// the strip, `v` runs one letter ahead of `w`, so the state remembers the
/// letter `w` must read next.
pub fn strip_reduction_pair_recognizer(p: &Pree) -> Nfa {
    let n = p.len();
    let alpha = Alphabet::Pairs(n);
    let mut m = Nfa::new(alpha);
    let copy = m.add_state(false);
    let diag: Vec<u32> = (0..n).map(|_| m.add_state(false)).collect();
    let shift: Vec<u32> = (0..n).map(|_| m.add_state(false)).collect();
    let done = m.add_state(true);
    m.set_initial(copy);
    let sym = |a: Elem, c: Option<Elem>| alpha.pair(Some(a.index()), c.map(Elem::index));
    for a in p.elements() {
        m.add_transition(copy, sym(a, Some(a)), copy);
        for c in p.elements() {
            // c_1 = a_1 d_1
            if let Some(d) = p.product(p.inverse(a), c) {
                m.add_transition(copy, sym(a, Some(c)), diag[d.index()]);
            }
        }
    }
    for d in p.elements() {
        for a in p.elements() {
            let Some(g) = p.product(p.inverse(a), d) else { continue };
            for c in p.elements() {
                // Middle step d' = g c, or the last step whose closing
                // letter a_n = g c is owed by w.
                if let Some(x) = p.product(g, c) {
                    m.add_transition(diag[d.index()], sym(a, Some(c)), diag[x.index()]);
                    m.add_transition(diag[d.index()], sym(a, Some(c)), shift[x.index()]);
                }
            }
        }
    }
    for x in p.elements() {
        for y in p.elements() {
            m.add_transition(shift[x.index()], sym(x, Some(y)), shift[y.index()]);
        }
        m.add_transition(shift[x.index()], sym(x, None), done);
    }
    m
}

/// Strongly irreducible words other than `1`: irreducible, no strip
/// reduction applies, and not the word `1`.
pub fn geodesic_acceptor(p: &Pree) -> Dfa {
    let reducible_by_strip = strip_reduction_pair_recognizer(p)
        .project_first()
        .expect("pair alphabet")
        .determinize();
    let no_strip = reducible_by_strip.complete().complement().expect("complete");
    irreducible_acceptor(p)
        .intersect(&no_strip)
        .and_then(|d| d.intersect(&not_identity_acceptor(p)))
        .expect("same alphabet")
        .minimize()
}

/// Which product continues the witness triangle `(a, b, c)` into the next
/// letter `z` of the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CombingReading {
    /// `c⁻¹ · z` is defined.
    Literal,
    /// `c · z` is defined.
    Forward,
}

impl CombingReading {
    pub fn name(self) -> &'static str {
        match self {
            CombingReading::Literal => "literal",
            CombingReading::Forward => "forward",
        }
    }
}

/// `bad(x, y, z)` holds when some triple `(a, b, c)` has `abc = xy` in
/// `U(P)`, `bc` undefined, and `c` continuing into `z` per the reading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombingPredicateTable {
    n: usize,
    reading: CombingReading,
    bad: Vec<bool>,
}

impl CombingPredicateTable {
    pub fn build(wp: &WordProblem, reading: CombingReading) -> Self {
        let p = wp.pree();
        let n = p.len();
        let ab = wp.abelian();
        // Triples with bc undefined, grouped by their abelian image.
        let mut triples: Vec<(Vec<i64>, [Elem; 3])> = Vec::new();
        for a in p.elements() {
            for b in p.elements() {
                for c in p.elements() {
                    if !p.is_defined(b, c) {
                        triples.push((ab.image(&[a, b, c]), [a, b, c]));
                    }
                }
            }
        }
        let mut bad = vec![false; n * n * n];
        for x in p.elements() {
            for y in p.elements() {
                let key = ab.image(&[x, y]);
                // c values admitting a witness for this (x, y).
                let mut cs = vec![false; n];
                for (k, [a, b, c]) in &triples {
                    if cs[c.index()] || *k != key {
                        continue;
                    }
                    if wp.equal(&[*a, *b, *c], &[x, y]) == Some(true) {
                        cs[c.index()] = true;
                    }
                }
                for c in p.elements().filter(|c| cs[c.index()]) {
                    let cont = match reading {
                        CombingReading::Literal => p.inverse(c),
                        CombingReading::Forward => c,
                    };
                    for z in p.elements() {
                        if p.is_defined(cont, z) {
                            bad[(x.index() * n + y.index()) * n + z.index()] = true;
                        }
                    }
                }
            }
        }
        CombingPredicateTable { n, reading, bad }
    }

    pub fn reading(&self) -> CombingReading {
        self.reading
    }

    pub fn bad(&self, x: Elem, y: Elem, z: Elem) -> bool {
        self.bad[(x.index() * self.n + y.index()) * self.n + z.index()]
    }

    pub fn count(&self) -> usize {
        self.bad.iter().filter(|&&b| b).count()
    }

    /// Direct check of the window condition at odd (1-based) block starts.
    pub fn word_passes(&self, w: &[Elem]) -> bool {
        (0..w.len().saturating_sub(2))
            .step_by(2)
            .all(|j| !self.bad(w[j], w[j + 1], w[j + 2]))
    }
}

/// Rejects words with `bad(a_j, a_{j+1}, a_{j+2})` at some odd block start
/// `j`, counting from 1. State layout: start, then one letter read, then
/// (parity of letters read, last two letters).
pub fn odd_window_checker(p: &Pree, table: &CombingPredicateTable) -> Dfa {
    let n = p.len();
    let mut d = Dfa::empty(letters(p));
    d.set_accepting(0, true);
    let single: Vec<u32> = (0..n).map(|_| d.add_state(true)).collect();
    // pair[parity][x][y]; parity = number of letters read mod 2.
    let pair: Vec<Vec<Vec<u32>>> = (0..2)
        .map(|_| (0..n).map(|_| (0..n).map(|_| d.add_state(true)).collect()).collect())
        .collect();
    for x in p.elements() {
        d.set(0, x.0 as Symbol, single[x.index()]);
        for y in p.elements() {
            d.set(single[x.index()], y.0 as Symbol, pair[0][x.index()][y.index()]);
            for parity in 0..2 {
                for z in p.elements() {
                    // Reading letter number 2k+1 when parity is 0 closes a
                    // window that starts at an odd position.
                    if parity == 0 && table.bad(x, y, z) {
                        continue;
                    }
                    d.set(
                        pair[parity][x.index()][y.index()],
                        z.0 as Symbol,
                        pair[1 - parity][y.index()][z.index()],
                    );
                }
            }
        }
    }
    d
}

/// The combing language: geodesic words passing the odd window check.
pub fn combing_acceptor(p: &Pree, table: &CombingPredicateTable) -> Dfa {
    geodesic_acceptor(p)
        .intersect(&odd_window_checker(p, table))
        .expect("same alphabet")
        .minimize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pree::load_pree;
    use crate::word::{is_geodesic_word, is_irreducible, parse_word, strip_reduce_once, Word};

    fn zxz() -> Pree {
        load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap()
    }

    fn syms(w: &[Elem]) -> Vec<Symbol> {
        w.iter().map(|e| e.0 as Symbol).collect()
    }

    fn all_words(n: usize, max_len: usize) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for a in 0..n {
                    let mut v: Vec<Elem> = w.clone();
                    v.push(Elem(a as u16));
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn irreducible_acceptor_matches_predicate() {
        let p = zxz();
        let d = irreducible_acceptor(&p);
        for w in all_words(p.len(), 4) {
            assert_eq!(d.accepts(&syms(&w)), !w.is_empty() && is_irreducible(&p, &w));
        }
    }

    #[test]
    fn pair_recognizer_accepts_strip_example() {
        let p = zxz();
        let m = strip_reduction_pair_recognizer(&p);
        let alpha = m.alphabet();
        let w = parse_word(&p, "(0,1) (1,1) (1,0)").unwrap();
        let v = parse_word(&p, "(1,1) (1,1)").unwrap();
        let pairs = |w: &Word, v: &Word| -> Vec<Symbol> {
            (0..w.len())
                .map(|i| alpha.pair(Some(w[i].index()), v.get(i).map(|e| e.index())))
                .collect()
        };
        assert!(m.accepts(&pairs(&w, &v)));
        let short = parse_word(&p, "(1,1)").unwrap();
        assert!(!m.accepts(&pairs(&w, &short)));
        let g = parse_word(&p, "(1,1) (1,1) (0,1)").unwrap();
        for a in p.elements() {
            for b in p.elements() {
                assert!(!m.accepts(&pairs(&g, &Word(vec![a, b]))));
            }
        }
    }

    #[test]
    fn projection_matches_strip_search() {
        let p = zxz();
        let d = strip_reduction_pair_recognizer(&p).project_first().unwrap().determinize();
        for w in all_words(p.len(), 4) {
            let direct = strip_reduce_once(&p, &Word(w.clone())).is_some();
            assert_eq!(d.accepts(&syms(&w)), direct, "{w:?}");
        }
    }

    #[test]
    fn geodesic_acceptor_matches_predicate() {
        let p = zxz();
        let d = geodesic_acceptor(&p);
        for w in all_words(p.len(), 4) {
            let direct = !w.is_empty() && is_geodesic_word(&p, &Word(w.clone()));
            assert_eq!(d.accepts(&syms(&w)), direct, "{w:?}");
        }
    }

    #[test]
    fn full_table_geodesics_are_single_letters() {
        let p = load_pree(include_str!("../../../../fixtures/s3.pree")).unwrap();
        let d = geodesic_acceptor(&p);
        let words = d.enumerate(4);
        assert_eq!(words.len(), 5);
        assert!(words.iter().all(|w| w.len() == 1));
    }

    #[test]
    fn window_checker_matches_direct_check() {
        let p = zxz();
        let wp = WordProblem::new(&p);
        for reading in [CombingReading::Literal, CombingReading::Forward] {
            let t = CombingPredicateTable::build(&wp, reading);
            let d = odd_window_checker(&p, &t);
            for w in all_words(p.len(), 5) {
                assert_eq!(d.accepts(&syms(&w)), t.word_passes(&w));
            }
        }
    }
}

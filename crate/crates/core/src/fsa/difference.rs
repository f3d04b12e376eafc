//! Word difference machines: synchronous two-tape automata reading padded
//! pairs `(u$*, v$*)` of language words while tracking `g_i⁻¹ h_i` in the
//! ball of radius `K`.

use std::collections::{HashMap, VecDeque};

use crate::fsa::{Alphabet, Dfa, Symbol};
use crate::group::ball::CayleyBall;
use crate::group::fellow::{fellow_traveler_check, PairWitness};
use crate::group::WordProblem;
use crate::pree::Elem;
use crate::word::Word;

/// A pair of language words whose difference leaves the radius-`K` ball.
pub type FailureWitness = PairWitness;

#[derive(Debug, Clone)]
pub struct WordDifferenceMachine {
    pub automaton: Dfa,
    /// Representatives of the differences used as states, indexed by the
    /// difference ids appearing in `state_differences`.
    pub differences: Vec<Word>,
    pub state_differences: Vec<u32>,
    /// Largest difference length on a pair explored up to the radius.
    pub max_observed: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Tape {
    state: u32,
    done: bool,
}

/// Explores all pairs of `language` words up to length `r` whose endpoints
/// are at most one apart and fails with the first pair whose difference
/// exceeds `k`. Otherwise builds the machine accepting pairs of language
/// words with all differences in the `k`-ball and endpoint difference at
/// most one.
pub fn word_difference_machine(
    wp: &WordProblem,
    language: &Dfa,
    k: usize,
    r: usize,
) -> Result<WordDifferenceMachine, FailureWitness> {
    let scan = fellow_traveler_check(wp, language, r, k);
    if let Some(w) = scan.first_violation {
        return Err(w);
    }
    let p = wp.pree();
    let n = p.len();
    let ball = CayleyBall::build(wp, k + 1, usize::MAX).expect("uncapped");
    let inner: Vec<u32> = (0..ball.len() as u32).filter(|&e| ball.distance(e) <= k).collect();
    let slot: HashMap<u32, usize> = inner.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    // step[d][x][y] = x⁻¹ · d · y within the k-ball, x and y possibly `$`.
    let letters: Vec<Option<Elem>> = p.elements().map(Some).chain([None]).collect();
    let mut step = vec![None; inner.len() * (n + 1) * (n + 1)];
    for (di, &d) in inner.iter().enumerate() {
        for (xi, x) in letters.iter().enumerate() {
            for (yi, y) in letters.iter().enumerate() {
                let mut w: Vec<Elem> = x.iter().map(|&x| p.inverse(x)).collect();
                w.extend_from_slice(ball.representative(d));
                w.extend(y.iter().copied());
                step[(di * (n + 1) + xi) * (n + 1) + yi] = ball
                    .locate(wp, &w)
                    .and_then(|e| slot.get(&e).copied());
            }
        }
    }

    let alpha = Alphabet::Pairs(n);
    let mut dfa = Dfa::empty(alpha);
    let mut ids: HashMap<(Tape, Tape, usize), u32> = HashMap::new();
    let mut state_differences = Vec::new();
    let start_tape = Tape {
        state: language.initial(),
        done: false,
    };
    let identity_slot = slot[&0];
    let accepting = |u: Tape, v: Tape, d: usize| {
        let ends = |t: Tape| t.done || language.is_accepting(t.state);
        ends(u) && ends(v) && ball.distance(inner[d]) <= 1
    };
    let start = (start_tape, start_tape, identity_slot);
    dfa.set_accepting(0, accepting(start.0, start.1, start.2));
    ids.insert(start, 0);
    state_differences.push(identity_slot as u32);
    let mut queue = VecDeque::from([start]);
    let advance = |t: Tape, x: Option<usize>| -> Option<Tape> {
        match (t.done, x) {
            (true, None) => Some(t),
            (true, Some(_)) => None,
            (false, None) => language.is_accepting(t.state).then_some(Tape { state: t.state, done: true }),
            (false, Some(a)) => language.step(t.state, a as Symbol).map(|s| Tape { state: s, done: false }),
        }
    };
    while let Some((u, v, d)) = queue.pop_front() {
        let from = ids[&(u, v, d)];
        for xi in 0..=n {
            for yi in 0..=n {
                if xi == n && yi == n {
                    continue;
                }
                let (x, y) = ((xi < n).then_some(xi), (yi < n).then_some(yi));
                let (Some(u2), Some(v2)) = (advance(u, x), advance(v, y)) else { continue };
                let Some(d2) = step[(d * (n + 1) + xi) * (n + 1) + yi] else { continue };
                let key = (u2, v2, d2);
                let to = match ids.get(&key) {
                    Some(&t) => t,
                    None => {
                        let t = dfa.add_state(accepting(u2, v2, d2));
                        ids.insert(key, t);
                        state_differences.push(d2 as u32);
                        queue.push_back(key);
                        t
                    }
                };
                dfa.set(from, alpha.pair(x, y), to);
            }
        }
    }
    // Trimming renumbers states; carry the difference labels along.
    let trimmed = dfa.trim();
    let mut labels = vec![0u32; trimmed.num_states()];
    relabel(&dfa, &trimmed, &state_differences, &mut labels);
    Ok(WordDifferenceMachine {
        automaton: trimmed,
        differences: inner.iter().map(|&e| ball.representative(e).clone()).collect(),
        state_differences: labels,
        max_observed: scan.k_required,
    })
}

/// Maps labels of `full` onto the states of its trimmed copy by walking
/// both machines in lockstep.
fn relabel(full: &Dfa, trimmed: &Dfa, labels: &[u32], out: &mut [u32]) {
    let k = full.alphabet().size() as Symbol;
    let mut seen = vec![false; trimmed.num_states()];
    let mut stack = vec![(full.initial(), trimmed.initial())];
    seen[trimmed.initial() as usize] = true;
    while let Some((f, t)) = stack.pop() {
        out[t as usize] = labels[f as usize];
        for s in 0..k {
            if let (Some(f2), Some(t2)) = (full.step(f, s), trimmed.step(t, s)) {
                if !seen[t2 as usize] {
                    seen[t2 as usize] = true;
                    stack.push((f2, t2));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsa::geodesic_acceptor;
    use crate::pree::load_pree;

    #[test]
    fn finite_group_differences_stay_small() {
        let p = load_pree(include_str!("../../../../fixtures/z6.pree")).unwrap();
        let wp = WordProblem::new(&p);
        let m = word_difference_machine(&wp, &geodesic_acceptor(&p), 2, 3).unwrap();
        assert!(m.max_observed <= 1);
        assert!(!m.automaton.is_empty());
    }

    #[test]
    fn zero_radius_fails() {
        let p = load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap();
        let wp = WordProblem::new(&p);
        let w = word_difference_machine(&wp, &geodesic_acceptor(&p), 0, 2).unwrap_err();
        assert!(w.distance > 0);
    }

    #[test]
    fn machine_accepts_fellow_pairs() {
        let p = load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap();
        let wp = WordProblem::new(&p);
        let l = geodesic_acceptor(&p);
        let m = word_difference_machine(&wp, &l, 3, 3).unwrap();
        let alpha = m.automaton.alphabet();
        let u = crate::word::parse_word(&p, "(1,1) (1,1)").unwrap();
        let v = crate::word::parse_word(&p, "(1,1) (1,1) (0,1)").unwrap();
        let pairs: Vec<Symbol> = (0..3)
            .map(|i| alpha.pair(u.get(i).map(|e| e.index()), v.get(i).map(|e| e.index())))
            .collect();
        assert!(m.automaton.accepts(&pairs));
    }
}

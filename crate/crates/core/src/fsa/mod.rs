//! Finite automata over small integer alphabets.
//!
//! Letter alphabets use element ids as symbols. Pair alphabets encode
//! `(x, y)` with either side possibly the padding symbol `$` as
//! `x * (n + 1) + y`, where the value `n` stands for `$`.

mod difference;
mod export;
mod languages;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

pub use difference::{word_difference_machine, FailureWitness, WordDifferenceMachine};
pub use export::{symbol_name, to_dot, to_records};
pub use languages::{
    combing_acceptor, geodesic_acceptor, irreducible_acceptor, not_identity_acceptor,
    odd_window_checker, strip_reduction_pair_recognizer, CombingPredicateTable, CombingReading,
};

pub type Symbol = u32;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `n` letters.
    Letters(usize),
    /// Pairs over `n` letters plus the padding symbol.
    Pairs(usize),
}

impl Alphabet {
    pub fn size(self) -> usize {
        match self {
            Alphabet::Letters(n) => n,
            Alphabet::Pairs(n) => (n + 1) * (n + 1),
        }
    }

    /// Encodes a pair symbol; `None` is the padding symbol.
    pub fn pair(self, x: Option<usize>, y: Option<usize>) -> Symbol {
        let Alphabet::Pairs(n) = self else { panic!("not a pair alphabet") };
        (x.unwrap_or(n) * (n + 1) + y.unwrap_or(n)) as Symbol
    }

    pub fn split(self, s: Symbol) -> (Option<usize>, Option<usize>) {
        let Alphabet::Pairs(n) = self else { panic!("not a pair alphabet") };
        let (x, y) = (s as usize / (n + 1), s as usize % (n + 1));
        ((x < n).then_some(x), (y < n).then_some(y))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FsaError {
    #[error("alphabet mismatch: {0:?} vs {1:?}")]
    AlphabetMismatch(Alphabet, Alphabet),
    #[error("operation needs a complete deterministic automaton")]
    Incomplete,
    #[error("operation needs a pair alphabet")]
    NotPairAlphabet,
}

/// Nondeterministic automaton without epsilon moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    initial: Vec<u32>,
    accepting: Vec<bool>,
    transitions: Vec<Vec<(Symbol, u32)>>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa {
            alphabet,
            initial: Vec::new(),
            accepting: Vec::new(),
            transitions: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn add_state(&mut self, accepting: bool) -> u32 {
        self.accepting.push(accepting);
        self.transitions.push(Vec::new());
        (self.accepting.len() - 1) as u32
    }

    pub fn set_initial(&mut self, q: u32) {
        if !self.initial.contains(&q) {
            self.initial.push(q);
        }
    }

    pub fn add_transition(&mut self, from: u32, symbol: Symbol, to: u32) {
        debug_assert!((symbol as usize) < self.alphabet.size());
        self.transitions[from as usize].push((symbol, to));
    }

    pub fn initial(&self) -> &[u32] {
        &self.initial
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accepting[q as usize]
    }

    pub fn transitions(&self, q: u32) -> &[(Symbol, u32)] {
        &self.transitions[q as usize]
    }

    /// Subset simulation.
    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let mut cur = self.initial.clone();
        let mut next = Vec::new();
        for &s in word {
            next.clear();
            for &q in &cur {
                for &(t, r) in &self.transitions[q as usize] {
                    if t == s && !next.contains(&r) {
                        next.push(r);
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
            if cur.is_empty() {
                return false;
            }
        }
        cur.iter().any(|&q| self.accepting[q as usize])
    }

    /// Subset construction over reachable subsets. The empty subset is not
    /// materialized, so the result may be incomplete.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.size();
        let mut by_symbol: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); k]; self.num_states()];
        for (q, ts) in self.transitions.iter().enumerate() {
            for &(s, r) in ts {
                by_symbol[q][s as usize].push(r);
            }
        }
        let mut start = self.initial.clone();
        start.sort_unstable();
        start.dedup();
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut subsets = vec![start.clone()];
        ids.insert(start, 0);
        let mut dfa = Dfa::empty(self.alphabet);
        let mut i = 0;
        while i < subsets.len() {
            let set = subsets[i].clone();
            dfa.accepting[i] = set.iter().any(|&q| self.accepting[q as usize]);
            for s in 0..k {
                let mut succ: Vec<u32> = set
                    .iter()
                    .flat_map(|&q| by_symbol[q as usize][s].iter().copied())
                    .collect();
                if succ.is_empty() {
                    continue;
                }
                succ.sort_unstable();
                succ.dedup();
                let id = match ids.get(&succ) {
                    Some(&id) => id,
                    None => {
                        let id = dfa.add_state(false);
                        ids.insert(succ.clone(), id);
                        subsets.push(succ);
                        id
                    }
                };
                dfa.set(i as u32, s as Symbol, id);
            }
            i += 1;
        }
        dfa
    }

    /// Keeps the first component of every pair symbol. Transitions whose
    /// first component is padding are dropped.
    pub fn project_first(&self) -> Result<Nfa, FsaError> {
        let Alphabet::Pairs(n) = self.alphabet else { return Err(FsaError::NotPairAlphabet) };
        let mut out = Nfa::new(Alphabet::Letters(n));
        out.accepting = self.accepting.clone();
        out.transitions = vec![Vec::new(); self.num_states()];
        out.initial = self.initial.clone();
        for (q, ts) in self.transitions.iter().enumerate() {
            for &(s, r) in ts {
                if let (Some(x), _) = self.alphabet.split(s) {
                    if !out.transitions[q].contains(&(x as Symbol, r)) {
                        out.transitions[q].push((x as Symbol, r));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Deterministic automaton with a partial transition function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: u32,
    accepting: Vec<bool>,
    next: Vec<u32>,
}

impl Dfa {
    /// One non-accepting initial state and no transitions.
    pub fn empty(alphabet: Alphabet) -> Self {
        Dfa {
            alphabet,
            initial: 0,
            accepting: vec![false],
            next: vec![NONE; alphabet.size()],
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn add_state(&mut self, accepting: bool) -> u32 {
        self.accepting.push(accepting);
        self.next.extend(std::iter::repeat(NONE).take(self.alphabet.size()));
        (self.accepting.len() - 1) as u32
    }

    pub fn set_accepting(&mut self, q: u32, accepting: bool) {
        self.accepting[q as usize] = accepting;
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accepting[q as usize]
    }

    pub fn set(&mut self, from: u32, symbol: Symbol, to: u32) {
        let k = self.alphabet.size();
        self.next[from as usize * k + symbol as usize] = to;
    }

    pub fn step(&self, q: u32, symbol: Symbol) -> Option<u32> {
        let t = self.next[q as usize * self.alphabet.size() + symbol as usize];
        (t != NONE).then_some(t)
    }

    pub fn run(&self, word: &[Symbol]) -> Option<u32> {
        word.iter().try_fold(self.initial, |q, &s| self.step(q, s))
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.run(word).is_some_and(|q| self.accepting[q as usize])
    }

    pub fn is_complete(&self) -> bool {
        self.next.iter().all(|&t| t != NONE)
    }

    /// Adds a rejecting sink for every missing transition.
    pub fn complete(&self) -> Dfa {
        if self.is_complete() {
            return self.clone();
        }
        let mut d = self.clone();
        let sink = d.add_state(false);
        for t in d.next.iter_mut() {
            if *t == NONE {
                *t = sink;
            }
        }
        d
    }

    pub fn complement(&self) -> Result<Dfa, FsaError> {
        if !self.is_complete() {
            return Err(FsaError::Incomplete);
        }
        let mut d = self.clone();
        d.accepting.iter_mut().for_each(|a| *a = !*a);
        Ok(d)
    }

    fn product(&self, other: &Dfa, accept: impl Fn(bool, bool) -> bool) -> Result<Dfa, FsaError> {
        if self.alphabet != other.alphabet {
            return Err(FsaError::AlphabetMismatch(self.alphabet, other.alphabet));
        }
        let k = self.alphabet.size();
        let mut ids: HashMap<(u32, u32), u32> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut out = Dfa::empty(self.alphabet);
        let start = (self.initial, other.initial);
        out.accepting[0] = accept(self.is_accepting(start.0), other.is_accepting(start.1));
        ids.insert(start, 0);
        queue.push_back(start);
        while let Some((a, b)) = queue.pop_front() {
            let from = ids[&(a, b)];
            for s in 0..k as Symbol {
                let (Some(a2), Some(b2)) = (self.step(a, s), other.step(b, s)) else { continue };
                let to = match ids.get(&(a2, b2)) {
                    Some(&t) => t,
                    None => {
                        let t = out.add_state(accept(self.is_accepting(a2), other.is_accepting(b2)));
                        ids.insert((a2, b2), t);
                        queue.push_back((a2, b2));
                        t
                    }
                };
                out.set(from, s, to);
            }
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &Dfa) -> Result<Dfa, FsaError> {
        self.product(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa, FsaError> {
        if self.alphabet != other.alphabet {
            return Err(FsaError::AlphabetMismatch(self.alphabet, other.alphabet));
        }
        self.complete().product(&other.complete(), |a, b| a || b)
    }

    /// States from which an accepting state is reachable.
    fn live(&self) -> Vec<bool> {
        let k = self.alphabet.size();
        let n = self.num_states();
        let mut rev: Vec<Vec<u32>> = vec![Vec::new(); n];
        for q in 0..n {
            for s in 0..k {
                let t = self.next[q * k + s];
                if t != NONE {
                    rev[t as usize].push(q as u32);
                }
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<u32> = (0..n as u32).filter(|&q| live[q as usize]).collect();
        while let Some(q) = stack.pop() {
            for &r in &rev[q as usize] {
                if !live[r as usize] {
                    live[r as usize] = true;
                    stack.push(r);
                }
            }
        }
        live
    }

    /// Drops unreachable and dead states (the initial state always stays)
    /// and renumbers breadth-first from the initial state in symbol order.
    pub fn trim(&self) -> Dfa {
        let live = self.live();
        let keep = |q: u32| live[q as usize];
        let k = self.alphabet.size();
        let mut ids: HashMap<u32, u32> = HashMap::new();
        let mut order = vec![self.initial];
        ids.insert(self.initial, 0);
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for s in 0..k as Symbol {
                if let Some(t) = self.step(q, s) {
                    if keep(t) && !ids.contains_key(&t) {
                        ids.insert(t, order.len() as u32);
                        order.push(t);
                    }
                }
            }
            i += 1;
        }
        let mut out = Dfa::empty(self.alphabet);
        out.accepting = order.iter().map(|&q| self.is_accepting(q)).collect();
        out.next = vec![NONE; order.len() * k];
        for (i, &q) in order.iter().enumerate() {
            for s in 0..k as Symbol {
                if let Some(&t) = self.step(q, s).and_then(|t| ids.get(&t)) {
                    out.set(i as u32, s, t);
                }
            }
        }
        out
    }

    /// Minimal trimmed automaton by partition refinement. Equal languages
    /// give equal results, state numbering included.
    pub fn minimize(&self) -> Dfa {
        let d = self.trim().complete();
        let k = d.alphabet.size();
        let n = d.num_states();
        let mut class: Vec<u32> = d.accepting.iter().map(|&a| a as u32).collect();
        let mut count = 0;
        loop {
            let mut sig_ids: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut next_class = vec![0u32; n];
            for q in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                sig.extend((0..k).map(|s| class[d.next[q * k + s] as usize]));
                let fresh = sig_ids.len() as u32;
                next_class[q] = *sig_ids.entry(sig).or_insert(fresh);
            }
            let new_count = sig_ids.len();
            class = next_class;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut quotient = Dfa::empty(d.alphabet);
        quotient.accepting = vec![false; count];
        quotient.next = vec![NONE; count * k];
        quotient.initial = class[d.initial as usize];
        for q in 0..n {
            let c = class[q];
            quotient.accepting[c as usize] = d.accepting[q];
            for s in 0..k {
                quotient.next[c as usize * k + s] = class[d.next[q * k + s] as usize];
            }
        }
        quotient.trim()
    }

    pub fn is_empty(&self) -> bool {
        !self.live()[self.initial as usize]
    }

    /// Accepted words of length at most `max_len` in length-lexicographic
    /// order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Vec<Symbol>> {
        let k = self.alphabet.size();
        let n = self.num_states();
        // can[r][q]: some accepting state is reachable from q in exactly r steps.
        let mut can = vec![self.accepting.clone()];
        for r in 1..=max_len {
            let prev = &can[r - 1];
            let row = (0..n)
                .map(|q| (0..k).any(|s| {
                    let t = self.next[q * k + s];
                    t != NONE && prev[t as usize]
                }))
                .collect();
            can.push(row);
        }
        let mut out = Vec::new();
        let mut word = Vec::new();
        for len in 0..=max_len {
            self.enumerate_exact(self.initial, len, &can, &mut word, &mut out);
        }
        out
    }

    fn enumerate_exact(
        &self,
        q: u32,
        remaining: usize,
        can: &[Vec<bool>],
        word: &mut Vec<Symbol>,
        out: &mut Vec<Vec<Symbol>>,
    ) {
        if !can[remaining][q as usize] {
            return;
        }
        if remaining == 0 {
            out.push(word.clone());
            return;
        }
        for s in 0..self.alphabet.size() as Symbol {
            if let Some(t) = self.step(q, s) {
                word.push(s);
                self.enumerate_exact(t, remaining - 1, can, word, out);
                word.pop();
            }
        }
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut nfa = Nfa::new(self.alphabet);
        for q in 0..self.num_states() as u32 {
            nfa.add_state(self.is_accepting(q));
        }
        nfa.set_initial(self.initial);
        let k = self.alphabet.size() as Symbol;
        for q in 0..self.num_states() as u32 {
            for s in 0..k {
                if let Some(t) = self.step(q, s) {
                    nfa.add_transition(q, s, t);
                }
            }
        }
        nfa
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Words over {0,1} whose second-to-last symbol is 1.
    fn second_last_one() -> Nfa {
        let mut a = Nfa::new(Alphabet::Letters(2));
        let (q0, q1, q2) = (a.add_state(false), a.add_state(false), a.add_state(true));
        a.set_initial(q0);
        a.add_transition(q0, 0, q0);
        a.add_transition(q0, 1, q0);
        a.add_transition(q0, 1, q1);
        a.add_transition(q1, 0, q2);
        a.add_transition(q1, 1, q2);
        a
    }

    #[test]
    fn determinize_and_minimize() {
        let nfa = second_last_one();
        let dfa = nfa.determinize();
        let min = dfa.minimize();
        assert_eq!(min.num_states(), 4);
        for w in [&[1, 0][..], &[0, 1, 1], &[1, 1, 0, 1, 0]] {
            assert!(min.accepts(w));
        }
        for w in [&[][..], &[1], &[0, 0], &[1, 0, 0]] {
            assert!(!min.accepts(w));
        }
        assert_eq!(dfa.enumerate(4), min.enumerate(4));
        assert_eq!(min.enumerate(2), vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn complement_needs_completion() {
        let dfa = second_last_one().determinize();
        let min = dfa.minimize();
        if !min.is_complete() {
            assert_eq!(min.complement(), Err(FsaError::Incomplete));
        }
        let c = min.complete().complement().unwrap();
        assert!(c.accepts(&[]));
        assert!(!c.accepts(&[1, 1]));
        assert!(c.intersect(&min).unwrap().is_empty());
        assert!(c.union(&min).unwrap().complete().complement().unwrap().is_empty());
    }

    #[test]
    fn pair_symbols_round_trip() {
        let a = Alphabet::Pairs(3);
        assert_eq!(a.size(), 16);
        for x in [None, Some(0), Some(2)] {
            for y in [None, Some(1)] {
                assert_eq!(a.split(a.pair(x, y)), (x, y));
            }
        }
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a = Dfa::empty(Alphabet::Letters(2));
        let b = Dfa::empty(Alphabet::Letters(3));
        assert!(matches!(a.intersect(&b), Err(FsaError::AlphabetMismatch(..))));
    }

    #[test]
    fn minimization_is_canonical() {
        let a = second_last_one().determinize().minimize();
        let b = second_last_one().determinize().complete().minimize();
        assert_eq!(a, b);
    }
}

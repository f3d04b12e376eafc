//! Minimal-area diagrams by A* over boundary words.
//!
//! A diagram of area `n` shrinks to a single triangle by `n - 1` boundary
//! moves: removing a triangle glued along one edge contracts two adjacent
//! letters into their product, and removing one glued along two edges
//! expands a letter into a factorization. Searching over cyclic boundary
//! words up to rotation and inversion therefore finds a minimal diagram,
//! and replaying the moves backwards rebuilds it.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::diagram::{Attachment, Diagram};
use crate::pree::{check_axiom, Elem, Pree};
use crate::word::{equals_identity, Word};

pub const DEFAULT_MAX_AREA: usize = 12;
const DEFAULT_NODE_CAP: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Move {
    /// Letters `j` and `j + 1` (cyclically) become their product.
    Contract(usize),
    /// Letter `j` becomes `a b`.
    Expand(usize, Elem, Elem),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Diagram),
    /// No diagram of area at most the budget exists.
    NotWithinBudget,
    /// The word is not trivial in the universal group.
    NotTrivial,
    /// The node cap was hit before the budget was exhausted.
    Capped,
}

impl SearchOutcome {
    pub fn diagram(self) -> Option<Diagram> {
        match self {
            SearchOutcome::Found(d) => Some(d),
            _ => None,
        }
    }
}

/// Reusable search context; checking A(4)/A(5) once lets the Dehn solver
/// reject nontrivial words up front.
pub struct DiagramSearch<'p> {
    pree: &'p Pree,
    dehn: bool,
    pub max_area: usize,
    pub node_cap: usize,
}

impl<'p> DiagramSearch<'p> {
    pub fn new(p: &'p Pree) -> Self {
        let dehn = check_axiom(p, 4).holds() && check_axiom(p, 5).holds();
        DiagramSearch {
            pree: p,
            dehn,
            max_area: DEFAULT_MAX_AREA,
            node_cap: DEFAULT_NODE_CAP,
        }
    }

    pub fn with_max_area(mut self, max_area: usize) -> Self {
        self.max_area = max_area;
        self
    }

    pub fn run(&self, w: &[Elem]) -> SearchOutcome {
        let p = self.pree;
        if w.len() < 2 || self.max_area == 0 {
            return SearchOutcome::NotWithinBudget;
        }
        if self.dehn && !equals_identity(p, &Word(w.to_vec())) {
            return SearchOutcome::NotTrivial;
        }
        let start = canonical(p, w);
        let limit = self.max_area - 1;
        // parent, move applied to the parent's canonical word, depth
        let mut seen: HashMap<Vec<Elem>, (Option<Vec<Elem>>, Option<Move>, usize)> = HashMap::new();
        let mut heap = BinaryHeap::new();
        let mut counter = 0u64;
        seen.insert(start.clone(), (None, None, 0));
        heap.push(Reverse((heuristic(&start), counter, 0usize, start)));
        while let Some(Reverse((_, _, g, cur))) = heap.pop() {
            if seen[&cur].2 < g {
                continue;
            }
            if is_triangle(p, &cur) {
                return SearchOutcome::Found(self.rebuild(&seen, cur, w));
            }
            if g == limit {
                continue;
            }
            for (mv, next) in moves(p, &cur) {
                let key = canonical(p, &next);
                let ng = g + 1;
                if ng + heuristic(&key) > limit {
                    continue;
                }
                if seen.get(&key).is_some_and(|s| s.2 <= ng) {
                    continue;
                }
                if seen.len() >= self.node_cap {
                    return SearchOutcome::Capped;
                }
                seen.insert(key.clone(), (Some(cur.clone()), Some(mv), ng));
                counter += 1;
                heap.push(Reverse((ng + heuristic(&key), counter, ng, key)));
            }
        }
        SearchOutcome::NotWithinBudget
    }

    fn rebuild(
        &self,
        seen: &HashMap<Vec<Elem>, (Option<Vec<Elem>>, Option<Move>, usize)>,
        goal: Vec<Elem>,
        w: &[Elem],
    ) -> Diagram {
        let p = self.pree;
        let mut d = Diagram::single_triangle(p, goal[0], goal[1]).expect("goal is a triangle");
        let mut cur = goal;
        while let (Some(parent), Some(mv), _) = &seen[&cur] {
            let child = apply(p, parent, *mv);
            assert!(d.align_to(&child), "boundary tracks the search");
            let at = match *mv {
                Move::Contract(j) if j + 1 < parent.len() => Attachment::OneEdge {
                    position: j,
                    left: parent[j],
                },
                Move::Contract(_) => Attachment::OneEdge {
                    position: 0,
                    left: *parent.last().unwrap(),
                },
                Move::Expand(j, _, _) => Attachment::TwoEdge { position: j },
            };
            d = d.attach_triangle(p, at).expect("move was valid");
            cur = parent.clone();
        }
        assert!(d.align_to(w), "rebuilt boundary reads the input");
        d
    }
}

/// Minimal diagram for `w` of area at most `max_area`, if one exists.
pub fn find_minimal_diagram(p: &Pree, w: &[Elem], max_area: usize) -> Option<Diagram> {
    DiagramSearch::new(p).with_max_area(max_area).run(w).diagram()
}

fn heuristic(w: &[Elem]) -> usize {
    w.len().abs_diff(3)
}

fn is_triangle(p: &Pree, w: &[Elem]) -> bool {
    w.len() == 3 && p.product(w[0], w[1]) == Some(p.inverse(w[2]))
}

/// Least rotation of `w` or of its inverse.
fn canonical(p: &Pree, w: &[Elem]) -> Vec<Elem> {
    let inv: Vec<Elem> = w.iter().rev().map(|&a| p.inverse(a)).collect();
    let n = w.len();
    let mut best: Option<Vec<Elem>> = None;
    for base in [w, &inv[..]] {
        for r in 0..n {
            let better = match &best {
                None => true,
                Some(b) => (0..n).map(|i| base[(r + i) % n]).lt(b.iter().copied()),
            };
            if better {
                best = Some((0..n).map(|i| base[(r + i) % n]).collect());
            }
        }
    }
    best.unwrap_or_default()
}

fn apply(p: &Pree, w: &[Elem], mv: Move) -> Vec<Elem> {
    let n = w.len();
    match mv {
        Move::Contract(j) if j + 1 < n => {
            let mut out = w[..j].to_vec();
            out.push(p.product(w[j], w[j + 1]).unwrap());
            out.extend_from_slice(&w[j + 2..]);
            out
        }
        Move::Contract(_) => {
            let mut out = vec![p.product(w[n - 1], w[0]).unwrap()];
            out.extend_from_slice(&w[1..n - 1]);
            out
        }
        Move::Expand(j, a, b) => {
            let mut out = w[..j].to_vec();
            out.extend([a, b]);
            out.extend_from_slice(&w[j + 1..]);
            out
        }
    }
}

fn moves(p: &Pree, w: &[Elem]) -> Vec<(Move, Vec<Elem>)> {
    let n = w.len();
    let mut out = Vec::new();
    if n >= 3 {
        for j in 0..n {
            if p.is_defined(w[j], w[(j + 1) % n]) {
                out.push((Move::Contract(j), apply(p, w, Move::Contract(j))));
            }
        }
    }
    for j in 0..n {
        for &(a, b) in p.factorizations(w[j]) {
            let mv = Move::Expand(j, a, b);
            out.push((mv, apply(p, w, mv)));
        }
    }
    out
}

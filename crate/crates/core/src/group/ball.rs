//! Breadth-first Cayley balls of `U(P)` over the generators `P \ {1}`.
//!
//! New words `u·g` are identified with known elements by testing
//! `u g v⁻¹ = 1`, but only against elements sharing the abelian image of
//! `u g`, which keeps identification close to linear for abelian-like
//! examples.

use std::collections::HashMap;
use std::fmt::Write;

use thiserror::Error;

use crate::group::solver::WordProblem;
use crate::pree::{Elem, Pree};
use crate::report::quote;
use crate::word::Word;

pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BallError {
    #[error("ball exceeds the element cap of {cap}")]
    TooLarge { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallElement {
    pub representative: Word,
    pub distance: usize,
}

#[derive(Debug, Clone)]
pub struct CayleyBall {
    radius: usize,
    generators: Vec<Elem>,
    elements: Vec<BallElement>,
    buckets: HashMap<Vec<i64>, Vec<u32>>,
    /// `right[e][i]` is `e · generators[i]` when that lies in the ball.
    right: Vec<Vec<Option<u32>>>,
    unresolved: usize,
}

/// Ball of radius `r` with the default solver and element cap.
pub fn cayley_ball(p: &Pree, r: usize) -> Result<CayleyBall, BallError> {
    CayleyBall::build(&WordProblem::new(p), r, DEFAULT_ELEMENT_CAP)
}

impl CayleyBall {
    pub fn build(wp: &WordProblem, radius: usize, cap: usize) -> Result<CayleyBall, BallError> {
        let p = wp.pree();
        let generators: Vec<Elem> = p.generators().collect();
        let one = Word::one(p);
        let mut ball = CayleyBall {
            radius,
            generators,
            elements: Vec::new(),
            buckets: HashMap::new(),
            right: Vec::new(),
            unresolved: 0,
        };
        ball.insert(wp, one, 0);
        let mut layer: Vec<u32> = vec![0];
        for d in 0..radius {
            let mut next = Vec::new();
            for &e in &layer {
                for gi in 0..ball.generators.len() {
                    let g = ball.generators[gi];
                    let mut w = ball.elements[e as usize].representative.0.clone();
                    if d == 0 {
                        w.clear();
                    }
                    w.push(g);
                    let (found, unknown) = ball.find(wp, &w);
                    ball.unresolved += unknown as usize;
                    let id = match found {
                        Some(id) => id,
                        None => {
                            if ball.elements.len() >= cap {
                                return Err(BallError::TooLarge { cap });
                            }
                            let id = ball.insert(wp, Word(w), d + 1);
                            next.push(id);
                            id
                        }
                    };
                    ball.right[e as usize][gi] = Some(id);
                }
            }
            layer = next;
        }
        // Close the right table for the outer layer where possible.
        for e in layer {
            for gi in 0..ball.generators.len() {
                let mut w = ball.elements[e as usize].representative.0.clone();
                w.push(ball.generators[gi]);
                ball.right[e as usize][gi] = ball.find(wp, &w).0;
            }
        }
        Ok(ball)
    }

    fn insert(&mut self, wp: &WordProblem, rep: Word, distance: usize) -> u32 {
        let id = self.elements.len() as u32;
        let key = wp.abelian().image(&rep);
        self.buckets.entry(key).or_default().push(id);
        self.elements.push(BallElement {
            representative: rep,
            distance,
        });
        self.right.push(vec![None; self.generators.len()]);
        id
    }

    fn find(&self, wp: &WordProblem, w: &[Elem]) -> (Option<u32>, bool) {
        let key = wp.abelian().image(w);
        let mut unknown = false;
        if let Some(ids) = self.buckets.get(&key) {
            for &id in ids {
                match wp.equal(w, &self.elements[id as usize].representative) {
                    Some(true) => return (Some(id), unknown),
                    Some(false) => {}
                    None => unknown = true,
                }
            }
        }
        (None, unknown)
    }

    /// The ball element represented by `w`, if it lies in the ball.
    pub fn locate(&self, wp: &WordProblem, w: &[Elem]) -> Option<u32> {
        self.find(wp, w).0
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> &[BallElement] {
        &self.elements
    }

    pub fn distance(&self, id: u32) -> usize {
        self.elements[id as usize].distance
    }

    pub fn representative(&self, id: u32) -> &Word {
        &self.elements[id as usize].representative
    }

    pub fn right(&self, id: u32, generator: usize) -> Option<u32> {
        self.right[id as usize][generator]
    }

    /// Identity tests the solver could not decide; such words were
    /// treated as new elements.
    pub fn unresolved(&self) -> usize {
        self.unresolved
    }

    /// Element counts per distance, index = distance.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.radius + 1];
        for e in &self.elements {
            sizes[e.distance] += 1;
        }
        sizes
    }

    pub fn export_records(&self, p: &Pree) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ball radius={} elements={}", self.radius, self.len());
        for (id, e) in self.elements.iter().enumerate() {
            let _ = writeln!(
                out,
                "element id={id} distance={} representative={}",
                e.distance,
                quote(&e.representative.display(p).to_string())
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pree::load_pree;

    #[test]
    fn zxz_ball_sizes_follow_hexagonal_growth() {
        let p = load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap();
        let ball = cayley_ball(&p, 3).unwrap();
        assert_eq!(ball.sphere_sizes(), vec![1, 6, 12, 18]);
        assert_eq!(ball.unresolved(), 0);
    }

    #[test]
    fn finite_group_saturates() {
        let p = load_pree(include_str!("../../../../fixtures/s3.pree")).unwrap();
        assert_eq!(cayley_ball(&p, 1).unwrap().len(), 6);
        assert_eq!(cayley_ball(&p, 2).unwrap().len(), 6);
    }

    #[test]
    fn right_table_is_consistent() {
        let p = load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap();
        let wp = WordProblem::new(&p);
        let ball = CayleyBall::build(&wp, 2, 100).unwrap();
        for id in 0..ball.len() as u32 {
            for (gi, &g) in ball.generators().iter().enumerate() {
                let mut w = ball.representative(id).0.clone();
                w.push(g);
                assert_eq!(ball.right(id, gi), ball.locate(&wp, &w));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let p = load_pree(include_str!("../../../../fixtures/taxicab.pree")).unwrap();
        let wp = WordProblem::new(&p);
        assert_eq!(
            CayleyBall::build(&wp, 4, 20).unwrap_err(),
            BallError::TooLarge { cap: 20 }
        );
    }
}

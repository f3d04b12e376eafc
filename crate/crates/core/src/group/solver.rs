//! One entry point for "is this word trivial in `U(P)`": strong reduction
//! when A(4) and A(5) hold, the bounded neighbor oracle otherwise. The
//! abelian image is consulted first in both cases since a nonzero image is
//! a proof of nontriviality.

use crate::group::abelian::AbelianInvariant;
use crate::group::oracle::{IdentityOracle, OracleConfig};
use crate::pree::{check_axiom, Elem, Pree};
use crate::word::{strongly_reduce, Word};

#[derive(Debug, Clone)]
pub struct WordProblem<'p> {
    pree: &'p Pree,
    dehn: bool,
    abelian: AbelianInvariant,
    oracle: IdentityOracle<'p>,
}

impl<'p> WordProblem<'p> {
    /// Checks A(4) and A(5) once and picks the solver accordingly.
    pub fn new(pree: &'p Pree) -> Self {
        let dehn = check_axiom(pree, 4).holds() && check_axiom(pree, 5).holds();
        Self::with_solver(pree, dehn, OracleConfig::default())
    }

    /// `dehn` must only be true for prees satisfying A(4) and A(5).
    pub fn with_solver(pree: &'p Pree, dehn: bool, oracle: OracleConfig) -> Self {
        WordProblem {
            pree,
            dehn,
            abelian: AbelianInvariant::new(pree),
            oracle: IdentityOracle::new(pree, oracle),
        }
    }

    pub fn pree(&self) -> &'p Pree {
        self.pree
    }

    /// Whether strong reduction decides the word problem here.
    pub fn dehn_applies(&self) -> bool {
        self.dehn
    }

    pub fn abelian(&self) -> &AbelianInvariant {
        &self.abelian
    }

    /// `None` when only the bounded oracle is available and it gave up.
    pub fn is_identity(&self, w: &[Elem]) -> Option<bool> {
        if !self.abelian.is_trivial_image(w) {
            return Some(false);
        }
        if self.dehn {
            return Some(strongly_reduce(self.pree, &Word(w.to_vec())).0.is_one(self.pree));
        }
        self.oracle.decide(w).decided()
    }

    pub fn equal(&self, u: &[Elem], v: &[Elem]) -> Option<bool> {
        let mut w = Vec::with_capacity(u.len() + v.len());
        w.extend_from_slice(u);
        w.extend(v.iter().rev().map(|&a| self.pree.inverse(a)));
        self.is_identity(&w)
    }

    /// Word-metric length of the element of `w`: strongly reduced words
    /// other than `1` are geodesic, so this is exact under A(4)/A(5).
    pub fn distance(&self, w: &[Elem]) -> Option<usize> {
        if !self.dehn {
            return None;
        }
        let r = strongly_reduce(self.pree, &Word(w.to_vec())).0;
        Some(if r.is_one(self.pree) { 0 } else { r.len() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pree::load_pree;
    use crate::word::parse_word;

    #[test]
    fn zxz_uses_strong_reduction() {
        let p = load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap();
        let wp = WordProblem::new(&p);
        assert!(wp.dehn_applies());
        let w = |s| parse_word(&p, s).unwrap();
        assert_eq!(wp.is_identity(&w("(0,1) (1,0) (-1,-1)")), Some(true));
        assert_eq!(wp.equal(&w("(0,1) (1,0)"), &w("(1,1)")), Some(true));
        assert_eq!(wp.distance(&w("(0,1) (1,1) (1,0)")), Some(2));
        assert_eq!(wp.distance(&w("(0,1) (0,-1)")), Some(0));
    }

    #[test]
    fn planted_failure_falls_back_to_oracle() {
        let p = load_pree(include_str!("../../../../fixtures/cycle4.pree")).unwrap();
        let wp = WordProblem::new(&p);
        assert!(!wp.dehn_applies());
        let x1 = p.lookup("x1").unwrap();
        assert_eq!(wp.is_identity(&[x1, p.inverse(x1)]), Some(true));
        assert_eq!(wp.distance(&[x1]), None);
    }
}

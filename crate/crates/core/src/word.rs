//! Words over a pree and the reductions that shorten them.
//!
//! A *simple* reduction replaces two adjacent letters by their product. A
//! *strip* reduction replaces `n >= 3` letters by `n - 1` letters along a
//! gallery of type 3 4^k 3: a zigzag band of `2n - 3` triangles glued to
//! the word, whose inner word vertices have degrees 3, 4, ..., 4, 3.
//!
//! For the strip on `a_1 .. a_n` with diagonals `d_1 .. d_{n-2}` and output
//! `c_1 .. c_{n-1}`:
//!
//! ```text
//! c_1     = a_1 d_1
//! g_i     = a_i⁻¹ d_{i-1},  d_i = g_i c_i        (2 <= i <= n-2)
//! g_{n-1} = a_{n-1}⁻¹ d_{n-2},  c_{n-1} = g_{n-1}⁻¹ a_n
//! ```
//!
//! every product being defined in the pree.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

use crate::pree::{Elem, Pree};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Elem>);

impl Word {
    pub fn new(letters: Vec<Elem>) -> Self {
        Word(letters)
    }

    pub fn single(e: Elem) -> Self {
        Word(vec![e])
    }

    /// The one-letter word `1`.
    pub fn one(p: &Pree) -> Self {
        Word(vec![p.identity()])
    }

    pub fn is_one(&self, p: &Pree) -> bool {
        self.0.len() == 1 && self.0[0] == p.identity()
    }

    /// Formal inverse: reversed, each letter inverted.
    pub fn inverse(&self, p: &Pree) -> Word {
        Word(self.0.iter().rev().map(|&a| p.inverse(a)).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn letters(&self) -> &[Elem] {
        &self.0
    }

    pub fn display<'a>(&'a self, p: &'a Pree) -> WordDisplay<'a> {
        WordDisplay { word: self, pree: p }
    }
}

impl Deref for Word {
    type Target = [Elem];
    fn deref(&self) -> &[Elem] {
        &self.0
    }
}

impl From<Vec<Elem>> for Word {
    fn from(v: Vec<Elem>) -> Self {
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0.iter().map(|e| e.0).collect::<Vec<_>>())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    pree: &'a Pree,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &e) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.pree.name(e))?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("empty word")]
    Empty,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
}

/// Parses whitespace-separated element names.
pub fn parse_word(p: &Pree, text: &str) -> Result<Word, WordError> {
    let letters = text
        .split_whitespace()
        .map(|t| p.lookup(t).ok_or_else(|| WordError::UnknownLetter(t.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if letters.is_empty() {
        return Err(WordError::Empty);
    }
    Ok(Word(letters))
}

/// True when no two adjacent letters have a defined product.
pub fn is_irreducible(p: &Pree, w: &[Elem]) -> bool {
    w.windows(2).all(|ab| !p.is_defined(ab[0], ab[1]))
}

/// Leftmost simple reduction: replaces the first adjacent pair with a
/// defined product. Returns the new word and the pair's position.
pub fn reduce_once(p: &Pree, w: &Word) -> Option<(Word, usize)> {
    let i = w.windows(2).position(|ab| p.is_defined(ab[0], ab[1]))?;
    let c = p.product(w[i], w[i + 1]).unwrap();
    let mut out = Vec::with_capacity(w.len() - 1);
    out.extend_from_slice(&w[..i]);
    out.push(c);
    out.extend_from_slice(&w[i + 2..]);
    Some((Word(out), i))
}

/// A 3 4^k 3 strip on `w[start .. start + len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripWitness {
    pub start: usize,
    pub len: usize,
    pub diagonals: Vec<Elem>,
    pub output: Vec<Elem>,
}

impl StripWitness {
    /// Checks every triangle relation of the strip against `a`, the
    /// replaced subword.
    pub fn is_valid_for(&self, p: &Pree, a: &[Elem]) -> bool {
        let n = self.len;
        if n < 3 || a.len() != n || self.diagonals.len() != n - 2 || self.output.len() != n - 1 {
            return false;
        }
        let d = &self.diagonals;
        let c = &self.output;
        if p.product(a[0], d[0]) != Some(c[0]) {
            return false;
        }
        for i in 1..n - 2 {
            // 0-based: g = a_i⁻¹ d_{i-1}, d_i = g c_i
            let Some(g) = p.product(p.inverse(a[i]), d[i - 1]) else { return false };
            if p.product(g, c[i]) != Some(d[i]) {
                return false;
            }
        }
        let Some(g) = p.product(p.inverse(a[n - 2]), d[n - 3]) else { return false };
        p.product(p.inverse(g), a[n - 1]) == Some(c[n - 2])
    }

    /// Applies the strip to `w`.
    pub fn apply(&self, w: &[Elem]) -> Word {
        let mut out = Vec::with_capacity(w.len() - 1);
        out.extend_from_slice(&w[..self.start]);
        out.extend_from_slice(&self.output);
        out.extend_from_slice(&w[self.start + self.len..]);
        Word(out)
    }
}

/// Finds a strip starting exactly at `w[0]`, trying lengths `3..=max_len`
/// in increasing order.
fn strip_at(p: &Pree, w: &[Elem], max_len: usize) -> Option<StripWitness> {
    let np = p.len();
    if w.len() < 3 || max_len < 3 {
        return None;
    }
    // layers[j][d] = predecessor info for diagonal d_{j+1} = d:
    // Some((prev_d, c)) where c is the output letter chosen on the way in.
    let mut layers: Vec<Vec<Option<(Elem, Elem)>>> = Vec::new();
    let mut first = vec![None; np];
    for d in p.elements() {
        if let Some(c) = p.product(w[0], d) {
            first[d.index()] = Some((d, c));
        }
    }
    layers.push(first);
    let max_len = max_len.min(w.len());
    for n in 3..=max_len {
        let last = layers.last().unwrap();
        // End of a length-n strip from d_{n-2}.
        let a_pen = p.inverse(w[n - 2]);
        for d in p.elements() {
            if last[d.index()].is_none() {
                continue;
            }
            let Some(g) = p.product(a_pen, d) else { continue };
            if let Some(c_last) = p.product(p.inverse(g), w[n - 1]) {
                return Some(rebuild(&layers, d, c_last, n));
            }
        }
        if n == max_len {
            break;
        }
        // Extend to d_{n-1} using a_{n-1} (0-based w[n-2]).
        let mut next = vec![None; np];
        let mut any = false;
        for d in p.elements() {
            if last[d.index()].is_none() {
                continue;
            }
            let Some(g) = p.product(a_pen, d) else { continue };
            for c in p.elements() {
                if let Some(d2) = p.product(g, c) {
                    if next[d2.index()].is_none() {
                        next[d2.index()] = Some((d, c));
                        any = true;
                    }
                }
            }
        }
        if !any {
            break;
        }
        layers.push(next);
    }
    None
}

fn rebuild(
    layers: &[Vec<Option<(Elem, Elem)>>],
    last_d: Elem,
    c_last: Elem,
    n: usize,
) -> StripWitness {
    let mut diagonals = Vec::with_capacity(n - 2);
    let mut output = Vec::with_capacity(n - 1);
    let mut d = last_d;
    output.push(c_last);
    for j in (0..n - 2).rev() {
        diagonals.push(d);
        let (prev, c) = layers[j][d.index()].unwrap();
        output.push(c);
        if j > 0 {
            d = prev;
        }
    }
    diagonals.reverse();
    output.reverse();
    StripWitness {
        start: 0,
        len: n,
        diagonals,
        output,
    }
}

/// Leftmost, then shortest, strip reduction anywhere in `w`.
pub fn strip_reduce_once(p: &Pree, w: &Word) -> Option<(Word, StripWitness)> {
    if w.len() < 3 {
        return None;
    }
    for start in 0..=w.len() - 3 {
        if let Some(mut s) = strip_at(p, &w[start..], w.len() - start) {
            s.start = start;
            return Some((s.apply(w), s));
        }
    }
    None
}

/// Witness for a 2 4^k 3 strip: `a_1 a_2 = contracted`, then either one more
/// product (`len == 3`) or a 3 4^k 3 strip on `contracted a_3 .. a_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strip2Witness {
    pub start: usize,
    pub len: usize,
    pub contracted: Elem,
    pub tail: Option<StripWitness>,
    pub output: Vec<Elem>,
}

/// Finds a subword of length `n >= 3` that a strip with a degree-2 leading
/// vertex shortens to length `n - 2`. Diagnostic only.
pub fn strip2_reduce_once(p: &Pree, w: &Word) -> Option<(Word, Strip2Witness)> {
    if w.len() < 3 {
        return None;
    }
    for start in 0..=w.len() - 3 {
        let Some(d) = p.product(w[start], w[start + 1]) else { continue };
        let rest = &w[start + 2..];
        let mut found = None;
        if let Some(c) = p.product(d, rest[0]) {
            found = Some((3, None, vec![c]));
        } else {
            let mut shifted = Vec::with_capacity(rest.len() + 1);
            shifted.push(d);
            shifted.extend_from_slice(rest);
            if let Some(s) = strip_at(p, &shifted, shifted.len()) {
                found = Some((s.len + 1, Some(s.clone()), s.output));
            }
        }
        if let Some((len, tail, output)) = found {
            let mut out = Vec::with_capacity(w.len() - 2);
            out.extend_from_slice(&w[..start]);
            out.extend_from_slice(&output);
            out.extend_from_slice(&w[start + len..]);
            return Some((
                Word(out),
                Strip2Witness {
                    start,
                    len,
                    contracted: d,
                    tail,
                    output,
                },
            ));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Simple { position: usize, product: Elem },
    Strip(StripWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
}

impl ReductionTrace {
    /// Replays the trace on `w`.
    pub fn replay(&self, p: &Pree, w: &Word) -> Word {
        let mut cur = w.clone();
        for step in &self.steps {
            cur = match step {
                Step::Simple { position, product } => {
                    debug_assert_eq!(p.product(cur[*position], cur[position + 1]), Some(*product));
                    let mut v = cur.0.clone();
                    v.splice(*position..position + 2, [*product]);
                    Word(v)
                }
                Step::Strip(s) => s.apply(&cur),
            };
        }
        cur
    }

    pub fn render(&self, p: &Pree, input: &Word) -> String {
        let mut out = String::new();
        let mut cur = input.clone();
        for step in &self.steps {
            let next = ReductionTrace { steps: vec![step.clone()] }.replay(p, &cur);
            match step {
                Step::Simple { position, .. } => {
                    out.push_str(&format!("simple at {position}: {}\n", next.display(p)));
                }
                Step::Strip(s) => {
                    let diag: Vec<&str> = s.diagonals.iter().map(|&d| p.name(d)).collect();
                    out.push_str(&format!(
                        "strip at {} len {} diagonals [{}]: {}\n",
                        s.start,
                        s.len,
                        diag.join(" "),
                        next.display(p)
                    ));
                }
            }
            cur = next;
        }
        out
    }
}

/// Reduces to a strongly irreducible word, preferring simple reductions.
pub fn strongly_reduce(p: &Pree, w: &Word) -> (Word, ReductionTrace) {
    let mut cur = w.clone();
    let mut trace = ReductionTrace::default();
    loop {
        if let Some((next, position)) = reduce_once(p, &cur) {
            let product = next[position];
            trace.steps.push(Step::Simple { position, product });
            cur = next;
            continue;
        }
        if let Some((next, s)) = strip_reduce_once(p, &cur) {
            trace.steps.push(Step::Strip(s));
            cur = next;
            continue;
        }
        return (cur, trace);
    }
}

/// Strongly irreducible and not the word `1`.
pub fn is_geodesic_word(p: &Pree, w: &Word) -> bool {
    !w.is_empty() && !w.is_one(p) && is_irreducible(p, w) && strip_reduce_once(p, w).is_none()
}

/// Identity test by strong reduction; exact when A(4) and A(5) hold.
pub fn equals_identity(p: &Pree, w: &Word) -> bool {
    strongly_reduce(p, w).0.is_one(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pree::load_pree;

    const ZXZ: &str = include_str!("../../../fixtures/zxz.pree");

    fn zxz() -> Pree {
        load_pree(ZXZ).unwrap()
    }

    fn w(p: &Pree, s: &str) -> Word {
        parse_word(p, s).unwrap()
    }

    #[test]
    fn simple_reductions() {
        let p = zxz();
        let (r, i) = reduce_once(&p, &w(&p, "(0,1) (1,0)")).unwrap();
        assert_eq!(r, w(&p, "(1,1)"));
        assert_eq!(i, 0);
        let (r, _) = reduce_once(&p, &w(&p, "(1,0) (0,0)")).unwrap();
        assert_eq!(r, w(&p, "(1,0)"));
        assert!(reduce_once(&p, &w(&p, "(1,1) (1,1)")).is_none());
    }

    #[test]
    fn strip_on_three_letters() {
        let p = zxz();
        let input = w(&p, "(0,1) (1,1) (1,0)");
        let (r, s) = strip_reduce_once(&p, &input).unwrap();
        assert_eq!(r, w(&p, "(1,1) (1,1)"));
        assert_eq!(s.diagonals, vec![p.lookup("(1,0)").unwrap()]);
        assert!(s.is_valid_for(&p, &input[s.start..s.start + s.len]));
        assert!(strip_reduce_once(&p, &w(&p, "(1,1) (1,1)")).is_none());
        assert!(strip_reduce_once(&p, &w(&p, "(1,1) (1,1) (0,1)")).is_none());
    }

    #[test]
    fn strongly_reduce_examples() {
        let p = zxz();
        let (r, t) = strongly_reduce(&p, &w(&p, "(1,1) (-1,-1)"));
        assert!(r.is_one(&p));
        assert_eq!(t.steps.len(), 1);
        let input = w(&p, "(0,1) (1,1) (1,0)");
        let (r, t) = strongly_reduce(&p, &input);
        assert_eq!(r, w(&p, "(1,1) (1,1)"));
        assert_eq!(t.replay(&p, &input), r);
        let g = w(&p, "(1,1) (1,1) (0,1)");
        assert_eq!(strongly_reduce(&p, &g).0, g);
    }

    #[test]
    fn geodesic_predicate() {
        let p = zxz();
        assert!(is_geodesic_word(&p, &w(&p, "(1,1) (1,1) (0,1)")));
        assert!(!is_geodesic_word(&p, &w(&p, "(0,1) (1,1) (1,0)")));
        assert!(!is_geodesic_word(&p, &w(&p, "(0,0)")));
    }

    #[test]
    fn strip2_examples() {
        let p = zxz();
        let (r, s) = strip2_reduce_once(&p, &w(&p, "(1,0) (0,1) (-1,-1)")).unwrap();
        assert!(r.is_one(&p));
        assert_eq!(s.len, 3);
        assert!(strip2_reduce_once(&p, &w(&p, "(1,1) (1,1)")).is_none());
        assert!(strip2_reduce_once(&p, &w(&p, "(1,1) (0,1)")).is_none());
    }

    #[test]
    fn strip2_with_zigzag_tail() {
        let p = zxz();
        // Whatever is found must shorten by 2 and preserve the element.
        let input = w(&p, "(0,1) (1,0) (0,1) (1,1) (1,0)");
        if let Some((r, s)) = strip2_reduce_once(&p, &input) {
            assert_eq!(r.len() + 2, input.len());
            if let Some(t) = &s.tail {
                let mut sub = vec![s.contracted];
                sub.extend_from_slice(&input[s.start + 2..s.start + s.len]);
                assert!(t.is_valid_for(&p, &sub));
            }
            let probe = input.concat(&r.inverse(&p));
            assert!(equals_identity(&p, &probe));
        }
    }

    #[test]
    fn parse_errors() {
        let p = zxz();
        assert_eq!(parse_word(&p, "  "), Err(WordError::Empty));
        assert!(matches!(parse_word(&p, "(9,9)"), Err(WordError::UnknownLetter(_))));
    }
}

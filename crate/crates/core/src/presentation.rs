//! Turning a finite group presentation into a finite pree by Tietze moves.
//!
//! Relators of length one or two identify letters; longer relators are cut
//! down to length three by abbreviating their leftmost two-letter subword
//! with a fresh letter (or with an existing product when the pair already
//! has one). The resulting table is closed under the triangle relations and
//! the associative law. A relator of length three is read verbatim as the
//! product declaration `ab = c⁻¹`, so contradictory declarations surface as
//! a clash instead of being cancelled away. Nothing guarantees A(4)/A(5)
//! afterwards; the report says whether they hold.

use std::collections::HashMap;

use thiserror::Error;

use crate::pree::{check_axiom, validate_pree, AxiomOutcome, Elem, Pree, PreeError};
use crate::report::{Check, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relator {relator}: unknown generator `{name}`")]
    UnknownGenerator { relator: usize, name: String },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("inconsistent table: {a}*{b} is forced to be both {first} and {second}")]
    Clash {
        a: String,
        b: String,
        first: String,
        second: String,
    },
    #[error(transparent)]
    Pree(#[from] PreeError),
}

/// Suffix marking a formal inverse letter, e.g. `x^-1`.
pub const INVERSE_SUFFIX: &str = "^-1";

struct Letters {
    names: Vec<String>,
    inv: Vec<usize>,
    parent: Vec<usize>,
}

impl Letters {
    fn push_pair(&mut self, name: String) -> usize {
        let a = self.names.len();
        self.names.push(name.clone());
        self.names.push(format!("{name}{INVERSE_SUFFIX}"));
        self.inv.extend([a + 1, a]);
        self.parent.extend([a, a + 1]);
        a
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn inverse(&mut self, x: usize) -> usize {
        let i = self.inv[x];
        self.find(i)
    }

    /// Identifies `a` with `b`, and therefore `a⁻¹` with `b⁻¹`.
    fn merge(&mut self, a: usize, b: usize) -> bool {
        let mut changed = false;
        let mut stack = vec![(a, b)];
        while let Some((x, y)) = stack.pop() {
            let (rx, ry) = (self.find(x), self.find(y));
            if rx == ry {
                continue;
            }
            changed = true;
            let (keep, drop) = if rx < ry { (rx, ry) } else { (ry, rx) };
            self.parent[drop] = keep;
            stack.push((self.inv[rx], self.inv[ry]));
        }
        changed
    }
}

/// Builds a pree whose universal group is presented by `generators` and
/// `relators`. Relators are whitespace-separated generator names, with
/// `^-1` marking inverses, e.g. `"x y x^-1 y^-1"`.
pub fn pree_from_presentation(
    generators: &[&str],
    relators: &[&str],
) -> Result<(Pree, VerificationReport), PresentationError> {
    let mut letters = Letters {
        names: vec!["1".to_string()],
        inv: vec![0],
        parent: vec![0],
    };
    let mut by_name: HashMap<String, usize> = HashMap::new();
    for g in generators {
        if by_name.contains_key(*g) {
            return Err(PresentationError::DuplicateGenerator(g.to_string()));
        }
        let a = letters.push_pair(g.to_string());
        by_name.insert(g.to_string(), a);
        by_name.insert(format!("{g}{INVERSE_SUFFIX}"), a + 1);
    }
    let mut words: Vec<Vec<usize>> = Vec::new();
    for (ri, r) in relators.iter().enumerate() {
        let mut w = Vec::new();
        for tok in r.split_whitespace() {
            let id = by_name
                .get(tok)
                .copied()
                .ok_or_else(|| PresentationError::UnknownGenerator {
                    relator: ri,
                    name: tok.to_string(),
                })?;
            w.push(id);
        }
        words.push(w);
    }

    // Short relators identify letters; repeat until nothing changes.
    loop {
        let mut changed = false;
        let mut kept = Vec::with_capacity(words.len());
        for w in words.drain(..) {
            let w = normalize(&mut letters, &w);
            match w.len() {
                0 => {}
                1 => changed |= letters.merge(w[0], 0),
                2 => {
                    let inv = letters.inverse(w[0]);
                    changed |= letters.merge(w[1], inv);
                }
                _ => kept.push(w),
            }
        }
        words = kept;
        if !changed {
            break;
        }
    }

    // Abbreviate leftmost pairs until every relator is a triangle.
    let mut known: HashMap<(usize, usize), usize> = HashMap::new();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    for w in &words {
        if w.len() == 3 {
            let c = letters.inverse(w[2]);
            known.entry((w[0], w[1])).or_insert(c);
        }
    }
    let mut fresh = 0usize;
    for w in &words {
        let mut w = w.clone();
        while w.len() > 3 {
            let pair = (w[0], w[1]);
            let t = match known.get(&pair) {
                Some(&t) => t,
                None => {
                    fresh += 1;
                    let t = letters.push_pair(format!("t{fresh}"));
                    known.insert(pair, t);
                    triangles.push([pair.0, pair.1, letters.inv[t]]);
                    t
                }
            };
            w.splice(0..2, [t]);
        }
        triangles.push([w[0], w[1], w[2]]);
    }

    // Collapse letter classes to dense element ids, 1 first.
    let n_letters = letters.names.len();
    let mut class_of = vec![usize::MAX; n_letters];
    let mut names = Vec::new();
    let mut root_id: HashMap<usize, usize> = HashMap::new();
    for x in 0..n_letters {
        let r = letters.find(x);
        let id = *root_id.entry(r).or_insert_with(|| {
            names.push(letters.names[r].clone());
            names.len() - 1
        });
        class_of[x] = id;
    }
    let n = names.len();
    let mut inverse = vec![0usize; n];
    for x in 0..n_letters {
        inverse[class_of[x]] = class_of[letters.inv[x]];
    }

    let mut table: Vec<Option<usize>> = vec![None; n * n];
    let clash = |a: usize, b: usize, first: usize, second: usize| PresentationError::Clash {
        a: names[a].clone(),
        b: names[b].clone(),
        first: names[first].clone(),
        second: names[second].clone(),
    };
    let set = |table: &mut Vec<Option<usize>>, a: usize, b: usize, c: usize| -> Result<bool, PresentationError> {
        match table[a * n + b] {
            None => {
                table[a * n + b] = Some(c);
                Ok(true)
            }
            Some(d) if d == c => Ok(false),
            Some(d) => Err(clash(a, b, d, c)),
        }
    };
    for x in 0..n {
        set(&mut table, 0, x, x)?;
        set(&mut table, x, 0, x)?;
        set(&mut table, x, inverse[x], 0)?;
    }
    for [a, b, c] in &triangles {
        let (a, b, c) = (class_of[*a], class_of[*b], class_of[*c]);
        // abc = 1 means ab = c⁻¹.
        set(&mut table, a, b, inverse[c])?;
    }

    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                let Some(c) = table[a * n + b] else { continue };
                let (ai, bi, ci) = (inverse[a], inverse[b], inverse[c]);
                for (x, y, z) in [(ai, c, b), (c, bi, a), (b, ci, ai), (ci, a, bi), (bi, ai, ci)] {
                    changed |= set(&mut table, x, y, z)?;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = table[a * n + b] else { continue };
                for c in 0..n {
                    let Some(bc) = table[b * n + c] else { continue };
                    match (table[ab * n + c], table[a * n + bc]) {
                        (Some(l), None) => changed |= set(&mut table, a, bc, l)?,
                        (None, Some(r)) => changed |= set(&mut table, ab, c, r)?,
                        (Some(l), Some(r)) if l != r => return Err(clash(ab, c, l, r)),
                        _ => {}
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let pree = Pree::from_raw(
        names,
        Elem(0),
        inverse.iter().map(|&i| Elem(i as u16)).collect(),
        table.into_iter().map(|c| c.map(|c| Elem(c as u16))).collect(),
    )?;

    let mut report = validate_pree(&pree);
    report.subject = "pree from presentation".into();
    for k in [4, 5] {
        let name = format!("axiom-A({k})");
        let check = match check_axiom(&pree, k) {
            AxiomOutcome::Pass { cycles_checked } => {
                Check::new(name).with_summary(format!("holds ({cycles_checked} cycles)"))
            }
            AxiomOutcome::Counterexample(w) => {
                let mut c = Check::new(name);
                c.violation(|| w.describe(&pree));
                c.with_summary("fails")
            }
        };
        report.push(check);
    }
    Ok((pree, report))
}

/// Maps letters to class representatives. Words of length three are product
/// declarations and are kept verbatim; other words lose identity letters
/// and inverse pairs (cyclically).
fn normalize(letters: &mut Letters, w: &[usize]) -> Vec<usize> {
    if w.len() == 3 {
        return w.iter().map(|&x| letters.find(x)).collect();
    }
    let mut out: Vec<usize> = Vec::with_capacity(w.len());
    for &x in w {
        let r = letters.find(x);
        if r == 0 {
            continue;
        }
        if let Some(&last) = out.last() {
            if letters.inverse(last) == r {
                out.pop();
                continue;
            }
        }
        out.push(r);
    }
    while out.len() >= 2 {
        let (first, last) = (out[0], out[out.len() - 1]);
        if letters.inverse(last) == first {
            out.pop();
            out.remove(0);
        } else {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_of_order_three() {
        let (p, report) = pree_from_presentation(&["x"], &["x x x"]).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(p.len(), 3);
        assert!(p.is_total());
        let x = p.lookup("x").unwrap();
        let xi = p.lookup("x^-1").unwrap();
        assert_eq!(p.product(x, x), Some(xi));
        assert_eq!(p.product(xi, xi), Some(x));
    }

    #[test]
    fn conflicting_products_are_rejected() {
        // x² = 1 makes x self-inverse; x·x = x then clashes with x·x = 1.
        let err = pree_from_presentation(&["x"], &["x x", "x x x^-1"]).unwrap_err();
        assert!(matches!(err, PresentationError::Clash { .. }), "{err}");
    }

    #[test]
    fn commutator_gives_seven_elements() {
        let (p, report) = pree_from_presentation(&["x", "y"], &["x y x^-1 y^-1"]).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(p.len(), 7);
        let x = p.lookup("x").unwrap();
        let y = p.lookup("y").unwrap();
        assert_eq!(p.product(x, y), p.product(y, x));
        assert!(p.product(x, y).is_some());
    }

    #[test]
    fn unknown_generator() {
        assert!(matches!(
            pree_from_presentation(&["x"], &["x z"]),
            Err(PresentationError::UnknownGenerator { relator: 0, .. })
        ));
    }

    #[test]
    fn trivial_relator_collapses_generator() {
        let (p, report) = pree_from_presentation(&["x", "y"], &["x"]).unwrap();
        assert!(report.passed());
        // 1 and x, x^-1 collapse; y and y^-1 remain.
        assert_eq!(p.len(), 3);
    }
}

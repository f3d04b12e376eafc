//! Finite prees: a set with identity, two-sided inverses and a partial
//! product obeying the restricted associative law.
//!
//! Elements are interned to dense ids and the product is an `n x n` table
//! with a sentinel for undefined entries, so every lookup is O(1).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::report::{Check, VerificationReport};

/// Dense element id, `0..n`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u16);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

const UNDEFINED: u16 = u16::MAX;

/// Largest supported element count (the sentinel takes the last id).
pub const MAX_ELEMENTS: usize = u16::MAX as usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PreeError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate element `{name}`")]
    DuplicateElement { line: usize, name: String },
    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { line: usize, name: String },
    #[error("no identity declared")]
    MissingIdentity,
    #[error("no elements declared")]
    Empty,
    #[error("inverse of `{0}` is declared inconsistently")]
    ConflictingInverse(String),
    #[error("`{0}` has no declared inverse and cannot be self-inverse")]
    MissingInverse(String),
    #[error("too many elements ({0})")]
    TooLarge(usize),
}

/// A finite pree. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Pree {
    names: Vec<String>,
    index: HashMap<String, Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
    table: Vec<u16>,
    /// `factors[c]` lists every `(a, b)` with `ab = c`, ascending.
    factors: Vec<Vec<(Elem, Elem)>>,
}

impl fmt::Debug for Pree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pree")
            .field("elements", &self.names)
            .field("identity", &self.name(self.identity))
            .field("defined_products", &self.defined_count())
            .finish()
    }
}

impl Pree {
    /// Builds a pree from raw tables without completing anything.
    ///
    /// `table[a * n + b]` is the product `ab`. Use [`PreeBuilder`] to get the
    /// identity, inverse and triangle-closure entries filled in.
    pub fn from_raw(
        names: Vec<String>,
        identity: Elem,
        inverse: Vec<Elem>,
        table: Vec<Option<Elem>>,
    ) -> Result<Pree, PreeError> {
        let n = names.len();
        if n == 0 {
            return Err(PreeError::Empty);
        }
        if n >= MAX_ELEMENTS {
            return Err(PreeError::TooLarge(n));
        }
        assert_eq!(inverse.len(), n, "inverse table has wrong size");
        assert_eq!(table.len(), n * n, "product table has wrong size");
        assert!(identity.index() < n, "identity out of range");
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), Elem(i as u16)).is_some() {
                return Err(PreeError::DuplicateElement {
                    line: 0,
                    name: name.clone(),
                });
            }
        }
        let table: Vec<u16> = table
            .into_iter()
            .map(|c| c.map_or(UNDEFINED, |c| c.0))
            .collect();
        let mut factors = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                let c = table[a * n + b];
                if c != UNDEFINED {
                    factors[c as usize].push((Elem(a as u16), Elem(b as u16)));
                }
            }
        }
        Ok(Pree {
            names,
            index,
            identity,
            inverse,
            table,
            factors,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.names.len() as u16).map(Elem)
    }

    /// Every element except the identity, i.e. the generators of `U(P)`.
    pub fn generators(&self) -> impl Iterator<Item = Elem> + '_ {
        let id = self.identity;
        self.elements().filter(move |&e| e != id)
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn inverse(&self, a: Elem) -> Elem {
        self.inverse[a.index()]
    }

    /// The partial product `ab`; `None` when the table leaves it undefined.
    #[inline]
    pub fn product(&self, a: Elem, b: Elem) -> Option<Elem> {
        let c = self.table[a.index() * self.names.len() + b.index()];
        (c != UNDEFINED).then_some(Elem(c))
    }

    #[inline]
    pub fn is_defined(&self, a: Elem, b: Elem) -> bool {
        self.table[a.index() * self.names.len() + b.index()] != UNDEFINED
    }

    /// All `(a, b)` with `ab = c`.
    pub fn factorizations(&self, c: Elem) -> &[(Elem, Elem)] {
        &self.factors[c.index()]
    }

    pub fn defined_products(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        let n = self.len();
        self.table.iter().enumerate().filter_map(move |(i, &c)| {
            (c != UNDEFINED).then(|| (Elem((i / n) as u16), Elem((i % n) as u16), Elem(c)))
        })
    }

    pub fn defined_count(&self) -> usize {
        self.table.iter().filter(|&&c| c != UNDEFINED).count()
    }

    /// True when every product is defined, i.e. the table is a group table.
    pub fn is_total(&self) -> bool {
        self.table.iter().all(|&c| c != UNDEFINED)
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<Elem> {
        self.index.get(name).copied()
    }

    /// Serializes to the pree file format. Identity and inverse laws are
    /// implied by the format and omitted from the product lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("elements:");
        for name in &self.names {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        out.push_str(&format!("identity: {}\n", self.name(self.identity)));
        for a in self.generators() {
            let inv = self.inverse(a);
            if a <= inv {
                out.push_str(&format!("inverse: {} {}\n", self.name(a), self.name(inv)));
            }
        }
        for (a, b, c) in self.defined_products() {
            if a == self.identity || b == self.identity || c == self.identity {
                continue;
            }
            out.push_str(&format!(
                "product: {} {} {}\n",
                self.name(a),
                self.name(b),
                self.name(c)
            ));
        }
        out
    }
}

/// Accumulates declared entries and completes them into a [`Pree`].
///
/// Completion adds the identity laws, the inverse laws and, to a fixpoint,
/// the six products read off each product triangle. Entries already present
/// are never overwritten, so a contradictory declaration survives into the
/// table where [`validate_pree`] reports it.
#[derive(Debug, Clone, Default)]
pub struct PreeBuilder {
    names: Vec<String>,
    index: HashMap<String, Elem>,
    identity: Option<Elem>,
    inverse: Vec<Option<Elem>>,
    products: Vec<(Elem, Elem, Elem)>,
}

impl PreeBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn element(&mut self, name: &str) -> Result<Elem, PreeError> {
        if self.index.contains_key(name) {
            return Err(PreeError::DuplicateElement {
                line: 0,
                name: name.to_string(),
            });
        }
        if self.names.len() + 1 >= MAX_ELEMENTS {
            return Err(PreeError::TooLarge(self.names.len() + 1));
        }
        let e = Elem(self.names.len() as u16);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), e);
        self.inverse.push(None);
        Ok(e)
    }

    pub fn get(&self, name: &str) -> Option<Elem> {
        self.index.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn set_identity(&mut self, e: Elem) {
        self.identity = Some(e);
    }

    /// Declares `a⁻¹ = b` (and so `b⁻¹ = a`).
    pub fn set_inverse(&mut self, a: Elem, b: Elem) -> Result<(), PreeError> {
        for (x, y) in [(a, b), (b, a)] {
            match self.inverse[x.index()] {
                Some(prev) if prev != y => {
                    return Err(PreeError::ConflictingInverse(self.names[x.index()].clone()))
                }
                _ => self.inverse[x.index()] = Some(y),
            }
        }
        Ok(())
    }

    /// Declares `ab = c`.
    pub fn product(&mut self, a: Elem, b: Elem, c: Elem) {
        self.products.push((a, b, c));
    }

    pub fn build(self) -> Result<Pree, PreeError> {
        let n = self.names.len();
        if n == 0 {
            return Err(PreeError::Empty);
        }
        let identity = self.identity.ok_or(PreeError::MissingIdentity)?;
        let mut inverse = self.inverse.clone();
        inverse[identity.index()] = Some(identity);
        // Undeclared inverses: an explicit product `ab = 1`, otherwise
        // self-inverse when nothing contradicts it.
        for a in 0..n {
            if inverse[a].is_some() {
                continue;
            }
            let ea = Elem(a as u16);
            let from_product = self
                .products
                .iter()
                .find(|&&(x, _, c)| x == ea && c == identity)
                .map(|&(_, b, _)| b);
            let candidate = match from_product {
                Some(b) => b,
                None => {
                    let clash = self
                        .products
                        .iter()
                        .any(|&(x, y, c)| x == ea && y == ea && c != identity);
                    if clash {
                        return Err(PreeError::MissingInverse(self.names[a].clone()));
                    }
                    ea
                }
            };
            match inverse[candidate.index()] {
                Some(back) if back != ea => {
                    return Err(PreeError::MissingInverse(self.names[a].clone()))
                }
                _ => {
                    inverse[a] = Some(candidate);
                    inverse[candidate.index()] = Some(ea);
                }
            }
        }
        let inverse: Vec<Elem> = inverse.into_iter().map(|i| i.unwrap()).collect();

        let mut table = vec![None; n * n];
        let mut queue: Vec<(Elem, Elem, Elem)> = Vec::new();
        let set = |table: &mut Vec<Option<Elem>>, queue: &mut Vec<_>, a: Elem, b: Elem, c: Elem| {
            let slot = &mut table[a.index() * n + b.index()];
            if slot.is_none() {
                *slot = Some(c);
                queue.push((a, b, c));
            }
        };
        for &(a, b, c) in &self.products {
            set(&mut table, &mut queue, a, b, c);
        }
        for i in 0..n {
            let a = Elem(i as u16);
            set(&mut table, &mut queue, identity, a, a);
            set(&mut table, &mut queue, a, identity, a);
            set(&mut table, &mut queue, a, inverse[i], identity);
        }
        while let Some((a, b, c)) = queue.pop() {
            let (ai, bi, ci) = (inverse[a.index()], inverse[b.index()], inverse[c.index()]);
            set(&mut table, &mut queue, ai, c, b);
            set(&mut table, &mut queue, c, bi, a);
            set(&mut table, &mut queue, b, ci, ai);
            set(&mut table, &mut queue, ci, a, bi);
            set(&mut table, &mut queue, bi, ai, ci);
        }
        Pree::from_raw(self.names, identity, inverse, table)
    }
}

/// Parses the line-oriented pree format:
///
/// ```text
/// # comment
/// elements: 1 a A
/// identity: 1
/// inverse: a A
/// product: a a A
/// ```
///
/// Triangle-closure consequences may be omitted; they are filled in. The
/// result is not validated.
pub fn load_pree(source: &str) -> Result<Pree, PreeError> {
    let mut builder = PreeBuilder::new();
    let mut identity_name: Option<(usize, String)> = None;
    let mut inverse_lines: Vec<(usize, String, String)> = Vec::new();
    let mut product_lines: Vec<(usize, [String; 3])> = Vec::new();

    for (i, raw) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| PreeError::Parse {
            line: line_no,
            message: format!("expected `key: values`, got `{line}`"),
        })?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        let arity = |want: usize| -> Result<(), PreeError> {
            if fields.len() == want {
                Ok(())
            } else {
                Err(PreeError::Parse {
                    line: line_no,
                    message: format!("`{}` takes {want} names, got {}", key.trim(), fields.len()),
                })
            }
        };
        match key.trim() {
            "elements" => {
                if fields.is_empty() {
                    return Err(PreeError::Parse {
                        line: line_no,
                        message: "empty element list".into(),
                    });
                }
                for name in fields {
                    builder.element(name).map_err(|e| match e {
                        PreeError::DuplicateElement { name, .. } => {
                            PreeError::DuplicateElement { line: line_no, name }
                        }
                        other => other,
                    })?;
                }
            }
            "identity" => {
                arity(1)?;
                if identity_name.is_some() {
                    return Err(PreeError::Parse {
                        line: line_no,
                        message: "identity declared twice".into(),
                    });
                }
                identity_name = Some((line_no, fields[0].to_string()));
            }
            "inverse" => {
                arity(2)?;
                inverse_lines.push((line_no, fields[0].to_string(), fields[1].to_string()));
            }
            "product" => {
                arity(3)?;
                product_lines.push((
                    line_no,
                    [fields[0].to_string(), fields[1].to_string(), fields[2].to_string()],
                ));
            }
            other => {
                return Err(PreeError::Parse {
                    line: line_no,
                    message: format!("unknown key `{other}`"),
                })
            }
        }
    }

    let resolve = |builder: &PreeBuilder, line: usize, name: &str| {
        builder.get(name).ok_or_else(|| PreeError::UnknownElement {
            line,
            name: name.to_string(),
        })
    };
    let (id_line, id_name) = identity_name.ok_or(PreeError::MissingIdentity)?;
    let identity = resolve(&builder, id_line, &id_name)?;
    builder.set_identity(identity);
    for (line, a, b) in &inverse_lines {
        let a = resolve(&builder, *line, a)?;
        let b = resolve(&builder, *line, b)?;
        builder.set_inverse(a, b)?;
    }
    for (line, [a, b, c]) in &product_lines {
        let a = resolve(&builder, *line, a)?;
        let b = resolve(&builder, *line, b)?;
        let c = resolve(&builder, *line, c)?;
        builder.product(a, b, c);
    }
    builder.build()
}

/// Exhaustively checks every pree axiom and lists each violation.
pub fn validate_pree(p: &Pree) -> VerificationReport {
    let nm = |e: Elem| p.name(e).to_string();
    let show = |e: Option<Elem>| e.map_or_else(|| "undefined".to_string(), |e| p.name(e).to_string());
    let one = p.identity();
    let mut report = VerificationReport::new("pree axioms");

    let mut identity = Check::new("identity");
    if p.inverse(one) != one {
        identity.violation(|| format!("inverse({}) = {}", nm(one), nm(p.inverse(one))));
    }
    for a in p.elements() {
        if p.product(one, a) != Some(a) {
            identity.violation(|| format!("{}*{} = {}", nm(one), nm(a), show(p.product(one, a))));
        }
        if p.product(a, one) != Some(a) {
            identity.violation(|| format!("{}*{} = {}", nm(a), nm(one), show(p.product(a, one))));
        }
    }
    report.push(identity);

    let mut inverses = Check::new("inverses");
    for a in p.elements() {
        let ai = p.inverse(a);
        if p.inverse(ai) != a {
            inverses.violation(|| format!("inverse(inverse({})) = {}", nm(a), nm(p.inverse(ai))));
        }
        if p.product(a, ai) != Some(one) {
            inverses.violation(|| format!("{}*{} = {}", nm(a), nm(ai), show(p.product(a, ai))));
        }
        if p.product(ai, a) != Some(one) {
            inverses.violation(|| format!("{}*{} = {}", nm(ai), nm(a), show(p.product(ai, a))));
        }
    }
    report.push(inverses);

    let mut unique = Check::new("inverse-uniqueness");
    for (a, b, c) in p.defined_products() {
        if c == one && b != p.inverse(a) {
            unique.violation(|| format!("{}*{} = {} but inverse({}) = {}", nm(a), nm(b), nm(one), nm(a), nm(p.inverse(a))));
        }
    }
    report.push(unique);

    let mut closure = Check::new("triangle-closure");
    for (a, b, c) in p.defined_products() {
        let (ai, bi, ci) = (p.inverse(a), p.inverse(b), p.inverse(c));
        let derived = [(ai, c, b), (c, bi, a), (b, ci, ai), (ci, a, bi), (bi, ai, ci)];
        for (x, y, z) in derived {
            let got = p.product(x, y);
            if got != Some(z) {
                closure.violation(|| {
                    format!(
                        "({},{},{}): {}*{} should be {} but is {}",
                        nm(a), nm(b), nm(c), nm(x), nm(y), nm(z), show(got)
                    )
                });
            }
        }
    }
    report.push(closure);

    let mut assoc = Check::new("associativity");
    for a in p.elements() {
        for b in p.elements() {
            let Some(ab) = p.product(a, b) else { continue };
            for c in p.elements() {
                let Some(bc) = p.product(b, c) else { continue };
                let left = p.product(ab, c);
                let right = p.product(a, bc);
                if left != right {
                    assoc.violation(|| {
                        format!(
                            "({}*{})*{} = {} but {}*({}*{}) = {}",
                            nm(a), nm(b), nm(c), show(left), nm(a), nm(b), nm(c), show(right)
                        )
                    });
                }
            }
        }
    }
    report.push(assoc);

    for c in &mut report.checks {
        if c.passed() {
            c.summary = "ok".into();
        }
    }
    report
}

/// A cycle `a_1..a_n` whose quotients `b_i = a_i⁻¹ a_{i+1}` are all defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub cycle: Vec<Elem>,
    pub quotients: Vec<Elem>,
}

impl AxiomWitness {
    /// Builds the witness for `cycle` if every quotient is defined.
    pub fn from_cycle(p: &Pree, cycle: &[Elem]) -> Option<AxiomWitness> {
        let n = cycle.len();
        let quotients = (0..n)
            .map(|i| p.product(p.inverse(cycle[i]), cycle[(i + 1) % n]))
            .collect::<Option<Vec<_>>>()?;
        Some(AxiomWitness {
            cycle: cycle.to_vec(),
            quotients,
        })
    }

    /// True when no consecutive quotient product `b_i b_{i+1}` is defined.
    pub fn is_counterexample(&self, p: &Pree) -> bool {
        let n = self.quotients.len();
        (0..n).all(|i| !p.is_defined(self.quotients[i], self.quotients[(i + 1) % n]))
    }

    /// Every rotation and the reversed cycle must be counterexamples too.
    pub fn symmetric_closure_holds(&self, p: &Pree) -> bool {
        let n = self.cycle.len();
        let mut variants: Vec<Vec<Elem>> = (0..n)
            .map(|r| (0..n).map(|i| self.cycle[(i + r) % n]).collect())
            .collect();
        let rev: Vec<Elem> = self.cycle.iter().rev().copied().collect();
        variants.extend((0..n).map(|r| (0..n).map(|i| rev[(i + r) % n]).collect()));
        variants.iter().all(|cyc| {
            AxiomWitness::from_cycle(p, cyc).is_some_and(|w| w.is_counterexample(p))
        })
    }

    pub fn describe(&self, p: &Pree) -> String {
        let names = |v: &[Elem]| v.iter().map(|&e| p.name(e)).collect::<Vec<_>>().join(" ");
        format!("cycle ({}) quotients ({})", names(&self.cycle), names(&self.quotients))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomOutcome {
    Pass { cycles_checked: usize },
    Counterexample(AxiomWitness),
}

impl AxiomOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, AxiomOutcome::Pass { .. })
    }
}

/// Decides Axiom A(`n`) by enumerating every length-`n` cycle with defined
/// quotients, in lexicographic order of ids. Returns the first cycle where
/// no `b_i b_{i+1}` is defined.
pub fn check_axiom(p: &Pree, n: usize) -> AxiomOutcome {
    assert!(n >= 2, "axiom cycles have length at least 2");
    let mut cycle = Vec::with_capacity(n);
    let mut quotients = Vec::with_capacity(n);
    let mut checked = 0usize;
    for first in p.elements() {
        cycle.clear();
        quotients.clear();
        cycle.push(first);
        if let Some(w) = extend_cycle(p, n, &mut cycle, &mut quotients, &mut checked) {
            return AxiomOutcome::Counterexample(w);
        }
    }
    AxiomOutcome::Pass {
        cycles_checked: checked,
    }
}

fn extend_cycle(
    p: &Pree,
    n: usize,
    cycle: &mut Vec<Elem>,
    quotients: &mut Vec<Elem>,
    checked: &mut usize,
) -> Option<AxiomWitness> {
    let last = *cycle.last().unwrap();
    let last_inv = p.inverse(last);
    if cycle.len() == n {
        let close = p.product(last_inv, cycle[0])?;
        *checked += 1;
        quotients.push(close);
        let fails = (0..n).all(|i| !p.is_defined(quotients[i], quotients[(i + 1) % n]));
        let out = fails.then(|| AxiomWitness {
            cycle: cycle.clone(),
            quotients: quotients.clone(),
        });
        quotients.pop();
        return out;
    }
    for next in p.elements() {
        let Some(q) = p.product(last_inv, next) else { continue };
        // Prune: once b_{i-1} b_i is defined this cycle cannot fail.
        if let Some(&prev) = quotients.last() {
            if p.is_defined(prev, q) {
                continue;
            }
        }
        cycle.push(next);
        quotients.push(q);
        let found = extend_cycle(p, n, cycle, quotients, checked);
        cycle.pop();
        quotients.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z3: &str = "elements: 1 x X\nidentity: 1\ninverse: x X\nproduct: x x X\n";

    #[test]
    fn loader_completes_z3() {
        let p = load_pree(Z3).unwrap();
        assert!(p.is_total());
        let x = p.lookup("x").unwrap();
        let xi = p.lookup("X").unwrap();
        assert_eq!(p.product(xi, xi), Some(x));
        assert!(validate_pree(&p).passed());
    }

    #[test]
    fn trivial_pree() {
        let p = load_pree("elements: 1\nidentity: 1\nproduct: 1 1 1\n").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.product(p.identity(), p.identity()), Some(p.identity()));
        assert!(validate_pree(&p).passed());
        assert!(check_axiom(&p, 4).holds());
    }

    #[test]
    fn loader_errors() {
        assert!(matches!(
            load_pree("elements: 1 a\nidentity: 1\nproduct: a a c\n"),
            Err(PreeError::UnknownElement { line: 3, .. })
        ));
        assert!(matches!(
            load_pree("elements: 1 a a\nidentity: 1\n"),
            Err(PreeError::DuplicateElement { line: 1, .. })
        ));
        assert!(matches!(load_pree("elements: 1 a\n"), Err(PreeError::MissingIdentity)));
        assert!(matches!(
            load_pree("elements: 1\nidentity 1\n"),
            Err(PreeError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_pree("elements: 1 a\nidentity: 1\nproduct: a a\n"),
            Err(PreeError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            load_pree("elements: 1 a b\nidentity: 1\ninverse: a b\ninverse: a a\n"),
            Err(PreeError::ConflictingInverse(_))
        ));
        // a*a = b with no inverse line: a cannot default to self-inverse.
        assert!(matches!(
            load_pree("elements: 1 a b\nidentity: 1\nproduct: a a b\n"),
            Err(PreeError::MissingInverse(_))
        ));
    }

    #[test]
    fn inverse_defaults() {
        let p = load_pree("elements: 1 a b\nidentity: 1\nproduct: a b 1\n").unwrap();
        let (a, b) = (p.lookup("a").unwrap(), p.lookup("b").unwrap());
        assert_eq!(p.inverse(a), b);
        assert_eq!(p.inverse(b), a);
        let p = load_pree("elements: 1 t\nidentity: 1\n").unwrap();
        let t = p.lookup("t").unwrap();
        assert_eq!(p.inverse(t), t);
        assert_eq!(p.product(t, t), Some(p.identity()));
    }

    #[test]
    fn missing_closure_entry_is_reported() {
        // Z/3 with x*x = X declared but the derived x⁻¹*X = x missing.
        let names = vec!["1".to_string(), "x".to_string(), "X".to_string()];
        let (one, x, xi) = (Elem(0), Elem(1), Elem(2));
        let mut table = vec![None; 9];
        for a in [one, x, xi] {
            table[a.index()] = Some(a);
            table[a.index() * 3] = Some(a);
        }
        table[x.index() * 3 + xi.index()] = Some(one);
        table[xi.index() * 3 + x.index()] = Some(one);
        table[x.index() * 3 + x.index()] = Some(xi);
        let p = Pree::from_raw(names, one, vec![one, xi, x], table).unwrap();
        let report = validate_pree(&p);
        let closure = report.check("triangle-closure").unwrap();
        assert!(!closure.passed());
        assert!(closure.witnesses[0].starts_with("(x,x,X)"));
    }

    #[test]
    fn conflicting_declaration_survives_to_validation() {
        let src = "elements: 1 a b c\nidentity: 1\ninverse: a a\ninverse: b b\ninverse: c c\n\
                   product: a b c\nproduct: a c a\n";
        let p = load_pree(src).unwrap();
        let report = validate_pree(&p);
        assert!(!report.check("triangle-closure").unwrap().passed());
    }

    #[test]
    fn round_trip_text() {
        let p = load_pree(Z3).unwrap();
        let q = load_pree(&p.to_text()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn axiom_witness_symmetry() {
        // Free-product-like pree: only trivial products. Every cycle has a
        // quotient equal to 1 or an inverse pair, so both axioms hold.
        let p = load_pree("elements: 1 a A b B\nidentity: 1\ninverse: a A\ninverse: b B\n").unwrap();
        assert!(check_axiom(&p, 4).holds());
        assert!(check_axiom(&p, 5).holds());
    }
}

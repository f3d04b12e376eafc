use std::fmt::Write;

use crate::fsa::{Alphabet, Dfa, Symbol};
use crate::pree::{Elem, Pree};
use crate::report::quote;

pub fn symbol_name(p: &Pree, alphabet: Alphabet, s: Symbol) -> String {
    match alphabet {
        Alphabet::Letters(_) => p.name(Elem(s as u16)).to_string(),
        Alphabet::Pairs(_) => {
            let (x, y) = alphabet.split(s);
            let side = |v: Option<usize>| v.map_or("$".to_string(), |i| p.name(Elem(i as u16)).to_string());
            format!("{}|{}", side(x), side(y))
        }
    }
}

fn alphabet_label(a: Alphabet) -> String {
    match a {
        Alphabet::Letters(n) => format!("letters:{n}"),
        Alphabet::Pairs(n) => format!("pairs:{n}"),
    }
}

/// Record stream: one header line, then states, then transitions in state
/// and symbol order.
pub fn to_records(p: &Pree, d: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "automaton alphabet={} deterministic=true states={} initial={}",
        alphabet_label(d.alphabet()),
        d.num_states(),
        d.initial()
    );
    for q in 0..d.num_states() as u32 {
        let _ = writeln!(out, "state id={q} accepting={}", d.is_accepting(q));
    }
    for q in 0..d.num_states() as u32 {
        for s in 0..d.alphabet().size() as Symbol {
            if let Some(t) = d.step(q, s) {
                let _ = writeln!(
                    out,
                    "transition from={q} symbol={} to={t}",
                    quote(&symbol_name(p, d.alphabet(), s))
                );
            }
        }
    }
    out
}

/// Graphviz rendering; parallel transitions are merged into one edge.
pub fn to_dot(p: &Pree, d: &Dfa, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  start [shape=point];");
    for q in 0..d.num_states() as u32 {
        let shape = if d.is_accepting(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{q} [shape={shape}];");
    }
    let _ = writeln!(out, "  start -> q{};", d.initial());
    for q in 0..d.num_states() as u32 {
        let mut targets: Vec<(u32, Vec<String>)> = Vec::new();
        for s in 0..d.alphabet().size() as Symbol {
            if let Some(t) = d.step(q, s) {
                let label = symbol_name(p, d.alphabet(), s);
                match targets.iter_mut().find(|(x, _)| *x == t) {
                    Some((_, labels)) => labels.push(label),
                    None => targets.push((t, vec![label])),
                }
            }
        }
        for (t, labels) in targets {
            let _ = writeln!(out, "  q{q} -> q{t} [label={}];", quote(&labels.join(", ")));
        }
    }
    out.push_str("}\n");
    out
}

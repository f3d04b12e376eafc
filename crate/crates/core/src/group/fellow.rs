//! Synchronous fellow traveling of language words.
//!
//! Two words `u`, `v` from the same start whose endpoints are equal or one
//! generator apart are compared step by step: `g_i`, `h_i` are the prefix
//! elements and the shorter word is padded with its endpoint.

use std::collections::HashMap;

use crate::fsa::Dfa;
use crate::group::ball::CayleyBall;
use crate::group::solver::WordProblem;
use crate::pree::{Elem, Pree};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub u: Word,
    pub v: Word,
    /// Step index `i` of the offending `ρ(g_i, h_i)`.
    pub step: usize,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FellowTravelerReport {
    pub radius: usize,
    pub target: usize,
    pub k_required: usize,
    /// First pair (in enumeration order) attaining `k_required`.
    pub worst: Option<PairWitness>,
    /// First pair and step exceeding the target.
    pub first_violation: Option<PairWitness>,
    pub words: usize,
    pub pairs: usize,
    pub pass: bool,
    /// Set when the check could not run.
    pub skipped: Option<String>,
}

impl FellowTravelerReport {
    pub fn render(&self, p: &Pree) -> String {
        if let Some(why) = &self.skipped {
            return format!("fellow traveling: skipped ({why})\n");
        }
        let mut out = format!(
            "fellow traveling radius={} target={} words={} pairs={} observed={} result={}\n",
            self.radius,
            self.target,
            self.words,
            self.pairs,
            self.k_required,
            if self.pass { "pass" } else { "fail" }
        );
        let show = |label: &str, w: &PairWitness| {
            format!(
                "{label}: u=\"{}\" v=\"{}\" step={} distance={}\n",
                w.u.display(p),
                w.v.display(p),
                w.step,
                w.distance
            )
        };
        if let Some(w) = &self.worst {
            out.push_str(&show("worst", w));
        }
        if let Some(w) = &self.first_violation {
            out.push_str(&show("violation", w));
        }
        out
    }
}

/// Distance in `U(P)` between the elements of `u` and `v`.
pub fn word_distance(wp: &WordProblem, u: &[Elem], v: &[Elem]) -> Option<usize> {
    let p = wp.pree();
    let mut w: Vec<Elem> = u.iter().rev().map(|&a| p.inverse(a)).collect();
    w.extend_from_slice(v);
    wp.distance(&w)
}

/// The synchronous distances `ρ(g_i, h_i)` for `i = 0..=max(|u|, |v|)`.
pub fn synchronous_distances(wp: &WordProblem, u: &[Elem], v: &[Elem]) -> Option<Vec<usize>> {
    let steps = u.len().max(v.len());
    (0..=steps)
        .map(|i| word_distance(wp, &u[..i.min(u.len())], &v[..i.min(v.len())]))
        .collect()
}

/// Checks every pair of words of `language` with length at most `radius`
/// whose endpoints are at most one generator apart. The word `1` stands
/// for the identity. Needs the strong-reduction solver for distances.
pub fn fellow_traveler_check(
    wp: &WordProblem,
    language: &Dfa,
    radius: usize,
    k: usize,
) -> FellowTravelerReport {
    let mut report = FellowTravelerReport {
        radius,
        target: k,
        k_required: 0,
        worst: None,
        first_violation: None,
        words: 0,
        pairs: 0,
        pass: false,
        skipped: None,
    };
    if !wp.dehn_applies() {
        report.skipped = Some("word metric unavailable without A(4) and A(5)".into());
        return report;
    }
    let p = wp.pree();
    let ball = match CayleyBall::build(wp, radius, usize::MAX) {
        Ok(b) => b,
        Err(e) => {
            report.skipped = Some(e.to_string());
            return report;
        }
    };
    let gen_index: HashMap<Elem, usize> =
        ball.generators().iter().enumerate().map(|(i, &g)| (g, i)).collect();

    let mut words: Vec<Vec<Elem>> = vec![vec![p.identity()]];
    words.extend(
        language
            .enumerate(radius)
            .into_iter()
            .map(|w| w.into_iter().map(|s| Elem(s as u16)).collect()),
    );
    report.words = words.len();

    // Prefix elements of each word, walked through the ball's right table.
    let mut prefixes: Vec<Vec<u32>> = Vec::with_capacity(words.len());
    for w in &words {
        let mut ids = vec![0u32];
        let mut cur = 0u32;
        for (i, &a) in w.iter().enumerate() {
            if a != p.identity() {
                cur = match ball.right(cur, gen_index[&a]) {
                    Some(id) => id,
                    None => match ball.locate(wp, &w[..=i]) {
                        Some(id) => id,
                        None => {
                            report.skipped = Some(format!(
                                "prefix of \"{}\" leaves the ball",
                                Word(w.clone()).display(p)
                            ));
                            return report;
                        }
                    },
                };
            }
            ids.push(cur);
        }
        prefixes.push(ids);
    }

    let mut by_end: HashMap<u32, Vec<usize>> = HashMap::new();
    for (i, ids) in prefixes.iter().enumerate() {
        by_end.entry(*ids.last().unwrap()).or_default().push(i);
    }

    let mut cache: HashMap<(u32, u32), usize> = HashMap::new();
    let mut dist = |x: u32, y: u32| -> usize {
        if x == y {
            return 0;
        }
        *cache.entry((x.min(y), x.max(y))).or_insert_with(|| {
            word_distance(wp, ball.representative(x), ball.representative(y)).expect("solver")
        })
    };

    for (ui, u_ids) in prefixes.iter().enumerate() {
        let end = *u_ids.last().unwrap();
        let mut ends = vec![end];
        ends.extend((0..ball.generators().len()).filter_map(|gi| ball.right(end, gi)));
        ends.sort_unstable();
        ends.dedup();
        for e in ends {
            let Some(partners) = by_end.get(&e) else { continue };
            for &vi in partners {
                let v_ids = &prefixes[vi];
                report.pairs += 1;
                let steps = u_ids.len().max(v_ids.len());
                for i in 0..steps {
                    let g = u_ids[i.min(u_ids.len() - 1)];
                    let h = v_ids[i.min(v_ids.len() - 1)];
                    let d = dist(g, h);
                    let witness = || PairWitness {
                        u: Word(words[ui].clone()),
                        v: Word(words[vi].clone()),
                        step: i,
                        distance: d,
                    };
                    if report.worst.is_none() || d > report.k_required {
                        report.k_required = d;
                        report.worst = Some(witness());
                    }
                    if d > k && report.first_violation.is_none() {
                        report.first_violation = Some(witness());
                    }
                }
            }
        }
    }
    report.pass = report.k_required <= k;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsa::geodesic_acceptor;
    use crate::pree::load_pree;

    #[test]
    fn finite_group_travels_trivially() {
        let p = load_pree(include_str!("../../../../fixtures/s3.pree")).unwrap();
        let wp = WordProblem::new(&p);
        let r = fellow_traveler_check(&wp, &geodesic_acceptor(&p), 3, 2);
        assert!(r.pass);
        assert!(r.k_required <= 1);
    }

    #[test]
    fn zero_target_fails_with_witness() {
        let p = load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap();
        let wp = WordProblem::new(&p);
        let r = fellow_traveler_check(&wp, &geodesic_acceptor(&p), 2, 0);
        assert!(!r.pass);
        let w = r.first_violation.unwrap();
        let replay = synchronous_distances(&wp, &w.u, &w.v).unwrap();
        assert_eq!(replay[w.step], w.distance);
    }

    #[test]
    fn worst_pair_replays() {
        let p = load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap();
        let wp = WordProblem::new(&p);
        let r = fellow_traveler_check(&wp, &geodesic_acceptor(&p), 3, 5);
        let w = r.worst.unwrap();
        let replay = synchronous_distances(&wp, &w.u, &w.v).unwrap();
        assert_eq!(replay.iter().copied().max(), Some(r.k_required));
    }
}

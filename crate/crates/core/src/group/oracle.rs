//! Identity oracle built only from the neighbor relation of the semigroup
//! presentation of `U(P)`: two words are neighbors when one comes from the
//! other by replacing a subword `ab` with `c` where `ab = c` in the pree.
//! A word represents the identity exactly when it is connected to the
//! one-letter word `1`.
//!
//! Searches never visit words longer than the length bound. `NotIdentity`
//! from a search therefore means "not connected to `1` through words of
//! length at most the bound"; the abelian certificate, when enabled, is an
//! unconditional proof.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::group::abelian::AbelianInvariant;
use crate::pree::{Elem, Pree};

/// Default limit on distinct words a single search may visit.
pub const DEFAULT_STATE_CAP: usize = 2_000_000;

/// Largest dense component table we are willing to allocate (word count).
pub const MAX_TABLE_WORDS: u64 = 60_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    /// The length-bounded neighbor component was exhausted without `1`.
    BoundedComponent,
    /// The word has nonzero image in the abelianization.
    AbelianImage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    Identity,
    NotIdentity(Evidence),
    /// The state cap was hit before the search could decide.
    Unknown,
}

impl OracleVerdict {
    pub fn decided(self) -> Option<bool> {
        match self {
            OracleVerdict::Identity => Some(true),
            OracleVerdict::NotIdentity(_) => Some(false),
            OracleVerdict::Unknown => None,
        }
    }
}

/// Pure neighbor-relation search from `w` towards the word `1`, visiting
/// only words of length at most `length_bound`.
pub fn bfs_identity_oracle(p: &Pree, w: &[Elem], length_bound: usize) -> OracleVerdict {
    neighbor_search(p, w, length_bound, DEFAULT_STATE_CAP)
}

fn neighbor_search(p: &Pree, w: &[Elem], bound: usize, cap: usize) -> OracleVerdict {
    let one = p.identity();
    if w.len() == 1 && w[0] == one {
        return OracleVerdict::Identity;
    }
    let bound = bound.max(w.len());
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    // Shortest words first: contractions are tried before expansions grow
    // the frontier.
    let mut heap: BinaryHeap<Reverse<(usize, Vec<Elem>)>> = BinaryHeap::new();
    seen.insert(w.to_vec());
    heap.push(Reverse((w.len(), w.to_vec())));
    let mut next = Vec::with_capacity(bound);
    while let Some(Reverse((_, cur))) = heap.pop() {
        let visit = |cand: &Vec<Elem>, seen: &mut HashSet<Vec<Elem>>, heap: &mut BinaryHeap<_>| -> Option<OracleVerdict> {
            if cand.len() == 1 && cand[0] == one {
                return Some(OracleVerdict::Identity);
            }
            if !seen.contains(cand) {
                if seen.len() >= cap {
                    return Some(OracleVerdict::Unknown);
                }
                seen.insert(cand.clone());
                heap.push(Reverse((cand.len(), cand.clone())));
            }
            None
        };
        for i in 0..cur.len().saturating_sub(1) {
            if let Some(c) = p.product(cur[i], cur[i + 1]) {
                next.clear();
                next.extend_from_slice(&cur[..i]);
                next.push(c);
                next.extend_from_slice(&cur[i + 2..]);
                if let Some(v) = visit(&next, &mut seen, &mut heap) {
                    return v;
                }
            }
        }
        if cur.len() < bound {
            for i in 0..cur.len() {
                for &(a, b) in p.factorizations(cur[i]) {
                    next.clear();
                    next.extend_from_slice(&cur[..i]);
                    next.push(a);
                    next.push(b);
                    next.extend_from_slice(&cur[i + 1..]);
                    if let Some(v) = visit(&next, &mut seen, &mut heap) {
                        return v;
                    }
                }
            }
        }
    }
    OracleVerdict::NotIdentity(Evidence::BoundedComponent)
}

/// Connected components of the neighbor graph on all words of length
/// `1..=bound`, computed once with union-find. Lookups are then O(1).
#[derive(Debug, Clone)]
pub struct ComponentTable {
    letters: u64,
    bound: usize,
    offsets: Vec<u64>,
    parent: Vec<u32>,
    identity_root: u32,
}

impl ComponentTable {
    pub fn word_count(letters: usize, bound: usize) -> u64 {
        (1..=bound as u32).map(|l| (letters as u64).saturating_pow(l)).sum()
    }

    pub fn build(p: &Pree, bound: usize) -> Option<ComponentTable> {
        let n = p.len() as u64;
        let total = Self::word_count(p.len(), bound);
        if bound == 0 || total > MAX_TABLE_WORDS {
            return None;
        }
        let mut offsets = vec![0u64; bound + 2];
        for l in 1..=bound {
            offsets[l + 1] = offsets[l] + n.pow(l as u32);
        }
        let mut parent: Vec<u32> = (0..total as u32).collect();
        let mut digits = vec![0u16; bound];
        for len in 2..=bound {
            let count = n.pow(len as u32);
            digits[..len].iter_mut().for_each(|d| *d = 0);
            let pow = |e: usize| n.pow(e as u32);
            for val in 0..count {
                let idx = offsets[len] + val;
                for i in 0..len - 1 {
                    let Some(c) = p.product(Elem(digits[i]), Elem(digits[i + 1])) else { continue };
                    let tail = pow(len - 2 - i);
                    let prefix = val / pow(len - i);
                    let suffix = val % tail;
                    let contracted = offsets[len - 1] + (prefix * n + c.0 as u64) * tail + suffix;
                    union(&mut parent, idx as u32, contracted as u32);
                }
                // Increment the base-n counter, last digit fastest.
                for d in digits[..len].iter_mut().rev() {
                    *d += 1;
                    if (*d as u64) < n {
                        break;
                    }
                    *d = 0;
                }
            }
        }
        let identity_root = find(&mut parent, p.identity().0 as u32);
        // Compress fully so lookups need no mutation.
        for i in 0..parent.len() {
            let r = find(&mut parent, i as u32);
            parent[i] = r;
        }
        Some(ComponentTable {
            letters: n,
            bound,
            offsets,
            parent,
            identity_root,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn index(&self, w: &[Elem]) -> Option<usize> {
        if w.is_empty() || w.len() > self.bound {
            return None;
        }
        let val = w.iter().fold(0u64, |acc, e| acc * self.letters + e.0 as u64);
        Some((self.offsets[w.len()] + val) as usize)
    }

    /// `Some(true)` when `w` is connected to `1` within the bound.
    pub fn connected_to_identity(&self, w: &[Elem]) -> Option<bool> {
        self.index(w).map(|i| self.parent[i] == self.identity_root)
    }

    pub fn same_component(&self, u: &[Elem], v: &[Elem]) -> Option<bool> {
        Some(self.parent[self.index(u)?] == self.parent[self.index(v)?])
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let gp = parent[parent[x as usize] as usize];
        parent[x as usize] = gp;
        x = gp;
    }
    x
}

fn union(parent: &mut [u32], a: u32, b: u32) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi as usize] = lo;
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub length_bound: usize,
    pub state_cap: usize,
    /// Decide `NotIdentity` from a nonzero abelian image before searching.
    pub abelian_certificate: bool,
    /// Precompute the dense component table when it fits.
    pub dense_table: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            length_bound: 8,
            state_cap: DEFAULT_STATE_CAP,
            abelian_certificate: false,
            dense_table: false,
        }
    }
}

/// A reusable oracle session over one pree.
#[derive(Debug, Clone)]
pub struct IdentityOracle<'p> {
    pree: &'p Pree,
    config: OracleConfig,
    abelian: Option<AbelianInvariant>,
    table: Option<ComponentTable>,
}

impl<'p> IdentityOracle<'p> {
    pub fn new(pree: &'p Pree, config: OracleConfig) -> Self {
        let abelian = config.abelian_certificate.then(|| AbelianInvariant::new(pree));
        let table = if config.dense_table {
            ComponentTable::build(pree, config.length_bound)
        } else {
            None
        };
        IdentityOracle {
            pree,
            config,
            abelian,
            table,
        }
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn decide(&self, w: &[Elem]) -> OracleVerdict {
        if let Some(ab) = &self.abelian {
            if !ab.is_trivial_image(w) {
                return OracleVerdict::NotIdentity(Evidence::AbelianImage);
            }
        }
        if let Some(t) = &self.table {
            if let Some(hit) = t.connected_to_identity(w) {
                return if hit {
                    OracleVerdict::Identity
                } else {
                    OracleVerdict::NotIdentity(Evidence::BoundedComponent)
                };
            }
        }
        neighbor_search(self.pree, w, self.config.length_bound, self.config.state_cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pree::load_pree;
    use crate::word::parse_word;

    fn zxz() -> Pree {
        load_pree(include_str!("../../../../fixtures/zxz.pree")).unwrap()
    }

    #[test]
    fn search_examples() {
        let p = zxz();
        let w = |s| parse_word(&p, s).unwrap();
        assert_eq!(bfs_identity_oracle(&p, &w("(1,1) (-1,-1)"), 4), OracleVerdict::Identity);
        assert_eq!(
            bfs_identity_oracle(&p, &w("(0,1)"), 4),
            OracleVerdict::NotIdentity(Evidence::BoundedComponent)
        );
        assert_eq!(
            bfs_identity_oracle(&p, &w("(1,0) (0,1) (-1,0) (0,-1)"), 8),
            OracleVerdict::Identity
        );
    }

    #[test]
    fn table_matches_search() {
        let p = zxz();
        let table = ComponentTable::build(&p, 5).unwrap();
        let letters: Vec<Elem> = p.elements().collect();
        for &a in &letters {
            for &b in &letters {
                for &c in &letters {
                    let w = [a, b, c];
                    let by_table = table.connected_to_identity(&w).unwrap();
                    let by_search = neighbor_search(&p, &w, 5, usize::MAX).decided().unwrap();
                    assert_eq!(by_table, by_search, "{w:?}");
                }
            }
        }
    }

    #[test]
    fn cap_yields_unknown() {
        let p = zxz();
        let w = parse_word(&p, "(1,1) (1,1) (0,1)").unwrap();
        assert_eq!(neighbor_search(&p, &w, 10, 50), OracleVerdict::Unknown);
    }

    #[test]
    fn abelian_certificate_short_circuits() {
        let p = zxz();
        let oracle = IdentityOracle::new(
            &p,
            OracleConfig {
                abelian_certificate: true,
                ..OracleConfig::default()
            },
        );
        let w = parse_word(&p, "(1,1) (1,1) (0,1)").unwrap();
        assert_eq!(oracle.decide(&w), OracleVerdict::NotIdentity(Evidence::AbelianImage));
    }
}

//! Van Kampen diagrams over a pree: planar disks tiled by relator
//! triangles, built and dismantled one boundary triangle at a time.
//!
//! Faces are stored as three half-edges read in a common orientation, and
//! the boundary is an explicit cycle of half-edges read in that same
//! orientation. A boundary edge is therefore used by its face in the
//! boundary's direction, and an interior edge by its two faces in opposite
//! directions. Parallel edges are allowed.

mod search;
mod surgery;

use std::fmt::Write;

use thiserror::Error;

use crate::pree::{Elem, Pree};
use crate::report::quote;
use crate::word::Word;

pub use search::{find_minimal_diagram, DiagramSearch, SearchOutcome, DEFAULT_MAX_AREA};
pub use surgery::reduce_internal_vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub edge: u32,
    pub forward: bool,
}

impl HalfEdge {
    pub fn reversed(self) -> HalfEdge {
        HalfEdge {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub tail: u32,
    pub head: u32,
    pub label: Elem,
    /// Label read from head to tail.
    pub inverse: Elem,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("product {a}*{b} is undefined")]
    UndefinedProduct { a: String, b: String },
    #[error("boundary position {0} out of range")]
    Position(usize),
    #[error("attachment would identify two vertices of the new triangle")]
    VertexIdentification,
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
    #[error("face {face} cannot be removed: {reason}")]
    NotRemovable { face: usize, reason: &'static str },
    #[error("vertex {0} does not exist")]
    NoSuchVertex(u32),
    #[error("vertex {0} is on the boundary")]
    NotInternal(u32),
    #[error("vertex {vertex} has degree {degree}; expected 3, 4 or 5")]
    WrongDegree { vertex: u32, degree: usize },
    #[error("no triangulation of the link of vertex {0} uses defined products with distinct vertices")]
    NoRetriangulation(u32),
}

/// Where and how to glue a new triangle onto the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attachment {
    /// Glue along boundary edge `position` (label `l`); the new boundary
    /// path reads `left · left⁻¹l` through a new vertex.
    OneEdge { position: usize, left: Elem },
    /// Glue along boundary edges `position` and `position + 1` (labels
    /// `l1`, `l2` with `l1 l2` defined); the path is replaced by one edge.
    TwoEdge { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    vertices: usize,
    edges: Vec<Edge>,
    faces: Vec<[HalfEdge; 3]>,
    boundary: Vec<HalfEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Curvature {
    /// Sum over boundary vertices of `4 - d`.
    pub lhs: i64,
    /// `6` plus the sum over internal vertices of `d - 6`.
    pub rhs: i64,
}

impl Curvature {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramStats {
    pub area: usize,
    pub boundary_length: usize,
    pub delta2: usize,
    pub delta3: usize,
    pub delta4: usize,
    /// Boundary vertices of degree greater than 4.
    pub delta5: usize,
    /// Ascending.
    pub internal_degrees: Vec<usize>,
    pub galleries: usize,
}

impl DiagramStats {
    pub fn gallery_inequality_holds(&self) -> bool {
        2 * self.delta2 + self.delta3 >= 6 + self.delta5
    }

    pub fn gallery_equality(&self) -> bool {
        2 * self.delta2 + self.delta3 == 6 + self.delta5
    }

    pub fn internal_all_six(&self) -> bool {
        self.internal_degrees.iter().all(|&d| d == 6)
    }
}

fn undefined(p: &Pree, a: Elem, b: Elem) -> DiagramError {
    DiagramError::UndefinedProduct {
        a: p.name(a).to_string(),
        b: p.name(b).to_string(),
    }
}

impl Diagram {
    /// The triangle for `ab = c`, boundary `a b c⁻¹`.
    pub fn single_triangle(p: &Pree, a: Elem, b: Elem) -> Result<Diagram, DiagramError> {
        let c = p.product(a, b).ok_or_else(|| undefined(p, a, b))?;
        let edge = |tail, head, label: Elem| Edge {
            tail,
            head,
            label,
            inverse: p.inverse(label),
        };
        let f = |edge, forward| HalfEdge { edge, forward };
        let face = [f(0, true), f(1, true), f(2, false)];
        Ok(Diagram {
            vertices: 3,
            edges: vec![edge(0, 1, a), edge(1, 2, b), edge(0, 2, c)],
            faces: vec![face],
            boundary: face.to_vec(),
        })
    }

    pub fn area(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[[HalfEdge; 3]] {
        &self.faces
    }

    pub fn boundary(&self) -> &[HalfEdge] {
        &self.boundary
    }

    pub fn tail(&self, h: HalfEdge) -> u32 {
        let e = &self.edges[h.edge as usize];
        if h.forward { e.tail } else { e.head }
    }

    pub fn head(&self, h: HalfEdge) -> u32 {
        let e = &self.edges[h.edge as usize];
        if h.forward { e.head } else { e.tail }
    }

    pub fn label(&self, h: HalfEdge) -> Elem {
        let e = &self.edges[h.edge as usize];
        if h.forward { e.label } else { e.inverse }
    }

    /// Boundary vertices in boundary order, starting at the tail of
    /// boundary edge 0.
    pub fn boundary_vertices(&self) -> Vec<u32> {
        self.boundary.iter().map(|&h| self.tail(h)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices];
        for e in &self.edges {
            d[e.tail as usize] += 1;
            d[e.head as usize] += 1;
        }
        d
    }

    pub fn internal_vertices(&self) -> Vec<u32> {
        let mut on = vec![false; self.vertices];
        for v in self.boundary_vertices() {
            on[v as usize] = true;
        }
        (0..self.vertices as u32).filter(|&v| !on[v as usize]).collect()
    }

    /// Reads the boundary from the tail of boundary edge `start`; the
    /// reversed reading from the same vertex is the formal inverse word of
    /// the forward reading from there.
    pub fn boundary_word(&self, start: usize, reversed: bool) -> Word {
        let n = self.boundary.len();
        let letters = (0..n)
            .map(|i| {
                if reversed {
                    self.label(self.boundary[(start + n - 1 - i) % n].reversed())
                } else {
                    self.label(self.boundary[(start + i) % n])
                }
            })
            .collect();
        Word(letters)
    }

    pub fn face_word(&self, f: usize) -> [Elem; 3] {
        self.faces[f].map(|h| self.label(h))
    }

    pub fn attach_triangle(&self, p: &Pree, at: Attachment) -> Result<Diagram, DiagramError> {
        let mut d = self.clone();
        let n = d.boundary.len();
        match at {
            Attachment::OneEdge { position, left } => {
                if position >= n {
                    return Err(DiagramError::Position(position));
                }
                let h = d.boundary[position];
                let l = d.label(h);
                let right = p
                    .product(p.inverse(left), l)
                    .ok_or_else(|| undefined(p, p.inverse(left), l))?;
                let (u, w) = (d.tail(h), d.head(h));
                let v = d.vertices as u32;
                d.vertices += 1;
                let e1 = d.push_edge(p, u, v, left);
                let e2 = d.push_edge(p, v, w, right);
                d.faces.push([e1, e2, h.reversed()]);
                d.boundary.splice(position..=position, [e1, e2]);
            }
            Attachment::TwoEdge { position } => {
                if position >= n {
                    return Err(DiagramError::Position(position));
                }
                if n < 3 {
                    return Err(DiagramError::VertexIdentification);
                }
                let next = (position + 1) % n;
                let (h1, h2) = (d.boundary[position], d.boundary[next]);
                let (l1, l2) = (d.label(h1), d.label(h2));
                let m = p.product(l1, l2).ok_or_else(|| undefined(p, l1, l2))?;
                let e = d.push_edge(p, d.tail(h1), d.head(h2), m);
                d.faces.push([h2.reversed(), h1.reversed(), e]);
                if next == 0 {
                    d.boundary.pop();
                    d.boundary[0] = e;
                } else {
                    d.boundary.splice(position..=next, [e]);
                }
            }
        }
        Ok(d)
    }

    fn push_edge(&mut self, p: &Pree, tail: u32, head: u32, label: Elem) -> HalfEdge {
        self.edges.push(Edge {
            tail,
            head,
            label,
            inverse: p.inverse(label),
        });
        HalfEdge {
            edge: (self.edges.len() - 1) as u32,
            forward: true,
        }
    }

    /// Every attachment that is valid on the current boundary, in boundary
    /// order.
    pub fn attachments(&self, p: &Pree) -> Vec<Attachment> {
        let n = self.boundary.len();
        let mut out = Vec::new();
        for position in 0..n {
            let l = self.label(self.boundary[position]);
            for &(left, _) in p.factorizations(l) {
                out.push(Attachment::OneEdge { position, left });
            }
            let l2 = self.label(self.boundary[(position + 1) % n]);
            if n >= 3 && p.is_defined(l, l2) {
                out.push(Attachment::TwoEdge { position });
            }
        }
        out
    }

    fn boundary_position(&self, h: HalfEdge) -> Option<usize> {
        self.boundary.iter().position(|&b| b == h)
    }

    /// Removes a face touching the boundary, undoing an attachment.
    pub fn remove_boundary_triangle(&self, face: usize) -> Result<Diagram, DiagramError> {
        let Some(&hs) = self.faces.get(face) else { return Err(DiagramError::NoSuchFace(face)) };
        if self.area() < 2 {
            return Err(DiagramError::NotRemovable {
                face,
                reason: "area is 1",
            });
        }
        let on: Vec<Option<usize>> = hs.iter().map(|&h| self.boundary_position(h)).collect();
        let count = on.iter().filter(|x| x.is_some()).count();
        let n = self.boundary.len();
        let mut d = self.clone();
        match count {
            1 => {
                let k = on.iter().position(|x| x.is_some()).unwrap();
                let pos = on[k].unwrap();
                let (a, b) = (hs[(k + 1) % 3], hs[(k + 2) % 3]);
                let apex = self.head(a);
                if self.boundary_vertices().contains(&apex) {
                    return Err(DiagramError::NotRemovable {
                        face,
                        reason: "opposite vertex is on the boundary",
                    });
                }
                d.boundary.splice(pos..=pos, [b.reversed(), a.reversed()]);
                d.faces.remove(face);
                d.compact(&[], &[hs[k].edge]);
            }
            2 => {
                let k = on.iter().position(|x| x.is_none()).unwrap();
                let (first, second) = (hs[(k + 1) % 3], hs[(k + 2) % 3]);
                let (p1, p2) = (on[(k + 1) % 3].unwrap(), on[(k + 2) % 3].unwrap());
                if (p1 + 1) % n != p2 {
                    return Err(DiagramError::NotRemovable {
                        face,
                        reason: "boundary edges are not consecutive",
                    });
                }
                let middle = self.head(first);
                if self.degrees()[middle as usize] != 2 {
                    return Err(DiagramError::NotRemovable {
                        face,
                        reason: "middle vertex has other edges",
                    });
                }
                let third = hs[k].reversed();
                if p2 == 0 {
                    d.boundary.pop();
                    d.boundary[0] = third;
                } else {
                    d.boundary.splice(p1..=p2, [third]);
                }
                d.faces.remove(face);
                d.compact(&[middle], &[first.edge, second.edge]);
            }
            _ => {
                return Err(DiagramError::NotRemovable {
                    face,
                    reason: if count == 0 { "face is interior" } else { "face is the whole diagram" },
                })
            }
        }
        Ok(d)
    }

    /// Faces whose removal leaves a diagram.
    pub fn removable_faces(&self) -> Vec<usize> {
        (0..self.area())
            .filter(|&f| self.remove_boundary_triangle(f).is_ok())
            .collect()
    }

    /// Drops the listed vertices and edges and renumbers the rest.
    fn compact(&mut self, dead_vertices: &[u32], dead_edges: &[u32]) {
        let mut vmap = vec![u32::MAX; self.vertices];
        let mut next = 0;
        for v in 0..self.vertices as u32 {
            if !dead_vertices.contains(&v) {
                vmap[v as usize] = next;
                next += 1;
            }
        }
        self.vertices = next as usize;
        let mut emap = vec![u32::MAX; self.edges.len()];
        let mut kept = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            if !dead_edges.contains(&(i as u32)) {
                emap[i] = kept.len() as u32;
                kept.push(Edge {
                    tail: vmap[e.tail as usize],
                    head: vmap[e.head as usize],
                    ..e.clone()
                });
            }
        }
        self.edges = kept;
        let fix = |h: &mut HalfEdge| h.edge = emap[h.edge as usize];
        self.faces.iter_mut().for_each(|f| f.iter_mut().for_each(fix));
        self.boundary.iter_mut().for_each(fix);
    }

    /// The mirror image: every face and the boundary read the other way.
    pub fn mirror(&self) -> Diagram {
        let mut d = self.clone();
        for f in d.faces.iter_mut() {
            *f = [f[2].reversed(), f[1].reversed(), f[0].reversed()];
        }
        d.boundary = self.boundary.iter().rev().map(|h| h.reversed()).collect();
        d
    }

    /// Rotates and, if needed, mirrors the diagram so its boundary reads
    /// `w` from position 0. False if `w` is not a boundary reading.
    pub fn align_to(&mut self, w: &[Elem]) -> bool {
        let n = self.boundary.len();
        if w.len() != n {
            return false;
        }
        for mirrored in [false, true] {
            let d = if mirrored { self.mirror() } else { self.clone() };
            for r in 0..n {
                if (0..n).all(|i| d.label(d.boundary[(r + i) % n]) == w[i]) {
                    *self = d;
                    self.boundary.rotate_left(r);
                    return true;
                }
            }
        }
        false
    }

    /// Checks every structural invariant; the error names the first
    /// violation found.
    pub fn check_invariants(&self, p: &Pree) -> Result<(), String> {
        let n = self.boundary.len();
        if n < 2 {
            return Err(format!("boundary length {n}"));
        }
        for i in 0..n {
            if self.head(self.boundary[i]) != self.tail(self.boundary[(i + 1) % n]) {
                return Err(format!("boundary breaks after position {i}"));
            }
        }
        let mut bv = self.boundary_vertices();
        bv.sort_unstable();
        bv.dedup();
        if bv.len() != n {
            return Err("boundary is not simple".into());
        }
        let mut uses = vec![(0u32, 0u32); self.edges.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            for i in 0..3 {
                if self.head(f[i]) != self.tail(f[(i + 1) % 3]) {
                    return Err(format!("face {fi} is not a closed path"));
                }
            }
            let vs = [self.tail(f[0]), self.tail(f[1]), self.tail(f[2])];
            if vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2] {
                return Err(format!("face {fi} repeats a vertex"));
            }
            let [x, y, z] = self.face_word(fi);
            if p.product(x, y) != Some(p.inverse(z)) {
                return Err(format!("face {fi} is not a relator"));
            }
            for h in f {
                let u = &mut uses[h.edge as usize];
                if h.forward { u.0 += 1 } else { u.1 += 1 }
            }
        }
        for h in &self.boundary {
            let u = &mut uses[h.edge as usize];
            // The outer face reads boundary edges against the boundary.
            if h.forward { u.1 += 1 } else { u.0 += 1 }
        }
        if let Some(e) = uses.iter().position(|&u| u != (1, 1)) {
            return Err(format!("edge {e} is not shared by exactly two sides"));
        }
        let euler = self.vertices as i64 - self.edges.len() as i64 + self.faces.len() as i64;
        if euler != 1 {
            return Err(format!("V - E + F = {euler}"));
        }
        if let Some(v) = self.degrees().iter().position(|&d| d < 2) {
            return Err(format!("vertex {v} has degree below 2"));
        }
        Ok(())
    }

    pub fn curvature(&self) -> Curvature {
        let deg = self.degrees();
        let mut on = vec![false; self.vertices];
        for v in self.boundary_vertices() {
            on[v as usize] = true;
        }
        let mut c = Curvature { lhs: 0, rhs: 6 };
        for (v, &d) in deg.iter().enumerate() {
            if on[v] {
                c.lhs += 4 - d as i64;
            } else {
                c.rhs += d as i64 - 6;
            }
        }
        c
    }

    pub fn stats(&self) -> DiagramStats {
        let deg = self.degrees();
        let bdeg: Vec<usize> = self.boundary_vertices().iter().map(|&v| deg[v as usize]).collect();
        let mut internal_degrees: Vec<usize> =
            self.internal_vertices().iter().map(|&v| deg[v as usize]).collect();
        internal_degrees.sort_unstable();
        let count = |f: &dyn Fn(usize) -> bool| bdeg.iter().filter(|&&d| f(d)).count();
        let end = |d: usize| d == 2 || d == 3;
        let n = bdeg.len();
        let mut galleries = 0;
        for i in 0..n {
            if !end(bdeg[i]) {
                continue;
            }
            let mut j = i + 1;
            while j < i + n && bdeg[j % n] == 4 {
                j += 1;
            }
            if end(bdeg[j % n]) {
                galleries += 1;
            }
        }
        DiagramStats {
            area: self.area(),
            boundary_length: n,
            delta2: count(&|d| d == 2),
            delta3: count(&|d| d == 3),
            delta4: count(&|d| d == 4),
            delta5: count(&|d| d > 4),
            internal_degrees,
            galleries,
        }
    }

    /// Whether two faces span the same vertex set.
    pub fn has_repeated_triangle(&self) -> bool {
        let mut sets: Vec<[u32; 3]> = self
            .faces
            .iter()
            .map(|f| {
                let mut v = [self.tail(f[0]), self.tail(f[1]), self.tail(f[2])];
                v.sort_unstable();
                v
            })
            .collect();
        sets.sort_unstable();
        sets.windows(2).any(|w| w[0] == w[1])
    }

    /// Whether two edges join the same pair of vertices.
    pub fn has_parallel_edges(&self) -> bool {
        let mut ends: Vec<(u32, u32)> =
            self.edges.iter().map(|e| (e.tail.min(e.head), e.tail.max(e.head))).collect();
        ends.sort_unstable();
        ends.windows(2).any(|w| w[0] == w[1])
    }

    /// Two triangles glued along two edges, boundary `a a⁻¹`.
    pub fn is_two_triangle_cancellation(&self, p: &Pree) -> bool {
        self.area() == 2 && self.boundary.len() == 2 && {
            let w = self.boundary_word(0, false);
            w[1] == p.inverse(w[0])
        }
    }

    /// Stable line-oriented dump for golden tests.
    pub fn trace(&self, p: &Pree) -> String {
        let mut out = String::new();
        let deg = self.degrees();
        let _ = writeln!(
            out,
            "diagram vertices={} edges={} area={} boundary_length={}",
            self.vertices,
            self.edges.len(),
            self.area(),
            self.boundary.len()
        );
        let _ = writeln!(out, "boundary word={}", quote(&self.boundary_word(0, false).display(p).to_string()));
        let bv = self.boundary_vertices();
        for v in 0..self.vertices as u32 {
            let place = if bv.contains(&v) { "boundary" } else { "internal" };
            let _ = writeln!(out, "vertex id={v} degree={} {place}", deg[v as usize]);
        }
        for (i, e) in self.edges.iter().enumerate() {
            let _ = writeln!(
                out,
                "edge id={i} tail={} head={} label={}",
                e.tail,
                e.head,
                quote(p.name(e.label))
            );
        }
        let half = |h: HalfEdge| format!("{}{}", h.edge, if h.forward { "+" } else { "-" });
        for (i, f) in self.faces.iter().enumerate() {
            let _ = writeln!(out, "face id={i} edges={} {} {}", half(f[0]), half(f[1]), half(f[2]));
        }
        out
    }

    /// Graphviz rendering: degree-annotated vertices, labeled edges, the
    /// boundary drawn bold.
    pub fn to_dot(&self, p: &Pree) -> String {
        let mut out = String::from("graph diagram {\n");
        let deg = self.degrees();
        let bv = self.boundary_vertices();
        for v in 0..self.vertices as u32 {
            let style = if bv.contains(&v) { "filled" } else { "solid" };
            let _ = writeln!(out, "  v{v} [label=\"{v}:{}\" style={style}];", deg[v as usize]);
        }
        for (i, e) in self.edges.iter().enumerate() {
            let on = self.boundary.iter().any(|h| h.edge as usize == i);
            let _ = writeln!(
                out,
                "  v{} -- v{} [label={}{}];",
                e.tail,
                e.head,
                quote(p.name(e.label)),
                if on { " penwidth=3" } else { "" }
            );
        }
        out.push_str("}\n");
        out
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

    fn e(p: &Pree, s: &str) -> Elem {
        p.lookup(s).unwrap()
    }

    #[test]
    fn single_triangle_boundary() {
        let p = zxz();
        let d = Diagram::single_triangle(&p, e(&p, "(0,1)"), e(&p, "(1,0)")).unwrap();
        assert_eq!(d.boundary_word(0, false), parse_word(&p, "(0,1) (1,0) (-1,-1)").unwrap());
        assert_eq!(d.boundary_word(0, true), parse_word(&p, "(1,1) (-1,0) (0,-1)").unwrap());
        assert_eq!(d.curvature(), Curvature { lhs: 6, rhs: 6 });
        let s = d.stats();
        assert_eq!((s.delta2, s.galleries), (3, 3));
        d.check_invariants(&p).unwrap();
        assert!(Diagram::single_triangle(&p, e(&p, "(1,1)"), e(&p, "(1,1)")).is_err());
    }

    #[test]
    fn two_triangles_along_two_edges() {
        let p = zxz();
        let d = Diagram::single_triangle(&p, e(&p, "(0,1)"), e(&p, "(1,0)")).unwrap();
        let d = d.attach_triangle(&p, Attachment::TwoEdge { position: 1 }).unwrap();
        d.check_invariants(&p).unwrap();
        assert!(d.is_two_triangle_cancellation(&p));
        assert_eq!(d.boundary_word(0, false), parse_word(&p, "(0,1) (0,-1)").unwrap());
        assert_eq!(d.curvature(), Curvature { lhs: 2, rhs: 2 });
        assert_eq!(d.stats().internal_degrees, vec![2]);
        assert_eq!(
            d.attach_triangle(&p, Attachment::TwoEdge { position: 0 }),
            Err(DiagramError::VertexIdentification)
        );
    }

    #[test]
    fn attach_and_remove_are_inverse() {
        let p = zxz();
        let d = Diagram::single_triangle(&p, e(&p, "(0,1)"), e(&p, "(1,0)")).unwrap();
        let grown = d
            .attach_triangle(&p, Attachment::OneEdge { position: 0, left: e(&p, "(1,1)") })
            .unwrap();
        grown.check_invariants(&p).unwrap();
        assert_eq!(grown.boundary().len(), 4);
        assert_eq!(grown.remove_boundary_triangle(1).unwrap(), d);
        let shrunk = d.attach_triangle(&p, Attachment::TwoEdge { position: 0 }).unwrap();
        shrunk.check_invariants(&p).unwrap();
        assert_eq!(shrunk.boundary().len(), 2);
        assert_eq!(shrunk.remove_boundary_triangle(1).unwrap(), d);
        assert!(d.remove_boundary_triangle(0).is_err());
    }

    #[test]
    fn mirror_and_align() {
        let p = zxz();
        let d = Diagram::single_triangle(&p, e(&p, "(0,1)"), e(&p, "(1,0)")).unwrap();
        let mut m = d.clone();
        let target = d.boundary_word(1, true);
        assert!(m.align_to(&target));
        assert_eq!(m.boundary_word(0, false), target);
        m.check_invariants(&p).unwrap();
    }
}

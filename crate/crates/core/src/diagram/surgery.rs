//! Removal of internal vertices of low degree by retriangulating their link.

use crate::diagram::{Diagram, DiagramError, HalfEdge};
use crate::pree::{Elem, Pree};

/// Triangulations of the polygon chain `i..=j`, each with the label of the
/// chord from vertex `i` to vertex `j`.
fn triangulations(p: &Pree, sides: &[Elem], i: usize, j: usize) -> Vec<(Elem, Vec<(usize, usize, usize)>)> {
    if j == i + 1 {
        return vec![(sides[i], Vec::new())];
    }
    let mut out = Vec::new();
    for m in i + 1..j {
        for (la, ta) in triangulations(p, sides, i, m) {
            for (lb, tb) in triangulations(p, sides, m, j) {
                if let Some(l) = p.product(la, lb) {
                    let mut t = ta.clone();
                    t.extend_from_slice(&tb);
                    t.push((i, m, j));
                    out.push((l, t));
                }
            }
        }
    }
    out
}

/// Replaces the `k` faces around an internal vertex of degree 3, 4 or 5 by
/// `k - 2` faces spanning its link, keeping the boundary word.
pub fn reduce_internal_vertex(d: &Diagram, p: &Pree, v: u32) -> Result<Diagram, DiagramError> {
    if v as usize >= d.vertices {
        return Err(DiagramError::NoSuchVertex(v));
    }
    if d.boundary_vertices().contains(&v) {
        return Err(DiagramError::NotInternal(v));
    }
    let degree = d.degrees()[v as usize];
    if !(3..=5).contains(&degree) {
        return Err(DiagramError::WrongDegree { vertex: v, degree });
    }
    // Faces around v, each rotated to start at v: [v→x, x→y, y→v].
    let around: Vec<(usize, [HalfEdge; 3])> = d
        .faces
        .iter()
        .enumerate()
        .filter_map(|(i, f)| {
            let r = (0..3).find(|&r| d.tail(f[r]) == v)?;
            Some((i, [f[r], f[(r + 1) % 3], f[(r + 2) % 3]]))
        })
        .collect();
    let k = around.len();
    if k != degree {
        return Err(DiagramError::NoRetriangulation(v));
    }
    // Walk the link: the face after F shares F's incoming edge y→v.
    let mut order = vec![0usize];
    while order.len() < k {
        let last = around[*order.last().unwrap()].1[2];
        let next = around
            .iter()
            .position(|(_, f)| f[0] == last.reversed())
            .ok_or(DiagramError::NoRetriangulation(v))?;
        if order.contains(&next) {
            return Err(DiagramError::NoRetriangulation(v));
        }
        order.push(next);
    }
    let sides: Vec<HalfEdge> = order.iter().map(|&i| around[i].1[1]).collect();
    let corners: Vec<u32> = sides.iter().map(|&h| d.tail(h)).collect();
    let labels: Vec<Elem> = sides.iter().map(|&h| d.label(h)).collect();
    let closing = p.inverse(labels[k - 1]);

    let chosen = triangulations(p, &labels, 0, k - 1)
        .into_iter()
        .find(|(l, tris)| {
            *l == closing
                && tris.iter().all(|&(a, b, c)| {
                    let (x, y, z) = (corners[a], corners[b], corners[c]);
                    x != y && y != z && x != z
                })
        })
        .ok_or(DiagramError::NoRetriangulation(v))?;

    let mut out = d.clone();
    let mut chords: Vec<((usize, usize), HalfEdge)> = Vec::new();
    for &(a, m, c) in &chosen.1 {
        for (i, j) in [(a, m), (m, c)] {
            if j > i + 1 && !chords.iter().any(|(key, _)| *key == (i, j)) {
                let label = chord_label(p, &labels, &chosen.1, i, j);
                let h = out.push_edge(p, corners[i], corners[j], label);
                chords.push(((i, j), h));
            }
        }
    }
    let side = |i: usize, j: usize| -> HalfEdge {
        if j == i + 1 {
            sides[i]
        } else if (i, j) == (0, k - 1) {
            sides[k - 1].reversed()
        } else {
            chords.iter().find(|(key, _)| *key == (i, j)).unwrap().1
        }
    };
    let new_faces: Vec<[HalfEdge; 3]> = chosen
        .1
        .iter()
        .map(|&(a, m, c)| [side(a, m), side(m, c), side(a, c).reversed()])
        .collect();
    let mut dead_faces: Vec<usize> = around.iter().map(|(i, _)| *i).collect();
    dead_faces.sort_unstable();
    for &f in dead_faces.iter().rev() {
        out.faces.remove(f);
    }
    out.faces.extend(new_faces);
    let spokes: Vec<u32> = around.iter().map(|(_, f)| f[0].edge).collect();
    out.compact(&[v], &spokes);
    Ok(out)
}

/// Label of chord `(i, j)` inside a chosen triangulation.
fn chord_label(p: &Pree, sides: &[Elem], tris: &[(usize, usize, usize)], i: usize, j: usize) -> Elem {
    if j == i + 1 {
        return sides[i];
    }
    let &(_, m, _) = tris.iter().find(|&&(a, _, c)| (a, c) == (i, j)).unwrap();
    p.product(chord_label(p, sides, tris, i, m), chord_label(p, sides, tris, m, j))
        .unwrap()
}

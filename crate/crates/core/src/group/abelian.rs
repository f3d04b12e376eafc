//! Abelianization of `U(P)`: the letter-count vector of a word modulo the
//! lattice spanned by the relators `e_a + e_b - e_c`, one per product
//! `ab = c`. Equal group elements have equal images, so the reduced vector
//! is an exact bucket key and a nonzero image certifies `w ≠ 1`.

use crate::pree::{Elem, Pree};

#[derive(Debug, Clone)]
pub struct AbelianInvariant {
    width: usize,
    /// Hermite normal form rows: (pivot column, row).
    rows: Vec<(usize, Vec<i64>)>,
}

impl AbelianInvariant {
    pub fn new(p: &Pree) -> Self {
        let n = p.len();
        let mut pool: Vec<Vec<i64>> = Vec::new();
        for (a, b, c) in p.defined_products() {
            let mut r = vec![0i64; n];
            r[a.index()] += 1;
            r[b.index()] += 1;
            r[c.index()] -= 1;
            if r.iter().any(|&x| x != 0) {
                pool.push(r);
            }
        }
        let mut rows: Vec<(usize, Vec<i64>)> = Vec::new();
        for col in 0..n {
            loop {
                pool.retain(|r| r.iter().any(|&x| x != 0));
                let mut with: Vec<usize> = (0..pool.len()).filter(|&i| pool[i][col] != 0).collect();
                if with.is_empty() {
                    break;
                }
                with.sort_by_key(|&i| pool[i][col].abs());
                let piv = with[0];
                if with.len() == 1 {
                    let mut r = pool.swap_remove(piv);
                    if r[col] < 0 {
                        r.iter_mut().for_each(|x| *x = -*x);
                    }
                    rows.push((col, r));
                    break;
                }
                let pr = pool[piv].clone();
                for &i in &with[1..] {
                    let q = pool[i][col].div_euclid(pr[col]);
                    for (x, y) in pool[i].iter_mut().zip(&pr) {
                        *x -= q * y;
                    }
                }
            }
        }
        // Reduce entries above each pivot into [0, pivot).
        for i in 0..rows.len() {
            let (col, piv_row) = (rows[i].0, rows[i].1.clone());
            for j in 0..i {
                let q = rows[j].1[col].div_euclid(piv_row[col]);
                if q != 0 {
                    for (x, y) in rows[j].1.iter_mut().zip(&piv_row) {
                        *x -= q * y;
                    }
                }
            }
        }
        AbelianInvariant { width: n, rows }
    }

    /// Canonical representative of the word's image.
    pub fn image(&self, w: &[Elem]) -> Vec<i64> {
        let mut v = vec![0i64; self.width];
        for &a in w {
            v[a.index()] += 1;
        }
        self.reduce(v)
    }

    pub fn reduce(&self, mut v: Vec<i64>) -> Vec<i64> {
        for (col, r) in &self.rows {
            let q = v[*col].div_euclid(r[*col]);
            if q != 0 {
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= q * y;
                }
            }
        }
        v
    }

    pub fn is_trivial_image(&self, w: &[Elem]) -> bool {
        self.image(w).iter().all(|&x| x == 0)
    }

    /// Torsion-free rank of the abelianization.
    pub fn free_rank(&self) -> usize {
        self.width - self.rows.len()
    }
}

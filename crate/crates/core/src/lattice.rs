//! Row-style Hermite normal form for integer lattices, echeloned from the
//! highest coordinate down (coordinates are polynomial degrees, so a row's
//! pivot is its leading term).
//!
//! Each row may carry a tag vector that receives the same unimodular row
//! operations. Rows whose main part reduces to zero surface their tags, which
//! is how lattice intersections are computed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type Vector = Vec<BigInt>;

#[derive(Debug, Clone)]
pub struct Row {
    pub main: Vector,
    pub tag: Vector,
}

impl Row {
    pub fn new(main: Vector, tag: Vector) -> Self {
        Self { main, tag }
    }

    fn pivot(&self) -> Option<usize> {
        self.main.iter().rposition(|c| !c.is_zero())
    }

    /// `self -= k * other`
    fn sub_scaled(&mut self, k: &BigInt, other: &Row) {
        if k.is_zero() {
            return;
        }
        for (a, b) in self.main.iter_mut().zip(&other.main) {
            *a -= k * b;
        }
        for (a, b) in self.tag.iter_mut().zip(&other.tag) {
            *a -= k * b;
        }
    }

    fn negate(&mut self) {
        for a in self.main.iter_mut().chain(self.tag.iter_mut()) {
            *a = -&*a;
        }
    }
}

/// Reduced echelon basis: pivots strictly descending, pivot entries positive,
/// and every entry sitting in another row's pivot column reduced into
/// `[0, pivot)`.
#[derive(Debug, Clone, Default)]
pub struct Hnf {
    /// Basis rows with their pivot column, ordered by descending pivot.
    pub rows: Vec<(usize, Row)>,
    /// Tags of the generator combinations whose main part vanished.
    pub kernel_tags: Vec<Vector>,
}

impl Hnf {
    pub fn pivot_row(&self, col: usize) -> Option<&Row> {
        self.rows.iter().find(|(c, _)| *c == col).map(|(_, r)| r)
    }
}

pub fn hermite(generators: Vec<Row>) -> Hnf {
    let mut pool: Vec<Row> = Vec::new();
    let mut kernel_tags = Vec::new();
    for r in generators {
        if r.pivot().is_some() {
            pool.push(r);
        } else if r.tag.iter().any(|t| !t.is_zero()) {
            kernel_tags.push(r.tag);
        }
    }

    let mut rows: Vec<(usize, Row)> = Vec::new();
    while let Some(col) = pool.iter().filter_map(Row::pivot).max() {
        let (mut active, rest): (Vec<Row>, Vec<Row>) =
            pool.into_iter().partition(|r| r.pivot() == Some(col));
        pool = rest;
        // Euclid on the pivot column until a single row remains nonzero there
        while active.len() > 1 {
            let (idx, _) = active
                .iter()
                .enumerate()
                .min_by_key(|(_, r)| r.main[col].abs())
                .expect("nonempty");
            let pivot_row = active.swap_remove(idx);
            let mut survivors = vec![];
            for mut r in active {
                let k = r.main[col].div_floor(&pivot_row.main[col]);
                r.sub_scaled(&k, &pivot_row);
                if !r.main[col].is_zero() {
                    survivors.push(r);
                } else if r.pivot().is_some() {
                    pool.push(r);
                } else if r.tag.iter().any(|t| !t.is_zero()) {
                    kernel_tags.push(r.tag);
                }
            }
            survivors.push(pivot_row);
            active = survivors;
        }
        let mut row = active.pop().expect("column had a pivot");
        if row.main[col].is_negative() {
            row.negate();
        }
        rows.push((col, row));
    }

    // reduce entries above each pivot
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (col, pivot) = (rows[j].0, rows[j].1.main[rows[j].0].clone());
            let k = rows[i].1.main[col].div_floor(&pivot);
            if !k.is_zero() {
                let other = rows[j].1.clone();
                rows[i].1.sub_scaled(&k, &other);
            }
        }
    }
    Hnf { rows, kernel_tags }
}

/// Intersection of the lattice spanned by `generators` with `k * Z^dim`,
/// returned in reduced echelon form.
pub fn intersect_with_multiples(generators: &[Vector], k: &BigInt, dim: usize) -> Hnf {
    let mut rows: Vec<Row> = generators
        .iter()
        .map(|g| Row::new(g.clone(), g.clone()))
        .collect();
    for i in 0..dim {
        let mut e = vec![BigInt::zero(); dim];
        e[i] = k.clone();
        rows.push(Row::new(e, vec![BigInt::zero(); dim]));
    }
    let first = hermite(rows);
    let members = first
        .kernel_tags
        .into_iter()
        .map(|t| Row::new(t, Vec::new()))
        .collect();
    hermite(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn plain(rows: &[&[i64]]) -> Vec<Row> {
        rows.iter().map(|r| Row::new(v(r), Vec::new())).collect()
    }

    #[test]
    fn echelon_shape() {
        let h = hermite(plain(&[&[4, 6, 2], &[1, 3, 4], &[0, 2, 0]]));
        let pivots: Vec<usize> = h.rows.iter().map(|(c, _)| *c).collect();
        assert_eq!(pivots, vec![2, 1, 0]);
        for (i, (c, r)) in h.rows.iter().enumerate() {
            assert!(r.main[*c] > BigInt::zero());
            for (c2, r2) in &h.rows[i + 1..] {
                assert!(r.main[*c2] >= BigInt::zero() && r.main[*c2] < r2.main[*c2]);
            }
        }
        // determinant magnitude is preserved: |det| = 4*(3*0-4*2) - 6*(0-0) + 2*(2-0) = -28
        let det: BigInt = h.rows.iter().map(|(c, r)| r.main[*c].clone()).product();
        assert_eq!(det, BigInt::from(28));
    }

    #[test]
    fn dependent_rows_go_to_kernel() {
        let rows = vec![
            Row::new(v(&[1, 2]), v(&[1, 0])),
            Row::new(v(&[2, 4]), v(&[0, 1])),
        ];
        let h = hermite(rows);
        assert_eq!(h.rows.len(), 1);
        assert_eq!(h.kernel_tags.len(), 1);
        let t = &h.kernel_tags[0];
        // t0*(1,2) + t1*(2,4) = 0
        assert_eq!(&t[0] + &t[1] * 2, BigInt::zero());
    }

    #[test]
    fn intersection_with_even_vectors() {
        // lattice spanned by (1,1) and (0,3), intersected with 2Z^2
        let h = intersect_with_multiples(&[v(&[1, 1]), v(&[0, 3])], &BigInt::from(2), 2);
        // brute force membership over a box
        let in_lattice = |a: i64, b: i64| (b - a) % 3 == 0;
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let expected = in_lattice(a, b) && a % 2 == 0 && b % 2 == 0;
                // solve against the echelon basis
                let mut t = v(&[a, b]);
                let mut ok = true;
                for (c, r) in &h.rows {
                    let (q, rem) = t[*c].div_mod_floor(&r.main[*c]);
                    if !rem.is_zero() {
                        ok = false;
                        break;
                    }
                    for (x, y) in t.iter_mut().zip(&r.main) {
                        *x -= &q * y;
                    }
                }
                ok &= t.iter().all(Zero::is_zero);
                assert_eq!(ok, expected, "({a},{b})");
            }
        }
    }
}

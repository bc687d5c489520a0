//! Dense linear algebra over GF(q), used on high-order coefficient matrices.

use crate::field::{Elem, Field};

/// Row-major dense matrix over one field.
pub type Dense = Vec<Vec<Elem>>;

/// Reduced row echelon form in place; returns the pivot columns.
#[allow(clippy::needless_range_loop)]
pub fn rref(field: &Field, m: &mut Dense) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c];
                for j in 0..cols {
                    let t = field.mul(factor, m[r][j]);
                    m[i][j] = field.sub(m[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: &Field, m: &Dense) -> usize {
    let mut work = m.clone();
    rref(field, &mut work).len()
}

/// A nonzero `c` with `c^T m = 0`, if the rows of `m` are dependent.
pub fn left_kernel_vector(field: &Field, m: &Dense) -> Option<Vec<Elem>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    // Solve m^T c = 0.
    let mut t: Dense = (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j]).collect())
        .collect();
    if t.is_empty() {
        // No columns: every vector is in the kernel.
        return (rows > 0).then(|| {
            let mut c = vec![Elem::ZERO; rows];
            c[0] = Elem::ONE;
            c
        });
    }
    let pivots = rref(field, &mut t);
    let free = (0..rows).find(|c| !pivots.contains(c))?;
    let mut c = vec![Elem::ZERO; rows];
    c[free] = Elem::ONE;
    for (r, &pc) in pivots.iter().enumerate() {
        c[pc] = field.neg(t[r][free]);
    }
    Some(c)
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(field: &Field, m: &Dense) -> Option<Dense> {
    let n = m.len();
    let mut aug: Dense = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }));
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_inverse() {
        let f = Field::gf8();
        let a = |k| f.antilog(k);
        let m = vec![
            vec![a(1), a(2), a(3)],
            vec![a(2), a(5), a(4)],
            vec![f.add(a(1), a(2)), f.add(a(2), a(5)), f.add(a(3), a(4))],
        ];
        assert_eq!(rank(&f, &m), 2);
        let c = left_kernel_vector(&f, &m).unwrap();
        for j in 0..3 {
            let s = (0..3).fold(Elem::ZERO, |acc, i| f.add(acc, f.mul(c[i], m[i][j])));
            assert!(s.is_zero());
        }
        assert!(inverse(&f, &m).is_none());

        let sq = vec![vec![a(1), a(5)], vec![Elem::ZERO, a(3)]];
        let inv = inverse(&f, &sq).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s = (0..2).fold(Elem::ZERO, |acc, k| f.add(acc, f.mul(sq[i][k], inv[k][j])));
                assert_eq!(s, if i == j { Elem::ONE } else { Elem::ZERO });
            }
        }
        assert!(left_kernel_vector(&f, &sq).is_none());
    }
}

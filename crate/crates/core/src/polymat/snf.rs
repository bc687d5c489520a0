use crate::poly::Poly;

use super::PolyMatrix;

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, the nonzero
/// diagonal entries monic and each dividing the next.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub u: PolyMatrix,
    pub d: PolyMatrix,
    pub v: PolyMatrix,
    /// Inverse of `v`, tracked alongside it.
    pub v_inv: PolyMatrix,
    /// Nonzero diagonal entries of `d`, in order.
    pub invariant_factors: Vec<Poly>,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Lowest-degree nonzero entry of the trailing submatrix, first in
/// row-major order on ties.
fn find_pivot(d: &PolyMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            if let Some(deg) = d.get(i, j).deg() {
                if best.is_none_or(|(_, b)| deg < b) {
                    best = Some(((i, j), deg));
                }
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smith normal form over GF(q)[z] using only polynomial row and column
/// operations.
pub fn smith_normal_form(m: &PolyMatrix) -> SnfDecomposition {
    let field = m.field().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = PolyMatrix::identity(&field, rows);
    let mut v = PolyMatrix::identity(&field, cols);
    let mut v_inv = PolyMatrix::identity(&field, cols);
    let mut invariant_factors = Vec::new();

    'diagonal: for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&d, t) else {
                break 'diagonal;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let pivot = d.get(t, t).clone();
            let mut cleared = true;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = d.get(i, t).divmod(&pivot).expect("pivot is nonzero");
                let neg_q = -&q;
                d.add_row_multiple(i, t, &neg_q);
                u.add_row_multiple(i, t, &neg_q);
                cleared &= r.is_zero();
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = d.get(t, j).divmod(&pivot).expect("pivot is nonzero");
                let neg_q = -&q;
                d.add_col_multiple(j, t, &neg_q);
                v.add_col_multiple(j, t, &neg_q);
                // (I - q e_t e_j^T)^{-1} = I + q e_t e_j^T
                v_inv.add_row_multiple(t, j, &q);
                cleared &= r.is_zero();
            }
            if !cleared {
                continue;
            }

            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !pivot.divides(d.get(i, j))));
            if let Some(i) = offender {
                let one = Poly::one(&field);
                d.add_row_multiple(t, i, &one);
                u.add_row_multiple(t, i, &one);
                continue;
            }

            let lc_inv = field
                .inv(pivot.leading_coeff().expect("pivot is nonzero"))
                .expect("nonzero leading coefficient");
            d.scale_row(t, lc_inv);
            u.scale_row(t, lc_inv);
            invariant_factors.push(d.get(t, t).clone());
            break;
        }
    }

    SnfDecomposition {
        u,
        d,
        v,
        v_inv,
        invariant_factors,
    }
}

//! Basic and canonical (minimal basic) encoders, Forney indices and
//! control matrices.

use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::poly::{Degree, Poly};

use super::{smith_normal_form, MatrixError, PolyMatrix};

/// Row-degree profile of an encoder. For a canonical encoder the sorted
/// row degrees are the Forney indices of the code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncoderProfile {
    pub forney_indices: Vec<usize>,
    pub degree: usize,
    pub memory: usize,
    pub is_basic: bool,
    pub is_canonical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicEncoder {
    pub matrix: PolyMatrix,
    /// The input was not basic, so the generated module grew.
    pub module_enlarged: bool,
}

fn require_full_row_rank(m: &PolyMatrix) -> Result<(), MatrixError> {
    let rank = m.rank_rational();
    if rank < m.rows() {
        return Err(MatrixError::RankDeficient {
            rank,
            expected: m.rows(),
        });
    }
    Ok(())
}

/// A basic encoder with the same row space over GF(q)(z). Basic inputs are
/// returned unchanged.
pub fn basic_encoder(m: &PolyMatrix) -> Result<BasicEncoder, MatrixError> {
    require_full_row_rank(m)?;
    if m.is_basic()? {
        return Ok(BasicEncoder {
            matrix: m.clone(),
            module_enlarged: false,
        });
    }
    // m = u^{-1} [diag | 0] v^{-1}: the first k rows of v^{-1} span the
    // saturation of the row module.
    let snf = smith_normal_form(m);
    let rows: Vec<usize> = (0..m.rows()).collect();
    Ok(BasicEncoder {
        matrix: snf.v_inv.select_rows(&rows),
        module_enlarged: true,
    })
}

/// A full-row-rank generator of exactly the row module of `m`, which may
/// itself be rank deficient. Rows are `d_i * (v^{-1})_i` from the Smith form.
pub fn image_encoder(m: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
    let rank = m.rank_rational();
    if rank == 0 {
        return Err(MatrixError::RankDeficient { rank, expected: 1 });
    }
    if rank == m.rows() {
        return Ok(m.clone());
    }
    let snf = smith_normal_form(m);
    Ok(PolyMatrix::from_fn(m.field(), rank, m.cols(), |i, j| {
        &snf.invariant_factors[i] * snf.v_inv.get(i, j)
    }))
}

/// Whether the high-order coefficient matrix has full row rank.
pub fn is_row_reduced(m: &PolyMatrix) -> bool {
    linalg::rank(m.field(), &m.high_order_coefficients()) == m.rows()
}

/// Lowers row degrees until the high-order coefficient matrix has full row
/// rank. Each step cancels a dependency into the highest-degree row of its
/// support (lowest index on ties), a unimodular operation.
pub fn reduce_rows(m: &PolyMatrix) -> PolyMatrix {
    let field = m.field().clone();
    let mut out = m.clone();
    while let Some(c) = linalg::left_kernel_vector(&field, &out.high_order_coefficients()) {
        let degrees = out.row_degrees();
        let target = (0..out.rows())
            .filter(|&i| !c[i].is_zero())
            .max_by(|&a, &b| degrees[a].cmp(&degrees[b]).then(b.cmp(&a)))
            .expect("kernel vector is nonzero");
        let Degree::Finite(top) = degrees[target] else {
            // a zero row is its own dependency; nothing to reduce
            break;
        };
        let scale_inv = field.inv(c[target]).expect("support entry is nonzero");
        for i in 0..out.rows() {
            if i == target || c[i].is_zero() {
                continue;
            }
            let Degree::Finite(d) = degrees[i] else { continue };
            let factor = Poly::monomial(&field, field.mul(c[i], scale_inv), top - d);
            out.add_row_multiple(target, i, &factor);
        }
    }
    out
}

pub fn encoder_profile(m: &PolyMatrix) -> Result<EncoderProfile, MatrixError> {
    require_full_row_rank(m)?;
    let mut forney_indices: Vec<usize> =
        m.row_degrees().iter().filter_map(|d| d.finite()).collect();
    forney_indices.sort_unstable();
    let is_basic = m.is_basic()?;
    Ok(EncoderProfile {
        degree: forney_indices.iter().sum(),
        memory: forney_indices.iter().copied().max().unwrap_or(0),
        forney_indices,
        is_basic,
        is_canonical: is_basic && is_row_reduced(m),
    })
}

/// A canonical encoder of the same code together with its profile.
pub fn to_canonical(m: &PolyMatrix) -> Result<(PolyMatrix, EncoderProfile), MatrixError> {
    let basic = basic_encoder(m)?.matrix;
    let canonical = reduce_rows(&basic);
    let profile = encoder_profile(&canonical)?;
    debug_assert!(profile.is_canonical);
    Ok((canonical, profile))
}

/// An `(n-k) x n` canonical control matrix `h` with `g h^T = 0`.
pub fn parity_check(g: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
    require_full_row_rank(g)?;
    let (k, n) = (g.rows(), g.cols());
    if k == n {
        return Err(MatrixError::FullRate);
    }
    if !g.is_basic()? {
        return Err(MatrixError::NotBasic);
    }
    // u g v = [I | 0], so g annihilates the trailing n-k columns of v.
    let snf = smith_normal_form(g);
    let tail: Vec<usize> = (k..n).collect();
    let h = snf.v.select_columns(&tail).transpose();
    Ok(reduce_rows(&h))
}

/// `r` with `m r = I`, for basic `m`.
pub fn right_inverse(m: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
    require_full_row_rank(m)?;
    if !m.is_basic()? {
        return Err(MatrixError::NotBasic);
    }
    let snf = smith_normal_form(m);
    let head: Vec<usize> = (0..m.rows()).collect();
    Ok(snf.v.select_columns(&head).mul(&snf.u))
}

/// Whether two basic matrices generate the same module over GF(q)[z]:
/// each must factor through the other.
pub fn same_row_module(a: &PolyMatrix, b: &PolyMatrix) -> Result<bool, MatrixError> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Ok(false);
    }
    let contains = |outer: &PolyMatrix, inner: &PolyMatrix| -> Result<bool, MatrixError> {
        let r = right_inverse(outer)?;
        let t = inner.mul(&r);
        Ok(t.mul(outer) == *inner)
    };
    Ok(contains(b, a)? && contains(a, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Elem, Field, FieldSpec};

    fn f8() -> Field {
        Field::gf8()
    }

    fn m(text: &str) -> PolyMatrix {
        PolyMatrix::parse_text(&f8(), text).unwrap()
    }

    const G13: &str = "a^6 + az + a^4z^2; a^5 + a^2z + az^2; a^3 + a^4z + a^2z^2";
    const G23: &str = "a^2 + az; a^4 + a^2z; a + a^4z
                       a + a^4z^2; a^2 + az^2; a^4 + a^2z^2";
    const G24: &str = "a + a^3z; a^2 + a^6z; a^3 + a^2z; a^4 + a^5z
                       a^4 + z^2; a + z^2; a^5 + z^2; a^2 + z^2";

    #[test]
    fn basic_encoder_keeps_basic_input() {
        let g = m(G13);
        let b = basic_encoder(&g).unwrap();
        assert_eq!(b.matrix, g);
        assert!(!b.module_enlarged);
    }

    #[test]
    fn basic_encoder_strips_content() {
        let g = m(G13);
        let z = Poly::z(&f8());
        let zg = PolyMatrix::from_fn(&f8(), 1, 3, |i, j| &z * g.get(i, j));
        let b = basic_encoder(&zg).unwrap();
        assert!(b.module_enlarged);
        // equal to g up to a nonzero constant
        let ratio = b.matrix.get(0, 0).exact_div(g.get(0, 0)).unwrap();
        assert!(ratio.is_unit());
        for j in 0..3 {
            assert_eq!(*b.matrix.get(0, j), g.get(0, j) * &ratio);
        }

        let row = m("1; z + 1; a");
        let zrow = PolyMatrix::from_fn(&f8(), 1, 3, |i, j| &z * row.get(i, j));
        let b = basic_encoder(&zrow).unwrap();
        assert!(b.module_enlarged);
        assert!(same_row_module(&b.matrix, &row).unwrap());
    }

    #[test]
    fn reference_generators_are_canonical() {
        let (c, p) = to_canonical(&m(G13)).unwrap();
        assert_eq!(c, m(G13));
        assert_eq!(p.forney_indices, vec![2]);
        assert_eq!((p.degree, p.memory), (2, 2));

        let (c, p) = to_canonical(&m(G23)).unwrap();
        assert_eq!(c, m(G23));
        assert_eq!(p.forney_indices, vec![1, 2]);

        let (c, p) = to_canonical(&m(G24)).unwrap();
        assert_eq!(c, m(G24));
        assert_eq!(p.forney_indices, vec![1, 2]);
        assert_eq!((p.degree, p.memory), (3, 2));
        assert!(p.is_basic && p.is_canonical);
    }

    #[test]
    fn canonical_reduction_undoes_unimodular_inflation() {
        let g = m(G23);
        // u = [[1, z^2 + a], [0, 1]] inflates the first row degree.
        let u = m("1; z^2 + a\n0; 1");
        let inflated = u.mul(&g);
        let before = encoder_profile(&inflated).unwrap();
        assert!(!before.is_canonical);
        assert!(before.degree > 3);
        let (c, p) = to_canonical(&inflated).unwrap();
        assert_eq!(p.forney_indices, vec![1, 2]);
        assert_eq!(p.degree, c.code_degree().unwrap());
        assert!(same_row_module(&c, &g).unwrap());
    }

    #[test]
    fn control_matrix_of_systematic_block_code() {
        let f = f8();
        let a = |k| f.antilog(k);
        let amat = [vec![a(1), a(3)], vec![a(5), Elem::ZERO]];
        let g = PolyMatrix::from_dense(
            &f,
            &vec![
                vec![Elem::ONE, Elem::ZERO, amat[0][0], amat[0][1]],
                vec![Elem::ZERO, Elem::ONE, amat[1][0], amat[1][1]],
            ],
        )
        .unwrap();
        let h = parity_check(&g).unwrap();
        assert_eq!(h.rows(), 2);
        assert!(g.mul(&h.transpose()).is_zero());
        assert!(h.max_degree() <= Degree::Finite(0));
        // Normalize to (A^T | I) by the inverse of the trailing block.
        let dense: linalg::Dense = (0..2)
            .map(|i| h.row(i).iter().map(|p| p.coeff(0)).collect())
            .collect();
        let tail: linalg::Dense = dense.iter().map(|r| r[2..].to_vec()).collect();
        let t_inv = linalg::inverse(&f, &tail).unwrap();
        let normalized = PolyMatrix::from_dense(&f, &t_inv).unwrap().mul(&h);
        let expected = PolyMatrix::from_dense(
            &f,
            &vec![
                vec![amat[0][0], amat[1][0], Elem::ONE, Elem::ZERO],
                vec![amat[0][1], amat[1][1], Elem::ZERO, Elem::ONE],
            ],
        )
        .unwrap();
        assert_eq!(normalized, expected);
    }

    #[test]
    fn control_matrix_odd_characteristic() {
        let f3 = Field::new(FieldSpec::new(3, 1, vec![1, 1])).unwrap();
        let g = PolyMatrix::parse_text(&f3, "1; a + z; z^2").unwrap();
        let h = parity_check(&g).unwrap();
        assert_eq!((h.rows(), h.cols()), (2, 3));
        assert!(g.mul(&h.transpose()).is_zero());
        assert!(h.is_basic().unwrap());
    }

    #[test]
    fn control_matrix_errors() {
        assert_eq!(
            parity_check(&PolyMatrix::identity(&f8(), 2)),
            Err(MatrixError::FullRate)
        );
        assert_eq!(parity_check(&m("z; 0; 0\n0; z; 0")), Err(MatrixError::NotBasic));
        assert!(matches!(
            parity_check(&m("1; z; 1\nz; z^2; z")),
            Err(MatrixError::RankDeficient { .. })
        ));
    }

    #[test]
    fn computed_control_matrices_for_reference_codes() {
        for (text, rows) in [(G13, 2), (G23, 1), (G24, 2)] {
            let g = m(text);
            let h = parity_check(&g).unwrap();
            assert_eq!(h.rows(), rows);
            assert!(g.mul(&h.transpose()).is_zero());
            assert_eq!(h.rank_rational(), rows);
            assert!(h.is_basic().unwrap());
            assert!(is_row_reduced(&h));
        }
    }

    #[test]
    fn image_encoder_of_dependent_rows() {
        let g = m("1; z; a\nz; z^2; az\nz + 1; z^2 + z; az + a");
        let img = image_encoder(&g).unwrap();
        assert_eq!(img.rows(), 1);
        // every row of g is a polynomial multiple of the single image row
        for i in 0..3 {
            let ratio = g.get(i, 0).exact_div(img.get(0, 0)).unwrap();
            for j in 0..3 {
                assert_eq!(*g.get(i, j), &ratio * img.get(0, j));
            }
        }
    }
}

//! Matrices over GF(q)[z] and the invariants of the codes they generate.

mod encoder;
mod snf;

pub use encoder::{
    basic_encoder, encoder_profile, image_encoder, is_row_reduced, parity_check, reduce_rows,
    right_inverse, same_row_module, to_canonical, BasicEncoder, EncoderProfile,
};
pub use snf::{smith_normal_form, SnfDecomposition};

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::field::{Elem, Field};
use crate::linalg::Dense;
use crate::poly::{Degree, Poly, PolyError, PolyVector};

/// Above this many minors `minors_gcd` switches to the Smith form.
pub const MINOR_ENUMERATION_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("rows have unequal lengths")]
    Ragged,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix has rational rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("matrix is not basic")]
    NotBasic,
    #[error("code has full rate (k = n); there is no nonzero control matrix")]
    FullRate,
    #[error("matrix parse error on row {row}: {source}")]
    Parse { row: usize, source: PolyError },
    #[error("machine matrix entry ({row},{col}) has log index outside [-1, q-2]")]
    BadLogIndex { row: usize, col: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for line in self.render_text().lines() {
            writeln!(f, "  {line}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

impl PolyMatrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Poly::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> PolyMatrix {
        PolyMatrix::from_fn(field, n, n, |i, j| {
            if i == j {
                Poly::one(field)
            } else {
                Poly::zero(field)
            }
        })
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Poly,
    ) -> PolyMatrix {
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        PolyMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Ragged);
        }
        let n_rows = rows.len();
        let data: Vec<Poly> = rows.into_iter().flatten().collect();
        assert!(
            data.iter().all(|p| p.field() == field),
            "matrix entries over a different field"
        );
        Ok(PolyMatrix {
            field: field.clone(),
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Constant matrix from a dense GF(q) matrix.
    pub fn from_dense(field: &Field, m: &Dense) -> Result<PolyMatrix, MatrixError> {
        PolyMatrix::from_rows(
            field,
            m.iter()
                .map(|r| r.iter().map(|&c| Poly::constant(field, c)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert!(p.field() == &self.field, "entry over a different field");
        self.data[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> PolyVector {
        PolyVector::new(self.row(i).to_vec())
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible matrix shapes");
        PolyMatrix::from_fn(&self.field, self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Poly::zero(&self.field), |acc, t| {
                &acc + &(self.get(i, t) * rhs.get(t, j))
            })
        })
    }

    /// Row vector times matrix, `u(z) M`.
    pub fn apply(&self, u: &PolyVector) -> PolyVector {
        assert_eq!(u.len(), self.rows, "input length must equal row count");
        PolyVector::new(
            (0..self.cols)
                .map(|j| {
                    u.entries()
                        .iter()
                        .enumerate()
                        .fold(Poly::zero(&self.field), |acc, (i, ui)| &acc + &(ui * self.get(i, j)))
                })
                .collect(),
        )
    }

    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.field, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j]).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.field, rows.len(), self.cols, |i, j| {
            self.get(rows[i], j).clone()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += c * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = c * self.get(src, j);
            let idx = dst * self.cols + j;
            self.data[idx] = &self.data[idx] + &t;
        }
    }

    /// `col[dst] += c * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = c * self.get(i, src);
            let idx = i * self.cols + dst;
            self.data[idx] = &self.data[idx] + &t;
        }
    }

    pub fn scale_row(&mut self, i: usize, c: Elem) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = self.data[idx].scale(c);
        }
    }

    pub fn row_degree(&self, i: usize) -> Degree {
        self.row(i).iter().map(Poly::degree).max().unwrap_or(Degree::NegInfinity)
    }

    pub fn row_degrees(&self) -> Vec<Degree> {
        (0..self.rows).map(|i| self.row_degree(i)).collect()
    }

    pub fn max_degree(&self) -> Degree {
        self.data.iter().map(Poly::degree).max().unwrap_or(Degree::NegInfinity)
    }

    /// Coefficients of each row at its own row degree. Zero rows give
    /// zero rows.
    pub fn high_order_coefficients(&self) -> Dense {
        (0..self.rows)
            .map(|i| match self.row_degree(i) {
                Degree::NegInfinity => vec![Elem::ZERO; self.cols],
                Degree::Finite(d) => self.row(i).iter().map(|p| p.coeff(d)).collect(),
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let f = &self.field;
        if n == 0 {
            return Poly::one(f);
        }
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = Poly::one(f);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Poly::zero(f),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().is_unit()
    }

    /// Rank over GF(q)(z), by fraction-free elimination.
    pub fn rank_rational(&self) -> usize {
        let mut a = self.to_rows();
        let mut prev = Poly::one(&self.field);
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, pr);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                    a[i][j] = num.exact_div(&prev).expect("fraction-free division is exact");
                }
                a[i][c] = Poly::zero(&self.field);
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    fn minor_count(&self, order: usize) -> u64 {
        binomial(self.rows as u64, order as u64)
            .saturating_mul(binomial(self.cols as u64, order as u64))
    }

    /// All minors of the given order, rows-subset major.
    pub fn minors(&self, order: usize) -> Vec<Poly> {
        let mut out = Vec::new();
        for rs in (0..self.rows).combinations(order) {
            let sub = self.select_rows(&rs);
            for cs in (0..self.cols).combinations(order) {
                out.push(sub.select_columns(&cs).determinant());
            }
        }
        out
    }

    fn check_order(&self, order: usize) -> Result<(), MatrixError> {
        if order > self.rows.min(self.cols) {
            return Err(MatrixError::DimensionMismatch(format!(
                "minor order {order} exceeds {}x{}",
                self.rows, self.cols
            )));
        }
        let rank = self.rank_rational();
        if rank < order {
            return Err(MatrixError::RankDeficient {
                rank,
                expected: order,
            });
        }
        Ok(())
    }

    /// Monic gcd of all minors of order `order`.
    pub fn minors_gcd(&self, order: usize) -> Result<Poly, MatrixError> {
        self.check_order(order)?;
        if self.minor_count(order) <= MINOR_ENUMERATION_LIMIT {
            Ok(self.minors_gcd_enumerated(order))
        } else {
            Ok(self.minors_gcd_from_snf(order))
        }
    }

    pub fn minors_gcd_enumerated(&self, order: usize) -> Poly {
        self.minors(order)
            .iter()
            .fold(Poly::zero(&self.field), |g, m| Poly::gcd(&g, m))
    }

    /// Product of the first `order` invariant factors.
    pub fn minors_gcd_from_snf(&self, order: usize) -> Poly {
        let snf = smith_normal_form(self);
        snf.invariant_factors
            .iter()
            .take(order)
            .fold(Poly::one(&self.field), |acc, d| &acc * d)
    }

    /// Whether the order-k minors (k = row count) have gcd 1.
    pub fn is_basic(&self) -> Result<bool, MatrixError> {
        Ok(self.minors_gcd(self.rows)?.is_one())
    }

    /// Largest degree among the order-k minors of a basic matrix.
    pub fn code_degree(&self) -> Result<usize, MatrixError> {
        if !self.is_basic()? {
            return Err(MatrixError::NotBasic);
        }
        Ok(self
            .minors(self.rows)
            .iter()
            .filter_map(Poly::deg)
            .max()
            .unwrap_or(0))
    }

    /// One row per line, entries separated by `; `.
    pub fn render_text(&self) -> String {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Poly::render).join("; "))
            .join("\n")
    }

    pub fn parse_text(field: &Field, text: &str) -> Result<PolyMatrix, MatrixError> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate()
            .map(|(row, line)| {
                line.split(';')
                    .map(|e| Poly::parse(field, e).map_err(|source| MatrixError::Parse { row, source }))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::from_rows(field, rows)
    }

    /// Nested row -> column -> degree -> log index (`-1` for zero).
    pub fn to_log_indices(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Poly::to_log_indices).collect())
            .collect()
    }

    pub fn from_log_indices(
        field: &Field,
        logs: &[Vec<Vec<i64>>],
    ) -> Result<PolyMatrix, MatrixError> {
        let rows = logs
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, e)| {
                        Poly::from_log_indices(field, e)
                            .ok_or(MatrixError::BadLogIndex { row: i, col: j })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::from_rows(field, rows)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

use crate::field::{Elem, Field};
use crate::polymat::PolyMatrix;

use super::DistanceError;

/// Largest number of information words the brute-force search visits.
pub const BRUTEFORCE_LIMIT: u64 = 100_000_000;

/// Validation horizon `delta + m + 2`. Not sufficient in general.
pub fn default_deg_bound(degree: usize, memory: usize) -> usize {
    degree + memory + 2
}

/// `q^(k (deg_bound + 1))`, the number of candidate information words.
pub fn bruteforce_search_size(q: u32, k: usize, deg_bound: usize) -> u128 {
    let exp = (k * (deg_bound + 1)) as u32;
    (q as u128).checked_pow(exp).unwrap_or(u128::MAX)
}

/// Largest degree bound whose search stays within [`BRUTEFORCE_LIMIT`].
pub fn max_feasible_deg_bound(q: u32, k: usize) -> Option<usize> {
    (0..)
        .take_while(|&d| bruteforce_search_size(q, k, d) <= BRUTEFORCE_LIMIT as u128)
        .last()
}

/// Minimum weight of `u(z) g` over all nonzero `u` with every
/// `deg u_i <= deg_bound`. An upper bound on the free distance, exact once
/// the bound covers a minimum-weight codeword.
///
/// Information words are visited in a q-ary Gray order, so consecutive
/// words differ in one coefficient and the codeword is updated by adding a
/// single scaled, shifted row of `g`.
pub fn free_distance_bruteforce(g: &PolyMatrix, deg_bound: usize) -> Result<u32, DistanceError> {
    let field = g.field();
    let q = field.order();
    let size = bruteforce_search_size(q, g.rows(), deg_bound);
    if size > BRUTEFORCE_LIMIT as u128 {
        return Err(DistanceError::SearchSpaceTooLarge { size });
    }
    let (k, n) = (g.rows(), g.cols());
    let max_deg = g.max_degree().finite().unwrap_or(0);
    let span = deg_bound + max_deg + 1;
    let positions = k * (deg_bound + 1);
    let elems: Vec<Elem> = field.elements().collect();

    // changes[pos][v]: sparse codeword update when the coefficient at `pos`
    // steps from elems[v] to elems[v + 1 mod q].
    let changes: Vec<Vec<Vec<(usize, Elem)>>> = (0..positions)
        .map(|pos| {
            let (row, shift) = (pos / (deg_bound + 1), pos % (deg_bound + 1));
            (0..q as usize)
                .map(|v| {
                    let step = field.sub(elems[(v + 1) % q as usize], elems[v]);
                    row_update(field, g, row, shift, span, step, n)
                })
                .collect()
        })
        .collect();

    let mut counter = vec![0usize; positions];
    let mut gray = vec![0usize; positions];
    let mut codeword = vec![Elem::ZERO; n * span];
    let mut weight = 0i64;
    let mut best = u32::MAX;
    for _ in 1..size as u64 {
        // The carry position of the ordinary counter is the one Gray digit
        // that moves.
        let mut pos = 0;
        while counter[pos] == q as usize - 1 {
            counter[pos] = 0;
            pos += 1;
        }
        counter[pos] += 1;

        for &(idx, delta) in &changes[pos][gray[pos]] {
            let before = !codeword[idx].is_zero();
            codeword[idx] = field.add(codeword[idx], delta);
            weight += !codeword[idx].is_zero() as i64 - before as i64;
        }
        gray[pos] = (gray[pos] + 1) % q as usize;
        best = best.min(weight as u32);
    }
    Ok(best)
}

fn row_update(
    field: &Field,
    g: &PolyMatrix,
    row: usize,
    shift: usize,
    span: usize,
    step: Elem,
    n: usize,
) -> Vec<(usize, Elem)> {
    let mut out = Vec::new();
    if step.is_zero() {
        return out;
    }
    for col in 0..n {
        for (d, &c) in g.get(row, col).coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.push((col * span + shift + d, field.mul(step, c)));
            }
        }
    }
    out
}

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::field::{Elem, Field};
use crate::poly::{Poly, PolyVector};
use crate::polymat::{is_row_reduced, PolyMatrix};

use super::DistanceError;

/// Largest number of encoder states the search will allocate.
pub const STATE_LIMIT: u64 = 1 << 24;

/// Controller-canonical realization of a canonical encoder.
///
/// Input `i` drives a register holding its previous `nu_i` symbols, most
/// recent first. A state packs every register cell as a base-`q` digit
/// (input 0's cells lowest). Outputs are linear, so each branch output is
/// the sum of a per-state and a per-input block.
#[derive(Debug, Clone)]
pub struct StateSpace {
    field: Field,
    k: usize,
    n: usize,
    memories: Vec<usize>,
    num_states: usize,
    num_inputs: usize,
    /// Register contribution to the output block, `num_states * n`.
    state_out: Vec<Elem>,
    /// Current-input contribution to the output block, `num_inputs * n`.
    input_out: Vec<Elem>,
    /// State index after shifting every register by one cell, without the
    /// new input.
    shifted: Vec<u32>,
    /// Placement of an input block into the first cell of each register.
    input_place: Vec<u32>,
}

/// Minimum-weight excursion from the zero state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub distance: u32,
    /// Input blocks of one minimizing excursion, in time order.
    pub inputs: Vec<Vec<Elem>>,
}

impl SearchResult {
    /// The minimizing information word `u(z)`.
    pub fn information_word(&self, field: &Field) -> PolyVector {
        let k = self.inputs.first().map_or(0, Vec::len);
        PolyVector::new(
            (0..k)
                .map(|i| Poly::from_coeffs(field, self.inputs.iter().map(|b| b[i]).collect()))
                .collect(),
        )
    }
}

/// Base-`q` digits of `x`, least significant first, read as packed field
/// representatives.
fn digits(mut x: usize, q: usize, len: usize) -> Vec<Elem> {
    (0..len)
        .map(|_| {
            let d = x % q;
            x /= q;
            Elem::from_repr(d as u16)
        })
        .collect()
}

impl StateSpace {
    /// Requires a canonical encoder: basic, with row-reduced high-order
    /// coefficients.
    pub fn new(g: &PolyMatrix) -> Result<StateSpace, DistanceError> {
        if g.rows() == 0 || !is_row_reduced(g) || !g.is_basic()? {
            return Err(DistanceError::NotCanonical);
        }
        let field = g.field().clone();
        let (k, n) = (g.rows(), g.cols());
        let q = field.order() as usize;
        let memories: Vec<usize> = g
            .row_degrees()
            .iter()
            .map(|d| d.finite().expect("rows of a basic encoder are nonzero"))
            .collect();
        let delta: usize = memories.iter().sum();

        let states = (q as u128).pow(delta as u32);
        if states > STATE_LIMIT as u128 {
            return Err(DistanceError::StateSpaceTooLarge { states });
        }
        let inputs = (q as u128).pow(k as u32);
        if inputs.saturating_mul(states) > (STATE_LIMIT as u128) << 4 {
            return Err(DistanceError::StateSpaceTooLarge { states });
        }
        let (num_states, num_inputs) = (states as usize, inputs as usize);

        let offsets: Vec<usize> = memories
            .iter()
            .scan(0, |acc, &nu| {
                let o = *acc;
                *acc += nu;
                Some(o)
            })
            .collect();
        let pow_q = |e: usize| q.pow(e as u32);

        // taps[i][l][j]: coefficient of z^l in g[i][j]
        let taps: Vec<Vec<Vec<Elem>>> = (0..k)
            .map(|i| {
                (0..=memories[i])
                    .map(|l| (0..n).map(|j| g.get(i, j).coeff(l)).collect())
                    .collect()
            })
            .collect();

        let mut state_out = vec![Elem::ZERO; num_states * n];
        let mut shifted = vec![0u32; num_states];
        for s in 0..num_states {
            let cells = digits(s, q, delta);
            let out = &mut state_out[s * n..(s + 1) * n];
            let mut next = 0usize;
            for i in 0..k {
                let (o, nu) = (offsets[i], memories[i]);
                for l in 0..nu {
                    let cell = cells[o + l];
                    if !cell.is_zero() {
                        for (slot, &t) in out.iter_mut().zip(&taps[i][l + 1]) {
                            *slot = field.add(*slot, field.mul(cell, t));
                        }
                    }
                    // cell l moves to l + 1; the oldest falls off
                    if l + 1 < nu {
                        next += cell.repr() as usize * pow_q(o + l + 1);
                    }
                }
            }
            shifted[s] = next as u32;
        }

        let mut input_out = vec![Elem::ZERO; num_inputs * n];
        let mut input_place = vec![0u32; num_inputs];
        for u in 0..num_inputs {
            let block = digits(u, q, k);
            let out = &mut input_out[u * n..(u + 1) * n];
            let mut place = 0usize;
            for (i, &ui) in block.iter().enumerate() {
                if ui.is_zero() {
                    continue;
                }
                for (slot, &t) in out.iter_mut().zip(&taps[i][0]) {
                    *slot = field.add(*slot, field.mul(ui, t));
                }
                if memories[i] > 0 {
                    place += ui.repr() as usize * pow_q(offsets[i]);
                }
            }
            input_place[u] = place as u32;
        }

        Ok(StateSpace {
            field,
            k,
            n,
            memories,
            num_states,
            num_inputs,
            state_out,
            input_out,
            shifted,
            input_place,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    /// Register lengths, one per input (the encoder's row degrees).
    pub fn memories(&self) -> &[usize] {
        &self.memories
    }

    /// Next state and output block for a packed input block.
    pub fn branch(&self, state: usize, input: usize) -> (usize, Vec<Elem>) {
        let next = (self.shifted[state] + self.input_place[input]) as usize;
        let out = (0..self.n)
            .map(|j| {
                self.field.add(
                    self.state_out[state * self.n + j],
                    self.input_out[input * self.n + j],
                )
            })
            .collect();
        (next, out)
    }

    #[inline]
    fn branch_weight(&self, state: usize, input: usize) -> u32 {
        let s = &self.state_out[state * self.n..(state + 1) * self.n];
        let u = &self.input_out[input * self.n..(input + 1) * self.n];
        s.iter()
            .zip(u)
            .filter(|(&a, &b)| !self.field.add(a, b).is_zero())
            .count() as u32
    }

    fn pack_input(&self, block: &[Elem]) -> usize {
        let q = self.field.order() as usize;
        block.iter().rev().fold(0, |acc, e| acc * q + e.repr() as usize)
    }

    /// Streams input blocks from the zero state and returns every output
    /// block; pad the input with `memory` zero blocks to flush the registers.
    pub fn encode_stream(&self, inputs: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
        let mut state = 0;
        inputs
            .iter()
            .map(|block| {
                assert_eq!(block.len(), self.k, "input block length must be k");
                let (next, out) = self.branch(state, self.pack_input(block));
                state = next;
                out
            })
            .collect()
    }

    /// Lightest path that leaves the zero state with a nonzero input block
    /// and returns to it. Branch weights are nonnegative, so states settle
    /// in order of weight; a state is expanded only while its weight is
    /// below the best completed excursion.
    pub fn search(&self) -> SearchResult {
        const UNSEEN: u32 = u32::MAX;
        let mut dist = vec![UNSEEN; self.num_states];
        let mut pred: Vec<(u32, u32)> = vec![(0, 0); self.num_states];
        let mut heap = BinaryHeap::new();
        let mut best = UNSEEN;
        let mut best_edge = (0usize, 0usize);

        for u in 1..self.num_inputs {
            let w = self.branch_weight(0, u);
            let next = (self.shifted[0] + self.input_place[u]) as usize;
            if next == 0 {
                if w < best {
                    best = w;
                    best_edge = (0, u);
                }
            } else if w < dist[next] {
                dist[next] = w;
                pred[next] = (0, u as u32);
                heap.push(Reverse((w, next)));
            }
        }

        while let Some(Reverse((d, s))) = heap.pop() {
            if d > dist[s] {
                continue;
            }
            if d >= best {
                break;
            }
            let base = self.shifted[s];
            for u in 0..self.num_inputs {
                let w = d + self.branch_weight(s, u);
                if w >= best {
                    continue;
                }
                let next = (base + self.input_place[u]) as usize;
                if next == 0 {
                    best = w;
                    best_edge = (s, u);
                } else if w < dist[next] {
                    dist[next] = w;
                    pred[next] = (s as u32, u as u32);
                    heap.push(Reverse((w, next)));
                }
            }
        }

        let q = self.field.order() as usize;
        let mut packed = vec![best_edge.1];
        let mut s = best_edge.0;
        while s != 0 {
            let (p, u) = pred[s];
            packed.push(u as usize);
            s = p as usize;
        }
        packed.reverse();
        SearchResult {
            distance: best,
            inputs: packed.into_iter().map(|u| digits(u, q, self.k)).collect(),
        }
    }
}

/// Free distance of a canonical encoder via [`StateSpace::search`].
pub fn free_distance(g: &PolyMatrix) -> Result<u32, DistanceError> {
    Ok(StateSpace::new(g)?.search().distance)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> PolyMatrix {
        PolyMatrix::parse_text(&Field::gf8(), text).unwrap()
    }

    const G13: &str = "a^6 + az + a^4z^2; a^5 + a^2z + az^2; a^3 + a^4z + a^2z^2";
    const G14: &str = "a^3 + a^3z + z^2; a^6 + a^6z + z^2; a^6 + a^2z + z^2; a^5 + a^5z + z^2";
    const G24: &str = "a + a^3z; a^2 + a^6z; a^3 + a^2z; a^4 + a^5z
                       a^4 + z^2; a + z^2; a^5 + z^2; a^2 + z^2";

    #[test]
    fn state_counts() {
        assert_eq!(StateSpace::new(&m(G13)).unwrap().num_states(), 64);
        assert_eq!(StateSpace::new(&m(G24)).unwrap().num_states(), 512);
        assert_eq!(StateSpace::new(&m("1; a; a^2")).unwrap().num_states(), 1);
    }

    #[test]
    fn reference_distances() {
        assert_eq!(free_distance(&m(G13)).unwrap(), 9);
        assert_eq!(free_distance(&m(G14)).unwrap(), 12);
        assert_eq!(free_distance(&m(G24)).unwrap(), 8);
    }

    #[test]
    fn identity_encoder_has_distance_one() {
        let id = PolyMatrix::identity(&Field::gf8(), 3);
        assert_eq!(free_distance(&id).unwrap(), 1);
    }

    #[test]
    fn witness_weight_matches() {
        let g = m(G24);
        let res = StateSpace::new(&g).unwrap().search();
        let u = res.information_word(g.field());
        assert!(!u.is_zero());
        assert_eq!(g.apply(&u).weight() as u32, res.distance);
    }

    #[test]
    fn rejects_non_canonical() {
        assert_eq!(
            StateSpace::new(&m("z; 0; 0\n0; z; 0")).unwrap_err(),
            DistanceError::NotCanonical
        );
        // basic but not row reduced
        let inflated = m("1; z^2 + a\n0; 1").mul(&m(G24).select_columns(&[0, 1, 2, 3]));
        assert_eq!(StateSpace::new(&inflated).unwrap_err(), DistanceError::NotCanonical);
    }
}

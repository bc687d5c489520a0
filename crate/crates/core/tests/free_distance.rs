use cgc::examples::fixtures;
use cgc::free_distance::{
    default_deg_bound, free_distance, free_distance_bruteforce, StateSpace,
};
use cgc::polymat::to_canonical;
use cgc::{Elem, Field, FieldSpec, Poly, PolyMatrix, PolyVector};
use proptest::prelude::*;

fn field(q: u32) -> Field {
    match q {
        2 => Field::new(FieldSpec::new(2, 1, vec![1, 1])).unwrap(),
        4 => Field::new(FieldSpec::new(2, 2, vec![1, 1, 1])).unwrap(),
        _ => Field::gf8(),
    }
}

fn poly(f: &Field, coeffs: &[u32]) -> Poly {
    Poly::from_coeffs(f, coeffs.iter().map(|&c| f.element(c).unwrap()).collect())
}

/// A random canonical encoder with `k <= 2`, `n <= 4` and small degree.
fn canonical_code() -> impl Strategy<Value = PolyMatrix> {
    (prop_oneof![Just(2u32), Just(4), Just(8)], 1usize..=2)
        .prop_flat_map(|(q, k)| {
            (
                Just(q),
                Just(k),
                (k + 1..=4).prop_flat_map(move |n| {
                    prop::collection::vec(prop::collection::vec(0..q, 0..3), k * n)
                        .prop_map(move |entries| (n, entries))
                }),
            )
        })
        .prop_filter_map("full rank, small degree", |(q, k, (n, entries))| {
            let f = field(q);
            let g = PolyMatrix::from_fn(&f, k, n, |i, j| poly(&f, &entries[i * n + j]));
            if g.rank_rational() < k {
                return None;
            }
            let (c, profile) = to_canonical(&g).ok()?;
            (profile.degree <= 3).then_some(c)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn streaming_reproduces_polynomial_product(
        g in canonical_code(),
        raw in prop::collection::vec(prop::collection::vec(0u32..8, 5), 2),
    ) {
        let f = g.field().clone();
        let (k, n) = (g.rows(), g.cols());
        let q = f.order();
        let u: Vec<Poly> = raw[..k]
            .iter()
            .map(|c| poly(&f, &c.iter().map(|x| x % q).collect::<Vec<_>>()))
            .collect();
        let space = StateSpace::new(&g).unwrap();
        let memory = space.memories().iter().copied().max().unwrap_or(0);
        let blocks: Vec<Vec<Elem>> = (0..5 + memory)
            .map(|t| u.iter().map(|ui| ui.coeff(t)).collect())
            .collect();
        let streamed = space.encode_stream(&blocks);
        let product = g.apply(&PolyVector::new(u));
        for (t, block) in streamed.iter().enumerate() {
            for j in 0..n {
                prop_assert_eq!(block[j], product.entries()[j].coeff(t));
            }
        }
    }

    #[test]
    fn bruteforce_is_non_increasing_in_horizon(g in canonical_code()) {
        let q = g.field().order();
        let top = if q == 8 && g.rows() == 2 { 2 } else { 3 };
        let values: Vec<u32> = (0..=top)
            .map(|d| free_distance_bruteforce(&g, d).unwrap())
            .collect();
        prop_assert!(values.windows(2).all(|w| w[1] <= w[0]), "{:?}", values);
        prop_assert!(free_distance(&g).unwrap() <= values[top]);
    }
}

#[test]
fn oracle_agrees_on_rate_one_reference_codes_at_default_horizon() {
    for fx in fixtures().into_iter().filter(|fx| fx.k == 1) {
        let f = Field::gf8();
        let g = PolyMatrix::parse_text(&f, &fx.generator).unwrap();
        let d = default_deg_bound(fx.degree, fx.memory);
        assert_eq!(free_distance_bruteforce(&g, d).unwrap(), fx.free_distance, "{}", fx.id);
        assert_eq!(free_distance(&g).unwrap(), fx.free_distance, "{}", fx.id);
    }
}

#[test]
fn constant_inputs_give_minimum_scaled_row_weight() {
    let f = Field::gf8();
    let g = PolyMatrix::parse_text(&f, "a + z; 0; 1 + a^3z; a^5").unwrap();
    let expected = f
        .nonzero_elements()
        .map(|c| g.row(0).iter().map(|p| p.scale(c).weight()).sum::<usize>())
        .min()
        .unwrap();
    assert_eq!(free_distance_bruteforce(&g, 0).unwrap() as usize, expected);
}

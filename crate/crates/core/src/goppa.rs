//! Evaluation codes on the trivial fibration `P^m x A^1 -> A^1`.
//!
//! A section is an affine-linear map `z -> (alpha_1 z + beta_1, ...,
//! alpha_m z + beta_m, z)` into the affine chart away from the hyperplane at
//! infinity. Global sections of `O(r)` are spanned by the monomials in the
//! affine coordinates of total degree at most `r`; a generator of the
//! submodule Gamma is a GF(q)[z]-combination of such monomials. Evaluating
//! each generator along each section yields one row of the generator matrix.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Elem, Field};
use crate::free_distance::{
    self, default_deg_bound, free_distance_bruteforce, max_feasible_deg_bound, DistanceError,
};
use crate::linalg;
use crate::poly::Poly;
use crate::polymat::{
    basic_encoder, image_encoder, parity_check, to_canonical, MatrixError, PolyMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoppaError {
    #[error("the generating set Gamma is empty")]
    EmptyGamma,
    #[error("no sections given")]
    EmptySections,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("sections {first} and {second} coincide")]
    DuplicateSections { first: usize, second: usize },
    #[error("Gamma generator {index} has no nonzero term")]
    ZeroGenerator { index: usize },
    #[error("Gamma generator {index} has a monomial of degree {degree} > r = {r}")]
    TwistExceeded { index: usize, degree: u32, r: u32 },
    #[error("every Gamma generator vanishes along the sections")]
    TrivialImage,
    #[error("cannot parse Gamma generator {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

/// `z -> (alpha_1 z + beta_1, ..., alpha_m z + beta_m, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    coords: Vec<(Elem, Elem)>,
}

impl Section {
    /// `coords[r] = (alpha_r, beta_r)`.
    pub fn new(coords: Vec<(Elem, Elem)>) -> Section {
        Section { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(Elem, Elem)] {
        &self.coords
    }

    /// The `r`-th affine coordinate `alpha_r z + beta_r`.
    pub fn coordinate(&self, field: &Field, r: usize) -> Poly {
        let (alpha, beta) = self.coords[r];
        Poly::linear(field, alpha, beta)
    }
}

/// Pairwise distinct sections of one dimension, over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSet {
    field: Field,
    sections: Vec<Section>,
}

impl SectionSet {
    pub fn new(field: &Field, sections: Vec<Section>) -> Result<SectionSet, GoppaError> {
        let m = sections.first().ok_or(GoppaError::EmptySections)?.dim();
        if m == 0 {
            return Err(GoppaError::DimensionMismatch(
                "sections need at least one affine coordinate".into(),
            ));
        }
        if let Some(i) = sections.iter().position(|s| s.dim() != m) {
            return Err(GoppaError::DimensionMismatch(format!(
                "section {} has {} coordinates, section 1 has {m}",
                i + 1,
                sections[i].dim()
            )));
        }
        for (i, a) in sections.iter().enumerate() {
            if let Some(j) = sections[i + 1..].iter().position(|b| a == b) {
                return Err(GoppaError::DuplicateSections {
                    first: i + 1,
                    second: i + j + 2,
                });
            }
        }
        Ok(SectionSet {
            field: field.clone(),
            sections,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn len(&self) -> usize {
        self.sections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sections.is_empty()
    }

    /// Fiber dimension `m`.
    pub fn dim(&self) -> usize {
        self.sections[0].dim()
    }

    /// Whether every `alpha` vanishes, so the code has no `z`-dependence.
    pub fn all_constant(&self) -> bool {
        self.sections
            .iter()
            .all(|s| s.coords.iter().all(|(a, _)| a.is_zero()))
    }

    /// Whether the points `(alpha, beta)` of GF(q)^{2m} lie on one affine
    /// line, so that for each `z` the evaluation points are collinear.
    pub fn collinear(&self) -> bool {
        let flat = |s: &Section| -> Vec<Elem> {
            s.coords
                .iter()
                .map(|c| c.0)
                .chain(s.coords.iter().map(|c| c.1))
                .collect()
        };
        let base = flat(&self.sections[0]);
        let diffs: linalg::Dense = self.sections[1..]
            .iter()
            .map(|s| {
                flat(s)
                    .iter()
                    .zip(&base)
                    .map(|(&x, &b)| self.field.sub(x, b))
                    .collect()
            })
            .collect();
        linalg::rank(&self.field, &diffs) <= 1
    }

    /// The same sections in another order: `order[j]` is the old index of
    /// the new `j`-th section.
    pub fn permuted(&self, order: &[usize]) -> SectionSet {
        SectionSet {
            field: self.field.clone(),
            sections: order.iter().map(|&i| self.sections[i].clone()).collect(),
        }
    }
}

/// One term `coefficient(z) * prod_r x_r^{e_r}` of a Gamma generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTerm {
    pub exponents: Vec<u32>,
    pub coefficient: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGenerator {
    terms: Vec<GammaTerm>,
}

impl GammaGenerator {
    /// Terms must share one exponent length and not all vanish.
    pub fn new(terms: Vec<GammaTerm>) -> Result<GammaGenerator, GoppaError> {
        let m = terms.first().map_or(0, |t| t.exponents.len());
        if terms.iter().any(|t| t.exponents.len() != m) {
            return Err(GoppaError::DimensionMismatch(
                "Gamma terms have different exponent lengths".into(),
            ));
        }
        if terms.iter().all(|t| t.coefficient.is_zero()) {
            return Err(GoppaError::ZeroGenerator { index: 0 });
        }
        Ok(GammaGenerator { terms })
    }

    /// A single monomial with coefficient 1.
    pub fn monomial(field: &Field, exponents: Vec<u32>) -> GammaGenerator {
        GammaGenerator {
            terms: vec![GammaTerm {
                exponents,
                coefficient: Poly::one(field),
            }],
        }
    }

    pub fn terms(&self) -> &[GammaTerm] {
        &self.terms
    }

    pub fn dim(&self) -> usize {
        self.terms[0].exponents.len()
    }

    /// Largest total degree among terms with a nonzero coefficient.
    pub fn twist_degree(&self) -> u32 {
        self.terms
            .iter()
            .filter(|t| !t.coefficient.is_zero())
            .map(|t| t.exponents.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Parses a sum of monomials with constant coefficients, e.g.
    /// `t + s^2` or `a^3 t s + 1`. Variables are `t, s` when `m <= 2` and
    /// `x1 .. xm` in general. Factors are separated by spaces or `*`.
    pub fn parse(field: &Field, m: usize, text: &str) -> Result<GammaGenerator, GoppaError> {
        let err = |reason: String| GoppaError::Parse {
            text: text.to_string(),
            reason,
        };
        let mut terms = Vec::new();
        for term in text.split('+') {
            let mut exponents = vec![0u32; m];
            let mut coeff = Elem::ONE;
            let factors: Vec<&str> = term
                .split(|c: char| c.is_whitespace() || c == '*')
                .filter(|f| !f.is_empty())
                .collect();
            if factors.is_empty() {
                return Err(err("empty term".into()));
            }
            for factor in factors {
                let (base, power) = match factor.split_once('^') {
                    Some((b, p)) => (b, p.parse::<u32>().map_err(|_| err(format!("bad power in {factor:?}")))?),
                    None => (factor, 1),
                };
                match variable_index(base, m) {
                    Some(r) => exponents[r] += power,
                    None => {
                        let c = field
                            .parse_element(factor)
                            .map_err(|_| err(format!("unknown factor {factor:?}")))?;
                        coeff = field.mul(coeff, c);
                    }
                }
            }
            terms.push(GammaTerm {
                exponents,
                coefficient: Poly::constant(field, coeff),
            });
        }
        GammaGenerator::new(terms)
    }

    /// Human-readable form, e.g. `t + s^2`.
    pub fn render(&self) -> String {
        self.terms
            .iter()
            .filter(|t| !t.coefficient.is_zero())
            .map(|t| {
                let mono = monomial_name(&t.exponents);
                if t.coefficient.is_one() {
                    mono
                } else if mono == "1" {
                    format!("({})", t.coefficient)
                } else {
                    format!("({}) {mono}", t.coefficient)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for GammaGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn variable_index(name: &str, m: usize) -> Option<usize> {
    match name {
        "t" if m <= 2 => Some(0),
        "s" if m == 2 => Some(1),
        _ => {
            let r: usize = name.strip_prefix('x')?.parse().ok()?;
            (1..=m).contains(&r).then(|| r - 1)
        }
    }
}

/// `1`, `t`, `t s`, `s^2`, or `x1^2 x3` beyond two coordinates.
pub fn monomial_name(exponents: &[u32]) -> String {
    let m = exponents.len();
    let names: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(r, &e)| {
            let var = if m <= 2 {
                ["t", "s"][r].to_string()
            } else {
                format!("x{}", r + 1)
            };
            if e == 1 {
                var
            } else {
                format!("{var}^{e}")
            }
        })
        .collect();
    if names.is_empty() {
        "1".into()
    } else {
        names.join(" ")
    }
}

/// Exponent vectors of all monomials of total degree at most `r` in `m`
/// variables, in graded lexicographic order (`1, t, s, t^2, t s, s^2`).
pub fn monomial_basis(m: usize, r: u32) -> Vec<Vec<u32>> {
    fn fill(prefix: &mut Vec<u32>, left: usize, total: u32, out: &mut Vec<Vec<u32>>) {
        if left == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=total).rev() {
            prefix.push(e);
            fill(prefix, left - 1, total - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=r {
        fill(&mut Vec::with_capacity(m), m, d, &mut out);
    }
    out
}

/// `sum coefficient(z) * prod_r (alpha_r z + beta_r)^{e_r}`.
pub fn evaluate_generator(
    field: &Field,
    g: &GammaGenerator,
    p: &Section,
) -> Result<Poly, GoppaError> {
    if g.dim() != p.dim() {
        return Err(GoppaError::DimensionMismatch(format!(
            "generator in {} variables, section in {} coordinates",
            g.dim(),
            p.dim()
        )));
    }
    let mut acc = Poly::zero(field);
    for term in &g.terms {
        if term.coefficient.is_zero() {
            continue;
        }
        let value = term
            .exponents
            .iter()
            .enumerate()
            .fold(term.coefficient.clone(), |v, (r, &e)| {
                &v * &p.coordinate(field, r).pow(e)
            });
        acc = &acc + &value;
    }
    Ok(acc)
}

/// Row `i`, column `j`: Gamma generator `i` evaluated along section `j`.
pub fn build_generator_matrix(
    gamma: &[GammaGenerator],
    sections: &SectionSet,
) -> Result<PolyMatrix, GoppaError> {
    if gamma.is_empty() {
        return Err(GoppaError::EmptyGamma);
    }
    let field = sections.field();
    let rows = gamma
        .iter()
        .map(|g| {
            sections
                .sections()
                .iter()
                .map(|p| evaluate_generator(field, g, p))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::from_rows(field, rows)?)
}

/// Generalized Singleton bound `(n - k)(floor(delta / k) + 1) + delta + 1`.
pub fn singleton_bound(n: usize, k: usize, delta: usize) -> u64 {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    let (n, k, delta) = (n as u64, k as u64, delta as u64);
    (n - k) * (delta / k + 1) + delta + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterBounds {
    /// Number of distinct affine-linear sections, `q^{2m}` (saturating).
    pub n_max: u128,
    /// `h^0(O(r)) = C(m + r, m)`.
    pub k_max: u64,
    pub memory_max: u64,
    /// `sum_{i <= r} i * C(i + m - 1, m - 1)`: each degree-`i` monomial
    /// contributes at most `i` to the degree.
    pub degree_max: u64,
}

pub fn parameter_bounds(q: u32, m: usize, r: u32) -> ParameterBounds {
    use crate::polymat::binomial;
    let n_max = (q as u128)
        .checked_pow(2 * m as u32)
        .unwrap_or(u128::MAX);
    let k_max = binomial(m as u64 + r as u64, m as u64);
    let degree_max = (0..=r as u64)
        .map(|i| i.saturating_mul(binomial(i + m as u64 - 1, m as u64 - 1)))
        .fold(0u64, u64::saturating_add);
    ParameterBounds {
        n_max,
        k_max,
        memory_max: r as u64,
        degree_max,
    }
}

/// The data of a code: twist degree `r`, Gamma generators and sections.
#[derive(Clone, Debug)]
pub struct Construction {
    pub r: u32,
    pub gamma: Vec<GammaGenerator>,
    pub sections: SectionSet,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    pub compute_distance: bool,
    /// Also run the brute-force oracle (implies `compute_distance`).
    pub bruteforce: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    Trellis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteforceCheck {
    pub value: u32,
    pub deg_bound: usize,
    /// The default horizon `delta + m + 2` was cut to fit the search limit.
    pub horizon_clipped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub value: u32,
    pub method: DistanceMethod,
    pub states: u64,
    pub bruteforce: Option<BruteforceCheck>,
}

/// Every computed invariant of a constructed code.
#[derive(Clone, Debug)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    /// Number of Gamma generators; exceeds `k` when evaluation has a kernel.
    pub gamma_size: usize,
    pub injective: bool,
    /// The evaluation image was not basic and was replaced by its saturation.
    pub module_enlarged: bool,
    pub degree: usize,
    pub memory: usize,
    pub forney_indices: Vec<usize>,
    pub free_distance: Option<DistanceReport>,
    pub singleton_bound: u64,
    pub is_mds: Option<bool>,
    pub generator_matrix: PolyMatrix,
    pub canonical_matrix: PolyMatrix,
    pub parity_matrix: Option<PolyMatrix>,
    pub warnings: Vec<String>,
    /// How each invariant was obtained, as `(invariant, method)` pairs.
    pub provenance: Vec<(String, String)>,
}

pub const WARN_BLOCK_CODE: &str = "degenerate: block code (every alpha is zero)";
pub const WARN_COLLINEAR: &str = "sections collinear: code factors through the P¹ case";

fn validate(c: &Construction) -> Result<(), GoppaError> {
    if c.gamma.is_empty() {
        return Err(GoppaError::EmptyGamma);
    }
    let m = c.sections.dim();
    for (index, g) in c.gamma.iter().enumerate() {
        if g.dim() != m {
            return Err(GoppaError::DimensionMismatch(format!(
                "Gamma generator {} uses {} variables, sections have {m} coordinates",
                index + 1,
                g.dim()
            )));
        }
        if g.terms.iter().all(|t| t.coefficient.is_zero()) {
            return Err(GoppaError::ZeroGenerator { index: index + 1 });
        }
        let degree = g.twist_degree();
        if degree > c.r {
            return Err(GoppaError::TwistExceeded {
                index: index + 1,
                degree,
                r: c.r,
            });
        }
    }
    Ok(())
}

/// Builds the generator matrix and computes the code's invariants.
pub fn build_code(c: &Construction, opts: &BuildOptions) -> Result<CodeReport, GoppaError> {
    validate(c)?;
    let g = build_generator_matrix(&c.gamma, &c.sections)?;
    let n = g.cols();
    let mut warnings = Vec::new();
    let mut provenance = Vec::new();

    let k = g.rank_rational();
    if k == 0 {
        return Err(GoppaError::TrivialImage);
    }
    let injective = k == g.rows();
    provenance.push((
        "k".to_string(),
        "rational rank of the evaluation matrix (fraction-free elimination)".to_string(),
    ));
    if !injective {
        warnings.push(format!(
            "evaluation is not injective on Gamma: {} generators span rank {k}",
            g.rows()
        ));
    }

    let image = image_encoder(&g)?;
    let basic = basic_encoder(&image)?;
    if basic.module_enlarged {
        warnings.push(
            "evaluation image is not basic; invariants refer to its basic encoder".to_string(),
        );
    }
    let (canonical, profile) = to_canonical(&basic.matrix)?;
    let minor_degree = basic.matrix.code_degree()?;
    assert_eq!(
        minor_degree, profile.degree,
        "degree from minors must equal the sum of Forney indices"
    );
    provenance.push((
        "degree".to_string(),
        "max degree of order-k minors of a basic encoder; equals the sum of Forney indices"
            .to_string(),
    ));
    provenance.push((
        "forney_indices".to_string(),
        "row degrees of the canonical (row-reduced basic) encoder".to_string(),
    ));

    let parity_matrix = if k < n {
        Some(parity_check(&canonical)?)
    } else {
        None
    };

    if c.sections.all_constant() {
        warnings.push(WARN_BLOCK_CODE.to_string());
    }
    if c.sections.dim() >= 2 && c.sections.len() >= 3 && c.sections.collinear() {
        warnings.push(WARN_COLLINEAR.to_string());
    }

    let singleton = singleton_bound(n, k, profile.degree);
    let free_distance = if opts.compute_distance || opts.bruteforce {
        let space = free_distance::StateSpace::new(&canonical)?;
        let value = space.search().distance;
        provenance.push((
            "free_distance".to_string(),
            format!(
                "lowest-weight search over {} encoder states",
                space.num_states()
            ),
        ));
        let bruteforce = if opts.bruteforce {
            let q = c.sections.field().order();
            let wanted = default_deg_bound(profile.degree, profile.memory);
            let feasible = max_feasible_deg_bound(q, k).unwrap_or(0);
            let deg_bound = wanted.min(feasible);
            let bf = free_distance_bruteforce(&canonical, deg_bound)?;
            provenance.push((
                "free_distance_bruteforce".to_string(),
                format!("enumeration of information words of degree <= {deg_bound}"),
            ));
            Some(BruteforceCheck {
                value: bf,
                deg_bound,
                horizon_clipped: deg_bound < wanted,
            })
        } else {
            None
        };
        Some(DistanceReport {
            value,
            method: DistanceMethod::Trellis,
            states: space.num_states() as u64,
            bruteforce,
        })
    } else {
        None
    };
    let is_mds = free_distance
        .as_ref()
        .map(|d| u64::from(d.value) == singleton);

    Ok(CodeReport {
        n,
        k,
        gamma_size: g.rows(),
        injective,
        module_enlarged: basic.module_enlarged,
        degree: profile.degree,
        memory: profile.memory,
        forney_indices: profile.forney_indices,
        free_distance,
        singleton_bound: singleton,
        is_mds,
        generator_matrix: g,
        canonical_matrix: canonical,
        parity_matrix,
        warnings,
        provenance,
    })
}

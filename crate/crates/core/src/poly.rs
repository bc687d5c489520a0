//! Univariate polynomials over GF(q) in the indeterminate `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{Elem, Field, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("cannot parse polynomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree (variant order matters).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial with coefficients stored low degree first and no trailing
/// zeros; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// `c z^j`
    pub fn monomial(field: &Field, c: Elem, j: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; j + 1];
        coeffs[j] = c;
        Poly::from_coeffs(field, coeffs)
    }

    /// The indeterminate `z`.
    pub fn z(field: &Field) -> Poly {
        Poly::monomial(field, Elem::ONE, 1)
    }

    /// `alpha z + beta`
    pub fn linear(field: &Field, alpha: Elem, beta: Elem) -> Poly {
        Poly::from_coeffs(field, vec![beta, alpha])
    }

    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds from log-indices of the primitive element, `-1` for zero.
    pub fn from_log_indices(field: &Field, logs: &[i64]) -> Option<Poly> {
        let coeffs = logs
            .iter()
            .map(|&k| field.from_log_index(k))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::from_coeffs(field, coeffs))
    }

    pub fn to_log_indices(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| self.field.log_index(c)).collect()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `z^j` (zero past the degree).
    pub fn coeff(&self, j: usize) -> Elem {
        self.coeffs.get(j).copied().unwrap_or(Elem::ZERO)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an ordinary integer, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    /// Nonzero constant, i.e. a unit of GF(q)[z].
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check_field(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomial arithmetic across different fields"
        );
    }

    pub fn scale(&self, c: Elem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&x| self.field.mul(x, c)).collect(),
        }
    }

    /// Multiplication by `z^j`.
    pub fn shift(&self, j: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Elem::ZERO; j];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = quotient * divisor + remainder` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check_field(divisor);
        let f = &self.field;
        let lc = divisor.leading_coeff().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = f.inv(lc)?;
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let c = f.mul(rem[shift + dlen - 1], lc_inv);
            if c.is_zero() {
                continue;
            }
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, d));
            }
        }
        rem.truncate(dlen - 1);
        Ok((Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        match self.divmod(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Extended Euclid: monic `g = gcd(a, b)` with `g = u a + v b`.
    pub fn gcd_ext(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly), PolyError> {
        a.check_field(b);
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::BothZero);
        }
        let f = &a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc_inv = f.inv(r0.leading_coeff().expect("nonzero gcd"))?;
        Ok((r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv)))
    }

    /// Monic gcd; `gcd(0, 0)` is zero.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        match Poly::gcd_ext(a, b) {
            Ok((g, _, _)) => g,
            Err(_) => Poly::zero(&a.field),
        }
    }

    /// Power-notation rendering in ascending degree, e.g. `a^6 + az + a^4z^2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, &c)| {
                let coeff = self.field.render(c);
                match j {
                    0 => coeff,
                    _ => {
                        let var = if j == 1 { "z".to_string() } else { format!("z^{j}") };
                        if c == Elem::ONE {
                            var
                        } else {
                            format!("{coeff}{var}")
                        }
                    }
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// Parses the power-notation rendering. Whitespace and `*` are ignored,
    /// repeated degrees are summed.
    pub fn parse(field: &Field, text: &str) -> Result<Poly, PolyError> {
        let err = |reason: &str| PolyError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        if compact.is_empty() {
            return Err(err("empty"));
        }
        let mut acc = Poly::zero(field);
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coeff_text, power) = match term.find('z') {
                None => (term, 0usize),
                Some(pos) => {
                    let exp = &term[pos + 1..];
                    let power = if exp.is_empty() {
                        1
                    } else {
                        exp.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| err("bad exponent of z"))?
                    };
                    (&term[..pos], power)
                }
            };
            let c = if coeff_text.is_empty() {
                Elem::ONE
            } else {
                field.parse_element(coeff_text)?
            };
            acc = &acc + &Poly::monomial(field, c, power);
        }
        Ok(acc)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let f = &self.field;
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = f.add(*c, s);
        }
        Poly::from_coeffs(f, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| self.field.neg(c)).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut coeffs = vec![Elem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(x, y));
            }
        }
        Poly::from_coeffs(f, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// A length-`n` vector of polynomials over one field, e.g. a codeword
/// `c(z)` or an information word `u(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector {
    entries: Vec<Poly>,
}

impl PolyVector {
    /// Panics if the entries are over different fields.
    pub fn new(entries: Vec<Poly>) -> PolyVector {
        if let Some(first) = entries.first() {
            assert!(
                entries.iter().all(|p| p.field == first.field),
                "vector entries over different fields"
            );
        }
        PolyVector { entries }
    }

    pub fn zero(field: &Field, n: usize) -> PolyVector {
        PolyVector {
            entries: vec![Poly::zero(field); n],
        }
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Overall Hamming weight.
    pub fn weight(&self) -> usize {
        vec_weight(self)
    }

    pub fn add(&self, other: &PolyVector) -> PolyVector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        PolyVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Poly) -> PolyVector {
        PolyVector::new(self.entries.iter().map(|p| c * p).collect())
    }
}

/// Overall Hamming weight: the number of nonzero coefficients over every
/// entry and every degree.
pub fn vec_weight(v: &PolyVector) -> usize {
    v.entries.iter().map(Poly::weight).sum()
}

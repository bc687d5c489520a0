//! Table-driven arithmetic in GF(p^s).
//!
//! A field is fixed by a prime `p`, an extension degree `s`, a monic
//! irreducible modulus of degree `s` over Z/p and a primitive element. An
//! element is stored by its canonical representative: the residue polynomial
//! `c_0 + c_1 x + ... + c_{s-1} x^{s-1}` packed as the integer `sum c_i p^i`.
//!
//! Elements display in power notation with respect to the primitive element,
//! written `a`: `0`, `1`, `a`, `a^2`, ...

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order; all tables are indexed by `u16`.
pub const MAX_ORDER: u32 = 1 << 16;

/// Symbol used for the primitive element in power notation.
pub const GENERATOR_SYMBOL: char = 'a';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{s} exceeds the table limit of {MAX_ORDER} elements")]
    FieldTooLarge { p: u32, s: u32 },
    #[error("malformed modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("malformed generator: {0}")]
    BadGenerator(String),
    #[error("generator has multiplicative order {order}, expected {expected}")]
    NotPrimitive { order: u32, expected: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}

/// Raw field element handle. Only meaningful together with the [`Field`]
/// that produced it.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Packed residue-polynomial representative.
    #[inline]
    pub fn repr(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Caller guarantees `repr < q` for the intended field.
    #[inline]
    pub(crate) fn from_repr(repr: u16) -> Elem {
        Elem(repr)
    }
}

/// Construction data for a field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub s: u32,
    /// Coefficients low to high, length `s + 1`, leading coefficient 1.
    pub modulus: Vec<u32>,
    /// Residue coefficients (low to high) of the primitive element;
    /// `None` selects the class of `x`.
    pub generator: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn new(p: u32, s: u32, modulus: Vec<u32>) -> Self {
        FieldSpec {
            p,
            s,
            modulus,
            generator: None,
        }
    }

    pub fn with_generator(mut self, generator: Vec<u32>) -> Self {
        self.generator = Some(generator);
        self
    }

    /// GF(8) with `a^3 = a^2 + 1`.
    pub fn gf8() -> Self {
        FieldSpec::new(2, 3, vec![1, 0, 1, 1])
    }
}

/// Precomputed tables for one field. Immutable once built.
#[derive(Debug)]
pub struct FieldTable {
    spec: FieldSpec,
    generator: Vec<u32>,
    q: u32,
    /// `exp[k] = a^k` for `k` in `0..2(q-1)`.
    exp: Vec<u16>,
    /// `log[x]` for nonzero `x`.
    log: Vec<u16>,
    neg: Vec<u16>,
    add: Option<Vec<u16>>,
}

/// Shared handle to a field's tables.
#[derive(Clone)]
pub struct Field(Arc<FieldTable>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; modulus {:?})",
            self.0.spec.p, self.0.spec.s, self.0.spec.modulus
        )
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.spec.p == other.0.spec.p
                && self.0.spec.modulus == other.0.spec.modulus
                && self.0.generator == other.0.generator)
    }
}

impl Eq for Field {}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv_mod(x: u32, p: u32) -> u32 {
    // p is prime, so x^(p-2) is the inverse.
    let mut base = x as u64 % p as u64;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo `b` over Z/p; `b` nonzero.
fn zp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - c as u64 * bi as u64 % p as u64) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

fn zp_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    zp_rem(&prod, modulus, p)
}

/// Trial division by every monic polynomial of degree `1..=s/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let s = modulus.len() - 1;
    for d in 1..=s / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                cand.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            cand.push(1);
            if zp_rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn pack(digits: &[u32], p: u32) -> u16 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d) as u16
}

fn unpack(mut x: u32, p: u32, s: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(s as usize);
    for _ in 0..s {
        out.push(x % p);
        x /= p;
    }
    out
}

fn add_digits(x: u32, y: u32, p: u32, s: u32) -> u16 {
    let (dx, dy) = (unpack(x, p, s), unpack(y, p, s));
    let sum: Vec<u32> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
    pack(&sum, p)
}

impl Field {
    /// Builds the tables, verifying that the modulus is irreducible and the
    /// generator primitive.
    pub fn new(spec: FieldSpec) -> Result<Field, FieldError> {
        let FieldSpec { p, s, .. } = spec;
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if s == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(s).filter(|&q| q <= MAX_ORDER as u64);
        let q = q.ok_or(FieldError::FieldTooLarge { p, s })? as u32;

        if spec.modulus.len() != s as usize + 1 {
            return Err(FieldError::BadModulus(format!(
                "expected {} coefficients, got {}",
                s + 1,
                spec.modulus.len()
            )));
        }
        if let Some(c) = spec.modulus.iter().find(|&&c| c >= p) {
            return Err(FieldError::BadModulus(format!(
                "coefficient {c} is not reduced mod {p}"
            )));
        }
        if spec.modulus[s as usize] != 1 {
            return Err(FieldError::BadModulus("modulus must be monic".into()));
        }
        if !is_irreducible(&spec.modulus, p) {
            return Err(FieldError::ReducibleModulus(p));
        }

        let generator = match &spec.generator {
            None => zp_rem(&[0, 1], &spec.modulus, p),
            Some(g) => {
                if g.len() > s as usize {
                    return Err(FieldError::BadGenerator(format!(
                        "at most {s} coefficients allowed"
                    )));
                }
                if let Some(c) = g.iter().find(|&&c| c >= p) {
                    return Err(FieldError::BadGenerator(format!(
                        "coefficient {c} is not reduced mod {p}"
                    )));
                }
                trim(g.clone())
            }
        };

        let order = q - 1;
        let mut exp = vec![0u16; 2 * order as usize];
        let mut log = vec![0u16; q as usize];
        let mut cur = vec![1u32];
        for k in 0..order {
            let packed = pack(&cur, p);
            if (k > 0 && packed == 1) || packed == 0 {
                return Err(FieldError::NotPrimitive {
                    order: if packed == 0 { 0 } else { k },
                    expected: order,
                });
            }
            exp[k as usize] = packed;
            exp[(k + order) as usize] = packed;
            log[packed as usize] = k as u16;
            cur = zp_mulmod(&cur, &generator, &spec.modulus, p);
        }

        let neg = (0..q)
            .map(|x| {
                let d: Vec<u32> = unpack(x, p, s).iter().map(|&c| (p - c) % p).collect();
                pack(&d, p)
            })
            .collect();
        let add = (p != 2 && q <= 1024).then(|| {
            let mut t = vec![0u16; (q * q) as usize];
            for x in 0..q {
                for y in 0..q {
                    t[(x * q + y) as usize] = add_digits(x, y, p, s);
                }
            }
            t
        });

        Ok(Field(Arc::new(FieldTable {
            spec,
            generator,
            q,
            exp,
            log,
            neg,
            add,
        })))
    }

    /// GF(8) with primitive `a`, `a^3 = a^2 + 1`.
    pub fn gf8() -> Field {
        Field::new(FieldSpec::gf8()).expect("x^3+x^2+1 is irreducible and x primitive")
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.0.spec.s
    }

    /// Field order `q = p^s`.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Residue coefficients of the primitive element.
    pub fn generator_coeffs(&self) -> &[u32] {
        &self.0.generator
    }

    pub fn generator(&self) -> Elem {
        Elem(self.0.exp[1 % (self.0.q - 1) as usize])
    }

    /// Element with packed representative `repr`, if in range.
    pub fn element(&self, repr: u32) -> Option<Elem> {
        (repr < self.0.q).then_some(Elem(repr as u16))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.q).map(|x| Elem(x as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.0.q).map(|x| Elem(x as u16))
    }

    /// The element with residue polynomial `coeffs` (low to high).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Elem {
        let p = self.0.spec.p;
        let reduced = zp_rem(
            &coeffs.iter().map(|c| c % p).collect::<Vec<_>>(),
            &self.0.spec.modulus,
            p,
        );
        Elem(pack(&reduced, p))
    }

    /// Residue coefficients of `x`, length `s`.
    pub fn coeffs_of(&self, x: Elem) -> Vec<u32> {
        unpack(x.0 as u32, self.0.spec.p, self.0.spec.s)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        let t = &*self.0;
        if t.spec.p == 2 {
            return Elem(x.0 ^ y.0);
        }
        match &t.add {
            Some(tbl) => Elem(tbl[x.0 as usize * t.q as usize + y.0 as usize]),
            None => Elem(add_digits(x.0 as u32, y.0 as u32, t.spec.p, t.spec.s)),
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        Elem(self.0.neg[x.0 as usize])
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.is_zero() || y.is_zero() {
            return Elem::ZERO;
        }
        let t = &*self.0;
        Elem(t.exp[t.log[x.0 as usize] as usize + t.log[y.0 as usize] as usize])
    }

    pub fn inv(&self, x: Elem) -> Result<Elem, FieldError> {
        if x.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let t = &*self.0;
        let order = t.q - 1;
        Ok(Elem(t.exp[((order - t.log[x.0 as usize] as u32) % order) as usize]))
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` for any integer exponent; negative exponents need `x != 0`.
    pub fn pow(&self, x: Elem, e: i64) -> Result<Elem, FieldError> {
        if x.is_zero() {
            return match e {
                0 => Ok(Elem::ONE),
                e if e > 0 => Ok(Elem::ZERO),
                _ => Err(FieldError::DivisionByZero),
            };
        }
        let order = (self.0.q - 1) as i64;
        let k = (self.0.log[x.0 as usize] as i64 * e.rem_euclid(order)).rem_euclid(order);
        Ok(Elem(self.0.exp[k as usize]))
    }

    /// Discrete log with respect to the generator; `None` for zero.
    pub fn log(&self, x: Elem) -> Option<u32> {
        (!x.is_zero()).then(|| self.0.log[x.0 as usize] as u32)
    }

    /// `a^k`, reducing `k` modulo `q - 1`.
    pub fn antilog(&self, k: i64) -> Elem {
        let order = (self.0.q - 1) as i64;
        Elem(self.0.exp[k.rem_euclid(order) as usize])
    }

    /// Log-index encoding used in configs and machine output: `-1` is zero.
    pub fn log_index(&self, x: Elem) -> i64 {
        self.log(x).map_or(-1, i64::from)
    }

    /// Inverse of [`Field::log_index`]; accepts `-1` and `0..=q-2`.
    pub fn from_log_index(&self, k: i64) -> Option<Elem> {
        match k {
            -1 => Some(Elem::ZERO),
            k if k >= 0 && k < (self.0.q - 1) as i64 => Some(self.antilog(k)),
            _ => None,
        }
    }

    /// Power notation: `0`, `1`, `a`, `a^k`.
    pub fn render(&self, x: Elem) -> String {
        match self.log(x) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => GENERATOR_SYMBOL.to_string(),
            Some(k) => format!("{GENERATOR_SYMBOL}^{k}"),
        }
    }

    /// Residue-polynomial notation in `x`, for debugging.
    pub fn render_poly(&self, x: Elem) -> String {
        let coeffs = self.coeffs_of(x);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Parses power notation (`0`, `1`, `a`, `a^k`, with `k` any integer).
    pub fn parse_element(&self, text: &str) -> Result<Elem, FieldError> {
        let t = text.trim();
        let err = || FieldError::Parse(text.to_string());
        match t {
            "0" => return Ok(Elem::ZERO),
            "1" => return Ok(Elem::ONE),
            _ => {}
        }
        let rest = t.strip_prefix(GENERATOR_SYMBOL).ok_or_else(err)?;
        if rest.is_empty() {
            return Ok(self.generator());
        }
        let k: i64 = rest
            .strip_prefix('^')
            .ok_or_else(err)?
            .trim()
            .parse()
            .map_err(|_| err())?;
        Ok(self.antilog(k))
    }

    pub fn elem(&self, x: Elem) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: x,
        }
    }
}

/// A field element bundled with its field, for checked mixed-field use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.add(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.sub(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.mul(self.value, other.value)))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.div(self.value, other.value)?))
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        Ok(self.field.elem(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement, FieldError> {
        Ok(self.field.elem(self.field.pow(self.value, e)?))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.render(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// GF(8) multiplication by shift-and-reduce with x^3 = x^2 + 1,
    /// independent of the log tables.
    fn gf8_mul_oracle(mut x: u16, mut y: u16) -> u16 {
        let mut acc = 0;
        while y != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & 0b1000 != 0 {
                x ^= 0b1101;
            }
        }
        acc
    }

    fn gf8_pow_oracle(k: u32) -> u16 {
        (0..k).fold(1, |acc, _| gf8_mul_oracle(acc, 0b10))
    }

    #[test]
    fn gf8_power_table() {
        let f = Field::gf8();
        let a = f.generator();
        assert_eq!(a.repr(), 0b010);
        // a^3 = a^2 + 1
        assert_eq!(f.pow(a, 3).unwrap().repr(), 0b101);
        // a^4 = a^2 + a + 1, a^5 = a + 1, a^6 = a^2 + a
        assert_eq!(f.pow(a, 4).unwrap().repr(), 0b111);
        assert_eq!(f.pow(a, 5).unwrap().repr(), 0b011);
        assert_eq!(f.pow(a, 6).unwrap().repr(), 0b110);
        assert_eq!(f.pow(a, 7).unwrap(), Elem::ONE);
        for k in 0..14 {
            assert_eq!(f.antilog(k as i64).repr(), gf8_pow_oracle(k));
        }
    }

    #[test]
    fn gf8_matches_oracle_everywhere() {
        let f = Field::gf8();
        for x in f.elements() {
            for y in f.elements() {
                assert_eq!(f.mul(x, y).repr(), gf8_mul_oracle(x.repr(), y.repr()));
            }
        }
    }

    #[test]
    fn worked_arithmetic_examples() {
        let f = Field::gf8();
        let a = |k| f.antilog(k);
        assert_eq!(f.add(a(2), a(1)), a(6));
        assert_eq!(f.pow(a(4), 2).unwrap(), a(1));
        for x in f.nonzero_elements() {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
        }
        assert_eq!(f.inv(Elem::ZERO), Err(FieldError::DivisionByZero));
        assert_eq!(f.pow(Elem::ZERO, -1), Err(FieldError::DivisionByZero));
        assert_eq!(f.pow(a(3), -1).unwrap(), a(4));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Field::new(FieldSpec::new(4, 1, vec![0, 1])).unwrap_err(),
            FieldError::NotPrime(4)
        );
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(
            Field::new(FieldSpec::new(2, 2, vec![1, 0, 1])).unwrap_err(),
            FieldError::ReducibleModulus(2)
        );
        assert!(matches!(
            Field::new(FieldSpec::new(2, 17, vec![0; 18])),
            Err(FieldError::FieldTooLarge { .. })
        ));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5 in GF(16)
        assert_eq!(
            Field::new(FieldSpec::new(2, 4, vec![1, 1, 1, 1, 1])).unwrap_err(),
            FieldError::NotPrimitive {
                order: 5,
                expected: 15
            }
        );
        // x + 1 generates GF(16) under the same modulus
        assert!(Field::new(FieldSpec::new(2, 4, vec![1, 1, 1, 1, 1]).with_generator(vec![1, 1])).is_ok());
        assert!(matches!(
            Field::new(FieldSpec::new(2, 3, vec![1, 0, 1])),
            Err(FieldError::BadModulus(_))
        ));
    }

    #[test]
    fn odd_characteristic() {
        // GF(9) = GF(3)[x]/(x^2 + 2x + 2), x primitive.
        let f = Field::new(FieldSpec::new(3, 2, vec![2, 2, 1])).unwrap();
        assert_eq!(f.order(), 9);
        for x in f.elements() {
            let triple = f.add(f.add(x, x), x);
            assert_eq!(triple, Elem::ZERO);
            assert_eq!(f.pow(x, 9).unwrap(), x);
            assert_eq!(f.add(x, f.neg(x)), Elem::ZERO);
        }
        // prime field GF(5) with generator 2, modulus x - 2
        let f5 = Field::new(FieldSpec::new(5, 1, vec![3, 1])).unwrap();
        assert_eq!(f5.generator().repr(), 2);
        assert_eq!(f5.mul(f5.element(3).unwrap(), f5.element(4).unwrap()).repr(), 2);
    }

    #[test]
    fn mixed_fields_rejected() {
        let f8 = Field::gf8();
        let f4 = Field::new(FieldSpec::new(2, 2, vec![1, 1, 1])).unwrap();
        let x = f8.elem(f8.generator());
        let y = f4.elem(f4.generator());
        assert_eq!(x.try_add(&y), Err(FieldError::FieldMismatch));
        assert_eq!(x.try_mul(&y), Err(FieldError::FieldMismatch));
        // A separately built GF(8) with the same data is the same field.
        let again = Field::gf8();
        assert!(x.try_mul(&again.elem(again.generator())).is_ok());
    }

    #[test]
    fn rendering_and_parsing() {
        let f = Field::gf8();
        assert_eq!(f.render(Elem::ZERO), "0");
        assert_eq!(f.render(Elem::ONE), "1");
        assert_eq!(f.render(f.generator()), "a");
        assert_eq!(f.render(f.antilog(5)), "a^5");
        assert_eq!(f.render_poly(f.antilog(4)), "1+x+x^2");
        for x in f.elements() {
            assert_eq!(f.parse_element(&f.render(x)).unwrap(), x);
            assert_eq!(f.from_log_index(f.log_index(x)).unwrap(), x);
        }
        assert_eq!(f.parse_element("a^8").unwrap(), f.generator());
        assert!(f.parse_element("b^2").is_err());
        assert_eq!(f.from_log_index(7), None);
    }
}

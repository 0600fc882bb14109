//! Arithmetic in GF(p^f) for odd primes `p`, polynomial basis.
//!
//! The modulus is the lexicographically least monic irreducible polynomial of
//! degree `f`, comparing coefficient vectors constant term first. Elements
//! are encoded as integers by base-`p` digit packing with the constant term
//! least significant; this encoding is what group tables and reports store.
//!
//! [`FieldTables`] precomputes the full operation tables for fields of at
//! most 256 elements, which is what the matrix kernel runs on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Default bound on `p^f` accepted by [`make_field`].
pub const DEFAULT_FIELD_CAP: u128 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    f: u32,
    /// Monic modulus, constant term first, length `f + 1`.
    modulus: Vec<u64>,
}

/// Element of a [`FieldSpec`]; coefficients reduced mod `p`, length `f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    field: Arc<FieldSpec>,
    coeffs: Vec<u64>,
}

pub fn make_field(p: u64, f: u32) -> Result<Arc<FieldSpec>> {
    make_field_capped(p, f, DEFAULT_FIELD_CAP)
}

pub fn make_field_capped(p: u64, f: u32, cap: u128) -> Result<Arc<FieldSpec>> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    if f == 0 {
        return Err(Error::InvalidInput("field degree must be positive".into()));
    }
    let order = (p as u128)
        .checked_pow(f)
        .ok_or(Error::FieldTooLarge(u128::MAX))?;
    if order > cap {
        return Err(Error::FieldTooLarge(order));
    }
    let modulus = least_irreducible(p, f);
    Ok(Arc::new(FieldSpec { p, f, modulus }))
}

/// Scans monic degree-`f` polynomials with `(c0, c1, ..)` in lexicographic order.
fn least_irreducible(p: u64, f: u32) -> Vec<u64> {
    let f = f as usize;
    let mut tail = vec![0u64; f];
    loop {
        let mut cand = tail.clone();
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
        // c0 is the most significant digit of the scan
        let mut k = f;
        loop {
            if k == 0 {
                unreachable!("an irreducible polynomial of every degree exists");
            }
            k -= 1;
            tail[k] += 1;
            if tail[k] < p {
                break;
            }
            tail[k] = 0;
        }
    }
}

/// Ben-Or: monic `m` of degree `d` is irreducible iff
/// `gcd(x^(p^k) - x, m) = 1` for `1 <= k <= d/2`.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let d = m.len() - 1;
    if d == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 0..d / 2 {
        xp = poly_powmod(&xp, p as u128, m, p);
        let diff = poly_sub(&xp, &x, p);
        let g = poly_gcd(diff, m.to_vec(), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    trim(out)
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod_p(a, p - 2, p)
}

fn pow_mod_p(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u128;
    let mut b = a as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u128;
        }
        b = b * b % p as u128;
        e >>= 1;
    }
    a = r as u64;
    a
}

/// Remainder of `a` modulo `m` (any nonzero `m`).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(*m.last().unwrap(), p);
    while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = (*r.last().unwrap() as u128 * lead_inv as u128 % p as u128) as u64;
        if c != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let k = dr - dm + i;
                r[k] = ((r[k] as u128 + (p - c) as u128 * mc as u128) % p as u128) as u64;
            }
        }
        r.pop();
        r = trim(r);
        if dm == 0 {
            return vec![0];
        }
    }
    r
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    a = trim(a);
    b = trim(b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_rem(&poly_mul(&result, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.f)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn pad(&self, mut c: Vec<u64>) -> Vec<u64> {
        c.resize(self.f as usize, 0);
        c
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.f)
    }
}

/// Constructors and arithmetic entry points.
pub trait FieldOps {
    fn zero(&self) -> FieldElem;
    fn one(&self) -> FieldElem;
    fn elem(&self, coeffs: &[u64]) -> FieldElem;
    fn from_code(&self, code: u64) -> FieldElem;
    fn elements(&self) -> Vec<FieldElem>;
}

impl FieldOps for Arc<FieldSpec> {
    fn zero(&self) -> FieldElem {
        self.from_code(0)
    }

    fn one(&self) -> FieldElem {
        self.from_code(1)
    }

    fn elem(&self, coeffs: &[u64]) -> FieldElem {
        // reduce an arbitrary polynomial into canonical form
        let c: Vec<u64> = coeffs.iter().map(|&c| c % self.p).collect();
        let c = if c.is_empty() { vec![0] } else { c };
        let r = poly_rem(&c, &self.modulus, self.p);
        FieldElem {
            field: Arc::clone(self),
            coeffs: self.pad(r),
        }
    }

    fn from_code(&self, mut code: u64) -> FieldElem {
        let mut coeffs = Vec::with_capacity(self.f as usize);
        for _ in 0..self.f {
            coeffs.push(code % self.p);
            code /= self.p;
        }
        FieldElem {
            field: Arc::clone(self),
            coeffs,
        }
    }

    fn elements(&self) -> Vec<FieldElem> {
        (0..self.order()).map(|c| self.from_code(c)).collect()
    }
}

impl FieldElem {
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Base-`p` packing, constant term least significant.
    pub fn code(&self) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.field.p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_field(&self, other: &FieldElem) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "operands from different fields"
        );
    }

    fn with(&self, coeffs: Vec<u64>) -> FieldElem {
        FieldElem {
            field: Arc::clone(&self.field),
            coeffs: self.field.pad(coeffs),
        }
    }

    pub fn pow(&self, mut e: u128) -> FieldElem {
        let mut result = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.field.order()));
        }
        Ok(self.pow(self.field.order() as u128 - 2))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self * &other.inv()?)
    }

    /// `a ↦ a^q` on GF(q²); fixed points are the subfield GF(q).
    pub fn q_power(&self, q: u64) -> Result<FieldElem> {
        let order = self.field.order() as u128;
        if (q as u128).checked_mul(q as u128) != Some(order) {
            return Err(Error::InvalidInput(format!(
                "field order {order} is not the square of {q}"
            )));
        }
        Ok(self.pow(q as u128))
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.field.order() - 1;
        let mut ord = n;
        for (r, _) in crate::arith::factorize(n as u128) {
            let r = r as u64;
            while ord.is_multiple_of(r) && self.pow((ord / r) as u128) == self.field.one() {
                ord /= r;
            }
        }
        Some(ord)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.field, self.code())
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        let p = self.field.p;
        self.with(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| (a + b) % p)
                .collect(),
        )
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        let p = self.field.p;
        self.with(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| (a + p - b) % p)
                .collect(),
        )
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        let p = self.field.p;
        let prod = poly_mul(&self.coeffs, &rhs.coeffs, p);
        self.with(poly_rem(&prod, &self.field.modulus, p))
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let p = self.field.p;
        self.with(self.coeffs.iter().map(|&a| (p - a) % p).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

/// Largest field handled by the table-driven matrix kernel.
pub const MAX_TABLE_FIELD: u64 = 256;

/// Full operation tables over element codes `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTables {
    spec: Arc<FieldSpec>,
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    /// `a ↦ a^q` when the field has order `q²`.
    conj: Option<Vec<u8>>,
    sub_q: Option<u64>,
    primitive: u8,
}

impl FieldTables {
    pub fn new(spec: Arc<FieldSpec>) -> Result<Self> {
        Self::build(spec, None)
    }

    /// Tables for GF(q²) including the involution `a ↦ a^q`.
    pub fn with_conjugation(spec: Arc<FieldSpec>, q: u64) -> Result<Self> {
        Self::build(spec, Some(q))
    }

    fn build(spec: Arc<FieldSpec>, q: Option<u64>) -> Result<Self> {
        let order = spec.order();
        if order > MAX_TABLE_FIELD {
            return Err(Error::FieldTooLarge(order as u128));
        }
        let n = order as usize;
        let elems = spec.elements();
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * n + j] = (a + b).code() as u8;
                mul[i * n + j] = (a * b).code() as u8;
            }
        }
        let neg = elems.iter().map(|a| (-a).code() as u8).collect();
        let inv = elems
            .iter()
            .map(|a| a.inv().map(|x| x.code() as u8).unwrap_or(0))
            .collect();
        let conj = match q {
            Some(q) => Some(
                elems
                    .iter()
                    .map(|a| a.q_power(q).map(|x| x.code() as u8))
                    .collect::<Result<Vec<u8>>>()?,
            ),
            None => None,
        };
        let primitive = elems
            .iter()
            .find(|a| a.multiplicative_order() == Some(order - 1))
            .map(|a| a.code() as u8)
            .expect("multiplicative group is cyclic");
        Ok(FieldTables {
            spec,
            order: n,
            add,
            mul,
            neg,
            inv,
            conj,
            sub_q: q,
            primitive,
        })
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Inverse of a nonzero element; `inv(0)` is reported as 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// The `q`-power map; identity when no conjugation was configured.
    #[inline]
    pub fn conj(&self, a: u8) -> u8 {
        match &self.conj {
            Some(t) => t[a as usize],
            None => a,
        }
    }

    pub fn has_conjugation(&self) -> bool {
        self.conj.is_some()
    }

    pub fn subfield_order(&self) -> Option<u64> {
        self.sub_q
    }

    /// Least-code generator of the multiplicative group.
    pub fn primitive(&self) -> u8 {
        self.primitive
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut r = 1u8;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn is_square(&self, a: u8) -> bool {
        a != 0 && self.pow(a, (self.order as u64 - 1) / 2) == 1
    }

    /// Codes of an F_p-basis of the field: `1, x, x², …`.
    pub fn prime_basis(&self) -> Vec<u8> {
        (0..self.spec.f).map(|k| self.spec.p.pow(k) as u8).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_irreducible(m: &[u64], p: u64) -> bool {
        // trial division by every monic polynomial of degree 1..=d/2
        let d = m.len() - 1;
        for k in 1..=d / 2 {
            let count = p.pow(k as u32);
            for code in 0..count {
                let mut div = Vec::new();
                let mut c = code;
                for _ in 0..k {
                    div.push(c % p);
                    c /= p;
                }
                div.push(1);
                if poly_rem(m, &div, p).iter().all(|&x| x == 0) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 3);
    }

    #[test]
    fn gf9_modulus_is_least_irreducible() {
        let f = make_field(3, 2).unwrap();
        let mut first = None;
        'scan: for c0 in 0..3 {
            for c1 in 0..3 {
                let cand = [c0, c1, 1];
                if brute_irreducible(&cand, 3) {
                    first = Some(cand.to_vec());
                    break 'scan;
                }
            }
        }
        assert_eq!(first.as_deref(), Some(&[1u64, 0, 1][..]));
        assert_eq!(f.modulus(), first.unwrap().as_slice());
    }

    #[test]
    fn modulus_scan_agrees_with_trial_division() {
        for (p, f) in [(3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2)] {
            let spec = make_field(p, f).unwrap();
            let m = spec.modulus();
            assert!(brute_irreducible(m, p), "{p}^{f}");
            // nothing lexicographically smaller is irreducible
            let total = p.pow(f);
            for idx in 0..total {
                let mut tail = vec![0u64; f as usize];
                let mut c = idx;
                for k in (0..f as usize).rev() {
                    tail[k] = c % p;
                    c /= p;
                }
                if tail.as_slice() == &m[..f as usize] {
                    break;
                }
                let mut cand = tail.clone();
                cand.push(1);
                assert!(!brute_irreducible(&cand, p));
            }
        }
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert_eq!(make_field(2, 1).unwrap_err(), Error::BadCharacteristic(2));
        assert_eq!(make_field(9, 1).unwrap_err(), Error::BadCharacteristic(9));
        assert!(matches!(make_field(3, 21), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn basic_identities() {
        let f = make_field(3, 2).unwrap();
        assert_eq!(f.one().inv().unwrap(), f.one());
        for a in f.elements() {
            assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                assert_eq!(a.pow(8), f.one());
            }
        }
        assert!(f.zero().inv().is_err());
        assert!(f.one().div(&f.zero()).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, d) in [
            (3, 1),
            (3, 2),
            (3, 3),
            (3, 4),
            (5, 1),
            (5, 2),
            (7, 1),
            (7, 2),
        ] {
            let f = make_field(p, d).unwrap();
            let els = f.elements();
            let one = f.one();
            let zero = f.zero();
            for a in &els {
                assert_eq!(a + &zero, *a);
                assert_eq!(a * &one, *a);
                if !a.is_zero() {
                    assert_eq!(a * &a.inv().unwrap(), one);
                }
                for b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                }
            }
            // triple identities over a stride to keep GF(81) cheap
            let step = if els.len() > 27 { 7 } else { 1 };
            for a in els.iter().step_by(step) {
                for b in els.iter().step_by(step) {
                    for c in els.iter().step_by(step) {
                        assert_eq!(&(a + b) + c, a + &(b + c));
                        assert_eq!(&(a * b) * c, a * &(b * c));
                        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    }
                }
            }
            // cyclic multiplicative group
            let gens = els
                .iter()
                .filter(|a| a.multiplicative_order() == Some(f.order() - 1))
                .count();
            assert!(gens > 0, "GF({p}^{d}) has a generator");
        }
    }

    #[test]
    fn q_power_involution_and_fixed_points() {
        let f9 = make_field(3, 2).unwrap();
        for a in f9.elements() {
            let b = a.q_power(3).unwrap();
            assert_eq!(b.q_power(3).unwrap(), a);
        }
        let c = f9.from_code(2);
        assert_eq!(c.q_power(3).unwrap(), c);
        let f25 = make_field(5, 2).unwrap();
        let fixed = f25
            .elements()
            .into_iter()
            .filter(|a| a.q_power(5).unwrap() == *a)
            .count();
        assert_eq!(fixed, 5);
        assert!(f25.one().q_power(3).is_err());
    }

    #[test]
    fn code_roundtrip_and_tables() {
        let f = make_field(5, 2).unwrap();
        for c in 0..25 {
            assert_eq!(f.from_code(c).code(), c);
        }
        let t = FieldTables::with_conjugation(f.clone(), 5).unwrap();
        for a in 0..25u8 {
            for b in 0..25u8 {
                let (x, y) = (f.from_code(a as u64), f.from_code(b as u64));
                assert_eq!(t.mul(a, b) as u64, (&x * &y).code());
                assert_eq!(t.sub(a, b) as u64, (&x - &y).code());
            }
            assert_eq!(t.conj(t.conj(a)), a);
        }
        assert_eq!(t.prime_basis(), vec![1, 5]);
        assert_eq!(
            f.from_code(t.primitive() as u64).multiplicative_order(),
            Some(24)
        );
    }
}

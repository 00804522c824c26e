//! Exact arithmetic in GF(p^e) and in extensions GF(q^t) over GF(q).
//!
//! Elements of GF(q) are stored as their integer encoding in `[0, q)`: the
//! base-p digits of the value are the coefficients of the residue polynomial,
//! least-significant digit first. Multiplication goes through discrete
//! log/exp tables built once per field; the field handle is cheap to clone
//! and safe to share between threads.

mod ext;
pub mod poly;

pub use ext::{ExtField, ExtFieldElement};
pub use poly::find_irreducible;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// Fields at or below this size get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldParams {
    pub p: u32,
    pub e: u32,
    pub q: u32,
    /// Monic irreducible modulus over Z_p, low degree first, length `e + 1`.
    pub modulus: Vec<u32>,
}

/// An element of GF(q), held as its integer encoding.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^e` with `p` prime, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

struct GfInner {
    params: FieldParams,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// Handle to a finite field GF(p^e).
#[derive(Clone)]
pub struct Gf {
    inner: Arc<GfInner>,
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.inner.params;
        write!(f, "GF({}^{}) mod {:?}", p.p, p.e, p.modulus)
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.params == other.inner.params
    }
}

impl Eq for Gf {}

impl Gf {
    /// The prime field Z_p.
    pub fn prime(p: u32) -> Result<Gf> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if p as u64 > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge(p as u64));
        }
        let params = FieldParams {
            p,
            e: 1,
            q: p,
            modulus: vec![0, 1],
        };
        Ok(Gf::build(params, |a, b| {
            ((a as u64 * b as u64) % p as u64) as u32
        }))
    }

    /// GF(q) for a prime power `q`, with the modulus found by a seeded scan.
    pub fn new(q: u64, seed: u64) -> Result<Gf> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge(q));
        }
        if e == 1 {
            return Gf::prime(p);
        }
        let base = Gf::prime(p)?;
        let modulus: Vec<u32> = find_irreducible(&base, e as usize, seed)
            .into_iter()
            .map(FieldElement::value)
            .collect();
        Gf::with_modulus(p, &modulus)
    }

    /// GF(p^e) realised as Z_p[u]/(modulus). The modulus must be monic and
    /// irreducible; `e` is its degree.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Gf> {
        let base = Gf::prime(p)?;
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!(
                "coefficient out of range for p = {p}"
            )));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        let e = (modulus.len() - 1) as u32;
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_FIELD_SIZE);
        let q = q.ok_or(Error::FieldTooLarge(u64::MAX))? as u32;
        if e == 1 {
            if modulus != [0, 1] {
                return Err(Error::InvalidModulus(
                    "prime fields use the modulus x".into(),
                ));
            }
            return Ok(base);
        }
        let m: Vec<FieldElement> = modulus.iter().map(|&c| FieldElement(c)).collect();
        if !poly::is_irreducible(&base, &m) {
            return Err(Error::InvalidModulus(format!(
                "{modulus:?} is reducible over Z_{p}"
            )));
        }
        let params = FieldParams {
            p,
            e,
            q,
            modulus: modulus.to_vec(),
        };
        let eu = e as usize;
        Ok(Gf::build(params, |a, b| {
            let pa = digits(a, p, eu)
                .into_iter()
                .map(FieldElement)
                .collect::<Vec<_>>();
            let pb = digits(b, p, eu)
                .into_iter()
                .map(FieldElement)
                .collect::<Vec<_>>();
            let r = poly::rem(&base, &poly::mul(&base, &pa, &pb), &m);
            let coeffs: Vec<u32> = r.iter().map(|c| c.0).collect();
            undigits(&coeffs, p)
        }))
    }

    /// Rebuilds a field from its reported parameters.
    pub fn from_params(params: &FieldParams) -> Result<Gf> {
        let gf = Gf::with_modulus(params.p, &params.modulus)?;
        if gf.q() != params.q || gf.e() != params.e {
            return Err(Error::InvalidModulus(
                "q and e disagree with the modulus".into(),
            ));
        }
        Ok(gf)
    }

    fn build(params: FieldParams, mul_raw: impl Fn(u32, u32) -> u32) -> Gf {
        let q = params.q;
        let order = q - 1;
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        // Smallest primitive element by encoding.
        'search: for g in 1..q {
            let mut x = 1u32;
            for k in 0..order {
                if k > 0 && x == 1 {
                    continue 'search;
                }
                exp[k as usize] = x;
                x = mul_raw(x, g);
            }
            if x == 1 {
                break;
            }
        }
        for k in 0..order as usize {
            exp[k + order as usize] = exp[k];
            log[exp[k] as usize] = k as u32;
        }
        let p = params.p;
        let e = params.e as usize;
        let add_digits = move |a: u32, b: u32| -> u32 {
            let (mut a, mut b) = (a, b);
            let (mut r, mut scale) = (0u32, 1u32);
            for _ in 0..e {
                r += ((a % p + b % p) % p) * scale;
                a /= p;
                b /= p;
                scale *= p;
            }
            r
        };
        let neg: Vec<u32> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a, p, e).into_iter().map(|c| (p - c) % p).collect();
                undigits(&d, p)
            })
            .collect();
        let add = (q <= ADD_TABLE_LIMIT && p != 2).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_digits(a, b);
                }
            }
            t
        });
        Gf {
            inner: Arc::new(GfInner {
                params,
                exp,
                log,
                neg,
                add,
            }),
        }
    }

    pub fn params(&self) -> &FieldParams {
        &self.inner.params
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.inner.params.q
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.params.p
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.inner.params.e
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element with integer encoding `value`.
    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value >= self.q() as u64 {
            return Err(Error::InvalidElement { value, q: self.q() });
        }
        Ok(FieldElement(value as u32))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p() as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q()).map(FieldElement)
    }

    /// Coefficient vector over Z_p, constant term first.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.0, self.p(), self.e() as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.e() as usize {
            return Err(Error::DimensionMismatch {
                expected: self.e() as usize,
                got: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p()) {
            return Err(Error::InvalidElement {
                value: c as u64,
                q: self.p(),
            });
        }
        Ok(FieldElement(undigits(coeffs, self.p())))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.params.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if let Some(t) = &inner.add {
            return FieldElement(t[(a.0 * inner.params.q + b.0) as usize]);
        }
        let p = inner.params.p;
        if inner.params.e == 1 {
            return FieldElement((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut r, mut scale) = (0u32, 1u32);
        while x > 0 || y > 0 {
            r += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        FieldElement(r)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.inner.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        FieldElement(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.inner;
        let order = inner.params.q - 1;
        Ok(FieldElement(
            inner.exp[((order - inner.log[a.0 as usize]) % order) as usize],
        ))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        let order = (inner.params.q - 1) as u64;
        let l = (inner.log[a.0 as usize] as u64 * (k % order)) % order;
        FieldElement(inner.exp[l as usize])
    }
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

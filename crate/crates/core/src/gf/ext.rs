use super::poly::{self, Poly};
use super::{FieldElement, Gf};
use crate::error::{Error, Result};

/// GF(q^t) as GF(q)[α]/(ext_modulus), with the power basis `1, α, …, α^(t-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: Gf,
    t: usize,
    modulus: Poly,
    size: u128,
}

/// Coefficients over GF(q) in the power basis. The vector is the field
/// reduction of the element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtFieldElement {
    coeffs: Vec<FieldElement>,
}

impl ExtFieldElement {
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl ExtField {
    pub fn new(base: Gf, t: usize, seed: u64) -> Result<ExtField> {
        if t < 2 {
            return Err(Error::InvalidParams(format!(
                "extension degree must be >= 2, got {t}"
            )));
        }
        let modulus = poly::find_irreducible(&base, t, seed);
        ExtField::with_modulus(base, modulus)
    }

    pub fn with_modulus(base: Gf, modulus: Poly) -> Result<ExtField> {
        let t = poly::degree(&modulus)
            .filter(|&d| d >= 2 && modulus.len() == d + 1)
            .ok_or_else(|| {
                Error::InvalidModulus("extension modulus must have degree >= 2".into())
            })?;
        if modulus[t] != FieldElement::ONE {
            return Err(Error::InvalidModulus(
                "extension modulus must be monic".into(),
            ));
        }
        if !poly::is_irreducible(&base, &modulus) {
            return Err(Error::InvalidModulus(
                "extension modulus is reducible".into(),
            ));
        }
        let size = (base.q() as u128)
            .checked_pow(t as u32)
            .filter(|s| s.checked_mul(base.q() as u128).is_some())
            .ok_or_else(|| Error::InvalidParams("extension field too large".into()))?;
        Ok(ExtField {
            base,
            t,
            modulus,
            size,
        })
    }

    pub fn base(&self) -> &Gf {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.t
    }

    pub fn modulus(&self) -> &[FieldElement] {
        &self.modulus
    }

    /// `q^t`.
    pub fn size(&self) -> u128 {
        self.size
    }

    fn wrap(&self, mut c: Poly) -> ExtFieldElement {
        c.resize(self.t, FieldElement::ZERO);
        ExtFieldElement { coeffs: c }
    }

    pub fn from_coeffs(&self, coeffs: Vec<FieldElement>) -> Result<ExtFieldElement> {
        if coeffs.len() != self.t {
            return Err(Error::DimensionMismatch {
                expected: self.t,
                got: coeffs.len(),
            });
        }
        if let Some(c) = coeffs.iter().find(|c| c.value() >= self.base.q()) {
            return Err(Error::InvalidElement {
                value: c.value() as u64,
                q: self.base.q(),
            });
        }
        Ok(ExtFieldElement { coeffs })
    }

    /// Element whose coefficients are the base-q digits of `index`.
    pub fn element_at(&self, index: u128) -> ExtFieldElement {
        assert!(index < self.size, "index out of range");
        let q = self.base.q() as u128;
        let mut rest = index;
        let coeffs = (0..self.t)
            .map(|_| {
                let d = FieldElement((rest % q) as u32);
                rest /= q;
                d
            })
            .collect();
        ExtFieldElement { coeffs }
    }

    pub fn index_of(&self, x: &ExtFieldElement) -> u128 {
        let q = self.base.q() as u128;
        x.coeffs
            .iter()
            .rev()
            .fold(0, |acc, c| acc * q + c.value() as u128)
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtFieldElement> + '_ {
        (0..self.size).map(move |i| self.element_at(i))
    }

    pub fn zero(&self) -> ExtFieldElement {
        self.wrap(Vec::new())
    }

    pub fn one(&self) -> ExtFieldElement {
        self.embed(FieldElement::ONE)
    }

    /// The base field sits inside as the constant polynomials.
    pub fn embed(&self, a: FieldElement) -> ExtFieldElement {
        self.wrap(vec![a])
    }

    /// `Some(a)` when `x` lies in the base subfield.
    pub fn as_base(&self, x: &ExtFieldElement) -> Option<FieldElement> {
        x.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then_some(x.coeffs[0])
    }

    pub fn add(&self, x: &ExtFieldElement, y: &ExtFieldElement) -> ExtFieldElement {
        let f = &self.base;
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        ExtFieldElement { coeffs }
    }

    pub fn neg(&self, x: &ExtFieldElement) -> ExtFieldElement {
        ExtFieldElement {
            coeffs: x.coeffs.iter().map(|&a| self.base.neg(a)).collect(),
        }
    }

    pub fn sub(&self, x: &ExtFieldElement, y: &ExtFieldElement) -> ExtFieldElement {
        let f = &self.base;
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        ExtFieldElement { coeffs }
    }

    /// Multiplication by a base-field scalar.
    pub fn scale(&self, a: FieldElement, x: &ExtFieldElement) -> ExtFieldElement {
        ExtFieldElement {
            coeffs: x.coeffs.iter().map(|&c| self.base.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, x: &ExtFieldElement, y: &ExtFieldElement) -> ExtFieldElement {
        let f = &self.base;
        let t = self.t;
        let mut prod = vec![FieldElement::ZERO; 2 * t - 1];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(a, b));
            }
        }
        // The modulus is monic: α^t = -(m_0 + … + m_{t-1} α^{t-1}).
        for i in (t..2 * t - 1).rev() {
            let c = prod[i];
            if c.is_zero() {
                continue;
            }
            for j in 0..t {
                prod[i - t + j] = f.sub(prod[i - t + j], f.mul(c, self.modulus[j]));
            }
        }
        prod.truncate(t);
        ExtFieldElement { coeffs: prod }
    }

    pub fn inv(&self, x: &ExtFieldElement) -> Result<ExtFieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = poly::inv_mod(&self.base, &x.coeffs, &self.modulus)
            .expect("nonzero elements are units modulo an irreducible");
        Ok(self.wrap(inv))
    }

    /// `x^k` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, x: &ExtFieldElement, mut k: u128) -> ExtFieldElement {
        let mut result = self.one();
        let mut b = x.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul(&b, &b);
            }
        }
        result
    }

    /// Frobenius automorphism `x ↦ x^q`.
    pub fn frobenius(&self, x: &ExtFieldElement) -> ExtFieldElement {
        self.pow(x, self.base.q() as u128)
    }

    /// `(q^t - 1)/(q - 1)`.
    pub fn norm_exponent(&self) -> u128 {
        (self.size - 1) / (self.base.q() as u128 - 1)
    }

    /// Norm by the power formula `x^((q^t-1)/(q-1))`.
    pub fn norm_power(&self, x: &ExtFieldElement) -> ExtFieldElement {
        self.pow(x, self.norm_exponent())
    }

    /// Norm as the product of the Galois conjugates `x · x^q · … · x^(q^(t-1))`.
    pub fn norm_frobenius(&self, x: &ExtFieldElement) -> ExtFieldElement {
        let mut conj = x.clone();
        let mut acc = x.clone();
        for _ in 1..self.t {
            conj = self.frobenius(&conj);
            acc = self.mul(&acc, &conj);
        }
        acc
    }

    /// The norm map GF(q^t) → GF(q).
    pub fn norm(&self, x: &ExtFieldElement) -> FieldElement {
        let n = self.norm_frobenius(x);
        debug_assert_eq!(n, self.norm_power(x));
        self.as_base(&n).expect("norm lies in the base field")
    }
}

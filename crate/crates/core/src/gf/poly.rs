//! Dense univariate polynomials over a [`Gf`], low degree first.

use super::{FieldElement, Gf};

pub type Poly = Vec<FieldElement>;

pub fn trim(a: &mut Poly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[FieldElement]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn add(f: &Gf, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let n = a.len().max(b.len());
    let mut r: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or_default();
            let y = b.get(i).copied().unwrap_or_default();
            f.add(x, y)
        })
        .collect();
    trim(&mut r);
    r
}

pub fn sub(f: &Gf, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let nb: Poly = b.iter().map(|&c| f.neg(c)).collect();
    add(f, a, &nb)
}

pub fn mul(f: &Gf, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = f.add(r[i + j], f.mul(x, y));
        }
    }
    trim(&mut r);
    r
}

/// Quotient and remainder. Panics if `m` is zero.
pub fn div_rem(f: &Gf, a: &[FieldElement], m: &[FieldElement]) -> (Poly, Poly) {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = f.inv(m[dm]).expect("nonzero leading coefficient");
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    if r.len() <= dm {
        return (Vec::new(), r);
    }
    let mut quo = vec![FieldElement::ZERO; r.len() - dm];
    for i in (dm..r.len()).rev() {
        let c = f.mul(r[i], lead_inv);
        if c.is_zero() {
            continue;
        }
        quo[i - dm] = c;
        for j in 0..=dm {
            r[i - dm + j] = f.sub(r[i - dm + j], f.mul(c, m[j]));
        }
    }
    r.truncate(dm);
    trim(&mut r);
    trim(&mut quo);
    (quo, r)
}

pub fn rem(f: &Gf, a: &[FieldElement], m: &[FieldElement]) -> Poly {
    div_rem(f, a, m).1
}

pub fn make_monic(f: &Gf, a: &mut Poly) {
    trim(a);
    if let Some(&lead) = a.last() {
        let inv = f.inv(lead).expect("nonzero lead");
        for c in a.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub fn gcd(f: &Gf, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = std::mem::replace(&mut y, r);
    }
    make_monic(f, &mut x);
    x
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(f: &Gf, a: &[FieldElement], m: &[FieldElement]) -> Option<Poly> {
    // Extended Euclid tracking only the coefficient of `a`.
    let mut r0 = m.to_vec();
    let mut r1 = rem(f, a, m);
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![FieldElement::ONE];
    trim(&mut r0);
    while !r1.is_empty() {
        let (quo, r) = div_rem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &quo, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = f.inv(r0[0]).ok()?;
    let mut out: Poly = s0.iter().map(|&x| f.mul(x, c)).collect();
    trim(&mut out);
    Some(out)
}

pub fn mul_mod(f: &Gf, a: &[FieldElement], b: &[FieldElement], m: &[FieldElement]) -> Poly {
    rem(f, &mul(f, a, b), m)
}

/// `base^k mod m` by square-and-multiply.
pub fn pow_mod(f: &Gf, base: &[FieldElement], mut k: u128, m: &[FieldElement]) -> Poly {
    let mut result = rem(f, &[FieldElement::ONE], m);
    let mut b = rem(f, base, m);
    while k > 0 {
        if k & 1 == 1 {
            result = mul_mod(f, &result, &b, m);
        }
        b = mul_mod(f, &b, &b, m);
        k >>= 1;
    }
    result
}

pub fn eval(f: &Gf, a: &[FieldElement], x: FieldElement) -> FieldElement {
    a.iter()
        .rev()
        .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Irreducibility over GF(q): a polynomial of degree d is irreducible iff it
/// shares no factor with `x^(q^i) - x` for `1 <= i <= d/2`.
pub fn is_irreducible(f: &Gf, a: &[FieldElement]) -> bool {
    let Some(d) = degree(a) else { return false };
    if d == 0 {
        return false;
    }
    let x: Poly = vec![FieldElement::ZERO, FieldElement::ONE];
    let mut frob = rem(f, &x, a);
    for _ in 1..=d / 2 {
        frob = pow_mod(f, &frob, f.q() as u128, a);
        let g = gcd(f, a, &sub(f, &frob, &x));
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// First monic irreducible polynomial of the given degree over `f`, scanning
/// the `q^degree` candidates cyclically from an index derived from `seed`.
/// Candidate `k` has lower coefficients given by the base-q digits of `k`.
pub fn find_irreducible(f: &Gf, degree: usize, seed: u64) -> Poly {
    assert!(degree >= 1, "degree must be at least 1");
    let q = f.q() as u128;
    let count = q.checked_pow(degree as u32).unwrap_or(u128::MAX);
    let start = seed as u128 % count;
    let candidate = |k: u128| -> Poly {
        let mut c = Vec::with_capacity(degree + 1);
        let mut rest = k;
        for _ in 0..degree {
            c.push(FieldElement((rest % q) as u32));
            rest /= q;
        }
        c.push(FieldElement::ONE);
        c
    };
    let mut k = start;
    loop {
        let c = candidate(k);
        if is_irreducible(f, &c) {
            return c;
        }
        k = (k + 1) % count;
        debug_assert_ne!(k, start, "irreducibles exist in every degree");
    }
}

//! Points and lines of PG(n,q) in canonical form.
//!
//! A point is stored with its first nonzero coordinate equal to 1. A line is
//! stored as the reduced row-echelon form of any 2×(n+1) spanning matrix, so
//! two lines are equal exactly when their stored matrices are. Points are
//! ordered lexicographically by coordinate encoding.
//!
//! Inside PG(n+1,q) the hyperplane `x₀ = 0` plays the role of PG(n,q); see
//! [`crate::linrep`].

pub mod file;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, Gf};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// Projective dimension n (the point has n+1 coordinates).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Index of the leading 1.
    pub fn pivot(&self) -> usize {
        self.coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("canonical points are nonzero")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectiveLine {
    rows: [Vec<FieldElement>; 2],
}

impl ProjectiveLine {
    pub fn dim(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn rows(&self) -> &[Vec<FieldElement>; 2] {
        &self.rows
    }

    fn pivots(&self) -> (usize, usize) {
        let lead = |r: &[FieldElement]| r.iter().position(|c| !c.is_zero()).unwrap();
        (lead(&self.rows[0]), lead(&self.rows[1]))
    }

    /// Membership test. For an RREF basis the only candidate combination
    /// is read off the pivot columns.
    pub fn contains(&self, f: &Gf, p: &ProjectivePoint) -> bool {
        if p.coords.len() != self.rows[0].len() {
            return false;
        }
        let (i, j) = self.pivots();
        let (a, b) = (p.coords[i], p.coords[j]);
        self.rows[0]
            .iter()
            .zip(&self.rows[1])
            .zip(&p.coords)
            .all(|((&r0, &r1), &c)| f.add(f.mul(a, r0), f.mul(b, r1)) == c)
    }

    /// The q+1 points of the line, sorted.
    pub fn points(&self, f: &Gf) -> Vec<ProjectivePoint> {
        let mut pts: Vec<ProjectivePoint> = f
            .elements()
            .map(|l| {
                let v: Vec<FieldElement> = self.rows[0]
                    .iter()
                    .zip(&self.rows[1])
                    .map(|(&a, &b)| f.add(f.mul(l, a), b))
                    .collect();
                normalize_point(f, &v).expect("rows are independent")
            })
            .collect();
        pts.push(ProjectivePoint {
            coords: self.rows[0].clone(),
        });
        pts.sort();
        pts
    }
}

/// Reduced row-echelon form in place; returns the rank. Zero rows are moved
/// to the bottom.
pub fn rref(f: &Gf, rows: &mut [Vec<FieldElement>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = f.inv(rows[rank][col]).expect("pivot is nonzero");
        for c in rows[rank].iter_mut() {
            *c = f.mul(*c, inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col];
                let pivot_row = rows[rank].clone();
                for (c, &pv) in rows[r].iter_mut().zip(&pivot_row) {
                    *c = f.sub(*c, f.mul(factor, pv));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn normalize_point(f: &Gf, raw: &[FieldElement]) -> Result<ProjectivePoint> {
    if raw.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    if let Some(c) = raw.iter().find(|c| c.value() >= f.q()) {
        return Err(Error::InvalidElement {
            value: c.value() as u64,
            q: f.q(),
        });
    }
    let lead = raw.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
    let inv = f.inv(*lead)?;
    Ok(ProjectivePoint {
        coords: raw.iter().map(|&c| f.mul(c, inv)).collect(),
    })
}

pub fn line_through(f: &Gf, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<ProjectiveLine> {
    if a.coords.len() != b.coords.len() {
        return Err(Error::DimensionMismatch {
            expected: a.coords.len(),
            got: b.coords.len(),
        });
    }
    if a == b {
        return Err(Error::EqualPoints);
    }
    let mut rows = [a.coords.clone(), b.coords.clone()];
    let rank = rref(f, &mut rows);
    debug_assert_eq!(rank, 2);
    Ok(ProjectiveLine { rows })
}

/// Whether three pairwise distinct points lie on a common line.
pub fn collinear(
    f: &Gf,
    a: &ProjectivePoint,
    b: &ProjectivePoint,
    c: &ProjectivePoint,
) -> Result<bool> {
    let n = a.coords.len();
    for p in [b, c] {
        if p.coords.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.coords.len(),
            });
        }
    }
    if a == b || a == c || b == c {
        return Err(Error::EqualPoints);
    }
    let mut rows = vec![a.coords.clone(), b.coords.clone(), c.coords.clone()];
    Ok(rref(f, &mut rows) <= 2)
}

/// `(q^(n+1) - 1)/(q - 1)`, or `None` on overflow.
pub fn point_count(n: usize, q: u32) -> Option<u128> {
    let q = q as u128;
    Some((q.checked_pow(n as u32 + 1)? - 1) / (q - 1))
}

/// Gaussian binomial `[n+1 choose 2]_q`.
pub fn line_count(n: usize, q: u32) -> Option<u128> {
    let qq = q as u128;
    let a = qq.checked_pow(n as u32 + 1)? - 1;
    let b = qq.checked_pow(n as u32)? - 1;
    Some(a.checked_mul(b)? / ((qq * qq - 1) * (qq - 1)))
}

/// All points of PG(n,q) in lexicographic order.
pub fn enumerate_points(f: &Gf, n: usize, cap: usize) -> Result<Vec<ProjectivePoint>> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "projective dimension must be >= 1".into(),
        ));
    }
    let total = point_count(n, f.q()).unwrap_or(u128::MAX);
    if total > cap as u128 {
        return Err(Error::CapExceeded {
            what: "point count",
            size: total,
            cap: cap as u128,
        });
    }
    let q = f.q();
    let mut out = Vec::with_capacity(total as usize);
    // Leading 1 at position `lead`, zeros before, anything after. Larger
    // `lead` means more leading zeros, hence lexicographically smaller.
    for lead in (0..=n).rev() {
        let free = n - lead;
        for k in 0..(q as u64).pow(free as u32) {
            let mut coords = vec![FieldElement::ZERO; n + 1];
            coords[lead] = FieldElement::ONE;
            let mut rest = k;
            for pos in (lead + 1..=n).rev() {
                coords[pos] = FieldElement((rest % q as u64) as u32);
                rest /= q as u64;
            }
            out.push(ProjectivePoint { coords });
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

/// All lines of PG(n,q), sorted, generated directly as RREF matrices.
pub fn enumerate_lines(f: &Gf, n: usize, cap: usize) -> Result<Vec<ProjectiveLine>> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "projective dimension must be >= 1".into(),
        ));
    }
    let total = line_count(n, f.q()).unwrap_or(u128::MAX);
    if total > cap as u128 {
        return Err(Error::CapExceeded {
            what: "line count",
            size: total,
            cap: cap as u128,
        });
    }
    let q = f.q() as u64;
    let mut out = Vec::with_capacity(total as usize);
    for i in 0..=n {
        for j in i + 1..=n {
            // Row 0: 1 at i, free after i except j. Row 1: 1 at j, free after j.
            let free0: Vec<usize> = (i + 1..=n).filter(|&c| c != j).collect();
            let free1: Vec<usize> = (j + 1..=n).collect();
            let count = q.pow((free0.len() + free1.len()) as u32);
            for k in 0..count {
                let mut r0 = vec![FieldElement::ZERO; n + 1];
                let mut r1 = vec![FieldElement::ZERO; n + 1];
                r0[i] = FieldElement::ONE;
                r1[j] = FieldElement::ONE;
                let mut rest = k;
                for &c in &free0 {
                    r0[c] = FieldElement((rest % q) as u32);
                    rest /= q;
                }
                for &c in &free1 {
                    r1[c] = FieldElement((rest % q) as u32);
                    rest /= q;
                }
                out.push(ProjectiveLine { rows: [r0, r1] });
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn pt(f: &Gf, v: &[u32]) -> ProjectivePoint {
        let raw: Vec<FieldElement> = v.iter().map(|&x| f.element(x as u64).unwrap()).collect();
        normalize_point(f, &raw).unwrap()
    }

    fn vals(p: &ProjectivePoint) -> Vec<u32> {
        p.coords().iter().map(|c| c.value()).collect()
    }

    #[test]
    fn normalize_examples() {
        let f3 = Gf::new(3, 0).unwrap();
        assert_eq!(vals(&pt(&f3, &[0, 2, 1])), vec![0, 1, 2]);
        let f7 = Gf::new(7, 0).unwrap();
        assert_eq!(vals(&pt(&f7, &[1, 5, 3])), vec![1, 5, 3]);
        assert_eq!(
            normalize_point(&f3, &[FieldElement::ZERO; 3]),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn normalize_is_scalar_invariant_and_idempotent() {
        let f = Gf::new(3, 0).unwrap();
        for k in 1..27u32 {
            let v: Vec<FieldElement> = [k % 3, (k / 3) % 3, k / 9]
                .iter()
                .map(|&x| FieldElement(x))
                .collect();
            let p = normalize_point(&f, &v).unwrap();
            assert_eq!(normalize_point(&f, p.coords()).unwrap(), p);
            for l in f.elements().skip(1) {
                let w: Vec<FieldElement> = v.iter().map(|&c| f.mul(l, c)).collect();
                assert_eq!(normalize_point(&f, &w).unwrap(), p);
            }
        }
    }

    #[test]
    fn line_through_basis_vectors() {
        let f = Gf::new(2, 0).unwrap();
        let l = line_through(&f, &pt(&f, &[1, 0, 0]), &pt(&f, &[0, 1, 0])).unwrap();
        let got: Vec<Vec<u32>> = l.points(&f).iter().map(vals).collect();
        assert_eq!(got, vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]]);
        assert_eq!(
            line_through(&f, &pt(&f, &[1, 0, 0]), &pt(&f, &[1, 0, 0])),
            Err(Error::EqualPoints)
        );
    }

    #[test]
    fn line_through_is_symmetric_pg23() {
        let f = Gf::new(3, 0).unwrap();
        let pts = enumerate_points(&f, 2, 100).unwrap();
        assert_eq!(pts.len(), 13);
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                let l = line_through(&f, a, b).unwrap();
                assert_eq!(l, line_through(&f, b, a).unwrap());
                assert!(l.contains(&f, a) && l.contains(&f, b));
            }
        }
    }

    #[test]
    fn collinear_examples_and_cross_check() {
        let f = Gf::new(3, 0).unwrap();
        let (a, b) = (pt(&f, &[1, 0, 0]), pt(&f, &[0, 1, 0]));
        assert!(collinear(&f, &a, &b, &pt(&f, &[1, 1, 0])).unwrap());
        assert!(!collinear(&f, &a, &b, &pt(&f, &[0, 0, 1])).unwrap());
        let pts = enumerate_points(&f, 2, 100).unwrap();
        for a in &pts {
            for b in &pts {
                if a == b {
                    continue;
                }
                let l = line_through(&f, a, b).unwrap();
                for c in &pts {
                    if c != a && c != b {
                        assert_eq!(collinear(&f, a, b, c).unwrap(), l.contains(&f, c));
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        for (n, q, want) in [(1, 2, 3), (3, 3, 40), (4, 4, 341), (2, 2, 7)] {
            let f = Gf::new(q, 0).unwrap();
            assert_eq!(enumerate_points(&f, n, 10_000).unwrap().len(), want);
            assert_eq!(point_count(n, q as u32), Some(want as u128));
        }
        let f = Gf::new(4, 0).unwrap();
        assert!(matches!(
            enumerate_points(&f, 4, 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn every_pair_on_exactly_one_line() {
        for (n, q) in [(2, 2), (2, 3), (3, 2)] {
            let f = Gf::new(q, 0).unwrap();
            let pts = enumerate_points(&f, n, 1000).unwrap();
            let lines = enumerate_lines(&f, n, 1000).unwrap();
            assert_eq!(lines.len() as u128, line_count(n, q as u32).unwrap());
            let distinct: HashSet<_> = lines.iter().collect();
            assert_eq!(distinct.len(), lines.len());
            for l in &lines {
                let lp = l.points(&f);
                assert_eq!(lp.len(), q as usize + 1);
                // the enumerated matrix is already the canonical one
                assert_eq!(&line_through(&f, &lp[0], &lp[1]).unwrap(), l);
            }
            for (i, a) in pts.iter().enumerate() {
                for b in &pts[i + 1..] {
                    let through = lines
                        .iter()
                        .filter(|l| l.contains(&f, a) && l.contains(&f, b))
                        .count();
                    assert_eq!(through, 1);
                }
            }
        }
        let f = Gf::new(2, 0).unwrap();
        assert_eq!(enumerate_lines(&f, 2, 100).unwrap().len(), 7);
    }
}

//! Extremal-parameter diagnostics for certified graphs.

use std::fmt::{self, Write as _};

use num_rational::Ratio;

use crate::construct::PointSet;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Exact exponents when all three counts are powers of one integer base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactExponents {
    /// Smallest base (not itself a perfect power).
    pub base: u64,
    pub m_power: u32,
    pub n_power: u32,
    pub edge_power: u32,
    /// `log(edges) / log(n_part)` as a reduced fraction.
    pub exponent: Ratio<u64>,
    /// `log(m) / log(n_part)`.
    pub part_exponent: Ratio<u64>,
    pub exponent_matches: bool,
    pub part_exponent_matches: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub m: u64,
    pub n_part: u64,
    pub edges: u64,
    pub t: usize,
    pub exponent: f64,
    pub target_exponent: f64,
    pub part_exponent: f64,
    pub target_part_exponent: f64,
    pub jly_ratio: f64,
    pub exact: Option<ExactExponents>,
}

/// `1 + 1/(2t+1)`.
pub fn target_exponent(t: usize) -> Ratio<u64> {
    Ratio::new(2 * t as u64 + 2, 2 * t as u64 + 1)
}

/// `(t+2)/(2t+1)`.
pub fn target_part_exponent(t: usize) -> Ratio<u64> {
    Ratio::new(t as u64 + 2, 2 * t as u64 + 1)
}

/// Integer k-th root, rounded down.
fn iroot(x: u128, k: u32) -> u128 {
    if k == 1 || x < 2 {
        return x;
    }
    let mut r = (x as f64).powf(1.0 / k as f64).round() as u128;
    while r.checked_pow(k).is_none_or(|v| v > x) {
        r -= 1;
    }
    while (r + 1).checked_pow(k).is_some_and(|v| v <= x) {
        r += 1;
    }
    r
}

/// `(b, k)` with `x = b^k` and `k` as large as possible.
pub fn perfect_power(x: u64) -> (u64, u32) {
    if x < 4 {
        return (x, 1);
    }
    for k in (2..=63u32).rev() {
        let r = iroot(x as u128, k);
        if r >= 2 && r.pow(k) == x as u128 {
            return (r as u64, k);
        }
    }
    (x, 1)
}

fn log_base(x: u64, base: u64) -> Option<u32> {
    if base < 2 || x == 0 {
        return None;
    }
    let (mut x, mut k) = (x, 0);
    while x % base == 0 {
        x /= base;
        k += 1;
    }
    (x == 1).then_some(k)
}

/// JLY-type denominator `144 t³ ((m n)^(2/3) + m + n)`, with the cube root
/// taken exactly when `m n` is a perfect cube.
pub fn jly_bound(m: u64, n_part: u64, t: usize) -> f64 {
    let mn = m as u128 * n_part as u128;
    let c = iroot(mn, 3);
    let two_thirds = if c * c * c == mn {
        (c * c) as f64
    } else {
        (mn as f64).powf(2.0 / 3.0)
    };
    144.0 * (t as f64).powi(3) * (two_thirds + m as f64 + n_part as f64)
}

pub fn bound_report(m: u64, n_part: u64, edges: u64, t: usize) -> Result<BoundReport> {
    if m == 0 || n_part == 0 || edges == 0 {
        return Err(Error::InvalidParams(
            "part sizes and edge count must be positive".into(),
        ));
    }
    if m > n_part {
        return Err(Error::InvalidParams(format!(
            "expected m <= n_part, got {m} > {n_part}"
        )));
    }
    if t < 2 {
        return Err(Error::InvalidParams(format!("t must be >= 2, got {t}")));
    }
    let ln = (n_part as f64).ln();
    let (exponent, part_exponent) = if n_part > 1 {
        ((edges as f64).ln() / ln, (m as f64).ln() / ln)
    } else {
        (f64::NAN, f64::NAN)
    };
    let exact = (n_part > 1)
        .then(|| {
            let (base, n_power) = perfect_power(n_part);
            let m_power = log_base(m, base)?;
            let edge_power = log_base(edges, base)?;
            let exponent = Ratio::new(edge_power as u64, n_power as u64);
            let part_exponent = Ratio::new(m_power as u64, n_power as u64);
            Some(ExactExponents {
                base,
                m_power,
                n_power,
                edge_power,
                exponent,
                part_exponent,
                exponent_matches: exponent == target_exponent(t),
                part_exponent_matches: part_exponent == target_part_exponent(t),
            })
        })
        .flatten();
    let te = target_exponent(t);
    let tp = target_part_exponent(t);
    Ok(BoundReport {
        m,
        n_part,
        edges,
        t,
        exponent,
        target_exponent: *te.numer() as f64 / *te.denom() as f64,
        part_exponent,
        target_part_exponent: *tp.numer() as f64 / *tp.denom() as f64,
        jly_ratio: edges as f64 / jly_bound(m, n_part, t),
        exact,
    })
}

/// Report for a bipartite graph; the smaller class is `m`.
pub fn bound_report_for_graph(g: &BipartiteGraph, t: usize) -> Result<BoundReport> {
    let (a, b) = (g.left_count() as u64, g.right_count() as u64);
    bound_report(a.min(b), a.max(b), g.edge_count() as u64, t)
}

/// Lower-bound witness `(|S| q^(n+1), q^(n+1), |S| q^n)`: edges, point
/// vertices and line vertices of the linear representation of an audited set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalInstance {
    pub edges: u64,
    pub points: u64,
    pub lines: u64,
}

pub fn extremal_instance(set: &PointSet, t: usize) -> Result<ExtremalInstance> {
    let k = set.max_secant().ok_or(Error::Unaudited)?;
    if k > t {
        return Err(Error::InvalidParams(format!(
            "set has a {k}-secant, more than t = {t}"
        )));
    }
    let q = set.field().q() as u64;
    let over = || Error::InvalidParams("counts overflow u64".into());
    let points = q.checked_pow(set.n() as u32 + 1).ok_or_else(over)?;
    let s = set.len() as u64;
    Ok(ExtremalInstance {
        edges: s.checked_mul(points).ok_or_else(over)?,
        points,
        lines: s * (points / q),
    })
}

impl BoundReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "m: {}", self.m).unwrap();
        writeln!(out, "n_part: {}", self.n_part).unwrap();
        writeln!(out, "edges: {}", self.edges).unwrap();
        writeln!(out, "t: {}", self.t).unwrap();
        writeln!(out, "exponent: {:.12}", self.exponent).unwrap();
        writeln!(out, "target_exponent: {:.12}", self.target_exponent).unwrap();
        writeln!(out, "part_exponent: {:.12}", self.part_exponent).unwrap();
        writeln!(
            out,
            "target_part_exponent: {:.12}",
            self.target_part_exponent
        )
        .unwrap();
        writeln!(out, "jly_ratio: {:.12e}", self.jly_ratio).unwrap();
        match &self.exact {
            Some(x) => {
                writeln!(out, "exact_base: {}", x.base).unwrap();
                writeln!(
                    out,
                    "exact_powers: m={} n_part={} edges={}",
                    x.m_power, x.n_power, x.edge_power
                )
                .unwrap();
                writeln!(out, "exact_exponent: {}", x.exponent).unwrap();
                writeln!(out, "exact_part_exponent: {}", x.part_exponent).unwrap();
                writeln!(out, "exponent_match: {}", x.exponent_matches).unwrap();
                writeln!(out, "part_exponent_match: {}", x.part_exponent_matches).unwrap();
            }
            None => out.push_str("exact_base: none\n"),
        }
        out
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

//! Bounded-secant point sets: the norm-set construction, secant audits, the
//! solution count behind the collinearity bound, and a small exhaustive
//! search for comparison.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::gf::{ExtField, ExtFieldElement, FieldElement, Gf};
use crate::oracle;
use crate::par;
use crate::projgeom::file::{read_points, write_points, PointFile};
use crate::projgeom::{
    enumerate_lines, enumerate_points, line_through, ProjectiveLine, ProjectivePoint,
};

/// Parameters of the norm-set construction in PG(t+1, q).
#[derive(Clone, Debug)]
pub struct ConstructionParams {
    field: Gf,
    t: usize,
}

impl ConstructionParams {
    pub fn new(field: Gf, t: usize) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidParams(format!("t must be >= 2, got {t}")));
        }
        if field.q() as usize <= t {
            return Err(Error::InvalidParams(format!(
                "need q > t, got q = {} and t = {t}",
                field.q()
            )));
        }
        Ok(ConstructionParams { field, t })
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Ambient projective dimension `t + 1`.
    pub fn n(&self) -> usize {
        self.t + 1
    }
}

/// A set of distinct points of PG(n,q), optionally with its audited maximum
/// line multiplicity.
#[derive(Clone, Debug)]
pub struct PointSet {
    field: Gf,
    n: usize,
    points: Vec<ProjectivePoint>,
    max_secant: Option<usize>,
}

impl PointSet {
    pub fn new(field: Gf, n: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for p in &points {
            if p.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    got: p.dim() + 1,
                });
            }
            if p.coords().iter().any(|c| c.value() >= field.q()) {
                return Err(Error::InvalidParams(
                    "point coordinate outside the field".into(),
                ));
            }
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint);
            }
        }
        Ok(PointSet {
            field,
            n,
            points,
            max_secant: None,
        })
    }

    pub fn from_file(file: PointFile) -> Result<Self> {
        PointSet::new(file.field, file.n, file.points)
    }

    pub fn parse(text: &str) -> Result<(Self, Vec<String>)> {
        let file = read_points(text)?;
        let comments = file.comments.clone();
        Ok((PointSet::from_file(file)?, comments))
    }

    pub fn to_text(&self, comments: &[String]) -> String {
        write_points(&self.field, self.n, &self.points, comments)
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_secant(&self) -> Option<usize> {
        self.max_secant
    }

    /// Audits the set and records the result.
    pub fn audit(&mut self, strategy: AuditStrategy) -> Result<usize> {
        let k = match strategy {
            AuditStrategy::PairHistogram => audit_max_secant(self),
            AuditStrategy::AllLines(cfg) => oracle::brute_secant_audit(self, &cfg)?,
            AuditStrategy::Auto(cfg) => {
                let fast = audit_max_secant(self);
                if oracle::secant_audit_in_cap(self, &cfg) {
                    let slow = oracle::brute_secant_audit(self, &cfg)?;
                    if slow != fast {
                        return Err(Error::OracleMismatch(format!(
                            "pair-histogram audit gave {fast}, all-lines audit gave {slow}"
                        )));
                    }
                }
                fast
            }
        };
        self.max_secant = Some(k);
        Ok(k)
    }

    pub fn audited(mut self, strategy: AuditStrategy) -> Result<Self> {
        self.audit(strategy)?;
        Ok(self)
    }
}

#[derive(Clone, Copy, Debug)]
pub enum AuditStrategy {
    PairHistogram,
    AllLines(oracle::OracleConfig),
    /// Pair histogram, cross-checked against all-lines enumeration whenever
    /// the ambient space fits inside the oracle cap.
    Auto(oracle::OracleConfig),
}

impl Default for AuditStrategy {
    fn default() -> Self {
        AuditStrategy::Auto(oracle::OracleConfig::default())
    }
}

/// Number of pairs of set points on each line that meets the set twice or more.
pub fn pair_histogram(set: &PointSet) -> HashMap<ProjectiveLine, usize> {
    let pts = set.points();
    let f = set.field();
    let per_point = par::map_range(pts.len(), |i| {
        pts[i + 1..]
            .iter()
            .map(|b| line_through(f, &pts[i], b).expect("points are distinct"))
            .collect::<Vec<_>>()
    });
    let mut hist: HashMap<ProjectiveLine, usize> = HashMap::new();
    for line in per_point.into_iter().flatten() {
        *hist.entry(line).or_default() += 1;
    }
    hist
}

/// The k with `k(k-1)/2 = pairs`.
pub fn points_from_pair_count(pairs: usize) -> usize {
    let mut k = ((1.0 + (1.0 + 8.0 * pairs as f64).sqrt()) / 2.0).round() as usize;
    while k * (k - 1) / 2 > pairs {
        k -= 1;
    }
    while (k + 1) * k / 2 <= pairs {
        k += 1;
    }
    assert_eq!(
        k * (k - 1) / 2,
        pairs,
        "pair count {pairs} is not triangular"
    );
    k
}

/// `multiplicity -> number of lines` over the lines meeting the set at least twice.
pub fn secant_distribution(set: &PointSet) -> std::collections::BTreeMap<usize, usize> {
    let mut out = std::collections::BTreeMap::new();
    for c in pair_histogram(set).into_values() {
        *out.entry(points_from_pair_count(c)).or_default() += 1;
    }
    out
}

/// Maximum over all lines of `|line ∩ S|`, from the canonical line through
/// every pair of set points. Sets with fewer than two points return their size.
pub fn audit_max_secant(set: &PointSet) -> usize {
    if set.len() < 2 {
        return set.len();
    }
    pair_histogram(set)
        .into_values()
        .map(points_from_pair_count)
        .max()
        .unwrap_or(1)
}

/// The norm set together with the extension field that produced it.
#[derive(Clone, Debug)]
pub struct NormSet {
    pub set: PointSet,
    pub ext: ExtField,
    pub t: usize,
}

impl NormSet {
    /// Extension element behind the i-th point.
    pub fn preimage(&self, i: usize) -> ExtFieldElement {
        self.ext.element_at(i as u128)
    }
}

/// `{(1, x|_q, N(x)) : x ∈ GF(q^t)}` in PG(t+1, q), in order of the index of x.
pub fn build_norm_set(params: &ConstructionParams, seed: u64) -> Result<NormSet> {
    let t = params.t();
    let ext = ExtField::new(params.field().clone(), t, seed)?;
    let points: Vec<ProjectivePoint> = ext
        .elements()
        .map(|x| {
            let mut coords = Vec::with_capacity(t + 2);
            coords.push(FieldElement::ONE);
            coords.extend_from_slice(x.coeffs());
            coords.push(ext.norm(&x));
            crate::projgeom::normalize_point(params.field(), &coords).expect("leading 1")
        })
        .collect();
    let set = PointSet::new(params.field().clone(), params.n(), points)?;
    Ok(NormSet { set, ext, t })
}

/// Norms of every element of the extension, indexed by element index.
pub fn norm_table(ext: &ExtField) -> Vec<FieldElement> {
    let size = usize::try_from(ext.size()).expect("extension small enough to tabulate");
    par::map_range(size, |i| ext.norm(&ext.element_at(i as u128)))
}

fn maineq_count_with(
    ext: &ExtField,
    norms: &[FieldElement],
    x: &ExtFieldElement,
    y: &ExtFieldElement,
) -> usize {
    let f = ext.base();
    let nx = norms[ext.index_of(x) as usize];
    let ny = norms[ext.index_of(y) as usize];
    f.elements()
        .filter(|&a| a != FieldElement::ZERO && a != FieldElement::ONE)
        .filter(|&a| {
            let b = f.sub(FieldElement::ONE, a);
            let lhs = f.add(f.mul(a, nx), f.mul(b, ny));
            let z = ext.add(&ext.scale(a, x), &ext.scale(b, y));
            lhs == norms[ext.index_of(&z) as usize]
        })
        .count()
}

/// Number of `a ∈ GF(q) \ {0, 1}` with `a N(x) + (1-a) N(y) = N(a x + (1-a) y)`,
/// by direct evaluation at each candidate.
pub fn count_maineq_solutions(
    ext: &ExtField,
    x: &ExtFieldElement,
    y: &ExtFieldElement,
) -> Result<usize> {
    if x == y {
        return Err(Error::InvalidParams("x and y must differ".into()));
    }
    let f = ext.base();
    let (nx, ny) = (ext.norm(x), ext.norm(y));
    Ok(f.elements()
        .filter(|&a| a != FieldElement::ZERO && a != FieldElement::ONE)
        .filter(|&a| {
            let b = f.sub(FieldElement::ONE, a);
            let lhs = f.add(f.mul(a, nx), f.mul(b, ny));
            lhs == ext.norm(&ext.add(&ext.scale(a, x), &ext.scale(b, y)))
        })
        .count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaineqSummary {
    /// Ordered pairs `(x, y)`, `x ≠ y`, examined.
    pub pairs: u64,
    pub max_count: usize,
    /// `count -> number of ordered pairs`.
    pub histogram: std::collections::BTreeMap<usize, u64>,
}

/// Runs [`count_maineq_solutions`] over every ordered pair of distinct elements.
pub fn maineq_summary(ext: &ExtField) -> MaineqSummary {
    let norms = norm_table(ext);
    let size = norms.len();
    let rows = par::map_range(size, |i| {
        let x = ext.element_at(i as u128);
        let mut hist = std::collections::BTreeMap::<usize, u64>::new();
        for j in (0..size).filter(|&j| j != i) {
            let y = ext.element_at(j as u128);
            *hist
                .entry(maineq_count_with(ext, &norms, &x, &y))
                .or_default() += 1;
        }
        hist
    });
    let mut histogram = std::collections::BTreeMap::new();
    for h in rows {
        for (k, v) in h {
            *histogram.entry(k).or_default() += v;
        }
    }
    let pairs = histogram.values().sum();
    let max_count = histogram.keys().copied().max().unwrap_or(0);
    MaineqSummary {
        pairs,
        max_count,
        histogram,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Greedy,
}

/// Default cap on the ambient point count for exhaustive search.
pub const DEFAULT_SEARCH_CAP: usize = 50;

/// Greedy mode still enumerates the whole ambient space; refuse anything bigger.
const GREEDY_POINT_LIMIT: usize = 1 << 20;

/// Largest (exhaustive) or maximal (greedy) set of PG(n,q) with no `t+1`
/// points on a line. Exhaustive mode is branch-and-bound over the points in
/// lexicographic order and is refused above `cap` ambient points.
pub fn search_max_bounded_secant(
    f: &Gf,
    n: usize,
    t: usize,
    mode: SearchMode,
    cap: usize,
) -> Result<PointSet> {
    if t < 1 {
        return Err(Error::InvalidParams("t must be >= 1".into()));
    }
    let limit = match mode {
        SearchMode::Exhaustive => cap,
        SearchMode::Greedy => GREEDY_POINT_LIMIT,
    };
    let points = enumerate_points(f, n, limit)?;
    let lines = enumerate_lines(f, n, usize::MAX)?;
    let index: HashMap<&ProjectivePoint, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut on_point: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (li, line) in lines.iter().enumerate() {
        for p in line.points(f) {
            on_point[index[&p]].push(li);
        }
    }
    let mut counts = vec![0usize; lines.len()];
    let chosen = match mode {
        SearchMode::Greedy => {
            let mut chosen = Vec::new();
            for (i, ls) in on_point.iter().enumerate() {
                if ls.iter().all(|&l| counts[l] < t) {
                    ls.iter().for_each(|&l| counts[l] += 1);
                    chosen.push(i);
                }
            }
            chosen
        }
        SearchMode::Exhaustive => {
            let mut best = Vec::new();
            let mut current = Vec::new();
            branch_and_bound(0, &on_point, t, &mut counts, &mut current, &mut best);
            best
        }
    };
    let set_points = chosen.into_iter().map(|i| points[i].clone()).collect();
    let mut set = PointSet::new(f.clone(), n, set_points)?;
    set.audit(AuditStrategy::PairHistogram)?;
    Ok(set)
}

fn branch_and_bound(
    idx: usize,
    on_point: &[Vec<usize>],
    t: usize,
    counts: &mut [usize],
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    if idx == on_point.len() || current.len() + (on_point.len() - idx) <= best.len() {
        return;
    }
    let lines = &on_point[idx];
    if lines.iter().all(|&l| counts[l] < t) {
        lines.iter().for_each(|&l| counts[l] += 1);
        current.push(idx);
        branch_and_bound(idx + 1, on_point, t, counts, current, best);
        current.pop();
        lines.iter().for_each(|&l| counts[l] -= 1);
    }
    branch_and_bound(idx + 1, on_point, t, counts, current, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::normalize_point;

    fn norm_set(q: u64, t: usize) -> NormSet {
        let params = ConstructionParams::new(Gf::new(q, 0).unwrap(), t).unwrap();
        build_norm_set(&params, 0).unwrap()
    }

    fn vals(p: &ProjectivePoint) -> Vec<u32> {
        p.coords().iter().map(|c| c.value()).collect()
    }

    #[test]
    fn rejects_small_q() {
        let f = Gf::new(2, 0).unwrap();
        assert!(ConstructionParams::new(f.clone(), 2).is_err());
        let f3 = Gf::new(3, 0).unwrap();
        assert!(ConstructionParams::new(f3.clone(), 3).is_err());
        assert!(ConstructionParams::new(f3, 1).is_err());
    }

    #[test]
    fn norm_set_sizes() {
        assert_eq!(norm_set(3, 2).set.len(), 9);
        assert_eq!(norm_set(4, 2).set.len(), 16);
        assert_eq!(norm_set(3, 2).set.n(), 3);
    }

    #[test]
    fn norm_set_images_of_zero_and_one() {
        let ns = norm_set(5, 3);
        assert_eq!(vals(&ns.set.points()[0]), vec![1, 0, 0, 0, 0]);
        assert_eq!(vals(&ns.set.points()[1]), vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn pair_count_inversion() {
        for k in 2..40 {
            assert_eq!(points_from_pair_count(k * (k - 1) / 2), k);
        }
    }

    #[test]
    fn audit_collinear_triple() {
        let f = Gf::new(3, 0).unwrap();
        let pts: Vec<_> = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]
            .iter()
            .map(|v| normalize_point(&f, &v.map(FieldElement)).unwrap())
            .collect();
        let set = PointSet::new(f, 2, pts).unwrap();
        assert_eq!(audit_max_secant(&set), 3);
    }

    #[test]
    fn audit_norm_set_small() {
        let mut ns = norm_set(3, 2);
        assert_eq!(ns.set.audit(AuditStrategy::default()).unwrap(), 2);
        assert_eq!(ns.set.max_secant(), Some(2));
    }

    #[test]
    fn duplicates_rejected() {
        let f = Gf::new(3, 0).unwrap();
        let p = normalize_point(&f, &[FieldElement(1), FieldElement(0)]).unwrap();
        assert_eq!(
            PointSet::new(f, 1, vec![p.clone(), p]).unwrap_err(),
            Error::DuplicatePoint
        );
    }

    #[test]
    fn maineq_trivial_solutions_and_zero_count() {
        let ns = norm_set(3, 2);
        let ext = &ns.ext;
        let f = ext.base();
        // a = 0 and a = 1 satisfy the identity for every pair
        for x in ext.elements() {
            for y in ext.elements() {
                for a in [FieldElement::ZERO, FieldElement::ONE] {
                    let b = f.sub(FieldElement::ONE, a);
                    let lhs = f.add(f.mul(a, ext.norm(&x)), f.mul(b, ext.norm(&y)));
                    let rhs = ext.norm(&ext.add(&ext.scale(a, &x), &ext.scale(b, &y)));
                    assert_eq!(lhs, rhs);
                }
                if x != y {
                    assert_eq!(count_maineq_solutions(ext, &x, &y).unwrap(), 0);
                }
            }
        }
        let x = ext.one();
        assert!(count_maineq_solutions(ext, &x, &x).is_err());
    }

    #[test]
    fn maineq_summary_matches_direct_count() {
        let ns = norm_set(4, 3);
        let s = maineq_summary(&ns.ext);
        assert_eq!(s.pairs, 64 * 63);
        assert!(s.max_count <= 1);
        let direct = (0..64u128)
            .flat_map(|i| (0..64u128).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| {
                count_maineq_solutions(&ns.ext, &ns.ext.element_at(i), &ns.ext.element_at(j))
                    .unwrap()
            })
            .max()
            .unwrap();
        assert_eq!(direct, s.max_count);
    }

    #[test]
    fn exhaustive_search_small_planes() {
        let f2 = Gf::new(2, 0).unwrap();
        let s = search_max_bounded_secant(&f2, 2, 2, SearchMode::Exhaustive, DEFAULT_SEARCH_CAP)
            .unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.max_secant(), Some(2));
        let f3 = Gf::new(3, 0).unwrap();
        let s = search_max_bounded_secant(&f3, 2, 2, SearchMode::Exhaustive, DEFAULT_SEARCH_CAP)
            .unwrap();
        assert_eq!(s.len(), 4);
        let f4 = Gf::new(4, 0).unwrap();
        assert!(matches!(
            search_max_bounded_secant(&f4, 3, 2, SearchMode::Exhaustive, DEFAULT_SEARCH_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn greedy_search_respects_bound() {
        for (q, n, t) in [(3u64, 2usize, 2usize), (5, 2, 2), (4, 3, 2), (3, 3, 3)] {
            let f = Gf::new(q, 0).unwrap();
            let s = search_max_bounded_secant(&f, n, t, SearchMode::Greedy, 0).unwrap();
            assert!(s.len() >= 3);
            assert!(s.max_secant().unwrap() <= t);
        }
    }
}

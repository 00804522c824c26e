//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::HashSet;
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use theta_forge::bounds::{bound_report, bound_report_for_graph, extremal_instance};
use theta_forge::construct::{
    audit_max_secant, build_norm_set, maineq_summary, search_max_bounded_secant, AuditStrategy,
    ConstructionParams, NormSet, SearchMode, DEFAULT_SEARCH_CAP,
};
use theta_forge::gf::Gf;
use theta_forge::graph::{families, Vertex};
use theta_forge::linrep::{build_linear_representation, IncidenceGraph, LinrepConfig};
use theta_forge::oracle::{self, OracleConfig};
use theta_forge::projgeom::point_count;
use theta_forge::verify::{
    find_c4, girth, max_disjoint_3paths, verify_theta_free, Outcome, ThetaOptions, Witness,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

const ALL: [(usize, u64); 5] = [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5)];

/// Oracle cap raised so the all-lines audit covers every ambient space used here.
const WIDE: OracleConfig = OracleConfig {
    max_vertices: 60,
    max_ambient_points: 1000,
    trial_count: 1000,
    seed: 2024,
};

fn norm_set(t: usize, q: u64) -> NormSet {
    let params = ConstructionParams::new(Gf::new(q, 0).unwrap(), t).unwrap();
    build_norm_set(&params, 0).unwrap()
}

fn graph(t: usize, q: u64) -> IncidenceGraph {
    let set = norm_set(t, q)
        .set
        .audited(AuditStrategy::PairHistogram)
        .unwrap();
    build_linear_representation(&set, &LinrepConfig::default())
        .unwrap()
        .with_t(t)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || {
        format!("{what} took {took:.1?}, limit {limit:?}")
    })
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (t, q) in ALL {
        let ns = norm_set(t, q);
        let set = &ns.set;
        let size = q.pow(t as u32) as usize;
        let distinct: HashSet<_> = set.points().iter().collect();
        ensure(set.len() == size && distinct.len() == size, || {
            format!("(t={t}, q={q}): {} points", set.len())
        })?;
        let fast = audit_max_secant(set);
        ensure(fast <= t, || {
            format!("(t={t}, q={q}): max secant {fast} > t")
        })?;
        ensure(oracle::secant_audit_in_cap(set, &WIDE), || {
            format!("(t={t}, q={q}): outside oracle cap")
        })?;
        let slow = oracle::brute_secant_audit(set, &WIDE).map_err(|e| e.to_string())?;
        ensure(fast == slow, || {
            format!("(t={t}, q={q}): pair histogram {fast} vs all lines {slow}")
        })?;
        notes.push(format!("({t},{q}):|S|={size},k={fast}"));
    }
    within(start, Duration::from_secs(10), "criterion 1")?;
    Ok(format!(
        "{} [oracle agrees on all five] in {:.2?}",
        notes.join(" "),
        start.elapsed()
    ))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (t, q) in ALL {
        let ns = norm_set(t, q);
        let s = maineq_summary(&ns.ext);
        let n = q.pow(t as u32);
        ensure(s.pairs == n * (n - 1), || {
            format!("(t={t}, q={q}): {} pairs examined", s.pairs)
        })?;
        ensure(s.max_count <= t - 2, || {
            format!("(t={t}, q={q}): a pair has {} solutions", s.max_count)
        })?;
        notes.push(format!("({t},{q}):max={}", s.max_count));
    }
    within(start, Duration::from_secs(60), "criterion 2")?;
    Ok(format!("{} in {:.2?}", notes.join(" "), start.elapsed()))
}

fn criterion_3() -> Verdict {
    let mut notes = Vec::new();
    for (t, q, p, l, e) in [
        (2usize, 3u64, 81usize, 243usize, 729usize),
        (3, 4, 1024, 16384, 65536),
    ] {
        let ig = graph(t, q);
        let g = ig.graph();
        let (dp, dl) = (q.pow(t as u32) as usize, q as usize);
        ensure(
            g.left_count() == p && g.right_count() == l && g.edge_count() == e,
            || {
                format!(
                    "(t={t}, q={q}): P={} L={} E={}",
                    g.left_count(),
                    g.right_count(),
                    g.edge_count()
                )
            },
        )?;
        ensure(g.left_adjacency().iter().all(|a| a.len() == dp), || {
            format!("(t={t}, q={q}): point degree != {dp}")
        })?;
        ensure(g.right_adjacency().iter().all(|a| a.len() == dl), || {
            format!("(t={t}, q={q}): line degree != {dl}")
        })?;
        ig.check_invariants().map_err(|e| e.to_string())?;
        notes.push(format!("({t},{q}):P={p}/deg {dp},L={l}/deg {dl},E={e}"));
    }
    Ok(notes.join(" "))
}

fn criterion_4() -> Verdict {
    let mut notes = Vec::new();
    for (t, q) in [(2usize, 3u64), (2, 4), (3, 4)] {
        let ig = graph(t, q);
        let start = Instant::now();
        let c4 = find_c4(ig.graph());
        ensure(c4.passed(), || format!("(t={t}, q={q}): C4 found"))?;
        let theta = theta_forge::with_jobs(Some(1), || {
            verify_theta_free(ig.graph(), t, ThetaOptions::default())
        })
        .map_err(|e| e.to_string())?;
        ensure(theta.passed(), || {
            format!("(t={t}, q={q}): θ(3,{t}) found: {:?}", theta.witness)
        })?;
        let limit = if t == 2 {
            Duration::from_secs(5)
        } else {
            Duration::from_secs(600)
        };
        within(start, limit, &format!("(t={t}, q={q})"))?;
        notes.push(format!(
            "({t},{q}):pass,path bound {},{} pairs matched,{:.2?} 1 thread",
            theta.stats.max_path_bound,
            theta.stats.pairs_examined,
            start.elapsed()
        ));
    }
    Ok(notes.join(" "))
}

fn criterion_5() -> Verdict {
    let mut notes = Vec::new();
    for q in [3u64, 4] {
        let g = girth(graph(2, q).graph());
        ensure(g.is_some_and(|x| x >= 8), || format!("q={q}: girth {g:?}"))?;
        notes.push(format!("(2,{q}):girth={}", g.unwrap()));
    }
    Ok(notes.join(" "))
}

fn criterion_6() -> Verdict {
    let k22 = families::complete_bipartite(2, 2);
    let rep = find_c4(&k22);
    ensure(rep.outcome == Outcome::Fail, || {
        "K_{2,2} passed the C4 check".into()
    })?;
    rep.witness
        .as_ref()
        .ok_or("no witness for K_{2,2}")?
        .replay(&k22)?;

    for t in 2..=4 {
        let g = families::theta3(t);
        let rep = verify_theta_free(&g, t, ThetaOptions::default()).map_err(|e| e.to_string())?;
        ensure(!rep.passed(), || format!("θ(3,{t}) passed at t={t}"))?;
        let w = rep.witness.as_ref().ok_or("no θ witness")?;
        w.replay(&g)?;
        ensure(
            matches!(w, Witness::Theta { paths, .. } if paths.len() == t),
            || "witness has wrong path count".into(),
        )?;
    }

    // Two points on a common line, and a line through the second that misses
    // the first: joining them gives the pair a second common line.
    let ig = graph(2, 3);
    let g = ig.graph();
    let p0 = 0u32;
    let m = g.left_neighbors(p0)[0];
    let p1 = *g.right_neighbors(m).iter().find(|&&p| p != p0).unwrap();
    let l = *g
        .left_neighbors(p1)
        .iter()
        .find(|&&l| !g.has_edge(p0, l))
        .unwrap();
    let corrupted = g.with_edge(p0, l).map_err(|e| e.to_string())?;
    let rep = find_c4(&corrupted);
    ensure(!rep.passed(), || {
        "corrupted graph passed the C4 check".into()
    })?;
    rep.witness
        .as_ref()
        .ok_or("no witness")?
        .replay(&corrupted)?;
    Ok(format!("K22 fails with replayed witness; θ(3,2..4) fail; edge ({p0},{l}) added to (2,3) graph yields C4"))
}

fn criterion_7() -> Verdict {
    let start = Instant::now();
    let corpus = oracle::random_corpus(&WIDE);
    ensure(corpus.len() >= 1000, || {
        format!("corpus has {} graphs", corpus.len())
    })?;
    let mut pairs = 0u64;
    let mut c4_found = 0;
    for (i, g) in corpus.iter().enumerate() {
        ensure(g.vertex_count() <= 60, || {
            format!("graph {i} has {} vertices", g.vertex_count())
        })?;
        for u in 0..g.left_count() as u32 {
            for v in 0..g.right_count() as u32 {
                let (a, b) = (Vertex::Left(u), Vertex::Right(v));
                let fast = max_disjoint_3paths(g, a, b).map_err(|e| e.to_string())?;
                let slow = oracle::brute_theta_count(g, a, b, &WIDE).map_err(|e| e.to_string())?;
                ensure(fast == slow, || {
                    format!("graph {i} pair ({u},{v}): matching {fast}, brute {slow}")
                })?;
                pairs += 1;
            }
        }
        let fast = !find_c4(g).passed();
        let slow = oracle::brute_c4(g, &WIDE).map_err(|e| e.to_string())?;
        ensure(fast == slow, || {
            format!("graph {i}: find_c4 {fast}, brute {slow}")
        })?;
        c4_found += fast as usize;
    }
    within(start, Duration::from_secs(120), "criterion 7")?;
    Ok(format!(
        "{} graphs, {pairs} pairs, {c4_found} with C4, all agree in {:.2?}",
        corpus.len(),
        start.elapsed()
    ))
}

fn criterion_8() -> Verdict {
    let mut notes = Vec::new();
    for (t, q) in ALL {
        let ig = graph(t, q);
        let inst = extremal_instance(ig.set(), t).map_err(|e| e.to_string())?;
        let g = ig.graph();
        ensure(
            inst.edges == g.edge_count() as u64
                && inst.points == g.left_count() as u64
                && inst.lines == g.right_count() as u64,
            || format!("(t={t}, q={q}): instance {inst:?} differs from the built graph"),
        )?;
        let r = bound_report_for_graph(g, t).map_err(|e| e.to_string())?;
        ensure(
            r == bound_report(inst.points, inst.lines, inst.edges, t).unwrap(),
            || "report mismatch".into(),
        )?;
        let x = r
            .exact
            .as_ref()
            .ok_or_else(|| format!("(t={t}, q={q}): counts are not powers of one base"))?;
        ensure(x.exponent_matches && x.part_exponent_matches, || {
            format!("(t={t}, q={q}): {x:?}")
        })?;
        ensure(r.jly_ratio <= 1.0, || {
            format!("(t={t}, q={q}): jly_ratio {}", r.jly_ratio)
        })?;
        notes.push(format!(
            "({t},{q}):E=n^{},m=n^{},jly={:.2e}",
            x.exponent, x.part_exponent, r.jly_ratio
        ));
    }
    Ok(notes.join(" "))
}

fn criterion_9() -> Verdict {
    let start = Instant::now();
    let mut notes = Vec::new();
    for q in [2u64, 3] {
        let f = Gf::new(q, 0).unwrap();
        let set = search_max_bounded_secant(&f, 2, 2, SearchMode::Exhaustive, DEFAULT_SEARCH_CAP)
            .map_err(|e| e.to_string())?;
        ensure(set.len() == 4, || {
            format!("PG(2,{q}): maximum {}", set.len())
        })?;
        let naive = oracle::brute_secant_audit(&set, &OracleConfig::default())
            .map_err(|e| e.to_string())?;
        ensure(naive <= 2, || {
            format!("PG(2,{q}): result has a {naive}-secant")
        })?;
        notes.push(format!(
            "PG(2,{q}) of {} points: 4",
            point_count(2, q as u32).unwrap()
        ));
    }
    within(start, Duration::from_secs(5), "criterion 9")?;
    Ok(format!("{} in {:.2?}", notes.join(", "), start.elapsed()))
}

fn criterion_10() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let run = |args: &[&str]| -> Result<(), String> {
        let o = Command::new(env!("CARGO_BIN_EXE_theta-forge"))
            .current_dir(d)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(o.status.code() == Some(0), || {
            format!("{args:?}: {}", String::from_utf8_lossy(&o.stderr))
        })
    };
    for tag in ["1", "2"] {
        let (s, g, r) = (
            format!("set{tag}.txt"),
            format!("graph{tag}.txt"),
            format!("report{tag}.txt"),
        );
        run(&[
            "construct",
            "--q",
            "3",
            "--t",
            "2",
            "--seed",
            "42",
            "--out",
            &s,
        ])?;
        run(&["build", "--pointset", &s, "--out", &g])?;
        run(&[
            "verify", "--graph", &g, "--check", "theta", "--t", "2", "--report", &r,
        ])?;
    }
    let mut sizes = Vec::new();
    for stem in ["set", "graph", "report"] {
        let a = fs::read(d.join(format!("{stem}1.txt"))).map_err(|e| e.to_string())?;
        let b = fs::read(d.join(format!("{stem}2.txt"))).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{stem} files differ"))?;
        sizes.push(format!("{stem} {}B", a.len()));
    }
    Ok(format!("byte-identical: {}", sizes.join(", ")))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("norm-set size and secant audit", criterion_1),
        ("MainEq solution counts", criterion_2),
        ("incidence graph parameters", criterion_3),
        ("C4- and θ(3,t)-freeness", criterion_4),
        ("girth at least 8 for t = 2", criterion_5),
        ("negative controls", criterion_6),
        ("oracle equivalence on random corpus", criterion_7),
        ("exponent identities", criterion_8),
        ("exhaustive bounded-secant search", criterion_9),
        ("pipeline determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

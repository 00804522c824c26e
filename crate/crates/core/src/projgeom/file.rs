//! Plain-text point-set files.
//!
//! ```text
//! PG <n> <q> <p> <e> <m_0> … <m_e>
//! # optional comment lines
//! x_0,x_1,…,x_n
//! …
//! ```
//!
//! The header carries the ambient dimension, the field and its Z_p modulus
//! (low degree first). Each following line is one point, coordinates as
//! integer field encodings. Points are written in canonical form; the reader
//! canonicalizes whatever it is given.

use std::fmt::Write as _;

use super::{normalize_point, ProjectivePoint};
use crate::error::{Error, Result};
use crate::gf::Gf;

#[derive(Debug, Clone)]
pub struct PointFile {
    pub field: Gf,
    pub n: usize,
    pub points: Vec<ProjectivePoint>,
    /// Comment lines without the leading `#` and surrounding whitespace.
    pub comments: Vec<String>,
}

pub fn write_points(f: &Gf, n: usize, points: &[ProjectivePoint], comments: &[String]) -> String {
    let params = f.params();
    let mut out = format!("PG {} {} {} {}", n, params.q, params.p, params.e);
    for m in &params.modulus {
        write!(out, " {m}").unwrap();
    }
    out.push('\n');
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    for p in points {
        let coords: Vec<String> = p.coords().iter().map(|c| c.value().to_string()).collect();
        out.push_str(&coords.join(","));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn read_points(text: &str) -> Result<PointFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hl, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(1, "empty point file"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.first() != Some(&"PG") || tokens.len() < 5 {
        return Err(parse_err(hl, "expected header `PG n q p e m_0 … m_e`"));
    }
    let nums: Vec<u64> = tokens[1..]
        .iter()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| parse_err(hl, format!("bad integer `{t}`")))
        })
        .collect::<Result<_>>()?;
    let (n, q, p, e) = (nums[0] as usize, nums[1], nums[2], nums[3] as usize);
    let modulus: Vec<u32> = nums[4..].iter().map(|&m| m as u32).collect();
    if modulus.len() != e + 1 {
        return Err(parse_err(
            hl,
            format!("expected {} modulus digits, found {}", e + 1, modulus.len()),
        ));
    }
    if n == 0 {
        return Err(parse_err(hl, "dimension must be >= 1"));
    }
    let p32 = u32::try_from(p).map_err(|_| Error::NotPrime(p))?;
    let field = Gf::with_modulus(p32, &modulus)?;
    if field.q() as u64 != q {
        return Err(parse_err(
            hl,
            format!("q = {q} does not match p^e = {}", field.q()),
        ));
    }
    let mut points = Vec::new();
    let mut comments = Vec::new();
    for (ln, line) in lines {
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.trim().to_string());
            continue;
        }
        let coords = line
            .split(',')
            .map(|t| {
                let v: u64 = t
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(ln, format!("bad coordinate `{t}`")))?;
                field.element(v).map_err(|e| parse_err(ln, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != n + 1 {
            return Err(parse_err(
                ln,
                format!("expected {} coordinates, found {}", n + 1, coords.len()),
            ));
        }
        points.push(normalize_point(&field, &coords).map_err(|e| parse_err(ln, e.to_string()))?);
    }
    Ok(PointFile {
        field,
        n,
        points,
        comments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::enumerate_points;

    #[test]
    fn round_trip_is_bit_exact() {
        let f = Gf::new(9, 0).unwrap();
        let pts = enumerate_points(&f, 2, 1000).unwrap();
        let text = write_points(&f, 2, &pts[..20], &["note=1".into()]);
        let back = read_points(&text).unwrap();
        assert_eq!(back.points, pts[..20]);
        assert_eq!(back.field, f);
        assert_eq!(back.comments, vec!["note=1".to_string()]);
        assert_eq!(
            write_points(&back.field, back.n, &back.points, &back.comments),
            text
        );
    }

    #[test]
    fn header_format() {
        let f = Gf::with_modulus(2, &[1, 1, 1]).unwrap();
        let text = write_points(&f, 3, &[], &[]);
        assert_eq!(text, "PG 3 4 2 2 1 1 1\n");
    }

    #[test]
    fn reader_canonicalizes() {
        let back = read_points("PG 2 3 3 1 0 1\n0,2,1\n").unwrap();
        let v: Vec<u32> = back.points[0].coords().iter().map(|c| c.value()).collect();
        assert_eq!(v, vec![0, 1, 2]);
    }

    #[test]
    fn reader_rejects_garbage() {
        assert!(read_points("").is_err());
        assert!(read_points("PG 2 3 3 1 0 1\n0,0,0\n").is_err());
        assert!(read_points("PG 2 3 3 1 0 1\n0,1\n").is_err());
        assert!(read_points("PG 2 3 3 1 0 1\n0,1,3\n").is_err());
        assert!(read_points("PG 2 4 3 1 0 1\n").is_err());
        assert!(read_points("PG 2 4 2 2 1 0 1\n").is_err());
    }
}

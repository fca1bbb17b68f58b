//! Text formats.
//!
//! Graph files:
//!
//! ```text
//! sg <n>
//! <u> <v> <+|->
//! ```
//!
//! Drawing files:
//!
//! ```text
//! draw <n> <dim>
//! <vertex> <coord> ... <coord>
//! ```
//!
//! A coordinate is an integer (`-3`), a decimal (`0.25`, `1e-3`) or a
//! fraction (`-7/4`). Blank lines and anything after `#` are ignored.
//! Decimals and fractions are read exactly in rational mode.

use std::fmt::{Display, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SignedGraphBuilder};
use crate::{FloatDrawing, Rational, RationalDrawing};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(s: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    s.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn parse_num<T: FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse_graph(s: &str) -> Result<SignedGraph> {
    let mut lines = content_lines(s);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing \"sg <n>\" header"))?;
    if header.len() != 2 || header[0] != "sg" {
        return Err(parse_err(hl, "expected header \"sg <n>\""));
    }
    let n: usize = parse_num(hl, header[1], "vertex count")?;
    let mut b = SignedGraphBuilder::new(n);
    for (ln, toks) in lines {
        if toks.len() != 3 {
            return Err(parse_err(ln, "expected \"<u> <v> <+|->\""));
        }
        let u: usize = parse_num(ln, toks[0], "vertex")?;
        let v: usize = parse_num(ln, toks[1], "vertex")?;
        let sign = match toks[2] {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => return Err(parse_err(ln, format!("expected sign + or -, found {other:?}"))),
        };
        b.add(u, v, sign).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(b.build())
}

pub fn emit_graph(g: &SignedGraph) -> String {
    let mut out = format!("sg {}\n", g.vertex_count());
    for (u, v, s) in g.edges() {
        writeln!(out, "{u} {v} {s}").expect("writing to a String");
    }
    out
}

/// Exact value of an integer, decimal (optionally with exponent) or `p/q`.
pub fn parse_rational(tok: &str) -> Option<Rational> {
    if let Some((p, q)) = tok.split_once('/') {
        let p: BigInt = p.parse().ok()?;
        let q: BigInt = q.parse().ok()?;
        return (!q.is_zero()).then(|| Rational::new(p, q));
    }
    let (mantissa, exp) = match tok.find(['e', 'E']) {
        Some(i) => (&tok[..i], tok[i + 1..].parse::<i32>().ok()?),
        None => (tok, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut r = Rational::from_integer(all);
    if scale >= 0 {
        r *= Rational::from_integer(ten.pow(scale as u32));
    } else {
        r /= Rational::from_integer(ten.pow(scale.unsigned_abs()));
    }
    Some(if neg { -r } else { r })
}

fn parse_float(tok: &str) -> Option<f64> {
    if let Some((p, q)) = tok.split_once('/') {
        let p: f64 = p.parse().ok()?;
        let q: f64 = q.parse().ok()?;
        return Some(p / q);
    }
    tok.parse().ok()
}

fn parse_drawing_with<T: crate::Scalar>(s: &str, coord: impl Fn(&str) -> Option<T>) -> Result<Drawing<T>> {
    let mut lines = content_lines(s);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing \"draw <n> <dim>\" header"))?;
    if header.len() != 3 || header[0] != "draw" {
        return Err(parse_err(hl, "expected header \"draw <n> <dim>\""));
    }
    let n: usize = parse_num(hl, header[1], "vertex count")?;
    let dim: usize = parse_num(hl, header[2], "dimension")?;
    if dim == 0 {
        return Err(parse_err(hl, "dimension must be at least 1"));
    }
    let mut points: Vec<Option<Vec<T>>> = vec![None; n];
    let mut last_line = hl;
    for (ln, toks) in lines {
        last_line = ln;
        let v: usize = parse_num(ln, toks[0], "vertex")?;
        if v >= n {
            return Err(parse_err(ln, format!("vertex {v} out of range for {n} vertices")));
        }
        if toks.len() != dim + 1 {
            return Err(parse_err(
                ln,
                format!("vertex {v} has {} coordinates, expected {dim}", toks.len() - 1),
            ));
        }
        if points[v].is_some() {
            return Err(parse_err(ln, format!("vertex {v} listed twice")));
        }
        let coords = toks[1..]
            .iter()
            .map(|t| coord(t).ok_or_else(|| parse_err(ln, format!("bad coordinate {t:?}"))))
            .collect::<Result<Vec<T>>>()?;
        points[v] = Some(coords);
    }
    let points = points
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| parse_err(last_line, format!("no point for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Drawing::new(dim, points)
}

pub fn parse_drawing_exact(s: &str) -> Result<RationalDrawing> {
    parse_drawing_with(s, parse_rational)
}

pub fn parse_drawing_float(s: &str) -> Result<FloatDrawing> {
    parse_drawing_with(s, parse_float)
}

/// Writes a drawing; rationals come out as `p/q` or plain integers.
pub fn emit_drawing<T: crate::Scalar + Display>(d: &Drawing<T>) -> String {
    let mut out = format!("draw {} {}\n", d.len(), d.dim());
    for (v, p) in d.points().iter().enumerate() {
        let coords: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{v} {}", coords.join(" ")).expect("writing to a String");
    }
    out
}

/// Graphviz rendering: positive edges solid, negative edges dashed.
pub fn to_dot(g: &SignedGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").expect("writing to a String");
    }
    for (u, v, s) in g.edges() {
        let style = match s {
            Sign::Positive => "solid",
            Sign::Negative => "dashed",
        };
        writeln!(out, "  {u} -- {v} [style={style}];").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn graph_round_trip() {
        let text = "# square\nsg 4\n0 1 +\n1 2 +  # side\n\n2 3 +\n3 0 +\n0 2 -\n1 3 -\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.pos_edge_count(), 4);
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        let cases = [
            ("sg 3\n0 1 +\n0 1 -\n", 3),
            ("sg 3\n0 3 +\n", 2),
            ("sg 3\n0 0 +\n", 2),
            ("sg 3\n0 1 *\n", 2),
            ("sg 3\n\n0 1\n", 3),
            ("graph 3\n", 1),
            ("", 1),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn coordinates() {
        assert_eq!(parse_rational("-3"), Some(q(-3, 1)));
        assert_eq!(parse_rational("0.25"), Some(q(1, 4)));
        assert_eq!(parse_rational("-.5"), Some(q(-1, 2)));
        assert_eq!(parse_rational("1e-3"), Some(q(1, 1000)));
        assert_eq!(parse_rational("2.5E2"), Some(q(250, 1)));
        assert_eq!(parse_rational("-7/4"), Some(q(-7, 4)));
        for bad in ["1/0", "abc", ".", "1.2.3", "", "1e"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }

    #[test]
    fn drawing_round_trip() {
        let text = "draw 3 2\n2 1/3 0\n0 0 0.5\n1 -2 7\n";
        let d = parse_drawing_exact(text).unwrap();
        assert_eq!(d.point(2), &[q(1, 3), q(0, 1)]);
        assert_eq!(parse_drawing_exact(&emit_drawing(&d)).unwrap(), d);
        let f = parse_drawing_float(text).unwrap();
        assert_eq!(f.point(0), &[0.0, 0.5]);
    }

    #[test]
    fn drawing_errors() {
        assert!(parse_drawing_exact("draw 2 1\n0 1\n").is_err());
        assert!(parse_drawing_exact("draw 2 1\n0 1\n0 2\n").is_err());
        assert!(parse_drawing_exact("draw 1 2\n0 1\n").is_err());
        assert!(parse_drawing_exact("draw 1 1\n0 x\n").is_err());
        assert!(parse_drawing_exact("draw 1 0\n").is_err());
    }

    #[test]
    fn dot_styles() {
        let g = SignedGraph::new(3, [(0, 1)], [(1, 2)]).unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("0 -- 1 [style=solid];"));
        assert!(dot.contains("1 -- 2 [style=dashed];"));
    }
}

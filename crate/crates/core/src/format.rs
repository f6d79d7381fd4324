//! graph6 and DOT serialization, plus the fixed significant-digit float format
//! used in every report.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Encodes `g` in graph6.
///
/// Orders up to 62 use one size byte; 63 and 64 use the `~` prefix with an
/// 18-bit size. The upper triangle is emitted column by column
/// (`(0,1), (0,2), (1,2), (0,3), …`), six bits per byte, offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| Error::Graph6(msg.to_string());
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("bytes must lie in 63..=126"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(bad("empty input")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(bad("orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(bad("truncated size field"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_ORDER {
        return Err(Error::Capacity { order: n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} data bytes for order {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if (body[k / 6] - 63) & pad_mask != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// DOT rendering; each vertex is labelled with its degree.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..g.order() {
        writeln!(out, "  {v} [label=\"{v} (d={})\"];", g.degree(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Graph6,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Self::Graph6),
            "dot" => Ok(Self::Dot),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Serializes `g`; graph6 output carries a trailing newline.
pub fn export_graph(g: &Graph, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s.into_bytes()
        }
        ExportFormat::Dot => to_dot(g, "G").into_bytes(),
    }
}

/// Formats `x` with `digits` significant digits. Very large or very small
/// magnitudes switch to exponent notation.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        return format!("{:.*e}", digits.saturating_sub(1), x);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding may carry into a new leading digit (9.99… → 10.0…).
    let int_digits = s
        .trim_start_matches('-')
        .split('.')
        .next()
        .map_or(0, str::len) as i32;
    if decimals > 0 && int_digits > exp + 1 {
        format!("{x:.*}", decimals - 1)
    } else {
        s
    }
}

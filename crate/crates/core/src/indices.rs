//! Sombor index, Sombor coindex, and the all-pairs total.

use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::radical::{split_square, RadicalSum};

/// An index value with its double-precision shadow.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexValue {
    pub exact: RadicalSum,
    pub approx: f64,
}

impl IndexValue {
    pub fn new(exact: RadicalSum) -> Self {
        let approx = exact.to_f64();
        Self { exact, approx }
    }
}

/// Same shape as [`RadicalSum`]: `{"exact": "...", "approx": ...}`.
impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exact.serialize(s)
    }
}

impl From<RadicalSum> for IndexValue {
    fn from(exact: RadicalSum) -> Self {
        Self::new(exact)
    }
}

/// Which index to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IndexKind {
    #[serde(rename = "SO")]
    Sombor,
    #[serde(rename = "SO_bar")]
    Coindex,
}

impl IndexKind {
    pub fn evaluate(self, g: &Graph) -> IndexValue {
        match self {
            IndexKind::Sombor => sombor_index(g),
            IndexKind::Coindex => sombor_coindex(g),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            IndexKind::Sombor => "SO",
            IndexKind::Coindex => "SO_bar",
        }
    }
}

/// `(m, s)` with `√(a² + b²) = m·√s`, for degrees up to `MAX_ORDER - 1`.
fn weight_table() -> &'static Vec<(u128, u64)> {
    static TABLE: OnceLock<Vec<(u128, u64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(MAX_ORDER * MAX_ORDER);
        for a in 0..MAX_ORDER as u64 {
            for b in 0..MAX_ORDER as u64 {
                let k = a * a + b * b;
                t.push(if k == 0 {
                    (0, 1)
                } else {
                    let (m, s) = split_square(k);
                    (m as u128, s)
                });
            }
        }
        t
    })
}

#[inline]
fn weight_parts(du: usize, dv: usize) -> (u128, u64) {
    weight_table()[du * MAX_ORDER + dv]
}

/// `√(du² + dv²)` in normal form.
pub fn edge_weight(du: usize, dv: usize) -> Result<RadicalSum> {
    if du == 0 || dv == 0 {
        return Err(Error::Domain(format!(
            "edge weight needs positive degrees, got ({du}, {dv})"
        )));
    }
    let (du, dv) = (du as u64, dv as u64);
    RadicalSum::sqrt_int(du * du + dv * dv)
}

fn pair_sum(g: &Graph, pairs: impl Iterator<Item = (usize, usize)>) -> IndexValue {
    let deg = g.degrees();
    let mut total = RadicalSum::zero();
    for (u, v) in pairs {
        // Degree-0 entries are in the table too: √(0² + d²) = d.
        let (m, s) = weight_parts(deg[u], deg[v]);
        total
            .add_term(m, s)
            .expect("index coefficients stay far below u128::MAX for order <= 64");
    }
    IndexValue::new(total)
}

/// `SO(G)`: sum of `√(d(u)² + d(v)²)` over the edges of `g`.
pub fn sombor_index(g: &Graph) -> IndexValue {
    pair_sum(g, g.edges())
}

/// Sombor coindex: the same weight summed over non-adjacent pairs, with
/// degrees taken in `g` (not in its complement).
pub fn sombor_coindex(g: &Graph) -> IndexValue {
    pair_sum(g, g.non_edges().into_iter())
}

/// Weight summed over all unordered vertex pairs.
pub fn total_pair_sum(g: &Graph) -> IndexValue {
    let n = g.order();
    pair_sum(
        g,
        (0..n).flat_map(move |u| ((u + 1)..n).map(move |v| (u, v))),
    )
}

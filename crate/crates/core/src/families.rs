//! Named graph families and the recipe-driven two-tree builder.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn check_range(family: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_ORDER {
        return Err(Error::FamilyRange { family, n, min });
    }
    Ok(())
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    check_range("K_n", n, 2)?;
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 || a + b > MAX_ORDER {
        return Err(Error::FamilyRange {
            family: "K_{a,b}",
            n: a + b,
            min: 2,
        });
    }
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `X_n`: `K_{2,n-2}` plus the edge between its two degree-`(n-2)` vertices.
///
/// Vertices 0 and 1 are the hubs. `X_2 = K_2` and `X_3 = K_3` fall out of the
/// same construction.
pub fn x_graph(n: usize) -> Result<Graph> {
    check_range("X_n", n, 2)?;
    let mut g = Graph::new(n)?;
    g.add_edge(0, 1)?;
    for v in 2..n {
        g.add_edge(0, v)?;
        g.add_edge(1, v)?;
    }
    Ok(g)
}

/// `L_n`: `X_{n-1}` plus a vertex joined to a degree-2 vertex and a
/// degree-`(n-2)` vertex of it.
///
/// The attachment uses hub 0 and the lowest degree-2 vertex (vertex 2); the new
/// vertex is `n-1`.
pub fn l_graph(n: usize) -> Result<Graph> {
    check_range("L_n", n, 5)?;
    x_graph(n - 1)?.attach_vertex(0, 2)
}

/// Path-like two-tree: edges `v_i v_{i+1}` and `v_i v_{i+2}`.
pub fn linear_two_tree(n: usize) -> Result<Graph> {
    check_range("linear two-tree", n, 3)?;
    let mut g = Graph::new(n)?;
    for i in 0..n - 1 {
        g.add_edge(i, i + 1)?;
        if i + 2 < n {
            g.add_edge(i, i + 2)?;
        }
    }
    Ok(g)
}

/// Construction trace of a two-tree.
///
/// Starting from `K_2` (edge 0 = `{0,1}`), step `t` (1-based) adds vertex
/// `t + 1` adjacent to both ends of edge `steps[t-1]`. Edges are indexed in
/// insertion order; a step adding vertex `w` on edge `{a,b}` appends `{a,w}`
/// and then `{b,w}`, so step `t` may choose among `2t - 1` edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TwoTreeRecipe {
    steps: Vec<usize>,
}

impl TwoTreeRecipe {
    pub fn new(steps: Vec<usize>) -> Result<Self> {
        let r = Self { steps };
        r.validate()?;
        Ok(r)
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// Order of the graph this recipe builds.
    pub fn order(&self) -> usize {
        self.steps.len() + 2
    }

    fn validate(&self) -> Result<()> {
        if self.order() > MAX_ORDER {
            return Err(Error::Capacity {
                order: self.order(),
            });
        }
        for (i, &idx) in self.steps.iter().enumerate() {
            let available = 2 * (i + 1) - 1;
            if idx >= available {
                return Err(Error::Recipe {
                    step: i + 1,
                    index: idx,
                    available,
                });
            }
        }
        Ok(())
    }

    /// Uniformly random recipe for a two-tree of order `n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_range("random two-tree", n, 2)?;
        let steps = (1..=n - 2)
            .map(|t| rng.random_range(0..2 * t - 1))
            .collect();
        Ok(Self { steps })
    }

    /// The recipe truncated to its first `k` steps.
    pub fn prefix(&self, k: usize) -> Self {
        Self {
            steps: self.steps[..k.min(self.steps.len())].to_vec(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        from_recipe(self)
    }
}

/// Builds the two-tree described by `r`.
pub fn from_recipe(r: &TwoTreeRecipe) -> Result<Graph> {
    r.validate()?;
    let mut g = Graph::new(r.order())?;
    let mut edges = Vec::with_capacity(2 * r.order() - 3);
    g.add_edge(0, 1)?;
    edges.push((0, 1));
    for (i, &idx) in r.steps.iter().enumerate() {
        let w = i + 2;
        let (a, b) = edges[idx];
        g.add_edge(a, w)?;
        g.add_edge(b, w)?;
        edges.push((a, w));
        edges.push((b, w));
    }
    Ok(g)
}

impl fmt::Display for TwoTreeRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of edge indices; the empty string is `K_2`.
impl FromStr for TwoTreeRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default());
        }
        let steps = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Domain(format!("bad recipe entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

impl Serialize for TwoTreeRecipe {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.steps)
    }
}

/// Named families selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    X,
    L,
    Linear,
    Complete,
}

impl Family {
    pub fn build(self, n: usize) -> Result<Graph> {
        match self {
            Family::X => x_graph(n),
            Family::L => l_graph(n),
            Family::Linear => linear_two_tree(n),
            Family::Complete => complete(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::X => "X_n",
            Family::L => "L_n",
            Family::Linear => "linear two-tree",
            Family::Complete => "K_n",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Ok(Family::X),
            "l" => Ok(Family::L),
            "linear" => Ok(Family::Linear),
            "k" | "complete" => Ok(Family::Complete),
            other => Err(Error::Domain(format!("unknown family {other:?}"))),
        }
    }
}

//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree starts from the coarsest equitable ordered partition,
//! branches by individualizing each vertex of the first non-singleton cell,
//! and refines again after every individualization. Each discrete leaf is a
//! labeling; the canonical form is the labeling whose upper-triangle
//! adjacency string (graph6 column order) is lexicographically smallest.
//!
//! Two pruning rules keep the tree small:
//! - a branch is cut as soon as its fixed prefix exceeds the best leaf;
//! - within one cell, a vertex is skipped when it is a twin of a vertex
//!   already tried there (swapping twins is an automorphism fixing every
//!   previously individualized vertex, so both subtrees carry the same leaves).

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// Isomorphism-class identifier: the order byte followed by the packed
/// upper-triangle bits (MSB first) of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Canonical key together with the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> (CanonicalKey, Graph) {
    let n = g.order();
    let mut search = Search {
        g,
        best_bits: Vec::new(),
        best_lab: Vec::new(),
    };
    let root = refine(g, vec![(0..n).collect()]);
    search.descend(root);

    let mut perm = vec![0usize; n];
    for (pos, &v) in search.best_lab.iter().enumerate() {
        perm[v] = pos;
    }
    let canon = g.relabel(&perm);
    (pack_key(n, &search.best_bits), canon)
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_form(g).0
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    canonical_key(g) == canonical_key(h)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    /// Adjacency bits (0/1) of the best leaf, in graph6 column order.
    best_bits: Vec<u8>,
    best_lab: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition) {
        let n = self.g.order();
        if cells.len() == n {
            let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bits = leaf_bits(self.g, &lab);
            if self.best_bits.is_empty() || bits < self.best_bits {
                self.best_bits = bits;
                self.best_lab = lab;
            }
            return;
        }
        if self.prefix_exceeds_best(&cells) {
            return;
        }

        let target = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(refine(self.g, next));
        }
    }

    /// True when the labels fixed so far already produce a string larger
    /// than the best leaf on the shared prefix.
    fn prefix_exceeds_best(&self, cells: &Partition) -> bool {
        if self.best_bits.is_empty() {
            return false;
        }
        let fixed: Vec<usize> = cells
            .iter()
            .take_while(|c| c.len() == 1)
            .map(|c| c[0])
            .collect();
        let mut idx = 0;
        for j in 1..fixed.len() {
            for i in 0..j {
                let b = self.g.has_edge(fixed[i], fixed[j]) as u8;
                match b.cmp(&self.best_bits[idx]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => return true,
                    std::cmp::Ordering::Equal => {}
                }
                idx += 1;
            }
        }
        false
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mu = !(1u64 << v);
    let mv = !(1u64 << u);
    g.row(u) & mu == g.row(v) & mv
}

fn leaf_bits(g: &Graph, lab: &[usize]) -> Vec<u8> {
    let n = lab.len();
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(lab[i], lab[j]) as u8);
        }
    }
    bits
}

fn pack_key(order: usize, bits: &[u8]) -> CanonicalKey {
    let mut bytes = Vec::with_capacity(1 + bits.len().div_ceil(8));
    bytes.push(order as u8);
    for chunk in bits.chunks(8) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            byte |= b << (7 - k);
        }
        bytes.push(byte);
    }
    CanonicalKey(bytes)
}

/// Refines an ordered partition to the coarsest equitable one below it.
///
/// Each pass splits every cell by the vector of neighbor counts into the
/// cells of the current partition, keeping sub-cells in ascending signature
/// order so the result depends only on the structure and the input order.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|&m| (g.row(v) & m).count_ones() as u8)
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
        }
        // Refinement only ever splits cells.
        let changed = next.len() != cells.len();
        cells = next;
        if !changed {
            return cells;
        }
    }
}

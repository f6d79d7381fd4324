//! Exhaustive enumeration of unlabeled two-trees, level by level.
//!
//! Level `n` is built from the representatives of level `n − 1` by attaching
//! a vertex to every edge, canonizing each child, and deduplicating on the
//! canonical key. Children are stored in canonical labeling and levels are
//! sorted by key, so the output does not depend on the worker count.

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::canon::{canonical_form, canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Default largest order [`Enumerator`] will build. Level sizes grow roughly
/// fourfold per order (9368 two-trees at order 12).
pub const DEFAULT_CAP: usize = 12;

/// Largest order accepted by [`oracle_filter_count`].
pub const ORACLE_CAP: usize = 7;

/// All two-trees of one order, one canonical representative each.
#[derive(Clone, Debug)]
pub struct EnumLevel {
    pub order: usize,
    /// Sorted by key; keys are pairwise distinct.
    pub graphs: Vec<(Graph, CanonicalKey)>,
}

impl EnumLevel {
    pub fn count(&self) -> usize {
        self.graphs.len()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.graphs.iter().map(|(_, k)| k)
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.graphs.binary_search_by(|(_, k)| k.cmp(key)).is_ok()
    }

    /// SHA-256 over the concatenated sorted keys, hex encoded.
    pub fn checksum(&self) -> String {
        let mut h = Sha256::new();
        for k in self.keys() {
            h.update(k.as_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn manifest(&self) -> Manifest {
        Manifest {
            n: self.order,
            count: self.count(),
            checksum: self.checksum(),
        }
    }
}

/// Summary written alongside an enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub n: usize,
    pub count: usize,
    pub checksum: String,
}

/// Level-by-level two-tree generator with an order cap and a worker count.
#[derive(Clone, Debug)]
pub struct Enumerator {
    cap: usize,
    workers: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            workers: 0,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Largest order this enumerator will build (at most 64).
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap.min(MAX_ORDER);
        self
    }

    /// Worker threads; 0 uses the global rayon pool.
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::EnumerationCap { n, cap: self.cap });
        }
        if n < 2 {
            return Err(Error::Capacity { order: n });
        }
        Ok(())
    }

    /// All levels `2..=n`, index `k` holding order `k + 2`.
    pub fn levels_up_to(&self, n: usize) -> Result<Vec<EnumLevel>> {
        self.check(n)?;
        let run = || {
            let mut levels = vec![base_level()];
            while levels.last().map(|l| l.order) != Some(n) {
                let next = extend_level(levels.last().expect("non-empty"));
                levels.push(next);
            }
            levels
        };
        if self.workers == 0 {
            Ok(run())
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.workers)
                .build()
                .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
            Ok(pool.install(run))
        }
    }

    pub fn enumerate(&self, n: usize) -> Result<EnumLevel> {
        Ok(self
            .levels_up_to(n)?
            .pop()
            .expect("levels_up_to returns at least the base level"))
    }

    pub fn count(&self, n: usize) -> Result<usize> {
        Ok(self.enumerate(n)?.count())
    }
}

/// All non-isomorphic two-trees of order `n`, under the default cap.
pub fn enumerate_two_trees(n: usize) -> Result<EnumLevel> {
    Enumerator::new().enumerate(n)
}

pub fn count_two_trees(n: usize) -> Result<usize> {
    Enumerator::new().count(n)
}

fn base_level() -> EnumLevel {
    let k2 = Graph::from_edges(2, &[(0, 1)]).expect("K_2");
    let key = canonical_key(&k2);
    EnumLevel {
        order: 2,
        graphs: vec![(k2, key)],
    }
}

fn extend_level(parent: &EnumLevel) -> EnumLevel {
    let mut children: Vec<(CanonicalKey, Graph)> = parent
        .graphs
        .par_iter()
        .flat_map_iter(|(g, _)| {
            let mut local: Vec<(CanonicalKey, Graph)> = g
                .edges()
                .map(|(u, v)| {
                    let child = g.attach_vertex(u, v).expect("order stays within cap");
                    canonical_form(&child)
                })
                .collect();
            local.sort_by(|a, b| a.0.cmp(&b.0));
            local.dedup_by(|a, b| a.0 == b.0);
            local
        })
        .collect();
    children.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    children.dedup_by(|a, b| a.0 == b.0);
    EnumLevel {
        order: parent.order + 1,
        graphs: children.into_iter().map(|(k, g)| (g, k)).collect(),
    }
}

/// Counts two-trees of order `n` by brute force: every labeled graph with
/// `2n − 3` edges is tested with the recognizer and deduplicated by key.
pub fn oracle_filter_count(n: usize) -> Result<usize> {
    if n > ORACLE_CAP {
        return Err(Error::EnumerationCap { n, cap: ORACLE_CAP });
    }
    if n < 2 {
        return Err(Error::Capacity { order: n });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = 2 * n - 3;
    let total = pairs.len();
    // Gosper's hack over all `total`-bit masks with `m` bits set.
    let mut masks = Vec::new();
    let mut mask: u32 = (1u32 << m) - 1;
    let limit: u32 = 1u32 << total;
    while mask < limit {
        masks.push(mask);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    let mut keys: Vec<CanonicalKey> = masks
        .par_iter()
        .filter_map(|&mask| {
            let mut rows = vec![0u64; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
            }
            let g = Graph::from_rows(rows).expect("valid rows");
            g.is_two_tree().then(|| canonical_key(&g))
        })
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    Ok(keys.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{l_graph, x_graph};

    #[test]
    fn small_counts() {
        assert_eq!(count_two_trees(2).unwrap(), 1);
        assert_eq!(count_two_trees(3).unwrap(), 1);
        assert_eq!(count_two_trees(4).unwrap(), 1);
        assert_eq!(count_two_trees(5).unwrap(), 2);
    }

    #[test]
    fn order_five_is_x_and_l() {
        let level = enumerate_two_trees(5).unwrap();
        assert!(level.contains(&canonical_key(&x_graph(5).unwrap())));
        assert!(level.contains(&canonical_key(&l_graph(5).unwrap())));
    }

    #[test]
    fn oracle_small() {
        assert_eq!(oracle_filter_count(2).unwrap(), 1);
        assert_eq!(oracle_filter_count(4).unwrap(), 1);
        assert_eq!(oracle_filter_count(5).unwrap(), 2);
        assert_eq!(oracle_filter_count(6).unwrap(), count_two_trees(6).unwrap());
        assert!(oracle_filter_count(8).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            Enumerator::new().with_cap(6).enumerate(7).unwrap_err(),
            Error::EnumerationCap { n: 7, cap: 6 }
        );
        assert!(enumerate_two_trees(1).is_err());
    }

    #[test]
    fn levels_sorted_unique() {
        for level in Enumerator::new().levels_up_to(8).unwrap() {
            let keys: Vec<_> = level.keys().collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
            for (g, k) in &level.graphs {
                assert_eq!(g.order(), level.order);
                assert_eq!(&canonical_key(g), k);
            }
        }
    }
}

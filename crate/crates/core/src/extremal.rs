//! Exact ranking of whole enumeration levels, extremal claim checks, and
//! evidence tables for the conjectured minimum index and maximum coindex.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::{canonical_key, CanonicalKey};
use crate::enumerate::{EnumLevel, Enumerator};
use crate::error::{Error, Result};
use crate::families::{linear_two_tree, Family};
use crate::format::to_graph6;
use crate::formulas::{
    closed_form, conjectured_max_coindex, conjectured_min_so, ConjectureReading,
};
use crate::indices::IndexKind;
use crate::radical::RadicalSum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

/// One graph of a ranked level.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankedGraph {
    pub graph6: String,
    pub key: CanonicalKey,
    pub degree_sequence: Vec<usize>,
}

/// All graphs sharing one exact index value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tier {
    pub value: RadicalSum,
    pub members: Vec<RankedGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

impl ClaimStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, ClaimStatus::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, ClaimStatus::Fail(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail(_) => "fail",
            ClaimStatus::Skipped(_) => "skipped",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            ClaimStatus::Pass => None,
            ClaimStatus::Fail(d) | ClaimStatus::Skipped(d) => Some(d),
        }
    }
}

impl Serialize for ClaimStatus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// A claim of the form "the `rank`-th tier in `direction` of `kind` is the
/// single graph `family(n)` with its closed-form value".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub kind: IndexKind,
    pub direction: Direction,
    pub rank: usize,
    pub family: Family,
    pub min_n: usize,
}

/// The four extremal results: maximum and second-maximum `SO`, minimum and
/// second-minimum coindex, over two-trees of order `n`.
pub fn theorem_claims() -> Vec<ClaimSpec> {
    vec![
        ClaimSpec {
            id: "a",
            anchor: "max SO: SO(G) <= SO(X_n) for n >= 2, equality iff G = X_n",
            kind: IndexKind::Sombor,
            direction: Direction::Max,
            rank: 1,
            family: Family::X,
            min_n: 2,
        },
        ClaimSpec {
            id: "b",
            anchor: "second max SO: G != X_n implies SO(G) <= SO(L_n) for n >= 5, equality iff G = L_n",
            kind: IndexKind::Sombor,
            direction: Direction::Max,
            rank: 2,
            family: Family::L,
            min_n: 5,
        },
        ClaimSpec {
            id: "c",
            anchor: "min coindex: SO_bar(G) >= sqrt2 (n-2)(n-3) for n >= 2, equality iff G = X_n",
            kind: IndexKind::Coindex,
            direction: Direction::Min,
            rank: 1,
            family: Family::X,
            min_n: 2,
        },
        ClaimSpec {
            id: "d",
            anchor: "second min coindex: G != X_n implies SO_bar(G) >= SO_bar(L_n) for n >= 5, equality iff G = L_n",
            kind: IndexKind::Coindex,
            direction: Direction::Min,
            rank: 2,
            family: Family::L,
            min_n: 5,
        },
    ]
}

/// [`theorem_claims`] with the X and L witnesses exchanged. Every claim at
/// `n >= 5` must fail; used as a negative control.
pub fn swapped_theorem_claims() -> Vec<ClaimSpec> {
    theorem_claims()
        .into_iter()
        .map(|mut c| {
            c.family = match c.family {
                Family::X => Family::L,
                _ => Family::X,
            };
            c.min_n = 5;
            c
        })
        .collect()
}

/// Outcome of one claim at one order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimCheck {
    pub id: &'static str,
    pub anchor: &'static str,
    pub expected_family: Family,
    pub expected_value: Option<RadicalSum>,
    pub observed_graph6: Option<String>,
    pub observed_value: Option<RadicalSum>,
    pub status: ClaimStatus,
    pub detail: Option<String>,
}

/// Exact ranking of one enumeration level by one index.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub kind: IndexKind,
    pub direction: Direction,
    /// Best first; each tier holds every graph with exactly that value.
    pub tiers: Vec<Tier>,
    pub claims: Vec<ClaimCheck>,
}

impl ExtremalReport {
    /// Tiers holding more than one graph.
    pub fn tie_sets(&self) -> impl Iterator<Item = &Tier> {
        self.tiers.iter().filter(|t| t.members.len() > 1)
    }

    pub fn graph_count(&self) -> usize {
        self.tiers.iter().map(|t| t.members.len()).sum()
    }

    pub fn failed(&self) -> bool {
        self.claims.iter().any(|c| c.status.is_fail())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Max => "max",
            Direction::Min => "min",
        })
    }
}

/// Ranks every graph of `level` by `kind`, best first in `direction`.
pub fn rank_level(level: &EnumLevel, kind: IndexKind, direction: Direction) -> ExtremalReport {
    let mut scored: Vec<(RadicalSum, &CanonicalKey, &crate::graph::Graph)> = level
        .graphs
        .par_iter()
        .map(|(g, k)| (kind.evaluate(g).exact, k, g))
        .collect();
    scored.sort_by(|a, b| {
        let by_value = match direction {
            Direction::Max => b.0.compare(&a.0),
            Direction::Min => a.0.compare(&b.0),
        };
        by_value.then_with(|| a.1.cmp(b.1))
    });

    let mut tiers: Vec<Tier> = Vec::new();
    for (value, key, g) in scored {
        let member = RankedGraph {
            graph6: to_graph6(g),
            key: key.clone(),
            degree_sequence: g.degree_sequence(),
        };
        match tiers.last_mut() {
            Some(t) if t.value == value => t.members.push(member),
            _ => tiers.push(Tier {
                value,
                members: vec![member],
            }),
        }
    }
    ExtremalReport {
        n: level.order,
        kind,
        direction,
        tiers,
        claims: Vec::new(),
    }
}

/// Ranks all two-trees of order `n`.
pub fn rank_by(
    enumerator: &Enumerator,
    n: usize,
    kind: IndexKind,
    direction: Direction,
) -> Result<ExtremalReport> {
    Ok(rank_level(&enumerator.enumerate(n)?, kind, direction))
}

fn check_claim(report: &ExtremalReport, spec: &ClaimSpec) -> ClaimCheck {
    let n = report.n;
    let mut check = ClaimCheck {
        id: spec.id,
        anchor: spec.anchor,
        expected_family: spec.family,
        expected_value: None,
        observed_graph6: None,
        observed_value: None,
        status: ClaimStatus::Pass,
        detail: None,
    };
    let mut finish = |status: ClaimStatus| {
        check.detail = status.detail().map(str::to_string);
        check.status = status;
    };
    if n < spec.min_n {
        finish(ClaimStatus::Skipped(format!(
            "claim applies from n = {}",
            spec.min_n
        )));
        return check;
    }
    let expected_graph = match spec.family.build(n) {
        Ok(g) => g,
        Err(e) => {
            finish(ClaimStatus::Skipped(e.to_string()));
            return check;
        }
    };
    let expected_value = closed_form(spec.family, spec.kind, n).map(|c| c.value).ok();
    check.expected_value = expected_value.clone();

    let Some(tier) = report.tiers.get(spec.rank - 1) else {
        finish(ClaimStatus::Fail(format!(
            "only {} distinct values at n = {n}; no rank {} tier",
            report.tiers.len(),
            spec.rank
        )));
        return check;
    };
    check.observed_value = Some(tier.value.clone());
    check.observed_graph6 = tier.members.first().map(|m| m.graph6.clone());

    let status = if tier.members.len() != 1 {
        ClaimStatus::Fail(format!(
            "rank {} tier is not unique: {} graphs share {}",
            spec.rank,
            tier.members.len(),
            tier.value
        ))
    } else if tier.members[0].key != canonical_key(&expected_graph) {
        ClaimStatus::Fail(format!(
            "expected {} but observed {} ({}); values {} vs {}",
            spec.family.name(),
            tier.members[0].graph6,
            render_degrees(&tier.members[0].degree_sequence),
            tier.value,
            spec.kind.evaluate(&expected_graph).exact,
        ))
    } else {
        match &expected_value {
            Some(v) if *v != tier.value => ClaimStatus::Fail(format!(
                "{} value {} differs from closed form {}",
                spec.family.name(),
                tier.value,
                v
            )),
            _ => ClaimStatus::Pass,
        }
    };
    finish(status);
    check
}

fn render_degrees(seq: &[usize]) -> String {
    let parts: Vec<String> = seq.iter().map(|d| d.to_string()).collect();
    format!("degrees ({})", parts.join(","))
}

/// Ranks each order in `orders` and checks `claims` against the rankings.
///
/// One report is produced per order and per distinct `(kind, direction)`
/// among the claims. Claim failures are recorded, never raised; the only
/// error is an order beyond the enumeration cap.
pub fn verify_claims(
    enumerator: &Enumerator,
    orders: RangeInclusive<usize>,
    claims: &[ClaimSpec],
) -> Result<Vec<ExtremalReport>> {
    let (lo, hi) = (*orders.start(), *orders.end());
    if lo > hi {
        return Err(Error::Domain(format!("empty order range {lo}..{hi}")));
    }
    let levels = enumerator.levels_up_to(hi)?;
    let mut axes: Vec<(IndexKind, Direction)> = Vec::new();
    for c in claims {
        if !axes.contains(&(c.kind, c.direction)) {
            axes.push((c.kind, c.direction));
        }
    }
    let mut reports = Vec::new();
    for level in levels.iter().filter(|l| orders.contains(&l.order)) {
        for &(kind, direction) in &axes {
            let mut report = rank_level(level, kind, direction);
            report.claims = claims
                .iter()
                .filter(|c| c.kind == kind && c.direction == direction)
                .map(|c| check_claim(&report, c))
                .collect();
            reports.push(report);
        }
    }
    Ok(reports)
}

/// [`verify_claims`] with the four extremal theorems.
pub fn verify_theorems(
    enumerator: &Enumerator,
    orders: RangeInclusive<usize>,
) -> Result<Vec<ExtremalReport>> {
    verify_claims(enumerator, orders, &theorem_claims())
}

/// Per order: whether the unique `SO` maximizer and the unique coindex
/// minimizer are the same graph. `None` when either extreme is tied or the
/// reports for that order are missing.
pub fn shared_extremal_graph(reports: &[ExtremalReport]) -> Vec<(usize, Option<bool>)> {
    let mut orders: Vec<usize> = reports.iter().map(|r| r.n).collect();
    orders.dedup();
    orders
        .into_iter()
        .map(|n| {
            let top = |kind, dir| {
                reports
                    .iter()
                    .find(|r| r.n == n && r.kind == kind && r.direction == dir)
                    .and_then(|r| r.tiers.first())
                    .filter(|t| t.members.len() == 1)
                    .map(|t| t.members[0].key.clone())
            };
            let same = match (
                top(IndexKind::Sombor, Direction::Max),
                top(IndexKind::Coindex, Direction::Min),
            ) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            (n, same)
        })
        .collect()
}

/// Observed extreme of one index at one order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObservedExtreme {
    pub value: RadicalSum,
    pub witnesses: Vec<RankedGraph>,
    /// Whether the linear two-tree of this order is among the witnesses.
    pub linear_two_tree_is_witness: bool,
}

/// Conjectured bound next to the exhaustive extreme.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundComparison {
    pub reading: Option<ConjectureReading>,
    pub conjectured: f64,
    /// Observed minus conjectured.
    pub gap: f64,
    /// Whether the observed extreme satisfies the conjectured inequality.
    pub bound_holds: bool,
    /// Whether the observed extreme meets the bound (|gap| within tolerance).
    pub attained: bool,
}

/// Evidence for the conjectured minimum `SO` and maximum coindex at one order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub graph_count: usize,
    /// 1 for even `n`, 2 for odd `n`: which conjectured extremal graph the
    /// equality case names.
    pub parity_index: u8,
    pub min_so: ObservedExtreme,
    pub min_so_bound: BoundComparison,
    pub max_coindex: ObservedExtreme,
    /// Both readings, corrected first.
    pub max_coindex_bounds: Vec<BoundComparison>,
}

impl ConjectureReport {
    pub fn coindex_bound(&self, reading: ConjectureReading) -> &BoundComparison {
        self.max_coindex_bounds
            .iter()
            .find(|b| b.reading == Some(reading))
            .expect("both readings are always present")
    }
}

/// Absolute tolerance for deciding whether a float gap is zero.
pub const GAP_TOL: f64 = 1e-9;

fn observed(report: &ExtremalReport) -> ObservedExtreme {
    let tier = report.tiers.first().expect("levels are never empty");
    let linear = linear_two_tree(report.n).ok().map(|g| canonical_key(&g));
    ObservedExtreme {
        value: tier.value.clone(),
        witnesses: tier.members.clone(),
        linear_two_tree_is_witness: linear.is_some_and(|k| tier.members.iter().any(|m| m.key == k)),
    }
}

/// Exhaustive minimum `SO` and maximum coindex for each order, set against
/// the conjectured closed forms. Records evidence only; nothing is asserted.
pub fn conjecture_report(
    enumerator: &Enumerator,
    orders: RangeInclusive<usize>,
) -> Result<Vec<ConjectureReport>> {
    let (lo, hi) = (*orders.start(), *orders.end());
    if lo < 5 {
        return Err(Error::FamilyRange {
            family: "conjecture report",
            n: lo,
            min: 5,
        });
    }
    if lo > hi {
        return Err(Error::Domain(format!("empty order range {lo}..{hi}")));
    }
    let levels = enumerator.levels_up_to(hi)?;
    let mut out = Vec::new();
    for level in levels.iter().filter(|l| orders.contains(&l.order)) {
        let n = level.order;
        let min_so = observed(&rank_level(level, IndexKind::Sombor, Direction::Min));
        let max_co = observed(&rank_level(level, IndexKind::Coindex, Direction::Max));

        let so_conj = conjectured_min_so(n)?;
        let so_gap = min_so.value.to_f64() - so_conj;
        let min_so_bound = BoundComparison {
            reading: None,
            conjectured: so_conj,
            gap: so_gap,
            bound_holds: so_gap >= -GAP_TOL,
            attained: so_gap.abs() <= GAP_TOL,
        };
        let max_coindex_bounds = [ConjectureReading::Corrected, ConjectureReading::Literal]
            .into_iter()
            .map(|reading| {
                let conj = conjectured_max_coindex(n, reading)?;
                let gap = max_co.value.to_f64() - conj;
                Ok(BoundComparison {
                    reading: Some(reading),
                    conjectured: conj,
                    gap,
                    bound_holds: gap <= GAP_TOL,
                    attained: gap.abs() <= GAP_TOL,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(ConjectureReport {
            n,
            graph_count: level.count(),
            parity_index: if n % 2 == 0 { 1 } else { 2 },
            min_so,
            min_so_bound,
            max_coindex: max_co,
            max_coindex_bounds,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{l_graph, x_graph};
    use crate::formulas::{so_bar_l_closed, so_bar_x_closed, so_l_closed, so_x_closed};

    fn key_of(g: crate::Result<crate::Graph>) -> CanonicalKey {
        canonical_key(&g.unwrap())
    }

    #[test]
    fn rank_order_five() {
        let e = Enumerator::new();
        let so_max = rank_by(&e, 5, IndexKind::Sombor, Direction::Max).unwrap();
        assert_eq!(so_max.tiers.len(), 2);
        assert_eq!(so_max.tiers[0].members[0].key, key_of(x_graph(5)));
        assert_eq!(so_max.tiers[0].value, so_x_closed(5).unwrap());
        assert_eq!(so_max.tiers[1].members[0].key, key_of(l_graph(5)));

        let co_min = rank_by(&e, 5, IndexKind::Coindex, Direction::Min).unwrap();
        assert_eq!(co_min.tiers[0].value, so_bar_x_closed(5).unwrap());
        assert_eq!(co_min.tiers[1].value, so_bar_l_closed(5).unwrap());

        let so_min = rank_by(&e, 5, IndexKind::Sombor, Direction::Min).unwrap();
        assert_eq!(so_min.tiers[0].value, so_l_closed(5).unwrap());
        assert!((so_min.tiers[0].value.to_f64() - 30.398).abs() < 1e-3);
    }

    #[test]
    fn order_four_skips_second_claims() {
        let reports = verify_theorems(&Enumerator::new(), 4..=4).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert_eq!(r.claims.len(), 2);
            assert!(r.claims[0].status.is_pass(), "{:?}", r.claims[0]);
            assert!(matches!(r.claims[1].status, ClaimStatus::Skipped(_)));
        }
    }

    #[test]
    fn theorems_hold_to_order_eight() {
        let reports = verify_theorems(&Enumerator::new(), 2..=8).unwrap();
        assert!(reports.iter().all(|r| !r.failed()));
        for (n, same) in shared_extremal_graph(&reports) {
            assert_eq!(same, Some(true), "n = {n}");
        }
    }

    #[test]
    fn swapped_witnesses_fail_with_names() {
        let reports = verify_claims(&Enumerator::new(), 5..=6, &swapped_theorem_claims()).unwrap();
        for r in &reports {
            for c in &r.claims {
                assert!(c.status.is_fail(), "{c:?}");
                assert!(c.detail.as_deref().unwrap().contains("expected"));
            }
        }
    }

    #[test]
    fn conjecture_at_five_is_flagged() {
        let reps = conjecture_report(&Enumerator::new(), 5..=6).unwrap();
        let r5 = &reps[0];
        assert_eq!(r5.graph_count, 2);
        assert_eq!(r5.parity_index, 2);
        assert!((r5.min_so.value.to_f64() - 30.398).abs() < 1e-3);
        assert!((r5.min_so_bound.conjectured - 31.913).abs() < 1e-3);
        assert!(r5.min_so_bound.gap < 0.0);
        assert!(!r5.min_so_bound.bound_holds);
        assert!(r5.min_so.linear_two_tree_is_witness);
        assert_eq!(reps[1].parity_index, 1);
        assert!(conjecture_report(&Enumerator::new(), 4..=6).is_err());
    }
}

//! Closed forms for the extremal families and the conjectured bounds.
//!
//! Closed forms are expanded per `n` into exact [`RadicalSum`]s so they can be
//! compared term by term with values computed from graphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::MAX_ORDER;
use crate::indices::IndexKind;
use crate::radical::RadicalSum;

fn check(name: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_ORDER {
        return Err(Error::FamilyRange {
            family: name,
            n,
            min,
        });
    }
    Ok(())
}

fn t(c: usize, k: usize) -> RadicalSum {
    RadicalSum::term(c as u128, k as u64).expect("closed-form radicands are positive")
}

/// `SO(X_n) = √2(n−1) + 2(n−2)√((n−1)²+4)`.
pub fn so_x_closed(n: usize) -> Result<RadicalSum> {
    check("SO(X_n)", n, 2)?;
    Ok(t(n - 1, 2) + t(2 * (n - 2), (n - 1).pow(2) + 4))
}

/// Coindex of `X_n`: `√2(n−2)(n−3)`.
pub fn so_bar_x_closed(n: usize) -> Result<RadicalSum> {
    check("coindex(X_n)", n, 2)?;
    Ok(t((n - 2) * n.saturating_sub(3), 2))
}

/// `SO(L_n) = (n−4)√((n−2)²+4) + (n−3)√((n−1)²+4) + √((n−1)²+(n−2)²)
/// + √13 + √((n−1)²+9) + √((n−2)²+9)`.
pub fn so_l_closed(n: usize) -> Result<RadicalSum> {
    check("SO(L_n)", n, 5)?;
    let (a, b) = (n - 1, n - 2);
    Ok([
        t(n - 4, b * b + 4),
        t(n - 3, a * a + 4),
        t(1, a * a + b * b),
        t(1, 13),
        t(1, a * a + 9),
        t(1, b * b + 9),
    ]
    .into_iter()
    .sum())
}

/// Coindex of `L_n`: `√2(n−3)(n−4) + √((n−2)²+4) + √13(n−4)`.
pub fn so_bar_l_closed(n: usize) -> Result<RadicalSum> {
    check("coindex(L_n)", n, 5)?;
    Ok(t((n - 3) * (n - 4), 2) + t(1, (n - 2).pow(2) + 4) + t(n - 4, 13))
}

/// One entry of the closed-form table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosedForm {
    pub family: Family,
    pub kind: IndexKind,
    pub n: usize,
    pub value: RadicalSum,
}

/// Closed form for `family` (X or L) and `kind` at order `n`.
pub fn closed_form(family: Family, kind: IndexKind, n: usize) -> Result<ClosedForm> {
    let value = match (family, kind) {
        (Family::X, IndexKind::Sombor) => so_x_closed(n)?,
        (Family::X, IndexKind::Coindex) => so_bar_x_closed(n)?,
        (Family::L, IndexKind::Sombor) => so_l_closed(n)?,
        (Family::L, IndexKind::Coindex) => so_bar_l_closed(n)?,
        (other, _) => {
            return Err(Error::Domain(format!(
                "no closed form for family {}",
                other.name()
            )))
        }
    };
    Ok(ClosedForm {
        family,
        kind,
        n,
        value,
    })
}

/// Reading of the conjectured coindex bound.
///
/// The printed coefficient of `n` is `(10−26√2n+4√5)`. The corrected reading
/// drops the stray `n` inside the bracket, giving `(10−26√2+4√5)·n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConjectureReading {
    #[default]
    Corrected,
    Literal,
}

impl FromStr for ConjectureReading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" => Ok(Self::Corrected),
            "literal" => Ok(Self::Literal),
            other => Err(Error::Domain(format!("unknown reading {other:?}"))),
        }
    }
}

impl fmt::Display for ConjectureReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Corrected => "corrected",
            Self::Literal => "literal",
        })
    }
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn sqrt5() -> f64 {
    5f64.sqrt()
}

fn sqrt13() -> f64 {
    13f64.sqrt()
}

/// Conjectured lower bound on `SO` over two-trees of order `n`:
/// `6√2·n + 2√13 + 4√5 + 20 − 33√2`.
pub fn conjectured_min_so(n: usize) -> Result<f64> {
    check("conjectured min SO", n, 5)?;
    let n = n as f64;
    Ok(6.0 * SQRT2 * n + 2.0 * sqrt13() + 4.0 * sqrt5() + 20.0 - 33.0 * SQRT2)
}

/// Conjectured upper bound on the coindex over two-trees of order `n`:
/// `2√2·n² + B·n + 89√2 + 2√13 − 20√5 − 60`, with `B` per `reading`.
pub fn conjectured_max_coindex(n: usize, reading: ConjectureReading) -> Result<f64> {
    check("conjectured max coindex", n, 5)?;
    let n = n as f64;
    let linear = match reading {
        ConjectureReading::Corrected => 10.0 - 26.0 * SQRT2 + 4.0 * sqrt5(),
        ConjectureReading::Literal => 10.0 - 26.0 * SQRT2 * n + 4.0 * sqrt5(),
    };
    Ok(2.0 * SQRT2 * n * n + linear * n + 89.0 * SQRT2 + 2.0 * sqrt13() - 20.0 * sqrt5() - 60.0)
}

//! The three analytic lemmas as numeric functions, and grid sweeps that
//! check their inequality and monotonicity claims point by point.
//!
//! Differences of square roots are evaluated in rationalized form,
//! `√a − √b = (a − b) / (√a + √b)`, which avoids cancellation when the two
//! roots are close.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance for equality claims.
pub const EQ_TOL: f64 = 1e-12;

const SQRT2: f64 = std::f64::consts::SQRT_2;

#[inline]
fn root_diff(a: f64, b: f64) -> f64 {
    (a - b) / (a.sqrt() + b.sqrt())
}

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

/// `√(x²+y²) − √((x−1)²+(y−1)²)` for `x, y ≥ 2`.
pub fn lemma1_f(x: f64, y: f64) -> Result<f64> {
    if x < 2.0 || y < 2.0 {
        return Err(domain(format!("lemma 1 needs x, y >= 2, got ({x}, {y})")));
    }
    Ok(l1(x, y))
}

fn l1(x: f64, y: f64) -> f64 {
    root_diff(x * x + y * y, (x - 1.0).powi(2) + (y - 1.0).powi(2))
}

/// `√(x²+y) − √((x−1)²+y)` for `x ≥ 2, y ≥ 1`.
pub fn lemma2_f(x: f64, y: f64) -> Result<f64> {
    if x < 2.0 || y < 1.0 {
        return Err(domain(format!(
            "lemma 2 f needs x >= 2, y >= 1, got ({x}, {y})"
        )));
    }
    Ok(l2f(x, y))
}

fn l2f(x: f64, y: f64) -> f64 {
    root_diff(x * x + y, (x - 1.0).powi(2) + y)
}

/// `f(x,y) − f(x−1,y)` with `f` from [`lemma2_f`], for `x ≥ 3, y ≥ 1`.
pub fn lemma2_g(x: u32, y: u32) -> Result<f64> {
    if x < 3 || y < 1 {
        return Err(domain(format!(
            "lemma 2 g needs x >= 3, y >= 1, got ({x}, {y})"
        )));
    }
    Ok(l2g(x as f64, y as f64))
}

fn l2g(x: f64, y: f64) -> f64 {
    l2f(x, y) - l2f(x - 1.0, y)
}

/// `√(y²+x²) − √((y−1)²+x²) + √(4+x²)` for `x > 0, y ≥ 3`.
pub fn lemma5_f(x: f64, y: f64) -> Result<f64> {
    if x <= 0.0 || y < 3.0 {
        return Err(domain(format!(
            "lemma 5 needs x > 0, y >= 3, got ({x}, {y})"
        )));
    }
    Ok(l5(x, y))
}

fn l5(x: f64, y: f64) -> f64 {
    root_diff(y * y + x * x, (y - 1.0).powi(2) + x * x) + (4.0 + x * x).sqrt()
}

/// `2f(5,4) + g(5,4)`, the numeric bound used for the second-maximum case.
pub fn second_max_anchor() -> f64 {
    2.0 * l2f(5.0, 4.0) + l2g(5.0, 4.0)
}

/// `√((n−1)²+(n−2)²) − √((n−2)²+(n−3)²)`; at `n = 6` this is `√41 − 5`.
pub fn hub_pair_gap(n: u32) -> f64 {
    let n = n as f64;
    root_diff(
        (n - 1.0).powi(2) + (n - 2.0).powi(2),
        (n - 2.0).powi(2) + (n - 3.0).powi(2),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LemmaId {
    #[serde(rename = "lemma1")]
    Lemma1,
    #[serde(rename = "lemma2")]
    Lemma2,
    #[serde(rename = "lemma5")]
    Lemma5,
}

impl LemmaId {
    pub const ALL: [LemmaId; 3] = [LemmaId::Lemma1, LemmaId::Lemma2, LemmaId::Lemma5];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Lemma1 => "lemma1",
            LemmaId::Lemma2 => "lemma2",
            LemmaId::Lemma5 => "lemma5",
        }
    }

    /// Integer grid used by the standard sweep with upper bound `max`.
    pub fn integer_grid(self, max: u32) -> Grid {
        let max = max as f64;
        match self {
            LemmaId::Lemma1 => Grid::new(2.0, max, 2.0, max, 1.0),
            LemmaId::Lemma2 => Grid::new(2.0, max, 1.0, max, 1.0),
            LemmaId::Lemma5 => Grid::new(1.0, max, 3.0, max, 1.0),
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma1" | "1" => Ok(LemmaId::Lemma1),
            "lemma2" | "2" => Ok(LemmaId::Lemma2),
            "lemma5" | "5" => Ok(LemmaId::Lemma5),
            other => Err(domain(format!("unknown lemma {other:?}"))),
        }
    }
}

/// Rectangular grid `x_min, x_min + step, …, ≤ x_max` (likewise for `y`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub step: f64,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, step: f64) -> Self {
        Self {
            x_min,
            x_max,
            y_min,
            y_max,
            step,
        }
    }

    fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
        let count = ((hi - lo) / step + 1e-9).floor() as i64 + 1;
        (0..count.max(0)).map(|k| lo + k as f64 * step).collect()
    }

    pub fn xs(&self) -> Vec<f64> {
        Self::axis(self.x_min, self.x_max, self.step)
    }

    pub fn ys(&self) -> Vec<f64> {
        Self::axis(self.y_min, self.y_max, self.step)
    }

    pub fn len(&self) -> usize {
        self.xs().len() * self.ys().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Whether the sweep checks the lemma or a deliberately inverted claim.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum SweepMode {
    #[default]
    Standard,
    /// Lemma 1 with the bound flipped to `f > √2`; every grid point should
    /// be reported. Harness self-test only.
    Inverted,
}

/// One failed claim at one grid point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub lemma: LemmaId,
    pub claim: &'static str,
    pub x: f64,
    pub y: f64,
    pub lhs: f64,
    pub rhs: f64,
}

impl Violation {
    pub fn witness(&self) -> String {
        format!("({}, {})", self.x, self.y)
    }
}

/// Checks every claim of `lemma` at every point of `grid`.
///
/// Monotonicity claims compare a point with its successor one `step` along
/// the relevant axis, so they are only checked where the successor is on
/// the grid. The result is empty iff every claim holds, and is ordered by
/// `x`, then `y`, then claim.
pub fn lemma_sweep(lemma: LemmaId, grid: &Grid, mode: SweepMode) -> Result<Vec<Violation>> {
    let xs = grid.xs();
    let ys = grid.ys();
    let step = grid.step;
    let (x_min, y_min) = (grid.x_min, grid.y_min);
    match lemma {
        LemmaId::Lemma1 if x_min < 2.0 || y_min < 2.0 => {
            return Err(domain("lemma 1 grid must satisfy x, y >= 2".into()))
        }
        LemmaId::Lemma2 if x_min < 2.0 || y_min < 1.0 => {
            return Err(domain("lemma 2 grid must satisfy x >= 2, y >= 1".into()))
        }
        LemmaId::Lemma5 if x_min <= 0.0 || y_min < 3.0 => {
            return Err(domain("lemma 5 grid must satisfy x > 0, y >= 3".into()))
        }
        _ => {}
    }
    if mode == SweepMode::Inverted && lemma != LemmaId::Lemma1 {
        return Err(domain(
            "the inverted self-test is defined for lemma 1 only".into(),
        ));
    }
    if step <= 0.0 {
        return Err(domain("grid step must be positive".into()));
    }
    let x_last = *xs.last().unwrap_or(&x_min);
    let y_last = *ys.last().unwrap_or(&y_min);

    let rows: Vec<Vec<Violation>> = xs
        .par_iter()
        .map(|&x| {
            let mut out = Vec::new();
            for &y in &ys {
                let mut fail = |claim, lhs, rhs| {
                    out.push(Violation {
                        lemma,
                        claim,
                        x,
                        y,
                        lhs,
                        rhs,
                    })
                };
                let has_next_x = x + step <= x_last + 1e-9;
                let has_next_y = y + step <= y_last + 1e-9;
                match (lemma, mode) {
                    (LemmaId::Lemma1, SweepMode::Inverted) => {
                        let f = l1(x, y);
                        if f <= SQRT2 + EQ_TOL {
                            fail("f > sqrt2 (inverted control)", f, SQRT2);
                        }
                    }
                    (LemmaId::Lemma1, SweepMode::Standard) => {
                        let f = l1(x, y);
                        if f > SQRT2 + EQ_TOL {
                            fail("f <= sqrt2", f, SQRT2);
                        }
                        let on_diagonal = (x - y).abs() < 1e-9;
                        let equal = (f - SQRT2).abs() <= EQ_TOL;
                        if on_diagonal && !equal {
                            fail("f = sqrt2 when x = y", f, SQRT2);
                        }
                        if !on_diagonal && equal {
                            fail("f < sqrt2 when x != y", f, SQRT2);
                        }
                    }
                    (LemmaId::Lemma2, _) => {
                        let f = l2f(x, y);
                        if has_next_x {
                            let next = l2f(x + step, y);
                            if next <= f {
                                fail("(i) f increasing in x", f, next);
                            }
                        }
                        if has_next_y {
                            let next = l2f(x, y + step);
                            if next >= f {
                                fail("(ii) f decreasing in y", f, next);
                            }
                        }
                        if x >= 3.0 {
                            let g = l2f(x, y) - l2f(x - 1.0, y);
                            if g <= 0.0 {
                                fail("(iii) g > 0", g, 0.0);
                            }
                            if has_next_x {
                                let next = l2f(x + step, y) - l2f(x + step - 1.0, y);
                                if next >= g {
                                    fail("(iii) g decreasing in x", g, next);
                                }
                            }
                        }
                    }
                    (LemmaId::Lemma5, _) => {
                        if has_next_x {
                            let f = l5(x, y);
                            let next = l5(x + step, y);
                            if next <= f {
                                fail("f increasing in x", f, next);
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

//! Arms, legs and hooks, and their `(a, b)` classification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ladder::AbParams;
use crate::partition::{BoxCoord, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HookStats {
    pub corner: BoxCoord,
    pub arm: usize,
    pub leg: usize,
    pub hook: usize,
    /// Northeast-most box of the hook, `(i, j + arm)`.
    pub hand: BoxCoord,
    /// Southwest-most box of the hook, `(i + leg, j)`.
    pub foot: BoxCoord,
}

impl HookStats {
    fn from_parts(corner: BoxCoord, arm: usize, leg: usize) -> Self {
        HookStats {
            corner,
            arm,
            leg,
            hook: arm + leg + 1,
            hand: BoxCoord::new(corner.row, corner.col + arm),
            foot: BoxCoord::new(corner.row + leg, corner.col),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HookClass {
    pub shallow: bool,
    pub steep: bool,
    /// `H = tb` and `leg = ta` for some `t >= 1`.
    pub shape32: bool,
}

pub fn hook_stats(lambda: &Partition, cell: BoxCoord) -> Result<HookStats> {
    if !lambda.contains(cell) {
        return Err(Error::BoxNotInPartition(cell));
    }
    let arm = lambda.row(cell.row) - cell.col;
    let leg = lambda.col(cell.col) - cell.row;
    Ok(HookStats::from_parts(cell, arm, leg))
}

/// Hook statistics of every box, row by row.
pub fn all_hooks(lambda: &Partition) -> Vec<HookStats> {
    let conj = lambda.transpose();
    lambda
        .boxes()
        .map(|c| HookStats::from_parts(c, lambda.row(c.row) - c.col, conj.row(c.col) - c.row))
        .collect()
}

/// Exact-integer classification. Shallow is `(b/a - 1)·leg < arm + 1`,
/// cross-multiplied to `(b - a)·leg < a·(arm + 1)`; steep swaps arm and leg.
pub fn classify_hook(stats: &HookStats, params: AbParams) -> HookClass {
    let (a, b) = (params.a(), params.b());
    let gap = b - a;
    let shallow = gap * stats.leg < a * (stats.arm + 1);
    let steep = gap * stats.arm < a * (stats.leg + 1);
    let shape32 = stats.hook.is_multiple_of(b) && stats.leg == a * (stats.hook / b);
    HookClass {
        shallow,
        steep,
        shape32,
    }
}

/// Boxes whose hook length is divisible by `b`.
pub fn divisible_hooks(lambda: &Partition, b: usize) -> impl Iterator<Item = HookStats> {
    all_hooks(lambda).into_iter().filter(move |h| h.hook % b == 0)
}

/// `s(λ)`: the number of `(a, b)`-steep hooks of `λ` with `b | H`.
pub fn count_steep_divisible(lambda: &Partition, params: AbParams) -> usize {
    divisible_hooks(lambda, params.b())
        .filter(|h| classify_hook(h, params).steep)
        .count()
}

/// Whether `λ` has a hook of the shape `H = tb, leg = ta`.
pub fn has_shape32_hook(lambda: &Partition, params: AbParams) -> bool {
    divisible_hooks(lambda, params.b()).any(|h| classify_hook(&h, params).shape32)
}

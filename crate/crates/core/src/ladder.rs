//! Ladders, column regularization `Cr_{a,b}`, regularization `Reg_{a,b}` and
//! column semi-regularization `Sr_{a,b}`.
//!
//! The ladder through `(x, y)` is the point set `{(x - ta, y + t(b - a))}`
//! restricted to the positive quadrant; the dual ladder uses the step
//! `(-(b - a), a)`. Column regularization slides every box of `λ` to the
//! southern end of its ladder; regularization slides boxes to the northern end
//! of their dual ladders. Ladders are arithmetic progressions of lattice
//! points, so non-coprime `(a, b)` need no special treatment.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{BoxCoord, Partition};

/// A validated parameter pair `1 <= a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AbParams {
    a: usize,
    b: usize,
}

impl AbParams {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || a >= b {
            return Err(Error::InvalidParameters { a, b });
        }
        Ok(AbParams { a, b })
    }

    pub fn a(self) -> usize {
        self.a
    }

    pub fn b(self) -> usize {
        self.b
    }

    fn gap(self) -> usize {
        self.b - self.a
    }

    pub fn is_coprime(self) -> bool {
        gcd(self.a, self.b) == 1
    }
}

impl fmt::Display for AbParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

pub fn gcd(mut x: usize, mut y: usize) -> usize {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// Every positive-quadrant point of the (dual) ladder through `(x, y)`,
/// ordered north to south. The anchor may lie outside the quadrant, as for
/// `ℓ_{0,y}`.
pub fn ladder_through(x: i64, y: i64, params: AbParams, dual: bool) -> Vec<BoxCoord> {
    let (row_step, col_step) = if dual {
        (params.gap() as i64, params.a as i64)
    } else {
        (params.a as i64, params.gap() as i64)
    };
    // Points (x - t·row_step, y + t·col_step) with both coordinates >= 1.
    let t_max = (x - 1).div_euclid(row_step);
    let t_min = -((y - 1).div_euclid(col_step));
    (t_min..=t_max)
        .rev()
        .map(|t| BoxCoord::new((x - t * row_step) as usize, (y + t * col_step) as usize))
        .collect()
}

/// The (dual) ladder through `anchor`, north to south.
pub fn ladder(anchor: BoxCoord, params: AbParams, dual: bool) -> Vec<BoxCoord> {
    ladder_through(anchor.row as i64, anchor.col as i64, params, dual)
}

/// Southern end of the ladder through `cell`; identifies the ladder.
fn ladder_foot(cell: BoxCoord, params: AbParams) -> BoxCoord {
    let s = (cell.col - 1) / params.gap();
    BoxCoord::new(cell.row + s * params.a, cell.col - s * params.gap())
}

/// Northern end of the dual ladder through `cell`; identifies the dual ladder.
fn dual_ladder_head(cell: BoxCoord, params: AbParams) -> BoxCoord {
    let s = (cell.row - 1) / params.gap();
    BoxCoord::new(cell.row - s * params.gap(), cell.col + s * params.a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    /// Rows are left-justified; `lengths[i]` is the length of row `i + 1`.
    Rows,
    /// Columns are top-justified; `lengths[j]` is the length of column `j + 1`.
    Columns,
}

/// A box set whose rows (or columns) are contiguous from the edge, which may
/// fail to be a partition. This is what sliding along ladders produces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BoxComposition {
    pub axis: Axis,
    pub lengths: Vec<usize>,
}

impl BoxComposition {
    pub fn new(axis: Axis, mut lengths: Vec<usize>) -> Self {
        while lengths.last() == Some(&0) {
            lengths.pop();
        }
        BoxComposition { axis, lengths }
    }

    /// Builds the composition from a box set, checking that every line along
    /// `axis` is contiguous from column (row) 1.
    fn from_boxes(axis: Axis, boxes: &BTreeSet<BoxCoord>) -> Result<Self> {
        let mut lengths: Vec<usize> = Vec::new();
        let mut maxima: Vec<usize> = Vec::new();
        for c in boxes {
            let (line, pos) = match axis {
                Axis::Rows => (c.row, c.col),
                Axis::Columns => (c.col, c.row),
            };
            if lengths.len() < line {
                lengths.resize(line, 0);
                maxima.resize(line, 0);
            }
            lengths[line - 1] += 1;
            maxima[line - 1] = maxima[line - 1].max(pos);
        }
        if lengths != maxima {
            return Err(Error::Invariant(format!(
                "slid box set is not justified along {axis:?}: {boxes:?}"
            )));
        }
        Ok(BoxComposition::new(axis, lengths))
    }

    pub fn size(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.lengths.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn as_partition(&self) -> Option<Partition> {
        if !self.is_partition() {
            return None;
        }
        let p = Partition::from_sorted(self.lengths.clone());
        Some(match self.axis {
            Axis::Rows => p,
            Axis::Columns => p.transpose(),
        })
    }

    pub fn transpose(&self) -> BoxComposition {
        let axis = match self.axis {
            Axis::Rows => Axis::Columns,
            Axis::Columns => Axis::Rows,
        };
        BoxComposition {
            axis,
            lengths: self.lengths.clone(),
        }
    }

    pub fn boxes(&self) -> BTreeSet<BoxCoord> {
        let mut out = BTreeSet::new();
        for (k, &len) in self.lengths.iter().enumerate() {
            for m in 1..=len {
                out.insert(match self.axis {
                    Axis::Rows => BoxCoord::new(k + 1, m),
                    Axis::Columns => BoxCoord::new(m, k + 1),
                });
            }
        }
        out
    }

    /// Number of boxes in each row, whatever the axis.
    pub fn row_lengths(&self) -> Vec<usize> {
        match self.axis {
            Axis::Rows => self.lengths.clone(),
            Axis::Columns => {
                let mut rows = vec![0; self.lengths.iter().copied().max().unwrap_or(0)];
                for &len in &self.lengths {
                    for r in rows.iter_mut().take(len) {
                        *r += 1;
                    }
                }
                rows
            }
        }
    }
}

impl From<&Partition> for BoxComposition {
    fn from(p: &Partition) -> Self {
        BoxComposition::new(Axis::Rows, p.parts().to_vec())
    }
}

/// Comma-separated lengths; column compositions carry a `cols:` prefix.
impl fmt::Display for BoxComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.axis == Axis::Columns {
            write!(f, "cols:")?;
        }
        if self.lengths.is_empty() {
            return write!(f, "0");
        }
        let text: Vec<String> = self.lengths.iter().map(usize::to_string).collect();
        write!(f, "{}", text.join(","))
    }
}

/// `λ^{Cr_{a,b}}`: each ladder keeps its box count, packed at its south end.
pub fn colreg(lambda: &Partition, params: AbParams) -> BoxComposition {
    let mut counts: BTreeMap<BoxCoord, usize> = BTreeMap::new();
    for cell in lambda.boxes() {
        *counts.entry(ladder_foot(cell, params)).or_default() += 1;
    }
    let mut slid = BTreeSet::new();
    for (foot, m) in counts {
        for k in 0..m {
            slid.insert(BoxCoord::new(foot.row - k * params.a, foot.col + k * params.gap()));
        }
    }
    BoxComposition::from_boxes(Axis::Rows, &slid).expect("column regularization keeps rows justified")
}

/// `λ^{Cr_{a,b}} ∈ P`.
pub fn is_cr_valid(lambda: &Partition, params: AbParams) -> bool {
    colreg(lambda, params).is_partition()
}

/// First-row criterion for Cr-validity: for every `y ∈ [1, λ_1]`, either
/// `ℓ_{1,y} ⊂ λ`, or some `(i, j) ∈ λ ∩ ℓ_{0,y}` has `(i + 1, j) ∉ λ`.
pub fn is_cr_valid_lemma(lambda: &Partition, params: AbParams) -> bool {
    (1..=lambda.row(1)).all(|y| {
        let full = ladder_through(1, y as i64, params, false)
            .into_iter()
            .all(|c| lambda.contains(c));
        full || ladder_through(0, y as i64, params, false)
            .into_iter()
            .any(|c| lambda.contains(c) && !lambda.contains(BoxCoord::new(c.row + 1, c.col)))
    })
}

/// `λ^{Reg_{a,b}}`, sliding each box to the north end of its dual ladder.
pub fn reg(lambda: &Partition, params: AbParams) -> BoxComposition {
    let mut counts: BTreeMap<BoxCoord, usize> = BTreeMap::new();
    for cell in lambda.boxes() {
        *counts.entry(dual_ladder_head(cell, params)).or_default() += 1;
    }
    let mut slid = BTreeSet::new();
    for (head, m) in counts {
        for k in 0..m {
            slid.insert(BoxCoord::new(head.row + k * params.gap(), head.col - k * params.a));
        }
    }
    BoxComposition::from_boxes(Axis::Columns, &slid).expect("regularization keeps columns justified")
}

/// `λ^{Tr Cr_{a,b} Tr}`, the transpose route to `Reg_{a,b}`.
pub fn reg_via_transpose(lambda: &Partition, params: AbParams) -> BoxComposition {
    colreg(&lambda.transpose(), params).transpose()
}

pub fn is_reg_valid(lambda: &Partition, params: AbParams) -> bool {
    reg(lambda, params).is_partition()
}

/// `λ^{Reg_{a,b}} = λ`.
pub fn is_ab_regular(lambda: &Partition, params: AbParams) -> bool {
    reg(lambda, params).as_partition().as_ref() == Some(lambda)
}

/// `λ^{Sr_{a,b}}`: every first-row box whose ladder is not full moves to the
/// north-most empty position `(i, j)` of its ladder with `(i - 1, j) ∈ λ`,
/// then the first row is dropped.
pub fn semireg(lambda: &Partition, params: AbParams) -> Result<Partition> {
    if !is_cr_valid(lambda, params) {
        return Err(Error::NotCrValid {
            a: params.a,
            b: params.b,
        });
    }
    let mut landed: HashSet<BoxCoord> = HashSet::new();
    // East to west along the first row.
    for y in (1..=lambda.row(1)).rev() {
        let rungs = ladder_through(1, y as i64, params, false);
        if rungs.iter().all(|&c| lambda.contains(c)) {
            continue;
        }
        let target = rungs
            .iter()
            .copied()
            .find(|&c| {
                c.row >= 2 && !lambda.contains(c) && lambda.contains(BoxCoord::new(c.row - 1, c.col))
            })
            .ok_or_else(|| {
                Error::Invariant(format!("no landing position for (1,{y}) in {lambda} under Sr{params}"))
            })?;
        landed.insert(target);
    }

    let mut landed: Vec<BoxCoord> = landed.into_iter().collect();
    landed.sort();
    let mut rows: Vec<usize> = lambda.parts().iter().skip(1).copied().collect();
    for c in &landed {
        if rows.len() < c.row - 1 {
            rows.resize(c.row - 1, 0);
        }
        let row = &mut rows[c.row - 2];
        if *row + 1 != c.col {
            return Err(Error::SrNotAPartition {
                a: params.a,
                b: params.b,
                landing: *c,
            });
        }
        *row += 1;
    }
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invariant(format!("Sr{params} of {lambda} gave rows {rows:?}")));
    }
    Ok(Partition::from_sorted(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn ab(a: usize, b: usize) -> AbParams {
        AbParams::new(a, b).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Vec<BoxCoord> {
        list.iter().map(|&(i, j)| BoxCoord::new(i, j)).collect()
    }

    #[test]
    fn params_validation() {
        assert!(AbParams::new(0, 3).is_err());
        assert!(AbParams::new(3, 3).is_err());
        assert!(AbParams::new(4, 3).is_err());
        assert!(!ab(2, 4).is_coprime());
        assert!(ab(2, 5).is_coprime());
    }

    #[test]
    fn ladder_examples() {
        let p = ab(2, 3);
        assert_eq!(ladder(BoxCoord::new(1, 1), p, false), cells(&[(1, 1)]));
        assert_eq!(ladder(BoxCoord::new(3, 1), p, false), cells(&[(1, 2), (3, 1)]));
        assert_eq!(
            ladder(BoxCoord::new(1, 3), p, false),
            cells(&[(1, 3), (3, 2), (5, 1)])
        );
        assert_eq!(ladder_through(0, 3, p, false), cells(&[(2, 2), (4, 1)]));
        // Dual ladder for a=1, b=3: step (-2, +1).
        assert_eq!(ladder(BoxCoord::new(3, 1), ab(1, 3), true), cells(&[(1, 2), (3, 1)]));
    }

    #[test]
    fn ladder_shares_residue() {
        for (a, b) in [(1, 2), (2, 3), (2, 4), (3, 5), (2, 7)] {
            let p = ab(a, b);
            for x in 1..8 {
                for y in 1..8 {
                    for dual in [false, true] {
                        let l = ladder(BoxCoord::new(x, y), p, dual);
                        assert!(l.contains(&BoxCoord::new(x, y)));
                        let r0 = crate::residue(l[0], b);
                        assert!(l.iter().all(|&c| crate::residue(c, b) == r0));
                    }
                }
            }
        }
    }

    #[test]
    fn colreg_examples() {
        let p = ab(2, 3);
        let valid = colreg(&part![3, 2, 2, 1], p);
        assert_eq!(valid.lengths, vec![2, 2, 2, 1, 1]);
        assert_eq!(valid.as_partition(), Some(part![2, 2, 2, 1, 1]));

        let invalid = colreg(&part![3, 2, 2], p);
        assert_eq!(invalid.lengths, vec![2, 1, 2, 1, 1]);
        assert_eq!(invalid.as_partition(), None);

        assert_eq!(colreg(&part![], p).lengths, Vec::<usize>::new());
    }

    #[test]
    fn validity_examples() {
        let p = ab(2, 3);
        assert!(is_cr_valid(&part![3, 2, 2, 1], p));
        assert!(!is_cr_valid(&part![3, 2, 2], p));
        assert!(is_cr_valid(&part![], p));
        assert!(is_cr_valid_lemma(&part![3, 2, 2, 1], p));
        assert!(!is_cr_valid_lemma(&part![3, 2, 2], p));
        assert!(is_cr_valid_lemma(&part![], p));
    }

    #[test]
    fn reg_examples() {
        assert_eq!(reg(&part![], ab(2, 3)).lengths, Vec::<usize>::new());
        let t = part![3, 2, 2, 1].transpose();
        assert_eq!(reg(&t, ab(2, 3)).as_partition(), Some(part![5, 3]));
        assert_eq!(reg(&part![1, 1, 1], ab(1, 3)).as_partition(), Some(part![2, 1]));
        assert!(!is_ab_regular(&part![1, 1, 1], ab(1, 3)));
        assert!(is_ab_regular(&part![], ab(1, 3)));
        assert!(is_ab_regular(&part![2, 1], ab(1, 3)));
    }

    #[test]
    fn semireg_examples() {
        assert_eq!(
            semireg(&part![13, 10, 9, 7, 5, 2, 2, 1], ab(2, 5)).unwrap(),
            part![10, 10, 7, 6, 2, 2, 1]
        );
        for (a, b) in [(1, 2), (2, 3), (3, 7)] {
            assert_eq!(semireg(&part![1], ab(a, b)).unwrap(), part![]);
        }
        // All first-row ladders of (2,2,1) are full for (1,2): drop row 1.
        assert_eq!(semireg(&part![2, 2, 1], ab(1, 2)).unwrap(), part![2, 1]);
        assert_eq!(
            semireg(&part![3, 2, 2], ab(2, 3)),
            Err(Error::NotCrValid { a: 2, b: 3 })
        );
    }

    #[test]
    fn semireg_can_leave_a_gap() {
        // Cr-valid, but (1,7) slides to (3,4) on a ladder whose Cr image sits
        // at (5,1), so (1,8) lands at (5,2) over an empty (5,1).
        let lambda = part![8, 4, 2, 2];
        let p = ab(2, 5);
        assert_eq!(colreg(&lambda, p).to_string(), "5,4,3,2,2");
        assert_eq!(
            semireg(&lambda, p),
            Err(Error::SrNotAPartition { a: 2, b: 5, landing: BoxCoord::new(5, 2) })
        );
    }

    #[test]
    fn composition_display() {
        assert_eq!(colreg(&part![3, 2, 2], ab(2, 3)).to_string(), "2,1,2,1,1");
        assert_eq!(reg(&part![1, 1, 1], ab(1, 3)).to_string(), "cols:2,1");
    }

    mod props {
        use proptest::prelude::*;

        use super::*;
        use crate::hooks::has_shape32_hook;
        use crate::partition::residue;
        use crate::partition::strategy::{ab_pair, partition};

        proptest! {
            #[test]
            fn ladders_share_a_residue(x in 1usize..30, y in 1usize..30, p in ab_pair(8), dual: bool) {
                let rungs = ladder(BoxCoord::new(x, y), p, dual);
                prop_assert!(rungs.contains(&BoxCoord::new(x, y)));
                let r = residue(rungs[0], p.b());
                prop_assert!(rungs.iter().all(|&c| residue(c, p.b()) == r));
                prop_assert!(rungs.windows(2).all(|w| w[0].row < w[1].row));
            }

            #[test]
            fn validity_lemma_agrees(l in partition(20), p in ab_pair(7)) {
                prop_assert_eq!(is_cr_valid(&l, p), is_cr_valid_lemma(&l, p));
            }

            #[test]
            fn colreg_keeps_ladder_counts(l in partition(20), p in ab_pair(7)) {
                let cr = colreg(&l, p);
                prop_assert_eq!(cr.size(), l.size());
                let reg_once = reg(&l, p);
                prop_assert_eq!(reg_once.size(), l.size());
            }

            #[test]
            fn reg_routes_agree(l in partition(20), p in ab_pair(7)) {
                prop_assert_eq!(reg(&l, p), reg_via_transpose(&l, p));
            }

            #[test]
            fn a_equals_one_is_classical(l in partition(20), b in 2usize..=7) {
                let p = AbParams::new(1, b).unwrap();
                prop_assert!(is_cr_valid(&l, p));
                prop_assert_eq!(is_ab_regular(&l, p), l.is_b_regular(b));
            }

            #[test]
            fn ab_regular_is_b_regular(l in partition(15), p in ab_pair(7)) {
                if is_ab_regular(&l, p) {
                    prop_assert!(l.is_b_regular(p.b()));
                }
            }

            #[test]
            fn cr_recursion_without_shape32_hooks(l in partition(20), p in ab_pair(6)) {
                prop_assume!(is_cr_valid(&l, p) && !has_shape32_hook(&l, p));
                let sr = semireg(&l, p).unwrap();
                let cr = colreg(&l, p).as_partition().unwrap();
                let sr_cr = colreg(&sr, p).as_partition().unwrap();
                prop_assert_eq!(cr.row(1), l.size() - sr.size());
                prop_assert_eq!(cr.rows(2, cr.len()), sr_cr);
            }
        }
    }
}

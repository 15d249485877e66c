//! Maya diagrams, `b`-abaci, `b`-cores, `b`-quotients and `b`-weights.
//!
//! A bead at half-integer position `p + 1/2` is stored by its integer index
//! `p`. The Maya diagram of `λ` has black beads at `(λ^Tr)_k - k` for every
//! `k >= 1`, so the vacuum (empty partition) is black exactly on `p < 0`.
//!
//! Runner `R_r` of the `b`-abacus collects the positions `p` with
//! `p ≡ -1 - r (mod b)`: reading each group `[bm, bm + b)` from east to west
//! gives runners `R_0, …, R_{b-1}` top to bottom. With this labelling the
//! beads of quotient component `λ_k` are exactly the ones on `R_k`.
//!
//! Cores and quotients are each computed twice: on the abacus and directly on
//! the Young diagram (greedy ribbon removal, and the hook/residue description
//! of the quotient). The two routes are checked against each other in tests.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hooks::all_hooks;
use crate::partition::{residue, BoxCoord, Partition};

/// A bead sequence with a marked origin: every position below `floor` is
/// black, and `black` lists the black positions at or above `floor`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MayaDiagram {
    floor: i64,
    black: BTreeSet<i64>,
}

impl MayaDiagram {
    pub fn new(floor: i64, black: BTreeSet<i64>) -> Result<Self> {
        if let Some(&low) = black.iter().next() {
            if low < floor {
                return Err(Error::MalformedDiagram(format!(
                    "listed black bead {low} lies below the floor {floor}"
                )));
            }
        }
        let mut m = MayaDiagram { floor, black };
        m.normalize();
        Ok(m)
    }

    /// The empty partition's diagram: black exactly on negative positions.
    pub fn vacuum() -> Self {
        MayaDiagram {
            floor: 0,
            black: BTreeSet::new(),
        }
    }

    fn normalize(&mut self) {
        while self.black.remove(&self.floor) {
            self.floor += 1;
        }
    }

    pub fn is_black(&self, p: i64) -> bool {
        p < self.floor || self.black.contains(&p)
    }

    /// Black beads at non-negative positions minus white beads at negative ones.
    pub fn charge(&self) -> i64 {
        let black_above = self.black.iter().filter(|&&p| p >= 0).count() as i64 + self.floor.max(0);
        let white_below = if self.floor < 0 {
            (self.floor..0).filter(|p| !self.black.contains(p)).count() as i64
        } else {
            0
        };
        black_above - white_below
    }

    /// Black positions in decreasing order, down to `floor - extra`.
    fn black_descending(&self, extra: usize) -> Vec<i64> {
        let mut out: Vec<i64> = self.black.iter().rev().copied().collect();
        out.extend((1..=extra as i64).map(|d| self.floor - d));
        out
    }

    /// Decodes the bead sequence as a partition, treating the origin as
    /// shifted by `charge`. This is the "proper shifting" of a runner.
    fn shape_with_charge(&self, charge: i64) -> Partition {
        // The k-th black bead from the top sits at column_k - k + charge.
        let listed = self.black.len();
        let extra = (self.floor - charge).unsigned_abs() as usize + 1;
        let mut columns: Vec<usize> = Vec::with_capacity(listed + extra);
        for (k, p) in self.black_descending(extra).into_iter().enumerate() {
            let len = p + (k as i64 + 1) - charge;
            debug_assert!(len >= 0);
            if len <= 0 {
                break;
            }
            columns.push(len as usize);
        }
        Partition::from_sorted(columns).transpose()
    }

    /// The partition this diagram encodes, ignoring the origin marker.
    pub fn shape(&self) -> Partition {
        self.shape_with_charge(self.charge())
    }

    /// Lowest explicitly listed region, as `(floor, black positions)`.
    pub fn beads(&self) -> (i64, &BTreeSet<i64>) {
        (self.floor, &self.black)
    }
}

pub fn to_maya(lambda: &Partition) -> MayaDiagram {
    let conj = lambda.transpose();
    let k = conj.len() as i64;
    let black = conj
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &c)| c as i64 - (i as i64 + 1))
        .collect();
    MayaDiagram::new(-k, black).expect("beads above the floor")
}

/// The partition with this Maya diagram. The origin must sit where a
/// partition's does: zero charge.
pub fn from_maya(m: &MayaDiagram) -> Result<Partition> {
    let charge = m.charge();
    if charge != 0 {
        return Err(Error::MalformedDiagram(format!(
            "charge {charge} at the marked origin; a partition's diagram has charge 0"
        )));
    }
    Ok(m.shape_with_charge(0))
}

/// Runner index of bead position `p` on the `b`-abacus.
pub fn runner_of(p: i64, b: usize) -> usize {
    (-1 - p).rem_euclid(b as i64) as usize
}

/// The `b`-abacus: runner `r` in its own coordinates, where local position
/// `m` is global position `bm + (b - 1 - r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbacusState {
    pub b: usize,
    pub runners: Vec<MayaDiagram>,
}

impl AbacusState {
    pub fn from_maya(m: &MayaDiagram, b: usize) -> Self {
        assert!(b >= 1, "abacus needs at least one runner");
        let bi = b as i64;
        let floor = m.floor.div_euclid(bi);
        // Positions in [floor·b, m.floor) are black but implicit; list them.
        let mut lists: Vec<BTreeSet<i64>> = vec![BTreeSet::new(); b];
        for p in (floor * bi..m.floor).chain(m.black.iter().copied()) {
            lists[runner_of(p, b)].insert(p.div_euclid(bi));
        }
        let runners = lists
            .into_iter()
            .map(|black| MayaDiagram::new(floor, black).expect("runner beads above the floor"))
            .collect();
        AbacusState { b, runners }
    }

    pub fn to_maya(&self) -> MayaDiagram {
        let bi = self.b as i64;
        let floor = self.runners.iter().map(|r| r.floor).min().unwrap_or(0);
        let mut black = BTreeSet::new();
        for (r, runner) in self.runners.iter().enumerate() {
            let offset = bi - 1 - r as i64;
            for m in floor..runner.floor {
                black.insert(bi * m + offset);
            }
            black.extend(runner.black.iter().map(|&m| bi * m + offset));
        }
        MayaDiagram::new(floor * bi, black).expect("abacus beads above the floor")
    }

    pub fn charges(&self) -> Vec<i64> {
        self.runners.iter().map(MayaDiagram::charge).collect()
    }

    /// Every runner with its black beads pushed west.
    pub fn pushed_left(&self) -> AbacusState {
        let runners = self
            .charges()
            .into_iter()
            .map(|c| MayaDiagram {
                floor: c,
                black: BTreeSet::new(),
            })
            .collect();
        AbacusState { b: self.b, runners }
    }
}

fn check_modulus(b: usize) -> Result<()> {
    if b < 2 {
        Err(Error::InvalidModulus(b))
    } else {
        Ok(())
    }
}

/// `Core_b(λ)` on the abacus: push beads west on every runner.
pub fn core_b(lambda: &Partition, b: usize) -> Result<Partition> {
    check_modulus(b)?;
    let abacus = AbacusState::from_maya(&to_maya(lambda), b);
    from_maya(&abacus.pushed_left().to_maya())
}

/// Removes the rim hook of the box `corner`.
fn remove_rim_hook(lambda: &Partition, corner: BoxCoord) -> Partition {
    let leg = lambda.col(corner.col) - corner.row;
    let mut rows = lambda.parts().to_vec();
    let (top, bottom) = (corner.row - 1, corner.row - 1 + leg);
    for r in top..bottom {
        rows[r] = rows[r + 1] - 1;
    }
    rows[bottom] = corner.col - 1;
    Partition::from_sorted(rows)
}

/// `Core_b(λ)` by removing `b`-ribbons until none is left, always taking the
/// ribbon whose hand is in the northern-most row.
pub fn core_by_ribbons(lambda: &Partition, b: usize) -> Result<Partition> {
    check_modulus(b)?;
    let mut current = lambda.clone();
    while let Some(h) = all_hooks(&current).into_iter().find(|h| h.hook == b) {
        current = remove_rim_hook(&current, h.corner);
    }
    Ok(current)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientTuple {
    pub components: Vec<Partition>,
}

impl QuotientTuple {
    pub fn weight(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }
}

impl std::fmt::Display for QuotientTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|p| format!("({p})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `Quot_b(λ)` from the runners of the abacus, each read with its own charge.
pub fn quotient_b(lambda: &Partition, b: usize) -> Result<QuotientTuple> {
    check_modulus(b)?;
    let abacus = AbacusState::from_maya(&to_maya(lambda), b);
    let components = abacus.runners.iter().map(MayaDiagram::shape).collect();
    Ok(QuotientTuple { components })
}

/// `Quot_b(λ)` from the Young diagram: component `k` is the compressed copy of
/// the boxes `A` with `b | H_A`, `res 𝔥_A = k` and `res 𝔣_A = k + 1`.
pub fn quotient_by_hooks(lambda: &Partition, b: usize) -> Result<QuotientTuple> {
    check_modulus(b)?;
    let mut groups: Vec<Vec<BoxCoord>> = vec![Vec::new(); b];
    for h in all_hooks(lambda).into_iter().filter(|h| h.hook % b == 0) {
        let k = residue(h.hand, b);
        if residue(h.foot, b) != (k + 1) % b {
            return Err(Error::Invariant(format!(
                "hook at {} has hand residue {k} and foot residue {}",
                h.corner,
                residue(h.foot, b)
            )));
        }
        groups[k].push(h.corner);
    }
    let components = groups
        .into_iter()
        .map(|cells| compress(&cells))
        .collect::<Result<Vec<_>>>()?;
    Ok(QuotientTuple { components })
}

/// Squeezes out empty rows and columns; the result must be a Young diagram.
fn compress(cells: &[BoxCoord]) -> Result<Partition> {
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.row).collect();
    let cols: BTreeSet<usize> = cells.iter().map(|c| c.col).collect();
    let row_index: Vec<usize> = rows.into_iter().collect();
    let col_index: Vec<usize> = cols.into_iter().collect();
    let mut lengths = vec![0usize; row_index.len()];
    let mut maxima = vec![0usize; row_index.len()];
    for c in cells {
        let r = row_index.binary_search(&c.row).expect("row present");
        let j = col_index.binary_search(&c.col).expect("col present") + 1;
        lengths[r] += 1;
        maxima[r] = maxima[r].max(j);
    }
    if lengths != maxima {
        return Err(Error::Invariant(format!("exploded cells {cells:?} are not a diagram")));
    }
    Partition::new(lengths).map_err(|e| Error::Invariant(format!("exploded cells {cells:?}: {e}")))
}

/// `|λ|_b`, the total size of the `b`-quotient.
pub fn b_weight(lambda: &Partition, b: usize) -> Result<usize> {
    Ok(quotient_b(lambda, b)?.weight())
}

fn is_addable(lambda: &Partition, cell: BoxCoord) -> bool {
    cell.row >= 1
        && cell.col == lambda.row(cell.row) + 1
        && (cell.row == 1 || lambda.row(cell.row - 1) >= cell.col)
}

fn is_removable(lambda: &Partition, cell: BoxCoord) -> bool {
    cell.row >= 1 && cell.col >= 1 && cell.col == lambda.row(cell.row) && lambda.row(cell.row + 1) < cell.col
}

/// Bead positions `(black_from, black_to)` exchanged when `cell` is added
/// (the black bead moves east) or removed (it moves west).
pub fn bead_swap(cell: BoxCoord, add: bool) -> (i64, i64) {
    let c = cell.content();
    if add {
        (-c - 1, -c)
    } else {
        (-c, -c - 1)
    }
}

/// Adds or removes `cell` by swapping the two adjacent beads it corresponds
/// to.
pub fn apply_box_move(m: &MayaDiagram, cell: BoxCoord, add: bool) -> Result<MayaDiagram> {
    let lambda = from_maya(m)?;
    if add && !is_addable(&lambda, cell) {
        return Err(Error::NotAddable(cell));
    }
    if !add && !is_removable(&lambda, cell) {
        return Err(Error::NotRemovable(cell));
    }
    let (from, to) = bead_swap(cell, add);
    debug_assert!(m.is_black(from) && !m.is_black(to));
    let mut floor = m.floor;
    let mut black = m.black.clone();
    let low = from.min(to);
    if low < floor {
        black.extend(low..floor);
        floor = low;
    }
    black.remove(&from);
    black.insert(to);
    MayaDiagram::new(floor, black)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn maya_examples() {
        assert_eq!(to_maya(&part![]), MayaDiagram::vacuum());
        let m = to_maya(&part![4, 2, 2, 1]);
        // Black at half-integers -5/2, -3/2, 3/2, 7/2 and everything below -9/2 (inclusive).
        for p in [-3, -2, 1, 3] {
            assert!(m.is_black(p), "{p}");
        }
        for p in [-4, -1, 0, 2, 4, 5, 6] {
            assert!(!m.is_black(p), "{p}");
        }
        for p in -20..-4 {
            assert!(m.is_black(p));
        }
        assert_eq!(m.charge(), 0);
        assert_eq!(from_maya(&m).unwrap(), part![4, 2, 2, 1]);
    }

    #[test]
    fn malformed_diagrams() {
        assert!(matches!(
            MayaDiagram::new(0, BTreeSet::from([-1])),
            Err(Error::MalformedDiagram(_))
        ));
        let shifted = MayaDiagram::new(1, BTreeSet::new()).unwrap();
        assert!(matches!(from_maya(&shifted), Err(Error::MalformedDiagram(_))));
        assert_eq!(shifted.shape(), part![]);
    }

    #[test]
    fn abacus_of_four_two_two_one() {
        // Only R_0 has a gap behind a bead.
        let ab = AbacusState::from_maya(&to_maya(&part![4, 2, 2, 1]), 4);
        assert_eq!(ab.charges(), vec![0, 0, 1, -1]);
        assert_eq!(ab.runners[0].shape(), part![1]);
        assert!(ab.runners[1..].iter().all(|r| r.shape().is_empty()));
        assert_eq!(ab.to_maya(), to_maya(&part![4, 2, 2, 1]));
    }

    #[test]
    fn core_quotient_examples() {
        let p = part![4, 2, 2, 1];
        assert_eq!(core_b(&p, 4).unwrap(), part![4, 1]);
        assert_eq!(core_by_ribbons(&p, 4).unwrap(), part![4, 1]);
        let q = quotient_b(&p, 4).unwrap();
        assert_eq!(q.components, vec![part![1], part![], part![], part![]]);
        assert_eq!(quotient_by_hooks(&p, 4).unwrap(), q);
        assert_eq!(b_weight(&p, 4).unwrap(), 1);
        assert_eq!(core_b(&part![], 3).unwrap(), part![]);
        // (4,1) has no hook divisible by 4.
        assert_eq!(core_b(&part![4, 1], 4).unwrap(), part![4, 1]);
        assert_eq!(b_weight(&part![4, 1], 4).unwrap(), 0);
        assert_eq!(core_b(&p, 1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn box_moves() {
        let m = to_maya(&part![4, 2, 2, 1]);
        let added = apply_box_move(&m, BoxCoord::new(1, 5), true).unwrap();
        let moved = apply_box_move(&added, BoxCoord::new(3, 2), false).unwrap();
        assert_eq!(moved, to_maya(&part![5, 2, 1, 1]));

        assert_eq!(
            apply_box_move(&MayaDiagram::vacuum(), BoxCoord::new(1, 1), true).unwrap(),
            to_maya(&part![1])
        );
        let back = apply_box_move(&added, BoxCoord::new(1, 5), false).unwrap();
        assert_eq!(back, m);

        assert_eq!(
            apply_box_move(&m, BoxCoord::new(2, 4), true),
            Err(Error::NotAddable(BoxCoord::new(2, 4)))
        );
        assert_eq!(
            apply_box_move(&m, BoxCoord::new(2, 2), false),
            Err(Error::NotRemovable(BoxCoord::new(2, 2)))
        );
    }

    #[test]
    fn box_move_runners_on_4221() {
        // Adding (1,5) (residue 0) moves a black bead from R_0 onto a white
        // bead of R_3; removing (3,2) (residue 3) moves one from R_2 to R_3.
        let (from, to) = bead_swap(BoxCoord::new(1, 5), true);
        assert_eq!((runner_of(from, 4), runner_of(to, 4)), (0, 3));
        let (from, to) = bead_swap(BoxCoord::new(3, 2), false);
        assert_eq!((runner_of(from, 4), runner_of(to, 4)), (2, 3));
    }

    #[test]
    fn fixed_core_bijectivity() {
        // Number of b-tuples of partitions of total size w.
        fn tuples(b: usize, w: usize) -> usize {
            let p: Vec<usize> = (0..=w).map(|n| crate::enumerate_partitions(n).count()).collect();
            let mut ways = vec![0usize; w + 1];
            ways[0] = 1;
            for _ in 0..b {
                let mut next = vec![0usize; w + 1];
                for (i, &x) in ways.iter().enumerate() {
                    for k in 0..=w - i {
                        next[i + k] += x * p[k];
                    }
                }
                ways = next;
            }
            ways[w]
        }
        for b in 2..=4 {
            for core in [part![], part![1], part![2], part![1, 1], part![3, 1, 1]] {
                if core_b(&core, b).unwrap() != core {
                    continue;
                }
                for w in 0..=4 {
                    let n = core.size() + b * w;
                    let count = crate::enumerate_partitions(n)
                        .filter(|l| core_b(l, b).unwrap() == core)
                        .count();
                    assert_eq!(count, tuples(b, w), "core {core}, b {b}, w {w}");
                }
            }
        }
    }

    mod props {
        use proptest::prelude::*;

        use super::*;
        use crate::partition::strategy::partition;

        proptest! {
            #[test]
            fn maya_round_trip(p in partition(20)) {
                let m = to_maya(&p);
                prop_assert_eq!(m.charge(), 0);
                prop_assert_eq!(from_maya(&m).unwrap(), p);
            }

            #[test]
            fn abacus_regroups_to_maya(p in partition(20), b in 2usize..=7) {
                let m = to_maya(&p);
                let ab = AbacusState::from_maya(&m, b);
                prop_assert_eq!(ab.to_maya(), m);
                prop_assert_eq!(ab.charges().iter().sum::<i64>(), 0);
            }

            #[test]
            fn core_and_quotient_routes_agree(p in partition(18), b in 2usize..=7) {
                let core = core_b(&p, b).unwrap();
                prop_assert_eq!(&core, &core_by_ribbons(&p, b).unwrap());
                let q = quotient_b(&p, b).unwrap();
                prop_assert_eq!(&q, &quotient_by_hooks(&p, b).unwrap());
                prop_assert_eq!(p.size(), core.size() + b * q.weight());
                let hooks = all_hooks(&p).iter().filter(|h| h.hook % b == 0).count();
                prop_assert_eq!(b_weight(&p, b).unwrap(), hooks);
                prop_assert_eq!(core_b(&core, b).unwrap(), core);
            }

            #[test]
            fn box_moves_match_partitions(p in partition(20), add: bool, pick in 0usize..64) {
                let m = to_maya(&p);
                let candidates: Vec<BoxCoord> = (1..=p.len() + 1)
                    .map(|i| BoxCoord::new(i, if add { p.row(i) + 1 } else { p.row(i) }))
                    .filter(|&c| if add { is_addable(&p, c) } else { c.col >= 1 && is_removable(&p, c) })
                    .collect();
                prop_assume!(!candidates.is_empty());
                let cell = candidates[pick % candidates.len()];
                let mut rows = p.parts().to_vec();
                if add {
                    if cell.row > rows.len() { rows.push(0); }
                    rows[cell.row - 1] += 1;
                } else {
                    rows[cell.row - 1] -= 1;
                }
                rows.retain(|&r| r > 0);
                let expected = Partition::new(rows).unwrap();
                prop_assert_eq!(apply_box_move(&m, cell, add).unwrap(), to_maya(&expected));
            }
        }
    }
}

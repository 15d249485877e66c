//! Rims, `b`-rims and the Mullineux transpose `X_b = M_b ∘ Tr`.
//!
//! The `b`-rim is read off the rim in pieces of `b` boxes: the first piece
//! starts at the east end of row 1, and each later piece starts at the east
//! end of the row after the one where the previous piece stopped. `I_b`
//! removes the `b`-rim, `J_b` removes the truncated `b`-rim, and iterating
//! `J_b` down to `∅` yields the row sizes of `λ^{X_b}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ladder::AbParams;
use crate::partition::{BoxCoord, Partition};

/// Rim boxes, northeast to southwest: each row contributes columns
/// `max(1, λ_{i+1}) ..= λ_i`, east to west.
pub fn rim(lambda: &Partition) -> Vec<BoxCoord> {
    let mut out = Vec::new();
    for i in 1..=lambda.len() {
        let west = lambda.row(i + 1).max(1);
        for j in (west..=lambda.row(i)).rev() {
            out.push(BoxCoord::new(i, j));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    /// Size is a multiple of `b`.
    B,
    /// Size is not a multiple of `b` (at most one per rim).
    BPrime,
}

/// A maximal run of `b`-rim boxes that are contiguous on the rim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    /// Index of the first box in `brim_boxes`.
    pub start: usize,
    pub len: usize,
    pub kind: SegmentKind,
}

/// Smallest axis-aligned rectangle containing one piece of the `b`-rim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rectangle {
    /// `r^x`, the north-south extent.
    pub height: usize,
    /// `r^y`, the west-east extent.
    pub width: usize,
    pub north_east: BoxCoord,
    pub south_west: BoxCoord,
}

impl Rectangle {
    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn contains(&self, cell: BoxCoord) -> bool {
        (self.north_east.row..=self.south_west.row).contains(&cell.row)
            && (self.south_west.col..=self.north_east.col).contains(&cell.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RimDecomposition {
    pub b: usize,
    pub rim_boxes: Vec<BoxCoord>,
    pub brim_boxes: Vec<BoxCoord>,
    /// Start index in `brim_boxes` of every piece.
    pub piece_starts: Vec<usize>,
    pub segments: Vec<Segment>,
    pub rectangles: Vec<Rectangle>,
}

impl RimDecomposition {
    /// `φ(λ)`, the number of `b`-rim boxes.
    pub fn len(&self) -> usize {
        self.brim_boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.brim_boxes.is_empty()
    }

    pub fn pieces(&self) -> impl Iterator<Item = &[BoxCoord]> + '_ {
        self.piece_starts.iter().enumerate().map(move |(k, &start)| {
            let end = self
                .piece_starts
                .get(k + 1)
                .copied()
                .unwrap_or(self.brim_boxes.len());
            &self.brim_boxes[start..end]
        })
    }

    /// Number of `b`-rim boxes in each row `1..=l(λ)`.
    pub fn row_counts(&self, rows: usize) -> Vec<usize> {
        let mut counts = vec![0; rows];
        for c in &self.brim_boxes {
            counts[c.row - 1] += 1;
        }
        counts
    }
}

fn ensure_regular(lambda: &Partition, b: usize) -> Result<()> {
    if b < 2 {
        return Err(Error::InvalidModulus(b));
    }
    if lambda.is_b_regular(b) {
        Ok(())
    } else {
        Err(Error::NotBRegular { b })
    }
}

pub fn b_rim(lambda: &Partition, b: usize) -> Result<RimDecomposition> {
    ensure_regular(lambda, b)?;
    let rim_boxes = rim(lambda);
    let k = lambda.len();

    // Rim index of the east end of each row.
    let mut row_start = vec![0usize; k + 2];
    let mut idx = 0;
    for i in 1..=k {
        row_start[i] = idx;
        idx += lambda.row(i) - lambda.row(i + 1).max(1) + 1;
    }

    let mut chosen: Vec<usize> = Vec::new();
    let mut piece_starts = Vec::new();
    if k > 0 {
        let mut start = row_start[1];
        loop {
            let end = (start + b).min(rim_boxes.len());
            piece_starts.push(chosen.len());
            chosen.extend(start..end);
            let last_row = rim_boxes[end - 1].row;
            if last_row >= k || end == rim_boxes.len() {
                break;
            }
            start = row_start[last_row + 1];
        }
    }

    let brim_boxes: Vec<BoxCoord> = chosen.iter().map(|&i| rim_boxes[i]).collect();

    let mut segments = Vec::new();
    let mut s = 0;
    while s < chosen.len() {
        let mut e = s + 1;
        while e < chosen.len() && chosen[e] == chosen[e - 1] + 1 {
            e += 1;
        }
        let len = e - s;
        let kind = if len % b == 0 { SegmentKind::B } else { SegmentKind::BPrime };
        segments.push(Segment { start: s, len, kind });
        s = e;
    }

    let mut decomposition = RimDecomposition {
        b,
        rim_boxes,
        brim_boxes,
        piece_starts,
        segments,
        rectangles: Vec::new(),
    };
    decomposition.rectangles = decomposition.pieces().map(bounding_rectangle).collect();
    Ok(decomposition)
}

fn bounding_rectangle(piece: &[BoxCoord]) -> Rectangle {
    let top = piece.iter().map(|c| c.row).min().unwrap_or(0);
    let bottom = piece.iter().map(|c| c.row).max().unwrap_or(0);
    let west = piece.iter().map(|c| c.col).min().unwrap_or(0);
    let east = piece.iter().map(|c| c.col).max().unwrap_or(0);
    Rectangle {
        height: bottom + 1 - top,
        width: east + 1 - west,
        north_east: BoxCoord::new(top, east),
        south_west: BoxCoord::new(bottom, west),
    }
}

fn subtract_rim(lambda: &Partition, decomposition: &RimDecomposition) -> Result<Vec<usize>> {
    let counts = decomposition.row_counts(lambda.len());
    let rows: Vec<usize> = lambda
        .parts()
        .iter()
        .zip(&counts)
        .map(|(&p, &c)| p - c)
        .collect();
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invariant(format!(
            "removing the {}-rim of {lambda} left rows {rows:?}",
            decomposition.b
        )));
    }
    Ok(rows)
}

/// `λ^{I_b}`: `λ` with its `b`-rim removed.
pub fn remove_b_rim(lambda: &Partition, b: usize) -> Result<Partition> {
    let decomposition = b_rim(lambda, b)?;
    Ok(Partition::from_sorted(subtract_rim(lambda, &decomposition)?))
}

/// `λ^{J_b} = (μ_1+1, …, μ_{k-1}+1, μ_k+δ)` where `μ = λ^{I_b}` padded to
/// `k = l(λ)` rows and `δ = 1` iff `b | φ(λ)`.
pub fn j_b(lambda: &Partition, b: usize) -> Result<Partition> {
    ensure_regular(lambda, b)?;
    if lambda.is_empty() {
        return Err(Error::EmptyInput);
    }
    let decomposition = b_rim(lambda, b)?;
    let mut rows = subtract_rim(lambda, &decomposition)?;
    let k = rows.len();
    let delta = usize::from(decomposition.len() % b == 0);
    for r in rows.iter_mut().take(k - 1) {
        *r += 1;
    }
    rows[k - 1] += delta;
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invariant(format!("J_{b} of {lambda} gave rows {rows:?}")));
    }
    Ok(Partition::from_sorted(rows))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MullineuxTrace {
    /// `λ, λ^{J_b}, λ^{J_b²}, …, ∅`.
    pub iterates: Vec<Partition>,
    /// `j_i = |λ^{J_b^{i-1}}| - |λ^{J_b^i}|`.
    pub row_sizes: Vec<usize>,
}

/// `λ^{X_b} = λ^{M_b Tr}` with the `J_b` trace that produced it.
pub fn mullineux_transpose(lambda: &Partition, b: usize) -> Result<(Partition, MullineuxTrace)> {
    ensure_regular(lambda, b)?;
    let mut iterates = vec![lambda.clone()];
    let mut row_sizes = Vec::new();
    let mut current = lambda.clone();
    while !current.is_empty() {
        let next = j_b(&current, b)?;
        let drop = current.size() - next.size();
        if drop == 0 {
            return Err(Error::Invariant(format!("J_{b} did not shrink {current}")));
        }
        row_sizes.push(drop);
        iterates.push(next.clone());
        current = next;
    }
    if row_sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invariant(format!(
            "X_{b} of {lambda} produced increasing rows {row_sizes:?}"
        )));
    }
    let result = Partition::from_sorted(row_sizes.clone());
    Ok((result, MullineuxTrace { iterates, row_sizes }))
}

/// `λ^{M_b Tr} = (|λ| - |λ^{J_b}|) ⊕ λ^{J_b M_b Tr}`, evaluated recursively.
pub fn mullineux_transpose_recursive(lambda: &Partition, b: usize) -> Result<Partition> {
    ensure_regular(lambda, b)?;
    if lambda.is_empty() {
        return Ok(Partition::empty());
    }
    let next = j_b(lambda, b)?;
    let head = Partition::from_sorted(vec![lambda.size() - next.size()]);
    let tail = mullineux_transpose_recursive(&next, b)?;
    head.concat(&tail)
        .map_err(|e| Error::Invariant(format!("M recursion on {lambda}: {e}")))
}

/// The Mullineux map `λ^{M_b} = λ^{X_b Tr}`.
pub fn mullineux(lambda: &Partition, b: usize) -> Result<Partition> {
    Ok(mullineux_transpose(lambda, b)?.0.transpose())
}

/// `ω(λ)` is the last rectangle index with dims `(a, b - a + 1)` (0 if none);
/// `ψ(λ)` is the total height of rectangles `1..=ω`.
pub fn omega_psi(lambda: &Partition, params: AbParams) -> Result<(usize, usize)> {
    let decomposition = b_rim(lambda, params.b())?;
    Ok(omega_psi_of(&decomposition, params))
}

pub fn omega_psi_of(decomposition: &RimDecomposition, params: AbParams) -> (usize, usize) {
    let target = (params.a(), params.b() - params.a() + 1);
    let omega = decomposition
        .rectangles
        .iter()
        .rposition(|r| r.dims() == target)
        .map_or(0, |i| i + 1);
    let psi = decomposition.rectangles[..omega].iter().map(|r| r.height).sum();
    (omega, psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn cells(list: &[(usize, usize)]) -> Vec<BoxCoord> {
        list.iter().map(|&(i, j)| BoxCoord::new(i, j)).collect()
    }

    #[test]
    fn rim_examples() {
        assert_eq!(rim(&part![1]), cells(&[(1, 1)]));
        let mut r = rim(&part![2, 2]);
        r.sort();
        assert_eq!(r, cells(&[(1, 2), (2, 1), (2, 2)]));
        assert_eq!(rim(&part![7, 5, 1, 1]).len(), 10);
        assert!(rim(&part![]).is_empty());
    }

    #[test]
    fn rim_matches_direct_filter() {
        for n in 0..=12 {
            for p in crate::enumerate_partitions(n) {
                let mut direct: Vec<_> = p
                    .boxes()
                    .filter(|c| !p.contains(BoxCoord::new(c.row + 1, c.col + 1)))
                    .collect();
                let mut ours = rim(&p);
                direct.sort();
                ours.sort();
                assert_eq!(ours, direct, "{p}");
            }
        }
    }

    #[test]
    fn five_rim_of_twelve_nine() {
        let lambda = part![12, 9, 9, 7, 5, 2, 2, 1];
        let d = b_rim(&lambda, 5).unwrap();
        assert_eq!(d.len(), 18);
        assert_eq!(
            d.segments,
            vec![
                Segment { start: 0, len: 10, kind: SegmentKind::B },
                Segment { start: 10, len: 8, kind: SegmentKind::BPrime },
            ]
        );
        let dims: Vec<_> = d.rectangles.iter().map(Rectangle::dims).collect();
        assert_eq!(dims, vec![(2, 4), (2, 4), (2, 4), (2, 2)]);
        assert_eq!(d.row_counts(8), vec![4, 1, 3, 2, 4, 1, 2, 1]);
        assert_eq!(remove_b_rim(&lambda, 5).unwrap(), part![8, 8, 6, 5, 1, 1]);
    }

    #[test]
    fn rectangles_of_eight_four_one() {
        let d = b_rim(&part![8, 4, 1], 5).unwrap();
        let dims: Vec<_> = d.rectangles.iter().map(Rectangle::dims).collect();
        assert_eq!(dims, vec![(1, 5), (2, 4)]);
    }

    #[test]
    fn single_box() {
        let d = b_rim(&part![1], 2).unwrap();
        assert_eq!(d.brim_boxes, cells(&[(1, 1)]));
        assert_eq!(d.segments[0].kind, SegmentKind::BPrime);
        assert_eq!(d.rectangles[0].dims(), (1, 1));
        assert_eq!(remove_b_rim(&part![1], 2).unwrap(), part![]);
    }

    #[test]
    fn brim_rejects_irregular() {
        assert_eq!(b_rim(&part![3, 3, 3], 3), Err(Error::NotBRegular { b: 3 }));
        assert_eq!(j_b(&part![1, 1], 2), Err(Error::NotBRegular { b: 2 }));
        assert_eq!(j_b(&part![], 2), Err(Error::EmptyInput));
    }

    #[test]
    fn three_rim_of_7511() {
        let lambda = part![7, 5, 1, 1];
        let d = b_rim(&lambda, 3).unwrap();
        assert_eq!(
            d.brim_boxes,
            cells(&[(1, 7), (1, 6), (1, 5), (2, 5), (2, 4), (2, 3), (3, 1), (4, 1)])
        );
        assert_eq!(remove_b_rim(&lambda, 3).unwrap(), part![4, 2]);
    }

    #[test]
    fn j_examples() {
        assert_eq!(j_b(&part![7, 5, 1, 1], 3).unwrap(), part![5, 3, 1]);
        assert_eq!(j_b(&part![7, 2, 1], 3).unwrap(), part![5, 1, 1]);
        assert_eq!(j_b(&part![1], 2).unwrap(), part![]);
    }

    #[test]
    fn mullineux_examples() {
        assert_eq!(mullineux(&part![], 3).unwrap(), part![]);
        for b in 2..6 {
            assert_eq!(mullineux(&part![1], b).unwrap(), part![1]);
        }
        let (x, trace) = mullineux_transpose(&part![7, 5, 1, 1], 3).unwrap();
        assert_eq!(x.row(1), 5);
        assert_eq!(trace.iterates[1], part![5, 3, 1]);
        assert_eq!(trace.iterates.last(), Some(&part![]));
        assert_eq!(x, mullineux_transpose_recursive(&part![7, 5, 1, 1], 3).unwrap());
    }

    #[test]
    fn omega_psi_examples() {
        let p = AbParams::new(2, 5).unwrap();
        assert_eq!(omega_psi(&part![2, 1, 1], p).unwrap(), (0, 0));
        assert_eq!(omega_psi(&part![8, 4, 1], p).unwrap(), (2, 3));
        assert_eq!(omega_psi(&part![], p).unwrap(), (0, 0));
    }

    mod props {
        use proptest::prelude::*;

        use super::*;
        use crate::partition::strategy::partition;

        fn regular(max_size: usize) -> impl Strategy<Value = (Partition, usize)> {
            (partition(max_size), 2usize..=5).prop_filter("b-regular", |(p, b)| p.is_b_regular(*b))
        }

        proptest! {
            #[test]
            fn rectangle_decomposition_shape((p, b) in regular(20)) {
                let d = b_rim(&p, b).unwrap();
                let pieces: Vec<_> = d.pieces().collect();
                for piece in &pieces[..pieces.len().saturating_sub(1)] {
                    prop_assert_eq!(piece.len(), b);
                }
                for (r, piece) in d.rectangles.iter().zip(&pieces) {
                    if piece.len() == b {
                        prop_assert_eq!(r.height + r.width, b + 1);
                    }
                    prop_assert!(piece.iter().all(|&c| r.contains(c)));
                }
                prop_assert!(d.segments.iter().filter(|s| s.kind == SegmentKind::BPrime).count() <= 1);
                // Rectangles tile the rows and overlap in at most one column.
                let mut next_row = 1;
                for r in &d.rectangles {
                    prop_assert_eq!(r.north_east.row, next_row);
                    next_row = r.south_west.row + 1;
                }
                prop_assert_eq!(next_row, p.len() + 1);
                for w in d.rectangles.windows(2) {
                    prop_assert!(w[1].north_east.col <= w[0].south_west.col + 1);
                }
                prop_assert!(d.row_counts(p.len()).iter().all(|&n| n >= 1));
            }

            #[test]
            fn j_removes_the_truncated_rim((p, b) in regular(20)) {
                prop_assume!(!p.is_empty());
                let i = remove_b_rim(&p, b).unwrap();
                let j = j_b(&p, b).unwrap();
                let phi = p.size() - i.size();
                let delta = usize::from(phi.is_multiple_of(b));
                prop_assert_eq!(j.size(), i.size() + p.len() - 1 + delta);
                prop_assert!(j.size() < p.size());
            }

            #[test]
            fn mullineux_is_an_involution((p, b) in regular(18)) {
                let m = mullineux(&p, b).unwrap();
                prop_assert!(m.is_b_regular(b));
                prop_assert_eq!(m.size(), p.size());
                prop_assert_eq!(mullineux(&m, b).unwrap(), p);
            }

            #[test]
            fn m_recursion_matches_iteration((p, b) in regular(18)) {
                let (direct, trace) = mullineux_transpose(&p, b).unwrap();
                prop_assert_eq!(mullineux_transpose_recursive(&p, b).unwrap(), direct.clone());
                prop_assert_eq!(trace.iterates.last().unwrap(), &Partition::empty());
                prop_assert_eq!(trace.row_sizes.iter().sum::<usize>(), p.size());
                prop_assert_eq!(direct.parts(), &trace.row_sizes[..]);
            }
        }
    }
}

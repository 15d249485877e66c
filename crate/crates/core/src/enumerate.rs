//! Enumeration of `P_n` in reverse-lexicographic order.

use crate::partition::Partition;

/// Iterator over all partitions of `n`, starting at `(n)` and ending at
/// `(1^n)`. For `n = 0` it yields the empty partition once.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn of(n: usize) -> Self {
        let start = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(start),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition::from_sorted(parts.clone());
        self.current = successor(parts);
        Some(out)
    }
}

fn successor(mut parts: Vec<usize>) -> Option<Vec<usize>> {
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let ones = parts.len() - pos - 1;
    let v = parts[pos] - 1;
    parts.truncate(pos);
    parts.push(v);
    let mut rest = ones + 1;
    while rest > 0 {
        let take = rest.min(v);
        parts.push(take);
        rest -= take;
    }
    Some(parts)
}

pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions::of(n)
}

/// All partitions of size `0..=n_max`, grouped by size and in enumeration
/// order within each size.
pub fn partitions_up_to(n_max: usize) -> impl Iterator<Item = Partition> {
    (0..=n_max).flat_map(Partitions::of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    /// p(n) by Euler's pentagonal number recurrence.
    fn euler_partition_count(n: usize) -> Vec<u64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    acc += sign * p[m - g2];
                }
                k += 1;
            }
            p[m] = acc;
        }
        p.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_partitions(0).collect::<Vec<_>>(), vec![part![]]);
        assert_eq!(enumerate_partitions(5).count(), 7);
        assert_eq!(enumerate_partitions(10).count(), 42);
        let four: Vec<_> = enumerate_partitions(4).collect();
        assert_eq!(
            four,
            vec![part![4], part![3, 1], part![2, 2], part![2, 1, 1], part![1, 1, 1, 1]]
        );
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let oracle = euler_partition_count(40);
        for (n, &expected) in oracle.iter().enumerate() {
            assert_eq!(enumerate_partitions(n).count() as u64, expected, "n={n}");
        }
    }

    #[test]
    fn strictly_reverse_lexicographic_and_distinct() {
        for n in 0..=18 {
            let all: Vec<_> = enumerate_partitions(n).collect();
            assert!(all.iter().all(|p| p.size() == n));
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts(), "{} then {}", w[0], w[1]);
            }
        }
    }
}

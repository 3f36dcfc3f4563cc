//! Integer partitions, skew shapes, and the brute-force enumerations that
//! serve as counting oracles for the generating functions in [`crate::hilbert`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::TruncSeries;

/// A weakly decreasing sequence of positive parts. The empty partition is the
/// only partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    fn from_valid(parts: &[usize]) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Self {
            parts: parts.to_vec(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 0-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = (0..self.width())
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts: cols }
    }

    /// Diagram containment: `other_i <= self_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Whether the diagram fits in the `(k, l)`-hook: every row below row `k`
    /// has at most `l` cells.
    pub fn in_hook(&self, k: usize, l: usize) -> bool {
        fits_hook(&self.parts, k, l)
    }
}

fn fits_hook(parts: &[usize], k: usize, l: usize) -> bool {
    // rows are decreasing, so row k+1 is the widest one that matters
    parts.get(k).map_or(true, |&p| p <= l)
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Accepts `3,1,1`, `[3,1,1]`, `[]` and the empty string.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!("{:?} is not a positive integer", tok.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `outer / inner` with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl From<Partition> for SkewShape {
    fn from(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Calls `visit` on every partition of `n` in reverse lexicographic order,
/// `(n)` first and `(1^n)` last, without allocating a value per partition.
pub fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    fn go(rest: usize, max: usize, stack: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if rest == 0 {
            visit(stack);
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            stack.push(part);
            go(rest - part, part, stack, visit);
            stack.pop();
        }
    }
    go(n, n, &mut Vec::with_capacity(n), &mut visit);
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |p| out.push(Partition::from_valid(p)));
    out
}

/// `H_n(k, l)`: the partitions of `n` that fit in the `(k, l)`-hook, in the
/// same order as [`enumerate_partitions`].
pub fn enumerate_hook(n: usize, k: usize, l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |p| {
        if fits_hook(p, k, l) {
            out.push(Partition::from_valid(p));
        }
    });
    out
}

/// Every partition contained in `outer`, depth-first starting from `[]`.
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    fn go(
        outer: &[usize],
        row: usize,
        max: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition::from_valid(stack));
        if row == outer.len() {
            return;
        }
        for part in (1..=max.min(outer[row])).rev() {
            stack.push(part);
            go(outer, row + 1, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    go(outer.parts(), 0, outer.width(), &mut Vec::new(), &mut out);
    out
}

fn count_series(order: usize, mut keep: impl FnMut(&[usize]) -> bool) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|n| {
            let mut count = 0u64;
            for_each_partition(n, |p| count += keep(p) as u64);
            BigInt::from(count)
        })
        .collect();
    TruncSeries::from_coeffs(order, coeffs)
}

/// Coefficient `n` is `|H_n(k, l)|`, by enumeration.
pub fn hook_count_series(k: usize, l: usize, order: usize) -> TruncSeries {
    count_series(order, |p| fits_hook(p, k, l))
}

/// Coefficient `n` counts partitions of `n` with at most `k` rows.
pub fn count_bounded_rows_series(k: usize, order: usize) -> TruncSeries {
    count_series(order, |p| p.len() <= k)
}

/// Coefficient `n` counts partitions of `n` inside a `k x l` box
/// (at most `k` rows, at most `l` columns).
pub fn count_boxed_series(k: usize, l: usize, order: usize) -> TruncSeries {
    count_series(order, |p| {
        p.len() <= k && p.first().map_or(true, |&w| w <= l)
    })
}

/// [`hook_count_series`] for every `k <= max_k`, `l <= max_l` from a single
/// pass over the partitions of `0..=order`. Indexed `[k][l]`.
///
/// A partition lies in the `(k, l)`-hook exactly when `l >= λ_{k+1}`, so each
/// partition contributes to a suffix of every row of the table.
pub fn hook_count_table(max_k: usize, max_l: usize, order: usize) -> Vec<Vec<TruncSeries>> {
    let mut counts = vec![vec![vec![0u64; order + 1]; max_l + 1]; max_k + 1];
    for n in 0..=order {
        for_each_partition(n, |p| {
            for (k, row) in counts.iter_mut().enumerate() {
                let needed = p.get(k).copied().unwrap_or(0);
                for cell in row.iter_mut().skip(needed) {
                    cell[n] += 1;
                }
            }
        });
    }
    counts
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| TruncSeries::from_coeffs(order, c.into_iter().map(BigInt::from).collect()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn s(order: usize, c: &[i64]) -> TruncSeries {
        TruncSeries::from_i64s(order, c)
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::new(vec![]).unwrap(), Partition::empty());
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), part(&[3, 1, 1]));
        assert_eq!("[2, 2]".parse::<Partition>().unwrap(), part(&[2, 2]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("2,-1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn text_and_json() {
        assert_eq!(part(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!(serde_json::to_string(&part(&[3, 1])).unwrap(), "[3,1]");
        assert_eq!(
            serde_json::from_str::<Partition>("[3,1]").unwrap(),
            part(&[3, 1])
        );
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[2, 1]).conjugate(), part(&[2, 1]));
        assert_eq!(part(&[3]).conjugate(), part(&[1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[4, 2, 1]).conjugate(), part(&[3, 2, 1, 1]));
    }

    #[test]
    fn contains_examples() {
        assert!(part(&[2, 1]).contains(&Partition::empty()));
        assert!(!part(&[2, 1]).contains(&part(&[2, 2])));
        assert!(part(&[3, 2]).contains(&part(&[2, 2])));
        assert!(!part(&[3]).contains(&part(&[1, 1])));
    }

    #[test]
    fn in_hook_examples() {
        assert!(part(&[5, 1, 1]).in_hook(1, 1));
        assert!(!part(&[2, 2]).in_hook(1, 1));
        assert!(part(&[4, 3]).in_hook(2, 0));
        assert!(Partition::empty().in_hook(0, 0));
        assert!(!part(&[1]).in_hook(0, 0));
    }

    #[test]
    fn skew_shape() {
        assert!(SkewShape::new(part(&[2, 1]), part(&[2, 2])).is_err());
        let sk = SkewShape::new(part(&[3, 1]), part(&[1])).unwrap();
        assert_eq!(sk.size(), 3);
        assert_eq!(sk.conjugate().to_string(), "[2,1,1]/[1]");
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<_> = enumerate_partitions(4)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(four, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        assert_eq!(enumerate_partitions(6).len(), 11);
        assert_eq!(enumerate_partitions(9), enumerate_partitions(9));
    }

    #[test]
    fn hook_enumeration_examples() {
        assert_eq!(enumerate_hook(2, 1, 1), vec![part(&[2]), part(&[1, 1])]);
        let six = enumerate_hook(6, 2, 1);
        assert_eq!(six.len(), 10);
        assert!(!six.contains(&part(&[2, 2, 2])));
        assert!(enumerate_hook(3, 0, 0).is_empty());
    }

    #[test]
    fn sub_partitions_of_small_shapes() {
        let subs: Vec<_> = sub_partitions(&part(&[2, 1]))
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(subs, ["[]", "[2]", "[2,1]", "[1]", "[1,1]"]);
        assert_eq!(
            sub_partitions(&Partition::empty()),
            vec![Partition::empty()]
        );
        let outer = part(&[3, 2, 2]);
        let subs = sub_partitions(&outer);
        let brute: Vec<_> = (0..=outer.size())
            .flat_map(enumerate_partitions)
            .filter(|m| outer.contains(m))
            .collect();
        assert_eq!(subs.len(), brute.len());
        assert!(brute.iter().all(|m| subs.contains(m)));
    }

    #[test]
    fn count_series_examples() {
        assert_eq!(hook_count_series(1, 1, 5), s(5, &[1, 1, 2, 3, 4, 5]));
        assert_eq!(hook_count_series(2, 1, 6), s(6, &[1, 1, 2, 3, 5, 7, 10]));
        assert_eq!(hook_count_series(0, 0, 3), s(3, &[1, 0, 0, 0]));
        assert_eq!(count_bounded_rows_series(2, 5), s(5, &[1, 1, 2, 2, 3, 3]));
        assert_eq!(count_bounded_rows_series(0, 2), s(2, &[1, 0, 0]));
        assert_eq!(count_bounded_rows_series(1, 4), s(4, &[1, 1, 1, 1, 1]));
        assert_eq!(count_boxed_series(2, 2, 4), s(4, &[1, 1, 2, 1, 1]));
        assert_eq!(count_boxed_series(1, 1, 2), s(2, &[1, 1, 0]));
        assert_eq!(count_boxed_series(3, 0, 2), s(2, &[1, 0, 0]));
    }

    #[test]
    fn table_matches_filter() {
        let table = hook_count_table(3, 4, 14);
        for (k, row) in table.iter().enumerate() {
            for (l, series) in row.iter().enumerate() {
                assert_eq!(series, &hook_count_series(k, l, 14), "k={k} l={l}");
            }
        }
    }
}

//! Young diagrams (partitions) and the strip combinatorics built on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Young diagram, stored by its row lengths `r_1 >= r_2 >= ... > 0`.
///
/// The derived ordering is lexicographic on rows; enumeration lists
/// diagrams in descending order of it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

/// A box `(row, col)` of a diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Box {
    pub row: usize,
    pub col: usize,
}

/// Builds a diagram from a possibly signed row sequence, stripping trailing zeros.
pub fn make_diagram(rows: &[i64]) -> Result<YoungDiagram> {
    if rows.iter().any(|&r| r < 0) {
        return Err(Error::InvalidPartition(rows.to_vec(), "negative entry"));
    }
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(rows.to_vec(), "not weakly decreasing"));
    }
    Ok(YoungDiagram::from_sorted(rows.iter().map(|&r| r as usize).collect()))
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                rows.iter().map(|&r| r as i64).collect(),
                "not weakly decreasing",
            ));
        }
        Ok(Self::from_sorted(rows))
    }

    /// Caller guarantees weakly decreasing input; zeros are dropped.
    pub(crate) fn from_sorted(mut rows: Vec<usize>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        while rows.last() == Some(&0) {
            rows.pop();
        }
        YoungDiagram { rows }
    }

    /// Sorts arbitrary nonnegative parts into a diagram.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row length `r_i` for 0-based `i`; zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Column length `c_j` for 0-based `j`.
    pub fn col(&self, j: usize) -> usize {
        self.rows.iter().take_while(|&&r| r > j).count()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.row(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn columns(&self) -> Vec<usize> {
        (0..self.num_cols()).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        YoungDiagram { rows: self.columns() }
    }

    pub fn contains_box(&self, b: Box) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.row(b.row - 1)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = Box> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |c| Box { row: i + 1, col: c }))
    }

    /// True iff `other` fits inside `self`.
    pub fn contains(&self, other: &YoungDiagram) -> bool {
        other.rows.len() <= self.rows.len()
            && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    pub fn all_rows_even(&self) -> bool {
        self.rows.iter().all(|r| r % 2 == 0)
    }

    pub fn all_columns_even(&self) -> bool {
        self.transpose().all_rows_even()
    }

    /// Whether `self / inner` has at most one box in each column.
    pub fn is_horizontal_strip_over(&self, inner: &YoungDiagram) -> bool {
        self.contains(inner) && (0..self.num_rows()).all(|i| inner.row(i) >= self.row(i + 1))
    }

    /// Whether `self / inner` has at most one box in each row.
    pub fn is_vertical_strip_over(&self, inner: &YoungDiagram) -> bool {
        self.contains(inner) && (0..self.num_rows()).all(|i| self.row(i) <= inner.row(i) + 1)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl<'de> Deserialize<'de> for YoungDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<i64>::deserialize(d)?;
        make_diagram(&rows).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for YoungDiagram {
    type Err = Error;

    /// Parses `[5,3,1]`; the brackets are optional and `[]` is the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner.strip_prefix('[').unwrap_or(inner);
        let inner = inner.strip_suffix(']').unwrap_or(inner).trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let rows = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("malformed partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        make_diagram(&rows)
    }
}

/// Entrywise sum of row sequences, missing rows counted as zero.
pub fn row_union(parts: &[YoungDiagram]) -> YoungDiagram {
    let len = parts.iter().map(|p| p.num_rows()).max().unwrap_or(0);
    let rows = (0..len).map(|i| parts.iter().map(|p| p.row(i)).sum()).collect();
    YoungDiagram::from_sorted(rows)
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<YoungDiagram> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rest == 0 {
            out.push(YoungDiagram { rows: cur.clone() });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: every prefix sum of `a` is at most that of `b`.
pub fn dominance_leq(a: &YoungDiagram, b: &YoungDiagram) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { expected: a.size(), got: b.size() });
    }
    let len = a.num_rows().max(b.num_rows());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.row(i);
        sb += b.row(i);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Diagrams obtained from `shape` by adding `l` boxes, no two in one column.
pub fn horizontal_strip_superdiagrams(shape: &YoungDiagram, l: usize) -> Vec<YoungDiagram> {
    // Row i of the result lies in [r_i, r_{i-1}], with row 0 unbounded.
    fn go(
        shape: &YoungDiagram,
        i: usize,
        rest: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<YoungDiagram>,
    ) {
        let low = shape.row(i);
        if i > shape.num_rows() {
            if rest == 0 {
                out.push(YoungDiagram::from_sorted(cur.clone()));
            }
            return;
        }
        let high = if i == 0 { low + rest } else { shape.row(i - 1).min(low + rest) };
        for len in (low..=high).rev() {
            cur.push(len);
            go(shape, i + 1, rest - (len - low), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, l, &mut Vec::new(), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Diagrams obtained from `shape` by adding `l` boxes, no two in one row.
pub fn vertical_strip_superdiagrams(shape: &YoungDiagram, l: usize) -> Vec<YoungDiagram> {
    let mut out: Vec<_> = horizontal_strip_superdiagrams(&shape.transpose(), l)
        .iter()
        .map(YoungDiagram::transpose)
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Subdiagrams `mu` of `shape` such that `shape / mu` is a horizontal strip.
pub fn horizontal_strip_subdiagrams(shape: &YoungDiagram) -> Vec<YoungDiagram> {
    fn go(shape: &YoungDiagram, i: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if i == shape.num_rows() {
            out.push(YoungDiagram::from_sorted(cur.clone()));
            return;
        }
        for len in (shape.row(i + 1)..=shape.row(i)).rev() {
            cur.push(len);
            go(shape, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, &mut Vec::new(), &mut out);
    out
}

/// Subdiagrams `mu` of `shape` such that `shape / mu` is a vertical strip.
pub fn vertical_strip_subdiagrams(shape: &YoungDiagram) -> Vec<YoungDiagram> {
    let mut out: Vec<_> = horizontal_strip_subdiagrams(&shape.transpose())
        .iter()
        .map(YoungDiagram::transpose)
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Tuples `(iota_1, .., iota_k)` with `|iota_j| = sizes[j].0` such that
/// `sum_j weight_j * rows(iota_j) = rows(target)` row by row, where
/// `weight_j = sizes[j].1`.
///
/// A weight of 2 encodes a diagram that occurs twice in a row union.
pub fn row_union_decompositions(
    target: &YoungDiagram,
    sizes: &[(usize, usize)],
) -> Vec<Vec<YoungDiagram>> {
    fn fits(rem: &[usize], part: &YoungDiagram, w: usize) -> bool {
        part.num_rows() <= rem.len() && part.rows.iter().zip(rem).all(|(&p, &r)| p * w <= r)
    }
    fn go(
        rem: &mut Vec<usize>,
        sizes: &[(usize, usize)],
        cur: &mut Vec<YoungDiagram>,
        out: &mut Vec<Vec<YoungDiagram>>,
    ) {
        let Some((&(size, w), tail)) = sizes.split_first() else {
            if rem.iter().all(|&r| r == 0) {
                out.push(cur.clone());
            }
            return;
        };
        let remaining: usize = rem.iter().sum();
        let needed: usize = sizes.iter().map(|&(s, w)| s * w).sum();
        if remaining != needed {
            return;
        }
        for part in enumerate_partitions(size) {
            if !fits(rem, &part, w) {
                continue;
            }
            for (r, &p) in rem.iter_mut().zip(&part.rows) {
                *r -= p * w;
            }
            // Partial remainders need not be partitions; only the final one must vanish.
            cur.push(part.clone());
            go(rem, tail, cur, out);
            cur.pop();
            for (r, &p) in rem.iter_mut().zip(&part.rows) {
                *r += p * w;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut target.rows.clone(), sizes, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    /// Brute force: all weakly decreasing positive sequences summing to n.
    fn brute_partition_count(n: usize) -> usize {
        fn go(rest: usize, max: usize) -> usize {
            if rest == 0 {
                return 1;
            }
            (1..=max.min(rest)).map(|p| go(rest - p, p)).sum()
        }
        go(n, n)
    }

    #[test]
    fn construction() {
        assert_eq!(make_diagram(&[5, 3, 1]).unwrap().rows(), &[5, 3, 1]);
        let e = make_diagram(&[]).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.size(), 0);
        assert!(make_diagram(&[1, 2]).is_err());
        assert!(make_diagram(&[2, -1]).is_err());
        assert_eq!(make_diagram(&[3, 1, 0, 0]).unwrap(), yd(&[3, 1]));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(yd(&[5, 3, 1]).transpose(), yd(&[3, 2, 2, 1, 1]));
        assert_eq!(YoungDiagram::empty().transpose(), YoungDiagram::empty());
        assert_eq!(yd(&[2, 2]).transpose(), yd(&[2, 2]));
    }

    #[test]
    fn transpose_is_involution() {
        for n in 0..=12 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.transpose().transpose(), p);
                assert_eq!(p.transpose().size(), n);
            }
        }
    }

    #[test]
    fn row_union_examples() {
        assert_eq!(row_union(&[yd(&[5, 3, 1]), yd(&[4, 3, 3, 3])]), yd(&[9, 6, 4, 3]));
        assert_eq!(row_union(&[yd(&[4])]), yd(&[4]));
        assert_eq!(row_union(&[yd(&[1]), yd(&[1])]), yd(&[2]));
    }

    #[test]
    fn partition_counts_match_brute_force() {
        assert_eq!(enumerate_partitions(0), vec![YoungDiagram::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(5).len(), 7);
        for n in 0..=20 {
            assert_eq!(enumerate_partitions(n).len(), brute_partition_count(n), "n={n}");
        }
    }

    #[test]
    fn enumeration_is_reverse_lex() {
        let ps = enumerate_partitions(4);
        let expect: Vec<_> =
            [vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
                .into_iter()
                .map(|r| yd(&r))
                .collect();
        assert_eq!(ps, expect);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&yd(&[2, 2]), &yd(&[3, 1])).unwrap());
        assert!(!dominance_leq(&yd(&[3, 1]), &yd(&[2, 2])).unwrap());
        assert!(dominance_leq(&yd(&[2, 1]), &yd(&[2, 1])).unwrap());
        assert!(dominance_leq(&yd(&[2, 1]), &yd(&[2])).is_err());
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 0..=8 {
            let ps = enumerate_partitions(n);
            let leq = |a: &YoungDiagram, b: &YoungDiagram| dominance_leq(a, b).unwrap();
            for a in &ps {
                assert!(leq(a, a));
                for b in &ps {
                    if a != b {
                        assert!(!(leq(a, b) && leq(b, a)));
                    }
                    for c in &ps {
                        if leq(a, b) && leq(b, c) {
                            assert!(leq(a, c));
                        }
                    }
                }
            }
        }
    }

    /// Brute force: every diagram of the right size containing `shape`, filtered.
    fn brute_strips(shape: &YoungDiagram, l: usize, horizontal: bool) -> Vec<YoungDiagram> {
        let mut out: Vec<_> = enumerate_partitions(shape.size() + l)
            .into_iter()
            .filter(|nu| {
                nu.contains(shape)
                    && nu.boxes().filter(|b| !shape.contains_box(*b)).fold(
                        (true, std::collections::HashSet::new()),
                        |(ok, mut seen), b| {
                            let key = if horizontal { b.col } else { b.row };
                            let fresh = seen.insert(key);
                            (ok && fresh, seen)
                        },
                    ).0
            })
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    #[test]
    fn strip_examples() {
        assert_eq!(horizontal_strip_superdiagrams(&yd(&[1]), 1), vec![yd(&[2]), yd(&[1, 1])]);
        assert_eq!(horizontal_strip_superdiagrams(&yd(&[3, 1]), 0), vec![yd(&[3, 1])]);
        assert_eq!(
            horizontal_strip_superdiagrams(&yd(&[2, 1]), 2),
            vec![yd(&[4, 1]), yd(&[3, 2]), yd(&[3, 1, 1]), yd(&[2, 2, 1])]
        );
        assert_eq!(vertical_strip_superdiagrams(&yd(&[1]), 1), vec![yd(&[2]), yd(&[1, 1])]);
        assert_eq!(vertical_strip_superdiagrams(&yd(&[2, 2]), 0), vec![yd(&[2, 2])]);
        assert_eq!(vertical_strip_superdiagrams(&yd(&[2]), 2), vec![yd(&[3, 1]), yd(&[2, 1, 1])]);
    }

    #[test]
    fn strips_match_brute_force() {
        for n in 0..=6 {
            for shape in enumerate_partitions(n) {
                for l in 0..=4 {
                    assert_eq!(horizontal_strip_superdiagrams(&shape, l), brute_strips(&shape, l, true));
                    assert_eq!(vertical_strip_superdiagrams(&shape, l), brute_strips(&shape, l, false));
                }
            }
        }
    }

    #[test]
    fn strip_subdiagrams_invert_superdiagrams() {
        for n in 0..=7 {
            for shape in enumerate_partitions(n) {
                let subs = horizontal_strip_subdiagrams(&shape);
                for mu in &subs {
                    assert!(horizontal_strip_superdiagrams(mu, n - mu.size()).contains(&shape));
                    assert!(shape.is_horizontal_strip_over(mu));
                }
                let expect = (0..=n)
                    .flat_map(enumerate_partitions)
                    .filter(|mu| shape.is_horizontal_strip_over(mu))
                    .count();
                assert_eq!(subs.len(), expect);
                for mu in vertical_strip_subdiagrams(&shape) {
                    assert!(shape.is_vertical_strip_over(&mu));
                }
            }
        }
    }

    #[test]
    fn row_union_decompositions_cover_unions() {
        let target = yd(&[4, 2, 1]);
        let decs = row_union_decompositions(&target, &[(3, 1), (4, 1)]);
        for d in &decs {
            assert_eq!(row_union(d), target);
        }
        let brute = enumerate_partitions(3)
            .into_iter()
            .flat_map(|a| enumerate_partitions(4).into_iter().map(move |b| (a.clone(), b)))
            .filter(|(a, b)| row_union(&[a.clone(), b.clone()]) == target)
            .count();
        assert_eq!(decs.len(), brute);

        let doubled = row_union_decompositions(&yd(&[2]), &[(0, 1), (1, 2)]);
        assert_eq!(doubled, vec![vec![YoungDiagram::empty(), yd(&[1])]]);
    }

    #[test]
    fn parse_and_json() {
        assert_eq!("[5,3,1]".parse::<YoungDiagram>().unwrap(), yd(&[5, 3, 1]));
        assert_eq!("[]".parse::<YoungDiagram>().unwrap(), YoungDiagram::empty());
        assert!("[1,2]".parse::<YoungDiagram>().is_err());
        assert_eq!(serde_json::to_string(&yd(&[5, 3, 1])).unwrap(), "[5,3,1]");
        let back: YoungDiagram = serde_json::from_str("[2,2]").unwrap();
        assert_eq!(back, yd(&[2, 2]));
    }
}
